//! Step-by-step replays of the three enumeration fragments on the
//! built-in counterexamples, with their verdicts.

use fca_core::builtin::builtin_case;
use fca_core::graph::PreWeightedGraph;
use fca_core::refute::{check, Algorithm};
use fca_core::replay::{replay_alg1, replay_alg2, replay_alg3, RemovalMode};

fn main() -> fca_core::Result<()> {
    let case = builtin_case("cex1").unwrap();
    let g = PreWeightedGraph::build(&case.context);
    println!(
        "== cex1, algorithm 1\n{}",
        replay_alg1(&g, case.pivot)?.trace.to_text()
    );
    let r = check(&case.context, case.pivot, Algorithm::One)?;
    println!("{}\n", r.summary("cex1"));

    let case = builtin_case("cex2").unwrap();
    let g = PreWeightedGraph::build(&case.context);
    println!(
        "== cex2, algorithm 2\n{}",
        replay_alg2(&g, case.pivot)?.trace.to_text()
    );
    let r = check(&case.context, case.pivot, Algorithm::Two)?;
    println!("{}\n", r.summary("cex2"));

    let case = builtin_case("cex3").unwrap();
    let g = PreWeightedGraph::build(&case.context);
    for mode in [RemovalMode::DropAttribute, RemovalMode::KeepAttribute] {
        let out = replay_alg3(&g, case.pivot, mode)?;
        println!("== cex3, algorithm 3, {mode}\n{}", out.trace.to_text());
        println!(
            "{}\n",
            check(&case.context, case.pivot, Algorithm::Three(mode))?.summary("cex3")
        );
    }
    Ok(())
}
