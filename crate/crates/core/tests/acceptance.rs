//! Acceptance suite: one `[PASS]` / `[FAIL]` line per criterion.
//!
//! Run with `cargo test -p fca-core --test acceptance`.

#[path = "common/mod.rs"]
mod common;

use fca_core::builtin::{builtin_cases, cex1, cex2, cex3};
use fca_core::cxt::{parse_cxt, write_cxt};
use fca_core::graph::PreWeightedGraph;
use fca_core::lattice::{
    core_set_a, enumerate_bruteforce, enumerate_lectic, extents_from_preweight_intersections,
    partition_fst,
};
use fca_core::reduction::{
    clarify, classify_pawlak, full_row_via_minimal, is_reducible, reduce, run_pipeline, PawlakClass,
};
use fca_core::refute::{
    check_alg1, check_alg2, check_alg3, fuzz, shrink, FailedCheck, FuzzConfig, Verdict, Witness,
};
use fca_core::replay::{
    replay_alg1, replay_alg2, replay_alg3, LabeledPair, RemovalMode, Termination,
};
use fca_core::{FormalConcept, FormalContext};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair(extent: &[&str], intent: &[&str]) -> LabeledPair {
    LabeledPair {
        extent: extent.iter().map(|s| s.to_string()).collect(),
        intent: intent.iter().map(|s| s.to_string()).collect(),
    }
}

fn strs(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn corpus() -> Vec<FormalContext> {
    let mut all = common::seeded_corpus();
    all.extend(builtin_cases().into_iter().map(|c| c.context));
    all
}

fn ac1() -> Check {
    let ctx = cex1();
    let g = PreWeightedGraph::build(&ctx);
    let out = replay_alg1(&g, 0).map_err(|e| e.to_string())?;
    let emitted: Vec<_> = out.report(&g).emitted;
    ensure(emitted == [pair(&["3"], &["c1", "c2"])], || {
        format!("emitted {emitted:?}")
    })?;
    let t = &out.trace;
    ensure(t.set("H1") == Some(&strs(&["c2"])[..]), || {
        "H1 != {c2}".into()
    })?;
    ensure(t.set("A1") == Some(&strs(&["3"])[..]), || {
        "A1 != {3}".into()
    })?;
    ensure(t.last_step() == Some("step 2"), || {
        format!("stopped at {:?}", t.last_step())
    })?;
    ensure(out.termination == Termination::Normal, || {
        "termination not NORMAL".into()
    })?;

    let r = check_alg1(&ctx, 0).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Unsound, || {
        format!("verdict {}", r.verdict)
    })?;
    ensure(
        r.witness
            == Some(Witness::Emitted {
                pair: pair(&["3"], &["c1", "c2"]),
                failed: FailedCheck::NotAConcept,
            }),
        || format!("witness {:?}", r.witness),
    )?;
    let extent = ctx.object_set(&["3"]).map_err(|e| e.to_string())?;
    let closure = FormalConcept {
        intent: ctx.derive_up(&extent),
        extent,
    };
    let labels = ctx.attribute_labels(&closure.intent);
    ensure(labels == strs(&["c1", "c2", "b"]), || {
        format!("closure intent {labels:?}")
    })?;
    let p = partition_fst(&ctx, 0);
    ensure(!p.f.contains(&closure), || "closure is in F".into())?;
    ensure(g.lower_cone(0).contains(2), || "b not in N+(c1)".into())?;
    Ok("CEX1 alg1 emits ⟨{3},{c1,c2}⟩, H1={c2}, A1={3}, stops at step 2; UNSOUND not-a-concept; closure ⟨{3},{c1,c2,b}⟩ ∉ F".into())
}

fn ac2() -> Check {
    let ctx = cex2();
    let g = PreWeightedGraph::build(&ctx);
    let out = replay_alg2(&g, 0).map_err(|e| e.to_string())?;
    let t = &out.trace;
    for (name, want) in [
        ("N+", &["b"][..]),
        ("Hb1", &["c2", "c3"]),
        ("Ab1", &["3"]),
        ("Bb1", &["c1", "c2", "b"]),
        ("A1d1", &[]),
    ] {
        ensure(t.set(name) == Some(&strs(want)[..]), || {
            format!("{name} = {:?}, expected {want:?}", t.set(name))
        })?;
    }
    ensure(out.termination == Termination::Normal, || {
        "termination not NORMAL".into()
    })?;
    ensure(t.last_step() == Some("step 8"), || {
        format!("stopped at {:?}", t.last_step())
    })?;

    let r = check_alg2(&ctx, 0).map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Incomplete, || {
        format!("verdict {}", r.verdict)
    })?;
    ensure(
        r.witness
            == Some(Witness::Missed {
                concept: pair(&["4"], &["c1", "c3", "b"]),
            }),
        || format!("witness {:?}", r.witness),
    )?;
    Ok("CEX2 alg2 N+={b}, Hb1={c2,c3}, A={3}, B={b,c1,c2}, step-8 meet ∅, NORMAL; INCOMPLETE missing ⟨{4},{c1,c3,b}⟩".into())
}

fn ac3() -> Check {
    let ctx = cex3();
    let g = PreWeightedGraph::build(&ctx);

    let drop = replay_alg3(&g, 0, RemovalMode::DropAttribute).map_err(|e| e.to_string())?;
    let drop_emitted = drop.report(&g).emitted;
    ensure(
        drop_emitted.iter().any(|p| p.intent == strs(&["c2", "c3"])),
        || format!("DROP emitted {drop_emitted:?}"),
    )?;
    let r = check_alg3(&ctx, 0, RemovalMode::DropAttribute).map_err(|e| e.to_string())?;
    ensure(
        r.verdict == Verdict::Unsound
            && r.witness
                == Some(Witness::Emitted {
                    pair: pair(&["3"], &["c2", "c3"]),
                    failed: FailedCheck::NotAConcept,
                }),
        || format!("DROP: {} {:?}", r.verdict, r.witness),
    )?;

    let keep = replay_alg3(&g, 0, RemovalMode::KeepAttribute).map_err(|e| e.to_string())?;
    let keep_emitted = keep.report(&g).emitted;
    ensure(
        keep_emitted.contains(&pair(&["3"], &["c1", "c2", "c3"])),
        || format!("KEEP emitted {keep_emitted:?}"),
    )?;
    let r = check_alg3(&ctx, 0, RemovalMode::KeepAttribute).map_err(|e| e.to_string())?;
    ensure(
        r.verdict == Verdict::Unsound
            && r.witness
                == Some(Witness::Emitted {
                    pair: pair(&["3"], &["c1", "c2", "c3"]),
                    failed: FailedCheck::WrongPartition,
                }),
        || format!("KEEP: {} {:?}", r.verdict, r.witness),
    )?;
    let concept = enumerate_lectic(&ctx)
        .iter()
        .find(|c| ctx.object_labels(&c.extent) == strs(&["3"]))
        .cloned()
        .ok_or("⟨{3},..⟩ is not a concept")?;
    ensure(!partition_fst(&ctx, 0).t.contains(&concept), || {
        "⟨{3},{c1,c2,c3}⟩ ∈ T".into()
    })?;
    Ok("CEX3 alg3 DROP emits intent {c2,c3} (UNSOUND not-a-concept); KEEP emits ⟨{3},{c1,c2,c3}⟩ (UNSOUND wrong-partition)".into())
}

fn ac4(corpus: &[FormalContext]) -> Check {
    let mut mismatches = 0;
    for ctx in corpus {
        let brute = enumerate_bruteforce(ctx).map_err(|e| e.to_string())?;
        if enumerate_lectic(ctx) != brute {
            mismatches += 1;
        }
    }
    ensure(corpus.len() >= 1000, || {
        format!("corpus has only {} contexts", corpus.len())
    })?;
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!(
        "lectic = brute force on {} contexts, 0 mismatches",
        corpus.len()
    ))
}

fn ac5(corpus: &[FormalContext]) -> Check {
    let mut mismatches = 0;
    for ctx in corpus {
        let got = extents_from_preweight_intersections(ctx).map_err(|e| e.to_string())?;
        let want = enumerate_bruteforce(ctx)
            .map_err(|e| e.to_string())?
            .extents();
        if got != want {
            mismatches += 1;
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok(format!(
        "pre-weight intersections = oracle extents on {} contexts",
        corpus.len()
    ))
}

fn ac6(corpus: &[FormalContext]) -> Check {
    let mut pivots = 0;
    for (i, ctx) in corpus.iter().enumerate() {
        let g = PreWeightedGraph::build(ctx);
        let a = core_set_a(ctx);
        for pivot in g.maximal_attrs().iter() {
            pivots += 1;
            let p = partition_fst(ctx, pivot);
            let total = p.f.len() + p.s.len() + p.t.len();
            let mut union: Vec<_> = p.f.iter().chain(&p.s).chain(&p.t).cloned().collect();
            union.sort();
            union.dedup();
            ensure(total == union.len(), || {
                format!("context #{i} pivot {pivot}: parts overlap")
            })?;
            ensure(union == a.as_slice(), || {
                format!("context #{i} pivot {pivot}: union != A")
            })?;
        }
    }
    Ok(format!("F ⊎ S ⊎ T = A for {pivots} maximal pivots"))
}

fn ac7(corpus: &[FormalContext]) -> Check {
    let mut pipelines = 0;
    let mut reductions = 0;
    for (i, ctx) in corpus.iter().enumerate() {
        let m = ctx.num_attributes();
        for o in 0..ctx.num_objects() {
            ensure(full_row_via_minimal(ctx, o) == ctx.row(o).is_full(), || {
                format!("context #{i} object {o}: full row vs minimal attributes")
            })?;
        }
        for a in 0..m {
            if (0..m).any(|b| b != a && ctx.column(a) == ctx.column(b)) {
                ensure(is_reducible(ctx, a), || {
                    format!("context #{i} attribute {a}: duplicate not reducible")
                })?;
            }
        }
        let clarified = clarify(ctx).context;
        ensure(
            !classify_pawlak(&clarified).contains(&PawlakClass::RelativelyNecessary),
            || format!("context #{i}: relatively necessary after clarify"),
        )?;
        if let Ok(p) = run_pipeline(ctx) {
            pipelines += 1;
            ensure(
                classify_pawlak(p.output())
                    .iter()
                    .all(|&c| c == PawlakClass::AbsolutelyNecessary),
                || format!("context #{i}: pipeline output not all core"),
            )?;
        }
        if let Ok(r) = reduce(&clarified) {
            reductions += 1;
            let before = enumerate_lectic(ctx).extents();
            let after = enumerate_lectic(&r.context).extents();
            ensure(before == after, || {
                format!("context #{i}: reduce changed the extents")
            })?;
        }
    }
    Ok(format!(
        "full rows, duplicates and clarified classes on {} contexts, all-core output of {pipelines} pipelines, extents kept by {reductions} reductions",
        corpus.len()
    ))
}

fn ac8(corpus: &[FormalContext]) -> Check {
    for (i, ctx) in corpus.iter().enumerate() {
        let text = write_cxt(ctx);
        let back = parse_cxt(&text).map_err(|e| format!("context #{i}: {e}"))?;
        ensure(back == *ctx && write_cxt(&back) == text, || {
            format!("context #{i}: round trip")
        })?;
    }
    let render = || -> Result<String, String> {
        let cfg = FuzzConfig {
            seed: 42,
            iterations: 300,
            ..FuzzConfig::default()
        };
        let mut out = String::new();
        for f in fuzz(&cfg).map_err(|e| e.to_string())? {
            let (small, report) = shrink(&f.report, &f.context).map_err(|e| e.to_string())?;
            out.push_str(&serde_json::to_string(&f.report).unwrap());
            out.push_str(&write_cxt(&small));
            out.push_str(&serde_json::to_string(&report).unwrap());
        }
        for case in builtin_cases() {
            let g = PreWeightedGraph::build(&case.context);
            for mode in [RemovalMode::DropAttribute, RemovalMode::KeepAttribute] {
                let o = replay_alg3(&g, case.pivot, mode).map_err(|e| e.to_string())?;
                out.push_str(&o.trace.to_text());
            }
            out.push_str(
                &replay_alg1(&g, case.pivot)
                    .map_err(|e| e.to_string())?
                    .trace
                    .to_text(),
            );
        }
        Ok(out)
    };
    let first = render()?;
    let second = render()?;
    ensure(!first.is_empty() && first == second, || {
        "outputs differ between runs".into()
    })?;
    Ok(format!(
        ".cxt round trip on {} contexts; fuzz, shrink and trace output byte-identical across runs",
        corpus.len()
    ))
}

fn main() {
    let corpus = corpus();
    let results: [(&str, Check); 8] = [
        ("AC1", ac1()),
        ("AC2", ac2()),
        ("AC3", ac3()),
        ("AC4", ac4(&corpus)),
        ("AC5", ac5(&corpus)),
        ("AC6", ac6(&corpus)),
        ("AC7", ac7(&corpus)),
        ("AC8", ac8(&corpus)),
    ];
    let mut failed = 0;
    for (id, result) in &results {
        match result {
            Ok(msg) => println!("[PASS] {id} {msg}"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
