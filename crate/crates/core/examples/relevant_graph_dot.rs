//! Pre-weighted relevant graph of a context, as Graphviz DOT.
//!
//! `cargo run --example relevant_graph_dot | dot -Tsvg > graph.svg`

use fca_core::builtin::cex2;
use fca_core::graph::PreWeightedGraph;
use fca_core::lattice::partition_fst;

fn main() {
    let ctx = cex2();
    let g = PreWeightedGraph::build(&ctx);
    eprintln!("maximal: {}", g.render_attributes(&g.maximal_attrs()));
    eprintln!("minimal: {}", g.render_attributes(&g.minimal_attrs()));
    eprintln!("N+(c1) = {}", g.render_attributes(&g.lower_cone(0)));

    let p = partition_fst(&ctx, 0);
    eprintln!("|F|={} |S|={} |T|={}", p.f.len(), p.s.len(), p.t.len());
    print!("{}", g.to_dot());
}
