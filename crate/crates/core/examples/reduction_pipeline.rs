//! Full rows and columns, clarification and reduction, step by step.

use fca_core::reduction::{classify_pawlak, run_pipeline};
use fca_core::refute::render_table;
use fca_core::FormalContext;

fn main() -> fca_core::Result<()> {
    let ctx = FormalContext::from_labeled_rows(
        &["g1", "g2", "g3", "g4"],
        &["m1", "m2", "m3", "m4", "m5"],
        &[
            &["m1", "m2", "m4"],
            &["m1", "m3", "m5"],
            &["m1", "m2", "m3", "m4", "m5"],
            &["m1", "m2", "m3", "m4"],
        ],
    )?;
    for (a, class) in classify_pawlak(&ctx).iter().enumerate() {
        println!("{}: {class:?}", ctx.attributes()[a]);
    }

    let result = run_pipeline(&ctx)?;
    for (name, stage) in ["input", "no full rows/cols", "clarified", "reduced"]
        .iter()
        .zip(&result.stages)
    {
        println!("\n{name}\n{}", render_table(stage));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&result.report()).unwrap()
    );
    Ok(())
}
