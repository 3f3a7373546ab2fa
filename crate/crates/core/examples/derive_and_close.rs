//! Derivation operators and closures on a small cross table.

use fca_core::FormalContext;

fn main() -> fca_core::Result<()> {
    let ctx = FormalContext::from_labeled_rows(
        &["frog", "dog", "reed", "maize"],
        &["water", "land", "animal", "plant"],
        &[
            &["water", "land", "animal"],
            &["land", "animal"],
            &["water", "land", "plant"],
            &["land", "plant"],
        ],
    )?;

    let water = ctx.attribute_set(&["water"])?;
    let objs = ctx.derive_down(&water);
    println!("water↓ = {:?}", ctx.object_labels(&objs));
    println!(
        "water↓↑ = {:?}",
        ctx.attribute_labels(&ctx.derive_up(&objs))
    );

    let frog = ctx.object_set(&["frog"])?;
    let c = ctx.close_extent(&frog);
    println!(
        "closure of {{frog}}: {}",
        ctx.render_pair(&c.extent, &c.intent)
    );

    for a in 0..ctx.num_attributes() {
        let c = ctx.attribute_concept(a);
        println!(
            "{:>7}: {}",
            ctx.attributes()[a],
            ctx.render_pair(&c.extent, &c.intent)
        );
    }
    Ok(())
}
