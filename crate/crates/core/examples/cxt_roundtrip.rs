//! Read a Burmeister `.cxt` file, list its concepts, write it back.
//!
//! `cargo run --example cxt_roundtrip -- path/to/file.cxt`

use fca_core::cxt::{parse_document, write_cxt};
use fca_core::lattice::enumerate_lectic;
use fca_core::FormalContext;

const SAMPLE: &str = "B
planets
3
3

mercury
earth
jupiter
small
moon
near
X.X
XXX
.X.
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let doc = parse_document(&text)?;
    println!("title: {:?}", doc.title);
    let ctx = FormalContext::new(doc.objects, doc.attributes, &doc.rows)?;
    for c in &enumerate_lectic(&ctx) {
        println!("{}", ctx.render_pair(&c.extent, &c.intent));
    }
    print!("\n{}", write_cxt(&ctx));
    Ok(())
}
