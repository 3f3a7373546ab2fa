//! All concepts of the built-in contexts, by NextClosure and by brute force.

use fca_core::builtin::builtin_cases;
use fca_core::lattice::{enumerate_bruteforce, enumerate_lectic};

fn main() -> fca_core::Result<()> {
    for case in builtin_cases() {
        let ctx = &case.context;
        let lectic = enumerate_lectic(ctx);
        assert_eq!(lectic, enumerate_bruteforce(ctx)?);
        println!("{} ({} concepts)", case.name, lectic.len());
        for c in &lectic {
            println!("  {}", ctx.render_pair(&c.extent, &c.intent));
        }
    }
    Ok(())
}
