//! Random contexts against the replays, shrinking whatever fails.
//!
//! `cargo run --example fuzz_refutations -- [seed] [iterations]`

use fca_core::refute::{fuzz, render_table, shrink, FuzzConfig};

fn main() -> fca_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let iterations = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let cfg = FuzzConfig {
        seed,
        iterations,
        ..FuzzConfig::default()
    };
    let findings = fuzz(&cfg)?;
    println!(
        "seed {seed}: {} findings in {iterations} contexts",
        findings.len()
    );
    for f in findings.iter().take(5) {
        let (small, report) = shrink(&f.report, &f.context)?;
        println!("\n#{} {}", f.iteration, f.report.summary("original"));
        println!("{}", report.summary("shrunk"));
        print!("{}", render_table(&small));
    }
    Ok(())
}
