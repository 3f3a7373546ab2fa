#![allow(dead_code)]

use fca_core::refute::{fuzz_contexts, FuzzConfig};
use fca_core::FormalContext;
use proptest::prelude::*;

pub fn context_from_table(table: &[Vec<bool>]) -> FormalContext {
    let m = table[0].len();
    FormalContext::new(
        (1..=table.len()).map(|i| i.to_string()),
        (1..=m).map(|i| format!("a{i}")),
        table,
    )
    .unwrap()
}

/// Contexts with up to `max_objects` x `max_attributes` cells.
pub fn arb_context(
    max_objects: usize,
    max_attributes: usize,
) -> impl Strategy<Value = FormalContext> {
    (1..=max_objects, 1..=max_attributes).prop_flat_map(|(n, m)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), m), n)
            .prop_map(|table| context_from_table(&table))
    })
}

/// 1002 seeded contexts (|O| ≤ 8, |P| ≤ 6) at densities 0.2, 0.4, 0.6.
pub fn seeded_corpus() -> Vec<FormalContext> {
    let mut out = Vec::new();
    for (i, density) in [0.2, 0.4, 0.6].into_iter().enumerate() {
        let cfg = FuzzConfig {
            seed: 0x5eed_0000 + i as u64,
            iterations: 334,
            density,
            ..FuzzConfig::default()
        };
        out.extend(fuzz_contexts(&cfg).unwrap());
    }
    out
}
