//! The three counterexample contexts, transcribed from their cross tables.

use crate::context::FormalContext;

/// A named built-in context together with the pivot attribute its
/// counterexample uses.
#[derive(Debug, Clone)]
pub struct BuiltinCase {
    pub name: &'static str,
    pub context: FormalContext,
    pub pivot: usize,
}

/// Counterexample for algorithm 1: four objects over `c1, c2, b, n`.
pub fn cex1() -> FormalContext {
    FormalContext::from_labeled_rows(
        &["1", "2", "3", "4"],
        &["c1", "c2", "b", "n"],
        &[&["c1"], &["c1", "b"], &["c1", "c2", "b"], &["c2"]],
    )
    .expect("cex1 is well formed")
}

/// Counterexample for algorithm 2: six objects over `c1, c2, c3, b`.
pub fn cex2() -> FormalContext {
    FormalContext::from_labeled_rows(
        &["1", "2", "3", "4", "5", "6"],
        &["c1", "c2", "c3", "b"],
        &[
            &["c2"],
            &["c1", "c2"],
            &["c1", "c2", "b"],
            &["c1", "c3", "b"],
            &["c1", "c3"],
            &["c3"],
        ],
    )
    .expect("cex2 is well formed")
}

/// Counterexample for algorithm 3: five objects over `c1, c2, c3, b`.
pub fn cex3() -> FormalContext {
    FormalContext::from_labeled_rows(
        &["1", "2", "3", "4", "5"],
        &["c1", "c2", "c3", "b"],
        &[
            &["c2"],
            &["c1", "c2", "b"],
            &["c1", "c2", "c3"],
            &["c1", "c3"],
            &["c3"],
        ],
    )
    .expect("cex3 is well formed")
}

/// `cex1`, `cex2`, `cex3`, each with pivot `c1` (attribute index 0).
pub fn builtin_cases() -> Vec<BuiltinCase> {
    vec![
        BuiltinCase {
            name: "cex1",
            context: cex1(),
            pivot: 0,
        },
        BuiltinCase {
            name: "cex2",
            context: cex2(),
            pivot: 0,
        },
        BuiltinCase {
            name: "cex3",
            context: cex3(),
            pivot: 0,
        },
    ]
}

pub fn builtin_case(name: &str) -> Option<BuiltinCase> {
    builtin_cases().into_iter().find(|c| c.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(ctx: &FormalContext, o: &str) -> Vec<String> {
        ctx.attribute_labels(ctx.row(ctx.object_index(o).unwrap()))
    }

    #[test]
    fn rows_match_tables() {
        assert_eq!(row(&cex1(), "3"), ["c1", "c2", "b"]);
        assert_eq!(row(&cex2(), "4"), ["c1", "c3", "b"]);
        assert_eq!(row(&cex3(), "2"), ["c1", "c2", "b"]);
    }

    #[test]
    fn pivots_are_c1() {
        for case in builtin_cases() {
            assert_eq!(case.context.attributes()[case.pivot], "c1");
        }
        assert!(builtin_case("cex4").is_none());
    }
}
