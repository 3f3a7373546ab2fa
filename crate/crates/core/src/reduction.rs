//! Attribute reduction in three phases: drop full rows and full columns,
//! clarify, then remove reducible attributes. Also classifies attributes
//! into the three Pawlak types.

use serde::Serialize;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::graph::PreWeightedGraph;
use crate::subset::{AttributeSet, ObjectSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phase1 {
    pub context: FormalContext,
    pub removed_objects: Vec<String>,
    pub removed_attributes: Vec<String>,
}

/// Removes full-row objects and full-column attributes in one step. Both
/// removal sets are computed on the input.
pub fn phase1_remove_full(ctx: &FormalContext) -> Result<Phase1> {
    let full_rows = ctx.full_rows();
    let full_cols = ctx.full_cols();
    let keep_objects = ObjectSet::full(ctx.num_objects()).difference(&full_rows);
    let keep_attributes = AttributeSet::full(ctx.num_attributes()).difference(&full_cols);
    if keep_objects.is_empty() {
        return Err(Error::Degenerate("object"));
    }
    if keep_attributes.is_empty() {
        return Err(Error::Degenerate("attribute"));
    }
    let context = ctx.restrict(&keep_objects, &keep_attributes)?;
    // an object missing some attribute misses a non-full one, so nothing new becomes full
    debug_assert!(context.full_rows().is_empty() && context.full_cols().is_empty());
    Ok(Phase1 {
        context,
        removed_objects: ctx.object_labels(&full_rows),
        removed_attributes: ctx.attribute_labels(&full_cols),
    })
}

/// One entry per original attribute, in attribute order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMapping {
    pub attribute: String,
    pub representative: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clarification {
    pub context: FormalContext,
    pub map: Vec<ClassMapping>,
}

impl Clarification {
    pub fn removed(&self) -> impl Iterator<Item = &str> {
        self.map
            .iter()
            .filter(|m| m.attribute != m.representative)
            .map(|m| m.attribute.as_str())
    }
}

/// Keeps the lowest-index attribute of every extent-equivalence class.
pub fn clarify(ctx: &FormalContext) -> Clarification {
    clarify_with(ctx, None)
}

/// Like [`clarify`], but `forced` represents its own class.
pub fn clarify_keeping(ctx: &FormalContext, forced: usize) -> Clarification {
    clarify_with(ctx, Some(forced))
}

fn clarify_with(ctx: &FormalContext, forced: Option<usize>) -> Clarification {
    let m = ctx.num_attributes();
    let representative: Vec<usize> = (0..m)
        .map(|a| {
            if let Some(f) = forced {
                if ctx.column(f) == ctx.column(a) {
                    return f;
                }
            }
            (0..m)
                .find(|&b| ctx.column(b) == ctx.column(a))
                .expect("a is in its own class")
        })
        .collect();
    let keep = AttributeSet::from_indices(m, (0..m).filter(|&a| representative[a] == a));
    let context = ctx
        .restrict(&ObjectSet::full(ctx.num_objects()), &keep)
        .expect("clarification keeps every object and at least one attribute");
    let map = (0..m)
        .map(|a| ClassMapping {
            attribute: ctx.attributes()[a].clone(),
            representative: ctx.attributes()[representative[a]].clone(),
        })
        .collect();
    Clarification { context, map }
}

pub fn is_clarified(ctx: &FormalContext) -> bool {
    first_duplicate(ctx).is_none()
}

fn first_duplicate(ctx: &FormalContext) -> Option<(usize, usize)> {
    let m = ctx.num_attributes();
    (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .find(|&(a, b)| ctx.column(a) == ctx.column(b))
}

/// `a` is reducible iff `a↓` equals the intersection of all other
/// attribute extents containing it (the empty intersection being `O`).
pub fn is_reducible(ctx: &FormalContext, a: usize) -> bool {
    assert!(a < ctx.num_attributes(), "attribute {a} outside universe");
    let target = ctx.column(a);
    let mut meet = ObjectSet::full(ctx.num_objects());
    for b in (0..ctx.num_attributes()).filter(|&b| b != a) {
        if target.is_subset(ctx.column(b)) {
            meet.intersect_with(ctx.column(b));
        }
    }
    meet == *target
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub context: FormalContext,
    pub reduced_away: Vec<String>,
}

/// Removes every reducible attribute at once. Requires a clarified input.
pub fn reduce(ctx: &FormalContext) -> Result<Reduction> {
    if let Some((a, b)) = first_duplicate(ctx) {
        return Err(Error::NotClarified(
            ctx.attributes()[a].clone(),
            ctx.attributes()[b].clone(),
        ));
    }
    let m = ctx.num_attributes();
    let reducible = AttributeSet::from_indices(m, (0..m).filter(|&a| is_reducible(ctx, a)));
    let keep = AttributeSet::full(m).difference(&reducible);
    if keep.is_empty() {
        return Err(Error::Degenerate("attribute"));
    }
    Ok(Reduction {
        context: ctx.restrict(&ObjectSet::full(ctx.num_objects()), &keep)?,
        reduced_away: ctx.attribute_labels(&reducible),
    })
}

/// The four stage contexts and what each phase removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineResult {
    pub stages: [FormalContext; 4],
    pub removed_full_rows: Vec<String>,
    pub removed_full_cols: Vec<String>,
    pub clarification_map: Vec<ClassMapping>,
    pub reduced_away: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageDims {
    pub objects: usize,
    pub attributes: usize,
}

/// JSON shape of a [`PipelineResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub stages: Vec<StageDims>,
    pub removed_full_rows: Vec<String>,
    pub removed_full_cols: Vec<String>,
    pub clarification_map: Vec<ClassMapping>,
    pub clarified_away: Vec<String>,
    pub reduced_away: Vec<String>,
    pub remaining_attributes: Vec<String>,
}

impl PipelineResult {
    pub fn input(&self) -> &FormalContext {
        &self.stages[0]
    }

    pub fn output(&self) -> &FormalContext {
        &self.stages[3]
    }

    pub fn report(&self) -> PipelineReport {
        PipelineReport {
            stages: self
                .stages
                .iter()
                .map(|c| StageDims {
                    objects: c.num_objects(),
                    attributes: c.num_attributes(),
                })
                .collect(),
            removed_full_rows: self.removed_full_rows.clone(),
            removed_full_cols: self.removed_full_cols.clone(),
            clarification_map: self.clarification_map.clone(),
            clarified_away: self
                .clarification_map
                .iter()
                .filter(|m| m.attribute != m.representative)
                .map(|m| m.attribute.clone())
                .collect(),
            reduced_away: self.reduced_away.clone(),
            remaining_attributes: self.output().attributes().to_vec(),
        }
    }
}

pub fn run_pipeline(ctx: &FormalContext) -> Result<PipelineResult> {
    let p1 = phase1_remove_full(ctx)?;
    let p2 = clarify(&p1.context);
    let p3 = reduce(&p2.context)?;
    Ok(PipelineResult {
        stages: [ctx.clone(), p1.context, p2.context, p3.context],
        removed_full_rows: p1.removed_objects,
        removed_full_cols: p1.removed_attributes,
        clarification_map: p2.map,
        reduced_away: p3.reduced_away,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PawlakClass {
    /// Irreducible (core) attribute.
    AbsolutelyNecessary,
    /// Reducible, but irreducible once its duplicates are gone.
    RelativelyNecessary,
    AbsolutelyUnnecessary,
}

/// Class of every attribute, indexed by attribute.
pub fn classify_pawlak(ctx: &FormalContext) -> Vec<PawlakClass> {
    (0..ctx.num_attributes())
        .map(|a| {
            if !is_reducible(ctx, a) {
                return PawlakClass::AbsolutelyNecessary;
            }
            let clarified = clarify_keeping(ctx, a).context;
            let a_there = clarified
                .attribute_index(&ctx.attributes()[a])
                .expect("forced representative survives clarification");
            if is_reducible(&clarified, a_there) {
                PawlakClass::AbsolutelyUnnecessary
            } else {
                PawlakClass::RelativelyNecessary
            }
        })
        .collect()
}

/// Full-row test that only looks at the ⊑-minimal attributes.
pub fn full_row_via_minimal(ctx: &FormalContext, o: usize) -> bool {
    assert!(o < ctx.num_objects(), "object {o} outside universe");
    PreWeightedGraph::build(ctx)
        .minimal_attrs()
        .iter()
        .all(|a| ctx.incident(o, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{cex1, cex2};
    use crate::lattice::enumerate_bruteforce;

    fn with_extra_row(ctx: &FormalContext, label: &str, row: AttributeSet) -> FormalContext {
        let mut objects = ctx.objects().to_vec();
        objects.push(label.into());
        let mut rows: Vec<_> = (0..ctx.num_objects()).map(|o| ctx.row(o).clone()).collect();
        rows.push(row);
        FormalContext::from_rows(objects, ctx.attributes().to_vec(), rows).unwrap()
    }

    fn with_extra_column(ctx: &FormalContext, label: &str, copy_of: usize) -> FormalContext {
        let m = ctx.num_attributes();
        let mut attributes = ctx.attributes().to_vec();
        attributes.push(label.into());
        let rows = (0..ctx.num_objects())
            .map(|o| {
                let mut r = AttributeSet::from_indices(m + 1, ctx.row(o).iter());
                if ctx.incident(o, copy_of) {
                    r.insert(m);
                }
                r
            })
            .collect();
        FormalContext::from_rows(ctx.objects().to_vec(), attributes, rows).unwrap()
    }

    /// a↓={2}, b↓={2,3}, c↓={1,2}
    fn meet_context() -> FormalContext {
        FormalContext::from_labeled_rows(
            &["1", "2", "3"],
            &["a", "b", "c"],
            &[&["c"], &["a", "b", "c"], &["b"]],
        )
        .unwrap()
    }

    #[test]
    fn phase1_examples() {
        let c = cex1();
        let p = phase1_remove_full(&c).unwrap();
        assert_eq!(p.context, c);
        assert!(p.removed_objects.is_empty() && p.removed_attributes.is_empty());

        let full =
            FormalContext::new(["g", "h"], ["m", "n"], &[vec![true; 2], vec![true; 2]]).unwrap();
        assert_eq!(phase1_remove_full(&full), Err(Error::Degenerate("object")));

        let extended = with_extra_row(&c, "5", AttributeSet::full(4));
        let p = phase1_remove_full(&extended).unwrap();
        assert_eq!(p.removed_objects, ["5"]);
        assert!(p.removed_attributes.is_empty());
        assert_eq!(p.context, c);
    }

    #[test]
    fn clarify_examples() {
        let c = cex2();
        let cl = clarify(&c);
        assert_eq!(cl.context, c);
        assert!(cl.map.iter().all(|m| m.attribute == m.representative));
        assert_eq!(clarify(&cl.context), cl);

        let dup = FormalContext::new(
            ["g", "h"],
            ["a", "b"],
            &[vec![true, true], vec![false, false]],
        )
        .unwrap();
        let cl = clarify(&dup);
        assert_eq!(cl.context.attributes(), ["a"]);
        assert_eq!(cl.map[1].representative, "a");
        assert_eq!(cl.removed().collect::<Vec<_>>(), ["b"]);

        let kept = clarify_keeping(&dup, 1);
        assert_eq!(kept.context.attributes(), ["b"]);
    }

    #[test]
    fn reducible_examples() {
        let c = cex1();
        for a in 0..4 {
            assert!(!is_reducible(&c, a), "{}", c.attributes()[a]);
        }
        let m = meet_context();
        assert!(is_reducible(&m, 0));
        assert!(!is_reducible(&m, 1));
        assert!(!is_reducible(&m, 2));
    }

    #[test]
    fn reducible_matches_existential_definition() {
        // brute force over Z ⊆ P∖{a}
        let m = meet_context();
        for a in 0..3 {
            let exists = (0u32..8).filter(|z| z & (1 << a) == 0).any(|z| {
                let zs = AttributeSet::from_indices(3, (0..3).filter(|i| z & (1 << i) != 0));
                m.derive_down(&zs) == *m.column(a)
            });
            assert_eq!(is_reducible(&m, a), exists);
        }
    }

    #[test]
    fn reduce_examples() {
        let c = cex1();
        let r = reduce(&c).unwrap();
        assert_eq!(r.context, c);
        assert!(r.reduced_away.is_empty());

        let m = meet_context();
        let r = reduce(&m).unwrap();
        assert_eq!(r.reduced_away, ["a"]);
        assert_eq!(r.context.attributes(), ["b", "c"]);
        assert_eq!(reduce(&r.context).unwrap().context, r.context);
        assert_eq!(
            enumerate_bruteforce(&m).unwrap().extents(),
            enumerate_bruteforce(&r.context).unwrap().extents()
        );
    }

    #[test]
    fn reduce_rejects_unclarified() {
        let c = with_extra_column(&cex1(), "b'", 2);
        assert_eq!(
            reduce(&c),
            Err(Error::NotClarified("b".into(), "b'".into()))
        );
    }

    #[test]
    fn pipeline_examples() {
        let c = cex1();
        let p = run_pipeline(&c).unwrap();
        assert!(p.stages.iter().all(|s| *s == c));

        let full = FormalContext::new(["g"], ["m"], &[vec![true]]).unwrap();
        assert!(matches!(run_pipeline(&full), Err(Error::Degenerate(_))));

        let dup = with_extra_column(&c, "b'", 2);
        let p = run_pipeline(&dup).unwrap();
        assert_eq!(p.stages[1], dup);
        assert_eq!(p.stages[2], c);
        assert_eq!(p.stages[3], c);
        let report = p.report();
        assert_eq!(report.clarified_away, ["b'"]);
        assert!(report.reduced_away.is_empty());
    }

    #[test]
    fn pipeline_report_json() {
        let dup = with_extra_column(&cex1(), "b'", 2);
        let json = serde_json::to_value(run_pipeline(&dup).unwrap().report()).unwrap();
        assert_eq!(json["stages"][0]["attributes"], 5);
        assert_eq!(json["stages"][3]["attributes"], 4);
        assert_eq!(json["clarification_map"][4]["representative"], "b");
    }

    #[test]
    fn pawlak_examples() {
        assert!(classify_pawlak(&cex1())
            .iter()
            .all(|&c| c == PawlakClass::AbsolutelyNecessary));

        // a and a' share {1}, which no other extent intersection yields
        let rel = FormalContext::from_labeled_rows(
            &["1", "2"],
            &["a", "a'", "b"],
            &[&["a", "a'"], &["b"]],
        )
        .unwrap();
        assert_eq!(
            classify_pawlak(&rel),
            [
                PawlakClass::RelativelyNecessary,
                PawlakClass::RelativelyNecessary,
                PawlakClass::AbsolutelyNecessary
            ]
        );

        assert_eq!(
            classify_pawlak(&meet_context())[0],
            PawlakClass::AbsolutelyUnnecessary
        );
    }

    #[test]
    fn full_row_via_minimal_examples() {
        let c = cex1();
        assert!(!full_row_via_minimal(&c, c.object_index("3").unwrap()));

        let one = FormalContext::new(["g"], ["m"], &[vec![true]]).unwrap();
        assert!(full_row_via_minimal(&one, 0));

        let extended = with_extra_row(&c, "5", AttributeSet::full(4));
        assert!(full_row_via_minimal(&extended, 4));
        assert!(extended.row(4).is_full());
    }
}
