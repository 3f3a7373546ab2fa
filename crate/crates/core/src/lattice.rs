//! Concept enumeration and the sets derived from the concept lattice.
//!
//! Two enumerators are provided. [`enumerate_bruteforce`] closes every
//! attribute subset and is only meant as an oracle for small contexts;
//! [`enumerate_lectic`] walks intents in lectic order (NextClosure) and has
//! no subset blowup. Both return a [`ConceptSet`] in the same canonical
//! order, so they can be compared with `==`.

use std::collections::{BTreeMap, BTreeSet};

use crate::context::{FormalConcept, FormalContext};
use crate::error::{Error, Result};
use crate::graph::PreWeightedGraph;
use crate::subset::{AttributeSet, ObjectSet};

/// Largest attribute count the subset-enumerating routines accept.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Concepts of one context, ordered lexicographically by extent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConceptSet {
    concepts: Vec<FormalConcept>,
}

impl ConceptSet {
    /// Sorts by extent and drops repeated extents.
    pub fn from_concepts(concepts: impl IntoIterator<Item = FormalConcept>) -> Self {
        let by_extent: BTreeMap<ObjectSet, AttributeSet> =
            concepts.into_iter().map(|c| (c.extent, c.intent)).collect();
        Self {
            concepts: by_extent
                .into_iter()
                .map(|(extent, intent)| FormalConcept { extent, intent })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FormalConcept> {
        self.concepts.iter()
    }

    pub fn as_slice(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn contains(&self, concept: &FormalConcept) -> bool {
        self.concepts
            .binary_search_by(|c| c.extent.cmp(&concept.extent))
            .is_ok_and(|i| self.concepts[i].intent == concept.intent)
    }

    pub fn extents(&self) -> BTreeSet<ObjectSet> {
        self.concepts.iter().map(|c| c.extent.clone()).collect()
    }
}

impl<'a> IntoIterator for &'a ConceptSet {
    type Item = &'a FormalConcept;
    type IntoIter = std::slice::Iter<'a, FormalConcept>;

    fn into_iter(self) -> Self::IntoIter {
        self.concepts.iter()
    }
}

fn guard_subset_blowup(ctx: &FormalContext) -> Result<()> {
    if ctx.num_attributes() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooManyAttributes {
            count: ctx.num_attributes(),
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    Ok(())
}

fn subset_from_mask(universe: usize, mask: u32) -> AttributeSet {
    AttributeSet::from_indices(universe, (0..universe).filter(|&a| mask & (1 << a) != 0))
}

/// Closes all `2^|P|` attribute subsets.
pub fn enumerate_bruteforce(ctx: &FormalContext) -> Result<ConceptSet> {
    guard_subset_blowup(ctx)?;
    let m = ctx.num_attributes();
    Ok(ConceptSet::from_concepts(
        (0..1u32 << m).map(|mask| ctx.close_intent(&subset_from_mask(m, mask))),
    ))
}

/// NextClosure over intents.
pub fn enumerate_lectic(ctx: &FormalContext) -> ConceptSet {
    let m = ctx.num_attributes();
    let mut found = Vec::new();
    let mut current = ctx.close_intent(&AttributeSet::empty(m));
    loop {
        let next = next_intent(ctx, &current.intent);
        found.push(current);
        match next {
            Some(c) => current = c,
            None => break,
        }
    }
    ConceptSet::from_concepts(found)
}

/// Lectically next closed intent after `intent`, if any.
fn next_intent(ctx: &FormalContext, intent: &AttributeSet) -> Option<FormalConcept> {
    let m = ctx.num_attributes();
    for i in (0..m).rev() {
        if intent.contains(i) {
            continue;
        }
        let mut candidate = AttributeSet::from_indices(m, intent.iter().take_while(|&a| a < i));
        candidate.insert(i);
        let closed = ctx.close_intent(&candidate);
        // accept only if closing added nothing below i
        if closed
            .intent
            .iter()
            .take_while(|&a| a < i)
            .eq(intent.iter().take_while(|&a| a < i))
        {
            return Some(closed);
        }
    }
    None
}

/// `c1 ≤ c2` iff the extent of `c1` is contained in that of `c2`.
pub fn concept_leq(c1: &FormalConcept, c2: &FormalConcept) -> bool {
    c1.extent.is_subset(&c2.extent)
}

/// `⟨O, O↑⟩`
pub fn top_concept(ctx: &FormalContext) -> FormalConcept {
    ctx.close_extent(&ObjectSet::full(ctx.num_objects()))
}

/// `⟨P↓, P↓↑⟩`
pub fn bottom_concept(ctx: &FormalContext) -> FormalConcept {
    ctx.close_intent(&AttributeSet::full(ctx.num_attributes()))
}

/// Every concept except the top, the bottom and the attribute concepts.
pub fn core_set_a(ctx: &FormalContext) -> ConceptSet {
    let top = top_concept(ctx);
    let bottom = bottom_concept(ctx);
    let attribute_concepts: BTreeSet<FormalConcept> = (0..ctx.num_attributes())
        .map(|a| ctx.attribute_concept(a))
        .collect();
    ConceptSet::from_concepts(
        enumerate_lectic(ctx)
            .iter()
            .filter(|c| **c != top && **c != bottom && !attribute_concepts.contains(*c))
            .cloned(),
    )
}

/// The three-way split of [`core_set_a`] around a pivot attribute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FstPartition {
    pub pivot: usize,
    /// Pivot in the intent, nothing from its lower cone.
    pub f: ConceptSet,
    /// Pivot and at least one lower-cone attribute in the intent.
    pub s: ConceptSet,
    /// Pivot absent from the intent.
    pub t: ConceptSet,
}

pub fn partition_fst(ctx: &FormalContext, pivot: usize) -> FstPartition {
    assert!(
        pivot < ctx.num_attributes(),
        "pivot {pivot} outside universe"
    );
    let cone = PreWeightedGraph::build(ctx).lower_cone(pivot);
    let (mut f, mut s, mut t) = (Vec::new(), Vec::new(), Vec::new());
    for c in core_set_a(ctx).iter() {
        if !c.intent.contains(pivot) {
            t.push(c.clone());
        } else if c.intent.is_disjoint(&cone) {
            f.push(c.clone());
        } else {
            s.push(c.clone());
        }
    }
    FstPartition {
        pivot,
        f: ConceptSet::from_concepts(f),
        s: ConceptSet::from_concepts(s),
        t: ConceptSet::from_concepts(t),
    }
}

/// `{ ⋂_{a∈B} a↓ : ∅ ≠ B ⊆ P } ∪ {O}`, computed subset by subset.
///
/// On every context this is exactly the extent set of the concept lattice.
pub fn extents_from_preweight_intersections(ctx: &FormalContext) -> Result<BTreeSet<ObjectSet>> {
    guard_subset_blowup(ctx)?;
    let m = ctx.num_attributes();
    let mut out = BTreeSet::new();
    out.insert(ObjectSet::full(ctx.num_objects()));
    for mask in 1..1u32 << m {
        let mut ext = ObjectSet::full(ctx.num_objects());
        for a in (0..m).filter(|&a| mask & (1 << a) != 0) {
            ext.intersect_with(ctx.column(a));
        }
        out.insert(ext);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{cex1, cex2, cex3};

    fn concept(ctx: &FormalContext, ext: &[&str], int: &[&str]) -> FormalConcept {
        FormalConcept {
            extent: ctx.object_set(ext).unwrap(),
            intent: ctx.attribute_set(int).unwrap(),
        }
    }

    fn full_2x2() -> FormalContext {
        FormalContext::new(["g", "h"], ["m", "n"], &[vec![true; 2], vec![true; 2]]).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(enumerate_bruteforce(&cex1()).unwrap().len(), 6);
        let one = FormalContext::new(["0"], ["0"], &[vec![true]]).unwrap();
        let all = enumerate_bruteforce(&one).unwrap();
        assert_eq!(all.as_slice(), &[concept(&one, &["0"], &["0"])]);
        let c = cex3();
        assert!(enumerate_bruteforce(&c).unwrap().contains(&concept(
            &c,
            &["3"],
            &["c1", "c2", "c3"]
        )));
    }

    #[test]
    fn bruteforce_refuses_wide_contexts() {
        let attrs: Vec<String> = (0..21).map(|i| format!("m{i}")).collect();
        let ctx = FormalContext::new(["g"], attrs, &[vec![false; 21]]).unwrap();
        assert_eq!(
            enumerate_bruteforce(&ctx),
            Err(Error::TooManyAttributes {
                count: 21,
                limit: 20
            })
        );
        assert!(extents_from_preweight_intersections(&ctx).is_err());
        // the lectic walk has no such limit
        assert_eq!(enumerate_lectic(&ctx).len(), 2);
    }

    #[test]
    fn lectic_matches_bruteforce_on_builtins() {
        for c in [cex1(), cex2(), cex3()] {
            assert_eq!(enumerate_lectic(&c), enumerate_bruteforce(&c).unwrap());
        }
        let full = full_2x2();
        let all = enumerate_lectic(&full);
        assert_eq!(all.as_slice(), &[concept(&full, &["g", "h"], &["m", "n"])]);
    }

    #[test]
    fn leq_examples() {
        let c = cex1();
        let k3 = concept(&c, &["3"], &["c1", "c2", "b"]);
        let kb = concept(&c, &["2", "3"], &["c1", "b"]);
        let kc2 = concept(&c, &["3", "4"], &["c2"]);
        assert!(concept_leq(&k3, &kb));
        assert!(concept_leq(&kb, &kb));
        assert!(!concept_leq(&kc2, &kb));
    }

    #[test]
    fn core_set_examples() {
        let c = cex1();
        assert_eq!(
            core_set_a(&c).as_slice(),
            &[concept(&c, &["3"], &["c1", "c2", "b"])]
        );
        assert!(core_set_a(&full_2x2()).is_empty());
        let c = cex2();
        let a = core_set_a(&c);
        assert!(a.contains(&concept(&c, &["4"], &["c1", "c3", "b"])));
        assert!(a.contains(&concept(&c, &["3"], &["c1", "c2", "b"])));
    }

    #[test]
    fn partition_examples() {
        let c = cex1();
        let p = partition_fst(&c, 0);
        assert!(p.f.is_empty() && p.t.is_empty());
        assert_eq!(p.s.as_slice(), &[concept(&c, &["3"], &["c1", "c2", "b"])]);

        let c = cex2();
        assert!(partition_fst(&c, 0)
            .s
            .contains(&concept(&c, &["4"], &["c1", "c3", "b"])));

        let full = full_2x2();
        for a in 0..2 {
            let p = partition_fst(&full, a);
            assert!(p.f.is_empty() && p.s.is_empty() && p.t.is_empty());
        }
    }

    #[test]
    fn empty_lower_cone_puts_everything_in_f() {
        // c2 has nothing below it in cex2
        let c = cex2();
        let p = partition_fst(&c, 1);
        assert!(p.s.is_empty());
        assert!(p.f.contains(&concept(&c, &["2", "3"], &["c1", "c2"])));
    }

    #[test]
    fn preweight_intersection_examples() {
        let c = cex1();
        let expected: BTreeSet<ObjectSet> = [
            &[][..],
            &["3"],
            &["2", "3"],
            &["3", "4"],
            &["1", "2", "3"],
            &["1", "2", "3", "4"],
        ]
        .iter()
        .map(|l| c.object_set(l).unwrap())
        .collect();
        assert_eq!(extents_from_preweight_intersections(&c).unwrap(), expected);

        let one = FormalContext::new(["0"], ["0"], &[vec![true]]).unwrap();
        assert_eq!(
            extents_from_preweight_intersections(&one).unwrap(),
            BTreeSet::from([ObjectSet::full(1)])
        );

        let c = cex3();
        assert_eq!(
            extents_from_preweight_intersections(&c).unwrap(),
            enumerate_bruteforce(&c).unwrap().extents()
        );
    }

    #[test]
    fn top_and_bottom_bound_everything() {
        for c in [cex1(), cex2(), cex3()] {
            let all = enumerate_lectic(&c);
            let (top, bottom) = (top_concept(&c), bottom_concept(&c));
            assert!(all
                .iter()
                .all(|k| concept_leq(k, &top) && concept_leq(&bottom, k)));
        }
    }
}
