//! The pre-weighted relevant graph: attributes as vertices, weighted by
//! their extents, with an arc for every strict extent inclusion and a
//! bi-arc for every extent equality.
//!
//! Arcs are stored as `(larger, smaller)`, i.e. `(y, x)` with `x↓ ⊊ y↓`,
//! which is the direction the arrows are drawn in (`c1 -> b`). Removing a
//! vertex only clears its `alive` bit; its pre-weight stays available.

use std::fmt::Write as _;

use crate::context::{braces, FormalContext};
use crate::subset::{AttributeSet, ObjectSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreWeightedGraph {
    attribute_labels: Vec<String>,
    object_labels: Vec<String>,
    pre_weights: Vec<ObjectSet>,
    alive: AttributeSet,
}

impl PreWeightedGraph {
    pub fn build(ctx: &FormalContext) -> Self {
        Self {
            attribute_labels: ctx.attributes().to_vec(),
            object_labels: ctx.objects().to_vec(),
            pre_weights: (0..ctx.num_attributes())
                .map(|a| ctx.column(a).clone())
                .collect(),
            alive: AttributeSet::full(ctx.num_attributes()),
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.pre_weights.len()
    }

    pub fn alive(&self) -> &AttributeSet {
        &self.alive
    }

    pub fn is_alive(&self, a: usize) -> bool {
        self.alive.contains(a)
    }

    /// `ω(a)`; defined for removed vertices too.
    pub fn pre_weight(&self, a: usize) -> &ObjectSet {
        &self.pre_weights[a]
    }

    pub fn attribute_labels(&self) -> &[String] {
        &self.attribute_labels
    }

    pub fn object_labels(&self) -> &[String] {
        &self.object_labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.attribute_labels[a]
    }

    /// `(y, x)` for every pair of alive vertices with `ω(x) ⊊ ω(y)`, in
    /// index order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in self.alive.iter() {
            for x in self.alive.iter() {
                if self.pre_weights[x].is_proper_subset(&self.pre_weights[y]) {
                    out.push((y, x));
                }
            }
        }
        out
    }

    /// `(x, y)` with `x < y`, both alive, `ω(x) = ω(y)`.
    pub fn bi_arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.alive.iter() {
            for y in self.alive.iter().filter(|&y| y > x) {
                if self.pre_weights[x] == self.pre_weights[y] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn check_alive(&self, a: usize) {
        assert!(
            self.is_alive(a),
            "vertex `{}` has been removed",
            self.attribute_labels[a]
        );
    }

    /// `N⁺(a)`: alive `x ≠ a` with `ω(x) ⊆ ω(a)`.
    ///
    /// Panics if `a` has been removed.
    pub fn lower_cone(&self, a: usize) -> AttributeSet {
        self.check_alive(a);
        self.filter_alive(|x| x != a && self.pre_weights[x].is_subset(&self.pre_weights[a]))
    }

    /// `V^{→a}`: alive `x ≠ a` with `ω(a) ⊆ ω(x)`.
    ///
    /// Panics if `a` has been removed.
    pub fn upper_cone(&self, a: usize) -> AttributeSet {
        self.check_alive(a);
        self.filter_alive(|x| x != a && self.pre_weights[a].is_subset(&self.pre_weights[x]))
    }

    /// Upper cone taken over every vertex, removed or not. `a` itself may
    /// be removed.
    pub fn upper_cone_all(&self, a: usize) -> AttributeSet {
        AttributeSet::from_indices(
            self.num_vertices(),
            (0..self.num_vertices())
                .filter(|&x| x != a && self.pre_weights[a].is_subset(&self.pre_weights[x])),
        )
    }

    /// `𝒞`: alive vertices whose pre-weight is not strictly below another
    /// alive pre-weight.
    pub fn maximal_attrs(&self) -> AttributeSet {
        self.filter_alive(|a| {
            !self
                .alive
                .iter()
                .any(|b| self.pre_weights[a].is_proper_subset(&self.pre_weights[b]))
        })
    }

    /// Alive vertices with no alive pre-weight strictly below their own.
    pub fn minimal_attrs(&self) -> AttributeSet {
        self.filter_alive(|a| {
            !self
                .alive
                .iter()
                .any(|b| self.pre_weights[b].is_proper_subset(&self.pre_weights[a]))
        })
    }

    /// New graph with `removed` marked dead. Panics if any member of
    /// `removed` is already dead.
    pub fn remove_vertices(&self, removed: &AttributeSet) -> Self {
        assert!(removed.is_subset(&self.alive), "removing a dead vertex");
        let mut g = self.clone();
        g.alive = self.alive.difference(removed);
        g
    }

    fn filter_alive(&self, keep: impl Fn(usize) -> bool) -> AttributeSet {
        AttributeSet::from_indices(self.num_vertices(), self.alive.iter().filter(|&a| keep(a)))
    }

    pub fn render_objects(&self, set: &ObjectSet) -> String {
        braces(
            &set.iter()
                .map(|o| self.object_labels[o].clone())
                .collect::<Vec<_>>(),
        )
    }

    pub fn render_attributes(&self, set: &AttributeSet) -> String {
        braces(
            &set.iter()
                .map(|a| self.attribute_labels[a].clone())
                .collect::<Vec<_>>(),
        )
    }

    /// Graphviz rendering. Vertices are named `a<index>`, labelled with the
    /// attribute name and annotated (`xlabel`) with the pre-weight.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph relevant_graph {\n");
        for a in self.alive.iter() {
            let _ = writeln!(
                out,
                "  a{a} [label={}, xlabel={}];",
                dot_quote(&self.attribute_labels[a]),
                dot_quote(&self.render_objects(&self.pre_weights[a]))
            );
        }
        for (y, x) in self.arcs() {
            let _ = writeln!(out, "  a{y} -> a{x};");
        }
        for (x, y) in self.bi_arcs() {
            let _ = writeln!(out, "  a{x} -> a{y} [dir=both];");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
