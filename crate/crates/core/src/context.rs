//! Finite formal contexts and the derivation operators.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{AttributeSet, ObjectSet};

/// A finite formal context `(O, P, I)`.
///
/// Rows (object intents) and columns (attribute extents) are both kept so
/// that each derivation is a plain intersection over one of them.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<String>,
    attributes: Vec<String>,
    rows: Vec<AttributeSet>,
    cols: Vec<ObjectSet>,
}

/// A pair `(extent, intent)` closed under both derivations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalConcept {
    pub extent: ObjectSet,
    pub intent: AttributeSet,
}

impl FormalContext {
    /// Builds a context from a dense boolean table (`incidence[o][a]`).
    pub fn new<S: Into<String>, T: Into<String>>(
        objects: impl IntoIterator<Item = S>,
        attributes: impl IntoIterator<Item = T>,
        incidence: &[Vec<bool>],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        if incidence.len() != objects.len() {
            return Err(Error::ShapeMismatch {
                row: incidence.len(),
                found: incidence.len(),
                expected: objects.len(),
            });
        }
        let rows = incidence
            .iter()
            .enumerate()
            .map(|(o, row)| {
                if row.len() != attributes.len() {
                    return Err(Error::ShapeMismatch {
                        row: o,
                        found: row.len(),
                        expected: attributes.len(),
                    });
                }
                Ok(AttributeSet::from_indices(
                    attributes.len(),
                    row.iter().enumerate().filter(|(_, &x)| x).map(|(a, _)| a),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(objects, attributes, rows)
    }

    /// Builds a context from per-object intents.
    pub fn from_rows(
        objects: Vec<String>,
        attributes: Vec<String>,
        rows: Vec<AttributeSet>,
    ) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::EmptyUniverse("object"));
        }
        if attributes.is_empty() {
            return Err(Error::EmptyUniverse("attribute"));
        }
        check_unique("object", &objects)?;
        check_unique("attribute", &attributes)?;
        if rows.len() != objects.len() {
            return Err(Error::ShapeMismatch {
                row: rows.len(),
                found: rows.len(),
                expected: objects.len(),
            });
        }
        for (o, row) in rows.iter().enumerate() {
            if row.universe() != attributes.len() {
                return Err(Error::ShapeMismatch {
                    row: o,
                    found: row.universe(),
                    expected: attributes.len(),
                });
            }
        }
        let cols = (0..attributes.len())
            .map(|a| {
                ObjectSet::from_indices(
                    objects.len(),
                    rows.iter()
                        .enumerate()
                        .filter(|(_, r)| r.contains(a))
                        .map(|(o, _)| o),
                )
            })
            .collect();
        Ok(Self {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    /// Convenience constructor from label lists: `rows[i]` names the
    /// attributes of `objects[i]`.
    pub fn from_labeled_rows(
        objects: &[&str],
        attributes: &[&str],
        rows: &[&[&str]],
    ) -> Result<Self> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let attributes: Vec<String> = attributes.iter().map(|s| s.to_string()).collect();
        let rows = rows
            .iter()
            .map(|names| {
                let mut row = AttributeSet::empty(attributes.len());
                for name in names.iter() {
                    let a = attributes.iter().position(|x| x == name).ok_or_else(|| {
                        Error::UnknownLabel {
                            kind: "attribute",
                            label: name.to_string(),
                        }
                    })?;
                    row.insert(a);
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(objects, attributes, rows)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_attributes(&self) -> usize {
        self.attributes.len()
    }

    pub fn incident(&self, o: usize, a: usize) -> bool {
        self.rows[o].contains(a)
    }

    /// `o↑`
    pub fn row(&self, o: usize) -> &AttributeSet {
        &self.rows[o]
    }

    /// `a↓`, the pre-weight of `a`.
    pub fn column(&self, a: usize) -> &ObjectSet {
        &self.cols[a]
    }

    pub fn object_index(&self, label: &str) -> Result<usize> {
        self.objects
            .iter()
            .position(|x| x == label)
            .ok_or_else(|| Error::UnknownLabel {
                kind: "object",
                label: label.to_string(),
            })
    }

    pub fn attribute_index(&self, label: &str) -> Result<usize> {
        self.attributes
            .iter()
            .position(|x| x == label)
            .ok_or_else(|| Error::UnknownLabel {
                kind: "attribute",
                label: label.to_string(),
            })
    }

    pub fn object_set(&self, labels: &[&str]) -> Result<ObjectSet> {
        let mut s = ObjectSet::empty(self.num_objects());
        for l in labels {
            s.insert(self.object_index(l)?);
        }
        Ok(s)
    }

    pub fn attribute_set(&self, labels: &[&str]) -> Result<AttributeSet> {
        let mut s = AttributeSet::empty(self.num_attributes());
        for l in labels {
            s.insert(self.attribute_index(l)?);
        }
        Ok(s)
    }

    pub fn object_labels(&self, set: &ObjectSet) -> Vec<String> {
        set.iter().map(|o| self.objects[o].clone()).collect()
    }

    pub fn attribute_labels(&self, set: &AttributeSet) -> Vec<String> {
        set.iter().map(|a| self.attributes[a].clone()).collect()
    }

    /// `X↑`: attributes shared by every object in `extent`.
    ///
    /// Panics if `extent` belongs to a different universe.
    pub fn derive_up(&self, extent: &ObjectSet) -> AttributeSet {
        assert_eq!(
            extent.universe(),
            self.num_objects(),
            "object set from another context"
        );
        let mut out = AttributeSet::full(self.num_attributes());
        for o in extent.iter() {
            out.intersect_with(&self.rows[o]);
        }
        out
    }

    /// `B↓`: objects having every attribute in `intent`.
    ///
    /// Panics if `intent` belongs to a different universe.
    pub fn derive_down(&self, intent: &AttributeSet) -> ObjectSet {
        assert_eq!(
            intent.universe(),
            self.num_attributes(),
            "attribute set from another context"
        );
        let mut out = ObjectSet::full(self.num_objects());
        for a in intent.iter() {
            out.intersect_with(&self.cols[a]);
        }
        out
    }

    /// `⟨B↓, B↓↑⟩`
    pub fn close_intent(&self, intent: &AttributeSet) -> FormalConcept {
        let extent = self.derive_down(intent);
        let intent = self.derive_up(&extent);
        FormalConcept { extent, intent }
    }

    /// `⟨X↑↓, X↑⟩`
    pub fn close_extent(&self, extent: &ObjectSet) -> FormalConcept {
        let intent = self.derive_up(extent);
        let extent = self.derive_down(&intent);
        FormalConcept { extent, intent }
    }

    pub fn is_concept(&self, extent: &ObjectSet, intent: &AttributeSet) -> bool {
        self.derive_up(extent) == *intent && self.derive_down(intent) == *extent
    }

    pub fn attribute_concept(&self, a: usize) -> FormalConcept {
        assert!(a < self.num_attributes(), "attribute {a} outside universe");
        self.close_intent(&AttributeSet::from_indices(self.num_attributes(), [a]))
    }

    pub fn object_concept(&self, o: usize) -> FormalConcept {
        assert!(o < self.num_objects(), "object {o} outside universe");
        self.close_extent(&ObjectSet::from_indices(self.num_objects(), [o]))
    }

    /// Objects with `o↑ = P`.
    pub fn full_rows(&self) -> ObjectSet {
        ObjectSet::from_indices(
            self.num_objects(),
            (0..self.num_objects()).filter(|&o| self.rows[o].is_full()),
        )
    }

    /// Attributes with `a↓ = O`.
    pub fn full_cols(&self) -> AttributeSet {
        AttributeSet::from_indices(
            self.num_attributes(),
            (0..self.num_attributes()).filter(|&a| self.cols[a].is_full()),
        )
    }

    /// The subcontext on the given objects and attributes, original order
    /// preserved.
    pub fn restrict(&self, objects: &ObjectSet, attributes: &AttributeSet) -> Result<Self> {
        let kept_attrs: Vec<usize> = attributes.iter().collect();
        let object_labels = objects.iter().map(|o| self.objects[o].clone()).collect();
        let attribute_labels = kept_attrs
            .iter()
            .map(|&a| self.attributes[a].clone())
            .collect();
        let rows = objects
            .iter()
            .map(|o| self.rows[o].project(&kept_attrs))
            .collect();
        Self::from_rows(object_labels, attribute_labels, rows)
    }

    /// Render a pair with labels, e.g. `⟨{3},{c1,c2}⟩`.
    pub fn render_pair(&self, extent: &ObjectSet, intent: &AttributeSet) -> String {
        format!(
            "⟨{},{}⟩",
            braces(&self.object_labels(extent)),
            braces(&self.attribute_labels(intent))
        )
    }
}

pub(crate) fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn check_unique(kind: &'static str, labels: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel {
                kind,
                label: l.clone(),
            });
        }
    }
    Ok(())
}

impl fmt::Debug for FormalContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FormalContext {{ attributes: {:?}", self.attributes)?;
        for (o, row) in self.rows.iter().enumerate() {
            let marks: String = (0..self.num_attributes())
                .map(|a| if row.contains(a) { 'X' } else { '.' })
                .collect();
            writeln!(f, "  {:>6} {}", self.objects[o], marks)?;
        }
        write!(f, "}}")
    }
}
