//! Step-by-step replay of the documented fragments of the three
//! graph-based concept enumeration algorithms.
//!
//! Only the steps that are actually spelled out are executed: step 1-2 of
//! algorithm 1, steps 6-8 of algorithm 2 and steps 15-16 of algorithm 3.
//! Whenever an input drives a run past that fragment the replay stops with
//! [`Termination::UnspecifiedStep`] instead of guessing a continuation.
//! Emitted pairs are raw output and are deliberately not validated here.
//!
//! Every choice "select some x ∈ X" picks the lowest attribute index, so a
//! replay is a pure function of its input.

use std::fmt;

use serde::Serialize;

use crate::context::braces;
use crate::error::{Error, Result};
use crate::graph::PreWeightedGraph;
use crate::subset::{AttributeSet, ObjectSet};

/// How algorithm 3 treats the attributes whose vertices it deletes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RemovalMode {
    /// Deleted vertices leave the attribute set too.
    DropAttribute,
    /// Deleted vertices stay in the attribute set: upper cones still see
    /// them and emitted intents re-admit those whose pre-weight contains
    /// the emitted extent.
    KeepAttribute,
}

impl fmt::Display for RemovalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemovalMode::DropAttribute => "DROP_ATTRIBUTE",
            RemovalMode::KeepAttribute => "KEEP_ATTRIBUTE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Termination {
    Normal,
    UnspecifiedStep,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Termination::Normal => "NORMAL",
            Termination::UnspecifiedStep => "UNSPECIFIED_STEP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LabeledPair {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

impl fmt::Display for LabeledPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{},{}⟩", braces(&self.extent), braces(&self.intent))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TraceItem {
    Set {
        name: String,
        members: Vec<String>,
    },
    Select {
        var: String,
        value: String,
    },
    Branch {
        text: String,
    },
    Emit {
        pair: LabeledPair,
    },
    Note {
        text: String,
    },
    Terminate {
        termination: Termination,
        reason: String,
    },
}

impl fmt::Display for TraceItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceItem::Set { name, members } => write!(f, "{name}={}", braces(members)),
            TraceItem::Select { var, value } => write!(f, "select {var}={value}"),
            TraceItem::Branch { text } => write!(f, "branch: {text}"),
            TraceItem::Emit { pair } => write!(f, "emit {pair}"),
            TraceItem::Note { text } => write!(f, "note: {text}"),
            TraceItem::Terminate {
                termination,
                reason,
            } => write!(f, "terminate {termination} ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub step: String,
    pub items: Vec<TraceItem>,
}

/// Ordered record of one replay.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TraceLog {
    pub events: Vec<TraceEvent>,
}

impl TraceLog {
    /// One line per event: `step: item; item; ...`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&e.step);
            out.push(':');
            for (i, item) in e.items.iter().enumerate() {
                out.push_str(if i == 0 { " " } else { "; " });
                out.push_str(&item.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Members of the first set recorded under `name`.
    pub fn set(&self, name: &str) -> Option<&[String]> {
        self.items().find_map(|item| match item {
            TraceItem::Set { name: n, members } if n == name => Some(members.as_slice()),
            _ => None,
        })
    }

    pub fn selections(&self) -> Vec<(&str, &str)> {
        self.items()
            .filter_map(|item| match item {
                TraceItem::Select { var, value } => Some((var.as_str(), value.as_str())),
                _ => None,
            })
            .collect()
    }

    pub fn emitted(&self) -> Vec<&LabeledPair> {
        self.items()
            .filter_map(|item| match item {
                TraceItem::Emit { pair } => Some(pair),
                _ => None,
            })
            .collect()
    }

    pub fn last_step(&self) -> Option<&str> {
        self.events.last().map(|e| e.step.as_str())
    }

    fn items(&self) -> impl Iterator<Item = &TraceItem> {
        self.events.iter().flat_map(|e| e.items.iter())
    }
}

/// A pair output by a replay. `generators` are the attributes whose
/// pre-weights were intersected to get the extent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EmittedPair {
    pub extent: ObjectSet,
    pub intent: AttributeSet,
    pub generators: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplayOutcome {
    pub emitted: Vec<EmittedPair>,
    pub termination: Termination,
    pub trace: TraceLog,
}

/// JSON shape of a [`ReplayOutcome`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayReport {
    pub emitted: Vec<LabeledPair>,
    pub termination: Termination,
    pub trace: TraceLog,
}

impl ReplayOutcome {
    pub fn report(&self, g: &PreWeightedGraph) -> ReplayReport {
        ReplayReport {
            emitted: self.emitted.iter().map(|p| label_pair(g, p)).collect(),
            termination: self.termination,
            trace: self.trace.clone(),
        }
    }
}

pub fn label_pair(g: &PreWeightedGraph, p: &EmittedPair) -> LabeledPair {
    LabeledPair {
        extent: p
            .extent
            .iter()
            .map(|o| g.object_labels()[o].clone())
            .collect(),
        intent: p.intent.iter().map(|a| g.label(a).to_string()).collect(),
    }
}

/// Mutable state shared by the step functions of one replay.
struct Run<'g> {
    g: &'g PreWeightedGraph,
    keep_removed: bool,
    prefix: String,
    trace: TraceLog,
    emitted: Vec<EmittedPair>,
}

impl<'g> Run<'g> {
    fn new(g: &'g PreWeightedGraph, keep_removed: bool) -> Self {
        Self {
            g,
            keep_removed,
            prefix: String::new(),
            trace: TraceLog::default(),
            emitted: Vec::new(),
        }
    }

    fn event(&mut self, step: &str, items: Vec<TraceItem>) {
        self.trace.events.push(TraceEvent {
            step: format!("{}{step}", self.prefix),
            items,
        });
    }

    fn set(&self, name: &str, s: &AttributeSet) -> TraceItem {
        TraceItem::Set {
            name: name.into(),
            members: s.iter().map(|a| self.g.label(a).to_string()).collect(),
        }
    }

    fn oset(&self, name: &str, s: &ObjectSet) -> TraceItem {
        TraceItem::Set {
            name: name.into(),
            members: s
                .iter()
                .map(|o| self.g.object_labels()[o].clone())
                .collect(),
        }
    }

    fn select(&self, var: &str, a: usize) -> TraceItem {
        TraceItem::Select {
            var: var.into(),
            value: self.g.label(a).into(),
        }
    }

    fn upper_cone(&self, a: usize) -> AttributeSet {
        if self.keep_removed {
            self.g.upper_cone_all(a)
        } else {
            self.g.upper_cone(a)
        }
    }

    /// Records the pair, re-admitting retained attributes first when
    /// removed vertices stay in the attribute set.
    fn emit(
        &mut self,
        items: &mut Vec<TraceItem>,
        extent: ObjectSet,
        mut intent: AttributeSet,
        generators: Vec<usize>,
    ) {
        if self.keep_removed {
            let n = self.g.num_vertices();
            let readmitted = AttributeSet::from_indices(
                n,
                (0..n).filter(|&x| !self.g.is_alive(x) && extent.is_subset(self.g.pre_weight(x))),
            );
            if !readmitted.is_empty() {
                items.push(self.set("readmitted", &readmitted));
                intent.union_with(&readmitted);
            }
        }
        let pair = EmittedPair {
            extent,
            intent,
            generators,
        };
        items.push(TraceItem::Emit {
            pair: label_pair(self.g, &pair),
        });
        if !self.emitted.contains(&pair) {
            self.emitted.push(pair);
        }
    }

    fn finish(self, termination: Termination) -> ReplayOutcome {
        ReplayOutcome {
            emitted: self.emitted,
            termination,
            trace: self.trace,
        }
    }
}

fn terminate(termination: Termination, reason: impl Into<String>) -> TraceItem {
    TraceItem::Terminate {
        termination,
        reason: reason.into(),
    }
}

fn require_maximal(g: &PreWeightedGraph, pivot: usize) -> Result<()> {
    if pivot >= g.num_vertices() || !g.maximal_attrs().contains(pivot) {
        let name = g
            .attribute_labels()
            .get(pivot)
            .map_or_else(|| format!("#{pivot}"), |s| s.clone());
        return Err(Error::Precondition(format!(
            "`{name}` is not a maximal attribute of the graph"
        )));
    }
    Ok(())
}

/// Steps 1-2 of algorithm 1 on `pivot`.
fn alg1_steps(run: &mut Run<'_>, pivot: usize) -> Termination {
    let g = run.g;
    let cone = g.lower_cone(pivot);
    let w = g.pre_weight(pivot);
    let h1 = AttributeSet::from_indices(
        g.num_vertices(),
        g.alive()
            .iter()
            .filter(|&x| x != pivot && !cone.contains(x) && !w.is_disjoint(g.pre_weight(x))),
    );
    let mut items = vec![run.set("N+", &cone), run.set("H1", &h1)];
    let Some(h) = h1.first() else {
        items.push(TraceItem::Branch {
            text: "H1 = ∅".into(),
        });
        items.push(terminate(Termination::Normal, "nothing to select"));
        run.event("step 1", items);
        return Termination::Normal;
    };
    items.push(run.select("h1", h));
    let a1 = w.intersection(g.pre_weight(h));
    let b1 = AttributeSet::from_indices(g.num_vertices(), [pivot, h]);
    items.push(run.oset("A1", &a1));
    items.push(run.set("B1", &b1));
    let blocking: Vec<usize> = h1
        .difference(&b1)
        .iter()
        .filter(|&x| a1.is_proper_subset(g.pre_weight(x)))
        .collect();
    if blocking.is_empty() {
        items.push(TraceItem::Branch {
            text: "no h ∈ H1∖B1 with A1 ⊂ ω(h)".into(),
        });
        run.emit(&mut items, a1, b1, vec![pivot, h]);
    } else {
        items.push(TraceItem::Branch {
            text: format!(
                "A1 ⊂ ω(h) for h ∈ {}; pair withheld",
                g.render_attributes(&AttributeSet::from_indices(g.num_vertices(), blocking))
            ),
        });
    }
    run.event("step 1", items);

    if h1.len() == 1 {
        run.event("step 2", vec![terminate(Termination::Normal, "|H1| = 1")]);
        Termination::Normal
    } else {
        run.event(
            "step 2",
            vec![terminate(
                Termination::UnspecifiedStep,
                format!(
                    "|H1| = {}; the continuation for |H1| > 1 is undocumented",
                    h1.len()
                ),
            )],
        );
        Termination::UnspecifiedStep
    }
}

/// Steps 6-8 of algorithm 2 on `pivot`; the caller guarantees a non-empty
/// lower cone.
fn alg2_steps(run: &mut Run<'_>, pivot: usize) -> Termination {
    let g = run.g;
    let n = g.num_vertices();
    let cone = g.lower_cone(pivot);
    let b1 = cone.first().expect("lower cone checked non-empty");
    let wb = g.pre_weight(b1);
    let hb = AttributeSet::from_indices(
        n,
        g.alive().iter().filter(|&x| {
            x != pivot && x != b1 && !cone.contains(x) && !wb.is_disjoint(g.pre_weight(x))
        }),
    );
    let items = vec![
        run.set("N+", &cone),
        run.select("b1", b1),
        run.set("Hb1", &hb),
        TraceItem::Note {
            text: "Hb1 reconstructed as the step-1 rule re-pivoted on b1, pivot excluded".into(),
        },
    ];
    run.event("step 6", items);

    let Some(d1) = hb.first() else {
        run.event(
            "step 7",
            vec![
                TraceItem::Branch {
                    text: "Hb1 = ∅".into(),
                },
                terminate(Termination::Normal, "nothing to select"),
            ],
        );
        return Termination::Normal;
    };
    let a = wb.intersection(g.pre_weight(d1));
    let mut b = AttributeSet::from_indices(n, [b1, d1]);
    b.union_with(&run.upper_cone(b1));
    b.union_with(&run.upper_cone(d1));
    let mut items = vec![
        run.select("d1", d1),
        run.oset("Ab1", &a),
        run.set("Bb1", &b),
    ];
    let case1 = hb
        .difference(&b)
        .iter()
        .any(|x| a.is_proper_subset(g.pre_weight(x)));
    if case1 {
        items.push(TraceItem::Branch {
            text: "Case 1".into(),
        });
        items.push(terminate(
            Termination::UnspecifiedStep,
            "Case 1 of step 7 is undocumented",
        ));
        run.event("step 7", items);
        return Termination::UnspecifiedStep;
    }
    items.push(TraceItem::Branch {
        text: "Case 2: no h ∈ Hb1∖Bb1 with Ab1 ⊂ ω(h)".into(),
    });
    let below_b1 = g.lower_cone(b1);
    if !below_b1.is_empty() {
        items.push(run.set("N+(b1)", &below_b1));
        items.push(terminate(
            Termination::UnspecifiedStep,
            "Case 2 with N+(b1) ≠ ∅ is undocumented",
        ));
        run.event("step 7", items);
        return Termination::UnspecifiedStep;
    }
    run.emit(&mut items, a, b, vec![b1, d1]);
    run.event("step 7", items);

    let mut items = Vec::new();
    let mut meet = wb.clone();
    for (i, d) in hb.iter().enumerate() {
        items.push(run.select(&format!("d1{}", i + 1), d));
        meet.intersect_with(g.pre_weight(d));
    }
    items.push(run.oset("A1d1", &meet));
    if meet.is_empty() {
        items.push(terminate(Termination::Normal, "A1d1 = ∅"));
        run.event("step 8", items);
        Termination::Normal
    } else {
        items.push(terminate(
            Termination::UnspecifiedStep,
            "A1d1 ≠ ∅; steps after 8 are undocumented",
        ));
        run.event("step 8", items);
        Termination::UnspecifiedStep
    }
}

/// Algorithm 1 (the part of `𝒜` with the pivot and nothing of its lower
/// cone). Requires `pivot` to be maximal.
pub fn replay_alg1(g: &PreWeightedGraph, pivot: usize) -> Result<ReplayOutcome> {
    require_maximal(g, pivot)?;
    let mut run = Run::new(g, false);
    let t = alg1_steps(&mut run, pivot);
    Ok(run.finish(t))
}

/// Algorithm 2 (pivot plus something from its lower cone). Requires a
/// maximal pivot with a non-empty lower cone.
pub fn replay_alg2(g: &PreWeightedGraph, pivot: usize) -> Result<ReplayOutcome> {
    require_maximal(g, pivot)?;
    if g.lower_cone(pivot).is_empty() {
        return Err(Error::Precondition(format!(
            "`{}` has an empty lower cone",
            g.label(pivot)
        )));
    }
    let mut run = Run::new(g, false);
    let t = alg2_steps(&mut run, pivot);
    Ok(run.finish(t))
}

/// Algorithm 3 (concepts without the pivot): deletes the pivot and its
/// lower cone from the graph, then runs algorithms 1 and 2 on the lowest
/// remaining maximal vertex.
pub fn replay_alg3(g: &PreWeightedGraph, pivot: usize, mode: RemovalMode) -> Result<ReplayOutcome> {
    require_maximal(g, pivot)?;
    let mut removed = g.lower_cone(pivot);
    removed.insert(pivot);
    let reduced = g.remove_vertices(&removed);
    let maximal = reduced.maximal_attrs();

    let mut run = Run::new(&reduced, mode == RemovalMode::KeepAttribute);
    let items = vec![
        run.set("removed", &removed),
        run.set("C", &maximal),
        run.set("alive", reduced.alive()),
        TraceItem::Note {
            text: format!("mode {mode}"),
        },
    ];
    run.event("step 15", items);

    let Some(next) = maximal.first() else {
        run.event(
            "step 16",
            vec![terminate(Termination::Normal, "no maximal attribute left")],
        );
        return Ok(run.finish(Termination::Normal));
    };
    let items = vec![run.select("c2", next)];
    run.event("step 16", items);

    run.prefix = "step 16/alg1 ".into();
    let t1 = alg1_steps(&mut run, next);
    let next_cone = reduced.lower_cone(next);
    let t2 = if next_cone.is_empty() {
        run.prefix.clear();
        let text = format!("algorithm 2 skipped: N+({}) = ∅", reduced.label(next));
        run.event("step 16", vec![TraceItem::Note { text }]);
        Termination::Normal
    } else {
        run.prefix = "step 16/alg2 ".into();
        alg2_steps(&mut run, next)
    };
    run.prefix.clear();

    let mut handled = next_cone;
    handled.insert(next);
    let rest = reduced.alive().difference(&handled);
    let termination = if t1 == Termination::UnspecifiedStep || t2 == Termination::UnspecifiedStep {
        run.event(
            "step 17",
            vec![terminate(
                Termination::UnspecifiedStep,
                "a nested run reached an undocumented step",
            )],
        );
        Termination::UnspecifiedStep
    } else if !rest.is_empty() {
        let items = vec![
            run.set("remaining", &rest),
            terminate(
                Termination::UnspecifiedStep,
                "iteration over the remaining vertices is undocumented",
            ),
        ];
        run.event("step 17", items);
        Termination::UnspecifiedStep
    } else {
        run.event(
            "step 16",
            vec![terminate(Termination::Normal, "every vertex handled")],
        );
        Termination::Normal
    };
    Ok(run.finish(termination))
}
