//! Differential checking of the replays against the lattice oracle,
//! seeded fuzzing for new counterexamples, and greedy witness shrinking.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::{braces, FormalConcept, FormalContext};
use crate::error::{Error, Result};
use crate::graph::PreWeightedGraph;
use crate::lattice::{partition_fst, ConceptSet};
use crate::replay::{
    label_pair, replay_alg1, replay_alg2, replay_alg3, LabeledPair, RemovalMode, ReplayOutcome,
    Termination, TraceLog,
};
use crate::subset::{AttributeSet, ObjectSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Sound,
    Unsound,
    Incomplete,
    UnspecifiedStep,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Sound => "SOUND",
            Verdict::Unsound => "UNSOUND",
            Verdict::Incomplete => "INCOMPLETE",
            Verdict::UnspecifiedStep => "UNSPECIFIED_STEP",
        })
    }
}

/// Which replay a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    One,
    Two,
    Three(RemovalMode),
}

impl Algorithm {
    pub fn id(self) -> u8 {
        match self {
            Algorithm::One => 1,
            Algorithm::Two => 2,
            Algorithm::Three(_) => 3,
        }
    }

    pub fn mode(self) -> Option<RemovalMode> {
        match self {
            Algorithm::Three(m) => Some(m),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailedCheck {
    NotAConcept,
    WrongPartition,
}

impl fmt::Display for FailedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedCheck::NotAConcept => "not-a-concept",
            FailedCheck::WrongPartition => "wrong-partition",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An emitted pair that failed validation.
    Emitted {
        pair: LabeledPair,
        failed: FailedCheck,
    },
    /// A concept of the target set the replay never emitted.
    Missed { concept: LabeledPair },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefutationReport {
    pub fingerprint: String,
    pub pivot: String,
    pub algorithm: u8,
    pub mode: Option<RemovalMode>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub trace: TraceLog,
}

impl RefutationReport {
    pub fn algorithm_kind(&self) -> Algorithm {
        match (self.algorithm, self.mode) {
            (1, _) => Algorithm::One,
            (2, _) => Algorithm::Two,
            (_, Some(m)) => Algorithm::Three(m),
            _ => unreachable!("algorithm 3 reports always carry a mode"),
        }
    }

    /// One line, e.g. `cex1 alg1 pivot=c1: UNSOUND not-a-concept ⟨{3},{c1,c2}⟩`.
    pub fn summary(&self, name: &str) -> String {
        let mode = self.mode.map(|m| format!(" mode={m}")).unwrap_or_default();
        let witness = match &self.witness {
            Some(Witness::Emitted { pair, failed }) => format!(" {failed} {pair}"),
            Some(Witness::Missed { concept }) => format!(" missed {concept}"),
            None => String::new(),
        };
        format!(
            "{name} alg{}{mode} pivot={}: {}{witness}",
            self.algorithm, self.pivot, self.verdict
        )
    }
}

/// Dimensions plus every row as a hex bitmask (attribute 0 = lowest bit).
pub fn fingerprint(ctx: &FormalContext) -> String {
    let m = ctx.num_attributes();
    let digits = m.div_ceil(4);
    let rows: Vec<String> = (0..ctx.num_objects())
        .map(|o| {
            (0..digits)
                .rev()
                .map(|d| {
                    let nibble = (0..4)
                        .filter(|&k| {
                            let a = d * 4 + k;
                            a < m && ctx.incident(o, a)
                        })
                        .fold(0u32, |acc, k| acc | 1 << k);
                    char::from_digit(nibble, 16).expect("nibble < 16")
                })
                .collect()
        })
        .collect();
    format!("{}x{}:{}", ctx.num_objects(), m, rows.join("-"))
}

fn label_concept(ctx: &FormalContext, c: &FormalConcept) -> LabeledPair {
    LabeledPair {
        extent: ctx.object_labels(&c.extent),
        intent: ctx.attribute_labels(&c.intent),
    }
}

fn judge(
    ctx: &FormalContext,
    g: &PreWeightedGraph,
    pivot: usize,
    algorithm: Algorithm,
    outcome: ReplayOutcome,
    target: &ConceptSet,
) -> RefutationReport {
    for c in target {
        assert!(
            ctx.is_concept(&c.extent, &c.intent),
            "oracle produced a non-concept"
        );
    }
    let mut verdict = Verdict::Sound;
    let mut witness = None;
    for p in &outcome.emitted {
        let failed = if !ctx.is_concept(&p.extent, &p.intent) {
            Some(FailedCheck::NotAConcept)
        } else if !target.contains(&FormalConcept {
            extent: p.extent.clone(),
            intent: p.intent.clone(),
        }) {
            Some(FailedCheck::WrongPartition)
        } else {
            None
        };
        if let Some(failed) = failed {
            verdict = Verdict::Unsound;
            witness = Some(Witness::Emitted {
                pair: label_pair(g, p),
                failed,
            });
            break;
        }
    }
    if verdict == Verdict::Sound {
        if outcome.termination == Termination::UnspecifiedStep {
            verdict = Verdict::UnspecifiedStep;
        } else if let Some(missed) = target.iter().find(|c| {
            !outcome
                .emitted
                .iter()
                .any(|p| p.extent == c.extent && p.intent == c.intent)
        }) {
            verdict = Verdict::Incomplete;
            witness = Some(Witness::Missed {
                concept: label_concept(ctx, missed),
            });
        }
    }
    RefutationReport {
        fingerprint: fingerprint(ctx),
        pivot: ctx.attributes()[pivot].clone(),
        algorithm: algorithm.id(),
        mode: algorithm.mode(),
        verdict,
        witness,
        trace: outcome.trace,
    }
}

/// Replays algorithm 1 and judges it against the `F` part of the oracle.
pub fn check_alg1(ctx: &FormalContext, pivot: usize) -> Result<RefutationReport> {
    check(ctx, pivot, Algorithm::One)
}

/// Replays algorithm 2 and judges it against the `S` part of the oracle.
pub fn check_alg2(ctx: &FormalContext, pivot: usize) -> Result<RefutationReport> {
    check(ctx, pivot, Algorithm::Two)
}

/// Replays algorithm 3 under `mode` and judges it against the `T` part.
pub fn check_alg3(
    ctx: &FormalContext,
    pivot: usize,
    mode: RemovalMode,
) -> Result<RefutationReport> {
    check(ctx, pivot, Algorithm::Three(mode))
}

pub fn check(ctx: &FormalContext, pivot: usize, algorithm: Algorithm) -> Result<RefutationReport> {
    let g = PreWeightedGraph::build(ctx);
    let outcome = match algorithm {
        Algorithm::One => replay_alg1(&g, pivot)?,
        Algorithm::Two => replay_alg2(&g, pivot)?,
        Algorithm::Three(mode) => replay_alg3(&g, pivot, mode)?,
    };
    let partition = partition_fst(ctx, pivot);
    let target = match algorithm {
        Algorithm::One => &partition.f,
        Algorithm::Two => &partition.s,
        Algorithm::Three(_) => &partition.t,
    };
    Ok(judge(ctx, &g, pivot, algorithm, outcome, target))
}

/// Every check whose precondition holds for `pivot`: algorithm 1,
/// algorithm 2 (non-empty lower cone only), and algorithm 3 in both modes.
pub fn check_all(ctx: &FormalContext, pivot: usize) -> Result<Vec<RefutationReport>> {
    let g = PreWeightedGraph::build(ctx);
    if !g.maximal_attrs().contains(pivot) {
        return Err(Error::Precondition(format!(
            "`{}` is not a maximal attribute",
            ctx.attributes()[pivot]
        )));
    }
    let mut algorithms = vec![Algorithm::One];
    if !g.lower_cone(pivot).is_empty() {
        algorithms.push(Algorithm::Two);
    }
    algorithms.push(Algorithm::Three(RemovalMode::DropAttribute));
    algorithms.push(Algorithm::Three(RemovalMode::KeepAttribute));
    algorithms
        .into_iter()
        .map(|a| check(ctx, pivot, a))
        .collect()
}

/// Parameters of a seeded fuzz run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub iterations: usize,
    pub max_objects: usize,
    pub max_attributes: usize,
    pub density: f64,
    pub require_nonempty_rows_cols: bool,
}

pub const MAX_FUZZ_OBJECTS: usize = 8;
pub const MAX_FUZZ_ATTRIBUTES: usize = 6;

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            iterations: 100,
            max_objects: MAX_FUZZ_OBJECTS,
            max_attributes: MAX_FUZZ_ATTRIBUTES,
            density: 0.4,
            require_nonempty_rows_cols: false,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_FUZZ_OBJECTS).contains(&self.max_objects) {
            return Err(Error::Precondition(format!(
                "max_objects must be in 1..={MAX_FUZZ_OBJECTS}"
            )));
        }
        if !(1..=MAX_FUZZ_ATTRIBUTES).contains(&self.max_attributes) {
            return Err(Error::Precondition(format!(
                "max_attributes must be in 1..={MAX_FUZZ_ATTRIBUTES}"
            )));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::Precondition("density must be in [0, 1]".into()));
        }
        Ok(())
    }
}

/// Draws one context: sizes uniform in `1..=max`, each cell a cross with
/// probability `density`.
pub fn random_context<R: RngExt>(rng: &mut R, cfg: &FuzzConfig) -> FormalContext {
    let n = rng.random_range(1..=cfg.max_objects);
    let m = rng.random_range(1..=cfg.max_attributes);
    let mut rows: Vec<AttributeSet> = (0..n)
        .map(|_| AttributeSet::from_indices(m, (0..m).filter(|_| rng.random_bool(cfg.density))))
        .collect();
    if cfg.require_nonempty_rows_cols {
        for row in rows.iter_mut() {
            if row.is_empty() {
                row.insert(rng.random_range(0..m));
            }
        }
        for a in 0..m {
            if rows.iter().all(|r| !r.contains(a)) {
                let o = rng.random_range(0..n);
                rows[o].insert(a);
            }
        }
    }
    FormalContext::from_rows(
        (1..=n).map(|i| i.to_string()).collect(),
        (1..=m).map(|i| format!("a{i}")).collect(),
        rows,
    )
    .expect("generated context is well formed")
}

/// The deterministic sequence of contexts a fuzz run examines.
pub fn fuzz_contexts(cfg: &FuzzConfig) -> Result<Vec<FormalContext>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok((0..cfg.iterations)
        .map(|_| random_context(&mut rng, cfg))
        .collect())
}

/// A failing report together with the context that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Finding {
    pub iteration: usize,
    pub context: FormalContext,
    pub report: RefutationReport,
}

/// Runs every applicable check on every maximal pivot of every generated
/// context and keeps the `UNSOUND` and `INCOMPLETE` reports, in
/// generation order.
pub fn fuzz(cfg: &FuzzConfig) -> Result<Vec<Finding>> {
    let mut findings = Vec::new();
    for (iteration, ctx) in fuzz_contexts(cfg)?.into_iter().enumerate() {
        let g = PreWeightedGraph::build(&ctx);
        for pivot in g.maximal_attrs().iter() {
            for report in check_all(&ctx, pivot)? {
                if matches!(report.verdict, Verdict::Unsound | Verdict::Incomplete) {
                    findings.push(Finding {
                        iteration,
                        context: ctx.clone(),
                        report,
                    });
                }
            }
        }
    }
    Ok(findings)
}

fn recheck(
    ctx: &FormalContext,
    pivot: &str,
    algorithm: Algorithm,
    verdict: Verdict,
) -> Option<RefutationReport> {
    let pivot = ctx.attribute_index(pivot).ok()?;
    check(ctx, pivot, algorithm)
        .ok()
        .filter(|r| r.verdict == verdict)
}

/// Greedily deletes objects, then attributes, while the same check keeps
/// the same verdict, until no single deletion does.
pub fn shrink(
    report: &RefutationReport,
    ctx: &FormalContext,
) -> Result<(FormalContext, RefutationReport)> {
    if !matches!(report.verdict, Verdict::Unsound | Verdict::Incomplete) {
        return Err(Error::Precondition(format!(
            "cannot shrink a {} report",
            report.verdict
        )));
    }
    let algorithm = report.algorithm_kind();
    let mut current = ctx.clone();
    let mut current_report = report.clone();
    loop {
        let mut progressed = false;
        let mut o = 0;
        while o < current.num_objects() && current.num_objects() > 1 {
            let mut keep = ObjectSet::full(current.num_objects());
            keep.remove(o);
            let candidate =
                current.restrict(&keep, &AttributeSet::full(current.num_attributes()))?;
            if let Some(r) = recheck(&candidate, &report.pivot, algorithm, report.verdict) {
                current = candidate;
                current_report = r;
                progressed = true;
            } else {
                o += 1;
            }
        }
        let mut a = 0;
        while a < current.num_attributes() && current.num_attributes() > 1 {
            if current.attributes()[a] == report.pivot {
                a += 1;
                continue;
            }
            let mut keep = AttributeSet::full(current.num_attributes());
            keep.remove(a);
            let candidate = current.restrict(&ObjectSet::full(current.num_objects()), &keep)?;
            if let Some(r) = recheck(&candidate, &report.pivot, algorithm, report.verdict) {
                current = candidate;
                current_report = r;
                progressed = true;
            } else {
                a += 1;
            }
        }
        if !progressed {
            return Ok((current, current_report));
        }
    }
}

/// Plain-text rendering of a batch of reports: one summary line each.
pub fn text_summary<'a>(
    reports: impl IntoIterator<Item = (&'a str, &'a RefutationReport)>,
) -> String {
    let mut out = String::new();
    for (name, r) in reports {
        out.push_str(&r.summary(name));
        out.push('\n');
    }
    out
}

/// Row-major cross table, used in human-readable output.
pub fn render_table(ctx: &FormalContext) -> String {
    let mut out = format!("{}\n", braces(ctx.attributes()));
    for o in 0..ctx.num_objects() {
        out.push_str(&format!(
            "{}: {}\n",
            ctx.objects()[o],
            braces(&ctx.attribute_labels(ctx.row(o)))
        ));
    }
    out
}
