use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use super::catalog::{catalog, lookup, LemmaKind, LemmaSpec};
use crate::finder::{
    for_each_model, search, violation_with_companions, ConstraintSet, Mode, SearchOptions,
    SearchStatus,
};
use crate::identity::Op;
use crate::magma::{
    canonical_form, companion_completions, left_companion, right_companion, Algebra, Verdict,
    Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Implication: no counterexample at any order up to the bound.
    Verified,
    /// Existence: a model was found and matches the expected one.
    Witnessed(Algebra),
    Counterexample {
        order: usize,
        algebra: Algebra,
        witness: Witness,
    },
    /// Existence: a model was found but it is not the expected one.
    WrongWitness(Algebra),
    /// Existence: no model up to the bound.
    NoWitness,
    Inconclusive {
        order: usize,
    },
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Outcome::Verified => "verified",
            Outcome::Witnessed(_) => "witnessed",
            Outcome::Counterexample { .. } => "counterexample",
            Outcome::WrongWitness(_) => "wrong-witness",
            Outcome::NoWitness => "no-witness",
            Outcome::Inconclusive { .. } => "inconclusive",
        }
    }

    /// Whether the claim came out as stated.
    pub fn is_success(&self) -> bool {
        matches!(self, Outcome::Verified | Outcome::Witnessed(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub id: String,
    pub label: String,
    pub max_order: usize,
    /// Models of the hypotheses examined at orders `1..=max_order` (fewer
    /// entries when the run stopped early).
    pub models_per_order: Vec<u64>,
    /// Models on which a derived companion did not exist, so the division
    /// algebra named in the conclusion is absent.
    pub without_companion: u64,
    pub nodes: u64,
    pub outcome: Outcome,
    pub elapsed: Duration,
    pub note: String,
}

impl VerificationReport {
    pub fn models_examined(&self) -> u64 {
        self.models_per_order.iter().sum()
    }
}

pub fn verify(
    id: &str,
    max_order: usize,
    budget: Option<u64>,
) -> Result<VerificationReport, HarnessError> {
    let spec = lookup(id).ok_or_else(|| HarnessError::UnknownLemma(id.to_string()))?;
    Ok(verify_spec(&spec, max_order, budget))
}

/// Checks one claim on every model of order `1..=max_order`.
pub fn verify_spec(spec: &LemmaSpec, max_order: usize, budget: Option<u64>) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport {
        id: spec.id.to_string(),
        label: spec.label.to_string(),
        max_order,
        models_per_order: Vec::new(),
        without_companion: 0,
        nodes: 0,
        outcome: Outcome::Verified,
        elapsed: Duration::ZERO,
        note: spec.note.clone(),
    };
    report.outcome = match &spec.kind {
        LemmaKind::Implication => implication(spec, max_order, budget, &mut report),
        LemmaKind::Existence { expected } => {
            existence(spec, expected, max_order, budget, &mut report)
        }
    };
    report.elapsed = start.elapsed();
    report
}

fn implication(
    spec: &LemmaSpec,
    max_order: usize,
    budget: Option<u64>,
    report: &mut VerificationReport,
) -> Outcome {
    let opts = SearchOptions {
        budget,
        ..Default::default()
    };
    for n in 1..=max_order {
        let cs = ConstraintSet::with_ops(n, spec.hypotheses.clone(), &spec.synthesized)
            .expect("catalog entries are well-formed");
        let mut found = None;
        let mut missing = 0;
        let (stats, status) = for_each_model(&cs, &opts, |alg| {
            if companion_completions(alg, spec.companion_policy).is_err() {
                missing += 1;
                return ControlFlow::Continue(());
            }
            for c in &spec.conclusions {
                if let Some(hit) = violation_with_companions(alg, c, spec.companion_policy) {
                    found = Some(hit);
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        report.models_per_order.push(stats.models);
        report.without_companion += missing;
        report.nodes += stats.nodes;
        if let Some((algebra, witness)) = found {
            return Outcome::Counterexample {
                order: n,
                algebra,
                witness,
            };
        }
        if status == SearchStatus::BudgetExhausted {
            return Outcome::Inconclusive { order: n };
        }
    }
    Outcome::Verified
}

fn existence(
    spec: &LemmaSpec,
    expected: &Algebra,
    max_order: usize,
    budget: Option<u64>,
    report: &mut VerificationReport,
) -> Outcome {
    let opts = SearchOptions {
        mode: Mode::First,
        budget,
        ..Default::default()
    };
    for n in 1..=max_order {
        let mut all = spec.hypotheses.clone();
        all.extend(spec.conclusions.iter().cloned());
        let cs = ConstraintSet::with_ops(n, all, &spec.synthesized)
            .expect("catalog entries are well-formed");
        let out = search(&cs, &opts);
        report.models_per_order.push(out.count);
        report.nodes += out.stats.nodes;
        if let Some(model) = out.models.into_iter().next() {
            return if canonical_form(&model) == canonical_form(expected) {
                Outcome::Witnessed(model)
            } else {
                Outcome::WrongWitness(model)
            };
        }
        if out.status == SearchStatus::BudgetExhausted {
            return Outcome::Inconclusive { order: n };
        }
    }
    Outcome::NoWitness
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub max_order: usize,
    pub reports: Vec<VerificationReport>,
    pub elapsed: Duration,
}

impl Summary {
    pub fn all_succeeded(&self) -> bool {
        self.reports.iter().all(|r| r.outcome.is_success())
    }

    pub fn any_inconclusive(&self) -> bool {
        self.reports
            .iter()
            .any(|r| matches!(r.outcome, Outcome::Inconclusive { .. }))
    }
}

/// Verifies every catalog entry up to `max_order`. Entries run on up to
/// `parallel` threads; reports keep catalog order.
pub fn verify_all(max_order: usize, budget: Option<u64>, parallel: usize) -> Summary {
    verify_specs(&catalog(), max_order, budget, parallel)
}

pub fn verify_specs(
    specs: &[LemmaSpec],
    max_order: usize,
    budget: Option<u64>,
    parallel: usize,
) -> Summary {
    let start = Instant::now();
    let reports = if parallel > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(parallel)
            .build()
            .expect("thread pool");
        pool.install(|| {
            specs
                .par_iter()
                .map(|s| verify_spec(s, max_order, budget))
                .collect()
        })
    } else {
        specs
            .iter()
            .map(|s| verify_spec(s, max_order, budget))
            .collect()
    };
    Summary {
        max_order,
        reports,
        elapsed: start.elapsed(),
    }
}

/// Result of checking a claim against one given algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraCheck {
    /// Hypotheses and conclusions all hold.
    Holds,
    HypothesisFails(Witness),
    ConclusionFails {
        algebra: Algebra,
        witness: Witness,
    },
}

/// Checks hypotheses and conclusions of `spec` on `algebra`.
///
/// Division tables the hypotheses need are taken from the algebra, or
/// derived by the least-preimage rule when absent. Conclusions with a
/// companion policy are checked against every valid companion; a missing
/// companion counts as a failed division hypothesis.
pub fn check_on_algebra(spec: &LemmaSpec, algebra: &Algebra) -> AlgebraCheck {
    let mut base = algebra.clone();
    for &op in &spec.synthesized {
        if base.has_table(op) {
            continue;
        }
        let derived = match op {
            Op::LDiv => left_companion(&base),
            Op::RDiv => right_companion(&base),
            Op::Mul => continue,
        };
        match derived {
            Ok(a) => base = a,
            Err(e) => return AlgebraCheck::HypothesisFails(missing_table(op, e.to_string())),
        }
    }
    for h in &spec.hypotheses {
        match h.check(&base) {
            Ok(Verdict::Holds) => {}
            Ok(Verdict::Fails(w)) => return AlgebraCheck::HypothesisFails(w),
            Err(e) => return AlgebraCheck::HypothesisFails(missing_table(Op::Mul, e.to_string())),
        }
    }
    if let Err(e) = companion_completions(&base, spec.companion_policy) {
        let op = if spec.companion_policy.left() {
            Op::LDiv
        } else {
            Op::RDiv
        };
        return AlgebraCheck::HypothesisFails(missing_table(op, e.to_string()));
    }
    for c in &spec.conclusions {
        if let Some((algebra, witness)) = violation_with_companions(&base, c, spec.companion_policy)
        {
            return AlgebraCheck::ConclusionFails { algebra, witness };
        }
    }
    AlgebraCheck::Holds
}

fn missing_table(op: Op, detail: String) -> Witness {
    use crate::magma::{Predicate, Subject};
    let predicate = match op {
        Op::LDiv => Predicate::LeftDivision,
        Op::RDiv => Predicate::RightDivision,
        Op::Mul => Predicate::Quasigroup,
    };
    Witness {
        subject: Subject::Predicate(predicate),
        assignment: Default::default(),
        detail: Some(detail),
    }
}
