use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::constraint::{Constraint, ConstraintSet};
use super::propagate::{Domain, Problem};
use crate::identity::Op;
use crate::magma::{
    companion_completions, is_canonical, orbit_size, Algebra, CompanionPolicy, Verdict, Witness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    First,
    #[default]
    All,
    Count,
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Mode::First),
            "all" => Ok(Mode::All),
            "count" => Ok(Mode::Count),
            _ => Err(format!("unknown mode `{s}` (first, all, count)")),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    pub mode: Mode,
    /// Emit one canonical representative per isomorphism class.
    pub up_to_iso: bool,
    /// With `up_to_iso`, restrict `0 * 0` to `{0, 1}`, which every canonical
    /// form satisfies. Ignored otherwise.
    pub symmetry_breaking: bool,
    /// Maximum number of branching decisions; `None` is unbounded.
    pub budget: Option<u64>,
    /// Worker threads; 0 or 1 runs sequentially.
    pub parallel: usize,
}

impl SearchOptions {
    pub fn mode(mode: Mode) -> Self {
        SearchOptions {
            mode,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Complete,
    /// The node budget ran out; absence of further models is not established.
    BudgetExhausted,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Statistics {
    pub nodes: u64,
    pub models: u64,
    /// Sum of orbit sizes of the emitted models when searching up to
    /// isomorphism.
    pub labeled_models: Option<u64>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Empty in `Mode::Count`.
    pub models: Vec<Algebra>,
    pub count: u64,
    pub stats: Statistics,
    pub status: SearchStatus,
}

struct Engine<'a, F> {
    p: &'a Problem,
    up_to_iso: bool,
    budget: Option<u64>,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    visit: F,
    models: u64,
    labeled: u64,
    stopped: bool,
    exhausted: bool,
}

impl<F: FnMut(&Algebra) -> ControlFlow<()>> Engine<'_, F> {
    fn dfs(&mut self, dom: &[Domain]) {
        let Some(cell) = dom.iter().position(|d| !d.is_power_of_two()) else {
            return self.leaf(dom);
        };
        let mut values = dom[cell];
        while values != 0 {
            let bit = values & values.wrapping_neg();
            values &= !bit;
            let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if self.budget.is_some_and(|b| used > b) {
                self.exhausted = true;
                self.stopped = true;
            }
            if self.stopped || self.abort.load(Ordering::Relaxed) {
                self.stopped = true;
                return;
            }
            let mut next = dom.to_vec();
            next[cell] = bit;
            if self.p.propagate(&mut next).is_ok() {
                self.dfs(&next);
                if self.stopped {
                    return;
                }
            }
        }
    }

    fn leaf(&mut self, dom: &[Domain]) {
        let alg = self.p.to_algebra(dom);
        for c in &self.p.leaf_checks {
            if !matches!(c.check(&alg), Ok(Verdict::Holds)) {
                return;
            }
        }
        if self.up_to_iso {
            if !is_canonical(&alg) {
                return;
            }
            self.labeled += orbit_size(&alg);
        }
        self.models += 1;
        if (self.visit)(&alg).is_break() {
            self.stopped = true;
        }
    }
}

fn root(p: &Problem, opts: &SearchOptions) -> Option<Vec<Domain>> {
    let mut dom = p.initial();
    if opts.up_to_iso && opts.symmetry_breaking {
        dom[0] &= 0b11;
    }
    p.propagate(&mut dom).ok().map(|_| dom)
}

/// Sequential depth-first search calling `visit` on every model in
/// lexicographic order of the concatenated tables. `visit` may stop the
/// search early; `opts.mode` and `opts.parallel` are ignored.
pub fn for_each_model(
    cs: &ConstraintSet,
    opts: &SearchOptions,
    visit: impl FnMut(&Algebra) -> ControlFlow<()>,
) -> (Statistics, SearchStatus) {
    let start = Instant::now();
    let p = Problem::compile(cs);
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let mut e = Engine {
        p: &p,
        up_to_iso: opts.up_to_iso,
        budget: opts.budget,
        nodes: &nodes,
        abort: &abort,
        visit,
        models: 0,
        labeled: 0,
        stopped: false,
        exhausted: false,
    };
    if let Some(dom) = root(&p, opts) {
        e.dfs(&dom);
    }
    let stats = Statistics {
        nodes: nodes.load(Ordering::Relaxed),
        models: e.models,
        labeled_models: opts.up_to_iso.then_some(e.labeled),
        elapsed: start.elapsed(),
    };
    let status = if e.exhausted {
        SearchStatus::BudgetExhausted
    } else {
        SearchStatus::Complete
    };
    (stats, status)
}

/// Complete search over all tables of the synthesized symbols.
///
/// With `parallel > 1` the values of the first open cell are explored by
/// separate workers; results are merged in value order, so the emitted list
/// matches the sequential one.
pub fn search(cs: &ConstraintSet, opts: &SearchOptions) -> SearchOutcome {
    if opts.parallel <= 1 {
        let mut models = Vec::new();
        let keep = opts.mode != Mode::Count;
        let first = opts.mode == Mode::First;
        let (stats, status) = for_each_model(cs, opts, |a| {
            if keep {
                models.push(a.clone());
            }
            if first {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        return SearchOutcome {
            models,
            count: stats.models,
            stats,
            status,
        };
    }
    parallel_search(cs, opts)
}

struct Branch {
    models: Vec<Algebra>,
    count: u64,
    labeled: u64,
    exhausted: bool,
}

fn parallel_search(cs: &ConstraintSet, opts: &SearchOptions) -> SearchOutcome {
    let start = Instant::now();
    let p = Problem::compile(cs);
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let mut branches: Vec<Vec<Domain>> = Vec::new();
    if let Some(dom) = root(&p, opts) {
        match dom.iter().position(|d| !d.is_power_of_two()) {
            None => branches.push(dom),
            Some(cell) => {
                let mut values = dom[cell];
                while values != 0 {
                    let bit = values & values.wrapping_neg();
                    values &= !bit;
                    nodes.fetch_add(1, Ordering::Relaxed);
                    let mut next = dom.clone();
                    next[cell] = bit;
                    if p.propagate(&mut next).is_ok() {
                        branches.push(next);
                    }
                }
            }
        }
    }
    let run = |dom: &Vec<Domain>| {
        let mut models = Vec::new();
        let keep = opts.mode != Mode::Count;
        let first = opts.mode == Mode::First;
        let mut e = Engine {
            p: &p,
            up_to_iso: opts.up_to_iso,
            budget: opts.budget,
            nodes: &nodes,
            abort: &abort,
            visit: |a: &Algebra| {
                if keep {
                    models.push(a.clone());
                }
                if first {
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            },
            models: 0,
            labeled: 0,
            stopped: false,
            exhausted: false,
        };
        e.dfs(dom);
        if e.exhausted {
            abort.store(true, Ordering::Relaxed);
        }
        let (count, labeled, exhausted) = (e.models, e.labeled, e.exhausted);
        Branch {
            models,
            count,
            labeled,
            exhausted,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.parallel)
        .build()
        .expect("thread pool");
    let results: Vec<Branch> = pool.install(|| branches.par_iter().map(run).collect());

    let exhausted = results.iter().any(|b| b.exhausted);
    let mut models = Vec::new();
    let mut count = 0;
    let mut labeled = 0;
    for b in results {
        if opts.mode == Mode::First && count > 0 {
            break;
        }
        count += b.count;
        labeled += b.labeled;
        models.extend(b.models);
    }
    SearchOutcome {
        models,
        count,
        stats: Statistics {
            nodes: nodes.load(Ordering::Relaxed),
            models: count,
            labeled_models: opts.up_to_iso.then_some(labeled),
            elapsed: start.elapsed(),
        },
        status: if exhausted {
            SearchStatus::BudgetExhausted
        } else {
            SearchStatus::Complete
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// No model of the hypotheses violates the conclusion at any order up to
    /// the bound.
    None,
    Found {
        algebra: Algebra,
        witness: Witness,
    },
    /// The budget ran out at this order.
    Inconclusive {
        order: usize,
    },
}

/// Looks for the least-order model of `hypotheses` that violates
/// `conclusion`, trying orders `1..=max_order` in turn.
///
/// `synthesized` lists division tables searched alongside `*`. When
/// `policy` derives companions, the conclusion is checked against every
/// companion completion of each hypothesis model; otherwise the negated
/// conclusion joins the search directly.
pub fn find_counterexample(
    hypotheses: &[Constraint],
    synthesized: &[Op],
    conclusion: &Constraint,
    policy: CompanionPolicy,
    max_order: usize,
    budget: Option<u64>,
) -> Refutation {
    let opts = SearchOptions {
        mode: Mode::First,
        budget,
        ..Default::default()
    };
    for n in 1..=max_order {
        if policy == CompanionPolicy::None {
            let mut cs = hypotheses.to_vec();
            cs.push(conclusion.negated());
            let Ok(cs) = ConstraintSet::with_ops(n, cs, synthesized) else {
                return Refutation::None;
            };
            let out = search(&cs, &opts);
            if let Some(algebra) = out.models.into_iter().next() {
                let witness = match conclusion.check(&algebra) {
                    Ok(Verdict::Fails(w)) => w,
                    other => unreachable!("search emitted a non-violating model: {other:?}"),
                };
                return Refutation::Found { algebra, witness };
            }
            if out.status == SearchStatus::BudgetExhausted {
                return Refutation::Inconclusive { order: n };
            }
        } else {
            let Ok(cs) = ConstraintSet::with_ops(n, hypotheses.to_vec(), synthesized) else {
                return Refutation::None;
            };
            let mut found = None;
            let (_, status) = for_each_model(&cs, &opts, |alg| {
                match violation_with_companions(alg, conclusion, policy) {
                    Some(hit) => {
                        found = Some(hit);
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                }
            });
            if let Some((algebra, witness)) = found {
                return Refutation::Found { algebra, witness };
            }
            if status == SearchStatus::BudgetExhausted {
                return Refutation::Inconclusive { order: n };
            }
        }
    }
    Refutation::None
}

/// First companion completion of `alg` on which `conclusion` fails. When no
/// companion exists the division algebra the conclusion talks about does not
/// exist, and nothing is reported.
pub(crate) fn violation_with_companions(
    alg: &Algebra,
    conclusion: &Constraint,
    policy: CompanionPolicy,
) -> Option<(Algebra, Witness)> {
    let completions = companion_completions(alg, policy).ok()?;
    completions
        .into_iter()
        .find_map(|c| match conclusion.check(&c) {
            Ok(Verdict::Holds) => None,
            Ok(Verdict::Fails(w)) => Some((c, w)),
            Err(e) => panic!("conclusion `{conclusion}` cannot be evaluated: {e}"),
        })
}
