//! Domain propagation over partially filled tables.
//!
//! Every cell of every synthesized table carries a bitmask of candidate
//! values. Cells are indexed slot-major, then row-major, where slot 0 is `*`
//! and the remaining slots are the synthesized division tables in `\`, `/`
//! order.

use std::sync::Arc;

use thiserror::Error;

use super::constraint::{Constraint, ConstraintSet};
use crate::identity::{Identity, Op, Term};
use crate::magma::{Algebra, Element, Predicate};

pub(crate) type Domain = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("contradiction: some cell has no remaining candidate")]
pub struct Contradiction;

#[derive(Debug, Clone, Copy)]
enum Node {
    Var(usize),
    App { slot: usize, l: usize, r: usize },
}

// Postorder node list; children precede their parent.
#[derive(Debug, Clone)]
struct CompiledIdentity {
    nodes: Vec<Node>,
    lhs: usize,
    rhs: usize,
    nvars: usize,
}

impl CompiledIdentity {
    fn compile(id: &Identity, slot_of: &[Option<usize>; 3]) -> CompiledIdentity {
        let vars = id.vars();
        let mut nodes = Vec::new();
        fn go(
            t: &Term,
            vars: &[String],
            slot_of: &[Option<usize>; 3],
            nodes: &mut Vec<Node>,
        ) -> usize {
            let node = match t {
                Term::Var(v) => Node::Var(vars.iter().position(|x| x == v).expect("collected")),
                Term::App(op, l, r) => {
                    let l = go(l, vars, slot_of, nodes);
                    let r = go(r, vars, slot_of, nodes);
                    let slot = slot_of[op.index()].expect("validated by ConstraintSet");
                    Node::App { slot, l, r }
                }
            };
            nodes.push(node);
            nodes.len() - 1
        }
        let lhs = go(&id.lhs, &vars, slot_of, &mut nodes);
        let rhs = go(&id.rhs, &vars, slot_of, &mut nodes);
        CompiledIdentity {
            nodes,
            lhs,
            rhs,
            nvars: vars.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Val {
    Known(u32),
    // both arguments known, the cell itself still open
    Cell(usize),
    Unknown,
}

/// A constraint set compiled for propagation.
#[derive(Debug, Clone)]
pub(crate) struct Problem {
    pub n: usize,
    pub slots: Vec<Op>,
    row_alldiff: bool,
    col_alldiff: bool,
    commutative: bool,
    identities: Vec<CompiledIdentity>,
    /// Constraints not enforced by propagation, decided on complete tables.
    pub leaf_checks: Vec<Constraint>,
    pub full: Domain,
}

impl Problem {
    pub fn compile(cs: &ConstraintSet) -> Problem {
        let n = cs.order();
        let slots = cs.synthesized().to_vec();
        let mut slot_of = [None; 3];
        for (i, op) in slots.iter().enumerate() {
            slot_of[op.index()] = Some(i);
        }
        let mut p = Problem {
            n,
            slots,
            row_alldiff: false,
            col_alldiff: false,
            commutative: false,
            identities: Vec::new(),
            leaf_checks: Vec::new(),
            full: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        };
        for c in cs.constraints() {
            match c {
                Constraint::Identity { identity, .. } if c.is_positive() => {
                    p.identities
                        .push(CompiledIdentity::compile(identity, &slot_of));
                }
                Constraint::Structural { predicate, .. } if c.is_positive() => {
                    use Predicate::*;
                    match predicate {
                        // on a finite carrier each of these makes every row
                        // (column) a permutation
                        LeftCancellative | LeftDivision => p.row_alldiff = true,
                        RightCancellative | RightDivision => p.col_alldiff = true,
                        Quasigroup => {
                            p.row_alldiff = true;
                            p.col_alldiff = true;
                        }
                        Commutative => p.commutative = true,
                        Associative => p.identities.push(CompiledIdentity::compile(
                            &crate::identity::laws::associative(),
                            &slot_of,
                        )),
                        HasLeftIdentity | HasRightIdentity | HasTwoSidedIdentity => {
                            p.leaf_checks.push(c.clone())
                        }
                    }
                }
                _ => p.leaf_checks.push(c.clone()),
            }
        }
        p
    }

    pub fn cells(&self) -> usize {
        self.slots.len() * self.n * self.n
    }

    pub fn initial(&self) -> Vec<Domain> {
        vec![self.full; self.cells()]
    }

    pub fn to_algebra(&self, dom: &[Domain]) -> Algebra {
        let nn = self.n * self.n;
        let value = |d: Domain| d.trailing_zeros() as Element;
        let mul = dom[..nn].iter().map(|&d| value(d)).collect();
        let mut alg = Algebra::new(self.n, mul).expect("complete table");
        for (i, &op) in self.slots.iter().enumerate().skip(1) {
            let cells = dom[i * nn..(i + 1) * nn]
                .iter()
                .map(|&d| value(d))
                .collect();
            alg = alg.with_table(op, cells).expect("complete table");
        }
        alg
    }

    /// Runs every propagator to a fixpoint.
    pub fn propagate(&self, dom: &mut [Domain]) -> Result<(), Contradiction> {
        if dom.contains(&0) {
            return Err(Contradiction);
        }
        let mut vals = Vec::new();
        let mut asg = Vec::new();
        loop {
            let mut changed = false;
            if self.row_alldiff {
                changed |= self.alldiff(dom, |r, i| r * self.n + i)?;
            }
            if self.col_alldiff {
                changed |= self.alldiff(dom, |c, i| i * self.n + c)?;
            }
            if self.commutative {
                changed |= self.symmetric(dom)?;
            }
            for id in &self.identities {
                changed |= self.identity(id, dom, &mut vals, &mut asg)?;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    // All-different over each line of the `*` table, including hidden
    // singles: a line of n cells over n values is a permutation.
    fn alldiff(
        &self,
        dom: &mut [Domain],
        cell: impl Fn(usize, usize) -> usize,
    ) -> Result<bool, Contradiction> {
        let n = self.n;
        let mut changed = false;
        for line in 0..n {
            let mut fixed: Domain = 0;
            for i in 0..n {
                let d = dom[cell(line, i)];
                if d.is_power_of_two() {
                    if fixed & d != 0 {
                        return Err(Contradiction);
                    }
                    fixed |= d;
                }
            }
            for i in 0..n {
                let c = cell(line, i);
                let d = dom[c];
                if !d.is_power_of_two() {
                    let nd = d & !fixed;
                    if nd == 0 {
                        return Err(Contradiction);
                    }
                    if nd != d {
                        dom[c] = nd;
                        changed = true;
                    }
                }
            }
            for v in 0..n {
                let bit = 1 << v;
                if fixed & bit != 0 {
                    continue;
                }
                let mut place = None;
                let mut count = 0;
                for i in 0..n {
                    if dom[cell(line, i)] & bit != 0 {
                        count += 1;
                        place = Some(cell(line, i));
                    }
                }
                match (count, place) {
                    (0, _) => return Err(Contradiction),
                    (1, Some(c)) if dom[c] != bit => {
                        dom[c] = bit;
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        Ok(changed)
    }

    fn symmetric(&self, dom: &mut [Domain]) -> Result<bool, Contradiction> {
        let n = self.n;
        let mut changed = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (i * n + j, j * n + i);
                let d = dom[a] & dom[b];
                if d == 0 {
                    return Err(Contradiction);
                }
                if d != dom[a] || d != dom[b] {
                    dom[a] = d;
                    dom[b] = d;
                    changed = true;
                }
            }
        }
        Ok(changed)
    }

    // Ground-instance filtering and unit propagation for one identity over
    // all n^k instances.
    fn identity(
        &self,
        id: &CompiledIdentity,
        dom: &mut [Domain],
        vals: &mut Vec<Val>,
        asg: &mut Vec<usize>,
    ) -> Result<bool, Contradiction> {
        let n = self.n;
        let nn = n * n;
        let mut changed = false;
        asg.clear();
        asg.resize(id.nvars, 0);
        vals.clear();
        vals.resize(id.nodes.len(), Val::Unknown);
        loop {
            for (i, node) in id.nodes.iter().enumerate() {
                vals[i] = match *node {
                    Node::Var(v) => Val::Known(asg[v] as u32),
                    Node::App { slot, l, r } => match (vals[l], vals[r]) {
                        (Val::Known(a), Val::Known(b)) => {
                            let c = slot * nn + a as usize * n + b as usize;
                            let d = dom[c];
                            if d.is_power_of_two() {
                                Val::Known(d.trailing_zeros())
                            } else {
                                Val::Cell(c)
                            }
                        }
                        _ => Val::Unknown,
                    },
                };
            }
            match (vals[id.lhs], vals[id.rhs]) {
                (Val::Known(a), Val::Known(b)) => {
                    if a != b {
                        return Err(Contradiction);
                    }
                }
                (Val::Known(v), Val::Cell(c)) | (Val::Cell(c), Val::Known(v)) => {
                    let bit = 1 << v;
                    if dom[c] & bit == 0 {
                        return Err(Contradiction);
                    }
                    dom[c] = bit;
                    changed = true;
                }
                (Val::Cell(a), Val::Cell(b)) if a != b => {
                    let d = dom[a] & dom[b];
                    if d == 0 {
                        return Err(Contradiction);
                    }
                    if d != dom[a] || d != dom[b] {
                        dom[a] = d;
                        dom[b] = d;
                        changed = true;
                    }
                }
                _ => {}
            }
            let mut i = id.nvars;
            loop {
                if i == 0 {
                    return Ok(changed);
                }
                i -= 1;
                asg[i] += 1;
                if asg[i] < n {
                    break;
                }
                asg[i] = 0;
            }
        }
    }
}

/// Partially filled tables for a constraint set, exposing the propagator
/// that drives the search.
#[derive(Debug, Clone)]
pub struct PartialTables {
    problem: Arc<Problem>,
    dom: Vec<Domain>,
}

impl PartialTables {
    /// All cells open, before any propagation.
    pub fn new(cs: &ConstraintSet) -> PartialTables {
        let problem = Arc::new(Problem::compile(cs));
        let dom = problem.initial();
        PartialTables { problem, dom }
    }

    fn index(&self, op: Op, row: usize, col: usize) -> usize {
        let slot = self
            .problem
            .slots
            .iter()
            .position(|&s| s == op)
            .expect("operation is synthesized");
        let n = self.problem.n;
        slot * n * n + row * n + col
    }

    pub fn domain(&self, op: Op, row: usize, col: usize) -> Vec<Element> {
        let d = self.dom[self.index(op, row, col)];
        (0..self.problem.n as Element)
            .filter(|&v| d & (1 << v) != 0)
            .collect()
    }

    pub fn is_decided(&self, op: Op, row: usize, col: usize) -> bool {
        self.dom[self.index(op, row, col)].is_power_of_two()
    }

    /// Fixes one cell without propagating.
    pub fn set(
        &mut self,
        op: Op,
        row: usize,
        col: usize,
        value: Element,
    ) -> Result<(), Contradiction> {
        let i = self.index(op, row, col);
        let bit = 1 << value;
        if self.dom[i] & bit == 0 {
            return Err(Contradiction);
        }
        self.dom[i] = bit;
        Ok(())
    }

    pub fn propagate(&mut self) -> Result<(), Contradiction> {
        self.problem.propagate(&mut self.dom)
    }

    /// `set` followed by `propagate`.
    pub fn assign(
        &mut self,
        op: Op,
        row: usize,
        col: usize,
        value: Element,
    ) -> Result<(), Contradiction> {
        self.set(op, row, col, value)?;
        self.propagate()
    }

    pub fn is_complete(&self) -> bool {
        self.dom.iter().all(|d| d.is_power_of_two())
    }

    pub fn to_algebra(&self) -> Option<Algebra> {
        self.is_complete()
            .then(|| self.problem.to_algebra(&self.dom))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::laws;

    fn tables(n: usize, cs: Vec<Constraint>) -> PartialTables {
        PartialTables::new(&ConstraintSet::new(n, cs).unwrap())
    }

    #[test]
    fn column_alldiff_prunes() {
        let mut t = tables(3, vec![Constraint::prop(Predicate::Quasigroup)]);
        for (c, v) in [0, 1, 2].into_iter().enumerate() {
            t.set(Op::Mul, 0, c, v).unwrap();
        }
        t.propagate().unwrap();
        assert_eq!(t.domain(Op::Mul, 1, 0), vec![1, 2]);
    }

    #[test]
    fn commutativity_mirrors_cells() {
        let mut t = tables(3, vec![Constraint::prop(Predicate::Commutative)]);
        t.assign(Op::Mul, 0, 2, 1).unwrap();
        assert_eq!(t.domain(Op::Mul, 2, 0), vec![1]);
    }

    #[test]
    fn identity_unit_propagation() {
        // x * x = x forces the diagonal once rows are known
        let idem = crate::identity::parse_identity("x * x = x").unwrap();
        let mut t = tables(2, vec![Constraint::holds(idem)]);
        t.propagate().unwrap();
        assert_eq!(t.domain(Op::Mul, 0, 0), vec![0]);
        assert_eq!(t.domain(Op::Mul, 1, 1), vec![1]);
        assert_eq!(t.domain(Op::Mul, 0, 1), vec![0, 1]);
    }

    #[test]
    fn detects_contradiction() {
        let mut t = tables(
            2,
            vec![
                Constraint::prop(Predicate::Quasigroup),
                Constraint::holds(laws::associative()),
            ],
        );
        t.set(Op::Mul, 0, 0, 0).unwrap();
        t.set(Op::Mul, 0, 1, 0).unwrap();
        assert_eq!(t.propagate(), Err(Contradiction));
    }
}
