use std::fmt;

use thiserror::Error;

use super::{Algebra, Element, Predicate};
use crate::identity::{Identity, Op, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("no table for operation `{0}`")]
    MissingTable(Op),
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("element {value} is outside the carrier of order {order}")]
    OutOfCarrier { value: Element, order: usize },
}

/// Values for a list of variables, kept in binding order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<(String, Element)>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(Vec::new())
    }

    pub fn bind(mut self, var: &str, value: Element) -> Self {
        self.set(var, value);
        self
    }

    pub fn set(&mut self, var: &str, value: Element) {
        match self.0.iter_mut().find(|(v, _)| v == var) {
            Some(slot) => slot.1 = value,
            None => self.0.push((var.to_string(), value)),
        }
    }

    pub fn get(&self, var: &str) -> Option<Element> {
        self.0.iter().find(|(v, _)| v == var).map(|&(_, e)| e)
    }

    pub fn values(&self) -> Vec<Element> {
        self.0.iter().map(|&(_, e)| e).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Element)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}={e}")?;
        }
        Ok(())
    }
}

pub fn eval_term(
    algebra: &Algebra,
    term: &Term,
    assignment: &Assignment,
) -> Result<Element, EvalError> {
    match term {
        Term::Var(v) => {
            let e = assignment
                .get(v)
                .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?;
            if e as usize >= algebra.order() {
                return Err(EvalError::OutOfCarrier {
                    value: e,
                    order: algebra.order(),
                });
            }
            Ok(e)
        }
        Term::App(op, l, r) => {
            let table = algebra.table(*op).ok_or(EvalError::MissingTable(*op))?;
            let a = eval_term(algebra, l, assignment)? as usize;
            let b = eval_term(algebra, r, assignment)? as usize;
            Ok(table[a * algebra.order() + b])
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Identity(Identity),
    Predicate(Predicate),
    /// The inner subject was required to fail somewhere but holds.
    Negation(Box<Subject>),
}

impl Subject {
    fn holds_on(&self, algebra: &Algebra) -> Option<bool> {
        match self {
            Subject::Identity(id) => satisfies(algebra, id).ok().map(|v| v.holds()),
            Subject::Predicate(p) => Some(p.holds(algebra)),
            Subject::Negation(inner) => inner.holds_on(algebra).map(|h| !h),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Identity(id) => write!(f, "{id}"),
            Subject::Predicate(p) => write!(f, "{}", p.name()),
            Subject::Negation(inner) => write!(f, "not ({inner})"),
        }
    }
}

/// A concrete failure of an identity or predicate on one algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subject: Subject,
    pub assignment: Assignment,
    /// What goes wrong at the assignment, for predicates.
    pub detail: Option<String>,
}

impl Witness {
    /// Comma-separated values of the assignment, e.g. `0,1`.
    pub fn values_text(&self) -> String {
        self.assignment
            .values()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Re-evaluates the subject at the witness and reports whether it still
    /// fails there.
    pub fn reproduces(&self, algebra: &Algebra) -> bool {
        match &self.subject {
            Subject::Identity(id) => {
                let l = eval_term(algebra, &id.lhs, &self.assignment);
                let r = eval_term(algebra, &id.rhs, &self.assignment);
                matches!((l, r), (Ok(a), Ok(b)) if a != b)
            }
            Subject::Predicate(p) => p.fails_at(algebra, &self.assignment),
            Subject::Negation(_) => self.subject.holds_on(algebra) == Some(false),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails", self.subject)?;
        if !self.assignment.is_empty() {
            write!(f, " at {}", self.assignment)?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

// Term with variables replaced by their index in the identity's variable list.
enum Flat {
    Var(usize),
    App(usize, Box<Flat>, Box<Flat>),
}

fn flatten(t: &Term, vars: &[String], algebra: &Algebra) -> Result<Flat, EvalError> {
    Ok(match t {
        Term::Var(v) => Flat::Var(vars.iter().position(|x| x == v).expect("collected")),
        Term::App(op, l, r) => {
            if !algebra.has_table(*op) {
                return Err(EvalError::MissingTable(*op));
            }
            Flat::App(
                op.index(),
                Box::new(flatten(l, vars, algebra)?),
                Box::new(flatten(r, vars, algebra)?),
            )
        }
    })
}

fn eval_flat(f: &Flat, tables: &[&[Element]; 3], n: usize, vals: &[Element]) -> Element {
    match f {
        Flat::Var(i) => vals[*i],
        Flat::App(op, l, r) => {
            let a = eval_flat(l, tables, n, vals) as usize;
            let b = eval_flat(r, tables, n, vals) as usize;
            tables[*op][a * n + b]
        }
    }
}

/// Checks the identity under all `n^k` assignments, `k` the number of
/// distinct variables. The witness is the first failing assignment in
/// lexicographic order, variables ordered by first occurrence.
pub fn satisfies(algebra: &Algebra, identity: &Identity) -> Result<Verdict, EvalError> {
    let vars = identity.vars();
    let lhs = flatten(&identity.lhs, &vars, algebra)?;
    let rhs = flatten(&identity.rhs, &vars, algebra)?;
    let n = algebra.order();
    let tables = [Op::Mul, Op::LDiv, Op::RDiv].map(|op| algebra.table(op).unwrap_or(&[]));
    let k = vars.len();
    let mut vals = vec![0 as Element; k];
    loop {
        if eval_flat(&lhs, &tables, n, &vals) != eval_flat(&rhs, &tables, n, &vals) {
            let assignment = Assignment(vars.into_iter().zip(vals).collect());
            return Ok(Verdict::Fails(Witness {
                subject: Subject::Identity(identity.clone()),
                assignment,
                detail: None,
            }));
        }
        // odometer, last variable fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Verdict::Holds);
            }
            i -= 1;
            vals[i] += 1;
            if (vals[i] as usize) < n {
                break;
            }
            vals[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::{laws, parse_identity, parse_term};
    use crate::magma::named;

    #[test]
    fn z3_evaluation() {
        let z3 = named::cyclic_group(3);
        let t = parse_term("x * (y * z)").unwrap();
        let a = Assignment::new().bind("x", 1).bind("y", 2).bind("z", 0);
        assert_eq!(eval_term(&z3, &t, &a).unwrap(), 0);
    }

    #[test]
    fn projection_row() {
        let lp = named::left_projection(2);
        let t = parse_term("x * y").unwrap();
        let a = Assignment::new().bind("x", 1).bind("y", 0);
        assert_eq!(eval_term(&lp, &t, &a).unwrap(), 1);
        let x = parse_term("x").unwrap();
        assert_eq!(
            eval_term(&lp, &x, &Assignment::new().bind("x", 1)).unwrap(),
            1
        );
    }

    #[test]
    fn eval_errors() {
        let lp = named::left_projection(2);
        let t = parse_term("x / y").unwrap();
        let a = Assignment::new().bind("x", 1).bind("y", 0);
        assert_eq!(
            eval_term(&lp, &t, &a),
            Err(EvalError::MissingTable(Op::RDiv))
        );
        let t = parse_term("x * w").unwrap();
        assert_eq!(
            eval_term(&lp, &t, &a),
            Err(EvalError::UnboundVariable("w".into()))
        );
        assert!(satisfies(&lp, &laws::evans()[0]).is_err());
    }

    #[test]
    fn satisfaction_and_witness() {
        let lp = named::left_projection(2);
        assert!(satisfies(&lp, &laws::tarski()).unwrap().holds());
        let v = satisfies(&lp, &laws::commutative()).unwrap();
        let w = v.witness().unwrap();
        assert_eq!(w.assignment, Assignment::new().bind("x", 0).bind("y", 1));
        assert_eq!(w.values_text(), "0,1");
        assert!(w.reproduces(&lp));
        let z3 = named::cyclic_group(3);
        assert!(satisfies(&z3, &laws::cyclic()).unwrap().holds());
    }

    #[test]
    fn unbalanced_identity() {
        // x * x = y holds only on the trivial algebra
        let id = parse_identity("x * x = y").unwrap();
        assert!(satisfies(&named::cyclic_group(1), &id).unwrap().holds());
        assert!(!satisfies(&named::cyclic_group(2), &id).unwrap().holds());
    }
}
