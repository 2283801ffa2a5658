//! Equational identities over the signature `(·, \, /)`.
//!
//! Terms are binary trees whose leaves are variables. An [`Identity`] is a
//! pair of terms, implicitly universally quantified over every variable that
//! occurs on either side.

mod hosszu;
pub mod laws;
mod parser;
mod transform;

use std::fmt;

pub use hosszu::{classify_variants, hosszu_variants, VariantClass, HOSSZU_NODES};
pub use parser::{parse_identity, parse_identity_file, parse_term, ParseError};
pub use transform::{canonicalize, class_key, dual, dual_term, rename, swap_sides};

/// One of the three fixed binary operation symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    /// Multiplication, written `*`.
    Mul,
    /// Left division, written `\`.
    LDiv,
    /// Right division, written `/`.
    RDiv,
}

impl Op {
    pub const ALL: [Op; 3] = [Op::Mul, Op::LDiv, Op::RDiv];

    pub fn symbol(self) -> char {
        match self {
            Op::Mul => '*',
            Op::LDiv => '\\',
            Op::RDiv => '/',
        }
    }

    pub fn from_symbol(c: char) -> Option<Op> {
        match c {
            '*' => Some(Op::Mul),
            '\\' => Some(Op::LDiv),
            '/' => Some(Op::RDiv),
            _ => None,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Op::Mul => 0,
            Op::LDiv => 1,
            Op::RDiv => 2,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    App(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn app(op: Op, left: Term, right: Term) -> Term {
        Term::App(op, Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(left: Term, right: Term) -> Term {
        Term::app(Op::Mul, left, right)
    }

    /// Variables in order of first occurrence (preorder, left to right).
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::App(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn ops(&self, out: &mut Vec<Op>) {
        if let Term::App(op, l, r) = self {
            if !out.contains(op) {
                out.push(*op);
            }
            l.ops(out);
            r.ops(out);
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    fn write_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::App(..) => {
                write!(f, "(")?;
                self.write_bare(f)?;
                write!(f, ")")
            }
        }
    }

    fn write_bare(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::App(op, l, r) => {
                l.write_atom(f)?;
                write!(f, " {op} ")?;
                r.write_atom(f)
            }
        }
    }
}

/// A top-level application is printed without its outer parentheses.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_bare(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Identity {
        Identity { lhs, rhs }
    }

    /// Variables of `lhs` then `rhs`, in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.lhs.collect_vars(&mut out);
        self.rhs.collect_vars(&mut out);
        out
    }

    /// Operation symbols used on either side.
    pub fn ops(&self) -> Vec<Op> {
        let mut out = Vec::new();
        self.lhs.ops(&mut out);
        self.rhs.ops(&mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Canonical text of an identity: every nested application parenthesized,
/// top-level applications bare.
pub fn format(identity: &Identity) -> String {
    identity.to_string()
}

impl std::str::FromStr for Identity {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_identity(s)
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}
