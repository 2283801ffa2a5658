//! Finite algebras given by operation tables.

mod companion;
mod eval;
mod iso;
pub mod named;
mod properties;
mod table_file;

use std::fmt;

use thiserror::Error;

use crate::identity::Op;

pub use companion::{
    all_left_companions, all_right_companions, companion_completions, left_companion,
    right_companion, CompanionError, CompanionPolicy,
};
pub use eval::{eval_term, satisfies, Assignment, EvalError, Subject, Verdict, Witness};
pub use iso::{
    automorphism_count, canonical_form, is_canonical, is_isomorphic, orbit_size, permute,
};
pub use properties::{check_predicate, property_report, Predicate, PropertyReport};
pub use table_file::{
    read_table, read_table_file, write_table, write_table_file, TableFormatError,
};

pub type Element = u8;

/// Largest supported carrier size.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order must be between 1 and {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("table for `{op}` has {got} cells, expected {expected}")]
    WrongSize { op: Op, got: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) of `{op}` is outside 0..{order}")]
    OutOfRange {
        op: Op,
        row: usize,
        col: usize,
        value: Element,
        order: usize,
    },
}

/// A carrier `{0, .., n-1}` with a mandatory `*` table and optional `\` and
/// `/` tables, each stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Algebra {
    order: usize,
    tables: [Option<Vec<Element>>; 3],
}

impl Algebra {
    pub fn new(order: usize, mul: Vec<Element>) -> Result<Algebra, AlgebraError> {
        if order == 0 || order > MAX_ORDER {
            return Err(AlgebraError::BadOrder(order));
        }
        let a = Algebra {
            order,
            tables: [None, None, None],
        };
        a.with_table(Op::Mul, mul)
    }

    pub fn from_fn(
        order: usize,
        f: impl Fn(Element, Element) -> Element,
    ) -> Result<Algebra, AlgebraError> {
        let cells = (0..order)
            .flat_map(|a| (0..order).map(move |b| (a as Element, b as Element)))
            .map(|(a, b)| f(a, b))
            .collect();
        Algebra::new(order, cells)
    }

    /// Replaces (or adds) the table of `op`.
    pub fn with_table(mut self, op: Op, cells: Vec<Element>) -> Result<Algebra, AlgebraError> {
        let n = self.order;
        if cells.len() != n * n {
            return Err(AlgebraError::WrongSize {
                op,
                got: cells.len(),
                expected: n * n,
            });
        }
        if let Some(i) = cells.iter().position(|&v| v as usize >= n) {
            return Err(AlgebraError::OutOfRange {
                op,
                row: i / n,
                col: i % n,
                value: cells[i],
                order: n,
            });
        }
        self.tables[op.index()] = Some(cells);
        Ok(self)
    }

    pub fn without_table(mut self, op: Op) -> Algebra {
        if op != Op::Mul {
            self.tables[op.index()] = None;
        }
        self
    }

    /// Copy with one cell changed.
    pub fn with_cell(
        &self,
        op: Op,
        row: usize,
        col: usize,
        value: Element,
    ) -> Result<Algebra, AlgebraError> {
        let mut cells = self
            .table(op)
            .map(<[Element]>::to_vec)
            .unwrap_or_else(|| vec![0; self.order * self.order]);
        cells[row * self.order + col] = value;
        self.clone().with_table(op, cells)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self, op: Op) -> Option<&[Element]> {
        self.tables[op.index()].as_deref()
    }

    pub fn has_table(&self, op: Op) -> bool {
        self.tables[op.index()].is_some()
    }

    /// Operation symbols with a table, in `*`, `\`, `/` order.
    pub fn ops(&self) -> Vec<Op> {
        Op::ALL
            .into_iter()
            .filter(|&op| self.has_table(op))
            .collect()
    }

    pub fn mul_table(&self) -> &[Element] {
        self.tables[0].as_deref().expect("`*` table is mandatory")
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul_table()[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn get(&self, op: Op, a: Element, b: Element) -> Option<Element> {
        self.table(op)
            .map(|t| t[a as usize * self.order + b as usize])
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + Clone {
        (0..self.order as u16).map(|e| e as Element)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_table(self))
    }
}
