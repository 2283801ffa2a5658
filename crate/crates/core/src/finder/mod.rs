//! Backtracking search for finite algebras under identities and structural
//! constraints.
//!
//! Cells are filled row-major, `*` first and then any synthesized division
//! tables, trying values in increasing order. After each decision the
//! propagators in [`PartialTables`] prune the remaining domains:
//! all-different rows/columns for cancellation and division, symmetry for
//! commutativity, and ground-instance filtering with unit propagation for
//! every asserted identity. Negated constraints and identity-element
//! predicates are decided on complete tables only.

mod constraint;
mod propagate;
mod search;

pub use constraint::{
    format_constraints, parse_constraints, Constraint, ConstraintError, ConstraintSet, Polarity,
};
pub use propagate::{Contradiction, PartialTables};
pub(crate) use search::violation_with_companions;
pub use search::{
    find_counterexample, for_each_model, search, Mode, Refutation, SearchOptions, SearchOutcome,
    SearchStatus, Statistics,
};
