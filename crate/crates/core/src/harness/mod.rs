//! Bounded checks of the implication and existence claims about cyclic and
//! Tarski groupoids.

mod catalog;
mod report;
mod verify;

pub use catalog::{catalog, lookup, LemmaKind, LemmaSpec};
pub use report::{
    parse_report, report_block, report_file, summary_line, summary_text, SEMANTICS_NOTE,
};
pub use verify::{
    check_on_algebra, verify, verify_all, verify_spec, verify_specs, AlgebraCheck, HarnessError,
    Outcome, Summary, VerificationReport,
};
