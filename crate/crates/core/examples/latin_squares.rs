//! Counts quasigroup tables (Latin squares) of small orders, labeled and up
//! to isomorphism.
//!
//! ```text
//! cargo run --release --example latin_squares -- 5
//! ```

use groupoid_lab::finder::{search, Constraint, ConstraintSet, Mode, SearchOptions};
use groupoid_lab::magma::Predicate;

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    for n in 1..=max {
        let cs = ConstraintSet::new(n, vec![Constraint::prop(Predicate::Quasigroup)])
            .expect("valid order");
        let labeled = search(&cs, &SearchOptions::mode(Mode::Count));
        let iso = search(
            &cs,
            &SearchOptions {
                mode: Mode::Count,
                up_to_iso: true,
                symmetry_breaking: true,
                ..Default::default()
            },
        );
        println!(
            "order {n}: {} labeled quasigroups ({} nodes, {:?}), {} up to isomorphism",
            labeled.count, labeled.stats.nodes, labeled.stats.elapsed, iso.count
        );
    }
}
