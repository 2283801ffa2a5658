//! Verifies every catalog claim up to a bound and prints one line per claim.
//!
//! cargo run --release --example verify_catalog -- [max_order] [threads]

use groupoid_lab::harness::{summary_text, verify_all};

fn main() {
    let mut args = std::env::args().skip(1);
    let max_order = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let threads = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let summary = verify_all(max_order, None, threads);
    print!("{}", summary_text(&summary));
}
