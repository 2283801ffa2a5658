//! The 16 factor-swap variants of the associative law, their syntactic
//! classes, and which of them are equivalent on all small groupoids.
//!
//! cargo run --release --example hosszu_family -- 3

use groupoid_lab::cli::semantic_groups;
use groupoid_lab::identity::{classify_variants, hosszu_variants, HOSSZU_NODES};

fn main() {
    let order = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(2);
    let variants = hosszu_variants();
    println!("mask bits: {}", HOSSZU_NODES.join(" "));
    for (m, v) in variants.iter().enumerate() {
        println!("{m:04b}  {v}");
    }
    println!("\nclasses under renaming, side swap and dual:");
    for c in classify_variants(&variants) {
        let masks: Vec<String> = c.members.iter().map(|m| format!("{m:04b}")).collect();
        println!("  [{}] {}", masks.join(" "), c.representative);
    }
    println!("\nequivalent on every groupoid of order <= {order}:");
    for g in semantic_groups(&variants, order) {
        let masks: Vec<String> = g.iter().map(|m| format!("{m:04b}")).collect();
        println!("  [{}]", masks.join(" "));
    }
}
