//! Counts models of a constraint list, labeled and up to isomorphism.
//!
//! cargo run --release --example count_models -- 3 'prop:commutative, id:"x * (y * z) = (x * y) * z"'

use groupoid_lab::finder::{parse_constraints, search, ConstraintSet, Mode, SearchOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let order = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let text = args
        .next()
        .unwrap_or_else(|| r#"id:"x * (y * z) = (x * y) * z""#.to_string());
    let constraints = match parse_constraints(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(3);
        }
    };
    let cs = ConstraintSet::new(order, constraints).expect("constraints use `*` only");
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
    println!("order {order}: {text}");
    println!(
        "  labeled {} ({} nodes)",
        labeled.count, labeled.stats.nodes
    );
    println!(
        "  up to isomorphism {} (orbit sizes sum to {:?})",
        iso.count, iso.stats.labeled_models
    );
}
