//! Structural properties of a few named groupoids, or of a table file.
//!
//! cargo run --example property_report -- [table.mag]

use groupoid_lab::magma::{named, property_report, read_table_file, Algebra};

fn show(name: &str, alg: &Algebra) {
    let r = property_report(alg);
    println!("{name} (order {})", alg.order());
    println!(
        "  cancellative L/R {}/{}  division L/R {}/{}  quasigroup {}",
        r.left_cancellative,
        r.right_cancellative,
        r.left_division,
        r.right_division,
        r.quasigroup_like
    );
    println!(
        "  commutative {}  associative {}  abelian group {}",
        r.commutative, r.associative, r.abelian_group
    );
    println!(
        "  left identities {:?}  right identities {:?}  identity {:?}",
        r.left_identities, r.right_identities, r.two_sided_identity
    );
}

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        match read_table_file(&path) {
            Ok(a) => show(&path, &a),
            Err(e) => eprintln!("{e}"),
        }
        return;
    }
    show("Z4", &named::cyclic_group(4));
    show("left projection", &named::left_projection(2));
    show("right projection", &named::right_projection(3));
    show("x * y = 2x + y mod 3", &named::linear(3, 2, 1));
}
