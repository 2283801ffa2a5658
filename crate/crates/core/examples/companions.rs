//! Derives division tables from a multiplication table and checks the
//! identities linking them.

use groupoid_lab::identity::laws;
use groupoid_lab::magma::{
    all_left_companions, left_companion, named, right_companion, satisfies, write_table,
};

fn main() {
    let z3 = named::cyclic_group(3);
    let full = right_companion(&left_companion(&z3).unwrap()).unwrap();
    print!("{}", write_table(&full));
    for id in laws::evans().iter().chain(laws::birkhoff().iter()) {
        println!("{id}: {}", satisfies(&full, id).unwrap().holds());
    }

    // Rows of the left projection are constant, so no `\` table exists.
    println!(
        "\nleft projection: {:?}",
        left_companion(&named::left_projection(2)).err()
    );

    // On a finite carrier an onto row is a permutation, so a left divisible
    // table has exactly one `\` companion.
    let rp = named::right_projection(3);
    println!(
        "right projection: {} left companion(s)",
        all_left_companions(&rp).unwrap().len()
    );
}
