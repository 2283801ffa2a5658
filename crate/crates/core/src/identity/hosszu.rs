use std::collections::BTreeMap;

use super::transform::class_key;
use super::{Identity, Term};

/// The four multiplication nodes of `x * (y * z) = (x * y) * z`, most
/// significant mask bit first.
pub const HOSSZU_NODES: [&str; 4] = ["lhs-outer", "lhs-inner", "rhs-outer", "rhs-inner"];

fn product(swap: bool, a: Term, b: Term) -> Term {
    if swap {
        Term::mul(b, a)
    } else {
        Term::mul(a, b)
    }
}

/// The 16 identities obtained from the associative law by swapping the
/// factors of any subset of its four products.
///
/// Element `m` corresponds to mask `m` read as the 4-bit string
/// `lhs-outer lhs-inner rhs-outer rhs-inner`; mask `0100` (index 4) only
/// swaps the inner product of the left side.
pub fn hosszu_variants() -> Vec<Identity> {
    let (x, y, z) = (Term::var("x"), Term::var("y"), Term::var("z"));
    (0u8..16)
        .map(|m| {
            let bit = |k: u8| m & (1 << (3 - k)) != 0;
            let lhs = product(bit(0), x.clone(), product(bit(1), y.clone(), z.clone()));
            let rhs = product(bit(2), product(bit(3), x.clone(), y.clone()), z.clone());
            Identity::new(lhs, rhs)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantClass {
    /// Lexicographically least canonical form reachable in the class.
    pub representative: Identity,
    /// Indices into the classified input, ascending.
    pub members: Vec<usize>,
}

/// Partitions identities into classes under variable renaming, side swap and
/// dual. Classes are ordered by the text of their representative.
pub fn classify_variants(identities: &[Identity]) -> Vec<VariantClass> {
    let mut classes: BTreeMap<String, VariantClass> = BTreeMap::new();
    for (i, id) in identities.iter().enumerate() {
        let (key, rep) = class_key(id);
        classes
            .entry(key)
            .or_insert_with(|| VariantClass {
                representative: rep,
                members: Vec::new(),
            })
            .members
            .push(i);
    }
    classes.into_values().collect()
}
