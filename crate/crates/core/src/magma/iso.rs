use itertools::Itertools;

use super::{Algebra, Element};
use crate::identity::Op;

/// Relabels the carrier by `perm` (old element `i` becomes `perm[i]`),
/// applied to every table.
pub fn permute(algebra: &Algebra, perm: &[Element]) -> Algebra {
    let n = algebra.order();
    assert_eq!(perm.len(), n, "permutation size");
    let mut out = algebra.clone();
    for op in algebra.ops() {
        let t = algebra.table(op).expect("listed");
        let mut cells = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] as usize * n + perm[b] as usize] = perm[t[a * n + b] as usize];
            }
        }
        out = out.with_table(op, cells).expect("permuted table");
    }
    out
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<Element>> {
    (0..n as Element).permutations(n)
}

/// The least relabeling of the algebra, comparing the row-major `*` table
/// first and then `\` and `/`.
pub fn canonical_form(algebra: &Algebra) -> Algebra {
    permutations(algebra.order())
        .map(|p| permute(algebra, &p))
        .min()
        .expect("at least the identity permutation")
}

pub fn is_isomorphic(a: &Algebra, b: &Algebra) -> bool {
    a.order() == b.order() && a.ops() == b.ops() && canonical_form(a) == canonical_form(b)
}

/// Same as `canonical_form(a) == a`, with early exit per permutation.
pub fn is_canonical(algebra: &Algebra) -> bool {
    let n = algebra.order();
    let ops: Vec<Op> = algebra.ops();
    let mut inv = vec![0usize; n];
    for p in permutations(n) {
        for (i, &v) in p.iter().enumerate() {
            inv[v as usize] = i;
        }
        'cmp: for &op in &ops {
            let t = algebra.table(op).expect("listed");
            for i in 0..n {
                for j in 0..n {
                    let permuted = p[t[inv[i] * n + inv[j]] as usize];
                    let orig = t[i * n + j];
                    if permuted < orig {
                        return false;
                    }
                    if permuted > orig {
                        break 'cmp;
                    }
                }
            }
        }
    }
    true
}

pub fn automorphism_count(algebra: &Algebra) -> usize {
    permutations(algebra.order())
        .filter(|p| permute(algebra, p) == *algebra)
        .count()
}

/// Number of distinct labeled algebras isomorphic to this one.
pub fn orbit_size(algebra: &Algebra) -> u64 {
    let fact: u64 = (1..=algebra.order() as u64).product();
    fact / automorphism_count(algebra) as u64
}
