//! Small algebras that come up repeatedly.

use super::{Algebra, Element};
use crate::identity::Op;

fn build(n: usize, f: impl Fn(usize, usize) -> usize) -> Algebra {
    Algebra::from_fn(n, |a, b| f(a as usize, b as usize) as Element).expect("valid order")
}

/// Addition modulo `n`.
pub fn cyclic_group(n: usize) -> Algebra {
    build(n, |a, b| (a + b) % n)
}

/// Addition modulo `n` together with its divisions `x \ y = y - x` and
/// `y / x = y - x`.
pub fn cyclic_group_with_divisions(n: usize) -> Algebra {
    let sub: Vec<Element> = (0..n)
        .flat_map(|x| (0..n).map(move |y| ((y + n - x) % n) as Element))
        .collect();
    let rdiv: Vec<Element> = (0..n)
        .flat_map(|y| (0..n).map(move |x| ((y + n - x) % n) as Element))
        .collect();
    cyclic_group(n)
        .with_table(Op::LDiv, sub)
        .and_then(|a| a.with_table(Op::RDiv, rdiv))
        .expect("valid tables")
}

/// `x * y = x`.
pub fn left_projection(n: usize) -> Algebra {
    build(n, |a, _| a)
}

/// `x * y = y`.
pub fn right_projection(n: usize) -> Algebra {
    build(n, |_, b| b)
}

/// `x * y = (a x + b y) mod n`.
pub fn linear(n: usize, a: usize, b: usize) -> Algebra {
    build(n, |x, y| (a * x + b * y) % n)
}
