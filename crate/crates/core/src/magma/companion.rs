//! Division operations built from a `*` table.
//!
//! A left companion `\` satisfies `x * (x \ y) = y` when every left
//! translation is onto, and `x \ (x * y) = y` when every left translation is
//! one-to-one. Right companions `/` mirror this on columns with
//! `(y / x) * x = y` and `(y * x) / x = y`.

use itertools::Itertools;
use thiserror::Error;

use super::{property_report, Algebra, Element};
use crate::identity::Op;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompanionError {
    #[error("`\\` needs a left division or left cancellative groupoid")]
    NotLeftDivisible,
    #[error("`/` needs a right division or right cancellative groupoid")]
    NotRightDivisible,
}

/// Which division tables a check must derive from `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CompanionPolicy {
    #[default]
    None,
    DeriveLeft,
    DeriveRight,
    DeriveBoth,
}

impl CompanionPolicy {
    pub fn left(self) -> bool {
        matches!(
            self,
            CompanionPolicy::DeriveLeft | CompanionPolicy::DeriveBoth
        )
    }

    pub fn right(self) -> bool {
        matches!(
            self,
            CompanionPolicy::DeriveRight | CompanionPolicy::DeriveBoth
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            CompanionPolicy::None => "none",
            CompanionPolicy::DeriveLeft => "derive_left",
            CompanionPolicy::DeriveRight => "derive_right",
            CompanionPolicy::DeriveBoth => "derive_both",
        }
    }
}

// Orientation-agnostic view: `get(a, b)` is `a * b` for the left side and
// `b * a` for the right side, so one routine handles both companions.
struct Side<'a> {
    alg: &'a Algebra,
    right: bool,
}

impl Side<'_> {
    fn get(&self, a: Element, b: Element) -> Element {
        if self.right {
            self.alg.mul(b, a)
        } else {
            self.alg.mul(a, b)
        }
    }

    // Companion value for translation `a` and target `b`, stored at
    // `(a, b)` for `\` and at `(b, a)` for `/`.
    fn index(&self, a: usize, b: usize) -> usize {
        let n = self.alg.order();
        if self.right {
            b * n + a
        } else {
            a * n + b
        }
    }

    fn flags(&self) -> (bool, bool) {
        let r = property_report(self.alg);
        if self.right {
            (r.right_division, r.right_cancellative)
        } else {
            (r.left_division, r.left_cancellative)
        }
    }

    fn error(&self) -> CompanionError {
        if self.right {
            CompanionError::NotRightDivisible
        } else {
            CompanionError::NotLeftDivisible
        }
    }

    fn canonical(&self) -> Result<Vec<Element>, CompanionError> {
        let (division, cancellative) = self.flags();
        if !division && !cancellative {
            return Err(self.error());
        }
        let n = self.alg.order();
        let mut out = vec![0; n * n];
        for a in self.alg.elements() {
            let mut used = vec![false; n];
            let mut missing = Vec::new();
            for b in self.alg.elements() {
                match self.alg.elements().find(|&z| self.get(a, z) == b) {
                    Some(z) => {
                        out[self.index(a as usize, b as usize)] = z;
                        used[z as usize] = true;
                    }
                    None => missing.push(b),
                }
            }
            // targets outside the image: any value keeps the cancellation
            // identity, take the least one not used yet in this translation
            for b in missing {
                let z = (0..n).find(|&z| !used[z]).unwrap_or(0);
                used[z] = true;
                out[self.index(a as usize, b as usize)] = z as Element;
            }
        }
        Ok(out)
    }

    fn all(&self) -> Result<Vec<Vec<Element>>, CompanionError> {
        let (division, cancellative) = self.flags();
        if !division && !cancellative {
            return Err(self.error());
        }
        let n = self.alg.order();
        let mut cands: Vec<Vec<Element>> = vec![(0..n as Element).collect(); n * n];
        for a in self.alg.elements() {
            if division {
                for b in self.alg.elements() {
                    cands[self.index(a as usize, b as usize)].retain(|&z| self.get(a, z) == b);
                }
            }
            if cancellative {
                for y in self.alg.elements() {
                    let b = self.get(a, y);
                    cands[self.index(a as usize, b as usize)].retain(|&z| z == y);
                }
            }
        }
        if cands.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }
        Ok(cands.into_iter().multi_cartesian_product().collect())
    }
}

/// Adds a `\` table: `x \ y` is the least `z` with `x * z = y`.
pub fn left_companion(algebra: &Algebra) -> Result<Algebra, CompanionError> {
    let t = Side {
        alg: algebra,
        right: false,
    }
    .canonical()?;
    Ok(algebra.clone().with_table(Op::LDiv, t).expect("in range"))
}

/// Adds a `/` table: `y / x` is the least `z` with `z * x = y`.
pub fn right_companion(algebra: &Algebra) -> Result<Algebra, CompanionError> {
    let t = Side {
        alg: algebra,
        right: true,
    }
    .canonical()?;
    Ok(algebra.clone().with_table(Op::RDiv, t).expect("in range"))
}

/// Every `\` table satisfying the applicable Evans identities, in
/// lexicographic order.
pub fn all_left_companions(algebra: &Algebra) -> Result<Vec<Vec<Element>>, CompanionError> {
    Side {
        alg: algebra,
        right: false,
    }
    .all()
}

/// Every `/` table satisfying the applicable Evans identities, in
/// lexicographic order.
pub fn all_right_companions(algebra: &Algebra) -> Result<Vec<Vec<Element>>, CompanionError> {
    Side {
        alg: algebra,
        right: true,
    }
    .all()
}

/// The algebra extended with every combination of derived companions that
/// `policy` asks for. Tables not covered by the policy are kept as given.
pub fn companion_completions(
    algebra: &Algebra,
    policy: CompanionPolicy,
) -> Result<Vec<Algebra>, CompanionError> {
    let mut out = vec![algebra.clone()];
    for (wanted, op) in [(policy.left(), Op::LDiv), (policy.right(), Op::RDiv)] {
        if !wanted {
            continue;
        }
        let tables = if op == Op::LDiv {
            all_left_companions(algebra)?
        } else {
            all_right_companions(algebra)?
        };
        out = out
            .iter()
            .flat_map(|a| {
                tables
                    .iter()
                    .map(move |t| a.clone().with_table(op, t.clone()).expect("in range"))
            })
            .collect();
    }
    Ok(out)
}
