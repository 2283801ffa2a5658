use std::fmt;
use std::str::FromStr;

use super::eval::{Assignment, Subject, Verdict, Witness};
use super::{Algebra, Element};

/// Structural predicates of the `*` table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Predicate {
    LeftCancellative,
    RightCancellative,
    LeftDivision,
    RightDivision,
    Commutative,
    Associative,
    HasLeftIdentity,
    HasRightIdentity,
    HasTwoSidedIdentity,
    Quasigroup,
}

impl Predicate {
    pub const ALL: [Predicate; 10] = [
        Predicate::LeftCancellative,
        Predicate::RightCancellative,
        Predicate::LeftDivision,
        Predicate::RightDivision,
        Predicate::Commutative,
        Predicate::Associative,
        Predicate::HasLeftIdentity,
        Predicate::HasRightIdentity,
        Predicate::HasTwoSidedIdentity,
        Predicate::Quasigroup,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::LeftCancellative => "left_cancellative",
            Predicate::RightCancellative => "right_cancellative",
            Predicate::LeftDivision => "left_division",
            Predicate::RightDivision => "right_division",
            Predicate::Commutative => "commutative",
            Predicate::Associative => "associative",
            Predicate::HasLeftIdentity => "has_left_identity",
            Predicate::HasRightIdentity => "has_right_identity",
            Predicate::HasTwoSidedIdentity => "has_two_sided_identity",
            Predicate::Quasigroup => "quasigroup",
        }
    }

    pub fn holds(self, algebra: &Algebra) -> bool {
        check_predicate(algebra, self).holds()
    }

    /// Whether the predicate visibly fails at `assignment`. Predicates whose
    /// failure is not local (identity elements, quasigroup) are re-decided
    /// on the whole table.
    pub fn fails_at(self, algebra: &Algebra, assignment: &Assignment) -> bool {
        let n = algebra.order() as Element;
        let g = |v: &str| assignment.get(v).filter(|&e| e < n);
        match self {
            Predicate::LeftCancellative => match (g("a"), g("x"), g("y")) {
                (Some(a), Some(x), Some(y)) => x != y && algebra.mul(a, x) == algebra.mul(a, y),
                _ => false,
            },
            Predicate::RightCancellative => match (g("a"), g("x"), g("y")) {
                (Some(a), Some(x), Some(y)) => x != y && algebra.mul(x, a) == algebra.mul(y, a),
                _ => false,
            },
            Predicate::LeftDivision => match (g("a"), g("b")) {
                (Some(a), Some(b)) => algebra.elements().all(|x| algebra.mul(a, x) != b),
                _ => false,
            },
            Predicate::RightDivision => match (g("a"), g("b")) {
                (Some(a), Some(b)) => algebra.elements().all(|x| algebra.mul(x, a) != b),
                _ => false,
            },
            Predicate::Commutative => match (g("x"), g("y")) {
                (Some(x), Some(y)) => algebra.mul(x, y) != algebra.mul(y, x),
                _ => false,
            },
            Predicate::Associative => match (g("x"), g("y"), g("z")) {
                (Some(x), Some(y), Some(z)) => {
                    algebra.mul(x, algebra.mul(y, z)) != algebra.mul(algebra.mul(x, y), z)
                }
                _ => false,
            },
            Predicate::HasLeftIdentity
            | Predicate::HasRightIdentity
            | Predicate::HasTwoSidedIdentity
            | Predicate::Quasigroup => !self.holds(algebra),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

fn fail(p: Predicate, pairs: &[(&str, Element)], detail: String) -> Verdict {
    let mut assignment = Assignment::new();
    for &(v, e) in pairs {
        assignment.set(v, e);
    }
    Verdict::Fails(Witness {
        subject: Subject::Predicate(p),
        assignment,
        detail: Some(detail),
    })
}

fn left_identities(a: &Algebra) -> Vec<Element> {
    a.elements()
        .filter(|&f| a.elements().all(|x| a.mul(f, x) == x))
        .collect()
}

fn right_identities(a: &Algebra) -> Vec<Element> {
    a.elements()
        .filter(|&e| a.elements().all(|x| a.mul(x, e) == x))
        .collect()
}

/// Decides one predicate by scanning the table, returning the first
/// violation in lexicographic order.
pub fn check_predicate(alg: &Algebra, p: Predicate) -> Verdict {
    use Predicate::*;
    let els = || alg.elements();
    match p {
        LeftCancellative => {
            for a in els() {
                for x in els() {
                    for y in (x + 1)..alg.order() as Element {
                        if alg.mul(a, x) == alg.mul(a, y) {
                            let d = format!("{a}*{x} = {a}*{y} = {}", alg.mul(a, x));
                            return fail(p, &[("a", a), ("x", x), ("y", y)], d);
                        }
                    }
                }
            }
        }
        RightCancellative => {
            for a in els() {
                for x in els() {
                    for y in (x + 1)..alg.order() as Element {
                        if alg.mul(x, a) == alg.mul(y, a) {
                            let d = format!("{x}*{a} = {y}*{a} = {}", alg.mul(x, a));
                            return fail(p, &[("a", a), ("x", x), ("y", y)], d);
                        }
                    }
                }
            }
        }
        LeftDivision => {
            for a in els() {
                for b in els() {
                    if els().all(|x| alg.mul(a, x) != b) {
                        return fail(
                            p,
                            &[("a", a), ("b", b)],
                            format!("{a}*x = {b} has no solution"),
                        );
                    }
                }
            }
        }
        RightDivision => {
            for a in els() {
                for b in els() {
                    if els().all(|x| alg.mul(x, a) != b) {
                        return fail(
                            p,
                            &[("a", a), ("b", b)],
                            format!("x*{a} = {b} has no solution"),
                        );
                    }
                }
            }
        }
        Commutative => {
            for x in els() {
                for y in els() {
                    if alg.mul(x, y) != alg.mul(y, x) {
                        return fail(p, &[("x", x), ("y", y)], format!("{x}*{y} != {y}*{x}"));
                    }
                }
            }
        }
        Associative => {
            for x in els() {
                for y in els() {
                    for z in els() {
                        if alg.mul(x, alg.mul(y, z)) != alg.mul(alg.mul(x, y), z) {
                            let d = format!("{x}*({y}*{z}) != ({x}*{y})*{z}");
                            return fail(p, &[("x", x), ("y", y), ("z", z)], d);
                        }
                    }
                }
            }
        }
        HasLeftIdentity => {
            if left_identities(alg).is_empty() {
                return fail(p, &[], "no left identity element".into());
            }
        }
        HasRightIdentity => {
            if right_identities(alg).is_empty() {
                return fail(p, &[], "no right identity element".into());
            }
        }
        HasTwoSidedIdentity => {
            let r = right_identities(alg);
            if !left_identities(alg).iter().any(|e| r.contains(e)) {
                return fail(p, &[], "no two-sided identity element".into());
            }
        }
        Quasigroup => {
            for part in [
                LeftCancellative,
                LeftDivision,
                RightCancellative,
                RightDivision,
            ] {
                if let Verdict::Fails(mut w) = check_predicate(alg, part) {
                    w.subject = Subject::Predicate(Quasigroup);
                    w.detail = Some(format!(
                        "not {}: {}",
                        part.name(),
                        w.detail.unwrap_or_default()
                    ));
                    return Verdict::Fails(w);
                }
            }
        }
    }
    Verdict::Holds
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub left_cancellative: bool,
    pub right_cancellative: bool,
    pub left_division: bool,
    pub right_division: bool,
    pub quasigroup_like: bool,
    pub commutative: bool,
    pub associative: bool,
    pub left_identities: Vec<Element>,
    pub right_identities: Vec<Element>,
    pub two_sided_identity: Option<Element>,
    pub abelian_group: bool,
}

impl PropertyReport {
    pub fn get(&self, p: Predicate) -> bool {
        match p {
            Predicate::LeftCancellative => self.left_cancellative,
            Predicate::RightCancellative => self.right_cancellative,
            Predicate::LeftDivision => self.left_division,
            Predicate::RightDivision => self.right_division,
            Predicate::Commutative => self.commutative,
            Predicate::Associative => self.associative,
            Predicate::HasLeftIdentity => !self.left_identities.is_empty(),
            Predicate::HasRightIdentity => !self.right_identities.is_empty(),
            Predicate::HasTwoSidedIdentity => self.two_sided_identity.is_some(),
            Predicate::Quasigroup => self.quasigroup_like,
        }
    }
}

/// Computes every flag from the `*` table. Cancellation is decided from
/// duplicate entries, division from missing entries, independently of each
/// other.
pub fn property_report(alg: &Algebra) -> PropertyReport {
    let n = alg.order();
    let t = alg.mul_table();
    let rows_distinct = (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|x| !std::mem::replace(&mut seen[t[a * n + x] as usize], true))
    });
    let rows_cover = (0..n).all(|a| (0..n as Element).all(|b| t[a * n..a * n + n].contains(&b)));
    let cols_distinct = (0..n).all(|a| {
        let mut seen = vec![false; n];
        (0..n).all(|x| !std::mem::replace(&mut seen[t[x * n + a] as usize], true))
    });
    let cols_cover = (0..n).all(|a| (0..n as Element).all(|b| (0..n).any(|x| t[x * n + a] == b)));
    let commutative = (0..n).all(|a| (0..n).all(|b| t[a * n + b] == t[b * n + a]));
    let associative = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| t[x * n + t[y * n + z] as usize] == t[t[x * n + y] as usize * n + z])
        })
    });
    let left_identities = left_identities(alg);
    let right_identities = right_identities(alg);
    let two_sided_identity = left_identities
        .iter()
        .copied()
        .find(|e| right_identities.contains(e));
    let quasigroup_like = rows_distinct && rows_cover && cols_distinct && cols_cover;
    PropertyReport {
        left_cancellative: rows_distinct,
        right_cancellative: cols_distinct,
        left_division: rows_cover,
        right_division: cols_cover,
        quasigroup_like,
        commutative,
        associative,
        abelian_group: quasigroup_like
            && associative
            && commutative
            && two_sided_identity.is_some(),
        left_identities,
        right_identities,
        two_sided_identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magma::named;

    #[test]
    fn left_projection_report() {
        let r = property_report(&named::left_projection(2));
        assert!(r.right_division && r.right_cancellative);
        assert!(!r.left_cancellative && !r.left_division);
        assert!(!r.commutative && r.associative);
        assert_eq!(r.right_identities, vec![0, 1]);
        assert!(r.left_identities.is_empty());
        assert_eq!(r.two_sided_identity, None);
        assert!(!r.abelian_group);
    }

    #[test]
    fn z3_report() {
        let r = property_report(&named::cyclic_group(3));
        assert!(r.quasigroup_like && r.commutative && r.associative && r.abelian_group);
        assert_eq!(r.two_sided_identity, Some(0));
    }

    #[test]
    fn linear_table_cancels_on_the_right_only() {
        let r = property_report(&named::linear(3, 1, 3));
        assert!(r.right_cancellative);
        assert!(!r.left_cancellative);
    }

    #[test]
    fn predicate_witnesses_reproduce() {
        let lp = named::left_projection(2);
        for p in Predicate::ALL {
            if let Verdict::Fails(w) = check_predicate(&lp, p) {
                assert!(w.reproduces(&lp), "{p}");
                assert!(!property_report(&lp).get(p));
            } else {
                assert!(property_report(&lp).get(p), "{p}");
            }
        }
        let w = check_predicate(&lp, Predicate::Commutative);
        assert_eq!(w.witness().unwrap().values_text(), "0,1");
    }

    #[test]
    fn names_round_trip() {
        for p in Predicate::ALL {
            assert_eq!(p.name().parse::<Predicate>().unwrap(), p);
        }
        assert!("loop".parse::<Predicate>().is_err());
    }
}
