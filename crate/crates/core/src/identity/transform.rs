use std::collections::HashMap;

use super::{Identity, Term};

/// Mirror image of a term: the children of every application are swapped.
pub fn dual_term(term: &Term) -> Term {
    match term {
        Term::Var(_) => term.clone(),
        Term::App(op, l, r) => Term::app(*op, dual_term(r), dual_term(l)),
    }
}

/// Rewrites the identity in the opposite operation `t ∗ s = s · t`,
/// applied to every operation symbol. An involution.
pub fn dual(identity: &Identity) -> Identity {
    Identity::new(dual_term(&identity.lhs), dual_term(&identity.rhs))
}

pub fn swap_sides(identity: &Identity) -> Identity {
    Identity::new(identity.rhs.clone(), identity.lhs.clone())
}

/// Applies a variable renaming. Variables missing from `map` are kept.
pub fn rename(identity: &Identity, map: &HashMap<String, String>) -> Identity {
    fn go(t: &Term, map: &HashMap<String, String>) -> Term {
        match t {
            Term::Var(v) => Term::Var(map.get(v).cloned().unwrap_or_else(|| v.clone())),
            Term::App(op, l, r) => Term::app(*op, go(l, map), go(r, map)),
        }
    }
    Identity::new(go(&identity.lhs, map), go(&identity.rhs, map))
}

/// Renames variables to `v1, v2, ...` in order of first occurrence
/// (preorder over `lhs`, then `rhs`).
pub fn canonicalize(identity: &Identity) -> Identity {
    let map = identity
        .vars()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, format!("v{}", i + 1)))
        .collect();
    rename(identity, &map)
}

/// Least canonical text among the images of `identity` under side swap and
/// dual; two identities share a key iff they are related by renaming, side
/// swap and dual.
pub fn class_key(identity: &Identity) -> (String, Identity) {
    let d = dual(identity);
    [
        swap_sides(identity),
        d.clone(),
        swap_sides(&d),
        identity.clone(),
    ]
    .iter()
    .map(|i| {
        let c = canonicalize(i);
        (c.to_string(), c)
    })
    .min()
    .expect("four images")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::parse_identity;

    fn id(s: &str) -> Identity {
        parse_identity(s).unwrap()
    }

    #[test]
    fn dual_of_hosszu_example() {
        assert_eq!(
            dual(&id("(y * z) * x = (y * x) * z")),
            id("x * (z * y) = z * (x * y)")
        );
        assert_eq!(dual(&id("x = x")), id("x = x"));
    }

    #[test]
    fn dual_of_tarski() {
        assert_eq!(
            dual(&id("x * (z * y) = (x * y) * z")).to_string(),
            "(y * z) * x = z * (y * x)"
        );
    }

    #[test]
    fn canonical_renaming() {
        assert_eq!(
            canonicalize(&id("a * (b * c) = (c * a) * b")).to_string(),
            "v1 * (v2 * v3) = (v3 * v1) * v2"
        );
        assert_eq!(canonicalize(&id("x = x")).to_string(), "v1 = v1");
    }

    #[test]
    fn unbalanced_sides_are_fine() {
        let c = canonicalize(&id("x * x = y"));
        assert_eq!(c.to_string(), "v1 * v1 = v2");
    }

    #[test]
    fn class_key_groups_side_swap() {
        let a = id("x * (y * z) = (x * y) * z");
        let b = id("(x * y) * z = x * (y * z)");
        assert_eq!(class_key(&a).0, class_key(&b).0);
    }
}
