use std::collections::HashMap;

use groupoid_lab::identity::{
    canonicalize, class_key, classify_variants, dual, hosszu_variants, laws, parse_identity,
    parse_term, rename, swap_sides, Identity, Op, Term,
};
use proptest::prelude::*;

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop::sample::select(vec!["x", "y", "z", "w"]).prop_map(Term::var);
    leaf.prop_recursive(4, 24, 2, |inner| {
        (prop::sample::select(Op::ALL.to_vec()), inner.clone(), inner)
            .prop_map(|(op, l, r)| Term::app(op, l, r))
    })
}

fn identity_strategy() -> impl Strategy<Value = Identity> {
    (term_strategy(), term_strategy()).prop_map(|(l, r)| Identity::new(l, r))
}

proptest! {
    #[test]
    fn format_then_parse_is_identity(id in identity_strategy()) {
        let text = id.to_string();
        prop_assert_eq!(parse_identity(&text).unwrap(), id);
    }

    #[test]
    fn term_round_trip(t in term_strategy()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn dual_is_an_involution(id in identity_strategy()) {
        prop_assert_eq!(dual(&dual(&id)), id);
    }

    #[test]
    fn canonicalize_is_idempotent(id in identity_strategy()) {
        let c = canonicalize(&id);
        prop_assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn class_key_ignores_renaming_swap_and_dual(id in identity_strategy()) {
        let map: HashMap<String, String> = [("x", "q"), ("y", "x"), ("z", "p"), ("w", "y")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let key = class_key(&id).0;
        prop_assert_eq!(&class_key(&rename(&id, &map)).0, &key);
        prop_assert_eq!(&class_key(&swap_sides(&id)).0, &key);
        prop_assert_eq!(&class_key(&dual(&id)).0, &key);
    }
}

#[test]
fn whitespace_and_outer_parentheses() {
    let a = parse_identity("x*(y*z)=(x*y)*z").unwrap();
    let b = parse_identity("  x * ( y * z )   =   ( x * y ) * z ").unwrap();
    assert_eq!(a, b);
    assert_eq!(a, laws::associative());
}

#[test]
fn malformed_input_reports_offsets() {
    for (text, offset) in [("x * = y", 4), ("x * y", 5), ("(x * y = y", 7)] {
        let e = parse_identity(text).unwrap_err();
        assert_eq!(e.offset(), Some(offset), "{text}: {e}");
    }
}

#[test]
fn hosszu_family_shape() {
    let v = hosszu_variants();
    assert_eq!(v.len(), 16);
    for i in 0..16 {
        for j in 0..i {
            assert_ne!(v[i], v[j]);
        }
    }
    assert_eq!(v[0], laws::associative());
    assert_eq!(v[0b0100], laws::tarski());
}

/// Every image of `id` under a permutation of x, y, z, optional side swap
/// and optional dual, compared as trees.
fn images(id: &Identity) -> Vec<Identity> {
    let names = ["x", "y", "z"];
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut out = Vec::new();
    for p in perms {
        let map: HashMap<String, String> = (0..3)
            .map(|i| (names[i].to_string(), names[p[i]].to_string()))
            .collect();
        let r = rename(id, &map);
        for s in [r.clone(), swap_sides(&r)] {
            out.push(dual(&s));
            out.push(s);
        }
    }
    out
}

#[test]
fn classification_matches_orbit_oracle() {
    let v = hosszu_variants();
    let same = |i: usize, j: usize| images(&v[i]).contains(&v[j]);
    let classes = classify_variants(&v);
    let mut seen = [false; 16];
    for c in &classes {
        for &a in &c.members {
            assert!(!seen[a]);
            seen[a] = true;
            for b in 0..16 {
                assert_eq!(c.members.contains(&b), same(a, b), "masks {a:04b} {b:04b}");
            }
        }
    }
    assert!(seen.iter().all(|&s| s));
    // stable across runs
    assert_eq!(classify_variants(&hosszu_variants()), classes);
}

#[test]
fn dual_of_tarski() {
    assert_eq!(
        dual(&laws::tarski()).to_string(),
        "(y * z) * x = z * (y * x)"
    );
}

#[test]
fn left_permutable_and_its_dual_form_share_a_class() {
    let a = laws::left_permutable();
    let b = parse_identity("(y * z) * x = (y * x) * z").unwrap();
    assert_eq!(class_key(&a).0, class_key(&b).0);
    assert_eq!(dual(&b).to_string(), "x * (z * y) = z * (x * y)");
}

#[test]
fn catalog_identities_round_trip() {
    use groupoid_lab::finder::Constraint;
    let mut seen = 0;
    for spec in groupoid_lab::harness::catalog() {
        for c in spec.hypotheses.iter().chain(&spec.conclusions) {
            if let Constraint::Identity { identity, .. } = c {
                assert_eq!(&parse_identity(&identity.to_string()).unwrap(), identity);
                seen += 1;
            }
        }
    }
    assert!(seen > 50);
    for (_, text) in laws::ALL {
        assert_eq!(parse_identity(text).unwrap().to_string(), text);
    }
}
