mod common;

use groupoid_lab::identity::{laws, Op};
use groupoid_lab::magma::{
    all_left_companions, all_right_companions, automorphism_count, canonical_form,
    companion_completions, is_canonical, is_isomorphic, left_companion, named, orbit_size, permute,
    property_report, read_table, right_companion, satisfies, write_table, Algebra, CompanionPolicy,
    Predicate,
};
use proptest::prelude::*;

#[test]
fn cancellation_and_division_coincide_on_finite_tables() {
    for n in 1..=3 {
        for alg in common::all_algebras(n) {
            let r = property_report(&alg);
            assert_eq!(r.left_cancellative, r.left_division, "{alg}");
            assert_eq!(r.right_cancellative, r.right_division, "{alg}");
        }
    }
}

#[test]
fn predicates_match_oracle_on_order_three() {
    for t in common::all_tables(3) {
        let alg = Algebra::new(3, t.clone()).unwrap();
        let r = property_report(&alg);
        assert_eq!(r.associative, common::is_associative(&t, 3));
        assert_eq!(r.commutative, common::is_commutative(&t, 3));
        assert_eq!(r.quasigroup_like, common::is_quasigroup(&t, 3));
        assert_eq!(r.left_division, common::rows_are_permutations(&t, 3));
        assert_eq!(r.right_division, common::cols_are_permutations(&t, 3));
        // the predicate and the identity agree
        assert_eq!(
            r.associative,
            satisfies(&alg, &laws::associative()).unwrap().holds()
        );
        assert_eq!(Predicate::Associative.holds(&alg), r.associative);
    }
}

#[test]
fn witnesses_reproduce() {
    for alg in common::all_algebras(2) {
        for p in Predicate::ALL {
            if let Some(w) = groupoid_lab::magma::check_predicate(&alg, p).witness() {
                assert!(w.reproduces(&alg), "{p} on {alg}: {w}");
            }
        }
        if let Some(w) = satisfies(&alg, &laws::tarski()).unwrap().witness() {
            assert!(w.reproduces(&alg));
        }
    }
}

#[test]
fn companions_satisfy_evans_and_birkhoff() {
    let [e1, e2, e3, e4] = laws::evans();
    let [q3, q6] = laws::birkhoff();
    for n in 1..=3 {
        for alg in common::all_algebras(n) {
            let r = property_report(&alg);
            match left_companion(&alg) {
                Ok(a) => {
                    assert!(r.left_division);
                    assert!(satisfies(&a, &e1).unwrap().holds());
                    assert!(satisfies(&a, &e3).unwrap().holds());
                }
                Err(_) => assert!(!r.left_division),
            }
            match right_companion(&alg) {
                Ok(a) => {
                    assert!(r.right_division);
                    assert!(satisfies(&a, &e2).unwrap().holds());
                    assert!(satisfies(&a, &e4).unwrap().holds());
                }
                Err(_) => assert!(!r.right_division),
            }
            if r.quasigroup_like {
                let full = right_companion(&left_companion(&alg).unwrap()).unwrap();
                assert!(satisfies(&full, &q3).unwrap().holds());
                assert!(satisfies(&full, &q6).unwrap().holds());
            }
        }
    }
}

#[test]
fn companion_sets_contain_exactly_the_valid_tables() {
    // Oracle: every `\` table of order 2 satisfying x * (x \ y) = y.
    let [e1, ..] = laws::evans();
    for alg in common::all_algebras(2) {
        let oracle: Vec<Vec<u8>> = common::all_tables(2)
            .filter(|t| {
                let a = alg.clone().with_table(Op::LDiv, t.clone()).unwrap();
                satisfies(&a, &e1).unwrap().holds()
            })
            .collect();
        match all_left_companions(&alg) {
            Ok(found) => assert_eq!(found, oracle),
            Err(_) => assert!(oracle.is_empty()),
        }
        let both = companion_completions(&alg, CompanionPolicy::DeriveBoth);
        let expected = all_left_companions(&alg).is_ok() && all_right_companions(&alg).is_ok();
        assert_eq!(both.is_ok(), expected);
    }
}

#[test]
fn named_algebras() {
    let z3 = named::cyclic_group_with_divisions(3);
    for id in laws::evans().iter().chain(laws::birkhoff().iter()) {
        assert!(satisfies(&z3, id).unwrap().holds(), "{id}");
    }
    assert!(property_report(&named::cyclic_group(5)).abelian_group);
    let lp = property_report(&named::left_projection(2));
    assert!(lp.right_division && !lp.commutative && lp.two_sided_identity.is_none());
    assert_eq!(lp.right_identities, vec![0, 1]);
}

#[test]
fn table_format_round_trip_and_rejections() {
    let z3 = named::cyclic_group_with_divisions(3);
    assert_eq!(read_table(&write_table(&z3)).unwrap(), z3);
    let lp = named::left_projection(2);
    let text = "magma 1\norder 2\nop *\n0 0\n1 1\n";
    assert_eq!(write_table(&lp), text);
    assert_eq!(read_table(text).unwrap(), lp);
    assert!(read_table("magma 1\norder 2\nop *\n0 2\n1 1\n").is_err());
    assert!(read_table("magma 1\norder 2\nop *\n0 0\n1 1\nop *\n0 0\n1 1\n").is_err());
}

#[test]
fn automorphisms_and_orbits() {
    assert_eq!(automorphism_count(&named::cyclic_group(5)), 4);
    let n = 3;
    let total: u64 = common::all_algebras(n)
        .filter(is_canonical)
        .map(|a| orbit_size(&a))
        .sum();
    assert_eq!(total, 3u64.pow(9));
}

fn order4() -> impl Strategy<Value = Algebra> {
    prop::collection::vec(0u8..4, 16).prop_map(|t| Algebra::new(4, t).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_a_class_invariant(
        alg in order4(),
        perm in Just((0..4u8).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let c = canonical_form(&alg);
        prop_assert_eq!(canonical_form(&c), c.clone());
        let moved = permute(&alg, &perm);
        prop_assert_eq!(canonical_form(&moved), c);
        prop_assert!(is_isomorphic(&alg, &moved));
    }
}
