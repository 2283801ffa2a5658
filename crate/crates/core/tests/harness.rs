mod common;

use groupoid_lab::finder::{find_counterexample, Constraint, Refutation};
use groupoid_lab::harness::{
    catalog, check_on_algebra, lookup, parse_report, report_file, verify, verify_spec,
    verify_specs, AlgebraCheck, LemmaKind, Outcome,
};
use groupoid_lab::magma::{named, Predicate};

#[test]
fn catalog_holds_up_to_order_three() {
    let s = verify_specs(&catalog(), 3, None, 1);
    for r in &s.reports {
        assert!(r.outcome.is_success(), "{}: {:?}", r.id, r.outcome);
        assert_eq!(
            r.models_per_order.len(),
            if r.id == "TARKI-RD-NONCOMM" { 2 } else { 3 }
        );
    }
}

#[test]
fn no_single_table_contradicts_a_verified_claim() {
    for spec in catalog().iter().filter(|s| !s.is_existence()) {
        for n in 1..=3 {
            for alg in common::all_algebras(n) {
                if let AlgebraCheck::ConclusionFails { witness, .. } = check_on_algebra(spec, &alg)
                {
                    panic!("{} fails on {alg}: {witness}", spec.id);
                }
            }
        }
    }
}

#[test]
fn agrees_with_per_conclusion_refutation() {
    for spec in catalog().iter().filter(|s| !s.is_existence()) {
        for c in &spec.conclusions {
            let r = find_counterexample(
                &spec.hypotheses,
                &spec.synthesized,
                c,
                spec.companion_policy,
                3,
                None,
            );
            assert_eq!(r, Refutation::None, "{} / {c}", spec.id);
        }
    }
}

#[test]
fn hypothesis_model_counts_match_oracle() {
    let r = verify("CYCL-RD-ASSOC", 3, None).unwrap();
    let oracle: Vec<u64> = (1..=3)
        .map(|n| {
            common::count_tables(n, |t, n| {
                common::cols_are_permutations(t, n) && common::is_cyclic(t, n)
            })
        })
        .collect();
    assert_eq!(r.models_per_order, oracle);

    let r = verify("Q3", 3, None).unwrap();
    let oracle: Vec<u64> = (1..=3)
        .map(|n| common::count_tables(n, common::is_quasigroup))
        .collect();
    assert_eq!(r.models_per_order, oracle);
}

#[test]
fn larger_bounds_extend_smaller_ones() {
    for spec in catalog().iter().filter(|s| !s.is_existence()).take(8) {
        let a = verify_spec(spec, 2, None);
        let b = verify_spec(spec, 3, None);
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.models_per_order[..], b.models_per_order[..2]);
    }
}

#[test]
fn mutated_claims_are_refuted() {
    for mut spec in catalog() {
        match spec.kind {
            LemmaKind::Implication => {
                spec.conclusions = vec![Constraint::law("x * y = x")];
                let r = verify_spec(&spec, 2, None);
                assert!(
                    matches!(r.outcome, Outcome::Counterexample { order: 2, .. }),
                    "{}: {:?}",
                    spec.id,
                    r.outcome
                );
            }
            LemmaKind::Existence { .. } => {
                let mut wrong = spec.clone();
                wrong.kind = LemmaKind::Existence {
                    expected: named::right_projection(2),
                };
                assert!(matches!(
                    verify_spec(&wrong, 3, None).outcome,
                    Outcome::WrongWitness(_)
                ));
                spec.hypotheses
                    .push(Constraint::prop(Predicate::Commutative));
                assert_eq!(verify_spec(&spec, 3, None).outcome, Outcome::NoWitness);
            }
        }
    }
}

#[test]
fn dropping_a_hypothesis_exposes_the_projection() {
    let mut spec = lookup("TARKI-LD-COMM").unwrap();
    spec.hypotheses
        .retain(|h| !matches!(h, Constraint::Structural { .. }));
    match verify_spec(&spec, 3, None).outcome {
        Outcome::Counterexample { order, witness, .. } => {
            assert_eq!(order, 2);
            assert_eq!(witness.values_text(), "0,1");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn parallel_reports_keep_catalog_order() {
    let seq = verify_specs(&catalog(), 3, None, 1);
    let par = verify_specs(&catalog(), 3, None, 4);
    let ids = |s: &groupoid_lab::harness::Summary| {
        s.reports.iter().map(|r| r.id.clone()).collect::<Vec<_>>()
    };
    assert_eq!(ids(&seq), ids(&par));
    for (a, b) in seq.reports.iter().zip(&par.reports) {
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(a.models_per_order, b.models_per_order);
    }
}

#[test]
fn report_file_lists_every_claim() {
    let s = verify_specs(&catalog(), 2, None, 1);
    let blocks = parse_report(&report_file(&s));
    assert_eq!(blocks.len(), catalog().len());
    for (b, spec) in blocks.iter().zip(catalog()) {
        assert_eq!(b["lemma"], spec.id);
        assert!(b["note"].contains("finite"));
    }
}

#[test]
fn mutated_group_is_rejected() {
    let spec = lookup("DEF-EQUIV").unwrap();
    let z3 = named::cyclic_group_with_divisions(3);
    assert_eq!(check_on_algebra(&spec, &z3), AlgebraCheck::Holds);
    for row in 0..3 {
        for col in 0..3 {
            let old = z3.mul(row, col);
            let bad = z3
                .with_cell(
                    groupoid_lab::identity::Op::Mul,
                    row as usize,
                    col as usize,
                    (old + 1) % 3,
                )
                .unwrap();
            assert!(!matches!(
                check_on_algebra(&spec, &bad),
                AlgebraCheck::Holds
            ));
            let stripped = bad.without_table(groupoid_lab::identity::Op::LDiv);
            assert!(!matches!(
                check_on_algebra(&spec, &stripped),
                AlgebraCheck::Holds
            ));
        }
    }
}
