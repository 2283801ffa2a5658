mod common;

use groupoid_lab::finder::{
    find_counterexample, parse_constraints, search, Constraint, ConstraintSet, Mode, PartialTables,
    Refutation, SearchOptions, SearchStatus,
};
use groupoid_lab::identity::{laws, Op};
use groupoid_lab::magma::{canonical_form, named, CompanionPolicy, Predicate};

fn count(n: usize, constraints: &str) -> u64 {
    let cs = ConstraintSet::new(n, parse_constraints(constraints).unwrap()).unwrap();
    let out = search(&cs, &SearchOptions::mode(Mode::Count));
    assert_eq!(out.status, SearchStatus::Complete);
    out.count
}

fn count_iso(n: usize, constraints: &str) -> (u64, Option<u64>) {
    let cs = ConstraintSet::new(n, parse_constraints(constraints).unwrap()).unwrap();
    let out = search(
        &cs,
        &SearchOptions {
            mode: Mode::Count,
            up_to_iso: true,
            symmetry_breaking: true,
            ..Default::default()
        },
    );
    (out.count, out.stats.labeled_models)
}

const ASSOC: &str = r#"id:"x * (y * z) = (x * y) * z""#;

#[test]
fn counts_match_generate_and_test() {
    type Pred = fn(&[u8], usize) -> bool;
    let cases: [(&str, Pred); 9] = [
        ("", |_, _| true),
        (ASSOC, common::is_associative),
        ("prop:associative", common::is_associative),
        ("prop:commutative", common::is_commutative),
        ("prop:quasigroup", common::is_quasigroup),
        ("prop:left_division", common::rows_are_permutations),
        (r#"id:"x * (y * z) = (z * x) * y""#, common::is_cyclic),
        (
            r#"id:"x * (z * y) = (x * y) * z", prop:!commutative"#,
            |t, n| common::is_tarski(t, n) && !common::is_commutative(t, n),
        ),
        ("prop:commutative, prop:!associative", |t, n| {
            common::is_commutative(t, n) && !common::is_associative(t, n)
        }),
    ];
    for n in 1..=3 {
        for (text, pred) in cases {
            assert_eq!(
                count(n, text),
                common::count_tables(n, pred),
                "order {n}: {text}"
            );
        }
    }
}

#[test]
fn spot_values() {
    assert_eq!(count(2, ""), 16);
    assert_eq!(count(2, ASSOC), 8);
    assert_eq!(count(2, "prop:quasigroup"), 2);
    assert_eq!(count(3, "prop:quasigroup"), 12);
}

#[test]
fn latin_squares_match_plain_backtracking() {
    for n in 1..=5 {
        assert_eq!(
            count(n, "prop:quasigroup"),
            common::latin_squares(n),
            "order {n}"
        );
    }
}

#[test]
fn isomorphism_classes_match_oracle() {
    for n in 1..=3 {
        for (text, pred) in [
            ("", (|_, _| true) as fn(&[u8], usize) -> bool),
            (ASSOC, common::is_associative),
            ("prop:quasigroup", common::is_quasigroup),
        ] {
            let tables: Vec<Vec<u8>> = common::all_tables(n).filter(|t| pred(t, n)).collect();
            let (classes, labeled) = count_iso(n, text);
            assert_eq!(
                classes as usize,
                common::iso_classes(&tables, n),
                "order {n}: {text}"
            );
            assert_eq!(labeled, Some(tables.len() as u64));
        }
    }
    // quasigroups of order 4 and 5 up to isomorphism
    assert_eq!(count_iso(4, "prop:quasigroup"), (35, Some(576)));
    assert_eq!(count_iso(5, "prop:quasigroup"), (1411, Some(161_280)));
}

#[test]
fn symmetry_breaking_does_not_change_class_counts() {
    for text in ["", ASSOC, "prop:commutative"] {
        let cs = ConstraintSet::new(3, parse_constraints(text).unwrap()).unwrap();
        let with = search(
            &cs,
            &SearchOptions {
                up_to_iso: true,
                symmetry_breaking: true,
                ..Default::default()
            },
        );
        let without = search(
            &cs,
            &SearchOptions {
                up_to_iso: true,
                ..Default::default()
            },
        );
        assert_eq!(with.models, without.models);
    }
}

#[test]
fn models_come_out_in_lexicographic_order() {
    let cs = ConstraintSet::new(3, vec![Constraint::prop(Predicate::Commutative)]).unwrap();
    let out = search(&cs, &SearchOptions::default());
    let tables: Vec<Vec<u8>> = out.models.iter().map(|m| m.mul_table().to_vec()).collect();
    let mut sorted = tables.clone();
    sorted.sort();
    assert_eq!(tables, sorted);
}

#[test]
fn parallel_matches_sequential() {
    for text in [
        "prop:quasigroup",
        ASSOC,
        r#"id:"x * (y * z) = (z * x) * y""#,
    ] {
        let cs = ConstraintSet::new(4, parse_constraints(text).unwrap()).unwrap();
        let seq = search(&cs, &SearchOptions::default());
        let par = search(
            &cs,
            &SearchOptions {
                parallel: 4,
                ..Default::default()
            },
        );
        assert_eq!(seq.models, par.models, "{text}");
        assert_eq!(seq.count, par.count);
    }
}

#[test]
fn propagation_beats_enumeration() {
    let cs = ConstraintSet::new(3, vec![Constraint::prop(Predicate::Quasigroup)]).unwrap();
    let out = search(&cs, &SearchOptions::default());
    assert_eq!(out.count, 12);
    assert!(out.stats.nodes < 19_683, "{} nodes", out.stats.nodes);
}

#[test]
fn budget_is_reported() {
    let cs = ConstraintSet::new(4, vec![]).unwrap();
    let out = search(
        &cs,
        &SearchOptions {
            budget: Some(100),
            ..Default::default()
        },
    );
    assert_eq!(out.status, SearchStatus::BudgetExhausted);
}

#[test]
fn finds_the_projection_example() {
    let cs = ConstraintSet::new(
        2,
        parse_constraints(
            r#"id:"x * (z * y) = (x * y) * z", prop:right_division, prop:!commutative"#,
        )
        .unwrap(),
    )
    .unwrap();
    let out = search(&cs, &SearchOptions::default());
    assert!(!out.models.is_empty());
    let lp = canonical_form(&named::left_projection(2));
    assert!(out.models.iter().all(|m| canonical_form(m) == lp));
}

#[test]
fn division_tables_are_synthesized() {
    let cs = ConstraintSet::with_ops(
        3,
        laws::evans().into_iter().map(Constraint::holds).collect(),
        &[Op::Mul, Op::LDiv, Op::RDiv],
    )
    .unwrap();
    let out = search(&cs, &SearchOptions::default());
    assert_eq!(out.count, 12);
    for m in &out.models {
        assert!(m.has_table(Op::LDiv) && m.has_table(Op::RDiv));
        assert!(cs.first_violation(m).is_none());
    }
}

#[test]
fn counterexamples() {
    let tarski = Constraint::law(laws::TARSKI);
    let comm = Constraint::prop(Predicate::Commutative);
    match find_counterexample(
        std::slice::from_ref(&tarski),
        &[Op::Mul],
        &comm,
        CompanionPolicy::None,
        3,
        None,
    ) {
        Refutation::Found { algebra, witness } => {
            assert_eq!(algebra.order(), 2);
            assert_eq!(witness.values_text(), "0,1");
        }
        other => panic!("{other:?}"),
    }
    let ld = Constraint::prop(Predicate::LeftDivision);
    assert_eq!(
        find_counterexample(
            &[tarski, ld],
            &[Op::Mul],
            &comm,
            CompanionPolicy::None,
            4,
            None
        ),
        Refutation::None
    );
    // a conclusion mentioning `/` is checked against derived companions
    let rd = Constraint::prop(Predicate::RightDivision);
    let rc = Constraint::prop(Predicate::RightCancellative);
    let cyc = Constraint::law(laws::CYCLIC);
    let uniq = Constraint::law("x / x = y / y");
    assert_eq!(
        find_counterexample(
            &[rd.clone(), rc, cyc],
            &[Op::Mul],
            &uniq,
            CompanionPolicy::DeriveRight,
            4,
            None
        ),
        Refutation::None
    );
    // without the cyclic law there is a right division algebra with x/x != y/y
    assert!(matches!(
        find_counterexample(
            &[rd],
            &[Op::Mul],
            &uniq,
            CompanionPolicy::DeriveRight,
            3,
            None
        ),
        Refutation::Found { .. }
    ));
}

#[test]
fn partial_tables_propagate() {
    let cs = ConstraintSet::new(3, vec![Constraint::prop(Predicate::Quasigroup)]).unwrap();
    let mut p = PartialTables::new(&cs);
    p.assign(Op::Mul, 0, 0, 0).unwrap();
    p.assign(Op::Mul, 0, 1, 1).unwrap();
    p.propagate().unwrap();
    assert!(p.is_decided(Op::Mul, 0, 2));
}
