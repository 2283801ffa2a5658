//! Looks for small countermodels of implications between laws.

use groupoid_lab::finder::{find_counterexample, Constraint, Refutation};
use groupoid_lab::identity::{laws, Op};
use groupoid_lab::magma::{write_table, CompanionPolicy, Predicate};

fn report(name: &str, hyps: &[Constraint], conclusion: Constraint) {
    let r = find_counterexample(
        hyps,
        &[Op::Mul],
        &conclusion,
        CompanionPolicy::None,
        4,
        None,
    );
    match r {
        Refutation::None => println!("{name}: no countermodel up to order 4"),
        Refutation::Found { algebra, witness } => {
            println!("{name}: {witness}");
            print!("{}", write_table(&algebra));
        }
        Refutation::Inconclusive { order } => println!("{name}: budget ran out at order {order}"),
    }
}

fn main() {
    let tarski = Constraint::law(laws::TARSKI);
    report(
        "Tarski => commutative",
        std::slice::from_ref(&tarski),
        Constraint::prop(Predicate::Commutative),
    );
    report(
        "Tarski + right division => commutative",
        &[tarski.clone(), Constraint::prop(Predicate::RightDivision)],
        Constraint::prop(Predicate::Commutative),
    );
    report(
        "Tarski + left division => commutative",
        &[tarski, Constraint::prop(Predicate::LeftDivision)],
        Constraint::prop(Predicate::Commutative),
    );
    report(
        "cyclic => associative",
        &[Constraint::law(laws::CYCLIC)],
        Constraint::prop(Predicate::Associative),
    );
}
