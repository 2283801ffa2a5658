use crate::finder::Constraint;
use crate::identity::{laws, Op};
use crate::magma::{named, Algebra, CompanionPolicy, Predicate};

const FINITE_NOTE: &str =
    "checked on finite carriers only, where each translation is one-to-one exactly when it is onto";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaKind {
    /// Every model of the hypotheses satisfies every conclusion.
    Implication,
    /// Some model satisfies hypotheses and conclusions together; the first
    /// one found must be isomorphic to `expected`.
    Existence { expected: Algebra },
}

/// One claim about groupoids: hypotheses imply conclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaSpec {
    pub id: &'static str,
    /// Short statement of the claim.
    pub label: &'static str,
    pub kind: LemmaKind,
    pub hypotheses: Vec<Constraint>,
    pub conclusions: Vec<Constraint>,
    /// Division tables searched together with `*` (their hypotheses are
    /// identities over them).
    pub synthesized: Vec<Op>,
    /// Division tables derived from `*` for the conclusions, over every
    /// valid companion.
    pub companion_policy: CompanionPolicy,
    pub note: String,
}

impl LemmaSpec {
    fn implication(
        id: &'static str,
        label: &'static str,
        hypotheses: Vec<Constraint>,
        conclusions: Vec<Constraint>,
    ) -> LemmaSpec {
        let mut ops: Vec<Op> = conclusions.iter().flat_map(Constraint::ops).collect();
        ops.sort();
        ops.dedup();
        let companion_policy = match (ops.contains(&Op::LDiv), ops.contains(&Op::RDiv)) {
            (false, false) => CompanionPolicy::None,
            (true, false) => CompanionPolicy::DeriveLeft,
            (false, true) => CompanionPolicy::DeriveRight,
            (true, true) => CompanionPolicy::DeriveBoth,
        };
        LemmaSpec {
            id,
            label,
            kind: LemmaKind::Implication,
            hypotheses,
            conclusions,
            synthesized: vec![Op::Mul],
            companion_policy,
            note: FINITE_NOTE.to_string(),
        }
    }

    fn note(mut self, extra: &str) -> LemmaSpec {
        self.note = format!("{}; {extra}", self.note);
        self
    }

    pub fn is_existence(&self) -> bool {
        matches!(self.kind, LemmaKind::Existence { .. })
    }

    /// Suggested order bound: 5 when hypotheses pin both rows and columns
    /// to permutations, 4 when only one side, 3 otherwise.
    pub fn default_max_order(&self) -> usize {
        let has = |ps: &[Predicate]| {
            self.hypotheses.iter().any(|c| {
                matches!(c, Constraint::Structural { predicate, .. } if c.is_positive() && ps.contains(predicate))
            })
        };
        let rows = has(&[
            Predicate::LeftCancellative,
            Predicate::LeftDivision,
            Predicate::Quasigroup,
        ]);
        let cols = has(&[
            Predicate::RightCancellative,
            Predicate::RightDivision,
            Predicate::Quasigroup,
        ]);
        match (rows, cols) {
            (true, true) => 5,
            (true, false) | (false, true) => 4,
            _ => 3,
        }
    }
}

fn p(pred: Predicate) -> Constraint {
    Constraint::prop(pred)
}

fn law(text: &str) -> Constraint {
    Constraint::law(text)
}

use Predicate::{
    Associative, Commutative, HasTwoSidedIdentity, LeftCancellative as LC, LeftDivision as LD,
    Quasigroup, RightCancellative as RC, RightDivision as RD,
};

/// "A commutative group which satisfies each of the four reduced
/// associativity laws and both invertive laws."
fn abelian_group() -> Vec<Constraint> {
    vec![
        p(Associative),
        p(Commutative),
        p(Quasigroup),
        p(HasTwoSidedIdentity),
        law(laws::ASSOCIATIVE),
        law(laws::GRASSMANN),
        law(laws::LEFT_PERMUTABLE),
        law(laws::CYCLIC),
        law(laws::ABEL_GRASSMANN),
        law(laws::RIGHT_INVERTIVE),
    ]
}

/// The fixed list of claims, in a stable order.
#[rustfmt::skip]
pub fn catalog() -> Vec<LemmaSpec> {
    let cyc = || law(laws::CYCLIC);
    let tar = || law(laws::TARSKI);
    let imp = LemmaSpec::implication;
    let mut out = vec![
        // cyclic law
        imp("CYCL-RD-ASSOC", "right division + cyclic law => associative",
            vec![p(RD), cyc()], vec![p(Associative)]),
        imp("CYCL-RD-COMM", "right division + cyclic law => commutative",
            vec![p(RD), cyc()], vec![p(Commutative)]),
        imp("CYCL-RDRC-LID", "right division + right cancellation + cyclic law => (x/x) is a left identity",
            vec![p(RD), p(RC), cyc()], vec![law("z = (x / x) * z")]),
        imp("CYCL-RDRC-UNIQ", "right division + right cancellation + cyclic law => x/x = y/y",
            vec![p(RD), p(RC), cyc()], vec![law("x / x = y / y")]),
        imp("CYCL-RDRC-GROUP", "right division + right cancellation + cyclic law => abelian group",
            vec![p(RD), p(RC), cyc()], abelian_group()),
        imp("CYCL-RDLC-QID", "right division + left cancellation + cyclic law => y/y = x\\x",
            vec![p(RD), p(LC), cyc()], vec![law("y / y = x \\ x")]),
        imp("CYCL-RDLC-ID", "right division + left cancellation + cyclic law => identity element",
            vec![p(RD), p(LC), cyc()], vec![p(HasTwoSidedIdentity)]),
        imp("CYCL-RDLC-GROUP", "right division + left cancellation + cyclic law => abelian group",
            vec![p(RD), p(LC), cyc()], abelian_group()),
        imp("CYCL-LD-ASSOC", "left division + cyclic law => associative",
            vec![p(LD), cyc()], vec![p(Associative)]),
        imp("CYCL-LD-COMM", "left division + cyclic law => commutative",
            vec![p(LD), cyc()], vec![p(Commutative)]),
        imp("CYCL-LDLC-LID", "left division + left cancellation + cyclic law => (y\\y) is a left identity",
            vec![p(LD), p(LC), cyc()], vec![law("x = (y \\ y) * x")]),
        imp("CYCL-LDLC-UNIQ", "left division + left cancellation + cyclic law => x\\x = y\\y",
            vec![p(LD), p(LC), cyc()], vec![law("x \\ x = y \\ y")]),
        imp("CYCL-LDLC-GROUP", "left division + left cancellation + cyclic law => abelian group",
            vec![p(LD), p(LC), cyc()], abelian_group()),
        imp("CYCL-LDRC-GROUP", "left division + right cancellation + cyclic law => abelian group",
            vec![p(LD), p(RC), cyc()], abelian_group()),
        // Tarski law
        imp("TARKI-LD-COMM", "left division + Tarski law => commutative",
            vec![p(LD), tar()], vec![p(Commutative)]),
        imp("TARKI-LD-ASSOC", "left division + Tarski law => associative",
            vec![p(LD), tar()], vec![p(Associative)]),
        imp("TARKI-LDLC-ID", "left division + left cancellation + Tarski law => (y\\y) is a two-sided identity",
            vec![p(LD), p(LC), tar()], vec![law("x = x * (y \\ y)"), law("x = (y \\ y) * x")]),
        imp("TARKI-LDLC-UNIQ", "left division + left cancellation + Tarski law => x\\x = y\\y",
            vec![p(LD), p(LC), tar()], vec![law("x \\ x = y \\ y")]),
        imp("TARKI-LDLC-GROUP", "left division + left cancellation + Tarski law => abelian group",
            vec![p(LD), p(LC), tar()], abelian_group()),
        imp("TARKI-LDRC-MIRROR", "left division + right cancellation + Tarski law => x\\y = y/x",
            vec![p(LD), p(RC), tar()], vec![law("x \\ y = y / x")]),
        imp("TARKI-LDRC-LID", "left division + right cancellation + Tarski law => (x/x) is a left identity",
            vec![p(LD), p(RC), tar()], vec![law("y = (x / x) * y")]),
        imp("TARKI-LDRC-UNIQ", "left division + right cancellation + Tarski law => x/x = y/y",
            vec![p(LD), p(RC), tar()], vec![law("x / x = y / y")])
            .note("reading with right cancellation, as the derivation uses it"),
        imp("TARKI-LDLC-UNIQ-SLASH", "left division + left cancellation + Tarski law => x/x = y/y",
            vec![p(LD), p(LC), tar()], vec![law("x / x = y / y")])
            .note("reading with the stated left cancellation hypothesis"),
        imp("TARKI-LDRC-GROUP", "left division + right cancellation + Tarski law => abelian group",
            vec![p(LD), p(RC), tar()], abelian_group()),
        imp("TARKI-RDRC-RID", "right division + right cancellation + Tarski law => (y/y) is a right identity",
            vec![p(RD), p(RC), tar()], vec![law("x * (y / y) = x")]),
        imp("TARKI-RDRC-ASSOC", "right division + right cancellation + Tarski law => associative",
            vec![p(RD), p(RC), tar()], vec![p(Associative)]),
        imp("TARKI-LC-ASSOC", "left cancellation + Tarski law => associative",
            vec![p(LC), tar()], vec![p(Associative)])
            .note("left cancellation alone already forces left division here"),
        imp("TARKI-LC-COMM", "left cancellation + Tarski law => commutative",
            vec![p(LC), tar()], vec![law("x * y = y * x")]),
        imp("TARKI-LCRD-LID", "left cancellation + right division + Tarski law => (x/x) is a left identity",
            vec![p(LC), p(RD), tar()], vec![law("(x / x) * y = y")]),
        imp("TARKI-LCRD-UNIQ", "left cancellation + right division + Tarski law => x/x = y/y",
            vec![p(LC), p(RD), tar()], vec![law("x / x = y / y")]),
        imp("TARKI-RDLC-GROUP", "right division + left cancellation + Tarski law => abelian group",
            vec![p(RD), p(LC), tar()], abelian_group()),
        // division identities
        imp("Q3", "right division + left cancellation => (x/y)\\x = y",
            vec![p(RD), p(LC)], vec![law(laws::BIRKHOFF_3)]),
        imp("Q6", "left division + right cancellation => y/(x\\y) = x",
            vec![p(LD), p(RC)], vec![law(laws::BIRKHOFF_6)]),
        imp("TARKI-COMM-COND", "Tarski law + every left translation onto => commutative and all reduced laws",
            vec![tar(), p(LD)],
            vec![
                law("x * (x * y) = (x * y) * x"),
                p(Commutative),
                law(laws::ASSOCIATIVE),
                law(laws::GRASSMANN),
                law(laws::LEFT_PERMUTABLE),
                law(laws::CYCLIC),
            ])
            .note("surjectivity is required of each left translation; onto-ness of the whole product does not suffice (see TARKI-RD-NONCOMM)"),
    ];

    let mut def_equiv = imp(
        "DEF-EQUIV",
        "Evans quasigroup identities => Birkhoff division identities",
        laws::evans().into_iter().map(Constraint::holds).collect(),
        laws::birkhoff().into_iter().map(Constraint::holds).collect(),
    );
    def_equiv.synthesized = vec![Op::Mul, Op::LDiv, Op::RDiv];
    def_equiv.companion_policy = CompanionPolicy::None;
    out.push(def_equiv);

    out.push(LemmaSpec {
        id: "TARKI-RD-NONCOMM",
        label: "some right division Tarski groupoid is neither commutative nor has an identity",
        kind: LemmaKind::Existence {
            expected: named::left_projection(2),
        },
        hypotheses: vec![p(RD), tar()],
        conclusions: vec![p(Commutative).negated(), p(HasTwoSidedIdentity).negated()],
        synthesized: vec![Op::Mul],
        companion_policy: CompanionPolicy::None,
        note: format!("{FINITE_NOTE}; the expected witness is x * y = x on two elements, compared up to isomorphism"),
    });
    out
}

pub fn lookup(id: &str) -> Option<LemmaSpec> {
    catalog().into_iter().find(|l| l.id == id)
}
