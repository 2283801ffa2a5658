use std::fmt;

use thiserror::Error;

use crate::identity::{parse_identity, Identity, Op, ParseError};
use crate::magma::{
    check_predicate, satisfies, Algebra, Assignment, EvalError, Predicate, Subject, Verdict,
    Witness, MAX_ORDER,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Identity {
        identity: Identity,
        polarity: Polarity,
    },
    Structural {
        predicate: Predicate,
        polarity: Polarity,
    },
}

impl Constraint {
    pub fn holds(identity: Identity) -> Constraint {
        Constraint::Identity {
            identity,
            polarity: Polarity::Holds,
        }
    }

    pub fn prop(predicate: Predicate) -> Constraint {
        Constraint::Structural {
            predicate,
            polarity: Polarity::Holds,
        }
    }

    /// Parses identity text; panics on malformed input, for built-in laws.
    pub fn law(text: &str) -> Constraint {
        Constraint::holds(parse_identity(text).expect("well-formed law"))
    }

    pub fn polarity(&self) -> Polarity {
        match self {
            Constraint::Identity { polarity, .. } | Constraint::Structural { polarity, .. } => {
                *polarity
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.polarity() == Polarity::Holds
    }

    pub fn negated(&self) -> Constraint {
        let flip = |p| match p {
            Polarity::Holds => Polarity::Fails,
            Polarity::Fails => Polarity::Holds,
        };
        match self {
            Constraint::Identity { identity, polarity } => Constraint::Identity {
                identity: identity.clone(),
                polarity: flip(*polarity),
            },
            Constraint::Structural {
                predicate,
                polarity,
            } => Constraint::Structural {
                predicate: *predicate,
                polarity: flip(*polarity),
            },
        }
    }

    /// Operation symbols the constraint reads.
    pub fn ops(&self) -> Vec<Op> {
        match self {
            Constraint::Identity { identity, .. } => identity.ops(),
            Constraint::Structural { .. } => vec![Op::Mul],
        }
    }

    /// Decides the constraint on a complete algebra.
    pub fn check(&self, algebra: &Algebra) -> Result<Verdict, EvalError> {
        let (subject, verdict) = match self {
            Constraint::Identity { identity, .. } => (
                Subject::Identity(identity.clone()),
                satisfies(algebra, identity)?,
            ),
            Constraint::Structural { predicate, .. } => (
                Subject::Predicate(*predicate),
                check_predicate(algebra, *predicate),
            ),
        };
        Ok(match (self.polarity(), verdict) {
            (Polarity::Holds, v) => v,
            (Polarity::Fails, Verdict::Fails(_)) => Verdict::Holds,
            (Polarity::Fails, Verdict::Holds) => Verdict::Fails(Witness {
                subject: Subject::Negation(Box::new(subject)),
                assignment: Assignment::new(),
                detail: Some("required to fail but holds everywhere".into()),
            }),
        })
    }
}

/// Mini-language form: `id:"<identity>"`, `prop:<name>`, with `!` after
/// the colon for negation.
impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bang = if self.is_positive() { "" } else { "!" };
        match self {
            Constraint::Identity { identity, .. } => write!(f, "id:{bang}\"{identity}\""),
            Constraint::Structural { predicate, .. } => write!(f, "prop:{bang}{predicate}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("in identity at byte {offset}: {source}")]
    Identity {
        offset: usize,
        #[source]
        source: ParseError,
    },
    #[error("order must be between 1 and {MAX_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("constraint `{constraint}` uses `{op}`, which is not being synthesized")]
    UnknownOp { constraint: String, op: Op },
}

/// Parses a comma-separated constraint list such as
/// `id:"x * (z * y) = (x * y) * z", prop:right_division, prop:!commutative`.
/// A leading `!` before `id:`/`prop:` is accepted as well.
pub fn parse_constraints(text: &str) -> Result<Vec<Constraint>, ConstraintError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let err = |offset: usize, message: String| ConstraintError::Syntax { offset, message };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            if out.is_empty() {
                return Ok(out);
            }
            return Err(err(pos, "expected a constraint after `,`".into()));
        }
        let mut negated = false;
        if bytes[pos] == b'!' {
            negated = true;
            pos += 1;
        }
        let rest = &text[pos..];
        let constraint = if let Some(body) = rest.strip_prefix("id:") {
            pos += 3;
            if body.starts_with('!') {
                negated = !negated;
                pos += 1;
            }
            if bytes.get(pos) != Some(&b'"') {
                return Err(err(pos, "expected `\"` to open the identity".into()));
            }
            let start = pos + 1;
            let end = text[start..]
                .find('"')
                .map(|i| start + i)
                .ok_or_else(|| err(pos, "unterminated identity string".into()))?;
            let identity =
                parse_identity(&text[start..end]).map_err(|source| ConstraintError::Identity {
                    offset: start,
                    source,
                })?;
            pos = end + 1;
            Constraint::holds(identity)
        } else if rest.starts_with("prop:") {
            pos += 5;
            if bytes.get(pos) == Some(&b'!') {
                negated = !negated;
                pos += 1;
            }
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
                pos += 1;
            }
            let name = &text[start..pos];
            let predicate = name.parse::<Predicate>().map_err(|m| err(start, m))?;
            Constraint::prop(predicate)
        } else {
            return Err(err(pos, "expected `id:` or `prop:`".into()));
        };
        out.push(if negated {
            constraint.negated()
        } else {
            constraint
        });
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => return Ok(out),
            Some(b',') => pos += 1,
            Some(_) => return Err(err(pos, "expected `,` between constraints".into())),
        }
    }
}

pub fn format_constraints(constraints: &[Constraint]) -> String {
    constraints
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// A search problem: carrier size, constraints, and the operation tables to
/// synthesize (`*` always, `\` and `/` on request).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet {
    order: usize,
    constraints: Vec<Constraint>,
    synthesized: Vec<Op>,
}

impl ConstraintSet {
    pub fn new(order: usize, constraints: Vec<Constraint>) -> Result<Self, ConstraintError> {
        ConstraintSet::with_ops(order, constraints, &[Op::Mul])
    }

    pub fn with_ops(
        order: usize,
        constraints: Vec<Constraint>,
        ops: &[Op],
    ) -> Result<Self, ConstraintError> {
        if order == 0 || order > MAX_ORDER {
            return Err(ConstraintError::BadOrder(order));
        }
        let mut synthesized: Vec<Op> = Op::ALL
            .into_iter()
            .filter(|op| *op == Op::Mul || ops.contains(op))
            .collect();
        synthesized.dedup();
        for c in &constraints {
            if let Some(op) = c.ops().into_iter().find(|op| !synthesized.contains(op)) {
                return Err(ConstraintError::UnknownOp {
                    constraint: c.to_string(),
                    op,
                });
            }
        }
        Ok(ConstraintSet {
            order,
            constraints,
            synthesized,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn synthesized(&self) -> &[Op] {
        &self.synthesized
    }

    /// Re-checks every constraint on a complete algebra through the
    /// table-scanning evaluator.
    pub fn first_violation(&self, algebra: &Algebra) -> Option<Witness> {
        self.constraints
            .iter()
            .find_map(|c| match c.check(algebra) {
                Ok(Verdict::Holds) => None,
                Ok(Verdict::Fails(w)) => Some(w),
                Err(e) => Some(Witness {
                    subject: match c {
                        Constraint::Identity { identity, .. } => {
                            Subject::Identity(identity.clone())
                        }
                        Constraint::Structural { predicate, .. } => Subject::Predicate(*predicate),
                    },
                    assignment: Assignment::new(),
                    detail: Some(e.to_string()),
                }),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::laws;

    #[test]
    fn parses_the_mini_language() {
        let cs = parse_constraints(
            r#"id:"x * (z * y) = (x * y) * z", prop:right_division, prop:!commutative"#,
        )
        .unwrap();
        assert_eq!(
            cs,
            vec![
                Constraint::holds(laws::tarski()),
                Constraint::prop(Predicate::RightDivision),
                Constraint::prop(Predicate::Commutative).negated(),
            ]
        );
        let again = parse_constraints(&format_constraints(&cs)).unwrap();
        assert_eq!(again, cs);
    }

    #[test]
    fn leading_bang_and_empty_input() {
        assert_eq!(
            parse_constraints("!prop:associative").unwrap(),
            vec![Constraint::prop(Predicate::Associative).negated()]
        );
        assert_eq!(parse_constraints("   ").unwrap(), vec![]);
        assert_eq!(
            parse_constraints(r#"id:!"x = x""#).unwrap()[0].polarity(),
            Polarity::Fails
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(parse_constraints("prop:loop").is_err());
        assert!(parse_constraints("id:x = x").is_err());
        assert!(parse_constraints(r#"id:"x = x"#).is_err());
        assert!(parse_constraints(r#"id:"x * y""#).is_err());
        assert!(parse_constraints("prop:commutative prop:associative").is_err());
        assert!(parse_constraints("prop:commutative,").is_err());
    }

    #[test]
    fn set_validates_symbols() {
        let evans = Constraint::holds(laws::evans()[0].clone());
        assert!(ConstraintSet::new(2, vec![evans.clone()]).is_err());
        assert!(ConstraintSet::with_ops(2, vec![evans], &[Op::LDiv]).is_ok());
        assert!(ConstraintSet::new(0, vec![]).is_err());
    }
}
