use thiserror::Error;

use super::{Identity, Op, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("at byte {offset}: missing \"=\" between the two sides of the identity")]
    MissingEquals { offset: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::MissingEquals { offset } => {
                Some(*offset)
            }
            ParseError::Line { source, .. } => source.offset(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Var(&'a str),
    Op(Op),
    Open,
    Close,
    Eq,
    End,
}

impl Tok<'_> {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::Op(op) => format!("`{op}`"),
            Tok::Open => "`(`".into(),
            Tok::Close => "`)`".into(),
            Tok::Eq => "`=`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    peeked: Option<(usize, Tok<'a>)>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            pos: 0,
            peeked: None,
        }
    }

    fn peek(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        if let Some(t) = self.peeked {
            return Ok(t);
        }
        let t = self.lex()?;
        self.peeked = Some(t);
        Ok(t)
    }

    fn next(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        let t = self.peek()?;
        self.peeked = None;
        Ok(t)
    }

    fn lex(&mut self) -> Result<(usize, Tok<'a>), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&b) = bytes.get(start) else {
            return Ok((start, Tok::End));
        };
        let tok = match b {
            b'(' => Tok::Open,
            b')' => Tok::Close,
            b'=' => Tok::Eq,
            b'*' => Tok::Op(Op::Mul),
            b'\\' => Tok::Op(Op::LDiv),
            b'/' => Tok::Op(Op::RDiv),
            b'a'..=b'z' => {
                let mut end = start + 1;
                while end < bytes.len()
                    && (bytes[end].is_ascii_lowercase() || bytes[end].is_ascii_digit())
                {
                    end += 1;
                }
                self.pos = end;
                return Ok((start, Tok::Var(&self.src[start..end])));
            }
            _ => {
                let ch = self.src[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    offset: start,
                    expected: vec!["variable", "`(`", "operator", "`=`"],
                    found: format!("character `{ch}`"),
                });
            }
        };
        self.pos = start + 1;
        Ok((start, tok))
    }
}

fn unexpected(offset: usize, tok: Tok<'_>, expected: Vec<&'static str>) -> ParseError {
    ParseError::Syntax {
        offset,
        expected,
        found: tok.describe(),
    }
}

// atom := var | "(" atom [op atom] ")"
fn atom(lx: &mut Lexer<'_>) -> Result<Term, ParseError> {
    match lx.next()? {
        (_, Tok::Var(v)) => Ok(Term::var(v)),
        (_, Tok::Open) => {
            let left = atom(lx)?;
            let term = match lx.peek()? {
                (_, Tok::Op(op)) => {
                    lx.next()?;
                    Term::app(op, left, atom(lx)?)
                }
                _ => left,
            };
            match lx.next()? {
                (_, Tok::Close) => Ok(term),
                (off, t) => Err(unexpected(off, t, vec!["operator", "`)`"])),
            }
        }
        (off, t) => Err(unexpected(off, t, vec!["variable", "`(`"])),
    }
}

// side := atom [op atom]
fn side(lx: &mut Lexer<'_>) -> Result<Term, ParseError> {
    let left = atom(lx)?;
    if let (_, Tok::Op(op)) = lx.peek()? {
        lx.next()?;
        let right = atom(lx)?;
        return Ok(Term::app(op, left, right));
    }
    Ok(left)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut lx = Lexer::new(text);
    let t = side(&mut lx)?;
    match lx.next()? {
        (_, Tok::End) => Ok(t),
        (off, tok) => Err(unexpected(off, tok, vec!["operator", "end of input"])),
    }
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut lx = Lexer::new(text);
    let lhs = side(&mut lx)?;
    match lx.next()? {
        (_, Tok::Eq) => {}
        (off, Tok::End) => return Err(ParseError::MissingEquals { offset: off }),
        (off, tok) => return Err(unexpected(off, tok, vec!["operator", "`=`"])),
    }
    let rhs = side(&mut lx)?;
    match lx.next()? {
        (_, Tok::End) => Ok(Identity::new(lhs, rhs)),
        (off, tok) => Err(unexpected(off, tok, vec!["operator", "end of input"])),
    }
}

/// Parses an identity file: one identity per line, `#` comment lines and
/// blank lines skipped. Errors carry the 1-based line number.
pub fn parse_identity_file(text: &str) -> Result<Vec<Identity>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let id = parse_identity(line).map_err(|e| ParseError::Line {
            line: i + 1,
            source: Box::new(e),
        })?;
        out.push(id);
    }
    Ok(out)
}
