//! Plain-text table files.
//!
//! ```text
//! magma 1
//! order 2
//! op *
//! 0 0
//! 1 1
//! op /
//! 0 0
//! 1 1
//! ```
//!
//! Row `i` of a block lists `i <sym> j` for `j = 0..n-1`. `#` starts a
//! comment that runs to the end of the line; blank lines are ignored. Each
//! symbol appears at most once and the `*` block is required.

use std::fs;
use std::path::Path;

use thiserror::Error;

use super::{Algebra, Element, MAX_ORDER};
use crate::identity::Op;

#[derive(Debug, Error)]
pub enum TableFormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> TableFormatError {
    TableFormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn read_table(text: &str) -> Result<Algebra, TableFormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let eof = |what: &str| {
        syntax(
            text.lines().count() + 1,
            format!("unexpected end of file, expected {what}"),
        )
    };

    let (ln, header) = lines.next().ok_or_else(|| eof("`magma 1`"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["magma", "1"] {
        return Err(syntax(ln, format!("expected `magma 1`, found `{header}`")));
    }
    let (ln, order_line) = lines.next().ok_or_else(|| eof("`order <n>`"))?;
    let order = match order_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["order", n] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| (1..=MAX_ORDER).contains(&n))
            .ok_or_else(|| syntax(ln, format!("order must be an integer in 1..={MAX_ORDER}")))?,
        _ => {
            return Err(syntax(
                ln,
                format!("expected `order <n>`, found `{order_line}`"),
            ))
        }
    };

    let mut tables: [Option<Vec<Element>>; 3] = [None, None, None];
    while let Some((ln, line)) = lines.next() {
        let op = match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["op", sym] if sym.chars().count() == 1 => Op::from_symbol(sym.chars().next().unwrap())
                .ok_or_else(|| syntax(ln, format!("unknown operation symbol `{sym}`")))?,
            _ => return Err(syntax(ln, format!("expected `op <sym>`, found `{line}`"))),
        };
        if tables[op.index()].is_some() {
            return Err(syntax(ln, format!("duplicate block for `{op}`")));
        }
        let mut cells = Vec::with_capacity(order * order);
        for row in 0..order {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| eof(&format!("row {row} of `{op}`")))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != order {
                return Err(syntax(
                    ln,
                    format!(
                        "row {row} of `{op}` has {} entries, expected {order}",
                        entries.len()
                    ),
                ));
            }
            for e in entries {
                let v = e
                    .parse::<usize>()
                    .ok()
                    .filter(|&v| v < order)
                    .ok_or_else(|| {
                        syntax(ln, format!("entry `{e}` is not an element of 0..{order}"))
                    })?;
                cells.push(v as Element);
            }
        }
        tables[op.index()] = Some(cells);
    }

    let [mul, ldiv, rdiv] = tables;
    let mul = mul.ok_or_else(|| syntax(text.lines().count().max(1), "missing `op *` block"))?;
    let mut alg = Algebra::new(order, mul).expect("validated");
    for (op, t) in [(Op::LDiv, ldiv), (Op::RDiv, rdiv)] {
        if let Some(t) = t {
            alg = alg.with_table(op, t).expect("validated");
        }
    }
    Ok(alg)
}

pub fn write_table(algebra: &Algebra) -> String {
    let n = algebra.order();
    let mut out = format!("magma 1\norder {n}\n");
    for op in algebra.ops() {
        out.push_str(&format!("op {op}\n"));
        for row in algebra.table(op).expect("listed").chunks(n) {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn read_table_file(path: impl AsRef<Path>) -> Result<Algebra, TableFormatError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| TableFormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_table(&text)
}

pub fn write_table_file(algebra: &Algebra, path: impl AsRef<Path>) -> Result<(), TableFormatError> {
    let path = path.as_ref();
    fs::write(path, write_table(algebra)).map_err(|source| TableFormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
