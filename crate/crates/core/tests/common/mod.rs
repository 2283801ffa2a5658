//! Independent oracles: plain loops over every table, no propagation.
#![allow(dead_code)]

use groupoid_lab::magma::Algebra;

/// Every `*` table of order `n`, in lexicographic order of cells.
pub fn all_tables(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    (0..total).map(move |mut k| {
        let mut t = vec![0u8; cells];
        for c in (0..cells).rev() {
            t[c] = (k % n as u64) as u8;
            k /= n as u64;
        }
        t
    })
}

pub fn all_algebras(n: usize) -> impl Iterator<Item = Algebra> {
    all_tables(n).map(move |t| Algebra::new(n, t).unwrap())
}

pub fn count_tables(n: usize, pred: impl Fn(&[u8], usize) -> bool) -> u64 {
    all_tables(n).filter(|t| pred(t, n)).count() as u64
}

pub fn is_associative(t: &[u8], n: usize) -> bool {
    let m = |a: u8, b: u8| t[a as usize * n + b as usize];
    let r = 0..n as u8;
    r.clone().all(|x| {
        r.clone()
            .all(|y| r.clone().all(|z| m(x, m(y, z)) == m(m(x, y), z)))
    })
}

pub fn is_commutative(t: &[u8], n: usize) -> bool {
    (0..n).all(|a| (0..n).all(|b| t[a * n + b] == t[b * n + a]))
}

pub fn rows_are_permutations(t: &[u8], n: usize) -> bool {
    (0..n).all(|a| {
        let mut row: Vec<u8> = t[a * n..a * n + n].to_vec();
        row.sort();
        row.iter().enumerate().all(|(i, &v)| v as usize == i)
    })
}

pub fn cols_are_permutations(t: &[u8], n: usize) -> bool {
    (0..n).all(|b| {
        let mut col: Vec<u8> = (0..n).map(|a| t[a * n + b]).collect();
        col.sort();
        col.iter().enumerate().all(|(i, &v)| v as usize == i)
    })
}

pub fn is_quasigroup(t: &[u8], n: usize) -> bool {
    rows_are_permutations(t, n) && cols_are_permutations(t, n)
}

/// Satisfaction of a three-variable law given as a closure over a
/// multiplication function.
pub fn law3(t: &[u8], n: usize, f: impl Fn(&dyn Fn(u8, u8) -> u8, u8, u8, u8) -> bool) -> bool {
    let m = |a: u8, b: u8| t[a as usize * n + b as usize];
    let r = 0..n as u8;
    r.clone()
        .all(|x| r.clone().all(|y| r.clone().all(|z| f(&m, x, y, z))))
}

pub fn is_cyclic(t: &[u8], n: usize) -> bool {
    law3(t, n, |m, x, y, z| m(x, m(y, z)) == m(m(z, x), y))
}

pub fn is_tarski(t: &[u8], n: usize) -> bool {
    law3(t, n, |m, x, y, z| m(x, m(z, y)) == m(m(x, y), z))
}

/// Latin squares of order `n` by filling cells row by row and checking
/// row and column use directly.
pub fn latin_squares(n: usize) -> u64 {
    fn go(n: usize, cell: usize, grid: &mut [u8], count: &mut u64) {
        if cell == n * n {
            *count += 1;
            return;
        }
        let (r, c) = (cell / n, cell % n);
        for v in 0..n as u8 {
            let in_row = (0..c).any(|j| grid[r * n + j] == v);
            let in_col = (0..r).any(|i| grid[i * n + c] == v);
            if !in_row && !in_col {
                grid[cell] = v;
                go(n, cell + 1, grid, count);
            }
        }
    }
    let mut grid = vec![0u8; n * n];
    let mut count = 0;
    go(n, 0, &mut grid, &mut count);
    count
}

/// Brute-force isomorphism classes: a table's key is the least relabeled
/// table over all permutations of the carrier.
pub fn iso_classes(tables: &[Vec<u8>], n: usize) -> usize {
    let perms = permutations(n);
    let mut keys: Vec<Vec<u8>> = tables
        .iter()
        .map(|t| {
            perms
                .iter()
                .map(|p| {
                    let mut u = vec![0u8; n * n];
                    for a in 0..n {
                        for b in 0..n {
                            u[p[a] * n + p[b]] = p[t[a * n + b] as usize] as u8;
                        }
                    }
                    u
                })
                .min()
                .unwrap()
        })
        .collect();
    keys.sort();
    keys.dedup();
    keys.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
