//! Exact sparse rank computation.
//!
//! Boundary matrices are sparse with entries ±1, so ranks are computed by
//! sparse elimination with a Markowitz-style pivot rule (fewest-entry column,
//! then fewest-entry row). Over the rationals the elimination is
//! fraction-free: rows are cross-multiplied in integers and the content gcd
//! is stripped after every update. The fast path runs in checked i128 and
//! falls back to big integers on overflow.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::field::FieldSpec;

/// Row-major sparse matrix over the integers; column indices are sorted.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, mut entries: Vec<(u32, i64)>) {
        entries.retain(|&(_, v)| v != 0);
        entries.sort_by_key(|&(c, _)| c);
        debug_assert!(entries.iter().all(|&(c, _)| (c as usize) < self.ncols));
        self.rows.push(entries);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::Prime(p) => rank_mod_p(self, p as u64),
            FieldSpec::Rationals => rank_rational(self),
        }
    }
}

/// Pivot selection shared by all eliminations: the column with the fewest
/// active entries, then within it the row with the fewest entries. Ties go
/// to the lowest index, keeping the computation deterministic.
fn choose_pivot<T>(rows: &[Option<Vec<(u32, T)>>], ncols: usize) -> Option<(usize, u32)> {
    let mut col_count = vec![0u32; ncols];
    for row in rows.iter().flatten() {
        for &(c, _) in row {
            col_count[c as usize] += 1;
        }
    }
    let pivot_col = (0..ncols)
        .filter(|&c| col_count[c] > 0)
        .min_by_key(|&c| col_count[c])? as u32;
    let pivot_row = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| {
            r.as_ref()
                .is_some_and(|r| r.iter().any(|&(c, _)| c == pivot_col))
        })
        .min_by_key(|(_, r)| r.as_ref().unwrap().len())
        .map(|(i, _)| i)?;
    Some((pivot_row, pivot_col))
}

fn rank_mod_p(matrix: &SparseMatrix, p: u64) -> usize {
    let mut rows: Vec<Option<Vec<(u32, u64)>>> = matrix
        .rows
        .iter()
        .map(|row| {
            let reduced: Vec<(u32, u64)> = row
                .iter()
                .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
                .filter(|&(_, v)| v != 0)
                .collect();
            Some(reduced)
        })
        .collect();
    let mut rank = 0;
    while let Some((pr, pc)) = choose_pivot(&rows, matrix.ncols) {
        rank += 1;
        let pivot_row = rows[pr].take().unwrap();
        let pivot_val = pivot_row
            .iter()
            .find(|&&(c, _)| c == pc)
            .map(|&(_, v)| v)
            .unwrap();
        let inv = mod_inverse(pivot_val, p);
        for slot in rows.iter_mut() {
            let Some(row) = slot else { continue };
            let Some(&(_, val)) = row.iter().find(|&&(c, _)| c == pc) else {
                continue;
            };
            // row -= val * inv * pivot_row
            let factor = mulmod(val, inv, p);
            let mut merged = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut a, mut b) = (row.iter().peekable(), pivot_row.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (Some(&&(ca, va)), Some(&&(cb, vb))) => {
                        if ca < cb {
                            merged.push((ca, va));
                            a.next();
                        } else if cb < ca {
                            let v = (p - mulmod(factor, vb, p)) % p;
                            if v != 0 {
                                merged.push((cb, v));
                            }
                            b.next();
                        } else {
                            let v = (va + p - mulmod(factor, vb, p)) % p;
                            if v != 0 {
                                merged.push((ca, v));
                            }
                            a.next();
                            b.next();
                        }
                    }
                    (Some(&&(ca, va)), None) => {
                        merged.push((ca, va));
                        a.next();
                    }
                    (None, Some(&&(cb, vb))) => {
                        let v = (p - mulmod(factor, vb, p)) % p;
                        if v != 0 {
                            merged.push((cb, v));
                        }
                        b.next();
                    }
                    (None, None) => break,
                }
            }
            debug_assert!(merged.iter().all(|&(c, _)| c != pc));
            *slot = if merged.is_empty() { None } else { Some(merged) };
        }
    }
    rank
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn rank_rational(matrix: &SparseMatrix) -> usize {
    match rank_rational_i128(matrix) {
        Some(rank) => rank,
        None => rank_rational_big(matrix),
    }
}

/// Fraction-free elimination in checked i128; `None` on overflow.
fn rank_rational_i128(matrix: &SparseMatrix) -> Option<usize> {
    let mut rows: Vec<Option<Vec<(u32, i128)>>> = matrix
        .rows
        .iter()
        .map(|row| Some(row.iter().map(|&(c, v)| (c, v as i128)).collect()))
        .collect();
    let mut rank = 0;
    while let Some((pr, pc)) = choose_pivot(&rows, matrix.ncols) {
        rank += 1;
        let pivot_row = rows[pr].take().unwrap();
        let pivot_val = pivot_row
            .iter()
            .find(|&&(c, _)| c == pc)
            .map(|&(_, v)| v)
            .unwrap();
        for slot in rows.iter_mut() {
            let Some(row) = slot else { continue };
            let Some(&(_, val)) = row.iter().find(|&&(c, _)| c == pc) else {
                continue;
            };
            // row := pivot_val * row - val * pivot_row, then strip content.
            let mut merged: Vec<(u32, i128)> = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut a, mut b) = (row.iter().peekable(), pivot_row.iter().peekable());
            loop {
                match (a.peek(), b.peek()) {
                    (Some(&&(ca, va)), Some(&&(cb, vb))) => {
                        if ca < cb {
                            merged.push((ca, pivot_val.checked_mul(va)?));
                            a.next();
                        } else if cb < ca {
                            merged.push((cb, val.checked_mul(vb)?.checked_neg()?));
                            b.next();
                        } else {
                            let x = pivot_val
                                .checked_mul(va)?
                                .checked_sub(val.checked_mul(vb)?)?;
                            if x != 0 {
                                merged.push((ca, x));
                            }
                            a.next();
                            b.next();
                        }
                    }
                    (Some(&&(ca, va)), None) => {
                        merged.push((ca, pivot_val.checked_mul(va)?));
                        a.next();
                    }
                    (None, Some(&&(cb, vb))) => {
                        merged.push((cb, val.checked_mul(vb)?.checked_neg()?));
                        b.next();
                    }
                    (None, None) => break,
                }
            }
            let content = merged
                .iter()
                .fold(0i128, |acc, &(_, v)| gcd_i128(acc, v));
            if content > 1 {
                for e in merged.iter_mut() {
                    e.1 /= content;
                }
            }
            *slot = if merged.is_empty() { None } else { Some(merged) };
        }
    }
    Some(rank)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Arbitrary-precision twin of the i128 elimination.
fn rank_rational_big(matrix: &SparseMatrix) -> usize {
    let mut rows: Vec<Option<Vec<(u32, BigInt)>>> = matrix
        .rows
        .iter()
        .map(|row| Some(row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()))
        .collect();
    let mut rank = 0;
    while let Some((pr, pc)) = choose_pivot(&rows, matrix.ncols) {
        rank += 1;
        let pivot_row = rows[pr].take().unwrap();
        let pivot_val = pivot_row
            .iter()
            .find(|&&(c, _)| c == pc)
            .map(|(_, v)| v.clone())
            .unwrap();
        for slot in rows.iter_mut() {
            let Some(row) = slot else { continue };
            let Some((_, val)) = row.iter().find(|&&(c, _)| c == pc) else {
                continue;
            };
            let val = val.clone();
            let mut merged: Vec<(u32, BigInt)> = Vec::with_capacity(row.len() + pivot_row.len());
            let (mut ai, mut bi) = (0usize, 0usize);
            while ai < row.len() || bi < pivot_row.len() {
                let ca = row.get(ai).map(|e| e.0);
                let cb = pivot_row.get(bi).map(|e| e.0);
                match (ca, cb) {
                    (Some(ca), Some(cb)) if ca < cb => {
                        merged.push((ca, &pivot_val * &row[ai].1));
                        ai += 1;
                    }
                    (Some(ca), Some(cb)) if cb < ca => {
                        merged.push((cb, -(&val * &pivot_row[bi].1)));
                        bi += 1;
                    }
                    (Some(ca), Some(_)) => {
                        let x = &pivot_val * &row[ai].1 - &val * &pivot_row[bi].1;
                        if x != BigInt::from(0) {
                            merged.push((ca, x));
                        }
                        ai += 1;
                        bi += 1;
                    }
                    (Some(ca), None) => {
                        merged.push((ca, &pivot_val * &row[ai].1));
                        ai += 1;
                    }
                    (None, Some(cb)) => {
                        merged.push((cb, -(&val * &pivot_row[bi].1)));
                        bi += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
            let mut content = BigInt::from(0);
            for (_, v) in &merged {
                content = content.gcd(v);
            }
            if content > BigInt::from(1) {
                for e in merged.iter_mut() {
                    e.1 = &e.1 / &content;
                }
            }
            *slot = if merged.is_empty() { None } else { Some(merged) };
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(ncols: usize, rows: &[&[(u32, i64)]]) -> SparseMatrix {
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            m.push_row(r.to_vec());
        }
        m
    }

    #[test]
    fn identity_rank() {
        let m = matrix(3, &[&[(0, 1)], &[(1, 1)], &[(2, 1)]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 3);
        assert_eq!(m.rank(FieldSpec::Prime(2)), 3);
    }

    #[test]
    fn zero_rank() {
        let m = matrix(4, &[&[], &[]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 0);
    }

    #[test]
    fn dependent_rows() {
        let m = matrix(3, &[&[(0, 1), (1, 2)], &[(0, 2), (1, 4)], &[(2, 1)]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 2);
        assert_eq!(m.rank(FieldSpec::Prime(32003)), 2);
    }

    #[test]
    fn characteristic_two_drop() {
        // [[1, 1], [1, -1]] has rank 2 over Q but rank 1 over GF(2).
        let m = matrix(2, &[&[(0, 1), (1, 1)], &[(0, 1), (1, -1)]]);
        assert_eq!(m.rank(FieldSpec::Rationals), 2);
        assert_eq!(m.rank(FieldSpec::Prime(2)), 1);
    }

    #[test]
    fn big_entries_fall_back() {
        // Growth-prone dense matrix exercises the gcd stripping and, if
        // needed, the bigint path; oracle computed against a dense rational
        // elimination below.
        let mut rows: Vec<Vec<(u32, i64)>> = Vec::new();
        let n = 12usize;
        for i in 0..n {
            let mut row = Vec::new();
            for j in 0..n {
                let v = ((i * j * j + 3 * i + 7 * j) % 11) as i64 - 5;
                row.push((j as u32, v));
            }
            rows.push(row);
        }
        let mut m = SparseMatrix::new(n);
        for r in &rows {
            m.push_row(r.clone());
        }
        assert_eq!(m.rank(FieldSpec::Rationals), naive_rank(&rows, n));
    }

    /// Dense rational elimination oracle.
    fn naive_rank(rows: &[Vec<(u32, i64)>], ncols: usize) -> usize {
        use num_rational::BigRational;
        let mut dense: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                let mut row = vec![BigRational::from(BigInt::from(0)); ncols];
                for &(c, v) in r {
                    row[c as usize] = BigRational::from(BigInt::from(v));
                }
                row
            })
            .collect();
        let zero = BigRational::from(BigInt::from(0));
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..dense.len()).find(|&r| dense[r][col] != zero) else {
                continue;
            };
            dense.swap(rank, pivot);
            let pv = dense[rank][col].clone();
            for r in 0..dense.len() {
                if r != rank && dense[r][col] != zero {
                    let factor = &dense[r][col] / &pv;
                    for c in 0..ncols {
                        let sub = &factor * &dense[rank][c];
                        dense[r][c] = &dense[r][c] - &sub;
                    }
                }
            }
            rank += 1;
            if rank == dense.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn random_matrices_match_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let nrows = rng.gen_range(1..=8);
            let ncols = rng.gen_range(1..=8);
            let rows: Vec<Vec<(u32, i64)>> = (0..nrows)
                .map(|_| {
                    let mut row = Vec::new();
                    for c in 0..ncols {
                        if rng.gen_bool(0.5) {
                            row.push((c as u32, rng.gen_range(-3i64..=3)));
                        }
                    }
                    row
                })
                .collect();
            let mut m = SparseMatrix::new(ncols);
            for r in &rows {
                m.push_row(r.clone());
            }
            assert_eq!(m.rank(FieldSpec::Rationals), naive_rank(&rows, ncols));
        }
    }
}
