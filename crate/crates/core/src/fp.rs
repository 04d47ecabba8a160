//! Dense linear algebra over a prime field `F_p`, with row vectors acting
//! on the left of matrices (`v ↦ v·A`).

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

#[inline]
fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let mut acc = 1u32;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.p)?;
        f.debug_list().entries(self.data.chunks(self.cols.max(1))).finish()
    }
}

impl FpMatrix {
    /// Row-major entries, reduced mod `p`.
    pub fn new(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if !crate::arith::is_prime(p as u64) {
            return Err(Error::BadParameter(alloc::format!("{p} is not prime")));
        }
        if data.len() != rows * cols {
            return Err(Error::BadParameter(alloc::format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(FpMatrix { p, rows, cols, data: data.into_iter().map(|x| x % p).collect() })
    }

    /// Square matrix from signed entries.
    pub fn square(p: u32, entries: &[i64]) -> Result<Self> {
        let n = (0..=entries.len()).find(|k| k * k == entries.len()).ok_or_else(|| {
            Error::BadParameter(alloc::format!("{} entries do not form a square matrix", entries.len()))
        })?;
        let data = entries.iter().map(|&x| x.rem_euclid(p as i64) as u32).collect();
        FpMatrix::new(p, n, n, data)
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut data = alloc::vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        FpMatrix { p, rows: n, cols: n, data }
    }

    pub fn zero(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: alloc::vec![0; rows * cols] }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend(r.iter().map(|&x| x % p));
        }
        FpMatrix { p, rows: rows.len(), cols, data }
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows);
        let p = self.p as u64;
        let mut data = alloc::vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                data[i * other.cols + j] = (acc % p) as u32;
            }
        }
        FpMatrix { p: self.p, rows: self.rows, cols: other.cols, data }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let p = self.p as u64;
        (0..self.cols)
            .map(|j| {
                let acc: u64 = v.iter().enumerate().map(|(k, &x)| x as u64 * self.get(k, j) as u64).sum();
                (acc % p) as u32
            })
            .collect()
    }

    pub fn pow(&self, mut k: u64) -> FpMatrix {
        let mut acc = FpMatrix::identity(self.p, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == (i == j) as u32))
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut out = FpMatrix::zero(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u32>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        rref(self.p, rows, self.cols).0.len()
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let p = self.p;
        let mut aug: Vec<Vec<u32>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| (c == r) as u32));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| aug[r][col] != 0)?;
            aug.swap(col, piv);
            let s = inv_mod(aug[col][col], p);
            for x in aug[col].iter_mut() {
                *x = mulmod(*x, s, p);
            }
            for r in 0..n {
                if r != col && aug[r][col] != 0 {
                    let f = aug[r][col];
                    let pivot_row = aug[col].clone();
                    for (x, y) in aug[r].iter_mut().zip(pivot_row) {
                        *x = (*x + p - mulmod(f, y, p)) % p;
                    }
                }
            }
        }
        let data = aug.into_iter().flat_map(|row| row[n..].to_vec()).collect();
        Some(FpMatrix { p, rows: n, cols: n, data })
    }

    /// Multiplicative order, if at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &FpMatrix) -> FpMatrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut out = FpMatrix::zero(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * c + j] = self.get(i, j);
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.data[(self.rows + i) * c + self.cols + j] = other.get(i, j);
            }
        }
        out
    }
}

/// Reduced row echelon form. Returns nonzero rows (leading entry 1) and
/// their pivot columns.
pub fn rref(p: u32, mut rows: Vec<Vec<u32>>, cols: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = mulmod(*x, s, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : M x = 0}` for `M` given by rows of length `cols`.
pub fn nullspace(p: u32, rows: Vec<Vec<u32>>, cols: usize) -> Vec<Vec<u32>> {
    let (red, pivots) = rref(p, rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = alloc::vec![0u32; cols];
            x[f] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                x[pc] = (p - row[f]) % p;
            }
            x
        })
        .collect()
}

/// A subspace of `F_p^n` in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    p: u32,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of F{}^{}: {:?})", self.dim(), self.p, self.n, self.rows)
    }
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Subspace { p, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(p: u32, n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| (i == j) as u32).collect()).collect();
        Subspace { p, n, rows, pivots: (0..n).collect() }
    }

    pub fn span(p: u32, n: usize, vectors: Vec<Vec<u32>>) -> Self {
        let (rows, pivots) = rref(p, vectors, n);
        Subspace { p, n, rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = w[pc];
            if f != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = (*x + p - mulmod(f, y, p)) % p;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a member with respect to the echelon basis.
    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Subspace::span(self.p, self.n, v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve a·A = b·B via the nullspace of the stacked basis.
        let (da, db) = (self.dim(), other.dim());
        if da == 0 || db == 0 {
            return Subspace::zero(self.p, self.n);
        }
        let p = self.p;
        let eqs: Vec<Vec<u32>> = (0..self.n)
            .map(|c| {
                let mut row: Vec<u32> = self.rows.iter().map(|r| r[c]).collect();
                row.extend(other.rows.iter().map(|r| (p - r[c]) % p));
                row
            })
            .collect();
        let sols = nullspace(p, eqs, da + db);
        let vecs = sols
            .into_iter()
            .map(|s| {
                let mut v = alloc::vec![0u32; self.n];
                for (k, row) in self.rows.iter().enumerate() {
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = (*x + mulmod(s[k], y, p)) % p;
                    }
                }
                v
            })
            .collect();
        Subspace::span(p, self.n, vecs)
    }
}

/// Every vector of `F_p^n` in lexicographic order of coordinates
/// (first coordinate fastest).
pub fn all_vectors(p: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    let total = (p as u64).pow(n as u32);
    (0..total).map(move |mut code| {
        (0..n)
            .map(|_| {
                let d = (code % p as u64) as u32;
                code /= p as u64;
                d
            })
            .collect()
    })
}

/// One nonzero vector per one-dimensional subspace: those whose first
/// nonzero coordinate is 1.
pub fn projective_points(p: u32, n: usize) -> impl Iterator<Item = Vec<u32>> {
    all_vectors(p, n).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inverse_roundtrip() {
        let a = FpMatrix::square(7, &[6, 0, 1, 1]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(FpMatrix::square(2, &[1, 1, 1, 1]).unwrap().inverse().is_none());
        assert_eq!(FpMatrix::square(2, &[0, 1, 1, 1]).unwrap().order(10), Some(3));
    }

    #[test]
    fn nullspace_dimension() {
        // x + y + z = 0 over F_3
        let ns = nullspace(3, vec![vec![1, 1, 1]], 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(v.iter().sum::<u32>() % 3, 0);
        }
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(2, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(2, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersection(&b), Subspace::span(2, 3, vec![vec![0, 1, 0]]));
        assert_eq!(a.sum(&b), Subspace::full(2, 3));
        assert!(a.contains(&[1, 1, 0]));
        assert!(!a.contains(&[0, 0, 1]));
        assert_eq!(projective_points(3, 2).count(), 4);
        assert_eq!(all_vectors(2, 3).count(), 8);
    }
}
