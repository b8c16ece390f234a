//! Dense exact matrices: products, traces, Kronecker products, rank,
//! reduced row-echelon form, nullspaces and linear solves.
//!
//! Rank over the rationals uses fraction-free (Bareiss) elimination on
//! integer-cleared rows. Pivots are chosen lexicographically: leftmost
//! column first, then the lowest row index, so results are reproducible.

use crate::scalar::{Scalar, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<S: Scalar = Q> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }
    pub fn add_at(&mut self, i: usize, j: usize, v: &S) {
        self.data[i * self.cols + j].add_assign_ref(v);
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_mul(a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    acc.add_mul(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.mul(c)).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one().neg())
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    /// `AB + BA`.
    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square());
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc.add_assign_ref(self.get(i, i));
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Kronecker (tensor) product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols).mul(o.get(i % o.rows, j % o.cols))
        })
    }

    /// Entries flattened row-major, as a vector.
    pub fn vectorize(&self) -> Vec<S> {
        self.data.clone()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Reduced row-echelon form with pivot columns, by exact field elimination.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j).clone();
                    if !pv.is_zero() {
                        let v = m.get(i, j).sub(&f.mul(&pv));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank by exact field elimination.
    pub fn rank_field(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace `{x : Ax = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); self.cols];
                v[f] = S::one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = r.get(k, f).neg();
                }
                v
            })
            .collect()
    }

    /// A particular solution of `Ax = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                S::one()
            } else {
                S::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix { rows: self.rows + o.rows, cols: self.cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<S>], rows: usize) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }
}

impl Matrix<Q> {
    /// Rank by fraction-free elimination on integer-cleared rows.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        bareiss_rank(&mut rows, self.cols)
    }

    pub fn determinant(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = <Q as One>::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !Zero::is_zero(m.get(i, c))) else { return <Q as Zero>::zero() };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pv = m.get(c, c).clone();
            det *= &pv;
            for i in c + 1..n {
                let f = m.get(i, c) / &pv;
                if Zero::is_zero(&f) {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &f * m.get(c, j);
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Numbers of positive and negative eigenvalues of a symmetric matrix
    /// (Sylvester inertia via symmetric elimination).
    pub fn inertia(&self) -> (usize, usize) {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let (mut pos, mut neg) = (0, 0);
        let mut active: Vec<usize> = (0..n).collect();
        while !active.is_empty() {
            if let Some(&p) = active.iter().find(|&&i| !Zero::is_zero(m.get(i, i))) {
                let pv = m.get(p, p).clone();
                if pv > <Q as Zero>::zero() {
                    pos += 1;
                } else {
                    neg += 1;
                }
                active.retain(|&i| i != p);
                for &i in &active {
                    let f = m.get(i, p) / &pv;
                    if Zero::is_zero(&f) {
                        continue;
                    }
                    for &j in &active {
                        let v = m.get(i, j) - &f * m.get(p, j);
                        m.set(i, j, v);
                    }
                }
                continue;
            }
            // zero diagonal: pair up with an off-diagonal entry, if any
            let pair = active.iter().find_map(|&i| {
                active.iter().find(|&&j| j != i && !Zero::is_zero(m.get(i, j))).map(|&j| (i, j))
            });
            let Some((i, j)) = pair else { break };
            // replace row/col i by row/col i + j, which creates a nonzero diagonal 2·m_ij
            for k in 0..n {
                let v = m.get(i, k) + m.get(j, k);
                m.set(i, k, v);
            }
            for k in 0..n {
                let v = m.get(k, i) + m.get(k, j);
                m.set(k, i, v);
            }
        }
        (pos, neg)
    }
}

fn bareiss_rank(rows: &mut [Vec<BigInt>], cols: usize) -> usize {
    let n = rows.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(p, rank);
        let pivot = rows[rank][c].clone();
        for i in rank + 1..n {
            let f = rows[i][c].clone();
            for j in c..cols {
                let v = (&pivot * &rows[i][j] - &f * &rows[rank][j]) / &prev;
                rows[i][j] = v;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a.rank_field(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(|x| Zero::is_zero(x)));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(x, vec![qf(1, 5), qf(3, 5)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert_eq!(a.determinant(), q(5));
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[q(0), q(1)]).is_none());
    }

    #[test]
    fn inertia_of_forms() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).inertia(), (1, 1));
        assert_eq!(m(&[&[-2, 0], &[0, -2]]).inertia(), (0, 2));
        assert_eq!(m(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 3]]).inertia(), (2, 0));
    }

    #[test]
    fn kron_shapes() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let k = a.kron(&Matrix::identity(2));
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(2, 0), q(3));
        assert_eq!(k.trace(), q(10));
    }
}
