//! Structure constants of antisymmetric multibrackets.
//!
//! A [`Bracket`] of arity `n` on a `dim`-dimensional space stores
//! `C_{i₁…i_n}{}^k` for sorted lower tuples only; it backs Lie algebras
//! (`n = 2`), generalized Lie algebras and Filippov algebras alike. The
//! residual kernels shared by the Jacobi-type identities also live here.

use crate::combinatorics::{all_tuples, combinations, sort_with_sign, splits};
use crate::linalg::Matrix;
use crate::scalar::{Scalar, Q};
use crate::tensor::{AntisymTensor, TensorError};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// First failing residual of an identity check (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Identity that failed.
    pub check: String,
    /// Free indices of the failing component.
    pub indices: Vec<usize>,
    /// Nonzero residual value.
    pub residual: Q,
}

impl Violation {
    pub fn new(check: &str, indices: Vec<usize>, residual: Q) -> Self {
        Violation { check: check.to_string(), indices, residual }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<String> = self.indices.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{} fails at ({}) with residual {}", self.check, one_based.join(","), self.residual)
    }
}

/// Result of an identity check: `Ok` or the first violation.
pub type Check = Result<(), Violation>;

/// Antisymmetric `n`-bracket given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    arity: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, BTreeMap<usize, Q>>,
}

impl Bracket {
    pub fn zero(arity: usize, dim: usize) -> Self {
        Bracket { arity, dim, table: BTreeMap::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Sets `C_{lower}{}^k`; the sorted tuple receives the permutation sign.
    pub fn set(&mut self, lower: &[usize], k: usize, v: Q) -> Result<(), TensorError> {
        if lower.len() != self.arity {
            return Err(TensorError::RankMismatch { got: lower.len(), rank: self.arity });
        }
        if k >= self.dim || lower.iter().any(|&i| i >= self.dim) {
            let mut t = lower.to_vec();
            t.push(k);
            return Err(TensorError::OutOfRange(t, self.dim));
        }
        let Some((sorted, sign)) = sort_with_sign(lower) else {
            if Zero::is_zero(&v) {
                return Ok(());
            }
            return Err(TensorError::RepeatedIndex(lower.to_vec()));
        };
        let v = if sign == 1 { v } else { -v };
        let col = self.table.entry(sorted.clone()).or_default();
        if Zero::is_zero(&v) {
            col.remove(&k);
        } else {
            col.insert(k, v);
        }
        if col.is_empty() {
            self.table.remove(&sorted);
        }
        Ok(())
    }

    /// Adds to `C_{lower}{}^k`.
    pub fn add_to(&mut self, lower: &[usize], k: usize, v: &Q) -> Result<(), TensorError> {
        let cur = self.coeff(lower, k);
        self.set(lower, k, cur + v)
    }

    /// `C_{lower}{}^k` at any tuple.
    pub fn coeff(&self, lower: &[usize], k: usize) -> Q {
        match self.column(lower) {
            None => <Q as Zero>::zero(),
            Some((sign, col)) => match col.get(&k) {
                None => <Q as Zero>::zero(),
                Some(v) => {
                    if sign == 1 {
                        v.clone()
                    } else {
                        -v
                    }
                }
            },
        }
    }

    /// Sign and sparse image of the sorted version of `lower`.
    pub fn column(&self, lower: &[usize]) -> Option<(i32, &BTreeMap<usize, Q>)> {
        let (sorted, sign) = sort_with_sign(lower)?;
        self.table.get(&sorted).map(|c| (sign, c))
    }

    /// Image of basis elements `[X_{i₁},…,X_{i_n}]` as a dense vector.
    pub fn image(&self, lower: &[usize]) -> Vec<Q> {
        let mut v = vec![<Q as Zero>::zero(); self.dim];
        if let Some((sign, col)) = self.column(lower) {
            for (k, c) in col {
                v[*k] = if sign == 1 { c.clone() } else { -c };
            }
        }
        v
    }

    /// Stored entries `(sorted lower, k, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, usize, &Q)> {
        self.table.iter().flat_map(|(t, col)| col.iter().map(move |(k, v)| (t, *k, v)))
    }

    /// Sorted lower tuples with nonzero image.
    pub fn support(&self) -> impl Iterator<Item = (&Vec<usize>, &BTreeMap<usize, Q>)> {
        self.table.iter()
    }

    /// Bracket of arbitrary vectors, by multilinear expansion.
    pub fn apply(&self, xs: &[Vec<Q>]) -> Vec<Q> {
        assert_eq!(xs.len(), self.arity, "wrong number of bracket arguments");
        let mut out = vec![<Q as Zero>::zero(); self.dim];
        for (t, col) in &self.table {
            // Σ over orderings of the sorted tuple: det of the coefficient minor
            let m = Matrix::from_fn(self.arity, self.arity, |a, b| xs[a][t[b]].clone());
            let d = m.determinant();
            if Zero::is_zero(&d) {
                continue;
            }
            for (k, c) in col {
                out[*k] += &d * c;
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Bracket::zero(self.arity, self.dim);
        if Zero::is_zero(c) {
            return out;
        }
        for (t, col) in &self.table {
            out.table.insert(t.clone(), col.iter().map(|(k, v)| (*k, v * c)).collect());
        }
        out
    }

    /// Dense `(lower…, upper)` array.
    pub fn to_array(&self) -> crate::tensor::Array<Q> {
        let mut shape = vec![self.dim; self.arity];
        shape.push(self.dim);
        crate::tensor::Array::from_fn(shape, |idx| self.coeff(&idx[..self.arity], idx[self.arity]))
    }

    /// Builds from a dense `(lower…, upper)` array, validating lower antisymmetry.
    pub fn from_array(arr: &crate::tensor::Array<Q>) -> Result<Self, TensorError> {
        let shape = arr.shape();
        let n = shape.len() - 1;
        let d = shape[0];
        let mut b = Bracket::zero(n, d);
        for t in combinations(d, n) {
            for k in 0..d {
                let mut idx = t.clone();
                idx.push(k);
                let v = arr.get(&idx).clone();
                if !Zero::is_zero(&v) {
                    b.set(&t, k, v)?;
                }
            }
        }
        for idx in all_tuples(d, n + 1) {
            if *arr.get(&idx) != b.coeff(&idx[..n], idx[n]) {
                return Err(TensorError::NotAntisymmetric(idx));
            }
        }
        Ok(b)
    }

    /// Structure constants after the basis change `Y_a = P_a{}^b X_b` (rows of `p`).
    pub fn change_basis(&self, p: &Matrix<Q>) -> Option<Self> {
        let pinv = p.inverse()?;
        let d = self.dim;
        let mut out = Bracket::zero(self.arity, d);
        for t in combinations(d, self.arity) {
            let xs: Vec<Vec<Q>> = t.iter().map(|&a| p.row(a).to_vec()).collect();
            let img = self.apply(&xs);
            // express img (in X basis) in the Y basis: coefficients c with c·P = img
            let coords = pinv.transpose().mul_vec(&img);
            for (k, c) in coords.into_iter().enumerate() {
                if !Zero::is_zero(&c) {
                    out.set(&t, k, c).ok()?;
                }
            }
        }
        Some(out)
    }

    /// Block direct sum: the second bracket acts on indices shifted by `self.dim`.
    pub fn direct_sum(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity, "direct sum needs equal arities");
        let mut out = Bracket::zero(self.arity, self.dim + o.dim);
        for (t, k, v) in self.entries() {
            out.set(t, k, v.clone()).expect("in range");
        }
        for (t, k, v) in o.entries() {
            let s: Vec<usize> = t.iter().map(|i| i + self.dim).collect();
            out.set(&s, k + self.dim, v.clone()).expect("in range");
        }
        out
    }

    /// Lowers the upper index with a bilinear form: `C_{i₁…i_n j} = C_{i₁…i_n}{}^l g_{lj}`.
    pub fn lower_with(&self, g: &Matrix<Q>) -> crate::tensor::Array<Q> {
        let mut shape = vec![self.dim; self.arity + 1];
        shape[self.arity] = self.dim;
        let mut arr = crate::tensor::Array::zeros(shape);
        for t in all_tuples(self.dim, self.arity) {
            if let Some((sign, col)) = self.column(&t) {
                for j in 0..self.dim {
                    let mut acc = <Q as Zero>::zero();
                    for (l, c) in col {
                        acc.add_mul(c, g.get(*l, j));
                    }
                    if !Zero::is_zero(&acc) {
                        let mut idx = t.clone();
                        idx.push(j);
                        arr.set(&idx, if sign == 1 { acc } else { -acc });
                    }
                }
            }
        }
        arr
    }

    /// Bracket whose constants are `Ω_{i₁…i_n σ} g^{σj}` for an antisymmetric `Ω`.
    pub fn from_raised(omega: &AntisymTensor<Q>, ginv: &Matrix<Q>) -> Self {
        let n = omega.rank() - 1;
        let d = omega.dim();
        let mut out = Bracket::zero(n, d);
        for t in combinations(d, n) {
            for j in 0..d {
                let mut acc = <Q as Zero>::zero();
                for s in 0..d {
                    let g = ginv.get(s, j);
                    if Zero::is_zero(g) {
                        continue;
                    }
                    let mut idx = t.clone();
                    idx.push(s);
                    acc.add_mul(&omega.get(&idx), g);
                }
                if !Zero::is_zero(&acc) {
                    out.set(&t, j, acc).expect("in range");
                }
            }
        }
        out
    }

    /// Negates a single stored constant (used to build broken controls).
    pub fn flip_sign(&mut self, lower: &[usize], k: usize) {
        let v = self.coeff(lower, k);
        self.set(lower, k, -v).expect("valid tuple");
    }
}

/// `Σ_{S⊂K, |S|=n} sign(S, K∖S) Σ_l C_S{}^l C'_{(K∖S) ++ fixed ++ l}{}^s` for sorted `K`.
///
/// This single kernel evaluates the Jacobi identity, the generalized and
/// mixed generalized Jacobi identities, and the short form of the Filippov
/// identity; the alternation over `K` is the weight-free one divided by the
/// block factorials.
pub fn alternated_double(c1: &Bracket, c2: &Bracket, k: &[usize], fixed: &[usize], s: usize) -> Q {
    let n = c1.arity();
    let mut acc = <Q as Zero>::zero();
    for (chosen, rest, sign) in splits(k, n) {
        let Some((sgn1, col1)) = c1.column(&chosen) else { continue };
        let mut tail: Vec<usize> = rest.iter().chain(fixed.iter()).copied().collect();
        tail.push(0);
        let last = tail.len() - 1;
        for (l, a) in col1 {
            tail[last] = *l;
            let b = c2.coeff(&tail, s);
            if Zero::is_zero(&b) {
                continue;
            }
            let term = a * b;
            if sign * sgn1 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    acc
}

/// Scans `alternated_double` over all sorted `K` of size `c1.arity() + c2.arity() − 1`
/// and all `s`; returns the first nonzero residual.
pub fn alternation_identity(c1: &Bracket, c2: &Bracket, name: &str) -> Check {
    assert_eq!(c1.dim(), c2.dim(), "brackets must share the dimension");
    let d = c1.dim();
    let size = c1.arity() + c2.arity() - 1;
    for k in combinations(d, size) {
        for s in 0..d {
            let r = alternated_double(c1, c2, &k, &[], s);
            if !Zero::is_zero(&r) {
                let mut idx = k.clone();
                idx.push(s);
                return Err(Violation::new(name, idx, r));
            }
        }
    }
    Ok(())
}
