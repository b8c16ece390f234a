//! Canonical antisymmetric tensors, dense arrays, the generalized Kronecker
//! symbol and the contraction engine.
//!
//! [`AntisymTensor`] stores only strictly increasing index tuples; every
//! other tuple is reached through the sorting sign. [`Array`] is a dense
//! row-major array used for intermediate contractions before the result is
//! folded back into canonical form.

use crate::combinatorics::{all_tuples, combinations, permutations_with_sign, sort_with_sign};
use crate::scalar::{factorial, sign_scalar, Scalar, Q};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("index tuple {0:?} out of range for dimension {1}")]
    OutOfRange(Vec<usize>, usize),
    #[error("tuple length {got} does not match rank {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("nonzero value at repeated-index tuple {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("axis dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("array is not antisymmetric at {0:?}")]
    NotAntisymmetric(Vec<usize>),
}

/// Fully antisymmetric tensor of rank `rank` over `0..dim`, stored by sorted tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntisymTensor<S: Scalar = Q> {
    rank: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> AntisymTensor<S> {
    pub fn zero(rank: usize, dim: usize) -> Self {
        AntisymTensor { rank, dim, entries: BTreeMap::new() }
    }

    /// Builds a tensor by evaluating `f` on every sorted tuple.
    pub fn from_sorted_fn(rank: usize, dim: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut t = Self::zero(rank, dim);
        for c in combinations(dim, rank) {
            let v = f(&c);
            if !v.is_zero() {
                t.entries.insert(c, v);
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored entries: sorted tuple and nonzero value.
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.entries.iter()
    }

    fn check_tuple(&self, t: &[usize]) -> Result<(), TensorError> {
        if t.len() != self.rank {
            return Err(TensorError::RankMismatch { got: t.len(), rank: self.rank });
        }
        if t.iter().any(|&i| i >= self.dim) {
            return Err(TensorError::OutOfRange(t.to_vec(), self.dim));
        }
        Ok(())
    }

    /// Value at an arbitrary tuple (sign of the sorting permutation applied).
    pub fn get(&self, t: &[usize]) -> S {
        match sort_with_sign(t) {
            None => S::zero(),
            Some((sorted, sign)) => match self.entries.get(&sorted) {
                None => S::zero(),
                Some(v) => {
                    if sign == 1 {
                        v.clone()
                    } else {
                        v.neg()
                    }
                }
            },
        }
    }

    /// Value at an already sorted tuple.
    pub fn get_sorted(&self, t: &[usize]) -> Option<&S> {
        self.entries.get(t)
    }

    /// Sets the value at `t`; the stored entry at the sorted tuple receives the sign.
    pub fn set(&mut self, t: &[usize], v: S) -> Result<(), TensorError> {
        self.check_tuple(t)?;
        match sort_with_sign(t) {
            None => {
                if v.is_zero() {
                    Ok(())
                } else {
                    Err(TensorError::RepeatedIndex(t.to_vec()))
                }
            }
            Some((sorted, sign)) => {
                let v = if sign == 1 { v } else { v.neg() };
                if v.is_zero() {
                    self.entries.remove(&sorted);
                } else {
                    self.entries.insert(sorted, v);
                }
                Ok(())
            }
        }
    }

    /// Adds `v` at `t`; repeated-index tuples are ignored when `v` is zero.
    pub fn add_at(&mut self, t: &[usize], v: &S) -> Result<(), TensorError> {
        let cur = self.get(t);
        self.set(t, cur.add(v))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank, self.dim);
        }
        AntisymTensor {
            rank: self.rank,
            dim: self.dim,
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rank, self.dim), (o.rank, o.dim), "shape mismatch");
        let mut out = self.clone();
        for (k, v) in &o.entries {
            let nv = out.entries.get(k).map_or_else(|| v.clone(), |x| x.add(v));
            if nv.is_zero() {
                out.entries.remove(k);
            } else {
                out.entries.insert(k.clone(), nv);
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&S::one().neg()))
    }

    /// Exact ray equality: `self = c·o` for some nonzero `c` (both zero also counts).
    pub fn proportional_to(&self, o: &Self) -> Option<S> {
        if self.rank != o.rank || self.dim != o.dim {
            return None;
        }
        if self.is_zero() && o.is_zero() {
            return Some(S::one());
        }
        let (k0, a0) = self.entries.iter().next()?;
        let b0 = o.entries.get(k0)?;
        let c = a0.div(b0)?;
        if self.entries.len() != o.entries.len() {
            return None;
        }
        for (k, a) in &self.entries {
            let b = o.entries.get(k)?;
            if *a != b.mul(&c) {
                return None;
            }
        }
        Some(c)
    }

    /// Dense copy.
    pub fn to_array(&self) -> Array<S> {
        let mut a = Array::zeros(vec![self.dim; self.rank]);
        for (k, v) in &self.entries {
            for (p, s) in permutations_with_sign(self.rank) {
                let t: Vec<usize> = p.iter().map(|&i| k[i]).collect();
                a.set(&t, if s == 1 { v.clone() } else { v.neg() });
            }
        }
        a
    }

    /// Changes the scalar type entrywise.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AntisymTensor<T> {
        let mut out = AntisymTensor::zero(self.rank, self.dim);
        for (k, v) in &self.entries {
            let w = f(v);
            if !w.is_zero() {
                out.entries.insert(k.clone(), w);
            }
        }
        out
    }
}

/// Dense row-major array with arbitrary axis lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Array<S: Scalar = Q> {
    shape: Vec<usize>,
    data: Vec<S>,
}

impl<S: Scalar> Array<S> {
    pub fn zeros(shape: Vec<usize>) -> Self {
        let n = shape.iter().product();
        Array { shape, data: vec![S::zero(); n] }
    }

    pub fn from_fn(shape: Vec<usize>, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut a = Self::zeros(shape.clone());
        let mut idx = vec![0usize; shape.len()];
        for k in 0..a.data.len() {
            a.data[k] = f(&idx);
            Self::advance(&mut idx, &shape);
        }
        a
    }

    fn advance(idx: &mut [usize], shape: &[usize]) {
        for ax in (0..idx.len()).rev() {
            idx[ax] += 1;
            if idx[ax] < shape[ax] {
                return;
            }
            idx[ax] = 0;
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }
    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        let mut o = 0;
        for (i, n) in idx.iter().zip(&self.shape) {
            debug_assert!(i < n);
            o = o * n + i;
        }
        o
    }

    pub fn get(&self, idx: &[usize]) -> &S {
        &self.data[self.offset(idx)]
    }
    pub fn set(&mut self, idx: &[usize], v: S) {
        let o = self.offset(idx);
        self.data[o] = v;
    }
    pub fn add_at(&mut self, idx: &[usize], v: &S) {
        let o = self.offset(idx);
        self.data[o].add_assign_ref(v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Nonzero entries with their multi-indices, in row-major order.
    pub fn nonzeros(&self) -> Vec<(Vec<usize>, S)> {
        let mut out = Vec::new();
        let mut idx = vec![0usize; self.shape.len()];
        for v in &self.data {
            if !v.is_zero() {
                out.push((idx.clone(), v.clone()));
            }
            Self::advance(&mut idx, &self.shape);
        }
        out
    }

    fn cube_dim(&self) -> usize {
        let d = self.shape.first().copied().unwrap_or(0);
        assert!(self.shape.iter().all(|&n| n == d), "antisymmetrization needs equal axis lengths");
        d
    }

    /// Weight-free alternation `Σ_σ sign(σ) T_{σ(1)…σ(n)}` over all axes.
    pub fn antisymmetrize(&self) -> AntisymTensor<S> {
        let d = self.cube_dim();
        let n = self.rank();
        let perms = permutations_with_sign(n);
        AntisymTensor::from_sorted_fn(n, d, |t| {
            let mut acc = S::zero();
            for (p, s) in &perms {
                let idx: Vec<usize> = p.iter().map(|&i| t[i]).collect();
                let v = self.get(&idx);
                if !v.is_zero() {
                    acc = if *s == 1 { acc.add(v) } else { acc.sub(v) };
                }
            }
            acc
        })
    }

    /// Weight-one alternation: [`Array::antisymmetrize`] divided by `n!`.
    pub fn antisymmetrize_weight_one(&self) -> AntisymTensor<S> {
        let w = S::from_q(&factorial(self.rank())).inv().expect("nonzero factorial");
        self.antisymmetrize().scale(&w)
    }

    /// Folds into canonical antisymmetric storage if the array is fully antisymmetric.
    pub fn to_antisym(&self) -> Result<AntisymTensor<S>, TensorError> {
        let d = self.cube_dim();
        let n = self.rank();
        let t = AntisymTensor::from_sorted_fn(n, d, |c| self.get(c).clone());
        for idx in all_tuples(d, n) {
            if *self.get(&idx) != t.get(&idx) {
                return Err(TensorError::NotAntisymmetric(idx));
            }
        }
        Ok(t)
    }

    /// Reorders axes: output axis `k` is input axis `perm[k]`.
    pub fn permute_axes(&self, perm: &[usize]) -> Self {
        let shape: Vec<usize> = perm.iter().map(|&p| self.shape[p]).collect();
        let mut src = vec![0usize; self.rank()];
        Array::from_fn(shape, |idx| {
            for (k, &p) in perm.iter().enumerate() {
                src[p] = idx[k];
            }
            self.get(&src).clone()
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        Array { shape: self.shape.clone(), data: self.data.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.shape, o.shape);
        Array { shape: self.shape.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.shape, o.shape);
        Array { shape: self.shape.clone(), data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }
}

/// Contracts axis `pairs[k].0` of `a` with axis `pairs[k].1` of `b`.
///
/// The free axes of `a` come first in the result, followed by those of `b`,
/// each in their original order.
pub fn contract<S: Scalar>(a: &Array<S>, b: &Array<S>, pairs: &[(usize, usize)]) -> Result<Array<S>, TensorError> {
    for &(i, j) in pairs {
        if a.shape[i] != b.shape[j] {
            return Err(TensorError::DimMismatch(a.shape[i], b.shape[j]));
        }
    }
    let a_free: Vec<usize> = (0..a.rank()).filter(|i| !pairs.iter().any(|p| p.0 == *i)).collect();
    let b_free: Vec<usize> = (0..b.rank()).filter(|j| !pairs.iter().any(|p| p.1 == *j)).collect();
    let shape: Vec<usize> = a_free.iter().map(|&i| a.shape[i]).chain(b_free.iter().map(|&j| b.shape[j])).collect();
    let mut out: Array<S> = Array::zeros(shape);

    // group b's nonzeros by the values of its paired axes
    let mut b_by_key: BTreeMap<Vec<usize>, Vec<(Vec<usize>, S)>> = BTreeMap::new();
    for (idx, v) in b.nonzeros() {
        let key: Vec<usize> = pairs.iter().map(|p| idx[p.1]).collect();
        let free: Vec<usize> = b_free.iter().map(|&j| idx[j]).collect();
        b_by_key.entry(key).or_default().push((free, v));
    }
    let mut oidx = vec![0usize; a_free.len() + b_free.len()];
    for (idx, va) in a.nonzeros() {
        let key: Vec<usize> = pairs.iter().map(|p| idx[p.0]).collect();
        if let Some(list) = b_by_key.get(&key) {
            for (k, &i) in a_free.iter().enumerate() {
                oidx[k] = idx[i];
            }
            for (free, vb) in list {
                oidx[a_free.len()..].copy_from_slice(free);
                let o = out.offset(&oidx);
                out.data[o].add_mul(&va, vb);
            }
        }
    }
    Ok(out)
}

/// Generalized Kronecker symbol `ε^{upper}_{lower}`: the determinant of the δ-matrix.
pub fn gen_kronecker(upper: &[usize], lower: &[usize]) -> i32 {
    assert_eq!(upper.len(), lower.len(), "generalized Kronecker symbol needs equal lengths");
    match (sort_with_sign(upper), sort_with_sign(lower)) {
        (Some((su, a)), Some((sl, b))) if su == sl => a * b,
        _ => 0,
    }
}

/// Levi-Civita symbol `ε_{i₁…i_d}` on `0..d` with `ε_{0…d-1} = 1`.
pub fn levi_civita<S: Scalar>(dim: usize) -> AntisymTensor<S> {
    let mut t = AntisymTensor::zero(dim, dim);
    t.entries.insert((0..dim).collect(), S::one());
    t
}

/// The array `ε^{upper}_{lower}` with `p` upper axes followed by `p` lower axes.
pub fn gen_kronecker_array<S: Scalar>(p: usize, dim: usize) -> Array<S> {
    Array::from_fn(vec![dim; 2 * p], |idx| sign_scalar(gen_kronecker(&idx[..p], &idx[p..])))
}

/// Outcome of [`eps_identities_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsReport {
    pub first_recursion: bool,
    pub second_recursion: bool,
    /// First failing `(upper, lower)` pair, if any.
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

impl EpsReport {
    pub fn passed(&self) -> bool {
        self.first_recursion && self.second_recursion
    }
}

fn delta(a: usize, b: usize) -> i32 {
    (a == b) as i32
}

fn without(t: &[usize], skip: &[usize]) -> Vec<usize> {
    t.iter().enumerate().filter(|(k, _)| !skip.contains(k)).map(|(_, &x)| x).collect()
}

/// Verifies both recursions of the generalized Kronecker symbol entrywise:
/// expansion along the first (and last) upper index, and the pairwise
/// expansion into a two-index symbol times an (n−2)-index symbol.
pub fn eps_identities_check(n: usize, d: usize) -> EpsReport {
    let mut rep = EpsReport { first_recursion: true, second_recursion: true, counterexample: None };
    for up in all_tuples(d, n) {
        for lo in all_tuples(d, n) {
            let lhs = gen_kronecker(&up, &lo);
            let mut first = 0;
            let mut last = 0;
            for s in 0..n {
                let rest_lo = without(&lo, &[s]);
                let sign_first = if s % 2 == 0 { 1 } else { -1 };
                first += sign_first * delta(up[0], lo[s]) * sub_kronecker(&up[1..], &rest_lo);
                let sign_last = if (s + n + 1) % 2 == 0 { 1 } else { -1 };
                last += sign_last * sub_kronecker(&up[..n - 1], &rest_lo) * delta(up[n - 1], lo[s]);
            }
            if first != lhs || last != lhs {
                rep.first_recursion = false;
            }
            if n >= 2 {
                let mut pair = 0;
                for s in 0..n {
                    for t in s + 1..n {
                        let sign = if (s + t + 1) % 2 == 0 { 1 } else { -1 };
                        pair += sign
                            * gen_kronecker(&up[..2], &[lo[s], lo[t]])
                            * sub_kronecker(&up[2..], &without(&lo, &[s, t]));
                    }
                }
                if pair != lhs {
                    rep.second_recursion = false;
                }
            }
            if !rep.passed() && rep.counterexample.is_none() {
                rep.counterexample = Some((up.clone(), lo.clone()));
            }
        }
    }
    rep
}

fn sub_kronecker(up: &[usize], lo: &[usize]) -> i32 {
    if up.is_empty() {
        1
    } else {
        gen_kronecker(up, lo)
    }
}
