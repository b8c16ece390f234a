//! Lie algebras by structure constants, representations, the Killing form,
//! symmetric invariant polynomials and the bridge between invariant
//! polynomials and cocycles of the trivial representation.
//!
//! Conventions: `[X_i, X_j] = C_{ij}{}^k X_k`, `(ad_i)^k{}_j = C_{ij}{}^k`,
//! and the Killing form is `k_{ij} = C_{il}{}^s C_{js}{}^l`. The su(n)
//! generators are hermitian matrices `T_i`; the representation matrices are
//! `ρ_i = −i T_i`, which makes the structure constants real.

use crate::combinatorics::{all_tuples, combinations, permutations_with_sign, sort_with_sign};
use crate::linalg::Matrix;
use crate::scalar::{factorial, q, qf, Gauss, Scalar, Q};
use crate::structure::{alternation_identity, Bracket, Check, Violation};
use crate::tensor::{contract, AntisymTensor, Array};
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("bracket arity {0} is not 2")]
    NotBinary(usize),
    #[error("Killing form is degenerate")]
    DegenerateKilling,
    #[error("polynomial is not invariant: {0}")]
    NotInvariant(Violation),
    #[error("tensor is not symmetric at {0:?}")]
    NotSymmetric(Vec<usize>),
    #[error("representation matrices have the wrong count or size")]
    RepresentationShape,
    #[error("{0}")]
    Invalid(Violation),
    #[error("order {0} is outside the supported range")]
    Order(usize),
}

/// Lie algebra given by structure constants `C_{ij}{}^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    bracket: Bracket,
    dense: Vec<Q>,
}

impl LieAlgebra {
    pub fn new(bracket: Bracket) -> Result<Self, LieError> {
        if bracket.arity() != 2 {
            return Err(LieError::NotBinary(bracket.arity()));
        }
        let r = bracket.dim();
        let mut dense = vec![<Q as Zero>::zero(); r * r * r];
        for (t, k, v) in bracket.entries() {
            dense[(t[0] * r + t[1]) * r + k] = v.clone();
            dense[(t[1] * r + t[0]) * r + k] = -v;
        }
        Ok(LieAlgebra { bracket, dense })
    }

    /// From `(i, j, k, C_{ij}^k)` entries (0-based); antisymmetry is implied.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Q)]) -> Self {
        let mut b = Bracket::zero(2, dim);
        for (i, j, k, v) in entries {
            b.add_to(&[*i, *j], *k, v).expect("valid entry");
        }
        Self::new(b).expect("binary")
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(Bracket::zero(2, dim)).expect("binary")
    }

    /// su(2) with `C_{ij}{}^k = ε_{ijk}`.
    pub fn su2() -> Self {
        let mut e = Vec::new();
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            e.push((i, j, k, q(1)));
        }
        Self::from_entries(3, &e)
    }

    /// Three-dimensional Heisenberg algebra `[X₁, X₂] = X₃`.
    pub fn heisenberg() -> Self {
        Self::from_entries(3, &[(0, 1, 2, q(1))])
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }
    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    /// `C_{ij}{}^k`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        let r = self.dim();
        &self.dense[(i * r + j) * r + k]
    }

    /// Bracket of two vectors.
    pub fn lie_bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let r = self.dim();
        let mut out = vec![<Q as Zero>::zero(); r];
        for i in 0..r {
            if Zero::is_zero(&x[i]) {
                continue;
            }
            for j in 0..r {
                if Zero::is_zero(&y[j]) {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !Zero::is_zero(c) {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Adjoint matrices `(ad_i)^k{}_j = C_{ij}{}^k`.
    pub fn ad_matrices(&self) -> Vec<Matrix<Q>> {
        let r = self.dim();
        (0..r).map(|i| Matrix::from_fn(r, r, |k, j| self.c(i, j, k).clone())).collect()
    }

    /// Killing form `k_{ij} = C_{il}{}^s C_{js}{}^l`.
    pub fn killing_form(&self) -> Matrix<Q> {
        let r = self.dim();
        Matrix::from_fn(r, r, |i, j| {
            let mut acc = <Q as Zero>::zero();
            for l in 0..r {
                for s in 0..r {
                    acc.add_mul(self.c(i, l, s), self.c(j, s, l));
                }
            }
            acc
        })
    }

    /// Jacobi identity `C_{[ij}{}^l C_{k]l}{}^s = 0`; violation indices are `(i, j, k, s)`.
    pub fn check_jacobi(&self) -> Check {
        alternation_identity(&self.bracket, &self.bracket, "Jacobi identity")
    }

    /// Invariance `C_{li}{}^s g_{sj} + C_{lj}{}^s g_{is} = 0` and non-degeneracy of `g`.
    pub fn check_metric_invariance(&self, g: &Matrix<Q>) -> MetricReport {
        let r = self.dim();
        let mut invariant = Ok(());
        'outer: for l in 0..r {
            for i in 0..r {
                for j in 0..r {
                    let mut acc = <Q as Zero>::zero();
                    for s in 0..r {
                        acc.add_mul(self.c(l, i, s), g.get(s, j));
                        acc.add_mul(self.c(l, j, s), g.get(i, s));
                    }
                    if !Zero::is_zero(&acc) {
                        invariant = Err(Violation::new("metric invariance", vec![l, i, j], acc));
                        break 'outer;
                    }
                }
            }
        }
        MetricReport { invariant, nondegenerate: g.rank() == r }
    }

    /// Structure constants after the basis change `Y_a = P_a{}^b X_b`.
    pub fn change_basis(&self, p: &Matrix<Q>) -> Option<Self> {
        Self::new(self.bracket.change_basis(p)?).ok()
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        Self::new(self.bracket.direct_sum(&o.bracket)).expect("binary")
    }
}

/// Outcome of [`LieAlgebra::check_metric_invariance`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricReport {
    pub invariant: Check,
    pub nondegenerate: bool,
}

/// Matrix representation `X_i ↦ ρ(X_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<S: Scalar = Q> {
    pub algebra: LieAlgebra,
    pub matrices: Vec<Matrix<S>>,
    /// Factor `c` such that `c·ρ_i` are the matrices whose traces define invariant
    /// polynomials (`i` for the anti-hermitian su(n) convention, `1` otherwise).
    pub trace_factor: S,
}

impl<S: Scalar> Representation<S> {
    pub fn new(algebra: LieAlgebra, matrices: Vec<Matrix<S>>) -> Result<Self, LieError> {
        let d = matrices.first().map_or(0, |m| m.rows());
        if matrices.len() != algebra.dim() || matrices.iter().any(|m| m.rows() != d || m.cols() != d) {
            return Err(LieError::RepresentationShape);
        }
        Ok(Representation { algebra, matrices, trace_factor: S::one() })
    }

    pub fn module_dim(&self) -> usize {
        self.matrices.first().map_or(0, |m| m.rows())
    }

    /// Closure `[ρ_i, ρ_j] = C_{ij}{}^k ρ_k`; violation indices `(i, j, A, B)`.
    pub fn check_closure(&self) -> Result<(), (Vec<usize>, S)> {
        let r = self.algebra.dim();
        let d = self.module_dim();
        for i in 0..r {
            for j in i + 1..r {
                let lhs = self.matrices[i].commutator(&self.matrices[j]);
                let mut rhs = Matrix::zeros(d, d);
                for k in 0..r {
                    let c = self.algebra.c(i, j, k);
                    if !Zero::is_zero(c) {
                        rhs = rhs.add(&self.matrices[k].scale(&S::from_q(c)));
                    }
                }
                let diff = lhs.sub(&rhs);
                for a in 0..d {
                    for b in 0..d {
                        if !diff.get(a, b).is_zero() {
                            return Err((vec![i, j, a, b], diff.get(a, b).clone()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Quadratic Casimir `I₂(ρ) = k^{ij} ρ_i ρ_j` with the inverse Killing form.
    pub fn casimir(&self) -> Result<Matrix<S>, LieError> {
        let kinv = self.algebra.killing_form().inverse().ok_or(LieError::DegenerateKilling)?;
        let d = self.module_dim();
        let r = self.algebra.dim();
        let mut acc = Matrix::zeros(d, d);
        for i in 0..r {
            for j in 0..r {
                let c = kinv.get(i, j);
                if !Zero::is_zero(c) {
                    acc = acc.add(&self.matrices[i].mul(&self.matrices[j]).scale(&S::from_q(c)));
                }
            }
        }
        Ok(acc)
    }
}

impl Representation<Q> {
    /// Adjoint representation.
    pub fn adjoint(l: &LieAlgebra) -> Self {
        Self::new(l.clone(), l.ad_matrices()).expect("shapes match")
    }

    /// Trivial representation on a `dim_v`-dimensional module.
    pub fn trivial(l: &LieAlgebra, dim_v: usize) -> Self {
        Self::new(l.clone(), vec![Matrix::zeros(dim_v, dim_v); l.dim()]).expect("shapes match")
    }
}

/// su(n) generators in the defining representation.
#[derive(Clone, Debug)]
pub struct SunBasis {
    /// Traceless hermitian generators `T_i`.
    pub hermitian: Vec<Matrix<Gauss>>,
    /// Gram matrix `2 Tr(T_i T_j)`; the identity except for rescaled diagonal generators.
    pub trace_gram: Matrix<Q>,
    /// Real structure constants, `[T_i, T_j] = i C_{ij}{}^k T_k`.
    pub algebra: LieAlgebra,
    /// `ρ_i = −i T_i`, with `trace_factor = i`.
    pub representation: Representation<Gauss>,
}

/// Generalized Gell-Mann basis of su(n), `2 ≤ n`.
///
/// Order: for each column `k = 2…n`, the symmetric and antisymmetric
/// off-diagonal pairs `(i, k)` for `i < k`, followed by the diagonal
/// generator `diag(1,…,1, −(k−1), 0,…)/2`. Off-diagonal generators and the
/// first diagonal one have `Tr(T_i T_j) = ½δ_{ij}`; the later diagonal ones
/// have `Tr(T²) = k(k−1)/4`, because the unit normalization would need
/// square roots.
pub fn sun_generators(n: usize) -> SunBasis {
    assert!(n >= 2, "su(n) needs n ≥ 2");
    let half = Gauss::real(qf(1, 2));
    let mut gens: Vec<Matrix<Gauss>> = Vec::new();
    for k in 1..n {
        for i in 0..k {
            let mut s = Matrix::zeros(n, n);
            s.set(i, k, half.clone());
            s.set(k, i, half.clone());
            gens.push(s);
            let mut a = Matrix::zeros(n, n);
            a.set(i, k, Gauss::new(q(0), qf(-1, 2)));
            a.set(k, i, Gauss::new(q(0), qf(1, 2)));
            gens.push(a);
        }
        let mut d = Matrix::zeros(n, n);
        for i in 0..k {
            d.set(i, i, half.clone());
        }
        d.set(k, k, Gauss::real(qf(-(k as i64), 2)));
        gens.push(d);
    }
    let r = gens.len();
    let gram = Matrix::from_fn(r, r, |i, j| {
        gens[i].mul(&gens[j]).trace().scale_i64(2).to_q().expect("hermitian traces are real")
    });
    let gram_inv = gram.inverse().expect("independent generators");
    // [T_i, T_j] = i C_ij^k T_k  ⇒  C_ij^k = Σ_l (−2i Tr([T_i,T_j] T_l)) (gram⁻¹)_{lk}
    let mut b = Bracket::zero(2, r);
    for i in 0..r {
        for j in i + 1..r {
            let comm = gens[i].commutator(&gens[j]);
            let proj: Vec<Q> = (0..r)
                .map(|l| {
                    let t = comm.mul(&gens[l]).trace();
                    Scalar::mul(&t, &Gauss::new(q(0), q(-2))).to_q().expect("real structure constants")
                })
                .collect();
            for k in 0..r {
                let mut c = <Q as Zero>::zero();
                for (l, p) in proj.iter().enumerate() {
                    c.add_mul(p, gram_inv.get(l, k));
                }
                if !Zero::is_zero(&c) {
                    b.set(&[i, j], k, c).expect("in range");
                }
            }
        }
    }
    let algebra = LieAlgebra::new(b).expect("binary");
    let minus_i = Gauss::new(q(0), q(-1));
    let rho: Vec<Matrix<Gauss>> = gens.iter().map(|t| t.scale(&minus_i)).collect();
    let mut representation = Representation::new(algebra.clone(), rho).expect("shapes match");
    representation.trace_factor = Gauss::i();
    SunBasis { hermitian: gens, trace_gram: gram, algebra, representation }
}

/// Symmetric tensor `k_{i₁…i_m}` stored by non-decreasing tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymInvariantPoly {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, Q>,
}

impl SymInvariantPoly {
    pub fn zero(order: usize, dim: usize) -> Self {
        SymInvariantPoly { order, dim, entries: BTreeMap::new() }
    }

    /// Builds from `f` evaluated on non-decreasing tuples.
    pub fn from_sorted_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> Q) -> Self {
        let mut p = Self::zero(order, dim);
        for t in multisets(dim, order) {
            let v = f(&t);
            if !Zero::is_zero(&v) {
                p.entries.insert(t, v);
            }
        }
        p
    }

    /// Symmetric bilinear form from a matrix (symmetry is checked).
    pub fn from_matrix(m: &Matrix<Q>) -> Result<Self, LieError> {
        let d = m.rows();
        for i in 0..d {
            for j in 0..d {
                if m.get(i, j) != m.get(j, i) {
                    return Err(LieError::NotSymmetric(vec![i, j]));
                }
            }
        }
        Ok(Self::from_sorted_fn(2, d, |t| m.get(t[0], t[1]).clone()))
    }

    /// Folds a dense array, checking full symmetry.
    pub fn from_array(a: &Array<Q>) -> Result<Self, LieError> {
        let m = a.rank();
        let d = a.shape().first().copied().unwrap_or(0);
        let p = Self::from_sorted_fn(m, d, |t| a.get(t).clone());
        for t in all_tuples(d, m) {
            if *a.get(&t) != p.get(&t) {
                return Err(LieError::NotSymmetric(t));
            }
        }
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.order
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, t: &[usize]) -> Q {
        let mut s = t.to_vec();
        s.sort_unstable();
        self.entries.get(&s).cloned().unwrap_or_else(<Q as Zero>::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.entries.iter()
    }

    pub fn to_array(&self) -> Array<Q> {
        Array::from_fn(vec![self.dim; self.order], |t| self.get(t))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_sorted_fn(self.order, self.dim, |t| self.get(t) * c)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_sorted_fn(self.order, self.dim, |t| self.get(t) + o.get(t))
    }

    /// Exact ray equality: `self = c·o` for some nonzero `c`.
    pub fn proportional_to(&self, o: &Self) -> Option<Q> {
        if self.order != o.order || self.dim != o.dim || self.entries.len() != o.entries.len() {
            return None;
        }
        if self.is_zero() {
            return Some(q(1));
        }
        let (k0, a0) = self.entries.iter().next()?;
        let c = a0 / o.entries.get(k0)?;
        for (k, a) in &self.entries {
            if *a != o.entries.get(k)? * &c {
                return None;
            }
        }
        Some(c)
    }

    /// Invariance `Σ_s C_{l i_s}{}^t k_{i₁…t…i_m} = 0`; violation indices `(l, i₁…i_m)`.
    pub fn check_invariance(&self, l: &LieAlgebra) -> Check {
        let r = l.dim();
        for a in 0..r {
            for t in multisets(r, self.order) {
                let mut acc = <Q as Zero>::zero();
                for s in 0..self.order {
                    let mut u = t.clone();
                    for x in 0..r {
                        let c = l.c(a, t[s], x);
                        if Zero::is_zero(c) {
                            continue;
                        }
                        u[s] = x;
                        acc.add_mul(c, &self.get(&u));
                    }
                }
                if !Zero::is_zero(&acc) {
                    let mut idx = vec![a];
                    idx.extend(t);
                    return Err(Violation::new("polynomial invariance", idx, acc));
                }
            }
        }
        Ok(())
    }

    /// Weight-one symmetrization of a dense array.
    pub fn symmetrize(a: &Array<Q>) -> Self {
        let m = a.rank();
        let d = a.shape().first().copied().unwrap_or(0);
        let perms = permutations_with_sign(m);
        let w = factorial(m);
        Self::from_sorted_fn(m, d, |t| {
            let mut acc = <Q as Zero>::zero();
            for (p, _) in &perms {
                let u: Vec<usize> = p.iter().map(|&i| t[i]).collect();
                acc += a.get(&u);
            }
            acc / &w
        })
    }
}

/// Non-decreasing `k`-tuples in `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations_with_replacement(k).collect()
}

/// Symmetrized trace `k_{i₁…i_m} = sTr(M_{i₁}…M_{i_m})` (weight one) of the
/// matrices `trace_factor·ρ_i`; fails if a value is not real.
pub fn symmetrized_trace_poly<S: Scalar>(rep: &Representation<S>, m: usize) -> Result<SymInvariantPoly, LieError> {
    if m < 1 {
        return Err(LieError::Order(m));
    }
    let mats: Vec<Matrix<S>> = rep.matrices.iter().map(|x| x.scale(&rep.trace_factor)).collect();
    let r = mats.len();
    let perms: Vec<Vec<usize>> = permutations_with_sign(m).into_iter().map(|(p, _)| p).collect();
    let w = factorial(m);
    let mut bad = None;
    let poly = SymInvariantPoly::from_sorted_fn(m, r, |t| {
        // distinct orderings only: cache products by ordered tuple
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for p in &perms {
            let u: Vec<usize> = p.iter().map(|&i| t[i]).collect();
            *seen.entry(u).or_default() += 1;
        }
        let mut acc = S::zero();
        for (u, mult) in seen {
            let mut prod = mats[u[0]].clone();
            for &i in &u[1..] {
                prod = prod.mul(&mats[i]);
            }
            acc = acc.add(&prod.trace().scale_i64(mult as i64));
        }
        match acc.to_q() {
            Some(v) => v / &w,
            None => {
                bad.get_or_insert(t.to_vec());
                <Q as Zero>::zero()
            }
        }
    });
    match bad {
        Some(t) => Err(LieError::NotSymmetric(t)),
        None => Ok(poly),
    }
}

/// `d_{ijk} = 2 Tr({T_i, T_j} T_k)` for the hermitian su(n) generators.
pub fn d_symbols(basis: &SunBasis) -> SymInvariantPoly {
    let g = &basis.hermitian;
    SymInvariantPoly::from_sorted_fn(3, g.len(), |t| {
        g[t[0]].anticommutator(&g[t[1]]).mul(&g[t[2]]).trace().scale_i64(2).to_q().expect("real")
    })
}

/// Component of the cocycle built from an invariant polynomial of order `m`:
/// `Ω_{ρ i₂…i_{2m−2} σ} = Σ_{perm j of i} sign · C_{j₂j₃}{}^{l₁}…C_{j_{2m−2}σ}{}^{l_{m−1}} k_{ρ l₁…l_{m−1}}`.
pub fn hoce_component(l: &LieAlgebra, k: &SymInvariantPoly, idx: &[usize]) -> Q {
    let m = k.order();
    let rho = idx[0];
    let sigma = idx[idx.len() - 1];
    let inner = &idx[1..idx.len() - 1];
    let r = l.dim();
    let mut acc = <Q as Zero>::zero();
    for (p, sign) in permutations_with_sign(inner.len()) {
        let j: Vec<usize> = p.iter().map(|&x| inner[x]).collect();
        // pairs (j0 j1), (j2 j3), …, then (j_last, σ)
        let mut pairs: Vec<(usize, usize)> = j[..j.len() - 1].chunks(2).map(|c| (c[0], c[1])).collect();
        pairs.push((j[j.len() - 1], sigma));
        let mut ls = vec![rho];
        let mut term = <Q as Zero>::zero();
        hoce_rec(l, k, &pairs, 0, &mut ls, Q::from_integer(1.into()), &mut term, r);
        if sign == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert_eq!(m, idx.len().div_ceil(2));
    acc
}

#[allow(clippy::too_many_arguments)]
fn hoce_rec(
    l: &LieAlgebra,
    k: &SymInvariantPoly,
    pairs: &[(usize, usize)],
    depth: usize,
    ls: &mut Vec<usize>,
    coef: Q,
    out: &mut Q,
    r: usize,
) {
    if depth == pairs.len() {
        *out += coef * k.get(ls);
        return;
    }
    let (a, b) = pairs[depth];
    for x in 0..r {
        let c = l.c(a, b, x);
        if Zero::is_zero(c) {
            continue;
        }
        ls.push(x);
        hoce_rec(l, k, pairs, depth + 1, ls, &coef * c, out, r);
        ls.pop();
    }
}

/// Antisymmetric `(2m−1)`-cocycle associated with an invariant polynomial of order `m ≥ 2`.
pub fn cocycle_from_invariant_poly(l: &LieAlgebra, k: &SymInvariantPoly) -> Result<AntisymTensor<Q>, LieError> {
    if k.order() < 2 {
        return Err(LieError::Order(k.order()));
    }
    k.check_invariance(l).map_err(LieError::NotInvariant)?;
    let rank = 2 * k.order() - 1;
    Ok(AntisymTensor::from_sorted_fn(rank, l.dim(), |t| hoce_component(l, k, t)))
}

/// Raises every index of an antisymmetric tensor with `g⁻¹`, as a dense array.
fn raise_all(omega: &AntisymTensor<Q>, ginv: &Matrix<Q>) -> Array<Q> {
    let d = omega.dim();
    let g: Array<Q> = Array::from_fn(vec![d, d], |i| ginv.get(i[0], i[1]).clone());
    let mut cur = omega.to_array();
    for _ in 0..omega.rank() {
        // contract the first axis and append the raised index at the end
        cur = contract(&cur, &g, &[(0, 0)]).expect("square");
    }
    cur
}

/// Symmetric invariant polynomial of order `m` from a `(2m−1)`-cocycle:
/// `t^{i₁…i_m} = Ω^{j₁…j_{2m−2} i_m} C^{i₁}_{j₁j₂}…C^{i_{m−1}}_{j_{2m−3}j_{2m−2}}`,
/// returned with all indices lowered by the Killing form.
pub fn invariant_poly_from_cocycle(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Result<SymInvariantPoly, LieError> {
    let p = omega.rank();
    if p < 3 || p % 2 == 0 {
        return Err(LieError::Order(p));
    }
    let m = p.div_ceil(2);
    let kf = l.killing_form();
    let kinv = kf.inverse().ok_or(LieError::DegenerateKilling)?;
    let r = l.dim();
    let up = raise_all(omega, &kinv);
    // C as array (j1, j2, i) = C_{j1 j2}^i
    let c: Array<Q> = Array::from_fn(vec![r, r, r], |t| l.c(t[0], t[1], t[2]).clone());
    // contract pairs (0,1) of `up` with C, each time appending a free index
    let mut cur = up;
    for _ in 0..m - 1 {
        cur = contract(&cur, &c, &[(0, 0), (1, 1)]).expect("square");
    }
    // axes now: (i_m, i₁, …, i_{m−1}); lower all with the Killing form
    let kd: Array<Q> = Array::from_fn(vec![r, r], |t| kf.get(t[0], t[1]).clone());
    for _ in 0..m {
        cur = contract(&cur, &kd, &[(0, 0)]).expect("square");
    }
    // after m single-axis lowerings the axis order is (i₁…i_{m−1}, i_m) lowered
    SymInvariantPoly::from_array(&cur)
}

/// Prop.-25 contraction: alternation over `j₁…j_{2m}` of
/// `C^{l₁}_{j₁j₂}…C^{l_m}_{j_{2m−1}j_{2m}} k_{l₁…l_m}`; the first nonzero
/// component is reported.
pub fn check_poly_vanishing_identity(l: &LieAlgebra, k: &SymInvariantPoly) -> Check {
    let m = k.order();
    let r = l.dim();
    for j in combinations(r, 2 * m) {
        let mut acc = <Q as Zero>::zero();
        for (p, sign) in permutations_with_sign(2 * m) {
            let u: Vec<usize> = p.iter().map(|&x| j[x]).collect();
            let pairs: Vec<(usize, usize)> = u.chunks(2).map(|c| (c[0], c[1])).collect();
            let mut ls = Vec::new();
            let mut term = <Q as Zero>::zero();
            hoce_rec(l, k, &pairs, 0, &mut ls, Q::from_integer(1.into()), &mut term, r);
            if sign == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if !Zero::is_zero(&acc) {
            return Err(Violation::new("invariant polynomial alternation", j, acc));
        }
    }
    Ok(())
}

/// Cocycle condition for the trivial representation, `C_{[j₁j₂}{}^k Ω_{i₁…i_{p−1}]k} = 0`.
pub fn check_cocycle_trivial(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Check {
    let p = omega.rank();
    let r = l.dim();
    for t in combinations(r, p + 1) {
        let mut acc = <Q as Zero>::zero();
        for (chosen, rest, sign) in crate::combinatorics::splits(&t, 2) {
            let mut idx = vec![0];
            idx.extend(rest.iter().copied());
            for k in 0..r {
                let c = l.c(chosen[0], chosen[1], k);
                if Zero::is_zero(c) {
                    continue;
                }
                idx[0] = k;
                let v = omega.get(&idx);
                if Zero::is_zero(&v) {
                    continue;
                }
                let term = c * v;
                if sign == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
        }
        if !Zero::is_zero(&acc) {
            return Err(Violation::new("cocycle condition", t, acc));
        }
    }
    Ok(())
}

/// Invariance of an antisymmetric tensor, `Σ_s C_{i j_s}{}^k Ω_{j₁…k…j_p} = 0`.
pub fn check_cochain_invariance(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Check {
    let p = omega.rank();
    let r = l.dim();
    for i in 0..r {
        for t in combinations(r, p) {
            let mut acc = <Q as Zero>::zero();
            for s in 0..p {
                let mut u = t.clone();
                for k in 0..r {
                    let c = l.c(i, t[s], k);
                    if Zero::is_zero(c) {
                        continue;
                    }
                    u[s] = k;
                    acc.add_mul(c, &omega.get(&u));
                }
            }
            if !Zero::is_zero(&acc) {
                let mut idx = vec![i];
                idx.extend(t);
                return Err(Violation::new("cochain invariance", idx, acc));
            }
        }
    }
    Ok(())
}

/// Antisymmetrized associator of three matrices,
/// `(X,Y,Z) + (Y,Z,X) + (Z,X,Y) − (Y,X,Z) − (X,Z,Y) − (Z,Y,X)`, where
/// `(A,B,C) = (AB)C − A(BC)`.
pub fn antisymmetrized_associator<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>, z: &Matrix<S>) -> Matrix<S> {
    let assoc = |a: &Matrix<S>, b: &Matrix<S>, c: &Matrix<S>| a.mul(b).mul(c).sub(&a.mul(&b.mul(c)));
    assoc(x, y, z)
        .add(&assoc(y, z, x))
        .add(&assoc(z, x, y))
        .sub(&assoc(y, x, z))
        .sub(&assoc(x, z, y))
        .sub(&assoc(z, y, x))
}

/// `[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]`.
pub fn jacobiator<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>, z: &Matrix<S>) -> Matrix<S> {
    x.commutator(y).commutator(z).add(&y.commutator(z).commutator(x)).add(&z.commutator(x).commutator(y))
}

/// Sorting helper exposed for callers that store symmetric data.
pub fn sorted_sign(t: &[usize]) -> Option<(Vec<usize>, i32)> {
    sort_with_sign(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_basics() {
        let l = LieAlgebra::su2();
        assert!(l.check_jacobi().is_ok());
        assert_eq!(l.killing_form(), Matrix::identity(3).scale(&q(-2)));
        let rep = MetricReport { invariant: Ok(()), nondegenerate: true };
        assert_eq!(l.check_metric_invariance(&Matrix::identity(3)), rep);
    }

    #[test]
    fn jacobi_failure_detected() {
        let l = LieAlgebra::from_entries(3, &[(0, 1, 0, q(1)), (0, 2, 2, q(1))]);
        assert!(l.check_jacobi().is_err());
    }

    #[test]
    fn su2_generators_give_epsilon() {
        let b = sun_generators(2);
        assert_eq!(b.algebra, LieAlgebra::su2());
        assert!(b.representation.check_closure().is_ok());
        assert_eq!(b.trace_gram, Matrix::identity(3));
    }

    #[test]
    fn su3_invariant_polynomials_and_cocycle() {
        let b = sun_generators(3);
        let l = &b.algebra;
        assert!(l.check_jacobi().is_ok());
        assert!(b.representation.check_closure().is_ok());
        let k3 = symmetrized_trace_poly(&b.representation, 3).unwrap();
        assert!(k3.check_invariance(l).is_ok());
        assert_eq!(d_symbols(&b).scale(&qf(1, 4)), k3);
        let omega = cocycle_from_invariant_poly(l, &k3).unwrap();
        assert!(!omega.is_zero());
        assert!(check_cocycle_trivial(l, &omega).is_ok());
        assert!(check_cochain_invariance(l, &omega).is_ok());
        let back = invariant_poly_from_cocycle(l, &omega).unwrap();
        assert!(back.proportional_to(&k3).is_some());
        assert!(check_poly_vanishing_identity(l, &k3).is_ok());
    }

    #[test]
    fn su2_has_no_cubic_invariant() {
        let b = sun_generators(2);
        let k3 = symmetrized_trace_poly(&b.representation, 3).unwrap();
        assert!(k3.is_zero());
        let k2 = symmetrized_trace_poly(&b.representation, 2).unwrap();
        let omega = cocycle_from_invariant_poly(&b.algebra, &k2).unwrap();
        assert!(omega.proportional_to(&AntisymTensor::from_sorted_fn(3, 3, |_| q(1))).is_some());
    }
}
