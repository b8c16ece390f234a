//! Polynomial multivector fields on ℝ^m and the Poisson-type conditions on them.
//!
//! A `p`-vector `A = (1/p!) A^{i₁…i_p} ∂_{i₁}∧…∧∂_{i_p}` is stored by its components on
//! sorted index tuples. The Schouten–Nijenhuis bracket uses the convention in which two
//! vector fields give their ordinary Lie bracket and `[A,B] = (−1)^{pq}[B,A]`.
//!
//! Generalized Poisson (GPS) tensors are checked through `[Λ,Λ] = 0` and, independently,
//! through the full alternation of `ω_{…σ} ∂_σ ω_{…}`. Nambu–Poisson tensors are checked
//! through the differential and algebraic conditions.

use crate::combinatorics::{combinations, permutations_with_sign, sort_with_sign, splits};
use crate::filippov::FilippovAlgebra;
use crate::gla::gla_from_cocycle;
use crate::lie::LieAlgebra;
use crate::nary_cohomology::{fa_central_extension, nhw_cocycle};
use crate::poly::Poly;
use crate::scalar::{factorial, q, Q};
use crate::structure::Bracket;
use crate::tensor::AntisymTensor;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// Highest total degree accepted by the identity checks unless a cap is given.
pub const DEFAULT_DEGREE_CAP: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PoissonError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("index tuple {0:?} does not fit order {1} on dimension {2}")]
    BadIndex(Vec<usize>, usize, usize),
    #[error("order {0} is odd; [Λ,Λ] vanishes identically")]
    OddOrder(usize),
    #[error("order {0} is not allowed here")]
    Order(usize),
    #[error("component degree {0} exceeds the cap {1}")]
    DegreeCap(u32, u32),
    #[error("tensor is not Nambu–Poisson")]
    NotNambuPoisson,
    #[error("need {expected} polynomials in {expected} variables")]
    Arity { expected: usize },
    #[error("density must be a nonzero constant")]
    Density,
    #[error("{0}")]
    Algebra(String),
}

type Result<T> = std::result::Result<T, PoissonError>;

/// Antisymmetric contravariant tensor field with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMultivector {
    order: usize,
    dim: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl PolyMultivector {
    pub fn zero(order: usize, dim: usize) -> Self {
        PolyMultivector { order, dim, comps: BTreeMap::new() }
    }

    /// Components from a function of sorted index tuples.
    pub fn from_sorted_fn(order: usize, dim: usize, mut f: impl FnMut(&[usize]) -> Poly) -> Self {
        let mut out = Self::zero(order, dim);
        for t in combinations(dim, order) {
            let p = f(&t);
            if !p.is_zero() {
                out.comps.insert(t, p);
            }
        }
        out
    }

    /// `∂_{i₁}∧…∧∂_{i_p}`.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut out = Self::zero(indices.len(), dim);
        out.set(indices, Poly::constant(dim, q(1)))?;
        Ok(out)
    }

    /// Vector field `Σ v^i ∂_i`.
    pub fn vector_field(components: Vec<Poly>) -> Self {
        let dim = components.len();
        let mut out = Self::zero(1, dim);
        for (i, p) in components.into_iter().enumerate() {
            if !p.is_zero() {
                out.comps.insert(vec![i], p);
            }
        }
        out
    }

    /// Components linear in the coordinates: `ω^I = c_I{}^σ x_σ` from a bracket's constants.
    pub fn linear_from_bracket(b: &Bracket) -> Self {
        let d = b.dim();
        Self::from_sorted_fn(b.arity(), d, |t| {
            let mut p = Poly::zero(d);
            for (s, c) in b.image(t).iter().enumerate() {
                if !Zero::is_zero(c) {
                    p.add_scaled_assign(&Poly::var(d, s), c);
                }
            }
            p
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Nonzero components on sorted tuples.
    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    /// Component on any index tuple, with the permutation sign.
    pub fn get(&self, idx: &[usize]) -> Poly {
        debug_assert_eq!(idx.len(), self.order);
        match sort_with_sign(idx) {
            None => Poly::zero(self.dim),
            Some((t, s)) => match self.comps.get(&t) {
                None => Poly::zero(self.dim),
                Some(p) if s == 1 => p.clone(),
                Some(p) => p.neg(),
            },
        }
    }

    pub fn set(&mut self, idx: &[usize], p: Poly) -> Result<()> {
        if idx.len() != self.order || idx.iter().any(|&i| i >= self.dim) || p.nvars() != self.dim {
            return Err(PoissonError::BadIndex(idx.to_vec(), self.order, self.dim));
        }
        let Some((t, s)) = sort_with_sign(idx) else {
            if p.is_zero() {
                return Ok(());
            }
            return Err(PoissonError::BadIndex(idx.to_vec(), self.order, self.dim));
        };
        let p = if s == 1 { p } else { p.neg() };
        if p.is_zero() {
            self.comps.remove(&t);
        } else {
            self.comps.insert(t, p);
        }
        Ok(())
    }

    /// Highest total degree among the components.
    pub fn degree(&self) -> u32 {
        self.comps.values().map(Poly::degree).max().unwrap_or(0)
    }

    /// True when every component is a constant.
    pub fn is_constant(&self) -> bool {
        self.comps.values().all(|p| p.as_constant().is_some())
    }

    fn check_dim(&self, o: &Self) -> Result<()> {
        if self.dim != o.dim {
            return Err(PoissonError::DimMismatch(self.dim, o.dim));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        if self.order != o.order {
            return Err(PoissonError::Order(o.order));
        }
        let mut out = self.clone();
        for (t, p) in &o.comps {
            let sum = out.comps.get(t).map_or_else(|| p.clone(), |a| a.add(p));
            if sum.is_zero() {
                out.comps.remove(t);
            } else {
                out.comps.insert(t.clone(), sum);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.order, self.dim);
        if Zero::is_zero(c) {
            return out;
        }
        out.comps = self.comps.iter().map(|(t, p)| (t.clone(), p.scale(c))).collect();
        out
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&q(-1)))
    }

    /// `(A∧B)^K = Σ_{K = I ⊔ J} sign · A^I B^J`.
    pub fn wedge(&self, o: &Self) -> Result<Self> {
        self.check_dim(o)?;
        let (p, r) = (self.order, o.order);
        Ok(Self::from_sorted_fn(p + r, self.dim, |k| {
            let mut acc = Poly::zero(self.dim);
            for (i, j, s) in splits(k, p) {
                let (a, b) = (self.get(&i), o.get(&j));
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                let prod = a.mul(&b);
                acc = if s == 1 { acc.add(&prod) } else { acc.sub(&prod) };
            }
            acc
        }))
    }

    /// `Λ(df₁,…,df_p) = ω^{i₁…i_p} ∂_{i₁}f₁⋯∂_{i_p}f_p`.
    pub fn apply(&self, fs: &[Poly]) -> Result<Poly> {
        if fs.len() != self.order {
            return Err(PoissonError::Arity { expected: self.order });
        }
        if let Some(f) = fs.iter().find(|f| f.nvars() != self.dim) {
            return Err(PoissonError::DimMismatch(self.dim, f.nvars()));
        }
        let grads: Vec<Vec<Poly>> = fs.iter().map(|f| (0..self.dim).map(|i| f.deriv(i)).collect()).collect();
        let mut acc = Poly::zero(self.dim);
        for (t, w) in &self.comps {
            // Σ over orderings of the sorted tuple is a determinant of gradient entries
            let mut det = Poly::zero(self.dim);
            for (perm, s) in permutations_with_sign(self.order) {
                let mut term = Poly::constant(self.dim, q(s as i64));
                for (slot, &pos) in perm.iter().enumerate() {
                    term = term.mul(&grads[slot][t[pos]]);
                    if term.is_zero() {
                        break;
                    }
                }
                det = det.add(&term);
            }
            acc.add_mul_assign(w, &det);
        }
        Ok(acc)
    }
}

/// Schouten–Nijenhuis bracket of a `p`-vector and a `q`-vector.
pub fn schouten_bracket(a: &PolyMultivector, b: &PolyMultivector) -> Result<PolyMultivector> {
    a.check_dim(b)?;
    let (p, r) = (a.order, b.order);
    if p + r == 0 {
        return Err(PoissonError::Order(0));
    }
    let d = a.dim;
    let da: BTreeMap<(Vec<usize>, usize), Poly> = derivatives(a);
    let db: BTreeMap<(Vec<usize>, usize), Poly> = derivatives(b);
    let deriv = |m: &BTreeMap<(Vec<usize>, usize), Poly>, t: &[usize], nu: usize| -> Option<Poly> {
        let (s, sign) = sort_with_sign(t)?;
        let p = m.get(&(s, nu))?;
        Some(if sign == 1 { p.clone() } else { p.neg() })
    };
    Ok(PolyMultivector::from_sorted_fn(p + r - 1, d, |k| {
        let mut acc = Poly::zero(d);
        if p >= 1 {
            for (i, j, s) in splits(k, p - 1) {
                for nu in 0..d {
                    let mut head = vec![nu];
                    head.extend_from_slice(&i);
                    let coef = a.get(&head);
                    if coef.is_zero() {
                        continue;
                    }
                    if let Some(dp) = deriv(&db, &j, nu) {
                        let t = coef.mul(&dp);
                        acc = if s == 1 { acc.add(&t) } else { acc.sub(&t) };
                    }
                }
            }
        }
        if r >= 1 {
            let outer = if p % 2 == 0 { 1 } else { -1 };
            for (i, j, s) in splits(k, p) {
                for nu in 0..d {
                    let mut head = vec![nu];
                    head.extend_from_slice(&j);
                    let coef = b.get(&head);
                    if coef.is_zero() {
                        continue;
                    }
                    if let Some(dp) = deriv(&da, &i, nu) {
                        let t = coef.mul(&dp);
                        acc = if s * outer == 1 { acc.add(&t) } else { acc.sub(&t) };
                    }
                }
            }
        }
        acc
    }))
}

fn derivatives(a: &PolyMultivector) -> BTreeMap<(Vec<usize>, usize), Poly> {
    let mut out = BTreeMap::new();
    for (t, p) in &a.comps {
        for nu in 0..a.dim {
            let dp = p.deriv(nu);
            if !dp.is_zero() {
                out.insert((t.clone(), nu), dp);
            }
        }
    }
    out
}

/// `Λ = ½ C_{ij}{}^k x_k ∂_i∧∂_j`.
pub fn lie_poisson_bivector(l: &LieAlgebra) -> PolyMultivector {
    PolyMultivector::linear_from_bracket(l.bracket())
}

/// `Λ = (1/(2m−2)!) Ω_{i₁…i_{2m−2}}{}^σ x_σ ∂_{i₁}∧…∧∂_{i_{2m−2}}`, the last index raised
/// with the inverse Killing form.
pub fn linear_gps_from_cocycle(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Result<PolyMultivector> {
    let g = gla_from_cocycle(l, omega).map_err(|e| PoissonError::Algebra(e.to_string()))?;
    Ok(PolyMultivector::linear_from_bracket(g.bracket()))
}

/// Both computations of `[Λ,Λ] = 0` for an even multivector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpsReport {
    /// `[Λ,Λ] = 0` through the Schouten–Nijenhuis bracket.
    pub schouten_zero: bool,
    /// The full alternation of `ω_{…σ} ∂_σ ω_{…}` vanishes.
    pub coordinate_zero: bool,
    /// First nonzero alternation component, if any.
    pub first_violation: Option<(Vec<usize>, Poly)>,
}

impl GpsReport {
    pub fn agree(&self) -> bool {
        self.schouten_zero == self.coordinate_zero
    }

    pub fn is_gps(&self) -> bool {
        self.schouten_zero && self.coordinate_zero
    }
}

/// `Σ_{π ∈ S(K)} sign(π) ω_{π₁…π_{2s−1}σ} ∂_σ ω_{π_{2s}…π_{4s−1}}` on every sorted `K`.
pub fn gps_alternation(lam: &PolyMultivector) -> Result<PolyMultivector> {
    let n = lam.order;
    if n == 0 || n % 2 == 1 {
        return Err(PoissonError::OddOrder(n));
    }
    let d = lam.dim;
    let da = derivatives(lam);
    let perms = permutations_with_sign(2 * n - 1);
    Ok(PolyMultivector::from_sorted_fn(2 * n - 1, d, |k| {
        let mut acc = Poly::zero(d);
        for (perm, s) in &perms {
            let idx: Vec<usize> = perm.iter().map(|&i| k[i]).collect();
            let (head, tail) = idx.split_at(n - 1);
            let Some((tail_sorted, ts)) = sort_with_sign(tail) else { continue };
            for sigma in 0..d {
                let Some(dp) = da.get(&(tail_sorted.clone(), sigma)) else { continue };
                let mut h = head.to_vec();
                h.push(sigma);
                let w = lam.get(&h);
                if w.is_zero() {
                    continue;
                }
                let t = w.mul(dp);
                acc = if s * ts == 1 { acc.add(&t) } else { acc.sub(&t) };
            }
        }
        acc
    }))
}

fn check_cap(lam: &PolyMultivector, cap: u32) -> Result<()> {
    let deg = lam.degree();
    if deg > cap {
        return Err(PoissonError::DegreeCap(deg, cap));
    }
    Ok(())
}

pub fn gps_check(lam: &PolyMultivector) -> Result<GpsReport> {
    gps_check_with_cap(lam, DEFAULT_DEGREE_CAP)
}

pub fn gps_check_with_cap(lam: &PolyMultivector, cap: u32) -> Result<GpsReport> {
    if lam.order % 2 == 1 || lam.order == 0 {
        return Err(PoissonError::OddOrder(lam.order));
    }
    check_cap(lam, cap)?;
    let snb = schouten_bracket(lam, lam)?;
    let alt = gps_alternation(lam)?;
    let first_violation = alt.comps.iter().next().map(|(t, p)| (t.clone(), p.clone()));
    Ok(GpsReport { schouten_zero: snb.is_zero(), coordinate_zero: alt.is_zero(), first_violation })
}

/// Verdicts of the Nambu–Poisson conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPReport {
    pub order: usize,
    pub differential_ok: bool,
    /// `(i₁…i_{n−1}, j₁…j_n)` and the residual polynomial.
    pub differential_violation: Option<(Vec<usize>, Poly)>,
    pub algebraic_ok: bool,
    /// `(i₁…i_n, j₁…j_n)` with `Σ + PΣ ≠ 0` there.
    pub algebraic_violation: Option<(Vec<usize>, Poly)>,
    /// First `(i, j)` with `Σ ≠ 0`, reported for diagnostics.
    pub sigma_nonzero: Option<(Vec<usize>, Poly)>,
    /// Vectors whose wedge is a constant input, when one exists.
    pub decomposable_hint: Option<Vec<Vec<Q>>>,
}

impl NPReport {
    pub fn np_ok(&self) -> bool {
        self.differential_ok && self.algebraic_ok
    }
}

/// `η_{i₁…i_{n−1}ρ}∂_ρη_{j₁…j_n} − Σ_a (−1)^a (∂_ρη_{i₁…i_{n−1}j_a}) η_{ρ j₁…ĵ_a…j_n}`.
pub fn differential_residual(lam: &PolyMultivector, i: &[usize], j: &[usize]) -> Poly {
    let d = lam.dim;
    let mut acc = Poly::zero(d);
    let ej = lam.get(j);
    for rho in 0..d {
        let mut ir = i.to_vec();
        ir.push(rho);
        let w = lam.get(&ir);
        if !w.is_zero() && !ej.is_zero() {
            acc.add_mul_assign(&w, &ej.deriv(rho));
        }
        for a in 0..j.len() {
            let mut ia = i.to_vec();
            ia.push(j[a]);
            let dp = lam.get(&ia).deriv(rho);
            if dp.is_zero() {
                continue;
            }
            let mut rest = vec![rho];
            rest.extend(j.iter().enumerate().filter(|(b, _)| *b != a).map(|(_, v)| *v));
            let e = lam.get(&rest);
            if e.is_zero() {
                continue;
            }
            let t = dp.mul(&e);
            acc = if a % 2 == 0 { acc.sub(&t) } else { acc.add(&t) };
        }
    }
    acc
}

/// `Σ_{IJ} = η_I η_J − Σ_a η_{i₁…i_{n−1}j_a} η_{j₁…i_n…j_n}` (`i_n` in slot `a`).
pub fn sigma(lam: &PolyMultivector, i: &[usize], j: &[usize]) -> Poly {
    let n = lam.order;
    let mut acc = lam.get(i).mul(&lam.get(j));
    for a in 0..n {
        let mut left = i[..n - 1].to_vec();
        left.push(j[a]);
        let l = lam.get(&left);
        if l.is_zero() {
            continue;
        }
        let mut right = j.to_vec();
        right[a] = i[n - 1];
        let r = lam.get(&right);
        if !r.is_zero() {
            acc = acc.sub(&l.mul(&r));
        }
    }
    acc
}

/// `(Σ + PΣ)_{IJ}` with `P` exchanging `i₁` and `j₁`.
pub fn algebraic_residual(lam: &PolyMultivector, i: &[usize], j: &[usize]) -> Poly {
    let (mut pi, mut pj) = (i.to_vec(), j.to_vec());
    std::mem::swap(&mut pi[0], &mut pj[0]);
    sigma(lam, i, j).add(&sigma(lam, &pi, &pj))
}

pub fn np_check(lam: &PolyMultivector) -> Result<NPReport> {
    np_check_with_cap(lam, DEFAULT_DEGREE_CAP)
}

pub fn np_check_with_cap(lam: &PolyMultivector, cap: u32) -> Result<NPReport> {
    let n = lam.order;
    if n < 2 {
        return Err(PoissonError::Order(n));
    }
    check_cap(lam, cap)?;
    let d = lam.dim;
    let mut differential_violation = None;
    'dif: for i in combinations(d, n - 1) {
        for j in combinations(d, n) {
            let r = differential_residual(lam, &i, &j);
            if !r.is_zero() {
                let mut t = i.clone();
                t.extend_from_slice(&j);
                differential_violation = Some((t, r));
                break 'dif;
            }
        }
    }
    let mut algebraic_violation = None;
    let mut sigma_nonzero = None;
    if n > 2 {
        // antisymmetric in i₂…i_{n−1} and in j₂…j_n, so those run over sorted tuples
        'alg: for i1 in 0..d {
            for mid in combinations(d, n - 2) {
                for i_last in 0..d {
                    for j1 in 0..d {
                        for jr in combinations(d, n - 1) {
                            let mut i = vec![i1];
                            i.extend_from_slice(&mid);
                            i.push(i_last);
                            let mut j = vec![j1];
                            j.extend_from_slice(&jr);
                            if sigma_nonzero.is_none() {
                                let s = sigma(lam, &i, &j);
                                if !s.is_zero() {
                                    let mut t = i.clone();
                                    t.extend_from_slice(&j);
                                    sigma_nonzero = Some((t, s));
                                }
                            }
                            let r = algebraic_residual(lam, &i, &j);
                            if !r.is_zero() {
                                i.extend_from_slice(&j);
                                algebraic_violation = Some((i, r));
                                break 'alg;
                            }
                        }
                    }
                }
            }
        }
    }
    let decomposable_hint = if lam.is_constant() { decompose_constant(lam).ok() } else { None };
    Ok(NPReport {
        order: n,
        differential_ok: differential_violation.is_none(),
        differential_violation,
        algebraic_ok: algebraic_violation.is_none(),
        algebraic_violation,
        sigma_nonzero,
        decomposable_hint,
    })
}

/// Factors a constant multivector as `v₁∧…∧v_n` by pivoting on its first nonzero component.
/// On failure returns the first sorted tuple where the wedge of the candidates disagrees.
pub fn decompose_constant(lam: &PolyMultivector) -> std::result::Result<Vec<Vec<Q>>, Vec<usize>> {
    let n = lam.order;
    let d = lam.dim;
    let constant = |t: &[usize]| lam.get(t).as_constant().unwrap_or_default();
    let Some((pivot, c)) = lam.comps.iter().next().map(|(t, p)| (t.clone(), p.as_constant().unwrap_or_default()))
    else {
        return Ok(vec![vec![<Q as Zero>::zero(); d]; n]);
    };
    let mut vectors: Vec<Vec<Q>> = (0..n)
        .map(|a| {
            (0..d)
                .map(|k| {
                    let mut t = pivot.clone();
                    t[a] = k;
                    constant(&t)
                })
                .collect()
        })
        .collect();
    let mut norm = <Q as One>::one();
    for _ in 1..n {
        norm *= &c;
    }
    for x in vectors[0].iter_mut() {
        *x /= &norm;
    }
    let mut w = PolyMultivector::vector_field(vectors[0].iter().map(|x| Poly::constant(d, x.clone())).collect());
    for v in &vectors[1..] {
        let vf = PolyMultivector::vector_field(v.iter().map(|x| Poly::constant(d, x.clone())).collect());
        w = w.wedge(&vf).expect("same dimension");
    }
    for t in combinations(d, n) {
        if w.get(&t) != lam.get(&t) {
            return Err(t);
        }
    }
    Ok(vectors)
}

/// Evaluates `np_check` and then the GPS condition for an even Nambu–Poisson tensor.
pub fn np_even_implies_gps(lam: &PolyMultivector) -> Result<bool> {
    if lam.order % 2 == 1 {
        return Err(PoissonError::OddOrder(lam.order));
    }
    if !np_check(lam)?.np_ok() {
        return Err(PoissonError::NotNambuPoisson);
    }
    Ok(gps_check(lam)?.is_gps())
}

/// Smallest sum of two constant basis 4-vectors on ℝ^m, `m ≤ max_dim`, that is GPS but not
/// Nambu–Poisson.
pub fn gps_not_np_witness(max_dim: usize) -> Option<PolyMultivector> {
    for m in 4..=max_dim {
        let basis = combinations(m, 4);
        for (x, a) in basis.iter().enumerate() {
            for b in &basis[x + 1..] {
                let lam = PolyMultivector::basis(m, a).ok()?.add(&PolyMultivector::basis(m, b).ok()?).ok()?;
                let gps = gps_check(&lam).ok()?.is_gps();
                if gps && !np_check(&lam).ok()?.algebraic_ok {
                    return Some(lam);
                }
            }
        }
    }
    None
}

fn jacobian_det(fs: &[Poly], vars: &[usize]) -> Poly {
    let nv = fs[0].nvars();
    let n = fs.len();
    let grads: Vec<Vec<Poly>> = fs.iter().map(|f| vars.iter().map(|&v| f.deriv(v)).collect()).collect();
    let mut det = Poly::zero(nv);
    for (perm, s) in permutations_with_sign(n) {
        let mut term = Poly::constant(nv, q(s as i64));
        for (row, &col) in perm.iter().enumerate() {
            term = term.mul(&grads[row][col]);
            if term.is_zero() {
                break;
            }
        }
        det = det.add(&term);
    }
    det
}

/// `{f₁,…,f_n} = e · ∂(f₁,…,f_n)/∂(x₁,…,x_n)`.
pub fn nambu_bracket(fs: &[Poly], density: &Q) -> Result<Poly> {
    let n = fs.len();
    if n == 0 || fs.iter().any(|f| f.nvars() != n) {
        return Err(PoissonError::Arity { expected: n });
    }
    if Zero::is_zero(density) {
        return Err(PoissonError::Density);
    }
    let vars: Vec<usize> = (0..n).collect();
    Ok(jacobian_det(fs, &vars).scale(density))
}

/// `{f₁…f_{n−1},{g₁…g_n}} − Σ_i {g₁…{f₁…f_{n−1},g_i}…g_n}` for the Jacobian bracket.
pub fn nambu_fi_residual(fs: &[Poly], gs: &[Poly], density: &Q) -> Result<Poly> {
    let n = gs.len();
    if fs.len() + 1 != n {
        return Err(PoissonError::Arity { expected: n });
    }
    let with = |last: Poly| -> Vec<Poly> {
        let mut v = fs.to_vec();
        v.push(last);
        v
    };
    let mut acc = nambu_bracket(&with(nambu_bracket(gs, density)?), density)?;
    for i in 0..n {
        let mut g = gs.to_vec();
        g[i] = nambu_bracket(&with(gs[i].clone()), density)?;
        acc = acc.sub(&nambu_bracket(&g, density)?);
    }
    Ok(acc)
}

/// `X{g₁…g_n} − Σ_i {g₁…X g_i…g_n}` with `X F = Λ(dH₁,…,dH_{n−1},dF)`.
pub fn hamiltonian_derivation_residual(lam: &PolyMultivector, hs: &[Poly], gs: &[Poly]) -> Result<Poly> {
    let n = lam.order;
    if hs.len() + 1 != n || gs.len() != n {
        return Err(PoissonError::Arity { expected: n });
    }
    let x = |f: Poly| -> Result<Poly> {
        let mut v = hs.to_vec();
        v.push(f);
        lam.apply(&v)
    };
    let mut acc = x(lam.apply(gs)?)?;
    for i in 0..n {
        let mut g = gs.to_vec();
        g[i] = x(gs[i].clone())?;
        acc = acc.sub(&lam.apply(&g)?);
    }
    Ok(acc)
}

/// `{f₁,f₂,f₃} = Σ_a ∂(f₁,f₂,f₃)/∂(x^a,y^a,z^a)` on ℝ^{3N} with coordinates ordered
/// `(x¹…x^N, y¹…y^N, z¹…z^N)`.
pub fn nhw_bracket(fs: &[Poly; 3], n_copies: usize) -> Poly {
    let mut acc = Poly::zero(3 * n_copies);
    for a in 0..n_copies {
        acc = acc.add(&jacobian_det(fs, &[a, n_copies + a, 2 * n_copies + a]));
    }
    acc
}

/// Compares the bracket of coordinate functions with the central extension of the abelian
/// `3N`-dimensional 3-algebra by the Nambu–Heisenberg–Weyl cocycle.
pub fn nhw_realization_check(n_copies: usize) -> bool {
    let d = 3 * n_copies;
    let ext = match fa_central_extension(&FilippovAlgebra::abelian(3, d), &nhw_cocycle(n_copies)) {
        Ok(e) => e,
        Err(_) => return false,
    };
    let x = |i: usize| Poly::var(d, i);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let b = nhw_bracket(&[x(i), x(j), x(k)], n_copies);
                let expected = ext.f(&[i, j, k], d);
                if b != Poly::constant(d, expected) {
                    return false;
                }
            }
        }
    }
    true
}

/// Weight `1/p!` relating components to the multivector.
pub fn component_weight(p: usize) -> Q {
    factorial(p).recip()
}
