//! Chevalley–Eilenberg cohomology of a Lie algebra with values in a
//! representation.
//!
//! Cochains are stored in the minimal basis `ω^{i₁}∧…∧ω^{i_p}`, `i₁<…<i_p`,
//! one antisymmetric tensor per target index. A coordinate vector of `C^p`
//! lists the target index slowest and the sorted tuple (lexicographic rank)
//! fastest.

use crate::combinatorics::{binomial, combination_rank, combinations, sort_with_sign, splits};
use crate::lie::{LieAlgebra, Representation};
use crate::linalg::Matrix;
use crate::scalar::{factorial, q, Q};
use crate::structure::Violation;
use crate::tensor::AntisymTensor;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("representation acts on an algebra of dimension {rep}, expected {alg}")]
    DimensionMismatch { rep: usize, alg: usize },
    #[error("cochain has order {order} and target dimension {dim_v}, expected target dimension {expected}")]
    CochainShape { order: usize, dim_v: usize, expected: usize },
    #[error("Killing form is degenerate")]
    DegenerateKilling,
    #[error("quadratic Casimir is singular")]
    SingularCasimir,
    #[error("cochain is not a cocycle: {0}")]
    NotCocycle(Violation),
    #[error("two-cocycle is not a coboundary; the extension is non-trivial")]
    NonTrivialClass,
}

/// `V`-valued `p`-cochain `Ω^A_{i₁…i_p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    order: usize,
    dim: usize,
    components: Vec<AntisymTensor<Q>>,
}

impl Cochain {
    pub fn zero(order: usize, dim: usize, dim_v: usize) -> Self {
        Cochain { order, dim, components: vec![AntisymTensor::zero(order, dim); dim_v] }
    }

    /// Scalar-valued cochain from one antisymmetric tensor.
    pub fn scalar(t: AntisymTensor<Q>) -> Self {
        Cochain { order: t.rank(), dim: t.dim(), components: vec![t] }
    }

    pub fn from_components(components: Vec<AntisymTensor<Q>>) -> Option<Self> {
        let first = components.first()?;
        let (order, dim) = (first.rank(), first.dim());
        if components.iter().any(|c| c.rank() != order || c.dim() != dim) {
            return None;
        }
        Some(Cochain { order, dim, components })
    }

    /// Builds from `f(A, sorted tuple)`.
    pub fn from_fn(order: usize, dim: usize, dim_v: usize, mut f: impl FnMut(usize, &[usize]) -> Q) -> Self {
        let components = (0..dim_v).map(|a| AntisymTensor::from_sorted_fn(order, dim, |t| f(a, t))).collect();
        Cochain { order, dim, components }
    }

    /// Cochain from coordinates in the layout described in the module docs.
    pub fn from_vector(order: usize, dim: usize, dim_v: usize, v: &[Q]) -> Self {
        let nb = binomial(dim, order);
        Self::from_fn(order, dim, dim_v, |a, t| v[a * nb + combination_rank(dim, t)].clone())
    }

    pub fn to_vector(&self) -> Vec<Q> {
        let mut out = Vec::with_capacity(self.space_dim());
        for c in &self.components {
            for t in combinations(self.dim, self.order) {
                out.push(c.get_sorted(&t).cloned().unwrap_or_else(|| q(0)));
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn dim_v(&self) -> usize {
        self.components.len()
    }
    pub fn space_dim(&self) -> usize {
        self.dim_v() * binomial(self.dim, self.order)
    }
    pub fn component(&self, a: usize) -> &AntisymTensor<Q> {
        &self.components[a]
    }
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// `Ω^A_{t}` at an arbitrary tuple.
    pub fn get(&self, a: usize, t: &[usize]) -> Q {
        self.components[a].get(t)
    }

    pub fn add(&self, o: &Self) -> Self {
        let components = self.components.iter().zip(&o.components).map(|(a, b)| a.add(b)).collect();
        Cochain { order: self.order, dim: self.dim, components }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let components = self.components.iter().zip(&o.components).map(|(a, b)| a.sub(b)).collect();
        Cochain { order: self.order, dim: self.dim, components }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Cochain { order: self.order, dim: self.dim, components: self.components.iter().map(|x| x.scale(c)).collect() }
    }

    /// `(M·Ω)^A = M^A{}_B Ω^B`.
    pub fn apply_matrix(&self, m: &Matrix<Q>) -> Self {
        Self::from_fn(self.order, self.dim, m.rows(), |a, t| {
            let mut acc = q(0);
            for (b, c) in self.components.iter().enumerate() {
                let x = m.get(a, b);
                if !Zero::is_zero(x) {
                    if let Some(v) = c.get_sorted(t) {
                        acc += x * v;
                    }
                }
            }
            acc
        })
    }
}

fn check_rep(l: &LieAlgebra, rho: &Representation<Q>) -> Result<(), CohomologyError> {
    if rho.algebra.dim() != l.dim() || rho.matrices.len() != l.dim() {
        return Err(CohomologyError::DimensionMismatch { rep: rho.matrices.len(), alg: l.dim() });
    }
    Ok(())
}

fn check_cochain(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<(), CohomologyError> {
    check_rep(l, rho)?;
    if om.dim != l.dim() || om.dim_v() != rho.module_dim() {
        return Err(CohomologyError::CochainShape { order: om.order, dim_v: om.dim_v(), expected: rho.module_dim() });
    }
    Ok(())
}

/// Linear terms `(B, sorted source tuple, coefficient)` of `(sΩ)^A_t` for a sorted `t`.
fn coboundary_terms(l: &LieAlgebra, rho: &Representation<Q>, a: usize, t: &[usize]) -> Vec<(usize, Vec<usize>, Q)> {
    let r = l.dim();
    let mut out = Vec::new();
    // Σ_i (−1)^{i+1} ρ(X_{t_i})^A_B Ω^B(…t̂_i…)
    for (chosen, rest, sign) in splits(t, 1) {
        let m = &rho.matrices[chosen[0]];
        for b in 0..m.cols() {
            let x = m.get(a, b);
            if !Zero::is_zero(x) {
                out.push((b, rest.clone(), if sign == 1 { x.clone() } else { -x }));
            }
        }
    }
    // Σ_{j<k} (−1)^{j+k} Ω^A([X_j, X_k], rest); the shuffle sign is (−1)^{j+k+1}
    for (chosen, rest, sign) in splits(t, 2) {
        for k in 0..r {
            let c = l.c(chosen[0], chosen[1], k);
            if Zero::is_zero(c) {
                continue;
            }
            let mut u = vec![k];
            u.extend(rest.iter().copied());
            if let Some((sorted, s2)) = sort_with_sign(&u) {
                let v = if sign * s2 == 1 { -c } else { c.clone() };
                out.push((a, sorted, v));
            }
        }
    }
    out
}

/// Coboundary `sΩ` in the argument form.
pub fn coboundary(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<Cochain, CohomologyError> {
    check_cochain(l, rho, om)?;
    let r = l.dim();
    Ok(Cochain::from_fn(om.order + 1, r, om.dim_v(), |a, t| {
        let mut acc = q(0);
        for (b, u, c) in coboundary_terms(l, rho, a, t) {
            if let Some(v) = om.components[b].get_sorted(&u) {
                acc += c * v;
            }
        }
        acc
    }))
}

/// Coboundary for the trivial representation in the coordinate form
/// `(sΩ)_{i₁…i_{p+1}} = −½·1/(p−1)! ε^{j₁…j_{p+1}}_{i₁…i_{p+1}} C_{j₁j₂}{}^k Ω_{k j₃…j_{p+1}}`,
/// applied to each target component.
pub fn coboundary_trivial_coordinates(l: &LieAlgebra, om: &Cochain) -> Cochain {
    let p = om.order;
    let r = l.dim();
    if p == 0 {
        return Cochain::zero(1, r, om.dim_v());
    }
    let w = -(q(1) / (q(2) * factorial(p - 1)));
    let perms = crate::combinatorics::permutations_with_sign(p + 1);
    Cochain::from_fn(p + 1, r, om.dim_v(), |a, t| {
        let mut acc = q(0);
        for (perm, sign) in &perms {
            let j: Vec<usize> = perm.iter().map(|&x| t[x]).collect();
            for k in 0..r {
                let c = l.c(j[0], j[1], k);
                if Zero::is_zero(c) {
                    continue;
                }
                let mut u = vec![k];
                u.extend_from_slice(&j[2..]);
                let v = om.components[a].get(&u);
                if Zero::is_zero(&v) {
                    continue;
                }
                if *sign == 1 {
                    acc += c * v;
                } else {
                    acc -= c * v;
                }
            }
        }
        acc * &w
    })
}

/// Exact matrix of `s: C^p → C^{p+1}` in the coordinate layout of [`Cochain`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    pub source_order: usize,
    pub matrix: Matrix<Q>,
}

impl CoboundaryMatrix {
    pub fn build(l: &LieAlgebra, rho: &Representation<Q>, p: usize) -> Result<Self, CohomologyError> {
        check_rep(l, rho)?;
        let r = l.dim();
        let dv = rho.module_dim();
        let nsrc = binomial(r, p);
        let ntgt = if p < r { binomial(r, p + 1) } else { 0 };
        let mut m = Matrix::zeros(dv * ntgt, dv * nsrc);
        if p < r {
            for a in 0..dv {
                for (ti, t) in combinations(r, p + 1).into_iter().enumerate() {
                    let row = a * ntgt + ti;
                    for (b, u, c) in coboundary_terms(l, rho, a, &t) {
                        m.add_at(row, b * nsrc + combination_rank(r, &u), &c);
                    }
                }
            }
        }
        Ok(CoboundaryMatrix { source_order: p, matrix: m })
    }
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degrees: Vec<DegreeDims>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeDims {
    pub p: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

impl CohomologyReport {
    /// Builds the report from `dim C^p` and the ranks of `s_p` for `p = 0…p_max`
    /// plus the rank of `s_{p−1}` entering `B^p` (zero for `p = 0`).
    pub fn from_ranks(cochain_dims: &[usize], ranks: &[usize]) -> Self {
        let degrees = (0..cochain_dims.len())
            .map(|p| {
                let cocycles = cochain_dims[p] - ranks[p];
                let coboundaries = if p == 0 { 0 } else { ranks[p - 1] };
                DegreeDims { p, cochains: cochain_dims[p], cocycles, coboundaries, cohomology: cocycles - coboundaries }
            })
            .collect();
        CohomologyReport { degrees }
    }

    pub fn h(&self, p: usize) -> usize {
        self.degrees[p].cohomology
    }
}

/// Cohomology dimensions `H^p_ρ(𝔤, V)` for `p = 0…p_max` by exact rank.
pub fn cohomology_dims(l: &LieAlgebra, rho: &Representation<Q>, p_max: usize) -> Result<CohomologyReport, CohomologyError> {
    check_rep(l, rho)?;
    let r = l.dim();
    let p_max = p_max.min(r);
    let dv = rho.module_dim();
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in 0..=p_max {
        dims.push(dv * binomial(r, p));
        ranks.push(CoboundaryMatrix::build(l, rho, p)?.matrix.rank());
    }
    Ok(CohomologyReport::from_ranks(&dims, &ranks))
}

/// Residual of the cocycle condition, as the first nonzero entry of `sΩ`.
pub fn cocycle_violation(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<Option<Violation>, CohomologyError> {
    let s = coboundary(l, rho, om)?;
    for (a, c) in s.components.iter().enumerate() {
        if let Some((t, v)) = c.iter().next() {
            let mut idx = vec![a];
            idx.extend(t.iter().copied());
            return Ok(Some(Violation::new("cocycle condition", idx, v.clone())));
        }
    }
    Ok(None)
}

/// Solves `sβ = Ω` for a `(p−1)`-cochain `β`; `None` if `Ω` is not a coboundary.
pub fn coboundary_primitive(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<Option<Cochain>, CohomologyError> {
    check_cochain(l, rho, om)?;
    if om.order == 0 {
        return Ok(if om.is_zero() { Some(Cochain::zero(0, l.dim(), om.dim_v())) } else { None });
    }
    let m = CoboundaryMatrix::build(l, rho, om.order - 1)?;
    Ok(m.matrix.solve(&om.to_vector()).map(|v| Cochain::from_vector(om.order - 1, l.dim(), om.dim_v(), &v)))
}

/// Homotopy `(τΩ)^A_{i₁…i_{p−1}} = k^{ij} ρ(X_i)^A{}_B Ω^B_{j i₁…i_{p−1}}`.
pub fn homotopy_tau(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<Cochain, CohomologyError> {
    check_cochain(l, rho, om)?;
    let kinv = l.killing_form().inverse().ok_or(CohomologyError::DegenerateKilling)?;
    let r = l.dim();
    let dv = om.dim_v();
    if om.order == 0 {
        return Ok(Cochain::zero(0, r, dv));
    }
    // M_j = k^{ij} ρ_i
    let mut mj = vec![Matrix::zeros(dv, dv); r];
    for (j, m) in mj.iter_mut().enumerate() {
        for i in 0..r {
            let k = kinv.get(i, j);
            if !Zero::is_zero(k) {
                *m = m.add(&rho.matrices[i].scale(k));
            }
        }
    }
    Ok(Cochain::from_fn(om.order - 1, r, dv, |a, t| {
        let mut acc = q(0);
        let mut u = vec![0];
        u.extend_from_slice(t);
        for (j, m) in mj.iter().enumerate() {
            u[0] = j;
            for b in 0..dv {
                let x = m.get(a, b);
                if Zero::is_zero(x) {
                    continue;
                }
                let v = om.components[b].get(&u);
                if !Zero::is_zero(&v) {
                    acc += x * v;
                }
            }
        }
        acc
    }))
}

/// Whitehead primitive `τΩ·I₂(ρ)⁻¹` of a cocycle, with `s(result) = Ω` checked exactly.
pub fn whitehead_homotopy(l: &LieAlgebra, rho: &Representation<Q>, om: &Cochain) -> Result<Cochain, CohomologyError> {
    check_cochain(l, rho, om)?;
    if let Some(v) = cocycle_violation(l, rho, om)? {
        return Err(CohomologyError::NotCocycle(v));
    }
    let casimir = rho.casimir().map_err(|_| CohomologyError::DegenerateKilling)?;
    let cinv = casimir.inverse().ok_or(CohomologyError::SingularCasimir)?;
    let beta = homotopy_tau(l, rho, om)?.apply_matrix(&cinv);
    debug_assert_eq!(coboundary(l, rho, &beta)?, *om);
    Ok(beta)
}

/// Central extension `[X̃_i, X̃_j] = C_{ij}{}^k X̃_k + Ω_{ij} Ξ`; `Ξ` is the last basis vector.
pub fn central_extension(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Result<LieAlgebra, CohomologyError> {
    let r = l.dim();
    let triv = Representation::trivial(l, 1);
    if let Some(v) = cocycle_violation(l, &triv, &Cochain::scalar(omega.clone()))? {
        return Err(CohomologyError::NotCocycle(v));
    }
    let mut entries = Vec::new();
    for (t, k, v) in l.bracket().entries() {
        entries.push((t[0], t[1], k, v.clone()));
    }
    for (t, v) in omega.iter() {
        entries.push((t[0], t[1], r, v.clone()));
    }
    Ok(LieAlgebra::from_entries(r + 1, &entries))
}

/// Splitting of a trivial central extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trivialization {
    /// One-cochain with `sΩ¹ = Ω²`.
    pub primitive: AntisymTensor<Q>,
    /// Basis change `X̃'_i = X̃_i − Ω¹_i Ξ`, rows give the new vectors.
    pub basis_change: Matrix<Q>,
    /// Extended algebra in the new basis; `Ξ` no longer appears on the right.
    pub split: LieAlgebra,
}

/// Removes the central term of an extension whose cocycle is a coboundary.
pub fn trivialize_extension(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Result<Trivialization, CohomologyError> {
    let ext = central_extension(l, omega)?;
    let triv = Representation::trivial(l, 1);
    let prim = coboundary_primitive(l, &triv, &Cochain::scalar(omega.clone()))?.ok_or(CohomologyError::NonTrivialClass)?;
    let r = l.dim();
    let primitive = prim.component(0).clone();
    let mut p = Matrix::identity(r + 1);
    for i in 0..r {
        p.set(i, r, -primitive.get(&[i]));
    }
    let split = ext.change_basis(&p).expect("unimodular basis change");
    Ok(Trivialization { primitive, basis_change: p, split })
}

/// Outcome of [`deformation_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationReport {
    /// First nonzero component of `sα`, if any.
    pub cocycle_residual: Option<Violation>,
    /// `β` with `sβ = α` when `α` is a coboundary (the deformation is removable).
    pub primitive: Option<Cochain>,
    /// `γ(X,Y,Z) = α(X, α(Y,Z)) + cyclic`.
    pub obstruction: Cochain,
    /// Whether `sγ = 0`; holds whenever `α` is a cocycle.
    pub obstruction_closed: bool,
    /// `α₂` with `sα₂ = −γ`, so that the second-order condition can be met; `None` if `γ` is a non-trivial class.
    pub second_order: Option<Cochain>,
}

impl DeformationReport {
    pub fn is_cocycle(&self) -> bool {
        self.cocycle_residual.is_none()
    }
    pub fn is_coboundary(&self) -> bool {
        self.primitive.is_some()
    }
}

/// First- and second-order analysis of the deformation `[X,Y]_t = [X,Y] + t α(X,Y)`.
pub fn deformation_check(l: &LieAlgebra, alpha: &Cochain) -> Result<DeformationReport, CohomologyError> {
    let ad = Representation::adjoint(l);
    check_cochain(l, &ad, alpha)?;
    let r = l.dim();
    let cocycle_residual = cocycle_violation(l, &ad, alpha)?;
    let primitive = coboundary_primitive(l, &ad, alpha)?;
    let alpha_vec = |i: usize, j: usize| -> Vec<Q> { (0..r).map(|a| alpha.get(a, &[i, j])).collect() };
    // α(X_i, v) for a vector v
    let alpha_left = |i: usize, v: &[Q], a: usize| -> Q {
        let mut acc = q(0);
        for (k, x) in v.iter().enumerate() {
            if !Zero::is_zero(x) {
                acc += x * alpha.get(a, &[i, k]);
            }
        }
        acc
    };
    let obstruction = Cochain::from_fn(3, r, r, |a, t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        alpha_left(x, &alpha_vec(y, z), a) + alpha_left(y, &alpha_vec(z, x), a) + alpha_left(z, &alpha_vec(x, y), a)
    });
    let obstruction_closed = cocycle_violation(l, &ad, &obstruction)?.is_none();
    let second_order = coboundary_primitive(l, &ad, &obstruction.scale(&q(-1)))?;
    Ok(DeformationReport { cocycle_residual, primitive, obstruction, obstruction_closed, second_order })
}

/// Euclidean algebra e(2): `[J, P₁] = P₂`, `[J, P₂] = −P₁`, basis `(J, P₁, P₂)`.
pub fn euclidean_e2() -> LieAlgebra {
    LieAlgebra::from_entries(3, &[(0, 1, 2, q(1)), (0, 2, 1, q(-1))])
}

/// 𝔤-valued 2-cochain `α(P₁, P₂) = J` on e(2), deforming it toward so(3).
pub fn e2_to_so3_deformation() -> Cochain {
    Cochain::from_fn(2, 3, 3, |a, t| if a == 0 && t == [1, 2] { q(1) } else { q(0) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_from_abelian_plane() {
        let l = LieAlgebra::abelian(2);
        let triv = Representation::trivial(&l, 1);
        let rep = cohomology_dims(&l, &triv, 2).unwrap();
        assert_eq!(rep.h(2), 1);
        let omega = AntisymTensor::from_sorted_fn(2, 2, |_| q(1));
        let ext = central_extension(&l, &omega).unwrap();
        assert_eq!(ext, LieAlgebra::heisenberg());
        assert_eq!(trivialize_extension(&l, &omega).unwrap_err(), CohomologyError::NonTrivialClass);
    }

    #[test]
    fn maurer_cartan_identity_cochain() {
        let l = LieAlgebra::su2();
        let triv = Representation::trivial(&l, 3);
        let id = Cochain::from_fn(1, 3, 3, |a, t| q((a == t[0]) as i64));
        let s = coboundary(&l, &triv, &id).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert_eq!(s.get(k, &[i, j]), -l.c(i, j, k).clone());
                }
            }
        }
        assert_eq!(coboundary_trivial_coordinates(&l, &id), s);
    }

    #[test]
    fn su2_adjoint_and_trivial_cohomology() {
        let l = LieAlgebra::su2();
        let ad = Representation::adjoint(&l);
        let rep = cohomology_dims(&l, &ad, 3).unwrap();
        assert!((0..=3).all(|p| rep.h(p) == 0));
        let triv = Representation::trivial(&l, 1);
        let rep = cohomology_dims(&l, &triv, 3).unwrap();
        assert_eq!([rep.h(0), rep.h(1), rep.h(2), rep.h(3)], [1, 0, 0, 1]);
    }

    #[test]
    fn e2_deformation_is_nontrivial() {
        let l = euclidean_e2();
        let rep = deformation_check(&l, &e2_to_so3_deformation()).unwrap();
        assert!(rep.is_cocycle());
        assert!(!rep.is_coboundary());
        assert!(rep.obstruction_closed);
    }

    #[test]
    fn whitehead_laplacian_and_primitive() {
        let l = LieAlgebra::su2();
        let ad = Representation::adjoint(&l);
        let casimir = ad.casimir().unwrap();
        let om = Cochain::from_fn(2, 3, 3, |a, t| q((a as i64 + 1) * (t[0] as i64 * 3 + t[1] as i64) - 2));
        let lhs = coboundary(&l, &ad, &homotopy_tau(&l, &ad, &om).unwrap())
            .unwrap()
            .add(&homotopy_tau(&l, &ad, &coboundary(&l, &ad, &om).unwrap()).unwrap());
        assert_eq!(lhs, om.apply_matrix(&casimir));
        let cocycle = coboundary(&l, &ad, &om).unwrap();
        let beta = whitehead_homotopy(&l, &ad, &cocycle).unwrap();
        assert_eq!(coboundary(&l, &ad, &beta).unwrap(), cocycle);
        let zero = Cochain::zero(2, 3, 3);
        assert!(whitehead_homotopy(&l, &ad, &zero).unwrap().is_zero());
    }

    #[test]
    fn su2_extension_trivializes() {
        let l = LieAlgebra::su2();
        let omega = AntisymTensor::from_sorted_fn(2, 3, |t| q(t[0] as i64 - 2 * t[1] as i64));
        let t = trivialize_extension(&l, &omega).unwrap();
        assert!(t.split.check_jacobi().is_ok());
        for (_, k, _) in t.split.bracket().entries() {
            assert_ne!(k, 3);
        }
    }
}
