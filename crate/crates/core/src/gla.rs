//! Generalized Lie algebras: even multibrackets, the generalized Jacobi
//! identity and its mixed form, brackets built from Lie algebra cocycles,
//! coderivations, higher exterior derivatives and the complete BRST operator.
//!
//! Multivectors use the weight-free wedge `X₁∧X₂ = X₁⊗X₂ − X₂⊗X₁` and are
//! stored on sorted index tuples. Forms are stored by their coordinates
//! `α_{i₁…i_q} = α(X_{i₁},…,X_{i_q})`.

use crate::combinatorics::{merge_sorted, permutations_with_sign, sort_with_sign, splits};
use crate::lie::{check_cocycle_trivial, LieAlgebra};
use crate::linalg::Matrix;
use crate::scalar::{factorial, q, Scalar, Q};
use crate::structure::{alternation_identity, Bracket, Check, Violation};
use crate::tensor::AntisymTensor;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlaError {
    #[error("arity {0} is not even")]
    OddArity(usize),
    #[error("multibracket needs equal square matrices and at least two entries")]
    Shape,
    #[error("Killing form is degenerate")]
    DegenerateKilling,
    #[error("tensor is not a cocycle: {0}")]
    NotCocycle(Violation),
    #[error("arity {got} does not match {expected}")]
    ArityMismatch { got: usize, expected: usize },
}

/// Weight-free multibracket `Σ_σ sign(σ) X_{σ(1)}⋯X_{σ(n)}`.
pub fn multibracket<S: Scalar>(xs: &[Matrix<S>]) -> Result<Matrix<S>, GlaError> {
    let n = xs.len();
    if n < 2 {
        return Err(GlaError::Shape);
    }
    let d = xs[0].rows();
    if xs.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Err(GlaError::Shape);
    }
    let mut acc = Matrix::zeros(d, d);
    for (p, sign) in permutations_with_sign(n) {
        let mut prod = xs[p[0]].clone();
        for &i in &p[1..] {
            prod = prod.mul(&xs[i]);
        }
        acc = if sign == 1 { acc.add(&prod) } else { acc.sub(&prod) };
    }
    Ok(acc)
}

/// Weight-one multibracket, the weight-free one divided by `n!`.
pub fn multibracket_primed<S: Scalar>(xs: &[Matrix<S>]) -> Result<Matrix<S>, GlaError> {
    let m = multibracket(xs)?;
    let w = S::from_q(&factorial(xs.len())).inv().expect("nonzero factorial");
    Ok(m.scale(&w))
}

/// One term of a resolution into commutators: `sign · [X_a,X_b][X_c,X_d]⋯`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionTerm {
    pub sign: i32,
    pub pairs: Vec<(usize, usize)>,
}

/// Expansion of the `2s`-bracket of positions `0…2s−1` into ordered products of
/// commutators, iterating `[X…] = Σ_{s<t} (−1)^{s+t+1} [X_s,X_t]·[rest]`.
pub fn even_bracket_resolution(n: usize) -> Result<Vec<ResolutionTerm>, GlaError> {
    if n % 2 != 0 || n == 0 {
        return Err(GlaError::OddArity(n));
    }
    fn rec(items: &[usize]) -> Vec<ResolutionTerm> {
        if items.is_empty() {
            return vec![ResolutionTerm { sign: 1, pairs: Vec::new() }];
        }
        let mut out = Vec::new();
        for s in 0..items.len() {
            for t in s + 1..items.len() {
                // 1-based exponent s+t+1 equals the 0-based s+t+3
                let sign = if (s + t) % 2 == 1 { 1 } else { -1 };
                let rest: Vec<usize> = items.iter().enumerate().filter(|(i, _)| *i != s && *i != t).map(|(_, x)| *x).collect();
                for mut sub in rec(&rest) {
                    sub.pairs.insert(0, (items[s], items[t]));
                    sub.sign *= sign;
                    out.push(sub);
                }
            }
        }
        out
    }
    let items: Vec<usize> = (0..n).collect();
    Ok(rec(&items))
}

/// Evaluates the resolution of an even multibracket and checks it against
/// [`multibracket`]; returns the expansion and the common value.
pub fn resolve_even_bracket<S: Scalar>(xs: &[Matrix<S>]) -> Result<(Vec<ResolutionTerm>, Matrix<S>), GlaError> {
    let terms = even_bracket_resolution(xs.len())?;
    let direct = multibracket(xs)?;
    let d = xs[0].rows();
    let mut acc = Matrix::zeros(d, d);
    for t in &terms {
        let mut prod = Matrix::identity(d);
        for &(a, b) in &t.pairs {
            prod = prod.mul(&xs[a].commutator(&xs[b]));
        }
        acc = if t.sign == 1 { acc.add(&prod) } else { acc.sub(&prod) };
    }
    assert_eq!(acc, direct, "commutator resolution disagrees with the multibracket");
    Ok((terms, direct))
}

/// `Σ_{σ∈S_{2n−1}} sign(σ) [[X_{σ(1)},…,X_{σ(n)}], X_{σ(n+1)},…,X_{σ(2n−1)}]`
/// with weight-free brackets.
pub fn alternated_double_bracket<S: Scalar>(xs: &[Matrix<S>], n: usize) -> Result<Matrix<S>, GlaError> {
    if xs.len() != 2 * n - 1 {
        return Err(GlaError::Shape);
    }
    let d = xs[0].rows();
    let mut acc = Matrix::zeros(d, d);
    for (p, sign) in permutations_with_sign(2 * n - 1) {
        let inner: Vec<Matrix<S>> = p[..n].iter().map(|&i| xs[i].clone()).collect();
        let mut outer = vec![multibracket(&inner)?];
        outer.extend(p[n..].iter().map(|&i| xs[i].clone()));
        let v = multibracket(&outer)?;
        acc = if sign == 1 { acc.add(&v) } else { acc.sub(&v) };
    }
    Ok(acc)
}

/// Factor `n!(n−1)!·Σ_{s<n}(−1)^{s(n+1)}` relating the alternated double bracket to
/// the `(2n−1)`-bracket: zero for even `n`, `n!(n−1)!·n` for odd `n`.
pub fn double_bracket_factor(n: usize) -> Q {
    let sum: i64 = (0..n).map(|s| if (s * (n + 1)) % 2 == 0 { 1 } else { -1 }).sum();
    factorial(n) * factorial(n - 1) * q(sum)
}

/// Generalized Lie algebra of even arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLAlgebra {
    bracket: Bracket,
}

impl GLAlgebra {
    pub fn new(bracket: Bracket) -> Result<Self, GlaError> {
        if bracket.arity() % 2 != 0 || bracket.arity() == 0 {
            return Err(GlaError::OddArity(bracket.arity()));
        }
        Ok(GLAlgebra { bracket })
    }

    pub fn arity(&self) -> usize {
        self.bracket.arity()
    }
    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }
    pub fn bracket(&self) -> &Bracket {
        &self.bracket
    }

    /// `C_{[j₁…j_n}{}^l C_{j_{n+1}…j_{2n−1}]l}{}^s = 0`; indices `(j…, s)`.
    pub fn check_gji(&self) -> Check {
        alternation_identity(&self.bracket, &self.bracket, "generalized Jacobi identity")
    }

    /// Mixed identity `ε^{i…} C_{i₁…i_n}{}^l C'_{i_{n+1}…l}{}^s = 0`.
    pub fn check_mgji(&self, other: &GLAlgebra) -> Check {
        alternation_identity(&self.bracket, &other.bracket, "mixed generalized Jacobi identity")
    }
}

impl From<&LieAlgebra> for GLAlgebra {
    fn from(l: &LieAlgebra) -> Self {
        GLAlgebra { bracket: l.bracket().clone() }
    }
}

/// Bracket `[X_{i₁},…,X_{i_{2m−2}}] = Ω_{i₁…i_{2m−2}σ} k^{σj} X_j` from a `(2m−1)`-cocycle.
pub fn gla_from_cocycle(l: &LieAlgebra, omega: &AntisymTensor<Q>) -> Result<GLAlgebra, GlaError> {
    if omega.rank() < 3 || omega.rank() % 2 == 0 {
        return Err(GlaError::OddArity(omega.rank().saturating_sub(1)));
    }
    check_cocycle_trivial(l, omega).map_err(GlaError::NotCocycle)?;
    let kinv = l.killing_form().inverse().ok_or(GlaError::DegenerateKilling)?;
    GLAlgebra::new(Bracket::from_raised(omega, &kinv))
}

/// Homogeneous multivector `Σ c_I X_{I₁}∧…∧X_{I_q}` over sorted `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector {
    degree: usize,
    dim: usize,
    terms: BTreeMap<Vec<usize>, Q>,
}

impl Multivector {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Multivector { degree, dim, terms: BTreeMap::new() }
    }

    /// `X_{t₁}∧…∧X_{t_q}` for an arbitrary tuple (zero if an index repeats).
    pub fn monomial(dim: usize, t: &[usize]) -> Self {
        let mut m = Self::zero(t.len(), dim);
        m.add_term(t, &q(1));
        m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.terms.iter()
    }

    /// Adds `c·X_{t₁}∧…` with `t` in any order.
    pub fn add_term(&mut self, t: &[usize], c: &Q) {
        let Some((sorted, sign)) = sort_with_sign(t) else { return };
        let v = if sign == 1 { c.clone() } else { -c };
        let e = self.terms.entry(sorted.clone()).or_insert_with(|| q(0));
        *e += v;
        if Zero::is_zero(e) {
            self.terms.remove(&sorted);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &o.terms {
            out.add_term(t, c);
        }
        out
    }
}

/// Coderivation `∂_s(X₁∧…∧X_q) = Σ_{|S|=s} sign(S, rest) [X_S]∧X_rest`, extended linearly.
pub fn coderivation_apply(g: &Bracket, mv: &Multivector) -> Multivector {
    let s = g.arity();
    let q_deg = mv.degree;
    if q_deg < s {
        return Multivector::zero(0, mv.dim);
    }
    let mut out = Multivector::zero(q_deg + 1 - s, mv.dim);
    for (t, c) in &mv.terms {
        for (chosen, rest, sign) in splits(t, s) {
            let Some((sg, col)) = g.column(&chosen) else { continue };
            for (k, v) in col {
                let mut u = vec![*k];
                u.extend(rest.iter().copied());
                let coef = if sign * sg == 1 { c * v } else { -(c * v) };
                out.add_term(&u, &coef);
            }
        }
    }
    out
}

/// Pairing `α(Σ c_J X_J) = Σ c_J · q! α_J` of a `q`-form with a `q`-vector.
pub fn pair_form_multivector(alpha: &AntisymTensor<Q>, mv: &Multivector) -> Q {
    if alpha.rank() != mv.degree {
        return q(0);
    }
    let w = factorial(mv.degree);
    let mut acc = q(0);
    for (t, c) in &mv.terms {
        acc += c * alpha.get(t);
    }
    acc * w
}

/// Higher exterior derivative
/// `(d̃α)_{i₁…i_{q+s−1}} = Σ_{|S|=s} sign(S, rest) C_S{}^ρ α_{ρ, rest}` for an `s`-bracket `C`.
pub fn higher_exterior_derivative(g: &Bracket, alpha: &AntisymTensor<Q>) -> AntisymTensor<Q> {
    let s = g.arity();
    let qd = alpha.rank();
    let d = alpha.dim();
    if qd == 0 {
        return AntisymTensor::zero(s - 1, d);
    }
    AntisymTensor::from_sorted_fn(qd + s - 1, d, |t| {
        let mut acc = q(0);
        for (chosen, rest, sign) in splits(t, s) {
            let Some((sg, col)) = g.column(&chosen) else { continue };
            let mut u = vec![0];
            u.extend(rest.iter().copied());
            for (rho, v) in col {
                u[0] = *rho;
                let a = alpha.get(&u);
                if Zero::is_zero(&a) {
                    continue;
                }
                if sign * sg == 1 {
                    acc += v * a;
                } else {
                    acc -= v * a;
                }
            }
        }
        acc
    })
}

/// Wedge of forms, `(α∧β)_I = Σ_{|S|=p} sign(S, rest) α_S β_rest`.
pub fn wedge_forms(alpha: &AntisymTensor<Q>, beta: &AntisymTensor<Q>) -> AntisymTensor<Q> {
    let (p, qd) = (alpha.rank(), beta.rank());
    AntisymTensor::from_sorted_fn(p + qd, alpha.dim(), |t| {
        let mut acc = q(0);
        for (chosen, rest, sign) in splits(t, p) {
            let a = alpha.get(&chosen);
            if Zero::is_zero(&a) {
                continue;
            }
            let v = a * beta.get(&rest);
            if sign == 1 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        acc
    })
}

/// `(p+s−1)!/p!`: the value of `d̃α` on a monomial equals this factor times
/// `α(∂_s monomial)`.
pub fn duality_factor(p: usize, s: usize) -> Q {
    factorial(p + s - 1) / factorial(p)
}

/// Element of the ghost exterior algebra, monomials `c^{i₁}⋯c^{i_k}` keyed by bit masks.
pub type GhostElement = BTreeMap<u32, Q>;

/// Odd operator `−1/s! c^{i₁}⋯c^{i_s} Ω_{i₁…i_s}{}^σ ∂/∂c^σ = −Σ_{I sorted} Ω_I{}^σ c^I ∂_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostOperator {
    dim: usize,
    terms: Vec<(u32, usize, Q)>,
}

fn mask_of(t: &[usize]) -> u32 {
    t.iter().fold(0, |m, &i| m | (1 << i))
}

fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

impl GhostOperator {
    pub fn from_bracket(b: &Bracket) -> Self {
        assert!(b.dim() <= 31, "ghost algebra limited to 31 generators");
        let terms = b.entries().map(|(t, sigma, v)| (mask_of(t), sigma, -v.clone())).collect();
        GhostOperator { dim: b.dim(), terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, x: &GhostElement) -> GhostElement {
        let mut out = GhostElement::new();
        for (&m, c) in x {
            for (imask, sigma, w) in &self.terms {
                if m & (1 << sigma) == 0 {
                    continue;
                }
                // left derivative: sign from the generators before σ
                let before = (m & ((1u32 << sigma) - 1)).count_ones();
                let rest = m & !(1 << sigma);
                if rest & imask != 0 {
                    continue;
                }
                let (_, s2) = merge_sorted(&indices_of(*imask), &indices_of(rest)).expect("disjoint");
                let sign = if before % 2 == 0 { s2 } else { -s2 };
                let v = if sign == 1 { c * w } else { -(c * w) };
                let e = out.entry(imask | rest).or_insert_with(|| q(0));
                *e += v;
            }
        }
        out.retain(|_, v| !Zero::is_zero(v));
        out
    }
}

/// Checks `{s_a, s_b} = 0` on every basis monomial for all pairs of operators;
/// violation indices are `(a, b, ghost indices of the monomial…)`.
pub fn check_anticommutators(ops: &[GhostOperator]) -> Check {
    let Some(first) = ops.first() else { return Ok(()) };
    let r = first.dim;
    for a in 0..ops.len() {
        for b in a..ops.len() {
            for m in 0u32..(1u32 << r) {
                let x: GhostElement = [(m, q(1))].into_iter().collect();
                let mut y = ops[a].apply(&ops[b].apply(&x));
                for (k, v) in ops[b].apply(&ops[a].apply(&x)) {
                    *y.entry(k).or_insert_with(|| q(0)) += v;
                }
                y.retain(|_, v| !Zero::is_zero(v));
                if let Some((_, v)) = y.into_iter().next() {
                    let mut idx = vec![a, b];
                    idx.extend(indices_of(m));
                    return Err(Violation::new("BRST anticommutator", idx, v));
                }
            }
        }
    }
    Ok(())
}

/// Complete BRST operator from Lie algebra cocycles; each is raised with the
/// Killing form and every pairwise anticommutator is checked.
pub fn brst_nilpotency(l: &LieAlgebra, cocycles: &[AntisymTensor<Q>]) -> Result<Check, GlaError> {
    let mut ops = Vec::new();
    for om in cocycles {
        ops.push(GhostOperator::from_bracket(gla_from_cocycle(l, om)?.bracket()));
    }
    Ok(check_anticommutators(&ops))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieAlgebra;

    fn mats() -> Vec<Matrix<Q>> {
        (0..5)
            .map(|k| Matrix::from_fn(3, 3, |i, j| q(((i * 7 + j * 3 + k * 5) % 11) as i64 - 5)))
            .collect()
    }

    #[test]
    fn two_bracket_is_commutator() {
        let m = mats();
        assert_eq!(multibracket(&m[..2]).unwrap(), m[0].commutator(&m[1]));
    }

    #[test]
    fn three_bracket_expansion() {
        let m = mats();
        let (x1, x2, x3) = (&m[0], &m[1], &m[2]);
        let lhs = multibracket(&m[..3]).unwrap();
        let first = x1.mul(&x2.commutator(x3)).sub(&x2.mul(&x1.commutator(x3))).add(&x3.mul(&x1.commutator(x2)));
        let second = x2.commutator(x3).mul(x1).sub(&x1.commutator(x3).mul(x2)).add(&x1.commutator(x2).mul(x3));
        assert_eq!(lhs, first);
        assert_eq!(lhs, second);
    }

    #[test]
    fn four_bracket_resolution_has_six_terms() {
        let terms = even_bracket_resolution(4).unwrap();
        let expected = vec![
            (1, vec![(0, 1), (2, 3)]),
            (-1, vec![(0, 2), (1, 3)]),
            (1, vec![(0, 3), (1, 2)]),
            (1, vec![(1, 2), (0, 3)]),
            (-1, vec![(1, 3), (0, 2)]),
            (1, vec![(2, 3), (0, 1)]),
        ];
        let got: Vec<(i32, Vec<(usize, usize)>)> = terms.into_iter().map(|t| (t.sign, t.pairs)).collect();
        assert_eq!(got, expected);
        resolve_even_bracket(&mats()[..4]).unwrap();
    }

    #[test]
    fn odd_double_bracket_identity() {
        let m = mats();
        let lhs = alternated_double_bracket(&m, 3).unwrap();
        let rhs = multibracket(&m).unwrap().scale(&double_bracket_factor(3));
        assert_eq!(double_bracket_factor(3), q(36));
        assert_eq!(lhs, rhs);
        assert!(alternated_double_bracket(&m[..3], 2).unwrap().is_zero());
    }

    #[test]
    fn coderivation_matches_explicit_expansion() {
        let l = LieAlgebra::su2();
        let mv = Multivector::monomial(3, &[0, 1, 2]);
        let d = coderivation_apply(l.bracket(), &mv);
        // [X1,X2]∧X3 − [X1,X3]∧X2 + [X2,X3]∧X1 with [X_i,X_j] = ε X_k
        let mut expected = Multivector::zero(2, 3);
        expected.add_term(&[2, 2], &q(1));
        expected.add_term(&[1, 1], &q(1));
        expected.add_term(&[0, 0], &q(1));
        assert_eq!(d, expected);
        assert!(coderivation_apply(l.bracket(), &d).is_zero());
        let heis = LieAlgebra::heisenberg();
        let d = coderivation_apply(heis.bracket(), &Multivector::monomial(3, &[0, 1, 2]));
        assert!(coderivation_apply(heis.bracket(), &d).is_zero());
    }

    #[test]
    fn second_derivative_is_minus_ce_coboundary() {
        use crate::lie::Representation;
        use crate::lie_cohomology::{coboundary, Cochain};
        let l = LieAlgebra::su2();
        let alpha = AntisymTensor::from_sorted_fn(2, 3, |t| q(t[0] as i64 + 2 * t[1] as i64 - 1));
        let triv = Representation::trivial(&l, 1);
        let s = coboundary(&l, &triv, &Cochain::scalar(alpha.clone())).unwrap();
        assert_eq!(higher_exterior_derivative(l.bracket(), &alpha), s.component(0).scale(&q(-1)));
    }

    #[test]
    fn su2_brst_is_nilpotent() {
        let l = LieAlgebra::su2();
        let omega = AntisymTensor::from_sorted_fn(3, 3, |_| q(1));
        assert_eq!(brst_nilpotency(&l, &[omega]).unwrap(), Ok(()));
        let bad = LieAlgebra::from_entries(3, &[(0, 1, 0, q(1)), (0, 2, 2, q(1))]);
        assert!(check_anticommutators(&[GhostOperator::from_bracket(bad.bracket())]).is_err());
    }
}
