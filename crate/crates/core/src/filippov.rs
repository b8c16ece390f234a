//! Filippov (n-Lie) algebras.
//!
//! A [`FilippovAlgebra`] is a fully antisymmetric `n`-bracket `f_{a₁…a_n}{}^b`
//! satisfying the Filippov identity, optionally equipped with an invariant
//! metric. The identity can be checked in three equivalent coordinate forms:
//!
//! * `Derivation`: `f_{b₁…b_n}{}^l f_{a₁…a_{n−1}l}{}^s = Σ_k f_{a₁…a_{n−1}b_k}{}^l f_{b₁…l…b_n}{}^s`
//!   (the left action of `n−1` elements is a derivation);
//! * `Short`: `f_{[a₁…a_n}{}^l f_{b₁]b₂…b_{n−1}l}{}^s = 0`;
//! * `Ghost`: `f_{c₁…c_n}{}^l f_{b₁…b_{n−1}l}{}^s =
//!   (−1)^{n−1}/(n−1)! Σ_σ sign σ f_{b₁…b_{n−1}c_{σ1}}{}^l f_{c_{σ2}…c_{σn}l}{}^s`.
//!
//! Fundamental objects are `(n−1)`-tuples of elements acting through
//! `ad_𝒳 = [X₁,…,X_{n−1}, ·]`; basis fundamental objects are labelled by
//! sorted index tuples ("wedge labels"). Their ad matrices span the Lie algebra
//! of inner derivations.

use crate::combinatorics::{all_tuples, combinations, permutations_with_sign, sort_with_sign};
use crate::linalg::Matrix;
use crate::lie::LieAlgebra;
use crate::poly::Poly;
use crate::scalar::{factorial, q, Gauss, Scalar, Q};
use crate::structure::{alternated_double, Bracket, Check, Violation};
use crate::tensor::{AntisymTensor, TensorError};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilippovError {
    #[error("arity {0} is below 2")]
    Arity(usize),
    #[error("metric must be a symmetric non-degenerate {0}×{0} matrix")]
    BadMetric(usize),
    #[error("expected {expected} vectors of dimension {dim}")]
    Dimension { expected: usize, dim: usize },
    #[error("input is not the algebra {0}")]
    WrongAlgebra(String),
    #[error("bracket violates the Filippov identity: {0}")]
    NotFilippov(Violation),
    #[error("{0}")]
    Tensor(#[from] TensorError),
    #[error("clifford realization is available for 3 ≤ n ≤ 5, got {0}")]
    CliffordRange(usize),
}

/// Coordinate form of the Filippov identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiForm {
    Derivation,
    Short,
    Ghost,
}

impl FiForm {
    pub const ALL: [FiForm; 3] = [FiForm::Derivation, FiForm::Short, FiForm::Ghost];

    pub fn name(self) -> &'static str {
        match self {
            FiForm::Derivation => "filippov identity (derivation form)",
            FiForm::Short => "filippov identity (short form)",
            FiForm::Ghost => "filippov identity (ghost form)",
        }
    }
}

/// Formal linear combination of wedge labels (sorted index tuples).
pub type LabelSum = BTreeMap<Vec<usize>, Q>;

fn add_label(sum: &mut LabelSum, t: &[usize], c: &Q) {
    let Some((sorted, sign)) = sort_with_sign(t) else { return };
    let e = sum.entry(sorted.clone()).or_insert_with(<Q as Zero>::zero);
    if sign == 1 {
        *e += c;
    } else {
        *e -= c;
    }
    if Zero::is_zero(e) {
        sum.remove(&sorted);
    }
}

/// An `n`-Lie algebra given by structure constants, with an optional metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilippovAlgebra {
    bracket: Bracket,
    metric: Option<Matrix<Q>>,
}

impl FilippovAlgebra {
    /// Wraps a bracket without validating the identity; see [`FilippovAlgebra::validated`].
    pub fn new(bracket: Bracket) -> Result<Self, FilippovError> {
        if bracket.arity() < 2 {
            return Err(FilippovError::Arity(bracket.arity()));
        }
        Ok(FilippovAlgebra { bracket, metric: None })
    }

    /// Wraps a bracket and requires the identity to hold.
    pub fn validated(bracket: Bracket) -> Result<Self, FilippovError> {
        let fa = Self::new(bracket)?;
        fa.check_fi(FiForm::Derivation).map_err(FilippovError::NotFilippov)?;
        Ok(fa)
    }

    pub fn abelian(arity: usize, dim: usize) -> Self {
        FilippovAlgebra { bracket: Bracket::zero(arity, dim), metric: None }
    }

    /// Attaches a metric after checking it is symmetric and non-degenerate.
    pub fn with_metric(mut self, g: Matrix<Q>) -> Result<Self, FilippovError> {
        let d = self.dim();
        if g.rows() != d || g.cols() != d || g.transpose() != g || g.rank() < d {
            return Err(FilippovError::BadMetric(d));
        }
        self.metric = Some(g);
        Ok(self)
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
    pub fn metric(&self) -> Option<&Matrix<Q>> {
        self.metric.as_ref()
    }
    pub fn f(&self, lower: &[usize], k: usize) -> Q {
        self.bracket.coeff(lower, k)
    }

    /// Block direct sum; the metric is dropped.
    pub fn direct_sum(&self, o: &Self) -> Self {
        FilippovAlgebra { bracket: self.bracket.direct_sum(&o.bracket), metric: None }
    }

    /// Residual of the selected form at one index assignment.
    ///
    /// `Derivation` and `Ghost` take `(a: n−1, b: n, s)`; `Short` takes
    /// `(K: n+1, fixed: n−2, s)` with the alternated block first.
    pub fn fi_residual(&self, form: FiForm, first: &[usize], second: &[usize], s: usize) -> Q {
        let n = self.arity();
        let f = &self.bracket;
        let mut acc = <Q as Zero>::zero();
        match form {
            FiForm::Derivation => {
                let (a, b) = (first, second);
                let mut al: Vec<usize> = a.to_vec();
                al.push(0);
                if let Some((sign, col)) = f.column(b) {
                    for (l, v) in col {
                        al[n - 1] = *l;
                        let w = f.coeff(&al, s);
                        if !Zero::is_zero(&w) {
                            let t = v * w;
                            if sign == 1 {
                                acc += t;
                            } else {
                                acc -= t;
                            }
                        }
                    }
                }
                let mut ab: Vec<usize> = a.to_vec();
                ab.push(0);
                for k in 0..n {
                    ab[n - 1] = b[k];
                    let Some((sign, col)) = f.column(&ab) else { continue };
                    let mut bl = b.to_vec();
                    for (l, v) in col {
                        bl[k] = *l;
                        let w = f.coeff(&bl, s);
                        if !Zero::is_zero(&w) {
                            let t = v * w;
                            if sign == 1 {
                                acc -= t;
                            } else {
                                acc += t;
                            }
                        }
                    }
                }
            }
            FiForm::Short => {
                acc = alternated_double(f, f, first, second, s);
            }
            FiForm::Ghost => {
                let (b, c) = (first, second);
                let mut bl: Vec<usize> = b.to_vec();
                bl.push(0);
                if let Some((sign, col)) = f.column(c) {
                    for (l, v) in col {
                        bl[n - 1] = *l;
                        let t = v * f.coeff(&bl, s);
                        if sign == 1 {
                            acc += t;
                        } else {
                            acc -= t;
                        }
                    }
                }
                let mut rhs = <Q as Zero>::zero();
                let mut bc: Vec<usize> = b.to_vec();
                bc.push(0);
                for (p, sign) in permutations_with_sign(n) {
                    bc[n - 1] = c[p[0]];
                    let Some((sg, col)) = f.column(&bc) else { continue };
                    let mut cl: Vec<usize> = p[1..].iter().map(|&i| c[i]).collect();
                    cl.push(0);
                    for (l, v) in col {
                        cl[n - 1] = *l;
                        let t = v * f.coeff(&cl, s);
                        if sign * sg == 1 {
                            rhs += t;
                        } else {
                            rhs -= t;
                        }
                    }
                }
                let w = if (n - 1) % 2 == 0 { q(1) } else { q(-1) } / factorial(n - 1);
                acc -= rhs * w;
            }
        }
        acc
    }

    /// Exact scan of the selected form; returns the first nonzero residual.
    pub fn check_fi(&self, form: FiForm) -> Check {
        let n = self.arity();
        let d = self.dim();
        let (firsts, seconds) = match form {
            FiForm::Derivation | FiForm::Ghost => (combinations(d, n - 1), combinations(d, n)),
            FiForm::Short => (combinations(d, n + 1), combinations(d, n - 2)),
        };
        for x in &firsts {
            for y in &seconds {
                for s in 0..d {
                    let r = self.fi_residual(form, x, y, s);
                    if !Zero::is_zero(&r) {
                        let mut idx = x.clone();
                        idx.extend_from_slice(y);
                        idx.push(s);
                        return Err(Violation::new(form.name(), idx, r));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ad` matrix of a basis fundamental object: `(ad_a)^l{}_b = f_{a₁…a_{n−1}b}{}^l`.
    pub fn ad_label(&self, a: &[usize]) -> Matrix<Q> {
        let d = self.dim();
        let mut t = a.to_vec();
        t.push(0);
        let last = t.len() - 1;
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            t[last] = b;
            if let Some((sign, col)) = self.bracket.column(&t) {
                for (l, v) in col {
                    m.set(*l, b, if sign == 1 { v.clone() } else { -v });
                }
            }
        }
        m
    }

    /// `ad` matrix of a formal sum of labels.
    pub fn ad_sum(&self, x: &LabelSum) -> Matrix<Q> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (t, c) in x {
            m = m.add(&self.ad_label(t).scale(c));
        }
        m
    }

    /// All basis fundamental objects in lexicographic order.
    pub fn labels(&self) -> Vec<Vec<usize>> {
        combinations(self.dim(), self.arity() - 1)
    }

    /// `𝒳·𝒴 = Σ_i (Y₁,…,[X,Y_i],…,Y_{n−1})` for basis objects, expanded into sorted labels.
    pub fn dot_labels(&self, x: &[usize], y: &[usize]) -> LabelSum {
        let mut out = LabelSum::new();
        let mut xy = x.to_vec();
        xy.push(0);
        let last = xy.len() - 1;
        for i in 0..y.len() {
            xy[last] = y[i];
            let Some((sign, col)) = self.bracket.column(&xy) else { continue };
            let mut t = y.to_vec();
            for (l, v) in col {
                t[i] = *l;
                let c = if sign == 1 { v.clone() } else { -v };
                add_label(&mut out, &t, &c);
            }
        }
        out
    }

    /// `[ad_𝒳, ad_𝒴] = ad_{𝒳·𝒴}` for all pairs of basis fundamental objects.
    pub fn check_ad_homomorphism(&self) -> Check {
        let labels = self.labels();
        let ads: Vec<Matrix<Q>> = labels.iter().map(|a| self.ad_label(a)).collect();
        for (i, x) in labels.iter().enumerate() {
            for (j, y) in labels.iter().enumerate() {
                let lhs = ads[i].commutator(&ads[j]);
                let rhs = self.ad_sum(&self.dot_labels(x, y));
                if let Some(v) = first_difference(&lhs, &rhs) {
                    let mut idx = x.clone();
                    idx.extend_from_slice(y);
                    return Err(Violation::new("ad homomorphism", idx, v));
                }
            }
        }
        Ok(())
    }

    /// Checks the first-half constants `(𝒳·𝒴)_𝒵` are antisymmetric under `𝒳 ↔ 𝒴`.
    pub fn check_first_half_antisymmetry(&self) -> Check {
        let labels = self.labels();
        for (i, x) in labels.iter().enumerate() {
            for y in &labels[i..] {
                let xy = self.dot_labels(x, y);
                let yx = self.dot_labels(y, x);
                for z in xy.keys().chain(yx.keys()) {
                    let s = xy.get(z).cloned().unwrap_or_default() + yx.get(z).cloned().unwrap_or_default();
                    if !Zero::is_zero(&s) {
                        let mut idx = x.clone();
                        idx.extend_from_slice(y);
                        idx.extend_from_slice(z);
                        return Err(Violation::new("first-half constants antisymmetry", idx, s));
                    }
                }
            }
        }
        Ok(())
    }

    /// `ad` of `(X₁,…,X_k, e_b)` extended linearly in arbitrary vectors `xs` (`k = n−1`).
    pub fn ad_vectors(&self, xs: &[Vec<Q>]) -> Matrix<Q> {
        let d = self.dim();
        let mut args: Vec<Vec<Q>> = xs.to_vec();
        args.push(vec![<Q as Zero>::zero(); d]);
        let last = args.len() - 1;
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            args[last] = unit(d, b);
            let img = self.bracket.apply(&args);
            for (l, v) in img.into_iter().enumerate() {
                m.set(l, b, v);
            }
        }
        m
    }

    /// The second representation equation for `ρ = ad`:
    /// `ad_{X,[Y₁…Y_n]} = Σ_i (−1)^{n−i} ad_{Y₁…Ŷ_i…Y_n} ad_{X,Y_i}` on basis elements.
    pub fn check_ad_representation(&self) -> Check {
        let n = self.arity();
        let d = self.dim();
        for x in combinations(d, n - 2) {
            for y in combinations(d, n) {
                let mut xs: Vec<Vec<Q>> = x.iter().map(|&i| unit(d, i)).collect();
                xs.push(self.bracket.image(&y));
                let lhs = self.ad_vectors(&xs);
                let mut rhs = Matrix::zeros(d, d);
                for i in 0..n {
                    let hat: Vec<usize> = y.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| *v).collect();
                    let mut xy = x.clone();
                    xy.push(y[i]);
                    let term = self.ad_label(&hat).mul(&self.ad_label(&xy));
                    // (−1)^{n−i} with 1-based i
                    rhs = if (n - i - 1) % 2 == 0 { rhs.add(&term) } else { rhs.sub(&term) };
                }
                if let Some(v) = first_difference(&lhs, &rhs) {
                    let mut idx = x.clone();
                    idx.extend_from_slice(&y);
                    return Err(Violation::new("ad representation", idx, v));
                }
            }
        }
        Ok(())
    }

    /// Kasymov form `k(𝒳,𝒴) = Tr(ad_𝒳 ad_𝒴)` on basis labels.
    pub fn kasymov_form(&self) -> Matrix<Q> {
        let ads: Vec<Matrix<Q>> = self.labels().iter().map(|a| self.ad_label(a)).collect();
        let m = ads.len();
        let mut k = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = ads[i].mul(&ads[j]).trace();
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    /// Kasymov criterion: elements `Z` with `k(Z,X₂…X_{n−1}; 𝒴) = 0` for all fillers.
    pub fn semisimplicity_check(&self) -> SemisimplicityReport {
        let n = self.arity();
        let d = self.dim();
        let labels = self.labels();
        let k = self.kasymov_form();
        let index: BTreeMap<&Vec<usize>, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut rows = Vec::new();
        for x in combinations(d, n - 2) {
            for yi in 0..labels.len() {
                let row: Vec<Q> = (0..d)
                    .map(|z| {
                        let mut t = vec![z];
                        t.extend_from_slice(&x);
                        match sort_with_sign(&t) {
                            None => <Q as Zero>::zero(),
                            Some((s, sign)) => {
                                let v = k.get(index[&s], yi).clone();
                                if sign == 1 {
                                    v
                                } else {
                                    -v
                                }
                            }
                        }
                    })
                    .collect();
                if row.iter().any(|v| !Zero::is_zero(v)) {
                    rows.push(row);
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..d).map(|i| unit(d, i)).collect()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        let naive_nondegenerate = k.rows() > 0 && k.rank() == k.rows();
        SemisimplicityReport { semisimple: kernel.is_empty(), kernel, naive_nondegenerate }
    }

    /// Invariance of `g` and the fully lowered constants.
    pub fn check_metric(&self, g: &Matrix<Q>) -> Result<MetricFaReport, FilippovError> {
        let n = self.arity();
        let d = self.dim();
        if g.rows() != d || g.cols() != d || g.transpose() != *g || g.rank() < d {
            return Err(FilippovError::BadMetric(d));
        }
        let mut invariance: Check = Ok(());
        'outer: for a in combinations(d, n - 1) {
            for b in 0..d {
                for c in b..d {
                    let mut ab = a.clone();
                    ab.push(b);
                    let mut ac = a.clone();
                    ac.push(c);
                    let mut r = <Q as Zero>::zero();
                    for l in 0..d {
                        r += self.f(&ab, l) * g.get(l, c) + self.f(&ac, l) * g.get(b, l);
                    }
                    if !Zero::is_zero(&r) {
                        let mut idx = a.clone();
                        idx.push(b);
                        idx.push(c);
                        invariance = Err(Violation::new("metric invariance", idx, r));
                        break 'outer;
                    }
                }
            }
        }
        let lowered = match invariance {
            Ok(()) => Some(self.bracket.lower_with(g).to_antisym()?),
            Err(_) => None,
        };
        let form_invariance = match &lowered {
            None => invariance.clone(),
            Some(low) => check_form_invariance(self, low),
        };
        Ok(MetricFaReport { invariance, lowered, form_invariance })
    }

    /// Derivations `D` with `D[e_b] = Σ_k [e_{b₁}…De_{b_k}…e_{b_n}]`, as a basis of matrices.
    pub fn derivations(&self) -> Vec<Matrix<Q>> {
        let n = self.arity();
        let d = self.dim();
        let var = |l: usize, m: usize| l * d + m;
        let mut rows = Vec::new();
        for b in combinations(d, n) {
            for s in 0..d {
                let mut row = vec![<Q as Zero>::zero(); d * d];
                for l in 0..d {
                    row[var(s, l)] += self.f(&b, l);
                }
                for k in 0..n {
                    let mut t = b.clone();
                    for l in 0..d {
                        t[k] = l;
                        row[var(l, b[k])] -= self.f(&t, s);
                    }
                }
                if row.iter().any(|v| !Zero::is_zero(v)) {
                    rows.push(row);
                }
            }
        }
        let sols = if rows.is_empty() {
            (0..d * d).map(|i| unit(d * d, i)).collect()
        } else {
            Matrix::from_rows(rows).nullspace()
        };
        sols.into_iter().map(|v| Matrix::from_fn(d, d, |l, m| v[var(l, m)].clone())).collect()
    }

    /// `[X₁…X_{n−1}]' = [A,X₁…X_{n−1}]`.
    pub fn subordinate(&self, a: &[Q]) -> Result<FilippovAlgebra, FilippovError> {
        let n = self.arity();
        let d = self.dim();
        if n < 3 {
            return Err(FilippovError::Arity(n - 1));
        }
        if a.len() != d {
            return Err(FilippovError::Dimension { expected: 1, dim: d });
        }
        let mut out = Bracket::zero(n - 1, d);
        for x in combinations(d, n - 1) {
            let mut t = vec![0];
            t.extend_from_slice(&x);
            for k in 0..d {
                let mut acc = <Q as Zero>::zero();
                for (i, ai) in a.iter().enumerate() {
                    if Zero::is_zero(ai) {
                        continue;
                    }
                    t[0] = i;
                    acc.add_mul(ai, &self.f(&t, k));
                }
                if !Zero::is_zero(&acc) {
                    out.set(&x, k, acc)?;
                }
            }
        }
        FilippovAlgebra::new(out)
    }

    /// The Lie algebra spanned by the ad matrices of all basis fundamental objects.
    pub fn inder_lie_algebra(&self) -> InDerAlgebra {
        let d = self.dim();
        let labels = self.labels();
        let ads: Vec<Matrix<Q>> = labels.iter().map(|a| self.ad_label(a)).collect();
        let cols: Vec<Vec<Q>> = ads.iter().map(|m| m.vectorize()).collect();
        let all = Matrix::from_columns(&cols, d * d);
        let (_, pivots) = all.rref();
        let basis_labels: Vec<Vec<usize>> = pivots.iter().map(|&p| labels[p].clone()).collect();
        let basis: Vec<Matrix<Q>> = pivots.iter().map(|&p| ads[p].clone()).collect();
        let m = basis.len();
        let bmat = Matrix::from_columns(&basis.iter().map(|b| b.vectorize()).collect::<Vec<_>>(), d * d);
        let coords: Vec<Vec<Q>> = cols.iter().map(|c| bmat.solve(c).expect("column lies in its own span")).collect();
        let mut bracket = Bracket::zero(2, m);
        let mut closure: Check = Ok(());
        for i in 0..m {
            for j in (i + 1)..m {
                let c = basis[i].commutator(&basis[j]).vectorize();
                match bmat.solve(&c) {
                    Some(x) => {
                        for (k, v) in x.into_iter().enumerate() {
                            if !Zero::is_zero(&v) {
                                bracket.set(&[i, j], k, v).expect("in range");
                            }
                        }
                    }
                    None => {
                        if closure.is_ok() {
                            closure = Err(Violation::new("inner derivation closure", vec![i, j], q(1)));
                        }
                    }
                }
            }
        }
        let lie = LieAlgebra::new(bracket).expect("binary bracket");
        InDerAlgebra { labels, ads, basis_labels, basis, coords, lie, closure }
    }
}

/// Kasymov semisimplicity result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicityReport {
    pub semisimple: bool,
    /// Basis of the first-slot kernel.
    pub kernel: Vec<Vec<Q>>,
    /// Whether the Kasymov matrix on labels is non-degenerate.
    pub naive_nondegenerate: bool,
}

/// Metric check result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricFaReport {
    pub invariance: Check,
    /// `f_{a₁…a_n c} = f_{a₁…a_n}{}^l g_{lc}`, present when invariance holds.
    pub lowered: Option<AntisymTensor<Q>>,
    /// `Σ_i f_{a₁…a_{n−1}b_i}{}^l f_{b₁…l…b_{n+1}} = 0`.
    pub form_invariance: Check,
}

impl MetricFaReport {
    pub fn is_metric(&self) -> bool {
        self.invariance.is_ok() && self.form_invariance.is_ok()
    }
}

fn check_form_invariance(fa: &FilippovAlgebra, low: &AntisymTensor<Q>) -> Check {
    let n = fa.arity();
    let d = fa.dim();
    for a in combinations(d, n - 1) {
        for b in combinations(d, n + 1) {
            let mut r = <Q as Zero>::zero();
            let mut ab = a.clone();
            ab.push(0);
            for i in 0..=n {
                ab[n - 1] = b[i];
                let Some((sign, col)) = fa.bracket.column(&ab) else { continue };
                let mut t = b.clone();
                for (l, v) in col {
                    t[i] = *l;
                    let w = low.get(&t);
                    if sign == 1 {
                        r += v * w;
                    } else {
                        r -= v * w;
                    }
                }
            }
            if !Zero::is_zero(&r) {
                let mut idx = a.clone();
                idx.extend_from_slice(&b);
                return Err(Violation::new("invariant form", idx, r));
            }
        }
    }
    Ok(())
}

/// Inner derivations of a Filippov algebra as a Lie algebra.
#[derive(Clone, Debug)]
pub struct InDerAlgebra {
    /// All wedge labels in lexicographic order.
    pub labels: Vec<Vec<usize>>,
    /// Their ad matrices.
    pub ads: Vec<Matrix<Q>>,
    /// Labels whose ad matrices form the chosen basis.
    pub basis_labels: Vec<Vec<usize>>,
    pub basis: Vec<Matrix<Q>>,
    /// Coordinates of each label's ad matrix in the basis.
    pub coords: Vec<Vec<Q>>,
    /// Structure constants of the basis under the commutator.
    pub lie: LieAlgebra,
    pub closure: Check,
}

impl InDerAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Closure, reproduction of every basis commutator and the Jacobi identity.
    pub fn validate(&self) -> Check {
        self.closure.clone()?;
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                let lhs = self.basis[i].commutator(&self.basis[j]);
                let mut rhs = Matrix::zeros(lhs.rows(), lhs.cols());
                for k in 0..m {
                    rhs = rhs.add(&self.basis[k].scale(self.lie.c(i, j, k)));
                }
                if let Some(v) = first_difference(&lhs, &rhs) {
                    return Err(Violation::new("inner derivation constants", vec![i, j], v));
                }
            }
        }
        self.lie.check_jacobi()
    }
}

/// First differing entry of two equal-shape matrices.
fn first_difference<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Option<Q> {
    for (x, y) in a.entries().iter().zip(b.entries()) {
        let d = x.sub(y);
        if !d.is_zero() {
            return Some(d.to_q().unwrap_or_else(|| q(1)));
        }
    }
    None
}

fn unit(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![<Q as Zero>::zero(); d];
    v[i] = <Q as One>::one();
    v
}

/// Simple algebra `[e_{a₁}…e_{a_n}] = (−1)^n ε_{a_{n+1}} ε_{a₁…a_{n+1}} e_{a_{n+1}}` on `n+1` generators,
/// with invariant metric `diag(ε)`.
pub fn simple_fa(n: usize, signs: &[i32]) -> Result<FilippovAlgebra, FilippovError> {
    if n < 2 {
        return Err(FilippovError::Arity(n));
    }
    if signs.len() != n + 1 || signs.iter().any(|s| s.abs() != 1) {
        return Err(FilippovError::Dimension { expected: n + 1, dim: 1 });
    }
    let d = n + 1;
    let mut b = Bracket::zero(n, d);
    for missing in 0..d {
        let lower: Vec<usize> = (0..d).filter(|&i| i != missing).collect();
        let mut full = lower.clone();
        full.push(missing);
        let eps = crate::combinatorics::perm_sign(&full);
        let v = eps * signs[missing] * if n % 2 == 0 { 1 } else { -1 };
        b.set(&lower, missing, q(v as i64))?;
    }
    let mut fa = FilippovAlgebra::new(b)?;
    fa.metric = Some(Matrix::from_fn(d, d, |i, j| if i == j { q(signs[i] as i64) } else { q(0) }));
    Ok(fa)
}

/// Vector product of `n` vectors in `n+1` dimensions: `V_b = (−1)^{n+b} det(minor without column b)`
/// (0-based `b`), i.e. the determinant with the basis vectors in the first row after moving it last.
pub fn vector_product(vectors: &[Vec<Q>]) -> Result<Vec<Q>, FilippovError> {
    let n = vectors.len();
    let d = n + 1;
    if n == 0 || vectors.iter().any(|v| v.len() != d) {
        return Err(FilippovError::Dimension { expected: n, dim: d });
    }
    // ε_{a₁…a_n b} v₁^{a₁}⋯v_n^{a_n} times (−1)^n, so that basis vectors reproduce the simple bracket
    let out = (0..d)
        .map(|b| {
            let cols: Vec<usize> = (0..d).filter(|&c| c != b).collect();
            let m = Matrix::from_fn(n, n, |i, j| vectors[i][cols[j]].clone());
            // moving column b from position b to the end costs (−1)^{n−b}; with (−1)^n: (−1)^b
            let det = m.determinant();
            if b % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    Ok(out)
}

/// A fundamental object: `n−1` elements acting jointly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalObject {
    pub vectors: Vec<Vec<Q>>,
}

impl FundamentalObject {
    pub fn new(vectors: Vec<Vec<Q>>) -> Self {
        FundamentalObject { vectors }
    }
    pub fn from_label(d: usize, t: &[usize]) -> Self {
        FundamentalObject { vectors: t.iter().map(|&i| unit(d, i)).collect() }
    }
    pub fn ad(&self, fa: &FilippovAlgebra) -> Matrix<Q> {
        fa.ad_vectors(&self.vectors)
    }
}

/// `𝒳·𝒴` as a formal sum of objects together with its ad matrix.
#[derive(Clone, Debug)]
pub struct Composition {
    pub terms: Vec<FundamentalObject>,
    pub ad: Matrix<Q>,
}

impl Composition {
    /// The formal sum expanded in sorted basis labels (multilinear and antisymmetric reduction).
    pub fn expand(&self) -> LabelSum {
        let mut out = LabelSum::new();
        for term in &self.terms {
            let k = term.vectors.len();
            let d = term.vectors.first().map_or(0, |v| v.len());
            for t in all_tuples(d, k) {
                let mut c = <Q as One>::one();
                for (i, &a) in t.iter().enumerate() {
                    c *= &term.vectors[i][a];
                    if Zero::is_zero(&c) {
                        break;
                    }
                }
                if !Zero::is_zero(&c) {
                    add_label(&mut out, &t, &c);
                }
            }
        }
        out
    }
}

pub fn fundamental_compose(
    fa: &FilippovAlgebra,
    x: &FundamentalObject,
    y: &FundamentalObject,
) -> Result<Composition, FilippovError> {
    let k = fa.arity() - 1;
    let d = fa.dim();
    let ok = |o: &FundamentalObject| o.vectors.len() == k && o.vectors.iter().all(|v| v.len() == d);
    if !ok(x) || !ok(y) {
        return Err(FilippovError::Dimension { expected: k, dim: d });
    }
    let mut terms = Vec::with_capacity(k);
    let mut ad = Matrix::zeros(d, d);
    for i in 0..k {
        let mut args = x.vectors.clone();
        args.push(y.vectors[i].clone());
        let img = fa.bracket.apply(&args);
        let mut vs = y.vectors.clone();
        vs[i] = img;
        let t = FundamentalObject::new(vs);
        ad = ad.add(&t.ad(fa));
        terms.push(t);
    }
    Ok(Composition { terms, ad })
}

/// Dual generators `M̃^{ab} = (1/(n−1)!) ε^{ab c₁…c_{n−1}} ad_{c₁…c_{n−1}}` of a simple algebra,
/// keyed by ordered pairs `a<b`.
pub fn simple_dual_generators(fa: &FilippovAlgebra) -> BTreeMap<(usize, usize), Matrix<Q>> {
    let d = fa.dim();
    let mut out = BTreeMap::new();
    for a in 0..d {
        for b in (a + 1)..d {
            let mut m = Matrix::zeros(d, d);
            for c in combinations(d, d - 2) {
                let mut t = vec![a, b];
                t.extend_from_slice(&c);
                let e = crate::combinatorics::perm_sign(&t);
                if e != 0 {
                    let ad = fa.ad_label(&c);
                    m = if e == 1 { m.add(&ad) } else { m.sub(&ad) };
                }
            }
            out.insert((a, b), m);
        }
    }
    out
}

/// `[M^{a₁a₂},M^{b₁b₂}] = −δ^{a₁b₂}M^{a₂b₁} − δ^{a₂b₁}M^{a₁b₂} + δ^{a₁b₁}M^{a₂b₂} + δ^{a₂b₂}M^{a₁b₁}`
/// for generators keyed by `a<b` and extended antisymmetrically.
pub fn check_orthogonal_relations(gens: &BTreeMap<(usize, usize), Matrix<Q>>, d: usize) -> Check {
    let size = gens.values().next().map_or(0, |m| m.rows());
    let get = |a: usize, b: usize| -> Matrix<Q> {
        if a == b {
            Matrix::zeros(size, size)
        } else if a < b {
            gens[&(a, b)].clone()
        } else {
            gens[&(b, a)].neg()
        }
    };
    let delta = |a: usize, b: usize| a == b;
    for t in all_tuples(d, 4) {
        let (a1, a2, b1, b2) = (t[0], t[1], t[2], t[3]);
        if a1 == a2 || b1 == b2 {
            continue;
        }
        let lhs = get(a1, a2).commutator(&get(b1, b2));
        let mut rhs = Matrix::zeros(size, size);
        if delta(a1, b2) {
            rhs = rhs.sub(&get(a2, b1));
        }
        if delta(a2, b1) {
            rhs = rhs.sub(&get(a1, b2));
        }
        if delta(a1, b1) {
            rhs = rhs.add(&get(a2, b2));
        }
        if delta(a2, b2) {
            rhs = rhs.add(&get(a1, b1));
        }
        if let Some(v) = first_difference(&lhs, &rhs) {
            return Err(Violation::new("orthogonal relations", t, v));
        }
    }
    Ok(())
}

/// Invariance `k(𝒵·𝒳, 𝒴) + k(𝒳, 𝒵·𝒴) = 0` of a bilinear form on labels.
pub fn check_label_form_invariance(fa: &FilippovAlgebra, k: &Matrix<Q>) -> Check {
    let labels = fa.labels();
    let index: BTreeMap<&Vec<usize>, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let pair = |x: &LabelSum, yi: usize| -> Q {
        let mut acc = <Q as Zero>::zero();
        for (t, c) in x {
            acc.add_mul(c, k.get(index[t], yi));
        }
        acc
    };
    for z in &labels {
        let dots: Vec<LabelSum> = labels.iter().map(|x| fa.dot_labels(z, x)).collect();
        for xi in 0..labels.len() {
            for yi in xi..labels.len() {
                let r = pair(&dots[xi], yi) + pair(&dots[yi], xi);
                if !Zero::is_zero(&r) {
                    let mut idx = z.clone();
                    idx.extend_from_slice(&labels[xi]);
                    idx.extend_from_slice(&labels[yi]);
                    return Err(Violation::new("label form invariance", idx, r));
                }
            }
        }
    }
    Ok(())
}

/// Quadratic invariants of `A₄` and the splitting `so(4) = su(2) ⊕ su(2)`.
#[derive(Clone, Debug)]
pub struct So4SplitReport {
    /// Kasymov form on labels `(12,13,14,23,24,34)`.
    pub k1: Matrix<Q>,
    /// `k1 = factor · (−(δδ − δδ))`.
    pub k1_factor: Q,
    /// `k2(a₁a₂, b₁b₂) = ε_{a₁a₂b₁b₂}`.
    pub k2: Matrix<Q>,
    pub k2_signature: (usize, usize),
    pub k1_invariance: Check,
    pub k2_invariance: Check,
    /// Generators `X_{i4} ± X_{jk}` for cyclic `(i,j,k)` as label sums, `+` copy first.
    pub plus_minus_basis: Vec<LabelSum>,
    /// `[Y^±_i, Y^±_j] = c_± ε_{ijk} Y^±_k`; `None` if the pattern fails.
    pub copy_constants: Option<(Q, Q)>,
    /// `[Y^+_i, Y^-_j] = 0` for all `i, j`.
    pub copies_commute: bool,
    /// `k1 = λ₁ (K₊ ⊕ K₋)` in the ± basis.
    pub k1_block_factor: Option<Q>,
    /// `k2 = λ₂ (K₊ ⊕ −K₋)` in the ± basis.
    pub k2_block_factor: Option<Q>,
    /// `½(Q₊ + Q₋) = H⁽¹⁾` and `½(Q₊ − Q₋) = H⁽²⁾` as polynomials in `F^{ab}`.
    pub quadratic_identities: bool,
}

pub fn k2_invariant_and_so4_split(fa: &FilippovAlgebra) -> Result<So4SplitReport, FilippovError> {
    let a4 = simple_fa(3, &[1, 1, 1, 1])?;
    if fa.bracket != a4.bracket {
        return Err(FilippovError::WrongAlgebra("A4".into()));
    }
    let labels = fa.labels();
    let index: BTreeMap<Vec<usize>, usize> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
    let k1 = fa.kasymov_form();
    // −(δ_{a₁b₁}δ_{a₂b₂} − δ_{a₁b₂}δ_{a₂b₁}) on sorted labels is −identity
    let pattern = Matrix::<Q>::identity(labels.len()).neg();
    let k1_factor = {
        let f = k1.get(0, 0) / pattern.get(0, 0);
        if k1 == pattern.scale(&f) {
            f
        } else {
            return Err(FilippovError::WrongAlgebra("A4 Kasymov pattern".into()));
        }
    };
    let k2 = Matrix::from_fn(labels.len(), labels.len(), |i, j| {
        let mut t = labels[i].clone();
        t.extend_from_slice(&labels[j]);
        q(crate::combinatorics::perm_sign(&t) as i64)
    });
    let k2_signature = k2.inertia();
    let k1_invariance = check_label_form_invariance(fa, &k1);
    let k2_invariance = check_label_form_invariance(fa, &k2);

    // Y^±_i = X_{i4} ± X_{jk}, (i,j,k) cyclic in (1,2,3)
    let mut basis = Vec::new();
    for sgn in [1i64, -1] {
        for i in 0..3 {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let mut s = LabelSum::new();
            add_label(&mut s, &[i, 3], &q(1));
            add_label(&mut s, &[j, k], &q(sgn));
            basis.push(s);
        }
    }
    let ads: Vec<Matrix<Q>> = basis.iter().map(|s| fa.ad_sum(s)).collect();
    let copies_commute = (0..3).all(|i| (3..6).all(|j| ads[i].commutator(&ads[j]).is_zero()));
    let copy_constant = |off: usize| -> Option<Q> {
        let c01 = ads[off].commutator(&ads[off + 1]);
        let y2 = &ads[off + 2];
        let (pos, _) = y2.entries().iter().enumerate().find(|(_, v)| !Zero::is_zero(*v))?;
        let c = &c01.entries()[pos] / &y2.entries()[pos];
        for i in 0..3 {
            for j in 0..3 {
                let lhs = ads[off + i].commutator(&ads[off + j]);
                let rhs = if i == j {
                    Matrix::zeros(4, 4)
                } else {
                    let k = 3 - i - j;
                    let e = crate::combinatorics::perm_sign(&[i, j, k]);
                    ads[off + k].scale(&(&c * q(e as i64)))
                };
                if lhs != rhs {
                    return None;
                }
            }
        }
        Some(c)
    };
    let copy_constants = copy_constant(0).zip(copy_constant(3));

    // forms in the ± basis
    let restrict = |k: &Matrix<Q>| -> Matrix<Q> {
        Matrix::from_fn(6, 6, |a, b| {
            let mut acc = <Q as Zero>::zero();
            for (s, c) in &basis[a] {
                for (t, e) in &basis[b] {
                    acc += c * e * k.get(index[s], index[t]);
                }
            }
            acc
        })
    };
    let (k1_block_factor, k2_block_factor) = match &copy_constants {
        None => (None, None),
        Some((cp, cm)) => {
            // Killing form of su(2)-type constants c·ε is −2c²·I₃
            let kp = Matrix::<Q>::identity(3).scale(&(q(-2) * cp * cp));
            let km = Matrix::<Q>::identity(3).scale(&(q(-2) * cm * cm));
            let block = |k: &Matrix<Q>, minus_sign: i64| -> Option<Q> {
                let r = restrict(k);
                let lam = r.get(0, 0) / kp.get(0, 0);
                let expect = Matrix::from_fn(6, 6, |a, b| match (a < 3, b < 3) {
                    (true, true) => kp.get(a, b) * &lam,
                    (false, false) => km.get(a - 3, b - 3) * &lam * q(minus_sign),
                    _ => <Q as Zero>::zero(),
                });
                (r == expect).then_some(lam)
            };
            (block(&k1, 1), block(&k2, -1))
        }
    };

    let quadratic_identities = so4_quadratic_identities();
    Ok(So4SplitReport {
        k1,
        k1_factor,
        k2,
        k2_signature,
        k1_invariance,
        k2_invariance,
        plus_minus_basis: basis,
        copy_constants,
        copies_commute,
        k1_block_factor,
        k2_block_factor,
        quadratic_identities,
    })
}

/// `½(Q₊+Q₋) = Σ(F^{ab})²` and `½(Q₊−Q₋) = 2(F¹²F³⁴ + F¹³F⁴² + F¹⁴F²³)`
/// with `Q_± = Σ_i (F^{i4} ± F^{jk})²`.
fn so4_quadratic_identities() -> bool {
    let labels = combinations(4, 2);
    let var = |a: usize, b: usize| -> Poly {
        let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
        let i = labels.iter().position(|l| l[0] == lo && l[1] == hi).expect("pair");
        Poly::var(6, i).scale(&q(s))
    };
    let mut qp = Poly::zero(6);
    let mut qm = Poly::zero(6);
    for i in 0..3 {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let p = var(i, 3).add(&var(j, k));
        let m = var(i, 3).sub(&var(j, k));
        qp = qp.add(&p.mul(&p));
        qm = qm.add(&m.mul(&m));
    }
    let mut h1 = Poly::zero(6);
    for l in &labels {
        let v = var(l[0], l[1]);
        h1 = h1.add(&v.mul(&v));
    }
    let h2 = var(0, 1)
        .mul(&var(2, 3))
        .add(&var(0, 2).mul(&var(3, 1)))
        .add(&var(0, 3).mul(&var(1, 2)))
        .scale(&q(2));
    let half = crate::scalar::qf(1, 2);
    qp.add(&qm).scale(&half) == h1 && qp.sub(&qm).scale(&half) == h2
}

/// Gamma-matrix realization of a simple algebra.
#[derive(Clone, Debug)]
pub struct CliffordReport {
    pub n: usize,
    /// `γ₁…γ_D` followed by the chirality element.
    pub gammas: Vec<Matrix<Gauss>>,
    /// Factor `s` in `γ_{D+1} = s·γ₁⋯γ_D` (odd `n`); one for even `n`.
    pub chirality_factor: Gauss,
    /// Whether the defining multibracket relation holds.
    pub relation_holds: bool,
    /// The algebra read off from the gamma brackets.
    pub induced: Option<FilippovAlgebra>,
    /// `induced` equals `simple_fa(n, all +1)`.
    pub matches_simple: bool,
    /// `3![[γ_a,γ_b]γ₅, γ_c] = [γ₅,γ_a,γ_b,γ_c]` (only `n = 3`).
    pub double_commutator_holds: Option<bool>,
}

/// Euclidean gamma matrices `{γ_a,γ_b} = 2δ_{ab}` in `2^{d/2}` dimensions, built from
/// Pauli-matrix tensor strings with entries in `{0, ±1, ±i}`.
pub fn euclidean_gammas(d: usize) -> Vec<Matrix<Gauss>> {
    assert!(d % 2 == 0 && d >= 2, "even dimension expected");
    let g = |r: i64, i: i64| Gauss::from_ints(r, i);
    let id = Matrix::<Gauss>::identity(2);
    let s1 = Matrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(1, 0), g(0, 0)]]);
    let s2 = Matrix::from_rows(vec![vec![g(0, 0), g(0, -1)], vec![g(0, 1), g(0, 0)]]);
    let s3 = Matrix::from_rows(vec![vec![g(1, 0), g(0, 0)], vec![g(0, 0), g(-1, 0)]]);
    let m = d / 2;
    let string = |k: usize, mid: &Matrix<Gauss>| -> Matrix<Gauss> {
        let mut out = Matrix::<Gauss>::identity(1);
        for p in 0..m {
            let f = if p < k {
                &s3
            } else if p == k {
                mid
            } else {
                &id
            };
            out = out.kron(f);
        }
        out
    };
    let mut gs = Vec::with_capacity(d);
    for k in 0..m {
        gs.push(string(k, &s1));
        gs.push(string(k, &s2));
    }
    gs
}

fn to_gauss(x: i32) -> Gauss {
    Gauss::from_ints(x as i64, 0)
}

/// Reads `m = Σ c_b γ_b` off by traces; `None` if `m` is outside the span.
fn gamma_coordinates(m: &Matrix<Gauss>, gammas: &[Matrix<Gauss>]) -> Option<Vec<Gauss>> {
    let mut coords = Vec::with_capacity(gammas.len());
    let mut rebuilt = Matrix::<Gauss>::zeros(m.rows(), m.cols());
    for g in gammas {
        let norm = g.mul(g).trace();
        let c = m.mul(g).trace().mul(&norm.inv()?);
        rebuilt = rebuilt.add(&g.scale(&c));
        coords.push(c);
    }
    (rebuilt == *m).then_some(coords)
}

pub fn clifford_realization(n: usize) -> Result<CliffordReport, FilippovError> {
    use crate::gla::{multibracket, multibracket_primed};
    if !(3..=5).contains(&n) {
        return Err(FilippovError::CliffordRange(n));
    }
    let d = if n % 2 == 1 { n + 1 } else { n };
    let mut gammas = euclidean_gammas(d);
    let mut product = Matrix::<Gauss>::identity(gammas[0].rows());
    for g in &gammas {
        product = product.mul(g);
    }
    let size = product.rows();
    // expected relation: ε-sign per parity of n
    let expected_sign: i32 = if n % 2 == 1 { -1 } else { 1 };
    // odd n: the last matrix is the extra bracket entry; even n: it is a member of the basis
    let evaluate = |all: &[Matrix<Gauss>]| -> Option<Vec<(Vec<usize>, usize, Gauss)>> {
        let total = if n % 2 == 1 { all.len() - 1 } else { all.len() };
        let mut out = Vec::new();
        for a in combinations(total, n) {
            let xs: Vec<Matrix<Gauss>> = if n % 2 == 1 {
                let mut v: Vec<Matrix<Gauss>> = a.iter().map(|&i| all[i].clone()).collect();
                v.push(all[total].clone());
                v
            } else {
                a.iter().map(|&i| all[i].clone()).collect()
            };
            let r = multibracket_primed(&xs).ok()?;
            let coords = gamma_coordinates(&r, &all[..total])?;
            for (b, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    out.push((a.clone(), b, c));
                }
            }
        }
        Some(out)
    };
    let relation = |vals: &[(Vec<usize>, usize, Gauss)], total: usize| -> bool {
        let mut expected = 0;
        for a in combinations(total, n) {
            let missing = (0..total).find(|i| !a.contains(i)).expect("one index missing");
            let mut t = a.clone();
            t.push(missing);
            let e = expected_sign * crate::combinatorics::perm_sign(&t);
            match vals.iter().find(|(x, _, _)| *x == a) {
                Some((_, b, c)) if *b == missing && *c == to_gauss(e) => expected += 1,
                _ => return false,
            }
        }
        expected == vals.len()
    };
    let mut chirality_factor = Gauss::from_ints(1, 0);
    let mut relation_holds = false;
    let mut vals = None;
    if n % 2 == 1 {
        for s in [Gauss::from_ints(1, 0), Gauss::from_ints(-1, 0), Gauss::from_ints(0, 1), Gauss::from_ints(0, -1)] {
            let mut all = gammas.clone();
            all.push(product.scale(&s));
            if let Some(v) = evaluate(&all) {
                if relation(&v, d) {
                    chirality_factor = s;
                    relation_holds = true;
                    vals = Some(v);
                    gammas = all;
                    break;
                }
            }
        }
        if !relation_holds {
            gammas.push(product.clone());
        }
    } else {
        gammas.push(product.clone());
        if let Some(v) = evaluate(&gammas) {
            relation_holds = relation(&v, d + 1);
            vals = Some(v);
        }
    }
    let dim = n + 1;
    let induced = vals.as_ref().and_then(|v| {
        let mut b = Bracket::zero(n, dim);
        for (a, k, c) in v {
            b.set(a, *k, c.to_q()?).ok()?;
        }
        FilippovAlgebra::new(b).ok()
    });
    let simple = simple_fa(n, &vec![1; n + 1])?;
    let matches_simple = induced.as_ref().is_some_and(|f| f.bracket == simple.bracket);
    let double_commutator_holds = (n == 3).then(|| {
        let g5 = &gammas[4];
        let six = Gauss::from_ints(6, 0);
        all_tuples(4, 3).into_iter().all(|t| {
            let (a, b, c) = (&gammas[t[0]], &gammas[t[1]], &gammas[t[2]]);
            let lhs = a.commutator(b).mul(g5).commutator(c).scale(&six);
            let rhs = multibracket(&[g5.clone(), a.clone(), b.clone(), c.clone()]).expect("square");
            lhs == rhs
        })
    });
    let _ = size;
    Ok(CliffordReport {
        n,
        gammas,
        chirality_factor,
        relation_holds,
        induced,
        matches_simple,
        double_commutator_holds,
    })
}

/// Trace extension `[A₁…A_n] = Σ_i (−1)^{i−1} ⟨A_i⟩ [A₁…Â_i…A_n]` of an `(n−1)`-bracket,
/// with the linear functional given by its values on the basis.
#[derive(Clone, Debug)]
pub struct TraceExtension {
    pub algebra: FilippovAlgebra,
    pub fi: Check,
}

pub fn trace_extension(base: &Bracket, traces: &[Q]) -> Result<TraceExtension, FilippovError> {
    let d = base.dim();
    if traces.len() != d {
        return Err(FilippovError::Dimension { expected: 1, dim: d });
    }
    let n = base.arity() + 1;
    let mut out = Bracket::zero(n, d);
    for t in combinations(d, n) {
        let mut img = vec![<Q as Zero>::zero(); d];
        for i in 0..n {
            let tr = &traces[t[i]];
            if Zero::is_zero(tr) {
                continue;
            }
            let hat: Vec<usize> = t.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| *v).collect();
            let col = base.image(&hat);
            for (k, v) in col.into_iter().enumerate() {
                let term = tr * v;
                if i % 2 == 0 {
                    img[k] += term;
                } else {
                    img[k] -= term;
                }
            }
        }
        for (k, v) in img.into_iter().enumerate() {
            if !Zero::is_zero(&v) {
                out.set(&t, k, v)?;
            }
        }
    }
    let algebra = FilippovAlgebra::new(out)?;
    let fi = algebra.check_fi(FiForm::Derivation);
    Ok(TraceExtension { algebra, fi })
}

/// `gl(m)` on the matrix units `E_{ij}` (row-major) with the commutator, and their traces.
pub fn matrix_units_algebra(m: usize) -> (Vec<Matrix<Q>>, Bracket, Vec<Q>) {
    let d = m * m;
    let units: Vec<Matrix<Q>> = (0..d)
        .map(|k| {
            let mut e = Matrix::zeros(m, m);
            e.set(k / m, k % m, q(1));
            e
        })
        .collect();
    let mut b = Bracket::zero(2, d);
    for t in combinations(d, 2) {
        let c = units[t[0]].commutator(&units[t[1]]);
        for (k, v) in c.vectorize().into_iter().enumerate() {
            if !Zero::is_zero(&v) {
                b.set(&t, k, v).expect("in range");
            }
        }
    }
    let traces = units.iter().map(|e| e.trace()).collect();
    (units, b, traces)
}
