//! Multivariate polynomials with rational coefficients in canonical form.

use crate::scalar::{fmt_q, Scalar, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in `x₁…x_m`; terms keyed by exponent vectors, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !Zero::is_zero(&c) {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, <Q as One>::one())
    }

    pub fn monomial(exps: Vec<u32>, c: Q) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !Zero::is_zero(&c) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(<Q as Zero>::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if Zero::is_zero(v) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-<Q as One>::one())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if Zero::is_zero(c) {
            return Self::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `self += a·b` without materializing the product separately.
    pub fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, ca * cb);
            }
        }
    }

    /// `self += c·a`.
    pub fn add_scaled_assign(&mut self, a: &Self, c: &Q) {
        if Zero::is_zero(c) {
            return;
        }
        for (e, v) in &a.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    /// Partial derivative `∂/∂x_i`.
    pub fn deriv(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c * Q::from_integer(e[i].into()));
        }
        out
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &[Q]) -> Q {
        let mut acc = <Q as Zero>::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }
}

impl Scalar for Poly {
    // polynomials only form a ring; `inv` succeeds on nonzero constants
    fn zero() -> Self {
        Poly::zero(0)
    }
    fn one() -> Self {
        Poly::constant(0, <Q as One>::one())
    }
    fn from_q(x: &Q) -> Self {
        Poly::constant(0, x.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let (a, b) = widen(self, o);
        Poly::add(&a, &b)
    }
    fn sub(&self, o: &Self) -> Self {
        let (a, b) = widen(self, o);
        Poly::sub(&a, &b)
    }
    fn mul(&self, o: &Self) -> Self {
        let (a, b) = widen(self, o);
        Poly::mul(&a, &b)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(Poly::constant(self.nvars, c.recip()))
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_q(&self) -> Option<Q> {
        self.as_constant()
    }
}

// constants produced by `Scalar::zero`/`one` carry no variables; lift them on contact
fn widen(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let lift = |p: &Poly, n: usize| -> Poly {
        if p.nvars == n {
            return p.clone();
        }
        assert!(p.terms.keys().all(|e| e.iter().all(|&k| k == 0)), "variable count mismatch");
        Poly::constant(n, p.as_constant().unwrap_or_else(<Q as Zero>::zero))
    };
    let n = a.nvars.max(b.nvars);
    (lift(a, n), lift(b, n))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    fmt_q(c)
                } else {
                    format!("{}*{}", fmt_q(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
