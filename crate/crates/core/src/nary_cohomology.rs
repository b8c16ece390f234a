//! Cohomology of Filippov and Leibniz algebras.
//!
//! Cochains of a Filippov algebra take `p` fundamental objects (blocks of
//! `n−1` elements, antisymmetric within each block) and, for the
//! central-extension and deformation complexes, one more element `Z` that is
//! antisymmetric jointly with the last block. The module complex has no
//! solitary slot. Leibniz cochains have unrestricted arguments.
//!
//! All cochains share [`NCochain`], which stores values at canonical
//! (block-sorted) argument tuples.

use crate::combinatorics::{combinations, sort_with_sign};
use crate::filippov::{FilippovAlgebra, LabelSum};
use crate::lie::LieAlgebra;
use crate::lie_cohomology::CohomologyReport;
use crate::linalg::Matrix;
use crate::scalar::{q, Scalar, Q};
use crate::structure::{Bracket, Check, Violation};
use itertools::Itertools;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NCohomologyError {
    #[error("cochain does not fit the complex: {0}")]
    Shape(String),
    #[error("not a representation: {0}")]
    NotRepresentation(Violation),
    #[error("not a cocycle: {0}")]
    NotCocycle(Violation),
    #[error("bracket identity fails: {0}")]
    Identity(Violation),
}

type Result<T> = std::result::Result<T, NCohomologyError>;

/// Argument symmetry of a cochain family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layout {
    /// `p` fundamental objects plus `Z`, the last block antisymmetric jointly with `Z`.
    Joint,
    /// `p` fundamental objects, no solitary slot.
    Blocks,
    /// `p` unrestricted arguments (Leibniz cochains).
    Raw,
}

/// Sizes of the antisymmetric argument blocks.
pub fn block_sizes(layout: Layout, order: usize, arity: usize) -> Vec<usize> {
    let k = arity - 1;
    match layout {
        Layout::Joint => {
            if order == 0 {
                vec![1]
            } else {
                let mut v = vec![k; order - 1];
                v.push(arity);
                v
            }
        }
        Layout::Blocks => vec![k; order],
        Layout::Raw => vec![1; order],
    }
}

/// Vector-valued multilinear map stored on canonical argument tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCochain {
    pub layout: Layout,
    pub order: usize,
    pub arity: usize,
    pub dim: usize,
    pub dim_v: usize,
    blocks: Vec<usize>,
    values: BTreeMap<Vec<usize>, Vec<Q>>,
}

impl NCochain {
    pub fn zero(layout: Layout, order: usize, arity: usize, dim: usize, dim_v: usize) -> Self {
        NCochain { layout, order, arity, dim, dim_v, blocks: block_sizes(layout, order, arity), values: BTreeMap::new() }
    }

    /// Evaluates `f` on every canonical tuple.
    pub fn from_fn(
        layout: Layout,
        order: usize,
        arity: usize,
        dim: usize,
        dim_v: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Q>,
    ) -> Self {
        let mut c = Self::zero(layout, order, arity, dim, dim_v);
        for t in c.basis_tuples() {
            let v = f(&t);
            debug_assert_eq!(v.len(), dim_v);
            if v.iter().any(|x| !Zero::is_zero(x)) {
                c.values.insert(t, v);
            }
        }
        c
    }

    pub fn nargs(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Canonical tuples (each block strictly increasing) in lexicographic block order.
    pub fn basis_tuples(&self) -> Vec<Vec<usize>> {
        canonical_tuples(&self.blocks, self.dim)
    }

    /// Number of scalar coordinates.
    pub fn space_dim(&self) -> usize {
        self.basis_tuples().len() * self.dim_v
    }

    /// Sorts each block, returning the sign, or `None` on a repeated index within a block.
    pub fn canonical(&self, args: &[usize]) -> Option<(Vec<usize>, i32)> {
        canonicalize(&self.blocks, args)
    }

    pub fn get(&self, args: &[usize]) -> Vec<Q> {
        assert_eq!(args.len(), self.nargs(), "wrong number of cochain arguments");
        match self.canonical(args) {
            None => vec![<Q as Zero>::zero(); self.dim_v],
            Some((t, sign)) => match self.values.get(&t) {
                None => vec![<Q as Zero>::zero(); self.dim_v],
                Some(v) if sign == 1 => v.clone(),
                Some(v) => v.iter().map(|x| -x).collect(),
            },
        }
    }

    /// Sets the value at `args`; the canonical tuple receives the sorting sign.
    pub fn set(&mut self, args: &[usize], v: Vec<Q>) -> Result<()> {
        if args.len() != self.nargs() || v.len() != self.dim_v || args.iter().any(|&a| a >= self.dim) {
            return Err(NCohomologyError::Shape(format!("bad arguments {args:?}")));
        }
        let Some((t, sign)) = self.canonical(args) else {
            if v.iter().all(Zero::is_zero) {
                return Ok(());
            }
            return Err(NCohomologyError::Shape(format!("repeated index in a block of {args:?}")));
        };
        let v: Vec<Q> = if sign == 1 { v } else { v.into_iter().map(|x| -x).collect() };
        if v.iter().all(Zero::is_zero) {
            self.values.remove(&t);
        } else {
            self.values.insert(t, v);
        }
        Ok(())
    }

    /// `α(args)` with the argument at `slot` replaced by the vector `v`.
    pub fn eval_slot(&self, args: &[usize], slot: usize, v: &[Q]) -> Vec<Q> {
        let mut out = vec![<Q as Zero>::zero(); self.dim_v];
        let mut a = args.to_vec();
        for (l, c) in v.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            a[slot] = l;
            for (o, x) in out.iter_mut().zip(self.get(&a)) {
                o.add_mul(c, &x);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Q>)> {
        self.values.iter()
    }

    fn same_space(&self, o: &Self) -> bool {
        self.layout == o.layout && self.order == o.order && self.arity == o.arity && self.dim == o.dim && self.dim_v == o.dim_v
    }

    pub fn add(&self, o: &Self) -> Self {
        assert!(self.same_space(o), "cochains live in different spaces");
        let mut out = self.clone();
        for (t, v) in &o.values {
            let e = out.values.entry(t.clone()).or_insert_with(|| vec![<Q as Zero>::zero(); self.dim_v]);
            for (a, b) in e.iter_mut().zip(v) {
                *a += b;
            }
            if e.iter().all(Zero::is_zero) {
                out.values.remove(t);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = self.clone();
        if Zero::is_zero(c) {
            out.values.clear();
            return out;
        }
        for v in out.values.values_mut() {
            for x in v.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&q(-1)))
    }

    /// Coordinates, tuple-major over [`NCochain::basis_tuples`].
    pub fn to_vector(&self) -> Vec<Q> {
        let mut out = Vec::with_capacity(self.space_dim());
        for t in self.basis_tuples() {
            match self.values.get(&t) {
                Some(v) => out.extend(v.iter().cloned()),
                None => out.extend(std::iter::repeat_with(<Q as Zero>::zero).take(self.dim_v)),
            }
        }
        out
    }

    pub fn from_vector(layout: Layout, order: usize, arity: usize, dim: usize, dim_v: usize, v: &[Q]) -> Self {
        let mut c = Self::zero(layout, order, arity, dim, dim_v);
        for (i, t) in c.basis_tuples().into_iter().enumerate() {
            let vals = v[i * dim_v..(i + 1) * dim_v].to_vec();
            if vals.iter().any(|x| !Zero::is_zero(x)) {
                c.values.insert(t, vals);
            }
        }
        c
    }

    /// Checks the declared symmetry against a raw evaluator on every argument tuple.
    pub fn check_layout_of(&self, raw: impl Fn(&[usize]) -> Vec<Q>) -> Check {
        for args in crate::combinatorics::all_tuples(self.dim, self.nargs()) {
            let r = raw(&args);
            let g = self.get(&args);
            if let Some((a, b)) = r.iter().zip(&g).find(|(a, b)| a != b) {
                return Err(Violation::new("cochain symmetry", args, a - b));
            }
        }
        Ok(())
    }
}

fn canonicalize(blocks: &[usize], args: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut out = Vec::with_capacity(args.len());
    let mut sign = 1;
    let mut pos = 0;
    for &b in blocks {
        let (s, sg) = sort_with_sign(&args[pos..pos + b])?;
        out.extend(s);
        sign *= sg;
        pos += b;
    }
    Some((out, sign))
}

fn canonical_tuples(blocks: &[usize], dim: usize) -> Vec<Vec<usize>> {
    if blocks.is_empty() {
        return vec![vec![]];
    }
    blocks
        .iter()
        .map(|&b| combinations(dim, b))
        .multi_cartesian_product()
        .map(|parts| parts.concat())
        .collect()
}

fn check_fa_cochain(fa: &FilippovAlgebra, alpha: &NCochain, layout: Layout) -> Result<()> {
    if alpha.layout != layout || alpha.arity != fa.arity() || alpha.dim != fa.dim() {
        return Err(NCohomologyError::Shape(format!(
            "expected {layout:?} cochain of arity {} on dimension {}",
            fa.arity(),
            fa.dim()
        )));
    }
    Ok(())
}

fn sign_of(even: bool) -> Q {
    if even {
        q(1)
    } else {
        q(-1)
    }
}

fn axpy(acc: &mut [Q], c: &Q, x: &[Q]) {
    for (a, b) in acc.iter_mut().zip(x) {
        a.add_mul(c, b);
    }
}

/// Image `[e_{a₁}…e_{a_n}]` of basis elements.
fn bracket_image(f: &Bracket, args: &[usize]) -> Vec<Q> {
    f.image(args)
}

/// Terms shared by the trivial and deformation complexes:
/// `Σ_{i<j} (−1)^i α(…X̂_i…X_i·X_j…, Z) + Σ_i (−1)^i α(…X̂_i…, X_i·Z)`.
fn dot_terms(fa: &FilippovAlgebra, alpha: &NCochain, args: &[usize]) -> Vec<Q> {
    let k = fa.arity() - 1;
    let blocks = (args.len() - 1) / k;
    let z = args[args.len() - 1];
    let f = fa.bracket();
    let mut acc = vec![<Q as Zero>::zero(); alpha.dim_v];
    for i in 0..blocks {
        let xi = &args[i * k..(i + 1) * k];
        let mut rest: Vec<usize> = Vec::with_capacity(args.len() - k);
        for b in 0..blocks {
            if b != i {
                rest.extend_from_slice(&args[b * k..(b + 1) * k]);
            }
        }
        rest.push(z);
        // 1-based sign (−1)^i
        let s = sign_of(i % 2 == 1);
        for j in (i + 1)..blocks {
            let pos = (j - 1) * k;
            for e in 0..k {
                let mut t = xi.to_vec();
                t.push(args[j * k + e]);
                let v = bracket_image(f, &t);
                axpy(&mut acc, &s, &alpha.eval_slot(&rest, pos + e, &v));
            }
        }
        let mut t = xi.to_vec();
        t.push(z);
        let v = bracket_image(f, &t);
        let last = rest.len() - 1;
        axpy(&mut acc, &s, &alpha.eval_slot(&rest, last, &v));
    }
    acc
}

/// Coboundary of the trivial-action complex (central extensions).
pub fn fa_coboundary_trivial(fa: &FilippovAlgebra, alpha: &NCochain) -> Result<NCochain> {
    check_fa_cochain(fa, alpha, Layout::Joint)?;
    Ok(NCochain::from_fn(Layout::Joint, alpha.order + 1, fa.arity(), fa.dim(), alpha.dim_v, |args| {
        dot_terms(fa, alpha, args)
    }))
}

/// Value of the deformation coboundary at one argument tuple, without assuming any symmetry.
pub fn deformation_coboundary_at(fa: &FilippovAlgebra, alpha: &NCochain, args: &[usize]) -> Vec<Q> {
    let k = fa.arity() - 1;
    let p = alpha.order;
    let blocks = p + 1;
    let z = args[args.len() - 1];
    let mut acc = dot_terms(fa, alpha, args);
    // Σ_j (−1)^{j+1} X_j · α(…X̂_j…, Z)
    for j in 0..blocks {
        let mut rest: Vec<usize> = Vec::with_capacity(args.len() - k);
        for b in 0..blocks {
            if b != j {
                rest.extend_from_slice(&args[b * k..(b + 1) * k]);
            }
        }
        rest.push(z);
        let v = alpha.get(&rest);
        let img = fa.ad_label(&args[j * k..(j + 1) * k]).mul_vec(&v);
        axpy(&mut acc, &sign_of(j % 2 == 0), &img);
    }
    // (−1)^p (α(X_1…X_p, ·)·X_{p+1})·Z
    let head = &args[..p * k];
    let y = &args[p * k..(p + 1) * k];
    let s = sign_of(p % 2 == 0);
    for e in 0..k {
        let mut a = head.to_vec();
        a.push(y[e]);
        let w = alpha.get(&a);
        let mut xs: Vec<Vec<Q>> = y.iter().map(|&i| unit(fa.dim(), i)).collect();
        xs[e] = w;
        xs.push(unit(fa.dim(), z));
        axpy(&mut acc, &s, &fa.bracket().apply(&xs));
    }
    acc
}

/// Coboundary of the deformation complex (algebra-valued cochains, ad action).
pub fn fa_coboundary_deformation(fa: &FilippovAlgebra, alpha: &NCochain) -> Result<NCochain> {
    check_fa_cochain(fa, alpha, Layout::Joint)?;
    if alpha.dim_v != fa.dim() {
        return Err(NCohomologyError::Shape("deformation cochains take values in the algebra".into()));
    }
    Ok(NCochain::from_fn(Layout::Joint, alpha.order + 1, fa.arity(), fa.dim(), fa.dim(), |args| {
        deformation_coboundary_at(fa, alpha, args)
    }))
}

fn unit(d: usize, i: usize) -> Vec<Q> {
    let mut v = vec![<Q as Zero>::zero(); d];
    v[i] = <Q as One>::one();
    v
}

/// A representation of a Filippov algebra: a matrix for each basis fundamental object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaModule {
    pub dim_v: usize,
    matrices: BTreeMap<Vec<usize>, Matrix<Q>>,
}

impl FaModule {
    /// Matrices for the sorted labels of `fa`, in [`FilippovAlgebra::labels`] order.
    pub fn new(fa: &FilippovAlgebra, dim_v: usize, matrices: Vec<Matrix<Q>>) -> Result<Self> {
        let labels = fa.labels();
        if matrices.len() != labels.len() || matrices.iter().any(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(NCohomologyError::Shape("one dim_v×dim_v matrix per label".into()));
        }
        Ok(FaModule { dim_v, matrices: labels.into_iter().zip(matrices).collect() })
    }

    pub fn adjoint(fa: &FilippovAlgebra) -> Self {
        FaModule { dim_v: fa.dim(), matrices: fa.labels().into_iter().map(|l| (l.clone(), fa.ad_label(&l))).collect() }
    }

    pub fn trivial(fa: &FilippovAlgebra, dim_v: usize) -> Self {
        FaModule { dim_v, matrices: fa.labels().into_iter().map(|l| (l, Matrix::zeros(dim_v, dim_v))).collect() }
    }

    /// `ρ` of a basis fundamental object in any order.
    pub fn rho(&self, label: &[usize]) -> Matrix<Q> {
        match sort_with_sign(label) {
            None => Matrix::zeros(self.dim_v, self.dim_v),
            Some((s, sign)) => {
                let m = &self.matrices[&s];
                if sign == 1 {
                    m.clone()
                } else {
                    m.neg()
                }
            }
        }
    }

    /// `ρ` with the last entry of the object replaced by a vector.
    fn rho_last_vector(&self, head: &[usize], v: &[Q]) -> Matrix<Q> {
        let mut m = Matrix::zeros(self.dim_v, self.dim_v);
        let mut t = head.to_vec();
        t.push(0);
        let last = t.len() - 1;
        for (l, c) in v.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            t[last] = l;
            m = m.add(&self.rho(&t).scale(c));
        }
        m
    }

    fn rho_sum(&self, x: &LabelSum) -> Matrix<Q> {
        let mut m = Matrix::zeros(self.dim_v, self.dim_v);
        for (t, c) in x {
            m = m.add(&self.rho(t).scale(c));
        }
        m
    }

    /// Both representation equations: `[ρ(𝒳),ρ(𝒴)] = ρ(𝒳·𝒴)` and
    /// `ρ(X₁…X_{n−2},[Y₁…Y_n]) = Σ_i (−1)^{n−i} ρ(Y₁…Ŷ_i…Y_n) ρ(X₁…X_{n−2},Y_i)`.
    pub fn validate(&self, fa: &FilippovAlgebra) -> Check {
        let labels = fa.labels();
        for x in &labels {
            for y in &labels {
                let lhs = self.rho(x).commutator(&self.rho(y));
                let rhs = self.rho_sum(&fa.dot_labels(x, y));
                if lhs != rhs {
                    let mut idx = x.clone();
                    idx.extend_from_slice(y);
                    return Err(Violation::new("module homomorphism", idx, q(1)));
                }
            }
        }
        let n = fa.arity();
        for x in combinations(fa.dim(), n - 2) {
            for y in combinations(fa.dim(), n) {
                let lhs = self.rho_last_vector(&x, &fa.bracket().image(&y));
                let mut rhs = Matrix::zeros(self.dim_v, self.dim_v);
                for i in 0..n {
                    let hat: Vec<usize> = y.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| *v).collect();
                    let mut xy = x.clone();
                    xy.push(y[i]);
                    let term = self.rho(&hat).mul(&self.rho(&xy));
                    rhs = if (n - i - 1) % 2 == 0 { rhs.add(&term) } else { rhs.sub(&term) };
                }
                if lhs != rhs {
                    let mut idx = x.clone();
                    idx.extend_from_slice(&y);
                    return Err(Violation::new("module bracket relation", idx, q(1)));
                }
            }
        }
        Ok(())
    }
}

/// Coboundary of the module complex (cochains on `p` fundamental objects, values in `V`).
pub fn fa_coboundary_module(fa: &FilippovAlgebra, rho: &FaModule, alpha: &NCochain) -> Result<NCochain> {
    check_fa_cochain(fa, alpha, Layout::Blocks)?;
    if alpha.dim_v != rho.dim_v {
        return Err(NCohomologyError::Shape("cochain values must match the module".into()));
    }
    rho.validate(fa).map_err(NCohomologyError::NotRepresentation)?;
    Ok(module_coboundary_unchecked(fa, rho, alpha))
}

fn module_coboundary_unchecked(fa: &FilippovAlgebra, rho: &FaModule, alpha: &NCochain) -> NCochain {
    let k = fa.arity() - 1;
    let blocks = alpha.order + 1;
    let f = fa.bracket();
    NCochain::from_fn(Layout::Blocks, blocks, fa.arity(), fa.dim(), alpha.dim_v, |args| {
        let mut acc = vec![<Q as Zero>::zero(); alpha.dim_v];
        for i in 0..blocks {
            let xi = &args[i * k..(i + 1) * k];
            let mut rest: Vec<usize> = Vec::with_capacity(args.len() - k);
            for b in 0..blocks {
                if b != i {
                    rest.extend_from_slice(&args[b * k..(b + 1) * k]);
                }
            }
            let img = rho.rho(xi).mul_vec(&alpha.get(&rest));
            axpy(&mut acc, &sign_of(i % 2 == 0), &img);
            let s = sign_of(i % 2 == 1);
            for j in (i + 1)..blocks {
                let pos = (j - 1) * k;
                for e in 0..k {
                    let mut t = xi.to_vec();
                    t.push(args[j * k + e]);
                    let v = bracket_image(f, &t);
                    axpy(&mut acc, &s, &alpha.eval_slot(&rest, pos + e, &v));
                }
            }
        }
        acc
    })
}

/// Formal combination of canonical chain tuples (joint layout).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NChain {
    pub order: usize,
    pub arity: usize,
    pub dim: usize,
    pub terms: BTreeMap<Vec<usize>, Q>,
}

impl NChain {
    pub fn zero(order: usize, arity: usize, dim: usize) -> Self {
        NChain { order, arity, dim, terms: BTreeMap::new() }
    }

    /// Adds `c·args`, reducing to the canonical tuple.
    pub fn add_term(&mut self, args: &[usize], c: &Q) {
        let blocks = block_sizes(Layout::Joint, self.order, self.arity);
        let Some((t, sign)) = canonicalize(&blocks, args) else { return };
        let e = self.terms.entry(t.clone()).or_insert_with(<Q as Zero>::zero);
        if sign == 1 {
            *e += c;
        } else {
            *e -= c;
        }
        if Zero::is_zero(e) {
            self.terms.remove(&t);
        }
    }

    fn add_slot(&mut self, args: &[usize], slot: usize, v: &[Q], c: &Q) {
        let mut a = args.to_vec();
        for (l, x) in v.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            a[slot] = l;
            self.add_term(&a, &(c * x));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pairing `α(c)` with a scalar cochain of the same order.
    pub fn pair(&self, alpha: &NCochain) -> Q {
        let mut acc = <Q as Zero>::zero();
        for (t, c) in &self.terms {
            acc.add_mul(c, &alpha.get(t)[0]);
        }
        acc
    }
}

/// Homology boundary `∂(𝒳₁…𝒳_p,Z) = Σ_{i<j}(−1)^i(…𝒳̂_i…𝒳_i·𝒳_j…,Z) + Σ_i(−1)^i(…𝒳̂_i…,𝒳_i·Z)`.
pub fn fa_homology_boundary(fa: &FilippovAlgebra, chain: &NChain) -> Result<NChain> {
    if chain.order == 0 || chain.arity != fa.arity() || chain.dim != fa.dim() {
        return Err(NCohomologyError::Shape("boundary needs a chain of order ≥ 1 on this algebra".into()));
    }
    let k = fa.arity() - 1;
    let blocks = chain.order;
    let f = fa.bracket();
    let mut out = NChain::zero(chain.order - 1, fa.arity(), fa.dim());
    for (args, c) in &chain.terms {
        let z = args[args.len() - 1];
        for i in 0..blocks {
            let xi = &args[i * k..(i + 1) * k];
            let mut rest: Vec<usize> = Vec::with_capacity(args.len() - k);
            for b in 0..blocks {
                if b != i {
                    rest.extend_from_slice(&args[b * k..(b + 1) * k]);
                }
            }
            rest.push(z);
            let s = sign_of(i % 2 == 1) * c;
            for j in (i + 1)..blocks {
                let pos = (j - 1) * k;
                for e in 0..k {
                    let mut t = xi.to_vec();
                    t.push(args[j * k + e]);
                    out.add_slot(&rest, pos + e, &bracket_image(f, &t), &s);
                }
            }
            let mut t = xi.to_vec();
            t.push(z);
            let last = rest.len() - 1;
            out.add_slot(&rest, last, &bracket_image(f, &t), &s);
        }
    }
    Ok(out)
}

/// Which Filippov complex to compute.
#[derive(Clone, Debug)]
pub enum FaComplex {
    /// Real-valued, trivial action.
    Trivial,
    Module(FaModule),
    Deformation,
}

fn fa_complex_space(fa: &FilippovAlgebra, complex: &FaComplex) -> (Layout, usize) {
    match complex {
        FaComplex::Trivial => (Layout::Joint, 1),
        FaComplex::Module(m) => (Layout::Blocks, m.dim_v),
        FaComplex::Deformation => (Layout::Joint, fa.dim()),
    }
}

fn fa_apply(fa: &FilippovAlgebra, complex: &FaComplex, alpha: &NCochain) -> NCochain {
    match complex {
        FaComplex::Trivial => NCochain::from_fn(Layout::Joint, alpha.order + 1, fa.arity(), fa.dim(), alpha.dim_v, |a| {
            dot_terms(fa, alpha, a)
        }),
        FaComplex::Module(m) => module_coboundary_unchecked(fa, m, alpha),
        FaComplex::Deformation => {
            NCochain::from_fn(Layout::Joint, alpha.order + 1, fa.arity(), fa.dim(), fa.dim(), |a| {
                deformation_coboundary_at(fa, alpha, a)
            })
        }
    }
}

/// Matrix of the coboundary `C^p → C^{p+1}` in the coordinates of [`NCochain::to_vector`].
pub fn fa_coboundary_matrix(fa: &FilippovAlgebra, complex: &FaComplex, p: usize) -> Matrix<Q> {
    let (layout, dv) = fa_complex_space(fa, complex);
    let src = NCochain::zero(layout, p, fa.arity(), fa.dim(), dv).space_dim();
    let tgt = NCochain::zero(layout, p + 1, fa.arity(), fa.dim(), dv).space_dim();
    let mut cols = Vec::with_capacity(src);
    for i in 0..src {
        let mut e = vec![<Q as Zero>::zero(); src];
        e[i] = q(1);
        let a = NCochain::from_vector(layout, p, fa.arity(), fa.dim(), dv, &e);
        cols.push(fa_apply(fa, complex, &a).to_vector());
    }
    Matrix::from_columns(&cols, tgt)
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology for `p = 0…p_max`.
pub fn fa_cohomology_dims(fa: &FilippovAlgebra, complex: &FaComplex, p_max: usize) -> Result<CohomologyReport> {
    if let FaComplex::Module(m) = complex {
        m.validate(fa).map_err(NCohomologyError::NotRepresentation)?;
    }
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in 0..=p_max {
        let m = fa_coboundary_matrix(fa, complex, p);
        dims.push(m.cols());
        ranks.push(m.rank());
    }
    Ok(CohomologyReport::from_ranks(&dims, &ranks))
}

/// Solves `δβ = α` in the selected complex; `None` if `α` is not a coboundary.
pub fn fa_coboundary_primitive(fa: &FilippovAlgebra, complex: &FaComplex, alpha: &NCochain) -> Option<NCochain> {
    if alpha.order == 0 {
        return alpha.is_zero().then(|| alpha.clone());
    }
    let (layout, dv) = fa_complex_space(fa, complex);
    let m = fa_coboundary_matrix(fa, complex, alpha.order - 1);
    let x = m.solve(&alpha.to_vector())?;
    Some(NCochain::from_vector(layout, alpha.order - 1, fa.arity(), fa.dim(), dv, &x))
}

/// Central extension `[X̃_{a₁}…X̃_{a_n}] = f X̃ + α(X_{a₁}…X_{a_n}) Ξ`, `Ξ` central (last index).
pub fn fa_central_extension(fa: &FilippovAlgebra, alpha: &NCochain) -> Result<FilippovAlgebra> {
    check_fa_cochain(fa, alpha, Layout::Joint)?;
    if alpha.order != 1 || alpha.dim_v != 1 {
        return Err(NCohomologyError::Shape("central extensions need a real one-cochain".into()));
    }
    let d = fa.dim();
    let mut b = fa.bracket().direct_sum(&Bracket::zero(fa.arity(), 1));
    for (t, v) in alpha.nonzero_entries() {
        b.set(t, d, v[0].clone()).map_err(|e| NCohomologyError::Shape(e.to_string()))?;
    }
    let ext = FilippovAlgebra::new(b).map_err(|e| NCohomologyError::Shape(e.to_string()))?;
    ext.check_fi(crate::filippov::FiForm::Derivation).map_err(NCohomologyError::NotCocycle)?;
    Ok(ext)
}

/// Splitting of a central extension by a coboundary.
#[derive(Clone, Debug)]
pub struct FaTrivialization {
    /// `β` with `α = δβ`.
    pub primitive: NCochain,
    /// Rows give `X̃'_d = X̃_d − β(X_d) Ξ`; `Ξ` unchanged.
    pub basis_change: Matrix<Q>,
    /// The extension in the new basis, equal to `F ⊕ ℝ`.
    pub split: FilippovAlgebra,
}

/// Splits the extension by `α` when `α = δβ`; `None` when `α` is not a coboundary.
pub fn fa_trivialize_extension(fa: &FilippovAlgebra, alpha: &NCochain) -> Result<Option<FaTrivialization>> {
    let ext = fa_central_extension(fa, alpha)?;
    let Some(beta) = fa_coboundary_primitive(fa, &FaComplex::Trivial, alpha) else { return Ok(None) };
    let d = fa.dim();
    let mut p = Matrix::identity(d + 1);
    for i in 0..d {
        p.set(i, d, -beta.get(&[i])[0].clone());
    }
    let b = ext.bracket().change_basis(&p).expect("unimodular basis change");
    let split = FilippovAlgebra::new(b).map_err(|e| NCohomologyError::Shape(e.to_string()))?;
    Ok(Some(FaTrivialization { primitive: beta, basis_change: p, split }))
}

/// Second-order obstruction of an infinitesimal deformation.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub gamma: NCochain,
    /// `δγ = 0` in the deformation complex.
    pub cocycle: Check,
    /// `α'` with `γ = δα'`, if any.
    pub primitive: Option<NCochain>,
}

impl ObstructionReport {
    pub fn is_trivial(&self) -> bool {
        self.primitive.is_some()
    }
}

/// `γ(𝒳,𝒴,Z) = α(𝒳, α(𝒴,Z)) − α(α(𝒳,·)·𝒴, Z) − α(𝒴, α(𝒳,Z))` at one argument tuple.
pub fn obstruction_at(fa: &FilippovAlgebra, alpha: &NCochain, args: &[usize]) -> Vec<Q> {
    let k = fa.arity() - 1;
    let x = &args[..k];
    let y = &args[k..2 * k];
    let z = args[2 * k];
    let with = |block: &[usize], last: usize| -> Vec<usize> {
        let mut a = block.to_vec();
        a.push(last);
        a
    };
    let mut acc = alpha.eval_slot(&with(x, 0), k, &alpha.get(&with(y, z)));
    let neg = alpha.eval_slot(&with(y, 0), k, &alpha.get(&with(x, z)));
    acc = acc.iter().zip(&neg).map(|(a, b)| a - b).collect();
    for e in 0..k {
        let v = alpha.get(&with(x, y[e]));
        let term = alpha.eval_slot(&with(y, z), e, &v);
        acc = acc.iter().zip(&term).map(|(a, b)| a - b).collect();
    }
    acc
}

pub fn fa_deformation_obstruction(fa: &FilippovAlgebra, alpha: &NCochain) -> Result<ObstructionReport> {
    check_fa_cochain(fa, alpha, Layout::Joint)?;
    if alpha.order != 1 || alpha.dim_v != fa.dim() {
        return Err(NCohomologyError::Shape("deformations need an algebra-valued one-cochain".into()));
    }
    let d_alpha = fa_coboundary_deformation(fa, alpha)?;
    if let Some((t, v)) = d_alpha.nonzero_entries().next() {
        let r = v.iter().find(|x| !Zero::is_zero(*x)).cloned().unwrap_or_default();
        return Err(NCohomologyError::NotCocycle(Violation::new("deformation cocycle", t.clone(), r)));
    }
    let gamma = NCochain::from_fn(Layout::Joint, 2, fa.arity(), fa.dim(), fa.dim(), |a| obstruction_at(fa, alpha, a));
    let dg = fa_coboundary_deformation(fa, &gamma)?;
    let cocycle = match dg.nonzero_entries().next() {
        None => Ok(()),
        Some((t, v)) => {
            let r = v.iter().find(|x| !Zero::is_zero(*x)).cloned().unwrap_or_default();
            Err(Violation::new("obstruction cocycle", t.clone(), r))
        }
    };
    let primitive = fa_coboundary_primitive(fa, &FaComplex::Deformation, &gamma);
    Ok(ObstructionReport { gamma, cocycle, primitive })
}

/// Real one-cochain of the Nambu–Heisenberg–Weyl extension on the abelian `3N`-dimensional
/// 3-algebra with basis `(X_1…X_N, Y_1…Y_N, Z_1…Z_N)`: `α(X_a,Y_a,Z_a) = 1`.
pub fn nhw_cocycle(n_copies: usize) -> NCochain {
    let d = 3 * n_copies;
    let mut a = NCochain::zero(Layout::Joint, 1, 3, d, 1);
    for i in 0..n_copies {
        a.set(&[i, n_copies + i, 2 * n_copies + i], vec![q(1)]).expect("valid tuple");
    }
    a
}

/// Left Leibniz algebra `[X_i,X_j] = B_{ij}{}^k X_k` with no symmetry assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    table: Vec<Q>,
}

impl LeibnizAlgebra {
    pub fn zero(dim: usize) -> Self {
        LeibnizAlgebra { dim, table: vec![<Q as Zero>::zero(); dim * dim * dim] }
    }

    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, Q)]) -> Self {
        let mut l = Self::zero(dim);
        for (i, j, k, v) in entries {
            l.set(*i, *j, *k, v.clone());
        }
        l
    }

    pub fn from_lie(l: &LieAlgebra) -> Self {
        let d = l.dim();
        let mut out = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    out.set(i, j, k, l.c(i, j, k).clone());
                }
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.table[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Q) {
        let n = self.idx(i, j, k);
        self.table[n] = v;
    }

    pub fn image(&self, i: usize, j: usize) -> Vec<Q> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![<Q as Zero>::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if Zero::is_zero(b) {
                    continue;
                }
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    o.add_mul(&ab, self.c(i, j, k));
                }
            }
        }
        out
    }

    /// `L_i = [X_i, ·]`.
    pub fn left_multiplications(&self) -> Vec<Matrix<Q>> {
        (0..self.dim).map(|i| Matrix::from_fn(self.dim, self.dim, |k, j| self.c(i, j, k).clone())).collect()
    }

    /// `R_i = [·, X_i]`.
    pub fn right_multiplications(&self) -> Vec<Matrix<Q>> {
        (0..self.dim).map(|i| Matrix::from_fn(self.dim, self.dim, |k, j| self.c(j, i, k).clone())).collect()
    }

    /// `[X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]]` on basis triples.
    pub fn check_leibniz_identity(&self) -> Check {
        let d = self.dim;
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let e = |i: usize| unit(d, i);
                    let lhs = self.bracket(&e(x), &self.image(y, z));
                    let r1 = self.bracket(&self.image(x, y), &e(z));
                    let r2 = self.bracket(&e(y), &self.image(x, z));
                    for s in 0..d {
                        let r = &lhs[s] - &r1[s] - &r2[s];
                        if !Zero::is_zero(&r) {
                            return Err(Violation::new("left Leibniz identity", vec![x, y, z, s], r));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Constants after `Y_a = P_a{}^b X_b` (rows of `p`).
    pub fn change_basis(&self, p: &Matrix<Q>) -> Option<Self> {
        let pinv = p.inverse()?;
        let d = self.dim;
        let mut out = Self::zero(d);
        for a in 0..d {
            for b in 0..d {
                let img = self.bracket(p.row(a), p.row(b));
                let coords = pinv.transpose().mul_vec(&img);
                for (k, v) in coords.into_iter().enumerate() {
                    out.set(a, b, k, v);
                }
            }
        }
        Some(out)
    }
}

/// Left and right actions `ρ(X)A = L_X A`, `Aρ(X) = R_X A` of a Leibniz algebra on `𝒜`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizModule {
    pub dim_a: usize,
    pub left: Vec<Matrix<Q>>,
    pub right: Vec<Matrix<Q>>,
}

impl LeibnizModule {
    pub fn adjoint(l: &LeibnizAlgebra) -> Self {
        LeibnizModule { dim_a: l.dim(), left: l.left_multiplications(), right: l.right_multiplications() }
    }

    pub fn trivial(l: &LeibnizAlgebra, dim_a: usize) -> Self {
        let z = Matrix::zeros(dim_a, dim_a);
        LeibnizModule { dim_a, left: vec![z.clone(); l.dim()], right: vec![z; l.dim()] }
    }

    /// Symmetric representation: `Aρ(X) = −ρ(X)A`.
    pub fn symmetric(left: Vec<Matrix<Q>>) -> Self {
        let dim_a = left.first().map_or(0, |m| m.rows());
        let right = left.iter().map(|m| m.neg()).collect();
        LeibnizModule { dim_a, left, right }
    }

    pub fn is_symmetric(&self) -> bool {
        self.left.iter().zip(&self.right).all(|(l, r)| l.add(r).is_zero())
    }

    fn combo(ms: &[Matrix<Q>], v: &[Q], dim_a: usize) -> Matrix<Q> {
        let mut m = Matrix::zeros(dim_a, dim_a);
        for (i, c) in v.iter().enumerate() {
            if !Zero::is_zero(c) {
                m = m.add(&ms[i].scale(c));
            }
        }
        m
    }

    /// The three representation conditions on basis elements.
    pub fn validate(&self, l: &LeibnizAlgebra) -> Check {
        let d = l.dim();
        if self.left.len() != d || self.right.len() != d {
            return Err(Violation::new("module shape", vec![], q(1)));
        }
        for i in 0..d {
            for j in 0..d {
                let bij = l.image(i, j);
                let lb = Self::combo(&self.left, &bij, self.dim_a);
                let rb = Self::combo(&self.right, &bij, self.dim_a);
                // ρ(X₁)ρ(X₂) = ρ([X₁,X₂]) + ρ(X₂)ρ(X₁)
                let c1 = self.left[i].mul(&self.left[j]).sub(&lb).sub(&self.left[j].mul(&self.left[i]));
                // ρ(X₁)(Aρ(X₃)) = (ρ(X₁)A)ρ(X₃) + Aρ([X₁,X₃])
                let c2 = self.left[i].mul(&self.right[j]).sub(&self.right[j].mul(&self.left[i])).sub(&rb);
                // Aρ([X₂,X₃]) = (Aρ(X₂))ρ(X₃) + ρ(X₂)(Aρ(X₃))
                let c3 = rb.sub(&self.right[j].mul(&self.right[i])).sub(&self.left[i].mul(&self.right[j]));
                for (n, c) in [c1, c2, c3].iter().enumerate() {
                    if let Some(v) = c.entries().iter().find(|x| !Zero::is_zero(*x)) {
                        return Err(Violation::new("Leibniz representation", vec![n, i, j], v.clone()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_leibniz_cochain(l: &LeibnizAlgebra, rho: &LeibnizModule, om: &NCochain) -> Result<()> {
    if om.layout != Layout::Raw || om.dim != l.dim() || om.dim_v != rho.dim_a {
        return Err(NCohomologyError::Shape("Leibniz cochains are raw, on the algebra, valued in the module".into()));
    }
    Ok(())
}

/// `(sω)(X₁…X_{p+1}) = Σ_{i≤p}(−1)^{i+1}ρ(X_i)ω(…X̂_i…) + Σ_{i<j}(−1)^i ω(…X̂_i…[X_i,X_j]…)
/// + (−1)^{p+1} ω(X₁…X_p)ρ(X_{p+1})`.
pub fn leibniz_coboundary(l: &LeibnizAlgebra, rho: &LeibnizModule, om: &NCochain) -> Result<NCochain> {
    check_leibniz_cochain(l, rho, om)?;
    rho.validate(l).map_err(NCohomologyError::NotRepresentation)?;
    Ok(leibniz_coboundary_unchecked(l, rho, om, false))
}

/// The symmetric-representation form with the left action summed over all `p+1` slots.
pub fn leibniz_coboundary_symmetric(l: &LeibnizAlgebra, rho: &LeibnizModule, om: &NCochain) -> Result<NCochain> {
    check_leibniz_cochain(l, rho, om)?;
    if !rho.is_symmetric() {
        return Err(NCohomologyError::Shape("representation is not symmetric".into()));
    }
    Ok(leibniz_coboundary_unchecked(l, rho, om, true))
}

fn leibniz_coboundary_unchecked(l: &LeibnizAlgebra, rho: &LeibnizModule, om: &NCochain, symmetric: bool) -> NCochain {
    let p = om.order;
    NCochain::from_fn(Layout::Raw, p + 1, 2, l.dim(), rho.dim_a, |args| {
        let mut acc = vec![<Q as Zero>::zero(); rho.dim_a];
        let left_slots = if symmetric { p + 1 } else { p };
        for i in 0..=p {
            let mut rest = args.to_vec();
            rest.remove(i);
            if i < left_slots {
                let img = rho.left[args[i]].mul_vec(&om.get(&rest));
                axpy(&mut acc, &sign_of(i % 2 == 0), &img);
            }
            let s = sign_of(i % 2 == 1);
            for j in (i + 1)..=p {
                axpy(&mut acc, &s, &om.eval_slot(&rest, j - 1, &l.image(args[i], args[j])));
            }
        }
        if !symmetric {
            let img = rho.right[args[p]].mul_vec(&om.get(&args[..p]));
            axpy(&mut acc, &sign_of((p + 1) % 2 == 0), &img);
        }
        acc
    })
}

/// Matrix of `s: C^p → C^{p+1}` in the coordinates of [`NCochain::to_vector`].
pub fn leibniz_coboundary_matrix(l: &LeibnizAlgebra, rho: &LeibnizModule, p: usize) -> Matrix<Q> {
    let (d, m) = (l.dim(), rho.dim_a);
    let src = NCochain::zero(Layout::Raw, p, 2, d, m).space_dim();
    let tgt = NCochain::zero(Layout::Raw, p + 1, 2, d, m).space_dim();
    let mut cols = Vec::with_capacity(src);
    for i in 0..src {
        let mut e = vec![<Q as Zero>::zero(); src];
        e[i] = q(1);
        let om = NCochain::from_vector(Layout::Raw, p, 2, d, m, &e);
        cols.push(leibniz_coboundary_unchecked(l, rho, &om, false).to_vector());
    }
    Matrix::from_columns(&cols, tgt)
}

/// Leibniz cohomology dimensions for `p = 0…p_max`.
pub fn leibniz_cohomology_dims(l: &LeibnizAlgebra, rho: &LeibnizModule, p_max: usize) -> Result<CohomologyReport> {
    rho.validate(l).map_err(NCohomologyError::NotRepresentation)?;
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for p in 0..=p_max {
        let m = leibniz_coboundary_matrix(l, rho, p);
        dims.push(m.cols());
        ranks.push(m.rank());
    }
    Ok(CohomologyReport::from_ranks(&dims, &ranks))
}

/// Extension `[(A₁,X₁),(A₂,X₂)] = (ρ(X₁)A₂ + A₁ρ(X₂) + ω(X₁,X₂), [X₁,X₂])`;
/// algebra indices first, then the module.
pub fn leibniz_extension(l: &LeibnizAlgebra, rho: &LeibnizModule, om2: &NCochain) -> Result<LeibnizAlgebra> {
    check_leibniz_cochain(l, rho, om2)?;
    if om2.order != 2 {
        return Err(NCohomologyError::Shape("extensions need a two-cochain".into()));
    }
    let s = leibniz_coboundary(l, rho, om2)?;
    if let Some((t, v)) = s.nonzero_entries().next() {
        let r = v.iter().find(|x| !Zero::is_zero(*x)).cloned().unwrap_or_default();
        return Err(NCohomologyError::NotCocycle(Violation::new("Leibniz two-cocycle", t.clone(), r)));
    }
    Ok(leibniz_extension_unchecked(l, rho, om2))
}

fn leibniz_extension_unchecked(l: &LeibnizAlgebra, rho: &LeibnizModule, om2: &NCochain) -> LeibnizAlgebra {
    let r = l.dim();
    let m = rho.dim_a;
    let mut out = LeibnizAlgebra::zero(r + m);
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                out.set(i, j, k, l.c(i, j, k).clone());
            }
            for (a, v) in om2.get(&[i, j]).into_iter().enumerate() {
                out.set(i, j, r + a, v);
            }
        }
        for a in 0..m {
            for b in 0..m {
                out.set(i, r + a, r + b, rho.left[i].get(b, a).clone());
                out.set(r + a, i, r + b, rho.right[i].get(b, a).clone());
            }
        }
    }
    out
}

/// Basis change `X̃'_i = X̃_i + ω¹(X_i)` relating the extensions by `ω²` and `ω² + sω¹`.
pub fn leibniz_section_change(l: &LeibnizAlgebra, rho: &LeibnizModule, om1: &NCochain) -> Matrix<Q> {
    let r = l.dim();
    let mut p = Matrix::identity(r + rho.dim_a);
    for i in 0..r {
        for (a, v) in om1.get(&[i]).into_iter().enumerate() {
            p.set(i, r + a, v);
        }
    }
    p
}

/// Checks that the extensions by `ω²` and `ω² + sω¹` are related by [`leibniz_section_change`].
pub fn leibniz_equivalent_extensions(
    l: &LeibnizAlgebra,
    rho: &LeibnizModule,
    om2: &NCochain,
    om1: &NCochain,
) -> Result<bool> {
    let e1 = leibniz_extension(l, rho, om2)?;
    let shifted = om2.add(&leibniz_coboundary(l, rho, om1)?);
    let e2 = leibniz_extension(l, rho, &shifted)?;
    let p = leibniz_section_change(l, rho, om1);
    Ok(e1.change_basis(&p).as_ref() == Some(&e2))
}

/// The split extension obtained from `ω² = sω¹` by the section change with `−ω¹`.
pub fn leibniz_split(l: &LeibnizAlgebra, rho: &LeibnizModule, om1: &NCochain) -> Result<(LeibnizAlgebra, LeibnizAlgebra)> {
    let om2 = leibniz_coboundary(l, rho, om1)?;
    let ext = leibniz_extension(l, rho, &om2)?;
    let p = leibniz_section_change(l, rho, &om1.scale(&q(-1)));
    let split = ext.change_basis(&p).expect("unimodular basis change");
    let zero = NCochain::zero(Layout::Raw, 2, 2, l.dim(), rho.dim_a);
    let semidirect = leibniz_extension_unchecked(l, rho, &zero);
    Ok((split, semidirect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filippov::{simple_fa, FiForm};
    use crate::lie_cohomology::{coboundary, Cochain};
    use crate::lie::Representation;
    use crate::scalar::qf;

    fn a4() -> FilippovAlgebra {
        simple_fa(3, &[1, 1, 1, 1]).unwrap()
    }

    /// Deterministic pseudo-random small rationals.
    fn filler(seed: u64) -> impl FnMut() -> Q {
        let mut s = seed;
        move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = ((s >> 33) % 7) as i64 - 3;
            q(v)
        }
    }

    fn random(layout: Layout, order: usize, fa: &FilippovAlgebra, dv: usize, seed: u64) -> NCochain {
        let mut g = filler(seed);
        NCochain::from_fn(layout, order, fa.arity(), fa.dim(), dv, |_| (0..dv).map(|_| g()).collect())
    }

    #[test]
    fn trivial_complex_one_cocycle_condition() {
        let f = a4();
        let alpha = random(Layout::Joint, 1, &f, 1, 7);
        let d = fa_coboundary_trivial(&f, &alpha).unwrap();
        // coordinate form of the one-cocycle condition
        for t in d.basis_tuples() {
            let (a1, a2, b1, b2, k) = (t[0], t[1], t[2], t[3], t[4]);
            let mut r = <Q as Zero>::zero();
            for l in 0..4 {
                r += f.f(&[b1, b2, k], l) * &alpha.get(&[a1, a2, l])[0];
                r -= f.f(&[a1, a2, b1], l) * &alpha.get(&[l, b2, k])[0];
                r -= f.f(&[a1, a2, b2], l) * &alpha.get(&[b1, l, k])[0];
                r -= f.f(&[a1, a2, k], l) * &alpha.get(&[b1, b2, l])[0];
            }
            assert_eq!(d.get(&t)[0], r);
        }
    }

    #[test]
    fn maurer_cartan_and_nilpotency() {
        let f = a4();
        let mc = NCochain::from_fn(Layout::Joint, 0, 3, 4, 4, |t| unit(4, t[0]).into_iter().map(|x| -x).collect());
        let d = fa_coboundary_trivial(&f, &mc).unwrap();
        for t in d.basis_tuples() {
            assert_eq!(d.get(&t), f.bracket().image(&t));
        }
        assert!(fa_coboundary_trivial(&f, &d).unwrap().is_zero());
        for p in 0..=2 {
            let a = random(Layout::Joint, p, &f, 1, 11 + p as u64);
            let da = fa_coboundary_trivial(&f, &a).unwrap();
            // the image carries the joint symmetry of the next cochain space
            da.check_layout_of(|args| dot_terms(&f, &a, args)).unwrap();
            assert!(fa_coboundary_trivial(&f, &da).unwrap().is_zero(), "p={p}");
        }
        // broken algebra: nilpotency fails
        let mut b = f.bracket().clone();
        b.add_to(&[0, 1, 2], 0, &q(1)).unwrap();
        let broken = FilippovAlgebra::new(b).unwrap();
        let a = random(Layout::Joint, 0, &broken, 1, 3);
        let d2 = fa_coboundary_trivial(&broken, &fa_coboundary_trivial(&broken, &a).unwrap()).unwrap();
        assert!(!d2.is_zero());
    }

    #[test]
    fn homology_duality() {
        let f = a4();
        let mut c1 = NChain::zero(1, 3, 4);
        c1.add_term(&[0, 1, 2], &q(1));
        let b = fa_homology_boundary(&f, &c1).unwrap();
        // ∂(𝒳,Z) = −[X₁,X₂,Z] with the signs of the general formula
        let img = f.bracket().image(&[0, 1, 2]);
        for (k, v) in img.iter().enumerate() {
            assert_eq!(b.terms.get(&vec![k]).cloned().unwrap_or_default(), -v);
        }
        for p in 1..=3 {
            let mut g = filler(50 + p as u64);
            let mut c = NChain::zero(p, 3, 4);
            for t in canonical_tuples(&block_sizes(Layout::Joint, p, 3), 4).into_iter().step_by(3) {
                c.add_term(&t, &g());
            }
            let bc = fa_homology_boundary(&f, &c).unwrap();
            if p >= 2 {
                assert!(fa_homology_boundary(&f, &bc).unwrap().is_zero());
            }
            let alpha = random(Layout::Joint, p - 1, &f, 1, 90 + p as u64);
            let lhs = bc.pair(&alpha);
            let rhs = c.pair(&fa_coboundary_trivial(&f, &alpha).unwrap());
            assert_eq!(lhs, rhs, "p={p}");
        }
    }

    #[test]
    fn module_complex() {
        let f = a4();
        let ad = FaModule::adjoint(&f);
        assert!(ad.validate(&f).is_ok());
        let a = random(Layout::Blocks, 1, &f, 4, 5);
        let da = fa_coboundary_module(&f, &ad, &a).unwrap();
        assert!(fa_coboundary_module(&f, &ad, &da).unwrap().is_zero());
        let a0 = random(Layout::Blocks, 0, &f, 4, 6);
        let d0 = fa_coboundary_module(&f, &ad, &a0).unwrap();
        assert!(fa_coboundary_module(&f, &ad, &d0).unwrap().is_zero());
        let tr = FaModule::trivial(&f, 2);
        let b = random(Layout::Blocks, 1, &f, 2, 8);
        let db = fa_coboundary_module(&f, &tr, &b).unwrap();
        assert!(fa_coboundary_module(&f, &tr, &db).unwrap().is_zero());
        // a non-representation is rejected
        let bad = FaModule::new(&f, 4, f.labels().iter().map(|_| Matrix::identity(4)).collect()).unwrap();
        assert!(matches!(fa_coboundary_module(&f, &bad, &a), Err(NCohomologyError::NotRepresentation(_))));
    }

    #[test]
    fn module_complex_for_lie_algebras_is_chevalley_eilenberg() {
        let su2 = LieAlgebra::su2();
        let f = FilippovAlgebra::new(su2.bracket().clone()).unwrap();
        let rep = Representation::adjoint(&su2);
        let mut g = filler(4);
        let om = Cochain::from_fn(2, 3, 3, |_, _| g());
        let s = coboundary(&su2, &rep, &om).unwrap();
        let as_n = NCochain::from_fn(Layout::Blocks, 2, 2, 3, 3, |t| (0..3).map(|a| om.get(a, t)).collect());
        let d = fa_coboundary_module(&f, &FaModule::adjoint(&f), &as_n).unwrap();
        for t in crate::combinatorics::all_tuples(3, 3) {
            assert_eq!(d.get(&t), (0..3).map(|a| s.get(a, &t)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn deformation_complex() {
        let f = a4();
        let a0 = random(Layout::Joint, 0, &f, 4, 21);
        let d0 = fa_coboundary_deformation(&f, &a0).unwrap();
        d0.check_layout_of(|args| deformation_coboundary_at(&f, &a0, args)).unwrap();
        assert!(fa_coboundary_deformation(&f, &d0).unwrap().is_zero());
        // p=1 equals the written-out one-cocycle expression
        let a1 = random(Layout::Joint, 1, &f, 4, 22);
        let d1 = fa_coboundary_deformation(&f, &a1).unwrap();
        for t in d1.basis_tuples().into_iter().step_by(5) {
            let (x, y, z) = (&t[0..2], &t[2..4], t[4]);
            let mut exp = f.ad_label(x).mul_vec(&a1.get(&[y[0], y[1], z]));
            let sub = |e: &mut Vec<Q>, v: Vec<Q>, s: i64| {
                for (a, b) in e.iter_mut().zip(v) {
                    *a += b * q(s);
                }
            };
            sub(&mut exp, f.ad_label(y).mul_vec(&a1.get(&[x[0], x[1], z])), -1);
            // (α(𝒳,·)·𝒴)·Z
            for e in 0..2 {
                let mut xs: Vec<Vec<Q>> = y.iter().map(|&i| unit(4, i)).collect();
                xs[e] = a1.get(&[x[0], x[1], y[e]]);
                xs.push(unit(4, z));
                sub(&mut exp, f.bracket().apply(&xs), -1);
            }
            // −α(𝒳·𝒴,Z) − α(𝒴,𝒳·Z) + α(𝒳,𝒴·Z)
            for e in 0..2 {
                let v = f.bracket().image(&[x[0], x[1], y[e]]);
                sub(&mut exp, a1.eval_slot(&[y[0], y[1], z], e, &v), -1);
            }
            sub(&mut exp, a1.eval_slot(&[y[0], y[1], z], 2, &f.bracket().image(&[x[0], x[1], z])), -1);
            sub(&mut exp, a1.eval_slot(&[x[0], x[1], z], 2, &f.bracket().image(&[y[0], y[1], z])), 1);
            assert_eq!(d1.get(&t), exp);
        }
    }

    #[test]
    fn deformation_complex_at_n2_is_leibniz() {
        let su2 = LieAlgebra::su2();
        let f = FilippovAlgebra::new(su2.bracket().clone()).unwrap();
        let lb = LeibnizAlgebra::from_lie(&su2);
        let rho = LeibnizModule::adjoint(&lb);
        for p in 0..=2 {
            let a = random(Layout::Joint, p, &f, 3, 30 + p as u64);
            let d = fa_coboundary_deformation(&f, &a).unwrap();
            let raw = NCochain::from_fn(Layout::Raw, p + 1, 2, 3, 3, |t| a.get(t));
            let s = leibniz_coboundary(&lb, &rho, &raw).unwrap();
            for t in crate::combinatorics::all_tuples(3, p + 2) {
                assert_eq!(d.get(&t), s.get(&t), "p={p} t={t:?}");
            }
        }
    }

    #[test]
    fn cohomology_numbers() {
        let f = a4();
        let triv = fa_cohomology_dims(&f, &FaComplex::Trivial, 1).unwrap();
        assert_eq!(triv.h(1), 0);
        let def = fa_cohomology_dims(&f, &FaComplex::Deformation, 1).unwrap();
        assert_eq!(def.h(1), 0);
        let ab = FilippovAlgebra::abelian(3, 3);
        let alpha = nhw_cocycle(1);
        assert!(fa_coboundary_trivial(&ab, &alpha).unwrap().is_zero());
        assert!(fa_coboundary_primitive(&ab, &FaComplex::Trivial, &alpha).is_none());
        let nhw = fa_central_extension(&ab, &alpha).unwrap();
        assert_eq!(nhw.f(&[0, 1, 2], 3), q(1));
        assert_eq!(nhw.bracket().support().count(), 1);
        for form in FiForm::ALL {
            assert!(nhw.check_fi(form).is_ok());
        }
        let nhw2 = fa_central_extension(&FilippovAlgebra::abelian(3, 6), &nhw_cocycle(2)).unwrap();
        assert!(nhw2.check_fi(FiForm::Derivation).is_ok());
    }

    #[test]
    fn extensions_and_trivialization() {
        let f = a4();
        let beta = NCochain::from_fn(Layout::Joint, 0, 3, 4, 1, |t| vec![q(t[0] as i64 + 1)]);
        let alpha = fa_coboundary_trivial(&f, &beta).unwrap();
        let tr = fa_trivialize_extension(&f, &alpha).unwrap().unwrap();
        assert_eq!(tr.split.bracket(), f.direct_sum(&FilippovAlgebra::abelian(3, 1)).bracket());
        let zero = NCochain::zero(Layout::Joint, 1, 3, 4, 1);
        assert_eq!(fa_central_extension(&f, &zero).unwrap().bracket(), f.direct_sum(&FilippovAlgebra::abelian(3, 1)).bracket());
        // every one-cochain of A₄ is a coboundary; adding a central direction leaves room for non-cocycles
        let g = f.direct_sum(&FilippovAlgebra::abelian(3, 1));
        let nc = random(Layout::Joint, 1, &g, 1, 12);
        assert!(!fa_coboundary_trivial(&g, &nc).unwrap().is_zero());
        assert!(matches!(fa_central_extension(&g, &nc), Err(NCohomologyError::NotCocycle(_))));
    }

    #[test]
    fn obstructions() {
        let f = a4();
        let a0 = random(Layout::Joint, 0, &f, 4, 41);
        let a1 = fa_coboundary_deformation(&f, &a0).unwrap();
        let r = fa_deformation_obstruction(&f, &a1).unwrap();
        r.gamma.check_layout_of(|args| obstruction_at(&f, &a1, args)).unwrap();
        assert!(r.cocycle.is_ok());
        assert!(r.is_trivial());
        let z = NCochain::zero(Layout::Joint, 1, 3, 4, 4);
        assert!(fa_deformation_obstruction(&f, &z).unwrap().gamma.is_zero());
        // every deformation one-cocycle of A₄ is a coboundary and unobstructed
        for v in fa_coboundary_matrix(&f, &FaComplex::Deformation, 1).nullspace() {
            let c = NCochain::from_vector(Layout::Joint, 1, 3, 4, 4, &v);
            assert!(fa_coboundary_primitive(&f, &FaComplex::Deformation, &c).is_some());
            assert!(fa_deformation_obstruction(&f, &c).unwrap().is_trivial());
        }
        // abelian algebra: every cochain is a cocycle and B² = 0
        let ab = FilippovAlgebra::abelian(3, 4);
        let a = random(Layout::Joint, 1, &ab, 4, 42);
        let r = fa_deformation_obstruction(&ab, &a).unwrap();
        assert!(r.cocycle.is_ok());
        assert!(!r.gamma.is_zero());
        assert!(!r.is_trivial());
        // the A₄ bracket itself is unobstructed on the abelian algebra: γ is its Filippov residual
        let fa = NCochain::from_fn(Layout::Joint, 1, 3, 4, 4, |t| f.bracket().image(t));
        assert!(fa_deformation_obstruction(&ab, &fa).unwrap().gamma.is_zero());
    }

    fn example_leibniz() -> LeibnizAlgebra {
        // [e₃,e₂] = e₂, [e₃,e₃] = e₁: left multiplications are derivations, bracket not antisymmetric
        LeibnizAlgebra::from_entries(3, &[(2, 1, 1, q(1)), (2, 2, 0, q(1))])
    }

    #[test]
    fn leibniz_complex() {
        let l = example_leibniz();
        assert!(l.check_leibniz_identity().is_ok());
        let ad = LeibnizModule::adjoint(&l);
        assert!(ad.validate(&l).is_ok());
        for p in 0..=3 {
            let mut g = filler(60 + p as u64);
            let om = NCochain::from_fn(Layout::Raw, p, 2, 3, 3, |_| (0..3).map(|_| g()).collect());
            let s = leibniz_coboundary(&l, &ad, &om).unwrap();
            assert!(leibniz_coboundary(&l, &ad, &s).unwrap().is_zero(), "p={p}");
        }
        // two-cochains: term-by-term two-cocycle expression
        let mut g = filler(70);
        let om = NCochain::from_fn(Layout::Raw, 2, 2, 3, 3, |_| (0..3).map(|_| g()).collect());
        let s = leibniz_coboundary(&l, &ad, &om).unwrap();
        for t in crate::combinatorics::all_tuples(3, 3) {
            let (x1, x2, x3) = (t[0], t[1], t[2]);
            let mut e = ad.left[x1].mul_vec(&om.get(&[x2, x3]));
            let add = |e: &mut Vec<Q>, v: Vec<Q>, c: i64| {
                for (a, b) in e.iter_mut().zip(v) {
                    *a += b * q(c);
                }
            };
            add(&mut e, ad.left[x2].mul_vec(&om.get(&[x1, x3])), -1);
            add(&mut e, ad.right[x3].mul_vec(&om.get(&[x1, x2])), -1);
            add(&mut e, om.eval_slot(&[0, x3], 0, &l.image(x1, x2)), -1);
            add(&mut e, om.eval_slot(&[x2, 0], 1, &l.image(x1, x3)), -1);
            add(&mut e, om.eval_slot(&[x1, 0], 1, &l.image(x2, x3)), 1);
            assert_eq!(s.get(&t), e);
        }
        // broken identity: s² fails
        let mut broken = l.clone();
        broken.set(1, 2, 0, q(1));
        assert!(broken.check_leibniz_identity().is_err());
        let tr = LeibnizModule::trivial(&broken, 1);
        let om1 = NCochain::from_fn(Layout::Raw, 1, 2, 3, 1, |t| vec![q(t[0] as i64 + 1)]);
        let s1 = leibniz_coboundary(&broken, &tr, &om1).unwrap();
        assert!(!leibniz_coboundary(&broken, &tr, &s1).unwrap().is_zero());
    }

    #[test]
    fn symmetric_representations_give_the_lie_formula() {
        let su2 = LieAlgebra::su2();
        let lb = LeibnizAlgebra::from_lie(&su2);
        assert!(lb.check_leibniz_identity().is_ok());
        let rho = LeibnizModule::symmetric(su2.ad_matrices());
        assert!(rho.validate(&lb).is_ok());
        let mut g = filler(80);
        let om = NCochain::from_fn(Layout::Raw, 2, 2, 3, 3, |_| (0..3).map(|_| g()).collect());
        assert_eq!(leibniz_coboundary(&lb, &rho, &om).unwrap(), leibniz_coboundary_symmetric(&lb, &rho, &om).unwrap());
        // on antisymmetric cochains it is the Chevalley–Eilenberg coboundary
        let mut g = filler(81);
        let ce = Cochain::from_fn(2, 3, 3, |_, _| g());
        let raw = NCochain::from_fn(Layout::Raw, 2, 2, 3, 3, |t| (0..3).map(|a| ce.get(a, t)).collect());
        let s = leibniz_coboundary(&lb, &rho, &raw).unwrap();
        let s_ce = coboundary(&su2, &Representation::adjoint(&su2), &ce).unwrap();
        for t in crate::combinatorics::all_tuples(3, 3) {
            assert_eq!(s.get(&t), (0..3).map(|a| s_ce.get(a, &t)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn leibniz_cohomology_of_a_lie_algebra() {
        // for su(2) with the adjoint action the Leibniz groups vanish in low degree
        let lb = LeibnizAlgebra::from_lie(&LieAlgebra::su2());
        let r = leibniz_cohomology_dims(&lb, &LeibnizModule::adjoint(&lb), 1).unwrap();
        assert_eq!((r.h(0), r.h(1)), (0, 0));
        let ab = LeibnizAlgebra::zero(2);
        let r = leibniz_cohomology_dims(&ab, &LeibnizModule::trivial(&ab, 1), 2).unwrap();
        assert_eq!((r.h(0), r.h(1), r.h(2)), (1, 2, 4));
    }

    #[test]
    fn leibniz_extensions() {
        let ab = LeibnizAlgebra::zero(2);
        let tr = LeibnizModule::trivial(&ab, 1);
        let mut om = NCochain::zero(Layout::Raw, 2, 2, 2, 1);
        om.set(&[0, 1], vec![q(1)]).unwrap();
        om.set(&[1, 1], vec![q(2)]).unwrap();
        let ext = leibniz_extension(&ab, &tr, &om).unwrap();
        assert!(ext.check_leibniz_identity().is_ok());
        assert_eq!(ext.c(1, 1, 2), &q(2));

        let l = example_leibniz();
        let ad = LeibnizModule::adjoint(&l);
        let om1 = NCochain::from_fn(Layout::Raw, 1, 2, 3, 3, |t| vec![q(1), qf(t[0] as i64, 2), q(-1)]);
        let (split, semidirect) = leibniz_split(&l, &ad, &om1).unwrap();
        assert!(split.check_leibniz_identity().is_ok());
        assert_eq!(split, semidirect);
        let mut g = filler(90);
        let cocycle = leibniz_coboundary(&l, &ad, &NCochain::from_fn(Layout::Raw, 1, 2, 3, 3, |_| (0..3).map(|_| g()).collect())).unwrap();
        assert!(leibniz_equivalent_extensions(&l, &ad, &cocycle, &om1).unwrap());
        let tr3 = LeibnizModule::trivial(&l, 2);
        let zero2 = NCochain::zero(Layout::Raw, 2, 2, 3, 2);
        let ds = leibniz_extension(&l, &tr3, &zero2).unwrap();
        assert!(ds.check_leibniz_identity().is_ok());
        let mut g = filler(91);
        let bad = NCochain::from_fn(Layout::Raw, 2, 2, 3, 3, |_| (0..3).map(|_| g()).collect());
        assert!(!leibniz_coboundary(&l, &ad, &bad).unwrap().is_zero());
        assert!(matches!(leibniz_extension(&l, &ad, &bad), Err(NCohomologyError::NotCocycle(_))));
    }
}
