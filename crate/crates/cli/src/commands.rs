//! The four commands, callable in-process. Each takes file text and returns either a
//! report or an [`InputError`].

use crate::error::InputError;
use crate::format::{header_kind, AlgebraFile, Structure};
use crate::rep_file::{parse_rep, RepFile};
use crate::report::RunReport;
use crate::tensor_file::{emit_tensor, parse_tensor};
use nary_core::combinatorics::{binomial, combinations};
use nary_core::filippov::{clifford_realization, simple_fa, FiForm, FilippovAlgebra};
use nary_core::gla::{coderivation_apply, gla_from_cocycle, GLAlgebra, Multivector};
use nary_core::lie::{cocycle_from_invariant_poly, sun_generators, symmetrized_trace_poly};
use nary_core::lie_cohomology::cohomology_dims;
use nary_core::nary_cohomology::{
    fa_central_extension, fa_coboundary_matrix, fa_cohomology_dims, leibniz_coboundary_matrix,
    leibniz_cohomology_dims, nhw_cocycle, FaComplex, FaModule, Layout, LeibnizModule,
};
use nary_core::poisson::{gps_check, np_check, schouten_bracket};
use nary_core::{CoboundaryMatrix, CohomologyReport, LieAlgebra, Matrix, Poly, PolyMultivector, Representation, Q};
use serde::Serialize;

/// Default cap on generated and analyzed dimensions; `NARY_MAX_DIM` overrides it.
pub const DEFAULT_MAX_DIM: usize = 16;

/// Largest cochain space whose coboundary enters the nilpotency check.
const NILPOTENCY_MAX_COCHAINS: usize = 2000;

/// Largest number of monomials fed through the coderivation twice.
const CODERIVATION_MAX_MONOMIALS: usize = 5000;

pub fn max_dim() -> usize {
    std::env::var("NARY_MAX_DIM").ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_MAX_DIM)
}

fn cap(what: &str, dim: usize) -> Result<(), InputError> {
    let m = max_dim();
    if dim > m {
        return Err(InputError::plain(format!("{what} has dimension {dim}, above the cap {m} (set NARY_MAX_DIM to raise it)")));
    }
    Ok(())
}

fn load_algebra(text: &str) -> Result<(AlgebraFile, Structure), InputError> {
    match header_kind(text) {
        Some("tensor") => return Err(InputError::at(1, 1, "this is a tensor file; use the poisson command".into())),
        Some("representation") => {
            return Err(InputError::at(1, 1, "this is a representation file; pass it with --rep".into()));
        }
        _ => {}
    }
    let file = AlgebraFile::parse(text)?;
    let s = file.to_structure()?;
    Ok((file, s))
}

// ---------------------------------------------------------------- check

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identity,
    Metric,
    Cohomology,
    All,
}

impl Suite {
    fn has(self, s: Suite) -> bool {
        self == Suite::All || self == s
    }
}

fn check_result(c: nary_core::structure::Check) -> Result<Option<String>, String> {
    c.map(|_| None).map_err(|v| v.to_string())
}

pub fn cmd_check(text: &str, suite: Suite) -> Result<RunReport, InputError> {
    let (_, s) = load_algebra(text)?;
    let mut r = RunReport::default();
    if suite.has(Suite::Identity) {
        identity_suite(&s, &mut r);
    }
    if suite.has(Suite::Metric) {
        metric_suite(&s, &mut r);
    }
    if suite.has(Suite::Cohomology) {
        cohomology_suite(&s, &mut r);
    }
    Ok(r)
}

fn identity_suite(s: &Structure, r: &mut RunReport) {
    match s {
        Structure::Lie(l) => {
            r.run("jacobi", || check_result(l.check_jacobi()));
            r.run("gji", || check_result(GLAlgebra::from(l).check_gji()));
        }
        Structure::Gla(g) => r.run("gji", || check_result(g.check_gji())),
        Structure::Filippov(f) => {
            for form in FiForm::ALL {
                r.run(&format!("fi.{}", form.name()), || check_result(f.check_fi(form)));
            }
        }
        Structure::Leibniz(l) => r.run("leibniz-identity", || check_result(l.check_leibniz_identity())),
    }
}

fn metric_suite(s: &Structure, r: &mut RunReport) {
    match s {
        Structure::Lie(l) => r.run("killing-invariance", || {
            let rep = l.check_metric_invariance(&l.killing_form());
            check_result(rep.invariant).map(|_| Some(format!("nondegenerate: {}", rep.nondegenerate)))
        }),
        Structure::Filippov(f) => match f.metric() {
            None => r.skip("metric", "no metric in the file"),
            Some(g) => {
                let g = g.clone();
                let rep = f.check_metric(&g);
                match rep {
                    Err(e) => r.run("metric", || Err(e.to_string())),
                    Ok(rep) => {
                        r.run("metric.invariance", || check_result(rep.invariance.clone()));
                        r.run("metric.form-invariance", || check_result(rep.form_invariance.clone()));
                    }
                }
            }
        },
        Structure::Gla(_) | Structure::Leibniz(_) => r.skip("metric", "no metric checks for this kind"),
    }
}

/// First nonzero entry of `next · prev`.
fn composite_violation(next: &Matrix<Q>, prev: &Matrix<Q>) -> Result<(), String> {
    if next.cols() != prev.rows() {
        return Err(format!("shape mismatch {}x{} · {}x{}", next.rows(), next.cols(), prev.rows(), prev.cols()));
    }
    let prod = next.mul(prev);
    for i in 0..prod.rows() {
        for j in 0..prod.cols() {
            if !num_traits::Zero::is_zero(prod.get(i, j)) {
                return Err(format!("entry ({}, {}) of the square is {}", i + 1, j + 1, prod.get(i, j)));
            }
        }
    }
    Ok(())
}

/// Checks `s_{p+1} s_p = 0` for the degrees whose `C^{p+2}` stays under the size cap.
fn nilpotency(
    r: &mut RunReport,
    name: &str,
    cochain_dim: impl Fn(usize) -> usize,
    matrix: impl Fn(usize) -> Result<Matrix<Q>, String>,
) {
    let degrees: Vec<usize> = (0..2).filter(|&p| cochain_dim(p + 2) <= NILPOTENCY_MAX_COCHAINS).collect();
    if degrees.is_empty() {
        r.skip(name, "cochain spaces above the size cap");
        return;
    }
    r.run(name, || {
        let mut prev = matrix(degrees[0])?;
        for &p in &degrees {
            let next = matrix(p + 1)?;
            composite_violation(&next, &prev).map_err(|e| format!("degree {p}: {e}"))?;
            prev = next;
        }
        Ok(Some(format!("degrees {:?}", degrees)))
    });
}

fn fa_space(fa: &FilippovAlgebra, layout: Layout, dim_v: usize, p: usize) -> usize {
    nary_core::nary_cohomology::block_sizes(layout, p, fa.arity())
        .iter()
        .map(|&b| binomial(fa.dim(), b))
        .product::<usize>()
        * dim_v
}

fn cohomology_suite(s: &Structure, r: &mut RunReport) {
    match s {
        Structure::Lie(l) => {
            let ad = Representation::adjoint(l);
            let d = l.dim();
            nilpotency(r, "nilpotency.ad", |p| binomial(d, p) * d, |p| {
                CoboundaryMatrix::build(l, &ad, p).map(|m| m.matrix).map_err(|e| e.to_string())
            });
        }
        Structure::Filippov(f) => {
            nilpotency(r, "nilpotency.trivial", |p| fa_space(f, Layout::Joint, 1, p), |p| {
                Ok(fa_coboundary_matrix(f, &FaComplex::Trivial, p))
            });
            nilpotency(r, "nilpotency.deformation", |p| fa_space(f, Layout::Joint, f.dim(), p), |p| {
                Ok(fa_coboundary_matrix(f, &FaComplex::Deformation, p))
            });
        }
        Structure::Leibniz(l) => {
            let ad = LeibnizModule::adjoint(l);
            let d = l.dim();
            nilpotency(r, "nilpotency.ad", |p| d.pow(p as u32) * d, |p| Ok(leibniz_coboundary_matrix(l, &ad, p)));
        }
        Structure::Gla(g) => coderivation_square(g, r),
    }
}

fn coderivation_square(g: &GLAlgebra, r: &mut RunReport) {
    let n = g.arity();
    let d = g.dim();
    let lowest = 2 * n - 1;
    let mut degrees = Vec::new();
    let mut total = 0;
    for k in lowest..=d {
        total += binomial(d, k);
        if total > CODERIVATION_MAX_MONOMIALS {
            break;
        }
        degrees.push(k);
    }
    if degrees.is_empty() {
        r.skip("coderivation-square", "no monomials of degree 2n−1 within the size cap");
        return;
    }
    r.run("coderivation-square", || {
        for &k in &degrees {
            for t in combinations(d, k) {
                let once = coderivation_apply(g.bracket(), &Multivector::monomial(d, &t));
                let twice = coderivation_apply(g.bracket(), &once);
                if !twice.is_zero() {
                    let one_based: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
                    return Err(format!("nonzero on the monomial ({})", one_based.join(",")));
                }
            }
        }
        Ok(Some(format!("degrees {:?}", degrees)))
    });
}

// ---------------------------------------------------------------- generate

#[derive(Clone, Debug)]
pub enum GenerateSpec {
    Su { n: usize },
    SimpleFa { n: usize, signs: Vec<i32> },
    GlaFromSu { n: usize, m: usize },
    Heisenberg,
    Nhw { copies: usize },
    Clifford { n: usize },
    Abelian { arity: usize, dim: usize },
    /// Linear tensor `c_I{}^σ x_σ` of an algebra file.
    LinearTensor { algebra: String },
    /// Sum of `blocks` constant `n`-vectors on disjoint coordinate blocks.
    Nambu { n: usize, blocks: usize },
    /// Negates the `entry`-th (1-based) constant of an algebra file.
    Flip { algebra: String, entry: usize },
}

pub fn parse_signs(s: &str) -> Result<Vec<i32>, InputError> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(InputError::plain(format!("signs are `+`/`-`, found `{c}`"))),
        })
        .collect()
}

pub fn cmd_generate(spec: &GenerateSpec) -> Result<String, InputError> {
    let fa_err = |e: nary_core::filippov::FilippovError| InputError::plain(e.to_string());
    let s = match spec {
        GenerateSpec::Su { n } => {
            if *n < 2 {
                return Err(InputError::plain("su(n) needs n ≥ 2".into()));
            }
            cap("su(n)", n * n - 1)?;
            Structure::Lie(sun_generators(*n).algebra)
        }
        GenerateSpec::SimpleFa { n, signs } => {
            cap("the simple Filippov algebra", n + 1)?;
            if signs.len() != n + 1 {
                return Err(InputError::plain(format!("need {} signs for n = {n}", n + 1)));
            }
            Structure::Filippov(simple_fa(*n, signs).map_err(fa_err)?)
        }
        GenerateSpec::GlaFromSu { n, m } => {
            if *n < 2 {
                return Err(InputError::plain("su(n) needs n ≥ 2".into()));
            }
            cap("su(n)", n * n - 1)?;
            if *m < 2 || m > n {
                return Err(InputError::plain(format!("su({n}) has primitive invariants of order 2..={n}, not {m}")));
            }
            let b = sun_generators(*n);
            let k = symmetrized_trace_poly(&b.representation, *m).map_err(|e| InputError::plain(e.to_string()))?;
            let omega = cocycle_from_invariant_poly(&b.algebra, &k).map_err(|e| InputError::plain(e.to_string()))?;
            Structure::Gla(gla_from_cocycle(&b.algebra, &omega).map_err(|e| InputError::plain(e.to_string()))?)
        }
        GenerateSpec::Heisenberg => Structure::Lie(LieAlgebra::heisenberg()),
        GenerateSpec::Nhw { copies } => {
            if *copies == 0 {
                return Err(InputError::plain("need at least one copy".into()));
            }
            cap("the Nambu–Heisenberg–Weyl algebra", 3 * copies + 1)?;
            let base = FilippovAlgebra::abelian(3, 3 * copies);
            Structure::Filippov(
                fa_central_extension(&base, &nhw_cocycle(*copies)).map_err(|e| InputError::plain(e.to_string()))?,
            )
        }
        GenerateSpec::Clifford { n } => {
            cap("the Clifford realization", n + 1)?;
            let rep = clifford_realization(*n).map_err(fa_err)?;
            let fa = rep.induced.ok_or_else(|| InputError::plain("the gamma brackets do not close".into()))?;
            Structure::Filippov(fa)
        }
        GenerateSpec::Abelian { arity, dim } => {
            cap("the abelian algebra", *dim)?;
            if *arity < 2 {
                return Err(InputError::plain("arity must be at least 2".into()));
            }
            if *arity == 2 {
                Structure::Lie(LieAlgebra::abelian(*dim))
            } else {
                Structure::Filippov(FilippovAlgebra::abelian(*arity, *dim))
            }
        }
        GenerateSpec::LinearTensor { algebra } => {
            let (file, s) = load_algebra(algebra)?;
            let b = match &s {
                Structure::Lie(l) => l.bracket().clone(),
                Structure::Gla(g) => g.bracket().clone(),
                Structure::Filippov(f) => f.bracket().clone(),
                Structure::Leibniz(_) => return Err(InputError::plain("Leibniz brackets are not antisymmetric".into())),
            };
            cap("the tensor", file.dim)?;
            return Ok(emit_tensor(&PolyMultivector::linear_from_bracket(&b)));
        }
        GenerateSpec::Nambu { n, blocks } => {
            let d = n * blocks;
            if *n == 0 || *blocks == 0 {
                return Err(InputError::plain("order and block count must be positive".into()));
            }
            cap("the tensor", d)?;
            let mut lam = PolyMultivector::zero(*n, d);
            for b in 0..*blocks {
                let idx: Vec<usize> = (b * n..(b + 1) * n).collect();
                lam.set(&idx, Poly::constant(d, nary_core::q(1))).map_err(|e| InputError::plain(e.to_string()))?;
            }
            return Ok(emit_tensor(&lam));
        }
        GenerateSpec::Flip { algebra, entry } => {
            let mut file = AlgebraFile::parse(algebra)?;
            let count = file.entries.len();
            let e = file
                .entries
                .get_mut(entry.wrapping_sub(1))
                .ok_or_else(|| InputError::plain(format!("entry {entry} outside 1..={count}")))?;
            e.value = -e.value.clone();
            return Ok(file.emit());
        }
    };
    Ok(AlgebraFile::from_structure(&s).emit())
}

// ---------------------------------------------------------------- cohomology

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Trivial,
    Module,
    Deformation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepChoice {
    Adjoint,
    /// Trivial action on a space of the given dimension.
    Trivial(usize),
    /// Text of a representation file.
    File(String),
}

/// One JSON line per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeLine {
    pub p: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

fn lines_of(report: &CohomologyReport) -> Vec<DegreeLine> {
    report
        .degrees
        .iter()
        .map(|d| DegreeLine {
            p: d.p,
            cochains: d.cochains,
            cocycles: d.cocycles,
            coboundaries: d.coboundaries,
            cohomology: d.cohomology,
        })
        .collect()
}

fn rep_for_labels(rep: &RepFile, arity: usize, dim: usize) -> Result<(), InputError> {
    if rep.label_arity != arity || rep.dim != dim {
        return Err(InputError::plain(format!(
            "representation is indexed by {}-labels on dimension {}, the algebra needs {}-labels on dimension {}",
            rep.label_arity, rep.dim, arity, dim
        )));
    }
    Ok(())
}

/// Cohomology dimensions `H^0…H^{p_max}`.
pub fn cmd_cohomology(
    text: &str,
    complex: Option<ComplexKind>,
    rep: Option<RepChoice>,
    p_max: usize,
) -> Result<Vec<DegreeLine>, InputError> {
    let (file, s) = load_algebra(text)?;
    cap("the algebra", file.dim)?;
    let complex = complex.unwrap_or(match (&s, &rep) {
        (_, Some(_)) => ComplexKind::Module,
        (Structure::Filippov(_), None) => ComplexKind::Trivial,
        _ => ComplexKind::Module,
    });
    if complex != ComplexKind::Module && rep.is_some() {
        return Err(InputError::plain("--rep applies to the module complex only".into()));
    }
    let rep = rep.unwrap_or(RepChoice::Adjoint);
    let coh = |e: String| InputError::plain(e);
    let report = match &s {
        Structure::Lie(l) => {
            let rho = match (complex, rep) {
                (ComplexKind::Trivial, _) => Representation::trivial(l, 1),
                (ComplexKind::Deformation, _) | (_, RepChoice::Adjoint) => Representation::adjoint(l),
                (_, RepChoice::Trivial(k)) => Representation::trivial(l, k),
                (_, RepChoice::File(t)) => {
                    let rf = parse_rep(&t)?;
                    rep_for_labels(&rf, 1, l.dim())?;
                    let rho = Representation::new(l.clone(), rf.ordered()).map_err(|e| coh(e.to_string()))?;
                    rho.check_closure().map_err(|(idx, v)| {
                        let one: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
                        coh(format!("representation file inconsistent with the algebra: closure fails at ({}) by {v}", one.join(",")))
                    })?;
                    rho
                }
            };
            cohomology_dims(l, &rho, p_max).map_err(|e| coh(e.to_string()))?
        }
        Structure::Filippov(f) => {
            let cx = match (complex, rep) {
                (ComplexKind::Trivial, _) => FaComplex::Trivial,
                (ComplexKind::Deformation, _) => FaComplex::Deformation,
                (_, RepChoice::Adjoint) => FaComplex::Module(FaModule::adjoint(f)),
                (_, RepChoice::Trivial(k)) => FaComplex::Module(FaModule::trivial(f, k)),
                (_, RepChoice::File(t)) => {
                    let rf = parse_rep(&t)?;
                    rep_for_labels(&rf, f.arity() - 1, f.dim())?;
                    let m = FaModule::new(f, rf.module_dim, rf.ordered()).map_err(|e| coh(e.to_string()))?;
                    m.validate(f)
                        .map_err(|v| coh(format!("representation file inconsistent with the algebra: {v}")))?;
                    FaComplex::Module(m)
                }
            };
            fa_cohomology_dims(f, &cx, p_max).map_err(|e| coh(e.to_string()))?
        }
        Structure::Leibniz(l) => {
            let rho = match (complex, rep) {
                (ComplexKind::Trivial, _) => LeibnizModule::trivial(l, 1),
                (ComplexKind::Deformation, _) | (_, RepChoice::Adjoint) => LeibnizModule::adjoint(l),
                (_, RepChoice::Trivial(k)) => LeibnizModule::trivial(l, k),
                (_, RepChoice::File(_)) => {
                    return Err(coh("Leibniz modules need left and right actions; use ad or trivial".into()));
                }
            };
            leibniz_cohomology_dims(l, &rho, p_max).map_err(|e| coh(e.to_string()))?
        }
        Structure::Gla(_) => {
            return Err(coh("cohomology is computed for lie, filippov and leibniz files".into()));
        }
    };
    Ok(lines_of(&report))
}

// ---------------------------------------------------------------- poisson

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoissonCheck {
    Gps,
    Np,
    SnbSelf,
}

fn fmt_tuple(t: &[usize]) -> String {
    t.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
}

fn fmt_split(t: &[usize], at: usize) -> String {
    format!("({} | {})", fmt_tuple(&t[..at]), fmt_tuple(&t[at..]))
}

fn leading(p: &Poly) -> String {
    let (e, c) = p.terms().next().expect("nonzero residual");
    Poly::monomial(e.clone(), c.clone()).to_string()
}

pub fn cmd_poisson(text: &str, check: PoissonCheck) -> Result<RunReport, InputError> {
    if header_kind(text) != Some("tensor") {
        return Err(InputError::at(1, 1, "expected a tensor file".into()));
    }
    let lam = parse_tensor(text)?;
    let perr = |e: nary_core::poisson::PoissonError| InputError::plain(e.to_string());
    let mut r = RunReport::default();
    match check {
        PoissonCheck::Gps => {
            let rep = gps_check(&lam).map_err(perr)?;
            let cex = rep
                .first_violation
                .as_ref()
                .map(|(t, p)| format!("alternation component ({}) = {}, first monomial {}", fmt_tuple(t), p, leading(p)));
            let verdict = |ok: bool| if ok { Ok(None) } else { Err(cex.clone().unwrap_or_default()) };
            r.run("gps.schouten", || verdict(rep.schouten_zero));
            r.run("gps.coordinate", || verdict(rep.coordinate_zero));
            r.run("gps.paths-agree", || if rep.agree() { Ok(None) } else { Err("the two computations differ".into()) });
        }
        PoissonCheck::Np => {
            let rep = np_check(&lam).map_err(perr)?;
            let n = rep.order;
            r.run("np.differential", || match &rep.differential_violation {
                None => Ok(None),
                Some((t, p)) => Err(format!("at {}: residual {}, first monomial {}", fmt_split(t, n - 1), p, leading(p))),
            });
            let hint = rep.decomposable_hint.as_ref().map(|vs| {
                let parts: Vec<String> = vs
                    .iter()
                    .map(|v| format!("({})", v.iter().map(nary_core::scalar::fmt_q).collect::<Vec<_>>().join(", ")))
                    .collect();
                format!("decomposes as {}", parts.join(" ∧ "))
            });
            r.run("np.algebraic", || match &rep.algebraic_violation {
                None => Ok(hint.clone()),
                Some((t, p)) => Err(format!("at {}: residual {}, first monomial {}", fmt_split(t, n), p, leading(p))),
            });
        }
        PoissonCheck::SnbSelf => {
            let snb = schouten_bracket(&lam, &lam).map_err(perr)?;
            r.run("snb-self", || match snb.components().next() {
                None => Ok(None),
                Some((t, p)) => Err(format!("[Λ,Λ] component ({}) = {}, first monomial {}", fmt_tuple(t), p, leading(p))),
            });
        }
    }
    Ok(r)
}

