//! The `.alg` text format.
//!
//! ```text
//! filippov 3 4 rational
//! 2 3 4 -> 1 : 1
//! metric
//! 1 1 : 1
//! ```
//!
//! The header is `kind arity dim scalar`. Entry lines give one structure constant
//! with 1-based indices; antisymmetric kinds accept only strictly increasing lower
//! tuples. An optional `metric` line starts the upper-triangular metric entries.
//! Blank lines and lines starting with `#` are ignored.
//!
//! Two further kinds share the layout: `tensor` files hold polynomial multivectors
//! (see [`crate::tensor_file`]) and `representation` files hold matrices indexed by
//! basis labels (see [`crate::rep_file`]).

use crate::error::InputError;
use nary_core::filippov::FilippovAlgebra;
use nary_core::gla::GLAlgebra;
use nary_core::scalar::fmt_q;
use nary_core::{Bracket, Gauss, LeibnizAlgebra, LieAlgebra, Matrix, Q};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Content lines with their 1-based line numbers, comments and blanks removed.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    })
}

/// The first word of the header line.
pub fn header_kind(text: &str) -> Option<&str> {
    content_lines(text).next().and_then(|(_, l)| l.split_whitespace().next())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Lie,
    Gla,
    Filippov,
    Leibniz,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::Gla => "gla",
            Kind::Filippov => "filippov",
            Kind::Leibniz => "leibniz",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "lie" => Kind::Lie,
            "gla" => Kind::Gla,
            "filippov" => Kind::Filippov,
            "leibniz" => Kind::Leibniz,
            _ => return None,
        })
    }

    /// Whether lower tuples are antisymmetric.
    pub fn antisymmetric(self) -> bool {
        self != Kind::Leibniz
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Rational,
    Gaussian,
}

impl ScalarKind {
    pub fn name(self) -> &'static str {
        match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Gaussian => "gaussian",
        }
    }
}

/// One structure constant `C_{lower}{}^{upper}` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub lower: Vec<usize>,
    pub upper: usize,
    pub value: Gauss,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub kind: Kind,
    pub arity: usize,
    pub dim: usize,
    pub scalar: ScalarKind,
    /// Sorted by `(lower, upper)`.
    pub entries: Vec<Entry>,
    /// Upper-triangular `(i, j, g_ij)` with `i ≤ j`.
    pub metric: Option<Vec<(usize, usize, Gauss)>>,
}

/// A parsed algebra ready for the checkers.
#[derive(Clone, Debug)]
pub enum Structure {
    Lie(LieAlgebra),
    Gla(GLAlgebra),
    Filippov(FilippovAlgebra),
    Leibniz(LeibnizAlgebra),
}

impl Structure {
    pub fn dim(&self) -> usize {
        match self {
            Structure::Lie(l) => l.dim(),
            Structure::Gla(g) => g.dim(),
            Structure::Filippov(f) => f.dim(),
            Structure::Leibniz(l) => l.dim(),
        }
    }
}

pub(crate) fn column_of(line: &str, token: &str) -> usize {
    // token is a subslice of line
    let offset = token.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

pub(crate) fn parse_index(line_no: usize, line: &str, tok: &str, dim: usize) -> Result<usize, InputError> {
    let i: usize = tok
        .parse()
        .map_err(|_| InputError::at(line_no, column_of(line, tok), format!("expected an index, found `{tok}`")))?;
    if i == 0 || i > dim {
        return Err(InputError::at(line_no, column_of(line, tok), format!("index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

/// Parses `p`, `p/q`, or `p/q±r/s i`.
pub fn parse_scalar(s: &str) -> Option<Gauss> {
    let s = s.trim();
    if let Some(body) = s.strip_suffix('i') {
        let body = body.trim_end();
        // the imaginary part starts at the last sign that is not leading
        let pos = body.char_indices().filter(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k).last()?;
        let re = parse_rational(&body[..pos])?;
        let im = parse_rational(&body[pos..])?;
        return Some(Gauss { re, im });
    }
    Some(Gauss { re: parse_rational(s)?, im: Q::zero() })
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() || s.contains(char::is_whitespace) {
        return None;
    }
    match s.split_once('/') {
        None => s.parse::<num_bigint::BigInt>().ok().map(Q::from_integer),
        Some((p, q)) => {
            let p = p.parse::<num_bigint::BigInt>().ok()?;
            let q = q.parse::<num_bigint::BigInt>().ok()?;
            if q.is_zero() || q < num_bigint::BigInt::zero() {
                return None;
            }
            Some(Q::new(p, q))
        }
    }
}

pub fn format_scalar(g: &Gauss) -> String {
    g.to_string()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut lines = content_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| InputError::at(1, 1, "missing header line".into()))?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 4 {
            return Err(InputError::at(hl, 1, "header must be `kind arity dim scalar`".into()));
        }
        let kind = Kind::parse(toks[0])
            .ok_or_else(|| InputError::at(hl, column_of(header, toks[0]), format!("unknown kind `{}`", toks[0])))?;
        let arity: usize = toks[1]
            .parse()
            .map_err(|_| InputError::at(hl, column_of(header, toks[1]), "arity must be an integer".into()))?;
        let dim: usize = toks[2]
            .parse()
            .map_err(|_| InputError::at(hl, column_of(header, toks[2]), "dimension must be an integer".into()))?;
        let scalar = match toks[3] {
            "rational" => ScalarKind::Rational,
            "gaussian" => ScalarKind::Gaussian,
            other => {
                return Err(InputError::at(hl, column_of(header, toks[3]), format!("unknown scalar kind `{other}`")));
            }
        };
        let arity_ok = match kind {
            Kind::Lie | Kind::Leibniz => arity == 2,
            Kind::Gla => arity >= 2 && arity % 2 == 0,
            Kind::Filippov => arity >= 2,
        };
        if !arity_ok {
            return Err(InputError::at(hl, column_of(header, toks[1]), format!("arity {arity} is invalid for {}", kind.name())));
        }
        let mut entries = Vec::new();
        let mut seen = BTreeSet::new();
        let mut metric: Option<Vec<(usize, usize, Gauss)>> = None;
        let mut metric_seen = BTreeSet::new();
        for (ln, line) in lines {
            if line.trim() == "metric" {
                if metric.is_some() {
                    return Err(InputError::at(ln, 1, "second metric block".into()));
                }
                metric = Some(Vec::new());
                continue;
            }
            let (lhs, value) = line
                .split_once(':')
                .ok_or_else(|| InputError::at(ln, 1, "expected `indices : value`".into()))?;
            let vcol = column_of(line, value);
            let value = parse_scalar(value).ok_or_else(|| InputError::at(ln, vcol, "malformed scalar".into()))?;
            if scalar == ScalarKind::Rational && !value.im.is_zero() {
                return Err(InputError::at(ln, vcol, "imaginary value in a rational file".into()));
            }
            if let Some(m) = metric.as_mut() {
                let toks: Vec<&str> = lhs.split_whitespace().collect();
                if toks.len() != 2 {
                    return Err(InputError::at(ln, 1, "metric lines are `i j : value`".into()));
                }
                let i = parse_index(ln, line, toks[0], dim)?;
                let j = parse_index(ln, line, toks[1], dim)?;
                if i > j {
                    return Err(InputError::at(ln, column_of(line, toks[0]), format!("metric entry ({} {}) must have i ≤ j", i + 1, j + 1)));
                }
                if !metric_seen.insert((i, j)) {
                    return Err(InputError::at(ln, 1, format!("duplicate metric entry ({} {})", i + 1, j + 1)));
                }
                if !nary_core::Scalar::is_zero(&value) {
                    m.push((i, j, value));
                }
                continue;
            }
            let (lower_s, upper_s) = lhs
                .split_once("->")
                .ok_or_else(|| InputError::at(ln, 1, "expected `i1 … in -> k : value`".into()))?;
            let toks: Vec<&str> = lower_s.split_whitespace().collect();
            if toks.len() != arity {
                return Err(InputError::at(ln, 1, format!("expected {arity} lower indices, found {}", toks.len())));
            }
            let lower = toks.iter().map(|t| parse_index(ln, line, t, dim)).collect::<Result<Vec<_>, _>>()?;
            let up_tok = upper_s.trim();
            let upper = parse_index(ln, line, up_tok, dim)?;
            let one_based = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ");
            if kind.antisymmetric() && lower.windows(2).any(|w| w[0] >= w[1]) {
                return Err(InputError::symmetry(ln, format!("lower tuple ({}) is not strictly increasing", one_based(&lower))));
            }
            if !seen.insert((lower.clone(), upper)) {
                return Err(InputError::symmetry(ln, format!("duplicate entry ({}) -> {}", one_based(&lower), upper + 1)));
            }
            if !nary_core::Scalar::is_zero(&value) {
                entries.push(Entry { lower, upper, value });
            }
        }
        entries.sort_by(|a, b| (&a.lower, a.upper).cmp(&(&b.lower, b.upper)));
        if let Some(m) = metric.as_mut() {
            m.sort_by_key(|(i, j, _)| (*i, *j));
        }
        Ok(AlgebraFile { kind, arity, dim, scalar, entries, metric })
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {} {}", self.kind.name(), self.arity, self.dim, self.scalar.name());
        for e in &self.entries {
            let lower: Vec<String> = e.lower.iter().map(|i| (i + 1).to_string()).collect();
            let _ = writeln!(out, "{} -> {} : {}", lower.join(" "), e.upper + 1, format_scalar(&e.value));
        }
        if let Some(m) = &self.metric {
            out.push_str("metric\n");
            for (i, j, v) in m {
                let _ = writeln!(out, "{} {} : {}", i + 1, j + 1, format_scalar(v));
            }
        }
        out
    }

    fn real_entries(&self) -> Result<Vec<(Vec<usize>, usize, Q)>, InputError> {
        self.entries
            .iter()
            .map(|e| {
                if e.value.im.is_zero() {
                    Ok((e.lower.clone(), e.upper, e.value.re.clone()))
                } else {
                    Err(InputError::plain(format!(
                        "constant at ({:?}) -> {} is not real; the checkers work over the rationals",
                        e.lower.iter().map(|i| i + 1).collect::<Vec<_>>(),
                        e.upper + 1
                    )))
                }
            })
            .collect()
    }

    fn real_metric(&self) -> Result<Option<Matrix<Q>>, InputError> {
        let Some(m) = &self.metric else { return Ok(None) };
        let mut g = Matrix::zeros(self.dim, self.dim);
        for (i, j, v) in m {
            if !v.im.is_zero() {
                return Err(InputError::plain("metric entries must be real".into()));
            }
            g.set(*i, *j, v.re.clone());
            g.set(*j, *i, v.re.clone());
        }
        Ok(Some(g))
    }

    pub fn to_structure(&self) -> Result<Structure, InputError> {
        let entries = self.real_entries()?;
        let metric = self.real_metric()?;
        if metric.is_some() && !matches!(self.kind, Kind::Lie | Kind::Filippov) {
            return Err(InputError::plain(format!("a metric block is not supported for {}", self.kind.name())));
        }
        let build = || -> Result<Bracket, InputError> {
            let mut b = Bracket::zero(self.arity, self.dim);
            for (lower, k, v) in &entries {
                b.set(lower, *k, v.clone()).map_err(|e| InputError::plain(e.to_string()))?;
            }
            Ok(b)
        };
        Ok(match self.kind {
            Kind::Lie => {
                if metric.is_some() {
                    return Err(InputError::plain("Lie algebra files use the Killing form; drop the metric block".into()));
                }
                Structure::Lie(LieAlgebra::new(build()?).map_err(|e| InputError::plain(e.to_string()))?)
            }
            Kind::Gla => Structure::Gla(GLAlgebra::new(build()?).map_err(|e| InputError::plain(e.to_string()))?),
            Kind::Filippov => {
                let mut fa = FilippovAlgebra::new(build()?).map_err(|e| InputError::plain(e.to_string()))?;
                if let Some(g) = metric {
                    fa = fa.with_metric(g).map_err(|e| InputError::plain(e.to_string()))?;
                }
                Structure::Filippov(fa)
            }
            Kind::Leibniz => {
                let e: Vec<(usize, usize, usize, Q)> = entries.into_iter().map(|(l, k, v)| (l[0], l[1], k, v)).collect();
                Structure::Leibniz(LeibnizAlgebra::from_entries(self.dim, &e))
            }
        })
    }

    pub fn from_structure(s: &Structure) -> Self {
        let real = |v: &Q| Gauss { re: v.clone(), im: Q::zero() };
        let from_bracket = |kind: Kind, b: &Bracket| -> Vec<Entry> {
            let _ = kind;
            b.entries().map(|(t, k, v)| Entry { lower: t.clone(), upper: k, value: real(v) }).collect()
        };
        let (kind, arity, dim, entries, metric) = match s {
            Structure::Lie(l) => (Kind::Lie, 2, l.dim(), from_bracket(Kind::Lie, l.bracket()), None),
            Structure::Gla(g) => (Kind::Gla, g.arity(), g.dim(), from_bracket(Kind::Gla, g.bracket()), None),
            Structure::Filippov(f) => {
                let metric = f.metric().map(|g| {
                    let mut m = Vec::new();
                    for i in 0..g.rows() {
                        for j in i..g.cols() {
                            if !g.get(i, j).is_zero() {
                                m.push((i, j, real(g.get(i, j))));
                            }
                        }
                    }
                    m
                });
                (Kind::Filippov, f.arity(), f.dim(), from_bracket(Kind::Filippov, f.bracket()), metric)
            }
            Structure::Leibniz(l) => {
                let d = l.dim();
                let mut e = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let v = l.c(i, j, k);
                            if !v.is_zero() {
                                e.push(Entry { lower: vec![i, j], upper: k, value: real(v) });
                            }
                        }
                    }
                }
                (Kind::Leibniz, 2, d, e, None)
            }
        };
        let mut entries = entries;
        entries.sort_by(|a, b| (&a.lower, a.upper).cmp(&(&b.lower, b.upper)));
        AlgebraFile { kind, arity, dim, scalar: ScalarKind::Rational, entries, metric }
    }
}

/// Writes a rational the way the format expects.
pub fn format_rational(x: &Q) -> String {
    fmt_q(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nary_core::q;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("-3/4"), Some(Gauss { re: Q::new((-3).into(), 4.into()), im: Q::zero() }));
        let g = parse_scalar("1/2-3 i").unwrap();
        assert_eq!(g.im, q(-3));
        assert_eq!(parse_scalar(&format_scalar(&g)), Some(g));
        assert_eq!(parse_scalar("-1/2+1/3 i").unwrap().re, Q::new((-1).into(), 2.into()));
        assert!(parse_scalar("1/0").is_none());
        assert!(parse_scalar("x").is_none());
    }

    #[test]
    fn parse_and_emit() {
        let text = "filippov 3 4 rational\n1 2 3 -> 4 : -1\n2 3 4 -> 1 : 1\nmetric\n1 1 : 1\n";
        let f = AlgebraFile::parse(text).unwrap();
        assert_eq!(f.entries.len(), 2);
        assert_eq!(f.emit(), text);
        let e = AlgebraFile::parse("lie 2 3 rational\n2 1 -> 3 : 1\n").unwrap_err();
        assert!(e.symmetry && e.message.contains("2 1"));
        let e = AlgebraFile::parse("lie 2 3 rational\n1 2 -> 3 : 1\n1 2 -> 3 : 2\n").unwrap_err();
        assert!(e.message.contains("duplicate"));
        let e = AlgebraFile::parse("lie 2 3 rational\n1 2 -> 4 : 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        assert!(AlgebraFile::parse("lie 3 3 rational\n").is_err());
        assert!(AlgebraFile::parse("lie 2 0 rational\n").unwrap().entries.is_empty());
        assert!(AlgebraFile::parse("leibniz 2 3 rational\n3 2 -> 2 : 1\n3 3 -> 1 : 1\n").is_ok());
    }
}
