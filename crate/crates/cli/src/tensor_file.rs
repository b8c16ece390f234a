//! `tensor` files: antisymmetric multivectors with polynomial components.
//!
//! ```text
//! tensor 3 4 rational
//! 1 2 3 : 1*x4
//! 2 3 4 : 1/2*x2^2 + -1*x1
//! ```
//!
//! Each line gives the component on a strictly increasing 1-based index tuple.
//! Polynomials use `x1…xD`, `*`, `^` and rational coefficients.

use crate::error::InputError;
use crate::format::{column_of, content_lines, parse_index, parse_rational};
use nary_core::{Poly, PolyMultivector, Q};
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt::Write as _;

pub fn parse_tensor(text: &str) -> Result<PolyMultivector, InputError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| InputError::at(1, 1, "missing header line".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "tensor" {
        return Err(InputError::at(hl, 1, "header must be `tensor order dim rational`".into()));
    }
    let order: usize = toks[1]
        .parse()
        .map_err(|_| InputError::at(hl, column_of(header, toks[1]), "order must be an integer".into()))?;
    let dim: usize = toks[2]
        .parse()
        .map_err(|_| InputError::at(hl, column_of(header, toks[2]), "dimension must be an integer".into()))?;
    if toks[3] != "rational" {
        return Err(InputError::at(hl, column_of(header, toks[3]), "tensor components are rational polynomials".into()));
    }
    if order == 0 || order > dim {
        return Err(InputError::at(hl, column_of(header, toks[1]), format!("order {order} must lie in 1..={dim}")));
    }
    let mut lam = PolyMultivector::zero(order, dim);
    let mut seen = BTreeSet::new();
    for (ln, line) in lines {
        let (lhs, rhs) = line
            .split_once(':')
            .ok_or_else(|| InputError::at(ln, 1, "expected `indices : polynomial`".into()))?;
        let toks: Vec<&str> = lhs.split_whitespace().collect();
        if toks.len() != order {
            return Err(InputError::at(ln, 1, format!("expected {order} indices, found {}", toks.len())));
        }
        let idx = toks.iter().map(|t| parse_index(ln, line, t, dim)).collect::<Result<Vec<_>, _>>()?;
        let one_based = idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ");
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(InputError::symmetry(ln, format!("index tuple ({one_based}) is not strictly increasing")));
        }
        if !seen.insert(idx.clone()) {
            return Err(InputError::symmetry(ln, format!("duplicate component ({one_based})")));
        }
        let p = parse_poly(rhs, dim).map_err(|m| InputError::at(ln, column_of(line, rhs), m))?;
        lam.set(&idx, p).map_err(|e| InputError::at(ln, 1, e.to_string()))?;
    }
    Ok(lam)
}

pub fn emit_tensor(lam: &PolyMultivector) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tensor {} {} rational", lam.order(), lam.dim());
    for (t, p) in lam.components() {
        let idx: Vec<String> = t.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(out, "{} : {}", idx.join(" "), p);
    }
    out
}

/// Parses a polynomial in `x1…x{nvars}`, accepting the output of `Poly`'s `Display`.
pub fn parse_poly(s: &str, nvars: usize) -> Result<Poly, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty polynomial".into());
    }
    // split into signed terms at `+`/`-` that do not follow an operator
    let mut terms = Vec::new();
    let mut cur = String::new();
    for c in compact.chars() {
        let after_op = cur.is_empty() || cur.ends_with(['+', '-', '*', '/', '^']);
        if (c == '+' || c == '-') && !after_op {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    let mut out = Poly::zero(nvars);
    for term in terms {
        out = out.add(&parse_term(&term, nvars)?);
    }
    Ok(out)
}

fn parse_term(term: &str, nvars: usize) -> Result<Poly, String> {
    let mut coeff = Q::one();
    let mut exps = vec![0u32; nvars];
    let mut body = term.strip_prefix('+').unwrap_or(term);
    while let Some(rest) = body.strip_prefix('-') {
        coeff = -coeff;
        body = rest.strip_prefix('+').unwrap_or(rest);
    }
    for factor in body.split('*') {
        if let Some(v) = factor.strip_prefix('x') {
            let (var, pow) = match v.split_once('^') {
                None => (v, 1),
                Some((var, pow)) => (var, pow.parse::<u32>().map_err(|_| format!("bad exponent in `{factor}`"))?),
            };
            let i: usize = var.parse().map_err(|_| format!("bad variable `{factor}`"))?;
            if i == 0 || i > nvars {
                return Err(format!("variable x{i} outside x1..x{nvars}"));
            }
            exps[i - 1] += pow;
        } else {
            let c = parse_rational(factor).ok_or_else(|| format!("bad factor `{factor}`"))?;
            coeff *= c;
        }
    }
    Ok(Poly::monomial(exps, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nary_core::{q, qf};

    #[test]
    fn polynomials_round_trip() {
        let p = parse_poly("1 + -3/2*x1*x2^2 - x3", 3).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.eval(&[q(1), q(1), q(1)]), qf(-3, 2));
        assert_eq!(parse_poly(&p.to_string(), 3).unwrap(), p);
        assert_eq!(parse_poly("0", 2).unwrap(), Poly::zero(2));
        assert!(parse_poly("x4", 3).is_err());
        assert!(parse_poly("y1", 3).is_err());
    }

    #[test]
    fn tensors_round_trip() {
        let text = "tensor 3 4 rational\n1 2 3 : 1*x4\n2 3 4 : 1/2*x2^2 + -1*x1\n";
        let lam = parse_tensor(text).unwrap();
        assert_eq!(emit_tensor(&lam), text);
        let e = parse_tensor("tensor 2 3 rational\n2 1 : 1\n").unwrap_err();
        assert!(e.symmetry);
        assert!(parse_tensor("tensor 2 3 rational\n1 2 : x\n").is_err());
    }
}
