//! `representation` files: one matrix per basis label.
//!
//! ```text
//! representation 1 3 2 rational
//! 1 -> 1 2 : 1/2
//! ```
//!
//! The header is `representation label_arity algebra_dim module_dim rational`. A line
//! `a₁ … a_k -> i j : v` sets entry `(i, j)` of the matrix of the label `a₁…a_k`;
//! labels are strictly increasing (single generators for Lie algebras, fundamental
//! objects of `n−1` generators for Filippov algebras).

use crate::error::InputError;
use crate::format::{column_of, content_lines, parse_index, parse_scalar};
use nary_core::combinatorics::combinations;
use nary_core::{Matrix, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepFile {
    pub label_arity: usize,
    pub dim: usize,
    pub module_dim: usize,
    /// Matrices on every strictly increasing label, zero where the file is silent.
    pub matrices: BTreeMap<Vec<usize>, Matrix<Q>>,
}

impl RepFile {
    /// Matrices in lexicographic label order.
    pub fn ordered(&self) -> Vec<Matrix<Q>> {
        self.matrices.values().cloned().collect()
    }
}

pub fn parse_rep(text: &str) -> Result<RepFile, InputError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| InputError::at(1, 1, "missing header line".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 5 || toks[0] != "representation" {
        return Err(InputError::at(hl, 1, "header must be `representation label_arity algebra_dim module_dim rational`".into()));
    }
    let num = |k: usize| -> Result<usize, InputError> {
        toks[k]
            .parse()
            .map_err(|_| InputError::at(hl, column_of(header, toks[k]), format!("`{}` is not an integer", toks[k])))
    };
    let (label_arity, dim, module_dim) = (num(1)?, num(2)?, num(3)?);
    if toks[4] != "rational" {
        return Err(InputError::at(hl, column_of(header, toks[4]), "representation matrices must be rational".into()));
    }
    let mut matrices: BTreeMap<Vec<usize>, Matrix<Q>> =
        combinations(dim, label_arity).into_iter().map(|l| (l, Matrix::zeros(module_dim, module_dim))).collect();
    let mut seen = std::collections::BTreeSet::new();
    for (ln, line) in lines {
        let (lhs, value) = line
            .split_once(':')
            .ok_or_else(|| InputError::at(ln, 1, "expected `labels -> i j : value`".into()))?;
        let vcol = column_of(line, value);
        let value = parse_scalar(value).ok_or_else(|| InputError::at(ln, vcol, "malformed scalar".into()))?;
        if !value.im.is_zero() {
            return Err(InputError::at(ln, vcol, "representation matrices must be rational".into()));
        }
        let (label_s, entry_s) = lhs
            .split_once("->")
            .ok_or_else(|| InputError::at(ln, 1, "expected `labels -> i j : value`".into()))?;
        let ltoks: Vec<&str> = label_s.split_whitespace().collect();
        if ltoks.len() != label_arity {
            return Err(InputError::at(ln, 1, format!("expected {label_arity} label indices, found {}", ltoks.len())));
        }
        let label = ltoks.iter().map(|t| parse_index(ln, line, t, dim)).collect::<Result<Vec<_>, _>>()?;
        if label.windows(2).any(|w| w[0] >= w[1]) {
            let l: Vec<String> = label.iter().map(|i| (i + 1).to_string()).collect();
            return Err(InputError::symmetry(ln, format!("label ({}) is not strictly increasing", l.join(" "))));
        }
        let etoks: Vec<&str> = entry_s.split_whitespace().collect();
        if etoks.len() != 2 {
            return Err(InputError::at(ln, column_of(line, entry_s), "expected a row and a column".into()));
        }
        let i = parse_index(ln, line, etoks[0], module_dim)?;
        let j = parse_index(ln, line, etoks[1], module_dim)?;
        if !seen.insert((label.clone(), i, j)) {
            return Err(InputError::symmetry(ln, format!("duplicate matrix entry ({} {})", i + 1, j + 1)));
        }
        matrices.get_mut(&label).expect("label enumerated").set(i, j, value.re);
    }
    Ok(RepFile { label_arity, dim, module_dim, matrices })
}

pub fn emit_rep(rep: &RepFile) -> String {
    let mut out = format!("representation {} {} {} rational\n", rep.label_arity, rep.dim, rep.module_dim);
    for (label, m) in &rep.matrices {
        let l: Vec<String> = label.iter().map(|i| (i + 1).to_string()).collect();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m.get(i, j).is_zero() {
                    out.push_str(&format!("{} -> {} {} : {}\n", l.join(" "), i + 1, j + 1, nary_core::scalar::fmt_q(m.get(i, j))));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "representation 2 4 2 rational\n1 2 -> 1 2 : 1\n3 4 -> 2 1 : -1/2\n";
        let r = parse_rep(text).unwrap();
        assert_eq!(r.matrices.len(), 6);
        assert_eq!(emit_rep(&r), text);
        assert!(parse_rep("representation 2 4 2 rational\n2 1 -> 1 1 : 1\n").unwrap_err().symmetry);
        assert!(parse_rep("representation 1 3 2 rational\n1 -> 3 1 : 1\n").is_err());
    }
}
