//! Wronskian determinants of polynomials, computed by fraction-free
//! (Bareiss) elimination over ℚ[v].

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Determinant of a square matrix of polynomials sharing one variable.
///
/// Each Bareiss step divides by the previous pivot, which is exact in the
/// polynomial ring, so entries never become rational functions.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix required");
    let var = m[0][0].var();
    let mut negate = false;
    let mut prev = Polynomial::one(var);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(var),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// `W(p_1, …, p_n)`: rows are the functions, column `j` the `j`th derivative.
pub fn wronskian(polys: &[Polynomial]) -> Result<Polynomial> {
    let first = polys
        .first()
        .ok_or_else(|| Error::parameter("Wronskian of an empty list"))?;
    if polys.iter().any(|p| p.var() != first.var()) {
        return Err(Error::parameter("Wronskian entries use different variables"));
    }
    let n = polys.len();
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = Vec::with_capacity(n);
            let mut d = p.clone();
            for _ in 0..n {
                let next = d.derivative();
                row.push(d);
                d = next;
            }
            row
        })
        .collect();
    Ok(bareiss_det(rows))
}

/// Wronskian with the empty-list convention `W() = 1`.
pub fn wronskian_or_one(polys: &[Polynomial], var: super::polynomial::Var) -> Result<Polynomial> {
    if polys.is_empty() {
        Ok(Polynomial::one(var))
    } else {
        wronskian(polys)
    }
}

/// `p'' p - p'²` over `p²`, i.e. the second logarithmic derivative of `p`.
pub fn log_second_derivative(p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if p.is_zero() {
        return Err(Error::parameter("logarithmic derivative of the zero polynomial"));
    }
    let d1 = p.derivative();
    let d2 = d1.derivative();
    Ok((&(&d2 * p) - &(&d1 * &d1), p * p))
}
