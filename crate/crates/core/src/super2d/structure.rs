//! Structure function of the polynomial algebra generated by `K`, `I±`, `H`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{integral_action_sq, k_eigenvalue, states, Direction, System2D};
use crate::error::{Error, Result};
use crate::exactpoly::rational::{fmt_rational, int, rat};
use crate::exactpoly::{Polynomial, Rational};
use crate::ladder::q_polynomial;

/// Polynomial in `(K, H)` stored as `(deg_K, deg_H) -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bivariate {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Bivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut b = Self::zero();
        b.add_term(0, 0, c);
        b
    }

    /// `a·K + b·H + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(1, 0, a);
        p.add_term(0, 1, b);
        p.add_term(0, 0, c);
        p
    }

    fn add_term(&mut self, dk: u32, dh: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((dk, dh)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(dk, dh));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn mul(&self, other: &Bivariate) -> Bivariate {
        let mut out = Bivariate::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &other.terms {
                out.add_term(a + d, b + e, c * f);
            }
        }
        out
    }

    pub fn add(&self, other: &Bivariate) -> Bivariate {
        let mut out = self.clone();
        for ((a, b), c) in &other.terms {
            out.add_term(*a, *b, c.clone());
        }
        out
    }

    /// `p(arg)` by Horner's rule.
    pub fn compose(p: &Polynomial, arg: &Bivariate) -> Bivariate {
        let mut acc = Bivariate::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(arg).add(&Bivariate::constant(c.clone()));
        }
        acc
    }

    /// Exact value at `(k, h)`. Works over integers with a common
    /// denominator so only one reduction happens at the end.
    pub fn eval(&self, k: &Rational, h: &Rational) -> Rational {
        let dk = self.terms.keys().map(|t| t.0).max().unwrap_or(0);
        let dh = self.terms.keys().map(|t| t.1).max().unwrap_or(0);
        let den = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let (kn, kd) = (int_powers(k.numer(), dk), int_powers(k.denom(), dk));
        let (hn, hd) = (int_powers(h.numer(), dh), int_powers(h.denom(), dh));
        let mut s = BigInt::zero();
        for ((a, b), c) in &self.terms {
            let (a, b) = (*a as usize, *b as usize);
            let coeff = c.numer() * (&den / c.denom());
            s += coeff * &kn[a] * &kd[dk as usize - a] * &hn[b] * &hd[dh as usize - b];
        }
        Rational::new(s, den * &kd[dk as usize] * &hd[dh as usize])
    }
}

fn int_powers(x: &BigInt, n: u32) -> Vec<BigInt> {
    let mut v = vec![BigInt::one()];
    for i in 0..n as usize {
        let next = &v[i] * x;
        v.push(next);
    }
    v
}

impl fmt::Display for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})", fmt_rational(c))?;
            match a {
                0 => {}
                1 => f.write_str("*K")?,
                _ => write!(f, "*K^{a}")?,
            }
            match b {
                0 => {}
                1 => f.write_str("*H")?,
                _ => write!(f, "*H^{b}")?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructurePoly {
    /// `F(K, H)` with `I₊I₋ = F(K, H)` and `I₋I₊ = F(K+1, H)`.
    pub poly: Bivariate,
    /// Order of the polynomial algebra, `deg F − 1`.
    pub order: u32,
}

/// `F(K,H) = Π_{i=1}^{n₁} Q(H/2 + λ̄K − (n₁−i)λ_x) · Π_{j=1}^{n₂} S(H/2 − λ̄K + jλ_y)`,
/// where `Q`, `S` are the one-dimensional ladder polynomials on x and y.
pub fn structure_poly(sys: &System2D) -> StructurePoly {
    let q = q_polynomial(&sys.x).q_poly;
    let s = q_polynomial(&sys.y).q_poly;
    let lb = int(sys.lambda_bar());
    let (n1, n2) = (sys.n1(), sys.n2());
    let mut f = Bivariate::constant(int(1));
    for i in 1..=n1 {
        let arg = Bivariate::linear(lb.clone(), rat(1, 2), int(-(n1 - i) * sys.lambda_x()));
        f = f.mul(&Bivariate::compose(&q, &arg));
    }
    for j in 1..=n2 {
        let arg = Bivariate::linear(-lb.clone(), rat(1, 2), int(j * sys.lambda_y()));
        f = f.mul(&Bivariate::compose(&s, &arg));
    }
    let deg_q = q.degree().unwrap_or(0) as i64;
    let deg_s = s.degree().unwrap_or(0) as i64;
    let order = (deg_q * n1 + deg_s * n2 - 1).max(0) as u32;
    StructurePoly { poly: f, order }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorReport {
    pub states_checked: usize,
    /// `‖I₊ψ‖² = F(κ+1, E)` and `‖I₋ψ‖² = F(κ, E)` on every checked state.
    pub product_identity: bool,
}

/// Verifies `‖I₊ψ‖² − ‖I₋ψ‖² = F(κ+1, E) − F(κ, E)` on every state with
/// `N ≤ n_max`. A mismatch is a consistency error.
pub fn commutator_check(sys: &System2D, n_max: i64) -> Result<CommutatorReport> {
    let f = structure_poly(sys).poly;
    let mut checked = 0;
    let mut product = true;
    for n in sys.min_level()..=n_max {
        let e = super::energy(sys, n);
        for st in states(sys, n) {
            let kappa = k_eigenvalue(sys, &st)?;
            let plus = integral_action_sq(sys, &st, Direction::Plus)?.amplitude_sq;
            let minus = integral_action_sq(sys, &st, Direction::Minus)?.amplitude_sq;
            let f_up = f.eval(&(&kappa + int(1)), &e);
            let f_here = f.eval(&kappa, &e);
            if &plus - &minus != &f_up - &f_here {
                return Err(Error::consistency(format!(
                    "family {}: commutator mismatch at N = {n}, nu_x = {}",
                    sys.family, st.nu_x
                )));
            }
            product &= plus == f_up && minus == f_here;
            checked += 1;
        }
    }
    Ok(CommutatorReport { states_checked: checked, product_identity: product })
}
