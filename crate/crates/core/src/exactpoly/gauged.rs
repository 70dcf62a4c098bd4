//! Functions of the form `polynomial × power × gaussian`, closed under the
//! derivative used for Wronskians.
//!
//! Linear (`Var::X`): `f(x) = p(x) · x^a · exp(s x²/2)`, differentiated with
//! `d/dx`.
//!
//! Radial (`Var::Z`, `z = x²/2`): `f = p(z) · z^a · exp(b z)`. These are
//! functions of `x`, and `d/dx = √2 · z^{1/2} d/dz`. We differentiate with
//! `D = z^{1/2} d/dz`, which keeps every coefficient rational; an `n`-row
//! Wronskian taken with `D` differs from the `d/dx` one by the constant
//! `2^{-n(n-1)/4}`.

use num_traits::{One, Zero};

use super::polynomial::{horner_f64, Polynomial, Var};
use super::rational::{rat, to_f64, Rational};
use super::wronskian::bareiss_det;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugedFunction {
    pub poly: Polynomial,
    pub power: Rational,
    pub gauss: Rational,
}

impl GaugedFunction {
    pub fn new(poly: Polynomial, power: Rational, gauss: Rational) -> Self {
        GaugedFunction { poly, power, gauss }
    }

    /// Plain polynomial with trivial gauge.
    pub fn from_poly(poly: Polynomial) -> Self {
        GaugedFunction { poly, power: Rational::zero(), gauss: Rational::zero() }
    }

    pub fn var(&self) -> Var {
        self.poly.var()
    }

    /// How much one application of the derivative lowers the power exponent.
    pub fn power_step(var: Var) -> Rational {
        match var {
            Var::Z => rat(1, 2),
            _ => Rational::one(),
        }
    }

    /// Raw derivative. The power exponent always drops by exactly one step so
    /// that rows of a Wronskian matrix factor uniformly; call
    /// [`normalized`](Self::normalized) for a canonical form.
    pub fn derivative(&self) -> Self {
        let v = Polynomial::monomial(Rational::one(), 1, self.var());
        // a p + v p' + c v^k p, with k = 2 and c = s (linear) or k = 1 and c = b (radial)
        let gauss_term = match self.var() {
            Var::Z => (&v * &self.poly).scale(&self.gauss),
            _ => (&(&v * &v) * &self.poly).scale(&self.gauss),
        };
        let poly = &(&self.poly.scale(&self.power) + &(&v * &self.poly.derivative())) + &gauss_term;
        GaugedFunction {
            poly,
            power: &self.power - Self::power_step(self.var()),
            gauss: self.gauss.clone(),
        }
    }

    /// Moves every factor of the variable out of the polynomial into the power.
    pub fn normalized(&self) -> Self {
        if self.poly.is_zero() {
            return GaugedFunction::from_poly(self.poly.clone());
        }
        let r = self.poly.trailing_zeros();
        GaugedFunction {
            poly: self.poly.shift_down(r),
            power: &self.power + Rational::from_integer(r.into()),
            gauss: self.gauss.clone(),
        }
    }

    /// Value at the physical coordinate `x` (for radial functions `z = x²/2`).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.sampler()(x)
    }

    /// Numeric evaluator with the coefficients converted once.
    pub fn sampler(&self) -> impl Fn(f64) -> f64 {
        let coeffs = self.poly.f64_coeffs();
        let radial = self.var() == Var::Z;
        let (a, s) = (to_f64(&self.power), to_f64(&self.gauss));
        move |x| {
            let t = if radial { 0.5 * x * x } else { x };
            let g = if radial { s * t } else { 0.5 * s * x * x };
            let pw = if a == 0.0 { 1.0 } else { t.powf(a) };
            horner_f64(&coeffs, t) * pw * g.exp()
        }
    }

    /// `d^order f / dx^order` at `x`, computed from the exact derivative.
    pub fn eval_dx_f64(&self, x: f64, order: usize) -> f64 {
        let mut f = self.clone();
        for _ in 0..order {
            f = f.derivative();
        }
        let scale = match self.var() {
            Var::Z => 2f64.sqrt().powi(order as i32),
            _ => 1.0,
        };
        scale * f.eval_f64(x)
    }
}

/// Wronskian of gauged functions.
///
/// Entry `(i, j)` of the derivative matrix is `v^{a_i - j·step} e^{s_i g} P_ij`;
/// pulling `v^{a_i} e^{s_i g}` out of each row and `v^{-j·step}` out of each
/// column leaves a plain polynomial determinant.
pub fn gauged_wronskian(funcs: &[GaugedFunction]) -> Result<GaugedFunction> {
    let first = funcs
        .first()
        .ok_or_else(|| Error::parameter("Wronskian of an empty list"))?;
    let var = first.var();
    if funcs.iter().any(|f| f.var() != var) {
        return Err(Error::parameter("Wronskian entries use different variables"));
    }
    let n = funcs.len();
    let rows = funcs
        .iter()
        .map(|f| {
            let mut d = f.clone();
            (0..n)
                .map(|_| {
                    let next = d.derivative();
                    std::mem::replace(&mut d, next).poly
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(rows);
    let power: Rational = funcs.iter().map(|f| f.power.clone()).sum::<Rational>()
        - GaugedFunction::power_step(var) * Rational::from_integer((n * (n - 1) / 2).into());
    let gauss = funcs.iter().map(|f| f.gauss.clone()).sum();
    Ok(GaugedFunction { poly: det, power, gauss }.normalized())
}
