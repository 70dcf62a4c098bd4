//! Dense univariate polynomials over ℚ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{int, to_f64, Rational};

/// Which independent variable a polynomial is written in.
///
/// `X` is the linear-oscillator coordinate, `Z = x²/2` the radial one and `H`
/// the energy symbol used by ladder-algebra polynomials. Arithmetic never mixes
/// tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Z,
    H,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
            Var::H => "H",
        }
    }
}

/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty vector.
/// Horner evaluation of `Σ c_i v^i`.
pub fn horner_f64(c: &[f64], v: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, c| acc * v + c)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
    var: Var,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>, var: Var) -> Self {
        let mut p = Polynomial { coeffs, var };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        Polynomial { coeffs: Vec::new(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    /// `c · var^n`
    pub fn monomial(c: Rational, n: usize, var: Var) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs, var)
    }

    /// The linear polynomial `var + c`.
    pub fn linear_root(c: Rational, var: Var) -> Self {
        Self::new(vec![c, Rational::one()], var)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at the origin.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * int(i as i64))
            .collect();
        Self::new(coeffs, self.var)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// `self · var^n`
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs, var: self.var }
    }

    /// `self / var^n`; the low coefficients must be zero.
    pub fn shift_down(&self, n: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(n).all(|c| c.is_zero()));
        Self::new(self.coeffs.iter().skip(n).cloned().collect(), self.var)
    }

    /// `p(-v)`
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(coeffs, self.var)
    }

    /// `p(v + c)`
    pub fn translate(&self, c: &Rational) -> Self {
        let lin = Self::linear_root(c.clone(), self.var);
        let mut acc = Self::zero(self.var);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(a.clone(), self.var);
        }
        acc
    }

    /// Same polynomial under a different variable tag.
    pub fn retag(&self, var: Var) -> Self {
        Polynomial { coeffs: self.coeffs.clone(), var }
    }

    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    pub fn eval_f64(&self, v: f64) -> f64 {
        horner_f64(&self.f64_coeffs(), v)
    }

    /// Coefficients rounded to `f64`, for repeated numeric evaluation.
    pub fn f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    /// Only even powers present.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// Scaled so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => self.clone(),
        }
    }

    /// Scaled by a positive constant so that the leading coefficient is ±1.
    /// Preserves signs of values, which is what Sturm sequences need.
    pub fn sign_normalized(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l.abs())),
            None => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        self.check_var(d);
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = Rational::one() / d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Self::zero(self.var), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot, self.var), Self::new(rem, self.var))
    }

    /// Division that is known to be exact (Bareiss steps, factor stripping).
    pub fn exact_div(&self, d: &Polynomial) -> Polynomial {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division: {self} / {d}");
        q
    }

    /// Proportionality test: returns `c` with `self = c · other` if one exists.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.var != other.var || self.degree() != other.degree() {
            return None;
        }
        let (a, b) = (self.leading()?, other.leading()?);
        let c = a / b;
        (self == &other.scale(&c)).then_some(c)
    }

    fn check_var(&self, other: &Polynomial) {
        assert_eq!(
            self.var, other.var,
            "polynomial variable mismatch: {} vs {}",
            self.var.symbol(),
            other.var.symbol()
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs, self.var)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs, self.var)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs, self.var)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect(), self.var)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{v}")?,
                _ => write!(f, "{v}^{i}")?,
            }
        }
        Ok(())
    }
}
