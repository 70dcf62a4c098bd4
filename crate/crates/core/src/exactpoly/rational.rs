//! Exact rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so it is used directly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"7/2"`, `"-3"` or `"4"`. Decimal notation is rejected so that
/// parameters never go through a float.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parameter(format!("not an exact rational: {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parameter(format!("not an exact rational: {s:?}")))?;
    if d.is_zero() {
        return Err(Error::parameter(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator/denominator individually overflow f64
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Integer value of `r` if it has denominator 1.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Product `start · (start+1) ⋯ (start+count-1)`; the rising factorial.
/// Used for Γ(a + count) / Γ(a) with rational `a`.
pub fn rising(start: &Rational, count: u64) -> Rational {
    let mut acc = Rational::one();
    let mut x = start.clone();
    for _ in 0..count {
        acc *= &x;
        x += Rational::one();
    }
    acc
}

pub fn factorial(n: u64) -> Rational {
    rising(&Rational::one(), n)
}

pub fn pow2(n: u64) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// `p/q` style rendering used in machine-readable output.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("7/2").unwrap(), rat(7, 2));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("3.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn rising_matches_gamma_ratio() {
        // Γ(11/2)/Γ(5/2) = (5/2)(7/2)(9/2)
        assert_eq!(rising(&rat(5, 2), 3), rat(315, 8));
        assert_eq!(factorial(5), int(120));
        assert_eq!(pow2(10), int(1024));
    }
}
