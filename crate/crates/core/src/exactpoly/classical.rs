//! Hermite, pseudo-Hermite and Laguerre polynomials from their three-term
//! recurrences.

use std::str::FromStr;

use num_traits::One;

use super::polynomial::{Polynomial, Var};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyFamily {
    Hermite,
    /// `𝓗_m(x) = (-i)^m H_m(ix)`, nodeless for even `m`.
    PseudoHermite,
    Laguerre,
    /// `L_n^(α)(-z)` written as a polynomial in `z`.
    LaguerreNegated,
}

impl FromStr for PolyFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hermite" => Ok(PolyFamily::Hermite),
            "pseudo_hermite" | "pseudo-hermite" => Ok(PolyFamily::PseudoHermite),
            "laguerre" => Ok(PolyFamily::Laguerre),
            "laguerre_negated" | "laguerre-negated" => Ok(PolyFamily::LaguerreNegated),
            _ => Err(Error::parameter(format!("unknown polynomial family {s:?}"))),
        }
    }
}

pub fn classical_poly(family: PolyFamily, degree: usize, alpha: Option<&Rational>) -> Result<Polynomial> {
    let needs_alpha = matches!(family, PolyFamily::Laguerre | PolyFamily::LaguerreNegated);
    match (needs_alpha, alpha) {
        (true, None) => Err(Error::parameter(format!("{family:?} requires alpha"))),
        (false, Some(_)) => Err(Error::parameter(format!("{family:?} takes no alpha"))),
        (_, _) => Ok(match family {
            PolyFamily::Hermite => hermite(degree),
            PolyFamily::PseudoHermite => pseudo_hermite(degree),
            PolyFamily::Laguerre => laguerre(degree, alpha.unwrap()),
            PolyFamily::LaguerreNegated => laguerre_negated(degree, alpha.unwrap()),
        }),
    }
}

/// `H_{n+1} = 2x H_n + sign · 2n H_{n-1}` with sign −1 for Hermite and +1 for
/// pseudo-Hermite.
fn hermite_like(n: usize, sign: i64) -> Polynomial {
    let two_x = Polynomial::from_ints(&[0, 2], Var::X);
    let mut prev = Polynomial::one(Var::X);
    if n == 0 {
        return prev;
    }
    let mut cur = two_x.clone();
    for k in 1..n {
        let next = &(&two_x * &cur) + &prev.scale(&int(sign * 2 * k as i64));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn hermite(n: usize) -> Polynomial {
    hermite_like(n, -1)
}

pub fn pseudo_hermite(n: usize) -> Polynomial {
    hermite_like(n, 1)
}

/// Generalized Laguerre `L_n^(α)(z)`:
/// `(n+1) L_{n+1} = (2n+1+α-z) L_n - (n+α) L_{n-1}`.
pub fn laguerre(n: usize, alpha: &Rational) -> Polynomial {
    let mut prev = Polynomial::one(Var::Z);
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::new(vec![alpha + Rational::one(), int(-1)], Var::Z);
    for k in 1..n {
        let kk = int(k as i64);
        let lin = Polynomial::new(vec![&kk * int(2) + int(1) + alpha, int(-1)], Var::Z);
        let next = (&(&lin * &cur) - &prev.scale(&(&kk + alpha))).scale(&(Rational::one() / (kk + int(1))));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn laguerre_negated(n: usize, alpha: &Rational) -> Polynomial {
    laguerre(n, alpha).reflect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rational::{factorial, rat};
    use num_traits::Zero;

    /// Explicit sum `H_n = n! Σ_j (-1)^j (2x)^{n-2j} / (j! (n-2j)!)`.
    fn hermite_oracle(n: usize) -> Polynomial {
        let mut c = vec![Rational::zero(); n + 1];
        for j in 0..=n / 2 {
            let k = n - 2 * j;
            let sign = if j % 2 == 0 { int(1) } else { int(-1) };
            c[k] = sign * factorial(n as u64) * Rational::from_integer(num_bigint::BigInt::from(2).pow(k as u32))
                / (factorial(j as u64) * factorial(k as u64));
        }
        Polynomial::new(c, Var::X)
    }

    /// `𝓗_m(x) = (-i)^m H_m(ix)`: coefficient of x^k picks up i^{k-m} = (-1)^{(m-k)/2}.
    fn pseudo_hermite_oracle(m: usize) -> Polynomial {
        let h = hermite_oracle(m);
        let c = (0..=m)
            .map(|k| {
                let a = h.coeff(k);
                if (m - k) % 4 == 2 {
                    -a
                } else {
                    a
                }
            })
            .collect();
        Polynomial::new(c, Var::X)
    }

    /// `L_n^(α)(z) = Σ_i (-1)^i C(n+α, n-i) z^i / i!`
    fn laguerre_oracle(n: usize, alpha: &Rational) -> Polynomial {
        let c = (0..=n)
            .map(|i| {
                let r = n - i;
                let mut binom = Rational::one();
                for t in 1..=r {
                    binom *= alpha + int((i + t) as i64);
                }
                binom /= factorial(r as u64);
                let sign = if i % 2 == 0 { int(1) } else { int(-1) };
                sign * binom / factorial(i as u64)
            })
            .collect();
        Polynomial::new(c, Var::Z)
    }

    #[test]
    fn documented_values() {
        assert_eq!(classical_poly(PolyFamily::PseudoHermite, 0, None).unwrap(), Polynomial::one(Var::X));
        assert_eq!(hermite(2), Polynomial::from_ints(&[-2, 0, 4], Var::X));
        assert_eq!(pseudo_hermite(3), Polynomial::from_ints(&[0, 12, 0, 8], Var::X));
        let a = rat(7, 2);
        assert_eq!(laguerre(1, &a), Polynomial::new(vec![&a + int(1), int(-1)], Var::Z));
    }

    #[test]
    fn recurrences_match_explicit_sums() {
        for n in 0..=20 {
            assert_eq!(hermite(n), hermite_oracle(n), "H_{n}");
            assert_eq!(pseudo_hermite(n), pseudo_hermite_oracle(n), "𝓗_{n}");
        }
        for a in [rat(7, 2), rat(-9, 2), rat(3, 2), int(0)] {
            for n in 0..=10 {
                assert_eq!(laguerre(n, &a), laguerre_oracle(n, &a), "L_{n}^({a})");
            }
        }
    }

    #[test]
    fn defining_odes_hold_exactly() {
        let x = Polynomial::from_ints(&[0, 1], Var::X);
        for n in 0..=30 {
            let h = hermite(n);
            let (d1, d2) = (h.derivative(), h.derivative().derivative());
            let r = &(&d2 - &(&x * &d1).scale(&int(2))) + &h.scale(&int(2 * n as i64));
            assert!(r.is_zero(), "Hermite ODE fails at n={n}");

            let p = pseudo_hermite(n);
            let (d1, d2) = (p.derivative(), p.derivative().derivative());
            let r = &(&d2 + &(&x * &d1).scale(&int(2))) - &p.scale(&int(2 * n as i64));
            assert!(r.is_zero(), "pseudo-Hermite ODE fails at n={n}");
        }
        let z = Polynomial::from_ints(&[0, 1], Var::Z);
        let a = rat(-11, 2);
        for n in 0..=15 {
            let l = laguerre(n, &a);
            let (d1, d2) = (l.derivative(), l.derivative().derivative());
            let coef = Polynomial::new(vec![&a + int(1), int(-1)], Var::Z);
            let r = &(&(&z * &d2) + &(&coef * &d1)) + &l.scale(&int(n as i64));
            assert!(r.is_zero(), "Laguerre ODE fails at n={n}");
        }
    }

    #[test]
    fn negated_laguerre() {
        let a = rat(-9, 2);
        // L_2^(-9/2)(-z) = z²/2 - (5/2) z + 35/8
        let expect = Polynomial::new(vec![rat(35, 8), rat(-5, 2), rat(1, 2)], Var::Z);
        assert_eq!(classical_poly(PolyFamily::LaguerreNegated, 2, Some(&a)).unwrap(), expect);
    }

    #[test]
    fn alpha_presence_checked() {
        assert!(classical_poly(PolyFamily::Laguerre, 2, None).is_err());
        assert!(classical_poly(PolyFamily::Hermite, 2, Some(&int(1))).is_err());
    }
}
