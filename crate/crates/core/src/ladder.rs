//! Ladder operators `c`, `c†` of an extended oscillator, described by their
//! spectral action: `c ψ_ν ∝ ψ_{ν−p}` with period `p = m_k + 1`, and
//! `c†c = Q(H)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::rational::{factorial, int, pow2, rat, rising};
use crate::exactpoly::{Polynomial, Rational, Var};
use crate::extension::{Extension, ExtensionSpec, Kind};

/// The polynomial Heisenberg algebra `[H, c†] = λc†`, `[c, c†] = Q(H+λ) − Q(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaSpec {
    pub q_poly: Polynomial,
    /// Energy step `λ = 2p`.
    pub step: Rational,
    /// Index step `p`.
    pub period: u32,
    pub order: usize,
}

fn h_root(c: Rational) -> Polynomial {
    Polynomial::linear_root(c, Var::H)
}

fn product(factors: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    factors.into_iter().fold(Polynomial::one(Var::H), |acc, f| &acc * &f)
}

pub fn q_polynomial(ext: &Extension) -> PhaSpec {
    let spec = ext.spec();
    let q_poly = match (spec.kind, spec.m_k()) {
        (Kind::Linear, None) => h_root(int(-1)),
        (Kind::Radial, None) => {
            let a = spec.alpha_k();
            product([h_root(-int(1) - &a), h_root(&a - int(1))]).scale(&rat(1, 4))
        }
        (Kind::Linear, Some(_)) => product(
            spec.m
                .iter()
                .map(|&m| h_root(int(2 * m as i64 + 1)))
                .chain(spec.gap_indices().iter().map(|&j| h_root(int(-2 * j as i64 - 1)))),
        ),
        (Kind::Radial, Some(mk)) => {
            let a = spec.alpha.clone().expect("radial spec has alpha");
            let k = int(spec.k() as i64);
            let first = spec.m.iter().map(|&m| h_root(-&a + int(2 * m as i64) - &k + int(1)));
            let second = (0..=mk as i64).map(|j| h_root(&a - int(2 * j) + &k - int(1)));
            let third = spec.gap_indices().into_iter().map(|n| h_root(-&a - int(2 * n as i64) - &k - int(1)));
            product(first.chain(second).chain(third))
        }
    };
    let period = spec.period();
    PhaSpec { order: q_poly.degree().unwrap_or(0), q_poly, step: int(2 * period as i64), period }
}

/// Closed-form `|c ψ_ν|²` for the linear extension.
fn linear_sq(m: &[u32], nu: i64) -> Rational {
    let k = m.len();
    let mk = m[k - 1] as i64;
    let lower = &m[..k - 1];
    let base = pow2(mk as u64 + 1);
    if nu < 0 {
        return Rational::zero();
    }
    if nu == 0 {
        let prod: Rational = lower.iter().map(|&mi| rat(mi as i64 + 1, mk - mi as i64)).product();
        return base * factorial(mk as u64 + 1) * prod;
    }
    if nu <= mk {
        let Some(i) = lower.iter().position(|&mi| mk - mi as i64 == nu) else {
            return Rational::zero();
        };
        let mi = m[i] as i64;
        let before: Rational = m[..i].iter().map(|&mj| rat(mk + mj as i64 - mi + 1, mi - mj as i64)).product();
        let after: Rational =
            m[i + 1..k - 1].iter().map(|&ml| rat(mk + ml as i64 - mi + 1, ml as i64 - mi)).product();
        return base
            * int(mk + 1)
            * int(2 * mk - mi + 1)
            * factorial((mk - mi - 1) as u64)
            * factorial(mi as u64)
            * before
            * after;
    }
    let prod: Rational = lower.iter().map(|&mi| rat(nu + mi as i64 + 1, nu + mi as i64 - mk)).product();
    base * int(nu + mk + 1) * rising(&int(nu - mk), mk as u64) * prod
}

/// `|c ψ_ν|²`, the squared coefficient of `c ψ_ν = a_ν ψ_{ν−p}`.
pub fn ladder_down_sq(ext: &Extension, nu: i64) -> Result<Rational> {
    let spec = ext.spec();
    if !spec.in_spectrum(nu) {
        return Err(Error::Index(format!("nu = {nu} is not a level of {spec}")));
    }
    Ok(match (spec.kind, spec.m_k()) {
        (Kind::Linear, None) => int(2 * nu),
        (Kind::Radial, None) => int(nu) * (int(nu) + spec.alpha_k()),
        (Kind::Linear, Some(_)) => linear_sq(&spec.m, nu),
        (Kind::Radial, Some(mk)) => {
            let lin = linear_sq(&spec.m, nu);
            if lin.is_zero() {
                lin
            } else {
                let start = int(nu) + spec.alpha_k() - int(mk as i64);
                lin * pow2(mk as u64 + 1) * rising(&start, mk as u64 + 1)
            }
        }
    })
}

/// `|c† ψ_ν|² = |c ψ_{ν+p}|²`.
pub fn ladder_up_sq(ext: &Extension, nu: i64) -> Result<Rational> {
    let spec = ext.spec();
    if !spec.in_spectrum(nu) {
        return Err(Error::Index(format!("nu = {nu} is not a level of {spec}")));
    }
    ladder_down_sq(ext, nu + spec.period() as i64)
}

/// Lowest level of each infinite chain: `{−m_i − 1} ∪ gap_indices`, or `{0}`.
pub fn chain_starts(spec: &ExtensionSpec) -> BTreeSet<i64> {
    if spec.is_plain() {
        return BTreeSet::from([0]);
    }
    spec.m
        .iter()
        .map(|&m| -(m as i64) - 1)
        .chain(spec.gap_indices().into_iter().map(i64::from))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderTable {
    pub spec: ExtensionSpec,
    pub squared_elements: BTreeMap<i64, Rational>,
    pub zero_modes: BTreeSet<i64>,
    pub chain_starts: BTreeSet<i64>,
}

pub fn build_table(ext: &Extension, nu_max: i64) -> Result<LadderTable> {
    let mut squared_elements = BTreeMap::new();
    for level in ext.spectrum(nu_max) {
        squared_elements.insert(level.nu, ladder_down_sq(ext, level.nu)?);
    }
    let zero_modes = squared_elements.iter().filter(|(_, v)| v.is_zero()).map(|(&n, _)| n).collect();
    Ok(LadderTable { spec: ext.spec().clone(), squared_elements, zero_modes, chain_starts: chain_starts(ext.spec()) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaReport {
    pub levels_checked: usize,
}

/// Checks, for every level with `ν ≤ nu_max`, that the closed forms agree with
/// `Q(E_ν)`, are nonnegative, and satisfy `|c†ψ|² − |cψ|² = Q(E+λ) − Q(E)`.
pub fn pha_check(ext: &Extension, nu_max: i64) -> Result<PhaReport> {
    let pha = q_polynomial(ext);
    let spec = ext.spec();
    let levels = ext.spectrum(nu_max);
    for level in &levels {
        let e = &level.energy;
        let down = ladder_down_sq(ext, level.nu)?;
        let up = ladder_up_sq(ext, level.nu)?;
        let q_here = pha.q_poly.eval(e);
        let q_next = pha.q_poly.eval(&(e + &pha.step));
        if down != q_here {
            return Err(Error::consistency(format!(
                "{spec}: |c psi_{}|^2 = {down} but Q(E) = {q_here}",
                level.nu
            )));
        }
        if down.is_negative() {
            return Err(Error::consistency(format!("{spec}: negative squared element at nu = {}", level.nu)));
        }
        if &up - &down != &q_next - &q_here {
            return Err(Error::consistency(format!("{spec}: commutator identity fails at nu = {}", level.nu)));
        }
    }
    Ok(PhaReport { levels_checked: levels.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::admissible_lists;
    use proptest::prelude::*;

    fn lin(m: &[u32]) -> Extension {
        Extension::new(ExtensionSpec::linear(m.to_vec())).unwrap()
    }

    fn rad(m: &[u32], a: Rational) -> Extension {
        Extension::new(ExtensionSpec::radial(m.to_vec(), a)).unwrap()
    }

    /// Q as an explicit product of its roots, for comparison.
    fn from_roots(roots: &[i64]) -> Polynomial {
        product(roots.iter().map(|&r| h_root(int(-r))))
    }

    #[test]
    fn q_polynomials() {
        assert_eq!(q_polynomial(&lin(&[])).q_poly, Polynomial::from_ints(&[-1, 1], Var::H));
        assert_eq!(q_polynomial(&lin(&[2])).q_poly, from_roots(&[-5, 3, 5]));
        assert_eq!(q_polynomial(&lin(&[2, 3])).q_poly, from_roots(&[-5, -7, 5, 7]));
        let q = q_polynomial(&rad(&[2], rat(7, 2)));
        assert_eq!(q.order, 6);
        assert_eq!(q.q_poly.eval(&rat(11, 2)), int(15120));
        assert_eq!((q.period, q.step), (3, int(6)));
        assert_eq!(q_polynomial(&rad(&[], rat(7, 2))).order, 2);
    }

    #[test]
    fn documented_elements() {
        assert_eq!(ladder_down_sq(&lin(&[2]), 0).unwrap(), int(48));
        assert_eq!(ladder_down_sq(&lin(&[2, 3]), 0).unwrap(), int(1152));
        assert_eq!(ladder_down_sq(&lin(&[2, 3]), 2).unwrap(), int(0));
        assert_eq!(ladder_down_sq(&lin(&[2, 3]), 1).unwrap(), int(640));
        assert_eq!(ladder_down_sq(&rad(&[2], rat(7, 2)), 0).unwrap(), int(15120));
        assert_eq!(ladder_down_sq(&lin(&[]), 3).unwrap(), int(6));
        assert!(ladder_down_sq(&lin(&[2]), -1).is_err());
    }

    #[test]
    fn tables_and_chain_starts() {
        let t = build_table(&lin(&[2, 3]), 10).unwrap();
        assert_eq!(t.chain_starts, BTreeSet::from([-4, -3, 2, 3]));
        assert_eq!(t.zero_modes, t.chain_starts);
        let t = build_table(&lin(&[2]), 10).unwrap();
        assert_eq!(t.chain_starts, BTreeSet::from([-3, 1, 2]));
        let t = build_table(&lin(&[]), 5).unwrap();
        assert_eq!((t.chain_starts.clone(), t.zero_modes.clone()), (BTreeSet::from([0]), BTreeSet::from([0])));
    }

    #[test]
    fn closed_forms_equal_q_of_energy() {
        for m in admissible_lists(6) {
            let e = lin(&m);
            pha_check(&e, 50).unwrap();
            for a in [rat(7, 2), rat(11, 2), rat(25, 2)] {
                if let Ok(e) = Extension::new(ExtensionSpec::radial(m.clone(), a)) {
                    pha_check(&e, 30).unwrap();
                }
            }
        }
        pha_check(&lin(&[]), 20).unwrap();
        pha_check(&rad(&[], rat(3, 2)), 20).unwrap();
    }

    #[test]
    fn radial_table_is_scaled_linear_table() {
        for m in admissible_lists(4) {
            let l = lin(&m);
            let mk = *m.last().unwrap() as i64;
            for a in [rat(13, 2), rat(17, 2)] {
                let r = rad(&m, a.clone());
                for level in l.spectrum(25) {
                    let nu = level.nu;
                    let k = int(m.len() as i64);
                    let factor = pow2(mk as u64 + 1) * rising(&(int(nu) + &a + &k - int(mk)), mk as u64 + 1);
                    let lhs = ladder_down_sq(&r, nu).unwrap();
                    let rhs = ladder_down_sq(&l, nu).unwrap() * if nu < 0 { int(0) } else { factor };
                    assert_eq!(lhs, rhs, "{m:?} alpha={a} nu={nu}");
                }
            }
        }
    }

    #[test]
    fn zero_modes_are_chain_starts() {
        for m in admissible_lists(6) {
            let t = build_table(&lin(&m), 3 * (*m.last().unwrap() as i64 + 1)).unwrap();
            assert_eq!(t.zero_modes, t.chain_starts, "{m:?}");
            assert_eq!(t.chain_starts.len(), *m.last().unwrap() as usize + 1);
        }
    }

    proptest! {
        #[test]
        fn chains_partition_the_spectrum(idx in 0usize..31, nu in -8i64..200) {
            let lists = admissible_lists(6);
            let m = &lists[idx % lists.len()];
            let spec = ExtensionSpec::linear(m.clone());
            prop_assume!(spec.in_spectrum(nu));
            let p = spec.period() as i64;
            let hits: Vec<i64> = chain_starts(&spec)
                .into_iter()
                .filter(|&s| nu >= s && (nu - s) % p == 0)
                .collect();
            prop_assert_eq!(hits.len(), 1);
        }

        #[test]
        fn squared_elements_nonnegative(idx in 0usize..31, nu in 0i64..120) {
            let lists = admissible_lists(6);
            let e = lin(&lists[idx % lists.len()]);
            prop_assert!(!ladder_down_sq(&e, nu).unwrap().is_negative());
        }
    }
}
