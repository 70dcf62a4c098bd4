//! Multi-step type III extensions of the harmonic (linear) and radial
//! oscillators: admissibility, potentials, spectra, wavefunctions, and the
//! state-adding / state-deleting equivalence.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{
    certify_no_roots, count_real_roots, gauged_wronskian, hermite, laguerre, laguerre_negated, pseudo_hermite,
    horner_f64, wronskian_or_one, GaugedFunction, Polynomial, Rational, Region, Var,
};
use crate::exactpoly::rational::{int, rat, to_f64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Linear,
    Radial,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Linear => "linear",
            Kind::Radial => "radial",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Kind::Linear),
            "radial" => Ok(Kind::Radial),
            _ => Err(Error::parameter(format!("unknown oscillator kind {s:?}"))),
        }
    }
}

/// One 1D system: which oscillator, the seed degrees `m₁ < … < m_k`, and
/// `α = l + 1/2` for the radial case. An empty `m` is the plain oscillator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub kind: Kind,
    pub m: Vec<u32>,
    pub alpha: Option<Rational>,
}

impl ExtensionSpec {
    pub fn linear(m: impl Into<Vec<u32>>) -> Self {
        ExtensionSpec { kind: Kind::Linear, m: m.into(), alpha: None }
    }

    pub fn radial(m: impl Into<Vec<u32>>, alpha: Rational) -> Self {
        ExtensionSpec { kind: Kind::Radial, m: m.into(), alpha: Some(alpha) }
    }

    pub fn plain_linear() -> Self {
        Self::linear(Vec::new())
    }

    pub fn plain_radial(alpha: Rational) -> Self {
        Self::radial(Vec::new(), alpha)
    }

    pub fn k(&self) -> usize {
        self.m.len()
    }

    pub fn m_k(&self) -> Option<u32> {
        self.m.last().copied()
    }

    pub fn is_plain(&self) -> bool {
        self.m.is_empty()
    }

    pub fn var(&self) -> Var {
        match self.kind {
            Kind::Linear => Var::X,
            Kind::Radial => Var::Z,
        }
    }

    /// Ladder period in ν: `m_k + 1`, or 1 for the plain oscillator.
    pub fn period(&self) -> u32 {
        self.m_k().map_or(1, |m| m + 1)
    }

    fn alpha_or_zero(&self) -> Rational {
        self.alpha.clone().unwrap_or_else(Rational::zero)
    }

    /// `α + k`, the index of the underlying radial oscillator.
    pub fn alpha_k(&self) -> Rational {
        self.alpha_or_zero() + int(self.k() as i64)
    }

    /// `c` in `E_ν = 2ν + c`.
    pub fn energy_offset(&self) -> Rational {
        match self.kind {
            Kind::Linear => Rational::one(),
            Kind::Radial => self.alpha_k() + Rational::one(),
        }
    }

    pub fn energy(&self, nu: i64) -> Rational {
        int(2 * nu) + self.energy_offset()
    }

    pub fn in_spectrum(&self, nu: i64) -> bool {
        nu >= 0 || self.m.iter().any(|&m| nu == -(m as i64) - 1)
    }

    /// `{1, …, m_k} \ {m_k − m_i : i < k}`: the indices kept by the
    /// state-deleting construction, which are also the positive zero modes of
    /// the lowering operator.
    pub fn gap_indices(&self) -> Vec<u32> {
        let Some(mk) = self.m_k() else { return Vec::new() };
        let removed: Vec<u32> = self.m[..self.k() - 1].iter().map(|&m| mk - m).collect();
        (1..=mk).filter(|j| !removed.contains(j)).collect()
    }
}

impl fmt::Display for ExtensionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(|x| x.to_string()).collect();
        write!(f, "{} m=({})", self.kind, m.join(","))?;
        if let Some(a) = &self.alpha {
            write!(f, " alpha={a}")?;
        }
        Ok(())
    }
}

/// One reason a spec is not admissible. Positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotIncreasing { position: usize, previous: u32, value: u32 },
    Parity { position: usize, value: u32 },
    MissingAlpha,
    UnexpectedAlpha,
    NonPositiveAlpha { alpha: Rational },
    AlphaBound { alpha_plus_k: Rational, bound: u32 },
    SeedWronskianRoots { roots: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotIncreasing { position, previous, value } => {
                write!(f, "m_{position} = {value} does not exceed m_{} = {previous}", position - 1)
            }
            Violation::Parity { position, value } => {
                let want = if position % 2 == 1 { "even" } else { "odd" };
                write!(f, "m_{position} = {value} must be {want}")
            }
            Violation::MissingAlpha => f.write_str("radial oscillator requires alpha"),
            Violation::UnexpectedAlpha => f.write_str("linear oscillator takes no alpha"),
            Violation::NonPositiveAlpha { alpha } => write!(f, "alpha = {alpha} must be positive"),
            Violation::AlphaBound { alpha_plus_k, bound } => {
                write!(f, "alpha + k = {alpha_plus_k} must exceed m_k + 1 = {bound}")
            }
            Violation::SeedWronskianRoots { roots } => {
                write!(f, "seed Wronskian has {roots} root(s) on the domain")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn seed_polys(spec: &ExtensionSpec) -> Vec<Polynomial> {
    match spec.kind {
        Kind::Linear => spec.m.iter().map(|&m| pseudo_hermite(m as usize)).collect(),
        Kind::Radial => {
            let a = -spec.alpha_k();
            spec.m.iter().map(|&m| laguerre_negated(m as usize, &a)).collect()
        }
    }
}

fn domain(kind: Kind) -> Region {
    match kind {
        Kind::Linear => Region::AllReals,
        Kind::Radial => Region::PositiveReals,
    }
}

/// Checks ordering, parity alternation, the radial α-bound, and that the seed
/// Wronskian has no root on the domain. Never fails; problems are reported.
pub fn validate(spec: &ExtensionSpec) -> AdmissibilityReport {
    let mut v = Vec::new();
    for (i, w) in spec.m.windows(2).enumerate() {
        if w[1] <= w[0] {
            v.push(Violation::NotIncreasing { position: i + 2, previous: w[0], value: w[1] });
        }
    }
    for (i, &m) in spec.m.iter().enumerate() {
        // even at odd positions, odd at even positions
        if m % 2 != (i as u32) % 2 {
            v.push(Violation::Parity { position: i + 1, value: m });
        }
    }
    match (spec.kind, &spec.alpha) {
        (Kind::Radial, None) => v.push(Violation::MissingAlpha),
        (Kind::Linear, Some(_)) => v.push(Violation::UnexpectedAlpha),
        (Kind::Radial, Some(a)) => {
            if !a.is_positive() {
                v.push(Violation::NonPositiveAlpha { alpha: a.clone() });
            }
            if let Some(mk) = spec.m_k() {
                if spec.alpha_k() <= int(mk as i64 + 1) {
                    v.push(Violation::AlphaBound { alpha_plus_k: spec.alpha_k(), bound: mk + 1 });
                }
            }
        }
        (Kind::Linear, None) => {}
    }
    if v.is_empty() && !spec.is_plain() {
        let w = wronskian_or_one(&seed_polys(spec), spec.var()).expect("seed polynomials share a variable");
        match count_real_roots(&w, domain(spec.kind)) {
            Ok(0) => {}
            Ok(roots) => v.push(Violation::SeedWronskianRoots { roots }),
            Err(_) => v.push(Violation::SeedWronskianRoots { roots: usize::MAX }),
        }
    }
    AdmissibilityReport { violations: v }
}

/// All parity-alternating lists with `m_k ≤ max_mk` (and `k ≥ 1`).
pub fn admissible_lists(max_mk: u32) -> Vec<Vec<u32>> {
    fn extend(cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
        let start = cur.last().map_or(0, |&m| m + 1);
        let parity = cur.len() as u32 % 2;
        for m in (start..=max).filter(|m| m % 2 == parity) {
            cur.push(m);
            out.push(cur.clone());
            extend(cur, max, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_mk, &mut out);
    out
}

/// `V(x) = base(x) + shift + numerator/denominator`.
///
/// Linear: base `x²`, rational part `−2 (log W)''` in `x`. Radial: base
/// `x²/4 + l(l+1)/x²`, rational part `−2 d²/dx² log W̃` written in
/// `z = x²/2` via `d²/dx² = d/dz + 2z d²/dz²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialFunction {
    pub kind: Kind,
    pub alpha: Option<Rational>,
    pub shift: Rational,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl PotentialFunction {
    /// `l(l+1) = (2α−1)(2α+1)/4`; zero for the linear oscillator.
    pub fn centrifugal(&self) -> Rational {
        match &self.alpha {
            Some(a) => (a * int(2) - int(1)) * (a * int(2) + int(1)) / int(4),
            None => Rational::zero(),
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.sampler()(x)
    }

    /// Numeric evaluator in `x` with the coefficients converted once.
    pub fn sampler(&self) -> impl Fn(f64) -> f64 {
        let (num, den) = (self.numerator.f64_coeffs(), self.denominator.f64_coeffs());
        let (shift, cent) = (to_f64(&self.shift), to_f64(&self.centrifugal()));
        let kind = self.kind;
        move |x| match kind {
            Kind::Linear => x * x + shift + horner_f64(&num, x) / horner_f64(&den, x),
            Kind::Radial => {
                let z = 0.5 * x * x;
                0.25 * x * x + cent / (x * x) + shift + horner_f64(&num, z) / horner_f64(&den, z)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub nu: i64,
    pub energy: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub proportional: bool,
    /// `deleted = ratio · seed`.
    pub ratio: Rational,
    pub energy_shift: Rational,
}

/// Unnormalized eigenfunction `numerator / denominator(var)`, where the
/// numerator carries the power and Gaussian factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wavefunction {
    pub nu: i64,
    pub energy: Rational,
    pub numerator: GaugedFunction,
    pub denominator: Polynomial,
}

impl Wavefunction {
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.sampler()(x)
    }

    /// Numeric evaluator of `ψ` with the coefficients converted once.
    pub fn sampler(&self) -> impl Fn(f64) -> f64 {
        let num = self.numerator.sampler();
        let den = GaugedFunction::from_poly(self.denominator.clone()).sampler();
        move |x| num(x) / den(x)
    }

    /// `[ψ, ψ', ψ'']` at `x`, from exact derivatives of numerator and denominator.
    pub fn eval_dx_f64(&self, x: f64) -> [f64; 3] {
        let d = GaugedFunction::from_poly(self.denominator.clone());
        let (n0, n1, n2) =
            (self.numerator.eval_dx_f64(x, 0), self.numerator.eval_dx_f64(x, 1), self.numerator.eval_dx_f64(x, 2));
        let (d0, d1, d2) = (d.eval_dx_f64(x, 0), d.eval_dx_f64(x, 1), d.eval_dx_f64(x, 2));
        let psi = n0 / d0;
        let dpsi = n1 / d0 - n0 * d1 / (d0 * d0);
        let ddpsi = n2 / d0 - 2.0 * n1 * d1 / (d0 * d0) - n0 * d2 / (d0 * d0) + 2.0 * n0 * d1 * d1 / (d0 * d0 * d0);
        [psi, dpsi, ddpsi]
    }

    /// `|−ψ'' + Vψ − Eψ|` at `x`.
    pub fn schrodinger_residual(&self, potential: &PotentialFunction, x: f64) -> f64 {
        let [psi, _, ddpsi] = self.eval_dx_f64(x);
        (-ddpsi + (potential.eval_f64(x) - to_f64(&self.energy)) * psi).abs()
    }
}

/// A spec that passed [`validate`], with its seed Wronskian cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    spec: ExtensionSpec,
    seed: Polynomial,
}

impl Extension {
    pub fn new(spec: ExtensionSpec) -> Result<Self> {
        let report = validate(&spec);
        if !report.is_ok() {
            return Err(Error::Admissibility(report.violations));
        }
        let seed = wronskian_or_one(&seed_polys(&spec), spec.var())?;
        Ok(Extension { spec, seed })
    }

    pub fn spec(&self) -> &ExtensionSpec {
        &self.spec
    }

    /// `W(𝓗_{m₁}, …)` in `x`, or `W̃(L^{(−α−k)}_{m₁}(−z), …)` in `z`.
    pub fn seed_wronskian(&self) -> &Polynomial {
        &self.seed
    }

    pub fn potential(&self) -> PotentialFunction {
        let w = &self.seed;
        let k = int(self.spec.k() as i64);
        let (w1, w2) = (w.derivative(), w.derivative().derivative());
        let m2 = int(-2);
        let (numerator, shift) = match self.spec.kind {
            Kind::Linear => ((&(&w2 * w) - &(&w1 * &w1)).scale(&m2), k * int(-2)),
            Kind::Radial => {
                let two_z = Polynomial::from_ints(&[0, 2], Var::Z);
                let inner = &(w * &w1) + &(&two_z * &(&(w * &w2) - &(&w1 * &w1)));
                (inner.scale(&m2), -k)
            }
        };
        PotentialFunction {
            kind: self.spec.kind,
            alpha: self.spec.alpha.clone(),
            shift,
            numerator,
            denominator: w * w,
        }
    }

    pub fn energy(&self, nu: i64) -> Result<Rational> {
        self.check_index(nu)?;
        Ok(self.spec.energy(nu))
    }

    fn check_index(&self, nu: i64) -> Result<()> {
        if self.spec.in_spectrum(nu) {
            Ok(())
        } else {
            Err(Error::Index(format!("nu = {nu} is not a level of {}", self.spec)))
        }
    }

    /// All levels with `ν ≤ nu_max`, ascending in energy.
    pub fn spectrum(&self, nu_max: i64) -> Vec<Level> {
        let mut nus: Vec<i64> = self.spec.m.iter().rev().map(|&m| -(m as i64) - 1).collect();
        nus.extend(0..=nu_max.max(-1));
        nus.retain(|&n| n <= nu_max);
        nus.into_iter().map(|nu| Level { nu, energy: self.spec.energy(nu) }).collect()
    }

    /// Seed Wronskian of the state-deleting construction: Hermite (linear) or
    /// `L^{(α+k−m_k−1)}(z)` (radial) over [`ExtensionSpec::gap_indices`].
    pub fn deleted_wronskian(&self) -> Result<Polynomial> {
        let idx = self.spec.gap_indices();
        let polys: Vec<Polynomial> = match self.spec.kind {
            Kind::Linear => idx.iter().map(|&j| hermite(j as usize)).collect(),
            Kind::Radial => {
                let a = self.spec.alpha_k() - int(self.spec.m_k().map_or(0, |m| m as i64 + 1));
                idx.iter().map(|&j| laguerre(j as usize, &a)).collect()
            }
        };
        wronskian_or_one(&polys, self.spec.var())
    }

    /// Verifies that both constructions give the same potential up to a constant.
    pub fn check_equivalence(&self) -> Result<ShiftReport> {
        let deleted = self.deleted_wronskian()?;
        let ratio = deleted.ratio_to(&self.seed).ok_or_else(|| {
            Error::consistency(format!(
                "{}: seed Wronskian {} and deleted Wronskian {} are not proportional",
                self.spec, self.seed, deleted
            ))
        })?;
        let mk1 = self.spec.m_k().map_or(0, |m| m as i64 + 1);
        let energy_shift = match self.spec.kind {
            Kind::Linear => int(2 * mk1),
            Kind::Radial => int(mk1),
        };
        Ok(ShiftReport { proportional: true, ratio, energy_shift })
    }

    /// Seed solution `φ_m` of the underlying oscillator.
    pub fn seed_function(&self, m: u32) -> GaugedFunction {
        match self.spec.kind {
            Kind::Linear => GaugedFunction::new(pseudo_hermite(m as usize), int(0), int(1)),
            Kind::Radial => {
                let ak = self.spec.alpha_k();
                let power = -(&ak * int(2) - int(1)) / int(4);
                GaugedFunction::new(laguerre_negated(m as usize, &-ak.clone()), power, rat(1, 2))
            }
        }
    }

    /// Bound state `ψ_ν` of the underlying oscillator.
    pub fn oscillator_state(&self, nu: u32) -> GaugedFunction {
        match self.spec.kind {
            Kind::Linear => GaugedFunction::new(hermite(nu as usize), int(0), int(-1)),
            Kind::Radial => {
                let ak = self.spec.alpha_k();
                let power = (&ak * int(2) + int(1)) / int(4);
                GaugedFunction::new(laguerre(nu as usize, &ak), power, rat(-1, 2))
            }
        }
    }

    fn wronskian_of(&self, funcs: &[GaugedFunction]) -> Result<GaugedFunction> {
        if funcs.is_empty() {
            Ok(GaugedFunction::from_poly(Polynomial::one(self.spec.var())))
        } else {
            gauged_wronskian(funcs)
        }
    }

    /// `W(φ_{m₁}, …, φ_{m_k}, ψ_ν) / W(φ_{m₁}, …, φ_{m_k})` for `ν ≥ 0`; for
    /// `ν = −m_i − 1` the numerator omits `φ_{m_i}` instead.
    pub fn wavefunction(&self, nu: i64) -> Result<Wavefunction> {
        self.check_index(nu)?;
        let seeds: Vec<GaugedFunction> = self.spec.m.iter().map(|&m| self.seed_function(m)).collect();
        let den = self.wronskian_of(&seeds)?;
        let num = if nu >= 0 {
            let mut f = seeds.clone();
            f.push(self.oscillator_state(nu as u32));
            self.wronskian_of(&f)?
        } else {
            let skip = (-nu - 1) as u32;
            let f: Vec<GaugedFunction> =
                self.spec.m.iter().zip(&seeds).filter(|(&m, _)| m != skip).map(|(_, s)| s.clone()).collect();
            self.wronskian_of(&f)?
        };
        Ok(Wavefunction {
            nu,
            energy: self.spec.energy(nu),
            numerator: GaugedFunction::new(num.poly, &num.power - &den.power, &num.gauss - &den.gauss),
            denominator: den.poly,
        })
    }

    /// Type II bridge: `W(φ̃₀, …, φ̃_{m_k})` with `φ̃_j = χ L_j^{(−α−k)}(z)` and
    /// `χ = z^{−(2α+2k−1)/4} e^{−z/2}` must equal a constant times
    /// `χ^{m_k+1} z^{m_k(m_k+1)/4}`.
    pub fn appendix_a_check(&self) -> Result<bool> {
        if self.spec.kind != Kind::Radial {
            return Err(Error::parameter("the type II bridge applies to radial extensions only"));
        }
        let mk = self.spec.m_k().ok_or_else(|| Error::parameter("the type II bridge needs k >= 1"))?;
        let ak = self.spec.alpha_k();
        let chi_power = -(&ak * int(2) - int(1)) / int(4);
        let a = -ak;
        let funcs: Vec<GaugedFunction> = (0..=mk as usize)
            .map(|j| GaugedFunction::new(laguerre(j, &a), chi_power.clone(), rat(-1, 2)))
            .collect();
        let w = gauged_wronskian(&funcs)?;
        let n = int(mk as i64 + 1);
        let expect_power = &chi_power * &n + int(mk as i64 * (mk as i64 + 1)) / int(4);
        let expect_gauss = rat(-1, 2) * &n;
        Ok(w.poly.is_constant() && !w.poly.is_zero() && w.power == expect_power && w.gauss == expect_gauss)
    }

    /// True when the seed Wronskian has no root on the domain.
    pub fn seed_is_regular(&self) -> bool {
        certify_no_roots(&self.seed, domain(self.spec.kind)).unwrap_or(false)
    }
}
