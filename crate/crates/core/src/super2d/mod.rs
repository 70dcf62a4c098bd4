//! Two-dimensional superintegrable systems `H = H_x + H_y` built from an
//! extended oscillator on one or both axes.
//!
//! States are `|N, ν_x⟩` with `N = ν_x + ν_y + 1`. The integrals are
//! `K = (H_x − H_y)/(2λ̄)`, `I₊ = a_x†^{n₁} a_y^{n₂}` and `I₋ = I₊†`, with
//! `n₁λ_x = n₂λ_y = λ̄`. Every amplitude is computed exactly by composing the
//! one-dimensional ladder actions.

mod structure;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactpoly::rational::{int, rat};
use crate::exactpoly::Rational;
use crate::extension::{Extension, Kind};
use crate::ladder::ladder_down_sq;

pub use structure::{commutator_check, structure_poly, Bivariate, CommutatorReport, StructurePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G];

    /// Oscillator kinds on the x and y axes.
    pub fn kinds(self) -> (Kind, Kind) {
        match self {
            Family::A | Family::E => (Kind::Linear, Kind::Linear),
            Family::B => (Kind::Radial, Kind::Linear),
            Family::C | Family::G => (Kind::Linear, Kind::Radial),
            Family::D | Family::F => (Kind::Radial, Kind::Radial),
        }
    }

    /// True for e–g, where both axes carry an extension.
    pub fn both_extended(self) -> bool {
        matches!(self, Family::E | Family::F | Family::G)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::E => "e",
            Family::F => "f",
            Family::G => "g",
        };
        f.write_str(c)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "b" => Ok(Family::B),
            "c" => Ok(Family::C),
            "d" => Ok(Family::D),
            "e" => Ok(Family::E),
            "f" => Ok(Family::F),
            "g" => Ok(Family::G),
            _ => Err(Error::parameter(format!("unknown family {s:?}; expected one of a-g"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System2D {
    pub family: Family,
    pub x: Extension,
    pub y: Extension,
    /// `E_N = 2N + gamma`.
    pub gamma: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State2D {
    pub n: i64,
    pub nu_x: i64,
    pub nu_y: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub amplitude_sq: Rational,
    /// `None` when the state is annihilated.
    pub target: Option<State2D>,
}

/// Builds a system, checking that the axis kinds fit the family. For a–d the
/// y axis must be a plain oscillator; for e–g both axes are extended.
pub fn make_system(family: Family, x: Extension, y: Extension) -> Result<System2D> {
    let (kx, ky) = family.kinds();
    if x.spec().kind != kx || y.spec().kind != ky {
        return Err(Error::parameter(format!(
            "family {family} needs a {kx} x axis and a {ky} y axis, got {} and {}",
            x.spec().kind,
            y.spec().kind
        )));
    }
    if family.both_extended() {
        if x.spec().is_plain() || y.spec().is_plain() {
            return Err(Error::parameter(format!("family {family} needs extensions on both axes")));
        }
    } else if !y.spec().is_plain() {
        return Err(Error::parameter(format!("family {family} needs a plain oscillator on the y axis")));
    }
    let gamma = x.spec().energy_offset() + y.spec().energy_offset() - int(2);
    Ok(System2D { family, x, y, gamma })
}

impl System2D {
    pub fn px(&self) -> i64 {
        self.x.spec().period() as i64
    }

    pub fn py(&self) -> i64 {
        self.y.spec().period() as i64
    }

    /// Power of `a_x†` in `I₊`.
    pub fn n1(&self) -> i64 {
        self.py()
    }

    /// Power of `a_y` in `I₊`.
    pub fn n2(&self) -> i64 {
        self.px()
    }

    pub fn lambda_x(&self) -> i64 {
        2 * self.px()
    }

    pub fn lambda_y(&self) -> i64 {
        2 * self.py()
    }

    pub fn lambda_bar(&self) -> i64 {
        2 * self.px() * self.py()
    }

    /// Shift of `ν_x` under `I₊`, also the period of the `N = λ·period + μ` labels.
    pub fn period(&self) -> i64 {
        self.px() * self.py()
    }

    fn lowest_nu(ext: &Extension) -> i64 {
        ext.spec().m_k().map_or(0, |m| -(m as i64) - 1)
    }

    /// Smallest `N` with at least one state.
    pub fn min_level(&self) -> i64 {
        Self::lowest_nu(&self.x) + Self::lowest_nu(&self.y) + 1
    }

    pub fn is_state(&self, s: &State2D) -> bool {
        s.n == s.nu_x + s.nu_y + 1 && self.x.spec().in_spectrum(s.nu_x) && self.y.spec().in_spectrum(s.nu_y)
    }

    fn check_state(&self, s: &State2D) -> Result<()> {
        if self.is_state(s) {
            Ok(())
        } else {
            Err(Error::Index(format!("({}, {}) is not a state of family {}", s.n, s.nu_x, self.family)))
        }
    }

    pub fn state(&self, n: i64, nu_x: i64) -> Result<State2D> {
        let s = State2D { n, nu_x, nu_y: n - nu_x - 1 };
        self.check_state(&s)?;
        Ok(s)
    }
}

/// The `|N, ν_x⟩` basis at level `N`, ascending in `ν_x`. Empty below the
/// lowest level.
pub fn states(sys: &System2D, n: i64) -> Vec<State2D> {
    let mut cand: BTreeSet<i64> = sys.x.spec().m.iter().map(|&m| -(m as i64) - 1).collect();
    cand.extend(0..n.max(0));
    cand.extend(sys.y.spec().m.iter().map(|&m| n + m as i64));
    cand.into_iter()
        .map(|nu_x| State2D { n, nu_x, nu_y: n - nu_x - 1 })
        .filter(|s| sys.is_state(s))
        .collect()
}

pub fn energy(sys: &System2D, n: i64) -> Rational {
    int(2 * n) + &sys.gamma
}

/// Closed-form level degeneracy. For a–d: `k−j+1` on `[−m_j, −m_{j−1}−1]`,
/// `k` on `[−m₁, 0]`, `N+k` for `N ≥ 1`. For one-step e–g: 1 on
/// `{−m−n−1} ∪ [−m, −n−1]`, 2 on `[−n, 0]`, `N+2` for `N ≥ 1`, with
/// `m ≥ n` the larger seed degree.
pub fn degeneracy_closed(sys: &System2D, n: i64) -> Result<u64> {
    if sys.family.both_extended() {
        let (mx, my) = (&sys.x.spec().m, &sys.y.spec().m);
        if mx.len() != 1 || my.len() != 1 {
            return Err(Error::Unsupported(
                "closed-form degeneracy for families e-g is known for one-step extensions only".into(),
            ));
        }
        let (m, q) = (mx[0].max(my[0]) as i64, mx[0].min(my[0]) as i64);
        return Ok(if n == -m - q - 1 || (-m..=-q - 1).contains(&n) {
            1
        } else if (-q..=0).contains(&n) {
            2
        } else if n >= 1 {
            (n + 2) as u64
        } else {
            0
        });
    }
    let m: Vec<i64> = sys.x.spec().m.iter().map(|&v| v as i64).collect();
    let k = m.len() as i64;
    if n >= 1 {
        return Ok((n + k) as u64);
    }
    if k > 0 && n >= -m[0] {
        return Ok(k as u64);
    }
    for j in 2..=k {
        let (lo, hi) = (-m[j as usize - 1], -m[j as usize - 2] - 1);
        if (lo..=hi).contains(&n) {
            return Ok((k - j + 1) as u64);
        }
    }
    Ok(0)
}

/// Eigenvalue of `K = (H_x − H_y)/(2λ̄)` on a basis state.
pub fn k_eigenvalue(sys: &System2D, s: &State2D) -> Result<Rational> {
    sys.check_state(s)?;
    let ex = sys.x.spec().energy(s.nu_x);
    let ey = sys.y.spec().energy(s.nu_y);
    Ok((ex - ey) / int(2 * sys.lambda_bar()))
}

/// Product of `|c ψ|²` over `steps` successive lowerings starting at `nu`,
/// stopping at the first zero.
fn lower_product(ext: &Extension, nu: i64, steps: i64) -> Result<Rational> {
    let p = ext.spec().period() as i64;
    let mut acc = int(1);
    for t in 0..steps {
        let f = ladder_down_sq(ext, nu - t * p)?;
        if f.is_zero() {
            return Ok(f);
        }
        acc *= f;
    }
    Ok(acc)
}

/// Product of `|c† ψ|²` over `steps` successive raisings starting at `nu`.
fn raise_product(ext: &Extension, nu: i64, steps: i64) -> Result<Rational> {
    let p = ext.spec().period() as i64;
    let mut acc = int(1);
    for t in 1..=steps {
        let f = ladder_down_sq(ext, nu + t * p)?;
        if f.is_zero() {
            return Ok(f);
        }
        acc *= f;
    }
    Ok(acc)
}

/// `‖I± |N, ν_x⟩‖²` and the target state.
pub fn integral_action_sq(sys: &System2D, s: &State2D, dir: Direction) -> Result<Action> {
    sys.check_state(s)?;
    let shift = sys.period();
    let (amp, nu_x) = match dir {
        Direction::Plus => {
            let y = lower_product(&sys.y, s.nu_y, sys.n2())?;
            let x = if y.is_zero() { y.clone() } else { raise_product(&sys.x, s.nu_x, sys.n1())? };
            (y * x, s.nu_x + shift)
        }
        Direction::Minus => {
            let x = lower_product(&sys.x, s.nu_x, sys.n1())?;
            let y = if x.is_zero() { x.clone() } else { raise_product(&sys.y, s.nu_y, sys.n2())? };
            (x * y, s.nu_x - shift)
        }
    };
    let target = if amp.is_zero() {
        None
    } else {
        let t = State2D { n: s.n, nu_x, nu_y: s.n - nu_x - 1 };
        if !sys.is_state(&t) {
            return Err(Error::consistency(format!("nonzero amplitude into non-state ({}, {})", t.n, t.nu_x)));
        }
        Some(t)
    };
    Ok(Action { amplitude_sq: amp, target })
}

/// `ν_x` values at level `N` annihilated by `I₊` and by `I₋`.
pub fn zero_modes(sys: &System2D, n: i64) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
    let mut plus = BTreeSet::new();
    let mut minus = BTreeSet::new();
    for s in states(sys, n) {
        if integral_action_sq(sys, &s, Direction::Plus)?.target.is_none() {
            plus.insert(s.nu_x);
        }
        if integral_action_sq(sys, &s, Direction::Minus)?.target.is_none() {
            minus.insert(s.nu_x);
        }
    }
    Ok((plus, minus))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuDecomposition {
    pub lambda: i64,
    pub mu: i64,
    /// `μ = ρ(m+1) + σ`, for family e with equal one-step seeds `m₁ = n₁ = m`.
    pub rho_sigma: Option<(i64, i64)>,
}

/// Euclidean split `N = λ·period + μ` with `0 ≤ μ < period`.
pub fn mu_decompose(sys: &System2D, n: i64) -> MuDecomposition {
    let p = sys.period();
    let (lambda, mu) = (n.div_euclid(p), n.rem_euclid(p));
    let (mx, my) = (&sys.x.spec().m, &sys.y.spec().m);
    let rho_sigma = (sys.family == Family::E && mx.len() == 1 && mx == my).then(|| {
        let m1 = mx[0] as i64 + 1;
        (mu.div_euclid(m1), mu.rem_euclid(m1))
    });
    MuDecomposition { lambda, mu, rho_sigma }
}

/// One finite unirrep: the `I₊` string starting at the `I₋` zero mode `start`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub start_nu_x: i64,
    pub end_nu_x: i64,
    /// `2s`, the number of `I₊` steps before annihilation.
    pub two_s: u64,
}

impl Chain {
    pub fn s(&self) -> Rational {
        rat(self.two_s as i64, 2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnirrepRecord {
    pub n: i64,
    pub lambda: i64,
    pub mu: i64,
    /// Chains ordered by ascending starting `ν_x`; position is the label τ.
    pub chains: Vec<Chain>,
    pub unirrep_count: usize,
    pub degeneracy: u64,
}

impl UnirrepRecord {
    /// `s` values, largest first.
    pub fn s_multiset(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.chains.iter().map(Chain::s).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }
}

/// Follows `I₊` from every `I₋` zero mode until annihilation and records
/// `s = n/2`. The total `Σ(2s+1)` must match both the basis size and the
/// closed-form degeneracy (where one is known).
pub fn unirreps(sys: &System2D, n: i64) -> Result<UnirrepRecord> {
    let basis = states(sys, n);
    let (_, minus) = zero_modes(sys, n)?;
    let mut chains = Vec::new();
    for &start in &minus {
        let mut cur = sys.state(n, start)?;
        let mut steps = 0u64;
        while let Some(next) = integral_action_sq(sys, &cur, Direction::Plus)?.target {
            steps += 1;
            if steps as usize > basis.len() {
                return Err(Error::consistency(format!(
                    "I+ string from nu_x = {start} at N = {n} did not terminate within {} steps",
                    basis.len()
                )));
            }
            cur = next;
        }
        chains.push(Chain { start_nu_x: start, end_nu_x: cur.nu_x, two_s: steps });
    }
    let degeneracy: u64 = chains.iter().map(|c| c.two_s + 1).sum();
    if degeneracy != basis.len() as u64 {
        return Err(Error::consistency(format!(
            "N = {n}: unirreps cover {degeneracy} states, basis has {}",
            basis.len()
        )));
    }
    match degeneracy_closed(sys, n) {
        Ok(d) if d != degeneracy => {
            return Err(Error::consistency(format!("N = {n}: unirreps give {degeneracy}, closed form {d}")));
        }
        Ok(_) | Err(Error::Unsupported(_)) => {}
        Err(e) => return Err(e),
    }
    let MuDecomposition { lambda, mu, .. } = mu_decompose(sys, n);
    Ok(UnirrepRecord { n, lambda, mu, unirrep_count: chains.len(), chains, degeneracy })
}
