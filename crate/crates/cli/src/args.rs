use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rexspec::exactpoly::{parse_rational, Rational};
use rexspec::extension::{Extension, ExtensionSpec, Kind};
use rexspec::super2d::{make_system, Family, System2D};
use rexspec::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "rexspec", version, about = "Exact spectra, ladder algebras and 2D superintegrable systems of rationally-extended oscillators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Potential coefficients and admissibility report of a 1D extension
    Build(OneDim),
    /// Energy levels of a 1D extension
    Spectrum(OneDim),
    /// Squared ladder elements, zero modes and chain starts
    Ladder(OneDim),
    /// 2D energies, basis states and degeneracies
    System(TwoDim),
    /// Unirrep content (s values) per level
    Unirreps(TwoDim),
    /// States annihilated by I+ and I-
    Zeromodes(TwoDim),
    /// Run every identity check and report pass/fail
    Verify(Verify),
    /// Plot-ready samples of the potential, a wavefunction or the level diagram
    PlotData(PlotData),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    /// linear or radial
    #[arg(long, default_value = "linear")]
    pub kind: String,
    /// Seed degrees, comma separated (empty for the plain oscillator)
    #[arg(long, default_value = "")]
    pub m: String,
    /// Radial parameter as an exact rational, e.g. 7/2
    #[arg(long)]
    pub alpha: Option<String>,
}

#[derive(Args, Debug)]
pub struct OneDim {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Highest quantum number listed
    #[arg(long, default_value_t = 20)]
    pub nu_max: i64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct SystemArgs {
    /// Family a-g
    #[arg(long)]
    pub family: String,
    /// Seed degrees on the x axis
    #[arg(long, default_value = "")]
    pub m: String,
    /// Seed degrees on the y axis (families e-g)
    #[arg(long, default_value = "")]
    pub n: String,
    /// Radial parameter of the x axis (and of y unless --alpha-y is given)
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub alpha_y: Option<String>,
}

#[derive(Args, Debug)]
pub struct TwoDim {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Level range `a..b` (inclusive) or a single level
    #[arg(long = "N", allow_hyphen_values = true)]
    pub levels: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Args, Debug)]
pub struct Verify {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Highest quantum number for the ladder identities
    #[arg(long, default_value_t = 50)]
    pub nu_max: i64,
    /// Highest 2D level for the commutator check
    #[arg(long = "N-max", default_value_t = 12)]
    pub n_max: i64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Series {
    Potential,
    Wavefunction,
    Levels,
}

#[derive(Args, Debug)]
pub struct PlotData {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[arg(long, value_enum, default_value = "levels")]
    pub series: Series,
    /// Quantum number of the sampled wavefunction
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<i64>,
    #[arg(long, default_value_t = 20)]
    pub nu_max: i64,
    #[arg(long, default_value_t = 801)]
    pub points: usize,
    /// Half-width (linear) or outer edge (radial) of the sampled domain
    #[arg(long)]
    pub length: Option<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::parameter(format!("bad seed degree {t:?}"))))
        .collect()
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| Error::parameter(format!("bad level {t:?} in {s:?}")));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Error::parameter(format!("empty level range {s:?}")));
            }
            Ok(a..=b)
        }
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

fn parse_alpha(s: &Option<String>) -> Result<Option<Rational>> {
    s.as_deref().map(parse_rational).transpose()
}

fn make_extension(kind: Kind, m: Vec<u32>, alpha: Option<Rational>) -> Result<Extension> {
    Extension::new(ExtensionSpec { kind, m, alpha })
}

impl SpecArgs {
    pub fn spec(&self) -> Result<ExtensionSpec> {
        let kind: Kind = self.kind.parse()?;
        Ok(ExtensionSpec { kind, m: parse_list(&self.m)?, alpha: parse_alpha(&self.alpha)? })
    }

    pub fn extension(&self) -> Result<Extension> {
        Extension::new(self.spec()?)
    }
}

impl SystemArgs {
    pub fn system(&self) -> Result<System2D> {
        let family: Family = self.family.parse()?;
        let (kx, ky) = family.kinds();
        let ax = parse_alpha(&self.alpha)?;
        let ay = match &self.alpha_y {
            Some(_) => parse_alpha(&self.alpha_y)?,
            None => ax.clone(),
        };
        let alpha_for = |kind: Kind, a: Option<Rational>, axis: &str| -> Result<Option<Rational>> {
            match kind {
                Kind::Radial => a.map(Some).ok_or_else(|| Error::parameter(format!("family {family} needs --alpha for the {axis} axis"))),
                Kind::Linear => Ok(None),
            }
        };
        let (mx, my) = (parse_list(&self.m)?, parse_list(&self.n)?);
        if !family.both_extended() && !my.is_empty() {
            return Err(Error::parameter(format!("family {family} has a plain y axis; drop --n")));
        }
        let x = make_extension(kx, mx, alpha_for(kx, ax, "x")?)?;
        let y = make_extension(ky, my, alpha_for(ky, ay, "y")?)?;
        make_system(family, x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-3..5").unwrap(), -3..=5);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("5..1").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("2,3").unwrap(), vec![2, 3]);
        assert_eq!(parse_list("").unwrap(), Vec::<u32>::new());
        assert!(parse_list("2,x").is_err());
    }
}
