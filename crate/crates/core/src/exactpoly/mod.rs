//! Exact polynomial machinery over ℚ.

pub mod classical;
pub mod gauged;
pub mod polynomial;
pub mod rational;
pub mod sturm;
pub mod wronskian;

pub use classical::{classical_poly, hermite, laguerre, laguerre_negated, pseudo_hermite, PolyFamily};
pub use gauged::{gauged_wronskian, GaugedFunction};
pub use polynomial::{horner_f64, Polynomial, Var};
pub use rational::{parse_rational, Rational};
pub use sturm::{certify_no_roots, count_real_roots, Region};
pub use wronskian::{log_second_derivative, wronskian, wronskian_or_one};
