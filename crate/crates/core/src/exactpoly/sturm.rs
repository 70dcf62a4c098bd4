//! Exact real-root counting with Sturm sequences.

use num_traits::{Signed, Zero};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    AllReals,
    /// The open half-line `(0, ∞)`.
    PositiveReals,
}

fn sturm_sequence(p: &Polynomial) -> Vec<Polynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        // positive rescaling keeps the sign pattern and the coefficients small
        seq.push((-&r).sign_normalized());
    }
    seq
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_pos_inf(p: &Polynomial) -> i8 {
    p.leading().map_or(0, |l| if l.is_positive() { 1 } else { -1 })
}

fn sign_at_neg_inf(p: &Polynomial) -> i8 {
    let s = sign_at_pos_inf(p);
    if p.degree().unwrap_or(0) % 2 == 1 {
        -s
    } else {
        s
    }
}

fn sign_at_zero(p: &Polynomial) -> i8 {
    let c = p.coeff(0);
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of `p` in `region`.
pub fn count_real_roots(p: &Polynomial, region: Region) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::parameter("root count of the zero polynomial"));
    }
    match region {
        Region::AllReals => {
            let seq = sturm_sequence(p);
            let lo = sign_changes(seq.iter().map(sign_at_neg_inf));
            let hi = sign_changes(seq.iter().map(sign_at_pos_inf));
            Ok(lo - hi)
        }
        Region::PositiveReals => {
            // a root at 0 lies outside the open region; strip it so 0 is a regular endpoint
            let q = p.shift_down(p.trailing_zeros());
            let seq = sturm_sequence(&q);
            let lo = sign_changes(seq.iter().map(sign_at_zero));
            let hi = sign_changes(seq.iter().map(sign_at_pos_inf));
            Ok(lo - hi)
        }
    }
}

/// True when `p` has no root in `region`.
pub fn certify_no_roots(p: &Polynomial, region: Region) -> Result<bool> {
    Ok(count_real_roots(p, region)? == 0)
}
