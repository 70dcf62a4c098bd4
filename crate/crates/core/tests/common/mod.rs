//! Transcribed unirrep and zero-mode tables, used as independent oracles.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rexspec::exactpoly::rational::{int, rat};
use rexspec::exactpoly::Rational;
use rexspec::extension::{Extension, ExtensionSpec};
use rexspec::super2d::{make_system, Family, System2D};

pub fn lin(m: &[u32]) -> Extension {
    Extension::new(ExtensionSpec::linear(m.to_vec())).unwrap()
}

pub fn rad(m: &[u32], alpha: Rational) -> Extension {
    Extension::new(ExtensionSpec::radial(m.to_vec(), alpha)).unwrap()
}

pub fn family_a(m: &[u32]) -> System2D {
    make_system(Family::A, lin(m), lin(&[])).unwrap()
}

pub fn family_e(m1: u32, n1: u32) -> System2D {
    make_system(Family::E, lin(&[m1]), lin(&[n1])).unwrap()
}

fn half(n: i64) -> Rational {
    rat(n, 2)
}

fn rep(v: &mut Vec<Rational>, s: Rational, count: i64) {
    assert!(count >= 0, "negative multiplicity in table row");
    v.extend(std::iter::repeat_n(s, count as usize));
}

fn sorted_desc(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// `s` multiset for one extension on x and a plain y axis, with
/// `N = λ(m_k+1) + μ`. `None` where the level is empty.
pub fn s_values_one_axis(m: &[i64], n: i64) -> Option<Vec<Rational>> {
    let k = m.len() as i64;
    let mk = m[m.len() - 1];
    let p = mk + 1;
    let (l, mu) = (n.div_euclid(p), n.rem_euclid(p));
    // interval index j with μ ∈ I_j
    let j = (mu > 0).then(|| {
        (1..=k)
            .find(|&j| {
                let lo = mk - m[j as usize - 1] + 1;
                let hi = if j == 1 { mk } else { mk - m[j as usize - 2] };
                (lo..=hi).contains(&mu)
            })
            .expect("μ lies in some interval")
    });
    let mut v = Vec::new();
    match (l, j) {
        (l, _) if l < -1 => return None,
        (-1, None) => return None,
        (-1, Some(j)) => rep(&mut v, int(0), k - j + 1),
        (0, None) => rep(&mut v, int(0), k),
        (0, Some(j)) => {
            rep(&mut v, half(1), k - j + 1);
            rep(&mut v, int(0), mu - k + 2 * j - 2);
        }
        (l, None) => {
            rep(&mut v, half(l), k);
            rep(&mut v, half(l - 1), mk - k + 1);
        }
        (l, Some(j)) => {
            rep(&mut v, half(l + 1), k - j + 1);
            rep(&mut v, half(l), mu - k + 2 * j - 2);
            rep(&mut v, half(l - 1), mk - mu - j + 2);
        }
    }
    Some(sorted_desc(v))
}

/// `s` multiset for one-step extensions `m₁` on x and `n₁ ≤ m₁` on y, with
/// `N = λ(m₁+1)(n₁+1) + μ`.
pub fn s_values_both_axes(m1: i64, n1: i64, n: i64) -> Option<Vec<Rational>> {
    let mn = m1 * n1;
    let big = (m1 + 1) * (n1 + 1);
    let (l, mu) = (n.div_euclid(big), n.rem_euclid(big));
    // row classes
    let low = (0..mn).contains(&mu) || (mn + 1..=mn + n1).contains(&mu);
    let mid = mu == mn || (mn + n1 + 1..=mn + m1).contains(&mu);
    let top = (mn + m1 + 1..big).contains(&mu);
    let mut v = Vec::new();
    match l {
        l if l < -1 => return None,
        -1 => {
            if mid {
                rep(&mut v, int(0), 1);
            } else if top {
                rep(&mut v, int(0), 2);
            } else {
                return None;
            }
        }
        0 => {
            if low {
                rep(&mut v, int(0), mu + 2);
            } else if mid {
                rep(&mut v, half(1), 1);
                rep(&mut v, int(0), mu);
            } else {
                rep(&mut v, half(1), 2);
                rep(&mut v, int(0), mu - 2);
            }
        }
        l => {
            if low {
                rep(&mut v, half(l), mu + 2);
                rep(&mut v, half(l - 1), big - mu - 2);
            } else if mid {
                rep(&mut v, half(l + 1), 1);
                rep(&mut v, half(l), mu);
                rep(&mut v, half(l - 1), big - mu - 1);
            } else {
                rep(&mut v, half(l + 1), 2);
                rep(&mut v, half(l), mu - 2);
                rep(&mut v, half(l - 1), big - mu);
            }
        }
    }
    Some(sorted_desc(v))
}

fn negs(m: &[i64], idx: impl Iterator<Item = usize>) -> BTreeSet<i64> {
    idx.map(|i| -m[i] - 1).collect()
}

/// `I₊` zero modes (`ν_x` values) for one extension on x and a plain y axis.
pub fn zero_modes_plus_a(m: &[i64], n: i64) -> BTreeSet<i64> {
    let k = m.len();
    let mk = m[k - 1];
    let mprev = |j: usize| if j == 1 { -1 } else { m[j - 2] };
    for j in 2..=k {
        if (-m[j - 1]..=-m[j - 2] - 1).contains(&n) {
            return negs(m, j - 1..k);
        }
    }
    if (-m[0]..=0).contains(&n) {
        return negs(m, 0..k);
    }
    for j in 1..=k {
        if (mk - m[j - 1] + 1..=mk - mprev(j)).contains(&n) {
            let mut s = negs(m, 0..j - 1);
            s.extend(0..n);
            return s;
        }
    }
    if n >= mk + 2 {
        return (n - mk - 1..n).collect();
    }
    BTreeSet::new()
}

/// `I₋` zero modes for one extension on x and a plain y axis.
pub fn zero_modes_minus_a(m: &[i64], n: i64) -> BTreeSet<i64> {
    if n <= 0 {
        return zero_modes_plus_a(m, n);
    }
    let mk = m[m.len() - 1];
    let gaps: BTreeSet<i64> = m[..m.len() - 1].iter().map(|mi| mk - mi).collect();
    let mut s = negs(m, 0..m.len());
    s.extend((1..=(n - 1).min(mk)).filter(|j| !gaps.contains(j)));
    s
}

/// `I₊` zero modes for one-step extensions `m₁` (x) and `n₁ ≤ m₁` (y).
pub fn zero_modes_plus_e(m1: i64, n1: i64, n: i64) -> BTreeSet<i64> {
    let mn = m1 * n1;
    let big = (m1 + 1) * (n1 + 1);
    let neg = -m1 - 1;
    let range = |a: i64, b: i64| (a..b).collect::<BTreeSet<i64>>();
    let mut s = BTreeSet::new();
    if n == -m1 - n1 - 1 || (-m1..=-n1 - 1).contains(&n) {
        s.insert(neg);
    } else if (-n1..=0).contains(&n) {
        s.extend([neg, n + n1]);
    } else if (1..mn).contains(&n) || (mn + 1..=(m1 + 1) * n1).contains(&n) {
        s = range(0, n);
        s.extend([neg, n + n1]);
    } else if n == mn {
        s = range(0, mn);
        s.insert((m1 + 1) * n1);
    } else if (mn + n1 + 1..=m1 * (n1 + 1)).contains(&n) {
        s = range(0, n);
        s.insert(n + n1);
    } else if (m1 * (n1 + 1) + 1..=big).contains(&n) {
        s = range(0, n);
        s.remove(&(n - m1 * (n1 + 1) - 1));
        s.insert(n + n1);
    } else if n > big {
        s = range(n - big, n);
        s.remove(&(n - m1 * (n1 + 1) - 1));
        s.insert(n + n1);
    }
    s
}

/// `I₋` zero modes for one-step extensions `m₁` (x) and `n₁ ≤ m₁` (y).
pub fn zero_modes_minus_e(m1: i64, n1: i64, n: i64) -> BTreeSet<i64> {
    let mn = m1 * n1;
    let big = (m1 + 1) * (n1 + 1);
    let neg = -m1 - 1;
    let hole = (m1 + 1) * n1;
    if n <= 0 || (1..mn).contains(&n) {
        return zero_modes_plus_e(m1, n1, n);
    }
    let mut s: BTreeSet<i64> = BTreeSet::from([neg]);
    if n == mn {
        s.extend(0..mn);
    } else if (mn + 1..=hole).contains(&n) {
        s.extend(0..n);
        s.insert(n + n1);
    } else if (mn + n1 + 1..=mn + m1).contains(&n) {
        s.extend((0..n).filter(|&v| v != hole));
        s.insert(n + n1);
    } else if (mn + m1 + 1..=big).contains(&n) {
        s.extend((0..n).filter(|&v| v != hole));
    } else {
        s.extend((0..=hole + m1).filter(|&v| v != hole));
    }
    s
}
