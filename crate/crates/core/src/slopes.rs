//! Closed-form Jones slopes of `K(m1, m2)`: the lattice formula `js`, its real
//! counterpart `js_real`, sector labels and the mirror involution.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};
use crate::statesum::KnotParams;

/// Which branch of a slope formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SectorLabel {
    /// One of the two isolated points `(1,0)` and `(2,-1)`.
    Exceptional,
    /// Lattice branch `L1..L5`.
    Lattice(u8),
    /// Real branch `R1..R9`.
    Real(u8),
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectorLabel::Exceptional => f.write_str("exceptional"),
            SectorLabel::Lattice(i) => write!(f, "L{i}"),
            SectorLabel::Real(i) => write!(f, "R{i}"),
        }
    }
}

fn no_sector(m1: &Rational, m2: &Rational) -> Error {
    Error::NoSector(m1.to_string(), m2.to_string())
}

/// Shared tail `(m1 + 9 m2 + 1)/4` of several branches.
fn tail(m1: &Rational, m2: &Rational) -> Rational {
    (m1 + int(9) * m2 + int(1)) / int(4)
}

fn green(m1: &Rational, m2: &Rational) -> Rational {
    let s = int(2) * m1 + int(3) * m2;
    &s * &s / (int(4) * (m1 + m2 - rat(1, 2)))
}

pub fn lattice_sector(p: KnotParams) -> Result<SectorLabel> {
    let (m1, m2) = (p.m1, p.m2);
    if (m1, m2) == (1, 0) || (m1, m2) == (2, -1) {
        return Ok(SectorLabel::Exceptional);
    }
    let label = if m1 >= 1 && m2 >= 0 {
        1
    } else if m1 <= 0 && m2 >= -1 - 2 * m1 && m2 >= 1 {
        2
    } else if 0 < m2 && m2 < -1 - 2 * m1 {
        3
    } else if m2 <= 0 && 3 * m2 <= -2 * m1 {
        4
    } else if 3 * m2 > -2 * m1 && m2 <= -1 {
        5
    } else {
        return Err(no_sector(&int(m1), &int(m2)));
    };
    Ok(SectorLabel::Lattice(label))
}

/// The lattice Jones slope, branch formulas exactly as stated for each sector.
pub fn js(p: KnotParams) -> Result<Rational> {
    let (m1, m2) = (int(p.m1), int(p.m2));
    Ok(match lattice_sector(p)? {
        SectorLabel::Exceptional if p.m1 == 1 => rat(3, 2),
        SectorLabel::Exceptional => int(0),
        SectorLabel::Lattice(1) => {
            let d = &m1 - int(1);
            &d * &d / (int(4) * (&m1 + &m2 - int(1))) + tail(&m1, &m2)
        }
        SectorLabel::Lattice(2) => &m1 * &m1 / (int(4) * (&m1 + &m2 + int(1))) + tail(&m1, &m2),
        SectorLabel::Lattice(3) => int(2) * &m2 + rat(1, 2),
        SectorLabel::Lattice(4) => int(0),
        SectorLabel::Lattice(5) => green(&m1, &m2),
        other => unreachable!("lattice_sector returned {other}"),
    })
}

/// The second slope, from `K(m1, m2) = -K(1 - m1, -1 - m2)` and `q -> 1/q`.
pub fn mirror_slope(p: KnotParams) -> Result<Rational> {
    Ok(-js(KnotParams::new(1 - p.m1, -1 - p.m2))?)
}

/// The rational function `I(m1, m2)` of the innermost real branch.
pub fn i_branch(m1: &Rational, m2: &Rational) -> Rational {
    let num = int(3) + int(6) * m1 + int(4) * m1 * m1 + int(18) * m2 + int(24) * m1 * m2 + int(8) * m1 * m1 * m2
        + int(27) * m2 * m2
        + int(18) * m1 * m2 * m2;
    let den = int(4) * (int(1) + m1 + int(3) * m2 + int(2) * m1 * m2);
    num / den
}

/// Conditions of the nine real branches, in order.
fn real_conditions(m1: &Rational, m2: &Rational) -> [bool; 9] {
    let zero = int(0);
    let one = int(1);
    let third = rat(-1, 3);
    let a = &one + m1 + int(3) * m2; // 1 + m1 + 3m2
    let b = &one - m1 + m2; // 1 - m1 + m2
    let c = &one + int(2) * m1 + int(4) * m2; // 1 + 2m1 + 4m2
    let d = &one + int(2) * m1 + int(3) * m2 + int(4) * m1 * m2; // 1 + 2m1 + 3m2 + 4m1m2
    let e = &one + int(2) * m1 + m2; // 1 + 2m1 + m2
    let below_23 = int(3) * m2 <= int(-2) * m1; // m2 <= -2m1/3
    [
        *m1 > one && *m2 >= zero,
        *m1 >= zero && *m1 <= one && a >= zero && b >= zero,
        *m1 <= zero && *m2 >= zero && *m2 >= -&one - int(2) * m1,
        *m2 > zero && e >= zero,
        *m2 >= third && *m2 <= zero && d <= zero,
        *m2 <= third && a <= zero && c <= zero && below_23,
        !below_23 && *m2 <= -&one,
        *m2 >= -&one && *m2 <= zero && b <= zero && c >= zero,
        d >= zero && *m1 >= rat(-1, 2) && *m1 <= zero && *m2 >= third && *m2 <= zero,
    ]
}

/// First real branch whose condition holds.
pub fn real_sector(m1: &Rational, m2: &Rational) -> Result<SectorLabel> {
    real_conditions(m1, m2)
        .iter()
        .position(|c| *c)
        .map(|i| SectorLabel::Real(i as u8 + 1))
        .ok_or_else(|| no_sector(m1, m2))
}

/// Every real branch whose condition holds (for seam analysis).
pub fn real_sectors_all(m1: &Rational, m2: &Rational) -> Vec<u8> {
    real_conditions(m1, m2).iter().enumerate().filter(|(_, c)| **c).map(|(i, _)| i as u8 + 1).collect()
}

/// Value of real branch `index` (1-based), regardless of its condition.
pub fn real_branch_value(index: u8, m1: &Rational, m2: &Rational) -> Rational {
    match index {
        1 => {
            let d = m1 - int(1);
            &d * &d / (int(4) * (m1 + m2 - int(1))) + tail(m1, m2)
        }
        2 => (m1 + int(1)) / int(2) + tail(m1, m2),
        3 => m1 * m1 / (int(4) * (m1 + m2 + int(1))) + tail(m1, m2),
        4 => int(2) * m2 + rat(1, 2),
        5 => {
            let s = int(3) * m2 + int(1);
            &s * &s / (int(4) * (m2 + rat(1, 2)))
        }
        6 => int(0),
        7 => green(m1, m2),
        8 => m1 + int(2) * m2 + rat(1, 2),
        9 => i_branch(m1, m2),
        _ => panic!("no real branch {index}"),
    }
}

/// The real Jones slope, first matching branch.
pub fn js_real(m1: &Rational, m2: &Rational) -> Result<Rational> {
    match real_sector(m1, m2)? {
        SectorLabel::Real(i) => Ok(real_branch_value(i, m1, m2)),
        other => unreachable!("real_sector returned {other}"),
    }
}

/// An integer pair where the lattice and real slopes differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub params: KnotParams,
    pub js: Rational,
    /// `None` when no real branch applies.
    pub js_real: Option<Rational>,
}

/// Integer pairs in the box where `js != js_real`.
pub fn compare_lattice_real(m1: RangeInclusive<i64>, m2: RangeInclusive<i64>) -> Result<Vec<Disagreement>> {
    let mut out = Vec::new();
    for a in m1 {
        for b in m2.clone() {
            let p = KnotParams::new(a, b);
            let j = js(p)?;
            let r = match js_real(&int(a), &int(b)) {
                Ok(v) => Some(v),
                Err(Error::NoSector(..)) => None,
                Err(e) => return Err(e),
            };
            if r.as_ref() != Some(&j) {
                out.push(Disagreement { params: p, js: j, js_real: r });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m1: i64, m2: i64) -> KnotParams {
        KnotParams::new(m1, m2)
    }

    #[test]
    fn lattice_values() {
        assert_eq!(js(k(1, 0)).unwrap(), rat(3, 2));
        assert_eq!(js(k(2, 1)).unwrap(), rat(25, 8));
        assert_eq!(js(k(-3, 2)).unwrap(), rat(9, 2));
        assert_eq!(js(k(4, -2)).unwrap(), rat(2, 3));
        assert_eq!(js(k(2, -1)).unwrap(), int(0));
        for m1 in 2..10 {
            assert_eq!(js(k(m1, 0)).unwrap(), rat(m1, 2));
        }
    }

    #[test]
    fn lattice_labels() {
        assert_eq!(lattice_sector(k(1, 1)).unwrap(), SectorLabel::Lattice(1));
        assert_eq!(lattice_sector(k(-2, 0)).unwrap(), SectorLabel::Lattice(4));
        assert_eq!(lattice_sector(k(2, -1)).unwrap(), SectorLabel::Exceptional);
        assert_eq!(SectorLabel::Real(7).to_string(), "R7");
    }

    #[test]
    fn lattice_totality() {
        for m1 in -50..=50 {
            for m2 in -50..=50 {
                assert!(js(k(m1, m2)).is_ok(), "({m1},{m2})");
            }
        }
    }

    #[test]
    fn real_values() {
        assert_eq!(js_real(&int(0), &int(0)).unwrap(), rat(3, 4));
        assert_eq!(js_real(&int(2), &int(-1)).unwrap(), rat(1, 2));
        assert_eq!(js_real(&int(4), &int(-2)).unwrap(), rat(2, 3));
        assert_eq!(real_sector(&int(4), &int(-2)).unwrap(), SectorLabel::Real(7));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(mirror_slope(k(1, 0)).unwrap(), int(0));
        assert_eq!(mirror_slope(k(0, -1)).unwrap(), rat(-3, 2));
        for m1 in -6..=6 {
            for m2 in -6..=6 {
                let p = k(m1, m2);
                let twice = -mirror_slope(k(1 - m1, -1 - m2)).unwrap();
                assert_eq!(twice, js(p).unwrap());
            }
        }
    }
}
