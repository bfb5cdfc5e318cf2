//! Closed-form degree and leading sign of the state-sum summand.
//!
//! The summand degree is the piecewise quadratic `Q(m1, m2, n, k1, k2)`; which
//! quadratic applies depends on which of
//! `l1 = 2k1 + n`, `l2 = 2k1 + k2 + n`, `l3 = k2 + 2n` is smallest.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::fusion_blocks::TetLabels;
use crate::qlaurent::QExponent;
use crate::rational::{int, rat, Rational};
use crate::statesum::{KnotParams, LatticeState};

/// Which `l_i` attains `min{l1, l2, l3}`; ties resolve to the lower index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RegionLabel {
    R1,
    R2,
    R3,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 3] = [RegionLabel::R1, RegionLabel::R2, RegionLabel::R3];

    /// The linear form `l_i` as `c0 + cn n + ck1 k1 + ck2 k2`.
    pub fn linear_form(self) -> Linear3 {
        match self {
            RegionLabel::R1 => Linear3::new(0, 1, 2, 0),
            RegionLabel::R2 => Linear3::new(0, 1, 2, 1),
            RegionLabel::R3 => Linear3::new(0, 2, 0, 1),
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A linear form `c0 + cn n + ck1 k1 + ck2 k2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear3 {
    pub c: [Rational; 4],
}

impl Linear3 {
    pub fn new(c0: i64, cn: i64, ck1: i64, ck2: i64) -> Self {
        Linear3 { c: [int(c0), int(cn), int(ck1), int(ck2)] }
    }

    pub fn eval(&self, n: &Rational, k1: &Rational, k2: &Rational) -> Rational {
        &self.c[0] + &self.c[1] * n + &self.c[2] * k1 + &self.c[3] * k2
    }
}

/// Monomial order for [`Quadratic3`].
const MONOMIALS: [(u8, u8, u8); 10] = [
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (2, 0, 0),
    (1, 1, 0),
    (1, 0, 1),
    (0, 2, 0),
    (0, 1, 1),
    (0, 0, 2),
];

fn slot(e: (u8, u8, u8)) -> usize {
    MONOMIALS.iter().position(|m| *m == e).expect("degree at most two")
}

/// A polynomial of degree at most two in `(n, k1, k2)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic3 {
    c: [Rational; 10],
}

impl Default for Quadratic3 {
    fn default() -> Self {
        Quadratic3 { c: std::array::from_fn(|_| Rational::zero()) }
    }
}

impl Quadratic3 {
    /// Coefficient of `n^a k1^b k2^c`.
    pub fn coeff(&self, a: u8, b: u8, c: u8) -> &Rational {
        &self.c[slot((a, b, c))]
    }

    fn add_term(&mut self, e: (u8, u8, u8), v: Rational) {
        self.c[slot(e)] += v;
    }

    fn add_linear(&mut self, l: &Linear3, scale: &Rational) {
        self.add_term((0, 0, 0), &l.c[0] * scale);
        self.add_term((1, 0, 0), &l.c[1] * scale);
        self.add_term((0, 1, 0), &l.c[2] * scale);
        self.add_term((0, 0, 1), &l.c[3] * scale);
    }

    fn add_product(&mut self, a: &Linear3, b: &Linear3, scale: &Rational) {
        let units = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)];
        for (i, ei) in units.iter().enumerate() {
            for (j, ej) in units.iter().enumerate() {
                let v = &a.c[i] * &b.c[j] * scale;
                if !v.is_zero() {
                    self.add_term((ei.0 + ej.0, ei.1 + ej.1, ei.2 + ej.2), v);
                }
            }
        }
    }

    pub fn eval(&self, n: &Rational, k1: &Rational, k2: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (coef, (a, b, c)) in self.c.iter().zip(MONOMIALS.iter()) {
            if coef.is_zero() {
                continue;
            }
            let mut term = coef.clone();
            for _ in 0..*a {
                term *= n;
            }
            for _ in 0..*b {
                term *= k1;
            }
            for _ in 0..*c {
                term *= k2;
            }
            acc += term;
        }
        acc
    }

    /// `dQ/dk1` as a linear form.
    pub fn d_k1(&self) -> Linear3 {
        Linear3 {
            c: [
                self.coeff(0, 1, 0).clone(),
                self.coeff(1, 1, 0).clone(),
                self.coeff(0, 2, 0) * int(2),
                self.coeff(0, 1, 1).clone(),
            ],
        }
    }

    /// `dQ/dk2` as a linear form.
    pub fn d_k2(&self) -> Linear3 {
        Linear3 {
            c: [
                self.coeff(0, 0, 1).clone(),
                self.coeff(1, 0, 1).clone(),
                self.coeff(0, 1, 1).clone(),
                self.coeff(0, 0, 2) * int(2),
            ],
        }
    }
}

/// The region-independent part of `Q`, with `m` rational.
fn q_base(m1: &Rational, m2: &Rational) -> Quadratic3 {
    let mut q = Quadratic3::default();
    q.add_term((0, 1, 0), rat(1, 2));
    q.add_term((0, 2, 0), rat(-3, 2));
    q.add_term((0, 1, 1), int(-3));
    q.add_term((0, 0, 2), int(-1));
    q.add_term((0, 1, 0), -m1.clone());
    q.add_term((0, 2, 0), -m1.clone());
    q.add_term((0, 0, 1), -m2.clone());
    q.add_term((0, 0, 2), -m2.clone());
    q.add_term((1, 1, 0), int(-6));
    q.add_term((1, 0, 1), int(-3));
    q.add_term((1, 0, 0), m1 * int(2) + m2 * int(4));
    q.add_term((1, 0, 1), -m2.clone());
    q.add_term((2, 0, 0), int(-2) + m1 + m2 * int(2));
    q
}

/// `Q` with `min{l1,l2,l3}` replaced by the region's `l_i`, for rational `m`.
pub fn q_restricted_real(m1: &Rational, m2: &Rational, region: RegionLabel) -> Quadratic3 {
    let mut q = q_base(m1, m2);
    let l = region.linear_form();
    // + (1/2)(1 + 8k1 + 4k2 + 8n) l - (3/2) l^2
    q.add_linear(&l, &rat(1, 2));
    q.add_product(&Linear3::new(0, 8, 8, 4), &l, &rat(1, 2));
    q.add_product(&l, &l, &rat(-3, 2));
    q
}

pub fn q_restricted(p: KnotParams, region: RegionLabel) -> Quadratic3 {
    q_restricted_real(&int(p.m1), &int(p.m2), region)
}

/// Region of a (possibly non-lattice) point of `nP`.
pub fn region_of_point(n: &Rational, k1: &Rational, k2: &Rational) -> RegionLabel {
    let l: Vec<Rational> = RegionLabel::ALL.iter().map(|r| r.linear_form().eval(n, k1, k2)).collect();
    if l[0] <= l[1] && l[0] <= l[2] {
        RegionLabel::R1
    } else if l[1] <= l[2] {
        RegionLabel::R2
    } else {
        RegionLabel::R3
    }
}

pub fn region_of(s: &LatticeState) -> RegionLabel {
    region_of_point(&int(s.n as i64), &int(s.k1), &int(s.k2))
}

/// `Q` at a real point, evaluated directly from its defining formula.
pub fn q_value_real(m1: &Rational, m2: &Rational, n: &Rational, k1: &Rational, k2: &Rational) -> Rational {
    let l = [int(2) * k1 + n, int(2) * k1 + k2 + n, k2 + int(2) * n];
    let lmin = l.iter().min().expect("three forms").clone();
    let base = rat(1, 2) * k1 - rat(3, 2) * k1 * k1 - int(3) * k1 * k2 - k2 * k2 - k1 * m1 - k1 * k1 * m1
        - k2 * m2
        - k2 * k2 * m2
        - int(6) * k1 * n
        - int(3) * k2 * n
        + int(2) * m1 * n
        + int(4) * m2 * n
        - k2 * m2 * n
        - int(2) * n * n
        + m1 * n * n
        + int(2) * m2 * n * n;
    let tail = (Rational::one() + int(8) * k1 + int(4) * k2 + int(8) * n) * &lmin - int(3) * &lmin * &lmin;
    base + rat(1, 2) * tail
}

/// The degree `Q(m1, m2, n, k1, k2)` of the summand at a lattice state.
pub fn q_degree(p: KnotParams, s: &LatticeState) -> Rational {
    q_value_real(&int(p.m1), &int(p.m2), &int(s.n as i64), &int(s.k1), &int(s.k2))
}

/// Predicted leading term `(sign, exponent)` of the summand.
pub fn predicted_leading(p: KnotParams, s: &LatticeState) -> (i32, Rational) {
    let n = s.n as i64;
    let m = (2 * s.k1).min(2 * s.k1 + s.k2).min(s.k2 + n);
    let sign = if (s.k1 + n + m).rem_euclid(2) == 0 { 1 } else { -1 };
    (sign, q_degree(p, s))
}

/// Degree formulas for the individual blocks, in eighths of a power of `q`.
pub mod blocks {
    use super::*;

    pub fn degree_mu(a: u32) -> QExponent {
        let a = a as i64;
        QExponent::from_eighths(-2 * a * (a + 2))
    }

    pub fn degree_nu(c: u32, a: u32, b: u32) -> QExponent {
        let (a, b, c) = (a as i64, b as i64, c as i64);
        QExponent::from_eighths(a * (a + 2) + b * (b + 2) - c * (c + 2))
    }

    pub fn degree_u(a: u32) -> QExponent {
        QExponent::from_eighths(4 * a as i64)
    }

    pub fn degree_theta(a: u32, b: u32, c: u32) -> QExponent {
        let (a, b, c) = (a as i64, b as i64, c as i64);
        QExponent::from_eighths(-(a * a + b * b + c * c) + 2 * (a * b + a * c + b * c) + 2 * (a + b + c))
    }

    /// Degree of the quantum multinomial with the given parts.
    pub fn degree_multinomial(parts: &[u32]) -> QExponent {
        let s: i64 = parts.iter().map(|&x| x as i64).sum();
        let sq: i64 = parts.iter().map(|&x| (x as i64) * (x as i64)).sum();
        QExponent::from_eighths(2 * (s * s - sq))
    }

    /// Top summation index `k* = min S_j`.
    pub fn tet_top_index(l: &TetLabels) -> u32 {
        *l.s().iter().min().expect("three faces")
    }

    pub fn degree_tet(l: &TetLabels) -> QExponent {
        let k = tet_top_index(l);
        degree_multinomial(&l.parts(k)) + QExponent::from_eighths(4 * k as i64)
    }

    pub fn sign_mu(a: u32) -> i32 {
        if a.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn sign_nu(c: u32, a: u32, b: u32) -> i32 {
        if ((a + b - c) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn sign_u(a: u32) -> i32 {
        sign_mu(a)
    }

    pub fn sign_theta(a: u32, b: u32, c: u32) -> i32 {
        if ((a + b + c) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn sign_tet(l: &TetLabels) -> i32 {
        sign_mu(tet_top_index(l))
    }
}
