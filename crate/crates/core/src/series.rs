//! Top-truncated expansions at `q = infinity`.
//!
//! A rational function whose numerator and denominator are products of quantum
//! integers has an expansion `sum_{i >= 0} c_i q^(top - i)`. Multiplying or
//! dividing by `[j]` only mixes a coefficient with coefficients above it, so
//! keeping the first `window` coefficients is exact for those coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::qlaurent::{LaurentPolynomial, QExponent};

/// The first `window` coefficients (descending in steps of `q^1`) of an expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSeries {
    /// Exponent of the first slot, in eighths.
    top: QExponent,
    coeffs: Vec<BigInt>,
}

impl TopSeries {
    pub fn monomial(c: BigInt, e: QExponent, window: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); window.max(1)];
        coeffs[0] = c;
        TopSeries { top: e, coeffs }
    }

    pub fn top(&self) -> QExponent {
        self.top
    }

    pub fn window(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn shift(&mut self, e: QExponent) {
        self.top = self.top + e;
    }

    pub fn negate(&mut self) {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
    }

    /// `self *= (1 - q^-j)`.
    fn mul_one_minus(&mut self, j: usize) {
        let w = self.coeffs.len();
        for i in (j..w).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] -= &lo[i - j];
        }
    }

    /// `self /= (1 - q^-j)`.
    fn div_one_minus(&mut self, j: usize) {
        let w = self.coeffs.len();
        for i in j..w {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - j];
        }
    }

    /// Multiplies by the quantum integer `[j]`, `j >= 1`.
    pub fn mul_quantum_int(&mut self, j: u32) {
        debug_assert!(j >= 1);
        if j == 1 {
            return;
        }
        self.top = self.top + QExponent::from_eighths(4 * (j as i64 - 1));
        self.mul_one_minus(j as usize);
        self.div_one_minus(1);
    }

    /// Divides by the quantum integer `[j]`, `j >= 1`.
    pub fn div_quantum_int(&mut self, j: u32) {
        debug_assert!(j >= 1);
        if j == 1 {
            return;
        }
        self.top = self.top - QExponent::from_eighths(4 * (j as i64 - 1));
        self.mul_one_minus(1);
        self.div_one_minus(j as usize);
    }

    /// The truncation as a polynomial (exact only when the expansion terminates in the window).
    pub fn to_polynomial(&self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (self.top - QExponent::from_integer(i as i64), c.clone())),
        )
    }
}

/// Sum of [`TopSeries`] below a fixed ceiling exponent.
///
/// Slots are half-integer steps so that expansions whose tops differ by `1/2`
/// can be added; the result is exact in every slot above `ceiling - window`.
#[derive(Clone, Debug)]
pub struct SeriesAccumulator {
    ceiling: QExponent,
    window: usize,
    /// `slots[i]` is the coefficient of `q^(ceiling - i/2)`.
    slots: Vec<BigInt>,
}

impl SeriesAccumulator {
    /// `window` is measured in whole powers of `q`.
    pub fn new(ceiling: QExponent, window: usize) -> Self {
        assert!(ceiling.is_half_integral(), "ceiling must lie in (1/2)Z");
        SeriesAccumulator { ceiling, window, slots: vec![BigInt::zero(); 2 * window] }
    }

    /// Number of whole-`q` steps below the ceiling that an added series must reach into.
    pub fn depth_of(&self, top: QExponent) -> i64 {
        (self.ceiling - top).eighths()
    }

    /// Adds a series whose exponents lie in `(1/2)Z` and whose top is at most the ceiling.
    pub fn add(&mut self, s: &TopSeries) {
        let gap = self.ceiling - s.top;
        assert!(gap.eighths() >= 0, "series top {} above ceiling {}", s.top, self.ceiling);
        assert!(gap.is_half_integral(), "series exponents must lie in (1/2)Z");
        let offset = (gap.eighths() / 4) as usize;
        for (i, c) in s.coeffs.iter().enumerate() {
            let slot = offset + 2 * i;
            if slot >= self.slots.len() {
                break;
            }
            self.slots[slot] += c;
        }
    }

    /// Highest exponent with a nonzero coefficient, with that coefficient.
    pub fn leading(&self) -> Option<(BigInt, QExponent)> {
        self.slots
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| (self.slots[i].clone(), self.ceiling - QExponent::from_eighths(4 * i as i64)))
    }

    /// Adds another accumulator with the same ceiling and window.
    pub fn merge(&mut self, other: &SeriesAccumulator) {
        assert!(self.ceiling == other.ceiling && self.window == other.window);
        for (a, b) in self.slots.iter_mut().zip(other.slots.iter()) {
            *a += b;
        }
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn ceiling(&self) -> QExponent {
        self.ceiling
    }
}
