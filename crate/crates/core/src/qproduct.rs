//! Symbolic products `±q^s [j1]^e1 [j2]^e2 ...` of quantum integers.
//!
//! Quantum factorials expand into runs of quantum integers, so ratios of
//! factorials cancel before anything is multiplied out.

use std::collections::BTreeMap;
use std::ops::Mul;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fusion_blocks::quantum_integer;
use crate::qlaurent::{LaurentPolynomial, QExponent};
use crate::series::TopSeries;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuantumProduct {
    negative: bool,
    shift: QExponent,
    /// Exponent of `[j]` for `j >= 2`; never zero.
    powers: BTreeMap<u32, i32>,
}

impl QuantumProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn monomial(negative: bool, shift: QExponent) -> Self {
        QuantumProduct { negative, shift, powers: BTreeMap::new() }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn shift(&self) -> QExponent {
        self.shift
    }

    pub fn powers(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.powers.iter().map(|(j, e)| (*j, *e))
    }

    pub fn negate(&mut self) {
        self.negative = !self.negative;
    }

    pub fn mul_monomial(&mut self, negative: bool, shift: QExponent) {
        self.negative ^= negative;
        self.shift = self.shift + shift;
    }

    /// Multiplies by `[j]^e`; `j = 0` would make the product vanish and is rejected.
    pub fn mul_quantum_int(&mut self, j: u32, e: i32) {
        assert!(j >= 1, "[0] = 0 cannot appear in a product");
        if j == 1 || e == 0 {
            return;
        }
        let slot = self.powers.entry(j).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.powers.remove(&j);
        }
    }

    /// Multiplies by `([a]!)^e`.
    pub fn mul_factorial(&mut self, a: u32, e: i32) {
        for j in 2..=a {
            self.mul_quantum_int(j, e);
        }
    }

    /// Degree of the expansion at `q = infinity`: `[j]` has degree `(j-1)/2`.
    pub fn degree(&self) -> QExponent {
        let half_steps: i64 = self.powers.iter().map(|(j, e)| (*j as i64 - 1) * *e as i64).sum();
        self.shift + QExponent::from_eighths(4 * half_steps)
    }

    /// Sign of the leading coefficient (every `[j]` is monic).
    pub fn leading_sign(&self) -> i32 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// No quantum integer appears in a denominator.
    pub fn is_polynomial(&self) -> bool {
        self.powers.values().all(|e| *e > 0)
    }

    /// Total count of quantum-integer factors, a proxy for expansion cost.
    pub fn weight(&self) -> u64 {
        self.powers.values().map(|e| e.unsigned_abs() as u64).sum()
    }

    /// Smallest multiplier `D` (as `[j] -> exponent`) with `self * D` polynomial.
    pub fn denominator_powers(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.powers.iter().filter(|(_, e)| **e < 0).map(|(j, e)| (*j, -*e))
    }

    /// Exact expansion; fails with [`Error::NotDivisible`] if a denominator remains.
    pub fn to_polynomial(&self) -> Result<LaurentPolynomial> {
        if !self.is_polynomial() {
            return Err(Error::NotDivisible);
        }
        let mut acc = LaurentPolynomial::monomial(if self.negative { -1 } else { 1 }, self.shift);
        for (j, e) in self.powers.iter() {
            let qj = quantum_integer(*j);
            for _ in 0..*e {
                acc = &acc * &qj;
            }
        }
        Ok(acc)
    }

    /// First `window` coefficients of the expansion at `q = infinity`.
    pub fn expand_top(&self, window: usize) -> TopSeries {
        let c = BigInt::from(if self.negative { -1 } else { 1 });
        let mut s = TopSeries::monomial(c, self.shift, window);
        // Multiply before dividing to keep intermediate coefficients small.
        for (j, e) in self.powers.iter().filter(|(_, e)| **e > 0) {
            for _ in 0..*e {
                s.mul_quantum_int(*j);
            }
        }
        for (j, e) in self.powers.iter().filter(|(_, e)| **e < 0) {
            for _ in 0..e.unsigned_abs() {
                s.div_quantum_int(*j);
            }
        }
        s
    }
}

impl Mul<&QuantumProduct> for &QuantumProduct {
    type Output = QuantumProduct;
    fn mul(self, rhs: &QuantumProduct) -> QuantumProduct {
        let mut out = self.clone();
        out.mul_monomial(rhs.negative, rhs.shift);
        for (j, e) in rhs.powers.iter() {
            out.mul_quantum_int(*j, *e);
        }
        out
    }
}
