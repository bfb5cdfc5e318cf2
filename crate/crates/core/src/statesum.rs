//! The fusion state sum for the 2-fusion knots `K(m1, m2)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion_blocks::{
    mu_monomial, nu_monomial, quantum_integer, tet, tet_term_products, theta, theta_product, u_block,
    u_product, TetLabels,
};
use crate::qlaurent::{LaurentFraction, LaurentPolynomial, QExponent};
use crate::qproduct::QuantumProduct;
use crate::series::SeriesAccumulator;

/// Twist parameters selecting the knot `K(m1, m2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KnotParams {
    pub m1: i64,
    pub m2: i64,
}

impl KnotParams {
    pub const fn new(m1: i64, m2: i64) -> Self {
        KnotParams { m1, m2 }
    }
}

impl fmt::Display for KnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{})", self.m1, self.m2)
    }
}

/// A lattice point `(k1, k2)` of the dilated polytope `nP`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeState {
    pub n: u32,
    pub k1: i64,
    pub k2: i64,
}

impl LatticeState {
    /// `0 <= 2k1 <= 2n` and `|n - 2k1| <= n + 2k2 <= n + 2k1`.
    pub fn contains(n: u32, k1: i64, k2: i64) -> bool {
        let n = n as i64;
        (0..=n).contains(&k1) && (n - 2 * k1).abs() <= n + 2 * k2 && k2 <= k1
    }

    pub fn new(n: u32, k1: i64, k2: i64) -> Result<Self> {
        if Self::contains(n, k1, k2) {
            Ok(LatticeState { n, k1, k2 })
        } else {
            Err(Error::NotAdmissible(vec![n as i64, k1, k2]))
        }
    }

    /// Colors of the three edges at the tetrahedron: `(n, 2k1, n+2k2)`.
    fn colors(&self) -> (u32, u32, u32) {
        (self.n, (2 * self.k1) as u32, (self.n as i64 + 2 * self.k2) as u32)
    }

    fn tet_labels(&self) -> Result<TetLabels> {
        let (n, a, c) = self.colors();
        TetLabels::new(n, a, a, n, n, c)
    }
}

/// All states of `nP ∩ Z^2` in lexicographic `(k1, k2)` order.
pub fn polytope_points(n: u32) -> Vec<LatticeState> {
    let ni = n as i64;
    let mut out = Vec::new();
    for k1 in 0..=ni {
        for k2 in -ni..=k1 {
            if LatticeState::contains(n, k1, k2) {
                out.push(LatticeState { n, k1, k2 });
            }
        }
    }
    out
}

/// `w(m1, m2) = 2m1 + 6m2 + 2`.
pub fn writhe(p: KnotParams) -> i64 {
    2 * p.m1 + 6 * p.m2 + 2
}

/// Product of the three monomial factors `mu^-w nu^(2m1+2m2) nu^(2m2+1)`.
fn twist_monomial(p: KnotParams, s: &LatticeState) -> Result<(bool, QExponent)> {
    let (n, a, c) = s.colors();
    let factors = [
        mu_monomial(n).pow(-writhe(p)),
        nu_monomial(a, n, n)?.pow(2 * p.m1 + 2 * p.m2),
        nu_monomial(c, a, n)?.pow(2 * p.m2 + 1),
    ];
    Ok(factors.iter().fold((false, QExponent::ZERO), |(neg, e), m| (neg ^ m.negative, e + m.exponent)))
}

/// The summand `S(m1, m2, n, k1, k2)` as an exact quotient of block evaluations.
pub fn summand(p: KnotParams, s: &LatticeState) -> Result<LaurentFraction> {
    let (n, a, c) = s.colors();
    let (neg, shift) = twist_monomial(p, s)?;
    let mono = LaurentPolynomial::monomial(if neg { -1 } else { 1 }, shift);
    let num = &(&mono * &(&u_block(a) * &u_block(c))) * &tet(&s.tet_labels()?)?;
    let den = &u_block(n) * &(&theta(n, n, a)? * &theta(n, a, c)?);
    LaurentFraction::new(num, den)
}

/// The summand split into one [`QuantumProduct`] per `Tet` index `k`.
pub fn summand_terms(p: KnotParams, s: &LatticeState) -> Result<Vec<QuantumProduct>> {
    let (n, a, c) = s.colors();
    let (neg, shift) = twist_monomial(p, s)?;
    let mut common = QuantumProduct::monomial(neg, shift);
    common = &common * &u_product(a);
    common = &common * &u_product(c);
    let mut den = &u_product(n) * &theta_product(n, n, a)?;
    den = &den * &theta_product(n, a, c)?;
    for (j, e) in den.powers() {
        common.mul_quantum_int(j, -e);
    }
    if den.is_negative() {
        common.negate();
    }
    Ok(tet_term_products(&s.tet_labels()?).iter().map(|t| &common * t).collect())
}

fn all_terms(p: KnotParams, n: u32) -> Result<Vec<QuantumProduct>> {
    let mut terms = Vec::new();
    for s in polytope_points(n) {
        terms.extend(summand_terms(p, &s)?);
    }
    Ok(terms)
}

fn mirrored(t: &QuantumProduct) -> QuantumProduct {
    // [j] is invariant under q -> 1/q, so only the monomial part changes.
    let mut m = QuantumProduct::monomial(t.is_negative(), -t.shift());
    for (j, e) in t.powers() {
        m.mul_quantum_int(j, e);
    }
    m
}

/// The colored Jones polynomial `J_{K(m1,m2),n}` from the state sum.
///
/// With `mirror` set, `q` is replaced by `1/q` in the result.
pub fn colored_jones(p: KnotParams, n: u32, mirror: bool) -> Result<LaurentPolynomial> {
    let terms = all_terms(p, n)?;
    let mut denom: BTreeMap<u32, i32> = BTreeMap::new();
    for t in &terms {
        for (j, e) in t.denominator_powers() {
            let slot = denom.entry(j).or_insert(0);
            *slot = (*slot).max(e);
        }
    }
    let numerator: LaurentPolynomial = terms
        .par_iter()
        .map(|t| {
            let mut scaled = t.clone();
            for (&j, &e) in &denom {
                scaled.mul_quantum_int(j, e);
            }
            scaled.to_polynomial().expect("common denominator clears every term")
        })
        .reduce(LaurentPolynomial::zero, |a, b| a + b);
    let mut j = numerator;
    for (&k, &e) in denom.iter().rev() {
        let qk = quantum_integer(k);
        for _ in 0..e {
            j = j.exact_divide(&qk)?;
        }
    }
    Ok(if mirror { j.invert_q() } else { j })
}

/// Leading coefficient and degree of `J_{K,n}` without expanding the whole polynomial.
///
/// Summands are expanded at `q = infinity` to a window below the largest
/// summand degree; the window doubles until a nonzero coefficient survives.
pub fn colored_jones_leading(p: KnotParams, n: u32, mirror: bool) -> Result<(BigInt, QExponent)> {
    let mut terms = all_terms(p, n)?;
    if mirror {
        terms = terms.iter().map(mirrored).collect();
    }
    let degrees: Vec<QExponent> = terms.iter().map(QuantumProduct::degree).collect();
    let ceiling = *degrees.iter().max().expect("nP always has a lattice point");
    let mut window = 8 + n as usize;
    loop {
        let reach = QExponent::from_integer(window as i64);
        let acc = terms
            .par_iter()
            .zip(degrees.par_iter())
            .filter(|(_, d)| ceiling - **d < reach)
            .fold(
                || SeriesAccumulator::new(ceiling, window),
                |mut acc, (t, _)| {
                    acc.add(&t.expand_top(window));
                    acc
                },
            )
            .reduce(
                || SeriesAccumulator::new(ceiling, window),
                |mut a, b| {
                    a.merge(&b);
                    a
                },
            );
        if let Some(lead) = acc.leading() {
            return Ok(lead);
        }
        window *= 2;
        assert!(window < 1 << 24, "state sum vanished to depth {window}");
    }
}

/// One line of a golden fixture file: `m1 m2 n : <polynomial>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRecord {
    pub params: KnotParams,
    pub n: u32,
    pub poly: LaurentPolynomial,
    /// Marked with a trailing `# suspect` comment.
    pub suspect: bool,
}

/// Parses a fixture file; blank lines and `#` comments are ignored.
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRecord>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, c),
            None => (raw, ""),
        };
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let bad = |message: &str| Error::Fixture { line, message: message.to_string() };
        let (head, poly) = body.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let nums: Vec<&str> = head.split_whitespace().collect();
        if nums.len() != 3 {
            return Err(bad("expected 'm1 m2 n'"));
        }
        let m1 = nums[0].parse().map_err(|_| bad("bad m1"))?;
        let m2 = nums[1].parse().map_err(|_| bad("bad m2"))?;
        let n = nums[2].parse().map_err(|_| bad("bad n"))?;
        let poly = LaurentPolynomial::parse(poly.trim())
            .map_err(|e| Error::Fixture { line, message: e.to_string() })?;
        out.push(GoldenRecord {
            params: KnotParams::new(m1, m2),
            n,
            poly,
            suspect: comment.contains("suspect"),
        });
    }
    Ok(out)
}

impl fmt::Display for GoldenRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} : {}", self.params.m1, self.params.m2, self.n, self.poly)?;
        if self.suspect {
            f.write_str(" # suspect")?;
        }
        Ok(())
    }
}
