//! Lattice maximization of `Q` over `nP`, degree sequences of the colored
//! Jones polynomial, and quasi-polynomial fitting of those sequences.

use std::ops::Range;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::statesum::{colored_jones_leading, polytope_points, KnotParams, LatticeState};
use crate::tropical::predicted_leading;

/// Maximum of `Q` over `nP ∩ Z²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QIPResult {
    pub n: u32,
    pub max_value: Rational,
    /// Maximizing `(k1, k2)`, in lexicographic order.
    pub maximizers: Vec<(i64, i64)>,
    pub tie: bool,
    /// The predicted leading terms of the maximizers sum to zero.
    pub leading_sum_cancels: bool,
}

pub fn brute_maximize(p: KnotParams, n: u32) -> QIPResult {
    let mut best: Option<Rational> = None;
    let mut maximizers = Vec::new();
    let mut sign_sum = 0i64;
    for s in polytope_points(n) {
        let (sign, v) = predicted_leading(p, &s);
        match best.as_ref().map(|b| v.cmp(b)) {
            Some(std::cmp::Ordering::Less) => continue,
            Some(std::cmp::Ordering::Equal) => {}
            _ => {
                best = Some(v);
                maximizers.clear();
                sign_sum = 0;
            }
        }
        maximizers.push((s.k1, s.k2));
        sign_sum += sign as i64;
    }
    QIPResult {
        n,
        max_value: best.expect("nP always contains a lattice point"),
        tie: maximizers.len() >= 2,
        maximizers,
        leading_sum_cancels: sign_sum == 0,
    }
}

/// `degree(J_{K,n})` for `n = 0..=n_max`.
pub fn degree_sequence(p: KnotParams, n_max: u32, mirror: bool) -> Result<Vec<Rational>> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| colored_jones_leading(p, n, mirror).map(|(_, e)| e.to_rational()))
        .collect()
}

/// `n -> c2 n² + c1 n + c0` with coefficients depending on `n mod period`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    pub period: usize,
    /// `(c2, c1, c0)` per residue class.
    pub classes: Vec<(Rational, Rational, Rational)>,
}

impl QuasiPolynomial {
    pub fn eval(&self, n: usize) -> Rational {
        let (c2, c1, c0) = &self.classes[n % self.period];
        let n = int(n as i64);
        c2 * &n * &n + c1 * &n + c0
    }

    /// The common quadratic coefficient.
    pub fn c2(&self) -> &Rational {
        &self.classes[0].0
    }
}

/// Quadratic through three points, as `(c2, c1, c0)`.
fn interpolate(pts: &[(i64, Rational)]) -> (Rational, Rational, Rational) {
    let [(x0, y0), (x1, y1), (x2, y2)] = pts else {
        unreachable!("three points")
    };
    let (x0, x1, x2) = (int(*x0), int(*x1), int(*x2));
    let d01 = (y1 - y0) / (&x1 - &x0);
    let d12 = (y2 - y1) / (&x2 - &x1);
    let c2 = (&d12 - &d01) / (&x2 - &x0);
    let c1 = &d01 - &c2 * (&x0 + &x1);
    let c0 = y0 - &c2 * &x0 * &x0 - &c1 * &x0;
    (c2, c1, c0)
}

/// Fits `seq[window]` by a quadratic quasi-polynomial of the given period.
///
/// Each residue class is interpolated through its three largest indices and
/// every other point of the class in the window must lie on that quadratic.
pub fn fit_quasipolynomial(seq: &[Rational], period: usize, window: Range<usize>) -> Result<QuasiPolynomial> {
    assert!(period >= 1);
    let inconsistent = Error::FitInconsistent { period, window: (window.start, window.end) };
    if window.end > seq.len() || window.is_empty() {
        return Err(inconsistent);
    }
    let mut classes = Vec::with_capacity(period);
    for r in 0..period {
        let pts: Vec<(i64, Rational)> =
            window.clone().filter(|i| i % period == r).map(|i| (i as i64, seq[i].clone())).collect();
        if pts.len() < 4 {
            return Err(inconsistent);
        }
        let (c2, c1, c0) = interpolate(&pts[pts.len() - 3..]);
        let fits = pts.iter().all(|(x, y)| {
            let x = int(*x);
            &c2 * &x * &x + &c1 * &x + &c0 == *y
        });
        if !fits {
            return Err(inconsistent);
        }
        classes.push((c2, c1, c0));
    }
    if classes.iter().any(|c| c.0 != classes[0].0) {
        return Err(inconsistent);
    }
    Ok(QuasiPolynomial { period, classes })
}

/// Periods tried by [`extract_slope`], in order.
pub const PERIODS: [usize; 5] = [1, 2, 3, 4, 6];

/// Window anchored at `n_max` with at least four points per residue class.
fn top_window(n_max: usize, period: usize) -> Option<Range<usize>> {
    let len = (4 * period).max(12);
    (len <= n_max).then(|| n_max + 1 - len..n_max + 1)
}

/// Fits a degree sequence, trying each period in [`PERIODS`].
pub fn fit_sequence(seq: &[Rational]) -> Result<QuasiPolynomial> {
    let n_max = seq.len().saturating_sub(1);
    let mut last = Error::FitInconsistent { period: 1, window: (0, seq.len()) };
    for period in PERIODS {
        let Some(window) = top_window(n_max, period) else {
            continue;
        };
        match fit_quasipolynomial(seq, period, window) {
            Ok(q) => return Ok(q),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// The Jones slope read off from `degree(J_{K,n})`, `n <= n_max`, canonical convention.
///
/// Needs `n_max >= 12`; shorter sequences fail with [`Error::FitInconsistent`].
pub fn extract_slope(p: KnotParams, n_max: u32) -> Result<Rational> {
    if n_max < 12 {
        return Err(Error::FitInconsistent { period: 1, window: (0, n_max as usize + 1) });
    }
    let seq = degree_sequence(p, n_max, false)?;
    Ok(fit_sequence(&seq)?.c2().clone())
}

/// Degree drop caused by cancelling leading terms at the lattice maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationReport {
    pub qip: QIPResult,
    pub degree: Rational,
    /// `max Q - degree(J_{K,n})`.
    pub drop: Rational,
}

pub fn cancellation_report(p: KnotParams, n: u32) -> Result<CancellationReport> {
    let qip = brute_maximize(p, n);
    let (_, e) = colored_jones_leading(p, n, false)?;
    let degree = e.to_rational();
    let drop = &qip.max_value - &degree;
    Ok(CancellationReport { qip, degree, drop })
}

/// One row of a batch comparison between fitted and closed-form slopes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub m1: i64,
    pub m2: i64,
    pub n_max: u32,
    /// Fitted quadratic coefficient, or `inconsistent` when no period fits.
    pub fitted_c2: String,
    pub js_formula: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn scan_row(p: KnotParams, n_max: u32) -> Result<ScanRow> {
    let js = crate::slopes::js(p)?;
    let fitted = match extract_slope(p, n_max) {
        Ok(c2) => Some(c2),
        Err(Error::FitInconsistent { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ScanRow {
        m1: p.m1,
        m2: p.m2,
        n_max,
        matches: fitted.as_ref() == Some(&js),
        fitted_c2: fitted.map_or_else(|| "inconsistent".to_string(), |c| c.to_string()),
        js_formula: js.to_string(),
    })
}

/// `max Q / n²` as an approximation of the real maximum.
pub fn scaled_max(p: KnotParams, n: u32) -> Rational {
    let m = brute_maximize(p, n).max_value;
    if n == 0 {
        return Rational::zero();
    }
    m / (int(n as i64) * int(n as i64))
}

/// States on the diagonal `k1 = k2`.
pub fn diagonal(n: u32) -> impl Iterator<Item = LatticeState> {
    (0..=n as i64).map(move |k| LatticeState::new(n, k, k).expect("diagonal lies in nP"))
}
