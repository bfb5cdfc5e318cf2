#![allow(dead_code)]

use std::time::Instant;

use fusion_core::fusion_blocks::{
    is_admissible, mu, nu, tet, theta, u_block, TetLabels,
};
use fusion_core::statesum::{polytope_points, summand, KnotParams};
use fusion_core::tropical::{blocks, predicted_leading};
use fusion_core::{LaurentPolynomial, QExponent};

/// Outcome of one check: number of cases examined and the failures found.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Tally {
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed().as_secs_f64())
}

fn sign_of(c: &num_bigint::BigInt) -> i32 {
    if c.sign() == num_bigint::Sign::Minus {
        -1
    } else {
        1
    }
}

/// Compares a polynomial's leading term with a `(degree, sign)` prediction.
fn lead_matches(p: &LaurentPolynomial, deg: QExponent, sign: i32) -> bool {
    match p.leading_term() {
        Ok((c, e)) => e == deg && sign_of(&c) == sign && (c == 1.into() || c == (-1).into()),
        Err(_) => false,
    }
}

/// Exact summand leading terms against the closed-form degree and sign, over a box of twists.
pub fn tropical_sweep(m_range: std::ops::RangeInclusive<i64>, n_max: u32) -> Tally {
    use rayon::prelude::*;
    let pairs: Vec<(i64, i64)> =
        m_range.clone().flat_map(|a| m_range.clone().map(move |b| (a, b))).collect();
    let parts: Vec<Tally> = pairs
        .into_par_iter()
        .map(|(m1, m2)| {
            let mut t = Tally::default();
            let p = KnotParams::new(m1, m2);
            for n in 0..=n_max {
                for s in polytope_points(n) {
                    let got = summand(p, &s).and_then(|f| f.leading_term());
                    let (sign, deg) = predicted_leading(p, &s);
                    let ok = match &got {
                        Ok((c, e)) => e.to_rational() == deg && sign_of(c) == sign,
                        Err(_) => false,
                    };
                    t.record(ok, || format!("{p} {s:?}: summand {got:?}, predicted ({sign}, {deg})"));
                }
            }
            t
        })
        .collect();
    let mut t = Tally::default();
    for part in parts {
        t.cases += part.cases;
        t.failures.extend(part.failures);
    }
    t
}

/// The five block degree and leading-sign laws, for all admissible colors up to `max`.
pub fn block_laws(max: u32) -> Tally {
    let mut t = Tally::default();
    for a in 0..=max {
        t.record(lead_matches(&mu(a), blocks::degree_mu(a), blocks::sign_mu(a)), || format!("mu({a})"));
        t.record(lead_matches(&u_block(a), blocks::degree_u(a), blocks::sign_u(a)), || format!("U({a})"));
    }
    let adm = |a: u32, b: u32, c: u32| is_admissible(a as i64, b as i64, c as i64);
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                if !adm(a, b, c) {
                    continue;
                }
                let v = nu(c, a, b).unwrap();
                t.record(lead_matches(&v, blocks::degree_nu(c, a, b), blocks::sign_nu(c, a, b)), || {
                    format!("nu({c},{a},{b})")
                });
                let th = theta(a, b, c).unwrap();
                t.record(lead_matches(&th, blocks::degree_theta(a, b, c), blocks::sign_theta(a, b, c)), || {
                    format!("Theta({a},{b},{c})")
                });
            }
        }
    }
    for a in 0..=max {
        for b in 0..=max {
            for e in 0..=max {
                if !adm(a, b, e) {
                    continue;
                }
                for c in 0..=max {
                    for f in 0..=max {
                        if !adm(a, c, f) {
                            continue;
                        }
                        for d in 0..=max {
                            if !adm(c, d, e) || !adm(b, d, f) {
                                continue;
                            }
                            let l = TetLabels::new(a, b, c, d, e, f).unwrap();
                            let v = tet(&l).unwrap();
                            t.record(lead_matches(&v, blocks::degree_tet(&l), blocks::sign_tet(&l)), || {
                                format!("Tet({a},{b},{c},{d},{e},{f})")
                            });
                        }
                    }
                }
            }
        }
    }
    t
}

pub mod real {
    use fusion_core::rational::{int, rat, Rational};
    use fusion_core::slopes::{real_branch_value, real_sectors_all};

    pub type Pt = (Rational, Rational);

    fn p(a: (i64, i64), b: (i64, i64)) -> Pt {
        (rat(a.0, a.1), rat(b.0, b.1))
    }

    /// Three points strictly inside each of the nine real branches, in branch order.
    pub fn interior_points() -> Vec<(u8, Vec<Pt>)> {
        vec![
            (1, vec![p((2, 1), (1, 1)), p((3, 1), (1, 2)), p((5, 2), (3, 1))]),
            (2, vec![p((1, 2), (1, 2)), p((1, 4), (1, 1)), p((3, 4), (2, 1))]),
            (3, vec![p((-1, 2), (1, 1)), p((-1, 1), (3, 1)), p((-1, 4), (1, 2))]),
            (4, vec![p((-3, 1), (2, 1)), p((-2, 1), (1, 2)), p((-5, 2), (3, 1))]),
            (5, vec![p((-2, 1), (-1, 6)), p((-1, 1), (-1, 4)), p((-3, 1), (-1, 12))]),
            (6, vec![p((0, 1), (-1, 1)), p((-1, 1), (-1, 2)), p((1, 1), (-2, 1))]),
            (7, vec![p((4, 1), (-2, 1)), p((3, 1), (-3, 2)), p((5, 1), (-3, 1))]),
            (8, vec![p((2, 1), (-1, 2)), p((3, 1), (-1, 4)), p((5, 2), (-3, 4))]),
            (9, vec![p((-1, 8), (-1, 8)), p((-1, 4), (-1, 8)), p((-1, 8), (-1, 4))]),
        ]
    }

    /// Points on the seam between two real branches.
    pub fn boundary_points() -> Vec<((u8, u8), Pt)> {
        vec![
            ((1, 2), p((1, 1), (1, 2))),
            ((1, 2), p((1, 1), (2, 1))),
            ((2, 3), p((0, 1), (1, 1))),
            ((2, 3), p((0, 1), (2, 1))),
            ((3, 4), p((-2, 1), (3, 1))),
            ((3, 4), p((-3, 2), (2, 1))),
            ((5, 9), p((-1, 4), (-1, 4))),
            ((5, 9), p((-3, 8), (-1, 6))),
            ((6, 7), p((3, 1), (-2, 1))),
            ((7, 8), p((3, 1), (-1, 1))),
            ((5, 6), p((-2, 1), (-1, 3))),
            ((6, 8), p((1, 1), (-3, 4))),
            ((2, 9), p((0, 1), (-1, 8))),
            ((2, 8), p((3, 4), (-1, 4))),
        ]
    }

    /// Whether the red branch applies with its inequality reversed.
    pub fn red_amended(m1: &Rational, m2: &Rational) -> bool {
        *m2 > int(0) && int(1) + int(2) * m1 + m2 <= int(0)
    }

    /// Real slope with two amendments: the branches sharing the tail
    /// `(m1 + 9 m2 + 1)/4` gain `(m1 + 1)/2`, and the red branch condition
    /// reads `1 + 2 m1 + m2 <= 0`. Diagnostic only.
    pub fn js_real_amended(m1: &Rational, m2: &Rational) -> Option<Rational> {
        let mut matching: Vec<u8> = real_sectors_all(m1, m2).into_iter().filter(|&i| i != 4).collect();
        if red_amended(m1, m2) {
            matching.push(4);
        }
        let first = matching.into_iter().min()?;
        let mut v = real_branch_value(first, m1, m2);
        if first == 1 || first == 3 {
            v += (m1 + int(1)) / int(2);
        }
        Some(v)
    }
}

pub mod strategies {
    use fusion_core::fusion_blocks::{is_admissible, TetLabels};
    use fusion_core::{LaurentPolynomial, QExponent};
    use proptest::prelude::*;

    pub fn poly() -> impl Strategy<Value = LaurentPolynomial> {
        // Exponents in (1/8)Z restricted to a few denominators so sums collide often.
        let term = (prop_oneof![Just(8i64), Just(4), Just(2), Just(1)], -12i64..=12, -6i64..=6)
            .prop_map(|(step, k, c)| (QExponent::from_eighths(step * k), num_bigint::BigInt::from(c)));
        prop::collection::vec(term, 0..8).prop_map(LaurentPolynomial::from_terms)
    }

    pub fn nonzero_poly() -> impl Strategy<Value = LaurentPolynomial> {
        poly().prop_filter("nonzero", |p| !p.is_zero())
    }

    pub fn admissible_triple() -> impl Strategy<Value = (u32, u32, u32)> {
        (0u32..=10, 0u32..=10, 0u32..=10).prop_filter("admissible", |&(a, b, c)| is_admissible(a as i64, b as i64, c as i64))
    }

    /// Trivalent vertices joined by each edge `a..f`.
    pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 3), (1, 2), (2, 3), (0, 2), (1, 3)];

    pub fn relabel(labels: [u32; 6], perm: [usize; 4]) -> [u32; 6] {
        let mut out = [0; 6];
        for (i, &(u, v)) in EDGES.iter().enumerate() {
            let (pu, pv) = (perm[u], perm[v]);
            let j = EDGES.iter().position(|&(x, y)| (x, y) == (pu, pv) || (x, y) == (pv, pu)).unwrap();
            out[j] = labels[i];
        }
        out
    }

    pub fn admissible_tet() -> impl Strategy<Value = [u32; 6]> {
        prop::array::uniform6(0u32..=6).prop_filter("admissible", |l| {
            let [a, b, c, d, e, f] = *l;
            TetLabels::new(a, b, c, d, e, f).is_ok()
        })
    }

    pub fn permutations() -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let p = [a, b, c, d];
                        if (0..4).all(|x| p.contains(&x)) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

pub mod amended {
    use fusion_core::rational::{int, Rational};
    use fusion_core::slopes::{js, lattice_sector, real_branch_value, SectorLabel};
    use fusion_core::KnotParams;

    /// Lattice slope with `(m1 + 1)/2` added on the two branches sharing the
    /// tail `(m1 + 9 m2 + 1)/4`. Diagnostic only.
    pub fn js_amended(p: KnotParams) -> Rational {
        let v = js(p).unwrap();
        match lattice_sector(p).unwrap() {
            SectorLabel::Lattice(1) | SectorLabel::Lattice(2) => v + int(p.m1 + 1) / int(2),
            _ => v,
        }
    }

    pub fn real_branch_amended(i: u8, m1: &Rational, m2: &Rational) -> Rational {
        let v = real_branch_value(i, m1, m2);
        if i == 1 || i == 3 {
            v + (m1 + int(1)) / int(2)
        } else {
            v
        }
    }
}
