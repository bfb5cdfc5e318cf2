//! The real relaxation: the `n²` coefficient of `Q(n, n x)` maximized exactly
//! over the polytope `P`.

use num_traits::{Signed, Zero};

use crate::rational::{int, rat, Rational};
use crate::tropical::{q_restricted_real, RegionLabel};

pub type Point = (Rational, Rational);

/// `c0 + c1 x1 + c2 x2 + c11 x1² + c12 x1 x2 + c22 x2²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadratic2 {
    pub c0: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub c11: Rational,
    pub c12: Rational,
    pub c22: Rational,
}

impl Quadratic2 {
    pub fn eval(&self, x: &Point) -> Rational {
        let (x1, x2) = x;
        &self.c0 + &self.c1 * x1 + &self.c2 * x2 + &self.c11 * x1 * x1 + &self.c12 * x1 * x2 + &self.c22 * x2 * x2
    }

    /// Restriction to the segment `a + t (b - a)` as `(constant, linear, quadratic)` in `t`.
    fn on_segment(&self, a: &Point, b: &Point) -> (Rational, Rational, Rational) {
        let (d1, d2) = (&b.0 - &a.0, &b.1 - &a.1);
        let quad = &self.c11 * &d1 * &d1 + &self.c12 * &d1 * &d2 + &self.c22 * &d2 * &d2;
        let lin = &self.c1 * &d1
            + &self.c2 * &d2
            + int(2) * &self.c11 * &a.0 * &d1
            + &self.c12 * (&a.0 * &d2 + &a.1 * &d1)
            + int(2) * &self.c22 * &a.1 * &d2;
        (self.eval(a), lin, quad)
    }

    /// Stationary point, if the Hessian is negative definite.
    fn concave_critical_point(&self) -> Option<Point> {
        // Hessian [[2c11, c12], [c12, 2c22]].
        let h11 = int(2) * &self.c11;
        let h22 = int(2) * &self.c22;
        let det = &h11 * &h22 - &self.c12 * &self.c12;
        if !(h11.is_negative() && det.is_positive()) {
            return None;
        }
        // Solve H x = -grad0.
        let x1 = (-&self.c1 * &h22 + &self.c12 * &self.c2) / &det;
        let x2 = (-&h11 * &self.c2 + &self.c12 * &self.c1) / &det;
        Some((x1, x2))
    }
}

/// `n²` coefficient of `Q(m, n, n x)` on one region.
pub fn delta2(m1: &Rational, m2: &Rational, region: RegionLabel) -> Quadratic2 {
    let q = q_restricted_real(m1, m2, region);
    Quadratic2 {
        c0: q.coeff(2, 0, 0).clone(),
        c1: q.coeff(1, 1, 0).clone(),
        c2: q.coeff(1, 0, 1).clone(),
        c11: q.coeff(0, 2, 0).clone(),
        c12: q.coeff(0, 1, 1).clone(),
        c22: q.coeff(0, 0, 2).clone(),
    }
}

/// `delta2` at a point of `P`, using whichever region contains it.
pub fn delta2_at(m1: &Rational, m2: &Rational, x: &Point) -> Rational {
    let one = int(1);
    let r = crate::tropical::region_of_point(&one, &x.0, &x.1);
    delta2(m1, m2, r).eval(x)
}

/// A convex polygon with vertices in counterclockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionPolygon {
    pub region: RegionLabel,
    pub vertices: Vec<Point>,
}

impl RegionPolygon {
    pub fn contains(&self, x: &Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            cross(a, b, x) >= Rational::zero()
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }
}

fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

/// `P`, counterclockwise.
pub fn polytope_p() -> Vec<Point> {
    vec![(int(0), int(0)), (rat(1, 2), rat(-1, 2)), (int(1), int(0)), (int(1), int(1))]
}

/// Keeps the part of a convex polygon where `a1 x1 + a2 x2 <= b`.
fn clip(poly: &[Point], a1: &Rational, a2: &Rational, b: &Rational) -> Vec<Point> {
    let f = |p: &Point| a1 * &p.0 + a2 * &p.1 - b;
    let mut out: Vec<Point> = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (fp, fq) = (f(p), f(q));
        if !fp.is_positive() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            let t = &fp / (&fp - &fq);
            out.push((&p.0 + &t * (&q.0 - &p.0), &p.1 + &t * (&q.1 - &p.1)));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// The three closed pieces of `P` on which `l1`, `l2` or `l3` is minimal (at `n = 1`).
pub fn region_polygons() -> Vec<RegionPolygon> {
    let p = polytope_p();
    let (z, one, two, m1) = (int(0), int(1), int(2), int(-1));
    // l1 <= l2  <=>  -x2 <= 0;  l1 <= l3  <=>  2x1 - x2 <= 1;  l2 <= l3  <=>  2x1 <= 1.
    let r1 = clip(&clip(&p, &z, &m1, &z), &two, &m1, &one);
    let r2 = clip(&clip(&p, &z, &one, &z), &two, &z, &one);
    let r3 = clip(&clip(&p, &-&two, &one, &m1), &-&two, &z, &m1);
    [(RegionLabel::R1, r1), (RegionLabel::R2, r2), (RegionLabel::R3, r3)]
        .into_iter()
        .map(|(region, vertices)| RegionPolygon { region, vertices })
        .collect()
}

/// Candidate maximizers of a quadratic over a polygon: vertices, edge
/// stationary points and the interior stationary point.
fn candidates(q: &Quadratic2, poly: &RegionPolygon) -> Vec<Point> {
    let mut out: Vec<Point> = poly.vertices.clone();
    for (a, b) in poly.edges() {
        let (_, lin, quad) = q.on_segment(a, b);
        if quad.is_negative() {
            let t = -lin / (int(2) * quad);
            if t > Rational::zero() && t < int(1) {
                out.push((&a.0 + &t * (&b.0 - &a.0), &a.1 + &t * (&b.1 - &a.1)));
            }
        }
    }
    if let Some(c) = q.concave_critical_point() {
        if poly.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Exact maximum of `delta2` over `P`, with a maximizer.
pub fn maximize_over_p(m1: &Rational, m2: &Rational) -> (Rational, Point) {
    let mut best: Option<(Rational, Point)> = None;
    for poly in region_polygons() {
        let q = delta2(m1, m2, poly.region);
        for x in candidates(&q, &poly) {
            let v = q.eval(&x);
            if best.as_ref().is_none_or(|(b, _)| v > *b) {
                best = Some((v, x));
            }
        }
    }
    best.expect("P is nonempty")
}
