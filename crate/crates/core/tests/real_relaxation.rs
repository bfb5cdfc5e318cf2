mod common;

use common::real::{boundary_points, interior_points, js_real_amended};
use fusion_core::rational::{int, rat, Rational};
use fusion_core::realopt::{delta2, delta2_at, maximize_over_p, polytope_p, region_polygons, RegionPolygon};
use fusion_core::slopes::{i_branch, js_real, real_branch_value, real_sector, SectorLabel};
use fusion_core::tropical::{q_restricted_real, region_of_point, RegionLabel};

/// Second difference in `n` of `Q(n, n x)`, which is `2 * (n² coefficient)`.
fn n2_by_differences(m1: &Rational, m2: &Rational, r: RegionLabel, x: &(Rational, Rational)) -> Rational {
    let q = q_restricted_real(m1, m2, r);
    let f = |n: i64| {
        let n = int(n);
        q.eval(&n, &(&n * &x.0), &(&n * &x.1))
    };
    (f(3) - int(2) * f(2) + f(1)) / int(2)
}

#[test]
fn delta2_matches_second_differences() {
    let xs = [(rat(1, 3), rat(1, 5)), (rat(2, 7), rat(-1, 7)), (rat(4, 5), rat(1, 2)), (rat(3, 4), rat(-1, 8)), (rat(1, 9), rat(0, 1))];
    for (m1, m2) in [(int(2), int(1)), (rat(-1, 3), rat(5, 2)), (int(4), int(-2))] {
        for x in &xs {
            for r in [RegionLabel::R1, RegionLabel::R2, RegionLabel::R3] {
                assert_eq!(delta2(&m1, &m2, r).eval(x), n2_by_differences(&m1, &m2, r, x));
            }
        }
    }
}

#[test]
fn delta2_is_continuous_across_regions() {
    let one = int(1);
    for (m1, m2) in [(int(2), int(1)), (rat(-7, 4), rat(1, 3))] {
        for poly in region_polygons() {
            for v in &poly.vertices {
                let own = region_of_point(&one, &v.0, &v.1);
                assert_eq!(delta2(&m1, &m2, poly.region).eval(v), delta2(&m1, &m2, own).eval(v));
            }
        }
    }
}

#[test]
fn maximum_dominates_a_grid() {
    for (m1, m2) in [(int(2), int(1)), (int(0), int(0)), (int(4), int(-2)), (rat(-1, 4), rat(-1, 4)), (int(-3), int(2)), (rat(5, 2), rat(-3, 4))] {
        let (best, arg) = maximize_over_p(&m1, &m2);
        assert_eq!(delta2_at(&m1, &m2, &arg), best);
        for i in 0..50 {
            let x1 = rat(i, 49);
            let lo = if x1 <= rat(1, 2) { -x1.clone() } else { &x1 - int(1) };
            for j in 0..50 {
                let x2 = &lo + (&x1 - &lo) * rat(j, 49);
                assert!(delta2_at(&m1, &m2, &(x1.clone(), x2)) <= best);
            }
        }
    }
}

#[test]
fn polygon_vertices() {
    let whole = RegionPolygon { region: RegionLabel::R1, vertices: polytope_p() };
    let polys = region_polygons();
    assert_eq!(polys.len(), 3);
    for poly in &polys {
        for v in &poly.vertices {
            assert!(whole.contains(v));
            assert!(poly.contains(v));
        }
    }
}

#[test]
fn maximum_equals_the_formula_on_the_verified_branches() {
    // Branches 2, 5, 6, 7, 8 and 9 agree with the optimization as printed.
    for (branch, pts) in interior_points() {
        for (m1, m2) in pts {
            let opt = maximize_over_p(&m1, &m2).0;
            if [2, 5, 6, 7, 8, 9].contains(&branch) {
                assert_eq!(real_sector(&m1, &m2).unwrap(), SectorLabel::Real(branch));
                assert_eq!(js_real(&m1, &m2).unwrap(), opt, "branch {branch} at ({m1},{m2})");
            }
            assert_eq!(js_real_amended(&m1, &m2).unwrap(), opt, "amended, branch {branch} at ({m1},{m2})");
        }
    }
}

#[test]
fn i_region_point() {
    let (m1, m2) = (rat(-1, 4), rat(-1, 4));
    assert_eq!(maximize_over_p(&m1, &m2).0, i_branch(&m1, &m2));
    assert_eq!(real_branch_value(5, &m1, &m2), i_branch(&m1, &m2));
}

#[test]
fn amended_seams_are_continuous() {
    for ((a, b), (m1, m2)) in boundary_points() {
        let opt = maximize_over_p(&m1, &m2).0;
        assert_eq!(js_real_amended(&m1, &m2).unwrap(), opt, "seam {a}|{b} at ({m1},{m2})");
    }
}
