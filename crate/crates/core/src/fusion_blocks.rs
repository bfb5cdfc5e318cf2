//! Quantum integers and the five fusion building blocks `mu, nu, U, Theta, Tet`.
//!
//! Every block is available as an exact Laurent polynomial. `Theta`, `U` and
//! the `Tet` summands are also available as [`QuantumProduct`]s, which the
//! state sum uses to cancel factorials symbolically.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::qlaurent::{LaurentPolynomial, QExponent};
use crate::qproduct::QuantumProduct;

/// `(-1)^negative q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub exponent: QExponent,
}

impl SignedMonomial {
    pub fn pow(self, k: i64) -> SignedMonomial {
        SignedMonomial { negative: self.negative && k.rem_euclid(2) == 1, exponent: self.exponent * k }
    }

    pub fn to_polynomial(self) -> LaurentPolynomial {
        LaurentPolynomial::monomial(if self.negative { -1 } else { 1 }, self.exponent)
    }
}

/// A triple of colors meeting at a trivalent vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AdmissibleTriple {
    a: u32,
    b: u32,
    c: u32,
}

pub fn is_admissible(a: i64, b: i64, c: i64) -> bool {
    a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

impl AdmissibleTriple {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if is_admissible(a as i64, b as i64, c as i64) {
            Ok(AdmissibleTriple { a, b, c })
        } else {
            Err(Error::NotAdmissible(vec![a as i64, b as i64, c as i64]))
        }
    }

    pub fn colors(self) -> (u32, u32, u32) {
        (self.a, self.b, self.c)
    }

    /// Half the perimeter, `(a+b+c)/2`.
    pub fn half_sum(self) -> u32 {
        (self.a + self.b + self.c) / 2
    }
}

/// Edge colors of a tetrahedron. Vertices are `(a,b,e)`, `(a,c,f)`, `(c,d,e)`, `(b,d,f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TetLabels {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub f: u32,
}

impl TetLabels {
    pub fn new(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Result<Self> {
        let vertices = [(a, b, e), (a, c, f), (c, d, e), (b, d, f)];
        if vertices.iter().all(|&(x, y, z)| is_admissible(x as i64, y as i64, z as i64)) {
            Ok(TetLabels { a, b, c, d, e, f })
        } else {
            Err(Error::NotAdmissible(vec![a, b, c, d, e, f].into_iter().map(i64::from).collect()))
        }
    }

    /// Face sums `S1, S2, S3`.
    pub fn s(&self) -> [u32; 3] {
        let TetLabels { a, b, c, d, e, f } = *self;
        [(a + d + b + c) / 2, (a + d + e + f) / 2, (b + c + e + f) / 2]
    }

    /// Vertex half-sums `T1..T4`.
    pub fn t(&self) -> [u32; 4] {
        let TetLabels { a, b, c, d, e, f } = *self;
        [(a + b + e) / 2, (a + c + f) / 2, (c + d + e) / 2, (b + d + f) / 2]
    }

    /// Summation range `max T_i ..= min S_j`.
    pub fn k_range(&self) -> std::ops::RangeInclusive<u32> {
        let lo = *self.t().iter().max().expect("four vertices");
        let hi = *self.s().iter().min().expect("three faces");
        assert!(lo <= hi, "admissible tetrahedron with empty summation range: {self:?}");
        lo..=hi
    }

    /// The seven multinomial parts at summation index `k`.
    pub fn parts(&self, k: u32) -> [u32; 7] {
        let [s1, s2, s3] = self.s();
        let [t1, t2, t3, t4] = self.t();
        [s1 - k, s2 - k, s3 - k, k - t1, k - t2, k - t3, k - t4]
    }
}

/// `[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))`.
pub fn quantum_integer(n: u32) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(
        (0..n as i64).map(|k| (QExponent::from_eighths(4 * (n as i64 - 1) - 8 * k), 1)),
    )
}

static FACTORIALS: OnceLock<RwLock<Vec<LaurentPolynomial>>> = OnceLock::new();

/// `[n]! = [1][2]...[n]`, memoized.
pub fn quantum_factorial(n: u32) -> LaurentPolynomial {
    let cache = FACTORIALS.get_or_init(|| RwLock::new(vec![LaurentPolynomial::one()]));
    if let Some(p) = cache.read().expect("factorial cache poisoned").get(n as usize) {
        return p.clone();
    }
    let mut table = cache.write().expect("factorial cache poisoned");
    while table.len() <= n as usize {
        let k = table.len() as u32;
        let next = &table[k as usize - 1] * &quantum_integer(k);
        table.push(next);
    }
    table[n as usize].clone()
}

/// `[a]! / ([a_1]! ... [a_r]!)`.
pub fn quantum_multinomial(a: u32, parts: &[u32]) -> Result<LaurentPolynomial> {
    let total: u32 = parts.iter().sum();
    if total != a {
        return Err(Error::PartsMismatch { total: a, parts: total });
    }
    let mut denom = LaurentPolynomial::one();
    for &p in parts.iter().filter(|&&p| p > 1) {
        denom = &denom * &quantum_factorial(p);
    }
    quantum_factorial(a).exact_divide(&denom)
}

pub fn mu_monomial(a: u32) -> SignedMonomial {
    let a = a as i64;
    SignedMonomial { negative: a % 2 == 1, exponent: QExponent::from_eighths(-2 * a * (a + 2)) }
}

/// `mu(a) = (-1)^a q^(-a(a+2)/4)`.
pub fn mu(a: u32) -> LaurentPolynomial {
    mu_monomial(a).to_polynomial()
}

pub fn nu_monomial(c: u32, a: u32, b: u32) -> Result<SignedMonomial> {
    AdmissibleTriple::new(a, b, c)?;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    Ok(SignedMonomial {
        negative: ((a + b - c) / 2) % 2 == 1,
        exponent: QExponent::from_eighths(a * (a + 2) + b * (b + 2) - c * (c + 2)),
    })
}

/// `nu(c,a,b) = (-1)^((a+b-c)/2) q^((a(a+2)+b(b+2)-c(c+2))/8)`.
pub fn nu(c: u32, a: u32, b: u32) -> Result<LaurentPolynomial> {
    Ok(nu_monomial(c, a, b)?.to_polynomial())
}

pub fn u_product(a: u32) -> QuantumProduct {
    let mut p = QuantumProduct::monomial(a % 2 == 1, QExponent::ZERO);
    p.mul_quantum_int(a + 1, 1);
    p
}

/// `U(a) = (-1)^a [a+1]`, the colored unknot.
pub fn u_block(a: u32) -> LaurentPolynomial {
    let q = quantum_integer(a + 1);
    if a % 2 == 1 {
        -q
    } else {
        q
    }
}

pub fn theta_product(a: u32, b: u32, c: u32) -> Result<QuantumProduct> {
    let s = AdmissibleTriple::new(a, b, c)?.half_sum();
    let mut p = QuantumProduct::monomial(s % 2 == 1, QExponent::ZERO);
    p.mul_quantum_int(s + 1, 1);
    p.mul_factorial(s, 1);
    for x in [a, b, c] {
        p.mul_factorial(s - x, -1);
    }
    Ok(p)
}

/// `Theta(a,b,c) = (-1)^s [s+1] [s; s-a, s-b, s-c]` with `s = (a+b+c)/2`.
pub fn theta(a: u32, b: u32, c: u32) -> Result<LaurentPolynomial> {
    let s = AdmissibleTriple::new(a, b, c)?.half_sum();
    let body = &quantum_integer(s + 1) * &quantum_multinomial(s, &[s - a, s - b, s - c])?;
    Ok(if s % 2 == 1 { -body } else { body })
}

/// The summands `(-1)^k [k+1] [k; S-k, k-T]` of `Tet`, one per `k`.
pub fn tet_term_products(labels: &TetLabels) -> Vec<QuantumProduct> {
    labels
        .k_range()
        .map(|k| {
            let mut p = QuantumProduct::monomial(k % 2 == 1, QExponent::ZERO);
            p.mul_quantum_int(k + 1, 1);
            p.mul_factorial(k, 1);
            for part in labels.parts(k) {
                p.mul_factorial(part, -1);
            }
            p
        })
        .collect()
}

/// The tetrahedron evaluation, summed over `k` from `max T_i` to `min S_j`.
pub fn tet(labels: &TetLabels) -> Result<LaurentPolynomial> {
    let mut acc = LaurentPolynomial::zero();
    for k in labels.k_range() {
        let term = &quantum_integer(k + 1) * &quantum_multinomial(k, &labels.parts(k))?;
        if k % 2 == 1 {
            acc = &acc - &term;
        } else {
            acc += &term;
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(s).unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert!(quantum_integer(0).is_zero());
        assert!(quantum_integer(1).is_one());
        assert_eq!(quantum_integer(2).to_string(), "q^(-1/2)+q^(1/2)");
        assert_eq!(quantum_integer(3), p("q^-1+1+q^1"));
        for n in 0..=6 {
            assert_eq!(quantum_integer(n).invert_q(), quantum_integer(n));
        }
        // [n] (q^(1/2) - q^(-1/2)) = q^(n/2) - q^(-n/2)
        let denom = p("q^(1/2)-q^(-1/2)");
        for n in 1..=8i64 {
            let lhs = &quantum_integer(n as u32) * &denom;
            let rhs = LaurentPolynomial::from_terms([
                (QExponent::from_eighths(4 * n), 1),
                (QExponent::from_eighths(-4 * n), -1),
            ]);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn factorials() {
        assert!(quantum_factorial(0).is_one());
        assert_eq!(quantum_factorial(2), p("q^(-1/2)+q^(1/2)"));
        for n in 0..=10u32 {
            let d = quantum_factorial(n).degree().unwrap();
            let n = n as i64;
            assert_eq!(d, QExponent::from_fraction(n * n - n, 4).unwrap());
        }
    }

    #[test]
    fn multinomials() {
        assert!(quantum_multinomial(5, &[5]).unwrap().is_one());
        assert_eq!(quantum_multinomial(2, &[1, 1]).unwrap(), p("q^(-1/2)+q^(1/2)"));
        assert_eq!(quantum_multinomial(4, &[1, 2]), Err(Error::PartsMismatch { total: 4, parts: 3 }));
        let parts = [1u32, 0, 3, 2, 0, 1, 2];
        let a: u32 = parts.iter().sum();
        let m = quantum_multinomial(a, &parts).unwrap();
        let sq: i64 = parts.iter().map(|&x| (x * x) as i64).sum();
        let expect = QExponent::from_fraction((a * a) as i64 - sq, 4).unwrap();
        assert_eq!(m.degree().unwrap(), expect);
    }

    #[test]
    fn gaussian_multinomials_are_nonnegative_and_monic() {
        for a in 0..=20u32 {
            for i in 0..=a {
                for j in 0..=(a - i) {
                    let m = quantum_multinomial(a, &[i, j, a - i - j]).unwrap();
                    assert!(m.terms().all(|(_, c)| c.sign() == num_bigint::Sign::Plus));
                    assert!(m.leading_term().unwrap().0 == 1.into());
                }
            }
        }
    }

    #[test]
    fn mu_nu_u() {
        assert!(mu(0).is_one());
        assert_eq!(mu(1), p("-q^(-3/4)"));
        assert_eq!(mu(2), p("q^-2"));
        assert!(nu(0, 0, 0).unwrap().is_one());
        assert_eq!(nu(2, 1, 1).unwrap(), p("q^(-1/4)"));
        assert_eq!(nu(0, 1, 1).unwrap(), p("-q^(3/4)"));
        assert!(matches!(nu(3, 1, 1), Err(Error::NotAdmissible(_))));
        assert!(matches!(nu(1, 1, 1), Err(Error::NotAdmissible(_))));
        assert!(u_block(0).is_one());
        assert_eq!(u_block(1), p("-q^(-1/2)-q^(1/2)"));
        for a in 0..8 {
            assert_eq!(u_block(a).degree().unwrap(), QExponent::from_fraction(a as i64, 2).unwrap());
            assert_eq!(u_product(a).to_polynomial().unwrap(), u_block(a));
        }
    }

    #[test]
    fn theta_examples() {
        assert!(theta(0, 0, 0).unwrap().is_one());
        let t = theta(2, 3, 3).unwrap();
        for (a, b, c) in [(2, 3, 3), (3, 2, 3), (3, 3, 2)] {
            assert_eq!(theta(a, b, c).unwrap(), t);
        }
        assert!(matches!(theta(1, 1, 1), Err(Error::NotAdmissible(_))));
        assert!(matches!(theta(5, 1, 2), Err(Error::NotAdmissible(_))));
        assert_eq!(theta_product(2, 3, 3).unwrap().to_polynomial().unwrap(), t);
    }

    #[test]
    fn tet_examples() {
        let zero = TetLabels::new(0, 0, 0, 0, 0, 0).unwrap();
        assert!(tet(&zero).unwrap().is_one());
        assert!(TetLabels::new(1, 0, 0, 0, 0, 0).is_err());
        let l = TetLabels::new(2, 2, 2, 2, 2, 2).unwrap();
        let sum: LaurentPolynomial =
            tet_term_products(&l).iter().map(|t| t.to_polynomial().unwrap()).sum();
        assert_eq!(sum, tet(&l).unwrap());
    }
}
