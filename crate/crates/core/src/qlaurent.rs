//! Sparse Laurent polynomials in `q^(1/8)` with big-integer coefficients.
//!
//! Every object produced by the fusion state sum lives in `Z[q^(±1/8)]`, so a
//! single integer exponent measured in eighths is enough to represent them.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent of `q`, stored as a count of eighths.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QExponent(i64);

impl QExponent {
    pub const ZERO: QExponent = QExponent(0);

    pub const fn from_eighths(eighths: i64) -> Self {
        QExponent(eighths)
    }

    pub const fn from_integer(n: i64) -> Self {
        QExponent(8 * n)
    }

    /// `num / den`; `None` unless the value lies on the eighth lattice.
    pub fn from_fraction(num: i64, den: i64) -> Option<Self> {
        if den == 0 || (8 * num) % den != 0 {
            return None;
        }
        Some(QExponent(8 * num / den))
    }

    pub fn from_rational(r: &BigRational) -> Option<Self> {
        let scaled = r * BigRational::from_integer(BigInt::from(8));
        if !scaled.is_integer() {
            return None;
        }
        scaled.to_integer().to_i64().map(QExponent)
    }

    pub const fn eighths(self) -> i64 {
        self.0
    }

    /// The exponent lies in `(1/2)Z`.
    pub fn is_half_integral(self) -> bool {
        self.0 % 4 == 0
    }

    pub fn is_integral(self) -> bool {
        self.0 % 8 == 0
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::from(8))
    }

    /// Reduced `(numerator, denominator)` with positive denominator.
    pub fn reduced(self) -> (i64, i64) {
        let g = self.0.gcd(&8);
        (self.0 / g, 8 / g)
    }
}

impl Add for QExponent {
    type Output = QExponent;
    fn add(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 + rhs.0)
    }
}

impl Sub for QExponent {
    type Output = QExponent;
    fn sub(self, rhs: QExponent) -> QExponent {
        QExponent(self.0 - rhs.0)
    }
}

impl Neg for QExponent {
    type Output = QExponent;
    fn neg(self) -> QExponent {
        QExponent(-self.0)
    }
}

impl Mul<i64> for QExponent {
    type Output = QExponent;
    fn mul(self, rhs: i64) -> QExponent {
        QExponent(self.0 * rhs)
    }
}

impl fmt::Display for QExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reduced() {
            (n, 1) => write!(f, "{n}"),
            (n, d) => write!(f, "{n}/{d}"),
        }
    }
}

/// A Laurent polynomial `sum c_e q^e` with no stored zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<QExponent, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, QExponent::ZERO)
    }

    pub fn monomial(c: impl Into<BigInt>, e: QExponent) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPolynomial { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: QExponent) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (QExponent, C)>) -> Self {
        let mut p = LaurentPolynomial::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: QExponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&QExponent::ZERO).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (QExponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: QExponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Result<QExponent> {
        self.terms.keys().next_back().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn min_degree(&self) -> Result<QExponent> {
        self.terms.keys().next().copied().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(BigInt, QExponent)> {
        self.terms
            .iter()
            .next_back()
            .map(|(e, c)| (c.clone(), *e))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Substitutes `q -> 1/q`.
    pub fn invert_q(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: QExponent) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// All exponents are in `(1/2)Z`.
    pub fn is_half_integral(&self) -> bool {
        self.terms.keys().all(|e| e.is_half_integral())
    }

    /// The unique `c` with `divisor * c == self`.
    ///
    /// Long division runs from the top exponent down; any nonzero remainder is
    /// reported as [`Error::NotDivisible`].
    pub fn exact_divide(&self, divisor: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        let (lead_c, lead_e) = divisor.leading_term().map_err(|_| Error::DivisionByZero)?;
        let div_min = divisor.min_degree()?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let floor = self.min_degree()? - div_min;
        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((&top_e, top_c)) = rem.iter().next_back() {
            let q_e = top_e - lead_e;
            if q_e < floor {
                return Err(Error::NotDivisible);
            }
            let (q_c, r) = top_c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (de, dc) in divisor.terms.iter() {
                let e = *de + q_e;
                let prod = dc * &q_c;
                let slot = rem.entry(e).or_insert_with(BigInt::zero);
                *slot -= prod;
                if slot.is_zero() {
                    rem.remove(&e);
                }
            }
            quotient.insert(q_e, q_c);
        }
        Ok(LaurentPolynomial { terms: quotient })
    }

    /// Integer power; negative powers require a unit monomial `±q^e`.
    pub fn powi(&self, k: i64) -> Result<LaurentPolynomial> {
        let base = if k < 0 { Self::one().exact_divide(self)? } else { self.clone() };
        let mut exp = k.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Parses the canonical text form, e.g. `q^(-1/2)+2*q^3-1`.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if *e == QExponent::ZERO {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            match e.reduced() {
                (n, 1) => write!(f, "q^{n}")?,
                (n, d) => write!(f, "q^({n}/{d})")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("digits parse"))
    }

    fn small_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let at = self.pos;
        let v = self.digits()?;
        let v = v.to_i64().ok_or(Error::Parse { position: at, message: "exponent out of range".into() })?;
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<QExponent> {
        if self.eat(b'(') {
            let num = self.small_int()?;
            if !self.eat(b'/') {
                return Err(self.err("expected '/' in fractional exponent"));
            }
            let at = self.pos;
            let den = self.digits()?.to_i64().unwrap_or(0);
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            QExponent::from_fraction(num, den).ok_or(Error::Parse {
                position: at,
                message: format!("exponent {num}/{den} is not on the 1/8 lattice"),
            })
        } else {
            Ok(QExponent::from_integer(self.small_int()?))
        }
    }

    fn term(&mut self, negative: bool) -> Result<(QExponent, BigInt)> {
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.digits()?;
                if !self.eat(b'*') {
                    let c = if negative { -c } else { c };
                    return Ok((QExponent::ZERO, c));
                }
                c
            }
            _ => BigInt::one(),
        };
        if !self.eat(b'q') {
            return Err(self.err("expected 'q'"));
        }
        let e = if self.eat(b'^') { self.exponent()? } else { QExponent::from_integer(1) };
        Ok((e, if negative { -coeff } else { coeff }))
    }

    fn parse(mut self) -> Result<LaurentPolynomial> {
        let mut p = LaurentPolynomial::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                None if first => return Err(self.err("empty input")),
                None => break,
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(c) => return Err(self.err(format!("unexpected '{}'", c as char))),
            };
            first = false;
            let (e, c) = self.term(negative)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (e, c) in rhs.terms.iter() {
            self.add_term(*e, c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &'a LaurentPolynomial) -> LaurentPolynomial {
        let mut acc: BTreeMap<QExponent, BigInt> = BTreeMap::new();
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                *acc.entry(*ea + *eb).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPolynomial { terms: acc }
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Sum for LaurentPolynomial {
    fn sum<I: Iterator<Item = LaurentPolynomial>>(iter: I) -> Self {
        iter.fold(LaurentPolynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// A quotient `num / den` of Laurent polynomials, kept unreduced.
///
/// Individual state-sum summands are rational functions; only their sum is a
/// Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentFraction {
    pub num: LaurentPolynomial,
    pub den: LaurentPolynomial,
}

impl LaurentFraction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(LaurentFraction { num, den })
    }

    pub fn degree(&self) -> Result<QExponent> {
        Ok(self.num.degree()? - self.den.degree()?)
    }

    /// Leading coefficient and degree of the expansion at `q = infinity`.
    ///
    /// Fails with [`Error::NotDivisible`] if the leading coefficients do not
    /// divide, which cannot happen for monic-up-to-sign denominators.
    pub fn leading_term(&self) -> Result<(BigInt, QExponent)> {
        let (cn, en) = self.num.leading_term()?;
        let (cd, ed) = self.den.leading_term()?;
        let (c, r) = cn.div_rem(&cd);
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok((c, en - ed))
    }

    /// The quotient as a Laurent polynomial, if it is one.
    pub fn to_polynomial(&self) -> Result<LaurentPolynomial> {
        self.num.exact_divide(&self.den)
    }
}
