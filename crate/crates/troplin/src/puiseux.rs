//! Finite-support Puiseux polynomials over the rationals.
//!
//! A value is a finite sum of terms `c * t^e` with rational nonzero
//! coefficients `c` and rational exponents `e`, stored sparsely by exponent.
//! The valuation (least exponent, `inf` for zero) is what tropicalization
//! reads off; it is additive under multiplication and dominated by the
//! minimum under addition, which is exactly the min-plus shadow the rest of
//! the crate computes with.
//!
//! # Text form
//!
//! `Display` and `FromStr` use a canonical sum-of-terms notation with
//! exponents ascending: `1 - 2*t + 1/3*t^(5/2)`. Exponent syntax is `t`,
//! `t^3`, or `t^(p/q)`; fractional and negative exponents are always
//! parenthesized when printed. `parse(print(x)) == x` for every value.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::rat::{rational_to_string, ExtRat};
use crate::trop::TropVector;
use crate::{Error, Result};

/// Sparse exact Puiseux polynomial: a map from exponent to nonzero
/// coefficient. The zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<BigRational, BigRational>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, BigRational::zero())
    }

    pub fn monomial(c: BigRational, e: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        PuiseuxPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (BigRational, BigRational)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience for integer data: terms as `(coeff, exponent)` pairs.
    pub fn from_int_terms(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(c, e)| {
            (
                BigRational::from_integer(BigInt::from(e)),
                BigRational::from_integer(BigInt::from(c)),
            )
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff_at(&self, e: &BigRational) -> Option<&BigRational> {
        self.terms.get(e)
    }

    /// Least exponent, or `inf` for the zero polynomial.
    pub fn valuation(&self) -> ExtRat {
        match self.terms.keys().next() {
            Some(e) => ExtRat::Finite(e.clone()),
            None => ExtRat::Infinity,
        }
    }

    /// Coefficient of the least-exponent term.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    /// Least common denominator of the stored exponents; 1 for the zero
    /// polynomial. The polynomial lives in Q[t^(1/M), t^(-1/M)].
    pub fn ramification(&self) -> BigInt {
        self.terms
            .keys()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    fn add_term(&mut self, e: BigRational, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplication by `c * t^e`.
    pub fn mul_term(&self, c: &BigRational, e: &BigRational) -> PuiseuxPoly {
        if c.is_zero() {
            return PuiseuxPoly::zero();
        }
        PuiseuxPoly {
            terms: self
                .terms
                .iter()
                .map(|(ex, co)| (ex + e, co * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> PuiseuxPoly {
        self.mul_term(c, &BigRational::zero())
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: &BigRational) -> PuiseuxPoly {
        self.mul_term(&BigRational::one(), e)
    }

    /// Exponent of the greatest term; only meaningful on nonzero input.
    fn top_exponent(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    fn top_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// Remainder of division by the top term of `d`, i.e. ordinary
    /// polynomial remainder in the common ramification variable.
    pub(crate) fn rem(&self, d: &PuiseuxPoly) -> PuiseuxPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let d_top = d.top_exponent().unwrap().clone();
        let d_lc = d.top_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(r_top) = r.top_exponent() {
            if *r_top < d_top {
                break;
            }
            let q_e = r_top - &d_top;
            let q_c = r.top_coeff().unwrap() / &d_lc;
            r = &r - &d.mul_term(&q_c, &q_e);
        }
        r
    }

    /// Unit normalization: divides by `lc * t^val` so the result has
    /// valuation 0 and leading coefficient 1. Zero stays zero.
    pub(crate) fn unit_normal(&self) -> PuiseuxPoly {
        match (self.leading_coeff(), self.valuation()) {
            (Some(lc), ExtRat::Finite(v)) => self.mul_term(&lc.recip(), &-v),
            _ => PuiseuxPoly::zero(),
        }
    }

    /// Monic greatest common divisor in the Laurent sense: defined up to a
    /// unit `c * t^e`, normalized via `unit_normal`.
    pub(crate) fn gcd(&self, other: &PuiseuxPoly) -> PuiseuxPoly {
        let mut a = self.unit_normal();
        let mut b = other.unit_normal();
        while !b.is_zero() {
            let r = a.rem(&b).unit_normal();
            a = b;
            b = r;
        }
        a.unit_normal()
    }

    /// Exact division in the Laurent sense; `None` when no exact quotient
    /// exists. Both operands are shifted to valuation 0 first, so a
    /// quotient with negative exponents (say `(t^-1 + 1) / (1 + t)`) is
    /// still found; the exponent offset is restored at the end.
    pub(crate) fn div_exact(&self, d: &PuiseuxPoly) -> Option<PuiseuxPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(PuiseuxPoly::zero());
        }
        let one = BigRational::one();
        let ExtRat::Finite(self_val) = self.valuation() else { unreachable!() };
        let ExtRat::Finite(d_val) = d.valuation() else { unreachable!() };
        let num = self.mul_term(&one, &-self_val.clone());
        let den = d.mul_term(&one, &-d_val.clone());
        let d_top = den.top_exponent().unwrap().clone();
        let d_lc = den.top_coeff().unwrap().clone();
        let mut r = num;
        let mut q = PuiseuxPoly::zero();
        while let Some(r_top) = r.top_exponent() {
            if *r_top < d_top {
                return None;
            }
            let q_e = r_top - &d_top;
            let q_c = r.top_coeff().unwrap() / &d_lc;
            r = &r - &den.mul_term(&q_c, &q_e);
            q.add_term(q_e, q_c);
        }
        Some(q.mul_term(&one, &(self_val - d_val)))
    }
}

impl Add for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn add(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn sub(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn neg(self) -> PuiseuxPoly {
        PuiseuxPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &PuiseuxPoly {
    type Output = PuiseuxPoly;
    fn mul(self, rhs: &PuiseuxPoly) -> PuiseuxPoly {
        let mut out = PuiseuxPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{}", rational_to_string(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", rational_to_string(&mag))?;
            }
            if e.is_one() {
                write!(f, "t")?;
            } else if e.is_integer() && e.is_positive() {
                write!(f, "t^{}", e.numer())?;
            } else {
                write!(f, "t^({})", rational_to_string(e))?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
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

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected `{}` at byte {}",
                b as char, self.pos
            )))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected digits at byte {start}")));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let n: BigInt = digits.parse().expect("digit string parses");
        Ok(if neg { -n } else { n })
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        self.ws();
        if self.eat(b'/') {
            self.ws();
            let den = self.integer()?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    /// `t`, `t^3`, `t^-3`, or `t^(p/q)`; returns the exponent.
    fn tpart(&mut self) -> Result<BigRational> {
        self.expect(b't')?;
        self.ws();
        if !self.eat(b'^') {
            return Ok(BigRational::one());
        }
        self.ws();
        if self.eat(b'(') {
            self.ws();
            let e = self.rational()?;
            self.ws();
            self.expect(b')')?;
            Ok(e)
        } else {
            Ok(BigRational::from_integer(self.integer()?))
        }
    }

    /// One term without its leading sign: `c`, `c*t^e`, or `t^e`.
    fn term(&mut self) -> Result<(BigRational, BigRational)> {
        self.ws();
        if self.peek() == Some(b't') {
            return Ok((BigRational::one(), self.tpart()?));
        }
        let c = self.rational()?;
        self.ws();
        if self.eat(b'*') {
            self.ws();
            Ok((c, self.tpart()?))
        } else {
            Ok((c, BigRational::zero()))
        }
    }
}

impl FromStr for PuiseuxPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let mut out = PuiseuxPoly::zero();
        p.ws();
        let mut sign = if p.eat(b'-') {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        loop {
            let (c, e) = p.term()?;
            out.add_term(e, c * &sign);
            p.ws();
            sign = if p.eat(b'+') {
                BigRational::one()
            } else if p.eat(b'-') {
                -BigRational::one()
            } else {
                break;
            };
        }
        p.ws();
        if p.pos != p.src.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} of `{s}`",
                p.pos
            )));
        }
        Ok(out)
    }
}

/// A vector with Puiseux polynomial coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PuiseuxVector {
    coords: Vec<PuiseuxPoly>,
}

impl PuiseuxVector {
    pub fn new(coords: Vec<PuiseuxPoly>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Dimension("vector must have length >= 1".into()));
        }
        Ok(PuiseuxVector { coords })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![PuiseuxPoly::zero(); n])
    }

    /// Always at least 1; there is no empty vector.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn coords(&self) -> &[PuiseuxPoly] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &PuiseuxPoly {
        &self.coords[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PuiseuxPoly> {
        self.coords.iter()
    }

    /// Exact dot product.
    pub fn dot(&self, other: &PuiseuxVector) -> Result<PuiseuxPoly> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        let mut acc = PuiseuxPoly::zero();
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            acc = &acc + &(a * b);
        }
        Ok(acc)
    }

    /// Coordinatewise valuations.
    pub fn tropicalize(&self) -> TropVector {
        TropVector::new(self.coords.iter().map(|c| c.valuation()).collect())
            .expect("vector is nonempty")
    }

    pub fn add(&self, other: &PuiseuxVector) -> Result<PuiseuxVector> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "length mismatch: {} vs {}",
                self.len(),
                other.len()
            )));
        }
        PuiseuxVector::new(
            self.coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Coordinatewise multiplication by a scalar polynomial.
    pub fn scale(&self, s: &PuiseuxPoly) -> PuiseuxVector {
        PuiseuxVector {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }
}

impl fmt::Display for PuiseuxVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Least exponent of `p`, or `inf` for zero.
pub fn valuation(p: &PuiseuxPoly) -> ExtRat {
    p.valuation()
}

/// Exact dot product of two Puiseux vectors.
pub fn puiseux_dot(u: &PuiseuxVector, w: &PuiseuxVector) -> Result<PuiseuxPoly> {
    u.dot(w)
}

/// Coordinatewise valuations of a Puiseux vector.
pub fn tropicalize_vector(u: &PuiseuxVector) -> TropVector {
    u.tropicalize()
}

/// Exact fractions of Puiseux polynomials: the coefficient field for linear
/// solving. Kept reduced (gcd of numerator and denominator is a unit) with a
/// unit-normalized denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct PuiseuxFrac {
    num: PuiseuxPoly,
    den: PuiseuxPoly,
}

impl PuiseuxFrac {
    pub(crate) fn from_poly(p: PuiseuxPoly) -> Self {
        PuiseuxFrac {
            num: p,
            den: PuiseuxPoly::one(),
        }
    }

    pub(crate) fn zero() -> Self {
        Self::from_poly(PuiseuxPoly::zero())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduced(num: PuiseuxPoly, den: PuiseuxPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        // normalize the denominator to valuation 0 and leading coefficient 1
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        let val = match den.valuation() {
            ExtRat::Finite(v) => v,
            ExtRat::Infinity => unreachable!("nonzero denominator"),
        };
        PuiseuxFrac {
            num: num.mul_term(&lc.recip(), &-val.clone()),
            den: den.mul_term(&lc.recip(), &-val),
        }
    }

    pub(crate) fn add(&self, rhs: &PuiseuxFrac) -> PuiseuxFrac {
        Self::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }

    pub(crate) fn sub(&self, rhs: &PuiseuxFrac) -> PuiseuxFrac {
        self.add(&rhs.neg())
    }

    pub(crate) fn mul(&self, rhs: &PuiseuxFrac) -> PuiseuxFrac {
        Self::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub(crate) fn div(&self, rhs: &PuiseuxFrac) -> PuiseuxFrac {
        assert!(!rhs.is_zero(), "division by zero");
        Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub(crate) fn neg(&self) -> PuiseuxFrac {
        PuiseuxFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
