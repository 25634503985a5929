//! Exact rational scalars extended with a single point at infinity.
//!
//! Min-plus arithmetic treats `inf` as the neutral element for `min` and as
//! absorbing for `+`. Every finite rational compares strictly below `inf`,
//! so `min`/`max` and sorting behave the way the tropical semiring expects.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};

use crate::{Error, Result};

/// A rational number or `inf`. Finite values are kept in lowest terms with
/// arbitrary-precision numerator and denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum ExtRat {
    Finite(BigRational),
    Infinity,
}

impl ExtRat {
    pub fn zero() -> Self {
        ExtRat::Finite(BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtRat::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den` exactly. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExtRat::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRat::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtRat::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtRat::Finite(q) => Some(q),
            ExtRat::Infinity => None,
        }
    }

    /// `self - rhs` where `rhs` must be finite; `inf - finite = inf`.
    /// Subtracting `inf` is undefined and returns `None`.
    pub fn checked_sub(&self, rhs: &ExtRat) -> Option<ExtRat> {
        match (self, rhs) {
            (_, ExtRat::Infinity) => None,
            (ExtRat::Infinity, ExtRat::Finite(_)) => Some(ExtRat::Infinity),
            (ExtRat::Finite(a), ExtRat::Finite(b)) => Some(ExtRat::Finite(a - b)),
        }
    }

    pub fn min_of<'a, I: IntoIterator<Item = &'a ExtRat>>(iter: I) -> ExtRat {
        iter.into_iter()
            .fold(ExtRat::Infinity, |acc, x| if *x < acc { x.clone() } else { acc })
    }
}

impl Add<&ExtRat> for &ExtRat {
    type Output = ExtRat;

    fn add(self, rhs: &ExtRat) -> ExtRat {
        match (self, rhs) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => ExtRat::Finite(a + b),
            _ => ExtRat::Infinity,
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRat::Finite(a), ExtRat::Finite(b)) => a.cmp(b),
            (ExtRat::Finite(_), ExtRat::Infinity) => Ordering::Less,
            (ExtRat::Infinity, ExtRat::Finite(_)) => Ordering::Greater,
            (ExtRat::Infinity, ExtRat::Infinity) => Ordering::Equal,
        }
    }
}

/// Canonical text form: `inf`, or `p/q` in lowest terms with the `/q` part
/// omitted when the denominator is one.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_from_string(s: &str) -> Result<BigRational> {
    let parse_int = |txt: &str| -> Result<BigInt> {
        txt.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{txt}`")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s.trim())?)),
        Some((num, den)) => {
            let den = parse_int(den.trim())?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            let num = parse_int(num.trim())?;
            // BigRational::new reduces and moves the sign to the numerator.
            Ok(BigRational::new(num, den))
        }
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(q) => write!(f, "{}", rational_to_string(q)),
            ExtRat::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "inf" {
            Ok(ExtRat::Infinity)
        } else {
            Ok(ExtRat::Finite(rational_from_string(t)?))
        }
    }
}

/// True when the minimum of the multiset is attained at least twice.
/// An all-`inf` multiset counts as attaining `inf` everywhere, hence true
/// whenever it has at least two elements.
pub fn min_attained_twice(values: &[ExtRat]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let m = ExtRat::min_of(values.iter());
    if m.is_infinite() {
        return true;
    }
    values.iter().filter(|v| **v == m).count() >= 2
}

/// Sign of a finite rational as -1, 0, or 1.
pub fn rational_sign(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
