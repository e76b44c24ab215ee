//! Exact planar points and the two orders that drive everything else.
//!
//! `p ≺ q` (strict dominance) holds when `p` is strictly below and strictly
//! left of `q`. `p ↘ q` (down-right) holds when the points differ, `p` is
//! weakly left of `q` and weakly above it. For distinct points exactly one of
//! `p ≺ q`, `q ≺ p`, `p ↘ q`, `q ↘ p` holds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator`. Fails when the denominator is zero.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidRational(format!("{numerator}/0")));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        )))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_unsigned(digits: &str, whole: &str) -> Result<BigInt> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::InvalidRational(whole.to_string()));
    }
    digits
        .parse::<BigInt>()
        .map_err(|_| Error::InvalidRational(whole.to_string()))
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q`, with an optional leading `+` or `-`.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let (negative, body) = match trimmed.as_bytes().first() {
            Some(b'-') => (true, &trimmed[1..]),
            Some(b'+') => (false, &trimmed[1..]),
            _ => (false, trimmed),
        };
        let (numer, denom) = match body.split_once('/') {
            Some((n, d)) => (parse_unsigned(n, text)?, parse_unsigned(d, text)?),
            None => (parse_unsigned(body, text)?, BigInt::from(1)),
        };
        if denom.is_zero() {
            return Err(Error::InvalidRational(text.to_string()));
        }
        let numer = if negative { -numer } else { numer };
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct RationalVisitor;

        impl de::Visitor<'_> for RationalVisitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string such as \"-1/3\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rational, E> {
                Ok(Rational::from_integer(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(BigInt::from(v))))
            }
        }

        deserializer.deserialize_any(RationalVisitor)
    }
}

/// A labelled point of the plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Point2 {
    pub id: String,
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(id: impl Into<String>, x: Rational, y: Rational) -> Self {
        Point2 { id: id.into(), x, y }
    }

    /// Convenience constructor for integer coordinates.
    pub fn int(id: impl Into<String>, x: i64, y: i64) -> Self {
        Point2::new(id, Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn same_position(&self, other: &Point2) -> bool {
        self.x == other.x && self.y == other.y
    }
}

/// `p ≺ q`: strictly smaller in both coordinates.
pub fn strictly_dominated(p: &Point2, q: &Point2) -> bool {
    p.x < q.x && p.y < q.y
}

/// `p ↘ q`: distinct positions, `p.x ≤ q.x` and `p.y ≥ q.y`.
pub fn down_right(p: &Point2, q: &Point2) -> bool {
    !p.same_position(q) && p.x <= q.x && p.y >= q.y
}

/// Relative position of two distinct points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum PairClass {
    /// `p ≺ q`
    PrecForward,
    /// `q ≺ p`
    PrecBackward,
    /// `p ↘ q`
    DownRightForward,
    /// `q ↘ p`
    DownRightBackward,
}

pub fn classify_pair(p: &Point2, q: &Point2) -> Result<PairClass> {
    if p.same_position(q) {
        return Err(Error::EqualPoints {
            x: p.x.to_string(),
            y: p.y.to_string(),
        });
    }
    let class = match (p.x.cmp(&q.x), p.y.cmp(&q.y)) {
        (Ordering::Less, Ordering::Less) => PairClass::PrecForward,
        (Ordering::Greater, Ordering::Greater) => PairClass::PrecBackward,
        (Ordering::Less | Ordering::Equal, Ordering::Greater | Ordering::Equal) => {
            PairClass::DownRightForward
        }
        _ => PairClass::DownRightBackward,
    };
    Ok(class)
}
