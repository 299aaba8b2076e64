use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RingError;

/// An element `rat + irr·√2` of the field ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QSqrt2 {
    rat: BigRational,
    irr: BigRational,
}

impl QSqrt2 {
    pub fn new(rat: BigRational, irr: BigRational) -> Self {
        Self { rat, irr }
    }

    /// `a + b√2` for integers `a`, `b`.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(
            BigRational::from_integer(a.into()),
            BigRational::from_integer(b.into()),
        )
    }

    pub fn from_integer(n: BigInt) -> Self {
        Self::new(BigRational::from_integer(n), BigRational::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }

    /// `n/d` as a rational element. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    pub fn irr(&self) -> &BigRational {
        &self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.as_rational() {
            Some(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// Galois conjugate `rat − irr·√2`.
    pub fn conj(&self) -> Self {
        Self::new(self.rat.clone(), -self.irr.clone())
    }

    /// Field norm `rat² − 2·irr²`.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(2.into()) * &self.irr * &self.irr
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.rat / &n, -(&self.irr / &n)))
    }

    /// Sign of the real number `rat + irr·√2`.
    pub fn signum_ord(&self) -> Ordering {
        let a = self.rat.cmp(&BigRational::zero());
        let b = self.irr.cmp(&BigRational::zero());
        match (a, b) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, _) => {
                let lhs = &self.rat * &self.rat;
                let rhs = BigRational::from_integer(2.into()) * &self.irr * &self.irr;
                if lhs > rhs {
                    x
                } else {
                    x.reverse()
                }
            }
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum_ord() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum_ord() == Ordering::Greater
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Nonnegative square root, when it lies in ℚ(√2).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let two = BigRational::from_integer(2.into());
        let mut candidates = Vec::new();
        if self.irr.is_zero() {
            if let Some(p) = rational_sqrt(&self.rat) {
                candidates.push(Self::from_rational(p));
            }
            if let Some(q) = rational_sqrt(&(&self.rat / &two)) {
                candidates.push(Self::new(BigRational::zero(), q));
            }
        } else if let Some(s) = rational_sqrt(&self.norm()) {
            // (p + q√2)² = rat + irr√2 forces p² = (rat ± s)/2 and q = irr/(2p).
            for p2 in [(&self.rat + &s) / &two, (&self.rat - &s) / &two] {
                if let Some(p) = rational_sqrt(&p2) {
                    if p.is_zero() {
                        continue;
                    }
                    let q = &self.irr / (&two * &p);
                    candidates.push(Self::new(p, q));
                }
            }
        }
        candidates
            .into_iter()
            .map(|r| r.abs())
            .find(|r| &(r.clone() * r.clone()) == self)
    }

    /// Lossy conversion for export and rendering.
    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rat) + ratio_to_f64(&self.irr) * std::f64::consts::SQRT_2
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum_ord()
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl From<i64> for QSqrt2 {
    fn from(n: i64) -> Self {
        Self::from_ints(n, 0)
    }
}

impl From<BigInt> for QSqrt2 {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

impl From<&BigInt> for QSqrt2 {
    fn from(n: &BigInt) -> Self {
        Self::from_integer(n.clone())
    }
}

impl From<BigRational> for QSqrt2 {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl FromPrimitive for QSqrt2 {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_ints(n, 0))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::from_integer(n.into()))
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.rat, -self.irr)
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.rat.clone(), -self.irr.clone())
    }
}

impl Add<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat + &rhs.rat, &self.irr + &rhs.irr)
    }
}

impl Sub<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, rhs: &QSqrt2) -> QSqrt2 {
        QSqrt2::new(&self.rat - &rhs.rat, &self.irr - &rhs.irr)
    }
}

impl Mul<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &QSqrt2) -> QSqrt2 {
        if self.irr.is_zero() && rhs.irr.is_zero() {
            return QSqrt2::from_rational(&self.rat * &rhs.rat);
        }
        let two = BigRational::from_integer(2.into());
        QSqrt2::new(
            &self.rat * &rhs.rat + two * &self.irr * &rhs.irr,
            &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        )
    }
}

impl Mul<&BigInt> for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, rhs: &BigInt) -> QSqrt2 {
        let k = BigRational::from_integer(rhs.clone());
        QSqrt2::new(&self.rat * &k, &self.irr * &k)
    }
}

/// Panics on division by zero; use [`QSqrt2::inv`] for a checked inverse.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    fn div(self, rhs: &QSqrt2) -> QSqrt2 {
        self * &rhs.inv().expect("division by zero in QSqrt2")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 {
                self.$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&QSqrt2> for QSqrt2 {
    fn add_assign(&mut self, rhs: &QSqrt2) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl SubAssign<&QSqrt2> for QSqrt2 {
    fn sub_assign(&mut self, rhs: &QSqrt2) {
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl Sum for QSqrt2 {
    fn sum<I: Iterator<Item = QSqrt2>>(iter: I) -> Self {
        iter.fold(QSqrt2::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a QSqrt2> for QSqrt2 {
    fn sum<I: Iterator<Item = &'a QSqrt2>>(iter: I) -> Self {
        iter.fold(QSqrt2::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// Textual form `p/q+r/s*sqrt2`, omitting zero terms; zero prints as `0`.
impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.irr.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => write!(f, "{}*sqrt2", self.irr),
            (false, false) => {
                let sign = if self.irr.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}*sqrt2", self.rat, sign, self.irr.abs())
            }
        }
    }
}

impl fmt::Debug for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational, RingError> {
    let bad = || RingError::Parse(s.to_string());
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if t.is_empty() || t.starts_with(['+', '-']) && t[1..].starts_with(['+', '-']) {
        return Err(bad());
    }
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() || d.sign() == Sign::Minus {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for QSqrt2 {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*sqrt2") else {
            return Ok(Self::from_rational(parse_rational(s)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['+', '-']))
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => Ok(Self::new(
                parse_rational(&body[..i])?,
                parse_rational(&body[i..])?,
            )),
            None => Ok(Self::new(BigRational::zero(), parse_rational(body)?)),
        }
    }
}

impl Serialize for QSqrt2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QSqrt2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
