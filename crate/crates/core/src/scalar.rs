//! Exact scalars: rationals and residues modulo a prime `p >= 5`.
//!
//! Rationals keep a machine-word fast path and fall back to arbitrary
//! precision only when a numerator or denominator leaves `i64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field every value of a computation lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds a prime field, rejecting characteristic 2 and 3 as well as
    /// composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 || p == 3 {
            return Err(Error::Characteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(Rational::zero()),
            Field::Prime(p) => Scalar::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(Rational::from_int(n)),
            Field::Prime(p) => Scalar::Modular { value: reduce_i128(n as i128, p), modulus: p },
        }
    }

    /// `num / den` in this field. Panics when `den` vanishes in the field;
    /// callers only pass small nonzero constants such as 2 and 4.
    pub fn ratio(&self, num: i64, den: i64) -> Scalar {
        let d = self.int(den);
        self.int(num) * d.inverse().expect("nonzero denominator")
    }

    pub fn from_big(&self, value: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rational => Ok(Scalar::Rational(Rational::from_big(value.clone()))),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let n = value.numer().mod_floor(&m).to_u64().unwrap();
                let d = value.denom().mod_floor(&m).to_u64().unwrap();
                if d == 0 {
                    return Err(Error::ZeroDenominator(value.to_string()));
                }
                let inv = mod_inverse(d, p).ok_or(Error::ZeroDenominator(value.to_string()))?;
                Ok(Scalar::Modular { value: mul_mod(n, inv, p), modulus: p })
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` or `F<p>` (also `GF(p)`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(Field::Rational);
        }
        let digits = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::BadField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

/// Exact field element.
///
/// Arithmetic between different fields panics through the operator traits;
/// the `try_*` methods report it as [`Error::MixedField`] instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.inverse().map(Scalar::Rational),
            Scalar::Modular { value, modulus } => mod_inverse(*value, *modulus)
                .map(|v| Scalar::Modular { value: v, modulus: *modulus }),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.add(b))),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Ok(Scalar::Modular { value: add_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(Error::MixedField(self.field(), rhs.field())),
        }
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.mul(b))),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Ok(Scalar::Modular { value: mul_mod(*a, *b, *p), modulus: *p })
            }
            _ => Err(Error::MixedField(self.field(), rhs.field())),
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_add(&-rhs.clone())
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let inv = rhs.inverse().ok_or(Error::DivisionByZero)?;
        self.try_mul(&inv)
    }

    /// Rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    /// Exact square root within the field, when one exists among rationals.
    /// Prime fields answer only for 0 and 1 (enough for basepoint scaling).
    pub fn rational_sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.sqrt().map(Scalar::Rational),
            Scalar::Modular { value, modulus } => {
                // Tonelli–Shanks is overkill here: brute force is fine for
                // the moduli used in practice, capped to stay cheap.
                if *modulus > 1 << 20 {
                    return (*value <= 1).then(|| self.clone());
                }
                (0..*modulus)
                    .find(|x| mul_mod(*x, *x, *modulus) == *value)
                    .map(|x| Scalar::Modular { value: x, modulus: *modulus })
            }
        }
    }

    /// Canonical text: `n`, `n/d`, or the residue in `[0, p)`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Modular { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}

/// Parses `-?digits(/digits)?` into the given field.
pub fn parse_scalar(text: &str, field: Field) -> Result<Scalar> {
    let value = parse_rational_text(text)?;
    field.from_big(&value)
}

/// Syntax-only parse shared by the spec loader: returns the reduced
/// rational before it is mapped into a field.
pub fn parse_rational_text(text: &str) -> Result<BigRational> {
    let bad = || Error::MalformedScalar(text.to_string());
    let t = text.trim();
    // Accept the typographic minus as well as ASCII.
    let (neg, body) = if let Some(r) = t.strip_prefix('-') {
        (true, r)
    } else if let Some(r) = t.strip_prefix('\u{2212}') {
        (true, r)
    } else {
        (false, t)
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let mut n: BigInt = num.parse().map_err(|_| bad())?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(BigRational::new(n, d))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$try(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.neg()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if value == 0 { 0 } else { modulus - value },
                modulus,
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(v: BigRational) -> Self {
        match (v.numer().to_i64(), v.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(v))),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new(n.into(), d.into())))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// `(numerator, denominator)` when both fit in `i64`.
    pub fn small_parts(&self) -> Option<(i64, i64)> {
        match self.0 {
            Repr::Small(n, d) => Some((n, d)),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    fn add(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a * d).checked_add(c * b) {
                    Some(n) => Self::from_i128(n, b * d),
                    None => Self::from_big(self.to_big() + rhs.to_big()),
                }
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn mul(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rational(Repr::Small(p, 1));
                    }
                }
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, d)),
                None => Self::from_big(-self_big(n, d)),
            },
            Repr::Big(b) => Self::from_big(-*b),
        }
    }

    pub fn inverse(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(n, d) => Self::from_i128(*d as i128, *n as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    pub fn sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let b = self.to_big();
        let n = b.numer().sqrt();
        let d = b.denom().sqrt();
        (&n * &n == *b.numer() && &d * &d == *b.denom())
            .then(|| Self::from_big(BigRational::new(n, d)))
    }
}

fn self_big(n: i64, d: i64) -> BigRational {
    BigRational::new_raw(BigInt::from(n), BigInt::from(d))
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_big().cmp(&other.to_big())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn reduce_i128(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Extended-Euclid inverse modulo `p`.
pub(crate) fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(p as i128) as u64)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Scalar {
        Field::Rational.ratio(n, d)
    }

    #[test]
    fn parses_negative_fraction() {
        assert_eq!(parse_scalar("-7/3", Field::Rational).unwrap(), q(-7, 3));
    }

    #[test]
    fn reduces_by_gcd() {
        let v = parse_scalar("2/4", Field::Rational).unwrap();
        assert_eq!(v, q(1, 2));
        assert_eq!(v.to_string(), "1/2");
    }

    #[test]
    fn half_mod_seven_is_four() {
        // 2 * 4 = 8 = 1 (mod 7)
        let f7 = Field::prime(7).unwrap();
        assert_eq!(mod_inverse(2, 7), Some(4));
        assert_eq!(parse_scalar("1/2", f7).unwrap(), f7.int(4));
        assert_eq!(parse_scalar("-1/2", f7).unwrap(), f7.int(3));
    }

    #[test]
    fn rejects_bad_text_and_fields() {
        assert!(matches!(parse_scalar("1/0", Field::Rational), Err(Error::ZeroDenominator(_))));
        assert!(matches!(parse_scalar("1.5", Field::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("", Field::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(parse_scalar("--1", Field::Rational), Err(Error::MalformedScalar(_))));
        assert!(matches!(Field::prime(3), Err(Error::Characteristic(3))));
        assert!(matches!(Field::prime(2), Err(Error::Characteristic(2))));
        assert!(matches!("F9".parse::<Field>(), Err(Error::NotPrime(9))));
        assert!(matches!("F3".parse::<Field>(), Err(Error::Characteristic(3))));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("GF(11)".parse::<Field>().unwrap(), Field::Prime(11));
        // 7 = 0 in F7, so 1/7 has no meaning there.
        assert!(parse_scalar("1/7", Field::Prime(7)).is_err());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Field::Rational.one();
        let b = Field::Prime(5).one();
        assert!(matches!(a.try_add(&b), Err(Error::MixedField(..))));
        assert!(matches!(a.try_mul(&b), Err(Error::MixedField(..))));
        assert!(Field::Prime(5).one().try_add(&Field::Prime(7).one()).is_err());
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let big = Field::Rational.int(i64::MAX);
        let sq = &big * &big;
        let back = &sq * &big.inverse().unwrap();
        assert_eq!(back, big);
        let neg_min = -Field::Rational.int(i64::MIN);
        assert_eq!(&neg_min + &Field::Rational.int(i64::MIN), Field::Rational.zero());
    }

    #[test]
    fn modular_residues_in_range() {
        let f = Field::Prime(13);
        assert_eq!(f.int(-1), f.int(12));
        match f.int(-40) {
            Scalar::Modular { value, .. } => assert!(value < 13),
            _ => unreachable!(),
        }
    }
}
