//! Exact elements of Q and of real quadratic fields Q(√d).

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// Q(√d) for a squarefree d > 1.
    Quadratic(u32),
}

impl Field {
    pub fn quadratic(d: u32) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::InvalidField(d));
        }
        Ok(Field::Quadratic(d))
    }

    pub fn radicand(self) -> Option<u32> {
        match self {
            Field::Rational => None,
            Field::Quadratic(d) => Some(d),
        }
    }

    /// Whether `x` lives in this field.
    pub fn contains(self, x: &Scalar) -> bool {
        match (x.radicand(), self) {
            (None, _) => true,
            (Some(d), Field::Quadratic(e)) => d == e,
            (Some(_), Field::Rational) => false,
        }
    }

    /// The smallest field containing both.
    pub fn join(self, other: Field) -> Result<Field> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Ok(f),
            (Field::Quadratic(a), Field::Quadratic(b)) if a == b => Ok(self),
            (Field::Quadratic(a), Field::Quadratic(b)) => Err(Error::FieldMismatch(a, b)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Quadratic(d) => write!(f, "Q(√{d})"),
        }
    }
}

fn is_squarefree(d: u32) -> bool {
    let mut p = 2u32;
    while p.saturating_mul(p) <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// The irrational part `coeff·√d`; `coeff` is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Surd {
    coeff: BigRational,
    d: u32,
}

/// An exact real number `a + b√d`.
///
/// Rational values carry no radicand at all, so a rational scalar combines
/// freely with any quadratic field. Combining two different radicands panics;
/// code that accepts external input checks fields with [`Field::join`] first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rat: BigRational,
    surd: Option<Box<Surd>>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { rat: BigRational::zero(), surd: None }
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar { rat: BigRational::from_integer(BigInt::from(n)), surd: None }
    }

    /// `num/den`; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar { rat: BigRational::new(BigInt::from(num), BigInt::from(den)), surd: None }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { rat: r, surd: None }
    }

    /// `a + b√d`. A zero `b` yields a rational scalar.
    pub fn quadratic(a: BigRational, b: BigRational, d: u32) -> Self {
        if b.is_zero() {
            Scalar { rat: a, surd: None }
        } else {
            Scalar { rat: a, surd: Some(Box::new(Surd { coeff: b, d })) }
        }
    }

    /// `√d` itself.
    pub fn sqrt_of(d: u32) -> Self {
        Self::quadratic(BigRational::zero(), BigRational::one(), d)
    }

    /// Rational part `a`.
    pub fn a(&self) -> &BigRational {
        &self.rat
    }

    /// Irrational coefficient `b` (zero for rationals).
    pub fn b(&self) -> BigRational {
        self.surd.as_ref().map_or_else(BigRational::zero, |s| s.coeff.clone())
    }

    pub fn radicand(&self) -> Option<u32> {
        self.surd.as_ref().map(|s| s.d)
    }

    pub fn field(&self) -> Field {
        self.radicand().map_or(Field::Rational, Field::Quadratic)
    }

    pub fn is_zero(&self) -> bool {
        self.surd.is_none() && self.rat.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.surd.is_none() && self.rat.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_none()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.surd.is_none() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// Exact sign of the real number under the embedding √d > 0.
    pub fn sign(&self) -> i8 {
        let sa = sign_of(&self.rat);
        let Some(s) = &self.surd else { return sa };
        let sb = sign_of(&s.coeff);
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: the larger of a² and b²d wins.
        let a2 = &self.rat * &self.rat;
        let b2d = &s.coeff * &s.coeff * BigRational::from_integer(BigInt::from(s.d));
        if a2 > b2d {
            sa
        } else {
            sb
        }
    }

    /// Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        match &self.surd {
            None => self.clone(),
            Some(s) => Self::quadratic(self.rat.clone(), -s.coeff.clone(), s.d),
        }
    }

    /// Field norm `a² − b²d`.
    pub fn norm(&self) -> BigRational {
        match &self.surd {
            None => &self.rat * &self.rat,
            Some(s) => {
                &self.rat * &self.rat
                    - &s.coeff * &s.coeff * BigRational::from_integer(BigInt::from(s.d))
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Scalar {
            rat: &c.rat / &n,
            surd: c.surd.map(|s| Box::new(Surd { coeff: &s.coeff / &n, d: s.d })),
        })
    }

    fn check_radicands(&self, other: &Self) -> Option<u32> {
        match (self.radicand(), other.radicand()) {
            (None, None) => None,
            (Some(d), None) | (None, Some(d)) => Some(d),
            (Some(d), Some(e)) => {
                assert!(d == e, "mixing Q(√{d}) and Q(√{e}) in one computation");
                Some(d)
            }
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let rat = &self.rat + &other.rat;
        match self.check_radicands(other) {
            None => Scalar { rat, surd: None },
            Some(d) => Self::quadratic(rat, self.b() + other.b(), d),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        match (&self.surd, &other.surd) {
            (None, None) => Scalar { rat: &self.rat * &other.rat, surd: None },
            (Some(s), None) => Self::quadratic(&self.rat * &other.rat, &s.coeff * &other.rat, s.d),
            (None, Some(s)) => Self::quadratic(&self.rat * &other.rat, &s.coeff * &self.rat, s.d),
            (Some(s), Some(t)) => {
                let d = self.check_radicands(other).expect("both irrational");
                let dd = BigRational::from_integer(BigInt::from(d));
                let a = &self.rat * &other.rat + &s.coeff * &t.coeff * dd;
                let b = &self.rat * &t.coeff + &s.coeff * &other.rat;
                Self::quadratic(a, b, d)
            }
        }
    }

    /// Serialized form of the rational part, always `p/q`.
    pub fn rational_string(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `p/q` or an integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = |c: &BigRational, d: u32| {
            if c.is_one() {
                format!("√{d}")
            } else {
                format!("{c}√{d}")
            }
        };
        match &self.surd {
            None => write!(f, "{}", self.rat),
            Some(s) if self.rat.is_zero() && (-s.coeff.clone()).is_one() => write!(f, "-√{}", s.d),
            Some(s) if self.rat.is_zero() => write!(f, "{}", surd(&s.coeff, s.d)),
            Some(s) if s.coeff.is_negative() => {
                write!(f, "{} - {}", self.rat, surd(&-s.coeff.clone(), s.d))
            }
            Some(s) => write!(f, "{} + {}", self.rat, surd(&s.coeff, s.d)),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -self.rat,
            surd: self.surd.map(|s| Box::new(Surd { coeff: -s.coeff, d: s.d })),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.add_ref(b));
binop!(Sub, sub, |a, b| a.add_ref(&-b));
binop!(Mul, mul, |a, b| a.mul_ref(b));
binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero")));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.surd.is_none() && rhs.surd.is_none() {
            self.rat += &rhs.rat;
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if self.surd.is_none() && rhs.surd.is_none() {
            self.rat -= &rhs.rat;
        } else {
            *self = self.add_ref(&-rhs);
        }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3(a: i64, b: i64) -> Scalar {
        Scalar::quadratic(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), 3)
    }

    // Independent oracle: compare a²·sign(a) with b²d·sign(b) in integers.
    fn oracle_sign(a: i64, b: i64, d: i64) -> i8 {
        let lhs = a * a * a.signum();
        let rhs = -(b * b * d * b.signum());
        // a + b√d > 0  <=>  a > -b√d  <=>  a·|a| > -b·|b|·d
        match lhs.cmp(&rhs) {
            Ordering::Greater => 1,
            Ordering::Less => -1,
            Ordering::Equal => 0,
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(Scalar::zero().sign(), 0);
        assert_eq!(q3(1, -1).sign(), -1);
        assert_eq!(q3(2, -1).sign(), 1);
        assert_eq!(oracle_sign(1, -1, 3), -1);
        assert_eq!(oracle_sign(2, -1, 3), 1);
    }

    #[test]
    fn sign_matches_integer_oracle() {
        for a in -7..=7 {
            for b in -7..=7 {
                assert_eq!(q3(a, b).sign(), oracle_sign(a, b, 3), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn sqrt_squares_to_radicand() {
        let r = Scalar::sqrt_of(3);
        assert_eq!(&r * &r, Scalar::int(3));
        assert!((&r * &r).is_rational());
    }

    #[test]
    fn inverse() {
        let x = q3(2, -1);
        assert_eq!(&x * x.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn field_validation() {
        assert!(Field::quadratic(3).is_ok());
        assert!(Field::quadratic(12).is_err());
        assert!(Field::quadratic(1).is_err());
        assert!(Field::quadratic(2).unwrap().join(Field::Quadratic(3)).is_err());
    }

    #[test]
    #[should_panic(expected = "mixing")]
    fn mixing_radicands_panics() {
        let _ = Scalar::sqrt_of(2) + Scalar::sqrt_of(3);
    }

    #[test]
    fn parse_and_order() {
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("-5").unwrap(), BigRational::from_integer((-5).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(q3(0, 1) > Scalar::frac(17, 10));
        assert!(q3(0, 1) < Scalar::frac(18, 10));
    }
}
