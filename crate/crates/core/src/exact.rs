//! Exact scalars: arbitrary-precision rationals and π-monomials.
//!
//! `Rational` is the universal exact scalar of the crate; `PiMonomial` is a
//! value of the form (rational)·π^e, which is the closed form taken by every
//! even zeta value and by the constant α_k.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Arbitrary-precision signed rational, always stored in lowest terms with a
/// positive denominator (zero is 0/1). Serializes as the string `"p/q"`,
/// with `/q` omitted when q = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// p/q from machine integers. Errors on q = 0.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// p/q from big integers. Errors on q = 0.
    pub fn from_big(p: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(p, q)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Checked division; division by zero is a typed error.
    pub fn div(&self, rhs: &Rational) -> Result<Self> {
        Ok(self.clone() * rhs.recip()?)
    }

    /// Integer power with signed exponent (negative exponent of zero errors).
    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(e)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // fall back for magnitudes outside f64's exponent range mid-ratio
            let n = self.numer().to_f64().unwrap_or(f64::INFINITY);
            let d = self.denom().to_f64().unwrap_or(f64::INFINITY);
            n / d
        })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::InvalidArgument {
                value: 0,
                reason: "malformed rational literal",
            })
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::from_big(parse_int(p)?, parse_int(q)?),
            None => Ok(Rational::from_bigint(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Exact value (coeff)·π^pi_exp. The zero value is canonical: coeff = 0
/// forces pi_exp = 0. Sums are only defined between equal exponents (or with
/// zero); mixing exponents is a typed error rather than a coercion, because
/// every exact quantity assembled here is a single π-power monomial and a
/// mixed sum signals a bug.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiMonomial {
    coeff: Rational,
    pi_exp: u32,
}

impl PiMonomial {
    pub fn new(coeff: Rational, pi_exp: u32) -> Self {
        if coeff.is_zero() {
            PiMonomial::zero()
        } else {
            PiMonomial { coeff, pi_exp }
        }
    }

    pub fn zero() -> Self {
        PiMonomial {
            coeff: Rational::zero(),
            pi_exp: 0,
        }
    }

    pub fn from_rational(coeff: Rational) -> Self {
        PiMonomial::new(coeff, 0)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exp(&self) -> u32 {
        self.pi_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, rhs: &PiMonomial) -> PiMonomial {
        PiMonomial::new(&self.coeff * &rhs.coeff, self.pi_exp + rhs.pi_exp)
    }

    /// Sum of monomials with equal exponents; zero is absorbing on either
    /// side. An exponent mismatch errors loudly.
    pub fn add(&self, rhs: &PiMonomial) -> Result<PiMonomial> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if self.pi_exp != rhs.pi_exp {
            return Err(Error::PiExponentMismatch {
                left: self.pi_exp,
                right: rhs.pi_exp,
            });
        }
        Ok(PiMonomial::new(&self.coeff + &rhs.coeff, self.pi_exp))
    }

    pub fn scale(&self, c: &Rational) -> PiMonomial {
        PiMonomial::new(&self.coeff * c, self.pi_exp)
    }

    /// Divide once by π. The exponent is kept non-negative: underflow is a
    /// typed error (dividing the canonical zero is still zero).
    pub fn div_by_pi(&self) -> Result<PiMonomial> {
        if self.is_zero() {
            return Ok(PiMonomial::zero());
        }
        if self.pi_exp == 0 {
            return Err(Error::PiExponentUnderflow);
        }
        Ok(PiMonomial {
            coeff: self.coeff.clone(),
            pi_exp: self.pi_exp - 1,
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI.powi(self.pi_exp as i32)
    }
}

impl fmt::Display for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exp {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({}) * pi", self.coeff),
            e => write!(f, "({}) * pi^{}", self.coeff, e),
        }
    }
}

impl fmt::Debug for PiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
