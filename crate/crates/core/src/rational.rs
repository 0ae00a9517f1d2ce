//! Arbitrary-precision rational numbers in canonical reduced form, together
//! with the exact integer helpers (factorial, binomial) and the decimal
//! rendering used throughout the crate.
//!
//! INVARIANT: every `Rational` keeps gcd(numerator, denominator) = 1 with a
//! positive denominator. Constructors canonicalize and arithmetic preserves
//! the form, so equality is plain structural equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact rational number p/q with q > 0 and gcd(p, q) = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds p/q from machine integers, canonicalizing the sign and reducing.
    ///
    /// Panics when `den` is zero; use [`Rational::from_parts`] for a checked
    /// constructor.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The integer n as a rational.
    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// A big integer as a rational.
    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Checked constructor from big-integer parts.
    pub fn from_parts(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    /// Numerator in canonical form (sign lives here).
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator in canonical form (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// True when the value is a (possibly negative) integer.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True when the value is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// True when the value is zero (also available via the `Zero` trait).
    pub fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(&self.0)
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// Integer power. `exp` may be negative only for a nonzero base
    /// (0 raised to a negative power panics); `pow(0) == 1`, including for
    /// base zero.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational(BigRational::one());
        }
        let e = u32::try_from(exp.unsigned_abs()).expect("exponent magnitude fits in u32");
        let num = self.numer().pow(e);
        let den = self.denom().pow(e);
        if exp > 0 {
            Rational(BigRational::new_raw(num, den))
        } else {
            assert!(
                !self.0.is_zero(),
                "zero cannot be raised to a negative power"
            );
            Rational(BigRational::new(den, num))
        }
    }

    /// Renders the value in fixed-point decimal with `digits` fractional
    /// digits (`digits` >= 1), rounding ties to even.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal_of_fraction(self.numer(), self.denom(), digits)
    }

    /// Parses a plain decimal literal such as "1.644934067", "-0.5" or "3"
    /// into the exact rational it denotes.
    pub fn from_decimal(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let parse_err = || Error::Parse {
            expected: "decimal literal",
            input: s.to_string(),
        };
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(parse_err());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(parse_err());
        }
        let digits: String = [int_part, frac_part].concat();
        let num = BigInt::from_str(&digits).map_err(|_| parse_err())?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Ok(&Rational::from_int(sign) * &Rational(BigRational::new(num, den)))
    }
}

/// Fixed-point decimal rendering of num/den (den > 0) with round-half-to-even.
///
/// Shared by `Rational::to_decimal` and by summation code that carries raw
/// unreduced fractions too large to canonicalize profitably.
pub(crate) fn decimal_of_fraction(num: &BigInt, den: &BigInt, digits: usize) -> String {
    assert!(digits >= 1, "decimal rendering needs at least one digit");
    assert!(den.sign() == Sign::Plus, "denominator must be positive");
    let negative = num.is_negative();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = num.abs() * &scale;
    let (mut q, r) = scaled.div_rem(den);
    match (&r * 2u32).cmp(den) {
        std::cmp::Ordering::Less => {}
        std::cmp::Ordering::Greater => q += 1,
        std::cmp::Ordering::Equal => {
            if q.is_odd() {
                q += 1;
            }
        }
    }
    let (int_part, frac_part) = q.div_rem(&scale);
    let body = format!(
        "{}.{:0>width$}",
        int_part,
        frac_part.to_string(),
        width = digits
    );
    if negative && !q.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// n! as an exact integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u128 > n as u128 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
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

    /// Accepts "p", "p/q" and an optional leading sign on either part;
    /// the result is canonicalized (so "2/-4" parses to "-1/2").
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let parse_err = || Error::Parse {
            expected: "rational \"p/q\"",
            input: s.to_string(),
        };
        match t.split_once('/') {
            None => {
                let n = BigInt::from_str(t).map_err(|_| parse_err())?;
                Ok(Rational::from_bigint(n))
            }
            Some((p, q)) => {
                let num = BigInt::from_str(p.trim()).map_err(|_| parse_err())?;
                let den = BigInt::from_str(q.trim()).map_err(|_| parse_err())?;
                if den.is_zero() {
                    return Err(parse_err());
                }
                Rational::from_parts(num, den)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl std::ops::$trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);
rational_binop!(Div, div);

impl std::ops::Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl std::ops::Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}
