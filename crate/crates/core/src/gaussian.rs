//! Complex numbers with exact rational real and imaginary parts
//! (the field Q(i)), used by the series evaluations at complex arguments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{decimal_of_fraction, Rational};

/// An element re + im*i of Q(i), both parts exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    /// Purely real element.
    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// Machine-integer pair re + im*i.
    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_int(re),
            im: Rational::from_int(im),
        }
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    /// i^e for any integer exponent (period 4).
    pub fn i_power(e: i64) -> Self {
        match e.rem_euclid(4) {
            0 => GaussianRational::from_ints(1, 0),
            1 => GaussianRational::from_ints(0, 1),
            2 => GaussianRational::from_ints(-1, 0),
            _ => GaussianRational::from_ints(0, -1),
        }
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// |z|^2 = re^2 + im^2, an exact rational.
    pub fn norm_sqr(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Multiplicative inverse, `None` for zero: conj(z) / |z|^2.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm_sqr();
        let n_inv = n.inverse()?;
        let c = self.conj();
        Some(GaussianRational {
            re: &c.re * &n_inv,
            im: &c.im * &n_inv,
        })
    }

    /// Integer power; negative exponents require a nonzero base (panics on
    /// zero, mirroring exact division by zero).
    pub fn pow(&self, exp: i64) -> Self {
        if exp < 0 {
            let inv = self
                .inverse()
                .expect("zero cannot be raised to a negative power");
            return inv.pow(-exp);
        }
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Decimal rendering of both parts with the shared fixed-point rules.
    pub fn to_decimal_pair(&self, digits: usize) -> (String, String) {
        (self.re.to_decimal(digits), self.im.to_decimal(digits))
    }

    /// Decimal rendering of the modulus |z| = sqrt(re^2 + im^2), correctly
    /// rounded to `digits` fractional places (ties round up; a tie requires
    /// |z|^2 to be a perfect square of a half-odd multiple of 10^-digits,
    /// which integer arithmetic detects exactly).
    pub fn modulus_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1, "decimal rendering needs at least one digit");
        let n = self.norm_sqr();
        // |z| rounded to d digits is round(sqrt(v) * 10^d) / 10^d where
        // v = |z|^2. Let s = floor(sqrt(v * 10^(2d))) computed exactly on
        // the integer p * 10^(2d) * q scaled by q^2: s = floor(sqrt(p q) * 10^d / q)
        // needs care, so instead scale v itself: with v = p/q,
        // sqrt(v) * 10^d = sqrt(p * 10^(2d) / q), and we compare candidate
        // integers m against it via m^2 * q <=> p * 10^(2d).
        let p = n.numer().clone();
        let q = n.denom().clone();
        let scale2 = BigInt::from(10u32).pow(2 * digits as u32);
        let target = &p * &scale2; // compare m^2 * q against this
        let s = (&target / &q).sqrt(); // floor estimate, then correct
        let mut m = s;
        while (&m + 1u32).pow(2) * &q <= target {
            m += 1u32;
        }
        while &m * &m * &q > target {
            m -= 1u32;
        }
        // m = floor(sqrt(v) * 10^d). Round to nearest: go up when
        // sqrt(v)*10^d - m >= 1/2, i.e. 4 * target >= (2m+1)^2 * q (ties up).
        let threshold = (&m * 2u32 + 1u32).pow(2) * &q;
        if &target * 4u32 >= threshold {
            m += 1u32;
        }
        let scale = BigInt::from(10u32).pow(digits as u32);
        // m / 10^d rendered exactly: it has at most `digits` fractional digits.
        decimal_of_fraction(&m, &scale, digits)
    }
}

impl fmt::Display for GaussianRational {
    /// Always shows both parts with an explicit sign between them:
    /// "1-5*i", "0+1/2*i", "2+0*i".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses the forms produced by `Display` ("re+im*i", "re-im*i") plus
    /// the degenerate pure-real "re" and pure-imaginary "im*i" forms.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().replace(' ', "");
        let parse_err = || Error::Parse {
            expected: "gaussian rational \"re+im*i\"",
            input: s.to_string(),
        };
        match t.strip_suffix("*i") {
            None => {
                let re: Rational = t.parse().map_err(|_| parse_err())?;
                Ok(GaussianRational::from_rational(re))
            }
            Some(body) => {
                // Split at the sign separating re from im; skip index 0 so a
                // leading sign on re stays attached to it, and skip signs that
                // belong to a denominator like "1/-2" (not produced by
                // Display, but parsed fine as part of the rational).
                let bytes = body.as_bytes();
                let mut split_at = None;
                for idx in (1..bytes.len()).rev() {
                    if (bytes[idx] == b'+' || bytes[idx] == b'-')
                        && bytes[idx - 1] != b'/'
                        && bytes[idx - 1] != b'+'
                        && bytes[idx - 1] != b'-'
                    {
                        split_at = Some(idx);
                        break;
                    }
                }
                match split_at {
                    None => {
                        let im: Rational = body.parse().map_err(|_| parse_err())?;
                        Ok(GaussianRational::new(Rational::zero(), im))
                    }
                    Some(idx) => {
                        let re: Rational = body[..idx].parse().map_err(|_| parse_err())?;
                        let sign = if bytes[idx] == b'-' { -1 } else { 1 };
                        let im_mag: Rational = body[idx + 1..].parse().map_err(|_| parse_err())?;
                        Ok(GaussianRational::new(
                            re,
                            &Rational::from_int(sign) * &im_mag,
                        ))
                    }
                }
            }
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl std::ops::Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl std::ops::Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl std::ops::Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl std::ops::Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! gaussian_owned_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

gaussian_owned_binop!(Add, add);
gaussian_owned_binop!(Sub, sub);
gaussian_owned_binop!(Mul, mul);

impl std::ops::Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}
