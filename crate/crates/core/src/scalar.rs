//! The scalar abstraction shared by matrices and truncated series: a field
//! element supporting exact ring operations plus a checked inverse.
//!
//! Implemented for `Rational` (the workhorse), `GaussianRational` (complex
//! series evaluation), and `DensePolynomial<Rational>` (a commutative ring,
//! not a field: only nonzero constants invert — enough to run series
//! arithmetic with a polynomial indeterminate threaded through).

use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;
use crate::rational::Rational;

/// Exact ring element with a partial multiplicative inverse.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Embeds an exact rational into the scalar ring.
    fn from_rational(r: &Rational) -> Self;

    /// Multiplicative inverse; `None` when the element is not invertible.
    fn inverse(&self) -> Option<Self>;

    /// Embeds a machine integer.
    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn inverse(&self) -> Option<Self> {
        Rational::inverse(self)
    }
}

impl Scalar for GaussianRational {
    fn from_rational(r: &Rational) -> Self {
        GaussianRational::from_rational(r.clone())
    }

    fn inverse(&self) -> Option<Self> {
        GaussianRational::inverse(self)
    }
}

/// x^e by binary exponentiation for any scalar; e >= 0.
pub fn scalar_pow<F: Scalar>(base: &F, exp: u64) -> F {
    let mut acc = F::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b.clone();
        }
        b = b.clone() * b.clone();
        e >>= 1;
    }
    acc
}
