//! Truncated power series in t over an exact scalar ring: the independent
//! oracle used to cross-check the combinatorial families. A series of order
//! N stores exactly the coefficients c_0..c_N and all arithmetic is exact
//! modulo t^(N+1).

use num_traits::One;

use crate::error::Error;
use crate::rational::{factorial, Rational};
use crate::scalar::Scalar;

/// Order used by the cross-check tests: generous headroom over every index
/// they read, so truncation never silently shortens a comparison.
pub const DEFAULT_ORACLE_ORDER: usize = 24;

/// Power series Σ_{k=0}^{order} coeffs[k] t^k, exact modulo t^(order+1).
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<F: Scalar> {
    coeffs: Vec<F>,
}

impl<F: Scalar> TruncatedSeries<F> {
    /// Builds a series of order `coeffs.len() - 1` from ascending
    /// coefficients. Panics on an empty vector (order would be negative).
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        TruncatedSeries { coeffs }
    }

    /// The constant series c + 0·t + … of the given order.
    pub fn constant(c: F, order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        coeffs[0] = c;
        TruncatedSeries { coeffs }
    }

    /// Truncation order N (highest retained power of t).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of t^k; panics beyond the order (the information does
    /// not exist). Use [`Self::egf_coefficient`] for a checked read.
    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    /// e^t - 1 = Σ_{k>=1} t^k / k!.
    pub fn exp_minus_one(order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = F::from_rational(&Rational::from_parts(1.into(), factorial(k)).expect("k! > 0"));
        }
        TruncatedSeries { coeffs }
    }

    /// e^(x t) = Σ x^k t^k / k! for a scalar x (x may live in a larger ring
    /// than Q — e.g. a polynomial — which is the point of the generic F).
    pub fn exp_linear(x: &F, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = F::one();
        for k in 0..=order {
            if k > 0 {
                power = power * x.clone();
            }
            let inv_fact =
                F::from_rational(&Rational::from_parts(1.into(), factorial(k)).expect("k! > 0"));
            coeffs.push(power.clone() * inv_fact);
        }
        TruncatedSeries { coeffs }
    }

    /// log(1 + t) = Σ_{k>=1} (-1)^(k+1) t^k / k.
    pub fn log_one_plus(order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            *c = F::from_rational(&Rational::new(sign, k as i64));
        }
        TruncatedSeries { coeffs }
    }

    /// (e^t - 1)/t = Σ t^k / (k+1)!.
    pub fn exp_minus_one_over_t(order: usize) -> Self {
        let mut coeffs = vec![F::zero(); order + 1];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = F::from_rational(
                &Rational::from_parts(1.into(), factorial(k + 1)).expect("(k+1)! > 0"),
            );
        }
        TruncatedSeries { coeffs }
    }

    /// Cauchy product, truncated to the smaller order of the operands.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![F::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                coeffs[i + j] =
                    coeffs[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Sum, truncated to the smaller order.
    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Difference, truncated to the smaller order.
    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Divides by a series whose constant term is invertible, by forward
    /// substitution: with q = self / rhs, q_n = (self_n - Σ_{i<n} q_i rhs_{n-i}) / rhs_0.
    pub fn div_unit(&self, rhs: &Self) -> Result<Self, Error> {
        let inv0 = rhs.coeffs[0].inverse().ok_or(Error::NonUnitDivisor)?;
        let order = self.order().min(rhs.order());
        let mut q: Vec<F> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for (i, qi) in q.iter().enumerate() {
                acc = acc - qi.clone() * rhs.coeffs[n - i].clone();
            }
            q.push(acc * inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Scales every coefficient by `s`.
    pub fn scale(&self, s: &F) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Reads the exponential-generating-function coefficient m! · c_m,
    /// refusing indices past the truncation order.
    pub fn egf_coefficient(&self, m: usize) -> Result<F, Error> {
        if m > self.order() {
            return Err(Error::OrderExceeded {
                index: m,
                order: self.order(),
            });
        }
        let m_fact = F::from_rational(&Rational::from_bigint(factorial(m)));
        Ok(self.coeffs[m].clone() * m_fact)
    }

    /// Integer power by repeated multiplication (orders stay fixed).
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = TruncatedSeries::constant(F::one(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl TruncatedSeries<Rational> {
    /// t/(e^t - 1), the exponential generating function of the Bernoulli
    /// numbers, to the given order.
    pub fn bernoulli_egf(order: usize) -> Self {
        let one = TruncatedSeries::constant(Rational::one(), order);
        one.div_unit(&TruncatedSeries::exp_minus_one_over_t(order))
            .expect("(e^t - 1)/t has constant term 1")
    }
}
