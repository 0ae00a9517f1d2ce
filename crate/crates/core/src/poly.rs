//! Dense univariate polynomials with exact scalar coefficients, stored in
//! ascending powers with trailing zeros trimmed (the zero polynomial has
//! empty support).

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::rational::Rational;
use crate::scalar::Scalar;

/// Polynomial Σ coeffs[k] x^k over an exact scalar ring.
#[derive(Clone, PartialEq, Debug)]
pub struct DensePolynomial<F: Scalar> {
    coeffs: Vec<F>,
}

impl<F: Scalar> DensePolynomial<F> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    /// The constant polynomial c.
    pub fn constant(c: F) -> Self {
        DensePolynomial::new(vec![c])
    }

    /// c · x^k.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return DensePolynomial { coeffs: vec![] };
        }
        let mut coeffs = vec![F::zero(); k + 1];
        coeffs[k] = c;
        DensePolynomial { coeffs }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        DensePolynomial::monomial(F::one(), 1)
    }

    /// Highest nonzero power; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the stored support).
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Ascending coefficients as stored (no trailing zeros).
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Ascending coefficients padded with zeros to exactly `len` entries.
    /// Panics if the polynomial has more than `len` coefficients.
    pub fn coeff_vec(&self, len: usize) -> Vec<F> {
        assert!(
            self.coeffs.len() <= len,
            "polynomial of degree {:?} does not fit in {} coefficients",
            self.degree(),
            len
        );
        let mut v = self.coeffs.clone();
        v.resize(len, F::zero());
        v
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, at: &F) -> F {
        self.eval_map(at, |c| c.clone())
    }

    /// Horner evaluation at a point of a larger ring, embedding each
    /// coefficient with `embed` (e.g. a rational polynomial at a Gaussian
    /// rational point).
    pub fn eval_map<G: Scalar>(&self, at: &G, embed: impl Fn(&F) -> G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + embed(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return DensePolynomial { coeffs: vec![] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * F::from_int(k as i64))
            .collect();
        DensePolynomial::new(coeffs)
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &F) -> Self {
        DensePolynomial::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }
}

impl<F: Scalar> Zero for DensePolynomial<F> {
    fn zero() -> Self {
        DensePolynomial { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<F: Scalar> One for DensePolynomial<F> {
    fn one() -> Self {
        DensePolynomial::constant(F::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl<F: Scalar> std::ops::Add for DensePolynomial<F> {
    type Output = DensePolynomial<F>;
    fn add(self, rhs: DensePolynomial<F>) -> DensePolynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        DensePolynomial::new(coeffs)
    }
}

impl<F: Scalar> std::ops::Sub for DensePolynomial<F> {
    type Output = DensePolynomial<F>;
    fn sub(self, rhs: DensePolynomial<F>) -> DensePolynomial<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        DensePolynomial::new(coeffs)
    }
}

impl<F: Scalar> std::ops::Mul for DensePolynomial<F> {
    type Output = DensePolynomial<F>;
    fn mul(self, rhs: DensePolynomial<F>) -> DensePolynomial<F> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return DensePolynomial::zero();
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePolynomial::new(coeffs)
    }
}

impl<F: Scalar> std::ops::Neg for DensePolynomial<F> {
    type Output = DensePolynomial<F>;
    fn neg(self) -> DensePolynomial<F> {
        DensePolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Pretty ascending-power rendering for rational coefficients:
/// "0", "-1/2 + x", "1/6 - x + x^2", "1/2 + 3/4*x^2".
impl fmt::Display for DensePolynomial<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            if k > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl DensePolynomial<Rational> {
    /// JSON value {"coeffs": ["p/q", …]} in ascending powers; the zero
    /// polynomial serializes with an empty list.
    pub fn to_json_value(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    /// Compact JSON string of [`Self::to_json_value`].
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self, Error> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("polynomial object needs a \"coeffs\" array".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for item in arr {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Json("coefficients must be \"p/q\" strings".into()))?;
            coeffs.push(
                s.parse::<Rational>()
                    .map_err(|e| Error::Json(e.to_string()))?,
            );
        }
        Ok(DensePolynomial::new(coeffs))
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

/// Scalar instance: Q[x] is a commutative ring whose units are the nonzero
/// constants; `inverse` reflects exactly that, which is all the truncated
/// series arithmetic needs to run with a polynomial indeterminate.
impl Scalar for DensePolynomial<Rational> {
    fn from_rational(r: &Rational) -> Self {
        DensePolynomial::constant(r.clone())
    }

    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].inverse().map(DensePolynomial::constant)
        } else {
            None
        }
    }
}
