//! The definite-integral operator E[g](x) = ∫ g(u) du taken between the
//! affine bounds u = ax+b and u = cx+d, acting on Q[x]: closed forms on
//! monomials, matrix representations, the inverse-operator polynomial
//! families Q_n and H_n (Bernoulli polynomials as a special case), a direct
//! derivative formula, and the companion Y_n polynomials whose coefficient
//! matrix inverts to the Bernoulli numbers.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::matrix::{apply_to_basis, FieldMatrix};
use crate::poly::DensePolynomial;
use crate::rational::{binomial, Rational};

/// Integration bounds: lower u = ax+b, upper u = cx+d.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl OperatorParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        OperatorParams { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        OperatorParams::new(
            Rational::from_int(a),
            Rational::from_int(b),
            Rational::from_int(c),
            Rational::from_int(d),
        )
    }

    /// Parses "a,b,c,d" with rational components.
    pub fn parse_list(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse {
                expected: "four comma-separated rationals \"a,b,c,d\"",
                input: s.to_string(),
            });
        }
        let mut vals = parts.iter().map(|p| p.parse::<Rational>());
        Ok(OperatorParams {
            a: vals.next().unwrap()?,
            b: vals.next().unwrap()?,
            c: vals.next().unwrap()?,
            d: vals.next().unwrap()?,
        })
    }

    /// True when the bound slopes agree (c = a), the condition for the
    /// square matrix forms.
    pub fn equal_slopes(&self) -> bool {
        self.c == self.a
    }
}

/// E[x^n] = ((cx+d)^(n+1) − (ax+b)^(n+1))/(n+1), expanded exactly by
/// polynomial powers (deliberately not via the binomial coefficient formula
/// that builds the matrices — the two routes cross-check each other).
pub fn op_e_monomial(n: usize, p: &OperatorParams) -> DensePolynomial<Rational> {
    let upper = DensePolynomial::new(vec![p.d.clone(), p.c.clone()]);
    let lower = DensePolynomial::new(vec![p.b.clone(), p.a.clone()]);
    let diff = poly_pow(&upper, n + 1) - poly_pow(&lower, n + 1);
    diff.scale(&Rational::new(1, (n + 1) as i64))
}

fn poly_pow(p: &DensePolynomial<Rational>, e: usize) -> DensePolynomial<Rational> {
    let mut acc = DensePolynomial::one();
    for _ in 0..e {
        acc = acc * p.clone();
    }
    acc
}

/// E[P] by linearity over the monomial closed forms.
pub fn op_e_poly(
    poly: &DensePolynomial<Rational>,
    p: &OperatorParams,
) -> DensePolynomial<Rational> {
    let mut acc = DensePolynomial::zero();
    for (j, alpha) in poly.coeffs().iter().enumerate() {
        if alpha.is_zero() {
            continue;
        }
        acc = acc + op_e_monomial(j, p).scale(alpha);
    }
    acc
}

/// Matrix of E on the monomial basis: row j (0-based, j < m) lists the
/// coefficients of E[x^j] against 1, x, …, x^m, so the rectangular form is
/// m×(m+1) with entry (j,k) = binomial(j+1,k)·(c^k d^(j+1−k) − a^k b^(j+1−k))/(j+1).
/// The square form (requires c = a) drops the last column, which that
/// condition makes identically zero, leaving an m×m lower-triangular matrix
/// with diagonal a^j·(d−b).
pub fn matrix_m_e(
    m: usize,
    p: &OperatorParams,
    square: bool,
) -> Result<FieldMatrix<Rational>, Error> {
    if m == 0 {
        return Err(Error::OutOfRange {
            message: "operator matrix needs at least one row (m >= 1)",
        });
    }
    if square && !p.equal_slopes() {
        return Err(Error::UnequalSlopes);
    }
    let cols = if square { m } else { m + 1 };
    Ok(FieldMatrix::from_fn(m, cols, |j, k| {
        basis_coefficient(j, k, p)
    }))
}

/// Coefficient of x^k in E[x^j]:
/// binomial(j+1,k)·(c^k d^(j+1−k) − a^k b^(j+1−k))/(j+1).
fn basis_coefficient(j: usize, k: usize, p: &OperatorParams) -> Rational {
    if k > j + 1 {
        return Rational::zero();
    }
    let c_part = &p.c.pow(k as i64) * &p.d.pow((j + 1 - k) as i64);
    let a_part = &p.a.pow(k as i64) * &p.b.pow((j + 1 - k) as i64);
    let binom = Rational::from_bigint(binomial(j + 1, k as i64));
    &(&binom * &(&c_part - &a_part)) * &Rational::new(1, (j + 1) as i64)
}

/// The inverse-operator family Q_0..Q_{n−1}: rows of the inverse of the
/// square operator matrix applied to the basis column (1, x, …, x^(n−1))ᵀ,
/// so that E[Q_k] = x^k.
pub fn family_q(n: usize, p: &OperatorParams) -> Result<Vec<DensePolynomial<Rational>>, Error> {
    let m = matrix_m_e(n, p, true)?;
    let inv = m.inverse_gauss()?;
    apply_to_basis(&inv, n)
}

/// The family H_0..H_{n−1} for bounds with unit width: d = b + 1 and equal
/// slopes, i.e. family_q at parameters (a, b, a, b+1).
pub fn family_h(
    n: usize,
    a: &Rational,
    b: &Rational,
) -> Result<Vec<DensePolynomial<Rational>>, Error> {
    let d = b + &Rational::one();
    let p = OperatorParams::new(a.clone(), b.clone(), a.clone(), d);
    family_q(n, &p)
}

/// Bernoulli polynomials B_0(x)..B_{n−1}(x) as the inverse-operator family
/// at (1, 0, 1, 1): E[B_k] = x^k with E integrating from x to x+1.
pub fn bernoulli_via_operator(n: usize) -> Result<Vec<DensePolynomial<Rational>>, Error> {
    family_h(n, &Rational::one(), &Rational::zero())
}

/// d/dx E[P] computed directly on coefficients: the x^k coefficient is
/// (k+1)·Σ_{j≥k} α_j·binomial(j+1,k+1)·(c^(k+1) d^(j−k) − a^(k+1) b^(j−k))/(j+1),
/// an independent route cross-checked against the formal derivative of
/// op_e_poly.
pub fn derivative_e(
    poly: &DensePolynomial<Rational>,
    p: &OperatorParams,
) -> DensePolynomial<Rational> {
    let alphas = poly.coeffs();
    if alphas.is_empty() {
        return DensePolynomial::zero();
    }
    let deg = alphas.len() - 1;
    let coeffs = (0..=deg)
        .map(|k| {
            let mut acc = Rational::zero();
            for (j, alpha) in alphas.iter().enumerate().skip(k) {
                if alpha.is_zero() {
                    continue;
                }
                let c_part = &p.c.pow((k + 1) as i64) * &p.d.pow((j - k) as i64);
                let a_part = &p.a.pow((k + 1) as i64) * &p.b.pow((j - k) as i64);
                let binom = Rational::from_bigint(binomial(j + 1, (k + 1) as i64));
                let term = &(&binom * &(&c_part - &a_part)) * &Rational::new(1, (j + 1) as i64);
                acc = &acc + &(alpha * &term);
            }
            &acc * &Rational::from_int((k + 1) as i64)
        })
        .collect();
    DensePolynomial::new(coeffs)
}

/// Y_n(x) = (cx+d)^(n+1) − (ax+b)^(n+1), expanded by the binomial theorem:
/// Σ_{j=0}^{n+1} binomial(n+1,j)·(c^j d^(n+1−j) − a^j b^(n+1−j))·x^j.
pub fn y_polynomial(n: usize, p: &OperatorParams) -> DensePolynomial<Rational> {
    let coeffs = (0..=n + 1)
        .map(|j| {
            let c_part = &p.c.pow(j as i64) * &p.d.pow((n + 1 - j) as i64);
            let a_part = &p.a.pow(j as i64) * &p.b.pow((n + 1 - j) as i64);
            &Rational::from_bigint(binomial(n + 1, j as i64)) * &(&c_part - &a_part)
        })
        .collect();
    DensePolynomial::new(coeffs)
}

/// Coefficient matrix of Y_0..Y_n: row k lists the coefficients of
/// y_polynomial(k) by ascending power, giving an (n+1)×(n+2) matrix; the
/// square form (requires c = a) drops the vanishing last column, leaving
/// (n+1)×(n+1) lower-triangular with diagonal (k+1)·a^k·(d−b).
pub fn matrix_m_y(
    n: usize,
    p: &OperatorParams,
    square: bool,
) -> Result<FieldMatrix<Rational>, Error> {
    if square && !p.equal_slopes() {
        return Err(Error::UnequalSlopes);
    }
    let cols = if square { n + 1 } else { n + 2 };
    Ok(FieldMatrix::from_fn(n + 1, cols, |k, j| {
        if j > k + 1 {
            return Rational::zero();
        }
        let c_part = &p.c.pow(j as i64) * &p.d.pow((k + 1 - j) as i64);
        let a_part = &p.a.pow(j as i64) * &p.b.pow((k + 1 - j) as i64);
        &Rational::from_bigint(binomial(k + 1, j as i64)) * &(&c_part - &a_part)
    }))
}

/// B_0..B_n read off the first column of the inverse of the square
/// Y-coefficient matrix at parameters (1, 0, 1, 1).
pub fn bernoulli_numbers_via_y(n: usize) -> Vec<Rational> {
    let m = matrix_m_y(n, &OperatorParams::from_ints(1, 0, 1, 1), true)
        .expect("slopes are equal at (1,0,1,1)");
    let inv = m
        .inverse_gauss()
        .expect("triangular with nonzero diagonal (k+1)");
    inv.column(0)
}
