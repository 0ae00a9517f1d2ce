//! Laplace-transform consequences in exact arithmetic: finite Bernoulli /
//! Stirling / array-polynomial identities, divergent asymptotic series for
//! Hurwitz zeta values handled by optimal truncation, and a direct
//! partial-sum-plus-tail-bracket reference evaluator for ζ(s, a).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::combinatorics::{
    array_polynomial, bernoulli_numbers, bernoulli_polynomial, bernoulli_polynomials, stirling1,
    stirling2,
};
use crate::error::Error;
use crate::gaussian::GaussianRational;
use crate::rational::{binomial, decimal_of_fraction, factorial, Rational};

/// A truncated evaluation of an asymptotic series: the exact terms, their
/// running sums, and the optimal truncation point.
///
/// `optimal_index` minimizes the exact squared modulus |terms[n]|² over the
/// indices whose term is NONZERO, with ties broken toward the smaller index;
/// if every term is zero it is 0. Structurally zero terms (for example the
/// first k entries of a series whose n-th term carries a k-fold derivative)
/// say nothing about where the divergent tail takes over, so they do not
/// compete for the minimum.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesEvaluation {
    pub terms: Vec<GaussianRational>,
    pub partial_sums: Vec<GaussianRational>,
    pub optimal_index: usize,
    pub value_at_optimum: GaussianRational,
}

impl SeriesEvaluation {
    /// Builds the bookkeeping from an exact term list (at least one term).
    pub fn from_terms(terms: Vec<GaussianRational>) -> Self {
        assert!(!terms.is_empty(), "a series evaluation needs a term");
        let mut partial_sums = Vec::with_capacity(terms.len());
        let mut acc = GaussianRational::zero();
        for t in &terms {
            acc = &acc + t;
            partial_sums.push(acc.clone());
        }
        let mut optimal_index = 0usize;
        let mut best: Option<Rational> = None;
        for (n, t) in terms.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            let mag = t.norm_sqr();
            if best.as_ref().is_none_or(|b| &mag < b) {
                best = Some(mag);
                optimal_index = n;
            }
        }
        let value_at_optimum = partial_sums[optimal_index].clone();
        SeriesEvaluation {
            terms,
            partial_sums,
            optimal_index,
            value_at_optimum,
        }
    }

    /// |value_at_optimum − reference| rendered as a decimal with `digits`
    /// fractional digits (the reference is a real number).
    pub fn abs_error_decimal(&self, reference: &Rational, digits: usize) -> String {
        let diff = &self.value_at_optimum - &GaussianRational::from_rational(reference.clone());
        diff.modulus_decimal(digits)
    }

    /// JSON report: exact terms/partial sums/value as Gaussian strings, the
    /// real reference value and the absolute error at the optimum as
    /// decimals with `digits` fractional digits.
    pub fn to_json_value(&self, reference: &Rational, digits: usize) -> Value {
        json!({
            "terms": self.terms.iter().map(GaussianRational::to_string).collect::<Vec<_>>(),
            "partial_sums": self.partial_sums.iter().map(GaussianRational::to_string).collect::<Vec<_>>(),
            "optimal_index": self.optimal_index,
            "value": self.value_at_optimum.to_string(),
            "reference": reference.to_decimal(digits),
            "abs_error_at_optimum": self.abs_error_decimal(reference, digits),
        })
    }
}

/// ζ(s, a) = Σ_{n=0}^{∞} (n+a)^(−s) for integer s ≥ 2, a > 0, evaluated as
/// an exact partial sum Σ_{n=0}^{M} plus the integral tail bracket
/// [(M+1+a)^(1−s), (M+a)^(1−s)]/(s−1), with M minimal such that the bracket
/// is narrower than 10^(−target_digits); returns the bracket midpoint
/// rendered to `target_digits` (ties to even).
///
/// The partial sum is carried as one unreduced big fraction built by
/// balanced pairwise merging — no gcd is ever taken; the single final
/// division has a small quotient, so rendering stays cheap even when the
/// fraction's parts run to millions of digits.
pub fn hurwitz_zeta_reference(s: u32, a: &Rational, target_digits: usize) -> Result<String, Error> {
    if s < 2 {
        return Err(Error::OutOfRange {
            message: "zeta reference needs s >= 2",
        });
    }
    if a.is_zero() || a.is_negative() {
        return Err(Error::OutOfRange {
            message: "zeta reference needs a > 0",
        });
    }
    if target_digits < 1 {
        return Err(Error::OutOfRange {
            message: "decimal rendering needs at least one digit",
        });
    }
    let p = a.numer().clone();
    let q = a.denom().clone();

    // (m + a)^(1−s) = (q/(mq+p))^(s−1), exactly
    let tail = |m: u64| -> Rational {
        let base = BigInt::from(m) * &q + &p;
        Rational::from_parts(q.pow(s - 1), base.pow(s - 1)).expect("base > 0")
    };
    let s_minus_1 = Rational::from_int((s - 1) as i64);
    let eps = Rational::from_parts(BigInt::one(), BigInt::from(10u32).pow(target_digits as u32))
        .expect("positive power of ten");
    let width_ok =
        |m: u64| -> bool { (&tail(m) - &tail(m + 1)).checked_div(&s_minus_1).unwrap() < eps };

    // minimal M with bracket width < eps (width is strictly decreasing)
    let m_star = if width_ok(0) {
        0
    } else {
        let mut hi = 1u64;
        while !width_ok(hi) {
            hi *= 2;
        }
        let mut lo = hi / 2; // width_ok(lo) is false
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if width_ok(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    };

    // exact Σ_{n=0}^{M} q^s/(nq+p)^s by balanced pairwise merging: a stack
    // of (numerator, denominator, level) where equal levels merge, so every
    // addition combines fractions of comparable size
    let q_pow_s = q.pow(s);
    let mut stack: Vec<(BigInt, BigInt, u32)> = Vec::new();
    for n in 0..=m_star {
        let den = (BigInt::from(n) * &q + &p).pow(s);
        let mut cur = (q_pow_s.clone(), den, 0u32);
        while stack.last().is_some_and(|top| top.2 == cur.2) {
            let (n1, d1, level) = stack.pop().unwrap();
            let num = &n1 * &cur.1 + &cur.0 * &d1;
            let den = d1 * cur.1;
            cur = (num, den, level + 1);
        }
        stack.push(cur);
    }
    let (mut num, mut den, _) = stack.pop().expect("at least the n = 0 leaf");
    while let Some((n1, d1, _)) = stack.pop() {
        num = &n1 * &den + &num * &d1;
        den *= d1;
    }

    // add the tail midpoint ((M+a)^(1−s) + (M+1+a)^(1−s)) / (2(s−1))
    let mid = (&tail(m_star) + &tail(m_star + 1))
        .checked_div(&(&Rational::from_int(2) * &s_minus_1))
        .expect("s >= 2");
    let total_num = &num * mid.denom() + mid.numer() * &den;
    let total_den = den * mid.denom();
    Ok(decimal_of_fraction(&total_num, &total_den, target_digits))
}

/// Both sides of the finite identity expressing B_m(a) through Stirling
/// numbers of the second kind:
///
///   B_m(a) = Σ_{v=0}^{m} binomial(m,v) a^(m−v)
///            Σ_{n=1}^{v+1} (−1)^(n−1) (n−1)! S_2(v, n−1) / n.
pub fn identity_ey1(m: usize, a: &Rational) -> (Rational, Rational) {
    let lhs = bernoulli_polynomial(m).eval(a);
    let mut rhs = Rational::zero();
    for v in 0..=m {
        let mut inner = Rational::zero();
        for n in 1..=v + 1 {
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            let t = Rational::from_parts(
                BigInt::from(sign) * factorial(n - 1) * stirling2(v, n - 1),
                BigInt::from(n as u64),
            )
            .expect("n > 0");
            inner = &inner + &t;
        }
        let outer = &Rational::from_bigint(binomial(m, v as i64)) * &a.pow((m - v) as i64);
        rhs = &rhs + &(&outer * &inner);
    }
    (lhs, rhs)
}

/// Both sides of the array-polynomial identity; each equals B_m(a), so the
/// pair must agree and be purely real:
///
///   lhs = Σ_{n=1}^{m+1} ((−1)^(n−1) (n−1)!/n) · S_{n−1}^m(a)
///   rhs = Σ_{v=0}^{m} binomial(m,v) (ib)^(m−v) · B_v(a − ib).
pub fn identity_af_i2(
    m: usize,
    a: &Rational,
    b: &Rational,
) -> (GaussianRational, GaussianRational) {
    let mut lhs = Rational::zero();
    for n in 1..=m + 1 {
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        let c = Rational::from_parts(
            BigInt::from(sign) * factorial(n - 1),
            BigInt::from(n as u64),
        )
        .expect("n > 0");
        lhs = &lhs + &(&c * &array_polynomial(n - 1, m).eval(a));
    }

    let z = GaussianRational::new(a.clone(), -b);
    let ib = GaussianRational::new(Rational::zero(), b.clone());
    let polys = bernoulli_polynomials(m);
    let mut rhs = GaussianRational::zero();
    for (v, poly) in polys.iter().enumerate() {
        let bv = poly.eval_map(&z, |c| GaussianRational::from_rational(c.clone()));
        let weight = Rational::from_bigint(binomial(m, v as i64));
        let term = &(&ib.pow((m - v) as i64) * &bv) * &GaussianRational::from_rational(weight);
        rhs = &rhs + &term;
    }
    (GaussianRational::from_rational(lhs), rhs)
}

/// Both sides of the double-sum identity through Stirling numbers of the
/// first kind and array polynomials, exactly as displayed:
///
///   B_m(a) = Σ_{n=0}^{m} Σ_{v=0}^{n} S_1(n,v) B_v S_n^m(a).
pub fn identity_af_i01(m: usize, a: &Rational) -> (Rational, Rational) {
    let lhs = bernoulli_polynomial(m).eval(a);
    let numbers = bernoulli_numbers(m);
    let mut rhs = Rational::zero();
    for n in 0..=m {
        let sna = array_polynomial(n, m).eval(a);
        if sna.is_zero() {
            continue;
        }
        let mut inner = Rational::zero();
        for (v, bv) in numbers.iter().enumerate().take(n + 1) {
            inner = &inner + &(&Rational::from_bigint(stirling1(n, v)) * bv);
        }
        rhs = &rhs + &(&inner * &sna);
    }
    (lhs, rhs)
}

/// Both sides of the weighted Stirling/Bernoulli sum:
/// Σ_{v=0}^{n} S_1(n,v) B_v = (−1)^n n!/(n+1).
pub fn stirling1_bernoulli_sum(n: usize) -> (Rational, Rational) {
    let numbers = bernoulli_numbers(n);
    let mut lhs = Rational::zero();
    for (v, bv) in numbers.iter().enumerate() {
        lhs = &lhs + &(&Rational::from_bigint(stirling1(n, v)) * bv);
    }
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let rhs = Rational::from_parts(
        BigInt::from(sign) * factorial(n),
        BigInt::from(n as u64 + 1),
    )
    .expect("n + 1 > 0");
    (lhs, rhs)
}

/// Asymptotic expansion of ζ(2, a): terms[n] = i^(n−1) B_n(a−ib) / b^(n+1)
/// for n = 0..max_terms−1, as exact Gaussian rationals. Divergent — read
/// through the optimal-truncation bookkeeping of [`SeriesEvaluation`].
pub fn zeta2_asymptotic(a: &Rational, b: &Rational, max_terms: usize) -> SeriesEvaluation {
    assert!(max_terms >= 1, "need at least one term");
    let z = GaussianRational::new(a.clone(), -b);
    let polys = bernoulli_polynomials(max_terms - 1);
    let b_inv = b.inverse().expect("b > 0");
    let mut b_pow_inv = b_inv.clone(); // 1/b^(n+1)
    let mut terms = Vec::with_capacity(max_terms);
    for (n, poly) in polys.iter().enumerate() {
        let bn = poly.eval_map(&z, |c| GaussianRational::from_rational(c.clone()));
        let rot = GaussianRational::i_power(n as i64 - 1);
        let t = &(&rot * &bn) * &GaussianRational::from_rational(b_pow_inv.clone());
        terms.push(t);
        if n + 1 < max_terms {
            b_pow_inv = &b_pow_inv * &b_inv;
        }
    }
    SeriesEvaluation::from_terms(terms)
}

/// Asymptotic expansion of ζ(k+2, y) from the k-th derivative of the
/// Bernoulli generating function:
///
///   terms[n] = ((−1)^k/(k+1)!) · ((−1)^n / x^(n+1)) · (n!/(n−k)!) · B_{n−k}(y−x)
///
/// for n ≥ k and 0 below. The leading factor (−1)^k (rather than the
/// (−1)^(k+1) sometimes quoted) is forced by the k = 0 case, which must
/// reduce termwise to the ζ(2, ·) expansion with x = ib; see the repository
/// conventions note.
pub fn zeta_k_asymptotic(
    k: usize,
    y: &Rational,
    x: &GaussianRational,
    max_terms: usize,
) -> SeriesEvaluation {
    assert!(max_terms >= 1, "need at least one term");
    assert!(!x.is_zero(), "x must be nonzero");
    let sign_k = if k % 2 == 0 { 1 } else { -1 };
    let prefactor =
        Rational::from_parts(BigInt::from(sign_k), factorial(k + 1)).expect("(k+1)! > 0");
    let z = &GaussianRational::from_rational(y.clone()) - x;
    let top = max_terms.saturating_sub(1);
    let polys = if top >= k {
        bernoulli_polynomials(top - k)
    } else {
        Vec::new()
    };
    let x_inv = x.inverse().expect("x nonzero");
    let mut x_pow_inv = x_inv.clone(); // 1/x^(n+1)
    let mut terms = Vec::with_capacity(max_terms);
    for n in 0..max_terms {
        if n < k {
            terms.push(GaussianRational::zero());
        } else {
            let bnk = polys[n - k].eval_map(&z, |c| GaussianRational::from_rational(c.clone()));
            // (−1)^n · n!/(n−k)! · prefactor
            let sign_n = if n % 2 == 0 { 1 } else { -1 };
            let falling: BigInt = (n - k + 1..=n).map(BigInt::from).product();
            let scale =
                &(&prefactor * &Rational::from_bigint(falling)) * &Rational::from_int(sign_n);
            let t = &(&bnk * &x_pow_inv) * &GaussianRational::from_rational(scale);
            terms.push(t);
        }
        if n + 1 < max_terms {
            x_pow_inv = &x_pow_inv * &x_inv;
        }
    }
    SeriesEvaluation::from_terms(terms)
}

/// Asymptotic expansion whose partial sums target 1/a²:
///
///   terms[n] = (−1)^n B_n(a−ib) ((1+ib)^(n+1) − (ib)^(n+1)) / (ib−b²)^(n+1).
///
/// The displayed double sum carries the inner expansion
/// Σ_j binomial(n,j) (a−ib)^(n−j) B_j, which is exactly B_n(a−ib); the
/// collapse is tested term by term.
pub fn reciprocal_square_series(a: &Rational, b: &Rational, max_terms: usize) -> SeriesEvaluation {
    assert!(max_terms >= 1, "need at least one term");
    let z = GaussianRational::new(a.clone(), -b);
    let ib = GaussianRational::new(Rational::zero(), b.clone());
    let one_plus_ib = &GaussianRational::one() + &ib;
    let base = &ib - &GaussianRational::from_rational(b * b); // ib − b²
    let base_inv = base.inverse().expect("b != 0 makes ib − b² nonzero");
    let polys = bernoulli_polynomials(max_terms - 1);
    let mut u_pow = one_plus_ib.clone(); // (1+ib)^(n+1)
    let mut v_pow = ib.clone(); // (ib)^(n+1)
    let mut w_pow_inv = base_inv.clone(); // (ib−b²)^−(n+1)
    let mut terms = Vec::with_capacity(max_terms);
    for (n, poly) in polys.iter().enumerate() {
        let bn = poly.eval_map(&z, |c| GaussianRational::from_rational(c.clone()));
        let sign = GaussianRational::from_ints(if n % 2 == 0 { 1 } else { -1 }, 0);
        let diff = &u_pow - &v_pow;
        let t = &(&(&sign * &bn) * &diff) * &w_pow_inv;
        terms.push(t);
        if n + 1 < max_terms {
            u_pow = &u_pow * &one_plus_ib;
            v_pow = &v_pow * &ib;
            w_pow_inv = &w_pow_inv * &base_inv;
        }
    }
    SeriesEvaluation::from_terms(terms)
}
