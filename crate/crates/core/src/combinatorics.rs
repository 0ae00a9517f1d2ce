//! Stirling numbers, Bernoulli numbers and polynomials, integer-partition
//! enumeration, complete exponential Bell polynomials, and array polynomials
//! — all exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;
use crate::matrix::FieldMatrix;
use crate::poly::DensePolynomial;
use crate::rational::{binomial, factorial, Rational};
use crate::scalar::{scalar_pow, Scalar};

/// Stirling number of the second kind S_2(m, n): partitions of an m-set
/// into n nonempty blocks. Recurrence S_2(m,n) = n·S_2(m−1,n) + S_2(m−1,n−1)
/// with S_2(0,0) = 1.
pub fn stirling2(m: usize, n: usize) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    // row-by-row table of S_2(i, ·) for i = 0..m, keeping only one row
    let mut row = vec![BigInt::zero(); n + 1];
    row[0] = BigInt::one();
    for i in 1..=m {
        for j in (1..=n.min(i)).rev() {
            let keep = BigInt::from(j) * &row[j];
            row[j] = keep + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[n].clone()
}

/// Signed Stirling number of the first kind S_1(n, k), via
/// S_1(n,k) = S_1(n−1,k−1) − (n−1)·S_1(n−1,k) with S_1(0,0) = 1.
pub fn stirling1(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            let keep = BigInt::from(i as i64 - 1) * &row[j];
            row[j] = &row[j - 1] - keep;
        }
        row[0] = BigInt::zero();
    }
    row[k].clone()
}

/// B_0..B_n by the Cauchy-product recurrence
/// B_m = −(1/(m+1)) Σ_{k=0}^{m−1} binomial(m+1, k) B_k.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            let c = Rational::from_bigint(binomial(m + 1, k as i64));
            acc = &acc + &(&c * bk);
        }
        let minus_inv = Rational::new(-1, (m + 1) as i64);
        b.push(&minus_inv * &acc);
    }
    b
}

/// The single Bernoulli number B_n.
pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_numbers(n).pop().expect("list has n+1 entries")
}

/// B_n via the n×n Hessenberg determinant: B_n = (−1)^n · n! · det(H_n),
/// where H[i][j] = 1/(i−j+2)! for j ≤ i+1 (0-based; the superdiagonal is
/// 1/1! = 1) and 0 above the superdiagonal. Independent of the recurrence.
pub fn bernoulli_number_determinant(n: usize) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let entries = (0..n)
        .flat_map(|i| {
            (0..n).map(move |j| {
                if j > i + 1 {
                    Rational::zero()
                } else {
                    Rational::from_parts(BigInt::one(), factorial(i + 2 - j))
                        .expect("factorial is positive")
                }
            })
        })
        .collect();
    let h = FieldMatrix::from_entries(n, n, entries).expect("n*n entries supplied");
    let det = h.determinant().expect("square by construction");
    let sign = if n % 2 == 0 { 1 } else { -1 };
    &(&Rational::from_int(sign) * &Rational::from_bigint(factorial(n))) * &det
}

/// B_0(x)..B_n(x) with B_n(x) = Σ_{v=0}^{n} binomial(n,v) B_v x^(n−v).
pub fn bernoulli_polynomials(n: usize) -> Vec<DensePolynomial<Rational>> {
    let numbers = bernoulli_numbers(n);
    (0..=n)
        .map(|m| {
            let coeffs = (0..=m)
                .map(|k| {
                    // coefficient of x^k is binomial(m, m−k) B_{m−k}
                    let v = m - k;
                    &Rational::from_bigint(binomial(m, v as i64)) * &numbers[v]
                })
                .collect();
            DensePolynomial::new(coeffs)
        })
        .collect()
}

/// The single Bernoulli polynomial B_n(x).
pub fn bernoulli_polynomial(n: usize) -> DensePolynomial<Rational> {
    bernoulli_polynomials(n)
        .pop()
        .expect("list has n+1 entries")
}

/// Exact Horner evaluation of B_n at a Gaussian-rational point.
pub fn bernoulli_poly_eval(n: usize, z: &GaussianRational) -> GaussianRational {
    bernoulli_polynomial(n).eval_map(z, |c| GaussianRational::from_rational(c.clone()))
}

/// All multiplicity vectors (k_1, …, k_n) with Σ j·k_j = n, in ascending
/// lexicographic order; n = 0 yields the single empty vector.
pub fn partition_multiplicities(n: usize) -> Vec<Vec<usize>> {
    fn recurse(
        n: usize,
        j: usize,
        remaining: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if j > n {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for k in 0..=(remaining / j) {
            prefix.push(k);
            recurse(n, j + 1, remaining - j * k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    recurse(n, 1, n, &mut Vec::new(), &mut out);
    out
}

/// Complete exponential Bell polynomial B_n(w_1, …, w_n) with n = w.len():
/// n! · Σ over partitions Σ j·k_j = n of Π_j w_j^{k_j} / ((j!)^{k_j} k_j!);
/// B_0 = 1 (empty product over the empty partition).
pub fn complete_bell<F: Scalar>(w: &[F]) -> F {
    let n = w.len();
    let n_fact = factorial(n);
    let mut acc = F::zero();
    for ks in partition_multiplicities(n) {
        let mut term = F::one();
        let mut denom = BigInt::one();
        for (idx, &k) in ks.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let j = idx + 1;
            term = term * scalar_pow(&w[idx], k as u64);
            denom *= factorial(j).pow(k as u32) * factorial(k);
        }
        let coeff = Rational::from_parts(n_fact.clone(), denom).expect("denominator > 0");
        acc = acc + term * F::from_rational(&coeff);
    }
    acc
}

/// Array polynomial S_v^m(x) = Σ_{j=v}^{m} binomial(m,j) S_2(j,v) x^(m−j);
/// the zero polynomial when v > m. Equals the exponential-generating-function
/// coefficient of ((e^t − 1)^v / v!) · e^{tx} at t^m.
pub fn array_polynomial(v: usize, m: usize) -> DensePolynomial<Rational> {
    if v > m {
        return DensePolynomial::zero();
    }
    let mut coeffs = vec![Rational::zero(); m - v + 1];
    for j in v..=m {
        // term binomial(m,j)·S_2(j,v)·x^(m−j)
        let c = Rational::from_bigint(binomial(m, j as i64) * stirling2(j, v));
        coeffs[m - j] = c;
    }
    DensePolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::TruncatedSeries;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn stirling_second_values() {
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(3, 5), BigInt::zero());
        assert_eq!(stirling2(5, 2), BigInt::from(15));
        assert_eq!(stirling2(6, 3), BigInt::from(90));
        assert_eq!(stirling2(0, 1), BigInt::zero());
        assert_eq!(stirling2(1, 0), BigInt::zero());
    }

    #[test]
    fn stirling_second_matches_generating_function() {
        // S_2(m, n) = m! · [t^m] (e^t − 1)^n / n!
        let e = TruncatedSeries::<Rational>::exp_minus_one(10);
        for n in 0..=4usize {
            let kernel = e
                .pow(n)
                .scale(&Rational::from_parts(1.into(), factorial(n)).unwrap());
            for m in 0..=10usize {
                assert_eq!(
                    kernel.egf_coefficient(m).unwrap(),
                    Rational::from_bigint(stirling2(m, n)),
                    "S_2({m},{n})"
                );
            }
        }
    }

    #[test]
    fn stirling_first_values() {
        assert_eq!(stirling1(0, 0), BigInt::one());
        assert_eq!(stirling1(3, 1), BigInt::from(2));
        assert_eq!(stirling1(2, 1), BigInt::from(-1));
        assert_eq!(stirling1(4, 2), BigInt::from(11));
        assert_eq!(stirling1(5, 3), BigInt::from(35));
        assert_eq!(stirling1(4, 1), BigInt::from(-6));
        assert_eq!(stirling1(1, 2), BigInt::zero());
    }

    #[test]
    fn stirling_first_matches_generating_function() {
        // S_1(n, k) = n! · [t^n] (log(1+t))^k / k!
        let l = TruncatedSeries::<Rational>::log_one_plus(9);
        for k in 0..=4usize {
            let kernel = l
                .pow(k)
                .scale(&Rational::from_parts(1.into(), factorial(k)).unwrap());
            for n in 0..=9usize {
                assert_eq!(
                    kernel.egf_coefficient(n).unwrap(),
                    Rational::from_bigint(stirling1(n, k)),
                    "S_1({n},{k})"
                );
            }
        }
    }

    #[test]
    fn bernoulli_number_table() {
        let b = bernoulli_numbers(12);
        assert_eq!(
            &b[..7],
            &[
                r(1, 1),
                r(-1, 2),
                r(1, 6),
                r(0, 1),
                r(-1, 30),
                r(0, 1),
                r(1, 42)
            ]
        );
        assert_eq!(b[10], r(5, 66));
        assert_eq!(b[12], r(-691, 2730));
        assert_eq!(bernoulli_number(8), r(-1, 30));
    }

    #[test]
    fn determinant_route_agrees_with_recurrence() {
        for n in 0..=12usize {
            assert_eq!(
                bernoulli_number_determinant(n),
                bernoulli_number(n),
                "B_{n} via determinant"
            );
        }
    }

    #[test]
    fn bernoulli_polynomial_table() {
        assert_eq!(bernoulli_polynomial(0), DensePolynomial::constant(r(1, 1)));
        assert_eq!(
            bernoulli_polynomial(1),
            DensePolynomial::new(vec![r(-1, 2), r(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(2),
            DensePolynomial::new(vec![r(1, 6), r(-1, 1), r(1, 1)])
        );
        assert_eq!(
            bernoulli_polynomial(3),
            DensePolynomial::new(vec![r(0, 1), r(1, 2), r(-3, 2), r(1, 1)])
        );
        // B_n(0) = B_n and d/dx B_n(x) = n B_{n−1}(x)
        for n in 1..=10usize {
            assert_eq!(
                bernoulli_polynomial(n).eval(&Rational::zero()),
                bernoulli_number(n)
            );
            assert_eq!(
                bernoulli_polynomial(n).derivative(),
                bernoulli_polynomial(n - 1).scale(&Rational::from_int(n as i64))
            );
        }
    }

    #[test]
    fn bernoulli_evaluation_at_gaussian_points() {
        let z = GaussianRational::new(r(1, 1), r(-5, 1));
        assert_eq!(
            bernoulli_poly_eval(1, &z),
            GaussianRational::new(r(1, 2), r(-5, 1))
        );
        assert_eq!(
            bernoulli_poly_eval(0, &z),
            GaussianRational::from_ints(1, 0)
        );
        assert_eq!(
            bernoulli_poly_eval(2, &GaussianRational::i()),
            GaussianRational::new(r(-5, 6), r(-1, 1))
        );
    }

    #[test]
    fn partitions_are_lexicographic_and_complete() {
        assert_eq!(partition_multiplicities(0), vec![Vec::<usize>::new()]);
        assert_eq!(
            partition_multiplicities(4),
            vec![
                vec![0, 0, 0, 1],
                vec![0, 2, 0, 0],
                vec![1, 0, 1, 0],
                vec![2, 1, 0, 0],
                vec![4, 0, 0, 0],
            ]
        );
        // partition counts p(n) for n = 0..10
        let p: Vec<usize> = (0..=10)
            .map(|n| partition_multiplicities(n).len())
            .collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn complete_bell_small_cases() {
        let w = [r(3, 1), r(5, 1), r(7, 1), r(11, 1)];
        assert_eq!(complete_bell::<Rational>(&[]), r(1, 1));
        assert_eq!(complete_bell(&w[..1]), r(3, 1));
        // B_2 = w1^2 + w2
        assert_eq!(complete_bell(&w[..2]), r(14, 1));
        // B_3 = w1^3 + 3 w1 w2 + w3
        assert_eq!(complete_bell(&w[..3]), r(27 + 45 + 7, 1));
        // B_4 = w1^4 + 6 w1^2 w2 + 4 w1 w3 + 3 w2^2 + w4
        assert_eq!(complete_bell(&w[..4]), r(81 + 270 + 84 + 75 + 11, 1));
    }

    #[test]
    fn complete_bell_recurrence() {
        // B_{n+1}(w) = Σ_{k=0}^{n} binomial(n,k) B_{n−k}(w) w_{k+1}
        let w: Vec<Rational> = vec![r(1, 2), r(-2, 3), r(3, 1), r(-1, 5), r(7, 2), r(0, 1)];
        for n in 0..w.len() - 1 {
            let lhs = complete_bell(&w[..n + 1]);
            let mut rhs = Rational::zero();
            for k in 0..=n {
                let c = Rational::from_bigint(binomial(n, k as i64));
                rhs = &rhs + &(&(&c * &complete_bell(&w[..n - k])) * &w[k]);
            }
            assert_eq!(lhs, rhs, "recurrence at n+1 = {}", n + 1);
        }
    }

    #[test]
    fn array_polynomial_cases() {
        assert_eq!(
            array_polynomial(0, 3),
            DensePolynomial::monomial(r(1, 1), 3)
        );
        assert_eq!(array_polynomial(1, 1), DensePolynomial::constant(r(1, 1)));
        assert_eq!(array_polynomial(3, 2), DensePolynomial::zero());
        assert_eq!(
            array_polynomial(1, 2),
            DensePolynomial::new(vec![r(1, 1), r(2, 1)])
        );
        for v in 0..=6usize {
            for m in v..=6usize {
                assert_eq!(
                    array_polynomial(v, m).eval(&Rational::zero()),
                    Rational::from_bigint(stirling2(m, v)),
                    "S_{v}^{m}(0)"
                );
            }
        }
    }

    #[test]
    fn array_polynomial_matches_generating_function() {
        // S_v^m(x) = m! · [t^m] ((e^t − 1)^v / v!) · e^{tx}, checked with the
        // indeterminate x itself as the series scalar.
        type P = DensePolynomial<Rational>;
        let order = 8;
        let e = TruncatedSeries::<P>::exp_minus_one(order);
        let ex = TruncatedSeries::<P>::exp_linear(&P::x(), order);
        for v in 0..=3usize {
            let inv_vfact = P::constant(Rational::from_parts(1.into(), factorial(v)).unwrap());
            let kernel = e.pow(v).scale(&inv_vfact).mul(&ex);
            for m in 0..=order {
                assert_eq!(
                    kernel.egf_coefficient(m).unwrap(),
                    array_polynomial(v, m),
                    "S_{v}^{m}(x)"
                );
            }
        }
    }
}
