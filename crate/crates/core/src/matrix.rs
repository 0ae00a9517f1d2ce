//! Dense exact matrices over a scalar field: arithmetic, determinant, an
//! elimination inverse (the oracle), and two trace-based inverse formulas —
//! one from the characteristic polynomial written as a sum over partition
//! multiplicities, one through complete exponential Bell polynomials.
//!
//! Elimination pivots on the first nonzero entry of each column (no
//! magnitude pivoting), so results are deterministic.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use crate::combinatorics::{complete_bell, partition_multiplicities};
use crate::error::Error;
use crate::poly::DensePolynomial;
use crate::rational::{factorial, Rational};
use crate::scalar::{scalar_pow, Scalar};

/// Row-major dense matrix with exact scalar entries.
#[derive(Clone, PartialEq, Debug)]
pub struct FieldMatrix<F: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Scalar> FieldMatrix<F> {
    /// Builds from a row-major entry list; the length must be rows·cols.
    /// Degenerate shapes are rejected except the empty 0×0 matrix (whose
    /// determinant is 1 by convention).
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, Error> {
        if (rows == 0) != (cols == 0) || entries.len() != rows * cols {
            return Err(Error::RaggedRows);
        }
        Ok(FieldMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds from nested rows, which must be nonempty and of equal width.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::RaggedRows);
        }
        Ok(FieldMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds rows×cols with entry (i, j) = f(i, j).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        FieldMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// The n×n identity.
    pub fn identity(n: usize) -> Self {
        FieldMatrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry (i, j); panics out of range.
    pub fn entry(&self, i: usize, j: usize) -> &F {
        assert!(i < self.rows && j < self.cols, "entry index out of range");
        &self.entries[i * self.cols + j]
    }

    /// Row i as a slice; panics out of range.
    pub fn row(&self, i: usize) -> &[F] {
        assert!(i < self.rows, "row index out of range");
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Column j as an owned vector; panics out of range.
    pub fn column(&self, j: usize) -> Vec<F> {
        assert!(j < self.cols, "column index out of range");
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        FieldMatrix::from_fn(self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.clone() * s.clone()).collect(),
        }
    }

    fn shape_err(&self, op: &'static str, rhs: &Self) -> Error {
        Error::ShapeMismatch {
            op,
            left_rows: self.rows,
            left_cols: self.cols,
            right_rows: rhs.rows,
            right_cols: rhs.cols,
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.shape_err("add", rhs));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(self.shape_err("sub", rhs));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(FieldMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(self.shape_err("mul", rhs));
        }
        let mut entries = vec![F::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    entries[idx] = entries[idx].clone() + a.clone() * rhs.entry(k, j).clone();
                }
            }
        }
        Ok(FieldMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    /// A^e for square A; A^0 = identity.
    pub fn pow(&self, e: usize) -> Result<Self, Error> {
        self.require_square()?;
        let mut acc = FieldMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<F, Error> {
        self.require_square()?;
        let mut t = F::zero();
        for i in 0..self.rows {
            t = t + self.entry(i, i).clone();
        }
        Ok(t)
    }

    fn require_square(&self) -> Result<(), Error> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant by elimination; Ok(0) for singular input and 1 for
    /// the empty matrix.
    pub fn determinant(&self) -> Result<F, Error> {
        self.require_square()?;
        let n = self.rows;
        let mut a: Vec<F> = self.entries.clone();
        let at = |v: &Vec<F>, i: usize, j: usize| v[i * n + j].clone();
        let mut det = F::one();
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !at(&a, r, k).is_zero());
            let Some(p) = pivot_row else {
                return Ok(F::zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                det = -det;
            }
            let pivot = at(&a, k, k);
            det = det * pivot.clone();
            let pivot_inv = pivot
                .inverse()
                .expect("nonzero field pivot must be invertible");
            for r in k + 1..n {
                let factor = at(&a, r, k) * pivot_inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in k..n {
                    let sub = factor.clone() * at(&a, k, j);
                    a[r * n + j] = at(&a, r, j) - sub;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss–Jordan elimination with first-nonzero
    /// pivoting; the oracle the trace-based formulas are validated against.
    pub fn inverse_gauss(&self) -> Result<Self, Error> {
        self.require_square()?;
        let n = self.rows;
        // augmented [A | I], width 2n
        let w = 2 * n;
        let mut a = vec![F::zero(); n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.entry(i, j).clone();
            }
            a[i * w + n + i] = F::one();
        }
        for k in 0..n {
            let pivot_row = (k..n).find(|&r| !a[r * w + k].is_zero());
            let Some(p) = pivot_row else {
                return Err(Error::Singular { column: k });
            };
            if p != k {
                for j in 0..w {
                    a.swap(p * w + j, k * w + j);
                }
            }
            let pivot_inv = a[k * w + k]
                .clone()
                .inverse()
                .expect("nonzero field pivot must be invertible");
            for j in k..w {
                a[k * w + j] = a[k * w + j].clone() * pivot_inv.clone();
            }
            for r in 0..n {
                if r == k || a[r * w + k].is_zero() {
                    continue;
                }
                let factor = a[r * w + k].clone();
                for j in k..w {
                    let sub = factor.clone() * a[k * w + j].clone();
                    a[r * w + j] = a[r * w + j].clone() - sub;
                }
            }
        }
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| a[i * w + n + j].clone())
            .collect();
        Ok(FieldMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    /// Inverse from the characteristic polynomial written in terms of trace
    /// powers:
    ///
    ///   A⁻¹ = (1/det A) · Σ_{j, (a_v)} A^j · Π_{v=1}^{N−1} (−1)^(a_v + 1)
    ///          · tr(A^v)^{a_v} / (v^{a_v} · a_v!)
    ///
    /// summed over multi-indices with j + Σ_v v·a_v = N − 1; the product
    /// runs over ALL v = 1..N−1, so each zero multiplicity contributes a
    /// factor −1 (making the total sign (−1)^(N−1+Σ a_v)).
    pub fn inverse_cayley_hamilton(&self) -> Result<Self, Error> {
        self.require_square()?;
        let n = self.rows;
        let det = self.determinant()?;
        let det_inv = det.inverse().ok_or(Error::ZeroDeterminant)?;
        if n == 0 {
            return Ok(self.clone());
        }
        // powers A^0..A^(N−1) and traces tr(A^v) for v = 1..N−1
        let mut powers = Vec::with_capacity(n);
        powers.push(FieldMatrix::identity(n));
        for _ in 1..n {
            let next = powers.last().unwrap().mul(self)?;
            powers.push(next);
        }
        let traces: Vec<F> = (1..n).map(|v| powers[v].trace().unwrap()).collect();
        let mut acc = FieldMatrix::from_fn(n, n, |_, _| F::zero());
        for j in 0..n {
            let m = n - 1 - j;
            let mut coeff = F::zero();
            for ks in partition_multiplicities(m) {
                // ks[v−1] = a_v for v = 1..m; a_v = 0 for v in m+1..N−1
                let mult_sum: usize = ks.iter().sum();
                let sign = if (n - 1 + mult_sum) % 2 == 0 { 1 } else { -1 };
                let mut term = F::from_int(sign);
                let mut denom = BigInt::one();
                for (idx, &a_v) in ks.iter().enumerate() {
                    if a_v == 0 {
                        continue;
                    }
                    let v = idx + 1;
                    term = term * scalar_pow(&traces[v - 1], a_v as u64);
                    denom *= BigInt::from(v).pow(a_v as u32) * factorial(a_v);
                }
                let inv_denom =
                    Rational::from_parts(BigInt::one(), denom).expect("denominator > 0");
                coeff = coeff + term * F::from_rational(&inv_denom);
            }
            acc = acc.add(&powers[j].scale(&coeff))?;
        }
        Ok(acc.scale(&det_inv))
    }

    /// Inverse through complete exponential Bell polynomials:
    ///
    ///   A⁻¹ = (1/det A) · Σ_{j=1}^{N} A^(j−1) · (−1)^(N−1)/(N−j)!
    ///          · B_{N−j}(w_1, …, w_{N−j}),   w_k = −(k−1)! · tr(A^k).
    pub fn inverse_bell(&self) -> Result<Self, Error> {
        self.require_square()?;
        let n = self.rows;
        let det = self.determinant()?;
        let det_inv = det.inverse().ok_or(Error::ZeroDeterminant)?;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut powers = Vec::with_capacity(n);
        powers.push(FieldMatrix::identity(n));
        for _ in 1..n {
            let next = powers.last().unwrap().mul(self)?;
            powers.push(next);
        }
        let w: Vec<F> = (1..n)
            .map(|k| {
                let t = powers[k].trace().unwrap();
                let c = Rational::from_bigint(-factorial(k - 1));
                t * F::from_rational(&c)
            })
            .collect();
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        let mut acc = FieldMatrix::from_fn(n, n, |_, _| F::zero());
        for j in 1..=n {
            let bell = complete_bell(&w[..n - j]);
            let c =
                Rational::from_parts(BigInt::from(sign), factorial(n - j)).expect("factorial > 0");
            let coeff = bell * F::from_rational(&c);
            acc = acc.add(&powers[j - 1].scale(&coeff))?;
        }
        Ok(acc.scale(&det_inv))
    }
}

/// Rows of `minv` (which must be n×n) times the basis column
/// (1, x, …, x^(n−1))ᵀ: row i becomes the polynomial Σ_j minv[i][j]·x^j.
pub fn apply_to_basis(
    minv: &FieldMatrix<Rational>,
    n: usize,
) -> Result<Vec<DensePolynomial<Rational>>, Error> {
    if minv.rows() != n || minv.cols() != n {
        return Err(Error::ShapeMismatch {
            op: "apply_to_basis",
            left_rows: minv.rows(),
            left_cols: minv.cols(),
            right_rows: n,
            right_cols: 1,
        });
    }
    Ok((0..n)
        .map(|i| DensePolynomial::new(minv.row(i).to_vec()))
        .collect())
}

impl FieldMatrix<Rational> {
    /// JSON value {"rows": R, "cols": C, "entries": [["p/q", …], …]}.
    pub fn to_json_value(&self) -> Value {
        let entries: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(Rational::to_string).collect())
            .collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    /// Compact JSON string of [`Self::to_json_value`].
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(v: &Value) -> Result<Self, Error> {
        let get_dim = |key: &str| -> Result<usize, Error> {
            v.get(key)
                .and_then(Value::as_u64)
                .map(|d| d as usize)
                .ok_or_else(|| Error::Json(format!("matrix object needs integer \"{key}\"")))
        };
        let rows = get_dim("rows")?;
        let cols = get_dim("cols")?;
        let rows_val = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("matrix object needs an \"entries\" array".into()))?;
        if rows_val.len() != rows {
            return Err(Error::Json(format!(
                "expected {rows} entry rows, found {}",
                rows_val.len()
            )));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for row in rows_val {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Json("entries must be nested arrays".into()))?;
            if cells.len() != cols {
                return Err(Error::Json(format!(
                    "expected {cols} columns, found a row of {}",
                    cells.len()
                )));
            }
            for cell in cells {
                let s = cell
                    .as_str()
                    .ok_or_else(|| Error::Json("entries must be \"p/q\" strings".into()))?;
                entries.push(
                    s.parse::<Rational>()
                        .map_err(|e| Error::Json(e.to_string()))?,
                );
            }
        }
        FieldMatrix::from_entries(rows, cols, entries).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json_value(&v)
    }

    /// CSV: one matrix row per line, "p/q" cells, comma-separated, each line
    /// newline-terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(Rational::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Plain text: right-aligned columns separated by two spaces, each row
    /// newline-terminated.
    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(Rational::to_string).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                out.push_str(&" ".repeat(widths[j] - cell.len()));
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }
}
