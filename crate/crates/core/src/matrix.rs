//! Dense matrices over [`QScalar`] with exact ring and field operations:
//! Gauss-Jordan inverse, Kronecker products, kernels, and Lagrange-style
//! spectral idempotents for matrices with a known simple spectrum.
//!
//! Everything is value-semantic and pure; matrices at desk scale stay
//! below 64 x 64, so plain rational elimination with eager normalization
//! beats fraction-free variants.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Mode, QScalar};

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<QScalar>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![QScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QScalar::one());
        }
        m
    }

    /// c * I_n.
    pub fn scalar(n: usize, c: &QScalar) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QScalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<QScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(diag: &[QScalar]) -> Self {
        let mut m = QMatrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    /// d x k matrix with the given vectors as columns.
    pub fn from_columns(cols: &[Vec<QScalar>]) -> Self {
        let k = cols.len();
        let d = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == d), "ragged columns");
        QMatrix::from_fn(d, k, |i, j| cols[j][i].clone())
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

    pub fn get(&self, i: usize, j: usize) -> &QScalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QScalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[QScalar] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<QScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn checked_add(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                op: "add",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(self + rhs)
    }

    pub fn checked_mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(self * rhs)
    }

    pub fn scale(&self, c: &QScalar) -> QMatrix {
        self.map(|x| x * c)
    }

    pub fn map(&self, f: impl Fn(&QScalar) -> QScalar) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> QScalar {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Matrix power by repeated multiplication (exponents stay tiny here).
    pub fn pow(&self, e: usize) -> QMatrix {
        assert!(self.is_square(), "power of non-square matrix");
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[QScalar]) -> Vec<QScalar> {
        assert_eq!(self.cols, v.len(), "apply: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = QScalar::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() {
                        acc = acc + a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Standard Kronecker product; satisfies (A (x) B)(C (x) D) = AC (x) BD.
    pub fn kron(&self, rhs: &QMatrix) -> QMatrix {
        let (p, q) = (rhs.rows, rhs.cols);
        let mut out = QMatrix::zeros(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * p + k, j * q + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, rhs: &QMatrix) -> QMatrix {
        &(self * rhs) - &(rhs * self)
    }

    /// [A, B]_q = q AB - q^(-1) BA.
    pub fn q_commutator(&self, rhs: &QMatrix, q: &QScalar) -> QMatrix {
        &(self * rhs).scale(q) - &(rhs * self).scale(&q.inv())
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(QScalar::is_zero)
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.entries
            .iter()
            .map(QScalar::abs_f64)
            .fold(0.0, f64::max)
    }

    /// Largest entry of |self| * |rhs| in binary64: the scale of the
    /// intermediates in the product, used as a backward-error hint for
    /// float-mode comparisons.
    pub fn product_scale(&self, rhs: &QMatrix) -> f64 {
        assert_eq!(self.cols, rhs.rows, "product_scale: dimension mismatch");
        let mut worst = 0f64;
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = 0f64;
                for k in 0..self.cols {
                    acc += self.get(i, k).abs_f64() * rhs.get(k, j).abs_f64();
                }
                worst = worst.max(acc);
            }
        }
        worst
    }

    /// Exact if every entry is exact.
    pub fn mode(&self) -> Mode {
        if self.entries.iter().any(|e| e.mode() == Mode::Float) {
            Mode::Float
        } else {
            Mode::Exact
        }
    }

    /// Pivot threshold for elimination: exact zero in exact mode, a
    /// norm-scaled epsilon in float mode.
    fn elimination_tol(&self) -> f64 {
        match self.mode() {
            Mode::Exact => 0.0,
            Mode::Float => 1e-12 * self.max_abs_f64().max(1.0),
        }
    }

    /// Gauss-Jordan inverse with exact pivoting.
    pub fn inverse(&self) -> Result<QMatrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let tol = self.elimination_tol();
        let negligible = move |x: &QScalar| match x {
            QScalar::Exact(_) => x.is_zero(),
            QScalar::Float(f) => f.abs() <= tol,
        };
        let mut work = self.clone();
        let mut inv = QMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .filter(|&r| !negligible(work.get(r, col)))
                .max_by(|&a, &b| {
                    work.get(a, col)
                        .abs_f64()
                        .partial_cmp(&work.get(b, col).abs_f64())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .ok_or(Error::SingularMatrix)?;
            work.swap_rows(col, pivot_row);
            inv.swap_rows(col, pivot_row);
            let pivot_inv = work.get(col, col).inv();
            work.scale_row(col, &pivot_inv);
            inv.scale_row(col, &pivot_inv);
            for r in 0..n {
                if r != col && !work.get(r, col).is_zero() {
                    let factor = work.get(r, col).clone();
                    work.sub_scaled_row(r, col, &factor);
                    inv.sub_scaled_row(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    /// P * self * P^(-1).
    pub fn conjugate_by(&self, p: &QMatrix) -> Result<QMatrix> {
        Ok(&(p * self) * &p.inverse()?)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &QScalar) {
        for j in 0..self.cols {
            let v = self.get(r, j);
            if !v.is_zero() {
                let scaled = v * c;
                self.set(r, j, scaled);
            }
        }
    }

    /// row[r] -= c * row[src].
    fn sub_scaled_row(&mut self, r: usize, src: usize, c: &QScalar) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(r, j) - &(s * c);
            self.set(r, j, v);
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let tol = self.elimination_tol();
        let negligible = move |x: &QScalar| match x {
            QScalar::Exact(_) => x.is_zero(),
            QScalar::Float(f) => f.abs() <= tol,
        };
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows)
                .filter(|&r| !negligible(self.get(r, col)))
                .max_by(|&a, &b| {
                    self.get(a, col)
                        .abs_f64()
                        .partial_cmp(&self.get(b, col).abs_f64())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
            else {
                continue;
            };
            self.swap_rows(row, pivot_row);
            let inv = self.get(row, col).inv();
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    self.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.rref_in_place().len()
    }

    /// Exact basis of the right kernel; dimension is `cols - rank`.
    pub fn nullspace(&self) -> Vec<Vec<QScalar>> {
        let mut work = self.clone();
        let pivots = work.rref_in_place();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![QScalar::zero(); self.cols];
            v[free] = QScalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work.get(r, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `basis * X = images` column by column, for `basis` with full
    /// column rank (coordinates of vectors in a subspace basis).
    pub fn solve_in_basis(basis: &QMatrix, images: &QMatrix) -> Result<QMatrix> {
        if basis.rows != images.rows {
            return Err(Error::ShapeMismatch {
                op: "solve_in_basis",
                left: basis.shape(),
                right: images.shape(),
            });
        }
        let mut aug = QMatrix::from_fn(basis.rows, basis.cols + images.cols, |i, j| {
            if j < basis.cols {
                basis.get(i, j).clone()
            } else {
                images.get(i, j - basis.cols).clone()
            }
        });
        // Inconsistency means the images leave the span; in float mode
        // genuine non-membership shows up at the scale of the images, so
        // a loose relative threshold separates it from elimination noise.
        let residual_tol = match aug.mode() {
            Mode::Exact => 0.0,
            Mode::Float => 1e-9 * aug.max_abs_f64().max(1.0),
        };
        let pivots = aug.rref_in_place();
        if pivots.len() != basis.cols || pivots.iter().any(|&p| p >= basis.cols) {
            return Err(Error::SingularMatrix);
        }
        // Consistency: rows past the rank must be zero on the image side.
        for r in pivots.len()..basis.rows {
            for j in 0..images.cols {
                let entry = aug.get(r, basis.cols + j);
                let ok = match entry {
                    QScalar::Exact(_) => entry.is_zero(),
                    QScalar::Float(f) => f.abs() <= residual_tol,
                };
                if !ok {
                    return Err(Error::SingularMatrix);
                }
            }
        }
        let _ = residual_tol;
        Ok(QMatrix::from_fn(basis.cols, images.cols, |i, j| {
            aug.get(i, basis.cols + j).clone()
        }))
    }

    /// Lagrange spectral idempotents of a matrix with the given pairwise
    /// distinct eigenvalues, assuming prod_k (A - lambda_k I) = 0. Each
    /// projector is prod_{k != r} (A - lambda_k I) / (lambda_r - lambda_k);
    /// together they are complete orthogonal idempotents with
    /// E_r A = lambda_r E_r.
    pub fn spectral_idempotents(&self, eigenvalues: &[QScalar]) -> Result<Vec<QMatrix>> {
        assert!(self.is_square(), "idempotents of non-square matrix");
        let n = self.rows;
        for (i, a) in eigenvalues.iter().enumerate() {
            for b in &eigenvalues[i + 1..] {
                if (a - b).is_structural_zero() {
                    return Err(Error::BadEigenvalues(format!(
                        "eigenvalues must be pairwise distinct, found {} twice",
                        a.render()
                    )));
                }
            }
        }
        let factors: Vec<QMatrix> = eigenvalues
            .iter()
            .map(|l| self - &QMatrix::scalar(n, l))
            .collect();
        let mut min_poly = QMatrix::identity(n);
        for f in &factors {
            min_poly = &min_poly * f;
        }
        let hypothesis_ok = match self.mode() {
            Mode::Exact => min_poly.is_zero_matrix(),
            Mode::Float => {
                let scale: f64 = eigenvalues
                    .iter()
                    .map(|l| (self.max_abs_f64() + l.abs_f64()).max(1.0))
                    .product();
                min_poly.max_abs_f64() <= crate::scalar::FLOAT_REL_TOL * scale
            }
        };
        if !hypothesis_ok {
            return Err(Error::MinimalPolynomial {
                max_abs: min_poly.max_abs_f64(),
                residual: Box::new(min_poly),
            });
        }
        // The factors commute, so each projector is prefix * suffix of
        // the factor chain; this builds all of them with a linear number
        // of matrix products.
        let m = eigenvalues.len();
        let mut prefix = Vec::with_capacity(m);
        prefix.push(QMatrix::identity(n));
        for k in 0..m - 1 {
            let next = &prefix[k] * &factors[k];
            prefix.push(next);
        }
        let mut suffix = vec![QMatrix::identity(n); m];
        for k in (0..m - 1).rev() {
            suffix[k] = &suffix[k + 1] * &factors[k + 1];
        }
        let mut projectors = Vec::with_capacity(m);
        for (r, l_r) in eigenvalues.iter().enumerate() {
            let mut denom = QScalar::one();
            for (k, l_k) in eigenvalues.iter().enumerate() {
                if k != r {
                    denom = denom * (l_r - l_k);
                }
            }
            projectors.push((&prefix[r] * &suffix[r]).scale(&denom.inv()));
        }
        Ok(projectors)
    }

    /// Binary64 bound on the intermediates when building the Lagrange
    /// idempotent for eigenvalue r: prod_(k != r) (|A| + |lambda_k|) /
    /// |lambda_r - lambda_k|. Absolute float errors in the projector are
    /// within machine epsilon times this.
    pub fn idempotent_scales(&self, eigenvalues: &[QScalar]) -> Vec<f64> {
        let a_norm = self.max_abs_f64();
        eigenvalues
            .iter()
            .enumerate()
            .map(|(r, l_r)| {
                let mut scale = 1f64;
                for (k, l_k) in eigenvalues.iter().enumerate() {
                    if k != r {
                        scale *= (a_norm + l_k.abs_f64())
                            / (l_r.to_f64() - l_k.to_f64()).abs().max(f64::MIN_POSITIVE);
                    }
                }
                scale
            })
            .collect()
    }

    /// JSON form: {"rows": r, "cols": c, "entries": ["p/q", ...]} with
    /// entries row-major, rationals rendered exactly and floats as
    /// decimals.
    pub fn to_json_value(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(QScalar::render).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("matrix serialization")
    }

    pub fn from_json_value(v: &Value) -> Result<QMatrix> {
        let rows = v["rows"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing 'rows'".into()))? as usize;
        let cols = v["cols"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing 'cols'".into()))? as usize;
        let raw = v["entries"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing 'entries'".into()))?;
        if raw.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: raw.len(),
                context: "matrix entries".into(),
            });
        }
        let entries = raw
            .iter()
            .map(|e| {
                e.as_str()
                    .ok_or_else(|| Error::Parse("entry must be a string".into()))
                    .and_then(QScalar::parse)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QMatrix { rows, cols, entries })
    }

    /// CSV form: one row per line, entries in the same grammar as JSON.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<QMatrix> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split(',')
                .map(QScalar::parse)
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("empty CSV matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse("ragged CSV matrix".into()));
        }
        Ok(QMatrix::from_rows(rows))
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = QScalar;
    fn index(&self, (i, j): (usize, usize)) -> &QScalar {
        self.get(i, j)
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape mismatch");
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension mismatch");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.map(|x| -x)
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = (0..self.cols).map(|j| self.get(i, j).render()).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QPoint;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> QMatrix {
        QMatrix::from_rows(vec![
            vec![QScalar::int(a), QScalar::int(b)],
            vec![QScalar::int(c), QScalar::int(d)],
        ])
    }

    #[test]
    fn identity_is_neutral() {
        let a = m2(1, 2, 3, 4);
        let i = QMatrix::identity(2);
        assert_eq!(&i * &a, a);
        assert_eq!(&a * &i, a);
    }

    #[test]
    fn shape_mismatch_is_signaled() {
        let a = m2(1, 2, 3, 4);
        let b = QMatrix::zeros(3, 2);
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::ShapeMismatch { .. })
        ));
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m2(2, 1, 7, 4);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, QMatrix::identity(2));
        assert_eq!(inv.inverse().unwrap(), a);
        assert!(QMatrix::identity(3).inverse().unwrap() == QMatrix::identity(3));
    }

    #[test]
    fn diagonal_inverse_inverts_entries() {
        let d = QMatrix::diagonal(&[QScalar::ratio(3, 5), QScalar::int(-2)]);
        let expected = QMatrix::diagonal(&[QScalar::ratio(5, 3), QScalar::ratio(-1, 2)]);
        assert_eq!(d.inverse().unwrap(), expected);
    }

    #[test]
    fn singular_matrix_is_signaled() {
        let a = m2(1, 2, 2, 4);
        assert!(matches!(a.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn kron_mixed_product() {
        let a = m2(1, 2, 0, 1);
        let b = m2(3, 0, 1, 2);
        let c = m2(0, 1, 1, 0);
        let d = m2(2, 1, 1, 1);
        let lhs = &a.kron(&b) * &c.kron(&d);
        let rhs = (&a * &c).kron(&(&b * &d));
        assert_eq!(lhs, rhs);
        assert_eq!(
            QMatrix::identity(3).kron(&QMatrix::identity(4)),
            QMatrix::identity(12)
        );
    }

    #[test]
    fn nullspace_dimensions() {
        assert!(QMatrix::identity(4).nullspace().is_empty());
        assert_eq!(QMatrix::zeros(3, 3).nullspace().len(), 3);
        // x + y = 0 has a one-dimensional kernel.
        let a = QMatrix::from_rows(vec![vec![QScalar::int(1), QScalar::int(1)]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert!((&v[0] + &v[1]).is_zero());
    }

    #[test]
    fn q_commutator_on_equal_args() {
        // [A, A]_q = (q - q^(-1)) A^2.
        let p = QPoint::exact(3, 5).unwrap();
        let q = p.q();
        let a = m2(1, 2, 3, 4);
        let lhs = a.q_commutator(&a, &q);
        let rhs = (&a * &a).scale(&(&q - &q.inv()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn spectral_idempotents_diagonal() {
        let d = QMatrix::diagonal(&[QScalar::int(2), QScalar::int(5)]);
        let ps = d
            .spectral_idempotents(&[QScalar::int(2), QScalar::int(5)])
            .unwrap();
        assert_eq!(ps[0], QMatrix::diagonal(&[QScalar::one(), QScalar::zero()]));
        assert_eq!(ps[1], QMatrix::diagonal(&[QScalar::zero(), QScalar::one()]));
    }

    #[test]
    fn spectral_idempotents_reject_wrong_spectrum() {
        let d = QMatrix::diagonal(&[QScalar::int(2), QScalar::int(5)]);
        let err = d.spectral_idempotents(&[QScalar::int(2), QScalar::int(4)]);
        assert!(matches!(err, Err(Error::MinimalPolynomial { .. })));
        let err = d.spectral_idempotents(&[QScalar::int(2), QScalar::int(2)]);
        assert!(matches!(err, Err(Error::BadEigenvalues(..))));
    }

    #[test]
    fn json_round_trip() {
        let a = QMatrix::from_rows(vec![
            vec![QScalar::ratio(1, 3), QScalar::int(-2)],
            vec![QScalar::zero(), QScalar::ratio(-81, 625)],
        ]);
        let v = a.to_json_value();
        assert_eq!(QMatrix::from_json_value(&v).unwrap(), a);
        let csv = a.to_csv();
        assert_eq!(QMatrix::from_csv(&csv).unwrap(), a);
    }

    #[test]
    fn solve_in_basis_recovers_coordinates() {
        let basis = QMatrix::from_rows(vec![
            vec![QScalar::int(1), QScalar::int(0)],
            vec![QScalar::int(1), QScalar::int(1)],
            vec![QScalar::int(0), QScalar::int(2)],
        ]);
        let x = m2(3, 1, -1, 2);
        let images = &basis * &x;
        let solved = QMatrix::solve_in_basis(&basis, &images).unwrap();
        assert_eq!(solved, x);
    }
}
