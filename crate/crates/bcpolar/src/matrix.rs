//! Dense exact matrices over a single coefficient field, with row reduction,
//! rank factorization, canonical linear solvers, kernels, and one-sided
//! inverses.
//!
//! Conventions that the rest of the crate leans on:
//!
//! * Every solver zeroes the free variables, so each computed object is
//!   deterministic and golden tests are possible.
//! * Pivoting picks the first nonzero entry in column order; arithmetic is
//!   exact so no magnitude pivoting is needed.
//! * Matrices with zero rows or zero columns are first class. The product of
//!   an `n x 0` and a `0 x m` matrix is the `n x m` zero matrix, which lets
//!   rank-0 edge cases flow through rank factorization without special cases.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::field::{FieldSpec, Scalar};

/// Dense row-major matrix over one exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                assert_eq!(s.field(), field, "entry ({r},{c}) from wrong field");
                entries.push(s);
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    /// Builds a matrix from rows of scalars, checking shape and field.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(AlgebraError::FieldMismatch(format!(
                        "entry of field {} in a {} matrix",
                        s.field(),
                        field
                    )));
                }
                entries.push(s);
            }
        }
        Ok(Mat {
            rows: nrows,
            cols: ncols,
            field,
            entries,
        })
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Mat {
        let ncols = rows.first().map_or(0, |r| r.len());
        Mat::from_fn(field, rows.len(), ncols, |r, c| field.from_i64(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn expect_same_shape(&self, other: &Mat, op: &str) {
        assert_eq!(self.field, other.field, "{op}: field mismatch");
        assert!(
            self.rows == other.rows && self.cols == other.cols,
            "{op}: shape {}x{} vs {}x{}",
            self.rows,
            self.cols,
            other.rows,
            other.cols
        );
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.expect_same_shape(other, "add");
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.expect_same_shape(other, "sub");
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Mat {
        assert_eq!(self.field, k.field(), "scale: field mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: self.entries.iter().map(|a| a.mul(k)).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "mul: field mismatch");
        assert_eq!(
            self.cols, other.rows,
            "mul: inner dimensions {} vs {}",
            self.cols, other.rows
        );
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// Nonnegative matrix power; `pow(M, 0)` is the identity.
    pub fn pow(&self, exp: usize) -> Mat {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut acc = Mat::identity(self.field, self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "hstack: field mismatch");
        assert_eq!(self.rows, other.rows, "hstack: row counts differ");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "vstack: field mismatch");
        assert_eq!(self.cols, other.cols, "vstack: column counts differ");
        Mat::from_fn(self.field, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                other.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn column(&self, c: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, 1, |r, _| self.get(r, c).clone())
    }

    /// Copy of the listed columns, in order.
    pub fn select_columns(&self, indices: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, indices.len(), |r, j| {
            self.get(r, indices[j]).clone()
        })
    }

    /// Kronecker product, row-major blocks of `self[i,j] * other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field, "kron: field mismatch");
        Mat::from_fn(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
            |r, c| {
                let (r1, r2) = (r / other.rows, r % other.rows);
                let (c1, c2) = (c / other.cols, c % other.cols);
                self.get(r1, c1).mul(other.get(r2, c2))
            },
        )
    }

    /// Column-stacking vectorization: an `n x m` matrix becomes an `nm x 1`
    /// column, column after column.
    pub fn vec_col(&self) -> Mat {
        Mat::from_fn(self.field, self.rows * self.cols, 1, |i, _| {
            self.get(i % self.rows, i / self.rows).clone()
        })
    }

    /// Inverse of [`Mat::vec_col`] for the given target shape.
    pub fn unvec_col(&self, rows: usize, cols: usize) -> Mat {
        assert_eq!(self.cols, 1, "unvec_col expects a column vector");
        assert_eq!(self.rows, rows * cols, "unvec_col: size mismatch");
        Mat::from_fn(self.field, rows, cols, |r, c| {
            self.get(c * rows + r, 0).clone()
        })
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                let row: Vec<String> =
                    (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                format!("[{}]", row.join(", "))
            })
            .collect();
        write!(
            f,
            "Mat({}x{} over {}: [{}])",
            self.rows,
            self.cols,
            self.field,
            rows.join(", ")
        )
    }
}

/// Outcome of Gauss-Jordan elimination: `transform * input = reduced`,
/// with `reduced` in reduced row echelon form and `transform` invertible.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
    pub transform: Mat,
}

/// Full-rank factorization `F * G` of a matrix: `F` has full column rank
/// (the pivot columns of the input), `G` full row rank (the nonzero rows of
/// the RREF).
#[derive(Debug, Clone)]
pub struct RankFactorization {
    pub f: Mat,
    pub g: Mat,
    pub rank: usize,
}

/// Reduced row echelon form with the accumulated row transform.
pub fn rref(m: &Mat) -> Rref {
    let mut r = m.clone();
    let mut e = Mat::identity(m.field, m.rows);
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..r.cols {
        if pivot_row == r.rows {
            break;
        }
        // first nonzero entry in this column at or below pivot_row
        let Some(src) = (pivot_row..r.rows).find(|&i| !r.get(i, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            swap_rows(&mut r, src, pivot_row);
            swap_rows(&mut e, src, pivot_row);
        }
        let inv = r.get(pivot_row, col).inverse().expect("pivot is nonzero");
        scale_row(&mut r, pivot_row, &inv);
        scale_row(&mut e, pivot_row, &inv);
        for i in 0..r.rows {
            if i == pivot_row || r.get(i, col).is_zero() {
                continue;
            }
            let factor = r.get(i, col).clone();
            sub_scaled_row(&mut r, i, pivot_row, &factor);
            sub_scaled_row(&mut e, i, pivot_row, &factor);
        }
        pivots.push(col);
        pivot_row += 1;
    }
    Rref {
        reduced: r,
        pivots,
        transform: e,
    }
}

fn swap_rows(m: &mut Mat, a: usize, b: usize) {
    for c in 0..m.cols {
        let ia = a * m.cols + c;
        let ib = b * m.cols + c;
        m.entries.swap(ia, ib);
    }
}

fn scale_row(m: &mut Mat, row: usize, k: &Scalar) {
    for c in 0..m.cols {
        let v = m.get(row, c).mul(k);
        m.set(row, c, v);
    }
}

fn sub_scaled_row(m: &mut Mat, target: usize, source: usize, k: &Scalar) {
    for c in 0..m.cols {
        let v = m.get(target, c).sub(&m.get(source, c).mul(k));
        m.set(target, c, v);
    }
}

pub fn rank(m: &Mat) -> usize {
    rref(m).pivots.len()
}

/// Canonical solution of `A * X = B`, free variables zeroed.
/// `None` exactly when the system is unsolvable.
pub fn solve_right(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.field, b.field, "solve_right: field mismatch");
    assert_eq!(a.rows, b.rows, "solve_right: row counts differ");
    let Rref {
        reduced,
        pivots,
        transform,
    } = rref(a);
    let rhs = transform.mul(b);
    // consistency: zero rows of the reduced matrix must face zero rhs rows
    for r in pivots.len()..reduced.rows {
        for c in 0..rhs.cols {
            if !rhs.get(r, c).is_zero() {
                return None;
            }
        }
    }
    let mut x = Mat::zeros(a.field, a.cols, b.cols);
    for (i, &col) in pivots.iter().enumerate() {
        for c in 0..rhs.cols {
            x.set(col, c, rhs.get(i, c).clone());
        }
    }
    Some(x)
}

/// Canonical solution of `X * A = B`; solved through the transpose so the
/// free-variable convention matches [`solve_right`].
pub fn solve_left(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.cols, b.cols, "solve_left: column counts differ");
    solve_right(&a.transpose(), &b.transpose()).map(|x| x.transpose())
}

/// Columns spanning the nullspace of `m`, linearly independent; an `n x 0`
/// matrix when the kernel is trivial.
pub fn kernel_basis(m: &Mat) -> Mat {
    let Rref {
        reduced, pivots, ..
    } = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    Mat::from_fn(m.field, m.cols, free.len(), |r, j| {
        let fc = free[j];
        if r == fc {
            m.field.one()
        } else if let Some(i) = pivots.iter().position(|&p| p == r) {
            reduced.get(i, fc).neg()
        } else {
            m.field.zero()
        }
    })
}

/// The pivot columns of `m`: a basis of its column space.
pub fn column_basis(m: &Mat) -> Mat {
    let pivots = rref(m).pivots;
    m.select_columns(&pivots)
}

/// Full-rank factorization from the pivot columns and the nonzero RREF rows.
pub fn rank_factorize(m: &Mat) -> RankFactorization {
    let Rref {
        reduced, pivots, ..
    } = rref(m);
    let r = pivots.len();
    let f = m.select_columns(&pivots);
    let g = Mat::from_fn(m.field, r, m.cols, |i, c| reduced.get(i, c).clone());
    RankFactorization { f, g, rank: r }
}

/// `L` with `L * f = I`, when `f` has full column rank. Computed by a direct
/// linear solve, never through Gram matrices, which can be singular over F_p
/// even for full-column-rank inputs.
pub fn left_inverse(f: &Mat) -> Option<Mat> {
    solve_left(f, &Mat::identity(f.field, f.cols))
}

/// `R` with `g * R = I`, when `g` has full row rank.
pub fn right_inverse(g: &Mat) -> Option<Mat> {
    solve_right(g, &Mat::identity(g.field, g.rows))
}

/// Two-sided inverse of a square matrix, or `None` when singular or
/// non-square.
pub fn two_sided_inverse(m: &Mat) -> Option<Mat> {
    if !m.is_square() {
        return None;
    }
    let Rref {
        reduced,
        pivots,
        transform,
    } = rref(m);
    if pivots.len() == m.rows {
        debug_assert_eq!(reduced, Mat::identity(m.field, m.rows));
        Some(transform)
    } else {
        None
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Wire form of a matrix: the field descriptor, explicit dimensions, and
/// entries as strings in the field's text format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn from_mat(m: &Mat) -> MatrixJson {
        MatrixJson {
            field: m.field(),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
                .collect(),
        }
    }

    /// Parses back into a matrix, validating the field (prime modulus), the
    /// declared dimensions, and every entry.
    pub fn to_mat(&self) -> Result<Mat> {
        if let FieldSpec::Fp(p) = self.field {
            FieldSpec::fp(p)?;
        }
        if self.entries.len() != self.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "declared {} rows, found {}",
                self.rows,
                self.entries.len()
            )));
        }
        if self.rows == 0 {
            return Ok(Mat::zeros(self.field, 0, self.cols));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "row {i} has {} entries, declared cols = {}",
                    row.len(),
                    self.cols
                )));
            }
            rows.push(
                row.iter()
                    .map(|text| self.field.parse_scalar(text))
                    .collect::<Result<Vec<Scalar>>>()?,
            );
        }
        Mat::from_rows(self.field, rows)
    }
}

macro_rules! mat_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Mat> for &Mat {
            type Output = Mat;
            fn $method(self, rhs: &Mat) -> Mat {
                Mat::$method(self, rhs)
            }
        }
    };
}

mat_binop!(Add, add);
mat_binop!(Sub, sub);
mat_binop!(Mul, mul);

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suite::SplitMix64;
    use proptest::prelude::*;

    const F7: FieldSpec = FieldSpec::Fp(7);

    fn f7_matrix() -> impl Strategy<Value = Mat> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(0i64..7, rows * cols).prop_map(move |entries| {
                let mut it = entries.into_iter();
                Mat::from_fn(F7, rows, cols, |_, _| F7.from_i64(it.next().unwrap()))
            })
        })
    }

    proptest! {
        #[test]
        fn rref_contract(m in f7_matrix()) {
            let out = rref(&m);
            prop_assert_eq!(out.transform.mul(&m), out.reduced.clone());
            prop_assert!(two_sided_inverse(&out.transform).is_some());
            prop_assert!(out.pivots.windows(2).all(|w| w[0] < w[1]));
            // pivot columns of the reduced matrix are unit vectors
            for (i, &col) in out.pivots.iter().enumerate() {
                for r in 0..out.reduced.rows() {
                    let expected = if r == i { F7.one() } else { F7.zero() };
                    prop_assert_eq!(out.reduced.get(r, col), &expected);
                }
            }
        }

        #[test]
        fn kernel_vectors_are_killed(m in f7_matrix()) {
            let k = kernel_basis(&m);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.cols(), m.cols() - rank(&m));
            prop_assert_eq!(rank(&k), k.cols());
        }
    }

    fn random_mat(field: FieldSpec, rows: usize, cols: usize, rng: &mut SplitMix64) -> Mat {
        Mat::from_fn(field, rows, cols, |_, _| match field {
            FieldSpec::Q => field.from_i64(rng.below(7) as i64 - 3),
            FieldSpec::Fp(p) => field.from_i64(rng.below(p) as i64),
        })
    }

    #[test]
    fn transpose_is_an_involution_and_antihomomorphism() {
        let mut rng = SplitMix64::new(11);
        let m = random_mat(F7, 3, 4, &mut rng);
        let n = random_mat(F7, 4, 2, &mut rng);
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.mul(&n).transpose(), n.transpose().mul(&m.transpose()));
        let m2 = random_mat(F7, 3, 4, &mut rng);
        assert_eq!(m.add(&m2).transpose(), m.transpose().add(&m2.transpose()));
    }

    #[test]
    fn operator_sugar_matches_methods() {
        let mut rng = SplitMix64::new(2);
        let a = random_mat(F7, 3, 3, &mut rng);
        let b = random_mat(F7, 3, 3, &mut rng);
        assert_eq!(&a + &b, a.add(&b));
        assert_eq!(&a - &b, a.sub(&b));
        assert_eq!(&a * &b, a.mul(&b));
        assert_eq!(-&a, a.neg());
    }

    #[test]
    fn pow_zero_is_identity() {
        let m = Mat::from_i64(F7, &[&[2, 1], &[0, 3]]);
        assert_eq!(m.pow(0), Mat::identity(F7, 2));
        assert_eq!(m.pow(1), m);
        assert_eq!(m.pow(3), m.mul(&m).mul(&m));
    }

    #[test]
    fn rref_of_identity_and_zero() {
        let id = Mat::identity(F7, 3);
        let out = rref(&id);
        assert_eq!(out.reduced, id);
        assert_eq!(out.pivots, vec![0, 1, 2]);
        assert_eq!(out.transform, id);

        let z = Mat::zeros(F7, 2, 3);
        let out = rref(&z);
        assert_eq!(out.reduced, z);
        assert!(out.pivots.is_empty());
        assert_eq!(out.transform, Mat::identity(F7, 2));
    }

    #[test]
    fn rref_worked_two_by_two() {
        // row reduction of [[1,-1],[0,0]] is itself, single pivot in column 0
        let b = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[0, 0]]);
        let out = rref(&b);
        assert_eq!(out.reduced, b);
        assert_eq!(out.pivots, vec![0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Mat::identity(F7, 4)), 4);
        assert_eq!(rank(&Mat::zeros(F7, 3, 3)), 0);
        // product c*a*b of the worked 2x2 instance has rank 1
        let cab = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[1, -1]]);
        assert_eq!(rank(&cab), 1);
    }

    #[test]
    fn solve_right_canonical_and_unsolvable() {
        let id = Mat::identity(F7, 3);
        let mut rng = SplitMix64::new(5);
        let b = random_mat(F7, 3, 2, &mut rng);
        assert_eq!(solve_right(&id, &b).unwrap(), b);

        let zero = Mat::zeros(F7, 2, 2);
        let target = Mat::from_i64(F7, &[&[1, 0], &[0, 0]]);
        assert_eq!(solve_right(&zero, &target), None);
        assert_eq!(solve_right(&zero, &Mat::zeros(F7, 2, 2)), Some(Mat::zeros(F7, 2, 2)));
    }

    #[test]
    fn solve_left_worked_instance() {
        // S with S*(cab) = b for the worked 2x2 matrices: same row space, rank 1
        let cab = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[1, -1]]);
        let b = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[0, 0]]);
        let s = solve_left(&cab, &b).expect("b lies in R*cab");
        assert_eq!(s.mul(&cab), b);
    }

    #[test]
    fn kernel_and_column_basis() {
        assert_eq!(kernel_basis(&Mat::identity(F7, 3)).cols(), 0);
        let m = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[0, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k, Mat::from_i64(FieldSpec::Q, &[&[1], &[1]]));
        assert!(m.mul(&k).is_zero());
        // zero product has empty column space
        let ab = Mat::zeros(FieldSpec::Q, 2, 2);
        assert_eq!(column_basis(&ab).cols(), 0);
    }

    #[test]
    fn rank_factorization_worked_instance() {
        let m = Mat::from_i64(FieldSpec::Q, &[&[1, -1], &[1, -1]]);
        let rf = rank_factorize(&m);
        assert_eq!(rf.rank, 1);
        assert_eq!(rf.f, Mat::from_i64(FieldSpec::Q, &[&[1], &[1]]));
        assert_eq!(rf.g, Mat::from_i64(FieldSpec::Q, &[&[1, -1]]));
        assert_eq!(rf.f.mul(&rf.g), m);

        let id = Mat::identity(F7, 3);
        let rf = rank_factorize(&id);
        assert_eq!(rf.f, id);
        assert_eq!(rf.g, id);

        let z = Mat::zeros(F7, 2, 3);
        let rf = rank_factorize(&z);
        assert_eq!(rf.rank, 0);
        assert_eq!(rf.f.cols(), 0);
        assert_eq!(rf.g.rows(), 0);
        assert_eq!(rf.f.mul(&rf.g), z);
    }

    #[test]
    fn one_sided_inverses() {
        assert_eq!(left_inverse(&Mat::identity(F7, 3)), Some(Mat::identity(F7, 3)));
        // canonical free-variable-zero left inverse of [[1],[1]]
        let f = Mat::from_i64(FieldSpec::Q, &[&[1], &[1]]);
        let l = left_inverse(&f).unwrap();
        assert_eq!(l, Mat::from_i64(FieldSpec::Q, &[&[1, 0]]));
        assert_eq!(l.mul(&f), Mat::identity(FieldSpec::Q, 1));

        let singular = Mat::from_i64(F7, &[&[1, 2], &[2, 4]]);
        assert_eq!(two_sided_inverse(&singular), None);
        let m = Mat::from_i64(F7, &[&[1, 2], &[3, 4]]);
        let inv = two_sided_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(F7, 2));
        assert_eq!(inv.mul(&m), Mat::identity(F7, 2));
    }

    #[test]
    fn rref_transform_is_always_invertible() {
        let mut rng = SplitMix64::new(99);
        for _ in 0..200 {
            let rows = 1 + rng.below(5) as usize;
            let cols = 1 + rng.below(5) as usize;
            let m = random_mat(F7, rows, cols, &mut rng);
            let out = rref(&m);
            assert_eq!(out.transform.mul(&m), out.reduced);
            assert!(two_sided_inverse(&out.transform).is_some());
        }
    }

    #[test]
    fn rank_identities_on_random_matrices() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..300 {
            let n = 1 + rng.below(5) as usize;
            let m = 1 + rng.below(5) as usize;
            let k = 1 + rng.below(5) as usize;
            let a = random_mat(F7, n, m, &mut rng);
            let b = random_mat(F7, m, k, &mut rng);
            assert_eq!(rank(&a), rank(&a.transpose()));
            assert!(rank(&a.mul(&b)) <= rank(&a).min(rank(&b)));
        }
    }

    #[test]
    fn rank_factorize_recomposes_on_random_f7_matrices() {
        let mut rng = SplitMix64::new(321);
        for _ in 0..1000 {
            let rows = 1 + rng.below(6) as usize;
            let cols = 1 + rng.below(6) as usize;
            let m = random_mat(F7, rows, cols, &mut rng);
            let rf = rank_factorize(&m);
            assert_eq!(rf.f.mul(&rf.g), m);
            assert_eq!(rank(&rf.f), rf.rank);
            assert_eq!(rank(&rf.g), rf.rank);
        }
    }

    #[test]
    fn solvability_matches_column_space_containment() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..300 {
            let n = 1 + rng.below(4) as usize;
            let m = 1 + rng.below(4) as usize;
            let k = 1 + rng.below(3) as usize;
            let a = random_mat(F7, n, m, &mut rng);
            let b = random_mat(F7, n, k, &mut rng);
            let solvable = solve_right(&a, &b).is_some();
            let contained = rank(&a.hstack(&b)) == rank(&a);
            assert_eq!(solvable, contained);
            if let Some(x) = solve_right(&a, &b) {
                assert_eq!(a.mul(&x), b);
            }
        }
    }

    #[test]
    fn matrix_json_roundtrip_and_validation() {
        let mut rng = SplitMix64::new(4);
        for field in [FieldSpec::Q, F7] {
            let m = random_mat(field, 3, 2, &mut rng);
            let json = MatrixJson::from_mat(&m);
            assert_eq!(json.to_mat().unwrap(), m);
            let text = serde_json::to_string(&json).unwrap();
            let back: MatrixJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_mat().unwrap(), m);
        }
        // wire form of the field tag
        let id = Mat::identity(F7, 1);
        let text = serde_json::to_string(&MatrixJson::from_mat(&id)).unwrap();
        assert_eq!(
            text,
            r#"{"field":{"Fp":7},"rows":1,"cols":1,"entries":[["1"]]}"#
        );

        let composite = MatrixJson {
            field: FieldSpec::Fp(6),
            rows: 1,
            cols: 1,
            entries: vec![vec!["1".into()]],
        };
        assert!(matches!(composite.to_mat(), Err(AlgebraError::NotPrime(6))));

        let ragged = MatrixJson {
            field: FieldSpec::Q,
            rows: 2,
            cols: 2,
            entries: vec![vec!["1".into(), "2".into()], vec!["3".into()]],
        };
        assert!(matches!(
            ragged.to_mat(),
            Err(AlgebraError::DimensionMismatch(_))
        ));

        let garbage = MatrixJson {
            field: FieldSpec::Q,
            rows: 1,
            cols: 1,
            entries: vec![vec!["one".into()]],
        };
        assert!(matches!(garbage.to_mat(), Err(AlgebraError::BadScalar { .. })));

        let zero_denominator = MatrixJson {
            field: FieldSpec::Q,
            rows: 1,
            cols: 1,
            entries: vec![vec!["1/0".into()]],
        };
        assert!(matches!(
            zero_denominator.to_mat(),
            Err(AlgebraError::DivisionByZero)
        ));

        // negative residues parse leniently and print canonically
        let negative = MatrixJson {
            field: F7,
            rows: 1,
            cols: 1,
            entries: vec![vec!["-1".into()]],
        };
        let m = negative.to_mat().unwrap();
        assert_eq!(MatrixJson::from_mat(&m).entries, vec![vec!["6".to_string()]]);
    }

    #[test]
    fn kron_and_vec_follow_column_stacking() {
        let mut rng = SplitMix64::new(88);
        for _ in 0..100 {
            let (n, k, l, m) = (
                1 + rng.below(3) as usize,
                1 + rng.below(3) as usize,
                1 + rng.below(3) as usize,
                1 + rng.below(3) as usize,
            );
            let b = random_mat(F7, n, k, &mut rng);
            let x = random_mat(F7, k, l, &mut rng);
            let c = random_mat(F7, l, m, &mut rng);
            // vec(B X C) = (C^T kron B) vec(X)
            let lhs = b.mul(&x).mul(&c).vec_col();
            let rhs = c.transpose().kron(&b).mul(&x.vec_col());
            assert_eq!(lhs, rhs);
            assert_eq!(x.vec_col().unvec_col(k, l), x);
        }
    }
}
