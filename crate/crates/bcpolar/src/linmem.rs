//! Linear membership machinery: sandwich equations `B * X * C = P` and
//! commutant bases.
//!
//! Membership of `P` in a set like `bRca` is exactly solvability of the
//! sandwich equation `b * X * (ca) = P`, which is linear in the entries of
//! `X`. Everything here vectorizes with the fixed column-stacking convention
//! `vec(B X C) = (C^T kron B) vec(X)` and reuses the canonical matrix
//! solvers, so witnesses are deterministic and reproducible.

use crate::matrix::{kernel_basis, solve_right, Mat};

/// A verified solution of `B * X * C = P`.
///
/// The witness re-checks its own equation on construction; an instance of
/// this type is proof that the membership holds.
#[derive(Debug, Clone)]
pub struct SandwichWitness {
    pub x: Mat,
    pub b: Mat,
    pub c: Mat,
    pub p: Mat,
}

impl SandwichWitness {
    fn new(x: Mat, b: &Mat, c: &Mat, p: &Mat) -> SandwichWitness {
        assert_eq!(
            &b.mul(&x).mul(c),
            p,
            "sandwich witness failed its defining equation"
        );
        SandwichWitness {
            x,
            b: b.clone(),
            c: c.clone(),
            p: p.clone(),
        }
    }
}

/// Canonical solution of `B * X * C = P`, or `None` exactly when no solution
/// exists. `B` is `n x k`, `C` is `l x m`, `P` is `n x m`, the unknown `X`
/// is `k x l`.
pub fn solve_sandwich(b: &Mat, c: &Mat, p: &Mat) -> Option<SandwichWitness> {
    assert_eq!(b.rows(), p.rows(), "solve_sandwich: B/P row mismatch");
    assert_eq!(c.cols(), p.cols(), "solve_sandwich: C/P column mismatch");
    let system = c.transpose().kron(b);
    let x = solve_right(&system, &p.vec_col())?;
    let x = x.unvec_col(b.cols(), c.rows());
    Some(SandwichWitness::new(x, b, c, p))
}

/// Whether `P` lies in the set `{ B x C : x in R }`.
pub fn in_set(p: &Mat, b: &Mat, c: &Mat) -> bool {
    solve_sandwich(b, c, p).is_some()
}

/// Basis of the commutant `{ X : A X = X A }` of a square matrix, obtained
/// as the kernel of the vectorized commutator map.
pub fn commutant_basis(a: &Mat) -> Vec<Mat> {
    assert!(a.is_square(), "commutant of a non-square matrix");
    let n = a.rows();
    let id = Mat::identity(a.field(), n);
    // vec(AX - XA) = (I kron A - A^T kron I) vec(X)
    let commutator = id.kron(a).sub(&a.transpose().kron(&id));
    let kernel = kernel_basis(&commutator);
    (0..kernel.cols())
        .map(|j| kernel.column(j).unvec_col(n, n))
        .collect()
}

/// Whether `P` commutes with everything that commutes with `A`. By
/// linearity it is enough to test `P` against a basis of the commutant,
/// which is what makes the double-commutant condition decidable in a
/// finite-dimensional algebra.
pub fn in_double_commutant(p: &Mat, a: &Mat) -> bool {
    assert!(p.is_square() && a.is_square(), "double commutant needs square matrices");
    assert_eq!(p.rows(), a.rows(), "double commutant: size mismatch");
    commutant_basis(a)
        .iter()
        .all(|y| p.mul(y) == y.mul(p))
}
