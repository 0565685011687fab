//! Subspaces, projectors, and the operator-side characterizations of
//! (b,c)-invertibility: prescribed range/kernel projections and the
//! invertibility of a restricted map between ranges.
//!
//! Subspaces carry a canonical basis (the transposed nonzero rows of the
//! row-reduced transpose, i.e. a column-RREF basis), so equality of
//! subspaces is a bit-exact comparison and the set-equality conditions of
//! the operator characterizations are decidable.

use crate::bc::bc_invertible;
use crate::field::FieldSpec;
use crate::matrix::{kernel_basis, rref, solve_right, two_sided_inverse, Mat};

/// A subspace of the column space `F^n`, held as a canonical basis matrix
/// (`ambient_dim x dim`, full column rank).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
}

impl Subspace {
    /// The subspace spanned by the columns of `m`, canonicalized.
    pub fn from_columns(m: &Mat) -> Subspace {
        let reduced = rref(&m.transpose());
        let r = reduced.pivots.len();
        let basis = Mat::from_fn(m.field(), m.rows(), r, |row, j| {
            reduced.reduced.get(j, row).clone()
        });
        Subspace {
            ambient_dim: m.rows(),
            basis,
        }
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace::from_columns(&Mat::zeros(field, ambient_dim, 1))
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace::from_columns(&Mat::identity(field, ambient_dim))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    fn expect_same_ambient(&self, other: &Subspace, op: &str) {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "{op}: ambient dimensions differ"
        );
        assert_eq!(self.field(), other.field(), "{op}: fields differ");
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.expect_same_ambient(other, "sum");
        Subspace::from_columns(&self.basis.hstack(&other.basis))
    }

    /// Exact intersection, via the kernel of `[U | -V]`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.expect_same_ambient(other, "intersect");
        let stacked = self.basis.hstack(&other.basis.neg());
        let kernel = kernel_basis(&stacked);
        let top = Mat::from_fn(self.field(), self.dim(), kernel.cols(), |r, c| {
            kernel.get(r, c).clone()
        });
        let vectors = self.basis.mul(&top);
        if vectors.cols() == 0 {
            Subspace::zero(self.field(), self.ambient_dim)
        } else {
            Subspace::from_columns(&vectors)
        }
    }

    /// Whether `self + other` is a direct-sum decomposition of the ambient
    /// space: dimensions add up to the ambient one and the intersection is
    /// trivial.
    pub fn is_complementary(&self, other: &Subspace) -> bool {
        self.expect_same_ambient(other, "is_complementary");
        self.dim() + other.dim() == self.ambient_dim && self.intersect(other).dim() == 0
    }
}

/// An idempotent with prescribed range and kernel.
#[derive(Debug, Clone)]
pub struct Projector {
    pub matrix: Mat,
    pub range: Subspace,
    pub kernel: Subspace,
}

pub fn range_of(m: &Mat) -> Subspace {
    Subspace::from_columns(m)
}

pub fn nullspace_of(m: &Mat) -> Subspace {
    let k = kernel_basis(m);
    if k.cols() == 0 {
        Subspace::zero(m.field(), m.cols())
    } else {
        Subspace::from_columns(&k)
    }
}

/// The unique idempotent with range `onto` and kernel `along`, when the two
/// are complementary; `None` otherwise. Built by solving
/// `P * [basis(onto) | basis(along)] = [basis(onto) | 0]`.
pub fn projector_onto_along(onto: &Subspace, along: &Subspace) -> Option<Projector> {
    if !onto.is_complementary(along) {
        return None;
    }
    let field = onto.field();
    let n = onto.ambient_dim();
    let combined = onto.basis().hstack(along.basis());
    let target = onto
        .basis()
        .hstack(&Mat::zeros(field, n, along.dim()));
    let inv = two_sided_inverse(&combined).expect("complementary bases stack to an invertible matrix");
    let p = target.mul(&inv);
    assert_eq!(p.mul(&p), p, "constructed projector is not idempotent");
    debug_assert_eq!(&range_of(&p), onto);
    debug_assert_eq!(&nullspace_of(&p), along);
    Some(Projector {
        matrix: p,
        range: onto.clone(),
        kernel: along.clone(),
    })
}

/// The three equivalent operator-side conditions for (b,c)-invertibility of
/// square matrices, evaluated independently.
#[derive(Debug, Clone)]
pub struct ProjectionCriteria {
    /// `N(B) = N(CAB)` and `R(C) = R(CAB)`.
    pub invertible: bool,
    /// (b,c)-polarity, decided by the ring-side machinery.
    pub polar: bool,
    /// Projections with `R(P) = R(B), N(P) = N(CA)` and
    /// `R(Q) = R(AB), N(Q) = N(C)` exist.
    pub projections: bool,
    pub p: Option<Projector>,
    pub q: Option<Projector>,
}

/// Evaluates the three characterizations for a square triple `(a, b, c)`.
/// When all three hold, the constructed projectors coincide with the
/// spectral idempotents of [`crate::bc::bc_inverse`].
pub fn projection_criteria(a: &Mat, b: &Mat, c: &Mat) -> ProjectionCriteria {
    let cab = c.mul(a).mul(b);
    let invertible = nullspace_of(b) == nullspace_of(&cab) && range_of(c) == range_of(&cab);

    let polar = bc_invertible(a, b, c);

    let ca = c.mul(a);
    let ab = a.mul(b);
    let p = projector_onto_along(&range_of(b), &nullspace_of(&ca));
    let q = projector_onto_along(&range_of(&ab), &nullspace_of(c));
    let projections = p.is_some() && q.is_some();

    ProjectionCriteria {
        invertible,
        polar,
        projections,
        p,
        q,
    }
}

/// The four equivalent conditions for invertibility along an element,
/// each evaluated through a different route.
#[derive(Debug, Clone)]
pub struct RestrictionCriteria {
    /// Membership route: `b in R*bab` and `b in bab*R`.
    pub invertible_along: bool,
    /// Polarity route: the projector onto `R(B)` along `N(BA)` exists,
    /// commutes with `BA`, fixes `B`, and shifts to a unit `1 + BA - P`.
    pub polar_along: bool,
    /// Projection route: `N(AB) = N(B)`, `R(BA) = R(B)`, and the projector
    /// onto `R(AB)` along `N(B)` exists. (These are the set equalities
    /// `b = y a b` and `b = b a y` actually force; prescribing `N(BA)` and
    /// `R(AB)` instead breaks the equivalence, e.g. for
    /// `a = [[0,3],[0,0]]`, `b = [[3,-3],[3,-3]]`.)
    pub projection: bool,
    /// Restriction route: `R(AB) + N(B)` is a direct sum and the restricted
    /// map `A : R(B) -> R(AB)` has an invertible coordinate matrix.
    pub restriction: bool,
}

/// Evaluates the four characterizations of invertibility along `b`.
pub fn restriction_criteria(a: &Mat, b: &Mat) -> RestrictionCriteria {
    let invertible_along = bc_invertible(a, b, b);

    let ba = b.mul(a);
    let polar_along = match projector_onto_along(&range_of(b), &nullspace_of(&ba)) {
        None => false,
        Some(proj) => {
            let p = &proj.matrix;
            let id = Mat::identity(a.field(), a.rows());
            p.mul(&ba) == ba.mul(p)
                && p.mul(b) == *b
                && two_sided_inverse(&id.add(&ba).sub(p)).is_some()
        }
    };

    let ab = a.mul(b);
    let projection = nullspace_of(&ab) == nullspace_of(b)
        && range_of(&ba) == range_of(b)
        && projector_onto_along(&range_of(&ab), &nullspace_of(b)).is_some();

    let restriction = {
        let range_b = range_of(b);
        let range_ab = range_of(&ab);
        if !range_ab.is_complementary(&nullspace_of(b)) {
            false
        } else {
            // coordinate matrix M with A * basis(R(B)) = basis(R(AB)) * M
            let image = a.mul(range_b.basis());
            match solve_right(range_ab.basis(), &image) {
                None => false,
                Some(m) => m.is_square() && two_sided_inverse(&m).is_some(),
            }
        }
    };

    RestrictionCriteria {
        invertible_along,
        polar_along,
        projection,
        restriction,
    }
}

/// The 2x2 block representation of `a` relative to the range/kernel
/// decompositions induced by the two projectors, reported for debugging
/// alongside the projection criteria.
pub fn block_representation(a: &Mat, p: &Mat, q: &Mat) -> [Mat; 4] {
    let id = Mat::identity(a.field(), a.rows());
    let iq = id.sub(q);
    let ip = id.sub(p);
    [
        q.mul(a).mul(p),
        q.mul(a).mul(&ip),
        iq.mul(a).mul(p),
        iq.mul(a).mul(&ip),
    ]
}
