//! Classical generalized inverses: inner inverses, the group inverse, the
//! Drazin inverse with its spectral idempotent, the Moore-Penrose inverse
//! over the rationals, and verification of (quasi)polarity.
//!
//! In a matrix algebra over a field every quasinilpotent is nilpotent, so
//! "polar" and "quasipolar" coincide; [`verify_polar`] is the single check
//! for both. The Jacobson radical of such an algebra is zero, which is why
//! no separate pseudopolar notion appears here.

use crate::error::{AlgebraError, Result};
use crate::field::FieldSpec;
use crate::linmem::in_double_commutant;
use crate::matrix::{
    kernel_basis, left_inverse, rank, rank_factorize, right_inverse, two_sided_inverse, Mat,
};
use crate::suite::SplitMix64;

/// Drazin inverse bundle: the inverse itself, the index, and the spectral
/// idempotent `I - a * a^D`.
#[derive(Debug, Clone)]
pub struct DrazinResult {
    pub d_inverse: Mat,
    pub index: usize,
    pub spectral_idempotent: Mat,
}

/// Canonical inner inverse `X` with `A X A = A`, built from the full-rank
/// factorization as `right_inverse(G) * left_inverse(F)`. Deterministic by
/// the free-variable-zero convention; the zero matrix maps to zero.
pub fn inner_inverse(a: &Mat) -> Mat {
    let rf = rank_factorize(a);
    let r = right_inverse(&rf.g).expect("G has full row rank");
    let l = left_inverse(&rf.f).expect("F has full column rank");
    let x = r.mul(&l);
    debug_assert_eq!(a.mul(&x).mul(a), *a);
    x
}

/// A second inner inverse, canonical for the transposed problem: the inner
/// inverse of `A^T`, transposed back. Valid over any field.
pub fn transposed_inner_inverse(a: &Mat) -> Mat {
    let x = inner_inverse(&a.transpose()).transpose();
    debug_assert_eq!(a.mul(&x).mul(a), *a);
    x
}

/// A randomized inner inverse: the canonical one plus a random element of
/// the homogeneous solution space `{ H : A H A = 0 }`. Used by the suite to
/// confirm that computed objects do not depend on the inner inverse chosen.
pub fn perturbed_inner_inverse(a: &Mat, rng: &mut SplitMix64) -> Mat {
    let x0 = inner_inverse(a);
    let system = a.transpose().kron(a);
    let kernel = kernel_basis(&system);
    let mut x = x0;
    for j in 0..kernel.cols() {
        let coeff = match a.field() {
            FieldSpec::Q => a.field().from_i64(rng.below(7) as i64 - 3),
            FieldSpec::Fp(p) => a.field().from_i64(rng.below(p) as i64),
        };
        if coeff.is_zero() {
            continue;
        }
        let h = kernel.column(j).unvec_col(a.cols(), a.rows());
        x = x.add(&h.scale(&coeff));
    }
    assert_eq!(a.mul(&x).mul(a), *a, "perturbed inner inverse is not inner");
    x
}

/// Group inverse `a^#`, which exists iff `rank(a) = rank(a^2)`. Computed as
/// `a * (a^3)^- * a` and verified against all three defining identities
/// before being returned.
pub fn group_inverse(a: &Mat) -> Option<Mat> {
    assert!(a.is_square(), "group inverse of a non-square matrix");
    if rank(a) != rank(&a.mul(a)) {
        return None;
    }
    let x = a.mul(&inner_inverse(&a.pow(3))).mul(a);
    assert_eq!(a.mul(&x).mul(a), *a, "group inverse: a x a = a failed");
    assert_eq!(x.mul(a).mul(&x), x, "group inverse: x a x = x failed");
    assert_eq!(a.mul(&x), x.mul(a), "group inverse: a x = x a failed");
    Some(x)
}

/// Drazin inverse, which always exists in a matrix algebra. The index is the
/// first exponent at which the rank of the powers stabilizes (with
/// `a^0 = I`), and the inverse is `a^k * (a^{2k+1})^- * a^k`.
pub fn drazin(a: &Mat) -> DrazinResult {
    assert!(a.is_square(), "Drazin inverse of a non-square matrix");
    let n = a.rows();
    let mut index = 0usize;
    let mut power = Mat::identity(a.field(), n);
    let mut r_prev = rank(&power);
    loop {
        let next = power.mul(a);
        let r_next = rank(&next);
        if r_next == r_prev {
            break;
        }
        power = next;
        r_prev = r_next;
        index += 1;
        assert!(index <= n, "rank must stabilize within the dimension");
    }
    let ak = a.pow(index);
    let x = ak.mul(&inner_inverse(&a.pow(2 * index + 1))).mul(&ak);
    assert_eq!(x.mul(a), a.mul(&x), "Drazin: commutation failed");
    assert_eq!(x.mul(a).mul(&x), x, "Drazin: outer identity failed");
    assert_eq!(a.pow(index + 1).mul(&x), ak, "Drazin: a^(k+1) x = a^k failed");
    let spectral = Mat::identity(a.field(), n).sub(&a.mul(&x));
    DrazinResult {
        d_inverse: x,
        index,
        spectral_idempotent: spectral,
    }
}

/// Moore-Penrose inverse over the rationals, via `A^T (A^T A A^T)^- A^T`;
/// the four defining identities are verified before returning. Over F_p the
/// Moore-Penrose inverse need not exist, so those inputs are rejected.
pub fn moore_penrose(a: &Mat) -> Result<Mat> {
    if a.field() != FieldSpec::Q {
        return Err(AlgebraError::RationalOnly("moore_penrose".into()));
    }
    let at = a.transpose();
    let x = at.mul(&inner_inverse(&at.mul(a).mul(&at))).mul(&at);
    assert_eq!(a.mul(&x).mul(a), *a, "Penrose identity 1 failed");
    assert_eq!(x.mul(a).mul(&x), x, "Penrose identity 2 failed");
    let ax = a.mul(&x);
    assert_eq!(ax.transpose(), ax, "Penrose identity 3 failed");
    let xa = x.mul(a);
    assert_eq!(xa.transpose(), xa, "Penrose identity 4 failed");
    Ok(x)
}

/// Whether `p` is a spectral-type idempotent for `a`: `p^2 = p`, `p` in the
/// double commutant of `a`, `a + p` invertible, and `a p` nilpotent. When it
/// holds, `p` is unique and equals `drazin(a).spectral_idempotent`.
pub fn verify_polar(a: &Mat, p: &Mat) -> bool {
    assert!(a.is_square() && p.is_square(), "verify_polar needs square matrices");
    assert_eq!(a.rows(), p.rows(), "verify_polar: size mismatch");
    if p.mul(p) != *p {
        return false;
    }
    if !in_double_commutant(p, a) {
        return false;
    }
    if two_sided_inverse(&a.add(p)).is_none() {
        return false;
    }
    a.mul(p).pow(a.rows()).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    const F7: FieldSpec = FieldSpec::Fp(7);
    const Q: FieldSpec = FieldSpec::Q;

    fn random_mat(field: FieldSpec, n: usize, rng: &mut SplitMix64) -> Mat {
        Mat::from_fn(field, n, n, |_, _| match field {
            FieldSpec::Q => field.from_i64(rng.below(7) as i64 - 3),
            FieldSpec::Fp(p) => field.from_i64(rng.below(p) as i64),
        })
    }

    #[test]
    fn inner_inverse_of_invertible_is_the_inverse() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let x = inner_inverse(&m);
        assert_eq!(m.mul(&x), Mat::identity(Q, 2));
        assert_eq!(m.mul(&x).mul(&m), m);
    }

    #[test]
    fn inner_inverse_of_zero_is_zero() {
        let z = Mat::zeros(F7, 3, 2);
        assert_eq!(inner_inverse(&z), Mat::zeros(F7, 2, 3));
    }

    #[test]
    fn inner_inverse_worked_rank_one() {
        let cab = Mat::from_i64(Q, &[&[1, -1], &[1, -1]]);
        let x = inner_inverse(&cab);
        assert_eq!(x, Mat::from_i64(Q, &[&[1, 0], &[0, 0]]));
        assert_eq!(cab.mul(&x).mul(&cab), cab);
    }

    #[test]
    fn group_inverse_examples() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(group_inverse(&m), two_sided_inverse(&m));

        let nilpotent = Mat::from_i64(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(group_inverse(&nilpotent), None);

        let d = Mat::from_i64(Q, &[&[2, 0], &[0, 0]]);
        let g = group_inverse(&d).unwrap();
        let half = Q.parse_scalar("1/2").unwrap();
        assert_eq!(g, Mat::from_fn(Q, 2, 2, |r, c| if r == 0 && c == 0 {
            half.clone()
        } else {
            Q.zero()
        }));
    }

    #[test]
    fn drazin_examples() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let d = drazin(&m);
        assert_eq!(d.index, 0);
        assert_eq!(Some(d.d_inverse.clone()), two_sided_inverse(&m));
        assert!(d.spectral_idempotent.is_zero());

        let nil = Mat::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let d = drazin(&nil);
        assert_eq!(d.index, 2);
        assert!(d.d_inverse.is_zero());
        assert_eq!(d.spectral_idempotent, Mat::identity(Q, 2));

        // block diagonal of a 2x2 nilpotent Jordan block and the 1x1 block 3
        let blk = Mat::from_i64(Q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
        let d = drazin(&blk);
        assert_eq!(d.index, 2);
        let third = Q.parse_scalar("1/3").unwrap();
        let expected = Mat::from_fn(Q, 3, 3, |r, c| {
            if r == 2 && c == 2 {
                third.clone()
            } else {
                Q.zero()
            }
        });
        assert_eq!(d.d_inverse, expected);
    }

    #[test]
    fn moore_penrose_examples() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(moore_penrose(&m).unwrap(), two_sided_inverse(&m).unwrap());

        let z = Mat::zeros(Q, 2, 3);
        assert_eq!(moore_penrose(&z).unwrap(), Mat::zeros(Q, 3, 2));

        let ones = Mat::from_i64(Q, &[&[1], &[1]]);
        let pinv = moore_penrose(&ones).unwrap();
        let half = Q.parse_scalar("1/2").unwrap();
        assert_eq!(pinv, Mat::from_fn(Q, 1, 2, |_, _| half.clone()));

        let fp = Mat::identity(F7, 2);
        assert!(matches!(
            moore_penrose(&fp),
            Err(AlgebraError::RationalOnly(_))
        ));
    }

    #[test]
    fn spectral_idempotent_passes_verify_polar() {
        let mut rng = SplitMix64::new(40);
        for _ in 0..60 {
            let n = 1 + rng.below(4) as usize;
            let a = random_mat(F7, n, &mut rng);
            let d = drazin(&a);
            assert!(verify_polar(&a, &d.spectral_idempotent));
        }
    }

    #[test]
    fn verify_polar_rejects_wrong_idempotents() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert!(verify_polar(&m, &Mat::zeros(Q, 2, 2)));
        // the identity fails: m * I is not nilpotent for this invertible m
        assert!(!verify_polar(&m, &Mat::identity(Q, 2)));
    }

    #[test]
    fn polar_idempotent_is_unique() {
        // any idempotent passing verify_polar equals the spectral idempotent
        let mut rng = SplitMix64::new(41);
        for _ in 0..40 {
            let a = random_mat(FieldSpec::Fp(2), 2, &mut rng);
            let expected = drazin(&a).spectral_idempotent;
            for code in 0..16u64 {
                let mut digits = code;
                let p = Mat::from_fn(FieldSpec::Fp(2), 2, 2, |_, _| {
                    let d = digits % 2;
                    digits /= 2;
                    FieldSpec::Fp(2).from_i64(d as i64)
                });
                if verify_polar(&a, &p) {
                    assert_eq!(p, expected);
                }
            }
        }
    }

    #[test]
    fn spectral_idempotent_independent_of_inner_inverse() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..50 {
            let n = 1 + rng.below(4) as usize;
            let a = random_mat(F7, n, &mut rng);
            let d = drazin(&a);
            let k = d.index;
            let ak = a.pow(k);
            let alt = ak
                .mul(&transposed_inner_inverse(&a.pow(2 * k + 1)))
                .mul(&ak);
            let spectral_alt = Mat::identity(F7, n).sub(&a.mul(&alt));
            assert_eq!(spectral_alt, d.spectral_idempotent);
        }
    }

    #[test]
    fn nilpotent_part_degree_matches_index() {
        // a * a^pi is nilpotent of degree exactly the index (degree 1 when
        // the index is 0 or 1, where the product is already zero)
        let mut rng = SplitMix64::new(45);
        for _ in 0..100 {
            let n = 1 + rng.below(4) as usize;
            let a = random_mat(F7, n, &mut rng);
            let d = drazin(&a);
            let nilpotent_part = a.mul(&d.spectral_idempotent);
            assert!(nilpotent_part.pow(d.index.max(1)).is_zero());
            if d.index >= 2 {
                assert!(!nilpotent_part.pow(d.index - 1).is_zero());
            }
        }
    }

    #[test]
    fn group_agrees_with_drazin_at_small_index() {
        let mut rng = SplitMix64::new(43);
        let mut seen = 0;
        for _ in 0..200 {
            let n = 1 + rng.below(4) as usize;
            let a = random_mat(F7, n, &mut rng);
            let d = drazin(&a);
            if d.index <= 1 {
                assert_eq!(group_inverse(&a), Some(d.d_inverse));
                seen += 1;
            } else {
                assert_eq!(group_inverse(&a), None);
            }
        }
        assert!(seen > 10);
    }

}
