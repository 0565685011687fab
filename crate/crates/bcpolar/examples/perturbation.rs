//! The four equivalent conditions for a perturbation d to share the polar
//! data of a: evaluated independently, they always agree — all true for
//! idempotent-preserving perturbations, all false for violating ones.
//!
//! Run with: cargo run --example perturbation

use bcpolar::bc::{bc_inverse, perturbation_equiv};
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;

fn main() {
    let q = FieldSpec::Q;
    let a = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let b = Mat::from_i64(q, &[&[1, -1], &[0, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 1]]);
    let base = bc_inverse(&a, &b, &c).expect("a is (b,c)-polar");
    let id = Mat::identity(q, 2);

    let show = |name: &str, d: &Mat| {
        let verdicts = perturbation_equiv(&a, d, &b, &c).expect("a is polar");
        println!("{name}: {verdicts:?}");
        assert!(verdicts.iter().all(|&v| v == verdicts[0]), "blocks must agree");
    };

    show("d = a (reflexive)", &a);

    // (1-q) w (1-p) perturbations leave every condition intact
    let w = Mat::from_i64(q, &[&[3, 1], &[2, 5]]);
    let preserving = a.add(&id.sub(&base.q).mul(&w).mul(&id.sub(&base.p)));
    show("d = a + (1-q)w(1-p)", &preserving);

    // a one-sided perturbation that breaks cdp = cd
    let violating = a.add(&Mat::from_i64(q, &[&[1, 1], &[1, 2]]).mul(&id.sub(&base.p)));
    show("d = a + w(1-p)", &violating);

    // generic noise
    show("d = a + w", &a.add(&w));
}
