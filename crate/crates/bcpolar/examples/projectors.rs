//! Operator-side view: projections with prescribed range and kernel, the
//! three equivalent characterizations of (B,C)-invertibility, the four
//! characterizations of invertibility along B, and the 2x2 block picture.
//!
//! Run with: cargo run --example projectors

use bcpolar::bc::bc_inverse;
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;
use bcpolar::subspace::{
    block_representation, nullspace_of, projection_criteria, projector_onto_along, range_of,
    restriction_criteria, Subspace,
};

fn main() {
    let q = FieldSpec::Q;

    // a projector with prescribed range and kernel
    let onto = Subspace::from_columns(&Mat::from_i64(q, &[&[1], &[1]]));
    let along = Subspace::from_columns(&Mat::from_i64(q, &[&[0], &[1]]));
    let p = projector_onto_along(&onto, &along).expect("complementary subspaces");
    println!("projector onto span(1,1) along span(0,1) = {}", p.matrix);

    // the three equivalent conditions, plus equality of the constructed
    // projections with the spectral idempotents
    let a = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let b = Mat::from_i64(q, &[&[1, -1], &[0, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 1]]);
    let crit = projection_criteria(&a, &b, &c);
    println!(
        "N(B)=N(CAB) & R(C)=R(CAB): {} | polar: {} | projections exist: {}",
        crit.invertible, crit.polar, crit.projections
    );
    let base = bc_inverse(&a, &b, &c).unwrap();
    let pp = crit.p.unwrap();
    let qq = crit.q.unwrap();
    assert_eq!(pp.matrix, base.p);
    assert_eq!(qq.matrix, base.q);
    println!("constructed P, Q equal the spectral idempotents p, q");

    println!(
        "R(P) basis = {}  N(P) basis = {}",
        range_of(&pp.matrix).basis(),
        nullspace_of(&pp.matrix).basis()
    );

    // block representation of a relative to the two decompositions
    let blocks = block_representation(&a, &base.p, &base.q);
    println!("QAP = {}", blocks[0]);
    println!("(I-Q)A(I-P) = {}", blocks[3]);

    // the four equivalent conditions for invertibility along an element
    let m = Mat::from_i64(q, &[&[0, 3], &[0, 0]]);
    let d = Mat::from_i64(q, &[&[3, -3], &[3, -3]]);
    let rcrit = restriction_criteria(&m, &d);
    println!(
        "along-element criteria: membership {} | polar {} | projection {} | restriction {}",
        rcrit.invertible_along, rcrit.polar_along, rcrit.projection, rcrit.restriction
    );
}
