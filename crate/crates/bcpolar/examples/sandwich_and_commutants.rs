//! The linear machinery underneath the polarity checks: sandwich equations
//! B X C = P (membership in sets like bRca), commutant bases, and the
//! double commutant.
//!
//! Run with: cargo run --example sandwich_and_commutants

use bcpolar::field::FieldSpec;
use bcpolar::linmem::{commutant_basis, in_double_commutant, in_set, solve_sandwich};
use bcpolar::matrix::Mat;

fn main() {
    let q = FieldSpec::Q;
    let a = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let b = Mat::from_i64(q, &[&[1, -1], &[0, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 1]]);
    let p = Mat::from_i64(q, &[&[1, 0], &[0, 0]]);

    // p in bRca, decided by solving b X (ca) = p
    let ca = c.mul(&a);
    let witness = solve_sandwich(&b, &ca, &p).expect("p lies in bRca");
    println!("witness X with b X (ca) = p: {}", witness.x);
    assert_eq!(b.mul(&witness.x).mul(&ca), p);

    // a target outside the set
    let outside = Mat::from_i64(q, &[&[0, 0], &[0, 1]]);
    println!("[[0,0],[0,1]] in bRca: {}", in_set(&outside, &b, &ca));

    // commutant of a diagonal matrix with distinct entries: the diagonals
    let d = Mat::from_i64(q, &[&[1, 0], &[0, 2]]);
    let basis = commutant_basis(&d);
    println!("dim comm(diag(1,2)) = {}", basis.len());
    for (i, x) in basis.iter().enumerate() {
        println!("basis[{i}] = {x}");
    }

    // the commutant of a nilpotent Jordan block is spanned by I and N
    let n = Mat::from_i64(q, &[&[0, 1], &[0, 0]]);
    println!("dim comm(J_2(0)) = {}", commutant_basis(&n).len());

    // double commutant membership: polynomials in a matrix always qualify
    println!(
        "a^2 in comm^2(a): {}",
        in_double_commutant(&a.mul(&a), &a)
    );
    let off = Mat::from_i64(q, &[&[0, 1], &[0, 0]]);
    println!(
        "[[0,1],[0,0]] in comm^2(diag(1,2)): {}",
        in_double_commutant(&off, &d)
    );
}
