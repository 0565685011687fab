//! The two exact coefficient fields and the matrix substrate: rationals in
//! lowest terms, prime-field residues, row reduction with an invertible
//! transform, rank factorization, and canonical solvers.
//!
//! Run with: cargo run --example exact_fields

use bcpolar::field::FieldSpec;
use bcpolar::matrix::{rank_factorize, rref, solve_right, two_sided_inverse, Mat};

fn main() {
    let q = FieldSpec::Q;
    let half = q.parse_scalar("1/2").unwrap();
    let third = q.parse_scalar("1/3").unwrap();
    println!("1/2 + 1/3 = {}", half.add(&third));
    println!("2/4 normalizes to {}", q.parse_scalar("2/4").unwrap());

    let f7 = FieldSpec::fp(7).unwrap();
    let three = f7.from_i64(3);
    println!("3 * 5 mod 7 = {}", three.mul(&f7.from_i64(5)));
    println!("3^(-1) mod 7 = {}", three.inverse().unwrap());
    println!("F_6 is rejected: {:?}", FieldSpec::fp(6).unwrap_err());

    // exact row reduction: E m = R with E invertible
    let m = Mat::from_i64(q, &[&[2, 4, 1], &[1, 2, 0], &[0, 0, 3]]);
    let out = rref(&m);
    println!("rref = {}", out.reduced);
    println!("pivots = {:?}", out.pivots);
    assert_eq!(out.transform.mul(&m), out.reduced);
    assert!(two_sided_inverse(&out.transform).is_some());

    // rank factorization reproduces the matrix exactly
    let rf = rank_factorize(&m);
    println!("rank = {}", rf.rank);
    assert_eq!(rf.f.mul(&rf.g), m);

    // canonical solving zeroes the free variables
    let target = Mat::from_i64(q, &[&[2], &[1], &[3]]);
    match solve_right(&m, &target) {
        Some(x) => println!("canonical solution x = {x}"),
        None => println!("system unsolvable"),
    }
}
