//! Compute a (b,c)-inverse with its two spectral idempotents and check the
//! defining identities by hand.
//!
//! Run with: cargo run --example bc_inverse

use bcpolar::bc::{bc_inverse, bc_invertible, verify_bc_polar};
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;

fn main() {
    let q = FieldSpec::Q;
    let a = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let b = Mat::from_i64(q, &[&[1, -1], &[0, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 1]]);

    println!("a = {a}");
    println!("b = {b}");
    println!("c = {c}");
    println!("(b,c)-invertible: {}", bc_invertible(&a, &b, &c));

    let out = bc_inverse(&a, &b, &c).expect("this triple is (b,c)-invertible");
    println!("y = a^(b,c) = {}", out.y);
    println!("left spectral idempotent  p = ya = {}", out.p);
    println!("right spectral idempotent q = ay = {}", out.q);

    // the defining equations, re-checked explicitly
    assert_eq!(out.y.mul(&a).mul(&b), b);
    assert_eq!(c.mul(&a).mul(&out.y), c);
    assert_eq!(out.p.mul(&b), b);
    assert_eq!(c.mul(&out.q), c);
    println!("yab = b, cay = c, pb = b, cq = c: all exact");

    // and the full polarity conditions through the public checker
    println!(
        "verify_bc_polar(a, b, c, p, q) = {}",
        verify_bc_polar(&a, &b, &c, &out.p, &out.q)
    );

    // a pair that is NOT the spectral pair is rejected
    println!(
        "swapped idempotents accepted: {}",
        verify_bc_polar(&a, &b, &c, &out.q, &out.p)
    );
}
