//! Dual polarity: a triple where the (b,c)-inverse does not exist because
//! ab = 0, while the dual data (the (c,b)-inverse with idempotents r, s)
//! does, with r = s = a.
//!
//! Run with: cargo run --example dual_polarity

use bcpolar::bc::{bc_invertible, dual_bc_polar, involution_dual};
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;

fn main() {
    let q = FieldSpec::Q;
    let a = Mat::from_i64(q, &[&[1, 0], &[0, 0]]);
    let b = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 0]]);

    println!("ab = {}", a.mul(&b));
    println!("(b,c)-invertible: {}", bc_invertible(&a, &b, &c));

    let dual = dual_bc_polar(&a, &b, &c).expect("a is (c,b)-invertible");
    println!("(c,b)-inverse y = {}", dual.y);
    println!("dual right idempotent r = ay = {}", dual.r);
    println!("dual left idempotent  s = ya = {}", dual.s);
    assert_eq!(dual.r, a);
    assert_eq!(dual.s, a);
    println!("r = s = a, matching the dual polarity conditions");

    // under the transpose involution, polarity and dual polarity trade
    // places; the biconditional holds on every triple
    println!(
        "transpose duality biconditional: {}",
        involution_dual(&a, &b, &c)
    );
}
