//! The classical generalized inverses and their (d,d)-inverse reductions:
//! group inverse (d = a), Drazin inverse (d = a^k), Moore-Penrose inverse
//! (d = a^T over the rationals).
//!
//! Run with: cargo run --example classical_inverses

use bcpolar::bc::inverse_along;
use bcpolar::classic::{drazin, group_inverse, moore_penrose, verify_polar};
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;

fn main() {
    let q = FieldSpec::Q;

    // a 2x2 nilpotent Jordan block glued to an invertible 1x1 block
    let a = Mat::from_i64(q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
    let dz = drazin(&a);
    println!("a = {a}");
    println!("Drazin index: {}", dz.index);
    println!("a^D = {}", dz.d_inverse);
    println!("spectral idempotent a^pi = {}", dz.spectral_idempotent);
    println!(
        "spectral idempotent passes the polarity check: {}",
        verify_polar(&a, &dz.spectral_idempotent)
    );

    // the Drazin inverse is the inverse along a^k at the index
    let along = inverse_along(&a, &a.pow(dz.index)).expect("invertible along a^k");
    assert_eq!(along.y, dz.d_inverse);
    println!("inverse along a^k equals a^D: true");

    // group inverse exists iff the rank of a and a^2 agree
    let g = Mat::from_i64(q, &[&[2, 0], &[0, 0]]);
    println!("group inverse of diag(2,0) = {}", group_inverse(&g).unwrap());
    let nil = Mat::from_i64(q, &[&[0, 1], &[0, 0]]);
    println!("group inverse of a nilpotent block: {:?}", group_inverse(&nil));

    // Moore-Penrose over the rationals, also reachable along a^T
    let m = Mat::from_i64(q, &[&[1, 1], &[1, 1]]);
    let pinv = moore_penrose(&m).unwrap();
    println!("Moore-Penrose inverse of the all-ones matrix = {pinv}");
    let along_t = inverse_along(&m, &m.transpose()).expect("invertible along a^T over Q");
    assert_eq!(along_t.y, pinv);
    println!("inverse along a^T equals the Moore-Penrose inverse: true");
}
