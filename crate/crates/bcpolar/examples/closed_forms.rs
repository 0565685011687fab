//! Closed-form routes to the same inverse: the one-sided-unit expressions,
//! and under commutation hypotheses the shifted-inverse forms plus all
//! eight group-inverse expressions.
//!
//! Run with: cargo run --example closed_forms

use bcpolar::bc::{bc_inverse, closed_form_inverse, commuting_forms, power_polar};
use bcpolar::classic::drazin;
use bcpolar::field::FieldSpec;
use bcpolar::matrix::Mat;
use bcpolar::suite::{generate_instance, Family, SplitMix64};

fn main() {
    let q = FieldSpec::Q;
    let a = Mat::from_i64(q, &[&[0, 0], &[1, 0]]);
    let b = Mat::from_i64(q, &[&[1, -1], &[0, 0]]);
    let c = Mat::from_i64(q, &[&[0, 1], &[0, 1]]);

    let (left, right) = closed_form_inverse(&a, &b, &c).expect("invertible triple");
    println!("one-sided-unit closed forms agree: {}", left == right);
    println!("y = {left}");

    // commuting instance: b = c = a^k for a matrix with nontrivial index
    let m = Mat::from_i64(q, &[&[0, 1, 0], &[0, 0, 0], &[0, 0, 3]]);
    let k = drazin(&m).index;
    let d = m.pow(k);
    let forms = commuting_forms(&m, &d, &d).expect("powers satisfy the hypotheses");
    println!("shifted forms equal a^D: {}", forms.y_bc == drazin(&m).d_inverse);
    println!(
        "eight group-inverse expressions agree: {}",
        forms.group_forms_bc.iter().all(|f| *f == forms.y_bc)
            && forms.group_forms_cb.iter().all(|f| *f == forms.y_cb)
    );

    // a searched F_7 instance with b != c
    let f7 = FieldSpec::Fp(7);
    let mut rng = SplitMix64::new(8);
    let found = loop {
        let inst = generate_instance(Family::CommutingPolynomial, f7, 3, &mut rng);
        if inst.b == inst.c {
            continue;
        }
        let aba = inst.a.mul(&inst.b).mul(&inst.a);
        let aca = inst.a.mul(&inst.c).mul(&inst.a);
        if aba.mul(&inst.c) != inst.c.mul(&aba) || aca.mul(&inst.b) != inst.b.mul(&aca) {
            continue;
        }
        if let Some(forms) = commuting_forms(&inst.a, &inst.b, &inst.c) {
            break (inst, forms);
        }
    };
    let (inst, forms) = found;
    println!("searched F_7 instance with b != c:");
    println!("a = {}", inst.a);
    println!("b = {}", inst.b);
    println!("c = {}", inst.c);
    println!("a^(b,c) = {}", forms.y_bc);
    println!("a^(c,b) = {}", forms.y_cb);

    // powers of a polar element stay polar with the same idempotents
    let base = bc_inverse(&m, &d, &d).unwrap();
    for k in [2usize, 3] {
        let powered = power_polar(&m, &d, &d, k).expect("hypotheses hold");
        assert_eq!(powered.p, base.p);
        assert_eq!(powered.q, base.q);
    }
    println!("idempotents of (a^k, b^k, c^k) match the base instance for k = 2, 3");
}
