//! Run the theorem-verification suite in process and print its report.
//!
//! Run with: cargo run --example theorem_suite

use bcpolar::field::FieldSpec;
use bcpolar::suite::run_suite;

fn main() {
    let report = run_suite(1, FieldSpec::Fp(7), 4, 50).expect("valid parameters");
    for prop in &report.properties {
        println!(
            "{:20} trials={:4} passes={:4} failures={} starved={}",
            prop.id, prop.trials, prop.passes, prop.failures, prop.starved
        );
    }
    println!(
        "total failures: {}, any starved: {}",
        report.failures_total, report.starved_any
    );
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
