//! Exact scalar arithmetic over the two supported coefficient fields:
//! arbitrary-precision rationals and prime fields F_p.
//!
//! Every value is exact; there is no floating point anywhere in this crate.
//! Rationals are kept in lowest terms with a positive denominator (the
//! representation `num::BigRational` maintains on construction), and mod-p
//! residues are always reduced into `[0, p)` with `p` verified prime when the
//! field is constructed.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};

/// Descriptor of a coefficient field: the rationals or F_p for a prime p.
///
/// Serializes as `"Q"` or `{"Fp": p}`, which is also the wire form used by
/// the matrix JSON format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl FieldSpec {
    /// Builds an F_p descriptor, rejecting non-prime moduli.
    pub fn fp(p: u64) -> Result<FieldSpec> {
        if is_prime(p) {
            Ok(FieldSpec::Fp(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rational(BigRational::zero()),
            FieldSpec::Fp(p) => Scalar::ModP {
                residue: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rational(BigRational::one()),
            FieldSpec::Fp(p) => Scalar::ModP {
                residue: 1 % *p,
                modulus: *p,
            },
        }
    }

    /// Scalar from a signed integer, reduced into the field.
    pub fn from_i64(&self, value: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            FieldSpec::Fp(p) => {
                let p = *p;
                let r = value.rem_euclid(p as i64) as u64;
                Scalar::ModP {
                    residue: r,
                    modulus: p,
                }
            }
        }
    }

    /// Parses the text form of a scalar of this field: `"n"` or `"n/d"` for
    /// rationals, a decimal residue for F_p.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = |reason: &str| AlgebraError::BadScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        match self {
            FieldSpec::Q => {
                let (n, d) = match text.split_once('/') {
                    None => (text, "1"),
                    Some((n, d)) => (n, d),
                };
                let numer = BigInt::from_str(n.trim()).map_err(|e| bad(&e.to_string()))?;
                let denom = BigInt::from_str(d.trim()).map_err(|e| bad(&e.to_string()))?;
                if denom.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                Ok(Scalar::Rational(BigRational::new(numer, denom)))
            }
            FieldSpec::Fp(p) => {
                let value = i128::from_str(text).map_err(|e| bad(&e.to_string()))?;
                let r = value.rem_euclid(*p as i128) as u64;
                Ok(Scalar::ModP {
                    residue: r,
                    modulus: *p,
                })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "F_{p}"),
        }
    }
}

/// An exact field element: a reduced rational or a reduced residue mod p.
///
/// Arithmetic between scalars of different fields is a programming error and
/// panics; the matrix layer enforces a single field per matrix at
/// construction, and the CLI validates inputs before any arithmetic runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    ModP { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Q,
            Scalar::ModP { modulus, .. } => FieldSpec::Fp(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::ModP { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    fn expect_same_field(&self, other: &Scalar, op: &str) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar {op} across different fields ({} vs {})",
            self.field(),
            other.field()
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.expect_same_field(other, "add");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::ModP {
                    residue: a,
                    modulus: p,
                },
                Scalar::ModP { residue: b, .. },
            ) => Scalar::ModP {
                residue: add_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::ModP { residue, modulus } => Scalar::ModP {
                residue: if *residue == 0 { 0 } else { modulus - residue },
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.expect_same_field(other, "mul");
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::ModP {
                    residue: a,
                    modulus: p,
                },
                Scalar::ModP { residue: b, .. },
            ) => Scalar::ModP {
                residue: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::ModP { residue, modulus } => Scalar::ModP {
                residue: inv_mod(*residue, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Exact division. Errors on zero divisor or mismatched fields.
    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(AlgebraError::FieldMismatch(format!(
                "div of {} element by {} element",
                self.field(),
                other.field()
            )));
        }
        Ok(self.mul(&other.inverse()?))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::ModP { residue, .. } => write!(f, "{residue}"),
        }
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse mod a prime via the extended Euclidean algorithm.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} not invertible mod {p}");
    old_s.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin primality test, exact for all u64 inputs
/// with this witness set.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n.is_multiple_of(small) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
