//! Closed forms of `F1/n - F2/m` for the bicyclic family with `3x + 6`
//! vertices and the family of cycle rank `k` with
//! `kx + 2k + 1` vertices and `kx + 3k` edges. Evaluated in
//! exact rational arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::indices::Sign;

/// Reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn sign(&self) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        RationalValue(BigRational::new(numer.into(), denom.into()))
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn int(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn frac(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// `(-x^3/2 + 31x^2 + 173x + 55) / ((3x + 6)(3x + 7))`.
pub fn bicyclic_delta_formula(x: u64) -> RationalValue {
    let x = int(x);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let num = frac(-1, 2) * x3 + int(31) * x2 + int(173) * &x + int(55);
    let den = (int(3) * &x + int(6)) * (int(3) * &x + int(7));
    RationalValue(num / den)
}

/// `((-k^2/6 - 26k/3) x^3 + (8k^2 - 54k) x^2 + (121k^2/6 - 226k/3) x
///   + 12k^2 - 30k) / ((kx + 3k)(kx + 2k + 1))`, for `k >= 3`.
pub fn multicyclic_delta_formula(k: u64, x: u64) -> Result<RationalValue> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "multicyclic formula needs k >= 3, got {k}"
        )));
    }
    let kk = int(k);
    let k2 = &kk * &kk;
    let x = int(x);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let c3 = frac(-1, 6) * &k2 - frac(26, 3) * &kk;
    let c2 = int(8) * &k2 - int(54) * &kk;
    let c1 = frac(121, 6) * &k2 - frac(226, 3) * &kk;
    let c0 = int(12) * &k2 - int(30) * &kk;
    let num = c3 * x3 + c2 * x2 + c1 * &x + c0;
    let den = (&kk * &x + int(3) * &kk) * (&kk * &x + int(2) * &kk + int(1));
    Ok(RationalValue(num / den))
}
