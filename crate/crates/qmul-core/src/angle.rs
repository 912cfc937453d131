//! Exact dyadic phase angles.
//!
//! Every controlled phase in the QFT family has the form ±2π/2^k. Storing
//! the sign and the exponent keeps synthesis exact; the floating-point
//! value is only produced at gate-application time.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

/// A phase angle of exactly `sign · 2π / 2^denom_pow` radians.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAngle", into = "RawAngle")]
pub struct DyadicAngle {
    sign: i8,
    denom_pow: u32,
}

impl DyadicAngle {
    /// `+2π / 2^k`.
    pub fn positive(denom_pow: u32) -> Self {
        DyadicAngle {
            sign: 1,
            denom_pow,
        }
    }

    /// `-2π / 2^k`.
    pub fn negative(denom_pow: u32) -> Self {
        DyadicAngle {
            sign: -1,
            denom_pow,
        }
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    /// Same magnitude, opposite sign. Inverting a circuit negates its angles.
    pub fn negated(&self) -> Self {
        DyadicAngle {
            sign: -self.sign,
            denom_pow: self.denom_pow,
        }
    }

    /// Evaluate to radians. This is the only place the angle becomes a float.
    /// `0.5^k` is an exact power of two in f64, so no rounding accumulates
    /// beyond the single final multiply.
    pub fn radians(&self) -> f64 {
        let k = self.denom_pow.min(i32::MAX as u32) as i32;
        f64::from(self.sign) * TAU * 0.5f64.powi(k)
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}2pi/2^{}", self.denom_pow)
    }
}

#[derive(Serialize, Deserialize)]
struct RawAngle {
    sign: i8,
    denom_pow: u32,
}

impl TryFrom<RawAngle> for DyadicAngle {
    type Error = String;

    fn try_from(raw: RawAngle) -> Result<Self, Self::Error> {
        match raw.sign {
            1 | -1 => Ok(DyadicAngle {
                sign: raw.sign,
                denom_pow: raw.denom_pow,
            }),
            other => Err(format!("angle sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<DyadicAngle> for RawAngle {
    fn from(a: DyadicAngle) -> Self {
        RawAngle {
            sign: a.sign,
            denom_pow: a.denom_pow,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn radians_of_small_exponents() {
        assert_eq!(DyadicAngle::positive(0).radians(), TAU);
        assert_eq!(DyadicAngle::positive(1).radians(), PI);
        assert_eq!(DyadicAngle::positive(2).radians(), PI / 2.0);
        assert_eq!(DyadicAngle::negative(2).radians(), -PI / 2.0);
    }

    #[test]
    fn negation_is_exact() {
        let a = DyadicAngle::positive(5);
        assert_eq!(a.negated().radians(), -a.radians());
        assert_eq!(a.negated().negated(), a);
    }

    #[test]
    fn serde_roundtrip_and_sign_validation() {
        let a = DyadicAngle::negative(3);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"sign":-1,"denom_pow":3}"#);
        let back: DyadicAngle = serde_json::from_str(&json).unwrap();
        assert_eq!(a, back);

        let bad: Result<DyadicAngle, _> = serde_json::from_str(r#"{"sign":0,"denom_pow":3}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn huge_exponents_shrink_without_blowing_up() {
        let tiny = DyadicAngle::positive(200).radians();
        assert!(tiny > 0.0 && tiny < 1e-59);
        // Past the subnormal range the angle flushes cleanly to zero.
        assert_eq!(DyadicAngle::positive(1100).radians(), 0.0);
        assert_eq!(DyadicAngle::negative(1100).radians(), 0.0);
    }
}
