//! Arbitrary-precision rational parameter coordinates.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number used for every parameter-line coordinate.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatParseError {
    #[error("invalid rational literal: {0:?}")]
    Invalid(String),
    #[error("zero denominator in rational literal: {0:?}")]
    ZeroDenominator(String),
}

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn half() -> Rat {
    rat(1, 2)
}

/// Exact midpoint of two rationals.
pub fn midpoint(a: &Rat, b: &Rat) -> Rat {
    (a + b) / rat_int(2)
}

pub fn min_rat(a: Rat, b: Rat) -> Rat {
    if a <= b {
        a
    } else {
        b
    }
}

pub fn max_rat(a: Rat, b: Rat) -> Rat {
    if a >= b {
        a
    } else {
        b
    }
}

/// `k / 2^level`.
pub fn dyadic(k: i64, level: u32) -> Rat {
    Rat::new(BigInt::from(k), BigInt::one() << level)
}

/// Nearest-even conversion to binary64, safe for huge numerators and
/// denominators (falls back to a shifted integer quotient when the naive
/// route overflows).
pub fn to_f64(r: &Rat) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let sign = if num.is_negative() { -1.0 } else { 1.0 };
    let num = num.abs();
    let den = den.abs();
    // Shift so the quotient carries ~80 significant bits.
    let shift: i64 = 80 - (num.bits() as i64 - den.bits() as i64);
    let q = if shift >= 0 {
        (num << shift as u64) / den
    } else {
        num / (den << (-shift) as u64)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    sign * qf * (-shift as f64).exp2()
}

/// Canonical `"num/den"` (or bare integer) rendering.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"num/den"` or a bare integer literal.
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| RatParseError::Invalid(s.to_string()))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| RatParseError::Invalid(s.to_string()))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(RatParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(n, d))
}

/// True iff `r` lies in the closed unit interval.
pub fn in_unit(r: &Rat) -> bool {
    !r.is_negative() && *r <= one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "1", "-3", "2/3", "-7/9", "123456789123456789/2"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/6").unwrap(), rat(2, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn to_f64_handles_huge_components() {
        let big = BigInt::from(3).pow(400);
        let r = Rat::new(big.clone() * 2, big);
        assert!((to_f64(&r) - 2.0).abs() < 1e-12);
        let tiny = Rat::new(BigInt::one(), BigInt::from(3).pow(400));
        let v = to_f64(&tiny);
        assert!(v > 0.0 && v < 1e-190);
        let huge_ratio = Rat::new(BigInt::from(3).pow(700) * 5, BigInt::from(3).pow(700) * 4);
        assert!((to_f64(&huge_ratio) - 1.25).abs() < 1e-12);
        assert_eq!(to_f64(&rat(-1, 4)), -0.25);
    }

    #[test]
    fn midpoint_is_exact() {
        assert_eq!(midpoint(&rat(1, 3), &rat(2, 3)), half());
        assert_eq!(dyadic(3, 2), rat(3, 4));
    }
}
