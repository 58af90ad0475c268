//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` (optional leading sign, decimal digits only).
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not an exact fraction: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let int = |x: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = if allow_sign {
            x.strip_prefix(['-', '+']).unwrap_or(x)
        } else {
            x
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        x.parse::<BigInt>().map_err(|_| bad())
    };
    let n = int(num, true)?;
    let d = match den {
        Some(d) => int(d, false)?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Q::new(n, d))
}

pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn floor_q(x: &Q) -> BigInt {
    x.numer().div_floor(x.denom())
}

pub fn ceil_q(x: &Q) -> BigInt {
    -((-x.numer()).div_floor(x.denom()))
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Decimal rendering with a fixed number of places, computed exactly.
pub fn fmt_decimal(x: &Q, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x * Q::from_integer(scale.clone());
    // round half away from zero
    let half = q(1, 2);
    let r = if scaled.is_negative() {
        -floor_q(&(-scaled + half))
    } else {
        floor_q(&(scaled + half))
    };
    let neg = r.is_negative();
    let digits = r.abs().to_string();
    let body = if places == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = places + 1);
        let (ip, fp) = padded.split_at(padded.len() - places);
        format!("{ip}.{fp}")
    };
    if neg && body.bytes().any(|b| b.is_ascii_digit() && b != b'0') {
        format!("-{body}")
    } else {
        body
    }
}

pub fn sign(x: &Q) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn pow_q(x: &Q, k: u32) -> Q {
    let mut r = Q::one();
    for _ in 0..k {
        r *= x;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "3", "-2", "2/3", "-47/96", "123456789012345678901234567891/7"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("4/6").unwrap(), q(2, 3));
        assert_eq!(parse_q("+5").unwrap(), qi(5));
        for s in ["", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1"] {
            assert!(parse_q(s).is_err(), "{s}");
        }
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(floor_q(&q(-7, 2)), BigInt::from(-4));
        assert_eq!(ceil_q(&q(-7, 2)), BigInt::from(-3));
        assert_eq!(floor_q(&qi(3)), BigInt::from(3));
        assert_eq!(ceil_q(&q(1, 3)), BigInt::from(1));
    }

    #[test]
    fn decimals() {
        assert_eq!(fmt_decimal(&q(1, 3), 3), "0.333");
        assert_eq!(fmt_decimal(&q(-2, 3), 2), "-0.67");
        assert_eq!(fmt_decimal(&q(-1, 1000), 2), "0.00");
        assert_eq!(fmt_decimal(&qi(12), 0), "12");
        assert_eq!(fmt_decimal(&q(5, 2), 1), "2.5");
    }
}
