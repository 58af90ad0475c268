//! Exact quadratic surds `a + b*sqrt(d)` with rational `a`, `b` and square-free `d >= 1`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, sign, to_f64, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Q,
    b: Q,
    d: BigInt,
}

/// Splits a positive integer as `s^2 * core` with `core` square-free.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive());
    let mut m = n.clone();
    let mut s = BigInt::one();
    let mut core = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p * &p <= m {
        let p2 = &p * &p;
        while (&m % &p2).is_zero() {
            m /= &p2;
            s *= &p;
        }
        if (&m % &p).is_zero() {
            m /= &p;
            core *= &p;
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    // every prime factor left in m exceeds cbrt(m): m is 1, prime, p*q or p^2
    let r = m.sqrt();
    if &r * &r == m {
        s *= r;
    } else {
        core *= m;
    }
    (s, core)
}

impl QuadSurd {
    pub fn rational(a: Q) -> Self {
        QuadSurd {
            a,
            b: Q::zero(),
            d: BigInt::one(),
        }
    }

    /// `a + b*sqrt(r)` for a nonnegative rational radicand `r`.
    pub fn new(a: Q, b: Q, r: &Q) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Domain(format!("square root of negative {}", fmt_q(r))));
        }
        if r.is_zero() || b.is_zero() {
            return Ok(Self::rational(a));
        }
        // sqrt(p/q) = sqrt(p*q)/q
        let pq = r.numer() * r.denom();
        let (s, core) = square_free_split(&pq);
        let coeff = b * Q::new(s, r.denom().clone());
        if core.is_one() {
            Ok(Self::rational(a + coeff))
        } else {
            Ok(QuadSurd { a, b: coeff, d: core })
        }
    }

    pub fn sqrt(r: &Q) -> Result<Self> {
        Self::new(Q::zero(), Q::one(), r)
    }

    pub fn rational_part(&self) -> &Q {
        &self.a
    }

    pub fn surd_coeff(&self) -> &Q {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn normalized(a: Q, b: Q, d: BigInt) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else if d.is_one() {
            Self::rational(a + b)
        } else {
            QuadSurd { a, b, d }
        }
    }

    fn compatible(&self, other: &Self) -> Option<BigInt> {
        if self.is_rational() {
            Some(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Some(self.d.clone())
        } else {
            None
        }
    }

    pub fn add_q(&self, x: &Q) -> Self {
        QuadSurd {
            a: &self.a + x,
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }

    pub fn mul_q(&self, x: &Q) -> Self {
        Self::normalized(&self.a * x, &self.b * x, self.d.clone())
    }

    pub fn div_q(&self, x: &Q) -> Self {
        assert!(!x.is_zero(), "division of a surd by zero");
        Self::normalized(&self.a / x, &self.b / x, self.d.clone())
    }

    pub fn neg(&self) -> Self {
        self.mul_q(&-Q::one())
    }

    /// Sum when both live in the same field `Q(sqrt d)`.
    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.compatible(other)?;
        Some(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.compatible(other)?;
        let dq = Q::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * dq;
        let b = &self.a * &other.b + &self.b * &other.a;
        Some(Self::normalized(a, b, d))
    }

    /// Sign of the real number, decided exactly.
    pub fn signum(&self) -> i32 {
        sign_of(&self.a, &self.b, &self.d)
    }

    pub fn cmp_q(&self, x: &Q) -> Ordering {
        self.add_q(&-x).signum().cmp(&0)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        to_f64(&self.a) + to_f64(&self.b) * self.d.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

fn sign_of(x: &Q, y: &Q, d: &BigInt) -> i32 {
    let sx = sign(x);
    let sy = sign(y);
    if sy == 0 {
        return sx;
    }
    if sx == 0 || sx == sy {
        return sy;
    }
    let lhs = x * x;
    let rhs = y * y * Q::from_integer(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sx,
        Ordering::Less => sy,
        Ordering::Equal => 0,
    }
}

impl From<Q> for QuadSurd {
    fn from(a: Q) -> Self {
        Self::rational(a)
    }
}

impl PartialEq<Q> for QuadSurd {
    fn eq(&self, other: &Q) -> bool {
        self.as_rational() == Some(other)
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        if let Some(diff) = self.checked_sub(other) {
            return diff.signum().cmp(&0);
        }
        // u - t with u = p + b1 sqrt(d1) and t = b2 sqrt(d2) in different fields
        let u = QuadSurd {
            a: &self.a - &other.a,
            b: self.b.clone(),
            d: self.d.clone(),
        };
        let t = QuadSurd {
            a: Q::zero(),
            b: other.b.clone(),
            d: other.d.clone(),
        };
        let su = u.signum();
        let st = t.signum();
        if su != st {
            return su.cmp(&st);
        }
        let u2 = u.checked_mul(&u).expect("same field");
        let t2 = t.checked_mul(&t).expect("same field");
        let c = u2.checked_sub(&t2).expect("t2 is rational").signum().cmp(&0);
        if su > 0 {
            c
        } else {
            c.reverse()
        }
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_q(&self.a));
        }
        let root = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -Q::one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", fmt_q(&self.b), self.d)
        };
        if self.a.is_zero() {
            write!(f, "{root}")
        } else if self.b.is_negative() {
            write!(f, "{}{}", fmt_q(&self.a), root)
        } else {
            write!(f, "{}+{}", fmt_q(&self.a), root)
        }
    }
}
