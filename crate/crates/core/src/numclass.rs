//! Numerical classes on P3: the H-pairings `(v0, v1, v2, v3)` of a Chern character.
//!
//! Classes on the local P3 supported on the zero section share the same
//! representation through pushforward.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::euler::chi_p3;
use crate::rational::{fmt_q, parse_q, q, qi, Q};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumClass {
    pub v0: Q,
    pub v1: Q,
    pub v2: Q,
    pub v3: Q,
}

impl NumClass {
    pub fn new(v0: Q, v1: Q, v2: Q, v3: Q) -> Self {
        NumClass { v0, v1, v2, v3 }
    }

    pub fn from_array(v: [Q; 4]) -> Self {
        let [v0, v1, v2, v3] = v;
        NumClass { v0, v1, v2, v3 }
    }

    pub fn zero() -> Self {
        Self::from_array([Q::zero(), Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn components(&self) -> [&Q; 4] {
        [&self.v0, &self.v1, &self.v2, &self.v3]
    }

    pub fn to_array(&self) -> [Q; 4] {
        [self.v0.clone(), self.v1.clone(), self.v2.clone(), self.v3.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }

    /// `ch(O(d)) = e^{dH}` truncated at degree three.
    pub fn line_bundle(d: i64) -> Self {
        NumClass::new(qi(1), qi(d), q(d * d, 2), q(d * d * d, 6))
    }

    pub fn point() -> Self {
        NumClass::new(qi(0), qi(0), qi(0), qi(1))
    }

    /// Tangent bundle twisted by `O(-2)`; isomorphic to `Omega^2(2)`.
    pub fn tangent_twisted() -> Self {
        // Euler sequence: ch(T) = 4 ch(O(1)) - ch(O)
        let t = NumClass::line_bundle(1).scale(&qi(4)) - NumClass::line_bundle(0);
        t.tensor_line(-2)
    }

    pub fn omega_one() -> Self {
        // Omega = dual of T, then twisted by one
        NumClass::tangent_twisted().tensor_line(2).full_dual().tensor_line(1)
    }

    /// Kernel class of `O -> O_x`.
    pub fn o_x() -> Self {
        NumClass::line_bundle(0) - NumClass::point()
    }

    /// Names: `O`, `O(d)`, `T(-2)`, `Omega2(2)`, `Omega(1)`, `point`, `O^x`.
    pub fn named(name: &str) -> Result<Self> {
        let n = name.trim();
        match n {
            "O" => return Ok(Self::line_bundle(0)),
            "T(-2)" | "Omega2(2)" => return Ok(Self::tangent_twisted()),
            "Omega(1)" => return Ok(Self::omega_one()),
            "point" => return Ok(Self::point()),
            "O^x" => return Ok(Self::o_x()),
            _ => {}
        }
        if let Some(inner) = n.strip_prefix("O(").and_then(|r| r.strip_suffix(')')) {
            let digits = inner.strip_prefix(['-', '+']).unwrap_or(inner);
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(d) = inner.parse::<i64>() {
                    if d.abs() <= 1_000_000 {
                        return Ok(Self::line_bundle(d));
                    }
                }
            }
        }
        Err(Error::Input(format!("unknown class name {name:?}")))
    }

    /// A class name or a `v0,v1,v2,v3` literal.
    pub fn parse_any(s: &str) -> Result<Self> {
        if s.contains(',') {
            s.parse()
        } else {
            Self::named(s)
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        NumClass::new(&self.v0 * c, &self.v1 * c, &self.v2 * c, &self.v3 * c)
    }

    /// Class of `E[k]`.
    pub fn shift(&self, k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// Product in the truncated ring `Q[H]/H^4`.
    pub fn ring_mul(&self, other: &Self) -> Self {
        let a = self.components();
        let b = other.components();
        let mut out = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate().take(4 - i) {
                out[i + j] += *ai * *bj;
            }
        }
        NumClass::from_array(out)
    }

    /// Multiplication by `e^{mH}`.
    pub fn tensor_line(&self, m: i64) -> Self {
        self.tensor_rational(&qi(m))
    }

    /// Multiplication by `e^{tH}` for rational `t`.
    pub fn tensor_rational(&self, t: &Q) -> Self {
        let t2 = t * t;
        let t3 = &t2 * t;
        NumClass::new(
            self.v0.clone(),
            &self.v1 + t * &self.v0,
            &self.v2 + t * &self.v1 + &t2 * &self.v0 / qi(2),
            &self.v3 + t * &self.v2 + &t2 * &self.v1 / qi(2) + &t3 * &self.v0 / qi(6),
        )
    }

    /// Derived dual: `(v0, -v1, v2, -v3)`.
    pub fn full_dual(&self) -> Self {
        NumClass::new(self.v0.clone(), -&self.v1, self.v2.clone(), -&self.v3)
    }

    /// Relative dual on the local P3 followed by one shift: `(-v0, v1, -v2, v3)`.
    pub fn dual_shifted(&self) -> Self {
        NumClass::new(-&self.v0, self.v1.clone(), -&self.v2, self.v3.clone())
    }

    /// `chi(v(m))` is an integer for `m = 0..3`; the cubic in `m` is then integer valued.
    pub fn is_integral(&self) -> bool {
        (0..4).all(|m| chi_p3(&self.tensor_line(m)).denom().is_one())
    }

    /// Integral completion of a truncated class: the unique `v3` in `[0, 1)`
    /// with `chi` integral, kept only if the twists `m = 1..3` are integral too.
    pub fn complete_integral(v0: &Q, v1: &Q, v2: &Q) -> Option<Self> {
        let x = -(qi(2) * v2 + q(11, 6) * v1 + v0);
        let v3 = &x - Q::from_integer(crate::rational::floor_q(&x));
        let c = NumClass::new(v0.clone(), v1.clone(), v2.clone(), v3);
        c.is_integral().then_some(c)
    }

    pub fn has_positive_rank(&self) -> bool {
        self.v0.is_positive()
    }
}

impl Add for NumClass {
    type Output = NumClass;
    fn add(self, o: NumClass) -> NumClass {
        NumClass::new(self.v0 + o.v0, self.v1 + o.v1, self.v2 + o.v2, self.v3 + o.v3)
    }
}

impl Sub for NumClass {
    type Output = NumClass;
    fn sub(self, o: NumClass) -> NumClass {
        NumClass::new(self.v0 - o.v0, self.v1 - o.v1, self.v2 - o.v2, self.v3 - o.v3)
    }
}

impl<'a> Add<&'a NumClass> for &'a NumClass {
    type Output = NumClass;
    fn add(self, o: &NumClass) -> NumClass {
        self.clone() + o.clone()
    }
}

impl<'a> Sub<&'a NumClass> for &'a NumClass {
    type Output = NumClass;
    fn sub(self, o: &NumClass) -> NumClass {
        self.clone() - o.clone()
    }
}

impl Neg for NumClass {
    type Output = NumClass;
    fn neg(self) -> NumClass {
        NumClass::new(-self.v0, -self.v1, -self.v2, -self.v3)
    }
}

impl Mul<&Q> for &NumClass {
    type Output = NumClass;
    fn mul(self, c: &Q) -> NumClass {
        self.scale(c)
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{}",
            fmt_q(&self.v0),
            fmt_q(&self.v1),
            fmt_q(&self.v2),
            fmt_q(&self.v3)
        )
    }
}

impl FromStr for NumClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "class literal needs four comma-separated components, got {s:?}"
            )));
        }
        let mut out = Vec::with_capacity(4);
        for p in parts {
            out.push(parse_q(p)?);
        }
        let arr: [Q; 4] = out.try_into().expect("four components");
        Ok(NumClass::from_array(arr))
    }
}

impl Default for NumClass {
    fn default() -> Self {
        Self::zero()
    }
}

impl NumClass {
    pub fn unit() -> Self {
        NumClass::new(Q::one(), Q::zero(), Q::zero(), Q::zero())
    }
}
