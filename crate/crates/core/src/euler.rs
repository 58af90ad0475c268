//! Euler pairings on P3 and on the local P3, and the numerical spherical twist.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numclass::NumClass;
use crate::rational::{fmt_q, q, qi, Q};

/// Todd class of P3 against `(1, H, H^2, H^3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerContext {
    pub todd: [Q; 4],
}

impl EulerContext {
    pub fn p3() -> Self {
        EulerContext {
            todd: [qi(1), qi(2), q(11, 6), qi(1)],
        }
    }

    /// `chi(v) = sum_i v_i * td_{3-i}`.
    pub fn chi(&self, v: &NumClass) -> Q {
        let c = v.components();
        (0..4).map(|i| c[i] * &self.todd[3 - i]).fold(Q::zero(), |a, b| a + b)
    }
}

impl Default for EulerContext {
    fn default() -> Self {
        Self::p3()
    }
}

/// `chi = v3 + 2 v2 + 11/6 v1 + v0`.
pub fn chi_p3(v: &NumClass) -> Q {
    &v.v3 + qi(2) * &v.v2 + q(11, 6) * &v.v1 + &v.v0
}

/// `chi(E, F) = chi(E^vee * F)`.
pub fn chi_pair_p3(v: &NumClass, w: &NumClass) -> Q {
    chi_p3(&v.full_dual().ring_mul(w))
}

/// Symmetric Euler form of the local P3 on classes pushed forward from the zero section.
pub fn chi_local(v: &NumClass, w: &NumClass) -> Q {
    chi_pair_p3(v, w) + chi_pair_p3(w, v)
}

/// Class action of the spherical twist: `v - chi_local(s, v) s`.
///
/// The inverse twist acts by the same formula on classes.
pub fn spherical_twist_class(s: &NumClass, v: &NumClass) -> Result<NumClass> {
    let ss = chi_local(s, s);
    if ss != qi(2) {
        return Err(Error::Domain(format!(
            "class {s} is not numerically spherical: chi(s, s) = {}",
            fmt_q(&ss)
        )));
    }
    Ok(v - &s.scale(&chi_local(s, v)))
}
