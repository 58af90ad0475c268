//! Slopes, twisted characters, central charges, the Bogomolov-Gieseker margin,
//! the curve `C_E` and the parameter-plane reductions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numclass::NumClass;
use crate::rational::{floor_q, fmt_q, q, qi, Q};
use crate::surd::QuadSurd;

/// A point `(beta, alpha)` of `U = { alpha > beta^2 / 2 }`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    beta: Q,
    alpha: Q,
}

impl ParamPoint {
    pub fn new(beta: Q, alpha: Q) -> Result<Self> {
        if !in_u(&beta, &alpha) {
            return Err(Error::Domain(format!(
                "({}, {}) is not in U: need alpha > beta^2/2",
                fmt_q(&beta),
                fmt_q(&alpha)
            )));
        }
        Ok(ParamPoint { beta, alpha })
    }

    pub fn beta(&self) -> &Q {
        &self.beta
    }

    pub fn alpha(&self) -> &Q {
        &self.alpha
    }

    /// `omega^2 = 2 alpha - beta^2`.
    pub fn omega_sq(&self) -> Q {
        omega_sq(&self.beta, &self.alpha)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.beta), fmt_q(&self.alpha))
    }
}

pub fn in_u(beta: &Q, alpha: &Q) -> bool {
    omega_sq(beta, alpha).is_positive()
}

pub fn omega_sq(beta: &Q, alpha: &Q) -> Q {
    qi(2) * alpha - beta * beta
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Finite(Q),
    Infinite,
}

impl Slope {
    pub fn ratio(num: &Q, den: &Q) -> Slope {
        if den.is_zero() {
            Slope::Infinite
        } else {
            Slope::Finite(num / den)
        }
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            Slope::Finite(x) => Some(x),
            Slope::Infinite => None,
        }
    }

    pub fn lt_q(&self, x: &Q) -> bool {
        matches!(self, Slope::Finite(s) if s < x)
    }

    pub fn gt_q(&self, x: &Q) -> bool {
        match self {
            Slope::Finite(s) => s > x,
            Slope::Infinite => true,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(x) => write!(f, "{}", fmt_q(x)),
            Slope::Infinite => write!(f, "+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChargeValue {
    pub re: Q,
    pub im: Q,
}

impl ChargeValue {
    pub fn new(re: Q, im: Q) -> Self {
        ChargeValue { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Phase in `(1/2, 3/2]`: `Re < 0`, or `Re = 0` and `Im < 0`.
    pub fn is_strict_left(&self) -> bool {
        self.re.is_negative() || (self.re.is_zero() && self.im.is_negative())
    }
}

impl fmt::Display for ChargeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.re), fmt_q(&self.im))
    }
}

/// `(v0^b, v1^b, v2^b, v3^b)`: the H-pairings of `ch * e^{-bH}`.
pub fn twisted_v(v: &NumClass, beta: &Q) -> NumClass {
    v.tensor_rational(&-beta)
}

pub fn slope_mu(v: &NumClass) -> Slope {
    Slope::ratio(&v.v1, &v.v0)
}

/// Tilt slope at an arbitrary rational `(beta, alpha)`; `+inf` when `v1 - beta v0 = 0`.
pub fn tilt_slope_at(v: &NumClass, beta: &Q, alpha: &Q) -> Slope {
    Slope::ratio(&(&v.v2 - alpha * &v.v0), &(&v.v1 - beta * &v.v0))
}

pub fn tilt_slope_nu(v: &NumClass, p: &ParamPoint) -> Slope {
    tilt_slope_at(v, &p.beta, &p.alpha)
}

/// `v1^2 - 2 v0 v2`.
pub fn discriminant(v: &NumClass) -> Q {
    &v.v1 * &v.v1 - qi(2) * &v.v0 * &v.v2
}

pub fn central_charge_2_at(v: &NumClass, beta: &Q, alpha: &Q) -> ChargeValue {
    ChargeValue::new(-&v.v2 + alpha * &v.v0, &v.v1 - beta * &v.v0)
}

pub fn central_charge_2(v: &NumClass, p: &ParamPoint) -> ChargeValue {
    central_charge_2_at(v, &p.beta, &p.alpha)
}

pub fn central_charge_3_at(v: &NumClass, beta: &Q, alpha: &Q, a: &Q) -> ChargeValue {
    let t = twisted_v(v, beta);
    let shift = alpha - beta * beta / qi(2);
    ChargeValue::new(-&t.v3 + a * &t.v1, &t.v2 - shift * &t.v0)
}

pub fn central_charge_3(v: &NumClass, p: &ParamPoint, a: &Q) -> ChargeValue {
    central_charge_3_at(v, &p.beta, &p.alpha, a)
}

pub fn bg_margin_at(v: &NumClass, beta: &Q, alpha: &Q) -> Q {
    let t = twisted_v(v, beta);
    omega_sq(beta, alpha) / qi(6) * &t.v1 - &t.v3
}

/// `((2 alpha - beta^2) / 6) v1^b - v3^b`.
pub fn bg_margin(v: &NumClass, p: &ParamPoint) -> Q {
    bg_margin_at(v, &p.beta, &p.alpha)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BgCheck {
    pub margin: Q,
    /// `margin >= 0`.
    pub holds: bool,
    /// Whether `nu(v) = beta`, the case in which the inequality is asserted.
    pub slope_is_beta: bool,
}

pub fn bg_check(v: &NumClass, p: &ParamPoint) -> BgCheck {
    let margin = bg_margin(v, p);
    BgCheck {
        holds: !margin.is_negative(),
        slope_is_beta: tilt_slope_nu(v, p) == Slope::Finite(p.beta.clone()),
        margin,
    }
}

/// `omega^2 Dbar + 4 (v2^b)^2 - 6 v3^b v1^b`.
pub fn quadratic_form_q(v: &NumClass, p: &ParamPoint) -> Q {
    let t = twisted_v(v, &p.beta);
    p.omega_sq() * discriminant(v) + qi(4) * &t.v2 * &t.v2 - qi(6) * &t.v3 * &t.v1
}

/// Which side of the endpoint the parabola branch lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Below,
    Above,
}

/// The locus `nu(E) = beta` with `v1 > beta v0` inside `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CurveCE {
    /// `alpha = beta^2 + c1 beta + c0`, restricted to `beta < endpoint` or `beta > endpoint`.
    Parabola {
        c1: Q,
        c0: Q,
        endpoint: QuadSurd,
        side: Side,
    },
    VerticalLine {
        beta0: Q,
    },
    Empty,
}

impl CurveCE {
    pub fn is_empty(&self) -> bool {
        matches!(self, CurveCE::Empty)
    }

    /// Exact membership of a rational point.
    pub fn contains(&self, beta: &Q, alpha: &Q) -> bool {
        if !in_u(beta, alpha) {
            return false;
        }
        match self {
            CurveCE::Empty => false,
            CurveCE::VerticalLine { beta0 } => beta == beta0,
            CurveCE::Parabola { c1, c0, endpoint, side } => {
                let on = *alpha == beta * beta + c1 * beta + c0;
                let ord = QuadSurd::rational(beta.clone()).cmp(endpoint);
                on && match side {
                    Side::Below => ord.is_lt(),
                    Side::Above => ord.is_gt(),
                }
            }
        }
    }

    /// `alpha` on the curve above `beta` (parabola only).
    pub fn alpha_at(&self, beta: &Q) -> Option<Q> {
        match self {
            CurveCE::Parabola { c1, c0, .. } => Some(beta * beta + c1 * beta + c0),
            _ => None,
        }
    }
}

pub fn curve_ce(v: &NumClass) -> CurveCE {
    if v.v0.is_zero() {
        if v.v1.is_positive() {
            return CurveCE::VerticalLine {
                beta0: &v.v2 / &v.v1,
            };
        }
        return CurveCE::Empty;
    }
    let disc = discriminant(v);
    if disc.is_negative() {
        return CurveCE::Empty;
    }
    CurveCE::Parabola {
        c1: -(&v.v1 / &v.v0),
        c0: &v.v2 / &v.v0,
        endpoint: endpoint_formula(v, &disc),
        side: if v.v0.is_positive() { Side::Below } else { Side::Above },
    }
}

// The branch with v1 > beta v0 ends at (v1 - sqrt(Dbar)) / v0 for either sign of v0.
fn endpoint_formula(v: &NumClass, disc: &Q) -> QuadSurd {
    QuadSurd::new(&v.v1 / &v.v0, -(Q::one() / &v.v0), disc).expect("nonnegative discriminant")
}

/// Endpoint `beta_E` of `C_E` on the boundary of `U`.
pub fn curve_endpoint(v: &NumClass) -> Result<QuadSurd> {
    match curve_ce(v) {
        CurveCE::Parabola { endpoint, .. } => Ok(endpoint),
        CurveCE::VerticalLine { beta0 } => Ok(QuadSurd::rational(beta0)),
        CurveCE::Empty => Err(Error::Domain(format!("C_E is empty for {v}"))),
    }
}

/// `alpha_E^b = b^2 - (v1/v0) b + v2/v0`.
pub fn alpha_e_beta(v: &NumClass, beta: &Q) -> Result<Q> {
    if v.v0.is_zero() {
        return Err(Error::Domain(format!("alpha_E needs v0 != 0, got {v}")));
    }
    Ok(beta * beta - &v.v1 / &v.v0 * beta + &v.v2 / &v.v0)
}

/// `(mu - sqrt(Dbar)/v0, mu + sqrt(Dbar)/v0)`.
pub fn mu12(v: &NumClass) -> Result<(QuadSurd, QuadSurd)> {
    if v.v0.is_zero() {
        return Err(Error::Domain(format!("mu1, mu2 need v0 != 0, got {v}")));
    }
    let disc = discriminant(v);
    if disc.is_negative() {
        return Err(Error::Domain(format!("mu1, mu2 need Dbar >= 0, got {}", fmt_q(&disc))));
    }
    let mu = &v.v1 / &v.v0;
    let step = Q::one() / &v.v0;
    Ok((
        QuadSurd::new(mu.clone(), -step.clone(), &disc)?,
        QuadSurd::new(mu, step, &disc)?,
    ))
}

/// `(b, a) -> (b + n, a + n b + n^2/2)`, the plane action of `- (x) O(n)`.
pub fn shift_transform(p: &ParamPoint, n: impl Into<BigInt>) -> ParamPoint {
    let n = Q::from_integer(n.into());
    ParamPoint {
        alpha: &p.alpha + &n * &p.beta + &n * &n / qi(2),
        beta: &p.beta + n,
    }
}

/// `(b, a) -> (-b, a)`, the plane action of the shifted dual.
pub fn dual_transform(p: &ParamPoint) -> ParamPoint {
    ParamPoint {
        beta: -&p.beta,
        alpha: p.alpha.clone(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Transform {
    Shift(BigInt),
    Dual,
}

impl Transform {
    pub fn apply(&self, p: &ParamPoint) -> ParamPoint {
        match self {
            Transform::Shift(n) => shift_transform(p, n.clone()),
            Transform::Dual => dual_transform(p),
        }
    }

    /// Matching action on classes.
    pub fn apply_class(&self, v: &NumClass) -> NumClass {
        match self {
            Transform::Shift(n) => v.tensor_rational(&Q::from_integer(n.clone())),
            Transform::Dual => v.dual_shifted(),
        }
    }

    pub fn inverse(&self) -> Transform {
        match self {
            Transform::Shift(n) => Transform::Shift(-n),
            Transform::Dual => Transform::Dual,
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::Shift(n) => write!(f, "shift:{n}"),
            Transform::Dual => write!(f, "dual"),
        }
    }
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "dual" {
            return Ok(Transform::Dual);
        }
        s.strip_prefix("shift:")
            .and_then(|n| n.parse::<BigInt>().ok())
            .map(Transform::Shift)
            .ok_or_else(|| Error::Parse(format!("unknown transform {s:?}")))
    }
}

/// Replayable sequence of plane generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TransformLog(pub Vec<Transform>);

impl TransformLog {
    pub fn apply(&self, p: &ParamPoint) -> ParamPoint {
        self.0.iter().fold(p.clone(), |acc, t| t.apply(&acc))
    }

    pub fn apply_class(&self, v: &NumClass) -> NumClass {
        self.0.iter().fold(v.clone(), |acc, t| t.apply_class(&acc))
    }

    pub fn inverse(&self) -> TransformLog {
        TransformLog(self.0.iter().rev().map(Transform::inverse).collect())
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(Transform::to_string).collect()
    }
}

/// Moves `p` into `-1/2 <= beta <= 0` by one shift and at most one dual.
pub fn reduce_to_fundamental(p: &ParamPoint) -> (ParamPoint, TransformLog) {
    let mut log = Vec::new();
    // unique n with beta + n in [-1/2, 1/2)
    let n = -floor_q(&(&p.beta + q(1, 2)));
    let mut cur = p.clone();
    if !n.is_zero() {
        cur = shift_transform(&cur, n.clone());
        log.push(Transform::Shift(n));
    }
    if cur.beta.is_positive() {
        cur = dual_transform(&cur);
        log.push(Transform::Dual);
    }
    (cur, TransformLog(log))
}

/// Smallest positive value of `v1 - beta v0` over integers `v0, v1`: `1/q` for `beta = p/q`.
pub fn min_positive_v1beta(beta: &Q) -> Q {
    Q::new(BigInt::one(), beta.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> NumClass {
        NumClass::parse_any(s).unwrap()
    }

    fn pp(b: Q, a: Q) -> ParamPoint {
        ParamPoint::new(b, a).unwrap()
    }

    #[test]
    fn param_point_membership() {
        assert!(ParamPoint::new(q(-1, 2), q(1, 8)).is_err());
        assert!(ParamPoint::new(q(-1, 2), q(1, 7)).is_ok());
        assert_eq!(pp(q(-1, 4), q(1, 8)).omega_sq(), q(3, 16));
    }

    #[test]
    fn twisted_values() {
        assert_eq!(twisted_v(&c("O(1)"), &qi(0)), c("1,1,1/2,1/6"));
        assert_eq!(twisted_v(&c("O(1)"), &q(-1, 4)), c("1,5/4,25/32,125/384"));
        assert_eq!(twisted_v(&c("T(-2)"), &q(-1, 2)), c("3,-1/2,-5/8,23/48"));
    }

    #[test]
    fn slopes() {
        assert_eq!(slope_mu(&c("O(3)")), Slope::Finite(qi(3)));
        assert_eq!(slope_mu(&c("T(-2)")), Slope::Finite(q(-2, 3)));
        assert_eq!(slope_mu(&c("point")), Slope::Infinite);
        assert!(Slope::Infinite > Slope::Finite(qi(1_000_000)));
        let p = pp(q(-1, 3), qi(2));
        assert_eq!(tilt_slope_nu(&c("O"), &p), Slope::Finite(qi(-6)));
        let (b, a) = (q(-1, 3), qi(2));
        assert_eq!(
            tilt_slope_nu(&c("O(1)"), &p),
            Slope::Finite((qi(1) - qi(2) * &a) / (qi(2) - qi(2) * &b))
        );
        assert_eq!(
            tilt_slope_nu(&c("T(-2)").shift(1), &p),
            Slope::Finite(qi(3) * &a / (qi(2) + qi(3) * &b))
        );
        assert_eq!(tilt_slope_nu(&c("point"), &p), Slope::Infinite);
        assert_eq!(tilt_slope_nu(&NumClass::zero(), &p), Slope::Infinite);
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&c("O(7)")), qi(0));
        assert_eq!(discriminant(&c("T(-2)")), qi(4));
        assert_eq!(discriminant(&c("Omega(1)")), qi(4));
    }

    #[test]
    fn charges() {
        let p = pp(q(-1, 2), q(1, 4) + q(1, 100));
        assert_eq!(central_charge_2(&c("point"), &p), ChargeValue::new(qi(0), qi(0)));
        assert_eq!(central_charge_2(&c("O"), &p), ChargeValue::new(q(1, 4) + q(1, 100), q(1, 2)));
        assert_eq!(
            central_charge_2(&c("O(1)"), &pp(qi(0), q(1, 8))),
            ChargeValue::new(q(-3, 8), qi(1))
        );
        let p = pp(q(-1, 4), q(1, 8));
        assert_eq!(
            central_charge_3(&c("O(1)"), &p, &q(1, 32)),
            ChargeValue::new(q(-55, 192), q(11, 16))
        );
        assert_eq!(central_charge_3(&c("point"), &p, &q(5, 7)), ChargeValue::new(qi(-1), qi(0)));
        let b = q(-2, 7);
        let a = q(3, 11);
        let z = central_charge_3(&c("O"), &pp(b.clone(), &b * &b), &a);
        assert_eq!(z, ChargeValue::new(&b * &b * &b / qi(6) - &a * &b, qi(0)));
    }

    #[test]
    fn margins() {
        let b = q(-1, 3);
        assert_eq!(bg_margin(&c("O"), &pp(b.clone(), &b * &b)), qi(0));
        assert_eq!(bg_margin(&c("O(1)"), &pp(q(-1, 4), q(1, 8))), q(-55, 192));
        assert_eq!(bg_margin(&NumClass::zero(), &pp(qi(3), qi(9))), qi(0));
        let chk = bg_check(&c("O"), &pp(b.clone(), &b * &b));
        assert!(chk.holds && chk.slope_is_beta);
        let chk = bg_check(&c("O(1)"), &pp(q(-1, 4), q(1, 8)));
        assert!(!chk.holds && !chk.slope_is_beta);
    }

    #[test]
    fn quadratic_form() {
        let p = pp(q(2, 5), qi(3));
        assert_eq!(quadratic_form_q(&c("point"), &p), qi(0));
        assert_eq!(quadratic_form_q(&c("O(-2)"), &p), qi(0));
        assert_eq!(quadratic_form_q(&c("T(-2)"), &pp(qi(0), q(1, 8))), qi(9));
    }

    #[test]
    fn curves() {
        match curve_ce(&c("O")) {
            CurveCE::Parabola { c1, c0, endpoint, side } => {
                assert_eq!((c1, c0), (qi(0), qi(0)));
                assert_eq!(endpoint, QuadSurd::rational(qi(0)));
                assert_eq!(side, Side::Below);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(curve_ce(&c("point")), CurveCE::Empty);
        assert_eq!(curve_ce(&c("0,1,0,0")), CurveCE::VerticalLine { beta0: qi(0) });
        assert_eq!(curve_ce(&c("0,-1,0,0")), CurveCE::Empty);
        assert_eq!(curve_ce(&c("1,0,1,0")), CurveCE::Empty);
        assert_eq!(curve_endpoint(&c("O")).unwrap(), QuadSurd::rational(qi(0)));
        assert_eq!(curve_endpoint(&c("T(-2)")).unwrap(), QuadSurd::rational(q(-4, 3)));
        assert_eq!(curve_endpoint(&c("0,1,0,0")).unwrap(), QuadSurd::rational(qi(0)));
        assert!(curve_endpoint(&c("point")).is_err());
        // negative rank: the branch with v1 > beta v0 lies to the right
        let d = c("T(-2)").dual_shifted();
        assert_eq!(curve_endpoint(&d).unwrap(), QuadSurd::rational(q(4, 3)));
        let cur = curve_ce(&d);
        assert!(cur.contains(&qi(2), &cur.alpha_at(&qi(2)).unwrap()));
        assert!(!cur.contains(&qi(1), &cur.alpha_at(&qi(1)).unwrap()));
        // Dbar = 8, endpoint (2 - 2 sqrt 2)/2
        let e = curve_endpoint(&c("2,2,-1,0")).unwrap();
        assert_eq!(e.to_string(), "1-sqrt(2)");
    }

    #[test]
    fn alpha_e_and_mu12() {
        let b = q(-3, 5);
        assert_eq!(alpha_e_beta(&c("O"), &b).unwrap(), &b * &b);
        assert_eq!(alpha_e_beta(&c("T(-2)"), &qi(0)).unwrap(), qi(0));
        assert_eq!(alpha_e_beta(&c("T(-2)"), &qi(-1)).unwrap(), q(1, 3));
        assert_eq!(
            mu12(&c("O")).unwrap(),
            (QuadSurd::rational(qi(0)), QuadSurd::rational(qi(0)))
        );
        assert_eq!(
            mu12(&c("T(-2)")).unwrap(),
            (QuadSurd::rational(q(-4, 3)), QuadSurd::rational(qi(0)))
        );
        assert!(alpha_e_beta(&c("point"), &b).is_err());
        assert!(mu12(&c("1,0,1,0")).is_err());
    }

    #[test]
    fn plane_transforms() {
        assert_eq!(shift_transform(&pp(qi(0), qi(1)), 1), pp(qi(1), q(3, 2)));
        assert_eq!(shift_transform(&pp(q(7, 3), qi(3)), -2), pp(q(1, 3), q(1, 3)));
        let p = pp(q(2, 9), q(5, 4));
        assert_eq!(shift_transform(&p, 0), p);
        assert_eq!(dual_transform(&pp(qi(0), qi(1))), pp(qi(0), qi(1)));
        assert_eq!(dual_transform(&pp(q(1, 3), q(1, 3))), pp(q(-1, 3), q(1, 3)));
        let a = q(1, 4) + q(1, 100);
        assert_eq!(dual_transform(&pp(q(-1, 2), a.clone())), pp(q(1, 2), a));
    }

    #[test]
    fn reductions() {
        let (r, log) = reduce_to_fundamental(&pp(q(7, 3), qi(3)));
        assert_eq!(r, pp(q(-1, 3), q(1, 3)));
        assert_eq!(log.labels(), ["shift:-2", "dual"]);
        assert_eq!(log.apply(&pp(q(7, 3), qi(3))), r);
        assert_eq!(log.inverse().apply(&r), pp(q(7, 3), qi(3)));
        let (r, log) = reduce_to_fundamental(&pp(qi(0), qi(1)));
        assert_eq!((r, log.0.len()), (pp(qi(0), qi(1)), 0));
        let (r, log) = reduce_to_fundamental(&pp(q(-1, 2), q(1, 2)));
        assert_eq!((r, log.0.len()), (pp(q(-1, 2), q(1, 2)), 0));
        let (r, log) = reduce_to_fundamental(&pp(q(1, 2), q(1, 2)));
        assert_eq!(r, pp(q(-1, 2), q(1, 2)));
        assert_eq!(log.labels(), ["shift:-1"]);
        assert_eq!("shift:-2".parse::<Transform>().unwrap(), Transform::Shift(BigInt::from(-2)));
        assert!("flip".parse::<Transform>().is_err());
    }

    #[test]
    fn minimal_twisted_degree() {
        assert_eq!(min_positive_v1beta(&q(-1, 2)), q(1, 2));
        assert_eq!(min_positive_v1beta(&qi(0)), qi(1));
        assert_eq!(min_positive_v1beta(&q(-2, 3)), q(1, 3));
    }
}
