//! Condition systems for stability functions built from four-term exceptional
//! collections `(F0, F1, F2, F3 = E)` and their simple objects `S_j = F_{3-j}[j]`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::euler::chi_pair_p3;
use crate::interval::{Bound, Interval};
use crate::numclass::NumClass;
use crate::rational::{fmt_q, parse_q, q, qi, Q};
use crate::surd::QuadSurd;
use crate::tiltcalc::{
    alpha_e_beta, central_charge_3_at, discriminant, mu12, omega_sq, slope_mu, tilt_slope_at, twisted_v,
    ChargeValue, Slope,
};

const CUSTOM_NOTE: &str = "custom collection: fullness and categorical exceptionality are not verified";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Beilinson4,
    Omega,
    Lines,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollectionSpec {
    pub names: [String; 4],
    pub classes: [NumClass; 4],
    pub kind: Builtin,
}

#[derive(Deserialize)]
struct CollectionJson {
    names: Vec<String>,
    classes: Vec<Vec<String>>,
}

impl CollectionSpec {
    fn from_named(names: [&str; 4], kind: Builtin) -> Self {
        CollectionSpec {
            names: names.map(String::from),
            classes: names.map(|n| NumClass::named(n).expect("builtin name")),
            kind,
        }
    }

    pub fn beilinson4() -> Self {
        Self::from_named(["O(-1)", "T(-2)", "O", "O(1)"], Builtin::Beilinson4)
    }

    pub fn omega() -> Self {
        Self::from_named(["O(-1)", "Omega2(2)", "Omega(1)", "O"], Builtin::Omega)
    }

    pub fn lines() -> Self {
        Self::from_named(["O(-3)", "O(-2)", "O(-1)", "O"], Builtin::Lines)
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "beilinson4" => Ok(Self::beilinson4()),
            "omega" => Ok(Self::omega()),
            "lines" => Ok(Self::lines()),
            _ => Err(Error::Input(format!(
                "unknown collection {name:?}; expected beilinson4, omega, lines or @file.json"
            ))),
        }
    }

    /// A user collection, checked for increasing slopes, integrality and `chi(F, F) = 1`.
    pub fn custom(names: [String; 4], classes: [NumClass; 4]) -> Result<Self> {
        let spec = CollectionSpec {
            names,
            classes,
            kind: Builtin::Custom,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `{"names": [4 labels], "classes": [[v0, v1, v2, v3] x 4]}` with fraction strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: CollectionJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("collection JSON: {e}")))?;
        if raw.names.len() != 4 || raw.classes.len() != 4 {
            return Err(Error::Input("a collection has exactly four names and four classes".into()));
        }
        let mut classes = Vec::with_capacity(4);
        for row in &raw.classes {
            if row.len() != 4 {
                return Err(Error::Input("each class has four components".into()));
            }
            let comps: Vec<Q> = row.iter().map(|s| parse_q(s)).collect::<Result<_>>()?;
            classes.push(NumClass::from_array(comps.try_into().expect("four")));
        }
        let names: [String; 4] = raw.names.try_into().expect("four");
        Self::custom(names, classes.try_into().expect("four"))
    }

    pub fn validate(&self) -> Result<()> {
        for (n, c) in self.names.iter().zip(&self.classes) {
            if !c.is_integral() {
                return Err(Error::Input(format!("{n} = {c} is not an integral class")));
            }
            let x = chi_pair_p3(c, c);
            if x != qi(1) {
                return Err(Error::Input(format!("{n} = {c} has chi(F, F) = {} != 1", fmt_q(&x))));
            }
        }
        for i in 0..3 {
            if slope_mu(&self.classes[i]) >= slope_mu(&self.classes[i + 1]) {
                return Err(Error::Input(format!(
                    "slopes must increase: mu({}) >= mu({})",
                    self.names[i],
                    self.names[i + 1]
                )));
            }
        }
        Ok(())
    }

    pub fn e(&self) -> &NumClass {
        &self.classes[3]
    }
}

/// `S_j = F_{3-j}[j]`.
pub fn simples_classes(spec: &CollectionSpec) -> [NumClass; 4] {
    std::array::from_fn(|j| spec.classes[3 - j].shift(j as i64))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeMode {
    /// All nonzero charges in a closed half turn `[phi0, phi0 + 1]`, `0 < phi0 < 1`.
    HalfPlane,
    /// Every charge has phase in `(1/2, 3/2]`.
    StrictLeft,
}

// 0: open upper half plane, 1: negative real axis, 2: open lower half plane
fn half(z: &ChargeValue) -> u8 {
    if z.im.is_positive() {
        0
    } else if z.im.is_zero() {
        1
    } else {
        2
    }
}

fn cross(a: &ChargeValue, b: &ChargeValue) -> Q {
    &a.re * &b.im - &a.im * &b.re
}

fn angle_cmp(a: &ChargeValue, b: &ChargeValue) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| match half(a) {
        1 => Ordering::Equal,
        _ => Q::zero().cmp(&cross(a, b)),
    })
}

pub fn cone_check(charges: &[ChargeValue], mode: ConeMode) -> bool {
    match mode {
        ConeMode::StrictLeft => charges.iter().all(ChargeValue::is_strict_left),
        ConeMode::HalfPlane => {
            let nz: Vec<&ChargeValue> = charges.iter().filter(|z| !z.is_zero()).collect();
            // phase 0 is only reachable with phi0 = 0
            if nz.iter().any(|z| z.im.is_zero() && z.re.is_positive()) {
                return false;
            }
            let Some(lo) = nz.iter().min_by(|a, b| angle_cmp(a, b)) else {
                return true;
            };
            let hi = nz.iter().max_by(|a, b| angle_cmp(a, b)).expect("nonempty");
            // phases in (0, 2): the spread is at most a half turn iff cross >= 0
            !cross(lo, hi).is_negative()
        }
    }
}

/// One inequality of a report. `residual` is oriented so that the verdict is
/// `residual > 0` when `strict` and `residual >= 0` otherwise; cone verdicts
/// carry `-Re Z` and also pass at `Re = 0` with `Im < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub label: String,
    pub relation: String,
    pub strict: bool,
    pub residual: Option<QuadSurd>,
    pub passed: bool,
}

impl Verdict {
    fn ineq(label: &str, relation: String, strict: bool, residual: Option<QuadSurd>) -> Self {
        let passed = match &residual {
            None => false,
            Some(r) if strict => r.signum() > 0,
            Some(r) => r.signum() >= 0,
        };
        Verdict {
            label: label.into(),
            relation,
            strict,
            residual,
            passed,
        }
    }

    fn rational(label: &str, relation: String, strict: bool, residual: Q) -> Self {
        Self::ineq(label, relation, strict, Some(residual.into()))
    }
}

/// Admissible `a`: `lower < a < upper`; `lower = None` means unbounded below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInterval {
    pub lower: Option<Q>,
    pub upper: Q,
}

impl fmt::Display for AInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lower {
            Some(l) => write!(f, "({}, {})", fmt_q(l), fmt_q(&self.upper)),
            None => write!(f, "(-inf, {})", fmt_q(&self.upper)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub verdicts: Vec<Verdict>,
    pub passed: bool,
    pub interval: Option<AInterval>,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(verdicts: Vec<Verdict>) -> Self {
        let passed = verdicts.iter().all(|v| v.passed);
        CheckReport {
            verdicts,
            passed,
            interval: None,
            notes: Vec::new(),
        }
    }

    pub fn verdict(&self, label: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.label == label)
    }
}

/// The region `-1/2 <= b <= 0`, `0 < 2a - b^2 < 1/4` and the three inequalities
/// under which the tilt slopes of the four collection objects line up.
pub fn thm_region_check(beta: &Q, alpha: &Q) -> CheckReport {
    let b2 = beta * beta;
    let w = omega_sq(beta, alpha);
    CheckReport::new(vec![
        Verdict::rational("beta_lo", "-1/2 <= beta".into(), false, beta + q(1, 2)),
        Verdict::rational("beta_hi", "beta <= 0".into(), false, -beta),
        Verdict::rational("in_u", "alpha > beta^2/2".into(), true, w.clone()),
        Verdict::rational("omega", "2 alpha - beta^2 < 1/4".into(), true, q(1, 4) - w),
        Verdict::rational(
            "slope_o1",
            "1 - 2 alpha > 2 beta - 2 beta^2".into(),
            true,
            qi(1) - qi(2) * alpha - qi(2) * beta + qi(2) * &b2,
        ),
        Verdict::rational(
            "slope_t",
            "3 alpha > 2 beta + 3 beta^2".into(),
            true,
            qi(3) * alpha - qi(2) * beta - qi(3) * &b2,
        ),
        Verdict::rational(
            "slope_o",
            "-1 + 2 alpha < 2 beta + 2 beta^2".into(),
            true,
            qi(2) * beta + qi(2) * &b2 + qi(1) - qi(2) * alpha,
        ),
    ])
}

fn check_e(spec: &CollectionSpec) -> Result<()> {
    let e = spec.e();
    if e.v0.is_zero() {
        return Err(Error::Domain(format!("v0(E) = 0 for E = {e}")));
    }
    let d = discriminant(e);
    if d.is_negative() {
        return Err(Error::Domain(format!("Dbar(E) = {} < 0", fmt_q(&d))));
    }
    Ok(())
}

fn slope_residual(s: &Slope, beta: &Q, slope_above: bool) -> Option<QuadSurd> {
    s.finite().map(|x| {
        let r = if slope_above { x - beta } else { beta - x };
        QuadSurd::rational(r)
    })
}

/// `v3^b(E) / v1^b(E)`, the upper end of the admissible `a` range.
fn ratio_e(spec: &CollectionSpec, beta: &Q) -> Option<Q> {
    let t = twisted_v(spec.e(), beta);
    (!t.v1.is_zero()).then(|| &t.v3 / &t.v1)
}

/// Conditions (1) to (3), evaluated at `alpha = alpha_E^b`.
fn structural_verdicts(spec: &CollectionSpec, beta: &Q) -> Result<Vec<Verdict>> {
    check_e(spec)?;
    let [f0, f1, f2, f3] = &spec.classes;
    let n = &spec.names;
    let alpha = alpha_e_beta(spec.e(), beta)?;
    let (mu1, _) = mu12(spec.e())?;
    let mut out = Vec::new();

    out.push(Verdict::ineq(
        "1a",
        format!("beta < mu1({})", n[3]),
        true,
        Some(mu1.add_q(&-beta)),
    ));
    let m = [f0, f1, f2, f3].map(slope_mu);
    out.push(Verdict::ineq(
        "1b",
        format!("beta > mu({})", n[0]),
        true,
        slope_residual(&m[0], beta, false),
    ));
    out.push(Verdict::ineq(
        "1c",
        format!("nu({}) < beta at alpha_E", n[0]),
        true,
        slope_residual(&tilt_slope_at(f0, beta, &alpha), beta, false),
    ));

    let b = Slope::Finite(beta.clone());
    let v2 = if m[0] < b && b < m[1] {
        Verdict::ineq(
            "2",
            format!("mu({}) < beta < mu({}) and nu({}) < beta", n[0], n[1], n[1]),
            true,
            slope_residual(&tilt_slope_at(f1, beta, &alpha), beta, false),
        )
    } else if m[1] <= b && b <= m[2] {
        let lo = slope_residual(&m[1], beta, false);
        let hi = slope_residual(&m[2], beta, true);
        Verdict::ineq(
            "2",
            format!("mu({}) <= beta <= mu({})", n[1], n[2]),
            false,
            lo.zip(hi).map(|(l, h)| l.min(h)),
        )
    } else if m[2] < b && b < m[3] {
        Verdict::ineq(
            "2",
            format!("mu({}) < beta < mu({}) and nu({}) > beta", n[2], n[3], n[2]),
            true,
            slope_residual(&tilt_slope_at(f2, beta, &alpha), beta, true),
        )
    } else {
        Verdict::ineq(
            "2",
            format!("beta in (mu({}), mu({}))", n[0], n[3]),
            true,
            None,
        )
    };
    out.push(v2);

    let r = ratio_e(spec, beta);
    let t = [f0, f1, f2].map(|f| twisted_v(f, beta));
    // F0 and F2 below the ratio line, F1 above it
    for (i, (label, below)) in [("3a", true), ("3b", false), ("3c", true)].into_iter().enumerate() {
        let res = r.as_ref().map(|r| {
            let diff = r * &t[i].v1 - &t[i].v3;
            QuadSurd::rational(if below { diff } else { -diff })
        });
        let rel = if below { "<" } else { ">" };
        out.push(Verdict::ineq(
            label,
            format!("v3^b({}) {rel} r v1^b({}) with r = v3^b(E)/v1^b(E)", n[i], n[i]),
            true,
            res,
        ));
    }
    Ok(out)
}

fn simple_charges(spec: &CollectionSpec, beta: &Q, alpha: &Q, a: &Q) -> [ChargeValue; 4] {
    simples_classes(spec).map(|s| central_charge_3_at(&s, beta, alpha, a))
}

/// Conditions (1) to (4) and the gate `a0 < v3^b(E)/v1^b(E)`.
pub fn general_condition_check(spec: &CollectionSpec, beta: &Q, a0: &Q) -> Result<CheckReport> {
    let mut verdicts = structural_verdicts(spec, beta)?;
    let alpha = alpha_e_beta(spec.e(), beta)?;
    for (j, z) in simple_charges(spec, beta, &alpha, a0).into_iter().enumerate() {
        verdicts.push(Verdict {
            label: format!("4.{j}"),
            relation: format!("Z(S{j}) = {z} has phase in (1/2, 3/2]"),
            strict: true,
            residual: Some((-&z.re).into()),
            passed: z.is_strict_left(),
        });
    }
    let r = ratio_e(spec, beta);
    verdicts.push(Verdict::ineq(
        "gate",
        "a0 < v3^b(E)/v1^b(E)".into(),
        true,
        r.map(|r| QuadSurd::rational(r - a0)),
    ));
    let mut report = CheckReport::new(verdicts);
    report.interval = admissible_a_interval(spec, beta)?;
    if spec.kind == Builtin::Custom {
        report.notes.push(CUSTOM_NOTE.into());
    }
    Ok(report)
}

/// Conditions (1) to (3) with the admissible `a` range; passes iff the range is nonempty.
pub fn structural_condition_check(spec: &CollectionSpec, beta: &Q) -> Result<CheckReport> {
    let mut report = CheckReport::new(structural_verdicts(spec, beta)?);
    report.interval = admissible_a_interval(spec, beta)?;
    report.passed &= report.interval.is_some();
    if spec.kind == Builtin::Custom {
        report.notes.push(CUSTOM_NOTE.into());
    }
    Ok(report)
}

/// `(lower, v3^b(E)/v1^b(E))` where `lower` is the least `a0` satisfying
/// condition (4); `None` when (1) to (3) fail or the range is empty.
pub fn admissible_a_interval(spec: &CollectionSpec, beta: &Q) -> Result<Option<AInterval>> {
    let verdicts = structural_verdicts(spec, beta)?;
    if !verdicts.iter().all(|v| v.passed) {
        return Ok(None);
    }
    let Some(upper) = ratio_e(spec, beta) else {
        return Ok(None);
    };
    let alpha = alpha_e_beta(spec.e(), beta)?;
    let mut a0_range = Interval::all();
    for s in simples_classes(spec) {
        // Re Z = -v3^b + a v1^b; Im does not involve a
        let t = twisted_v(&s, beta);
        let im = central_charge_3_at(&s, beta, &alpha, &Q::zero()).im;
        let tie_ok = im.is_negative();
        if t.v1.is_zero() {
            let z = ChargeValue::new(-&t.v3, im);
            if !z.is_strict_left() {
                return Ok(None);
            }
            continue;
        }
        let bound = Bound {
            val: QuadSurd::rational(&t.v3 / &t.v1),
            closed: tie_ok,
        };
        if t.v1.is_positive() {
            a0_range.lower(bound);
        } else {
            a0_range.raise(bound);
        }
    }
    a0_range.lower(Bound {
        val: QuadSurd::rational(upper.clone()),
        closed: false,
    });
    if a0_range.is_empty() {
        return Ok(None);
    }
    let lower = a0_range
        .lo
        .map(|b| b.val.as_rational().expect("rational bound").clone());
    Ok(Some(AInterval { lower, upper }))
}

/// Closed forms of `Z^{b, b^2, a}` on the simples of the omega collection.
pub fn simplecase_z_oracle(beta: &Q, a: &Q) -> [ChargeValue; 4] {
    let b = beta;
    let b2 = b * b;
    let b3 = &b2 * b;
    let h = q(1, 2);
    [
        ChargeValue::new(&b3 / qi(6) - a * b, Q::zero()),
        ChargeValue::new(
            -&h * &b3 - &h * &b2 + &h * b - q(1, 6) + a * (qi(3) * b + qi(1)),
            -b + &h,
        ),
        ChargeValue::new(&h * &b3 + &b2 - q(2, 3) - a * (qi(3) * b + qi(2)), qi(2) * b),
        ChargeValue::new(
            -&b3 / qi(6) - &h * &b2 - &h * b - q(1, 6) + a * (b + qi(1)),
            -b - &h,
        ),
    ]
}

/// `a0(b) = (3b^3 + 6b^2 - 4) / (6 (3b + 2))`, where `Re z2` vanishes.
pub fn simplecase_a0(beta: &Q) -> Q {
    let b2 = beta * beta;
    (qi(3) * &b2 * beta + qi(6) * &b2 - qi(4)) / (qi(6) * (qi(3) * beta + qi(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> NumClass {
        NumClass::parse_any(s).unwrap()
    }

    #[test]
    fn builtins_are_valid() {
        for spec in [CollectionSpec::beilinson4(), CollectionSpec::omega(), CollectionSpec::lines()] {
            spec.validate().unwrap();
        }
        assert!(CollectionSpec::builtin("nope").is_err());
    }

    #[test]
    fn simples() {
        let s = simples_classes(&CollectionSpec::beilinson4());
        assert_eq!(s, [c("1,1,1/2,1/6"), c("-1,0,0,0"), c("3,-2,0,2/3"), c("-1,1,-1/2,1/6")]);
        let s = simples_classes(&CollectionSpec::omega());
        assert_eq!(s, [c("O"), -c("Omega(1)"), c("Omega2(2)"), -c("O(-1)")]);
        let s = simples_classes(&CollectionSpec::lines());
        assert_eq!(s, [c("O"), -c("O(-1)"), c("O(-2)"), -c("O(-3)")]);
    }

    #[test]
    fn cones() {
        let spec = CollectionSpec::beilinson4();
        let zs = simple_charges(&spec, &q(-1, 4), &q(1, 8), &q(1, 32));
        assert!(cone_check(&zs, ConeMode::HalfPlane));
        assert!(!cone_check(&[ChargeValue::new(qi(1), qi(0))], ConeMode::StrictLeft));
        assert!(!cone_check(&[ChargeValue::new(qi(1), qi(0))], ConeMode::HalfPlane));
        let spread = [ChargeValue::new(qi(1), qi(1)), ChargeValue::new(qi(-1), qi(-2))];
        assert!(!cone_check(&spread, ConeMode::HalfPlane));
        let opposite = [ChargeValue::new(qi(1), qi(1)), ChargeValue::new(qi(-1), qi(-1))];
        assert!(cone_check(&opposite, ConeMode::HalfPlane));
        assert!(cone_check(&[ChargeValue::new(qi(0), qi(0))], ConeMode::HalfPlane));
        let b = q(-1, 4);
        let zs = simplecase_z_oracle(&b, &simplecase_a0(&b));
        assert!(cone_check(&zs, ConeMode::StrictLeft));
    }

    #[test]
    fn region_check() {
        assert!(thm_region_check(&q(-1, 4), &q(1, 8)).passed);
        let r = thm_region_check(&qi(0), &qi(1));
        assert!(!r.passed && !r.verdict("omega").unwrap().passed);
        let r = thm_region_check(&q(-1, 2), &q(1, 8));
        assert!(!r.passed && !r.verdict("in_u").unwrap().passed);
    }

    #[test]
    fn omega_example() {
        let b = q(-1, 4);
        let a0 = simplecase_a0(&b);
        assert_eq!(a0, q(-47, 96));
        let rep = general_condition_check(&CollectionSpec::omega(), &b, &a0).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(
            rep.interval,
            Some(AInterval {
                lower: Some(q(-47, 96)),
                upper: q(1, 96)
            })
        );
        assert_eq!(rep.interval.unwrap().to_string(), "(-47/96, 1/96)");
    }

    #[test]
    fn lines_example() {
        let b = q(-5, 4);
        let rep = general_condition_check(&CollectionSpec::lines(), &b, &q(3, 32)).unwrap();
        assert!(rep.passed, "{rep:#?}");
        assert_eq!(
            admissible_a_interval(&CollectionSpec::lines(), &b).unwrap(),
            Some(AInterval {
                lower: Some(q(3, 32)),
                upper: q(25, 96)
            })
        );
        let rep = general_condition_check(&CollectionSpec::lines(), &q(-1, 2), &q(3, 32)).unwrap();
        assert!(!rep.passed);
        assert_eq!(admissible_a_interval(&CollectionSpec::lines(), &q(-1, 2)).unwrap(), None);
    }

    #[test]
    fn structural_only() {
        let rep = structural_condition_check(&CollectionSpec::omega(), &q(-1, 4)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.verdicts.len(), 7);
        let rep = structural_condition_check(&CollectionSpec::lines(), &q(-1, 2)).unwrap();
        assert!(!rep.passed && rep.interval.is_none());
    }

    #[test]
    fn omega_at_minus_third() {
        let got = admissible_a_interval(&CollectionSpec::omega(), &q(-1, 3)).unwrap();
        assert_eq!(
            got,
            Some(AInterval {
                lower: Some(q(-31, 54)),
                upper: q(1, 54)
            })
        );
    }

    #[test]
    fn oracle_values() {
        let b = q(-1, 4);
        assert_eq!(simplecase_z_oracle(&b, &qi(0))[0].re, q(-1, 384));
        let a0 = simplecase_a0(&b);
        let z = simplecase_z_oracle(&b, &a0);
        assert_eq!(z[2].re, qi(0));
        assert_eq!(z[1].re, q(-7, 16));
    }

    #[test]
    fn custom_collections() {
        let json = r#"{"names":["a","b","c","d"],"classes":[["1","-3","9/2","-9/2"],["1","-2","2","-4/3"],["1","-1","1/2","-1/6"],["1","0","0","0"]]}"#;
        let spec = CollectionSpec::from_json(json).unwrap();
        assert_eq!(spec.classes, CollectionSpec::lines().classes);
        let rep = general_condition_check(&spec, &q(-5, 4), &q(3, 32)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.notes.len(), 1);
        let unordered = r#"{"names":["a","b","c","d"],"classes":[["1","0","0","0"],["1","-2","2","-4/3"],["1","-1","1/2","-1/6"],["1","1","1/2","1/6"]]}"#;
        assert!(matches!(CollectionSpec::from_json(unordered), Err(Error::Input(_))));
        let not_exc = r#"{"names":["a","b","c","d"],"classes":[["2","-6","9","-9"],["1","-2","2","-4/3"],["1","-1","1/2","-1/6"],["1","0","0","0"]]}"#;
        assert!(CollectionSpec::from_json(not_exc).is_err());
        assert!(matches!(CollectionSpec::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn domain_errors() {
        let mut spec = CollectionSpec::lines();
        spec.classes[3] = c("0,1,0,0");
        assert!(matches!(general_condition_check(&spec, &qi(-1), &qi(0)), Err(Error::Domain(_))));
    }
}
