//! Plot scenes for a class: the boundary of `U`, the curve `C_E`, walls and `Pi(v)`.
//!
//! Inclusion and clipping are decided exactly; only the SVG text rounds.

use std::cmp::Ordering;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::numclass::NumClass;
use crate::rational::{fmt_decimal, fmt_q, q, qi, Q};
use crate::surd::QuadSurd;
use crate::tiltcalc::{curve_ce, CurveCE, Side};
use crate::walls::{pi_point, Wall};

/// Plot rectangle `[beta_min, beta_max] x [alpha_min, alpha_max]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotRect {
    pub beta_min: Q,
    pub beta_max: Q,
    pub alpha_min: Q,
    pub alpha_max: Q,
}

impl PlotRect {
    pub fn contains(&self, beta: &Q, alpha: &Q) -> bool {
        *beta >= self.beta_min && *beta <= self.beta_max && *alpha >= self.alpha_min && *alpha <= self.alpha_max
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SceneCurve {
    /// `alpha = c2 beta^2 + c1 beta + c0` for `beta` in `[beta_lo, beta_hi]`.
    Parabola {
        label: String,
        c2: Q,
        c1: Q,
        c0: Q,
        beta_lo: QuadSurd,
        beta_hi: QuadSurd,
    },
    Vertical {
        label: String,
        beta: Q,
        alpha_lo: Q,
        alpha_hi: Q,
    },
    Segment {
        label: String,
        wall: Wall,
        from: (Q, Q),
        to: (Q, Q),
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenePoint {
    pub label: String,
    pub beta: Q,
    pub alpha: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SceneDescription {
    pub region: PlotRect,
    pub curves: Vec<SceneCurve>,
    pub points: Vec<ScenePoint>,
}

fn eval_parabola(c2: &Q, c1: &Q, c0: &Q, t: &QuadSurd) -> QuadSurd {
    let sq = t.checked_mul(t).expect("same field");
    sq.mul_q(c2).checked_add(&t.mul_q(c1)).expect("same field").add_q(c0)
}

/// The part of `alpha = c2 t^2 + c1 t + c0` (`c2 > 0`) over `[lo, hi]` that stays
/// below `alpha_max`, kept when it also reaches `alpha >= alpha_min`.
fn clip_parabola(
    rect: &PlotRect,
    c2: &Q,
    c1: &Q,
    c0: &Q,
    lo: QuadSurd,
    hi: QuadSurd,
) -> Option<(QuadSurd, QuadSurd)> {
    // c2 t^2 + c1 t + c0 - alpha_max <= 0 between the roots
    let disc = c1 * c1 - qi(4) * c2 * (c0 - &rect.alpha_max);
    if disc.is_negative() {
        return None;
    }
    let two_c2 = qi(2) * c2;
    let r1 = QuadSurd::new(-c1 / &two_c2, -(Q::one() / &two_c2), &disc).ok()?;
    let r2 = QuadSurd::new(-c1 / &two_c2, Q::one() / &two_c2, &disc).ok()?;
    let lo = lo.max(r1);
    let hi = hi.min(r2);
    if lo > hi {
        return None;
    }
    // convex: the maximum over [lo, hi] sits at an endpoint
    let top = eval_parabola(c2, c1, c0, &lo).max(eval_parabola(c2, c1, c0, &hi));
    (top.cmp_q(&rect.alpha_min) != Ordering::Less).then_some((lo, hi))
}

/// Liang-Barsky clipping of a line to the rectangle, exactly.
fn clip_wall(rect: &PlotRect, wall: &Wall) -> Option<((Q, Q), (Q, Q))> {
    if let Some(b0) = wall.vertical_beta() {
        if b0 < rect.beta_min || b0 > rect.beta_max {
            return None;
        }
        return Some(((b0.clone(), rect.alpha_min.clone()), (b0, rect.alpha_max.clone())));
    }
    let m = wall.slope().expect("non-vertical");
    let k = wall.alpha_at(&Q::zero()).expect("non-vertical");
    let mut lo = rect.beta_min.clone();
    let mut hi = rect.beta_max.clone();
    if m.is_zero() {
        if k < rect.alpha_min || k > rect.alpha_max {
            return None;
        }
    } else {
        let t1 = (&rect.alpha_min - &k) / &m;
        let t2 = (&rect.alpha_max - &k) / &m;
        let (a, b) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        lo = lo.max(a);
        hi = hi.min(b);
    }
    if lo > hi {
        return None;
    }
    let at = |t: &Q| (t.clone(), &m * t + &k);
    Some((at(&lo), at(&hi)))
}

pub fn plot_scene(v: &NumClass, region: &PlotRect, walls: &[Wall]) -> SceneDescription {
    let mut curves = Vec::new();
    let full = (
        QuadSurd::rational(region.beta_min.clone()),
        QuadSurd::rational(region.beta_max.clone()),
    );
    if let Some((lo, hi)) = clip_parabola(region, &q(1, 2), &qi(0), &qi(0), full.0.clone(), full.1.clone()) {
        curves.push(SceneCurve::Parabola {
            label: "boundary".into(),
            c2: q(1, 2),
            c1: qi(0),
            c0: qi(0),
            beta_lo: lo,
            beta_hi: hi,
        });
    }
    match curve_ce(v) {
        CurveCE::Parabola { c1, c0, endpoint, side } => {
            let (lo, hi) = match side {
                Side::Below => (full.0.clone(), full.1.clone().min(endpoint)),
                Side::Above => (full.0.clone().max(endpoint), full.1.clone()),
            };
            if lo <= hi {
                if let Some((lo, hi)) = clip_parabola(region, &qi(1), &c1, &c0, lo, hi) {
                    curves.push(SceneCurve::Parabola {
                        label: "C_E".into(),
                        c2: qi(1),
                        c1,
                        c0,
                        beta_lo: lo,
                        beta_hi: hi,
                    });
                }
            }
        }
        CurveCE::VerticalLine { beta0 } => {
            let alpha_lo = region.alpha_min.clone().max(&beta0 * &beta0 / qi(2));
            if beta0 >= region.beta_min && beta0 <= region.beta_max && alpha_lo <= region.alpha_max {
                curves.push(SceneCurve::Vertical {
                    label: "C_E".into(),
                    beta: beta0,
                    alpha_lo,
                    alpha_hi: region.alpha_max.clone(),
                });
            }
        }
        CurveCE::Empty => {}
    }
    for (i, wall) in walls.iter().enumerate() {
        if let Some((from, to)) = clip_wall(region, wall) {
            curves.push(SceneCurve::Segment {
                label: format!("wall {i}"),
                wall: wall.clone(),
                from,
                to,
            });
        }
    }
    let points = pi_point(v)
        .filter(|(b, a)| region.contains(b, a))
        .map(|(beta, alpha)| ScenePoint {
            label: "Pi".into(),
            beta,
            alpha,
        })
        .into_iter()
        .collect();
    SceneDescription {
        region: region.clone(),
        curves,
        points,
    }
}

#[derive(Serialize)]
struct RectJson {
    beta_min: String,
    beta_max: String,
    alpha_min: String,
    alpha_max: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum CurveJson {
    Parabola {
        label: String,
        coefficients: [String; 3],
        beta_lo: String,
        beta_hi: String,
    },
    Vertical {
        label: String,
        beta: String,
        alpha_lo: String,
        alpha_hi: String,
    },
    Segment {
        label: String,
        wall: [String; 3],
        from: [String; 2],
        to: [String; 2],
    },
}

#[derive(Serialize)]
struct PointJson {
    label: String,
    beta: String,
    alpha: String,
}

#[derive(Serialize)]
pub struct SceneJson {
    schema: &'static str,
    region: RectJson,
    curves: Vec<CurveJson>,
    points: Vec<PointJson>,
}

pub const SCENE_SCHEMA: &str = "tiltwall.scene/1";

impl SceneDescription {
    /// Serializable form: every number is an exact string (`p/q`, or `a+b*sqrt(d)`).
    pub fn to_json(&self) -> SceneJson {
        let r = &self.region;
        SceneJson {
            schema: SCENE_SCHEMA,
            region: RectJson {
                beta_min: fmt_q(&r.beta_min),
                beta_max: fmt_q(&r.beta_max),
                alpha_min: fmt_q(&r.alpha_min),
                alpha_max: fmt_q(&r.alpha_max),
            },
            curves: self
                .curves
                .iter()
                .map(|c| match c {
                    SceneCurve::Parabola { label, c2, c1, c0, beta_lo, beta_hi } => CurveJson::Parabola {
                        label: label.clone(),
                        coefficients: [fmt_q(c2), fmt_q(c1), fmt_q(c0)],
                        beta_lo: beta_lo.to_string(),
                        beta_hi: beta_hi.to_string(),
                    },
                    SceneCurve::Vertical { label, beta, alpha_lo, alpha_hi } => CurveJson::Vertical {
                        label: label.clone(),
                        beta: fmt_q(beta),
                        alpha_lo: fmt_q(alpha_lo),
                        alpha_hi: fmt_q(alpha_hi),
                    },
                    SceneCurve::Segment { label, wall, from, to } => CurveJson::Segment {
                        label: label.clone(),
                        wall: [fmt_q(wall.a()), fmt_q(wall.b()), fmt_q(wall.c())],
                        from: [fmt_q(&from.0), fmt_q(&from.1)],
                        to: [fmt_q(&to.0), fmt_q(&to.1)],
                    },
                })
                .collect(),
            points: self
                .points
                .iter()
                .map(|p| PointJson {
                    label: p.label.clone(),
                    beta: fmt_q(&p.beta),
                    alpha: fmt_q(&p.alpha),
                })
                .collect(),
        }
    }

    /// SVG 1.1 with the rectangle mapped onto a fixed 640x480 view box.
    pub fn to_svg(&self, precision: usize) -> String {
        const W: i64 = 640;
        const H: i64 = 480;
        const PAD: i64 = 40;
        let r = &self.region;
        let bw = &r.beta_max - &r.beta_min;
        let aw = &r.alpha_max - &r.alpha_min;
        let sx = if bw.is_zero() { Q::one() } else { qi(W - 2 * PAD) / &bw };
        let sy = if aw.is_zero() { Q::one() } else { qi(H - 2 * PAD) / &aw };
        let fx = |b: &Q| fmt_decimal(&(qi(PAD) + (b - &r.beta_min) * &sx), precision);
        let fy = |a: &Q| fmt_decimal(&(qi(H - PAD) - (a - &r.alpha_min) * &sy), precision);

        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
        );
        let (x0, x1, y0, y1) = (fx(&r.beta_min), fx(&r.beta_max), fy(&r.alpha_max), fy(&r.alpha_min));
        let _ = writeln!(s, r#"<defs><clipPath id="region"><rect x="{x0}" y="{y0}" width="{}" height="{}"/></clipPath></defs>"#,
            fmt_decimal(&(&bw * &sx), precision), fmt_decimal(&(&aw * &sy), precision));
        let _ = writeln!(s, r##"<rect x="{x0}" y="{y0}" width="{}" height="{}" fill="none" stroke="#999"/>"##,
            fmt_decimal(&(&bw * &sx), precision), fmt_decimal(&(&aw * &sy), precision));
        let _ = writeln!(s, r#"<text x="{x0}" y="{}" font-size="11">{}</text>"#, fmt_decimal(&qi(H - PAD / 2), 0), fmt_q(&r.beta_min));
        let _ = writeln!(s, r#"<text x="{x1}" y="{}" font-size="11" text-anchor="end">{}</text>"#, fmt_decimal(&qi(H - PAD / 2), 0), fmt_q(&r.beta_max));
        let _ = writeln!(s, r#"<text x="4" y="{y1}" font-size="11">{}</text>"#, fmt_q(&r.alpha_min));
        let _ = writeln!(s, r#"<text x="4" y="{y0}" font-size="11">{}</text>"#, fmt_q(&r.alpha_max));
        let _ = writeln!(s, r#"<g clip-path="url(#region)" fill="none" stroke-width="1.5">"#);
        for c in &self.curves {
            match c {
                SceneCurve::Parabola { label, c2, c1, c0, beta_lo, beta_hi } => {
                    let lo = approx(beta_lo);
                    let hi = approx(beta_hi);
                    let n = 128;
                    let pts: Vec<String> = (0..=n)
                        .map(|i| {
                            let t = &lo + (&hi - &lo) * q(i, n);
                            let a = c2 * &t * &t + c1 * &t + c0;
                            format!("{},{}", fx(&t), fy(&a))
                        })
                        .collect();
                    let color = if label == "boundary" { "#000" } else { "#c0392b" };
                    let _ = writeln!(s, r#"<polyline data-label="{label}" stroke="{color}" points="{}"/>"#, pts.join(" "));
                }
                SceneCurve::Vertical { label, beta, alpha_lo, alpha_hi } => {
                    let _ = writeln!(s, r##"<line data-label="{label}" stroke="#c0392b" x1="{}" y1="{}" x2="{}" y2="{}"/>"##,
                        fx(beta), fy(alpha_lo), fx(beta), fy(alpha_hi));
                }
                SceneCurve::Segment { label, from, to, .. } => {
                    let _ = writeln!(s, r##"<line data-label="{label}" stroke="#2471a3" x1="{}" y1="{}" x2="{}" y2="{}"/>"##,
                        fx(&from.0), fy(&from.1), fx(&to.0), fy(&to.1));
                }
            }
        }
        let _ = writeln!(s, "</g>");
        for p in &self.points {
            let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="3" fill="#000"/>"##, fx(&p.beta), fy(&p.alpha));
            let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="11">{} ({}, {})</text>"#,
                fx(&p.beta), fy(&p.alpha), p.label, fmt_q(&p.beta), fmt_q(&p.alpha));
        }
        let _ = writeln!(s, "</svg>");
        s
    }
}

// rational approximation good to about 1e-12, only used for drawing
fn approx(x: &QuadSurd) -> Q {
    match x.as_rational() {
        Some(r) => r.clone(),
        None => Q::from_float(x.to_f64()).unwrap_or_else(Q::zero),
    }
}
