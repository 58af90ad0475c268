//! Numerical walls for a fixed class in the `(beta, alpha)` plane.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interval::{Bound, Interval};
use crate::numclass::NumClass;
use crate::rational::{ceil_q, floor_q, fmt_q, q, qi, Q};
use crate::surd::QuadSurd;
use crate::tiltcalc::discriminant;

/// The line `a * alpha + b * beta + c = 0`, scaled to coprime integers with
/// the first nonzero coefficient positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Wall {
    a: Q,
    b: Q,
    c: Q,
}

impl Wall {
    /// `None` unless `(a, b) != (0, 0)`; otherwise the set is empty or the whole plane.
    pub fn from_coeffs(a: Q, b: Q, c: Q) -> Option<Wall> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let den_lcm = [&a, &b, &c]
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = [&a, &b, &c]
            .iter()
            .map(|x| (*x * Q::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let lead_negative = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        let s = if lead_negative { -g } else { g };
        let n = |x: &BigInt| Q::from_integer(x / &s);
        Some(Wall {
            a: n(&ints[0]),
            b: n(&ints[1]),
            c: n(&ints[2]),
        })
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn c(&self) -> &Q {
        &self.c
    }

    pub fn eval(&self, beta: &Q, alpha: &Q) -> Q {
        &self.a * alpha + &self.b * beta + &self.c
    }

    pub fn passes_through(&self, beta: &Q, alpha: &Q) -> bool {
        self.eval(beta, alpha).is_zero()
    }

    /// `d alpha / d beta`, or `None` for a vertical line.
    pub fn slope(&self) -> Option<Q> {
        (!self.a.is_zero()).then(|| -&self.b / &self.a)
    }

    pub fn alpha_at(&self, beta: &Q) -> Option<Q> {
        (!self.a.is_zero()).then(|| -(&self.b * beta + &self.c) / &self.a)
    }

    /// `beta` of a vertical line.
    pub fn vertical_beta(&self) -> Option<Q> {
        (self.a.is_zero() && !self.b.is_zero()).then(|| -&self.c / &self.b)
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, var) in [(&self.a, "alpha"), (&self.b, "beta"), (&self.c, "")] {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            let body = match (var.is_empty(), mag.is_one()) {
                (true, _) => fmt_q(&mag),
                (false, true) => var.to_string(),
                (false, false) => format!("{}*{}", fmt_q(&mag), var),
            };
            if out.is_empty() {
                out = if coef.is_negative() { format!("-{body}") } else { body };
            } else {
                out.push_str(if coef.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        write!(f, "{out} = 0")
    }
}

/// The equal-tilt-slope locus of `v` and `w`; `None` when it is not a line, which
/// happens for proportional truncations and for two classes of rank zero.
pub fn wall_between(v: &NumClass, w: &NumClass) -> Option<Wall> {
    Wall::from_coeffs(
        &w.v0 * &v.v1 - &v.v0 * &w.v1,
        &w.v2 * &v.v0 - &v.v2 * &w.v0,
        &v.v2 * &w.v1 - &w.v2 * &v.v1,
    )
}

/// `(v1/v0, v2/v0)`, the common point of all walls of `v`.
pub fn pi_point(v: &NumClass) -> Option<(Q, Q)> {
    (!v.v0.is_zero()).then(|| (&v.v1 / &v.v0, &v.v2 / &v.v0))
}

/// Common slope `v2/v1` of the walls of a rank-zero class.
pub fn common_slope(v: &NumClass) -> Result<Option<Q>> {
    if !v.v0.is_zero() {
        return Err(Error::Domain(format!("common slope needs v0 = 0, got {v}")));
    }
    Ok((!v.v1.is_zero()).then(|| &v.v2 / &v.v1))
}

pub fn passes_through(wall: &Wall, point: &(Q, Q)) -> bool {
    wall.passes_through(&point.0, &point.1)
}

/// Rectangle `[beta_min, beta_max] x [alpha_min, alpha_max]` intersected with
/// `{ 2 alpha - beta^2 >= min_omega_sq }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub beta_min: Q,
    pub beta_max: Q,
    pub alpha_min: Q,
    pub alpha_max: Q,
    pub min_omega_sq: Q,
}

impl Region {
    pub const DEFAULT_MIN_OMEGA_SQ: (i64, i64) = (1, 16);

    pub fn new(beta_min: Q, beta_max: Q, alpha_min: Q, alpha_max: Q) -> Result<Region> {
        if beta_min > beta_max || alpha_min > alpha_max {
            return Err(Error::Input("empty rectangle".into()));
        }
        Ok(Region {
            beta_min,
            beta_max,
            alpha_min,
            alpha_max,
            min_omega_sq: q(Self::DEFAULT_MIN_OMEGA_SQ.0, Self::DEFAULT_MIN_OMEGA_SQ.1),
        })
    }

    pub fn with_min_omega_sq(mut self, w: Q) -> Result<Region> {
        if !w.is_positive() {
            return Err(Error::Input(format!(
                "min omega^2 must be positive for a finite search, got {}",
                fmt_q(&w)
            )));
        }
        self.min_omega_sq = w;
        Ok(self)
    }

    pub fn contains_rect(&self, beta: &Q, alpha: &Q) -> bool {
        *beta >= self.beta_min && *beta <= self.beta_max && *alpha >= self.alpha_min && *alpha <= self.alpha_max
    }

    pub fn contains(&self, beta: &Q, alpha: &Q) -> bool {
        self.contains_rect(beta, alpha) && qi(2) * alpha - beta * beta >= self.min_omega_sq
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateWall {
    pub wall: Wall,
    pub witness: NumClass,
}

/// Lattice box searched for witnesses, with the quantities it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub rank_bound: BigInt,
    pub v1_bound: BigInt,
    pub twice_v2_bound: BigInt,
    /// Upper bound of `v1 - beta v0` for `v` over the rectangle.
    pub im_max: Q,
    /// Integer upper bound of `|w0 - l v0|` where `Z(w) = l Z(v)`.
    pub mu_bound: BigInt,
    pub min_omega_sq: Q,
    pub disc_limit: Q,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallEnumeration {
    pub walls: Vec<CandidateWall>,
    pub search_box: SearchBox,
}

fn abs_max(x: &Q, y: &Q) -> Q {
    x.abs().max(y.abs())
}

/// Least integer `r >= 0` with `r^2 >= y`.
fn ceil_sqrt(y: &Q) -> BigInt {
    let c = ceil_q(y).max(BigInt::zero());
    let r = c.sqrt();
    if &r * &r == c {
        r
    } else {
        r + 1
    }
}

/// Bounds for a witness `w` of a wall meeting the region at `p = (b, alpha)`.
///
/// On the wall `Z(w) = l Z(v)` with `0 < l < 1`, so in the first three
/// coordinates `w = l v + m (1, b, alpha)` for some `m`. With
/// `c = b v1 - alpha v0 - v2`,
/// `Dbar(w) = l^2 Dbar(v) + 2 l m c - m^2 omega^2` and
/// `Dbar(v - w) = (1 - l)^2 Dbar(v) - 2 (1 - l) m c - m^2 omega^2`.
/// Both are nonnegative; adding `1 - l` times the first to `l` times the second gives
/// `m^2 omega^2 <= l (1 - l) Dbar(v) <= Dbar(v) / 4`, so
/// `|m| <= M = sqrt(Dbar(v) / (4 omega_min^2))` and
/// `|w0| <= |v0| + M`, `|w1| <= |v1| + M |b|_max`, `|w2| <= |v2| + M |alpha|_max`.
fn derive_box(v: &NumClass, region: &Region, disc_limit: &Q) -> SearchBox {
    let xv = |b: &Q| &v.v1 - b * &v.v0;
    let im_max = xv(&region.beta_min).max(xv(&region.beta_max)).max(Q::zero());
    let beta_abs = abs_max(&region.beta_min, &region.beta_max);
    let alpha_abs = abs_max(&region.alpha_min, &region.alpha_max);
    let mu_bound = ceil_sqrt(&(discriminant(v) / (qi(4) * &region.min_omega_sq)));
    let m = Q::from_integer(mu_bound.clone());
    SearchBox {
        rank_bound: floor_q(&(v.v0.abs() + &m)),
        v1_bound: floor_q(&(v.v1.abs() + &m * &beta_abs)),
        twice_v2_bound: floor_q(&(qi(2) * (v.v2.abs() + &m * &alpha_abs))),
        im_max,
        mu_bound,
        min_omega_sq: region.min_omega_sq.clone(),
        disc_limit: disc_limit.clone(),
    }
}

/// Is there a point of `wall` in `region` where `0 < v1^b(w) < v1^b(v)`?
fn wall_meets_region(wall: &Wall, v: &NumClass, w: &NumClass, region: &Region) -> bool {
    let gap = v - w;
    if let Some(b0) = wall.vertical_beta() {
        if b0 < region.beta_min || b0 > region.beta_max {
            return false;
        }
        let xw = &w.v1 - &b0 * &w.v0;
        let xg = &gap.v1 - &b0 * &gap.v0;
        if !xw.is_positive() || !xg.is_positive() {
            return false;
        }
        let floor_alpha = (&b0 * &b0 + &region.min_omega_sq) / qi(2);
        return region.alpha_min.clone().max(floor_alpha) <= region.alpha_max;
    }
    let m = wall.slope().expect("non-vertical");
    let k = wall.alpha_at(&Q::zero()).expect("non-vertical");
    let mut iv = Interval::closed(region.beta_min.clone(), region.beta_max.clone());
    // alpha_min <= m t + k <= alpha_max
    if !iv.linear(&(&k - &region.alpha_min), &m, false) || !iv.linear(&(&region.alpha_max - &k), &-&m, false) {
        return false;
    }
    // x_w = w1 - t w0 > 0 and x_v - x_w > 0
    if !iv.linear(&w.v1, &-&w.v0, true) || !iv.linear(&gap.v1, &-&gap.v0, true) {
        return false;
    }
    // 2 (m t + k) - t^2 >= min_omega_sq  <=>  t in [m - sqrt(D), m + sqrt(D)]
    let d = &m * &m + qi(2) * &k - &region.min_omega_sq;
    if d.is_negative() {
        return false;
    }
    let lo = QuadSurd::new(m.clone(), -Q::one(), &d).expect("d >= 0");
    let hi = QuadSurd::new(m, Q::one(), &d).expect("d >= 0");
    iv.raise(Bound { val: lo, closed: true });
    iv.lower(Bound { val: hi, closed: true });
    !iv.is_empty()
}

fn witness_key(w: &NumClass) -> (Q, Q, NumClass) {
    (w.v0.abs(), w.v1.abs(), w.clone())
}

fn merge(into: &mut BTreeMap<Wall, NumClass>, wall: Wall, w: NumClass) {
    match into.get(&wall) {
        Some(cur) if witness_key(cur) <= witness_key(&w) => {}
        _ => {
            into.insert(wall, w);
        }
    }
}

/// `w2` range from `Dbar(w) >= 0`, `Dbar(v - w) >= 0` and their sum `<= limit`.
fn w2_interval(v: &NumClass, w0: &Q, w1: &Q, limit: &Q, box_half: &Q) -> Option<(Q, Q)> {
    let mut lo = -box_half.clone();
    let mut hi = box_half.clone();
    let g0 = &v.v0 - w0;
    let g1 = &v.v1 - w1;
    // each constraint reads c0 + c1 w2 >= 0
    let constraints = [
        // Dbar(w) = w1^2 - 2 w0 w2
        (w1 * w1, qi(-2) * w0),
        // Dbar(v - w) = g1^2 - 2 g0 (v2 - w2)
        (&g1 * &g1 - qi(2) * &g0 * &v.v2, qi(2) * &g0),
        // limit - Dbar(w) - Dbar(v - w)
        (limit - w1 * w1 - &g1 * &g1 + qi(2) * &g0 * &v.v2, qi(2) * w0 - qi(2) * &g0),
    ];
    for (c0, c1) in constraints {
        if c1.is_zero() {
            if c0.is_negative() {
                return None;
            }
            continue;
        }
        let t = -c0 / &c1;
        if c1.is_positive() {
            lo = lo.max(t);
        } else {
            hi = hi.min(t);
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Integral classes `w` whose wall with `v` meets `region` where
/// `0 < Im Z(w) < Im Z(v)`, filtered by the discriminant budget
/// `Dbar(w) + Dbar(v - w) <= Dbar(v) + disc_bound`.
///
/// Runs in parallel over ranks; the result does not depend on the thread count.
pub fn enumerate_candidate_walls(v: &NumClass, region: &Region, disc_bound: &Q) -> Result<WallEnumeration> {
    if disc_bound.is_negative() {
        return Err(Error::Input(format!("disc bound must be >= 0, got {}", fmt_q(disc_bound))));
    }
    let dv = discriminant(v);
    if dv.is_negative() {
        return Err(Error::Domain(format!(
            "precondition violated: Dbar({v}) = {} < 0",
            fmt_q(&dv)
        )));
    }
    if !region.min_omega_sq.is_positive() {
        return Err(Error::Input("region needs a positive omega^2 floor".into()));
    }
    let limit = &dv + disc_bound;
    let sbox = derive_box(v, region, &limit);
    let n0 = sbox.rank_bound.to_i64().ok_or_else(|| Error::Input("search box too large".into()))?;
    let n1 = sbox.v1_bound.to_i64().ok_or_else(|| Error::Input("search box too large".into()))?;
    let x_max = ceil_q(&sbox.im_max).to_i64().ok_or_else(|| Error::Input("search box too large".into()))?;
    let half = Q::new(sbox.twice_v2_bound.clone(), BigInt::from(2));

    let found: BTreeMap<Wall, NumClass> = (-n0..=n0)
        .into_par_iter()
        .map(|r0| {
            let mut local = BTreeMap::new();
            let w0 = qi(r0);
            // w1 - t w0 lies in (0, X) for some t in the beta range
            let (t_lo, t_hi) = if r0 >= 0 {
                (&region.beta_min, &region.beta_max)
            } else {
                (&region.beta_max, &region.beta_min)
            };
            let w1_lo = floor_q(&(t_lo * &w0)).to_i64().expect("bounded").max(-n1);
            let w1_hi = (ceil_q(&(t_hi * &w0)).to_i64().expect("bounded") + x_max).min(n1);
            for r1 in w1_lo..=w1_hi {
                let w1 = qi(r1);
                let Some((lo, hi)) = w2_interval(v, &w0, &w1, &limit, &half) else {
                    continue;
                };
                // integral classes have w2 in w1^2/2 + Z
                let offset = Q::new(BigInt::from(r1 * r1), BigInt::from(2));
                let start = ceil_q(&(&lo - &offset));
                let end = floor_q(&(&hi - &offset));
                if start > end {
                    continue;
                }
                // 0 < w1 - t w0 < v1 - t v0 for some t in [beta_min, beta_max]
                let mut iv = Interval::closed(region.beta_min.clone(), region.beta_max.clone());
                let g0 = &v.v0 - &w0;
                let g1 = &v.v1 - &w1;
                if !iv.linear(&w1, &-&w0, true) || !iv.linear(&g1, &-&g0, true) || iv.is_empty() {
                    continue;
                }
                let mut k = start;
                while k <= end {
                    let w2 = Q::from_integer(k.clone()) + &offset;
                    k += 1;
                    let Some(w) = NumClass::complete_integral(&w0, &w1, &w2) else {
                        continue;
                    };
                    let Some(wall) = wall_between(v, &w) else {
                        continue;
                    };
                    if wall_meets_region(&wall, v, &w, region) {
                        merge(&mut local, wall, w);
                    }
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (wall, w) in b {
                merge(&mut a, wall, w);
            }
            a
        });

    Ok(WallEnumeration {
        walls: found
            .into_iter()
            .map(|(wall, witness)| CandidateWall { wall, witness })
            .collect(),
        search_box: sbox,
    })
}
