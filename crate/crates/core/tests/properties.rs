use num_traits::{Signed, Zero};
use proptest::prelude::*;

use tiltwall::euler::{chi_local, chi_pair_p3, spherical_twist_class};
use tiltwall::heartgate::{admissible_a_interval, simplecase_a0, AInterval, CollectionSpec};
use tiltwall::numclass::NumClass;
use tiltwall::rational::{q, qi, Q};
use tiltwall::surd::QuadSurd;
use tiltwall::tiltcalc::{
    bg_margin, bg_margin_at, curve_ce, curve_endpoint, discriminant, reduce_to_fundamental, twisted_v,
    ParamPoint,
};
use tiltwall::walls::{pi_point, wall_between};

fn rational(span: i64) -> impl Strategy<Value = Q> {
    (-span * 60..=span * 60, 1i64..=60).prop_map(|(n, d)| q(n, d))
}

fn any_class() -> impl Strategy<Value = NumClass> {
    [rational(4), rational(4), rational(4), rational(4)].prop_map(NumClass::from_array)
}

fn integral_class() -> impl Strategy<Value = NumClass> {
    (-4i64..=4, -6i64..=6, -5i64..=5, -4i64..=4).prop_map(|(v0, v1, k, m)| {
        let c = NumClass::complete_integral(&qi(v0), &qi(v1), &(q(v1 * v1, 2) + qi(k))).unwrap();
        NumClass::new(c.v0, c.v1, c.v2, c.v3 + qi(m))
    })
}

fn point() -> impl Strategy<Value = ParamPoint> {
    (rational(3), (1i64..=400, 1i64..=60)).prop_map(|(b, (n, d))| {
        let a = &b * &b / qi(2) + q(n, d);
        ParamPoint::new(b, a).unwrap()
    })
}

/// `v * (1, -b, b^2/2, -b^3/6)` truncated after degree three, written out by hand.
fn twist_by_product(v: &NumClass, b: &Q) -> NumClass {
    let e = [qi(1), -b.clone(), b * b / qi(2), -(b * b * b) / qi(6)];
    let c = v.to_array();
    let mut out = [Q::zero(), Q::zero(), Q::zero(), Q::zero()];
    for i in 0..4 {
        for j in 0..4 - i {
            out[i + j] += &c[i] * &e[j];
        }
    }
    NumClass::from_array(out)
}

proptest! {
    #[test]
    fn tensor_powers_compose(v in any_class(), m in -6i64..=6, n in -6i64..=6) {
        prop_assert_eq!(v.tensor_line(m).tensor_line(n), v.tensor_line(m + n));
    }

    #[test]
    fn dual_is_an_involution_reversing_twists(v in any_class(), m in -6i64..=6) {
        prop_assert_eq!(v.dual_shifted().dual_shifted(), v.clone());
        prop_assert_eq!(v.tensor_line(m).dual_shifted(), v.dual_shifted().tensor_line(-m));
    }

    #[test]
    fn shift_parity(v in any_class(), k in -5i64..=5) {
        let want = if k % 2 == 0 { v.clone() } else { -v.clone() };
        prop_assert_eq!(v.shift(k), want);
    }

    #[test]
    fn literal_round_trip(v in any_class()) {
        let back: NumClass = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn twisted_character_is_a_product(v in any_class(), b in rational(3)) {
        prop_assert_eq!(twisted_v(&v, &b), twist_by_product(&v, &b));
    }

    #[test]
    fn discriminant_is_twist_invariant(v in any_class(), b in rational(3)) {
        let t = twisted_v(&v, &b);
        prop_assert_eq!(&t.v1 * &t.v1 - qi(2) * &t.v2 * &t.v0, discriminant(&v));
    }

    #[test]
    fn line_bundles_saturate_on_their_curve(d in -5i64..=5, b in rational(6)) {
        let l = NumClass::line_bundle(d);
        let curve = curve_ce(&l);
        if let Some(a) = curve.alpha_at(&b) {
            if curve.contains(&b, &a) {
                prop_assert_eq!(bg_margin_at(&l, &b, &a), Q::zero());
            }
        }
    }

    #[test]
    fn omega_shrinks_toward_the_endpoint(
        v in integral_class(),
        t1 in (1i64..=360, 1i64..=60),
        t2 in (1i64..=360, 1i64..=60),
    ) {
        prop_assume!(!v.v0.is_zero() && !discriminant(&v).is_negative());
        let curve = curve_ce(&v);
        let end = curve_endpoint(&v).unwrap();
        // the branch runs below the endpoint for positive rank and above it otherwise
        let up = v.v0.is_negative();
        let mut n = qi(end.to_f64().floor() as i64 + if up { 2 } else { -1 });
        while (QuadSurd::rational(n.clone()) > end) != up {
            n += if up { qi(1) } else { qi(-1) };
        }
        let along = |(k, d): (i64, i64)| if up { &n + q(k, d) } else { &n - q(k, d) };
        let (b1, b2) = (along(t1), along(t2));
        prop_assume!(b1 != b2);
        let (a1, a2) = (curve.alpha_at(&b1).unwrap(), curve.alpha_at(&b2).unwrap());
        prop_assert!(curve.contains(&b1, &a1) && curve.contains(&b2, &a2));
        let near_first = (b1 < b2) == up;
        let w = |b: &Q, a: &Q| qi(2) * a - b * b;
        let (wn, wf) = if near_first { (w(&b1, &a1), w(&b2, &a2)) } else { (w(&b2, &a2), w(&b1, &a1)) };
        prop_assert!(wn < wf);
    }

    #[test]
    fn reduction_lands_in_the_strip_and_inverts(p in point(), v in integral_class()) {
        let (r, log) = reduce_to_fundamental(&p);
        prop_assert!(*r.beta() >= q(-1, 2) && *r.beta() <= Q::zero());
        prop_assert_eq!(log.apply(&p), r.clone());
        prop_assert_eq!(log.inverse().apply(&r), p.clone());
        prop_assert_eq!(bg_margin(&log.apply_class(&v), &r), bg_margin(&v, &p));
    }

    #[test]
    fn euler_form_is_symmetric_and_matches_the_serre_sum(v in integral_class(), w in integral_class()) {
        prop_assert_eq!(chi_local(&v, &w), chi_local(&w, &v));
        let serre = chi_pair_p3(&v, &w) - chi_pair_p3(&v.tensor_line(4), &w);
        prop_assert_eq!(chi_local(&v, &w), serre);
    }

    #[test]
    fn twist_fixes_orthogonal_classes(d in -4i64..=4, v in integral_class()) {
        let s = NumClass::line_bundle(d);
        let t = spherical_twist_class(&s, &v).unwrap();
        if chi_local(&s, &v).is_zero() {
            prop_assert_eq!(t, v);
        } else {
            prop_assert_eq!(chi_local(&s, &t), -chi_local(&s, &v));
        }
    }

    #[test]
    fn walls_meet_at_pi(v in integral_class(), w in integral_class()) {
        if let (Some(wall), Some((b, a))) = (wall_between(&v, &w), pi_point(&v)) {
            prop_assert!(wall.passes_through(&b, &a));
        }
    }

    #[test]
    fn omega_interval_matches_closed_form(n in 1i64..200, d in 2i64..200) {
        prop_assume!(2 * n < d);
        let b = q(-n, d);
        let got = admissible_a_interval(&CollectionSpec::omega(), &b).unwrap();
        let want = AInterval { lower: Some(simplecase_a0(&b)), upper: &b * &b / qi(6) };
        prop_assert_eq!(got, Some(want));
    }

    #[test]
    fn surd_order_agrees_with_floats(a in rational(5), b in rational(5), r in 2i64..50, c in rational(5)) {
        let x = QuadSurd::new(a, b, &qi(r)).unwrap();
        let (xf, cf) = (x.to_f64(), tiltwall::rational::to_f64(&c));
        if (xf - cf).abs() > 1e-9 {
            prop_assert_eq!(x.cmp_q(&c), xf.partial_cmp(&cf).unwrap());
        }
    }
}

#[test]
fn builtins_are_numerically_spherical() {
    let mut classes: Vec<NumClass> = (-5..=5).map(NumClass::line_bundle).collect();
    classes.push(NumClass::named("T(-2)").unwrap());
    classes.push(NumClass::named("Omega(1)").unwrap());
    for c in classes {
        assert_eq!(chi_local(&c, &c), qi(2), "{c}");
    }
}

#[test]
fn named_aliases_agree() {
    assert_eq!(NumClass::named("T(-2)").unwrap(), NumClass::named("Omega2(2)").unwrap());
    assert_eq!(
        NumClass::named("O").unwrap() - NumClass::point(),
        NumClass::named("O^x").unwrap()
    );
    for d in -5..=5 {
        assert!(NumClass::line_bundle(d).is_integral());
    }
    assert!(!NumClass::from_array([qi(0), qi(0), q(1, 2), qi(0)]).is_integral());
    assert!(qi(-1).is_negative());
}
