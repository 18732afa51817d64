use hassett_cubics::adc::{self, RationalPoint};
use hassett_cubics::hassett_rep;
use hassett_cubics::lattices;
use hassett_cubics::local_global::{self, Place, Verdict};
use hassett_cubics::qforms::{builtin, to_int_vector, BuiltinForm};
use hassett_cubics::Integer;
use num_integer::Integer as _;
use proptest::prelude::*;

fn b(x: i64) -> Integer {
    x.into()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn secant_step_preserves_value(
        w in prop::collection::vec(-6i64..=6, 3),
        d in prop::collection::vec(-40i64..=40, 3),
        g in any::<bool>(),
    ) {
        let form = builtin(if g { BuiltinForm::G } else { BuiltinForm::Q3 });
        let w = to_int_vector(&w);
        let d = to_int_vector(&d);
        prop_assume!(d.iter().any(|x| *x != b(0)));
        let p = adc::secant_parametrize(&form, &w, &d).unwrap();
        prop_assert!(p.holds(&form));
        let trace = adc::descend(&form, &p).unwrap();
        prop_assert!(trace.reached_integer());
        prop_assert!(trace.verify(&form));
        prop_assert_eq!(form.evaluate_int(&trace.terminal.v).unwrap(), p.m);
    }

    #[test]
    fn secant_denominator_identity(
        w in prop::collection::vec(-6i64..=6, 3),
        d in prop::collection::vec(-40i64..=40, 3),
    ) {
        let form = builtin(BuiltinForm::Q3);
        let w = to_int_vector(&w);
        let d = to_int_vector(&d);
        prop_assume!(d.iter().any(|x| *x != b(0)));
        let p = adc::secant_parametrize(&form, &w, &d).unwrap();
        prop_assume!(p.t > b(1));
        let RationalPoint { v, t, .. } = p.clone();
        let z: Vec<Integer> = v.iter().map(|x| x.div_floor(&t)).collect();
        let diff: Vec<Integer> = v.iter().zip(&z).map(|(a, c)| a - &t * c).collect();
        let qd = form.evaluate_int(&diff).unwrap();
        prop_assume!(qd > b(0) && qd < &t * &t);
        let out = adc::secant_step(&form, &p, &z).unwrap();
        prop_assert_eq!(out.t.clone(), qd / &t);
        prop_assert!(out.holds(&form));
    }

    #[test]
    fn parity_and_signs_preserve_g(x in -15i64..=15, y in -15i64..=15, z in -15i64..=15, u_one in any::<bool>()) {
        let v = to_int_vector(&[x, y, z]);
        let g = builtin(BuiltinForm::G);
        let value = g.evaluate_int(&v).unwrap();
        prop_assume!(value.mod_floor(&b(8)) == b(7));
        let fixed = hassett_rep::parity_fix(&v).unwrap();
        prop_assert_eq!(g.evaluate_int(&fixed).unwrap(), value.clone());
        let u = if u_one { 1 } else { -3 };
        let signed = hassett_rep::sign_normalize(&fixed, u).unwrap();
        prop_assert_eq!(g.evaluate_int(&signed).unwrap(), value);
        prop_assert!(signed.iter().all(|c| c.mod_floor(&b(4)) == b((-u).rem_euclid(4))));
    }

    #[test]
    fn t_round_trip(m in prop::collection::vec(-25i64..=24, 3), u_one in any::<bool>()) {
        let u = if u_one { 1 } else { -3 };
        // |4m − u| ≤ 99
        let g: Vec<Integer> = m.iter().map(|&k| b(4 * k - u)).collect();
        let xyz = hassett_rep::invert_t(&g, u).unwrap();
        prop_assert_eq!(hassett_rep::apply_t(&xyz, u).unwrap(), g);
    }

    #[test]
    fn local_precision_monotone(k in -500i64..5000, p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101]), r in 1u32..6) {
        let c = local_global::certify_local(&b(k), Place::Prime(p), r).unwrap();
        prop_assert!(c.replay());
        for lower in 1..r {
            prop_assert!(c.with_precision(lower).unwrap().replay());
        }
    }

    #[test]
    fn local_verdict_matches_criterion(k in 1i64..3000) {
        let r = local_global::certify_global(&b(k), None, 3).unwrap();
        prop_assert!(r.replay());
        let integral = builtin(BuiltinForm::G).find_representation(&b(k)).unwrap().is_some();
        let three = r.certificates.iter().find(|c| c.place == Place::Prime(3)).unwrap();
        prop_assert_eq!(r.verdict == Verdict::Solvable, integral);
        prop_assert_eq!(three.verdict == Verdict::Solvable, integral);
    }

    #[test]
    fn hassett_certificates_verify(n in 8i64..200_000) {
        let n = b(n);
        prop_assume!(hassett_rep::in_hassett(&n));
        let c = hassett_rep::represent(&n).unwrap();
        prop_assert!(hassett_rep::verify_certificate(&c));
    }

    #[test]
    fn discriminant_form_matches_f(v in prop::collection::vec(-9i64..=9, 4)) {
        let m = lattices::gram_m(0, 0).unwrap();
        let mut w = vec![b(0)];
        w.extend(to_int_vector(&v));
        let f = builtin(BuiltinForm::F);
        prop_assert_eq!(lattices::disc_pair(&m, &w).unwrap(), f.evaluate_int(&to_int_vector(&v)).unwrap());
    }
}

#[test]
fn isometries_compose() {
    for s in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        for t in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let u = lattices::isometry_to(s, t).unwrap();
            assert!(u.check().unwrap(), "{s:?} -> {t:?}");
        }
    }
}
