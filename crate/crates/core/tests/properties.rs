use proptest::prelude::*;

use subres_core::{
    gen_prem, parse_poly, prem, tprem, DivisionKind, Integer, Poly, Ring, SizeMeasure, YPoly,
};
use subres_testkit::same_up_to_sign;

fn int() -> impl Strategy<Value = Integer> {
    any::<i64>().prop_map(Integer::from)
}

fn small_int() -> impl Strategy<Value = Integer> {
    (-1000i64..1000).prop_map(Integer::from)
}

fn nonzero_small() -> impl Strategy<Value = Integer> {
    small_int().prop_filter("nonzero", |c| !c.is_zero())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Integer>> {
    prop::collection::vec(small_int(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn full_poly(max_deg: usize) -> impl Strategy<Value = Poly<Integer>> {
    (
        nonzero_small(),
        prop::collection::vec(small_int(), 0..max_deg),
        nonzero_small(),
    )
        .prop_map(|(t, mid, l)| {
            let mut c = vec![t];
            c.extend(mid);
            c.push(l);
            Poly::new(c)
        })
}

fn ypoly() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(-50i64..50, 0..5).prop_map(YPoly::from_coeffs)
}

fn measure() -> impl Strategy<Value = SizeMeasure> {
    prop_oneof![
        Just(SizeMeasure::Bits),
        Just(SizeMeasure::Degree),
        Just(SizeMeasure::Terms)
    ]
}

proptest! {
    #[test]
    fn exact_div_inverts_mul(q in int(), b in int().prop_filter("nonzero", |b| !b.is_zero())) {
        let a = q.clone() * &b;
        prop_assert_eq!(a.exact_div(&b), Ok(q));
    }

    #[test]
    fn ypoly_exact_div_inverts_mul(q in ypoly(), b in ypoly().prop_filter("nonzero", |b| !b.is_zero())) {
        let a = q.clone() * &b;
        prop_assert_eq!(a.exact_div(&b), Ok(q));
    }

    #[test]
    fn integer_gcd_scales(a in small_int(), b in small_int(), c in nonzero_small()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.exact_div(&g).is_ok() && b.exact_div(&g).is_ok());
        let scaled = (a * &c).gcd(&(b * &c)).unwrap();
        prop_assert_eq!(scaled, g * &c.normalize());
    }

    #[test]
    fn ypoly_gcd_scales(a in ypoly(), b in ypoly(), c in ypoly().prop_filter("nonzero", |c| !c.is_zero())) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = a.gcd(&b).unwrap();
        prop_assert!(a.exact_div(&g).is_ok() && b.exact_div(&g).is_ok());
        let scaled = (a * &c).gcd(&(b * &c)).unwrap();
        let expected = g * &c;
        prop_assert!(scaled == expected || scaled == -expected);
    }

    #[test]
    fn bit_size_is_subadditive(a in int(), b in int()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let size = |x: &Integer| x.relative_size(SizeMeasure::Bits).unwrap();
        prop_assert!(size(&(a.clone() * &b)) <= size(&a) + size(&b));
    }

    #[test]
    fn reverse_is_multiplicative(p in full_poly(6), q in full_poly(6)) {
        let lhs = (&p * &q).reverse().unwrap();
        let rhs = &p.reverse().unwrap() * &q.reverse().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn full_reduce_splits_x_power(p in poly(8)) {
        prop_assume!(!p.is_zero());
        let (full, t) = p.full_reduce().unwrap();
        prop_assert!(full.is_full());
        prop_assert_eq!(full.shift(t), p);
    }

    #[test]
    fn content_times_primitive(p in poly(8)) {
        prop_assume!(!p.is_zero());
        let (c, pp) = p.content_primitive().unwrap();
        prop_assert!(same_up_to_sign(&pp.scale(&c), &p));
        prop_assert!(pp.content().unwrap().is_one());
        prop_assert!(!pp.lc().unwrap().is_negative());
    }

    #[test]
    fn prem_identity(u in full_poly(9), v in full_poly(5)) {
        prop_assume!(u.degree() >= v.degree());
        let delta = u.degree().unwrap() - v.degree().unwrap();
        let r = prem(&u, &v).unwrap();
        prop_assert!(r.is_zero() || r.degree() < v.degree());
        let lhs = u.scale(&v.lc().unwrap().pow(delta + 1)) - &r;
        prop_assert!(v.divides(&lhs));
    }

    #[test]
    fn tprem_identity(u in full_poly(9), v in full_poly(5)) {
        prop_assume!(u.degree() >= v.degree());
        let delta = u.degree().unwrap() - v.degree().unwrap();
        let w = tprem(&u, &v).unwrap();
        prop_assert!(w.is_zero() || w.trail_degree().unwrap() > delta);
        prop_assert!(w.degree() <= u.degree());
        let lhs = u.scale(&v.coeffs()[0].pow(delta + 1)) - &w;
        prop_assert!(v.divides(&lhs));
    }

    #[test]
    fn mirror_identity(u in full_poly(9), v in full_poly(5)) {
        prop_assume!(u.degree() >= v.degree());
        let direct = tprem(&u, &v).unwrap();
        let mirrored = prem(&u.reverse().unwrap(), &v.reverse().unwrap()).unwrap();
        prop_assert_eq!(direct.is_zero(), mirrored.is_zero());
        if !direct.is_zero() {
            let a = direct.full_reduce().unwrap().0;
            let b = mirrored.full_reduce().unwrap().0.reverse().unwrap();
            prop_assert!(same_up_to_sign(&a, &b));
        }
    }

    #[test]
    fn gen_prem_shape(u in full_poly(9), v in full_poly(5), m in measure()) {
        prop_assume!(u.degree() >= v.degree());
        let out = gen_prem(&u, &v, m).unwrap();
        prop_assert_eq!(out.delta, u.degree().unwrap() - v.degree().unwrap());
        prop_assert!(!out.g.is_zero() && !out.gbar.is_zero());
        if !out.r.is_zero() {
            prop_assert!(out.r.is_full());
            prop_assert!(out.r.degree() < v.degree());
        }
        let lead = prem(&u, &v).unwrap();
        if out.kind == DivisionKind::Lead && out.lambda == 0 {
            prop_assert_eq!(&out.r, &lead);
        }
    }

    #[test]
    fn print_parse_round_trip(p in poly(8)) {
        prop_assert_eq!(parse_poly::<Integer>(&p.to_string()), Ok(p));
    }

    #[test]
    fn print_parse_round_trip_zy(c in prop::collection::vec(ypoly(), 0..6)) {
        let p = Poly::new(c);
        prop_assert_eq!(parse_poly::<YPoly>(&p.to_string()), Ok(p));
    }
}
