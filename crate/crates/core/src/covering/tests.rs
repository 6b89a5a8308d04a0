use super::*;
use crate::dessin::make_dessin;
use crate::field::FiniteField;
use crate::group::{Cyclic, Quaternion, Sl2, DEFAULT_CAP};
use proptest::prelude::*;

fn quaternion_dessin(m: u64) -> RegularDessin<Quaternion> {
    let g = Quaternion::new(m).unwrap();
    let b = g.mul(&g.x(), &g.y());
    let w = g.inv(&g.y());
    make_dessin(Arc::new(g), b, w, DEFAULT_CAP).unwrap()
}

fn center_of(g: &Quaternion) -> NormalSubgroup<<Quaternion as Group>::Elem> {
    NormalSubgroup::from_elements(g, "center", g.center_elements()).unwrap()
}

fn sl2(p: u32) -> Arc<Sl2> {
    Arc::new(Sl2::new(FiniteField::new(p, 1).unwrap()))
}

/// Search a PSL(2,7) generating pair of signature (2,3,7).
fn psl27_hurwitz() -> RegularDessin<Quotient<Sl2>> {
    let sl = sl2(7);
    let psl = Arc::new(quotient_group(sl.as_ref(), &sl.center()).unwrap());
    let elems = enumerate(psl.as_ref(), DEFAULT_CAP).unwrap();
    let invs: Vec<_> = elems.iter().filter(|x| psl.order_of(x) == 2).collect();
    let threes: Vec<_> = elems.iter().filter(|x| psl.order_of(x) == 3).collect();
    for b in &invs {
        for w in &threes {
            if psl.order_of(&psl.mul(b, w)) == 7 {
                if let Ok(d) = make_dessin(psl.clone(), **b, **w, DEFAULT_CAP) {
                    return d;
                }
            }
        }
    }
    panic!("no (2,3,7) pair in PSL(2,7)");
}

#[test]
fn quaternion_center_report() {
    let d = quaternion_dessin(2);
    let r = classify_covering(&d, &center_of(d.group()), DEFAULT_CAP).unwrap();
    assert_eq!((r.e_b, r.e_w, r.e_f), (2, 2, 2));
    assert!(r.totally_branched && !r.quasi_smooth && !r.smooth);
    assert_eq!(r.ram_points, 6);
    assert_eq!((r.chi, r.chi_quotient), (-2, 2));
    assert_eq!(r.minimal, Some(true));
    assert!(!r.bounds.upper_applicable);
    assert!(r.bounds.lower_ok && !r.bounds.lower_equality);
    assert!(r.riemann_hurwitz_holds());
    assert_eq!(r.ratio, "-1/1");
}

#[test]
fn quaternion_family_quotients() {
    for m in 2..=10 {
        let d = quaternion_dessin(m);
        let z = center_of(d.group());
        assert_eq!(d.euler_characteristic(), -2 * (m as i128 - 1));
        let q = algebraic_quotient(&d, &z, DEFAULT_CAP).unwrap();
        assert_eq!(q.euler_characteristic(), 2);
        let g = underlying_graph(&q);
        assert_eq!((g.black, g.white), (m as usize, m as usize));
        assert!(verify_quotient_theorem(&d, &z, DEFAULT_CAP).unwrap());
        let r = classify_covering(&d, &z, DEFAULT_CAP).unwrap();
        assert!(r.riemann_hurwitz_holds());
        assert_eq!(r.chi_quotient, 2);
    }
}

fn underlying_graph<G: Group>(d: &RegularDessin<G>) -> crate::dessin::BiCosetGraph {
    crate::dessin::underlying_graph(d, DEFAULT_CAP).unwrap()
}

#[test]
fn quaternion_quotient_is_klein_four_cycle() {
    let d = quaternion_dessin(2);
    let z = center_of(d.group());
    let q = algebraic_quotient(&d, &z, DEFAULT_CAP).unwrap();
    assert_eq!(q.group_order(), 4);
    assert_eq!(q.signature(), (2, 2, 2));
    let geo = geometric_quotient(&d, &z, DEFAULT_CAP).unwrap();
    assert_eq!((geo.black, geo.white, geo.edges, geo.faces), (2, 2, 4, 2));
    assert!(geo.edge_orbit_sizes.iter().all(|&s| s == 2));
}

#[test]
fn trivial_and_whole() {
    let d = quaternion_dessin(3);
    let g = d.group().as_ref();
    let triv = NormalSubgroup::trivial(g);
    let r = classify_covering(&d, &triv, DEFAULT_CAP).unwrap();
    assert!(r.smooth && r.sheets == 1 && r.ram_points == 0);
    assert_eq!(r.minimal, Some(false));
    assert!(r.bounds.lower_equality);
    assert!(verify_quotient_theorem(&d, &triv, DEFAULT_CAP).unwrap());
    let q = algebraic_quotient(&d, &triv, DEFAULT_CAP).unwrap();
    assert_eq!((q.signature(), q.group_order()), (d.signature(), d.group_order()));

    let whole = NormalSubgroup::whole(g, DEFAULT_CAP).unwrap();
    let geo = geometric_quotient(&d, &whole, DEFAULT_CAP).unwrap();
    assert_eq!((geo.black, geo.white, geo.edges, geo.faces), (1, 1, 1, 1));
    assert!(verify_quotient_theorem(&d, &whole, DEFAULT_CAP).unwrap());
    let r = classify_covering(&d, &whole, DEFAULT_CAP).unwrap();
    assert_eq!(r.chi_quotient, 2);
}

#[test]
fn cyclic_quotient_theorem() {
    let z12 = Arc::new(Cyclic::new(12));
    let d = make_dessin(z12.clone(), 1, 2, DEFAULT_CAP).unwrap();
    let n = NormalSubgroup::from_elements(z12.as_ref(), "<h^4>", vec![0, 4, 8]).unwrap();
    assert!(verify_quotient_theorem(&d, &n, DEFAULT_CAP).unwrap());
    let r = classify_covering(&d, &n, DEFAULT_CAP).unwrap();
    assert_eq!(r.quotient_order, 4);
    assert!(r.riemann_hurwitz_holds());
}

#[test]
fn sl2_11_odd_face_order_is_smooth() {
    let g = sl2(11);
    let (b, w) = g.standard_pair();
    let mut found = false;
    for i in 1..11 {
        let wi = g.pow(&w, i);
        if g.order_of(&g.mul(&b, &wi)) % 2 == 1 {
            let d = make_dessin(g.clone(), b, wi, DEFAULT_CAP).unwrap();
            let q = algebraic_quotient(&d, &g.center(), DEFAULT_CAP).unwrap();
            assert_eq!(q.signature(), d.signature());
            let r = classify_covering(&d, &g.center(), DEFAULT_CAP).unwrap();
            assert!(r.smooth && r.bounds.lower_equality);
            assert_eq!(r.chi_ratio(), Some(Ratio::from_integer(2)));
            found = true;
        }
    }
    assert!(found);
}

#[test]
fn schur_tests() {
    let g = sl2(5);
    let (b, w) = g.standard_pair();
    let w2 = g.pow(&w, 2);
    assert!(schur_smooth_test(&g, &b, &w2).unwrap());
    assert!(!schur_smooth_test(&g, &b, &w).unwrap());
    let minus = g.minus_identity();
    assert!(!schur_smooth_test(&g, &g.mul(&b, &minus), &w2).unwrap());
    assert!(schur_smooth_test(&sl2(3), &b, &w).is_err());

    let d = quaternion_dessin(2);
    assert!(!smooth_covering_group_test(d.group().as_ref(), &center_of(d.group()), d.b(), d.w()));
    let triv = NormalSubgroup::trivial(d.group().as_ref());
    assert!(smooth_covering_group_test(d.group().as_ref(), &triv, d.b(), d.w()));
}

#[test]
fn hurwitz_checks() {
    let d = psl27_hurwitz();
    let v = hurwitz_bound_check(&d).unwrap();
    assert_eq!(d.euler_characteristic(), -4);
    assert_eq!((v.order, v.bound), (168, 168));
    assert!(v.holds && v.equality && v.hurwitz);

    let g = sl2(5);
    let (b, w) = g.standard_pair();
    let d = make_dessin(g, b, w, DEFAULT_CAP).unwrap();
    let v = hurwitz_bound_check(&d).unwrap();
    assert_eq!((v.order, v.bound), (120, 2520));
    assert!(v.holds && !v.equality);

    let z3 = make_dessin(Arc::new(Cyclic::new(3)), 1, 1, DEFAULT_CAP).unwrap();
    assert!(matches!(hurwitz_bound_check(&z3), Err(Error::Precondition(_))));
}

#[test]
fn signature_334_ratio_twelve() {
    let sl = sl2(7);
    let psl = Arc::new(quotient_group(sl.as_ref(), &sl.center()).unwrap());
    let elems = enumerate(psl.as_ref(), DEFAULT_CAP).unwrap();
    let threes: Vec<_> = elems.iter().filter(|x| psl.order_of(x) == 3).collect();
    let d = threes
        .iter()
        .flat_map(|b| threes.iter().map(move |w| (**b, **w)))
        .filter(|(b, w)| psl.order_of(&psl.mul(b, w)) == 4)
        .find_map(|(b, w)| make_dessin(psl.clone(), b, w, DEFAULT_CAP).ok())
        .expect("a (3,3,4) pair");
    let v = hurwitz_bound_check(&d).unwrap();
    assert!(v.holds && !v.equality);
    assert_eq!(v.order as i128, 12 * -d.euler_characteristic());
}

#[test]
fn ratio_strictly_between_bounds() {
    let g = sl2(7);
    let (b, w) = g.standard_pair();
    let i = (1..7)
        .find(|&i| {
            let o = g.order_of(&g.mul(&b, &g.pow(&w, i)));
            o % 2 == 0 && o != 14
        })
        .expect("an even face order");
    let d = make_dessin(g.clone(), b, g.pow(&w, i), DEFAULT_CAP).unwrap();
    let r = classify_covering(&d, &g.center(), DEFAULT_CAP).unwrap();
    assert_eq!((r.e_b, r.e_w, r.e_f), (1, 1, 2));
    assert!(r.quasi_smooth && !r.smooth);
    assert!(r.bounds.upper_applicable && r.bounds.upper_ok && r.bounds.lower_ok);
    assert!(!r.bounds.upper_equality && !r.bounds.lower_equality);
    let ratio = r.chi_ratio().unwrap();
    assert!(ratio > Ratio::from_integer(2) && ratio < Ratio::from_integer(43));
}

#[test]
fn multi_edge_quotient_is_simple() {
    for m in 2..=6 {
        let d = quaternion_dessin(m);
        let n = multi_edge_subgroup(&d);
        assert_eq!(n.order(), d.multiplicity() as u128);
        let q = algebraic_quotient(&d, &n, DEFAULT_CAP).unwrap();
        assert_eq!(q.multiplicity(), 1);
        assert_eq!(underlying_graph(&q).multiplicity, 1);
    }
}

#[test]
fn cyclic_normal_subgroups_of_q8() {
    let q8 = Quaternion::new(2).unwrap();
    // Trivial, centre, and the three cyclic subgroups of order 4.
    assert_eq!(cyclic_normal_subgroups(&q8, DEFAULT_CAP).unwrap().len(), 5);
}

fn check_pair<G: Group + Clone>(d: &RegularDessin<G>) -> std::result::Result<(), TestCaseError> {
    for n in cyclic_normal_subgroups(d.group().as_ref(), DEFAULT_CAP).unwrap() {
        let r = classify_covering(d, &n, DEFAULT_CAP).unwrap();
        prop_assert!(r.riemann_hurwitz_holds());
        prop_assert!(!r.smooth || r.quasi_smooth);
        prop_assert_eq!(r.smooth, r.quasi_smooth && r.e_f == 1);
        if r.sheets > 1 && r.totally_branched {
            prop_assert!(!r.quasi_smooth);
        }
        prop_assert!(r.bounds.lower_ok && r.bounds.equality_cases_ok);
        if r.bounds.upper_applicable {
            prop_assert!(r.bounds.upper_ok);
        }
        let q = algebraic_quotient(d, &n, DEFAULT_CAP).unwrap();
        prop_assert_eq!(q.euler_characteristic(), r.chi_quotient);
        let qs = q.signature();
        prop_assert_eq!([qs.0, qs.1, qs.2], r.quotient_signature);
        let geo = geometric_quotient(d, &n, DEFAULT_CAP).unwrap();
        let s = r.sheets as usize;
        prop_assert!(geo.edge_orbit_sizes.iter().all(|&x| x == s));
        prop_assert!(geo.black_orbit_sizes.iter().all(|&x| x == s / r.e_b as usize));
        prop_assert!(geo.white_orbit_sizes.iter().all(|&x| x == s / r.e_w as usize));
        prop_assert!(geo.face_orbit_sizes.iter().all(|&x| x == s / r.e_f as usize));
        prop_assert!(verify_quotient_theorem(d, &n, DEFAULT_CAP).unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quaternion_coverings(m in 2u64..9, a in 0u64..64, c in 0u64..64, e in 0u8..2, f in 0u8..2) {
        let g = Arc::new(Quaternion::new(m).unwrap());
        if let Ok(d) = make_dessin(g, (a % (2 * m), e), (c % (2 * m), f), DEFAULT_CAP) {
            check_pair(&d)?;
        }
    }

    #[test]
    fn sl2_coverings(p in prop_oneof![Just(5u32), Just(7u32)], i in 0usize..400, j in 0usize..400) {
        let g = sl2(p);
        let elems = enumerate(g.as_ref(), DEFAULT_CAP).unwrap();
        if let Ok(d) = make_dessin(g, elems[i % elems.len()], elems[j % elems.len()], DEFAULT_CAP) {
            check_pair(&d)?;
        }
    }

    #[test]
    fn cyclic_coverings(n in 2u64..40, a in 0u64..40, c in 0u64..40) {
        let g = Arc::new(Cyclic::new(n));
        if let Ok(d) = make_dessin(g, a % n, c % n, DEFAULT_CAP) {
            check_pair(&d)?;
        }
    }
}
