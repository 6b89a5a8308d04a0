use super::*;
use crate::group::DEFAULT_CAP;
use crate::numthy::primes_up_to;
use proptest::prelude::*;

fn primes_5_to(n: u64) -> Vec<u64> {
    primes_up_to(n).into_iter().filter(|&p| p >= 5).collect()
}

#[test]
fn standard_pair_generates() {
    for (p, order) in [(5, 120), (7, 336)] {
        let fam = standard_pair(p).unwrap();
        let g = fam.group();
        assert_eq!(fam.generation(), Generation::Verified);
        assert_eq!(g.order_of(&fam.b()), p);
        assert_eq!(g.order_of(&fam.w()), p);
        assert_eq!(closure_size(g.as_ref(), &[fam.b(), fam.w()], DEFAULT_CAP, None).unwrap(), order);
    }
    assert!(matches!(standard_pair(3), Err(Error::Precondition(_))));
    assert!(matches!(standard_pair(9), Err(Error::Precondition(_))));
    assert_eq!(standard_pair(37).unwrap().generation(), Generation::AssertedByConstruction);
}

#[test]
fn face_orders() {
    assert_eq!(bw_order(5, 1).unwrap(), 10);
    assert_eq!(bw_order(11, 1).unwrap(), 5);
    assert_eq!(bw_order(7, 6).unwrap(), 6);
    assert_eq!(bw_order_bruteforce(5, 2).unwrap(), 3);
    assert_eq!(bw_order_bruteforce(5, 4).unwrap(), 6);
    for p in [5, 7, 11] {
        assert_eq!(bw_order_bruteforce(p, p - 4).unwrap(), 2 * p);
        assert_eq!(bw_order(p, p - 4).unwrap(), 2 * p);
    }
    assert!(bw_order(7, 0).is_err());
    assert!(bw_order(7, 7).is_err());
}

#[test]
fn member_matches_group_arithmetic() {
    let fam = standard_pair(13).unwrap();
    let g = fam.group();
    for i in 1..13 {
        let m = fam.member(i).unwrap();
        let bw = g.mul(&m.b, &m.w);
        assert_eq!(g.trace(&bw) as u64, m.trace);
        assert_eq!(g.order_of(&bw), m.order);
        assert_eq!(m.smooth, m.order % 2 == 1);
    }
}

#[test]
fn eigenvalue_orders_agree_with_powering() {
    for p in primes_5_to(97) {
        let fam = standard_pair(p).unwrap();
        for i in 1..p {
            assert_eq!(fam.bw_order(i).unwrap(), bw_order_bruteforce(p, i).unwrap(), "p = {p}, i = {i}");
        }
    }
}

#[test]
fn smooth_index_sets() {
    assert_eq!(smooth_indices(5).unwrap(), BTreeSet::from([2]));
    assert_eq!(smooth_indices(7).unwrap().len(), 1);
    assert_eq!(smooth_indices(11).unwrap(), BTreeSet::from([1, 5, 8]));
    for p in primes_5_to(97) {
        let s = smooth_indices(p).unwrap();
        assert_eq!(s.len() as u64, smooth_index_count(p));
        assert!(s.len() as u64 > 0 && (s.len() as u64) < p - 1);
    }
}

#[test]
fn indices_by_order() {
    assert_eq!(indices_with_order(11, 5).unwrap(), BTreeSet::from([1, 5]));
    assert_eq!(indices_with_order(13, 7).unwrap(), BTreeSet::from([5, 6, 8]));
    assert_eq!(indices_with_order(19, 9).unwrap(), BTreeSet::from([1, 5, 7]));
    assert!(indices_with_order(11, 7).is_err());
    assert!(indices_with_order(11, 2).is_err());
    for p in primes_5_to(97) {
        for n in (3..=p + 1).filter(|n| (p - 1) % n == 0 || (p + 1) % n == 0) {
            let set = indices_with_order(p, n).unwrap();
            assert_eq!(set.len() as u64, euler_phi(n).unwrap() / 2);
        }
    }
}

#[test]
fn table_one_golden() {
    let listed: BTreeSet<(u64, u64, u64)> = TABLE_ONE
        .iter()
        .flat_map(|(n, pairs)| pairs.iter().map(move |&(p, i)| (n.to_owned(), p, i)))
        .collect();
    for &(n, p, i) in &listed {
        assert_eq!(bw_order(p, i).unwrap(), n, "(p, i) = ({p}, {i})");
    }
    let mut computed = BTreeSet::new();
    for p in primes_5_to(19) {
        for i in 1..p {
            let n = bw_order(p, i).unwrap();
            if (3..=10).contains(&n) && ((p - 1) % n == 0 || (p + 1) % n == 0) {
                computed.insert((n, p, i));
            }
        }
    }
    assert_eq!(computed, listed);
    // The unique roots for n = 3, 4, 6 are p − 3, p − 2, p − 1.
    for p in primes_5_to(19) {
        assert_eq!(indices_with_order(p, 3).unwrap(), BTreeSet::from([p - 3]));
        assert_eq!(indices_with_order(p, 4).unwrap(), BTreeSet::from([p - 2]));
        assert_eq!(indices_with_order(p, 6).unwrap(), BTreeSet::from([p - 1]));
    }
}

#[test]
fn psi_star_coefficients() {
    let expect: [(u64, &[i64]); 8] = [
        (3, &[3, 1]),
        (4, &[2, 1]),
        (5, &[5, 5, 1]),
        (6, &[1, 1]),
        (7, &[7, 14, 7, 1]),
        (8, &[2, 4, 1]),
        (9, &[3, 9, 6, 1]),
        (10, &[1, 3, 1]),
    ];
    for (n, c) in expect {
        assert_eq!(psi_star_poly(n).unwrap().to_i64_vec().unwrap(), c.to_vec(), "n = {n}");
    }
    let rows = psi_table(&[5], 19).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].coefficients, "5 5 1");
    assert_eq!((rows[0].p, rows[0].roots.as_str()), (11, "1 5"));
    assert_eq!((rows[1].p, rows[1].roots.as_str()), (19, "2 12"));
}

#[test]
fn fibonacci_examples() {
    for (p, order) in [(5, 10), (101, 25), (41, 20), (29, 7), (109, 54)] {
        assert_eq!(fibonacci_order(p).unwrap().order, order, "p = {p}");
    }
    assert_eq!(FibonacciClass::of(5), FibonacciClass::Five);
    assert_eq!(FibonacciClass::of(31), FibonacciClass::OddByCongruence);
    assert_eq!(FibonacciClass::of(13), FibonacciClass::EvenByCongruence);
    assert_eq!(FibonacciClass::of(29), FibonacciClass::Computed);
}

#[test]
fn fibonacci_verdict_lists() {
    let smooth = |ps: &[u64]| fibonacci_smooth_verdicts(ps).unwrap().iter().map(|r| r.smooth).collect::<Vec<_>>();
    assert!(smooth(&[11, 19, 31]).iter().all(|&s| s));
    assert!(smooth(&[7, 13, 17, 23]).iter().all(|&s| !s));
    assert!(smooth(FIB_ODD_1_MOD_20).iter().all(|&s| s));
    assert!(smooth(FIB_EVEN_1_MOD_20).iter().all(|&s| !s));
}

#[test]
fn pisano_consistency_to_1000() {
    // fibonacci_order asserts 2|bw| = period and the congruence class bounds.
    let rows = fibonacci_smooth_verdicts(&primes_5_to(1000)).unwrap();
    for r in &rows {
        match r.class {
            FibonacciClass::OddByCongruence => assert!(r.smooth, "p = {}", r.p),
            FibonacciClass::EvenByCongruence | FibonacciClass::Five => assert!(!r.smooth, "p = {}", r.p),
            FibonacciClass::Computed => {}
        }
    }
    // Both parities occur in each undetermined class.
    for c in [1, 9] {
        let parities: BTreeSet<bool> = rows.iter().filter(|r| r.p_mod_20 == c).map(|r| r.smooth).collect();
        assert_eq!(parities.len(), 2, "p ≡ {c} (mod 20)");
    }
    assert_eq!(pisano_period(10), 60);
}

#[test]
fn spectra() {
    let orders = |q, proj| spectrum(q, proj).unwrap().orders.into_iter().collect::<Vec<_>>();
    assert_eq!(orders(5, false), vec![1, 2, 3, 4, 5, 6, 10]);
    assert_eq!(orders(5, true), vec![1, 2, 3, 5]);
    assert_eq!(orders(9, true), vec![1, 2, 3, 4, 5]);
    for q in [5, 7, 9, 11, 13] {
        for proj in [false, true] {
            assert_eq!(spectrum(q, proj).unwrap().orders, spectrum_by_enumeration(q, proj, DEFAULT_CAP).unwrap(), "q = {q}, projective = {proj}");
        }
    }
    assert!(spectrum(8, false).is_err());
}

#[test]
fn criterion_examples() {
    assert!(lmn_group_criterion(5, 3, 5, 5, false).unwrap());
    assert!(!lmn_group_criterion(9, 3, 5, 5, false).unwrap());
    assert!(lmn_group_criterion(9, 3, 5, 5, true).unwrap());
    assert!(lmn_group_criterion(5, 3, 3, 5, true).unwrap());
    assert!(!lmn_group_criterion(5, 3, 3, 5, false).unwrap());
    assert!(!lmn_group_criterion(7, 7, 7, 7, false).unwrap());
    assert!(lmn_group_criterion(7, 7, 7, 7, true).unwrap());
    // Each precondition is reported on its own.
    for bad in [(5, 5, 3, 5), (5, 3, 4, 5), (7, 3, 5, 7), (7, 3, 3, 3)] {
        let e = lmn_group_criterion(bad.0, bad.1, bad.2, bad.3, false).unwrap_err();
        assert!(matches!(e, Error::Precondition(_)), "{bad:?}: {e}");
    }
}

#[test]
fn schur_examples() {
    assert!(!schur_smooth_exists(7, 3, 3, 7).unwrap());
    assert!(schur_smooth_exists(7, 3, 7, 7).unwrap());
    assert!(!schur_smooth_exists(25, 3, 5, 5).unwrap());
    assert!(!schur_smooth_exists(7, 2, 3, 7).unwrap());
    assert!(!schur_smooth_exists(7, 3, 3, 3).unwrap());
    assert!(matches!(schur_smooth_exists(9, 3, 5, 5), Err(Error::OutOfScope(_))));
    assert!(matches!(schur_smooth_exists(7, 1, 3, 7), Err(Error::Precondition(_))));
    assert!(matches!(schur_smooth_exists(7, 3, 3, 6), Err(Error::Precondition(_))));
}

#[test]
fn schur_smooth_witness_q7() {
    // A (3,7,7) generating pair of SL(2,7) gives a smooth central covering.
    let wit = brute_force_lmn(7, 3, 7, 7, false, DEFAULT_CAP).unwrap().expect("witness");
    let sl = Arc::new(Sl2::new(FiniteField::new(7, 1).unwrap()));
    let d = make_dessin(Arc::clone(&sl), wit.b, wit.w, DEFAULT_CAP).unwrap();
    assert_eq!(d.signature(), (3, 7, 7));
    let report = classify_covering(&d, &sl.center(), DEFAULT_CAP).unwrap();
    assert!(report.smooth);
    assert_eq!(report.quotient_signature, [3, 7, 7]);
}

#[test]
fn brute_force_examples() {
    assert!(brute_force_lmn(5, 3, 5, 5, false, DEFAULT_CAP).unwrap().is_some());
    assert!(brute_force_lmn(5, 3, 3, 5, false, DEFAULT_CAP).unwrap().is_none());
    let w = brute_force_lmn(7, 2, 3, 7, true, DEFAULT_CAP).unwrap().expect("Hurwitz pair");
    assert_eq!(w.group_order, 168);
    assert!(matches!(brute_force_lmn(5, 3, 5, 5, false, 100), Err(Error::CapExceeded { .. })));
}

#[test]
fn criterion_matches_brute_force() {
    let cases: Vec<(u64, bool)> = [5, 7, 11, 13].into_iter().flat_map(|q| [(q, false), (q, true)]).collect();
    for (q, proj) in cases {
        let odd: Vec<u64> = spectrum(q, proj).unwrap().orders.into_iter().filter(|&x| x % 2 == 1 && x > 1).collect();
        for (a, &l) in odd.iter().enumerate() {
            for (b, &m) in odd.iter().enumerate().skip(a) {
                for &n in odd.iter().skip(b) {
                    if l * m + m * n + n * l >= l * m * n {
                        continue;
                    }
                    let claim = lmn_group_criterion(q, l, m, n, proj).unwrap();
                    let found = brute_force_lmn(q, l, m, n, proj, DEFAULT_CAP).unwrap().is_some();
                    assert_eq!(claim, found, "q = {q}, ({l},{m},{n}), projective = {proj}");
                }
            }
        }
    }
    assert!(brute_force_lmn(9, 3, 5, 5, false, DEFAULT_CAP).unwrap().is_none());
    assert!(brute_force_lmn(9, 3, 5, 5, true, DEFAULT_CAP).unwrap().is_some());
}

#[test]
fn trace_witnesses() {
    let sl = Sl2::new(FiniteField::new(5, 1).unwrap());
    let (b, w) = eq_trace_witness(5, 2, 2, 2, DEFAULT_CAP).unwrap();
    assert_eq!((sl.trace(&b), sl.trace(&w), sl.trace(&sl.mul(&b, &w))), (2, 2, 2));
    for gamma in 0..5 {
        let (b, w) = eq_trace_witness(5, 0, 0, gamma, DEFAULT_CAP).unwrap();
        assert_eq!((sl.order_of(&b), sl.order_of(&w)), (4, 4));
        assert_eq!(sl.trace(&sl.mul(&b, &w)), gamma);
    }
    // Order-3 elements of SL(2,7) have trace −1; with Tr(bw) = −2 the pair is (3,3,14).
    let sl7 = Sl2::new(FiniteField::new(7, 1).unwrap());
    let (b, w) = eq_trace_witness(7, 6, 6, 5, DEFAULT_CAP).unwrap();
    assert_eq!((sl7.order_of(&b), sl7.order_of(&w), sl7.order_of(&sl7.mul(&b, &w))), (3, 3, 14));
    assert!(eq_trace_witness(5, 7, 0, 0, DEFAULT_CAP).is_err());
}

#[test]
fn normalisation_to_standard_form() {
    let fam = standard_pair(7).unwrap();
    assert_eq!(normalize_pair(&fam, 3, 4).unwrap(), 5);
    assert!(valency_p_graph_unique(5, DEFAULT_CAP).unwrap());
    assert!(family_smoothness_agrees(7, DEFAULT_CAP).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigen_and_power_orders_agree(pi in 0usize..23, i_seed in 1u64..10_000) {
        let ps = primes_5_to(97);
        let p = ps[pi % ps.len()];
        let i = 1 + i_seed % (p - 1);
        let ord = bw_order(p, i).unwrap();
        prop_assert_eq!(ord, bw_order_bruteforce(p, i).unwrap());
        prop_assert_eq!(ord == 2 * p, i == p - 4);
        prop_assert!((p - 1).is_multiple_of(ord) || (p + 1).is_multiple_of(ord) || ord == 2 * p);
    }

    #[test]
    fn schur_matches_sl_criterion(qi in 0usize..8, a in 0usize..16, b in 0usize..16, c in 0usize..16) {
        let qs = [5u64, 7, 11, 13, 25, 27, 49, 125];
        let q = qs[qi];
        let spec: Vec<u64> = spectrum(q, true).unwrap().orders.into_iter().filter(|&x| x > 1).collect();
        let mut t = [spec[a % spec.len()], spec[b % spec.len()], spec[c % spec.len()]];
        t.sort_unstable();
        let verdict = schur_smooth_exists(q, t[0], t[1], t[2]).unwrap();
        let odd = t.iter().all(|x| x % 2 == 1);
        let expected = odd && t != [3, 3, 3] && lmn_group_criterion(q, t[0], t[1], t[2], false).unwrap();
        prop_assert_eq!(verdict, expected);
    }
}
