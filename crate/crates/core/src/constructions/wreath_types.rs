//! Wreath-product families over a nonabelian simple group `T`.
//!
//! TW: in `T ≀ Z_k` (`k` odd, `k ≥ 5`) take
//! `x = (s, 1, t, 1, (ts)⁻¹, 1, …, 1)`, `b = g²x⁻¹` and `w = xg⁻¹`, so that
//! `bw = g`. The products `x·x^g⋯x^{g^{k−1}}` and `x·x^{g²}⋯x^{g^{2k−2}}`
//! telescope to the identity, which forces `|b| = |w| = |bw| = k` and makes
//! the dessin a smooth covering of `D(Z_k, g², g⁻¹)`.
//!
//! PA: `g = (1, …, 1, a)π` with `1 ≠ a ∈ T`, `x = (s, t)` for `k = 2` and
//! `(s, t, 1, …, 1)` otherwise, and the dessin `D(G, g²x, x⁻¹g⁻¹)`.

use crate::dessin::{make_dessin, make_dessin_asserted, RegularDessin};
use crate::error::{Error, Result};
use crate::group::{closure_size, group_order, Group, Perm, PermGroup, Wreath, WreathElem};
use serde::Serialize;
use std::sync::Arc;

/// `(s, t)` generating `T` with `|t| = 2`, checked by closure.
fn check_generators<T: Group>(inner: &T, s: &T::Elem, t: &T::Elem, cap: usize) -> Result<()> {
    if inner.order_of(t) != 2 {
        return Err(Error::pre("t must be an involution"));
    }
    let order = group_order(inner, cap)?;
    let closure = closure_size(inner, &[s.clone(), t.clone()], cap, Some(order as usize))? as u128;
    if closure != order {
        return Err(Error::NotGenerating { closure, order });
    }
    Ok(())
}

/// `A₅` on five points with `s = (1,2,3,4,5)` and `t = (1,2)(3,4)`.
pub fn a5_with_generators() -> (PermGroup, Perm, Perm) {
    let a5 = PermGroup::alternating(5);
    let s = PermGroup::from_cycles(5, &[vec![0, 1, 2, 3, 4]]);
    let t = PermGroup::from_cycles(5, &[vec![0, 1], vec![2, 3]]);
    (a5, s, t)
}

/// `x·x^{g^m}·x^{g^{2m}}⋯` over `k` factors.
fn telescoping<T: Group>(g: &Wreath<T>, x: &WreathElem<T::Elem>, m: u32) -> WreathElem<T::Elem> {
    let gm = g.pow(&g.g(), m as i64);
    let mut conj = x.clone();
    let mut prod = g.identity();
    for _ in 0..g.k() {
        prod = g.mul(&prod, &conj);
        conj = g.conj(&conj, &gm);
    }
    prod
}

#[derive(Debug, Clone, Serialize)]
pub struct TwCertificate {
    pub k: u32,
    /// `x·x^g⋯x^{g^{k−1}} = 1`.
    pub w_product_trivial: bool,
    /// `x·x^{g²}⋯x^{g^{2k−2}} = 1`.
    pub b_product_trivial: bool,
    pub signature: [u64; 3],
    pub chi: i128,
}

pub struct TwConstruction<T: Group> {
    pub dessin: RegularDessin<Wreath<T>>,
    pub x: WreathElem<T::Elem>,
    pub certificate: TwCertificate,
}

pub fn construct_tw<T: Group + Clone>(
    inner: T,
    k: u32,
    s: T::Elem,
    t: T::Elem,
    cap: usize,
) -> Result<TwConstruction<T>> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::pre(format!("k must be odd and at least 5, got {k}")));
    }
    check_generators(&inner, &s, &t, cap)?;
    let ts_inv = inner.inv(&inner.mul(&t, &s));
    let mut coords = vec![inner.identity(); k as usize];
    coords[0] = s;
    coords[2] = t;
    coords[4] = ts_inv;
    let g = Wreath::new(inner, k)?;
    if g.known_order().is_none() {
        return Err(Error::pre("the simple group needs a known order"));
    }
    let x = g.base(coords);
    let gg = g.g();
    let b = g.mul(&g.pow(&gg, 2), &g.inv(&x));
    let w = g.mul(&x, &g.inv(&gg));
    let id = g.identity();
    let w_product_trivial = telescoping(&g, &x, 1) == id;
    let b_product_trivial = telescoping(&g, &x, 2) == id;
    // Generation: ⟨x^{⟨g⟩}⟩ = T^k, since T_3 ≤ ⟨x, x^{g²}⟩ and ⟨g⟩ permutes
    // the factors transitively.
    let dessin = make_dessin_asserted(Arc::new(g), b, w)?;
    let (l, m, n) = dessin.signature();
    let certificate = TwCertificate {
        k,
        w_product_trivial,
        b_product_trivial,
        signature: [l, m, n],
        chi: dessin.euler_characteristic(),
    };
    Ok(TwConstruction { dessin, x, certificate })
}

#[derive(Debug, Clone, Serialize)]
pub struct PaReport {
    pub k: u32,
    pub order: u128,
    pub signature: [u64; 3],
    pub chi: i128,
    /// `g^k = (a, …, a)` is a nontrivial element of the base group, so
    /// `⟨g⟩ ∩ N ≠ 1`.
    pub g_meets_base: bool,
    pub generation: crate::dessin::Generation,
}

pub struct PaConstruction<T: Group> {
    pub dessin: RegularDessin<Wreath<T>>,
    pub g: WreathElem<T::Elem>,
    pub x: WreathElem<T::Elem>,
    pub report: PaReport,
}

/// The PA example. For `k = 2` the group is enumerated and generation is
/// checked by closure; larger `k` fall back to a construction-certified
/// dessin when closure exceeds `cap`.
pub fn construct_pa<T: Group + Clone>(
    inner: T,
    k: u32,
    a: T::Elem,
    s: T::Elem,
    t: T::Elem,
    cap: usize,
) -> Result<PaConstruction<T>> {
    if k < 2 {
        return Err(Error::pre("k must be at least 2"));
    }
    if a == inner.identity() || !inner.contains(&a) {
        return Err(Error::pre("a must be a non-identity element of T"));
    }
    check_generators(&inner, &s, &t, cap)?;
    let mut gc = vec![inner.identity(); k as usize];
    gc[k as usize - 1] = a;
    let mut xc = vec![inner.identity(); k as usize];
    xc[0] = s;
    xc[1] = t;
    let g = Wreath::new(inner, k)?;
    let gpa = g.mul(&g.base(gc), &g.g());
    let x = g.base(xc);
    let b = g.mul(&g.pow(&gpa, 2), &x);
    let w = g.mul(&g.inv(&x), &g.inv(&gpa));
    let gk = g.pow(&gpa, k as i64);
    let g_meets_base = gk.1 == 0 && gk != g.identity();
    let order = g.known_order().ok_or_else(|| Error::pre("the simple group needs a known order"))?;
    let arc = Arc::new(g);
    let dessin = if order <= cap as u128 {
        make_dessin(arc, b, w, cap)?
    } else {
        make_dessin_asserted(arc, b, w)?
    };
    let (l, m, n) = dessin.signature();
    let report = PaReport {
        k,
        order: dessin.group_order(),
        signature: [l, m, n],
        chi: dessin.euler_characteristic(),
        g_meets_base,
        generation: dessin.generation(),
    };
    Ok(PaConstruction { dessin, g: gpa, x, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{classify_covering, smooth_covering_group_test};
    use crate::dessin::Generation;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn tw_family() {
        for k in [5u32, 7, 9] {
            let (a5, s, t) = a5_with_generators();
            let c = construct_tw(a5, k, s, t, DEFAULT_CAP).unwrap();
            let cert = &c.certificate;
            assert!(cert.w_product_trivial && cert.b_product_trivial);
            assert_eq!(cert.signature, [k as u64; 3]);
            assert_eq!(cert.chi, (3 - k as i128) * 60i128.pow(k));
            let g = c.dessin.group();
            let n = g.base_subgroup();
            assert!(smooth_covering_group_test(g.as_ref(), &n, c.dessin.b(), c.dessin.w()));
            let r = classify_covering(&c.dessin, &n, DEFAULT_CAP).unwrap();
            assert!(r.smooth && r.minimal.is_none());
            assert_eq!(r.chi_quotient, 3 - k as i128);
            assert_eq!(c.dessin.generation(), Generation::AssertedByConstruction);
        }
    }

    #[test]
    fn tw_rejects_bad_input() {
        let (a5, s, t) = a5_with_generators();
        assert!(construct_tw(a5.clone(), 6, s.clone(), t.clone(), DEFAULT_CAP).is_err());
        assert!(construct_tw(a5.clone(), 3, s.clone(), t.clone(), DEFAULT_CAP).is_err());
        // (1,2,3) and (1,2)(4,5) generate only S₃-like data, not A₅.
        let s3 = PermGroup::from_cycles(5, &[vec![0, 1, 2]]);
        let t2 = PermGroup::from_cycles(5, &[vec![0, 1], vec![3, 4]]);
        assert!(matches!(construct_tw(a5.clone(), 5, s3, t2, DEFAULT_CAP), Err(Error::NotGenerating { .. })));
        assert!(construct_tw(a5, 5, t.clone(), s, DEFAULT_CAP).is_err());
    }

    #[test]
    fn pa_examples() {
        let (a5, s, t) = a5_with_generators();
        let inv = PermGroup::from_cycles(5, &[vec![0, 2], vec![1, 3]]);
        let three = PermGroup::from_cycles(5, &[vec![0, 1, 2]]);
        for a in [inv, three] {
            let c = construct_pa(a5.clone(), 2, a, s.clone(), t.clone(), DEFAULT_CAP).unwrap();
            assert_eq!(c.report.order, 7200);
            assert_eq!(c.report.generation, Generation::Verified);
            assert!(c.report.g_meets_base);
            assert_eq!(c.dessin.bw(), c.g);
        }
        let c = construct_pa(a5.clone(), 4, t.clone(), s.clone(), t.clone(), DEFAULT_CAP).unwrap();
        assert_eq!(c.report.generation, Generation::AssertedByConstruction);
        assert_eq!(c.report.signature[2], 4 * 2);
        assert!(construct_pa(a5.clone(), 2, a5.identity(), s, t, DEFAULT_CAP).is_err());
    }
}
