//! Finite groups: a uniform element-arithmetic interface, concrete models,
//! closure and enumeration, normal subgroups, quotients and homomorphisms.

mod affine;
mod cayley;
mod cyclic;
mod hom;
mod normal;
mod perm;
mod product;
mod quaternion;
mod quotient;
mod sigmal2;
mod sl2;
mod wreath;

pub use affine::{AffineElem, AffineGroup};
pub use cayley::CayleyTable;
pub use cyclic::Cyclic;
pub use hom::{extend_generator_map, GroupMap};
pub use normal::{is_minimal_normal, normal_closure, NormalSubgroup};
pub use perm::{Perm, PermGroup};
pub use product::DirectProduct;
pub use quaternion::{QElem, Quaternion};
pub use quotient::{quotient_group, Quotient};
pub use sigmal2::{SigmaL2, SigmaL2Elem};
pub use sl2::{Mat2, Sl2};
pub use wreath::{Wreath, WreathElem};

use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

/// Default bound on the number of elements any closure may produce.
pub const DEFAULT_CAP: usize = 2_000_000;

pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether `a` belongs to this group's element universe.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// A generating set.
    fn generators(&self) -> Vec<Self::Elem>;

    /// |G| when known without enumeration.
    fn known_order(&self) -> Option<u128>;

    /// Short human-readable name.
    fn describe(&self) -> String;

    /// Order of `a`; models override this with structural shortcuts.
    fn order_of(&self, a: &Self::Elem) -> u64 {
        naive_order(self, a)
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Self::Elem {
        let mut base = if e < 0 { self.inv(a) } else { a.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `g⁻¹ a g`.
    fn conj(&self, a: &Self::Elem, g: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(&self.inv(g), a), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// Least `k >= 1` with `a^k = 1`, by repeated multiplication.
pub fn naive_order<G: Group + ?Sized>(g: &G, a: &G::Elem) -> u64 {
    let id = g.identity();
    let mut x = a.clone();
    let mut k = 1;
    while x != id {
        x = g.mul(&x, a);
        k += 1;
    }
    k
}

pub fn element_order<G: Group>(g: &G, a: &G::Elem) -> Result<u64> {
    if !g.contains(a) {
        return Err(Error::pre(format!(
            "{} is not an element of {}",
            g.fmt_elem(a),
            g.describe()
        )));
    }
    Ok(g.order_of(a))
}

/// `{a^0, …, a^{|a|-1}}` in power order.
pub fn cyclic_subgroup<G: Group>(g: &G, a: &G::Elem) -> Vec<G::Elem> {
    let id = g.identity();
    let mut out = vec![id.clone()];
    let mut x = a.clone();
    while x != id {
        out.push(x.clone());
        x = g.mul(&x, a);
    }
    out
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn generated_subgroup<G: Group>(g: &G, gens: &[G::Elem], cap: usize) -> Result<Vec<G::Elem>> {
    let id = g.identity();
    let gens: Vec<_> = gens.iter().filter(|x| **x != id).cloned().collect();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = g.mul(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

/// Size of `⟨gens⟩`, stopping early once `stop_at` elements are reached.
pub fn closure_size<G: Group>(g: &G, gens: &[G::Elem], cap: usize, stop_at: Option<usize>) -> Result<usize> {
    let id = g.identity();
    let gens: Vec<_> = gens.iter().filter(|x| **x != id).cloned().collect();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = g.mul(&x, s);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                if stop_at.is_some_and(|n| seen.len() >= n) {
                    return Ok(seen.len());
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen.len())
}

/// All elements of `G`, sorted.
pub fn enumerate<G: Group>(g: &G, cap: usize) -> Result<Vec<G::Elem>> {
    if let Some(n) = g.known_order() {
        if n > cap as u128 {
            return Err(Error::CapExceeded { cap });
        }
    }
    let mut all = generated_subgroup(g, &g.generators(), cap)?;
    all.sort();
    Ok(all)
}

/// |G|, from the model when known and by enumeration otherwise.
pub fn group_order<G: Group>(g: &G, cap: usize) -> Result<u128> {
    match g.known_order() {
        Some(n) => Ok(n),
        None => Ok(closure_size(g, &g.generators(), cap, None)? as u128),
    }
}

pub fn is_generating_pair<G: Group>(g: &G, b: &G::Elem, w: &G::Elem, cap: usize) -> Result<bool> {
    let n = group_order(g, cap)?;
    if n > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let size = closure_size(g, &[b.clone(), w.clone()], cap, Some(n as usize))?;
    Ok(size as u128 == n)
}

/// One representative (the minimum) from each conjugacy class.
pub fn conjugacy_class_reps<G: Group>(g: &G, cap: usize) -> Result<Vec<G::Elem>> {
    let elems = enumerate(g, cap)?;
    let gens = g.generators();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut reps = Vec::new();
    for x in &elems {
        if seen.contains(x) {
            continue;
        }
        reps.push(x.clone());
        seen.insert(x.clone());
        let mut queue = VecDeque::from([x.clone()]);
        while let Some(y) = queue.pop_front() {
            for s in &gens {
                let z = g.conj(&y, s);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(reps)
}

/// `|{c ∈ cyc : c ∈ N}|` for a cyclic subgroup's element list.
pub fn intersection_size_with<E: Clone + Eq + Hash + Ord + Debug>(n: &NormalSubgroup<E>, cyc: &[E]) -> u64 {
    cyc.iter().filter(|c| n.contains(c)).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn cyclic_examples() {
        let z12 = Cyclic::new(12);
        assert_eq!(element_order(&z12, &0).unwrap(), 1);
        assert_eq!(element_order(&z12, &8).unwrap(), 3);
        assert!(element_order(&z12, &12).is_err());
        assert_eq!(cyclic_subgroup(&Cyclic::new(6), &1).len(), 6);
        assert_eq!(generated_subgroup(&z12, &[4], DEFAULT_CAP).unwrap().len(), 3);
        assert_eq!(generated_subgroup(&z12, &[0], DEFAULT_CAP).unwrap(), vec![0]);
        let z6 = Cyclic::new(6);
        assert!(is_generating_pair(&z6, &2, &3, DEFAULT_CAP).unwrap());
        assert!(!is_generating_pair(&z6, &0, &0, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn sl2_examples() {
        let g = Sl2::new(FiniteField::new(5, 1).unwrap());
        let (b, w) = g.standard_pair();
        assert_eq!(g.order_of(&b), 5);
        let bw = g.mul(&b, &w);
        assert_eq!(cyclic_subgroup(&g, &bw).len(), 10);
        assert_eq!(generated_subgroup(&g, &[b, w], DEFAULT_CAP).unwrap().len(), 120);
        let g7 = Sl2::new(FiniteField::new(7, 1).unwrap());
        assert_eq!(g7.order_of(&g7.standard_pair().0), 7);
        let g13 = Sl2::new(FiniteField::new(13, 1).unwrap());
        let (b, w) = g13.standard_pair();
        assert!(is_generating_pair(&g13, &b, &w, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Sl2::new(FiniteField::new(13, 1).unwrap());
        let (b, w) = g.standard_pair();
        assert_eq!(
            generated_subgroup(&g, &[b, w], 100),
            Err(Error::CapExceeded { cap: 100 })
        );
    }

    #[test]
    fn structural_orders_match_naive() {
        let models: Vec<Box<dyn Fn() -> Vec<(u64, u64)>>> = vec![
            Box::new(|| pairs(&Sl2::new(FiniteField::new(7, 1).unwrap()))),
            Box::new(|| pairs(&Sl2::new(FiniteField::new(3, 2).unwrap()))),
            Box::new(|| pairs(&Sl2::new(FiniteField::new(2, 3).unwrap()))),
            Box::new(|| pairs(&Sl2::new(FiniteField::new(13, 1).unwrap()))),
            Box::new(|| pairs(&Quaternion::new(5).unwrap())),
            Box::new(|| pairs(&AffineGroup::new(FiniteField::new(3, 2).unwrap(), 8, false).unwrap())),
            Box::new(|| pairs(&AffineGroup::new(FiniteField::new(2, 3).unwrap(), 7, true).unwrap())),
            Box::new(|| pairs(&SigmaL2::new(FiniteField::new(2, 3).unwrap()))),
            Box::new(|| pairs(&PermGroup::alternating(5))),
            Box::new(|| {
                let w = Wreath::new(Cyclic::new(3), 4).unwrap();
                pairs(&w)
            }),
            Box::new(|| {
                let sl = Sl2::new(FiniteField::new(11, 1).unwrap());
                let c = sl.center();
                pairs(&quotient_group(&sl, &c).unwrap())
            }),
        ];
        for m in models {
            for (fast, slow) in m() {
                assert_eq!(fast, slow);
            }
        }
    }

    fn pairs<G: Group>(g: &G) -> Vec<(u64, u64)> {
        let elems = enumerate(g, 5000).unwrap();
        elems.iter().map(|x| (g.order_of(x), naive_order(g, x))).collect()
    }

    #[test]
    fn enumerated_models_have_expected_orders() {
        let cases: Vec<(u128, usize)> = vec![
            (120, enumerate(&Sl2::new(FiniteField::new(5, 1).unwrap()), DEFAULT_CAP).unwrap().len()),
            (720, enumerate(&Sl2::new(FiniteField::new(3, 2).unwrap()), DEFAULT_CAP).unwrap().len()),
            (16, enumerate(&Quaternion::new(4).unwrap(), DEFAULT_CAP).unwrap().len()),
            (60, enumerate(&PermGroup::alternating(5), DEFAULT_CAP).unwrap().len()),
            (504, enumerate(&SigmaL2::new(FiniteField::new(2, 3).unwrap()), DEFAULT_CAP).unwrap().len() / 3),
            (72, enumerate(&AffineGroup::new(FiniteField::new(3, 2).unwrap(), 8, false).unwrap(), DEFAULT_CAP).unwrap().len()),
            (2 * 9, enumerate(&Wreath::new(Cyclic::new(3), 2).unwrap(), DEFAULT_CAP).unwrap().len()),
        ];
        for (want, got) in cases {
            assert_eq!(want, got as u128);
        }
    }

    #[test]
    fn class_reps_of_sl2() {
        // SL(2,q), q odd, has q + 4 conjugacy classes.
        for (p, f) in [(5, 1), (7, 1), (3, 2)] {
            let g = Sl2::new(FiniteField::new(p, f).unwrap());
            let q = p.pow(f) as usize;
            assert_eq!(conjugacy_class_reps(&g, DEFAULT_CAP).unwrap().len(), q + 4);
        }
    }
}
