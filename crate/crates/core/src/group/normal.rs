use super::{closure_size, enumerate, generated_subgroup, Group};
use crate::error::{Error, Result};
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

type Predicate<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;

#[derive(Clone)]
enum Membership<E> {
    Set(Arc<HashSet<E>>),
    Pred(Predicate<E>),
}

/// A normal subgroup, either listed element by element or described by a
/// structural membership test (e.g. the base group of a wreath product).
#[derive(Clone)]
pub struct NormalSubgroup<E> {
    tag: String,
    order: u128,
    elements: Option<Arc<Vec<E>>>,
    member: Membership<E>,
}

impl<E: fmt::Debug> fmt::Debug for NormalSubgroup<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalSubgroup({}, order {})", self.tag, self.order)
    }
}

impl<E: Clone + Eq + Hash + Ord> NormalSubgroup<E> {
    /// Wrap a sorted element list known to form a normal subgroup.
    pub fn from_trusted_elements(tag: impl Into<String>, mut elems: Vec<E>) -> Self {
        elems.sort();
        elems.dedup();
        let set: HashSet<E> = elems.iter().cloned().collect();
        NormalSubgroup {
            tag: tag.into(),
            order: elems.len() as u128,
            elements: Some(Arc::new(elems)),
            member: Membership::Set(Arc::new(set)),
        }
    }

    /// Validate that `elems` is a subgroup normal in `g`; on failure the
    /// error names an element and a conjugating generator.
    pub fn from_elements<G: Group<Elem = E>>(g: &G, tag: impl Into<String>, elems: Vec<E>) -> Result<Self> {
        if let Some(bad) = elems.iter().find(|x| !g.contains(x)) {
            return Err(Error::pre(format!("{} is not in {}", g.fmt_elem(bad), g.describe())));
        }
        let n = Self::from_trusted_elements(tag, elems);
        let listed = n.elements.as_ref().expect("listed").clone();
        let closed = generated_subgroup(g, &listed, listed.len().max(1))
            .map(|c| c.len() == listed.len())
            .unwrap_or(false);
        if !closed || !n.contains(&g.identity()) {
            return Err(Error::pre("element set is not a subgroup"));
        }
        for x in listed.iter() {
            for s in g.generators() {
                if !n.contains(&g.conj(x, &s)) {
                    return Err(Error::NotNormal { element: g.fmt_elem(x), by: g.fmt_elem(&s) });
                }
            }
        }
        Ok(n)
    }

    /// A subgroup given by a membership test; `elements` may be omitted when
    /// the subgroup is too large to list.
    pub fn structural(
        tag: impl Into<String>,
        order: u128,
        member: impl Fn(&E) -> bool + Send + Sync + 'static,
        elements: Option<Vec<E>>,
    ) -> Self {
        NormalSubgroup {
            tag: tag.into(),
            order,
            elements: elements.map(|mut v| {
                v.sort();
                Arc::new(v)
            }),
            member: Membership::Pred(Arc::new(member)),
        }
    }

    pub fn trivial<G: Group<Elem = E>>(g: &G) -> Self {
        Self::from_trusted_elements("trivial", vec![g.identity()])
    }

    /// `N = G`; listed only when `G` is small enough to enumerate.
    pub fn whole<G: Group<Elem = E>>(g: &G, cap: usize) -> Result<Self> {
        match enumerate(g, cap) {
            Ok(all) => Ok(Self::from_trusted_elements("whole", all)),
            Err(Error::CapExceeded { .. }) => {
                let order = g.known_order().ok_or(Error::CapExceeded { cap })?;
                Ok(Self::structural("whole", order, |_| true, None))
            }
            Err(e) => Err(e),
        }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, x: &E) -> bool {
        match &self.member {
            Membership::Set(s) => s.contains(x),
            Membership::Pred(p) => p(x),
        }
    }

    pub fn elements(&self) -> Option<&[E]> {
        self.elements.as_deref().map(|v| v.as_slice())
    }
}

/// Smallest normal subgroup containing `seed`.
pub fn normal_closure<G: Group>(g: &G, seed: &[G::Elem], cap: usize) -> Result<NormalSubgroup<G::Elem>> {
    let gens_g = g.generators();
    let mut gens: Vec<G::Elem> = seed.to_vec();
    loop {
        let sub = generated_subgroup(g, &gens, cap)?;
        let set: HashSet<&G::Elem> = sub.iter().collect();
        let mut extra = Vec::new();
        for x in &gens {
            for s in &gens_g {
                let c = g.conj(x, s);
                if !set.contains(&c) && !extra.contains(&c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return Ok(NormalSubgroup::from_trusted_elements("normal closure", sub));
        }
        gens.extend(extra);
    }
}

/// True iff every non-identity element of `N` has normal closure `N`.
pub fn is_minimal_normal<G: Group>(g: &G, n: &NormalSubgroup<G::Elem>, cap: usize) -> Result<bool> {
    if n.is_trivial() {
        return Err(Error::pre("minimality is defined for nontrivial subgroups"));
    }
    let elems = n.elements().ok_or(Error::CapExceeded { cap })?;
    let gens_g = g.generators();
    let mut done: HashSet<G::Elem> = HashSet::new();
    let id = g.identity();
    for x in elems {
        if *x == id || done.contains(x) {
            continue;
        }
        let size = closure_of_class(g, x, &gens_g, cap)?;
        if size as u128 != n.order() {
            return Ok(false);
        }
        // Every conjugate of x has the same normal closure.
        let mut queue = VecDeque::from([x.clone()]);
        done.insert(x.clone());
        while let Some(y) = queue.pop_front() {
            for s in &gens_g {
                let z = g.conj(&y, s);
                if done.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(true)
}

fn closure_of_class<G: Group>(g: &G, x: &G::Elem, gens_g: &[G::Elem], cap: usize) -> Result<usize> {
    // The conjugacy class of x generates its normal closure.
    let mut class: HashSet<G::Elem> = HashSet::from([x.clone()]);
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for s in gens_g {
            let z = g.conj(&y, s);
            if class.insert(z.clone()) {
                if class.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                queue.push_back(z);
            }
        }
    }
    let class: Vec<_> = class.into_iter().collect();
    closure_size(g, &class, cap, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Cyclic, PermGroup, Quaternion, DEFAULT_CAP};

    #[test]
    fn closures() {
        let q8 = Quaternion::new(2).unwrap();
        let y2 = q8.mul(&q8.y(), &q8.y());
        assert_eq!(normal_closure(&q8, &[q8.identity()], DEFAULT_CAP).unwrap().order(), 1);
        let z = normal_closure(&q8, &[y2], DEFAULT_CAP).unwrap();
        assert_eq!(z.order(), 2);
        let a5 = PermGroup::alternating(5);
        let three = PermGroup::from_cycles(5, &[vec![0, 1, 2]]);
        assert_eq!(normal_closure(&a5, &[three], DEFAULT_CAP).unwrap().order(), 60);
    }

    #[test]
    fn minimality() {
        let q8 = Quaternion::new(2).unwrap();
        let z = NormalSubgroup::from_elements(&q8, "center", q8.center_elements()).unwrap();
        assert!(is_minimal_normal(&q8, &z, DEFAULT_CAP).unwrap());
        let z8 = Cyclic::new(8);
        let sub = NormalSubgroup::from_elements(&z8, "h^2", vec![0, 2, 4, 6]).unwrap();
        assert!(!is_minimal_normal(&z8, &sub, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn non_normal_rejected_with_witness() {
        let a5 = PermGroup::alternating(5);
        let t = PermGroup::from_cycles(5, &[vec![0, 1, 2]]);
        let sub = generated_subgroup(&a5, &[t], DEFAULT_CAP).unwrap();
        match NormalSubgroup::from_elements(&a5, "C3", sub) {
            Err(Error::NotNormal { .. }) => {}
            other => panic!("expected NotNormal, got {other:?}"),
        }
    }
}
