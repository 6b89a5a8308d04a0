use super::{enumerate, Group};
use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};

/// A group isomorphism stored as an explicit element table.
#[derive(Debug, Clone)]
pub struct GroupMap<A, B> {
    pub images: HashMap<A, B>,
}

impl<A: Eq + std::hash::Hash, B: Clone> GroupMap<A, B> {
    pub fn apply(&self, a: &A) -> Option<B> {
        self.images.get(a).cloned()
    }
}

/// Try to extend `b1 ↦ b2, w1 ↦ w2` to an isomorphism `G → H`.
///
/// Images are propagated along the right Cayley graph of `G` with respect to
/// `{b1, w1}`; an element reached twice with different images means the
/// assignment is not a homomorphism. Checking every edge makes the resulting
/// map a homomorphism, which is then tested for bijectivity.
pub fn extend_generator_map<G: Group, H: Group>(
    g: &G,
    src: (&G::Elem, &G::Elem),
    h: &H,
    dst: (&H::Elem, &H::Elem),
    cap: usize,
) -> Result<GroupMap<G::Elem, H::Elem>> {
    let n_g = enumerate(g, cap)?.len();
    let n_h = enumerate(h, cap)?.len();
    let gens = [(src.0.clone(), dst.0.clone()), (src.1.clone(), dst.1.clone())];
    let mut images: HashMap<G::Elem, H::Elem> = HashMap::new();
    images.insert(g.identity(), h.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = images[&x].clone();
        for (s, t) in &gens {
            let y = g.mul(&x, s);
            let fy = h.mul(&fx, t);
            match images.get(&y) {
                Some(prev) if *prev != fy => return Err(Error::NotAHomomorphism),
                Some(_) => {}
                None => {
                    images.insert(y.clone(), fy);
                    queue.push_back(y);
                }
            }
        }
    }
    if images.len() != n_g {
        return Err(Error::NotGenerating { closure: images.len() as u128, order: n_g as u128 });
    }
    let distinct: HashSet<&H::Elem> = images.values().collect();
    if distinct.len() != n_h || n_g != n_h {
        return Err(Error::NotBijective);
    }
    Ok(GroupMap { images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;
    use crate::group::{Cyclic, Sl2, DEFAULT_CAP};

    #[test]
    fn identity_extends() {
        let g = Sl2::new(FiniteField::new(5, 1).unwrap());
        let (b, w) = g.standard_pair();
        let m = extend_generator_map(&g, (&b, &w), &g, (&b, &w), DEFAULT_CAP).unwrap();
        assert_eq!(m.images.len(), 120);
        // Homomorphism spot-check.
        let elems: Vec<_> = m.images.keys().cloned().collect();
        for x in elems.iter().take(40) {
            for y in elems.iter().skip(3).take(40) {
                assert_eq!(m.apply(&g.mul(x, y)).unwrap(), g.mul(&m.apply(x).unwrap(), &m.apply(y).unwrap()));
            }
        }
    }

    #[test]
    fn cyclic_generator_forced() {
        let z5 = Cyclic::new(5);
        assert!(extend_generator_map(&z5, (&1, &0), &z5, (&2, &0), DEFAULT_CAP).is_ok());
        // h ↦ h is forced by (h, 1) ↦ (h, 1); (h,1) ↦ (h,h) is not a homomorphism.
        assert!(extend_generator_map(&z5, (&1, &0), &z5, (&1, &1), DEFAULT_CAP).is_err());
        // h^2 ↦ h^3 and h^4 ↦ h^3 cannot both hold.
        assert!(extend_generator_map(&z5, (&2, &4), &z5, (&3, &3), DEFAULT_CAP).is_err());
    }

    #[test]
    fn sl2_w_power_not_isomorphic() {
        let g = Sl2::new(FiniteField::new(5, 1).unwrap());
        let (b, w) = g.standard_pair();
        let w3 = g.pow(&w, 3);
        assert!(extend_generator_map(&g, (&b, &w), &g, (&b, &w3), DEFAULT_CAP).is_err());
    }
}
