use super::{Group, NormalSubgroup};
use crate::error::{Error, Result};

/// `G/N` with each coset stored as its minimal representative.
#[derive(Clone)]
pub struct Quotient<G: Group> {
    parent: G,
    normal: Vec<G::Elem>,
    tag: String,
}

impl<G: Group> std::fmt::Debug for Quotient<G> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.parent.describe(), self.tag)
    }
}

impl<G: Group> Quotient<G> {
    pub fn parent(&self) -> &G {
        &self.parent
    }

    pub fn normal_elements(&self) -> &[G::Elem] {
        &self.normal
    }

    /// The natural projection `g ↦ gN`.
    pub fn project(&self, x: &G::Elem) -> G::Elem {
        self.normal
            .iter()
            .map(|n| self.parent.mul(n, x))
            .min()
            .expect("N contains the identity")
    }
}

/// Build `G/N`. Requires `N` to be listed element by element.
pub fn quotient_group<G: Group + Clone>(g: &G, n: &NormalSubgroup<G::Elem>) -> Result<Quotient<G>> {
    let elems = n
        .elements()
        .ok_or_else(|| Error::pre("quotient needs an enumerated normal subgroup"))?;
    for x in elems {
        for s in g.generators() {
            if !n.contains(&g.conj(x, &s)) {
                return Err(Error::NotNormal { element: g.fmt_elem(x), by: g.fmt_elem(&s) });
            }
        }
    }
    Ok(Quotient { parent: g.clone(), normal: elems.to_vec(), tag: n.tag().to_string() })
}

impl<G: Group> Group for Quotient<G> {
    type Elem = G::Elem;

    fn identity(&self) -> G::Elem {
        self.project(&self.parent.identity())
    }

    fn mul(&self, a: &G::Elem, b: &G::Elem) -> G::Elem {
        self.project(&self.parent.mul(a, b))
    }

    fn inv(&self, a: &G::Elem) -> G::Elem {
        self.project(&self.parent.inv(a))
    }

    fn contains(&self, a: &G::Elem) -> bool {
        self.parent.contains(a) && self.project(a) == *a
    }

    fn generators(&self) -> Vec<G::Elem> {
        self.parent.generators().iter().map(|x| self.project(x)).collect()
    }

    fn known_order(&self) -> Option<u128> {
        self.parent.known_order().map(|n| n / self.normal.len() as u128)
    }

    fn describe(&self) -> String {
        format!("{}/{}", self.parent.describe(), self.tag)
    }

    /// `|gN|` is the least divisor `d` of `|g|` with `g^d ∈ N`.
    fn order_of(&self, a: &G::Elem) -> u64 {
        let n = self.parent.order_of(a);
        let id = self.identity();
        crate::numthy::divisors(n)
            .into_iter()
            .find(|&d| self.project(&self.parent.pow(a, d as i64)) == id)
            .unwrap_or(n)
    }

    fn fmt_elem(&self, a: &G::Elem) -> String {
        self.parent.fmt_elem(a)
    }
}
