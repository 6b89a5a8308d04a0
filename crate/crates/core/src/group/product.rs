use super::Group;
use crate::numthy::lcm;

/// Direct product of groups of one model, with componentwise arithmetic.
#[derive(Clone, Debug)]
pub struct DirectProduct<G: Group> {
    factors: Vec<G>,
}

impl<G: Group> DirectProduct<G> {
    pub fn new(factors: Vec<G>) -> Self {
        DirectProduct { factors }
    }

    pub fn factors(&self) -> &[G] {
        &self.factors
    }
}

impl<G: Group> Group for DirectProduct<G> {
    type Elem = Vec<G::Elem>;

    fn identity(&self) -> Self::Elem {
        self.factors.iter().map(|g| g.identity()).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.factors.iter().zip(a.iter().zip(b)).map(|(g, (x, y))| g.mul(x, y)).collect()
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.factors.iter().zip(a).map(|(g, x)| g.inv(x)).collect()
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.len() == self.factors.len() && self.factors.iter().zip(a).all(|(g, x)| g.contains(x))
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let mut gens = Vec::new();
        for (i, g) in self.factors.iter().enumerate() {
            for s in g.generators() {
                let mut e = self.identity();
                e[i] = s;
                gens.push(e);
            }
        }
        gens
    }

    fn known_order(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, g| g.known_order().map(|n| acc * n))
    }

    fn describe(&self) -> String {
        let names: Vec<String> = self.factors.iter().map(|g| g.describe()).collect();
        names.join(" × ")
    }

    fn order_of(&self, a: &Self::Elem) -> u64 {
        self.factors.iter().zip(a).fold(1, |acc, (g, x)| lcm(acc, g.order_of(x)))
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = self.factors.iter().zip(a).map(|(g, x)| g.fmt_elem(x)).collect();
        format!("({})", parts.join(", "))
    }
}
