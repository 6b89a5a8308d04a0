use super::Group;
use crate::numthy::lcm;

/// A permutation of `{0, …, n-1}` as its image array. Products act on the
/// right: `(a·b)(i) = b(a(i))`.
pub type Perm = Vec<u16>;

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    order: Option<u128>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Self {
        PermGroup { degree, gens, order: None }
    }

    pub fn with_order(mut self, order: u128) -> Self {
        self.order = Some(order);
        self
    }

    /// The alternating group on `n >= 3` points.
    pub fn alternating(n: usize) -> Self {
        assert!(n >= 3);
        let three = Self::from_cycles(n, &[vec![0, 1, 2]]);
        let long = if n % 2 == 1 {
            Self::from_cycles(n, &[(0..n).collect()])
        } else {
            Self::from_cycles(n, &[(1..n).collect()])
        };
        let order = (3..=n as u128).product::<u128>();
        PermGroup::new(n, vec![three, long]).with_order(order)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Build from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Perm {
        let mut p: Perm = (0..n as u16).collect();
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                p[i] = c[(k + 1) % c.len()] as u16;
            }
        }
        p
    }

    /// Disjoint cycles of length > 1, 0-based.
    pub fn cycles(p: &Perm) -> Vec<Vec<usize>> {
        let mut seen = vec![false; p.len()];
        let mut out = Vec::new();
        for s in 0..p.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut i = p[s] as usize;
            while i != s {
                seen[i] = true;
                c.push(i);
                i = p[i] as usize;
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl Group for PermGroup {
    type Elem = Perm;

    fn identity(&self) -> Perm {
        (0..self.degree as u16).collect()
    }

    fn mul(&self, a: &Perm, b: &Perm) -> Perm {
        a.iter().map(|&i| b[i as usize]).collect()
    }

    fn inv(&self, a: &Perm) -> Perm {
        let mut out = vec![0u16; a.len()];
        for (i, &j) in a.iter().enumerate() {
            out[j as usize] = i as u16;
        }
        out
    }

    fn contains(&self, a: &Perm) -> bool {
        if a.len() != self.degree {
            return false;
        }
        let mut seen = vec![false; self.degree];
        a.iter().all(|&i| (i as usize) < self.degree && !std::mem::replace(&mut seen[i as usize], true))
    }

    fn generators(&self) -> Vec<Perm> {
        self.gens.clone()
    }

    fn known_order(&self) -> Option<u128> {
        self.order
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| self.fmt_elem(g)).collect();
        format!("perm:{}:{}", self.degree, gens.join(";"))
    }

    fn order_of(&self, a: &Perm) -> u64 {
        Self::cycles(a).iter().fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    /// 1-based cycle notation.
    fn fmt_elem(&self, a: &Perm) -> String {
        let cs = Self::cycles(a);
        if cs.is_empty() {
            return "()".into();
        }
        cs.iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
                format!("({})", pts.join(","))
            })
            .collect()
    }
}
