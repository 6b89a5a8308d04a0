use super::RegularDessin;
use crate::error::Result;
use crate::group::{cyclic_subgroup, enumerate, Group};
use std::collections::{BTreeMap, HashMap};

/// The bi-coset graph underlying a dessin: black vertices `⟨b⟩g`, white
/// vertices `⟨w⟩g`, and one edge per group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiCosetGraph {
    pub black: usize,
    pub white: usize,
    /// `(black index, white index)` for each edge.
    pub edges: Vec<(usize, usize)>,
    /// Number of parallel edges between any adjacent pair.
    pub multiplicity: u64,
}

impl BiCosetGraph {
    /// Valencies of the black and white vertices, if the graph is bi-regular.
    pub fn bi_valency(&self) -> Option<(usize, usize)> {
        let mut bdeg = vec![0usize; self.black];
        let mut wdeg = vec![0usize; self.white];
        for &(b, w) in &self.edges {
            bdeg[b] += 1;
            wdeg[w] += 1;
        }
        let uniform = |d: &[usize]| d.iter().all(|&x| x == d[0]).then(|| d[0]);
        Some((uniform(&bdeg)?, uniform(&wdeg)?))
    }

    pub fn is_complete_bipartite(&self) -> bool {
        let mut pairs: Vec<_> = self.edges.clone();
        pairs.sort_unstable();
        pairs.dedup();
        pairs.len() == self.black * self.white
    }

    pub fn is_connected(&self) -> bool {
        let n = self.black + self.white;
        let mut adj = vec![Vec::new(); n];
        for &(b, w) in &self.edges {
            adj[b].push(self.black + w);
            adj[self.black + w].push(b);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Canonical form up to relabelling, good enough to compare the small
    /// graphs met in tests: sorted degree data plus edge-multiplicity profile.
    pub fn shape(&self) -> (usize, usize, Vec<usize>, u64) {
        let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &e in &self.edges {
            *mult.entry(e).or_default() += 1;
        }
        let mut profile: Vec<usize> = mult.values().copied().collect();
        profile.sort_unstable();
        (self.black, self.white, profile, self.multiplicity)
    }
}

pub fn underlying_graph<G: Group>(d: &RegularDessin<G>, cap: usize) -> Result<BiCosetGraph> {
    let grp = d.group().as_ref();
    let elems = enumerate(grp, cap)?;
    let bc = cyclic_subgroup(grp, d.b());
    let wc = cyclic_subgroup(grp, d.w());
    let mut bidx: HashMap<G::Elem, usize> = HashMap::new();
    let mut widx: HashMap<G::Elem, usize> = HashMap::new();
    let mut edges = Vec::with_capacity(elems.len());
    for g in &elems {
        let bk = bc.iter().map(|x| grp.mul(x, g)).min().expect("nonempty");
        let wk = wc.iter().map(|x| grp.mul(x, g)).min().expect("nonempty");
        let nb = bidx.len();
        let b = *bidx.entry(bk).or_insert(nb);
        let nw = widx.len();
        let w = *widx.entry(wk).or_insert(nw);
        edges.push((b, w));
    }
    let mut mult: HashMap<(usize, usize), u64> = HashMap::new();
    for &e in &edges {
        *mult.entry(e).or_default() += 1;
    }
    let multiplicity = mult.values().copied().max().unwrap_or(0);
    Ok(BiCosetGraph { black: bidx.len(), white: widx.len(), edges, multiplicity })
}
