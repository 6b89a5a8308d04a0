//! The coset regular dessin `D(G, b, w)`.
//!
//! Black vertices are the right cosets `⟨b⟩g`, white vertices the cosets
//! `⟨w⟩g`, edges the elements `g`, and edge `g` joins `⟨b⟩g` to `⟨w⟩g`.
//! Faces are the right translates of the boundary cycle
//! `C = (1, b⁻¹, (bw)⁻¹, b⁻¹(bw)⁻¹, …)`, and `Cg₁ = Cg₂` exactly when
//! `g₁g₂⁻¹ ∈ ⟨bw⟩`.

mod graph;

pub use graph::{underlying_graph, BiCosetGraph};

use crate::error::{Error, Result};
use crate::group::{
    closure_size, cyclic_subgroup, enumerate, extend_generator_map, group_order, Group, GroupMap,
};
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

/// How `⟨b, w⟩ = G` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Generation {
    /// Closure of `{b, w}` was computed and has `|G|` elements.
    Verified,
    /// The group is too large to close; generation follows from how the
    /// pair was constructed.
    AssertedByConstruction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub black: u128,
    pub white: u128,
    pub edges: u128,
    pub faces: u128,
}

pub struct RegularDessin<G: Group> {
    group: Arc<G>,
    b: G::Elem,
    w: G::Elem,
    signature: (u64, u64, u64),
    order: u128,
    generation: Generation,
}

impl<G: Group> Clone for RegularDessin<G> {
    fn clone(&self) -> Self {
        RegularDessin {
            group: Arc::clone(&self.group),
            b: self.b.clone(),
            w: self.w.clone(),
            signature: self.signature,
            order: self.order,
            generation: self.generation,
        }
    }
}

impl<G: Group> std::fmt::Debug for RegularDessin<G> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "D({}, {}, {})",
            self.group.describe(),
            self.group.fmt_elem(&self.b),
            self.group.fmt_elem(&self.w)
        )
    }
}

/// Build `D(G, b, w)`, verifying generation by closure.
///
/// Stars (`b = 1` or `w = 1`) are rejected unless `G` is trivial; use
/// [`make_dessin_allowing_stars`] where they are wanted.
pub fn make_dessin<G: Group>(g: Arc<G>, b: G::Elem, w: G::Elem, cap: usize) -> Result<RegularDessin<G>> {
    let id = g.identity();
    if (b == id || w == id) && group_order(g.as_ref(), cap)? > 1 {
        return Err(Error::pre("degenerate generator: b and w must both be nontrivial"));
    }
    make_dessin_allowing_stars(g, b, w, cap)
}

/// As [`make_dessin`], but accepts `b = 1` or `w = 1` (a star on the sphere
/// or one of the unicellular stars).
pub fn make_dessin_allowing_stars<G: Group>(
    g: Arc<G>,
    b: G::Elem,
    w: G::Elem,
    cap: usize,
) -> Result<RegularDessin<G>> {
    for x in [&b, &w] {
        if !g.contains(x) {
            return Err(Error::pre(format!("{} is not in {}", g.fmt_elem(x), g.describe())));
        }
    }
    let order = group_order(g.as_ref(), cap)?;
    if order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let closure = closure_size(g.as_ref(), &[b.clone(), w.clone()], cap, Some(order as usize))? as u128;
    if closure != order {
        return Err(Error::NotGenerating { closure, order });
    }
    Ok(build(g, b, w, order, Generation::Verified))
}

/// Build a dessin whose generation is guaranteed by its construction rather
/// than checked (the group may be far too large to enumerate).
pub fn make_dessin_asserted<G: Group>(g: Arc<G>, b: G::Elem, w: G::Elem) -> Result<RegularDessin<G>> {
    for x in [&b, &w] {
        if !g.contains(x) {
            return Err(Error::pre(format!("{} is not in {}", g.fmt_elem(x), g.describe())));
        }
    }
    let order = g
        .known_order()
        .ok_or_else(|| Error::pre("an unverified dessin needs a group of known order"))?;
    Ok(build(g, b, w, order, Generation::AssertedByConstruction))
}

fn build<G: Group>(g: Arc<G>, b: G::Elem, w: G::Elem, order: u128, generation: Generation) -> RegularDessin<G> {
    let bw = g.mul(&b, &w);
    let signature = (g.order_of(&b), g.order_of(&w), g.order_of(&bw));
    RegularDessin { group: g, b, w, signature, order, generation }
}

impl<G: Group> RegularDessin<G> {
    pub fn group(&self) -> &Arc<G> {
        &self.group
    }

    pub fn b(&self) -> &G::Elem {
        &self.b
    }

    pub fn w(&self) -> &G::Elem {
        &self.w
    }

    pub fn bw(&self) -> G::Elem {
        self.group.mul(&self.b, &self.w)
    }

    pub fn group_order(&self) -> u128 {
        self.order
    }

    pub fn generation(&self) -> Generation {
        self.generation
    }

    /// `(|b|, |w|, |bw|)`.
    pub fn signature(&self) -> (u64, u64, u64) {
        self.signature
    }

    pub fn counts(&self) -> Counts {
        let (l, m, n) = self.signature;
        Counts {
            black: self.order / l as u128,
            white: self.order / m as u128,
            edges: self.order,
            faces: self.order / n as u128,
        }
    }

    /// `|V| − |E| + |F|`; always even.
    pub fn euler_characteristic(&self) -> i128 {
        let c = self.counts();
        let chi = c.black as i128 + c.white as i128 + c.faces as i128 - c.edges as i128;
        assert!(chi % 2 == 0, "odd Euler characteristic {chi} for {self:?}");
        chi
    }

    pub fn genus(&self) -> u128 {
        let chi = self.euler_characteristic();
        assert!(chi <= 2, "Euler characteristic {chi} exceeds 2");
        ((2 - chi) / 2) as u128
    }

    /// One face, i.e. `G = ⟨bw⟩`.
    pub fn is_unicellular(&self) -> bool {
        self.signature.2 as u128 == self.order
    }

    /// `{|b|, |w|, |bw|} = {2, 3, 7}`.
    pub fn is_hurwitz(&self) -> bool {
        let (l, m, n) = self.signature;
        let mut s = [l, m, n];
        s.sort_unstable();
        s == [2, 3, 7]
    }

    /// `|⟨b⟩ ∩ ⟨w⟩|`, the edge multiplicity of the underlying graph.
    pub fn multiplicity(&self) -> u64 {
        let wb: HashSet<G::Elem> = cyclic_subgroup(self.group.as_ref(), &self.w).into_iter().collect();
        cyclic_subgroup(self.group.as_ref(), &self.b)
            .iter()
            .filter(|x| wb.contains(x))
            .count() as u64
    }

    /// The face through representative `g`.
    pub fn boundary_cycle(&self, g: &G::Elem) -> FaceCycle<G::Elem> {
        let grp = self.group.as_ref();
        let bw_inv = grp.inv(&self.bw());
        let b_inv = grp.inv(&self.b);
        let n = self.signature.2 as usize;
        let mut edges = Vec::with_capacity(2 * n);
        let mut t = g.clone(); // (bw)^{-i} g
        for _ in 0..n {
            edges.push(t.clone());
            edges.push(grp.mul(&b_inv, &t));
            t = grp.mul(&bw_inv, &t);
        }
        let rep = self.face_rep(g);
        FaceCycle { rep, edges }
    }

    /// Canonical representative of the face `Cg`: the minimum of `⟨bw⟩g`.
    pub fn face_rep(&self, g: &G::Elem) -> G::Elem {
        let grp = self.group.as_ref();
        cyclic_subgroup(grp, &self.bw()).iter().map(|x| grp.mul(x, g)).min().expect("nonempty")
    }

    /// All faces, one per right coset of `⟨bw⟩`.
    pub fn face_set(&self, cap: usize) -> Result<Vec<FaceCycle<G::Elem>>> {
        let grp = self.group.as_ref();
        let elems = enumerate(grp, cap)?;
        let cyc = cyclic_subgroup(grp, &self.bw());
        let mut reps: Vec<G::Elem> = elems
            .iter()
            .map(|g| cyc.iter().map(|x| grp.mul(x, g)).min().expect("nonempty"))
            .collect();
        reps.sort();
        reps.dedup();
        Ok(reps.iter().map(|r| self.boundary_cycle(r)).collect())
    }

    /// Check the face structure explicitly: every face alternates black and
    /// white corners consistently, and each of the `2|E|` directed arcs lies
    /// on exactly one face.
    pub fn check_faces(&self, cap: usize) -> Result<bool> {
        let grp = self.group.as_ref();
        let faces = self.face_set(cap)?;
        let bcyc = cyclic_subgroup(grp, &self.b);
        let wcyc = cyclic_subgroup(grp, &self.w);
        let coset = |cyc: &[G::Elem], g: &G::Elem| cyc.iter().map(|x| grp.mul(x, g)).min().expect("nonempty");
        let mut arcs: HashMap<(G::Elem, bool), usize> = HashMap::new();
        for f in &faces {
            let len = f.edges.len();
            if len != 2 * self.signature.2 as usize {
                return Ok(false);
            }
            for (i, e) in f.edges.iter().enumerate() {
                let next = &f.edges[(i + 1) % len];
                // Even positions are traversed white → black, so the corner
                // after them is black; odd positions end at a white corner.
                let shared = if i % 2 == 0 {
                    coset(&bcyc, e) == coset(&bcyc, next)
                } else {
                    coset(&wcyc, e) == coset(&wcyc, next)
                };
                if !shared {
                    return Ok(false);
                }
                *arcs.entry((e.clone(), i % 2 == 0)).or_default() += 1;
            }
        }
        Ok(arcs.len() as u128 == 2 * self.order && arcs.values().all(|&c| c == 1))
    }
}

/// A face: the `2|bw|` edges of a translate of the boundary cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCycle<E> {
    /// Minimal element of the `⟨bw⟩`-coset naming the face.
    pub rep: E,
    pub edges: Vec<E>,
}

impl<E: PartialEq> FaceCycle<E> {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.edges.contains(e)
    }
}

/// Isomorphism of regular dessins: `D1 ≅ D2` iff `b1 ↦ b2, w1 ↦ w2`
/// extends to a group isomorphism. Returns the isomorphism when it exists.
pub fn dessin_isomorphic<G: Group, H: Group>(
    d1: &RegularDessin<G>,
    d2: &RegularDessin<H>,
    cap: usize,
) -> Result<Option<GroupMap<G::Elem, H::Elem>>> {
    if d1.order != d2.order || d1.signature != d2.signature {
        return Ok(None);
    }
    match extend_generator_map(d1.group.as_ref(), (&d1.b, &d1.w), d2.group.as_ref(), (&d2.b, &d2.w), cap) {
        Ok(m) => Ok(Some(m)),
        Err(Error::NotAHomomorphism | Error::NotBijective | Error::NotGenerating { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Machine-readable summary of a dessin.
#[derive(Debug, Clone, Serialize)]
pub struct DessinReport {
    pub group_spec: String,
    pub b: String,
    pub w: String,
    pub signature: [u64; 3],
    pub counts: Counts,
    pub chi: i128,
    pub genus: u128,
    pub unicellular: bool,
    pub hurwitz: bool,
    pub multiplicity: u64,
    pub generation: Generation,
}

impl<G: Group> RegularDessin<G> {
    pub fn report(&self, group_spec: &str) -> DessinReport {
        let (l, m, n) = self.signature;
        DessinReport {
            group_spec: group_spec.to_string(),
            b: self.group.fmt_elem(&self.b),
            w: self.group.fmt_elem(&self.w),
            signature: [l, m, n],
            counts: self.counts(),
            chi: self.euler_characteristic(),
            genus: self.genus(),
            unicellular: self.is_unicellular(),
            hurwitz: self.is_hurwitz(),
            multiplicity: self.multiplicity(),
            generation: self.generation,
        }
    }
}
