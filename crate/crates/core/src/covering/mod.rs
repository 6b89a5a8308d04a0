//! Quotients of regular dessins by normal subgroups and the classification
//! of the resulting coverings `D → D_N`.
//!
//! Everything in [`classify_covering`] is intersection arithmetic: with
//! `e_c = |⟨c⟩ ∩ N|` for `c ∈ {b, w, bw}`, the image of `c` in `G/N` has
//! order `|c|/e_c`, and the quotient's counts follow from the signature.

use crate::dessin::{make_dessin_allowing_stars, RegularDessin};
use crate::error::{Error, Result};
use crate::group::{
    cyclic_subgroup, enumerate, generated_subgroup, is_minimal_normal, quotient_group, Group, NormalSubgroup,
    Quotient, Sl2,
};
use crate::numthy::divisors;
use num_rational::Ratio;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

/// Order of the image of `c` in `G/N`: the least divisor `d` of `|c|` with
/// `c^d ∈ N`.
pub fn reduced_order<G: Group>(g: &G, c: &G::Elem, n: &NormalSubgroup<G::Elem>) -> u64 {
    let ord = g.order_of(c);
    divisors(ord)
        .into_iter()
        .find(|&d| n.contains(&g.pow(c, d as i64)))
        .unwrap_or(ord)
}

/// `|⟨c⟩ ∩ N|`.
pub fn intersection_order<G: Group>(g: &G, c: &G::Elem, n: &NormalSubgroup<G::Elem>) -> u64 {
    g.order_of(c) / reduced_order(g, c, n)
}

/// Verdict on `|N| ≤ χ(D)/χ(D_N) ≤ 42|N| − 41`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiBounds {
    /// `χ(D) ≤ |N|·χ(D_N)`; meaningful for every covering.
    pub lower_ok: bool,
    pub lower_equality: bool,
    /// The upper bound needs `χ(D_N) < 0`.
    pub upper_applicable: bool,
    pub upper_ok: bool,
    pub upper_equality: bool,
    /// Equality cases agree with their characterisations: lower equality
    /// iff smooth, upper equality iff totally branched over a Hurwitz
    /// quotient.
    pub equality_cases_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    pub sheets: u128,
    pub smooth: bool,
    pub quasi_smooth: bool,
    pub totally_branched: bool,
    /// `None` when minimality could not be decided (N not listed or G too
    /// large to enumerate).
    pub minimal: Option<bool>,
    pub e_b: u64,
    pub e_w: u64,
    pub e_f: u64,
    pub black_ramified: bool,
    pub white_ramified: bool,
    pub face_ramified: bool,
    pub ram_points: u128,
    pub chi: i128,
    pub chi_quotient: i128,
    pub quotient_order: u128,
    pub quotient_signature: [u64; 3],
    /// `χ(D)/χ(D_N)` as `"a/b"`, or `"undefined"` when `χ(D_N) = 0`.
    pub ratio: String,
    pub bounds: ChiBounds,
}

impl CoveringReport {
    pub fn quotient_is_hurwitz(&self) -> bool {
        let mut s = self.quotient_signature;
        s.sort_unstable();
        s == [2, 3, 7]
    }

    pub fn chi_ratio(&self) -> Option<Ratio<i128>> {
        (self.chi_quotient != 0).then(|| Ratio::new(self.chi, self.chi_quotient))
    }

    /// `|N|χ(D_N) − χ(D) = Σ_c (|Ḡ|/|c̄|)·|N|·(1 − 1/e_c)`, evaluated with
    /// exact rationals from the stored fields.
    pub fn riemann_hurwitz_holds(&self) -> bool {
        let n = self.sheets as i128;
        let gbar = self.quotient_order as i128;
        let lhs = Ratio::from_integer(n * self.chi_quotient - self.chi);
        let rhs: Ratio<i128> = [self.e_b, self.e_w, self.e_f]
            .iter()
            .zip(self.quotient_signature)
            .map(|(&e, cbar)| {
                Ratio::new(gbar, cbar as i128) * n * (Ratio::from_integer(1) - Ratio::new(1, e as i128))
            })
            .sum();
        lhs == rhs
    }
}

/// Classify `D → D_N`. Only the `minimal` flag may need enumeration; it is
/// left undecided rather than failing when that exceeds `cap`.
pub fn classify_covering<G: Group>(
    d: &RegularDessin<G>,
    n: &NormalSubgroup<G::Elem>,
    cap: usize,
) -> Result<CoveringReport> {
    let g = d.group().as_ref();
    let order = d.group_order();
    if !order.is_multiple_of(n.order()) {
        return Err(Error::pre("|N| does not divide |G|"));
    }
    let (l, m, k) = d.signature();
    let bw = d.bw();
    let e_b = intersection_order(g, d.b(), n);
    let e_w = intersection_order(g, d.w(), n);
    let e_f = intersection_order(g, &bw, n);
    let sheets = n.order();
    let gbar = order / sheets;
    let qsig = [l / e_b, m / e_w, k / e_f];
    let per = |c: u64| gbar / c as u128;
    let chi_quotient = per(qsig[0]) as i128 + per(qsig[1]) as i128 + per(qsig[2]) as i128 - gbar as i128;
    let chi = d.euler_characteristic();
    let (bi, wi, fi) = (e_b > 1, e_w > 1, e_f > 1);
    // Black vertices carry i, white vertices j, faces k.
    let ram_points = bi as u128 * per(qsig[0]) + wi as u128 * per(qsig[1]) + fi as u128 * per(qsig[2]);
    let smooth = !bi && !wi && !fi;
    let quasi_smooth = !bi && !wi;
    let s64 = sheets as u64;
    let totally_branched = e_b == s64 && e_w == s64 && e_f == s64;
    let minimal = if n.is_trivial() {
        Some(false)
    } else if n.elements().is_some() && order <= cap as u128 {
        match is_minimal_normal(g, n, cap) {
            Ok(v) => Some(v),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut report = CoveringReport {
        sheets,
        smooth,
        quasi_smooth,
        totally_branched,
        minimal,
        e_b,
        e_w,
        e_f,
        black_ramified: bi,
        white_ramified: wi,
        face_ramified: fi,
        ram_points,
        chi,
        chi_quotient,
        quotient_order: gbar,
        quotient_signature: qsig,
        ratio: String::new(),
        bounds: ChiBounds {
            lower_ok: false,
            lower_equality: false,
            upper_applicable: false,
            upper_ok: false,
            upper_equality: false,
            equality_cases_ok: false,
        },
    };
    report.ratio = match report.chi_ratio() {
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => "undefined".to_string(),
    };
    report.bounds = check_chi_bounds(&report);
    Ok(report)
}

/// Exact check of `|N| ≤ χ(D)/χ(D_N) ≤ 42|N| − 41` by cross-multiplication.
pub fn check_chi_bounds(r: &CoveringReport) -> ChiBounds {
    let n = r.sheets as i128;
    let lower_ok = r.chi <= n * r.chi_quotient;
    let lower_equality = r.chi == n * r.chi_quotient;
    let upper_applicable = r.chi_quotient < 0;
    // Dividing by χ(D_N) < 0 flips the inequality.
    let top = (42 * n - 41) * r.chi_quotient;
    let upper_ok = upper_applicable && r.chi >= top;
    let upper_equality = upper_applicable && r.chi == top;
    let mut equality_cases_ok = lower_equality == r.smooth;
    // With |N| = 1 both bounds collapse to χ(D) = χ(D_N).
    if upper_applicable && n > 1 {
        equality_cases_ok &= upper_equality == (r.totally_branched && r.quotient_is_hurwitz());
    }
    ChiBounds { lower_ok, lower_equality, upper_applicable, upper_ok, upper_equality, equality_cases_ok }
}

/// `(|b|, |w|, |bw|) = (|b̄|, |w̄|, |b̄w̄|)` in `G/N`. The pair is assumed to
/// generate `G`.
pub fn smooth_covering_group_test<G: Group>(g: &G, n: &NormalSubgroup<G::Elem>, b: &G::Elem, w: &G::Elem) -> bool {
    let bw = g.mul(b, w);
    [b, w, &bw].iter().all(|c| reduced_order(g, c, n) == g.order_of(c))
}

/// Whether `D(SL(2,q), b, w)` smoothly covers its image over `PSL(2,q)`:
/// `⟨b⟩, ⟨w⟩, ⟨bw⟩` all meet the centre trivially.
pub fn schur_smooth_test(sl: &Sl2, b: &<Sl2 as Group>::Elem, w: &<Sl2 as Group>::Elem) -> Result<bool> {
    if sl.q() < 4 {
        return Err(Error::pre(format!("SL(2,{}) is not quasisimple", sl.q())));
    }
    Ok(smooth_covering_group_test(sl, &sl.center(), b, w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzVerdict {
    pub order: u128,
    /// `42|χ|`.
    pub bound: u128,
    pub holds: bool,
    pub equality: bool,
    pub hurwitz: bool,
}

/// `|G| ≤ 42|χ(D)|`, with equality exactly for signature `{2,3,7}`.
pub fn hurwitz_bound_check<G: Group>(d: &RegularDessin<G>) -> Result<HurwitzVerdict> {
    let chi = d.euler_characteristic();
    if chi >= 0 {
        return Err(Error::pre(format!("the Hurwitz bound needs χ < 0, got {chi}")));
    }
    let bound = 42 * chi.unsigned_abs();
    let order = d.group_order();
    Ok(HurwitzVerdict { order, bound, holds: order <= bound, equality: order == bound, hurwitz: d.is_hurwitz() })
}

/// `D/N = D(G/N, bN, wN)`.
pub fn algebraic_quotient<G: Group + Clone>(
    d: &RegularDessin<G>,
    n: &NormalSubgroup<G::Elem>,
    cap: usize,
) -> Result<RegularDessin<Quotient<G>>> {
    let q = quotient_group(d.group().as_ref(), n)?;
    let b = q.project(d.b());
    let w = q.project(d.w());
    make_dessin_allowing_stars(Arc::new(q), b, w, cap)
}

/// `N`-orbits on vertices, edges and faces, with the incidence they inherit.
///
/// Every class is indexed; `edge_black[e]` is the black orbit of edge orbit
/// `e`, and so on. Orbit sizes count underlying objects of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricQuotient {
    pub black: usize,
    pub white: usize,
    pub edges: usize,
    pub faces: usize,
    pub edge_black: Vec<usize>,
    pub edge_white: Vec<usize>,
    /// The faces on either side of each edge orbit.
    pub edge_faces: Vec<BTreeSet<usize>>,
    pub black_orbit_sizes: Vec<usize>,
    pub white_orbit_sizes: Vec<usize>,
    pub edge_orbit_sizes: Vec<usize>,
    pub face_orbit_sizes: Vec<usize>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    /// Dense class labels, numbered in order of first appearance.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let mut map = HashMap::new();
        let n = self.0.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = self.find(i);
            let next = map.len();
            out.push(*map.entry(r).or_insert(next));
        }
        (out, map.len())
    }
}

/// A small generating set of `N`, chosen greedily from its element list.
fn greedy_generators<G: Group>(g: &G, n: &NormalSubgroup<G::Elem>, cap: usize) -> Result<Vec<G::Elem>> {
    let elems = n
        .elements()
        .ok_or_else(|| Error::pre("the geometric quotient needs an enumerated normal subgroup"))?;
    let mut gens = Vec::new();
    let mut span: HashSet<G::Elem> = HashSet::from([g.identity()]);
    for x in elems {
        if span.len() as u128 == n.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x.clone());
            span = generated_subgroup(g, &gens, cap)?.into_iter().collect();
        }
    }
    Ok(gens)
}

/// Contract `D` along the right action of `N`: edges `g ~ gn`, black
/// vertices `⟨b⟩g ~ ⟨b⟩gn`, and likewise for white vertices and faces.
pub fn geometric_quotient<G: Group>(
    d: &RegularDessin<G>,
    n: &NormalSubgroup<G::Elem>,
    cap: usize,
) -> Result<GeometricQuotient> {
    let g = d.group().as_ref();
    let elems = enumerate(g, cap)?;
    let index: HashMap<&G::Elem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let (l, m, k) = d.signature();
    let cls = geometric_classes(d, n, cap)?;
    let count = |c: &[usize]| c.iter().max().map_or(0, |&x| x + 1);
    let (edge_cls, black_cls, white_cls, face_cls) = (&cls[0], &cls[1], &cls[2], &cls[3]);
    let (n_edges, n_black, n_white, n_faces) = (count(edge_cls), count(black_cls), count(white_cls), count(face_cls));

    let sizes = |cls: &[usize], count: usize, per: u64| {
        let mut v = vec![0usize; count];
        for &c in cls {
            v[c] += 1;
        }
        v.into_iter().map(|x| x / per as usize).collect::<Vec<_>>()
    };

    let mut edge_black = vec![0; n_edges];
    let mut edge_white = vec![0; n_edges];
    let mut edge_faces = vec![BTreeSet::new(); n_edges];
    for (i, x) in elems.iter().enumerate() {
        let e = edge_cls[i];
        edge_black[e] = black_cls[i];
        edge_white[e] = white_cls[i];
        // Edge g borders faces Cg and C(bg).
        edge_faces[e].insert(face_cls[i]);
        edge_faces[e].insert(face_cls[index[&g.mul(d.b(), x)]]);
    }
    Ok(GeometricQuotient {
        black: n_black,
        white: n_white,
        edges: n_edges,
        faces: n_faces,
        edge_black,
        edge_white,
        edge_faces,
        black_orbit_sizes: sizes(black_cls, n_black, l),
        white_orbit_sizes: sizes(white_cls, n_white, m),
        edge_orbit_sizes: sizes(edge_cls, n_edges, 1),
        face_orbit_sizes: sizes(face_cls, n_faces, k),
    })
}

/// Build both quotients and check that the canonical projection `g ↦ gN`
/// induces incidence-preserving bijections on vertices, edges and faces.
pub fn verify_quotient_theorem<G: Group + Clone>(
    d: &RegularDessin<G>,
    n: &NormalSubgroup<G::Elem>,
    cap: usize,
) -> Result<bool> {
    let geo = geometric_quotient(d, n, cap)?;
    let alg = algebraic_quotient(d, n, cap)?;
    let counts = alg.counts();
    if (geo.black as u128, geo.white as u128, geo.edges as u128, geo.faces as u128)
        != (counts.black, counts.white, counts.edges, counts.faces)
    {
        return Ok(false);
    }
    let q = alg.group().as_ref();
    let g = d.group().as_ref();
    let elems = enumerate(g, cap)?;
    let coset_rep = |c: &G::Elem, x: &G::Elem| {
        cyclic_subgroup(q, c).iter().map(|y| q.mul(y, x)).min().expect("nonempty")
    };
    let bw = alg.bw();

    let geo_again = geometric_classes(d, n, cap)?;
    let mut maps: [BTreeMap<usize, G::Elem>; 4] = Default::default();
    for (i, x) in elems.iter().enumerate() {
        let xb = q.project(x);
        let images = [xb.clone(), coset_rep(alg.b(), &xb), coset_rep(alg.w(), &xb), coset_rep(&bw, &xb)];
        for (kind, img) in images.into_iter().enumerate() {
            let cls = geo_again[kind][i];
            match maps[kind].get(&cls) {
                Some(prev) if *prev != img => return Ok(false),
                Some(_) => {}
                None => {
                    maps[kind].insert(cls, img);
                }
            }
        }
    }
    // Injectivity: distinct orbits go to distinct quotient objects.
    let expected = [geo.edges, geo.black, geo.white, geo.faces];
    for (kind, map) in maps.iter().enumerate() {
        let distinct: HashSet<&G::Elem> = map.values().collect();
        if map.len() != expected[kind] || distinct.len() != expected[kind] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Class labels per element for edges, black, white, faces (in that order),
/// matching the numbering used by [`geometric_quotient`].
fn geometric_classes<G: Group>(
    d: &RegularDessin<G>,
    n: &NormalSubgroup<G::Elem>,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let g = d.group().as_ref();
    let elems = enumerate(g, cap)?;
    let index: HashMap<&G::Elem, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let gens = greedy_generators(g, n, cap)?;
    let mut out = Vec::new();
    for left in [None, Some(d.b().clone()), Some(d.w().clone()), Some(d.bw())] {
        let mut dsu = Dsu::new(elems.len());
        for (i, x) in elems.iter().enumerate() {
            for s in &gens {
                dsu.union(i, index[&g.mul(x, s)]);
            }
            if let Some(c) = &left {
                dsu.union(i, index[&g.mul(c, x)]);
            }
        }
        out.push(dsu.labels().0);
    }
    Ok(out)
}

/// `⟨b⟩ ∩ ⟨w⟩`, normal in `G`; its quotient has a simple underlying graph.
pub fn multi_edge_subgroup<G: Group>(d: &RegularDessin<G>) -> NormalSubgroup<G::Elem> {
    let g = d.group().as_ref();
    let wcyc: HashSet<G::Elem> = cyclic_subgroup(g, d.w()).into_iter().collect();
    let common: Vec<G::Elem> = cyclic_subgroup(g, d.b()).into_iter().filter(|x| wcyc.contains(x)).collect();
    NormalSubgroup::from_trusted_elements("multi-edge", common)
}

/// All cyclic normal subgroups `⟨x⟩ ⊲ G`, including the trivial one.
pub fn cyclic_normal_subgroups<G: Group>(g: &G, cap: usize) -> Result<Vec<NormalSubgroup<G::Elem>>> {
    let elems = enumerate(g, cap)?;
    let gens = g.generators();
    let mut seen: HashSet<Vec<G::Elem>> = HashSet::new();
    let mut out = Vec::new();
    for x in &elems {
        let mut cyc = cyclic_subgroup(g, x);
        cyc.sort();
        if seen.contains(&cyc) {
            continue;
        }
        let set: HashSet<&G::Elem> = cyc.iter().collect();
        let normal = gens.iter().all(|s| set.contains(&g.conj(x, s)));
        seen.insert(cyc.clone());
        if normal {
            out.push(NormalSubgroup::from_trusted_elements(format!("<{}>", g.fmt_elem(x)), cyc));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
