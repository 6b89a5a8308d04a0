//! Spectra of `SL(2, q)` and `PSL(2, q)`, the `(ℓ, m, n)`-generation
//! criterion, its brute-force oracle, and trace-prescribed pairs.

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::{
    closure_size, conjugacy_class_reps, enumerate, quotient_group, CayleyTable, Group, Mat2, Sl2,
};
use crate::numthy::{divisors, prime_power};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    match prime_power(q) {
        Some((p, f)) if p % 2 == 1 => Ok((p, f)),
        _ => Err(Error::pre(format!("q = {q} must be a power of an odd prime"))),
    }
}

/// The set of element orders of `SL(2, q)` or `PSL(2, q)`, `q` odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumSet {
    pub q: u64,
    pub projective: bool,
    pub orders: BTreeSet<u64>,
}

impl SpectrumSet {
    pub fn contains(&self, n: u64) -> bool {
        self.orders.contains(&n)
    }

    pub fn contains_all(&self, ns: &[u64]) -> bool {
        ns.iter().all(|&n| self.contains(n))
    }
}

/// Closed form: `SL(2,q)` has the divisors of `q ± 1` together with `p` and
/// `2p`; `PSL(2,q)` has the divisors of `(q ± 1)/2` together with `p`.
pub fn spectrum(q: u64, projective: bool) -> Result<SpectrumSet> {
    let (p, _) = odd_prime_power(q)?;
    let (lo, hi, extra) = if projective {
        ((q - 1) / 2, q.div_ceil(2), vec![p])
    } else {
        (q - 1, q + 1, vec![p, 2 * p])
    };
    let mut orders: BTreeSet<u64> = divisors(lo).into_iter().chain(divisors(hi)).collect();
    orders.extend(extra);
    Ok(SpectrumSet { q, projective, orders })
}

/// The spectrum read off an enumeration of the group.
pub fn spectrum_by_enumeration(q: u64, projective: bool, cap: usize) -> Result<BTreeSet<u64>> {
    let (p, f) = odd_prime_power(q)?;
    let sl = Sl2::new(FiniteField::new(p as u32, f)?);
    if projective {
        let psl = quotient_group(&sl, &sl.center())?;
        Ok(enumerate(&psl, cap)?.iter().map(|x| psl.order_of(x)).collect())
    } else {
        Ok(enumerate(&sl, cap)?.iter().map(|x| sl.order_of(x)).collect())
    }
}

fn proper_divisors_of_degree(f: u32) -> Vec<u32> {
    (1..f).filter(|e| f.is_multiple_of(*e)).collect()
}

/// Whether the triple already lies in the spectrum of a proper subfield group.
fn in_subfield_spectrum(p: u64, f: u32, triple: &[u64; 3], projective: bool) -> Result<bool> {
    for e in proper_divisors_of_degree(f) {
        if spectrum(p.pow(e), projective)?.contains_all(triple) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_triple(q: u64, triple: [u64; 3], projective: bool) -> Result<()> {
    let [l, m, n] = triple;
    if !(l <= m && m <= n) {
        return Err(Error::pre(format!("({l},{m},{n}) is not sorted as ℓ ≤ m ≤ n")));
    }
    if let Some(x) = triple.iter().find(|&&x| x % 2 == 0) {
        return Err(Error::pre(format!("{x} in ({l},{m},{n}) is not odd")));
    }
    let spec = spectrum(q, projective)?;
    if let Some(x) = triple.iter().find(|&&x| !spec.contains(x)) {
        return Err(Error::pre(format!("{x} is not an element order of {}(2,{q})", if projective { "PSL" } else { "SL" })));
    }
    if l * m + m * n + n * l >= l * m * n {
        return Err(Error::pre(format!("1/{l} + 1/{m} + 1/{n} is not below 1")));
    }
    Ok(())
}

/// Whether `SL(2,q)` (or `PSL(2,q)` when `projective`) is generated by a
/// pair `(b, w)` with `(|b|, |w|, |bw|) = (ℓ, m, n)`, for odd hyperbolic
/// sorted triples in the spectrum.
pub fn lmn_group_criterion(q: u64, l: u64, m: u64, n: u64, projective: bool) -> Result<bool> {
    let (p, f) = odd_prime_power(q)?;
    if q < 5 {
        return Err(Error::pre(format!("q = {q} must be at least 5")));
    }
    let triple = [l, m, n];
    check_triple(q, triple, projective)?;
    if in_subfield_spectrum(p, f, &triple, projective)? {
        return Ok(false);
    }
    if projective {
        return Ok(true);
    }
    let exceptional = (triple == [3, 3, p] && q == p) || (triple == [p, p, p] && q == p) || (triple == [3, 5, 5] && q == 9);
    Ok(!exceptional)
}

/// Whether some regular dessin of type `(ℓ, m, n)` on `PSL(2,q)` has a
/// smooth covering by `SL(2,q)`.
pub fn schur_smooth_exists(q: u64, l: u64, m: u64, n: u64) -> Result<bool> {
    let (p, f) = odd_prime_power(q)?;
    if q == 9 {
        return Err(Error::OutOfScope(
            "PSL(2,9) has Schur multiplier of order 6; its covers are not modelled".into(),
        ));
    }
    if q < 5 {
        return Err(Error::pre(format!("q = {q} must be at least 5")));
    }
    let triple = [l, m, n];
    if !(1 < l && l <= m && m <= n) {
        return Err(Error::pre(format!("({l},{m},{n}) must satisfy 1 < ℓ ≤ m ≤ n")));
    }
    let spec = spectrum(q, true)?;
    if let Some(x) = triple.iter().find(|&&x| !spec.contains(x)) {
        return Err(Error::pre(format!("{x} is not an element order of PSL(2,{q})")));
    }
    let odd = triple.iter().all(|x| x % 2 == 1);
    let excluded = triple == [3, 3, 3] || (q == p && (triple == [3, 3, p] || triple == [p, p, p]));
    Ok(odd && !excluded && !in_subfield_spectrum(p, f, &triple, true)?)
}

/// A generating pair realising a prescribed order triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LmnWitness {
    pub q: u64,
    pub projective: bool,
    pub b: Mat2,
    pub w: Mat2,
    pub group_order: u128,
}

/// Exhaustive search for a generating pair with `(|b|, |w|, |bw|) = (ℓ, m, n)`,
/// with `b` running over conjugacy class representatives.
pub fn brute_force_lmn(q: u64, l: u64, m: u64, n: u64, projective: bool, cap: usize) -> Result<Option<LmnWitness>> {
    let (p, f) = odd_prime_power(q)?;
    let sl = Sl2::new(FiniteField::new(p as u32, f)?);
    let found = if projective {
        let psl = quotient_group(&sl, &sl.center())?;
        scan(&psl, [l, m, n], cap)?
    } else {
        scan(&sl, [l, m, n], cap)?
    };
    Ok(found.map(|(b, w, group_order)| LmnWitness { q, projective, b, w, group_order }))
}

fn scan<G: Group>(g: &G, [l, m, n]: [u64; 3], cap: usize) -> Result<Option<(G::Elem, G::Elem, u128)>> {
    let order = g.known_order().ok_or_else(|| Error::pre("group order must be known"))?;
    if order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    match CayleyTable::build(g) {
        Ok(t) => {
            let gens: Vec<u32> = g.generators().iter().map(|x| t.index_of(x).expect("generator")).collect();
            let ws: Vec<u32> = (0..t.len() as u32).filter(|&x| t.order(x) as u64 == m).collect();
            for b in t.class_reps(&gens).into_iter().filter(|&x| t.order(x) as u64 == l) {
                for &w in &ws {
                    if t.order(t.mul(b, w)) as u64 == n && t.closure_size(&[b, w], t.len()) == t.len() {
                        return Ok(Some((t.element(b).clone(), t.element(w).clone(), order)));
                    }
                }
            }
            Ok(None)
        }
        Err(Error::CapExceeded { .. }) => {
            let elems = enumerate(g, cap)?;
            let ws: Vec<&G::Elem> = elems.iter().filter(|x| g.order_of(x) == m).collect();
            for b in conjugacy_class_reps(g, cap)?.into_iter().filter(|x| g.order_of(x) == l) {
                for &w in &ws {
                    if g.order_of(&g.mul(&b, w)) != n {
                        continue;
                    }
                    let size = closure_size(g, &[b.clone(), w.clone()], cap, Some(order as usize))?;
                    if size as u128 == order {
                        return Ok(Some((b, w.clone(), order)));
                    }
                }
            }
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Some `(b, w) ∈ SL(2,q)²` with `Tr b = α`, `Tr w = β`, `Tr bw = γ`, where
/// `b` is the companion matrix of `X² − αX + 1` and `w` is searched for.
pub fn eq_trace_witness(q: u64, alpha: u32, beta: u32, gamma: u32, cap: usize) -> Result<(Mat2, Mat2)> {
    let (p, f) = odd_prime_power(q)?;
    let sl = Sl2::new(FiniteField::new(p as u32, f)?);
    let field = Arc::clone(sl.field());
    if let Some(x) = [alpha, beta, gamma].into_iter().find(|&x| !field.contains(x)) {
        return Err(Error::pre(format!("{x} is not an element of GF({q})")));
    }
    let b = sl.companion(alpha);
    enumerate(&sl, cap)?
        .into_iter()
        .find(|w| sl.trace(w) == beta && sl.trace(&sl.mul(&b, w)) == gamma)
        .map(|w| (b, w))
        .ok_or_else(|| Error::SearchExhausted(format!("no pair with traces ({alpha},{beta},{gamma}) in SL(2,{q})")))
}
