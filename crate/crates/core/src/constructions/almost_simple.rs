//! Almost simple family: `G = ΣL(2, 2^r) = SL(2, 2^r) : ⟨φ⟩` for a prime
//! `r ≥ 5`, smoothly covering `Z_r`.
//!
//! With `D_i = {[φ^i, t] : t ∈ SL(2, 2^r)}`, pick `x ∈ D_1 ∩ D_j` (`j > 1`)
//! such that the `φ`-orbit of `x` generates `SL(2, 2^r)`; then
//! `b = φ^{j−1}`, `w = φx = φ^s` and `bw = (φ^j)^t` all have order `r`.
//! Here `[a, c] = a⁻¹c⁻¹ac`, so `[φ^j, t] = σ^j(t)⁻¹·t` with `σ` the
//! entrywise Frobenius.

use crate::dessin::{make_dessin, RegularDessin};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::{closure_size, enumerate, Group, Mat2, SigmaL2, Sl2};
use crate::numthy::is_prime;
use serde::Serialize;
use std::collections::{HashMap, HashSet};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsWitness {
    pub r: u32,
    pub j: u32,
    pub x: Mat2,
    /// `x = [φ, s]`.
    pub s: Mat2,
    /// `x = [φ^j, t]`.
    pub t: Mat2,
    /// Candidates `x ∈ D_1 ∩ D_j` rejected because their `φ`-orbit
    /// generates a proper subgroup.
    pub rejected: usize,
}

pub struct AsConstruction {
    pub witness: AsWitness,
    pub dessin: RegularDessin<SigmaL2>,
}

/// `[φ^j, t] = σ^j(t)⁻¹ t`.
fn phi_commutator(sl: &Sl2, j: u32, t: &Mat2) -> Mat2 {
    sl.mul(&sl.inv(&sl.frobenius(t, j)), t)
}

/// Whether `x, σ(x), …, σ^{r−1}(x)` generate `SL(2, 2^r)`.
fn orbit_generates(sl: &Sl2, x: &Mat2, r: u32, order: usize) -> Result<bool> {
    let orbit: Vec<Mat2> = (0..r).map(|i| sl.frobenius(x, i)).collect();
    Ok(closure_size(sl, &orbit, order, Some(order))? == order)
}

/// Search for a witness and build the dessin, verifying `⟨b, w⟩ = G` by
/// closure in `ΣL(2, 2^r)`.
pub fn construct_as(r: u32, cap: usize) -> Result<AsConstruction> {
    if r < 5 || !is_prime(r as u64) {
        return Err(Error::pre(format!("r must be a prime at least 5, got {r}")));
    }
    let q = 1u128 << r;
    let sigma_order = q * (q * q - 1) * r as u128;
    if sigma_order > cap as u128 {
        return Err(Error::CapExceeded { cap });
    }
    let field = FiniteField::new(2, r)?;
    let sl = Sl2::new(field.clone());
    let elems = enumerate(&sl, cap)?;
    let order = elems.len();
    let id = sl.identity();

    let mut d1: HashMap<Mat2, Mat2> = HashMap::new();
    for t in &elems {
        d1.entry(phi_commutator(&sl, 1, t)).or_insert(*t);
    }
    let mut tested: HashSet<Mat2> = HashSet::new();
    let mut rejected = 0;
    let mut found = None;
    'search: for j in 2..r {
        for t in &elems {
            let x = phi_commutator(&sl, j, t);
            if x == id || !tested.insert(x) {
                continue;
            }
            if let Some(s) = d1.get(&x) {
                if orbit_generates(&sl, &x, r, order)? {
                    found = Some(AsWitness { r, j, x, s: *s, t: *t, rejected });
                    break 'search;
                }
                rejected += 1;
            }
        }
        tested.clear();
    }
    let witness = found.ok_or_else(|| Error::SearchExhausted(format!("no AS witness for r = {r}")))?;

    let g = SigmaL2::new(field);
    let phi = g.phi();
    let b = g.pow(&phi, witness.j as i64 - 1);
    let w = g.mul(&phi, &g.embed(witness.x));
    let dessin = make_dessin(Arc::new(g), b, w, cap)?;
    Ok(AsConstruction { witness, dessin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::classify_covering;
    use crate::group::{NormalSubgroup, DEFAULT_CAP};

    #[test]
    fn rejects_bad_r() {
        assert!(matches!(construct_as(4, DEFAULT_CAP), Err(Error::Precondition(_))));
        assert!(matches!(construct_as(3, DEFAULT_CAP), Err(Error::Precondition(_))));
        assert!(matches!(construct_as(7, DEFAULT_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn commutator_formula() {
        let g = SigmaL2::new(FiniteField::new(2, 5).unwrap());
        let sl = g.sl();
        let elems = enumerate(sl, DEFAULT_CAP).unwrap();
        for t in elems.iter().step_by(997) {
            for j in 1..5 {
                let phij = g.pow(&g.phi(), j as i64);
                assert_eq!(g.commutator(&phij, &g.embed(*t)), g.embed(phi_commutator(sl, j, t)));
            }
        }
    }

    #[test]
    fn r5_witness() {
        let c = construct_as(5, DEFAULT_CAP).unwrap();
        let g = c.dessin.group().clone();
        let wit = &c.witness;
        assert_eq!(c.dessin.signature(), (5, 5, 5));
        assert_eq!(c.dessin.group_order(), 163_680);
        assert!(wit.j > 1 && wit.j < 5);
        let phi = g.phi();
        let x = g.embed(wit.x);
        assert_eq!(g.commutator(&phi, &g.embed(wit.s)), x);
        assert_eq!(g.commutator(&g.pow(&phi, wit.j as i64), &g.embed(wit.t)), x);
        // |φx| = |φ^s|.
        assert_eq!(g.mul(&phi, &x), g.conj(&phi, &g.embed(wit.s)));

        let sl = g.sl().clone();
        let n = NormalSubgroup::structural("SL(2,32)", 32_736, |e: &(u32, Mat2)| e.0 == 0, None);
        let r = classify_covering(&c.dessin, &n, DEFAULT_CAP).unwrap();
        assert!(r.smooth);
        assert_eq!((r.quotient_order, r.chi_quotient), (5, -2));
        assert!(sl.contains(&wit.x));
    }
}
