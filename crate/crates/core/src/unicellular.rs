//! Unicellular regular dessins of face length `2ℓ`.
//!
//! Every such dessin is `D(Z_ℓ, h^k, h^{1−k})` for a unique `0 ≤ k < ℓ`;
//! its underlying graph is `K_{m,n}^{(λ)}` with `m = gcd(k, ℓ)`,
//! `n = gcd(1 − k, ℓ)` and `λ = ℓ/(mn)`. The triples that occur form
//!
//! ```text
//! T_ℓ = {(m, n, λ) : mnλ = ℓ, gcd(m, n) = 1, λ₂ < max(ℓ₂, 2)}
//! ```
//!
//! where `x₂` is the 2-part of `x`.

use crate::dessin::{make_dessin_allowing_stars, RegularDessin};
use crate::error::{Error, Result};
use crate::group::{Cyclic, DirectProduct, Group, DEFAULT_CAP};
use crate::numthy::{divisors, euler_phi, factorize, gcd, p_part, prime_divisors};
use num_rational::Ratio;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct UnicellularDescriptor {
    pub ell: u64,
    pub k: u64,
    pub m: u64,
    pub n: u64,
    pub lambda: u64,
    pub genus: u64,
}

impl UnicellularDescriptor {
    pub fn new(ell: u64, k: u64) -> Result<Self> {
        if ell == 0 || k >= ell {
            return Err(Error::pre(format!("need 0 ≤ k < ℓ, got k = {k}, ℓ = {ell}")));
        }
        let m = gcd(k, ell);
        let n = gcd((ell + 1 - k) % ell, ell);
        let lambda = ell / (m * n);
        let chi = (m + n + 1) as i64 - ell as i64;
        debug_assert!(chi % 2 == 0);
        Ok(UnicellularDescriptor { ell, k, m, n, lambda, genus: ((2 - chi) / 2) as u64 })
    }

    pub fn triple(&self) -> (u64, u64, u64) {
        (self.m, self.n, self.lambda)
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.m + self.n + 1) as i64 - self.ell as i64
    }

    /// The dessin `D(Z_ℓ, h^k, h^{1−k})`.
    pub fn dessin(&self) -> Result<RegularDessin<Cyclic>> {
        let z = Cyclic::new(self.ell);
        let b = z.h(self.k as i64);
        let w = z.h(1 - self.k as i64);
        make_dessin_allowing_stars(Arc::new(z), b, w, DEFAULT_CAP)
    }
}

fn check_ell(ell: u64) -> Result<()> {
    if ell == 0 {
        return Err(Error::pre("ℓ must be positive"));
    }
    Ok(())
}

/// One descriptor per `k ∈ [0, ℓ)`.
pub fn enumerate_unicellular(ell: u64) -> Result<Vec<UnicellularDescriptor>> {
    check_ell(ell)?;
    (0..ell).map(|k| UnicellularDescriptor::new(ell, k)).collect()
}

/// Membership in `T_ℓ`.
pub fn in_triple_set(ell: u64, m: u64, n: u64, lambda: u64) -> bool {
    let two = |x: u64| p_part(x, 2).expect("2 is prime");
    m.checked_mul(n).and_then(|x| x.checked_mul(lambda)) == Some(ell)
        && gcd(m, n) == 1
        && two(lambda) < two(ell).max(2)
}

/// `T_ℓ` by exhaustive search over divisor pairs.
pub fn triple_set(ell: u64) -> Result<Vec<(u64, u64, u64)>> {
    check_ell(ell)?;
    let mut out = Vec::new();
    for m in divisors(ell) {
        for n in divisors(ell / m) {
            let lambda = ell / (m * n);
            if in_triple_set(ell, m, n, lambda) {
                out.push((m, n, lambda));
            }
        }
    }
    Ok(out)
}

/// `φ(λ)·∏_{p ∈ π(λ)∖π(ℓ/λ)} (p−2)/(p−1)`, evaluated exactly.
fn k_formula(ell: u64, lambda: u64) -> Result<u64> {
    let sigma = prime_divisors(ell / lambda);
    let mut value = Ratio::from_integer(euler_phi(lambda)? as u128);
    for p in prime_divisors(lambda) {
        if !sigma.contains(&p) {
            value *= Ratio::new(p as u128 - 2, p as u128 - 1);
        }
    }
    if !value.is_integer() {
        return Err(Error::pre(format!("non-integral count {value} for ℓ = {ell}, λ = {lambda}")));
    }
    Ok(value.to_integer() as u64)
}

/// Number of unicellular dessins with underlying graph `K_{m,n}^{(λ)}`.
pub fn count_k(m: u64, n: u64, lambda: u64) -> Result<u64> {
    let ell = m
        .checked_mul(n)
        .and_then(|x| x.checked_mul(lambda))
        .ok_or_else(|| Error::pre("mnλ overflows"))?;
    if ell == 0 || !in_triple_set(ell, m, n, lambda) {
        return Err(Error::pre(format!("({m}, {n}, {lambda}) is not in T_{ell}")));
    }
    k_formula(ell, lambda)
}

/// Number of unicellular dessins of face length `2ℓ` with edge multiplicity
/// `λ`: `2^{|π(ℓ/λ)|}` choices of `(m, n)`, each counted by [`count_k`].
pub fn count_u_lambda(ell: u64, lambda: u64) -> Result<u64> {
    check_ell(ell)?;
    let two = |x: u64| p_part(x, 2).expect("2 is prime");
    if lambda == 0 || !ell.is_multiple_of(lambda) || two(lambda) >= two(ell).max(2) {
        return Err(Error::pre(format!("λ = {lambda} is not admissible for ℓ = {ell}")));
    }
    let sigma = prime_divisors(ell / lambda).len() as u32;
    Ok((1u64 << sigma) * k_formula(ell, lambda)?)
}

/// `|T_ℓ| = (2e₁ + δ)(2e₂ + 1)⋯(2e_s + 1)` where `ℓ = 2^{e₁} p₂^{e₂} ⋯`
/// and `δ = 1` exactly when `ℓ` is odd.
pub fn count_t(ell: u64) -> Result<u64> {
    check_ell(ell)?;
    let f = factorize(ell)?;
    let mut total = 1;
    for &(p, e) in &f.factors {
        total *= if p == 2 { 2 * e as u64 } else { 2 * e as u64 + 1 };
    }
    Ok(total)
}

/// Number of graphs `K_{m,n}^{(λ)}` up to swapping the colour classes:
/// `(|T_ℓ| + δ)/2`.
pub fn uncolored_graph_count(ell: u64) -> Result<u64> {
    let delta = ell % 2;
    Ok((count_t(ell)? + delta) / 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LambdaCount {
    pub lambda: u64,
    pub count: u64,
}

/// `ℓ = Σ_λ |U_ℓ^{(λ)}|` over admissible `λ | ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionVerdict {
    pub ell: u64,
    pub terms: Vec<LambdaCount>,
    pub total: u64,
    pub holds: bool,
}

pub fn decomposition_identity(ell: u64) -> Result<DecompositionVerdict> {
    check_ell(ell)?;
    let two = |x: u64| p_part(x, 2).expect("2 is prime");
    let mut terms = Vec::new();
    for lambda in divisors(ell) {
        if two(lambda) < two(ell).max(2) {
            terms.push(LambdaCount { lambda, count: count_u_lambda(ell, lambda)? });
        }
    }
    let total = terms.iter().map(|t| t.count).sum();
    Ok(DecompositionVerdict { ell, terms, total, holds: total == ell })
}

/// Counting summary for one `ℓ`, cross-checked against enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub ell: u64,
    pub total: u64,
    #[serde(rename = "T_size")]
    pub t_size: u64,
    pub uncolored: u64,
    pub per_lambda: Vec<LambdaCount>,
    pub identity_ok: bool,
}

pub fn counting_report(ell: u64) -> Result<CountingReport> {
    let all = enumerate_unicellular(ell)?;
    let verdict = decomposition_identity(ell)?;
    let mut enumerated: BTreeMap<u64, u64> = BTreeMap::new();
    for d in &all {
        *enumerated.entry(d.lambda).or_default() += 1;
    }
    let agrees = verdict.terms.iter().all(|t| enumerated.get(&t.lambda).copied().unwrap_or(0) == t.count);
    Ok(CountingReport {
        ell,
        total: all.len() as u64,
        t_size: count_t(ell)?,
        uncolored: uncolored_graph_count(ell)?,
        per_lambda: verdict.terms,
        identity_ok: verdict.holds && agrees,
    })
}

/// `D(G₁ × ⋯ × G_s, b₁⋯b_s, w₁⋯w_s)`; requires the `|b_i|` pairwise
/// coprime and likewise the `|w_i|`.
pub fn direct_product<G: Group + Clone>(
    dessins: &[RegularDessin<G>],
    cap: usize,
) -> Result<RegularDessin<DirectProduct<G>>> {
    if dessins.is_empty() {
        return Err(Error::pre("direct product of no dessins"));
    }
    for (i, d1) in dessins.iter().enumerate() {
        for d2 in &dessins[i + 1..] {
            let (s1, s2) = (d1.signature(), d2.signature());
            if gcd(s1.0, s2.0) != 1 || gcd(s1.1, s2.1) != 1 {
                return Err(Error::pre(format!(
                    "valencies not coprime: {:?} and {:?}",
                    (s1.0, s1.1),
                    (s2.0, s2.1)
                )));
            }
        }
    }
    let group = DirectProduct::new(dessins.iter().map(|d| d.group().as_ref().clone()).collect());
    let b = dessins.iter().map(|d| d.b().clone()).collect();
    let w = dessins.iter().map(|d| d.w().clone()).collect();
    make_dessin_allowing_stars(Arc::new(group), b, w, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dessin::{dessin_isomorphic, underlying_graph};
    use proptest::prelude::*;

    #[test]
    fn small_enumerations() {
        let one = enumerate_unicellular(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].genus, 0);

        let three: Vec<_> = enumerate_unicellular(3).unwrap().iter().map(|d| d.triple()).collect();
        assert_eq!(three, vec![(3, 1, 1), (1, 3, 1), (1, 1, 3)]);
        assert_eq!(UnicellularDescriptor::new(3, 2).unwrap().genus, 1);

        let six = enumerate_unicellular(6).unwrap();
        assert_eq!(six.len(), 6);
        assert!(!six.iter().any(|d| d.lambda % 2 == 0 && d.m == 1 && d.n == 1));
    }

    #[test]
    fn triple_sets() {
        assert_eq!(triple_set(3).unwrap().len(), 3);
        let mut four = triple_set(4).unwrap();
        four.sort();
        assert_eq!(four, vec![(1, 2, 2), (1, 4, 1), (2, 1, 2), (4, 1, 1)]);
        assert_eq!(triple_set(12).unwrap().len(), 12);
        assert_eq!(triple_set(1).unwrap(), vec![(1, 1, 1)]);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_k(1, 1, 15).unwrap(), 3);
        assert_eq!(count_k(3, 1, 1).unwrap(), 1);
        for (p, e) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
            let q = p.pow(e);
            assert_eq!(count_k(1, 1, q).unwrap(), q - 2 * p.pow(e - 1));
        }
        assert!(count_k(1, 1, 2).is_err());
        assert_eq!(count_u_lambda(3, 3).unwrap(), 1);
        assert_eq!(count_u_lambda(3, 1).unwrap(), 2);
        assert_eq!(count_u_lambda(6, 3).unwrap(), 2);
        assert!(count_u_lambda(6, 2).is_err());

        assert_eq!((count_t(12).unwrap(), uncolored_graph_count(12).unwrap()), (12, 6));
        assert_eq!((count_t(15).unwrap(), uncolored_graph_count(15).unwrap()), (9, 5));
        assert_eq!((count_t(2).unwrap(), uncolored_graph_count(2).unwrap()), (2, 1));
        assert_eq!((count_t(1).unwrap(), uncolored_graph_count(1).unwrap()), (1, 1));
    }

    #[test]
    fn decomposition_examples() {
        let v = decomposition_identity(3).unwrap();
        assert_eq!(v.terms, vec![LambdaCount { lambda: 1, count: 2 }, LambdaCount { lambda: 3, count: 1 }]);
        assert!(v.holds);
        let v = decomposition_identity(4).unwrap();
        assert_eq!(v.terms.iter().map(|t| t.count).collect::<Vec<_>>(), vec![2, 2]);
        assert!(decomposition_identity(1).unwrap().holds);
        let r = counting_report(15).unwrap();
        assert_eq!((r.total, r.t_size, r.identity_ok), (15, 9, true));
    }

    #[test]
    fn full_chain_up_to_200() {
        for ell in 1..=200 {
            let all = enumerate_unicellular(ell).unwrap();
            assert_eq!(all.len() as u64, ell);
            let mut buckets: BTreeMap<(u64, u64, u64), u64> = BTreeMap::new();
            for d in &all {
                assert!(in_triple_set(ell, d.m, d.n, d.lambda), "{d:?}");
                assert_eq!(d.euler_characteristic() % 2, 0);
                *buckets.entry(d.triple()).or_default() += 1;
            }
            let triples = triple_set(ell).unwrap();
            assert_eq!(triples.len() as u64, count_t(ell).unwrap());
            for &(m, n, l) in &triples {
                assert_eq!(buckets.get(&(m, n, l)).copied().unwrap_or(0), count_k(m, n, l).unwrap());
            }
            assert!(counting_report(ell).unwrap().identity_ok, "ℓ = {ell}");
        }
    }

    #[test]
    fn dessins_are_unicellular_and_distinct() {
        for ell in 1..=30 {
            let all = enumerate_unicellular(ell).unwrap();
            let ds: Vec<_> = all.iter().map(|d| d.dessin().unwrap()).collect();
            for (desc, d) in all.iter().zip(&ds) {
                assert_eq!(d.face_set(DEFAULT_CAP).unwrap().len(), 1);
                let g = underlying_graph(d, DEFAULT_CAP).unwrap();
                assert_eq!((g.black as u64, g.white as u64, g.multiplicity), (desc.m, desc.n, desc.lambda));
                assert!(g.is_complete_bipartite());
                assert_eq!(d.euler_characteristic() as i64, desc.euler_characteristic());
            }
            if ell <= 12 {
                for i in 0..ds.len() {
                    for j in i + 1..ds.len() {
                        assert!(dessin_isomorphic(&ds[i], &ds[j], DEFAULT_CAP).unwrap().is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn direct_products() {
        let d = UnicellularDescriptor::new(5, 2).unwrap().dessin().unwrap();
        let single = direct_product(std::slice::from_ref(&d), DEFAULT_CAP).unwrap();
        assert_eq!((single.signature(), single.group_order()), (d.signature(), d.group_order()));

        // ℓ = 15 from its 3- and 5-parts: k = 7 reduces to k = 1 mod 3, 2 mod 5.
        let d3 = UnicellularDescriptor::new(3, 1).unwrap().dessin().unwrap();
        let d5 = UnicellularDescriptor::new(5, 2).unwrap().dessin().unwrap();
        let prod = direct_product(&[d3, d5], DEFAULT_CAP).unwrap();
        let target = UnicellularDescriptor::new(15, 7).unwrap();
        let g = underlying_graph(&prod, DEFAULT_CAP).unwrap();
        assert!(prod.is_unicellular());
        assert_eq!((g.black as u64, g.white as u64, g.multiplicity), target.triple());
        assert_eq!(target.triple(), (1, 3, 5));

        let d2 = UnicellularDescriptor::new(2, 0).unwrap().dessin().unwrap();
        let d3 = UnicellularDescriptor::new(3, 2).unwrap().dessin().unwrap();
        let prod = direct_product(&[d2.clone(), d3], DEFAULT_CAP).unwrap();
        assert_eq!(prod.signature().2, 6);
        assert!(prod.is_unicellular());
        assert!(direct_product(&[d2.clone(), d2], DEFAULT_CAP).is_err());
    }

    proptest! {
        #[test]
        fn descriptor_invariants(ell in 1u64..5000, k in 0u64..5000) {
            let d = UnicellularDescriptor::new(ell, k % ell).unwrap();
            prop_assert_eq!(d.m * d.n * d.lambda, ell);
            prop_assert_eq!(gcd(d.m, d.n), 1);
            prop_assert!(in_triple_set(ell, d.m, d.n, d.lambda));
            prop_assert_eq!(d.euler_characteristic() % 2, 0);
        }

        #[test]
        fn decomposition_holds(ell in 1u64..100_000) {
            prop_assert!(decomposition_identity(ell).unwrap().holds);
            prop_assert_eq!(triple_set(ell).unwrap().len() as u64, count_t(ell).unwrap());
        }
    }
}
