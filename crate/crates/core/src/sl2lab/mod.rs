//! `SL(2, q)` against `PSL(2, q)`: the standard unipotent family
//! `D(SL(2,p), b, w^i)`, face orders via eigenvalues, ψ-polynomials and the
//! Fibonacci sequence, and the `(ℓ, m, n)`-generation criteria.
//!
//! Throughout, `b = [[1,0],[1,1]]` and `w = [[1,1],[0,1]]`, so that
//! `bw^i = [[1,i],[1,i+1]]` has characteristic polynomial `X² − (i+2)X + 1`.

mod criterion;

pub use criterion::{
    brute_force_lmn, eq_trace_witness, lmn_group_criterion, schur_smooth_exists, spectrum,
    spectrum_by_enumeration, LmnWitness, SpectrumSet,
};

use crate::covering::classify_covering;
use crate::dessin::{make_dessin, underlying_graph, Generation, RegularDessin};
use crate::error::{Error, Result};
use crate::field::{fq_mul_order, FiniteField};
use crate::group::{closure_size, Group, Mat2, Sl2};
use crate::numthy::{euler_phi, is_prime, odd_part};
use crate::poly::{poly_roots_mod_p, psi_star_poly};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Largest prime for which generation of `SL(2, p)` by the standard pair is
/// re-checked by closure.
pub const VERIFY_GENERATION_UP_TO: u64 = 31;

/// Rows `(n, [(p, i)])`: every `i` with `|bw^i| = n` in `SL(2, p)`, for
/// `p ≤ 19` and `n | p ± 1`.
pub const TABLE_ONE: &[(u64, &[(u64, u64)])] = &[
    (3, &[(5, 2), (7, 4), (11, 8), (13, 10), (17, 14), (19, 16)]),
    (4, &[(5, 3), (7, 5), (11, 9), (13, 11), (17, 15), (19, 17)]),
    (5, &[(11, 1), (11, 5), (19, 2), (19, 12)]),
    (6, &[(5, 4), (7, 6), (11, 10), (13, 12), (17, 16), (19, 18)]),
    (7, &[(13, 5), (13, 6), (13, 8)]),
    (8, &[(7, 1), (7, 2), (17, 4), (17, 9)]),
    (9, &[(17, 5), (17, 11), (17, 12), (19, 1), (19, 5), (19, 7)]),
    (10, &[(11, 2), (11, 6), (19, 3), (19, 13)]),
];

/// Primes `≡ 1 (mod 20)` whose `|bw|` is odd, and ones where it is even.
pub const FIB_ODD_1_MOD_20: &[u64] = &[101, 181, 461, 521, 541, 941];
pub const FIB_EVEN_1_MOD_20: &[u64] = &[41, 61, 241, 281, 401, 421, 601, 641, 661, 701, 761, 821, 881];

fn check_prime(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return Err(Error::pre(format!("p = {p} must be a prime ≥ 5")));
    }
    if p > u16::MAX as u64 {
        return Err(Error::pre(format!("p = {p} is too large for GF(p²) arithmetic")));
    }
    Ok(())
}

fn check_index(p: u64, i: u64) -> Result<()> {
    if i == 0 || i >= p {
        return Err(Error::pre(format!("i = {i} must lie in [1, {}]", p - 1)));
    }
    Ok(())
}

/// One member `D(SL(2,p), b, w^i)` of the standard family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardPair {
    pub p: u64,
    pub i: u64,
    pub b: Mat2,
    pub w: Mat2,
    /// `Tr(bw^i) = i + 2 (mod p)`.
    pub trace: u64,
    pub order: u64,
    /// `⟨bw^i⟩ ∩ Z(G) = 1`, i.e. the order is odd.
    pub smooth: bool,
}

/// `SL(2, p)` with its standard generating pair.
pub struct StandardFamily {
    p: u64,
    group: Arc<Sl2>,
    ext: Arc<FiniteField>,
    generation: Generation,
}

impl std::fmt::Debug for StandardFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StandardFamily(p = {})", self.p)
    }
}

pub fn standard_pair(p: u64) -> Result<StandardFamily> {
    check_prime(p)?;
    let group = Arc::new(Sl2::new(FiniteField::new(p as u32, 1)?));
    let ext = FiniteField::new(p as u32, 2)?;
    let generation = if p <= VERIFY_GENERATION_UP_TO {
        let (b, w) = group.standard_pair();
        let order = group.known_order().expect("SL(2,p) has known order");
        let size = closure_size(group.as_ref(), &[b, w], order as usize, None)? as u128;
        if size != order {
            return Err(Error::NotGenerating { closure: size, order });
        }
        Generation::Verified
    } else {
        Generation::AssertedByConstruction
    };
    Ok(StandardFamily { p, group, ext, generation })
}

impl StandardFamily {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> &Arc<Sl2> {
        &self.group
    }

    pub fn generation(&self) -> Generation {
        self.generation
    }

    pub fn b(&self) -> Mat2 {
        self.group.standard_pair().0
    }

    pub fn w(&self) -> Mat2 {
        self.group.standard_pair().1
    }

    /// `|bw^i|` from the eigenvalues of `bw^i`.
    pub fn bw_order(&self, i: u64) -> Result<u64> {
        check_index(self.p, i)?;
        Ok(order_from_trace(&self.ext, self.p, (i + 2) % self.p))
    }

    pub fn member(&self, i: u64) -> Result<StandardPair> {
        let order = self.bw_order(i)?;
        Ok(StandardPair {
            p: self.p,
            i,
            b: self.b(),
            w: self.group.pow(&self.w(), i as i64),
            trace: (i + 2) % self.p,
            order,
            smooth: order % 2 == 1,
        })
    }

    /// `D(SL(2,p), b, w^i)`, with generation checked by closure.
    pub fn dessin(&self, i: u64, cap: usize) -> Result<RegularDessin<Sl2>> {
        check_index(self.p, i)?;
        let wi = self.group.pow(&self.w(), i as i64);
        make_dessin(Arc::clone(&self.group), self.b(), wi, cap)
    }

    pub fn smooth_indices(&self) -> BTreeSet<u64> {
        odd_order_indices(&self.ext, self.p)
    }
}

/// Order of an element of `SL(2, p)`, `p ≥ 5`, with trace `tau ≠ 2`, read
/// off its eigenvalue `μ ∈ GF(p²)`; trace `−2` means `−1` times a
/// nontrivial unipotent, of order `2p`.
fn order_from_trace(ext: &Arc<FiniteField>, p: u64, tau: u64) -> u64 {
    // Trace 2 only arises for i ≡ 0, which is outside the family.
    assert_ne!(tau, 2, "trace 2 does not occur for 1 ≤ i ≤ p − 1");
    if tau == p - 2 {
        return 2 * p;
    }
    let roots = ext.quadratic_roots(ext.neg(tau as u32), 1);
    let mu = ext.element(roots[0]).expect("root lies in GF(p²)");
    fq_mul_order(&mu).expect("eigenvalues are units")
}

pub fn bw_order(p: u64, i: u64) -> Result<u64> {
    check_prime(p)?;
    check_index(p, i)?;
    let ext = FiniteField::new(p as u32, 2)?;
    Ok(order_from_trace(&ext, p, (i + 2) % p))
}

/// `|bw^i|` by repeated multiplication of `[[1,i],[1,i+1]]` modulo `p`.
pub fn bw_order_bruteforce(p: u64, i: u64) -> Result<u64> {
    check_prime(p)?;
    check_index(p, i)?;
    let m = [1, i, 1, (i + 1) % p];
    let mul = |x: [u64; 4], y: [u64; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % p,
            (x[0] * y[1] + x[1] * y[3]) % p,
            (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p,
        ]
    };
    let mut x = m;
    let mut k = 1;
    while x != [1, 0, 0, 1] {
        x = mul(x, m);
        k += 1;
    }
    Ok(k)
}

/// `((p+1)_{2'} + (p−1)_{2'})/2 − 1`.
pub fn smooth_index_count(p: u64) -> u64 {
    let odd = |n: u64| odd_part(n).expect("positive");
    (odd(p + 1) + odd(p - 1)) / 2 - 1
}

/// `{i ∈ [1, p−1] : |bw^i| odd}`.
pub fn smooth_indices(p: u64) -> Result<BTreeSet<u64>> {
    check_prime(p)?;
    Ok(odd_order_indices(&FiniteField::new(p as u32, 2)?, p))
}

fn odd_order_indices(ext: &Arc<FiniteField>, p: u64) -> BTreeSet<u64> {
    let out: BTreeSet<u64> = (1..p).filter(|&i| order_from_trace(ext, p, (i + 2) % p) % 2 == 1).collect();
    assert_eq!(out.len() as u64, smooth_index_count(p), "smooth index count for p = {p}");
    out
}

/// `{i ∈ [1, p−1] : |bw^i| = n}` for `n ≥ 3` dividing `p ± 1`; this is the
/// root set of `ψ*_n` modulo `p`, of size `φ(n)/2`.
pub fn indices_with_order(p: u64, n: u64) -> Result<BTreeSet<u64>> {
    check_prime(p)?;
    if n < 3 || (!(p - 1).is_multiple_of(n) && !(p + 1).is_multiple_of(n)) {
        return Err(Error::pre(format!("n = {n} must be at least 3 and divide {} or {}", p - 1, p + 1)));
    }
    let ext = FiniteField::new(p as u32, 2)?;
    let found: BTreeSet<u64> = (1..p).filter(|&i| order_from_trace(&ext, p, (i + 2) % p) == n).collect();
    assert_eq!(found.len() as u64, euler_phi(n)? / 2, "index count for n = {n}, p = {p}");
    let roots: BTreeSet<u64> = poly_roots_mod_p(&psi_star_poly(n)?, p)?
        .into_iter()
        .filter(|&i| i >= 1)
        .collect();
    assert_eq!(found, roots, "ψ*_{n} roots modulo {p}");
    Ok(found)
}

/// How the parity of `|bw|` is settled for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FibonacciClass {
    /// `p = 5`: `bw` has trace `−2` and order `10`.
    Five,
    /// `p ≡ ±2 (mod 5)`: `|bw|` divides `p + 1` but not `(p + 1)/2`.
    EvenByCongruence,
    /// `p ≡ 11, 19 (mod 20)`: `|bw|` divides the odd number `(p − 1)/2`.
    OddByCongruence,
    /// `p ≡ 1, 9 (mod 20)`: `|bw|` divides `(p − 1)/2`; parity only by
    /// computation.
    Computed,
}

impl FibonacciClass {
    pub fn of(p: u64) -> Self {
        match (p % 5, p % 20) {
            (0, _) => FibonacciClass::Five,
            (2 | 3, _) => FibonacciClass::EvenByCongruence,
            (_, 11 | 19) => FibonacciClass::OddByCongruence,
            _ => FibonacciClass::Computed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibonacciRow {
    pub p: u64,
    pub p_mod_20: u64,
    pub order: u64,
    pub smooth: bool,
    pub class: FibonacciClass,
}

/// Period of the Fibonacci sequence modulo `m`.
pub fn pisano_period(m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let (mut a, mut b) = (0u64, 1u64);
    let mut k = 0;
    loop {
        (a, b) = (b, (a + b) % m);
        k += 1;
        if a == 0 && b == 1 {
            return k;
        }
    }
}

/// `|bw|` for `i = 1`, where `(bw)^k = [[F_{2k−1}, F_{2k}], [F_{2k}, F_{2k+1}]]`.
pub fn fibonacci_order(p: u64) -> Result<FibonacciRow> {
    let order = bw_order(p, 1)?;
    assert_eq!(2 * order, pisano_period(p), "Pisano period modulo {p}");
    let class = FibonacciClass::of(p);
    match class {
        FibonacciClass::Five => assert_eq!(order, 10),
        FibonacciClass::EvenByCongruence => {
            assert!((p + 1).is_multiple_of(order) && !p.div_ceil(2).is_multiple_of(order), "p = {p}")
        }
        FibonacciClass::OddByCongruence | FibonacciClass::Computed => {
            assert_eq!(((p - 1) / 2) % order, 0, "p = {p}")
        }
    }
    Ok(FibonacciRow { p, p_mod_20: p % 20, order, smooth: order % 2 == 1, class })
}

pub fn fibonacci_smooth_verdicts(ps: &[u64]) -> Result<Vec<FibonacciRow>> {
    ps.par_iter().map(|&p| fibonacci_order(p)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmoothIndexRow {
    pub p: u64,
    pub i: u64,
    pub order: u64,
    pub smooth: bool,
}

/// One row per `(p, i)` for every prime `5 ≤ p ≤ pmax`.
pub fn smooth_index_table(pmax: u64) -> Result<Vec<SmoothIndexRow>> {
    let primes: Vec<u64> = crate::numthy::primes_up_to(pmax).into_iter().filter(|&p| p >= 5).collect();
    let per_prime: Result<Vec<Vec<SmoothIndexRow>>> = primes
        .par_iter()
        .map(|&p| {
            check_prime(p)?;
            let ext = FiniteField::new(p as u32, 2)?;
            Ok((1..p)
                .map(|i| {
                    let order = order_from_trace(&ext, p, (i + 2) % p);
                    SmoothIndexRow { p, i, order, smooth: order % 2 == 1 }
                })
                .collect())
        })
        .collect();
    Ok(per_prime?.into_iter().flatten().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PsiRow {
    pub n: u64,
    /// Coefficients of `ψ*_n`, constant term first, space separated.
    pub coefficients: String,
    pub p: u64,
    /// Roots of `ψ*_n` in `[1, p − 1]`, space separated.
    pub roots: String,
}

/// `ψ*_n` with its roots modulo each prime `5 ≤ p ≤ pmax` having `n | p ± 1`.
pub fn psi_table(ns: &[u64], pmax: u64) -> Result<Vec<PsiRow>> {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(" ");
    let mut rows = Vec::new();
    for &n in ns {
        let poly = psi_star_poly(n)?;
        let coefficients = join(&mut poly.coeffs().iter().map(|c| c.to_string()));
        for p in crate::numthy::primes_up_to(pmax).into_iter().filter(|&p| p >= 5) {
            if (p - 1) % n != 0 && (p + 1) % n != 0 {
                continue;
            }
            let roots = indices_with_order(p, n)?;
            rows.push(PsiRow {
                n,
                coefficients: coefficients.clone(),
                p,
                roots: join(&mut roots.iter().map(|r| r.to_string())),
            });
        }
    }
    Ok(rows)
}

/// Whether `D(SL(2,p), b, w^i)` covers its central quotient smoothly exactly
/// for the odd-order indices, checked dessin by dessin.
pub fn family_smoothness_agrees(p: u64, cap: usize) -> Result<bool> {
    let fam = standard_pair(p)?;
    let smooth = fam.smooth_indices();
    let center = fam.group().center();
    for i in 1..p {
        let report = classify_covering(&fam.dessin(i, cap)?, &center, cap)?;
        if report.smooth != smooth.contains(&i) || !report.quasi_smooth {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x⁻¹ M x` for `x = diag(λ, 1) ∈ GL(2, p)`: `[[a, b/λ], [cλ, d]]`.
fn conj_by_diag(f: &FiniteField, m: &Mat2, lambda: u32) -> Mat2 {
    let li = f.inv(lambda).expect("λ ≠ 0");
    [m[0], f.mul(m[1], li), f.mul(m[2], lambda), m[3]]
}

/// Conjugation by `diag(k⁻¹, 1)` carries `(b^k, w^i)` to `(b, w^{ik})`;
/// returns `ik mod p` after checking this.
pub fn normalize_pair(fam: &StandardFamily, k: u64, i: u64) -> Result<u64> {
    let p = fam.p;
    check_index(p, k)?;
    check_index(p, i)?;
    let g = fam.group();
    let f = g.field();
    let lambda = f.inv(f.from_int(k as i64)).expect("k ≠ 0 mod p");
    let bk = g.pow(&fam.b(), k as i64);
    let wi = g.pow(&fam.w(), i as i64);
    let j = i * k % p;
    assert_eq!(conj_by_diag(f, &bk, lambda), fam.b());
    assert_eq!(conj_by_diag(f, &wi, lambda), g.pow(&fam.w(), j as i64));
    Ok(j)
}

/// Every `D(SL(2,p), b^k, w^i)` normalises to some `D(G, b, w^j)`, and all
/// of them share one underlying graph up to isomorphism.
pub fn valency_p_graph_unique(p: u64, cap: usize) -> Result<bool> {
    let fam = standard_pair(p)?;
    let g = fam.group();
    let reference = underlying_graph(&fam.dessin(1, cap)?, cap)?.shape();
    for k in 1..p {
        for i in 1..p {
            normalize_pair(&fam, k, i)?;
            let bk = g.pow(&fam.b(), k as i64);
            let wi = g.pow(&fam.w(), i as i64);
            let d = make_dessin(Arc::clone(g), bk, wi, cap)?;
            if underlying_graph(&d, cap)?.shape() != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests;
