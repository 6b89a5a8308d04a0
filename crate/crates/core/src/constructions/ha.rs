//! Affine (HA) family: `G = GF(p^d)⁺ : ⟨h⟩ ≤ AGL(1, p^d)` with `|h| = ℓ` a
//! primitive divisor of `p^d − 1`, and `b = h^i x`, `w = x⁻¹ h^{j−i}` for a
//! nonzero translation `x`. Then `bw = h^j`, and since `⟨h⟩` is
//! semiregular on the nonzero translations, `|b| = |h^i|` whenever `i ≠ 0`.

use crate::covering::{classify_covering, CoveringReport};
use crate::dessin::{make_dessin, RegularDessin};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::{AffineGroup, Group};
use crate::numthy::{euler_phi, gcd, is_primitive_divisor, is_prime, pow_mod};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HaParams {
    pub p: u32,
    pub d: u32,
    pub ell: u64,
    pub i: u64,
    pub j: u64,
    /// The translation `x`, as a field element in digit representation.
    pub x: u32,
}

impl HaParams {
    pub fn new(p: u32, d: u32, ell: u64, i: u64, j: u64, x: u32) -> Result<Self> {
        check_family(p, d, ell)?;
        if i >= ell || j >= ell {
            return Err(Error::pre(format!("i, j must lie in [0, {ell})")));
        }
        if gcd(j, ell) != 1 {
            return Err(Error::pre(format!("gcd(j, ℓ) = gcd({j}, {ell}) ≠ 1")));
        }
        let q = (p as u64).pow(d);
        if x == 0 || x as u64 >= q {
            return Err(Error::pre(format!("x must be a nonzero element of GF({q})")));
        }
        Ok(HaParams { p, d, ell, i, j, x })
    }

    /// Smooth over the translation quotient exactly when `i ∉ {0, j}`.
    pub fn smooth(&self) -> bool {
        self.i != 0 && self.i != self.j
    }
}

fn check_family(p: u32, d: u32, ell: u64) -> Result<()> {
    if !is_prime(p as u64) || d == 0 {
        return Err(Error::pre(format!("{p}^{d} is not a prime power")));
    }
    if !is_primitive_divisor(ell, p as u64, d) {
        return Err(Error::pre(format!("{ell} is not a primitive divisor of {p}^{d} − 1")));
    }
    Ok(())
}

pub fn ha_group(p: u32, d: u32, ell: u64) -> Result<AffineGroup> {
    check_family(p, d, ell)?;
    AffineGroup::new(FiniteField::new(p, d)?, ell, false)
}

pub fn construct_ha(params: &HaParams, cap: usize) -> Result<RegularDessin<AffineGroup>> {
    let g = ha_group(params.p, params.d, params.ell)?;
    let x = g.translation(params.x);
    let b = g.mul(&g.h(params.i as i64), &x);
    let w = g.mul(&g.inv(&x), &g.h(params.j as i64 - params.i as i64));
    make_dessin(Arc::new(g), b, w, cap)
}

/// Classify `D → D_N` for `N` the translation subgroup.
pub fn ha_covering(d: &RegularDessin<AffineGroup>, cap: usize) -> Result<CoveringReport> {
    classify_covering(d, &d.group().translations(), cap)
}

/// `D_{i₁,j₁} ≅ D_{i₂,j₂}` iff `(i₂, j₂) ≡ p^k (i₁, j₁) (mod ℓ)` for some
/// `0 ≤ k < d`.
pub fn ha_isomorphic(a: (u64, u64), b: (u64, u64), p: u32, d: u32, ell: u64) -> Result<bool> {
    check_family(p, d, ell)?;
    for (i, j) in [a, b] {
        if i >= ell || j >= ell || gcd(j, ell) != 1 {
            return Err(Error::pre(format!("invalid parameters ({i}, {j}) for ℓ = {ell}")));
        }
    }
    Ok((0..d).any(|k| {
        let pk = pow_mod(p as u64, k as u64, ell);
        (a.0 * pk) % ell == b.0 && (a.1 * pk) % ell == b.1
    }))
}

/// Whether `G` acts primitively on the black and on the white vertices.
pub fn ha_primitivity(i: u64, j: u64, ell: u64) -> (bool, bool) {
    let diff = (j + ell - i % ell) % ell;
    (gcd(i, ell) == 1, gcd(diff, ell) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HaClass {
    pub i: u64,
    pub j: u64,
    pub smooth: bool,
    pub black_primitive: bool,
    pub white_primitive: bool,
    pub orbit_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HaEnumeration {
    pub p: u32,
    pub d: u32,
    pub ell: u64,
    pub classes: Vec<HaClass>,
    /// `φ(ℓ)ℓ/d`.
    pub expected: u64,
    pub holds: bool,
}

/// Orbit representatives of the `(i, j)` grid under multiplication by
/// powers of `p`.
pub fn ha_enumerate(p: u32, d: u32, ell: u64) -> Result<HaEnumeration> {
    check_family(p, d, ell)?;
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for j in (0..ell).filter(|&j| gcd(j, ell) == 1) {
        for i in 0..ell {
            if seen.contains(&(i, j)) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for k in 0..d {
                let pk = pow_mod(p as u64, k as u64, ell);
                orbit.insert(((i * pk) % ell, (j * pk) % ell));
            }
            let (black_primitive, white_primitive) = ha_primitivity(i, j, ell);
            classes.push(HaClass {
                i,
                j,
                smooth: i != 0 && i != j,
                black_primitive,
                white_primitive,
                orbit_size: orbit.len(),
            });
            seen.extend(orbit);
        }
    }
    let expected = euler_phi(ell)? * ell / d as u64;
    let holds = classes.len() as u64 == expected;
    Ok(HaEnumeration { p, d, ell, classes, expected, holds })
}

/// No nontrivial multiplier centralises a nonzero translation, i.e. `⟨h⟩`
/// is semiregular on `N ∖ {1}` and `G` is a Frobenius group.
pub fn ha_frobenius_semiregular(g: &AffineGroup) -> bool {
    let field = g.field().clone();
    (1..g.ell() as i64).all(|k| {
        let hk = g.h(k);
        field.elements().filter(|&v| v != 0).all(|v| {
            let t = g.translation(v);
            g.conj(&t, &hk) != t
        })
    })
}
