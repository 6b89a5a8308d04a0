use super::{Group, NormalSubgroup};
use crate::error::{Error, Result};
use crate::field::FiniteField;
use std::sync::Arc;

/// `(β, e, s)`: the map `v ↦ v^(p^s)·μ^e + β` for the fixed primitive
/// element `μ`. Maps compose left to right.
pub type AffineElem = (u32, u64, u32);

/// Affine semilinear maps of GF(q) whose multipliers lie in the subgroup of
/// order `ell`, optionally together with the Frobenius automorphisms.
#[derive(Clone)]
pub struct AffineGroup {
    field: Arc<FiniteField>,
    ell: u64,
    /// Exponent of `h = μ^{(q-1)/ell}`.
    step: u64,
    frobenius: bool,
}

impl std::fmt::Debug for AffineGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

impl AffineGroup {
    pub fn new(field: Arc<FiniteField>, ell: u64, frobenius: bool) -> Result<Self> {
        let units = field.order() as u64 - 1;
        if ell == 0 || !units.is_multiple_of(ell) {
            return Err(Error::pre(format!("{ell} does not divide {units}")));
        }
        Ok(AffineGroup { step: units / ell, field, ell, frobenius })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    fn units(&self) -> u64 {
        self.field.order() as u64 - 1
    }

    /// `h^k`.
    pub fn h(&self, k: i64) -> AffineElem {
        (0, (k.rem_euclid(self.ell as i64) as u64 * self.step) % self.units(), 0)
    }

    /// Translation by the field element `beta`.
    pub fn translation(&self, beta: u32) -> AffineElem {
        (beta, 0, 0)
    }

    /// The Frobenius map `v ↦ v^p`.
    pub fn frob(&self) -> AffineElem {
        (0, 0, 1 % self.field.degree())
    }

    /// Exponent `k` of the multiplier `h^k` of an element.
    pub fn multiplier_exponent(&self, a: &AffineElem) -> u64 {
        a.1 / self.step
    }

    /// Apply the map to a field element.
    pub fn apply(&self, a: &AffineElem, v: u32) -> u32 {
        let f = &self.field;
        let mu = f.pow(f.primitive_element(), a.1);
        f.add(f.mul(f.frobenius(v, a.2), mu), a.0)
    }

    /// The translation subgroup `GF(q)⁺`.
    pub fn translations(&self) -> NormalSubgroup<AffineElem> {
        let elems = self.field.elements().map(|b| (b, 0, 0)).collect();
        NormalSubgroup::from_trusted_elements("translations", elems)
    }
}

impl Group for AffineGroup {
    type Elem = AffineElem;

    fn identity(&self) -> AffineElem {
        (0, 0, 0)
    }

    fn mul(&self, a: &AffineElem, b: &AffineElem) -> AffineElem {
        let f = &self.field;
        let mu_b = f.pow(f.primitive_element(), b.1);
        let beta = f.add(f.mul(f.frobenius(a.0, b.2), mu_b), b.0);
        let p_s = (f.characteristic() as u64).pow(b.2);
        let e = (a.1 * p_s + b.1) % self.units();
        (beta, e, (a.2 + b.2) % f.degree())
    }

    fn inv(&self, a: &AffineElem) -> AffineElem {
        let f = &self.field;
        let d = f.degree();
        let s_inv = (d - a.2) % d;
        let units = self.units();
        let e_neg = (units - a.1 % units) % units;
        let mu_neg = f.pow(f.primitive_element(), e_neg);
        let beta = f.neg(f.frobenius(f.mul(a.0, mu_neg), s_inv));
        let p_s = (f.characteristic() as u64).pow(s_inv);
        (beta, (e_neg * p_s) % units, s_inv)
    }

    fn contains(&self, a: &AffineElem) -> bool {
        self.field.contains(a.0)
            && a.1 < self.units()
            && a.1.is_multiple_of(self.step)
            && a.2 < self.field.degree()
            && (self.frobenius || a.2 == 0)
    }

    fn generators(&self) -> Vec<AffineElem> {
        let f = &self.field;
        let p = f.characteristic();
        let mut gens: Vec<AffineElem> = (0..f.degree()).map(|i| (p.pow(i), 0, 0)).collect();
        gens.push(self.h(1));
        if self.frobenius && f.degree() > 1 {
            gens.push(self.frob());
        }
        gens
    }

    fn known_order(&self) -> Option<u128> {
        let base = self.field.order() as u128 * self.ell as u128;
        Some(if self.frobenius { base * self.field.degree() as u128 } else { base })
    }

    fn describe(&self) -> String {
        let (p, d) = (self.field.characteristic(), self.field.degree());
        let frob = if self.frobenius { "+frobenius" } else { "" };
        format!("agl1:{p}^{d}:{}{frob}", self.ell)
    }

    fn order_of(&self, a: &AffineElem) -> u64 {
        if a.2 != 0 {
            return super::naive_order(self, a);
        }
        if a.1 == 0 {
            return if a.0 == 0 { 1 } else { self.field.characteristic() as u64 };
        }
        // A nontrivial multiplier fixes exactly one point, so the element is
        // conjugate to its linear part.
        let units = self.units();
        units / crate::numthy::gcd(units, a.1)
    }

    fn fmt_elem(&self, a: &AffineElem) -> String {
        let mut parts = Vec::new();
        if a.2 != 0 {
            parts.push(if a.2 == 1 { "phi".to_string() } else { format!("phi^{}", a.2) });
        }
        let k = self.multiplier_exponent(a);
        if k != 0 {
            parts.push(if k == 1 { "h".to_string() } else { format!("h^{k}") });
        }
        if a.0 != 0 {
            parts.push(format!("t({})", a.0));
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}
