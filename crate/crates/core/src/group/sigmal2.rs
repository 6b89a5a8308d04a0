use super::{Group, Mat2, Sl2};
use crate::field::FiniteField;
use crate::numthy::gcd;
use std::sync::Arc;

/// `φ^e·M` with `M ∈ SL(2, p^f)` and `φ` the Frobenius automorphism.
pub type SigmaL2Elem = (u32, Mat2);

/// `ΣL(2, p^f) = SL(2, p^f) : ⟨φ⟩`, where `φ⁻¹Mφ` is `M` with every entry
/// raised to the `p`-th power.
#[derive(Clone, Debug)]
pub struct SigmaL2 {
    sl: Sl2,
}

impl SigmaL2 {
    pub fn new(field: Arc<FiniteField>) -> Self {
        SigmaL2 { sl: Sl2::new(field) }
    }

    pub fn sl(&self) -> &Sl2 {
        &self.sl
    }

    pub fn f(&self) -> u32 {
        self.sl.field().degree()
    }

    pub fn phi(&self) -> SigmaL2Elem {
        (1 % self.f(), self.sl.identity())
    }

    pub fn embed(&self, m: Mat2) -> SigmaL2Elem {
        (0, m)
    }

    /// `φ^{-s} M φ^{s}`, i.e. the entrywise Frobenius applied `s` times.
    pub fn twist(&self, m: &Mat2, s: i64) -> Mat2 {
        let f = self.f() as i64;
        self.sl.frobenius(m, s.rem_euclid(f) as u32)
    }
}

impl Group for SigmaL2 {
    type Elem = SigmaL2Elem;

    fn identity(&self) -> SigmaL2Elem {
        (0, self.sl.identity())
    }

    /// `φ^{e1} M1 φ^{e2} M2 = φ^{e1+e2} σ^{e2}(M1) M2`.
    fn mul(&self, a: &SigmaL2Elem, b: &SigmaL2Elem) -> SigmaL2Elem {
        let m1 = self.twist(&a.1, b.0 as i64);
        ((a.0 + b.0) % self.f(), self.sl.mul(&m1, &b.1))
    }

    /// `(φ^e M)⁻¹ = φ^{-e} σ^{-e}(M⁻¹)`.
    fn inv(&self, a: &SigmaL2Elem) -> SigmaL2Elem {
        let f = self.f();
        let e = (f - a.0) % f;
        (e, self.twist(&self.sl.inv(&a.1), -(a.0 as i64)))
    }

    fn contains(&self, a: &SigmaL2Elem) -> bool {
        a.0 < self.f() && self.sl.contains(&a.1)
    }

    fn generators(&self) -> Vec<SigmaL2Elem> {
        let mut gens: Vec<_> = self.sl.generators().into_iter().map(|m| (0, m)).collect();
        if self.f() > 1 {
            gens.push(self.phi());
        }
        gens
    }

    fn known_order(&self) -> Option<u128> {
        self.sl.known_order().map(|n| n * self.f() as u128)
    }

    fn describe(&self) -> String {
        format!("sigmal2:{}", self.f())
    }

    fn order_of(&self, a: &SigmaL2Elem) -> u64 {
        let f = self.f() as u64;
        let d = f / gcd(a.0 as u64, f);
        let ad = self.pow(a, d as i64);
        d * self.sl.order_of(&ad.1)
    }

    fn fmt_elem(&self, a: &SigmaL2Elem) -> String {
        let m = self.sl.fmt_elem(&a.1);
        match a.0 {
            0 => m,
            1 => format!("phi*{m}"),
            e => format!("phi^{e}*{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_acts_by_frobenius() {
        let g = SigmaL2::new(FiniteField::new(2, 3).unwrap());
        let phi = g.phi();
        let a = g.sl().field().primitive_element();
        let m: Mat2 = [1, a, 0, 1];
        let conj = g.conj(&g.embed(m), &phi);
        assert_eq!(conj, (0, g.sl().frobenius(&m, 1)));
        assert_eq!(g.order_of(&phi), 3);
    }
}
