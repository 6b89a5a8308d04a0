use super::{Group, NormalSubgroup};
use crate::error::{Error, Result};
use crate::numthy::{gcd, lcm};

/// `(t_1, …, t_k)·g^a`: a base tuple followed by a power of the cyclic shift.
pub type WreathElem<E> = (Vec<E>, u32);

/// `T ≀ Z_k = T^k : ⟨g⟩`, where conjugation by `g` shifts coordinates:
/// `(t_1, …, t_k)^g = (t_k, t_1, …, t_{k-1})`.
///
/// Element orders are computed from the inner group's orders, so products
/// such as `A₅ ≀ Z₉` are usable without ever being enumerated.
#[derive(Clone, Debug)]
pub struct Wreath<T: Group> {
    inner: T,
    k: u32,
}

impl<T: Group> Wreath<T> {
    pub fn new(inner: T, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::pre("wreath product needs k >= 1"));
        }
        Ok(Wreath { inner, k })
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The shift `g`.
    pub fn g(&self) -> WreathElem<T::Elem> {
        (vec![self.inner.identity(); self.k as usize], 1 % self.k)
    }

    /// A base element.
    pub fn base(&self, coords: Vec<T::Elem>) -> WreathElem<T::Elem> {
        assert_eq!(coords.len(), self.k as usize);
        (coords, 0)
    }

    /// `x^g`, which for base elements is the coordinate shift.
    pub fn shifted(&self, x: &WreathElem<T::Elem>) -> WreathElem<T::Elem> {
        self.conj(x, &self.g())
    }

    /// The base group `T^k`, by membership test.
    pub fn base_subgroup(&self) -> NormalSubgroup<WreathElem<T::Elem>>
    where
        T::Elem: 'static,
    {
        let order = self.inner.known_order().map_or(0, |t| t.pow(self.k));
        NormalSubgroup::structural("base", order, |x: &WreathElem<T::Elem>| x.1 == 0, None)
    }
}

impl<T: Group> Group for Wreath<T> {
    type Elem = WreathElem<T::Elem>;

    fn identity(&self) -> Self::Elem {
        (vec![self.inner.identity(); self.k as usize], 0)
    }

    /// `(t g^a)(u g^c) = (t · u^{g^{-a}}) g^{a+c}` with `(u^{g^{-a}})_i = u_{i+a}`.
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        let k = self.k as usize;
        let a = x.1 as usize;
        let coords = (0..k)
            .map(|i| self.inner.mul(&x.0[i], &y.0[(i + a) % k]))
            .collect();
        (coords, (x.1 + y.1) % self.k)
    }

    /// `(t g^a)⁻¹ = (t⁻¹)^{g^a} g^{-a}` with `((t⁻¹)^{g^a})_i = t⁻¹_{i-a}`.
    fn inv(&self, x: &Self::Elem) -> Self::Elem {
        let k = self.k as usize;
        let a = x.1 as usize;
        let coords = (0..k)
            .map(|i| self.inner.inv(&x.0[(i + k - a) % k]))
            .collect();
        (coords, (self.k - x.1) % self.k)
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        x.1 < self.k && x.0.len() == self.k as usize && x.0.iter().all(|t| self.inner.contains(t))
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let mut gens: Vec<_> = self
            .inner
            .generators()
            .into_iter()
            .map(|t| {
                let mut c = vec![self.inner.identity(); self.k as usize];
                c[0] = t;
                (c, 0)
            })
            .collect();
        if self.k > 1 {
            gens.push(self.g());
        }
        gens
    }

    fn known_order(&self) -> Option<u128> {
        self.inner
            .known_order()
            .and_then(|t| t.checked_pow(self.k))
            .and_then(|b| b.checked_mul(self.k as u128))
    }

    fn describe(&self) -> String {
        format!("{}≀Z{}", self.inner.describe(), self.k)
    }

    /// If the top part has order `d` then `x^d` lies in the base and
    /// `|x| = d·|x^d|`.
    fn order_of(&self, x: &Self::Elem) -> u64 {
        let d = (self.k / gcd(x.1 as u64, self.k as u64) as u32) as u64;
        let xd = self.pow(x, d as i64);
        d * xd.0.iter().fold(1, |acc, t| lcm(acc, self.inner.order_of(t)))
    }

    fn fmt_elem(&self, x: &Self::Elem) -> String {
        let coords: Vec<String> = x.0.iter().map(|t| self.inner.fmt_elem(t)).collect();
        match x.1 {
            0 => format!("[{}]", coords.join(", ")),
            1 => format!("[{}]g", coords.join(", ")),
            a => format!("[{}]g^{a}", coords.join(", ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Cyclic, PermGroup};

    #[test]
    fn shift_convention() {
        let w = Wreath::new(Cyclic::new(10), 3).unwrap();
        let x = w.base(vec![1, 2, 3]);
        assert_eq!(w.shifted(&x).0, vec![3, 1, 2]);
    }

    #[test]
    fn group_laws_on_samples() {
        let w = Wreath::new(PermGroup::alternating(5), 3).unwrap();
        let gens = w.generators();
        let mut x = w.identity();
        for i in 0..50 {
            x = w.mul(&x, &gens[i % gens.len()]);
            assert_eq!(w.mul(&x, &w.inv(&x)), w.identity());
            assert_eq!(w.mul(&w.inv(&x), &x), w.identity());
            let y = &gens[(i * 7 + 1) % gens.len()];
            let z = &gens[(i * 3 + 2) % gens.len()];
            assert_eq!(w.mul(&w.mul(&x, y), z), w.mul(&x, &w.mul(y, z)));
        }
    }
}
