use super::{Group, NormalSubgroup};
use crate::field::FiniteField;
use crate::numthy::factorize;
use std::sync::Arc;

/// Row-major 2×2 matrix `[a, b, c, d]` over an encoded finite field.
pub type Mat2 = [u32; 4];

/// `SL(2, q)` as 2×2 matrices of determinant 1.
#[derive(Clone)]
pub struct Sl2 {
    field: Arc<FiniteField>,
    /// A multiple of every element order, and its prime divisors.
    exponent: u64,
    exponent_primes: Vec<u64>,
}

impl std::fmt::Debug for Sl2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SL(2,{})", self.field.order())
    }
}

impl Sl2 {
    pub fn new(field: Arc<FiniteField>) -> Self {
        let q = field.order() as u64;
        let p = field.characteristic() as u64;
        let exponent = p * (q - 1) * (q + 1);
        let exponent_primes = factorize(exponent).expect("positive").primes();
        Sl2 { field, exponent, exponent_primes }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn matrix(&self, a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        let f = &self.field;
        [f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)]
    }

    /// `b = [[1,0],[1,1]]`, `w = [[1,1],[0,1]]`.
    pub fn standard_pair(&self) -> (Mat2, Mat2) {
        (self.matrix(1, 0, 1, 1), self.matrix(1, 1, 0, 1))
    }

    pub fn minus_identity(&self) -> Mat2 {
        self.matrix(-1, 0, 0, -1)
    }

    pub fn trace(&self, m: &Mat2) -> u32 {
        self.field.add(m[0], m[3])
    }

    pub fn det(&self, m: &Mat2) -> u32 {
        let f = &self.field;
        f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]))
    }

    /// Entrywise `x ↦ x^(p^s)`.
    pub fn frobenius(&self, m: &Mat2, s: u32) -> Mat2 {
        m.map(|x| self.field.frobenius(x, s))
    }

    /// The centre `{±I}` (trivial in characteristic 2).
    pub fn center(&self) -> NormalSubgroup<Mat2> {
        let mut elems = vec![self.identity(), self.minus_identity()];
        elems.sort();
        elems.dedup();
        NormalSubgroup::from_trusted_elements("center", elems)
    }

    /// Companion matrix of `X² − αX + 1`.
    pub fn companion(&self, alpha: u32) -> Mat2 {
        [0, self.field.neg(1), 1, alpha]
    }
}

impl Group for Sl2 {
    type Elem = Mat2;

    fn identity(&self) -> Mat2 {
        [1, 0, 0, 1]
    }

    fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let f = &self.field;
        [
            f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
            f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
            f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
            f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3])),
        ]
    }

    fn inv(&self, x: &Mat2) -> Mat2 {
        let f = &self.field;
        [x[3], f.neg(x[1]), f.neg(x[2]), x[0]]
    }

    fn contains(&self, x: &Mat2) -> bool {
        x.iter().all(|&e| self.field.contains(e)) && self.det(x) == 1
    }

    fn generators(&self) -> Vec<Mat2> {
        let (b, w) = self.standard_pair();
        if self.field.degree() == 1 {
            return vec![b, w];
        }
        let g = self.field.primitive_element();
        vec![b, w, [1, 0, g, 1], [1, g, 0, 1]]
    }

    fn known_order(&self) -> Option<u128> {
        let q = self.q() as u128;
        Some(q * (q * q - 1))
    }

    fn describe(&self) -> String {
        let (p, f) = (self.field.characteristic(), self.field.degree());
        if f == 1 {
            format!("sl2:{p}")
        } else {
            format!("sl2:{p}^{f}")
        }
    }

    fn order_of(&self, x: &Mat2) -> u64 {
        let mut order = self.exponent;
        for &p in &self.exponent_primes {
            while order.is_multiple_of(p) && self.pow(x, (order / p) as i64) == [1, 0, 0, 1] {
                order /= p;
            }
        }
        order
    }

    fn fmt_elem(&self, x: &Mat2) -> String {
        format!("[[{},{}],[{},{}]]", x[0], x[1], x[2], x[3])
    }
}
