//! Finite fields GF(p^f).
//!
//! An element is encoded as the integer `Σ c_i p^i` of its coefficient
//! vector over the fixed modulus, so elements are plain `u32`s and equality
//! and ordering are those of the encodings.

use crate::error::{Error, Result};
use crate::numthy::{factorize, is_prime, order_by_division};
use crate::poly::IntPolynomial;
use num_bigint::BigInt;
use std::fmt;
use std::sync::Arc;

/// Fields up to this size keep discrete log/antilog tables.
const TABLE_LIMIT: u32 = 1 << 16;

pub struct FiniteField {
    p: u32,
    f: u32,
    q: u32,
    /// Monic modulus, constant term first, length `f + 1`.
    modulus: Vec<u32>,
    ppow: Vec<u32>,
    primitive: u32,
    tables: Option<LogTables>,
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.f)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.f == other.f && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u32, f: u32) -> Result<Arc<Self>> {
        if !is_prime(p as u64) {
            return Err(Error::pre(format!("field characteristic {p} is not prime")));
        }
        if f == 0 {
            return Err(Error::pre("extension degree must be at least 1"));
        }
        let q = (p as u64)
            .checked_pow(f)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or_else(|| Error::pre(format!("field of order {p}^{f} is too large")))?
            as u32;
        let modulus = irreducible_coeffs(p, f);
        let ppow = (0..f).map(|i| p.pow(i)).collect();
        let mut field = FiniteField { p, f, q, modulus, ppow, primitive: 0, tables: None };
        field.primitive = (1..q)
            .find(|&g| field.mul_order_slow(g) == (q - 1) as u64)
            .expect("multiplicative group of a finite field is cyclic");
        if q <= TABLE_LIMIT {
            let mut exp = vec![0u32; (q - 1) as usize];
            let mut log = vec![0u32; q as usize];
            let mut x = 1;
            for (k, slot) in exp.iter_mut().enumerate() {
                *slot = x;
                log[x as usize] = k as u32;
                x = field.mul_slow(x, field.primitive);
            }
            field.tables = Some(LogTables { exp, log });
        }
        Ok(Arc::new(field))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> IntPolynomial {
        IntPolynomial::new(self.modulus.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The primitive element with the smallest encoding.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.q
    }

    /// Coefficient vector (length `f`, constant term first).
    pub fn digits(&self, x: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.f as usize);
        let mut x = x;
        for _ in 0..self.f {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().zip(&self.ppow).map(|(&c, &w)| c * w).sum()
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.ppow {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.f == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.ppow {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let s = t.log[a as usize] + t.log[b as usize];
            let m = self.q - 1;
            return t.exp[(if s >= m { s - m } else { s }) as usize];
        }
        self.mul_slow(a, b)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let p = self.p as u64;
        let f = self.f as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * f - 1];
        for i in 0..f {
            for j in 0..f {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        // Reduce with X^f = -(m_0 + ... + m_{f-1} X^{f-1}).
        for k in (f..2 * f - 1).rev() {
            let c = prod[k];
            if c != 0 {
                for j in 0..f {
                    let sub = c * self.modulus[j] as u64 % p;
                    prod[k - f + j] = (prod[k - f + j] + p - sub) % p;
                }
                prod[k] = 0;
            }
        }
        prod[..f]
            .iter()
            .zip(&self.ppow)
            .map(|(&c, &w)| c as u32 * w)
            .sum()
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let m = (self.q - 1) as u64;
            return t.exp[((t.log[a as usize] as u64 * (e % m)) % m) as usize];
        }
        let mut acc = 1;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            let m = self.q - 1;
            let l = t.log[a as usize];
            return Some(t.exp[((m - l) % m) as usize]);
        }
        Some(self.pow(a, (self.q - 2) as u64))
    }

    /// `a^(p^s)`.
    pub fn frobenius(&self, a: u32, s: u32) -> u32 {
        let s = s % self.f;
        self.pow(a, (self.p as u64).pow(s))
    }

    /// Exponent `e` with `g^e = a` for the primitive element `g`.
    pub fn log(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            return Some(t.log[a as usize] as u64);
        }
        let mut x = 1;
        for k in 0..(self.q - 1) as u64 {
            if x == a {
                return Some(k);
            }
            x = self.mul_slow(x, self.primitive);
        }
        None
    }

    /// Multiplicative order, by dividing prime factors out of `q − 1`.
    pub fn mul_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.tables {
            let m = (self.q - 1) as u64;
            let l = t.log[a as usize] as u64;
            return Some(m / num_integer::gcd(m, l));
        }
        Some(self.mul_order_slow(a))
    }

    fn mul_order_slow(&self, a: u32) -> u64 {
        let m = (self.q - 1) as u64;
        order_by_division(m, |e| self.pow_slow(a, e) == 1)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.pow(a, ((self.q - 1) / 2) as u64) == 1
    }

    /// A square root, when one exists (Tonelli–Shanks for odd `q`).
    pub fn sqrt(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return Some(0);
        }
        if self.p == 2 {
            return Some(self.pow(a, (self.q / 2) as u64));
        }
        if !self.is_square(a) {
            return None;
        }
        let mut qq = (self.q - 1) as u64;
        let mut s = 0;
        while qq.is_multiple_of(2) {
            qq /= 2;
            s += 1;
        }
        let z = (2..self.q).find(|&z| !self.is_square(z))?;
        let mut m = s;
        let mut c = self.pow(z, qq);
        let mut t = self.pow(a, qq);
        let mut r = self.pow(a, qq.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(tt, tt);
                i += 1;
            }
            let b = self.pow(c, 1u64 << (m - i - 1));
            m = i;
            c = self.mul(b, b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r)
    }

    /// Roots of the monic quadratic `X² + c1·X + c0`.
    pub fn quadratic_roots(&self, c1: u32, c0: u32) -> Vec<u32> {
        if self.p == 2 {
            return (0..self.q)
                .filter(|&x| self.add(self.add(self.mul(x, x), self.mul(c1, x)), c0) == 0)
                .collect();
        }
        let two_inv = self.inv(self.from_int(2)).expect("odd characteristic");
        let disc = self.sub(self.mul(c1, c1), self.mul(self.from_int(4), c0));
        match self.sqrt(disc) {
            None => Vec::new(),
            Some(r) => {
                let mc1 = self.neg(c1);
                let mut v = vec![
                    self.mul(self.add(mc1, r), two_inv),
                    self.mul(self.sub(mc1, r), two_inv),
                ];
                v.sort_unstable();
                v.dedup();
                v
            }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn element(self: &Arc<Self>, value: u32) -> Result<FqElement> {
        if value >= self.q {
            return Err(Error::pre(format!("{value} is not an element of {self:?}")));
        }
        Ok(FqElement { field: Arc::clone(self), value })
    }
}

/// Coefficients of the lexicographically first monic irreducible polynomial
/// of degree `f` over GF(p): the lower coefficients, read as a base-`p`
/// number with the constant term least significant, are minimal.
fn irreducible_coeffs(p: u32, f: u32) -> Vec<u32> {
    let limit = (p as u64).pow(f);
    for code in 0..limit {
        let mut c = Vec::with_capacity(f as usize + 1);
        let mut x = code;
        for _ in 0..f {
            c.push((x % p as u64) as u32);
            x /= p as u64;
        }
        c.push(1);
        if is_irreducible_mod_p(&c, p) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
fn is_irreducible_mod_p(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut x = code;
            for _ in 0..d {
                div.push((x % p as u64) as u32);
                x /= p as u64;
            }
            div.push(1);
            if rem_mod_p(poly, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn rem_mod_p(a: &[u32], monic: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = monic.len() - 1;
    while r.len() > d {
        let c = r.pop().unwrap() % p64;
        let base = r.len() - d;
        if c != 0 {
            for j in 0..d {
                r[base + j] = (r[base + j] + p64 - c * monic[j] as u64 % p64) % p64;
            }
        }
    }
    r.into_iter().map(|c| c as u32).collect()
}

pub fn find_irreducible(p: u64, f: u32) -> Result<IntPolynomial> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::pre(format!("{p} is not a usable prime")));
    }
    if f == 0 {
        return Err(Error::pre("degree must be at least 1"));
    }
    let c = irreducible_coeffs(p as u32, f);
    Ok(IntPolynomial::new(c.into_iter().map(BigInt::from).collect()))
}

/// A field element bundled with its field.
#[derive(Clone)]
pub struct FqElement {
    pub field: Arc<FiniteField>,
    pub value: u32,
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈{:?}", self.value, self.field)
    }
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl FqElement {
    pub fn mul(&self, other: &Self) -> Self {
        FqElement { field: Arc::clone(&self.field), value: self.field.mul(self.value, other.value) }
    }

    pub fn add(&self, other: &Self) -> Self {
        FqElement { field: Arc::clone(&self.field), value: self.field.add(self.value, other.value) }
    }

    pub fn inv(&self) -> Option<Self> {
        Some(FqElement { field: Arc::clone(&self.field), value: self.field.inv(self.value)? })
    }

    pub fn pow(&self, e: u64) -> Self {
        FqElement { field: Arc::clone(&self.field), value: self.field.pow(self.value, e) }
    }
}

/// Multiplicative order of a nonzero field element.
pub fn fq_mul_order(x: &FqElement) -> Result<u64> {
    if x.value == 0 {
        return Err(Error::pre("zero has no multiplicative order"));
    }
    // Always use the divide-out algorithm here, independent of the log tables.
    Ok(x.field.mul_order_slow(x.value))
}

/// Factorisation of `q − 1` (exposed for callers sizing cyclic subgroups).
pub fn unit_group_order_factors(field: &FiniteField) -> Vec<(u64, u32)> {
    factorize((field.q - 1) as u64).map(|f| f.factors).unwrap_or_default()
}
