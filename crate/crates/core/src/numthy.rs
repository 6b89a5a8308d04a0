//! Elementary number theory on machine integers.

use crate::error::{Error, Result};
use serde::Serialize;

/// A positive integer together with its prime factorisation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredInt {
    pub value: u64,
    /// `(prime, exponent)` with strictly increasing primes.
    pub factors: Vec<(u64, u32)>,
}

impl FactoredInt {
    /// π(n): the set of prime divisors.
    pub fn primes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, _)| p).collect()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

pub fn factorize(n: u64) -> Result<FactoredInt> {
    if n == 0 {
        return Err(Error::pre("cannot factorise 0"));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(FactoredInt { value: n, factors })
}

/// Prime divisors of `n` (empty for `n = 1`).
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n.max(1)).map(|f| f.primes()).unwrap_or_default()
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

/// `Some((p, f))` when `q = p^f` with `p` prime and `f >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q).ok()?;
    match f.factors.as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn odd_part(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::pre("odd part of 0"));
    }
    Ok(n >> n.trailing_zeros())
}

pub fn p_part(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::pre(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::pre("p-part of 0"));
    }
    let mut m = n;
    let mut part = 1;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    Ok(part)
}

/// Sorted list of positive divisors.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// True iff `ell | p^d - 1` and `ell` divides no `p^i - 1` with `1 <= i < d`.
pub fn is_primitive_divisor(ell: u64, p: u64, d: u32) -> bool {
    if ell == 0 || d == 0 {
        return false;
    }
    let hits = |i: u32| pow_mod(p, i as u64, ell) == 1 % ell;
    hits(d) && (1..d).all(|i| !hits(i))
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn mult_order_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
    }
    Some(k)
}

/// Order of an element `g` in a group of exponent dividing `bound`, given a
/// test `is_identity_power(e)` that reports whether `g^e = 1`.
pub(crate) fn order_by_division(bound: u64, mut is_identity_power: impl FnMut(u64) -> bool) -> u64 {
    let mut order = bound;
    for p in prime_divisors(bound) {
        while order.is_multiple_of(p) && is_identity_power(order / p) {
            order /= p;
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors.is_empty());
        assert_eq!(factorize(12).unwrap().factors, vec![(2, 2), (3, 1)]);
        assert_eq!(
            factorize(32736).unwrap().factors,
            vec![(2, 5), (3, 1), (11, 1), (31, 1)]
        );
        assert!(factorize(0).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(15).unwrap(), 8);
        assert_eq!(euler_phi(22).unwrap(), 10);
        for n in 1..300u64 {
            let naive = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
            assert_eq!(euler_phi(n).unwrap(), naive);
        }
    }

    #[test]
    fn parts() {
        assert_eq!(odd_part(8).unwrap(), 1);
        assert_eq!(odd_part(12).unwrap(), 3);
        assert_eq!(odd_part(102).unwrap(), 51);
        assert_eq!(p_part(12, 2).unwrap(), 4);
        assert_eq!(p_part(12, 5).unwrap(), 1);
        assert_eq!(p_part(45, 3).unwrap(), 9);
        assert!(p_part(12, 4).is_err());
        assert!(p_part(0, 2).is_err());
    }

    #[test]
    fn primitive_divisors() {
        assert!(is_primitive_divisor(3, 2, 2));
        assert!(is_primitive_divisor(4, 5, 1));
        assert!(!is_primitive_divisor(3, 7, 2));
        assert!(is_primitive_divisor(7, 2, 3));
        assert!(is_primitive_divisor(8, 3, 2));
    }

    #[test]
    fn order_division_matches_scan() {
        for m in [7u64, 11, 31, 97] {
            for a in 1..m {
                let by_div = order_by_division(m - 1, |e| pow_mod(a, e, m) == 1);
                assert_eq!(Some(by_div), mult_order_mod(a, m));
            }
        }
    }

    #[test]
    fn divisor_list() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
