use super::Group;
use crate::numthy::gcd;

/// `Z_n = ⟨h⟩`, elements stored as exponents of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclic {
    n: u64,
}

impl Cyclic {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        Cyclic { n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `h^k` for any integer `k`.
    pub fn h(&self, k: i64) -> u64 {
        k.rem_euclid(self.n as i64) as u64
    }
}

impl Group for Cyclic {
    type Elem = u64;

    fn identity(&self) -> u64 {
        0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }

    fn inv(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.n
    }

    fn generators(&self) -> Vec<u64> {
        vec![1 % self.n]
    }

    fn known_order(&self) -> Option<u128> {
        Some(self.n as u128)
    }

    fn describe(&self) -> String {
        format!("cyclic:{}", self.n)
    }

    fn order_of(&self, a: &u64) -> u64 {
        self.n / gcd(*a, self.n)
    }

    fn fmt_elem(&self, a: &u64) -> String {
        match a {
            0 => "1".into(),
            1 => "h".into(),
            k => format!("h^{k}"),
        }
    }
}
