use super::Group;
use crate::error::{Error, Result};
use crate::numthy::gcd;

/// `x^a y^e` with `0 <= a < 2m`, `e ∈ {0, 1}`.
pub type QElem = (u64, u8);

/// The generalised quaternion group `Q_{4m} = ⟨x, y | x^{2m}, x^y = x⁻¹, y² = x^m⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    m: u64,
}

impl Quaternion {
    pub fn new(m: u64) -> Result<Self> {
        if m < 1 {
            return Err(Error::pre("quaternion parameter m must be at least 1"));
        }
        Ok(Quaternion { m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn x(&self) -> QElem {
        (1 % (2 * self.m), 0)
    }

    pub fn y(&self) -> QElem {
        (0, 1)
    }

    /// The centre `{1, x^m}`.
    pub fn center_elements(&self) -> Vec<QElem> {
        vec![(0, 0), (self.m, 0)]
    }
}

impl Group for Quaternion {
    type Elem = QElem;

    fn identity(&self) -> QElem {
        (0, 0)
    }

    fn mul(&self, a: &QElem, b: &QElem) -> QElem {
        let n = 2 * self.m;
        let (xa, ea) = *a;
        let (xc, ef) = *b;
        // y x^c = x^{-c} y and y² = x^m.
        let moved = if ea == 1 { (n - xc) % n } else { xc };
        let extra = if ea == 1 && ef == 1 { self.m } else { 0 };
        ((xa + moved + extra) % n, (ea + ef) % 2)
    }

    fn inv(&self, a: &QElem) -> QElem {
        let n = 2 * self.m;
        match *a {
            (xa, 0) => ((n - xa) % n, 0),
            // (x^a y)⁻¹ = y⁻¹ x^{-a} = x^m y x^{-a} = x^{m+a} y
            (xa, _) => ((xa + self.m) % n, 1),
        }
    }

    fn contains(&self, a: &QElem) -> bool {
        a.0 < 2 * self.m && a.1 < 2
    }

    fn generators(&self) -> Vec<QElem> {
        vec![self.x(), self.y()]
    }

    fn known_order(&self) -> Option<u128> {
        Some(4 * self.m as u128)
    }

    fn describe(&self) -> String {
        format!("quaternion:{}", 4 * self.m)
    }

    fn order_of(&self, a: &QElem) -> u64 {
        match *a {
            (xa, 0) => 2 * self.m / gcd(xa, 2 * self.m),
            _ => 4,
        }
    }

    fn fmt_elem(&self, a: &QElem) -> String {
        let xs = match a.0 {
            0 => String::new(),
            1 => "x".into(),
            k => format!("x^{k}"),
        };
        match (xs.is_empty(), a.1) {
            (true, 0) => "1".into(),
            (_, 0) => xs,
            (true, _) => "y".into(),
            _ => format!("{xs}y"),
        }
    }
}
