//! Exact univariate polynomials over the integers: cyclotomic polynomials
//! and the minimal polynomials of `2cos(2πk/n)`.

use crate::error::{Error, Result};
use crate::numthy::{divisors, euler_phi};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Integer polynomial, constant term first. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `c·X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `X + a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64(&[a, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact division by a polynomial with unit leading coefficient.
    /// Fails if the divisor is not monic up to sign or the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(Error::pre("polynomial division is not exact"));
        }
        Ok(q)
    }

    /// Division with remainder by a divisor whose leading coefficient is ±1.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::pre("division by the zero polynomial"))?
            .clone();
        if !lead.abs().is_one() {
            return Err(Error::pre("divisor leading coefficient is not a unit"));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead; // lead is ±1, so this divides
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// `self(inner(X))`, by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(inner).add(&Self::new(vec![c.clone()])))
    }

    /// `self(X + a)`.
    pub fn shift(&self, a: i64) -> Self {
        self.compose(&Self::linear(a))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `x` reduced into `[0, p)`.
    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let pm = BigInt::from(p);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * x + c).mod_floor(&pm);
        }
        acc.to_u64().unwrap_or(0)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

/// Φ_n, from `X^n − 1 = ∏_{d | n} Φ_d`.
pub fn cyclotomic_poly(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::pre("cyclotomic polynomial of index 0"));
    }
    let mut num = IntPolynomial::monomial(BigInt::one(), n as usize).sub(&IntPolynomial::one());
    for d in divisors(n) {
        if d < n {
            num = num.div_exact(&cyclotomic_poly(d)?)?;
        }
    }
    Ok(num)
}

/// ψ_n: the minimal polynomial of `2cos(2π/n)`, characterised by
/// `Φ_n(X) = ψ_n(X + X⁻¹)·X^{φ(n)/2}`.
pub fn psi_poly(n: u64) -> Result<IntPolynomial> {
    if n < 3 {
        return Err(Error::pre(format!("psi polynomial needs n >= 3, got {n}")));
    }
    let half = (euler_phi(n)? / 2) as usize;
    let mut rem = cyclotomic_poly(n)?;
    let x2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    let mut psi = vec![BigInt::zero(); half + 1];
    // (X + X⁻¹)^k · X^half = X^{half-k} (X² + 1)^k; peel off from the top.
    for k in (0..=half).rev() {
        let c = rem.coeff(half + k);
        if !c.is_zero() {
            let basis = x2p1.pow(k as u32).mul(&IntPolynomial::monomial(BigInt::one(), half - k));
            rem = rem.sub(&basis.scale(&c));
        }
        psi[k] = c;
    }
    if !rem.is_zero() {
        return Err(Error::pre(format!("Φ_{n} is not palindromic")));
    }
    Ok(IntPolynomial::new(psi))
}

/// ψ*_n, the trace polynomial re-centred at the standard family's trace
/// offset: `ψ*_n(i) = ψ_n(i + 2)`, since `bw^i` has trace `i + 2`.
pub fn psi_star_poly(n: u64) -> Result<IntPolynomial> {
    Ok(psi_poly(n)?.shift(2))
}

/// All residues `i ∈ [0, p)` with `f(i) ≡ 0 (mod p)`.
pub fn poly_roots_mod_p(f: &IntPolynomial, p: u64) -> Result<Vec<u64>> {
    if !crate::numthy::is_prime(p) {
        return Err(Error::pre(format!("{p} is not prime")));
    }
    Ok((0..p).filter(|&i| f.eval_mod(i, p) == 0).collect())
}
