//! Arithmetic modulo a prime `p < 2^32`, so products fit in a `u64`.

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u64 = (1 << 31) - 1;

/// Residues are plain `u64` values in `[0, p)`.
pub type FieldElement = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Accepts primes in `(2^30, 2^32)`.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 1 << 30 || p >= 1 << 32 {
            return Err(Error::Config(format!(
                "prime {p} outside the supported range (2^30, 2^32)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, v: u128) -> FieldElement {
        (v % self.p as u128) as u64
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        (x + y) % self.p
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        (x + self.p - y) % self.p
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        x * y % self.p
    }

    /// `[1, x, x^2, ..., x^n]`.
    pub fn powers(&self, x: FieldElement, n: usize) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(n + 1);
        let mut acc = 1 % self.p;
        for _ in 0..=n {
            out.push(acc);
            acc = self.mul(acc, x);
        }
        out
    }
}

/// Trial division; inputs are below `2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
