use std::fmt;

use serde::{Deserialize, Serialize};

use super::phi::{phi_pow_apply, Variant};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::literal::{format_pair_literal, parse_pair_literal};

/// `ρ^k τ1^s1 ... τn^sn` in `Z ⋉_φ Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HElement {
    pub k: i64,
    pub s: Vec<i64>,
}

impl HElement {
    pub fn new(k: i64, s: Vec<i64>) -> Self {
        HElement { k, s }
    }

    pub fn identity(n: usize) -> Self {
        HElement::new(0, vec![0; n])
    }

    pub fn rho(n: usize) -> Self {
        HElement::new(1, vec![0; n])
    }

    /// `τ_i`, with `i` 1-based.
    pub fn tau(n: usize, i: usize) -> Self {
        let mut s = vec![0; n];
        s[i - 1] = 1;
        HElement::new(0, s)
    }

    pub fn rank(&self) -> usize {
        self.s.len()
    }

    pub fn is_identity(&self) -> bool {
        self.k == 0 && self.s.iter().all(|&v| v == 0)
    }

    /// Parses `(k; s1,...,sn)` and checks the rank.
    pub fn parse(src: &str, n: usize) -> Result<Self> {
        let (k, s) = parse_pair_literal(src)?;
        if s.len() != n {
            return Err(Error::RankMismatch(format!(
                "literal has {} exponents, expected {n}",
                s.len()
            )));
        }
        Ok(HElement::new(k, s))
    }
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pair_literal(self.k, &self.s))
    }
}

/// `H = Z ⋉_φ Z^n` for a fixed rank and shift variant.
///
/// `(k1; s1)(k2; s2) = (k1 + k2; φ^(-k2)(s1) + s2)`, so that
/// `ρ τ_i ρ^-1 = τ_(i+1)` and `ρ τ_n ρ^-1 = τ_1^-1` (signed) or `τ_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorseGroup {
    n: usize,
    variant: Variant,
}

impl MorseGroup {
    pub fn new(n: usize, variant: Variant) -> Result<Self> {
        if n == 0 {
            return Err(Error::RankMismatch("rank must be at least 1".into()));
        }
        Ok(MorseGroup { n, variant })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn rho(&self) -> HElement {
        HElement::rho(self.n)
    }

    pub fn tau(&self, i: usize) -> HElement {
        HElement::tau(self.n, i)
    }

    /// `ρ, τ1, ..., τn`.
    pub fn generators(&self) -> Vec<HElement> {
        let mut g = vec![self.rho()];
        g.extend((1..=self.n).map(|i| self.tau(i)));
        g
    }

    fn check(&self, x: &HElement) -> Result<()> {
        if x.rank() != self.n {
            return Err(Error::RankMismatch(format!(
                "element {x} has rank {}, group has rank {}",
                x.rank(),
                self.n
            )));
        }
        Ok(())
    }

    pub fn h_mul(&self, x: &HElement, y: &HElement) -> Result<HElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn h_inv(&self, x: &HElement) -> Result<HElement> {
        self.check(x)?;
        Ok(self.inv(x))
    }

    pub fn pow(&self, x: &HElement, e: i64) -> HElement {
        let base = if e < 0 { self.inv(x) } else { x.clone() };
        let mut acc = self.identity();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    /// `x` commutes with `ρ` and every `τ_i`, hence with all of `H`.
    pub fn is_central(&self, x: &HElement) -> Result<bool> {
        self.check(x)?;
        Ok(self
            .generators()
            .iter()
            .all(|g| self.mul(x, g) == self.mul(g, x)))
    }
}

impl Group for MorseGroup {
    type Elem = HElement;

    fn identity(&self) -> HElement {
        HElement::identity(self.n)
    }

    fn mul(&self, x: &HElement, y: &HElement) -> HElement {
        let shifted = phi_pow_apply(&x.s, -y.k, self.variant);
        HElement {
            k: x.k + y.k,
            s: shifted.iter().zip(&y.s).map(|(a, b)| a + b).collect(),
        }
    }

    fn inv(&self, x: &HElement) -> HElement {
        // (k; s)^-1 = (-k; -φ^k(s))
        let s = phi_pow_apply(&x.s, x.k, self.variant);
        HElement {
            k: -x.k,
            s: s.into_iter().map(|v| -v).collect(),
        }
    }
}
