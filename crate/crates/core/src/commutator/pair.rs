use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::passive::PassiveGroup;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::literal::{format_pair_literal, parse_pair_literal};

/// An element `(a; f)` of `(A, X) ≀ B`: a top `a` in `Z_r` and a base
/// function `f: X -> B` given by its values on `X = {0, ..., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WreathPair {
    pub top: u32,
    pub base: Vec<u32>,
}

impl WreathPair {
    pub fn new(top: u32, base: Vec<u32>) -> Self {
        WreathPair { top, base }
    }
}

impl fmt::Display for WreathPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_pair_literal(self.top, &self.base))
    }
}

/// `(Z_r, X) ≀ B` with `|X| = n`, where `a` in `Z_r` moves point `i` to
/// `i + a*step mod n`. The action need not be faithful.
///
/// Multiplication is `(a1, f1)(a2, f2) = (a1 a2, f1 · f2^a1)` with
/// `f^a(i) = f(a(i))`; with `r = n`, `step = 1`, `B = Z_m` this agrees with
/// the tableau product on the two-level signature `(n, m)`.
#[derive(Clone, Debug)]
pub struct TwoLevelWreath {
    active_order: u32,
    set_size: usize,
    step: u32,
    passive: PassiveGroup,
}

impl TwoLevelWreath {
    /// `Z_r` shifting `n` points by one, over `Z_m`.
    pub fn new(r: u32, n: usize, m: u32) -> Result<Self> {
        TwoLevelWreath::with_passive(r, n, 1, PassiveGroup::cyclic(m)?)
    }

    pub fn with_passive(r: u32, n: usize, step: u32, passive: PassiveGroup) -> Result<Self> {
        if r == 0 || n == 0 {
            return Err(Error::Shape(
                "active order and set size must be at least 1".into(),
            ));
        }
        // shift by a*step mod n is a homomorphism from Z_r iff n | r*step
        // (or r = 1, where no sum wraps)
        if r > 1 && !(r as u64 * step as u64).is_multiple_of(n as u64) {
            return Err(Error::Hypothesis(format!(
                "a -> shift by {step}a mod {n} is not a homomorphism from Z{r}"
            )));
        }
        Ok(TwoLevelWreath {
            active_order: r,
            set_size: n,
            step,
            passive,
        })
    }

    pub fn active_order(&self) -> u32 {
        self.active_order
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn step(&self) -> u32 {
        self.step
    }

    pub fn passive(&self) -> &PassiveGroup {
        &self.passive
    }

    /// Image of point `i` under `a`.
    pub fn act(&self, a: u32, i: usize) -> usize {
        let n = self.set_size as u64;
        ((i as u64 + (a as u64 * self.step as u64) % n) % n) as usize
    }

    /// Exhaustive check that `a -> act(a, ·)` respects addition in `Z_r`.
    pub fn action_is_homomorphism(&self) -> bool {
        let r = self.active_order;
        (0..r).all(|a| {
            (0..r).all(|b| {
                (0..self.set_size).all(|i| self.act((a + b) % r, i) == self.act(b, self.act(a, i)))
            })
        })
    }

    /// Orbits of the active group on `X`; point `i` lies in orbit `i mod g`
    /// with `g = gcd(step, n)`.
    pub fn orbit_count(&self) -> usize {
        (self.step as usize % self.set_size).gcd(&self.set_size)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_count() == 1
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.active_order)
            * BigUint::from(self.passive.order()).pow(self.set_size as u32)
    }

    pub fn validate(&self, x: &WreathPair) -> Result<()> {
        if x.top >= self.active_order {
            return Err(Error::Shape(format!(
                "top {} outside Z{}",
                x.top, self.active_order
            )));
        }
        if x.base.len() != self.set_size {
            return Err(Error::Shape(format!(
                "base has {} coordinates, expected {}",
                x.base.len(),
                self.set_size
            )));
        }
        let m = self.passive.order();
        if let Some(b) = x.base.iter().find(|&&b| b >= m) {
            return Err(Error::Shape(format!(
                "base coordinate {b} outside [0, {m})"
            )));
        }
        Ok(())
    }

    pub fn pair_mul(&self, x: &WreathPair, y: &WreathPair) -> Result<WreathPair> {
        self.validate(x)?;
        self.validate(y)?;
        Ok(self.mul(x, y))
    }

    /// Every element, in canonical order. Fails if `|W| > limit`.
    pub fn elements(&self, limit: usize) -> Result<Vec<WreathPair>> {
        if self.order() > BigUint::from(limit) {
            return Err(Error::LimitExceeded { limit });
        }
        let m = self.passive.order();
        let mut out = Vec::new();
        for top in 0..self.active_order {
            let mut base = vec![0u32; self.set_size];
            loop {
                out.push(WreathPair::new(top, base.clone()));
                // odometer, last coordinate fastest
                let mut i = self.set_size;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    base[i] += 1;
                    if base[i] < m {
                        break;
                    }
                    base[i] = 0;
                    if i == 0 {
                        i = usize::MAX;
                        break;
                    }
                }
                if i == usize::MAX {
                    break;
                }
            }
        }
        Ok(out)
    }

    pub fn parse_pair(&self, src: &str) -> Result<WreathPair> {
        let (top, base) = parse_pair_literal(src)?;
        let to_u32 = |v: i64, what: &str| {
            u32::try_from(v)
                .map_err(|_| Error::Shape(format!("{what} {v} is negative or too large")))
        };
        let pair = WreathPair::new(
            to_u32(top, "top")?,
            base.into_iter()
                .map(|b| to_u32(b, "base coordinate"))
                .collect::<Result<_>>()?,
        );
        self.validate(&pair)?;
        Ok(pair)
    }

    pub fn describe(&self) -> String {
        format!(
            "(Z{}, X{}{}) wr {}",
            self.active_order,
            self.set_size,
            if self.step == 1 {
                String::new()
            } else {
                format!(", step {}", self.step)
            },
            self.passive.describe()
        )
    }
}

impl Group for TwoLevelWreath {
    type Elem = WreathPair;

    fn identity(&self) -> WreathPair {
        WreathPair::new(0, vec![0; self.set_size])
    }

    fn mul(&self, x: &WreathPair, y: &WreathPair) -> WreathPair {
        let top = ((x.top as u64 + y.top as u64) % self.active_order as u64) as u32;
        let base = (0..self.set_size)
            .map(|i| self.passive.mul(x.base[i], y.base[self.act(x.top, i)]))
            .collect();
        WreathPair { top, base }
    }

    fn inv(&self, x: &WreathPair) -> WreathPair {
        // (a, f)^-1 = (-a, g) with g(a(i)) = f(i)^-1
        let top = (self.active_order - x.top) % self.active_order;
        let mut base = vec![0u32; self.set_size];
        for i in 0..self.set_size {
            base[self.act(x.top, i)] = self.passive.inv(x.base[i]);
        }
        WreathPair { top, base }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::{Signature, TreeElement};
    use std::sync::Arc;

    #[test]
    fn enumerates_every_element_once() {
        let w = TwoLevelWreath::new(3, 3, 2).unwrap();
        let all = w.elements(100).unwrap();
        assert_eq!(all.len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, all);
        assert!(matches!(
            w.elements(23),
            Err(Error::LimitExceeded { limit: 23 })
        ));
    }

    #[test]
    fn identity_is_neutral_and_inverse_works() {
        let w = TwoLevelWreath::new(4, 2, 3).unwrap();
        let e = w.identity();
        for x in w.elements(100).unwrap() {
            assert_eq!(w.mul(&e, &x), x);
            assert_eq!(w.mul(&x, &e), x);
            assert_eq!(w.mul(&x, &w.inv(&x)), e);
            assert_eq!(w.mul(&w.inv(&x), &x), e);
        }
    }

    #[test]
    fn agrees_with_tableau_product() {
        let w = TwoLevelWreath::new(2, 2, 2).unwrap();
        let sig = Arc::new(Signature::new(vec![2, 2]).unwrap());
        let embed = |p: &WreathPair| {
            TreeElement::from_levels(
                &sig,
                vec![
                    vec![p.top as u64],
                    p.base.iter().map(|&b| b as u64).collect(),
                ],
            )
            .unwrap()
        };
        let all = w.elements(100).unwrap();
        let mut checked = 0;
        for x in &all {
            for y in &all {
                assert_eq!(embed(&w.mul(x, y)), embed(x).mul(&embed(y)).unwrap());
                checked += 1;
            }
        }
        assert_eq!(checked, 64);
    }

    #[test]
    fn non_homomorphic_shifts_are_rejected() {
        assert!(TwoLevelWreath::new(3, 2, 2).is_err());
        let w = TwoLevelWreath::new(6, 3, 2).unwrap();
        assert!(w.action_is_homomorphism());
        // the arithmetic criterion agrees with the exhaustive check
        for r in 1..7u32 {
            for n in 1..7usize {
                for step in 0..4u32 {
                    let ok = TwoLevelWreath::with_passive(r, n, step, PassiveGroup::Cyclic(2));
                    if let Ok(w) = &ok {
                        assert!(w.action_is_homomorphism());
                    } else {
                        let probe = TwoLevelWreath {
                            active_order: r,
                            set_size: n,
                            step,
                            passive: PassiveGroup::Cyclic(2),
                        };
                        assert!(!probe.action_is_homomorphism(), "r={r} n={n} step={step}");
                    }
                }
            }
        }
    }

    #[test]
    fn orbits() {
        let w = TwoLevelWreath::with_passive(2, 4, 2, PassiveGroup::Cyclic(3)).unwrap();
        assert_eq!(w.orbit_count(), 2);
        assert!(!w.is_transitive());
        assert!(TwoLevelWreath::new(4, 2, 3).unwrap().is_transitive());
    }

    #[test]
    fn pair_literals() {
        let w = TwoLevelWreath::new(3, 3, 2).unwrap();
        let p = w.parse_pair("(0; 1,0,1)").unwrap();
        assert_eq!(p, WreathPair::new(0, vec![1, 0, 1]));
        assert_eq!(p.to_string(), "(0; 1,0,1)");
        assert!(w.parse_pair("(0; 1,0)").is_err());
        assert!(w.parse_pair("(3; 1,0,1)").is_err());
        assert!(w.parse_pair("(0; 1,0,2)").is_err());
        assert!(w.parse_pair("(0; 1,0,-1)").is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"top":0,"base":[1,0,1]}"#);
    }
}
