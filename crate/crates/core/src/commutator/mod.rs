//! Two-level wreath products `(Z_r, X) ≀ B`: commutator subgroup membership,
//! abelianization and centers, each paired with a brute-force oracle.

mod pair;
mod passive;

pub use pair::{TwoLevelWreath, WreathPair};
pub use passive::{PassiveGroup, TableGroup, MAX_TABLE_ORDER};

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{center_by_enumeration, commutator_subgroup, Group};

/// Whether `x` lies in `W'`.
///
/// For a transitive action, `(a; f)` is in `W'` iff `a` is in `A'` (trivial,
/// as `A` is cyclic) and `f(0) f(1) ... f(n-1)` lies in `B'`. With `B = Z_m`
/// this is `a = 0` and `sum f = 0 mod m`.
pub fn is_in_commutator(w: &TwoLevelWreath, x: &WreathPair) -> Result<bool> {
    if !w.is_transitive() {
        return Err(Error::NonTransitive {
            orbits: w.orbit_count(),
        });
    }
    w.validate(x)?;
    let b = w.passive();
    let product = x.base.iter().fold(0, |acc, &v| b.mul(acc, v));
    Ok(x.top == 0 && b.in_commutator(product))
}

/// `h_i = (0; e_i + (m-1) e_n)` for `i = 1..n-1`: a unit at position `i`,
/// balanced by `m - 1` in the last position.
pub fn commutator_generators(n: usize, m: u32) -> Result<Vec<WreathPair>> {
    if n < 2 || m == 0 {
        return Err(Error::Shape(format!(
            "need n >= 2 and m >= 1, got n={n}, m={m}"
        )));
    }
    Ok((0..n - 1)
        .map(|i| {
            let mut base = vec![0u32; n];
            base[i] = 1 % m;
            base[n - 1] = m - 1;
            WreathPair::new(0, base)
        })
        .collect())
}

/// `W'` by brute force: the closure of all commutators `[x, y]`.
pub fn commutator_subgroup_oracle(w: &TwoLevelWreath, limit: usize) -> Result<Vec<WreathPair>> {
    let all = w.elements(limit)?;
    commutator_subgroup(w, &all, limit)
}

/// `(n-1) d(B) + d(B') + d(A')`, an upper bound on `d(W')` for transitive `A`.
pub fn dprime_upper_bound(n: u64, d_b: u64, d_b_prime: u64, d_a_prime: u64) -> u64 {
    n.saturating_sub(1) * d_b + d_b_prime + d_a_prime
}

/// Invariant factors `d_1 | d_2 | ... | d_k` (all `> 1`) of `Z_{a_1} x ... x Z_{a_j}`.
pub fn invariant_factors(orders: &[u64]) -> Vec<u64> {
    let mut f: Vec<u64> = orders.iter().copied().filter(|&a| a != 1).collect();
    // (a, b) -> (gcd, lcm) preserves the group; repeat until a divisor chain
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let (g, l) = (f[i].gcd(&f[j]), f[i].lcm(&f[j]));
            f[i] = g;
            f[j] = l;
        }
    }
    f.retain(|&a| a != 1);
    f
}

/// `W / W' = A / A' x B / B'` as invariant factors.
pub fn abelianization(w: &TwoLevelWreath) -> Result<Vec<u64>> {
    if !w.is_transitive() {
        return Err(Error::NonTransitive {
            orbits: w.orbit_count(),
        });
    }
    let mut orders = vec![w.active_order() as u64];
    orders.extend(w.passive().abelianization_factors());
    Ok(invariant_factors(&orders))
}

/// Order and exponent of `W / W'`, computed from the oracle commutator
/// subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientShape {
    pub order: u64,
    pub exponent: u64,
}

pub fn abelianization_oracle(w: &TwoLevelWreath, limit: usize) -> Result<QuotientShape> {
    let all = w.elements(limit)?;
    let comm = commutator_subgroup(w, &all, limit)?;
    let mut exponent = 1u64;
    for x in &all {
        let mut acc = x.clone();
        let mut k = 1u64;
        while comm.binary_search(&acc).is_err() {
            acc = w.mul(&acc, x);
            k += 1;
        }
        exponent = exponent.lcm(&k);
    }
    Ok(QuotientShape {
        order: (all.len() / comm.len()) as u64,
        exponent,
    })
}

/// Elements of `A` fixing every point of `X`.
pub fn action_kernel(w: &TwoLevelWreath) -> Vec<u32> {
    (0..w.active_order())
        .filter(|&a| (0..w.set_size()).all(|i| w.act(a, i) == i))
        .collect()
}

/// `Z(W) = (Z(A) ∩ K) x {f : f constant on each orbit, values in Z(B)}`.
///
/// `A` is cyclic, so `Z(A) ∩ K = K`. Sorted.
pub fn center(w: &TwoLevelWreath, limit: usize) -> Result<Vec<WreathPair>> {
    let kernel = action_kernel(w);
    let zb = w.passive().center();
    let orbits = w.orbit_count();
    let size =
        (kernel.len() as u128).saturating_mul((zb.len() as u128).saturating_pow(orbits as u32));
    if size > limit as u128 {
        return Err(Error::LimitExceeded { limit });
    }
    let mut out = Vec::with_capacity(size as usize);
    for &a in &kernel {
        let mut pick = vec![0usize; orbits];
        loop {
            let base = (0..w.set_size()).map(|i| zb[pick[i % orbits]]).collect();
            out.push(WreathPair::new(a, base));
            let mut j = 0;
            while j < orbits {
                pick[j] += 1;
                if pick[j] < zb.len() {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
            if j == orbits {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `Z(W)` by testing every element against every other.
pub fn center_oracle(w: &TwoLevelWreath, limit: usize) -> Result<Vec<WreathPair>> {
    let all = w.elements(limit)?;
    Ok(center_by_enumeration(w, &all))
}
