//! Generic finite-group plumbing: breadth-first subgroup closure and
//! generating-set searches over any multiplication law.

use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Default cap on the number of elements a closure may enumerate.
pub const DEFAULT_LIMIT: usize = 1_000_000;

/// A group law on a set of value-typed elements.
pub trait Group {
    type Elem: Clone + Eq + Hash + Ord;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `[a, b] = a b a^-1 b^-1`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ab_ai = self.mul(&ab, &self.inv(a));
        self.mul(&ab_ai, &self.inv(b))
    }
}

/// Subgroup generated by `gens`, sorted by the element ordering.
///
/// Breadth-first: every discovered element is right-multiplied by each
/// generator and each generator inverse. Fails with
/// [`Error::LimitExceeded`] as soon as more than `limit` elements are found.
pub fn closure<G: Group>(group: &G, gens: &[G::Elem], limit: usize) -> Result<Vec<G::Elem>> {
    let mut steps: Vec<G::Elem> = Vec::with_capacity(gens.len() * 2);
    for g in gens {
        for s in [g.clone(), group.inv(g)] {
            if !steps.contains(&s) {
                steps.push(s);
            }
        }
    }
    let id = group.identity();
    let mut seen: HashSet<G::Elem> = HashSet::new();
    let mut order: Vec<G::Elem> = Vec::new();
    seen.insert(id.clone());
    order.push(id);
    let mut head = 0;
    while head < order.len() {
        let x = order[head].clone();
        head += 1;
        for s in &steps {
            let y = group.mul(&x, s);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(Error::LimitExceeded { limit });
                }
                seen.insert(y.clone());
                order.push(y);
            }
        }
    }
    order.sort();
    Ok(order)
}

/// Size of the subgroup generated by `gens`.
pub fn closure_size<G: Group>(group: &G, gens: &[G::Elem], limit: usize) -> Result<usize> {
    closure(group, gens, limit).map(|c| c.len())
}

/// Least `k >= 1` with `g^k = e`, by direct iteration.
pub fn order_by_iteration<G: Group>(group: &G, g: &G::Elem, limit: usize) -> Result<usize> {
    let id = group.identity();
    let mut acc = g.clone();
    let mut k = 1;
    while acc != id {
        if k >= limit {
            return Err(Error::LimitExceeded { limit });
        }
        acc = group.mul(&acc, g);
        k += 1;
    }
    Ok(k)
}

/// Smallest number of elements of `subgroup` that generate all of it,
/// found by exhaustive search over subsets of size `1, 2, ..., max_size`.
///
/// `subgroup` must be closed (as returned by [`closure`]). Returns `None` if
/// no subset of size at most `max_size` generates it.
pub fn minimal_generating_size<G: Group>(
    group: &G,
    subgroup: &[G::Elem],
    max_size: usize,
) -> Result<Option<usize>> {
    let target = subgroup.len();
    if target <= 1 {
        return Ok(Some(0));
    }
    let id = group.identity();
    let candidates: Vec<&G::Elem> = subgroup.iter().filter(|x| **x != id).collect();
    for k in 1..=max_size.min(candidates.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let gens: Vec<G::Elem> = idx.iter().map(|&i| candidates[i].clone()).collect();
            if closure_size(group, &gens, target)? == target {
                return Ok(Some(k));
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `idx` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Greedy generating set: repeatedly add the element that enlarges the
/// generated subgroup the most. Gives an upper bound on `d(subgroup)`.
pub fn greedy_generating_set<G: Group>(group: &G, subgroup: &[G::Elem]) -> Result<Vec<G::Elem>> {
    let target = subgroup.len();
    let mut gens: Vec<G::Elem> = Vec::new();
    let mut current = 1usize;
    while current < target {
        let mut best: Option<(usize, &G::Elem)> = None;
        for cand in subgroup {
            let mut trial = gens.clone();
            trial.push(cand.clone());
            let size = closure_size(group, &trial, target)?;
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, cand));
            }
        }
        let (size, cand) = best.expect("subgroup is non-empty");
        gens.push(cand.clone());
        current = size;
    }
    Ok(gens)
}

/// The subgroup generated by every commutator `[x, y]` with `x, y` ranging
/// over `elements` (which should be the whole group).
pub fn commutator_subgroup<G: Group>(
    group: &G,
    elements: &[G::Elem],
    limit: usize,
) -> Result<Vec<G::Elem>> {
    let mut comms: HashSet<G::Elem> = HashSet::new();
    for x in elements {
        for y in elements {
            comms.insert(group.commutator(x, y));
        }
    }
    let mut gens: Vec<G::Elem> = comms.into_iter().collect();
    gens.sort();
    closure(group, &gens, limit)
}

/// Elements of `elements` that commute with every element of `elements`.
pub fn center_by_enumeration<G: Group>(group: &G, elements: &[G::Elem]) -> Vec<G::Elem> {
    elements
        .iter()
        .filter(|x| elements.iter().all(|y| group.mul(x, y) == group.mul(y, x)))
        .cloned()
        .collect()
}
