//! Small generating sets for iterated cyclic wreath products.
//!
//! `β0` is the rooted automorphism rotating the root's children once. `β1`
//! is directed along a spine ray `x1 x2 x3 ...`: its vertex permutations on
//! the spine are trivial and, at each level `l = 1..m-1`, it rotates the
//! children of one off-spine vertex adjacent to the spine. Its wreath
//! recursion is `β1 = (π2 at the off-spine child, β2 at the spine child)`.
//!
//! For pairwise coprime orders the canonical single-label generators
//! `σ1, ..., σm` are recovered from `β0, β1` by lcm-powers:
//! `σk = (β_(k-1)^lcm_k)^(lcm_k^-1 mod i_k)` and `β_k = σk^-1 β_(k-1)`.

use std::sync::Arc;

use num_integer::Integer;

use super::element::{closure, TreeElement};
use super::signature::Signature;
use crate::error::{Error, Result};

/// The ray along which a directed generator lives, with the choice of
/// off-spine vertex at each level.
///
/// `ray[l-1]` is the spine digit `x_l` and `branch[l-1]` the digit of the
/// labelled sibling at level `l`, for `l = 1..m-1`. The labelled vertex at
/// level `l` is `x1 ... x(l-1) branch_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinePath {
    ray: Vec<u32>,
    branch: Vec<u32>,
}

impl SpinePath {
    /// Spine `1 1 1 ...` with labels on the `0` child at each level.
    ///
    /// The nonzero label at level `k` then sits after
    /// `sum_{j=2..k} prod_{t=j..k} i_t` zero coordinates of that level
    /// (`i2` zeros at level 2, `i2 i3 + i3` at level 3, ...).
    pub fn standard(sig: &Signature) -> Result<Self> {
        let len = sig.depth().saturating_sub(1);
        SpinePath::new(sig, vec![1; len], vec![0; len])
    }

    pub fn new(sig: &Signature, ray: Vec<u32>, branch: Vec<u32>) -> Result<Self> {
        if sig.depth() < 2 {
            return Err(Error::InvalidSpine(
                "a directed automorphism needs at least two levels".into(),
            ));
        }
        let len = sig.depth() - 1;
        if ray.len() != len || branch.len() != len {
            return Err(Error::InvalidSpine(format!(
                "spine needs {len} ray digits and {len} branch digits, got {} and {}",
                ray.len(),
                branch.len()
            )));
        }
        for l in 0..len {
            let o = sig.order_at(l);
            if ray[l] >= o || branch[l] >= o {
                return Err(Error::InvalidSpine(format!(
                    "digit out of range [0, {o}) at level {}",
                    l + 1
                )));
            }
            if ray[l] == branch[l] {
                return Err(Error::InvalidSpine(format!(
                    "labelled vertex at level {} lies on the spine",
                    l + 1
                )));
            }
        }
        Ok(SpinePath { ray, branch })
    }

    /// Spine `ray` with the labelled sibling one step before the spine child.
    pub fn along(sig: &Signature, ray: Vec<u32>) -> Result<Self> {
        let branch = ray
            .iter()
            .enumerate()
            .map(|(l, &x)| {
                let o = sig.order_at(l);
                (x + o - 1) % o.max(1)
            })
            .collect();
        SpinePath::new(sig, ray, branch)
    }

    pub fn ray(&self) -> &[u32] {
        &self.ray
    }

    /// Vertex indices of the spine at levels `1..m-1`.
    pub fn vertices(&self, sig: &Signature) -> Vec<usize> {
        (1..=self.ray.len())
            .map(|l| sig.vertex_index(&self.ray[..l]).expect("validated"))
            .collect()
    }

    /// Vertex indices of the labelled off-spine vertices at levels `1..m-1`.
    pub fn labelled_vertices(&self, sig: &Signature) -> Vec<usize> {
        (1..=self.branch.len())
            .map(|l| {
                let mut path = self.ray[..l - 1].to_vec();
                path.push(self.branch[l - 1]);
                sig.vertex_index(&path).expect("validated")
            })
            .collect()
    }
}

/// `β0`: root label 1, everything else trivial.
pub fn rooted_generator(sig: &Arc<Signature>) -> TreeElement {
    let value = if sig.order_at(0) > 1 { 1 } else { 0 };
    TreeElement::single_label(sig, 0, 0, value).expect("root exists")
}

/// `β1` directed along `spine`.
pub fn directed_generator(sig: &Arc<Signature>, spine: &SpinePath) -> Result<TreeElement> {
    if sig.depth() < 2 {
        return Err(Error::InvalidSpine(
            "a directed automorphism needs at least two levels".into(),
        ));
    }
    let mut levels: Vec<Vec<u64>> = (0..sig.depth()).map(|l| vec![0; sig.width(l)]).collect();
    for (i, v) in spine.labelled_vertices(sig).into_iter().enumerate() {
        let level = i + 1;
        levels[level][v] = if sig.order_at(level) > 1 { 1 } else { 0 };
    }
    TreeElement::from_levels(sig, levels)
}

/// `β1` along the standard spine.
pub fn standard_directed_generator(sig: &Arc<Signature>) -> Result<TreeElement> {
    directed_generator(sig, &SpinePath::standard(sig)?)
}

/// `lcm` of all orders except the `k`-th (1-based).
pub fn lcm_except(sig: &Signature, k: usize) -> Result<u64> {
    if k == 0 || k > sig.depth() {
        return Err(Error::Shape(format!(
            "index {k} outside 1..={}",
            sig.depth()
        )));
    }
    Ok(sig
        .orders()
        .iter()
        .enumerate()
        .filter(|&(j, _)| j + 1 != k)
        .fold(1u64, |acc, (_, &o)| acc.lcm(&(o as u64))))
}

fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let ext = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(m as i128) as u64)
}

/// The canonical set `σ1, ..., σm` extracted from `β0, β1` together with the
/// spine states `β1, ..., β(m-1)` visited on the way.
#[derive(Clone, Debug)]
pub struct CanonicalExtraction {
    pub sigmas: Vec<TreeElement>,
    /// `states[j]` is `β_(j+1)` embedded in the whole tree (`states[0] = β1`).
    pub states: Vec<TreeElement>,
}

/// Extracts the canonical generators along `spine`. Fails with
/// [`Error::NotCoprime`] when some `lcm_k` has no inverse modulo `i_k`.
pub fn canonical_extraction(
    sig: &Arc<Signature>,
    spine: Option<&SpinePath>,
) -> Result<CanonicalExtraction> {
    let m = sig.depth();
    let mut sigmas = vec![rooted_generator(sig)];
    let mut states = Vec::new();
    if m == 1 {
        return Ok(CanonicalExtraction { sigmas, states });
    }
    let spine = match spine {
        Some(s) => s.clone(),
        None => SpinePath::standard(sig)?,
    };
    let mut state = directed_generator(sig, &spine)?;
    for k in 2..=m {
        let lcm = lcm_except(sig, k)?;
        let order = sig.order_at(k - 1) as u64;
        let inv = inverse_mod(lcm, order).ok_or(Error::NotCoprime {
            position: k,
            order,
            lcm,
        })?;
        let sigma = state.pow(lcm as i64).pow(inv as i64);
        let next = sigma.inv().mul_unchecked(&state);
        states.push(state);
        sigmas.push(sigma);
        state = next;
    }
    Ok(CanonicalExtraction { sigmas, states })
}

/// `σ1, ..., σm` along the standard spine.
pub fn canonical_generators(sig: &Arc<Signature>) -> Result<Vec<TreeElement>> {
    canonical_extraction(sig, None).map(|c| c.sigmas)
}

/// How the next spine state is peeled off the previous one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateRecursion {
    /// `β_k = σ_k^-1 β_(k-1)`.
    Quotient,
    /// `β_k' = β_(k-1)^(i_k)`, which kills the off-spine label.
    Power,
}

/// The spine states `β1, β2, ..., β(m-1)`, each embedded in the whole tree.
pub fn spine_states(
    sig: &Arc<Signature>,
    spine: &SpinePath,
    recursion: StateRecursion,
) -> Result<Vec<TreeElement>> {
    match recursion {
        StateRecursion::Quotient => canonical_extraction(sig, Some(spine)).map(|c| c.states),
        StateRecursion::Power => {
            let mut state = directed_generator(sig, spine)?;
            let mut out = Vec::new();
            for k in 2..=sig.depth() {
                let next = state.pow(sig.order_at(k - 1) as i64);
                out.push(state);
                state = next;
            }
            Ok(out)
        }
    }
}

/// Whether `gens` generate all of `C_i1 ≀ ... ≀ C_im`.
pub fn verify_generation(sig: &Arc<Signature>, gens: &[TreeElement], limit: usize) -> Result<bool> {
    let size = closure(sig, gens, limit)?.len();
    Ok(num_bigint::BigUint::from(size) == sig.group_order())
}

/// An element of a direct product of two wreath products, multiplied
/// componentwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductElement {
    pub left: TreeElement,
    pub right: TreeElement,
}

impl std::fmt::Display for ProductElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.left, self.right)
    }
}

/// Direct product `G_left × G_right` of two wreath products.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub left: Arc<Signature>,
    pub right: Arc<Signature>,
}

impl crate::group::Group for DirectProduct {
    type Elem = ProductElement;

    fn identity(&self) -> ProductElement {
        ProductElement {
            left: TreeElement::identity(&self.left),
            right: TreeElement::identity(&self.right),
        }
    }

    fn mul(&self, a: &ProductElement, b: &ProductElement) -> ProductElement {
        ProductElement {
            left: a.left.mul_unchecked(&b.left),
            right: a.right.mul_unchecked(&b.right),
        }
    }

    fn inv(&self, a: &ProductElement) -> ProductElement {
        ProductElement {
            left: a.left.inv(),
            right: a.right.inv(),
        }
    }
}

impl DirectProduct {
    pub fn order(&self) -> num_bigint::BigUint {
        self.left.group_order() * self.right.group_order()
    }
}

/// Which coprimality pattern justified a two-generator set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `(β0, α0)` and `(β1, α1)`.
    Straight,
    /// `(β0, α1)` and `(β1, α0)`.
    Crossed,
}

/// `β0` and the directed generator of a factor; for a single cyclic factor
/// the directed generator is the identity.
fn factor_generators(sig: &Arc<Signature>) -> Result<(TreeElement, TreeElement)> {
    let rooted = rooted_generator(sig);
    let directed = if sig.depth() >= 2 {
        standard_directed_generator(sig)?
    } else {
        TreeElement::identity(sig)
    };
    Ok((rooted, directed))
}

fn check_pairwise_coprime(sig: &Signature) -> Result<()> {
    for k in 1..=sig.depth() {
        let lcm = lcm_except(sig, k)?;
        let order = sig.order_at(k - 1) as u64;
        if order.gcd(&lcm) != 1 {
            return Err(Error::NotCoprime {
                position: k,
                order,
                lcm,
            });
        }
    }
    Ok(())
}

/// Two generators for `(C_i1 ≀ ... ≀ C_in) × (C_k1 ≀ ... ≀ C_km)`.
///
/// With `β0, β1` the generators of the left factor and `α0, α1` those of the
/// right, the pair is `((β0, α0), (β1, α1))` when `|α0|, |β0|` and
/// `|α1|, |β1|` are coprime, otherwise `((β0, α1), (β1, α0))` when the
/// crossed orders are coprime. Each factor must have pairwise coprime orders.
pub fn two_generator_direct_product(
    left: &Arc<Signature>,
    right: &Arc<Signature>,
) -> Result<(ProductElement, ProductElement, Pairing)> {
    check_pairwise_coprime(left)?;
    check_pairwise_coprime(right)?;
    let (beta0, beta1) = factor_generators(left)?;
    let (alpha0, alpha1) = factor_generators(right)?;
    let (b0, b1, a0, a1) = (beta0.order(), beta1.order(), alpha0.order(), alpha1.order());
    if a0.gcd(&b0) == 1 && a1.gcd(&b1) == 1 {
        Ok((
            ProductElement {
                left: beta0,
                right: alpha0,
            },
            ProductElement {
                left: beta1,
                right: alpha1,
            },
            Pairing::Straight,
        ))
    } else if a0.gcd(&b1) == 1 && a1.gcd(&b0) == 1 {
        Ok((
            ProductElement {
                left: beta0,
                right: alpha1,
            },
            ProductElement {
                left: beta1,
                right: alpha0,
            },
            Pairing::Crossed,
        ))
    } else {
        Err(Error::Hypothesis(format!(
            "generator orders |β0|={b0}, |β1|={b1}, |α0|={a0}, |α1|={a1} admit no coprime pairing"
        )))
    }
}
