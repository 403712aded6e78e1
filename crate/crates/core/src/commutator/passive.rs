use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{center_by_enumeration, closure, commutator_subgroup, Group};
use crate::wreath::{Signature, TreeElement, WreathGroup};

/// Largest passive group stored as a full multiplication table.
pub const MAX_TABLE_ORDER: usize = 1024;

/// The passive (base) group `B`, with elements encoded as integers in
/// `[0, |B|)` and `0` the identity.
#[derive(Clone, Debug)]
pub enum PassiveGroup {
    /// `Z_m` under addition.
    Cyclic(u32),
    /// A nested wreath product, enumerated once into a Cayley table.
    Table(Arc<TableGroup>),
}

/// A finite group held as its multiplication table. Element `k` is the
/// `k`-th element of the group in canonical order.
#[derive(Debug)]
pub struct TableGroup {
    signature: Signature,
    elements: Vec<TreeElement>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    in_commutator: Vec<bool>,
    in_center: Vec<bool>,
}

impl TableGroup {
    pub fn from_signature(sig: Signature) -> Result<Self> {
        let order = sig.group_order();
        if order > num_bigint::BigUint::from(MAX_TABLE_ORDER) {
            return Err(Error::LimitExceeded {
                limit: MAX_TABLE_ORDER,
            });
        }
        let group = WreathGroup::new(sig.clone());
        let s = group.signature().clone();
        // one unit label per level at the first vertex generates everything
        let gens: Vec<TreeElement> = (0..s.depth())
            .filter(|&l| s.order_at(l) > 1)
            .map(|l| TreeElement::single_label(&s, l, 0, 1))
            .collect::<Result<_>>()?;
        let elements = closure(&group, &gens, MAX_TABLE_ORDER)?;
        let n = elements.len();
        let index = |g: &TreeElement| elements.binary_search(g).expect("closed") as u32;
        let mut mul = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index(&group.mul(a, b));
            }
        }
        let inv = elements.iter().map(|a| index(&a.inv())).collect();
        let mut in_commutator = vec![false; n];
        for c in commutator_subgroup(&group, &elements, MAX_TABLE_ORDER)? {
            in_commutator[index(&c) as usize] = true;
        }
        let mut in_center = vec![false; n];
        for z in center_by_enumeration(&group, &elements) {
            in_center[index(&z) as usize] = true;
        }
        Ok(TableGroup {
            signature: sig,
            elements,
            mul,
            inv,
            in_commutator,
            in_center,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn element(&self, k: u32) -> &TreeElement {
        &self.elements[k as usize]
    }

    pub fn commutator_order(&self) -> usize {
        self.in_commutator.iter().filter(|&&b| b).count()
    }
}

impl PassiveGroup {
    pub fn cyclic(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Shape("passive order must be at least 1".into()));
        }
        Ok(PassiveGroup::Cyclic(m))
    }

    pub fn wreath(sig: Signature) -> Result<Self> {
        Ok(PassiveGroup::Table(Arc::new(TableGroup::from_signature(
            sig,
        )?)))
    }

    pub fn order(&self) -> u32 {
        match self {
            PassiveGroup::Cyclic(m) => *m,
            PassiveGroup::Table(t) => t.elements.len() as u32,
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match self {
            PassiveGroup::Cyclic(m) => ((a as u64 + b as u64) % *m as u64) as u32,
            PassiveGroup::Table(t) => t.mul[a as usize * t.elements.len() + b as usize],
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        match self {
            PassiveGroup::Cyclic(m) => (m - a) % m,
            PassiveGroup::Table(t) => t.inv[a as usize],
        }
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            PassiveGroup::Cyclic(_) => true,
            PassiveGroup::Table(t) => t.in_center.iter().all(|&b| b),
        }
    }

    /// Membership in `B'`; for a table group this was precomputed by
    /// enumerating all commutators.
    pub fn in_commutator(&self, a: u32) -> bool {
        match self {
            PassiveGroup::Cyclic(_) => a == 0,
            PassiveGroup::Table(t) => t.in_commutator[a as usize],
        }
    }

    pub fn center(&self) -> Vec<u32> {
        match self {
            PassiveGroup::Cyclic(m) => (0..*m).collect(),
            PassiveGroup::Table(t) => (0..t.elements.len() as u32)
                .filter(|&k| t.in_center[k as usize])
                .collect(),
        }
    }

    /// Cyclic factors whose product is `B / B'`: `[m]` for `Z_m`, and the
    /// orders `i_1, ..., i_m` for an iterated wreath product of cyclic groups.
    pub fn abelianization_factors(&self) -> Vec<u64> {
        match self {
            PassiveGroup::Cyclic(m) => vec![*m as u64],
            PassiveGroup::Table(t) => t.signature.orders().iter().map(|&o| o as u64).collect(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            PassiveGroup::Cyclic(m) => format!("Z{m}"),
            PassiveGroup::Table(t) => format!("wreath({})", t.signature),
        }
    }
}
