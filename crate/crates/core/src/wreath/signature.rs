use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::literal::Cursor;

/// Largest number of vertex labels a tableau may carry.
pub const MAX_LABELS: usize = 1 << 26;

/// Orders `(i1, ..., im)` of the cyclic factors of `C_i1 ≀ C_i2 ≀ ... ≀ C_im`,
/// active group first.
///
/// Level `l` of the truncated tree has `i1 * ... * il` vertices; the labels of
/// level `l` (for `l < m`) are cycle powers in `Z_{i(l+1)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Signature {
    orders: Vec<u32>,
    widths: Vec<usize>,
    offsets: Vec<usize>,
}

impl Signature {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidSignature(
                "at least one order is required".into(),
            ));
        }
        if let Some(p) = orders.iter().position(|&o| o == 0) {
            return Err(Error::InvalidSignature(format!(
                "order at position {} is zero",
                p + 1
            )));
        }
        let mut widths = Vec::with_capacity(orders.len() + 1);
        let mut offsets = Vec::with_capacity(orders.len() + 1);
        let mut width = 1usize;
        let mut offset = 0usize;
        for (l, &o) in orders.iter().enumerate() {
            widths.push(width);
            offsets.push(offset);
            offset = offset
                .checked_add(width)
                .filter(|&t| t <= MAX_LABELS)
                .ok_or_else(|| Error::InvalidSignature(format!("tree too large at level {l}")))?;
            width = width
                .checked_mul(o as usize)
                .ok_or_else(|| Error::InvalidSignature("level width overflows".into()))?;
        }
        widths.push(width);
        offsets.push(offset);
        Ok(Signature {
            orders,
            widths,
            offsets,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// Number of cyclic factors `m`.
    pub fn depth(&self) -> usize {
        self.orders.len()
    }

    /// Order `i_(l+1)` of the group labelling vertices at level `l` (0-based).
    pub fn order_at(&self, level: usize) -> u32 {
        self.orders[level]
    }

    /// Number of vertices at level `l`, `0 <= l <= m`.
    pub fn width(&self, level: usize) -> usize {
        self.widths[level]
    }

    pub(crate) fn offset(&self, level: usize) -> usize {
        self.offsets[level]
    }

    /// Total number of vertex labels in a tableau (levels `0..m`).
    pub fn label_count(&self) -> usize {
        self.offsets[self.orders.len()]
    }

    /// Number of leaves of the truncated tree.
    pub fn leaf_count(&self) -> usize {
        self.widths[self.orders.len()]
    }

    /// Signature of the subtree hanging below level `level`.
    pub fn tail(&self, level: usize) -> Result<Signature> {
        Signature::new(self.orders[level..].to_vec())
    }

    /// `|C_i1 ≀ ... ≀ C_im| = prod_k i_k^(i_1 ... i_(k-1))`.
    pub fn group_order(&self) -> BigUint {
        let mut total = BigUint::from(1u32);
        for (l, &o) in self.orders.iter().enumerate() {
            total *= BigUint::from(o).pow(self.widths[l] as u32);
        }
        total
    }

    /// Lexicographic index of the vertex addressed by `path`.
    pub fn vertex_index(&self, path: &[u32]) -> Result<usize> {
        if path.len() > self.depth() {
            return Err(Error::Shape(format!(
                "path of length {} is deeper than the tree",
                path.len()
            )));
        }
        let mut idx = 0usize;
        for (l, &x) in path.iter().enumerate() {
            let o = self.orders[l];
            if x >= o {
                return Err(Error::DigitOutOfRange {
                    position: l,
                    digit: x as u64,
                    order: o,
                });
            }
            idx = idx * o as usize + x as usize;
        }
        Ok(idx)
    }

    /// Inverse of [`Signature::vertex_index`].
    pub fn vertex_path(&self, level: usize, mut index: usize) -> Vec<u32> {
        let mut path = vec![0u32; level];
        for l in (0..level).rev() {
            let o = self.orders[l] as usize;
            path[l] = (index % o) as u32;
            index /= o;
        }
        path
    }

    pub fn parse(src: &str) -> Result<Self> {
        let mut cur = Cursor::new(src);
        let mut orders = Vec::new();
        loop {
            let start = cur.pos();
            let o = cur.uint()?;
            let o = u32::try_from(o).map_err(|_| Error::Parse {
                offset: start,
                expected: "order below 2^32".into(),
                found: o.to_string(),
            })?;
            orders.push(o);
            cur.skip_ws();
            if !(cur.eat('x') || cur.eat('X')) {
                break;
            }
        }
        cur.expect_end()
            .map_err(|_| cur.error("'x' or end of input"))?;
        Signature::new(orders)
    }
}

impl TryFrom<Vec<u32>> for Signature {
    type Error = Error;

    fn try_from(orders: Vec<u32>) -> Result<Self> {
        Signature::new(orders)
    }
}

impl From<Signature> for Vec<u32> {
    fn from(sig: Signature) -> Self {
        sig.orders
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Signature::parse(s)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}
