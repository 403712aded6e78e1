use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::signature::Signature;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::literal::Cursor;

/// A leaf `x1 x2 ... xm` of the truncated tree, `x_l` in `[0, i_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LeafWord {
    digits: Vec<u32>,
}

impl LeafWord {
    pub fn new(sig: &Signature, digits: Vec<u32>) -> Result<Self> {
        if digits.len() != sig.depth() {
            return Err(Error::Shape(format!(
                "leaf word has {} digits, signature {sig} needs {}",
                digits.len(),
                sig.depth()
            )));
        }
        for (position, (&d, &o)) in digits.iter().zip(sig.orders()).enumerate() {
            if d >= o {
                return Err(Error::DigitOutOfRange {
                    position,
                    digit: d as u64,
                    order: o,
                });
            }
        }
        Ok(LeafWord { digits })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Every leaf of the tree in lexicographic order.
    pub fn all(sig: &Signature) -> impl Iterator<Item = LeafWord> + '_ {
        (0..sig.leaf_count()).map(move |i| LeafWord {
            digits: sig.vertex_path(sig.depth(), i),
        })
    }

    pub fn parse(sig: &Signature, src: &str) -> Result<Self> {
        let mut cur = Cursor::new(src);
        let raw = cur.int_list(&[], false)?;
        cur.expect_end()?;
        let digits = raw
            .into_iter()
            .enumerate()
            .map(|(position, d)| {
                u32::try_from(d).map_err(|_| Error::DigitOutOfRange {
                    position,
                    digit: d as u64,
                    order: sig.orders().get(position).copied().unwrap_or(0),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LeafWord::new(sig, digits)
    }
}

impl fmt::Display for LeafWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// An element of `C_i1 ≀ ... ≀ C_im` as a Kaloujnine tableau: one cycle power
/// per vertex of levels `0..m`, stored level after level with vertices of a
/// level in lexicographic path order.
///
/// The vertex label at `v` (level `l`) rotates the children of `v` by that
/// many steps in `Z_{i(l+1)}`. Products follow the wreath recursion
/// `(g*h)|_v = g|_v * h|_{g(v)}`, so on leaves `g*h` acts as `g` then `h`.
#[derive(Clone, Debug)]
pub struct TreeElement {
    sig: Arc<Signature>,
    labels: Box<[u32]>,
}

impl PartialEq for TreeElement {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && (Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig)
    }
}

impl Eq for TreeElement {}

impl Hash for TreeElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl PartialOrd for TreeElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the flat label vector, i.e. on [`TreeElement::canonical_bytes`].
impl Ord for TreeElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.labels
            .cmp(&other.labels)
            .then_with(|| self.sig.cmp(&other.sig))
    }
}

impl TreeElement {
    pub fn identity(sig: &Arc<Signature>) -> Self {
        TreeElement {
            sig: Arc::clone(sig),
            labels: vec![0; sig.label_count()].into_boxed_slice(),
        }
    }

    /// Builds an element from per-level label vectors, validating widths and ranges.
    pub fn from_levels(sig: &Arc<Signature>, levels: Vec<Vec<u64>>) -> Result<Self> {
        if levels.len() != sig.depth() {
            return Err(Error::Shape(format!(
                "tableau has {} levels, signature {sig} needs {}",
                levels.len(),
                sig.depth()
            )));
        }
        let mut labels = Vec::with_capacity(sig.label_count());
        for (level, row) in levels.into_iter().enumerate() {
            if row.len() != sig.width(level) {
                return Err(Error::LevelWidth {
                    level,
                    expected: sig.width(level),
                    found: row.len(),
                });
            }
            let order = sig.order_at(level);
            for (vertex, value) in row.into_iter().enumerate() {
                if value >= order as u64 {
                    return Err(Error::LabelOutOfRange {
                        level,
                        vertex,
                        value,
                        order,
                    });
                }
                labels.push(value as u32);
            }
        }
        Ok(TreeElement {
            sig: Arc::clone(sig),
            labels: labels.into_boxed_slice(),
        })
    }

    /// Element with a single nonzero label `value` at `(level, vertex)`.
    pub fn single_label(
        sig: &Arc<Signature>,
        level: usize,
        vertex: usize,
        value: u32,
    ) -> Result<Self> {
        if level >= sig.depth() || vertex >= sig.width(level) {
            return Err(Error::Shape(format!(
                "no vertex {vertex} at level {level} in {sig}"
            )));
        }
        let order = sig.order_at(level);
        if value >= order {
            return Err(Error::LabelOutOfRange {
                level,
                vertex,
                value: value as u64,
                order,
            });
        }
        let mut g = TreeElement::identity(sig);
        g.labels[sig.offset(level) + vertex] = value;
        Ok(g)
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn signature_arc(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn level(&self, level: usize) -> &[u32] {
        let start = self.sig.offset(level);
        &self.labels[start..start + self.sig.width(level)]
    }

    pub fn label(&self, level: usize, vertex: usize) -> u32 {
        self.labels[self.sig.offset(level) + vertex]
    }

    pub fn levels(&self) -> Vec<Vec<u32>> {
        (0..self.sig.depth())
            .map(|l| self.level(l).to_vec())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.labels.iter().all(|&x| x == 0)
    }

    /// Positions `(level, vertex, label)` of the nonzero labels.
    pub fn support(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for l in 0..self.sig.depth() {
            for (v, &x) in self.level(l).iter().enumerate() {
                if x != 0 {
                    out.push((l, v, x));
                }
            }
        }
        out
    }

    /// Labels as big-endian `u32` words; byte order agrees with [`Ord`].
    pub fn canonical_bytes(&self) -> Vec<u8> {
        self.labels.iter().flat_map(|x| x.to_be_bytes()).collect()
    }

    fn check_same(&self, other: &TreeElement) -> Result<()> {
        if Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.to_string(),
                right: other.sig.to_string(),
            })
        }
    }

    /// Calls `f(level, vertex, image)` for every non-leaf vertex, where
    /// `image` is the index of the vertex `self` maps it to.
    fn for_each_vertex_image(&self, mut f: impl FnMut(usize, usize, usize)) {
        let sig = &*self.sig;
        let mut cur: Vec<usize> = vec![0];
        let mut next: Vec<usize> = Vec::new();
        for l in 0..sig.depth() {
            let order = sig.order_at(l) as usize;
            let off = sig.offset(l);
            let last = l + 1 == sig.depth();
            if !last {
                next.clear();
                next.resize(sig.width(l + 1), 0);
            }
            for (v, &img) in cur.iter().enumerate() {
                f(l, v, img);
                if !last {
                    let rot = self.labels[off + v] as usize;
                    for x in 0..order {
                        next[v * order + x] = img * order + (x + rot) % order;
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
    }

    /// Product `self * other`: act with `self` first, then `other`.
    pub fn mul(&self, other: &TreeElement) -> Result<TreeElement> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &TreeElement) -> TreeElement {
        let sig = &*self.sig;
        let mut labels = vec![0u32; self.labels.len()];
        self.for_each_vertex_image(|l, v, img| {
            let off = sig.offset(l);
            let order = sig.order_at(l) as u64;
            labels[off + v] =
                ((self.labels[off + v] as u64 + other.labels[off + img] as u64) % order) as u32;
        });
        TreeElement {
            sig: Arc::clone(&self.sig),
            labels: labels.into_boxed_slice(),
        }
    }

    pub fn inv(&self) -> TreeElement {
        let sig = &*self.sig;
        let mut labels = vec![0u32; self.labels.len()];
        self.for_each_vertex_image(|l, v, img| {
            let off = sig.offset(l);
            let order = sig.order_at(l);
            labels[off + img] = (order - self.labels[off + v]) % order;
        });
        TreeElement {
            sig: Arc::clone(&self.sig),
            labels: labels.into_boxed_slice(),
        }
    }

    /// `self^k` by binary exponentiation; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> TreeElement {
        let mut base = if k < 0 { self.inv() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = TreeElement::identity(&self.sig);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Image of a leaf: digit `l` moves by the label of the level-`(l-1)`
    /// vertex addressed by the original prefix `x1 ... x(l-1)`.
    pub fn act_on_leaf(&self, leaf: &LeafWord) -> Result<LeafWord> {
        let leaf = LeafWord::new(&self.sig, leaf.digits.clone())?;
        let sig = &*self.sig;
        let mut vertex = 0usize;
        let mut out = Vec::with_capacity(leaf.digits.len());
        for (l, &x) in leaf.digits.iter().enumerate() {
            let order = sig.order_at(l);
            let rot = self.labels[sig.offset(l) + vertex];
            out.push(((x as u64 + rot as u64) % order as u64) as u32);
            vertex = vertex * order as usize + x as usize;
        }
        Ok(LeafWord { digits: out })
    }

    /// Section `self|_v` at a vertex `v` of `level`, an element of the
    /// wreath product of the remaining factors. Requires `level < m`.
    pub fn section(&self, level: usize, vertex: usize) -> Result<TreeElement> {
        let sig = &*self.sig;
        if level >= sig.depth() || vertex >= sig.width(level) {
            return Err(Error::Shape(format!(
                "no vertex {vertex} at level {level} in {sig}"
            )));
        }
        let sub = Arc::new(sig.tail(level)?);
        let mut labels = Vec::with_capacity(sub.label_count());
        for l in level..sig.depth() {
            let span = sig.width(l) / sig.width(level);
            let start = sig.offset(l) + vertex * span;
            labels.extend_from_slice(&self.labels[start..start + span]);
        }
        Ok(TreeElement {
            sig: sub,
            labels: labels.into_boxed_slice(),
        })
    }

    /// Order of the element, computed recursively from root cycles: for a
    /// root rotation of cycle length `c`, `ord(g) = c * lcm` of the orders of
    /// the products of sections along each cycle.
    pub fn order(&self) -> u64 {
        let sig = &*self.sig;
        let i = sig.order_at(0) as u64;
        let a = self.labels[0] as u64;
        let g = a.gcd(&i);
        let cycle = i / g;
        if sig.depth() == 1 {
            return cycle;
        }
        let sections: Vec<TreeElement> = (0..i as usize)
            .map(|c| self.section(1, c).expect("child exists"))
            .collect();
        let mut inner = 1u64;
        for start in 0..g {
            let mut prod = sections[start as usize].clone();
            let mut c = start;
            for _ in 1..cycle {
                c = (c + a) % i;
                prod = prod.mul_unchecked(&sections[c as usize]);
            }
            inner = inner.lcm(&prod.order());
        }
        cycle * inner
    }

    pub fn parse(sig: &Arc<Signature>, src: &str) -> Result<Self> {
        let mut cur = Cursor::new(src);
        cur.expect('[')?;
        let mut levels: Vec<Vec<u64>> = Vec::new();
        loop {
            let level = levels.len();
            let start = cur.pos();
            let row = cur.int_list(&[';', ']'], false)?;
            let row = row
                .into_iter()
                .map(|x| {
                    u64::try_from(x).map_err(|_| Error::Parse {
                        offset: start,
                        expected: "non-negative label".into(),
                        found: x.to_string(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if level < sig.depth() && row.len() != sig.width(level) {
                return Err(Error::LevelWidth {
                    level,
                    expected: sig.width(level),
                    found: row.len(),
                });
            }
            levels.push(row);
            if cur.eat(';') {
                continue;
            }
            cur.expect(']').map_err(|_| cur.error("',', ';' or ']'"))?;
            break;
        }
        cur.expect_end()?;
        TreeElement::from_levels(sig, levels)
    }

    /// Parses the JSON form, an array of per-level label arrays.
    pub fn from_json(sig: &Arc<Signature>, json: &str) -> Result<Self> {
        let levels: Vec<Vec<u64>> = serde_json::from_str(json).map_err(|e| Error::Parse {
            offset: 0,
            expected: "JSON array of label arrays".into(),
            found: e.to_string(),
        })?;
        TreeElement::from_levels(sig, levels)
    }

    /// Graphviz rendering of the portrait: only vertices with nonzero labels
    /// and their ancestors are drawn.
    pub fn to_dot(&self) -> String {
        let sig = &*self.sig;
        let mut keep = vec![vec![false; 0]; sig.depth()];
        for (l, row) in keep.iter_mut().enumerate() {
            *row = vec![false; sig.width(l)];
        }
        for (l, v, _) in self.support() {
            let mut idx = v;
            for lev in (0..=l).rev() {
                keep[lev][idx] = true;
                if lev > 0 {
                    idx /= sig.order_at(lev - 1) as usize;
                }
            }
        }
        let mut out = String::from("digraph portrait {\n  node [shape=circle];\n");
        for (l, row) in keep.iter().enumerate() {
            for (v, _) in row.iter().enumerate().filter(|(_, k)| **k) {
                let label = self.label(l, v);
                out.push_str(&format!("  \"{l}_{v}\" [label=\"{label}\"];\n"));
                if l > 0 {
                    let parent = v / sig.order_at(l - 1) as usize;
                    out.push_str(&format!("  \"{}_{parent}\" -> \"{l}_{v}\";\n", l - 1));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for TreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let levels: Vec<String> = (0..self.sig.depth())
            .map(|l| {
                self.level(l)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "[{}]", levels.join("; "))
    }
}

impl Serialize for TreeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.sig.depth()))?;
        for l in 0..self.sig.depth() {
            seq.serialize_element(self.level(l))?;
        }
        seq.end()
    }
}

/// The group `C_i1 ≀ ... ≀ C_im` itself, for the generic algorithms in
/// [`crate::group`].
#[derive(Clone, Debug)]
pub struct WreathGroup {
    sig: Arc<Signature>,
}

impl WreathGroup {
    pub fn new(sig: Signature) -> Self {
        WreathGroup { sig: Arc::new(sig) }
    }

    pub fn from_arc(sig: Arc<Signature>) -> Self {
        WreathGroup { sig }
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }
}

impl Group for WreathGroup {
    type Elem = TreeElement;

    fn identity(&self) -> TreeElement {
        TreeElement::identity(&self.sig)
    }

    fn mul(&self, a: &TreeElement, b: &TreeElement) -> TreeElement {
        a.mul_unchecked(b)
    }

    fn inv(&self, a: &TreeElement) -> TreeElement {
        a.inv()
    }
}

/// Subgroup generated by tableaux sharing one signature.
pub fn closure(
    sig: &Arc<Signature>,
    gens: &[TreeElement],
    limit: usize,
) -> Result<Vec<TreeElement>> {
    for g in gens {
        if **g.signature_arc() != **sig {
            return Err(Error::SignatureMismatch {
                left: sig.to_string(),
                right: g.signature().to_string(),
            });
        }
    }
    crate::group::closure(&WreathGroup::from_arc(Arc::clone(sig)), gens, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure as generic_closure, order_by_iteration};

    fn sig(o: &[u32]) -> Arc<Signature> {
        Arc::new(Signature::new(o.to_vec()).unwrap())
    }

    fn el(s: &Arc<Signature>, lit: &str) -> TreeElement {
        TreeElement::parse(s, lit).unwrap()
    }

    /// Leaf permutation of `g` as an index table, computed by `act_on_leaf`.
    fn leaf_perm(g: &TreeElement) -> Vec<usize> {
        let s = g.signature();
        LeafWord::all(s)
            .map(|w| {
                let img = g.act_on_leaf(&w).unwrap();
                s.vertex_index(img.digits()).unwrap()
            })
            .collect()
    }

    #[test]
    fn identity_labels() {
        let s = sig(&[2, 3]);
        let e = TreeElement::identity(&s);
        assert_eq!(e.levels(), vec![vec![0], vec![0, 0]]);
        assert_eq!(e.to_string(), "[0; 0,0]");
        assert_eq!(TreeElement::identity(&sig(&[2])).to_string(), "[0]");
        for w in LeafWord::all(&s) {
            assert_eq!(e.act_on_leaf(&w).unwrap(), w);
        }
    }

    #[test]
    fn cyclic_order_two() {
        let s = sig(&[2]);
        let one = el(&s, "[1]");
        assert_eq!(one.mul(&one).unwrap().to_string(), "[0]");
        let s3 = sig(&[3]);
        assert_eq!(el(&s3, "[1]").inv().to_string(), "[2]");
    }

    #[test]
    fn product_matches_composed_leaf_permutations() {
        let s = sig(&[2, 2]);
        let g = el(&s, "[1; 0,0]");
        let h = el(&s, "[0; 1,0]");
        let gh = g.mul(&h).unwrap();
        assert_eq!(gh.level(0), &[1]);
        // independently: apply g's table, then h's table
        let pg = leaf_perm(&g);
        let ph = leaf_perm(&h);
        let composed: Vec<usize> = pg.iter().map(|&i| ph[i]).collect();
        assert_eq!(leaf_perm(&gh), composed);
        // section of g*h at child 0 is g|_0 * h|_{g(0)} = h|_1 = 0,
        // at child 1 it is h|_0 = 1
        assert_eq!(gh.level(1), &[0, 1]);
    }

    #[test]
    fn root_swap_moves_first_digit_only() {
        let s = sig(&[2, 2]);
        let g = el(&s, "[1; 0,0]");
        let w = LeafWord::new(&s, vec![0, 1]).unwrap();
        assert_eq!(g.act_on_leaf(&w).unwrap().digits(), &[1, 1]);
        let bad = LeafWord::new(&s, vec![0, 2]);
        assert!(matches!(
            bad,
            Err(Error::DigitOutOfRange { position: 1, .. })
        ));
    }

    #[test]
    fn pow_and_order() {
        let s = sig(&[2, 3]);
        let beta1 = el(&s, "[0; 1,0]");
        assert_eq!(beta1.pow(3).levels(), vec![vec![0], vec![0, 0]]);
        assert_eq!(beta1.pow(1), beta1);
        assert_eq!(beta1.pow(0), TreeElement::identity(&s));
        assert_eq!(beta1.pow(-1), beta1.inv());
        assert_eq!(beta1.order(), 3);
        assert_eq!(el(&s, "[1; 0,0]").order(), 2);
        assert_eq!(TreeElement::identity(&s).order(), 1);
    }

    #[test]
    fn recursive_order_matches_iteration() {
        for o in [&[2u32, 2][..], &[2, 3], &[3, 2], &[2, 2, 2]] {
            let s = sig(o);
            let group = WreathGroup::from_arc(Arc::clone(&s));
            let all = generic_closure(
                &group,
                &[
                    TreeElement::single_label(&s, 0, 0, 1).unwrap(),
                    TreeElement::single_label(&s, 1, 0, 1).unwrap(),
                    TreeElement::single_label(&s, o.len() - 1, 0, 1).unwrap(),
                ],
                10_000,
            )
            .unwrap();
            let total: u64 = s.group_order().try_into().unwrap();
            assert_eq!(all.len() as u64, total);
            for g in &all {
                let k = order_by_iteration(&group, g, 10_000).unwrap() as u64;
                assert_eq!(g.order(), k, "{g}");
                assert_eq!(total % k, 0);
                assert!(g.pow(k as i64).is_identity());
            }
        }
    }

    #[test]
    fn leaf_action_is_faithful() {
        let s = sig(&[2, 3]);
        let group = WreathGroup::from_arc(Arc::clone(&s));
        let all = generic_closure(&group, &[el(&s, "[1; 0,0]"), el(&s, "[0; 1,0]")], 100).unwrap();
        let mut perms: Vec<Vec<usize>> = all.iter().map(leaf_perm).collect();
        for (g, p) in all.iter().zip(&perms) {
            let moved = p.iter().enumerate().any(|(i, &j)| i != j);
            assert_eq!(moved, !g.is_identity());
        }
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 18);
    }

    #[test]
    fn closure_counts() {
        let s = sig(&[2, 2]);
        let c = closure(&s, &[el(&s, "[1; 0,0]"), el(&s, "[0; 1,0]")], 100).unwrap();
        assert_eq!(c.len(), 8);
        let e = TreeElement::identity(&s);
        assert_eq!(closure(&s, std::slice::from_ref(&e), 10).unwrap(), vec![e]);
        let other = sig(&[2, 3]);
        assert!(matches!(
            closure(&s, &[TreeElement::identity(&other)], 10),
            Err(Error::SignatureMismatch { .. })
        ));
        assert!(matches!(
            closure(&s, &[el(&s, "[1; 0,0]"), el(&s, "[0; 1,0]")], 7),
            Err(Error::LimitExceeded { limit: 7 })
        ));
    }

    #[test]
    fn mismatched_signatures_do_not_multiply() {
        let a = TreeElement::identity(&sig(&[2, 3]));
        let b = TreeElement::identity(&sig(&[3, 2]));
        assert!(matches!(a.mul(&b), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn sections_follow_lexicographic_blocks() {
        let s = sig(&[2, 3, 5]);
        let g = TreeElement::single_label(&s, 2, 3, 4).unwrap();
        let sec = g.section(1, 1).unwrap();
        assert_eq!(sec.signature().orders(), &[3, 5]);
        assert_eq!(sec.levels(), vec![vec![0], vec![4, 0, 0]]);
        assert!(g.section(1, 0).unwrap().is_identity());
    }

    #[test]
    fn parse_errors() {
        let s = sig(&[2, 3]);
        assert!(matches!(
            TreeElement::parse(&s, "[1; 2]"),
            Err(Error::LevelWidth {
                level: 1,
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            TreeElement::parse(&s, "[2; 0,0]"),
            Err(Error::LabelOutOfRange { level: 0, .. })
        ));
        assert!(matches!(
            TreeElement::parse(&s, "[1; 0,0"),
            Err(Error::Parse { offset: 7, .. })
        ));
        assert!(matches!(
            TreeElement::parse(&s, "1; 0,0]"),
            Err(Error::Parse { offset: 0, .. })
        ));
    }

    #[test]
    fn json_form() {
        let s = sig(&[2, 3]);
        let g = el(&s, "[1; 2,0]");
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, "[[1],[2,0]]");
        assert_eq!(TreeElement::from_json(&s, &json).unwrap(), g);
    }

    #[test]
    fn canonical_bytes_order_matches_ord() {
        let s = sig(&[2, 3]);
        let a = el(&s, "[0; 2,0]");
        let b = el(&s, "[1; 0,0]");
        assert!(a < b);
        assert!(a.canonical_bytes() < b.canonical_bytes());
    }

    #[test]
    fn dot_lists_support() {
        let s = sig(&[2, 3]);
        let dot = el(&s, "[0; 0,2]").to_dot();
        assert!(dot.contains("\"1_1\" [label=\"2\"]"));
        assert!(dot.contains("\"0_0\" -> \"1_1\""));
    }
}
