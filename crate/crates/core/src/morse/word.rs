use std::fmt;

use rand::Rng;
use serde::Serialize;

use super::element::{HElement, MorseGroup};
use super::phi::Variant;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::literal::Cursor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Rho,
    /// `τ_i`, 1-based.
    Tau(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Generator,
    pub exp: i64,
}

impl Letter {
    pub fn rho(exp: i64) -> Self {
        Letter {
            gen: Generator::Rho,
            exp,
        }
    }

    pub fn tau(i: usize, exp: i64) -> Self {
        Letter {
            gen: Generator::Tau(i),
            exp,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Generator::Rho => f.write_str("r")?,
            Generator::Tau(i) => write!(f, "t{i}")?,
        }
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// A word over `ρ, τ1, ..., τn` with nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HWord {
    letters: Vec<Letter>,
}

impl HWord {
    pub fn new(letters: Vec<Letter>, n: usize) -> Result<Self> {
        for (pos, l) in letters.iter().enumerate() {
            if l.exp == 0 {
                return Err(Error::Shape(format!("letter {pos} has exponent 0")));
            }
            if let Generator::Tau(i) = l.gen {
                if i == 0 || i > n {
                    return Err(Error::RankMismatch(format!("t{i} outside t1..t{n}")));
                }
            }
        }
        Ok(HWord { letters })
    }

    pub fn empty() -> Self {
        HWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &HWord) -> HWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        HWord { letters }
    }

    pub fn inverse(&self) -> HWord {
        HWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp,
                })
                .collect(),
        }
    }

    /// `c w c^-1`.
    pub fn conjugate(&self, c: &HWord) -> HWord {
        c.concat(self).concat(&c.inverse())
    }

    /// Sum of the exponents of `ρ`.
    pub fn rho_exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == Generator::Rho)
            .map(|l| l.exp)
            .sum()
    }

    /// Parses whitespace-separated letters `r`, `r^-3`, `t1`, `t2^5`.
    pub fn parse(src: &str, n: usize) -> Result<Self> {
        let mut cur = Cursor::new(src);
        let mut letters = Vec::new();
        while !cur.at_end() {
            let start = cur.pos();
            let gen = match cur.bump() {
                Some('r') => Generator::Rho,
                Some('t') => {
                    if !matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
                        return Err(cur.error("generator index"));
                    }
                    let at = cur.pos();
                    let i = cur.uint()? as usize;
                    if i == 0 || i > n {
                        return Err(Error::Parse {
                            offset: at,
                            expected: format!("index in 1..={n}"),
                            found: i.to_string(),
                        });
                    }
                    Generator::Tau(i)
                }
                _ => {
                    return Err(Error::Parse {
                        offset: start,
                        expected: "'r' or 't'".into(),
                        found: src[start..]
                            .chars()
                            .next()
                            .map_or("end of input".into(), |c| format!("'{c}'")),
                    })
                }
            };
            let mut exp = 1;
            if cur.peek() == Some('^') {
                cur.bump();
                if !matches!(cur.peek(), Some(c) if c == '-' || c == '+' || c.is_ascii_digit()) {
                    return Err(cur.error("exponent"));
                }
                let at = cur.pos();
                exp = cur.int()?;
                if exp == 0 {
                    return Err(Error::Parse {
                        offset: at,
                        expected: "nonzero exponent".into(),
                        found: "0".into(),
                    });
                }
            }
            if !matches!(cur.peek(), None | Some(' ' | '\t' | '\n' | '\r')) {
                return Err(cur.error("whitespace or end of word"));
            }
            letters.push(Letter { gen, exp });
        }
        Ok(HWord { letters })
    }

    pub fn from_element(x: &HElement) -> HWord {
        let mut letters = Vec::new();
        if x.k != 0 {
            letters.push(Letter::rho(x.k));
        }
        for (i, &e) in x.s.iter().enumerate() {
            if e != 0 {
                letters.push(Letter::tau(i + 1, e));
            }
        }
        HWord { letters }
    }
}

impl fmt::Display for HWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Reduces a word to `ρ^k τ1^s1 ... τn^sn` by rewriting.
///
/// Each `ρ^±1` is carried leftward across the `τ` letters before it, one
/// letter at a time: `τ_i^x ρ = ρ τ_(i-1)^x` and `τ_i^x ρ^-1 = ρ^-1 τ_(i+1)^x`,
/// where crossing the wrap between `τ_1` and `τ_n` negates `x` in the signed
/// variant. Once every `ρ` is at the front the `τ` letters commute and are
/// collected.
pub fn normalize(w: &HWord, n: usize, variant: Variant) -> HElement {
    let wrap = match variant {
        Variant::Signed => -1,
        Variant::Unsigned => 1,
    };
    let mut k = 0i64;
    // τ letters to the right of the ρ prefix: (0-based index, exponent)
    let mut tail: Vec<(usize, i64)> = Vec::new();
    for letter in w.letters() {
        match letter.gen {
            Generator::Tau(i) => match tail.last_mut() {
                Some((j, x)) if *j == i - 1 => {
                    *x += letter.exp;
                    if *x == 0 {
                        tail.pop();
                    }
                }
                _ => tail.push((i - 1, letter.exp)),
            },
            Generator::Rho => {
                let unit = letter.exp.signum();
                for _ in 0..letter.exp.unsigned_abs() {
                    for (j, x) in tail.iter_mut().rev() {
                        if unit > 0 {
                            if *j == 0 {
                                *j = n - 1;
                                *x *= wrap;
                            } else {
                                *j -= 1;
                            }
                        } else if *j == n - 1 {
                            *j = 0;
                            *x *= wrap;
                        } else {
                            *j += 1;
                        }
                    }
                    k += unit;
                }
            }
        }
    }
    let mut s = vec![0i64; n];
    for (j, x) in tail {
        s[j] += x;
    }
    HElement::new(k, s)
}

/// The word evaluated letter by letter with the group law.
pub fn fold_word(w: &HWord, group: &MorseGroup) -> HElement {
    w.letters().iter().fold(group.identity(), |acc, l| {
        let g = match l.gen {
            Generator::Rho => group.rho(),
            Generator::Tau(i) => group.tau(i),
        };
        group.mul(&acc, &group.pow(&g, l.exp))
    })
}

pub fn is_trivial_word(w: &HWord, n: usize, variant: Variant) -> bool {
    normalize(w, n, variant).is_identity()
}

/// Relators of the presentation
/// `<ρ, τ1..τn | ρ τ_i ρ^-1 = τ_(i+1), τ_i τ_j = τ_j τ_i>`, with the wrap
/// relator `ρ τ_n ρ^-1 τ_1` in the signed variant and `ρ τ_n ρ^-1 τ_1^-1`
/// otherwise.
pub fn presentation_relators(n: usize, variant: Variant) -> Vec<HWord> {
    let mut out = Vec::new();
    for i in 1..=n {
        let (next, e) = if i < n {
            (i + 1, -1)
        } else {
            (1, if variant == Variant::Signed { 1 } else { -1 })
        };
        out.push(HWord {
            letters: vec![
                Letter::rho(1),
                Letter::tau(i, 1),
                Letter::rho(-1),
                Letter::tau(next, e),
            ],
        });
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(HWord {
                letters: vec![
                    Letter::tau(i, 1),
                    Letter::tau(j, 1),
                    Letter::tau(i, -1),
                    Letter::tau(j, -1),
                ],
            });
        }
    }
    out
}

/// A relation `lhs = rhs` and whether it holds in `H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

fn relation(group: &MorseGroup, lhs: Vec<Letter>, rhs: Vec<Letter>) -> RelationCheck {
    let lhs = HWord { letters: lhs };
    let rhs = HWord { letters: rhs };
    let show = |w: &HWord| {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.to_string()
        }
    };
    RelationCheck {
        relation: format!("{} = {}", show(&lhs), show(&rhs)),
        holds: fold_word(&lhs, group) == fold_word(&rhs, group),
    }
}

/// Evaluates the defining relations of `H` as identities between products.
///
/// With `τ = τ1`: `ρ^n τ ρ^-n = τ^-1` (signed) or `τ` (unsigned); the
/// conjugates `ρ^i τ ρ^-i` commute pairwise for `0 < i, j < n`;
/// `ρ^2n τ ρ^-2n = τ`; `τ^-1 ρ^2n τ = ρ^2n`; and every presentation relator.
pub fn check_relations(n: usize, variant: Variant) -> Result<Vec<RelationCheck>> {
    let group = MorseGroup::new(n, variant)?;
    let ni = n as i64;
    let t = |e| Letter::tau(1, e);
    let r = Letter::rho;
    let mut out = Vec::new();
    let flip = if variant == Variant::Signed { -1 } else { 1 };
    out.push(relation(&group, vec![r(ni), t(1), r(-ni)], vec![t(flip)]));
    for i in 1..ni {
        for j in 1..ni {
            if i == j {
                continue;
            }
            out.push(relation(
                &group,
                vec![r(i), t(1), r(-i), r(j), t(1), r(-j)],
                vec![r(j), t(1), r(-j), r(i), t(1), r(-i)],
            ));
        }
    }
    out.push(relation(
        &group,
        vec![r(2 * ni), t(1), r(-2 * ni)],
        vec![t(1)],
    ));
    out.push(relation(
        &group,
        vec![t(-1), r(2 * ni), t(1)],
        vec![r(2 * ni)],
    ));
    for w in presentation_relators(n, variant) {
        out.push(relation(&group, w.letters, Vec::new()));
    }
    Ok(out)
}

/// A uniformly random word of length `0..=max_len` with exponents in
/// `±1..=±max_exp`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, max_len: usize, max_exp: i64) -> HWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(0..=n);
            let mut exp = rng.gen_range(1..=max_exp);
            if rng.gen_bool(0.5) {
                exp = -exp;
            }
            if g == 0 {
                Letter::rho(exp)
            } else {
                Letter::tau(g, exp)
            }
        })
        .collect();
    HWord { letters }
}
