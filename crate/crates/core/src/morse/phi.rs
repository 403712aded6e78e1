use std::fmt;

use serde::{Deserialize, Serialize};

/// Which shift automorphism of `Z^n` the generator `ρ` induces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `(x1, ..., xn) -> (-xn, x1, ..., x(n-1))`, of order `2n`.
    #[default]
    Signed,
    /// `(x1, ..., xn) -> (xn, x1, ..., x(n-1))`, of order `n`.
    Unsigned,
}

impl Variant {
    /// Order of `φ` as an automorphism.
    pub fn period(self, n: usize) -> i64 {
        match self {
            Variant::Signed => 2 * n as i64,
            Variant::Unsigned => n as i64,
        }
    }

    fn wrap_sign(self) -> i64 {
        match self {
            Variant::Signed => -1,
            Variant::Unsigned => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Signed => "signed",
            Variant::Unsigned => "unsigned",
        })
    }
}

/// One application of `φ`.
pub fn phi_apply(s: &[i64], variant: Variant) -> Vec<i64> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(variant.wrap_sign() * s[n - 1]);
    out.extend_from_slice(&s[..n - 1]);
    out
}

/// One application of `φ^-1`.
pub fn phi_inverse_apply(s: &[i64], variant: Variant) -> Vec<i64> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&s[1..]);
    out.push(variant.wrap_sign() * s[0]);
    out
}

/// `φ^alpha (s)`, reducing `alpha` modulo the period first.
pub fn phi_pow_apply(s: &[i64], alpha: i64, variant: Variant) -> Vec<i64> {
    let period = variant.period(s.len()).max(1);
    let mut out = s.to_vec();
    for _ in 0..alpha.rem_euclid(period) {
        out = phi_apply(&out, variant);
    }
    out
}

/// A square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl PhiMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![vec![0; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1;
        }
        PhiMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn neg(&self) -> Self {
        PhiMatrix {
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|&v| -v).collect())
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        PhiMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &PhiMatrix) -> Self {
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| self.entries[i][k] * other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        PhiMatrix { entries }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exactly one `±1` in every row and column, zeros elsewhere.
    pub fn is_signed_permutation(&self) -> bool {
        let n = self.size();
        let unit_line = |line: &mut dyn Iterator<Item = i64>| {
            let mut nonzero = 0;
            for v in line {
                match v {
                    0 => {}
                    1 | -1 => nonzero += 1,
                    _ => return false,
                }
            }
            nonzero == 1
        };
        self.entries.iter().all(|r| r.len() == n)
            && (0..n).all(|i| unit_line(&mut self.entries[i].iter().copied()))
            && (0..n).all(|j| unit_line(&mut (0..n).map(|i| self.entries[i][j])))
    }
}

impl fmt::Display for PhiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The matrix of `φ`: column `j` is `φ(e_j)`.
pub fn phi_matrix(n: usize, variant: Variant) -> PhiMatrix {
    let mut entries = vec![vec![0; n]; n];
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        for (i, v) in phi_apply(&e, variant).into_iter().enumerate() {
            entries[i][j] = v;
        }
    }
    PhiMatrix { entries }
}

/// `φ^alpha` by repeated multiplication; negative powers use the transpose,
/// which inverts a signed permutation matrix.
pub fn phi_power(n: usize, alpha: i64, variant: Variant) -> PhiMatrix {
    let base = if alpha < 0 {
        phi_matrix(n, variant).transpose()
    } else {
        phi_matrix(n, variant)
    };
    let mut acc = PhiMatrix::identity(n);
    for _ in 0..alpha.unsigned_abs() {
        acc = base.mul(&acc);
    }
    acc
}

/// How the closed-form coordinate formula for `φ^alpha` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `(φ^α x)_k = (-1)^floor((α+n-k)/n) x_((k-α) mod n)` for every `k`,
    /// with index `0` read as `n`.
    Uniform,
    /// As above, with an extra minus sign on the first coordinate.
    ExtraFirstSign,
}

/// `φ^alpha` from the closed-form coordinate formula. In the unsigned
/// variant the sign factor is dropped.
pub fn phi_power_closed_form(
    n: usize,
    alpha: i64,
    variant: Variant,
    form: ClosedForm,
) -> PhiMatrix {
    let mut entries = vec![vec![0; n]; n];
    let ni = n as i64;
    for k in 1..=ni {
        let src = (k - alpha).rem_euclid(ni);
        let src = if src == 0 { ni } else { src };
        let mut sign = match variant {
            Variant::Signed => {
                if (alpha + ni - k).div_euclid(ni).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
            Variant::Unsigned => 1,
        };
        if form == ClosedForm::ExtraFirstSign && k == 1 {
            sign = -sign;
        }
        entries[(k - 1) as usize][(src - 1) as usize] = sign;
    }
    PhiMatrix { entries }
}
