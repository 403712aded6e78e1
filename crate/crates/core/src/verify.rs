//! Self-checks of every construction in the crate against independent
//! brute-force oracles. Drives `wreathlab verify-all`.

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commutator::{
    abelianization, abelianization_oracle, center, center_oracle, commutator_generators,
    commutator_subgroup_oracle, dprime_upper_bound, is_in_commutator, TwoLevelWreath,
};
use crate::error::Result;
use crate::group::{closure, greedy_generating_set, minimal_generating_size};
use crate::morse::{
    check_relations, fold_word, is_trivial_word, normalize, phi_matrix, phi_power,
    phi_power_closed_form, presentation_relators, random_word, ClosedForm, HElement, HWord,
    MorseGroup, PhiMatrix, Variant,
};
use crate::wreath::{
    canonical_generators, rooted_generator, standard_directed_generator,
    two_generator_direct_product, DirectProduct, Signature,
};

/// Closure cap for the oracle enumerations at small scale.
pub const SMALL_LIMIT: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported observation; not a pass/fail claim.
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub paper_ref: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<ClaimResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn get(&self, claim: &str) -> Option<&ClaimResult> {
        self.entries.iter().find(|e| e.claim == claim)
    }

    fn push(&mut self, claim: &str, paper_ref: &str, outcome: Result<(bool, String)>) {
        let (status, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.entries.push(ClaimResult {
            claim: claim.into(),
            paper_ref: paper_ref.into(),
            status,
            detail,
        });
    }

    fn note(&mut self, claim: &str, paper_ref: &str, detail: String) {
        self.entries.push(ClaimResult {
            claim: claim.into(),
            paper_ref: paper_ref.into(),
            status: Status::Note,
            detail,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {} [{}] {}", e.status, e.claim, e.paper_ref, e.detail)?;
        }
        Ok(())
    }
}

pub const CENTER_DISCREPANCY_NOTE: &str =
    "In the signed variant the diagonal (0; c,...,c) with c != 0 is not central: \
conjugation by rho sends it to (0; -c,c,...,c), so commuting with rho forces c = -c. \
The generator-commutation check finds only rho^(2n t) among the tested candidates; \
the diagonal factor of the stated center holds in the unsigned variant only.";

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn sig(orders: &[u32]) -> Arc<Signature> {
    Arc::new(Signature::new(orders.to_vec()).expect("valid signature"))
}

/// `closure({β0, β1})` has the full group order.
pub fn check_two_generators(orders: &[u32], limit: usize) -> Result<(bool, String)> {
    let s = sig(orders);
    let gens = [rooted_generator(&s), standard_directed_generator(&s)?];
    let (size, t) = timed(|| crate::wreath::closure(&s, &gens, limit).map(|c| c.len()));
    let size = size?;
    Ok((
        BigUint::from(size) == s.group_order(),
        format!(
            "{s}: closure {size}, order {} ({:.2}s)",
            s.group_order(),
            t.as_secs_f64()
        ),
    ))
}

fn criterion_1(limit: usize) -> Result<(bool, String)> {
    let (a, da) = check_two_generators(&[2, 3], limit)?;
    let start = Instant::now();
    let (b, db) = check_two_generators(&[2, 3, 5], limit)?;
    let fast = start.elapsed() < Duration::from_secs(30);
    Ok((a && b && fast, format!("{da}; {db}")))
}

fn criterion_2(limit: usize) -> Result<(bool, String)> {
    let s = sig(&[2, 3, 5]);
    let gens = canonical_generators(&s)?;
    let mut ok = gens.len() == 3;
    for (k, g) in gens.iter().enumerate() {
        let support = g.support();
        let order = s.order_at(k) as u64;
        ok &= support.len() == 1
            && support[0].0 == k
            && order / (support[0].2 as u64).gcd(&order) == order;
    }
    let size = crate::wreath::closure(&s, &gens, limit)?.len();
    ok &= size == 281_250;
    let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    Ok((
        ok,
        format!(
            "{} generators {}, closure {size}",
            gens.len(),
            shown.join(" ")
        ),
    ))
}

fn criterion_3(limit: usize) -> Result<(bool, String)> {
    let (a, b) = (sig(&[2, 3]), sig(&[5]));
    let (x, y, pairing) = two_generator_direct_product(&a, &b)?;
    let group = DirectProduct { left: a, right: b };
    let size = closure(&group, &[x.clone(), y.clone()], limit)?.len();
    Ok((
        BigUint::from(size) == group.order() && size == 90,
        format!("{x}, {y} ({pairing:?} pairing): closure {size}"),
    ))
}

const COMMUTATOR_CASES: [(u32, usize, u32); 3] = [(2, 2, 2), (2, 2, 3), (3, 3, 2)];

fn criterion_4(limit: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (r, n, m) in COMMUTATOR_CASES {
        let w = TwoLevelWreath::new(r, n, m)?;
        let oracle = commutator_subgroup_oracle(&w, limit)?;
        let all = w.elements(limit)?;
        let mut agree = 0;
        for x in &all {
            if is_in_commutator(&w, x)? == oracle.binary_search(x).is_ok() {
                agree += 1;
            }
        }
        let expected = (m as usize).pow(n as u32 - 1);
        ok &= agree == all.len() && oracle.len() == expected;
        parts.push(format!(
            "Z{r} wr Z{m}: {agree}/{} agree, |G'| = {}",
            all.len(),
            oracle.len()
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn criterion_5(limit: usize) -> Result<(bool, String)> {
    let w = TwoLevelWreath::new(3, 3, 2)?;
    let gens = commutator_generators(3, 2)?;
    let generated = closure(&w, &gens, limit)?;
    let oracle = commutator_subgroup_oracle(&w, limit)?;
    let single = minimal_generating_size(&w, &oracle, 1)?;
    let greedy = greedy_generating_set(&w, &oracle)?;
    let bound = dprime_upper_bound(3, 1, 0, 0);
    let ok = generated == oracle
        && oracle.len() == 4
        && single.is_none()
        && greedy.len() == 2
        && greedy.len() as u64 <= bound;
    Ok((
        ok,
        format!(
            "closure of generators {} = oracle {}; one generator suffices: {}; greedy {}; bound {bound}",
            generated.len(),
            oracle.len(),
            single.is_some(),
            greedy.len()
        ),
    ))
}

fn criterion_6(limit: usize) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (r, n, m) in [
        (2, 2, 2),
        (2, 2, 3),
        (3, 3, 2),
        (3, 3, 3),
        (4, 2, 3),
        (6, 3, 2),
    ] {
        let w = TwoLevelWreath::new(r, n, m)?;
        let factors = abelianization(&w)?;
        let shape = abelianization_oracle(&w, limit)?;
        let coprime = (r as u64).gcd(&(m as u64)) == 1;
        ok &= shape.order == (r * m) as u64
            && factors.iter().product::<u64>() == shape.order
            && factors.last().copied() == Some(shape.exponent)
            && (factors.len() == 1) == coprime;
        parts.push(format!("{}: {factors:?}", w.describe()));
    }
    ok &= abelianization(&TwoLevelWreath::new(2, 2, 3)?)? == vec![6];
    Ok((ok, parts.join("; ")))
}

fn criterion_7(limit: usize) -> Result<(bool, String)> {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for ((r, n, m), expected) in [((2, 2, 2), 2), ((4, 2, 3), 6)] {
        let w = TwoLevelWreath::new(r, n, m)?;
        let formula = center(&w, limit)?;
        let oracle = center_oracle(&w, limit)?;
        ok &= formula == oracle && formula.len() == expected;
        parts.push(format!(
            "{}: |Z| = {} (oracle {})",
            w.describe(),
            formula.len(),
            oracle.len()
        ));
    }
    let t = start.elapsed();
    ok &= t < Duration::from_secs(5);
    Ok((
        ok,
        format!("{} ({:.2}s)", parts.join("; "), t.as_secs_f64()),
    ))
}

fn criterion_8() -> Result<(bool, String)> {
    let printed = PhiMatrix {
        entries: vec![
            vec![0, 0, 0, -1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ],
    };
    let e = PhiMatrix::identity(4);
    let ok = phi_matrix(4, Variant::Signed) == printed
        && phi_power(4, 4, Variant::Signed) == e.neg()
        && phi_power(4, 8, Variant::Signed) == e;
    Ok((ok, "phi(4) matches; phi^4 = -E; phi^8 = E".into()))
}

fn shift_powers() -> Result<(bool, String)> {
    let ok = (1..=8).all(|n| {
        let e = PhiMatrix::identity(n);
        phi_power(n, n as i64, Variant::Signed) == e.neg()
            && phi_power(n, 2 * n as i64, Variant::Signed) == e
            && phi_matrix(n, Variant::Signed).is_signed_permutation()
    });
    Ok((ok, "phi^n = -E and phi^2n = E for n = 1..8".into()))
}

fn closed_form_comparison(report: &mut Report) {
    let mut uniform_ok = true;
    let mut printed_mismatch = 0;
    let mut total = 0;
    for n in 2..=6usize {
        for alpha in -2 * n as i64..=2 * n as i64 {
            let iterated = phi_power(n, alpha, Variant::Signed);
            total += 1;
            uniform_ok &=
                phi_power_closed_form(n, alpha, Variant::Signed, ClosedForm::Uniform) == iterated;
            if phi_power_closed_form(n, alpha, Variant::Signed, ClosedForm::ExtraFirstSign)
                != iterated
            {
                printed_mismatch += 1;
            }
        }
    }
    report.push(
        "closed-form powers of phi",
        "coordinate formula for phi^alpha",
        Ok((
            uniform_ok,
            format!(
                "uniform sign/index formula equals the iterated matrix on {total} (n, alpha) pairs"
            ),
        )),
    );
    report.note(
        "closed-form first coordinate",
        "coordinate formula for phi^alpha",
        format!(
            "reading the formula with an extra minus on the first coordinate disagrees with the iterated matrix on {printed_mismatch}/{total} pairs; the uniform reading is used"
        ),
    );
}

fn criterion_9() -> Result<(bool, String)> {
    let mut count = 0;
    for n in 1..=6 {
        for c in check_relations(n, Variant::Signed)? {
            count += 1;
            if !c.holds {
                return Ok((false, format!("n={n}: {} fails", c.relation)));
            }
        }
    }
    Ok((
        true,
        format!("{count} relations hold for n = 1..6 (signed)"),
    ))
}

fn criterion_10(words: usize, conjugates: usize) -> Result<(bool, String)> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut agree = 0;
    let mut total = 0;
    for i in 0..words {
        let n = 2 + i % 3;
        let variant = if (i / 3) % 2 == 0 {
            Variant::Signed
        } else {
            Variant::Unsigned
        };
        let group = MorseGroup::new(n, variant)?;
        let w = random_word(&mut rng, n, 50, 5);
        let x = normalize(&w, n, variant);
        total += 1;
        if x == fold_word(&w, &group) && x.k == w.rho_exponent_sum() {
            agree += 1;
        }
    }
    let mut trivial = 0;
    let mut tried = 0;
    for n in 2..=4 {
        for variant in [Variant::Signed, Variant::Unsigned] {
            let rels = presentation_relators(n, variant);
            for r in &rels {
                tried += 1;
                trivial += is_trivial_word(r, n, variant) as usize;
            }
        }
    }
    for i in 0..conjugates {
        let n = 2 + i % 3;
        let variant = if (i / 3) % 2 == 0 {
            Variant::Signed
        } else {
            Variant::Unsigned
        };
        let rels = presentation_relators(n, variant);
        let mut w = HWord::empty();
        for _ in 0..rng.gen_range(1..=3) {
            let r = &rels[rng.gen_range(0..rels.len())];
            let r = if rng.gen_bool(0.5) {
                r.inverse()
            } else {
                r.clone()
            };
            let c = random_word(&mut rng, n, 10, 3);
            w = w.concat(&r.conjugate(&c));
        }
        tried += 1;
        trivial += is_trivial_word(&w, n, variant) as usize;
    }
    let t = start.elapsed();
    let ok = agree == total && trivial == tried && t < Duration::from_secs(60);
    Ok((
        ok,
        format!(
            "normalize = fold on {agree}/{total} words; {trivial}/{tried} relator words trivial ({:.2}s)",
            t.as_secs_f64()
        ),
    ))
}

fn criterion_11(report: &mut Report) -> Result<(bool, String)> {
    let mut ok = true;
    for n in 2..=4usize {
        let g = MorseGroup::new(n, Variant::Signed)?;
        for t in -5..=5i64 {
            ok &= g.is_central(&HElement::new(2 * n as i64 * t, vec![0; n]))?;
        }
        ok &= !g.is_central(&HElement::new(0, vec![1; n]))?;
        let u = MorseGroup::new(n, Variant::Unsigned)?;
        for t in -5..=5i64 {
            for c in -5..=5i64 {
                ok &= u.is_central(&HElement::new(n as i64 * t, vec![c; n]))?;
            }
        }
    }
    report.note(
        "diagonal in the signed center",
        "center of the semidirect group, signed shift",
        CENTER_DISCREPANCY_NOTE.into(),
    );
    Ok((
        ok,
        "signed: (2nt; 0) central, (0; 1,...,1) not; unsigned: (nt; c,...,c) central; n = 2..4, |t|,|c| <= 5".into(),
    ))
}

/// Runs every check and collects the outcomes.
pub fn verify_all(scale: Scale) -> Report {
    let limit = match scale {
        Scale::Small => SMALL_LIMIT,
        Scale::Full => crate::group::DEFAULT_LIMIT,
    };
    // the two-generator and canonical-set checks enumerate the whole
    // 281250-element group, above the small-scale oracle cap
    let tree_limit = 300_000.max(limit);
    let mut r = Report::default();
    r.push(
        "two generators",
        "two-generator theorem",
        criterion_1(tree_limit),
    );
    r.push(
        "canonical generating set",
        "canonical generators of an iterated wreath product",
        criterion_2(tree_limit),
    );
    r.push(
        "direct product generation",
        "two generators of a direct product",
        criterion_3(limit),
    );
    r.push(
        "commutator membership",
        "commutator subgroup criterion",
        criterion_4(limit),
    );
    r.push(
        "commutator generators",
        "generators of the commutator subgroup",
        criterion_5(limit),
    );
    r.push(
        "abelianization",
        "abelianization of a wreath product",
        criterion_6(limit),
    );
    r.push(
        "center",
        "center of a non-faithful wreath product",
        criterion_7(limit),
    );
    r.push(
        "shift matrix",
        "matrix of the shift automorphism",
        criterion_8(),
    );
    r.push(
        "defining relations",
        "presentation of the semidirect group",
        criterion_9(),
    );
    let (words, conjugates) = match scale {
        Scale::Small => (10_000, 1_000),
        Scale::Full => (100_000, 10_000),
    };
    r.push(
        "normal form",
        "canonical words",
        criterion_10(words, conjugates),
    );
    let c11 = criterion_11(&mut r);
    r.push("center predicates", "center of the semidirect group", c11);
    r.push(
        "shift powers",
        "matrix of the shift automorphism",
        shift_powers(),
    );
    closed_form_comparison(&mut r);
    if scale == Scale::Full {
        for orders in [&[3u32, 2, 5][..], &[3, 4], &[5, 2]] {
            r.push(
                "two generators (extended)",
                "two-generator theorem",
                check_two_generators(orders, limit),
            );
        }
    }
    r
}

/// Claims numbered as in the acceptance list, for callers that want one
/// line per criterion.
pub const CRITERIA: [&str; 11] = [
    "two generators",
    "canonical generating set",
    "direct product generation",
    "commutator membership",
    "commutator generators",
    "abelianization",
    "center",
    "shift matrix",
    "defining relations",
    "normal form",
    "center predicates",
];
