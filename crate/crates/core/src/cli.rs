//! The `wreathlab` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a computation
//! cannot be completed (limit exceeded, hypothesis not met), 2 on usage and
//! parse errors.

use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::commutator::{
    abelianization, center, center_oracle, commutator_generators, is_in_commutator, PassiveGroup,
    TwoLevelWreath, WreathPair,
};
use crate::error::Error;
use crate::group::DEFAULT_LIMIT;
use crate::morse::{
    check_relations, is_trivial_word, normalize, HElement, HWord, MorseGroup, Variant,
};
use crate::verify::{verify_all, Scale};
use crate::wreath::{
    canonical_generators, closure, rooted_generator, standard_directed_generator,
    verify_generation, LeafWord, Signature, SpinePath, TreeElement,
};

pub const LIMIT_ENV: &str = "WREATHLAB_LIMIT";

#[derive(Parser, Debug)]
#[command(
    name = "wreathlab",
    version,
    about = "Wreath products of cyclic groups and the semidirect group Z x| Z^n"
)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of elements any enumeration may produce
    /// (default: $WREATHLAB_LIMIT, else 1000000).
    #[arg(long, global = true)]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SigArg {
    /// Orders of the cyclic factors, active group first, e.g. `2x3x5`.
    #[arg(long)]
    sig: String,
}

#[derive(Args, Debug)]
struct WreathArgs {
    /// Order r of the active cyclic group.
    #[arg(long)]
    r: u32,
    /// Size n of the set X.
    #[arg(long)]
    n: usize,
    /// Order m of the passive cyclic group.
    #[arg(long, conflicts_with = "passive")]
    m: Option<u32>,
    /// Passive group given as an iterated wreath product signature.
    #[arg(long)]
    passive: Option<String>,
    /// The active generator shifts X by this many points.
    #[arg(long, default_value_t = 1)]
    step: u32,
}

#[derive(Args, Debug)]
struct RankArgs {
    /// Rank n of the free abelian part.
    #[arg(long)]
    n: usize,
    /// Shift with a sign change at the wrap (default).
    #[arg(long, conflicts_with = "unsigned")]
    signed: bool,
    /// Plain cyclic shift.
    #[arg(long)]
    unsigned: bool,
}

impl RankArgs {
    fn variant(&self) -> Variant {
        if self.unsigned {
            Variant::Unsigned
        } else {
            Variant::Signed
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScaleArg {
    Small,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two tableau literals.
    Mul {
        #[command(flatten)]
        sig: SigArg,
        a: String,
        b: String,
    },
    /// Inverse of a tableau literal.
    Inv {
        #[command(flatten)]
        sig: SigArg,
        a: String,
    },
    /// Order of an element.
    Order {
        #[command(flatten)]
        sig: SigArg,
        a: String,
    },
    /// Image of a leaf (comma-separated digits) under an element.
    Act {
        #[command(flatten)]
        sig: SigArg,
        a: String,
        leaf: String,
    },
    /// Subgroup generated by the given elements.
    Closure {
        #[command(flatten)]
        sig: SigArg,
        gens: Vec<String>,
        /// Print only the number of elements.
        #[arg(long)]
        count: bool,
    },
    /// Generating sets: the rooted and directed generators, or the canonical set.
    Gens {
        #[command(flatten)]
        sig: SigArg,
        /// One single-label generator per level.
        #[arg(long)]
        canonical: bool,
        /// Spine ray for the directed generator, comma-separated.
        #[arg(long, conflicts_with = "canonical")]
        ray: Option<String>,
        /// Emit Graphviz portraits instead of literals.
        #[arg(long)]
        dot: bool,
    },
    /// Check that elements generate the whole group (default: the two generators).
    VerifyGen {
        #[command(flatten)]
        sig: SigArg,
        gens: Vec<String>,
    },
    /// Membership of a pair `(a; b1,...,bn)` in the commutator subgroup.
    CommTest {
        #[command(flatten)]
        w: WreathArgs,
        pair: String,
    },
    /// Generators h_1, ..., h_(n-1) of the commutator subgroup of Z_n wr Z_m.
    CommGens {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    /// Invariant factors of the abelianization.
    Abelianize {
        #[command(flatten)]
        w: WreathArgs,
    },
    /// Center of a two-level wreath product.
    Center {
        #[command(flatten)]
        w: WreathArgs,
        /// Compare against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Product of two elements `(k; s1,...,sn)`.
    HMul {
        #[command(flatten)]
        rank: RankArgs,
        x: String,
        y: String,
    },
    /// Normal form of a word such as `t1 r^-2 t3^5`.
    HNormalize {
        #[command(flatten)]
        rank: RankArgs,
        word: String,
    },
    /// Whether a word represents the identity.
    HTrivial {
        #[command(flatten)]
        rank: RankArgs,
        word: String,
    },
    /// Check the defining relations.
    HRelations {
        #[command(flatten)]
        rank: RankArgs,
    },
    /// Whether an element is central.
    HCentral {
        #[command(flatten)]
        rank: RankArgs,
        x: String,
    },
    /// Run every self-check.
    VerifyAll {
        #[arg(long, value_enum, default_value = "small")]
        scale: ScaleArg,
    },
}

/// What a command produced: text lines, the JSON form, and whether a check
/// it performed failed.
struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            failed: false,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LimitExceeded { .. }
        | Error::NotCoprime { .. }
        | Error::Hypothesis(_)
        | Error::NonTransitive { .. } => 1,
        _ => 2,
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code with everything written to stdout and stderr.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (0, text, String::new())
            } else {
                (2, String::new(), text)
            };
        }
    };
    let limit = match cli.limit {
        Some(l) => l,
        None => match std::env::var(LIMIT_ENV) {
            Ok(v) => match v.trim().parse() {
                Ok(l) => l,
                Err(_) => {
                    return (
                        2,
                        String::new(),
                        format!("error: {LIMIT_ENV}={v:?} is not a count\n"),
                    )
                }
            },
            Err(_) => DEFAULT_LIMIT,
        },
    };
    match execute(&cli.command, limit) {
        Ok(out) => {
            let stdout = if cli.json {
                let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
                s.push('\n');
                s
            } else {
                out.text
            };
            (if out.failed { 1 } else { 0 }, stdout, String::new())
        }
        Err(e) => (exit_code(&e), String::new(), format!("error: {e}\n")),
    }
}

fn signature(s: &SigArg) -> Result<Arc<Signature>, Error> {
    Ok(Arc::new(Signature::parse(&s.sig)?))
}

fn element_json(g: &TreeElement) -> Value {
    json!({ "element": g.to_string(), "levels": g.levels() })
}

fn wreath(w: &WreathArgs) -> Result<TwoLevelWreath, Error> {
    let passive = match (&w.passive, w.m) {
        (Some(sig), _) => PassiveGroup::wreath(Signature::parse(sig)?)?,
        (None, Some(m)) => PassiveGroup::cyclic(m)?,
        (None, None) => return Err(Error::Shape("one of --m or --passive is required".into())),
    };
    TwoLevelWreath::with_passive(w.r, w.n, w.step, passive)
}

fn pairs_output(label: &str, pairs: &[WreathPair]) -> Output {
    let mut text = String::new();
    for p in pairs {
        writeln!(text, "{p}").unwrap();
    }
    let literals: Vec<String> = pairs.iter().map(|p| p.to_string()).collect();
    Output::ok(text, json!({ label: literals, "count": pairs.len() }))
}

fn bool_output(key: &str, value: bool) -> Output {
    Output::ok(format!("{value}\n"), json!({ key: value }))
}

fn execute(cmd: &Command, limit: usize) -> Result<Output, Error> {
    match cmd {
        Command::Mul { sig, a, b } => {
            let s = signature(sig)?;
            let g = TreeElement::parse(&s, a)?.mul(&TreeElement::parse(&s, b)?)?;
            Ok(Output::ok(format!("{g}\n"), element_json(&g)))
        }
        Command::Inv { sig, a } => {
            let s = signature(sig)?;
            let g = TreeElement::parse(&s, a)?.inv();
            Ok(Output::ok(format!("{g}\n"), element_json(&g)))
        }
        Command::Order { sig, a } => {
            let s = signature(sig)?;
            let o = TreeElement::parse(&s, a)?.order();
            Ok(Output::ok(format!("{o}\n"), json!({ "order": o })))
        }
        Command::Act { sig, a, leaf } => {
            let s = signature(sig)?;
            let g = TreeElement::parse(&s, a)?;
            let image = g.act_on_leaf(&LeafWord::parse(&s, leaf)?)?;
            Ok(Output::ok(
                format!("{image}\n"),
                json!({ "leaf": image.digits() }),
            ))
        }
        Command::Closure { sig, gens, count } => {
            let s = signature(sig)?;
            let gens = gens
                .iter()
                .map(|g| TreeElement::parse(&s, g))
                .collect::<Result<Vec<_>, _>>()?;
            let mut all = closure(&s, &gens, limit)?;
            all.sort_by_key(|g| g.canonical_bytes());
            if *count {
                return Ok(Output::ok(
                    format!("{}\n", all.len()),
                    json!({ "count": all.len() }),
                ));
            }
            let mut text = String::new();
            for g in &all {
                writeln!(text, "{g}").unwrap();
            }
            let literals: Vec<String> = all.iter().map(|g| g.to_string()).collect();
            Ok(Output::ok(
                text,
                json!({ "elements": literals, "count": all.len() }),
            ))
        }
        Command::Gens {
            sig,
            canonical,
            ray,
            dot,
        } => {
            let s = signature(sig)?;
            let gens = if *canonical {
                canonical_generators(&s)?
            } else {
                let mut g = vec![rooted_generator(&s)];
                if s.depth() >= 2 {
                    g.push(match ray {
                        Some(r) => {
                            let ray = parse_ray(r)?;
                            crate::wreath::directed_generator(&s, &SpinePath::along(&s, ray)?)?
                        }
                        None => standard_directed_generator(&s)?,
                    });
                }
                g
            };
            let mut text = String::new();
            for g in &gens {
                if *dot {
                    text.push_str(&g.to_dot());
                } else {
                    writeln!(text, "{g}").unwrap();
                }
            }
            let json: Vec<Value> = gens.iter().map(element_json).collect();
            Ok(Output::ok(text, json!({ "generators": json })))
        }
        Command::VerifyGen { sig, gens } => {
            let s = signature(sig)?;
            let gens = if gens.is_empty() {
                let mut g = vec![rooted_generator(&s)];
                if s.depth() >= 2 {
                    g.push(standard_directed_generator(&s)?);
                }
                g
            } else {
                gens.iter()
                    .map(|g| TreeElement::parse(&s, g))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let ok = verify_generation(&s, &gens, limit)?;
            let mut out = bool_output("generates", ok);
            out.failed = !ok;
            Ok(out)
        }
        Command::CommTest { w, pair } => {
            let w = wreath(w)?;
            let x = w.parse_pair(pair)?;
            Ok(bool_output("in_commutator", is_in_commutator(&w, &x)?))
        }
        Command::CommGens { n, m } => {
            Ok(pairs_output("generators", &commutator_generators(*n, *m)?))
        }
        Command::Abelianize { w } => {
            let w = wreath(w)?;
            let factors = abelianization(&w)?;
            let shown: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
            let text = if shown.is_empty() {
                "1".to_string()
            } else {
                shown.join(" x ")
            };
            Ok(Output::ok(
                format!("{text}\n"),
                json!({ "invariant_factors": factors }),
            ))
        }
        Command::Center { w, oracle } => {
            let w = wreath(w)?;
            let z = center(&w, limit)?;
            let mut out = pairs_output("center", &z);
            if *oracle {
                let agrees = center_oracle(&w, limit)? == z;
                writeln!(out.text, "oracle agrees: {agrees}").unwrap();
                out.json["oracle_agrees"] = json!(agrees);
                out.failed = !agrees;
            }
            Ok(out)
        }
        Command::HMul { rank, x, y } => {
            let g = MorseGroup::new(rank.n, rank.variant())?;
            let z = g.h_mul(&HElement::parse(x, rank.n)?, &HElement::parse(y, rank.n)?)?;
            Ok(h_output(&z))
        }
        Command::HNormalize { rank, word } => {
            MorseGroup::new(rank.n, rank.variant())?;
            let w = HWord::parse(word, rank.n)?;
            Ok(h_output(&normalize(&w, rank.n, rank.variant())))
        }
        Command::HTrivial { rank, word } => {
            MorseGroup::new(rank.n, rank.variant())?;
            let w = HWord::parse(word, rank.n)?;
            Ok(bool_output(
                "trivial",
                is_trivial_word(&w, rank.n, rank.variant()),
            ))
        }
        Command::HRelations { rank } => {
            let checks = check_relations(rank.n, rank.variant())?;
            let mut text = String::new();
            for c in &checks {
                writeln!(
                    text,
                    "{} {}",
                    if c.holds { "PASS" } else { "FAIL" },
                    c.relation
                )
                .unwrap();
            }
            Ok(Output {
                text,
                failed: checks.iter().any(|c| !c.holds),
                json: serde_json::to_value(&checks).expect("serializable"),
            })
        }
        Command::HCentral { rank, x } => {
            let g = MorseGroup::new(rank.n, rank.variant())?;
            Ok(bool_output(
                "central",
                g.is_central(&HElement::parse(x, rank.n)?)?,
            ))
        }
        Command::VerifyAll { scale } => {
            let report = verify_all(match scale {
                ScaleArg::Small => Scale::Small,
                ScaleArg::Full => Scale::Full,
            });
            Ok(Output {
                text: report.to_string(),
                failed: !report.all_passed(),
                json: serde_json::to_value(&report).expect("serializable"),
            })
        }
    }
}

fn h_output(x: &HElement) -> Output {
    let word = HWord::from_element(x);
    let word = if word.is_empty() {
        "1".to_string()
    } else {
        word.to_string()
    };
    Output::ok(
        format!("{x}\n"),
        json!({ "element": x.to_string(), "k": x.k, "s": x.s, "word": word }),
    )
}

fn parse_ray(src: &str) -> Result<Vec<u32>, Error> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in src.split(',') {
        let t = part.trim();
        out.push(t.parse().map_err(|_| Error::Parse {
            offset,
            expected: "non-negative digit".into(),
            found: format!("'{t}'"),
        })?);
        offset += part.len() + 1;
    }
    Ok(out)
}
