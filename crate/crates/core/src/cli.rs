//! The `qn-kl` command line.

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::canonical::{ucb_q1_closed, ucb_with_fuel, CanonicalError};
use crate::characters::{ch_euler, ch_irreducible, ch_verma_truncated, schur_p, CharacterError, Method};
use crate::crystal::{crystal_dominant, crystal_dual, crystal_primed, i_signature, CrystalData, Token};
use crate::lincomb::{render_int_coeff, render_terms};
use crate::tensor::{bar_n2, key, TensorError};
use crate::wedge::{with_shared, WedgeError, DEFAULT_FUEL};
use crate::weights::{
    bruhat_leq, dominance_leq_p, downarrow_reachable, lower_block_set, same_block, wt, DominantWeight,
    Reachability, Weight, WeightError,
};

/// Default cutoff for truncated expansions.
pub const DEFAULT_CUTOFF: i64 = 20;

#[derive(Debug, Parser)]
#[command(name = "qn-kl", version, about = "Canonical bases, decomposition numbers and characters for q(n)")]
pub struct Cli {
    /// Emit a single JSON document {"command": ..., "result": ...}.
    #[arg(long, global = true)]
    pub json: bool,
    /// Budget of rewrite steps (or search steps for `bruhat`).
    #[arg(long, global = true, default_value_t = DEFAULT_FUEL)]
    pub fuel: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand the canonical basis element U_W in the F basis.
    Ucb {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// Specialize at q = 1.
        #[arg(long)]
        q1: bool,
        /// How to obtain the q = 1 coefficients.
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// The decomposition numbers d_{μ,W} = u_{μ,W}(1), one row per μ.
    Dmat {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// A character: irreducible (L), Euler (E), Schur P (P) or Verma (M).
    Char {
        #[arg(value_enum)]
        kind: CharKind,
        #[arg(allow_hyphen_values = true)]
        weight: String,
        /// For M: keep monomials x^(W-β) with β of height at most this,
        /// the height being the total degree in the simple roots x_i^-1 x_(i+1).
        #[arg(long)]
        cutoff: Option<u32>,
    },
    /// Crystal operators and string lengths at one node.
    Crystal {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long = "i")]
        i: u32,
        /// Use the dual operators.
        #[arg(long)]
        dual: bool,
        /// Use the crystal on dominant weights.
        #[arg(long)]
        dominant: bool,
    },
    /// Straighten the word v_c1 ⊗ ... ⊗ v_cn into the F basis.
    Straighten {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Compare two weights: Bruhat order, dominance of wt, block, ↓-chains.
    Bruhat {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// bar(N_W) for n = 2, on the basis vectors N_μ with key(μ) below the cutoff.
    Bar2 {
        #[arg(allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: i64,
    },
    /// The dominant weights of the block of W lying below W.
    Blocks {
        #[arg(allow_hyphen_values = true)]
        weight: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CharKind {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "M", alias = "m")]
    M,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<WedgeError> for CliError {
    fn from(e: WedgeError) -> Self {
        match e {
            WedgeError::FuelExhausted(_) => CliError::Limit(e.to_string()),
            WedgeError::EmptyWord => CliError::Input(e.to_string()),
            WedgeError::Ring(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<CanonicalError> for CliError {
    fn from(e: CanonicalError) -> Self {
        match e {
            CanonicalError::Wedge(w) => w.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<CharacterError> for CliError {
    fn from(e: CharacterError) -> Self {
        match e {
            CharacterError::Canonical(c) => c.into(),
            CharacterError::NotWeaklyDecreasing(_) => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<TensorError> for CliError {
    fn from(e: TensorError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// An integer coefficient attached to a weight, as emitted by `ucb --q1` and `dmat`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntTerm {
    pub weight: DominantWeight,
    pub coeff: String,
}

/// Output of `crystal`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalReport {
    pub signature: Vec<Token>,
    #[serde(flatten)]
    pub data: CrystalData<Weight>,
}

/// Output of `bruhat A B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruhatReport {
    /// `A ≼ B`.
    pub bruhat_leq: bool,
    /// `B ≼ A`.
    pub bruhat_geq: bool,
    /// `wt(A) ≤ wt(B)` in the dominance order on weights of `b∞`.
    pub wt_leq: bool,
    pub same_block: bool,
    /// Whether `B ↓ ⋯ ↓ A`.
    pub downarrow: Reachability,
}

fn weight(s: &str) -> Result<Weight, CliError> {
    Ok(s.parse::<Weight>()?)
}

fn dominant(s: &str) -> Result<DominantWeight, CliError> {
    Ok(s.parse::<DominantWeight>()?)
}

fn render_int_map(m: &BTreeMap<DominantWeight, BigInt>, label: &str) -> String {
    render_terms(m.iter().map(|(k, c)| (format!("{label}[{k}]"), c)), render_int_coeff)
}

fn int_terms(m: &BTreeMap<DominantWeight, BigInt>) -> Vec<IntTerm> {
    m.iter()
        .map(|(w, c)| IntTerm { weight: w.clone(), coeff: c.to_string() })
        .collect()
}

fn q1_column(lambda: &DominantWeight, method: Method, fuel: u64) -> Result<BTreeMap<DominantWeight, BigInt>, CliError> {
    Ok(match method {
        Method::Closed => ucb_q1_closed(lambda),
        Method::Canonical => ucb_with_fuel(lambda, fuel)?.eval_one(),
    })
}

fn to_json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("serializable")
}

fn execute(cli: &Cli) -> Result<(&'static str, serde_json::Value, String), CliError> {
    let fuel = cli.fuel;
    Ok(match &cli.command {
        Command::Ucb { weight: w, q1, method } => {
            let lam = dominant(w)?;
            if *q1 {
                let m = q1_column(&lam, *method, fuel)?;
                ("ucb", to_json(&int_terms(&m)), render_int_map(&m, "F"))
            } else {
                let u = ucb_with_fuel(&lam, fuel)?;
                ("ucb", to_json(&u), u.render("F"))
            }
        }
        Command::Dmat { weight: w, method } => {
            let lam = dominant(w)?;
            let m = q1_column(&lam, *method, fuel)?;
            let text = m.iter().map(|(mu, d)| format!("{mu:?}: {d}")).collect::<Vec<_>>().join("\n");
            ("dmat", to_json(&int_terms(&m)), text)
        }
        Command::Char { kind, weight: w, cutoff } => match kind {
            CharKind::M => {
                let lam = weight(w)?;
                let d = cutoff.ok_or_else(|| CliError::Input("char M requires --cutoff".into()))?;
                let s = ch_verma_truncated(&lam, d);
                ("char", to_json(&s), s.render())
            }
            CharKind::P => {
                let p = schur_p(&weight(w)?)?;
                ("char", to_json(&p), p.render())
            }
            CharKind::E => {
                let p = ch_euler(&dominant(w)?)?;
                ("char", to_json(&p), p.render())
            }
            CharKind::L => {
                let p = ch_irreducible(&dominant(w)?)?;
                ("char", to_json(&p), p.render())
            }
        },
        Command::Crystal { weight: w, i, dual, dominant: dom } => {
            let lam = weight(w)?;
            let data = if *dom {
                let d = crystal_dominant(&DominantWeight::new(lam.clone())?, *i);
                CrystalData {
                    e: d.e.map(DominantWeight::into_weight),
                    f: d.f.map(DominantWeight::into_weight),
                    epsilon: d.epsilon,
                    phi: d.phi,
                }
            } else if *dual {
                crystal_dual(&lam, *i)
            } else {
                crystal_primed(&lam, *i)
            };
            let sig = i_signature(&lam, *i);
            let show = |o: &Option<Weight>| o.as_ref().map_or("none".to_string(), |w| format!("{w:?}"));
            let text = format!(
                "signature: {sig}\ne: {}\nf: {}\nepsilon: {}\nphi: {}",
                show(&data.e),
                show(&data.f),
                data.epsilon,
                data.phi
            );
            let report = CrystalReport { signature: sig.0, data };
            ("crystal", to_json(&report), text)
        }
        Command::Straighten { word } => {
            let w = weight(word)?;
            let v = with_shared(fuel, |s| s.straighten(w.entries()))?;
            ("straighten", to_json(&v), v.render("F"))
        }
        Command::Bruhat { a, b } => {
            let (a, b) = (weight(a)?, weight(b)?);
            if a.n() != b.n() {
                return Err(WeightError::LengthMismatch(a.n(), b.n()).into());
            }
            let report = BruhatReport {
                bruhat_leq: bruhat_leq(&a, &b),
                bruhat_geq: bruhat_leq(&b, &a),
                wt_leq: dominance_leq_p(&wt(&a), &wt(&b)),
                same_block: same_block(&a, &b),
                downarrow: downarrow_reachable(&b, &a, fuel)?,
            };
            if report.downarrow == Reachability::FuelExhausted {
                return Err(CliError::Limit(format!("↓-search exhausted {fuel} steps")));
            }
            let down = match report.downarrow {
                Reachability::Reachable => "reachable",
                _ => "unreachable",
            };
            let text = format!(
                "bruhat_leq: {}\nbruhat_geq: {}\nwt_leq: {}\nsame_block: {}\ndownarrow: {down}",
                report.bruhat_leq, report.bruhat_geq, report.wt_leq, report.same_block
            );
            ("bruhat", to_json(&report), text)
        }
        Command::Bar2 { weight: w, cutoff } => {
            let lam = weight(w)?;
            if lam.n() == 2 && key(&lam) >= *cutoff {
                return Err(CliError::Limit(format!("key of {lam:?} is not below the cutoff {cutoff}")));
            }
            let v = bar_n2(&lam, *cutoff)?;
            let text = format!("{} + (terms with key >= {cutoff})", v.terms.render("N"));
            ("bar2", to_json(&v), text)
        }
        Command::Blocks { weight: w } => {
            let set = lower_block_set(&dominant(w)?);
            let text = set.iter().map(|m| format!("{m:?}")).collect::<Vec<_>>().join("\n");
            ("blocks", to_json(&set), text)
        }
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok((name, value, text)) => {
            let stdout = if cli.json {
                json!({ "command": name, "result": value }).to_string()
            } else {
                text
            };
            Outcome { code: 0, stdout: stdout + "\n", stderr: String::new() }
        }
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
