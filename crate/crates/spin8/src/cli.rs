//! Command-line front end: argument parsing, report assembly and exit codes.
//!
//! Exit status is 0 on success, 1 when a verification finds a mismatch and 2 for
//! malformed input of any kind.

use crate::characters::{chi_s_levi, twist, CharTag, RenderedCharacter};
use crate::ctan::{classes, pole_report, rule_for, sigma_table, CtParams};
use crate::error::{Error, Result};
use crate::gk::{j_factor, j_factor_after, GKResult};
use crate::jacquet::{multiplicity, orbit, stabilizer_size, MultiplicityQuery, WeylScope};
use crate::rational::{fmt_q, parse_q, serde_q, Q};
use crate::residue::{appears, appears_closed_form, enumerate_admissible, parse_profiles, DottedPlaceSet, GlobalConfig};
use crate::rootdata::{EType, RelativeDatum};
use crate::verify::{appendix_b, paper_tables, Report};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification finds a mismatch.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for malformed input.
pub const EXIT_USAGE: i32 = 2;

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "spin8", version, about = "Pole and residue engine for degenerate Eisenstein series on quasi-split Spin8")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Print progress information to stderr.
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

/// Algebra, character and evaluation point shared by most subcommands.
#[derive(Debug, Clone, Args)]
pub struct Target {
    /// Étale cubic algebra: split, fxk or cubic.
    #[arg(long, value_parser = parse_etype)]
    pub algebra: EType,
    /// Character kind, e.g. trivial, quad-f, quad-k-normtrivial, quad-k-normnontrivial, cubic-e.
    #[arg(long = "char", value_parser = parse_tag, default_value = "trivial")]
    pub tag: CharTag,
    /// Evaluation point as an exact rational `p/q`.
    #[arg(long, value_parser = parse_rational)]
    pub s0: Q,
}

/// A parabolic choice.
#[derive(Debug, Clone, Args)]
pub struct Parabolic {
    /// Relative letters of the Levi, comma separated; defaults to the Heisenberg Levi.
    #[arg(long, value_delimiter = ',')]
    pub levi: Option<Vec<u8>>,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coset representatives whose operators have a pole of at least the given order.
    Sigma {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        parabolic: Parabolic,
        #[arg(long, default_value_t = 1)]
        min_order: i64,
    },
    /// Equivalence classes of Σ by twisted character.
    Classes {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        parabolic: Parabolic,
        #[arg(long, default_value_t = 1)]
        min_order: i64,
    },
    /// Gindikin–Karpelevich factor of a Weyl word, optionally applied after another.
    Gk {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        parabolic: Parabolic,
        /// The Weyl word, e.g. w21.
        #[arg(long)]
        word: String,
        /// Apply the factor to the twist of χ by this word.
        #[arg(long)]
        after: Option<String>,
    },
    /// The twisted character w⁻¹·χ at s0 in torus coordinates.
    Twist {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        parabolic: Parabolic,
        #[arg(long)]
        word: String,
    },
    /// Pole order of the Heisenberg Eisenstein series with its class breakdown.
    PoleOrder {
        #[command(flatten)]
        target: Target,
    },
    /// Appearance of residual constituents over a place profile.
    Residue {
        #[command(flatten)]
        target: Target,
        /// JSON list of places `[{id, local_algebra, local_char}]`.
        #[arg(long)]
        profiles: PathBuf,
        /// Largest number of non-spherical places enumerated.
        #[arg(long, default_value_t = 3)]
        bound: usize,
        /// Evaluate one dotted set `{"assignments": {id: label}}` instead of enumerating.
        #[arg(long)]
        dotted: Option<PathBuf>,
    },
    /// Stabilizer, orbit and multiplicities of the inducing character.
    Jacquet {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        parabolic: Parabolic,
        /// Report the multiplicity of the twist of χ by this word.
        #[arg(long)]
        target_word: Option<String>,
    },
    /// Regression suites against reference data.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

/// Verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Normalized Eisenstein series constants and the zeta-limit table.
    AppendixB,
    /// Every reference table and example.
    PaperTables,
}

fn parse_rational(s: &str) -> std::result::Result<Q, String> {
    parse_q(s).map_err(|e| e.to_string())
}

fn parse_etype(s: &str) -> std::result::Result<EType, String> {
    s.parse::<EType>().map_err(|e| e.to_string())
}

fn parse_tag(s: &str) -> std::result::Result<CharTag, String> {
    s.parse::<CharTag>().map_err(|e| e.to_string())
}

fn params(t: &Target, p: &Parabolic) -> Result<CtParams> {
    t.tag.check(t.algebra)?;
    Ok(CtParams {
        etype: t.algebra,
        levi: p.levi.clone().unwrap_or_else(|| t.algebra.heisenberg_levi()),
        tag: t.tag,
        s0: t.s0,
    })
}

/// One row of a Σ report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaRowOut {
    pub word: String,
    pub order: i64,
    pub leading: String,
    pub twisted_char: RenderedCharacter,
    pub class_id: usize,
}

/// Output of `sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub levi: Vec<u8>,
    pub min_order: i64,
    pub words: Vec<String>,
    pub rows: Vec<SigmaRowOut>,
}

/// One class of a `classes` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassOut {
    pub members: Vec<String>,
    pub orders: Vec<i64>,
    pub twisted_char: RenderedCharacter,
    /// `(base, target, u)` with `target = base·u`.
    pub factorization: Vec<[String; 3]>,
    pub cancellation: Option<CancellationOut>,
}

/// A cancellation rule attached to a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellationOut {
    pub net_order: i64,
    pub reason: String,
}

/// Output of `classes`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub levi: Vec<u8>,
    pub min_order: i64,
    pub classes: Vec<ClassOut>,
}

/// Output of `gk`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GkReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub word: String,
    pub after: Option<String>,
    pub product: String,
    pub order: i64,
    pub pole_order: i64,
    pub leading: String,
    pub normalized_holomorphic: bool,
    pub pairings: Vec<String>,
}

/// Output of `twist`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub word: String,
    pub character: RenderedCharacter,
}

/// One class of a pole-order report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleClassOut {
    pub members: Vec<String>,
    pub max_order: i64,
    pub net_order: i64,
    pub reason: Option<String>,
}

/// Output of `pole-order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleOrderReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub order: i64,
    /// False when the class data are derived rather than read off a published table.
    pub tabulated: bool,
    pub classes: Vec<PoleClassOut>,
}

/// One dotted set in a residue report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueCaseOut {
    pub assignments: BTreeMap<String, String>,
    pub appears: bool,
    pub closed_form: bool,
    pub class_sums: Vec<String>,
}

/// Output of `residue`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub bound: usize,
    pub cases: Vec<ResidueCaseOut>,
    /// Oracle and closed form agree on every case.
    pub consistent: bool,
}

/// One orbit entry of a Jacquet report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOut {
    pub representative: String,
    pub character: RenderedCharacter,
    pub multiplicity: usize,
}

/// Output of `jacquet`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JacquetReport {
    pub algebra: EType,
    #[serde(rename = "char")]
    pub tag: CharTag,
    #[serde(with = "serde_q")]
    pub s0: Q,
    pub stabilizer_size: usize,
    pub orbit: Vec<OrbitOut>,
    pub target_word: Option<String>,
    pub multiplicity: Option<usize>,
}

/// Builds the `sigma` report.
pub fn sigma_report(p: &CtParams, min_order: i64) -> Result<SigmaReport> {
    let table = sigma_table(p)?;
    let rows: Vec<SigmaRowOut> = table
        .rows
        .into_iter()
        .filter(|r| r.order >= min_order)
        .map(|r| SigmaRowOut {
            word: r.word.name(),
            order: r.order,
            leading: r.leading.to_string(),
            twisted_char: r.twisted_char,
            class_id: r.class_id,
        })
        .collect();
    Ok(SigmaReport {
        algebra: p.etype,
        tag: p.tag,
        s0: p.s0,
        levi: p.levi.clone(),
        min_order,
        words: rows.iter().map(|r| r.word.clone()).collect(),
        rows,
    })
}

/// Builds the `classes` report.
pub fn classes_report(p: &CtParams, min_order: i64) -> Result<ClassesReport> {
    let cls = classes(p, min_order)?;
    let out = cls
        .into_iter()
        .map(|c| {
            let rule = if p.is_heisenberg() { rule_for(p.etype, p.tag, p.s0, &c) } else { None };
            ClassOut {
                members: c.names(),
                orders: c.orders.clone(),
                twisted_char: c.twisted_char.clone(),
                factorization: c
                    .factorization
                    .iter()
                    .map(|f| [f.base.name(), f.target.name(), f.u.name()])
                    .collect(),
                cancellation: rule.map(|r| CancellationOut { net_order: r.net_order, reason: r.citation.to_string() }),
            }
        })
        .collect();
    Ok(ClassesReport { algebra: p.etype, tag: p.tag, s0: p.s0, levi: p.levi.clone(), min_order, classes: out })
}

fn gk_report(t: &Target, p: &CtParams, word: &str, after: Option<&str>) -> Result<GkReport> {
    let datum = RelativeDatum::get(t.algebra);
    let chi = chi_s_levi(t.algebra, t.tag, &p.levi)?;
    let w = datum.parse(word)?;
    let r: GKResult = match after {
        Some(a) => j_factor_after(&w, &datum.parse(a)?, &chi, t.s0)?,
        None => j_factor(&w, &chi, t.s0)?,
    };
    Ok(GkReport {
        algebra: t.algebra,
        tag: t.tag,
        s0: t.s0,
        word: r.word.name(),
        after: after.map(|a| datum.parse(a).map(|w| datum.reduce(&w).name())).transpose()?,
        product: r.product.to_string(),
        order: r.order,
        pole_order: r.pole_order,
        leading: r.leading.to_string(),
        normalized_holomorphic: r.normalized_holomorphic,
        pairings: r.pairings.iter().map(fmt_q).collect(),
    })
}

fn twist_report(t: &Target, p: &CtParams, word: &str) -> Result<TwistReport> {
    let datum = RelativeDatum::get(t.algebra);
    let chi = chi_s_levi(t.algebra, t.tag, &p.levi)?;
    let w = datum.parse(word)?;
    Ok(TwistReport {
        algebra: t.algebra,
        tag: t.tag,
        s0: t.s0,
        word: datum.reduce(&w).name(),
        character: twist(&w, &chi).at(t.s0).render(),
    })
}

/// Builds the `pole-order` report.
pub fn pole_order_report(t: &Target) -> Result<PoleOrderReport> {
    t.tag.check(t.algebra)?;
    let r = pole_report(t.algebra, t.tag, t.s0)?;
    Ok(PoleOrderReport {
        algebra: t.algebra,
        tag: t.tag,
        s0: t.s0,
        order: r.net_order,
        tabulated: r.tabulated,
        classes: r
            .classes
            .into_iter()
            .map(|c| PoleClassOut {
                members: c.class.names(),
                max_order: c.max_order,
                net_order: c.net_order,
                reason: c.rule.map(|r| r.citation.to_string()),
            })
            .collect(),
    })
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn residue_report(t: &Target, profiles: &PathBuf, bound: usize, dotted: Option<&PathBuf>) -> Result<ResidueReport> {
    t.tag.check(t.algebra)?;
    let places = parse_profiles(&read_file(profiles)?)?;
    let g = GlobalConfig { etype: t.algebra, tag: t.tag, s0: t.s0 };
    let cases: Vec<ResidueCaseOut> = match dotted {
        Some(path) => {
            let d: DottedPlaceSet = serde_json::from_str(&read_file(path)?)
                .map_err(|e| Error::Input(format!("dotted set: {e}")))?;
            let v = appears(&d, &places, &g)?;
            vec![ResidueCaseOut {
                assignments: d.assignments.clone(),
                appears: v.appears,
                closed_form: appears_closed_form(&d, &places, &g)?,
                class_sums: v.class_sums.iter().map(fmt_q).collect(),
            }]
        }
        None => enumerate_admissible(&places, bound, &g)?
            .into_iter()
            .map(|c| ResidueCaseOut {
                assignments: c.dotted.assignments,
                appears: c.appears,
                closed_form: c.closed_form,
                class_sums: c.class_sums.iter().map(fmt_q).collect(),
            })
            .collect(),
    };
    let consistent = cases.iter().all(|c| c.appears == c.closed_form);
    Ok(ResidueReport { algebra: t.algebra, tag: t.tag, s0: t.s0, bound, cases, consistent })
}

fn jacquet_report(t: &Target, p: &CtParams, target_word: Option<&str>) -> Result<JacquetReport> {
    let datum = RelativeDatum::get(t.algebra);
    let chi = chi_s_levi(t.algebra, t.tag, &p.levi)?;
    let o = orbit(&chi, t.s0, &WeylScope::Full)?;
    let (tw, mult) = match target_word {
        Some(w) => {
            let w = datum.parse(w)?;
            let target = twist(&w, &chi).at(t.s0);
            let m = multiplicity(&MultiplicityQuery { inducing: chi.clone(), target, s0: t.s0, scope: WeylScope::Full })?;
            (Some(datum.reduce(&w).name()), Some(m))
        }
        None => (None, None),
    };
    Ok(JacquetReport {
        algebra: t.algebra,
        tag: t.tag,
        s0: t.s0,
        stabilizer_size: stabilizer_size(&chi, t.s0),
        orbit: o
            .into_iter()
            .map(|e| OrbitOut { representative: e.representative.name(), character: e.character, multiplicity: e.multiplicity })
            .collect(),
        target_word: tw,
        multiplicity: mult,
    })
}

fn head(algebra: EType, tag: CharTag, s0: &Q) -> String {
    format!("{algebra} {tag} s0={}", fmt_q(s0))
}

fn sigma_text(r: &SigmaReport) -> String {
    let mut s = format!("{} min-order {}\n", head(r.algebra, r.tag, &r.s0), r.min_order);
    for row in &r.rows {
        s.push_str(&format!(
            "  {:<12} order {}  class {}  {}  leading {}\n",
            row.word, row.order, row.class_id, row.twisted_char.text, row.leading
        ));
    }
    s
}

fn classes_text(r: &ClassesReport) -> String {
    let mut s = format!("{} min-order {}\n", head(r.algebra, r.tag, &r.s0), r.min_order);
    for (i, c) in r.classes.iter().enumerate() {
        s.push_str(&format!("  [{i}] {{{}}}  orders {:?}  {}", c.members.join(", "), c.orders, c.twisted_char.text));
        if let Some(x) = &c.cancellation {
            s.push_str(&format!("  net order {} ({})", x.net_order, x.reason));
        }
        s.push('\n');
    }
    s
}

fn gk_text(r: &GkReport) -> String {
    let after = r.after.as_ref().map_or(String::new(), |a| format!(" after {a}"));
    format!(
        "{}\n  J({}{after}) = {}\n  order {} (pole order {}), leading {}\n  pairings [{}], normalized operators holomorphic: {}\n",
        head(r.algebra, r.tag, &r.s0),
        r.word,
        r.product,
        r.order,
        r.pole_order,
        r.leading,
        r.pairings.join(", "),
        r.normalized_holomorphic
    )
}

fn pole_text(r: &PoleOrderReport) -> String {
    let mut s = format!("{}: pole order {}{}\n", head(r.algebra, r.tag, &r.s0), r.order, if r.tabulated { "" } else { " (derived)" });
    for c in &r.classes {
        s.push_str(&format!("  {{{}}} max {} net {}", c.members.join(", "), c.max_order, c.net_order));
        if let Some(x) = &c.reason {
            s.push_str(&format!(" ({x})"));
        }
        s.push('\n');
    }
    s
}

fn residue_text(r: &ResidueReport) -> String {
    let mut s = format!("{} bound {}\n", head(r.algebra, r.tag, &r.s0), r.bound);
    for c in &r.cases {
        let parts: Vec<String> = c.assignments.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        s.push_str(&format!(
            "  {{{}}} appears {} closed form {} sums [{}]\n",
            parts.join(", "),
            c.appears,
            c.closed_form,
            c.class_sums.join(", ")
        ));
    }
    s.push_str(&format!("{} cases, consistent: {}\n", r.cases.len(), r.consistent));
    s
}

fn jacquet_text(r: &JacquetReport) -> String {
    let mut s = format!("{}: |Stab| = {}, {} distinct twists\n", head(r.algebra, r.tag, &r.s0), r.stabilizer_size, r.orbit.len());
    for e in &r.orbit {
        s.push_str(&format!("  {:<12} ×{}  {}\n", e.representative, e.multiplicity, e.character.text));
    }
    if let (Some(w), Some(m)) = (&r.target_word, r.multiplicity) {
        s.push_str(&format!("multiplicity of {w}⁻¹·χ: {m}\n"));
    }
    s
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("reports serialize") + "\n",
        Format::Text => text(value),
    }
}

fn execute(cfg: &RunConfig) -> Result<(i32, String)> {
    let f = cfg.format;
    Ok(match &cfg.command {
        Command::Sigma { target, parabolic, min_order } => {
            (EXIT_OK, emit(f, &sigma_report(&params(target, parabolic)?, *min_order)?, sigma_text))
        }
        Command::Classes { target, parabolic, min_order } => {
            (EXIT_OK, emit(f, &classes_report(&params(target, parabolic)?, *min_order)?, classes_text))
        }
        Command::Gk { target, parabolic, word, after } => {
            let p = params(target, parabolic)?;
            (EXIT_OK, emit(f, &gk_report(target, &p, word, after.as_deref())?, gk_text))
        }
        Command::Twist { target, parabolic, word } => {
            let r = twist_report(target, &params(target, parabolic)?, word)?;
            (EXIT_OK, emit(f, &r, |r| format!("{}⁻¹·χ at s0={}: {}\n", r.word, fmt_q(&r.s0), r.character.text)))
        }
        Command::PoleOrder { target } => (EXIT_OK, emit(f, &pole_order_report(target)?, pole_text)),
        Command::Residue { target, profiles, bound, dotted } => {
            let r = residue_report(target, profiles, *bound, dotted.as_ref())?;
            let code = if r.consistent { EXIT_OK } else { EXIT_MISMATCH };
            (code, emit(f, &r, residue_text))
        }
        Command::Jacquet { target, parabolic, target_word } => {
            let p = params(target, parabolic)?;
            (EXIT_OK, emit(f, &jacquet_report(target, &p, target_word.as_deref())?, jacquet_text))
        }
        Command::Verify { suite } => {
            let r: Report = match suite {
                Suite::AppendixB => appendix_b()?,
                Suite::PaperTables => paper_tables()?,
            };
            let code = if r.pass { EXIT_OK } else { EXIT_MISMATCH };
            (code, emit(f, &r, Report::to_text))
        }
    })
}

/// Runs the command line given as an argument list (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let msg = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: msg }
            } else {
                Outcome { code, stdout: msg, stderr: String::new() }
            };
        }
    };
    if cfg.verbose {
        eprintln!("spin8: {:?}", cfg.command);
    }
    match execute(&cfg) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
