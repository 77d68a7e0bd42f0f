//! The `qloop` command line.
//!
//! Exit codes: 0 on success (predicates print `true`/`false`), 2 on a parse
//! error, 3 on a domain error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use qloop_core::braid::twist_by_w0;
use qloop_core::{
    blocks_linked, braid_act_word, builtin_table, cone_check, elliptic_class, fundamental_char, lroot_decompose,
    parse_lcharacter, parse_lweight, sl2_eval_char, simple_lroot, tensor_char, trivial_sets, verify_all, verify_suite,
    Error, LCharacter, LWeight, LieType, MultTable, Report, Sign, SpectralParam, Weight, DEFAULT_SEED,
};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "qloop", version, about = "Exact ℓ-weight, block and q-character computations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, clap::Args)]
pub struct Param {
    /// Orbit symbol of the spectral parameter.
    #[arg(long, default_value = "a")]
    pub orbit: String,
    /// Exponent `k` in `a q^k`.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub exp: i64,
}

impl Param {
    fn get(&self) -> Result<SpectralParam, Error> {
        SpectralParam::new(&self.orbit, self.exp)
    }
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// The simple ℓ-root `alpha_{i, a q^k}`.
    Alpha {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        node: usize,
        #[command(flatten)]
        param: Param,
    },
    /// Apply `T_w` for a word `w` (comma separated, rightmost letter first).
    Act {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, default_value = "")]
        word: String,
        lweight: String,
    },
    /// `T_{w0}` on a dominant ℓ-weight.
    TwistW0 {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        lweight: String,
    },
    /// Decompose an ℓ-weight in the ℓ-root lattice.
    Decompose {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, default_value = "any")]
        sign: String,
        lweight: String,
    },
    /// Whether `pi` lies in `omega Q_q^-`.
    Cone {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        omega: String,
        pi: String,
    },
    /// The elliptic character (block) of an ℓ-weight.
    Block {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        lweight: String,
    },
    /// Whether two dominant ℓ-weights lie in the same block.
    Linked {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        first: String,
        second: String,
    },
    /// The block-trivial configurations and their `Q_q^+` certificates.
    TrivialSets {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[command(flatten)]
        param: Param,
    },
    /// The ℓ-character of a fundamental representation.
    QcharFund {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long)]
        node: usize,
        #[command(flatten)]
        param: Param,
        /// Dominant multiplicities, e.g. `0,1,0,0=1;0,0,0,0=5`.
        #[arg(long)]
        table: Option<String>,
    },
    /// The `sl_2` evaluation module `V(omega_a(m))`.
    QcharSl2 {
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        param: Param,
    },
    /// The product of two ℓ-characters.
    QcharTensor { first: String, second: String },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// Failure kinds, mapped to exit codes.
enum Failure {
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidType(_) | Error::UnknownSuite(_) => Failure::Parse(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Run the command line on `args` (including the program name).
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Parse(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            3
        }
    }
}

fn lie_type(s: &str) -> Result<LieType, Error> {
    s.parse()
}

fn io(e: std::io::Error) -> Failure {
    Failure::Domain(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, format: Format, text: impl std::fmt::Display, value: serde_json::Value) -> Outcome {
    match format {
        Format::Text => writeln!(out, "{text}").map_err(io)?,
        Format::Json => writeln!(out, "{value}").map_err(io)?,
    }
    Ok(0)
}

fn emit_lweight(out: &mut dyn Write, format: Format, w: &LWeight) -> Outcome {
    emit(out, format, w, json!({ "lweight": w.to_string(), "factors": w.to_json()["factors"] }))
}

fn emit_bool(out: &mut dyn Write, format: Format, b: bool) -> Outcome {
    emit(out, format, b, json!(b))
}

fn emit_char(out: &mut dyn Write, format: Format, c: &LCharacter) -> Outcome {
    emit(out, format, c, c.to_json())
}

fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad word letter `{t}`") }))
        .collect()
}

/// `w=m;w=m`, each weight a comma separated list of integers.
pub fn parse_table(s: &str, rank: usize) -> Result<MultTable, Error> {
    let bad = |msg: String| Error::Parse { pos: 0, msg };
    let mut table = MultTable::new();
    for entry in s.split(';').map(str::trim).filter(|e| !e.is_empty()) {
        let (w, m) = entry.split_once('=').ok_or_else(|| bad(format!("table entry `{entry}` lacks `=`")))?;
        let coords: Vec<i64> = w
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|c| c.trim().parse().map_err(|_| bad(format!("bad weight `{w}`"))))
            .collect::<Result<_, _>>()?;
        if coords.len() != rank {
            return Err(Error::RankMismatch(coords.len(), rank));
        }
        let m = m.trim().parse().map_err(|_| bad(format!("bad multiplicity `{m}`")))?;
        table.insert(Weight(coords), m);
    }
    Ok(table)
}

fn print_reports(out: &mut dyn Write, format: Format, reports: &[Report]) -> Outcome {
    let ok = reports.iter().all(Report::passed);
    match format {
        Format::Json => {
            let v: Vec<_> = reports.iter().map(Report::to_json).collect();
            writeln!(out, "{}", serde_json::Value::Array(v)).map_err(io)?;
        }
        Format::Text => {
            for r in reports {
                let failed = r.failures().count();
                let status = if failed == 0 { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {:<16} {}/{}", r.suite, r.checks.len() - failed, r.checks.len()).map_err(io)?;
                for c in r.failures() {
                    writeln!(out, "  {}: expected {} got {}", c.id, c.expected, c.actual).map_err(io)?;
                }
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let f = cli.format;
    match &cli.verb {
        Verb::Alpha { ty, node, param } => emit_lweight(out, f, &simple_lroot(lie_type(ty)?, *node, param.get()?)?),
        Verb::Act { ty, word, lweight } => {
            let res = braid_act_word(lie_type(ty)?, &parse_word(word)?, &parse_lweight(lweight)?)?;
            if !res.reduced {
                writeln!(err, "warning: word {word} is not reduced").map_err(io)?;
            }
            emit_lweight(out, f, &res.lweight)
        }
        Verb::TwistW0 { ty, lweight } => emit_lweight(out, f, &twist_by_w0(lie_type(ty)?, &parse_lweight(lweight)?)?),
        Verb::Decompose { ty, sign, lweight } => {
            let sign: Sign = sign.parse()?;
            match lroot_decompose(lie_type(ty)?, &parse_lweight(lweight)?, sign)? {
                Some(d) => emit(out, f, &d, d.to_json(sign)),
                None => emit(out, f, "not in lattice", json!({ "in_lattice": false, "sign": sign.to_string() })),
            }
        }
        Verb::Cone { ty, omega, pi } => {
            emit_bool(out, f, cone_check(lie_type(ty)?, &parse_lweight(omega)?, &parse_lweight(pi)?)?)
        }
        Verb::Block { ty, lweight } => {
            let c = elliptic_class(lie_type(ty)?, &parse_lweight(lweight)?)?;
            emit(out, f, &c, c.to_json())
        }
        Verb::Linked { ty, first, second } => {
            emit_bool(out, f, blocks_linked(lie_type(ty)?, &parse_lweight(first)?, &parse_lweight(second)?)?)
        }
        Verb::TrivialSets { ty, param } => {
            let t = lie_type(ty)?;
            let (mut lines, mut values) = (Vec::new(), Vec::new());
            for s in trivial_sets(t, &param.get()?) {
                let w = s.lweight();
                let cert = lroot_decompose(t, &w, Sign::Plus)?;
                let shown = cert.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
                lines.push(format!("{}: {w} = {shown}", s.label));
                values.push(json!({
                    "label": s.label,
                    "lweight": w.to_string(),
                    "certificate": cert.map(|d| d.to_json(Sign::Plus)),
                }));
            }
            emit(out, f, lines.join("\n"), json!(values))
        }
        Verb::QcharFund { ty, node, param, table } => {
            let t = lie_type(ty)?;
            t.check_node(*node)?;
            let table = match table {
                Some(s) => parse_table(s, t.rank())?,
                None => builtin_table(t, *node).ok_or_else(|| {
                    Error::Unsupported(format!("node {node} of {t} without --table"))
                })?,
            };
            emit_char(out, f, &fundamental_char(t, *node, &param.get()?, &table)?)
        }
        Verb::QcharSl2 { m, param } => emit_char(out, f, &sl2_eval_char(&param.get()?, *m)),
        Verb::QcharTensor { first, second } => {
            emit_char(out, f, &tensor_char(&parse_lcharacter(first)?, &parse_lcharacter(second)?))
        }
        Verb::Verify { suite, seed } => {
            let reports = if suite == "all" { verify_all(*seed)? } else { vec![verify_suite(suite, *seed)?] };
            print_reports(out, f, &reports)
        }
    }
}
