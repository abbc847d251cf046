//! Command-line front end. Normal output goes to `out`, diagnostics to
//! `err`; [`run`] returns the process exit code:
//!
//! * 0: success, every checked claim held;
//! * 1: usage or input error;
//! * 2: a checked claim was falsified (sweep hit, method disagreement, ...).

use std::collections::BTreeSet;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify, DEFAULT_PERIOD_CAP};
use crate::divisibility::{
    corollary1_sweep, table1_reference, trinomial_multiples, verify_table1, TrinomialHit,
};
use crate::error::{Error, Result};
use crate::lfsr::{prop2_check, Bits, LfsrSequence};
use crate::maxweight::MaxWeightPoly;
use crate::oa::{strength_report, Method, DEFAULT_T_MAX};
use crate::poly::Poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FALSIFIED: i32 = 2;

/// A polynomial argument: plain text/hex, or the `mw:m,l` shorthand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyArg {
    Plain(Poly),
    MaxWeight(MaxWeightPoly),
}

impl PolyArg {
    pub fn poly(&self) -> Poly {
        match self {
            PolyArg::Plain(p) => p.clone(),
            PolyArg::MaxWeight(mw) => mw.expand(),
        }
    }

    pub fn max_weight(&self) -> Option<MaxWeightPoly> {
        match self {
            PolyArg::Plain(p) => MaxWeightPoly::from_poly(p),
            PolyArg::MaxWeight(mw) => Some(*mw),
        }
    }
}

/// Accepts `x^5+x^4+1`, `0x31` or `mw:7,2`.
pub fn parse_poly_arg(s: &str) -> Result<PolyArg> {
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let Some(body) = t.strip_prefix("mw:") else {
        return t.parse().map(PolyArg::Plain).map_err(|e| match e {
            Error::Parse { token, offset, reason } => Error::Parse {
                token,
                offset: offset + lead,
                reason,
            },
            other => other,
        });
    };
    let base = lead + 3;
    let (m_str, l_str) = body.split_once(',').ok_or_else(|| Error::Parse {
        token: body.to_string(),
        offset: base,
        reason: "expected mw:m,l",
    })?;
    let number = |text: &str, offset: usize| {
        text.trim().parse::<u32>().map_err(|_| Error::Parse {
            token: text.to_string(),
            offset,
            reason: "expected a decimal integer",
        })
    };
    let m = number(m_str, base)?;
    let l = number(l_str, base + m_str.len() + 1)?;
    MaxWeightPoly::new(m, l).map(PolyArg::MaxWeight)
}

fn poly_value(s: &str) -> std::result::Result<PolyArg, String> {
    parse_poly_arg(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StreamFormat {
    Text,
    Hex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Dual,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Direct => Method::Direct,
            MethodArg::Dual => Method::Dual,
            MethodArg::Both => Method::Both,
        }
    }
}

/// GF(2) polynomial tools: trinomial multiples of maximum-weight
/// polynomials, shift-register sequences and orthogonal-array strength.
///
/// Polynomials are given as text (x^5+x^4+1), hex with bit i = x^i (0x31),
/// or mw:m,l for the maximum-weight polynomial of degree m missing x^l.
///
/// Set MWPOLY_LOG=error|info|debug for diagnostics on standard error.
#[derive(Debug, Clone, Parser)]
#[command(name = "mwpoly", version)]
pub struct RunConfig {
    /// Seed for randomized choices such as `lfsr --seed random`.
    #[arg(long, global = true, default_value_t = 0)]
    pub rng_seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Irreducibility, primitivity and period as a JSON object.
    Classify {
        #[arg(long, value_parser = poly_value)]
        poly: PolyArg,
        /// Step budget for the brute-force period search.
        #[arg(long, default_value_t = DEFAULT_PERIOD_CAP)]
        period_cap: u64,
    },
    /// Trinomial multiples x^a+x^b+1 (0 < b < a <= max-deg) of a polynomial.
    ///
    /// Only trinomials with constant term 1 are listed: since f(0) = 1 is
    /// required, every trinomial multiple is x^c times one of these.
    Search {
        #[arg(long, value_parser = poly_value)]
        poly: PolyArg,
        #[arg(long)]
        max_deg: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Exhaustive trinomial multiples of degree <= 2m for maximum-weight
    /// polynomials of degree 3, 5 and 7, checked against the exception table.
    Table1 {
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Checks that no maximum-weight polynomial of odd degree m in
    /// [m-min, m-max] (m-min > 7) divides a trinomial of degree <= 2m.
    Corollary1 {
        #[arg(long)]
        m_min: u32,
        #[arg(long)]
        m_max: u32,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Shift-register sequence with the given characteristic polynomial.
    Lfsr {
        #[arg(long, value_parser = poly_value)]
        poly: PolyArg,
        /// `impulse`, `random`, or hex with bit i = a_i.
        #[arg(long, default_value = "impulse")]
        seed: String,
        #[arg(long)]
        len: usize,
        /// Also check a_(n+m) = a_(n-1) + a_(n-1+l) + a_(n+l) for n in 1..=4m.
        #[arg(long)]
        check_prop2: bool,
        #[arg(long, value_enum, default_value_t = StreamFormat::Text)]
        format: StreamFormat,
    },
    /// Orthogonal-array strength of the window code C_n^f.
    Oa {
        #[arg(long, value_parser = poly_value)]
        poly: PolyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, default_value_t = DEFAULT_T_MAX)]
        t_max: usize,
        /// `impulse`, `random`, or hex with bit i = a_i.
        #[arg(long, default_value = "impulse")]
        seed: String,
    },
    /// Lists MW(m, l) for l = 1..m-1.
    MwEnum {
        #[arg(long)]
        m: u32,
        /// Add irreducibility and primitivity columns.
        #[arg(long)]
        classify: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Jobs {
    /// Worker threads for the sweep.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
}

/// Parses arguments and runs; usage errors exit with 1 instead of clap's 2.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            code
        }
    }
}

#[derive(Debug)]
enum Failure {
    Input(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(config, out, err) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let diag = serde_json::json!({ "error": e.to_string() });
            let _ = writeln!(err, "{diag}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "{}", serde_json::json!({ "error": e.to_string() }));
            EXIT_USAGE
        }
    }
}

fn parse_seed(spec: &str, m: usize, rng_seed: u64) -> Result<Bits> {
    match spec {
        "impulse" => Ok(Bits::impulse(m)),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            Ok(Bits::random_nonzero(m, &mut rng))
        }
        _ => {
            let p = Poly::from_hex(spec)?;
            if p.degree() >= m as isize {
                return Err(Error::SeedLength {
                    expected: m,
                    got: p.degree() as usize + 1,
                });
            }
            let bools: Vec<bool> = (0..m).map(|i| p.coeff(i)).collect();
            Ok(Bits::from_bools(&bools))
        }
    }
}

#[derive(Serialize)]
struct HitRow<'a> {
    g: &'a Poly,
    f: &'a Poly,
    h: &'a Poly,
    deg_g: isize,
    weight_h: usize,
}

fn write_hits(out: &mut dyn Write, hits: &[TrinomialHit], format: TableFormat) -> std::io::Result<()> {
    match format {
        TableFormat::Csv => {
            writeln!(out, "g,f,h,deg_g,weight_h")?;
            for hit in hits {
                writeln!(out, "{},{},{},{},{}", hit.g, hit.f, hit.h, hit.g.degree(), hit.h.weight())?;
            }
        }
        TableFormat::Json => {
            let rows: Vec<HitRow> = hits
                .iter()
                .map(|hit| HitRow {
                    g: &hit.g,
                    f: &hit.f,
                    h: &hit.h,
                    deg_g: hit.g.degree(),
                    weight_h: hit.h.weight(),
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
    }
    Ok(())
}

fn keys(hits: &[TrinomialHit]) -> BTreeSet<(String, String)> {
    hits.iter().map(|h| (h.g.to_string(), h.f.to_string())).collect()
}

#[derive(Serialize)]
struct MwRow {
    m: u32,
    l: u32,
    poly: Poly,
    hex: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    primitive: Option<bool>,
}

#[derive(Serialize)]
struct LfsrOutput {
    characteristic: Poly,
    seed: String,
    len: usize,
    stream: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    prop2: Option<bool>,
}

fn dispatch(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &config.command {
        Command::Classify { poly, period_cap } => {
            let report = classify(&poly.poly(), *period_cap)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(EXIT_OK)
        }
        Command::Search { poly, max_deg, format } => {
            let hits = trinomial_multiples(&poly.poly(), *max_deg)?;
            write_hits(out, &hits, *format)?;
            Ok(EXIT_OK)
        }
        Command::Table1 { format } => {
            let found = verify_table1();
            write_hits(out, &found, *format)?;
            let expected = table1_reference();
            let (got, want) = (keys(&found), keys(&expected));
            if got != want {
                for (g, f) in got.difference(&want) {
                    writeln!(err, "{}", serde_json::json!({ "unexpected": { "g": g, "f": f } }))?;
                }
                for (g, f) in want.difference(&got) {
                    writeln!(err, "{}", serde_json::json!({ "missing": { "g": g, "f": f } }))?;
                }
                return Ok(EXIT_FALSIFIED);
            }
            Ok(EXIT_OK)
        }
        Command::Corollary1 { m_min, m_max, jobs } => {
            let report = corollary1_sweep(*m_min, *m_max, jobs.jobs as usize)?;
            log::info!(
                "checked {} pairs in {:.3}s",
                report.pairs_checked,
                report.elapsed.as_secs_f64()
            );
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if report.falsified() { EXIT_FALSIFIED } else { EXIT_OK })
        }
        Command::Lfsr { poly, seed, len, check_prop2, format } => {
            let f = poly.poly();
            let m = f.deg().filter(|&m| m >= 1).ok_or(Error::DegreeTooSmall {
                op: "lfsr",
                min: 1,
                degree: f.degree(),
            })?;
            let seed_bits = parse_seed(seed, m, config.rng_seed)?;
            let seq = LfsrSequence::generate(&f, &seed_bits, *len)?;
            let prop2 = if *check_prop2 {
                let mw = poly.max_weight().ok_or_else(|| {
                    Error::InvalidArgument(format!("{f} is not a maximum-weight polynomial"))
                })?;
                Some(prop2_check(&mw, &seed_bits, 4 * m)?)
            } else {
                None
            };
            let encode = |b: &Bits| match format {
                StreamFormat::Text => b.to_text(),
                StreamFormat::Hex => b.to_hex(),
            };
            let report = LfsrOutput {
                characteristic: f.clone(),
                seed: encode(&seed_bits),
                len: *len,
                stream: encode(seq.stream()),
                prop2,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(if prop2 == Some(false) { EXIT_FALSIFIED } else { EXIT_OK })
        }
        Command::Oa { poly, n, method, t_max, seed } => {
            let f = poly.poly();
            let m = f.deg().unwrap_or(0);
            let seed_bits = parse_seed(seed, m, config.rng_seed)?;
            let report = strength_report(&f, *n, &seed_bits, (*method).into(), *t_max)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            if !report.agree() {
                writeln!(
                    err,
                    "{}",
                    serde_json::json!({ "disagreement": {
                        "strength_direct": report.strength_direct,
                        "strength_dual": report.strength_dual,
                        "t_max": report.t_max,
                    }})
                )?;
                return Ok(EXIT_FALSIFIED);
            }
            Ok(EXIT_OK)
        }
        Command::MwEnum { m, classify: with_class, format } => {
            let mut rows = Vec::new();
            for mw in MaxWeightPoly::enumerate(*m)? {
                let poly = mw.expand();
                let (irreducible, primitive) = if *with_class {
                    let r = classify(&poly, DEFAULT_PERIOD_CAP)?;
                    (Some(r.irreducible), Some(r.primitive))
                } else {
                    (None, None)
                };
                rows.push(MwRow {
                    m: mw.m(),
                    l: mw.l(),
                    hex: poly.to_hex(),
                    poly,
                    irreducible,
                    primitive,
                });
            }
            match format {
                TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
                TableFormat::Csv => {
                    let extra = if *with_class { ",irreducible,primitive" } else { "" };
                    writeln!(out, "m,l,poly,hex{extra}")?;
                    for r in &rows {
                        write!(out, "{},{},{},{}", r.m, r.l, r.poly, r.hex)?;
                        if let (Some(i), Some(p)) = (r.irreducible, r.primitive) {
                            write!(out, ",{i},{p}")?;
                        }
                        writeln!(out)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arg_forms() {
        let cubic: Poly = "x^3+x+1".parse().unwrap();
        assert_eq!(parse_poly_arg("mw:3,2").unwrap().poly(), cubic);
        assert_eq!(parse_poly_arg("0xB").unwrap().poly(), cubic);
        assert_eq!(parse_poly_arg("x^2 + x^2 + 1").unwrap().poly(), Poly::one());
        assert_eq!(
            parse_poly_arg("mw:7,2").unwrap(),
            PolyArg::MaxWeight(MaxWeightPoly::new(7, 2).unwrap())
        );
    }

    #[test]
    fn poly_arg_errors_carry_offsets() {
        assert_eq!(
            parse_poly_arg("mw:7,z"),
            Err(Error::Parse {
                token: "z".into(),
                offset: 5,
                reason: "expected a decimal integer"
            })
        );
        assert!(matches!(parse_poly_arg("mw:7"), Err(Error::Parse { offset: 3, .. })));
        assert!(matches!(parse_poly_arg("  x^3+q"), Err(Error::Parse { offset: 6, .. })));
        assert!(matches!(parse_poly_arg("mw:8,1"), Err(Error::MaxWeightDomain { .. })));
    }

    #[test]
    fn print_parse_is_idempotent() {
        for s in ["1+x+x^3", "x^2+x^2+1", "0x1f", "x^70+x^3+x^70+x", "mw:9,4"] {
            let once = parse_poly_arg(s).unwrap().poly().to_string();
            let twice = parse_poly_arg(&once).unwrap().poly().to_string();
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("impulse", 3, 0).unwrap().to_text(), "001");
        assert_eq!(parse_seed("0x3", 3, 0).unwrap().to_text(), "110");
        assert!(parse_seed("0x8", 3, 0).is_err());
        assert_eq!(parse_seed("random", 5, 9).unwrap(), parse_seed("random", 5, 9).unwrap());
    }
}
