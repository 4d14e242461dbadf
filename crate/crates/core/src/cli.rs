//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a `check` or `bounds` run that failed, 2 bad
//! input (arguments, facet file, builtin name), 3 no parameter system found.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::artinian::{buchsbaum_star_from, level_quotient_of, reduce_with_seed};
use crate::builtin::builtin;
use crate::complex::SimplicialComplex;
use crate::enumeration::{d_binomial_expansion, HVectorBundle};
use crate::error::{Error, Result};
use crate::homology::{is_buchsbaum, is_cohen_macaulay, is_two_cm, reduced_betti};
use crate::io::read_facet_list;
use crate::linalg::{FiniteField, PrimeField};
use crate::report::{analyse, BoundsReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NO_LSOP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "srtk", version, about = "Socles, level quotients and face-vector bounds of simplicial complexes")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long = "char", global = true, env = "SRTK_CHAR", default_value_t = 32003)]
    characteristic: u32,
    /// Seed for the random linear system of parameters.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of parameter systems to sample (seeds `seed`, `seed+1`, ...).
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    seeds: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full analysis of a complex.
    Report(Input),
    /// Decide one property; exits 1 when it fails.
    Check {
        property: Property,
        #[command(flatten)]
        input: Input,
    },
    /// Face-vector inequalities only.
    Bounds(Input),
    /// d-binomial expansion of b relative to n variables, and b^<d>.
    Expand { b: i64, n: i64, d: i64 },
    /// List the builtin complexes.
    Builtins,
}

#[derive(Args, Debug)]
struct Input {
    /// Facet-list file.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    file: Option<PathBuf>,
    /// Builtin complex, e.g. `torus7` or `simplex_boundary:3`.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Property {
    Cm,
    Buchsbaum,
    #[value(name = "2cm")]
    TwoCm,
    Bstar,
    Level,
}

impl Input {
    fn load(&self) -> Result<(SimplicialComplex, String)> {
        match (&self.builtin, &self.file) {
            (Some(name), _) => Ok((builtin(name)?, name.clone())),
            (None, Some(path)) => Ok((read_facet_list(path)?, path.display().to_string())),
            (None, None) => Err(Error::Parse {
                line: 0,
                message: "no input given".into(),
            }),
        }
    }
}

impl Cli {
    fn seed_list(&self) -> Vec<u64> {
        (0..self.seeds).map(|i| self.seed.wrapping_add(i)).collect()
    }

    fn prime(&self) -> Result<PrimeField> {
        PrimeField::new(self.characteristic)
    }

    fn forms_field(&self) -> Result<FiniteField> {
        FiniteField::generic(self.characteristic)
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::LsopNotFound { .. } => EXIT_NO_LSOP,
        Error::Parse { .. }
        | Error::UnknownBuiltin(_)
        | Error::EmptyInput
        | Error::VertexOutOfRange { .. }
        | Error::NotPrime(_)
        | Error::ExpansionImpossible { .. } => EXIT_INPUT,
        _ => EXIT_FAILED,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    writeln!(out, "{text}").map_err(|e| Error::Invariant(format!("cannot write output: {e}")))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Report(input) => {
            let (complex, id) = input.load()?;
            let report = analyse(&complex, &id, cli.characteristic, &cli.seed_list())?;
            if cli.json {
                emit(out, &report.to_json())?;
            } else {
                emit(out, &render_report(&report))?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { property, input } => {
            let (complex, id) = input.load()?;
            let (pass, detail) = check(cli, *property, &complex)?;
            if cli.json {
                let v = json!({
                    "schema": 1,
                    "complex": id,
                    "p": cli.characteristic,
                    "property": format!("{property:?}").to_lowercase(),
                    "pass": pass,
                    "detail": detail,
                });
                emit(out, &serde_json::to_string_pretty(&v).expect("json value"))?;
            } else {
                emit(out, &format!("{id}: {} over GF({}): {pass}", property_name(*property), cli.characteristic))?;
                if let serde_json::Value::String(s) = &detail {
                    emit(out, s)?;
                }
            }
            Ok(if pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Bounds(input) => {
            let (complex, id) = input.load()?;
            let bundle = HVectorBundle::new(&complex, reduced_betti(&complex, cli.prime()?))?;
            let bounds = BoundsReport::new(&bundle);
            if cli.json {
                let v = json!({ "schema": 1, "complex": id, "p": cli.characteristic, "vectors": bundle, "bounds": bounds });
                emit(out, &serde_json::to_string_pretty(&v).expect("json value"))?;
            } else {
                emit(out, &render_bounds(&id, &bundle, &bounds))?;
            }
            Ok(if bounds.pass() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Expand { b, n, d } => {
            let e = d_binomial_expansion(*b, *n, *d)?;
            if cli.json {
                emit(out, &serde_json::to_string_pretty(&e.to_json()).expect("json value"))?;
            } else {
                emit(out, &format!("{e}"))?;
                emit(out, &format!("{b}^<{d}> = {}", e.growth()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Builtins => {
            for name in crate::builtin::NAMES {
                emit(out, name)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn property_name(p: Property) -> &'static str {
    match p {
        Property::Cm => "Cohen-Macaulay",
        Property::Buchsbaum => "Buchsbaum",
        Property::TwoCm => "2-CM",
        Property::Bstar => "Buchsbaum*",
        Property::Level => "level quotient",
    }
}

fn check(cli: &Cli, property: Property, complex: &SimplicialComplex) -> Result<(bool, serde_json::Value)> {
    let prime = cli.prime()?;
    match property {
        Property::Cm => Ok((is_cohen_macaulay(complex, prime), serde_json::Value::Null)),
        Property::Buchsbaum => Ok((is_buchsbaum(complex, prime), serde_json::Value::Null)),
        Property::TwoCm => Ok((is_two_cm(complex, prime), serde_json::Value::Null)),
        Property::Bstar => {
            if !is_buchsbaum(complex, prime) {
                return Ok((false, json!(format!("not Buchsbaum over {prime}"))));
            }
            let field = cli.forms_field()?;
            let betti = reduced_betti(complex, prime);
            let reports = cli
                .seed_list()
                .par_iter()
                .map(|&s| Ok(buchsbaum_star_from(complex, &reduce_with_seed(complex, field, s)?, &betti)))
                .collect::<Result<Vec<_>>>()?;
            let pass = reports.iter().all(|r| r.holds);
            if cli.json {
                Ok((pass, serde_json::to_value(&reports).expect("plain data")))
            } else {
                let lines: Vec<String> = reports
                    .iter()
                    .map(|r| {
                        let degrees: Vec<String> = r
                            .degrees
                            .iter()
                            .map(|c| format!("{}:{}/{}", c.degree, c.actual, c.expected))
                            .collect();
                        let seed = r.lsop.as_ref().and_then(|l| l.seed).unwrap_or_default();
                        format!("  seed {seed}: socle/expected {}", degrees.join(" "))
                    })
                    .collect();
                Ok((pass, json!(lines.join("\n"))))
            }
        }
        Property::Level => {
            let field = cli.forms_field()?;
            let d = complex.d();
            let quotients = cli
                .seed_list()
                .par_iter()
                .map(|&s| level_quotient_of(&reduce_with_seed(complex, field, s)?, d))
                .collect::<Result<Vec<_>>>()?;
            let pass = quotients.iter().all(|q| q.is_level && q.socle_degree == d);
            if cli.json {
                Ok((pass, serde_json::to_value(&quotients).expect("plain data")))
            } else {
                let lines: Vec<String> = quotients
                    .iter()
                    .map(|q| {
                        format!(
                            "  seed {}: dims {:?}, socle {:?}",
                            q.lsop.seed.unwrap_or_default(),
                            q.dims,
                            q.socle_dims
                        )
                    })
                    .collect();
                Ok((pass, json!(lines.join("\n"))))
            }
        }
    }
}

fn render_bounds(id: &str, bundle: &HVectorBundle, bounds: &BoundsReport) -> String {
    let mut s = format!(
        "{id}: n = {}, d = {}\n  h'  = {:?}\n  h'' = {:?}\n",
        bundle.n, bundle.d, bundle.h_prime, bundle.h_double_prime
    );
    if let Some(c) = &bounds.h_prime_growth {
        s += &format!("  h' growth: {}\n", pass_word(c.pass));
    }
    if let Some(c) = &bounds.reversed_h_double_prime_growth {
        s += &format!("  reversed h'' growth: {}\n", pass_word(c.pass));
    }
    if let Some(b) = &bounds.bstar {
        for r in &b.upper {
            s += &format!(
                "  h'_{} = {} <= min({}, {}): {}\n",
                r.j + 1,
                r.h_prime_next,
                r.growth_branch,
                r.dual_branch,
                pass_word(r.pass)
            );
        }
        for r in &b.lower {
            s += &format!(
                "  h''_{} * {} >= h''_{} ({} * {} >= {}): {}\n",
                b.d - r.j,
                r.beta_top,
                r.j,
                r.h_double_prime_dual,
                r.beta_top,
                r.h_double_prime,
                pass_word(r.pass)
            );
        }
    }
    if let Some(sd) = &bounds.soderberg {
        let dets: Vec<String> = sd.rows.iter().map(|r| format!("{}:{}", r.j, r.det)).collect();
        s += &format!("  Söderberg determinants {}: {}\n", dets.join(" "), pass_word(sd.pass));
    }
    for k in &bounds.skipped {
        s += &format!("  skipped {k}\n");
    }
    s += &format!("overall: {}", pass_word(bounds.pass()));
    s
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

fn render_report(r: &crate::report::AnalysisReport) -> String {
    let c = &r.classification;
    let mut s = format!(
        "{} (n = {}, d = {}, {} facets) over GF({}), forms over {}\n",
        r.complex.id, r.complex.n, r.complex.d, r.complex.num_facets, r.field.p, r.field.forms_field
    );
    s += &format!("  f   = {:?}\n  h   = {:?}\n  h'  = {:?}\n  h'' = {:?}\n", r.f, r.h, r.h_prime, r.h_double_prime);
    let betti: Vec<String> = (0..r.betti.betti.len())
        .map(|i| format!("b{}={}", i as isize - 1, r.betti.betti[i]))
        .collect();
    s += &format!("  betti: {}\n", betti.join(" "));
    s += &format!(
        "  pure {}  CM {}  Buchsbaum {}  2-CM {}  Buchsbaum* {}\n",
        c.pure,
        c.cohen_macaulay,
        c.buchsbaum,
        c.two_cm,
        c.buchsbaum_star.map_or("n/a".to_string(), |b| b.to_string())
    );
    for seed in &r.per_seed {
        s += &format!(
            "  seed {}: reduction {:?}, socle {:?}, slack {:?}\n",
            seed.lsop.seed.unwrap_or_default(),
            seed.reduction_dims,
            seed.socle,
            seed.socle_slack
        );
    }
    s += &format!("  seeds agree: {}, h' matches reduction: {}\n", r.seeds_agree, r.h_prime_matches_reduction);
    let l = &r.level_quotient;
    s += &format!(
        "  level quotient {:?}, socle {:?}, level {}, type {}, matches h'' {}\n",
        l.dims, l.socle, l.is_level, l.cm_type, l.matches_h_double_prime
    );
    s += &format!("  bounds: {}", pass_word(r.bounds.pass()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = run(std::iter::once("srtk").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn expand_prints_growth() {
        let (code, out) = run_str(&["expand", "7", "3", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("1·C(4,2) + C(2,2)"), "{out}");
        assert!(out.contains("= 11"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["check", "bstar", "--builtin", "torus7"]).0, 0);
        assert_eq!(run_str(&["check", "cm", "--builtin", "rp2_6", "--char", "2"]).0, 1);
        assert_eq!(run_str(&["check", "cm", "--builtin", "rp2_6", "--char", "3"]).0, 0);
        assert_eq!(run_str(&["check", "cm", "--builtin", "nope"]).0, 2);
        assert_eq!(run_str(&["check", "cm"]).0, 2);
        assert_eq!(run_str(&["check", "cm", "--builtin", "torus7", "--char", "4"]).0, 2);
        assert_eq!(run_str(&["expand", "-1", "3", "2"]).0, 2);
    }

    #[test]
    fn error_classes() {
        assert_eq!(exit_code(&Error::LsopNotFound { p: 2, attempts: 64 }), EXIT_NO_LSOP);
        assert_eq!(exit_code(&Error::UnknownBuiltin("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::HypothesisFailed("x".into())), EXIT_FAILED);
    }

    #[test]
    fn report_json_is_stable() {
        let args = ["report", "--builtin", "torus7", "--json", "--seeds", "2"];
        let (code, a) = run_str(&args);
        assert_eq!(code, 0);
        assert_eq!(a, run_str(&args).1);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["seeds"], json!([0, 1]));
    }
}
