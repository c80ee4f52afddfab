//! The `gtsg` command line: closed forms for GT(n, k) next to a generic
//! numerical-semigroup oracle, plus a sweep that compares the two.
//!
//! [`run`] does all the work and returns the text to print with an exit code,
//! so the binary is a thin wrapper and tests can drive commands directly.

pub mod render;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};
use thiserror::Error;

use gtsg_core::{GeneratorSet, GtParams, OracleError, ThabitError};
use render::{csv_line, json_line, nat, nat_list, KeyValues};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest `s_0` (or oracle modulus) enumerated without `--force`.
pub const DEFAULT_S0_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "gtsg",
    version,
    about = "Frobenius problem for generalized Thabit numerical semigroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest s0 that is enumerated without --force.
    #[arg(long, global = true, env = "GTSG_S0_CAP", default_value_t = DEFAULT_S0_CAP)]
    pub s0_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Args)]
pub struct Params {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub k: u32,
}

impl Params {
    fn gt(self) -> Result<GtParams, CliError> {
        Ok(GtParams::new(self.n, self.k)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimal generators, case, maximal Apéry element, Frobenius number, genus.
    Info {
        #[command(flatten)]
        params: Params,
        /// Compute the genus even when s0 exceeds the cap.
        #[arg(long)]
        force: bool,
    },
    /// The Apéry set of s0 in ascending order.
    Apery {
        #[command(flatten)]
        params: Params,
        /// Show the coefficient sequence of each element.
        #[arg(long)]
        with_coeffs: bool,
        #[arg(long)]
        force: bool,
    },
    /// Closed-form Frobenius number; never enumerates, so there is no cap.
    Frobenius {
        #[command(flatten)]
        params: Params,
    },
    /// Formula-free computations on an explicit generator list.
    Oracle {
        /// Comma-separated generators.
        #[arg(long, value_delimiter = ',', required = true, value_parser = parse_nat)]
        gens: Vec<BigUint>,
        #[arg(long)]
        force: bool,
        #[command(subcommand)]
        query: Query,
    },
    /// Compare closed forms with the oracle on every (n, k) with s0 ≤ --s0-max.
    Verify {
        #[arg(long, default_value_t = 200_000)]
        s0_max: u64,
        /// Largest n; by default the largest n with s0(n, 1) ≤ s0-max.
        #[arg(long)]
        n_max: Option<u32>,
        /// Largest k; by default the largest k with s0(1, k) ≤ s0-max.
        #[arg(long)]
        k_max: Option<u32>,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Query {
    /// Apéry set with respect to --x (default: the smallest generator).
    Apery {
        #[arg(long, value_parser = parse_nat)]
        x: Option<BigUint>,
    },
    Frobenius,
    Genus,
    Membership {
        #[arg(value_parser = parse_nat)]
        value: BigUint,
    },
    /// The minimal system of generators.
    Minimal,
}

fn parse_nat(s: &str) -> Result<BigUint, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Thabit(#[from] ThabitError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(
        "{what} = {value} exceeds the enumeration cap {cap}; pass --force or raise GTSG_S0_CAP"
    )]
    TooLarge {
        what: &'static str,
        value: BigUint,
        cap: u64,
    },
    #[error("{0}")]
    Usage(String),
}

/// What a successful command prints, and the exit code to leave with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: EXIT_OK,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let fmt = cli.format;
    let cap = cli.s0_cap;
    match &cli.command {
        Command::Info { params, force } => info(params.gt()?, *force, cap, fmt).map(Outcome::ok),
        Command::Apery {
            params,
            with_coeffs,
            force,
        } => apery(params.gt()?, *with_coeffs, *force, cap, fmt).map(Outcome::ok),
        Command::Frobenius { params } => Ok(Outcome::ok(frobenius(params.gt()?, fmt))),
        Command::Oracle { gens, force, query } => {
            oracle(gens, query, *force, cap, fmt).map(Outcome::ok)
        }
        Command::Verify {
            s0_max,
            n_max,
            k_max,
            jobs,
        } => {
            let config = verify::VerifyConfig {
                s0_max: *s0_max,
                n_max: *n_max,
                k_max: *k_max,
                jobs: *jobs,
            };
            let report = verify::run(&config)?;
            let code = if report.all_match() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok(Outcome {
                stdout: render::verify_report(&report, fmt),
                code,
            })
        }
    }
}

fn check_cap(what: &'static str, value: &BigUint, cap: u64, force: bool) -> Result<(), CliError> {
    if force || *value <= BigUint::from(cap) {
        Ok(())
    } else {
        Err(CliError::TooLarge {
            what,
            value: value.clone(),
            cap,
        })
    }
}

fn info(p: GtParams, force: bool, cap: u64, fmt: Format) -> Result<String, CliError> {
    let s0 = p.s0();
    let gens = p.generators();
    let genus = if force || s0 <= BigUint::from(cap) {
        Some(p.genus_closed()?)
    } else {
        None
    };

    let mut kv = KeyValues::default();
    kv.push("n", json!(p.n()), p.n().to_string());
    kv.push("k", json!(p.k()), p.k().to_string());
    kv.push("case", json!(p.case().as_str()), p.case().to_string());
    kv.push("s0", nat(&s0), s0.to_string());
    kv.push("delta", json!(p.delta()), p.delta().to_string());
    kv.push(
        "e",
        json!(p.embedding_dimension()),
        p.embedding_dimension().to_string(),
    );
    kv.push(
        "generators",
        nat_list(&gens),
        p.minimal_generating_set().to_string(),
    );
    kv.push("max_apery", nat(&p.max_apery()), p.max_apery().to_string());
    kv.push(
        "frobenius",
        nat(&p.frobenius_closed()),
        p.frobenius_closed().to_string(),
    );
    match &genus {
        Some(g) => kv.push("genus", nat(g), g.to_string()),
        None => kv.push(
            "genus",
            Value::Null,
            format!("skipped (s0 above cap {cap}; use --force)"),
        ),
    }

    Ok(match fmt {
        Format::Json => json_line(&kv.to_json()),
        Format::Csv => kv.to_csv(),
        Format::Text => {
            let mut out = format!("{p}\n");
            for (key, text) in kv.text_rows() {
                let label = match key {
                    "frobenius" => "F",
                    "genus" => "g",
                    "max_apery" => "max Ap",
                    other => other,
                };
                out.push_str(&format!("{label} = {text}\n"));
            }
            out
        }
    })
}

fn apery(
    p: GtParams,
    with_coeffs: bool,
    force: bool,
    cap: u64,
    fmt: Format,
) -> Result<String, CliError> {
    let s0 = p.s0();
    check_cap("s0", &s0, cap, force)?;
    let entries = p.apery_entries();

    Ok(match fmt {
        Format::Text => {
            let mut out = String::new();
            for (value, coeffs) in &entries {
                if with_coeffs {
                    out.push_str(&format!("{value}  ({coeffs})\n"));
                } else {
                    out.push_str(&format!("{value}\n"));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = csv_line(&["residue", "value", "coeffs"]);
            for (value, coeffs) in &entries {
                let residue = (value % &s0).to_string();
                out.push_str(&csv_line(&[
                    &residue,
                    &value.to_string(),
                    &coeffs.to_string(),
                ]));
            }
            out
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("n".into(), json!(p.n()));
            obj.insert("k".into(), json!(p.k()));
            obj.insert("s0".into(), nat(&s0));
            obj.insert("count".into(), json!(entries.len()));
            let values: Vec<BigUint> = entries.iter().map(|(v, _)| v.clone()).collect();
            obj.insert("values".into(), nat_list(&values));
            if with_coeffs {
                let coeffs = entries
                    .iter()
                    .map(|(_, c)| Value::String(c.to_string()))
                    .collect();
                obj.insert("coeffs".into(), Value::Array(coeffs));
            }
            json_line(&Value::Object(obj))
        }
    })
}

fn frobenius(p: GtParams, fmt: Format) -> String {
    let mut kv = KeyValues::default();
    kv.push("n", json!(p.n()), p.n().to_string());
    kv.push("k", json!(p.k()), p.k().to_string());
    kv.push("max_apery", nat(&p.max_apery()), p.max_apery().to_string());
    kv.push(
        "frobenius",
        nat(&p.frobenius_closed()),
        p.frobenius_closed().to_string(),
    );
    match fmt {
        Format::Json => json_line(&kv.to_json()),
        Format::Csv => kv.to_csv(),
        Format::Text => format!("{p}\nF = {}\n", p.frobenius_closed()),
    }
}

fn oracle(
    gens: &[BigUint],
    query: &Query,
    force: bool,
    cap: u64,
    fmt: Format,
) -> Result<String, CliError> {
    let set = GeneratorSet::new(gens.iter().cloned())?;
    let modulus = match query {
        Query::Apery { x: Some(x) } => x.clone(),
        _ => set.smallest().clone(),
    };
    check_cap("modulus", &modulus, cap, force)?;

    let mut kv = KeyValues::default();
    kv.push("generators", nat_list(set.gens()), set.to_string());
    match query {
        Query::Apery { .. } => {
            let table = set.apery_set(&modulus)?;
            if fmt == Format::Csv {
                let mut out = csv_line(&["residue", "value"]);
                for (r, w) in table.entries().iter().enumerate() {
                    out.push_str(&csv_line(&[&r.to_string(), &w.to_string()]));
                }
                return Ok(out);
            }
            let values = table.sorted_values();
            let text = values
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            kv.push("modulus", nat(&modulus), modulus.to_string());
            kv.push("apery", nat_list(&values), format!("{{{text}}}"));
        }
        Query::Frobenius => {
            let f = set.frobenius()?;
            kv.push("frobenius", Value::String(f.to_string()), f.to_string());
        }
        Query::Genus => {
            let g = set.genus()?;
            kv.push("genus", nat(&g), g.to_string());
        }
        Query::Membership { value } => {
            let member = set.is_member(value)?;
            kv.push("value", nat(value), value.to_string());
            kv.push("member", Value::Bool(member), member.to_string());
        }
        Query::Minimal => {
            let minimal = set.minimal_generators()?;
            kv.push("minimal", nat_list(minimal.gens()), minimal.to_string());
            kv.push("e", json!(minimal.len()), minimal.len().to_string());
        }
    }

    Ok(match fmt {
        Format::Json => json_line(&kv.to_json()),
        Format::Csv => kv.to_csv(),
        Format::Text => {
            let mut out = String::new();
            for (key, text) in kv.text_rows() {
                let label = match key {
                    "frobenius" => "F",
                    "genus" => "g",
                    "apery" => "Ap",
                    other => other,
                };
                out.push_str(&format!("{label} = {text}\n"));
            }
            out
        }
    })
}
