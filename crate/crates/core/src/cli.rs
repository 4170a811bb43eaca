//! Command-line front end. Every command writes one document to stdout and
//! diagnostics to stderr. Exit codes: 0 success, 2 usage or parse error,
//! 3 unsupported surface, 4 orbit cap exceeded, 1 anything else.

use std::ffi::OsString;

use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::classify::{enumerate_with, Coverage};
use crate::error::Error;
use crate::lattice::{DivisorClass, Surface};
use crate::moduli::{report_with, ClassReport};
use crate::table::{generate_table, DEFAULT_T_MAX};
use crate::weyl::{enumerate_minus_one_classes, orbit, DEFAULT_ORBIT_CAP};

pub const SCHEMA_VERSION: &str = "1";

/// Orbits up to this size are listed in full.
pub const ORBIT_LISTING_LIMIT: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "delpezzo", version, about = "Smooth rational curve classes on blow-ups of the plane")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the invariants of one class
    Info {
        /// Number of blown-up points, 1..=8
        #[arg(short = 'r', default_value_t = 6, allow_negative_numbers = true)]
        r: i64,
        /// Class as `d;m1,...,mr`
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(long, value_enum, default_value_t = InfoFormat::Json)]
        format: InfoFormat,
        /// Answer for r = 8, where the classifier is unvalidated
        #[arg(long)]
        allow_unvalidated: bool,
    },
    /// List every (-1)-class
    Lines {
        /// Number of blown-up points, 1..=8
        #[arg(short = 'r', default_value_t = 6, allow_negative_numbers = true)]
        r: i64,
    },
    /// Regenerate the classification table for the cubic surface
    Table {
        /// Instantiate families for t = 0..=T_MAX
        #[arg(long, default_value_t = DEFAULT_T_MAX, value_parser = clap::value_parser!(i64).range(1..))]
        t_max: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// List smooth rational classes with a given self-intersection
    Enumerate {
        /// Number of blown-up points, 1..=8
        #[arg(short = 'r', default_value_t = 6, allow_negative_numbers = true)]
        r: i64,
        /// Target self-intersection β²
        #[arg(long, allow_negative_numbers = true)]
        self_int: i64,
        /// Answer for r = 8, where the classifier is unvalidated
        #[arg(long)]
        allow_unvalidated: bool,
    },
    /// Weyl group orbit of a class
    Orbit {
        /// Number of blown-up points, 1..=8
        #[arg(short = 'r', default_value_t = 6, allow_negative_numbers = true)]
        r: i64,
        /// Class as `d;m1,...,mr`
        #[arg(allow_hyphen_values = true)]
        class: String,
        /// Give up once the orbit exceeds this many elements
        #[arg(long, default_value_t = DEFAULT_ORBIT_CAP, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InfoFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Markdown,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(err: &Error) -> Self {
        Self {
            code: exit_code(err),
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::DimensionMismatch { .. } | Error::TableHorizon(_) => 2,
        Error::UnsupportedSurface(_) | Error::UnvalidatedRange => 3,
        Error::OrbitCap { .. } => 4,
        _ => 1,
    }
}

/// The envelope around every JSON document.
#[derive(Debug, Serialize)]
pub struct OutputRecord<P> {
    pub schema_version: &'static str,
    pub surface_r: usize,
    pub kind: &'static str,
    pub payload: P,
}

#[derive(Serialize)]
struct ClassList {
    count: usize,
    classes: Vec<DivisorClass>,
}

#[derive(Serialize)]
struct EnumeratedClass {
    class: DivisorClass,
    anticanonical_degree: i64,
    dim_linear_system: Option<i64>,
    dim_mor: Option<i64>,
}

#[derive(Serialize)]
struct Enumeration {
    self_int: i64,
    count: usize,
    classes: Vec<EnumeratedClass>,
}

#[derive(Serialize)]
struct OrbitPayload {
    seed: DivisorClass,
    size: usize,
    generator_count: usize,
    members: Option<Vec<DivisorClass>>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match execute(cli.command) {
            Ok(stdout) => Outcome::ok(stdout),
            Err(err) => Outcome::fail(&err),
        },
        Err(err) => {
            let rendered = err.render().to_string();
            let code = err.exit_code();
            if code == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            }
        }
    }
}

fn execute(command: Command) -> Result<String, Error> {
    match command {
        Command::Info {
            r,
            class,
            format,
            allow_unvalidated,
        } => {
            let s = Surface::new(r)?;
            let beta = s.parse_class(&class)?;
            let report = report_with(&s, &beta, coverage(allow_unvalidated))?;
            Ok(match format {
                InfoFormat::Json => json_document(&s, "class_report", &report),
                InfoFormat::Text => text_report(&report),
            })
        }
        Command::Lines { r } => {
            let s = Surface::new(r)?;
            let classes = enumerate_minus_one_classes(&s);
            let payload = ClassList {
                count: classes.len(),
                classes,
            };
            Ok(json_document(&s, "class_list", &payload))
        }
        Command::Table { t_max, format } => {
            let s = Surface::cubic();
            let table = generate_table(&s, t_max)?;
            Ok(match format {
                TableFormat::Json => json_document(&s, "table", &TablePayload::new(&table)),
                TableFormat::Csv => table.to_csv(),
                TableFormat::Markdown => table.to_markdown(),
            })
        }
        Command::Enumerate {
            r,
            self_int,
            allow_unvalidated,
        } => {
            let s = Surface::new(r)?;
            let cov = coverage(allow_unvalidated);
            let classes = enumerate_with(&s, self_int, cov)?
                .into_iter()
                .map(|c| {
                    let rep = report_with(&s, &c, cov)?;
                    Ok(EnumeratedClass {
                        class: c,
                        anticanonical_degree: rep.anticanonical_degree,
                        dim_linear_system: rep.dim_linear_system,
                        dim_mor: rep.dim_mor,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            let payload = Enumeration {
                self_int,
                count: classes.len(),
                classes,
            };
            Ok(json_document(&s, "class_list", &payload))
        }
        Command::Orbit { r, class, cap } => {
            let s = Surface::new(r)?;
            let seed = s.parse_class(&class)?;
            let result = orbit(&s, &seed, cap)?;
            let payload = OrbitPayload {
                seed,
                size: result.size,
                generator_count: result.generator_count,
                members: (result.size <= ORBIT_LISTING_LIMIT).then_some(result.representatives),
            };
            Ok(json_document(&s, "orbit", &payload))
        }
    }
}

fn coverage(allow_unvalidated: bool) -> Coverage {
    if allow_unvalidated {
        Coverage::AllowUnvalidated
    } else {
        Coverage::Validated
    }
}

#[derive(Serialize)]
struct TablePayload<'a> {
    t_max: i64,
    blocks: &'a [crate::table::TableBlock],
    rows: Vec<crate::table::Instance>,
}

impl<'a> TablePayload<'a> {
    fn new(table: &'a crate::table::Table) -> Self {
        Self {
            t_max: table.t_max,
            blocks: &table.blocks,
            rows: table.instances(),
        }
    }
}

/// Serializes through `serde_json::Value`, whose maps are ordered by key, so
/// the document is byte-stable.
fn json_document<P: Serialize>(s: &Surface, kind: &'static str, payload: &P) -> String {
    let record = OutputRecord {
        schema_version: SCHEMA_VERSION,
        surface_r: s.r(),
        kind,
        payload,
    };
    let value: Value = serde_json::to_value(&record).expect("output records serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
    out.push('\n');
    out
}

fn text_report(report: &ClassReport) -> String {
    let na = |v: Option<i64>| v.map_or_else(|| "n/a".to_string(), |x| x.to_string());
    let fields = [
        ("class", report.beta.to_string()),
        ("self_int", report.self_int.to_string()),
        ("anticanonical_degree", report.anticanonical_degree.to_string()),
        ("arithmetic_genus", report.arithmetic_genus.to_string()),
        ("smooth_rational", report.smooth_rational.to_string()),
        ("reason", report.reason.to_string()),
        ("dim_linear_system", na(report.dim_linear_system)),
        ("dim_mor", na(report.dim_mor)),
    ];
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    fields
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
