//! The `flagwalk` command line.
//!
//! Exit codes: 0 success, 1 validation or precondition failure, 2 usage or
//! IO error, 3 a computed result contradicting the classification theorem.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use flagwalk_core::autgroup::{
    automorphism_group, flag_orbits, resolve_subgroup, symmetry_class_of, AutGroup, SubgroupSpec,
};
use flagwalk_core::classify::{classify, ClassifyError};
use flagwalk_core::cyclets::consistent_cyclets;
use flagwalk_core::families::{build_delta, build_h, build_m};
use flagwalk_core::walks::enumerate_consistent_orbits;
use flagwalk_core::FlagSystem;

use crate::mapfile::{self, MapFileError};
use crate::report::{
    ClassifyRow, CycletsReport, InfoReport, SymReport, ValidateReport, WalksReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "flagwalk",
    version,
    about = "Walks, symmetry and edge-set classification on maps given by flags"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the flag-system axioms
    Validate(Opts),
    /// Vertex, edge and face counts and the surface
    Info(Opts),
    /// Symmetry class under the chosen group
    Sym(Opts),
    /// Orbits of consistent j-holes and j-Petrie paths
    Walks(Opts),
    /// Edge-set type of each consistent walk orbit
    Classify(Opts),
    /// Write the dual map
    Dual(Opts),
    /// Write the Petrie dual
    Petrie(Opts),
    /// Write a member of a one-face family
    Gen(Opts),
    /// Orbits of consistent cyclets on the skeleton
    Cyclets(Opts),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "M")]
    M,
    #[value(name = "delta")]
    Delta,
    #[value(name = "H")]
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Full,
    Rotation,
    Facebip,
}

impl Group {
    fn spec(self) -> SubgroupSpec {
        match self {
            Group::Full => SubgroupSpec::Full,
            Group::Rotation => SubgroupSpec::Rotation,
            Group::Facebip => SubgroupSpec::FaceBipartite,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Group::Full => "full",
            Group::Rotation => "rotation",
            Group::Facebip => "facebip",
        }
    }
}

#[derive(Debug, Args)]
struct Opts {
    /// Map file, or `-` for stdin
    input: Option<String>,
    /// Generate the input instead of reading it
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    /// Second parameter of the H family
    #[arg(long)]
    a: Option<usize>,
    #[arg(long, value_enum, default_value = "full")]
    group: Group,
    #[arg(long)]
    json: bool,
}

/// A failed command: exit code plus what goes to stderr.
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Outcome = Result<String, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let outcome = match thread_pool() {
        Ok(pool) => dispatch(&cli.command, stdin, &pool),
        Err(f) => Err(f),
    };
    match outcome {
        Ok(text) => {
            if write!(stdout, "{text}").is_err() {
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(stderr, "flagwalk: {}", f.message);
            f.code
        }
    }
}

/// `FLAGWALK_THREADS` bounds the worker count; unset or 0 means automatic.
fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let threads = match std::env::var("FLAGWALK_THREADS") {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            fail(
                EXIT_USAGE,
                format!("FLAGWALK_THREADS must be a number, got {s:?}"),
            )
        })?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| fail(EXIT_USAGE, format!("cannot start worker threads: {e}")))
}

fn dispatch(cmd: &Command, stdin: &mut dyn Read, pool: &rayon::ThreadPool) -> Outcome {
    match cmd {
        Command::Validate(o) => validate(o, stdin),
        Command::Info(o) => info(&load(o, stdin)?, o),
        Command::Sym(o) => sym(&load(o, stdin)?, o),
        Command::Walks(o) => walks(&load(o, stdin)?, o),
        Command::Classify(o) => classify_cmd(&load(o, stdin)?, o, pool),
        Command::Dual(o) => Ok(mapfile::to_string(&load(o, stdin)?.dual())),
        Command::Petrie(o) => petrie(&load(o, stdin)?),
        Command::Gen(o) => {
            if o.input.is_some() {
                return Err(fail(EXIT_USAGE, "gen takes no input file"));
            }
            if o.family.is_none() {
                return Err(fail(EXIT_USAGE, "gen needs --family"));
            }
            Ok(mapfile::to_string(&load(o, stdin)?))
        }
        Command::Cyclets(o) => cyclets(&load(o, stdin)?, o),
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| fail(EXIT_USAGE, format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

fn map_file_failure(e: MapFileError) -> Failure {
    let code = if matches!(e, MapFileError::Json(_)) {
        EXIT_USAGE
    } else {
        EXIT_INVALID
    };
    fail(code, e.to_string())
}

fn generate(o: &Opts, family: Family) -> Result<FlagSystem, Failure> {
    let n = o.n.ok_or_else(|| fail(EXIT_USAGE, "--family needs --n"))?;
    let built = match family {
        Family::M => build_m(n),
        Family::Delta => build_delta(n),
        Family::H => {
            let a =
                o.a.ok_or_else(|| fail(EXIT_USAGE, "--family H needs --a"))?;
            build_h(n, a)
        }
    };
    built.map_err(|e| fail(EXIT_INVALID, e.to_string()))
}

/// The input map: a file or stdin, or a generated family member, never both.
fn load(o: &Opts, stdin: &mut dyn Read) -> Result<FlagSystem, Failure> {
    match (&o.input, o.family) {
        (Some(_), Some(_)) => Err(fail(
            EXIT_USAGE,
            "give either an input file or --family, not both",
        )),
        (None, None) => Err(fail(EXIT_USAGE, "no input: give a file, `-` or --family")),
        (Some(path), None) => mapfile::parse(&read_input(path, stdin)?).map_err(map_file_failure),
        (None, Some(family)) => generate(o, family),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn validate(o: &Opts, stdin: &mut dyn Read) -> Outcome {
    let m = match (&o.input, o.family) {
        (Some(path), None) => mapfile::parse_unchecked(&read_input(path, stdin)?),
        _ => return load(o, stdin).map(|_| ok_validate(o.json)),
    };
    let report = match m {
        Ok(m) => ValidateReport::new(&m.validate()),
        Err(MapFileError::Json(e)) => return Err(fail(EXIT_USAGE, e.to_string())),
        Err(e) => ValidateReport {
            valid: false,
            violations: vec![e.to_string()],
        },
    };
    let text = if o.json {
        json(&report)
    } else if report.valid {
        "valid\n".to_string()
    } else {
        let mut s = String::from("invalid\n");
        for v in &report.violations {
            s.push_str(&format!("  {v}\n"));
        }
        s
    };
    if report.valid {
        Ok(text)
    } else {
        Err(fail(EXIT_INVALID, text.trim_end().to_string()))
    }
}

fn ok_validate(as_json: bool) -> String {
    if as_json {
        json(&ValidateReport {
            valid: true,
            violations: Vec::new(),
        })
    } else {
        "valid\n".to_string()
    }
}

fn info(m: &FlagSystem, o: &Opts) -> Outcome {
    let r = InfoReport::new(m, &m.summary());
    Ok(if o.json {
        json(&r)
    } else {
        format!("{}\n", r.text())
    })
}

fn group(m: &FlagSystem, o: &Opts) -> Result<(AutGroup, AutGroup), Failure> {
    let full = automorphism_group(m);
    let g = resolve_subgroup(m, &full, &o.group.spec())
        .map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    Ok((full, g))
}

fn sym(m: &FlagSystem, o: &Opts) -> Outcome {
    let (_, g) = group(m, o)?;
    let fs = m.face_structure();
    let class = symmetry_class_of(m, &fs, &g);
    let r = SymReport::new(m, o.group.as_str(), &g, class, flag_orbits(m, &g).len());
    Ok(if o.json {
        json(&r)
    } else {
        format!("{}\n", r.class)
    })
}

fn walks(m: &FlagSystem, o: &Opts) -> Outcome {
    let (_, g) = group(m, o)?;
    let fs = m.face_structure();
    let report =
        enumerate_consistent_orbits(m, &g).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    let r = WalksReport::new(m, &fs, o.group.as_str(), &report);
    if r.rows.len() != r.expected_rows {
        return Err(fail(
            EXIT_VIOLATION,
            format!(
                "found {} walk orbits, expected {}; witness:\n{}",
                r.rows.len(),
                r.expected_rows,
                json(&r)
            ),
        ));
    }
    Ok(if o.json { json(&r) } else { r.text() })
}

#[derive(Serialize)]
struct Witness {
    kind: String,
    base: usize,
    vertices: usize,
    edges: Vec<usize>,
}

fn classify_cmd(m: &FlagSystem, o: &Opts, pool: &rayon::ThreadPool) -> Outcome {
    let (full, g) = group(m, o)?;
    let fs = m.face_structure();
    let report =
        enumerate_consistent_orbits(m, &g).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    // Rows are independent; collect keeps the report order.
    let results: Vec<_> = pool.install(|| {
        report
            .rows
            .par_iter()
            .map(|row| classify(m, &fs, &row.representative, &full))
            .collect()
    });
    let mut rows = Vec::new();
    let mut text = String::from("orbit kind    j  case       labels\n");
    for (row, res) in report.rows.iter().zip(results) {
        match res {
            Ok(c) => {
                let r = ClassifyRow::new(row, &c);
                text.push_str(&r.text(&c));
                text.push('\n');
                rows.push(r);
            }
            Err(ClassifyError::TheoremViolation {
                kind,
                base,
                vertices,
                edges,
            }) => {
                let w = Witness {
                    kind: kind.to_string(),
                    base,
                    vertices,
                    edges,
                };
                return Err(fail(
                    EXIT_VIOLATION,
                    format!("edge set fits no class; witness:\n{}", json(&w)),
                ));
            }
        }
    }
    Ok(if o.json { json(&rows) } else { text })
}

fn petrie(m: &FlagSystem) -> Outcome {
    let p = m.petrie();
    let report = p.validate();
    if !report.is_valid() {
        return Err(fail(
            EXIT_INVALID,
            format!("the Petrie dual is not a map:\n{report}"),
        ));
    }
    Ok(mapfile::to_string(&p))
}

fn cyclets(m: &FlagSystem, o: &Opts) -> Outcome {
    let (_, g) = group(m, o)?;
    let report = consistent_cyclets(m, &g).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    let r = CycletsReport::new(m, o.group.as_str(), &report);
    if !r.matches() {
        return Err(fail(
            EXIT_VIOLATION,
            format!(
                "found {} cyclet orbits, expected {}; witness:\n{}",
                r.orbits.len(),
                r.expected,
                json(&r)
            ),
        ));
    }
    if o.json {
        return Ok(json(&r));
    }
    let mut text = format!(
        "q={} orbits={} (expected {})\n",
        r.valence,
        r.orbits.len(),
        r.expected
    );
    for orbit in &r.orbits {
        text.push_str(&format!(
            "length {:>3}  size {:>4}  {:?}\n",
            orbit.length, orbit.size, orbit.darts
        ));
    }
    Ok(text)
}
