//! `cintervals`: generators, enumeration, simplicity test, decomposition
//! trees and oracle verification from plain-text input files.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cintervals::io::{format_generator_json, format_generator_text, parse_generator, parse_input};
use cintervals::oracle::{brute_force_decomposition, brute_force_family, random_instance};
use cintervals::{
    build_decomposition_tree, enumerate_family, family_generator, find_nontrivial_common_interval,
    validate_structure, Error, FamilyKind, Interval, Structure,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "cintervals",
    version,
    about = "Intersection-closed interval families in linear time"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator (R, L) of a family.
    Generator {
        #[arg(long)]
        kind: FamilyKind,
        /// Input file, `-` for standard input.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List every member, `y` ascending then `x` descending.
    Enumerate {
        #[arg(long)]
        kind: FamilyKind,
        input: PathBuf,
    },
    /// Test a permutation for simplicity; exit 1 with a witness if not simple.
    Simple { input: PathBuf },
    /// Decomposition tree of the common intervals of a permutation.
    Decompose {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare the fast path with the brute-force definition; exit 1 on a
    /// discrepancy.
    Verify {
        #[arg(long)]
        kind: FamilyKind,
        /// Input file; omit to draw a random instance with --seed and --n.
        input: Option<PathBuf>,
        /// Check this generator file instead of computing one.
        #[arg(long)]
        generator: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Time generator construction on a random instance.
    Bench {
        #[arg(long)]
        kind: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Outcome of a command: text for stdout and the exit code.
struct Report {
    out: String,
    code: u8,
}

impl Report {
    fn ok(out: String) -> Self {
        Report { out, code: 0 }
    }
}

fn read_text(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Argument(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(kind: FamilyKind, path: &Path) -> Result<Structure, Error> {
    let raw = parse_input(&read_text(path)?, kind.input())?;
    validate_structure(kind, raw)
}

fn load_permutation(path: &Path) -> Result<cintervals::Permutation, Error> {
    match load(FamilyKind::A, path)? {
        Structure::Permutation(p) => Ok(p),
        _ => unreachable!("family A reads permutations"),
    }
}

/// First interval, in emission order, present in exactly one list.
fn first_difference(fast: &[Interval], truth: &[Interval]) -> Option<String> {
    let (mut i, mut j) = (0, 0);
    loop {
        match (fast.get(i), truth.get(j)) {
            (None, None) => return None,
            (Some(a), Some(b)) if a == b => {
                i += 1;
                j += 1;
            }
            (Some(a), b) if b.is_none_or(|b| a.emission_key() < b.emission_key()) => {
                return Some(format!("extra {a}"))
            }
            (_, Some(b)) => return Some(format!("missing {b}")),
            (Some(_), None) => unreachable!(),
        }
    }
}

fn run(command: Command) -> Result<Report, Error> {
    match command {
        Command::Generator {
            kind,
            input,
            format,
        } => {
            let g = family_generator(kind, &load(kind, &input)?)?;
            Ok(Report::ok(match format {
                Format::Text => format_generator_text(&g),
                Format::Json => format_generator_json(&g),
                Format::Dot => {
                    return Err(Error::Argument("generators print as text or json".into()))
                }
            }))
        }
        Command::Enumerate { kind, input } => {
            let s = load(kind, &input)?;
            let mut out = String::new();
            let k = enumerate_family(kind, &s, |i| {
                let _ = writeln!(out, "{i}");
            })?;
            let _ = writeln!(out, "count: {k}");
            Ok(Report::ok(out))
        }
        Command::Simple { input } => {
            let p = load_permutation(&input)?;
            Ok(match find_nontrivial_common_interval(&p) {
                None => Report::ok("SIMPLE\n".into()),
                Some(w) => Report {
                    out: format!("{w}\n"),
                    code: 1,
                },
            })
        }
        Command::Decompose { input, format } => {
            let t = build_decomposition_tree(&load_permutation(&input)?);
            Ok(Report::ok(match format {
                Format::Json => t.to_json(),
                Format::Dot => t.to_dot(),
                Format::Text => return Err(Error::Argument("trees print as json or dot".into())),
            }))
        }
        Command::Verify {
            kind,
            input,
            generator,
            seed,
            n,
        } => {
            let s = match (input, seed) {
                (Some(path), _) => load(kind, &path)?,
                (None, Some(seed)) => random_instance(kind, n, seed)?,
                (None, None) => return Err(Error::Argument("give an input file or --seed".into())),
            };
            let truth = brute_force_family(kind, &s)?;
            let fast = match generator {
                Some(path) => {
                    let g = parse_generator(&read_text(&path)?)?;
                    if g.n() != s.n() {
                        return Err(Error::SizeMismatch(g.n(), s.n()));
                    }
                    g.materialize()
                }
                None => family_generator(kind, &s)?.materialize(),
            };
            let mut listed = Vec::new();
            enumerate_family(kind, &s, |i| listed.push(i))?;
            let mut problems = Vec::new();
            if let Some(d) = first_difference(&fast, &truth) {
                problems.push(format!("generator: {d}"));
            }
            if let Some(d) = first_difference(&listed, &truth) {
                problems.push(format!("enumeration: {d}"));
            }
            if let Structure::Permutation(p) = &s {
                if kind == FamilyKind::A
                    && build_decomposition_tree(p) != brute_force_decomposition(p)
                {
                    problems.push("decomposition tree differs".into());
                }
            }
            Ok(if problems.is_empty() {
                Report::ok(format!("OK {} members\n", truth.len()))
            } else {
                Report {
                    out: problems.join("\n") + "\n",
                    code: 1,
                }
            })
        }
        Command::Bench { kind, n, seed } => {
            let s = random_instance(kind, n, seed)?;
            let start = Instant::now();
            let g = family_generator(kind, &s)?;
            let secs = start.elapsed().as_secs_f64();
            Ok(Report::ok(format!(
                "kind {kind} n {} seconds {secs:.6}\n",
                g.n()
            )))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(report.out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
