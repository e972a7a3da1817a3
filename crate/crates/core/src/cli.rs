//! Command-line front end. Parsing lives in [`CliConfig`]; [`run`] turns a
//! configuration into output text plus an exit status so it can be tested
//! without spawning a process.
//!
//! Exit status: `0` all checks pass, `1` a verification clause failed,
//! `2` usage or input error, `3` enumeration cap exceeded.

use crate::dynamics::{lagrangian_count, orbit_decomposition};
use crate::error::Error;
use crate::poset::DEFAULT_ENUMERATION_CAP;
use crate::rootsys::{default_sweep, sweep_up_to, Family, LengthClass, RootSystem, SimpleType};
use crate::verify::{render_table, verify_sweep, VerificationReport};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAUSE_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "rowmotion",
    version,
    about = "Rowmotion orbits on the extra-special weight poset Δ(1)"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print the poset Δ(1): roots with coefficients and heights, cover pairs.
    Delta1(CommonArgs),
    /// Print the rowmotion orbits on the lower ideals of Δ(1).
    Orbits(CommonArgs),
    /// Check orbit count, orbit size and Lagrangian ideals type by type.
    Verify(CommonArgs),
    /// Print h, h*, |Π_l|, |Δ(1)| and |J(Δ(1))|.
    Counts(CommonArgs),
    /// Write the Hasse diagram of Δ(1) as a DOT digraph.
    ExportHasse(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Root system type: `E6`, `B5`, a family letter used with `--rank`, or `all`.
    #[arg(long = "type", value_name = "TYPE")]
    pub kind: Option<String>,
    /// Rank for a bare family letter.
    #[arg(long)]
    pub rank: Option<usize>,
    /// With `--type all`: largest classical rank to include.
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// Shorthand for the default sweep of all types.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Bound on the number of lower ideals enumerated per type.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub cap: usize,
    /// Write to a file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
    Dot,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }

    fn from_error(e: Error) -> Self {
        let status = match e {
            Error::EnumerationCap { .. } | Error::OrbitCap { .. } => EXIT_CAP,
            Error::InadmissibleType { .. }
            | Error::UnknownFamily(_)
            | Error::InvalidArgument(_) => EXIT_USAGE,
            _ => EXIT_CLAUSE_FAILED,
        };
        Outcome {
            status,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

impl CommonArgs {
    fn selected_types(&self) -> Result<Vec<SimpleType>, Error> {
        if self.all {
            return match self.max_rank {
                Some(k) => Ok(sweep_up_to(k, k)),
                None => Ok(default_sweep()),
            };
        }
        let Some(kind) = self.kind.as_deref() else {
            return Err(Error::InvalidArgument(
                "--type (or --all) is required".into(),
            ));
        };
        if kind.eq_ignore_ascii_case("all") {
            return Ok(match self.max_rank {
                Some(k) => sweep_up_to(k, k),
                None => default_sweep(),
            });
        }
        if self.max_rank.is_some() {
            return Err(Error::InvalidArgument(
                "--max-rank only applies to --type all".into(),
            ));
        }
        let has_rank_digits = kind.chars().skip(1).any(|c| c.is_ascii_digit());
        let t = match (has_rank_digits, self.rank) {
            (true, None) => SimpleType::parse(kind)?,
            (true, Some(_)) => {
                return Err(Error::InvalidArgument(format!(
                    "`{kind}` already names a rank; drop --rank"
                )))
            }
            (false, Some(r)) => {
                let letter = kind.chars().next().filter(|_| kind.chars().count() == 1);
                let family = letter
                    .and_then(Family::from_letter)
                    .ok_or_else(|| Error::UnknownFamily(kind.into()))?;
                SimpleType::new(family, r)?
            }
            (false, None) => {
                return Err(Error::InvalidArgument(format!(
                    "type `{kind}` needs a rank, e.g. `--type {kind} --rank 4`"
                )))
            }
        };
        Ok(vec![t])
    }

    fn single_type(&self) -> Result<SimpleType, Error> {
        match self.selected_types()?.as_slice() {
            [t] => Ok(*t),
            _ => Err(Error::InvalidArgument(
                "this command takes a single root system type".into(),
            )),
        }
    }
}

#[derive(Serialize)]
struct ElementJson {
    index: usize,
    label: String,
    coeffs: Vec<i64>,
    height: i64,
    rank: usize,
    length: LengthClass,
}

#[derive(Serialize)]
struct Delta1Json {
    #[serde(rename = "type")]
    kind: SimpleType,
    h: usize,
    hstar: usize,
    elements: Vec<ElementJson>,
    covers: Vec<[usize; 2]>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OrbitJson {
    index: usize,
    size: usize,
    lagrangian: usize,
    cardinalities: Vec<usize>,
    representative: Vec<String>,
}

#[derive(Serialize)]
struct OrbitsJson {
    #[serde(rename = "type")]
    kind: SimpleType,
    h: usize,
    hstar: usize,
    #[serde(rename = "lagrangianTarget")]
    lagrangian_target: usize,
    orbits: Vec<OrbitJson>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CountsJson {
    #[serde(rename = "type")]
    kind: SimpleType,
    h: usize,
    hstar: usize,
    long_simple_count: usize,
    delta1_size: usize,
    ideal_count: usize,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_delta1(args: &CommonArgs, format: Format) -> Result<String, Error> {
    let t = args.single_type()?;
    let rs = RootSystem::new(t)?;
    let poset = rs.delta_one();
    if format == Format::Dot {
        return Ok(poset.to_dot(&format!("Delta1_{t}")));
    }
    let roots = rs.delta_one_roots();
    let elements: Vec<ElementJson> = roots
        .iter()
        .enumerate()
        .map(|(i, r)| ElementJson {
            index: i,
            label: r.label(),
            coeffs: r.coeffs().to_vec(),
            height: r.height(),
            rank: poset.rank(i).unwrap_or(0),
            length: r.length_class(),
        })
        .collect();
    let covers: Vec<[usize; 2]> = poset.covers().iter().map(|&(a, b)| [a, b]).collect();
    let (h, hstar) = rs.coxeter_numbers();
    Ok(match format {
        Format::Json => to_json(&Delta1Json {
            kind: t,
            h,
            hstar,
            elements,
            covers,
        }),
        Format::Tsv => {
            let mut out = String::new();
            for e in &elements {
                let _ = writeln!(
                    out,
                    "element\t{}\t{}\t{}\t{}",
                    e.index,
                    e.label,
                    join(&e.coeffs),
                    e.height
                );
            }
            for [a, b] in &covers {
                let _ = writeln!(out, "cover\t{a}\t{b}");
            }
            out
        }
        _ => {
            let mut out = format!(
                "Δ(1) of {t}: {} elements, {} covers (h = {h}, h* = {hstar})\n",
                elements.len(),
                covers.len()
            );
            for e in &elements {
                let ups: Vec<&str> = poset
                    .upper_covers(e.index)
                    .iter()
                    .map(|&u| poset.label(u))
                    .collect();
                let _ = writeln!(
                    out,
                    "  {:>3}  {:<10} height {:>2}  < {}",
                    e.index,
                    e.label,
                    e.height,
                    ups.join(" ")
                );
            }
            out
        }
    })
}

fn cmd_orbits(args: &CommonArgs, format: Format) -> Result<String, Error> {
    let t = args.single_type()?;
    let rs = RootSystem::new(t)?;
    let poset = rs.delta_one();
    let (h, hstar) = rs.coxeter_numbers();
    let target = hstar - 2;
    let orbits = orbit_decomposition(&poset, args.cap)?;
    let rows: Vec<OrbitJson> = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| OrbitJson {
            index: i,
            size: o.size(),
            lagrangian: lagrangian_count(o, target as i64),
            cardinalities: o.cardinalities(),
            representative: o
                .representative()
                .iter()
                .map(|x| poset.label(x).to_owned())
                .collect(),
        })
        .collect();
    Ok(match format {
        Format::Json => to_json(&OrbitsJson {
            kind: t,
            h,
            hstar,
            lagrangian_target: target,
            orbits: rows,
        }),
        Format::Tsv => rows
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\n",
                    r.index,
                    r.size,
                    r.lagrangian,
                    join(&r.cardinalities)
                )
            })
            .collect(),
        _ => {
            let mut out = format!(
                "{t}: {} orbits on {} lower ideals (h - 1 = {}, Lagrangian size h* - 2 = {target})\n",
                rows.len(),
                orbits.iter().map(|o| o.size()).sum::<usize>(),
                h - 1
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "  orbit {:>2}  size {:>3}  lagrangian {}  |I|: {}",
                    r.index,
                    r.size,
                    r.lagrangian,
                    join(&r.cardinalities)
                );
            }
            out
        }
    })
}

fn cmd_counts(args: &CommonArgs, format: Format) -> Result<String, Error> {
    let rows = args
        .selected_types()?
        .into_iter()
        .map(|t| {
            let rs = RootSystem::new(t)?;
            let delta = rs.delta_one();
            Ok(CountsJson {
                kind: t,
                h: rs.coxeter_number(),
                hstar: rs.dual_coxeter_number(),
                long_simple_count: rs.long_simple_count(),
                delta1_size: delta.len(),
                ideal_count: delta.count_lower_ideals(args.cap)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match format {
        Format::Json => to_json(&rows),
        Format::Tsv => rows
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.kind, r.h, r.hstar, r.long_simple_count, r.delta1_size, r.ideal_count
                )
            })
            .collect(),
        _ => {
            let mut out = format!(
                "{:<5} {:>3} {:>3} {:>4} {:>6} {:>6}\n",
                "type", "h", "h*", "|Pl|", "|D(1)|", "|J|"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:<5} {:>3} {:>3} {:>4} {:>6} {:>6}",
                    r.kind.to_string(),
                    r.h,
                    r.hstar,
                    r.long_simple_count,
                    r.delta1_size,
                    r.ideal_count
                );
            }
            out
        }
    })
}

fn cmd_verify(args: &CommonArgs, format: Format) -> Result<(String, bool), Error> {
    let reports: Vec<VerificationReport> = verify_sweep(&args.selected_types()?, args.cap)?;
    let ok = reports.iter().all(VerificationReport::passed);
    let text = match format {
        Format::Json => to_json(&reports),
        Format::Tsv => reports
            .iter()
            .map(|r| {
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    r.kind,
                    r.h,
                    r.hstar,
                    r.long_simple_count,
                    r.orbit_count,
                    join(&r.orbit_sizes),
                    join(&r.lagrangian_per_orbit),
                    r.clauses.orbit_count.as_str(),
                    r.clauses.orbit_size.as_str(),
                    r.clauses.lagrangian_uniqueness.as_str(),
                    r.clauses.size_identity.as_str(),
                )
            })
            .collect(),
        _ => {
            let mut t = render_table(&reports);
            let _ = writeln!(
                t,
                "{} types, {}",
                reports.len(),
                if ok { "all checks pass" } else { "FAILURES" }
            );
            t
        }
    };
    Ok((text, ok))
}

pub fn run(config: &CliConfig) -> Outcome {
    let (args, default_format, allows_dot) = match &config.command {
        Command::Delta1(a) => (a, Format::Json, true),
        Command::Orbits(a) | Command::Verify(a) | Command::Counts(a) => (a, Format::Json, false),
        Command::ExportHasse(a) => (a, Format::Dot, true),
    };
    let format = args.format.unwrap_or(default_format);
    if format == Format::Dot && !allows_dot {
        return Outcome::usage("--format dot is only valid for delta1 and export-hasse");
    }
    if matches!(config.command, Command::ExportHasse(_)) && format != Format::Dot {
        return Outcome::usage("export-hasse only writes --format dot");
    }

    let result = match &config.command {
        Command::Delta1(a) | Command::ExportHasse(a) => cmd_delta1(a, format).map(|s| (s, true)),
        Command::Orbits(a) => cmd_orbits(a, format).map(|s| (s, true)),
        Command::Counts(a) => cmd_counts(a, format).map(|s| (s, true)),
        Command::Verify(a) => cmd_verify(a, format),
    };
    match result {
        Ok((text, true)) => Outcome::ok(text),
        Ok((text, false)) => Outcome {
            status: EXIT_CLAUSE_FAILED,
            stdout: text,
            stderr: "error: a verification clause failed\n".into(),
        },
        Err(e) => Outcome::from_error(e),
    }
}

/// Output destination of a parsed configuration, if any.
pub fn output_path(config: &CliConfig) -> Option<&PathBuf> {
    match &config.command {
        Command::Delta1(a)
        | Command::Orbits(a)
        | Command::Verify(a)
        | Command::Counts(a)
        | Command::ExportHasse(a) => a.output.as_ref(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let config =
            CliConfig::try_parse_from(std::iter::once("rowmotion").chain(args.iter().copied()))
                .expect("valid flags");
        run(&config)
    }

    #[test]
    fn type_selectors() {
        let ok = run_args(&["counts", "--type", "B", "--rank", "5", "--format", "tsv"]);
        assert_eq!(ok.status, EXIT_OK);
        assert_eq!(ok.stdout, "B5\t10\t9\t4\t14\t36\n");
        assert_eq!(
            run_args(&["counts", "--type", "b5", "--format", "tsv"]).stdout,
            ok.stdout
        );
        assert_eq!(run_args(&["counts", "--type", "B"]).status, EXIT_USAGE);
        assert_eq!(
            run_args(&["counts", "--type", "B5", "--rank", "5"]).status,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["counts", "--type", "D3"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["counts", "--type", "Q7"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["counts"]).status, EXIT_USAGE);
        let all = run_args(&[
            "counts",
            "--type",
            "all",
            "--max-rank",
            "4",
            "--format",
            "tsv",
        ]);
        // A1..A4, B2..B4, C2..C4, D4, E6, E7, E8, F4, G2
        assert_eq!(all.stdout.lines().count(), 4 + 3 + 3 + 1 + 5);
    }

    #[test]
    fn dot_format_restrictions() {
        assert_eq!(
            run_args(&["orbits", "--type", "G2", "--format", "dot"]).status,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["export-hasse", "--type", "G2", "--format", "json"]).status,
            EXIT_USAGE
        );
        assert_eq!(run_args(&["export-hasse", "--type", "G2"]).status, EXIT_OK);
    }

    #[test]
    fn cap_overflow_has_its_own_status() {
        let out = run_args(&["orbits", "--type", "E8", "--cap", "10"]);
        assert_eq!(out.status, EXIT_CAP);
        assert!(out.stderr.contains("cap"));
        assert_eq!(
            run_args(&["verify", "--type", "E6", "--cap", "10"]).status,
            EXIT_CAP
        );
    }
}
