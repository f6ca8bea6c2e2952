//! Command-line front end. Data goes to stdout, progress to stderr.
//!
//! Exit codes: 0 success, 1 a verifier rejected its input, 2 usage or input
//! error, 3 a point or node budget ran out.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::cantor::{
    box_count, dimension_estimate, truncated_sum_with_cap, vertex_stages, write_box_counts_csv,
};
use crate::constructions::{
    nl_construction_with_cap, orthoplex_construction_with_cap, skeleton_construction_with_cap,
};
use crate::digits::{
    build_digit_set, build_multiscale_set_with_cap, find_radius, find_radius_multiscale,
    interval_cover_count,
};
use crate::error::{Error, Result};
use crate::exponents::{beta, format_rational, iterate_f, nl_exponent, r_alpha};
use crate::formats::{
    parse_rational, read_family, read_integer_set, read_point_set, read_rationals, write_family,
    write_integer_set, write_point_set, write_rationals,
};
use crate::lattice::{verify_cover, verify_nl_condition, verify_orthoplex_cover, PointSet};
use crate::oracle::{
    min_cover_sweep, min_cover_with_budget, write_sweep_csv, CoverInstance, CoverShape,
};
use crate::report;
use crate::shadows::{
    cascade_representation, colex_segment, exact_shadow, kk_shadow_bound, lovasz_shadow_bound,
};
use crate::DEFAULT_POINT_CAP;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "skeletal",
    version,
    about = "Cube-skeleton and orthoplex covering constructions, verifiers and experiments",
    after_help = "Exit codes: 0 ok, 1 verification failed, 2 usage or input error, 3 budget exhausted.\n\
                  SKELETAL_THREADS caps the worker thread count. Rationals print as \"num/den\"."
)]
pub struct Cli {
    /// Largest number of points any command may materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_POINT_CAP)]
    pub point_cap: u128,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build (B, S) and write both as point files.
    ///
    /// Prints {"n","k","p","i","sizeB","sizeS","scale"}; for nl, k holds l.
    Construct(ConstructArgs),
    /// Check that B covers S. Prints {"satisfied","witnesses":[{"point","radius"}],"failures"}.
    Verify(VerifyArgs),
    /// Exact minimal covers on small instances.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Closed-form exponents; with --iterate, the bootstrap iteration.
    ///
    /// Prints {"n","k","beta","nl_exponent","r_at_zero"} or, with --iterate,
    /// {"n","k","beta","trace","converged_at"}. --table prints CSV
    /// n,k,beta_num,beta_den,converged_at for all k < n <= N.
    Exponents(ExponentArgs),
    /// Kruskal-Katona bounds, exact shadows and colex segments.
    #[command(subcommand)]
    Shadow(ShadowCmd),
    /// Digit sets, multiscale sets, radii and interval covers.
    #[command(subcommand)]
    Digits(DigitsCmd),
    /// Cantor-sum stages, truncated sums, box counts and slope fits.
    #[command(subcommand)]
    Cantor(CantorCmd),
    /// Run the scaling study; writes one CSV per check into --out and prints
    /// [{"criterion","title","pass","summary","verifier_failed"}].
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeArg {
    Skeleton,
    Nl,
    Orthoplex,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub shape: ShapeArg,
    #[arg(long)]
    pub n: usize,
    /// Skeleton order, or the projection dimension l for nl.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub out_b: Option<PathBuf>,
    #[arg(long)]
    pub out_s: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub mode: ShapeArg,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long)]
    pub b: PathBuf,
    #[arg(long)]
    pub s: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleShapeArg {
    Vertex,
    Skeleton,
    Orthoplex,
}

#[derive(Args, Debug)]
pub struct OracleCommon {
    /// Point file holding S.
    #[arg(long)]
    pub s: PathBuf,
    #[arg(long, value_enum, default_value = "vertex")]
    pub shape: OracleShapeArg,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub r_max: i64,
    #[arg(long, default_value_t = crate::oracle::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Prints {"min_size","assignment":[{"point","radius"}],"nodes_explored","complete"}.
    MinCover(OracleCommon),
    /// Nested prefixes of S; CSV size_s,min_size,r_max,nodes_explored.
    Sweep(OracleCommon),
}

#[derive(Args, Debug)]
pub struct ExponentArgs {
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long)]
    pub iterate: bool,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_steps: usize,
    /// Emit the CSV table for every k < n <= N instead.
    #[arg(long, value_name = "N")]
    pub table: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum ShadowCmd {
    /// Prints {"m","b","c","cascade","kk","lovasz"}.
    Bounds {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        b: u64,
        #[arg(long, default_value_t = 1)]
        c: u64,
    },
    /// Shadow of a family file, written as a family.
    Exact {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, default_value_t = 1)]
        c: usize,
    },
    /// First m b-sets in colex order, written as a family.
    Colex {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum DigitsCmd {
    /// D(i, n) as an integer set.
    Dump {
        #[arg(long)]
        i: i64,
        #[arg(long)]
        n: usize,
    },
    /// A_N with N = (p!)^{2n} as an integer set.
    Multiscale {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
    },
    /// Prints {"radius"}; uses D(i, n) with --i, A_N with --p.
    Radius {
        #[arg(long, conflicts_with = "p")]
        i: Option<i64>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(required = true, allow_negative_numbers = true)]
        xs: Vec<i64>,
    },
    /// Prints {"count"}: closed intervals of length --len covering the set
    /// from --input, or A_N for --p and --n.
    Cover {
        #[arg(long)]
        len: i64,
        #[arg(long, conflicts_with_all = ["p", "n"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "n")]
        p: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StageSet {
    A,
    T,
}

#[derive(Args, Debug)]
pub struct StageArgs {
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value = "1")]
    pub t: String,
    #[arg(long, default_value_t = 3)]
    pub depth: u32,
}

#[derive(Subcommand, Debug)]
pub enum CantorCmd {
    /// Prints {"n","t","a":{"stages"},"t_stages":{"stages"},"flags":{"a","t"},"ratios":{"a","t"}}.
    Stages(StageArgs),
    /// Truncated sum of the A or T stages as one p/q per line.
    Sum {
        #[command(flatten)]
        stages: StageArgs,
        #[arg(long, value_enum)]
        set: StageSet,
    },
    /// Prints {"count"} for a rational file at --scale.
    Boxcount {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        scale: String,
    },
    /// Prints {"slope","table"}; --csv prints scale_num,scale_den,count.
    Fit {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, required = true, num_args = 2.., value_delimiter = ',')]
        scales: Vec<String>,
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Rejected,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    configure_threads(err);
    match dispatch(&cli, out, err) {
        Ok(Outcome::Ok) => EXIT_OK,
        Ok(Outcome::Rejected) => EXIT_VERIFY_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn configure_threads(err: &mut dyn Write) {
    let Ok(raw) = std::env::var("SKELETAL_THREADS") else {
        return;
    };
    match raw.trim().parse::<usize>() {
        Ok(t) if t > 0 => {
            // a pool already exists when run twice in one process; keep it
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
        _ => {
            let _ = writeln!(err, "warning: ignoring SKELETAL_THREADS={raw:?}");
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path).map(BufReader::new).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path).map(BufWriter::new).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn print_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let cap = cli.point_cap;
    match &cli.command {
        Command::Construct(a) => construct(a, cap, out, err),
        Command::Verify(a) => verify(a, out),
        Command::Oracle(cmd) => oracle(cmd, out),
        Command::Exponents(a) => exponents(a, out),
        Command::Shadow(cmd) => shadow(cmd, out),
        Command::Digits(cmd) => digits(cmd, cap, out),
        Command::Cantor(cmd) => cantor(cmd, cap, out),
        Command::Report(a) => run_report(a, out, err),
    }
}

fn construct(
    a: &ConstructArgs,
    cap: u128,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome> {
    let c = match a.shape {
        ShapeArg::Skeleton => skeleton_construction_with_cap(a.n, a.k, a.p, cap)?,
        ShapeArg::Nl => nl_construction_with_cap(a.n, a.k, a.p, cap)?,
        ShapeArg::Orthoplex => orthoplex_construction_with_cap(a.n, a.p, cap)?,
    };
    if let Some(path) = &a.out_b {
        let b = c.b.materialize(cap)?;
        let _ = writeln!(err, "writing {} points of B", b.len());
        let mut w = create(path)?;
        write_point_set(&b, &mut w)?;
        w.flush()?;
    }
    if let Some(path) = &a.out_s {
        let mut w = create(path)?;
        write_point_set(&c.s, &mut w)?;
        w.flush()?;
    }
    print_json(out, &c.summary())?;
    Ok(Outcome::Ok)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome> {
    let b = read_point_set(open(&a.b)?)?;
    let s = read_point_set(open(&a.s)?)?;
    let report = match a.mode {
        ShapeArg::Skeleton => verify_cover(&b, &s, a.k)?,
        ShapeArg::Nl => verify_nl_condition(&b, &s)?,
        ShapeArg::Orthoplex => verify_orthoplex_cover(&b, &s)?,
    };
    print_json(out, &report)?;
    Ok(if report.satisfied {
        Outcome::Ok
    } else {
        Outcome::Rejected
    })
}

fn oracle_instance(c: &OracleCommon, s: PointSet) -> Result<CoverInstance> {
    let shape = match c.shape {
        OracleShapeArg::Vertex => CoverShape::Skeleton(0),
        OracleShapeArg::Skeleton => CoverShape::Skeleton(c.k),
        OracleShapeArg::Orthoplex => CoverShape::Orthoplex,
    };
    CoverInstance::new(s, shape, c.r_max)
}

fn oracle(cmd: &OracleCmd, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        OracleCmd::MinCover(c) => {
            let inst = oracle_instance(c, read_point_set(open(&c.s)?)?)?;
            let res = min_cover_with_budget(&inst, c.node_budget)?;
            print_json(out, &res)?;
            if !res.complete {
                return Err(Error::BudgetExceeded {
                    what: "oracle search nodes (printed result is not optimal)".into(),
                    needed: c.node_budget as u128 + 1,
                    cap: c.node_budget as u128,
                });
            }
            Ok(Outcome::Ok)
        }
        OracleCmd::Sweep(c) => {
            let s = read_point_set(open(&c.s)?)?;
            let instances = (1..=s.len())
                .map(|m| {
                    let prefix = PointSet::from_points(s.dim(), (0..m).map(|j| s.get(j).to_vec()))?;
                    oracle_instance(c, prefix)
                })
                .collect::<Result<Vec<_>>>()?;
            let rows = min_cover_sweep(&instances, c.node_budget)?;
            write_sweep_csv(&rows, out)?;
            Ok(Outcome::Ok)
        }
    }
}

fn exponents(a: &ExponentArgs, out: &mut dyn Write) -> Result<Outcome> {
    if let Some(top) = a.table {
        let mut w = csv::Writer::from_writer(&mut *out);
        let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(["n", "k", "beta_num", "beta_den", "converged_at"])
            .map_err(csv_err)?;
        for n in 1..=top {
            for k in 0..n {
                let rep = iterate_f(n, k, a.tol, a.max_steps)?;
                w.write_record([
                    n.to_string(),
                    k.to_string(),
                    rep.beta.numer().to_string(),
                    rep.beta.denom().to_string(),
                    rep.converged_at.map(|c| c.to_string()).unwrap_or_default(),
                ])
                .map_err(csv_err)?;
            }
        }
        w.flush()?;
        return Ok(Outcome::Ok);
    }
    if a.iterate {
        print_json(out, &iterate_f(a.n, a.k, a.tol, a.max_steps)?)?;
        return Ok(Outcome::Ok);
    }
    let zero = BigRational::from_integer(0.into());
    let value = json!({
        "n": a.n,
        "k": a.k,
        "beta": format_rational(&beta(a.n, a.k)?),
        "nl_exponent": format_rational(&nl_exponent(a.n, a.n - a.k)?),
        "r_at_zero": format_rational(&r_alpha(a.n, a.k, &zero)?),
    });
    print_json(out, &value)?;
    Ok(Outcome::Ok)
}

fn shadow(cmd: &ShadowCmd, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        ShadowCmd::Bounds { m, b, c } => {
            let value = json!({
                "m": m,
                "b": b,
                "c": c,
                "cascade": cascade_representation(*m, *b)?.indices,
                "kk": kk_shadow_bound(*m, *b, *c)?,
                "lovasz": lovasz_shadow_bound(*m, *b, *c)?,
            });
            print_json(out, &value)?;
        }
        ShadowCmd::Exact { family, c } => {
            let fam = read_family(open(family)?)?;
            write_family(&exact_shadow(&fam, *c)?, out)?;
        }
        ShadowCmd::Colex { m, b } => write_family(&colex_segment(*m, *b)?, out)?,
    }
    Ok(Outcome::Ok)
}

fn digits(cmd: &DigitsCmd, cap: u128, out: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        DigitsCmd::Dump { i, n } => write_integer_set(build_digit_set(*i, *n)?.members(), out)?,
        DigitsCmd::Multiscale { p, n } => {
            write_integer_set(build_multiscale_set_with_cap(*p, *n, cap)?.members(), out)?
        }
        DigitsCmd::Radius { i, p, xs } => {
            let radius = match (i, p) {
                (Some(i), None) => find_radius(xs, *i)?,
                (None, Some(p)) => {
                    find_radius_multiscale(xs, &build_multiscale_set_with_cap(*p, xs.len(), cap)?)?
                }
                _ => return Err(Error::invalid("pass exactly one of --i and --p")),
            };
            print_json(out, &json!({ "radius": radius }))?;
        }
        DigitsCmd::Cover { len, input, p, n } => {
            let values = match (input, p, n) {
                (Some(path), None, None) => read_integer_set(open(path)?)?,
                (None, Some(p), Some(n)) => build_multiscale_set_with_cap(*p, *n, cap)?
                    .members()
                    .to_vec(),
                _ => return Err(Error::invalid("pass --input, or both --p and --n")),
            };
            print_json(
                out,
                &json!({ "count": interval_cover_count(&values, *len)? }),
            )?;
        }
    }
    Ok(Outcome::Ok)
}

fn cantor(cmd: &CantorCmd, cap: u128, out: &mut dyn Write) -> Result<Outcome> {
    let stages = |a: &StageArgs| vertex_stages(a.n, &parse_rational(&a.t)?, a.depth);
    match cmd {
        CantorCmd::Stages(a) => {
            let vs = stages(a)?;
            let value = json!({
                "n": vs.n,
                "t": format_rational(&vs.t),
                "a": vs.a,
                "t_stages": vs.t_stages,
                "flags": { "a": vs.a.flags(), "t": vs.t_stages.flags() },
                "ratios": { "a": vs.a.ratio_table(), "t": vs.t_stages.ratio_table() },
            });
            print_json(out, &value)?;
        }
        CantorCmd::Sum { stages: a, set } => {
            let vs = stages(a)?;
            let spec = match set {
                StageSet::A => &vs.a,
                StageSet::T => &vs.t_stages,
            };
            let sum = truncated_sum_with_cap(spec, a.depth as usize, cap)?;
            write_rationals(&sum.points, out)?;
        }
        CantorCmd::Boxcount { input, scale } => {
            let pts = read_rationals(open(input)?)?;
            let count = box_count(&pts, &parse_rational(scale)?)?;
            print_json(out, &json!({ "count": count }))?;
        }
        CantorCmd::Fit { input, scales, csv } => {
            let pts = read_rationals(open(input)?)?;
            let scales = scales
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()?;
            let est = dimension_estimate(&pts, &scales)?;
            if *csv {
                write_box_counts_csv(&est.table, out)?;
            } else {
                print_json(out, &est)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn run_report(a: &ReportArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir)?;
    }
    let mut sections = Vec::new();
    for step in report::STEPS {
        let section = step()?;
        let _ = writeln!(
            err,
            "[{}] {}: {}",
            section.criterion,
            if section.pass { "pass" } else { "fail" },
            section.title
        );
        if let Some(dir) = &a.out {
            std::fs::write(
                dir.join(format!("criterion_{}.csv", section.criterion)),
                &section.csv,
            )?;
        }
        sections.push(section);
    }
    if let Some(dir) = &a.out {
        let mut w = create(&dir.join("summary.json"))?;
        print_json(&mut w, &sections)?;
        w.flush()?;
    }
    print_json(out, &sections)?;
    Ok(if sections.iter().any(|s| s.verifier_failed) {
        Outcome::Rejected
    } else {
        Outcome::Ok
    })
}
