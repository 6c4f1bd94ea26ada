//! Argument parsing and command implementations for the `fatpoints` binary.

pub mod record;
pub mod render;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatpoints::combinatorics::{HfValue, Source};
use fatpoints::formulas::{hf_uniform, reduce_to_plane, table_region};
use fatpoints::horace::{
    castelnuovo_check, specialize_triple_step1, specialize_triple_step2, triple_chain,
};
use fatpoints::oracle::{
    hf_uniform_oracle, reduction_dims, DEFAULT_PRIME, DEFAULT_SEED, DEFAULT_TRIALS,
};
use fatpoints::{BiDegree, Error, OracleConfig, TheoremTag, UniformFatPoints};
use rayon::prelude::*;

pub use record::OutputRecord;

#[derive(Debug, Parser)]
#[command(
    name = "fatpoints",
    version,
    about = "Bi-graded Hilbert functions of general fat points on P1 x P1"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function at a single bidegree
    Hf(HfArgs),
    /// Grid of values, row b and column a from 0
    Table(TableArgs),
    /// Compare every closed-form cell of a rectangle against the oracle
    Verify(VerifyArgs),
    /// List defective bidegrees in a rectangle
    Defects(DefectsArgs),
    /// Show the plane scheme of the reduction and compare both dimensions
    Reduce(ReduceArgs),
    /// Run the two line specializations for triple points
    Horace(HoraceArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OracleArgs {
    /// Random supports per instance; the maximum rank is kept
    #[arg(long, env = "FATPOINTS_TRIALS", default_value_t = DEFAULT_TRIALS)]
    pub trials: u32,
    #[arg(long, env = "FATPOINTS_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Prime modulus, between 2^30 and 2^32
    #[arg(long, env = "FATPOINTS_PRIME", default_value_t = DEFAULT_PRIME)]
    pub prime: u64,
}

impl OracleArgs {
    pub fn config(&self) -> fatpoints::Result<OracleConfig> {
        let cfg = OracleConfig {
            prime: self.prime,
            trials: self.trials,
            seed: self.seed,
        };
        cfg.field()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct PointArgs {
    /// Multiplicity of every point
    #[arg(long)]
    pub m: u64,
    /// Number of points
    #[arg(long)]
    pub s: u64,
}

impl PointArgs {
    fn points(&self) -> fatpoints::Result<UniformFatPoints> {
        UniformFatPoints::new(self.s, self.m)
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RegionArgs {
    #[arg(long)]
    pub amax: u64,
    #[arg(long)]
    pub bmax: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formula,
    Oracle,
    /// Formula where one applies, oracle elsewhere
    Auto,
}

#[derive(Debug, Args)]
pub struct HfArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[command(flatten)]
    pub points: PointArgs,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub region: RegionArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Append `*` to defective values in the text grid
    #[arg(long)]
    pub mark_defective: bool,
    /// Compute cells with no closed form by the oracle
    #[arg(long)]
    pub oracle_unknown: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub region: RegionArgs,
    #[command(flatten)]
    pub oracle: OracleArgs,
    /// Adds one to the first closed-form value, to exercise the mismatch report
    #[arg(long, hide = true)]
    pub perturb: bool,
}

#[derive(Debug, Args)]
pub struct DefectsArgs {
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub region: RegionArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[command(flatten)]
    pub points: PointArgs,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Debug, Args)]
pub struct HoraceArgs {
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    /// Number of triple points
    #[arg(long)]
    pub s: u64,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

/// What a command printed and whether it found a disagreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub agreed: bool,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            agreed: true,
        }
    }
}

/// Exit status for an error: 1 when two computations disagreed, 2 for bad
/// input or configuration.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Inconsistent(_)) => 1,
        _ => 2,
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Hf(args) => cmd_hf(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Defects(args) => cmd_defects(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Horace(args) => cmd_horace(args),
    }
}

fn emit(records: &[OutputRecord], format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => records.iter().map(|r| r.text_line() + "\n").collect(),
        Format::Csv => render::csv(records),
        Format::Json => serde_json::to_string_pretty(records)? + "\n",
    })
}

fn oracle_value(
    deg: BiDegree,
    pts: UniformFatPoints,
    cfg: &OracleConfig,
    known: bool,
) -> fatpoints::Result<HfValue> {
    HfValue::new(
        deg,
        pts,
        hf_uniform_oracle(deg, pts, cfg)?,
        Source::Oracle,
        known,
    )
}

pub fn cmd_hf(args: &HfArgs) -> anyhow::Result<Outcome> {
    let deg = BiDegree::new(args.a, args.b);
    let pts = args.points.points()?;
    let eval = hf_uniform(deg, pts)?;
    let value = match (args.mode, eval.value()) {
        (Mode::Formula, v) => v.copied(),
        (Mode::Auto, Some(v)) => Some(*v),
        (Mode::Oracle | Mode::Auto, _) => Some(oracle_value(
            deg,
            pts,
            &args.oracle.config()?,
            eval.is_known(),
        )?),
    };
    let record = OutputRecord::new(deg, pts, value.as_ref());
    let output = match args.format {
        Format::Json => serde_json::to_string_pretty(&record)? + "\n",
        f => emit(&[record], f)?,
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_table(args: &TableArgs) -> anyhow::Result<Outcome> {
    let pts = args.points.points()?;
    let cfg = args.oracle.config()?;
    let oracle = args.oracle_unknown.then_some(&cfg);
    let table = table_region(pts, args.region.amax, args.region.bmax, oracle)?;
    let output = match args.format {
        Format::Text => render::grid(&table, args.mark_defective),
        f => emit(&render::records(&table), f)?,
    };
    Ok(Outcome::ok(output))
}

pub fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<Outcome> {
    let pts = args.points.points()?;
    let cfg = args.oracle.config()?;
    let table = table_region(pts, args.region.amax, args.region.bmax, None)?;
    let mut known: Vec<HfValue> = Vec::new();
    let mut degs = Vec::new();
    for cell in table.cells() {
        if let Some(v) = cell.value {
            known.push(v);
            degs.push(cell.deg);
        }
    }
    if args.perturb {
        if let Some(v) = known.first_mut() {
            v.value += 1;
        }
    }
    let oracle: Vec<u64> = degs
        .par_iter()
        .map(|&deg| hf_uniform_oracle(deg, pts, &cfg))
        .collect::<fatpoints::Result<_>>()?;

    let mut out = String::new();
    let mut mismatches = 0;
    let mut confirmed = Vec::new();
    for ((deg, f), o) in degs.iter().zip(&known).zip(&oracle) {
        if f.value != *o {
            mismatches += 1;
            writeln!(
                out,
                "mismatch at ({}, {}): formula {}, oracle {o}",
                deg.a, deg.b, f.value
            )?;
        } else if f.defective {
            confirmed.push(format!("({},{})={}", deg.a, deg.b, o));
        }
    }
    let unknown = table.cells().count() - known.len();
    writeln!(
        out,
        "m={} s={}: {} closed-form cells checked against the oracle, {unknown} without closed form skipped",
        pts.m,
        pts.s,
        known.len()
    )?;
    if !confirmed.is_empty() {
        writeln!(out, "defective cells confirmed: {}", confirmed.join(" "))?;
    }
    match mismatches {
        0 => writeln!(out, "all agree")?,
        n => writeln!(out, "{n} mismatches")?,
    }
    Ok(Outcome {
        output: out,
        agreed: mismatches == 0,
    })
}

pub fn cmd_defects(args: &DefectsArgs) -> anyhow::Result<Outcome> {
    let pts = args.points.points()?;
    let table = table_region(pts, args.region.amax, args.region.bmax, None)?;
    let hits: Vec<_> = table
        .cells()
        .filter(|c| {
            c.value.is_some_and(|v| v.defective)
                || c.region.theorem == Some(TheoremTag::AppendixBFamily)
        })
        .collect();
    let output = match args.format {
        Format::Text => {
            let mut out = String::new();
            for c in &hits {
                let v = c.value.expect("defective cells carry a value");
                let theorem = c.region.theorem.map(theorem_label).unwrap_or_default();
                writeln!(
                    out,
                    "({}, {})  HF {}  ideal dim {}  expected {}  defect {}  {theorem}",
                    c.deg.a,
                    c.deg.b,
                    v.value,
                    v.ideal_dim(),
                    v.expected_dim,
                    v.defect
                )?;
            }
            writeln!(out, "{} defective cells", hits.len())?;
            out
        }
        f => {
            let records: Vec<_> = hits
                .iter()
                .map(|c| OutputRecord::new(c.deg, pts, c.value.as_ref()))
                .collect();
            emit(&records, f)?
        }
    };
    Ok(Outcome::ok(output))
}

fn theorem_label(tag: TheoremTag) -> &'static str {
    match tag {
        TheoremTag::Simple => "simple points",
        TheoremTag::MGeB => "m >= min(a, b)",
        TheoremTag::Triple => "triple points",
        TheoremTag::AppendixACode => "double points",
        TheoremTag::AppendixBFamily => "infinite defective family",
    }
}

pub fn cmd_reduce(args: &ReduceArgs) -> anyhow::Result<Outcome> {
    let deg = BiDegree::new(args.a, args.b);
    let pts = args.points.points()?;
    let cfg = args.oracle.config()?;
    let (scheme, d) = reduce_to_plane(deg, pts);
    let (bi, plane) = reduction_dims(deg, pts, &cfg)?;
    let mut out = String::new();
    writeln!(
        out,
        "P1xP1: {} points of multiplicity {} in bidegree ({}, {})",
        pts.s, pts.m, deg.a, deg.b
    )?;
    writeln!(out, "plane: {scheme} in degree {d}")?;
    writeln!(out, "ideal dimension on P1xP1: {bi}")?;
    writeln!(out, "ideal dimension in the plane: {plane}")?;
    writeln!(out, "{}", if bi == plane { "equal" } else { "DIFFERENT" })?;
    Ok(Outcome {
        output: out,
        agreed: bi == plane,
    })
}

pub fn cmd_horace(args: &HoraceArgs) -> anyhow::Result<Outcome> {
    let deg = BiDegree::new(args.a, args.b).normalized();
    let cfg = args.oracle.config()?;
    let step1 = specialize_triple_step1(deg.a, deg.b, args.s)?;
    let step2 = specialize_triple_step2(&step1)?;
    let chain = triple_chain(&step2, &cfg)?;
    let d = step1.degree();
    let first = castelnuovo_check(&step1.x_tilde, d, &cfg)?;
    let second = castelnuovo_check(&step2.t_tilde, d - 2, &cfg)?;

    let mut out = String::new();
    writeln!(
        out,
        "a + b = {d} = 5*{} + {}: x = {}, y = {}",
        step1.h, step1.c, step1.x, step1.y
    )?;
    writeln!(out, "step 1  X~  = {}", step1.x_tilde)?;
    writeln!(out, "        T   = {}", step1.t)?;
    writeln!(
        out,
        "        dim L_{d}(X~) = {}, dim L_{}(T) = {}",
        chain.x_tilde,
        d - 2,
        chain.t
    )?;
    writeln!(
        out,
        "        Castelnuovo in degree {d}: {} <= {} + {}",
        first.lhs, first.rhs_res, first.rhs_tr
    )?;
    writeln!(out, "step 2  T~  = {}", step2.t_tilde)?;
    writeln!(out, "        W   = {}", step2.w)?;
    writeln!(out, "        Res_r(W) = {}", step2.res_w)?;
    writeln!(
        out,
        "        dim L_{}(T~) = {}, dim L_{}(W) = {}",
        d - 2,
        chain.t_tilde,
        d - 4,
        chain.w
    )?;
    writeln!(
        out,
        "        Castelnuovo in degree {}: {} <= {} + {}",
        d - 2,
        second.lhs,
        second.rhs_res,
        second.rhs_tr
    )?;
    let agreed = chain.holds() && first.holds && second.holds;
    writeln!(
        out,
        "{}",
        if agreed {
            "chain verified"
        } else {
            "chain FAILED"
        }
    )?;
    Ok(Outcome {
        output: out,
        agreed,
    })
}
