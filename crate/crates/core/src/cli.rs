//! Command-line interface: stay-map computation, the brute-force oracle,
//! trajectory generation, and the scaling benchmark harness.
//!
//! Exit codes: 0 success, 1 internal error, 2 input error.

use crate::generators::{self, GridConstructionParams};
use crate::geom::Point2;
use crate::io::{self, ParsedTrajectory, RegionFile};
use crate::oracle::{self, Classification};
use crate::scalar::{format_scalar, Rat, Scalar};
use crate::staymap1d::staymap_1d;
use crate::staymap2d::{approx_staymap, snapshot_times, StayMap2d};
use crate::svg::render_svg;
use crate::trajectory::StayParams;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use std::fmt;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Debug)]
pub enum CliError {
    /// Bad input (malformed files, invalid parameters): exit 2.
    Input(String),
    /// Everything else: exit 1.
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {}", m),
            CliError::Internal(m) => write!(f, "error: {}", m),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

fn input_err(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}

#[derive(Parser, Debug)]
#[command(
    name = "staymap",
    about = "Stay points with bounded gaps: exact 1D stay maps, approximate 2D stay maps, and a brute-force oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact stay map of a 1D trajectory (CSV with header t,x).
    Staymap1d(Staymap1dArgs),
    /// (1+eps)-approximate stay map of a 2D trajectory (CSV with header t,x,y).
    Staymap2d(Staymap2dArgs),
    /// Max-gap oracle: classify a probe point or a whole grid.
    Oracle(OracleArgs),
    /// Emit synthetic trajectories as CSV on stdout.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Timing and output-size tables for the scaling claims.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct Staymap1dArgs {
    /// Input CSV path, or '-' for stdin.
    pub input: PathBuf,
    #[arg(short = 's', long = "side")]
    pub side: String,
    #[arg(short = 'g', long = "gap")]
    pub gap: String,
}

#[derive(Args, Debug)]
pub struct Staymap2dArgs {
    /// Input CSV path, or '-' for stdin.
    pub input: PathBuf,
    #[arg(short = 's', long = "side")]
    pub side: String,
    #[arg(short = 'g', long = "gap")]
    pub gap: String,
    #[arg(short = 'e', long = "epsilon")]
    pub epsilon: String,
    /// Also render the trajectory and stay map to an SVG file.
    #[arg(long = "svg")]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Input CSV path, or '-' for stdin.
    pub input: PathBuf,
    #[arg(short = 's', long = "side")]
    pub side: String,
    #[arg(short = 'g', long = "gap")]
    pub gap: String,
    #[arg(short = 'e', long = "epsilon")]
    pub epsilon: Option<String>,
    /// Probe point: X for 1D input, X,Y for 2D input.
    #[arg(long = "probe", conflicts_with = "grid")]
    pub probe: Option<String>,
    /// Grid scan XMIN,YMIN,XMAX,YMAX,STEP (2D input only).
    #[arg(long = "grid")]
    pub grid: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum GenerateCommand {
    /// The strip-grid construction with an m-by-m cluster stay map.
    Grid(GenerateGridArgs),
    /// Seeded random walk.
    Walk(GenerateWalkArgs),
}

#[derive(Args, Debug)]
pub struct GenerateGridArgs {
    #[arg(short = 'm', long = "strips")]
    pub m: u32,
    #[arg(short = 's', long = "side")]
    pub side: String,
    #[arg(short = 'g', long = "gap")]
    pub gap: String,
    #[arg(long = "speed-factor")]
    pub speed_factor: Option<String>,
}

#[derive(Args, Debug)]
pub struct GenerateWalkArgs {
    #[arg(short = 'n', long = "vertices")]
    pub n: usize,
    #[arg(long = "dim", default_value_t = 2)]
    pub dim: usize,
    #[arg(long = "seed", default_value_t = 0)]
    pub seed: u64,
    #[arg(long = "step-scale", default_value = "1")]
    pub step_scale: String,
    #[arg(long = "dt-scale", default_value = "1")]
    pub dt_scale: String,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(value_enum)]
    pub suite: BenchSuite,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum BenchSuite {
    #[value(name = "1d-scaling")]
    OneDScaling,
    #[value(name = "2d-scaling")]
    TwoDScaling,
    #[value(name = "grid-faces")]
    GridFaces,
}

pub fn run(cli: Cli, out: &mut impl std::io::Write) -> Result<(), CliError> {
    match cli.command {
        Command::Staymap1d(args) => cmd_staymap1d(&args, out),
        Command::Staymap2d(args) => cmd_staymap2d(&args, out),
        Command::Oracle(args) => cmd_oracle(&args, out),
        Command::Generate(args) => cmd_generate(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| input_err(format!("reading stdin: {}", e)))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| input_err(format!("reading {}: {}", path.display(), e)))
    }
}

fn scalar_arg(text: &str, what: &str) -> Result<Rat, CliError> {
    Rat::from_decimal(text).ok_or_else(|| input_err(format!("invalid {}: {:?}", what, text)))
}

fn positive_scalar_arg(text: &str, what: &str) -> Result<Rat, CliError> {
    let v = scalar_arg(text, what)?;
    if v <= Rat::zero() {
        return Err(input_err(format!("{} must be positive", what)));
    }
    Ok(v)
}

fn parse_csv(text: &str) -> Result<ParsedTrajectory<Rat>, CliError> {
    io::parse_trajectory_csv(text).map_err(|e| input_err(e.to_string()))
}

fn write_line(out: &mut impl std::io::Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{}", line).map_err(|e| CliError::Internal(e.to_string()))
}

fn cmd_staymap1d(args: &Staymap1dArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let side = positive_scalar_arg(&args.side, "side")?;
    let gap = positive_scalar_arg(&args.gap, "gap")?;
    let traj = match parse_csv(&read_input(&args.input)?)? {
        ParsedTrajectory::One(t) => t,
        ParsedTrajectory::Two(_) => {
            return Err(input_err("staymap1d expects a 1D trajectory (header t,x)"))
        }
    };
    let params = StayParams::new(side, gap).map_err(|e| input_err(e.to_string()))?;
    let map = staymap_1d(&traj, &params);
    write_line(out, &RegionFile::from_interval(&map).to_json())
}

fn cmd_staymap2d(args: &Staymap2dArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let side = positive_scalar_arg(&args.side, "side")?;
    let gap = positive_scalar_arg(&args.gap, "gap")?;
    let mut epsilon = positive_scalar_arg(&args.epsilon, "epsilon")?;
    let traj = match parse_csv(&read_input(&args.input)?)? {
        ParsedTrajectory::Two(t) => t,
        ParsedTrajectory::One(_) => {
            return Err(input_err(
                "staymap2d expects a 2D trajectory (header t,x,y)",
            ))
        }
    };
    // The schedule analysis assumes eps <= D/g; clamp and warn beyond it.
    let duration = traj.duration();
    if duration > Rat::zero() {
        let max_eps = duration.clone() / gap.clone();
        if epsilon > max_eps {
            eprintln!(
                "warning: epsilon {} exceeds duration/gap = {}; clamping",
                format_scalar(&epsilon),
                format_scalar(&max_eps)
            );
            epsilon = max_eps;
        }
    }
    let params =
        StayParams::with_epsilon(side, gap, epsilon).map_err(|e| input_err(e.to_string()))?;
    let map = approx_staymap(&traj, &params);
    if let Some(svg_path) = &args.svg {
        let set = match &map {
            StayMap2d::WholePlane => crate::staymap2d::RegionSet::empty(),
            StayMap2d::Region(region) => region.to_polygons(),
        };
        let svg = render_svg(&traj, &set);
        fs::write(svg_path, svg)
            .map_err(|e| CliError::Internal(format!("writing {}: {}", svg_path.display(), e)))?;
    }
    write_line(out, &RegionFile::from_staymap2d(&map).to_json())
}

fn classification_name(c: Classification) -> &'static str {
    match c {
        Classification::Exact => "Exact",
        Classification::ApproxOnly => "ApproxOnly",
        Classification::Outside => "Outside",
    }
}

fn cmd_oracle(args: &OracleArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let side = positive_scalar_arg(&args.side, "side")?;
    let gap = positive_scalar_arg(&args.gap, "gap")?;
    let mut params = StayParams::new(side, gap).map_err(|e| input_err(e.to_string()))?;
    if let Some(e) = &args.epsilon {
        params.epsilon = Some(positive_scalar_arg(e, "epsilon")?);
    }
    let parsed = parse_csv(&read_input(&args.input)?)?;

    match (&args.probe, &args.grid) {
        (Some(probe), None) => {
            let fields: Vec<&str> = probe.split(',').collect();
            match (&parsed, fields.as_slice()) {
                (ParsedTrajectory::One(traj), [x]) => {
                    let p = scalar_arg(x, "probe")?;
                    let report = oracle::max_gap_1d(traj, &p, &params.side);
                    let class = oracle::classify_gap(&report.max_gap, &params);
                    write_line(out, &format!("max_gap {}", format_scalar(&report.max_gap)))?;
                    write_line(
                        out,
                        &format!(
                            "witness {} {}",
                            format_scalar(&report.witness.0),
                            format_scalar(&report.witness.1)
                        ),
                    )?;
                    write_line(out, &format!("class {}", classification_name(class)))
                }
                (ParsedTrajectory::Two(traj), [x, y]) => {
                    let p = Point2::new(scalar_arg(x, "probe x")?, scalar_arg(y, "probe y")?);
                    let report = oracle::max_gap_2d(traj, &p, &params.side);
                    let class = oracle::classify_gap(&report.max_gap, &params);
                    write_line(out, &format!("max_gap {}", format_scalar(&report.max_gap)))?;
                    write_line(
                        out,
                        &format!(
                            "witness {} {}",
                            format_scalar(&report.witness.0),
                            format_scalar(&report.witness.1)
                        ),
                    )?;
                    write_line(out, &format!("class {}", classification_name(class)))
                }
                (ParsedTrajectory::One(_), _) => {
                    Err(input_err("1D probe must be a single coordinate"))
                }
                (ParsedTrajectory::Two(_), _) => Err(input_err("2D probe must be X,Y")),
            }
        }
        (None, Some(grid)) => {
            let traj = match &parsed {
                ParsedTrajectory::Two(t) => t,
                ParsedTrajectory::One(_) => {
                    return Err(input_err("grid scans need a 2D trajectory"))
                }
            };
            let fields: Vec<&str> = grid.split(',').collect();
            let [x_min, y_min, x_max, y_max, step] = fields.as_slice() else {
                return Err(input_err("grid must be XMIN,YMIN,XMAX,YMAX,STEP"));
            };
            let lo = Point2::new(scalar_arg(x_min, "xmin")?, scalar_arg(y_min, "ymin")?);
            let hi = Point2::new(scalar_arg(x_max, "xmax")?, scalar_arg(y_max, "ymax")?);
            let step = positive_scalar_arg(step, "step")?;
            if lo.x > hi.x || lo.y > hi.y {
                return Err(input_err("grid bounds are inverted"));
            }
            let scan = oracle::grid_scan(traj, (&lo, &hi), &step, &params);
            for (i, j) in scan.iter_points() {
                let p = scan.point(i, j);
                write_line(
                    out,
                    &format!(
                        "point {} {} class {}",
                        format_scalar(&p.x),
                        format_scalar(&p.y),
                        classification_name(scan.classification(i, j))
                    ),
                )?;
            }
            write_line(
                out,
                &format!("exact_clusters {}", scan.exact_cluster_count()),
            )
        }
        (None, None) => Err(input_err("oracle needs --probe or --grid")),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn cmd_generate(cmd: &GenerateCommand, out: &mut impl std::io::Write) -> Result<(), CliError> {
    match cmd {
        GenerateCommand::Grid(args) => {
            if args.m == 0 {
                return Err(input_err("m must be at least 1"));
            }
            let side = positive_scalar_arg(&args.side, "side")?;
            let gap = positive_scalar_arg(&args.gap, "gap")?;
            let mut params = GridConstructionParams::new(args.m, side, gap);
            if let Some(f) = &args.speed_factor {
                let f = positive_scalar_arg(f, "speed-factor")?;
                if f < Rat::one() {
                    return Err(input_err("speed-factor must be at least 1"));
                }
                params.speed_factor = f;
            }
            let traj = generators::grid_construction(&params);
            write!(out, "{}", io::trajectory2_to_csv(&traj))
                .map_err(|e| CliError::Internal(e.to_string()))
        }
        GenerateCommand::Walk(args) => {
            if args.n == 0 {
                return Err(input_err("n must be at least 1"));
            }
            let step = positive_scalar_arg(&args.step_scale, "step-scale")?;
            let dt = positive_scalar_arg(&args.dt_scale, "dt-scale")?;
            let csv = match args.dim {
                1 => io::trajectory1_to_csv(&generators::random_walk_1d::<Rat>(
                    args.n, args.seed, &step, &dt,
                )),
                2 => io::trajectory2_to_csv(&generators::random_walk_2d::<Rat>(
                    args.n, args.seed, &step, &dt,
                )),
                other => return Err(input_err(format!("dim must be 1 or 2, got {}", other))),
            };
            write!(out, "{}", csv).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn cmd_bench(args: &BenchArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    match args.suite {
        BenchSuite::OneDScaling => bench_1d_scaling(out),
        BenchSuite::TwoDScaling => bench_2d_scaling(out),
        BenchSuite::GridFaces => bench_grid_faces(out),
    }
}

/// Doubling n on the f64 fast path; the per-doubling time ratio stays near
/// 2 for an O(n log n) sweep.
fn bench_1d_scaling(out: &mut impl std::io::Write) -> Result<(), CliError> {
    write_line(out, "n\ttime_ms\tratio")?;
    let params = StayParams::new(1.0f64, 40.0).expect("static params");
    let mut prev: Option<f64> = None;
    let mut n = 1usize << 14;
    while n <= (1 << 20) {
        let traj = generators::random_walk_1d::<f64>(n, 1, &1.0, &1.0);
        let start = Instant::now();
        let map = staymap_1d(&traj, &params);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let ratio = prev.map(|p| ms / p);
        write_line(
            out,
            &format!(
                "{}\t{:.1}\t{}\t{:?}",
                n,
                ms,
                match ratio {
                    Some(r) => format!("{:.2}", r),
                    None => "-".to_string(),
                },
                map_kind(&map)
            ),
        )?;
        prev = Some(ms);
        n <<= 1;
    }
    Ok(())
}

fn map_kind<S: Scalar>(map: &crate::staymap1d::Interval1D<S>) -> &'static str {
    match map {
        crate::staymap1d::Interval1D::Empty => "empty",
        crate::staymap1d::Interval1D::Bounded { .. } => "bounded",
        crate::staymap1d::Interval1D::WholeLine => "whole_line",
    }
}

/// Halving epsilon doubles the snapshot count (the lambda = eps*g schedule
/// arithmetic), and the approximate map is recomputed at each setting.
fn bench_2d_scaling(out: &mut impl std::io::Write) -> Result<(), CliError> {
    write_line(out, "epsilon\tsnapshots\ttime_ms\tpolygons")?;
    let one = Rat::one();
    let traj = generators::random_walk_2d::<Rat>(24, 5, &one, &one);
    let duration = traj.duration();
    let gap = duration.clone() / Rat::from_int(5);
    let mut eps = Rat::one();
    for _ in 0..4 {
        let params = StayParams::with_epsilon(Rat::one(), gap.clone(), eps.clone())
            .expect("static params");
        let times = snapshot_times(&duration, &params).map_err(|e| {
            CliError::Internal(format!("snapshot schedule: {}", e))
        })?;
        let start = Instant::now();
        let map = approx_staymap(&traj, &params);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let polys = match &map {
            StayMap2d::WholePlane => 0,
            StayMap2d::Region(r) => r.to_polygons().polygon_count(),
        };
        write_line(
            out,
            &format!(
                "{}\t{}\t{:.1}\t{}",
                format_scalar(&eps),
                times.len(),
                ms,
                polys
            ),
        )?;
        eps = eps.half();
    }
    Ok(())
}

/// Oracle cluster counts for the strip-grid construction: quadrupling
/// faces per doubling of m.
fn bench_grid_faces(out: &mut impl std::io::Write) -> Result<(), CliError> {
    write_line(out, "m\tclusters\ttime_ms")?;
    for m in [2u32, 4, 8] {
        let params = GridConstructionParams::new(m, 1.0f64, 4.0);
        let traj = generators::grid_construction(&params);
        let stay = StayParams::new(1.0f64, 4.0).expect("static params");
        let step = 1.0 / (4.0 * m as f64);
        let start = Instant::now();
        let scan = oracle::grid_scan(
            &traj,
            (&Point2::new(-1.5, -1.5), &Point2::new(2.75, 2.75)),
            &step,
            &stay,
        );
        let ms = start.elapsed().as_secs_f64() * 1e3;
        write_line(
            out,
            &format!("{}\t{}\t{:.1}", m, scan.exact_cluster_count(), ms),
        )?;
    }
    Ok(())
}
