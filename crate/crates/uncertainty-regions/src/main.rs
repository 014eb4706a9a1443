//! `uncreg`: command-line front end for the uncertainty-region library.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use uncertainty_regions::curve::{CurveSegment, FormulaId, SampledCurve};
use uncertainty_regions::error::Error;
use uncertainty_regions::oracle::{scan_extended_pair, scan_gellmann, scan_qubit_pair};
use uncertainty_regions::plot::{
    qp_envelope_curves, region_csv_string, rows_from_curves, rows_from_scan, svg_string,
    CurveStyle, PlotCurve, PlotSpec, RegionRow, RowKind,
};
use uncertainty_regions::quantum::Scale;
use uncertainty_regions::qubit_regions::{pair_boundary_segments, QubitPair};
use uncertainty_regions::qutrit_regions::{gm_boundary_segments, gm_segment_value};
use uncertainty_regions::verify::{run_suite, VerifyConfig};

#[derive(Parser)]
#[command(name = "uncreg", version, about = "uncertainty regions for qubit and qutrit observables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Args)]
struct OutputOpts {
    /// Output file; CSV defaults to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Boundaries of the sharp qubit pair region at angle θ.
    QubitRegion {
        /// Angle between the Bloch vectors: radians or pi/16, pi/8, pi/4,
        /// 3pi/8, 7pi/16, pi/2.
        #[arg(long, default_value = "pi/4")]
        theta: String,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        overlay_oracle: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Fixed-Δ(σz) slices of the orthogonal-triple region.
    TripleRegion {
        #[arg(long, default_value_t = 5)]
        slices: usize,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Position–momentum hyperbola with tangent lines and ellipses.
    QpEnvelope {
        /// Scale parameters ℓ of the tangent family.
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,2")]
        ell: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Region for qubit observables extended by a zero block.
    ExtendedRegion {
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long)]
        overlay_oracle: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Region for the Gell-Mann observable pair.
    GellmannRegion {
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long)]
        overlay_oracle: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Run a verification suite.
    Verify {
        /// One of: qubit-thm1, qubit-identities, triple, extended,
        /// gellmann-curves, gellmann-gap, qp-equivalence.
        suite: String,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5e-3)]
        tol: f64,
    },
}

fn parse_theta(token: &str) -> Result<f64, Error> {
    use std::f64::consts::PI;
    let theta = match token {
        "pi/16" => PI / 16.0,
        "pi/8" => PI / 8.0,
        "pi/4" => PI / 4.0,
        "3pi/8" => 3.0 * PI / 8.0,
        "7pi/16" => 7.0 * PI / 16.0,
        "pi/2" => PI / 2.0,
        other => other
            .parse::<f64>()
            .map_err(|_| Error::invalid(format!("unrecognized angle {other:?}")))?,
    };
    if !(0.0..=PI / 2.0 + 1e-12).contains(&theta) {
        return Err(Error::invalid("theta must lie in [0, pi/2]"));
    }
    Ok(theta)
}

fn curves_to_plot(curves: &[SampledCurve<f64>], dashed_from: usize) -> Vec<PlotCurve> {
    curves
        .iter()
        .enumerate()
        .map(|(i, c)| PlotCurve {
            label: c.segment.formula.name().to_string(),
            style: if i >= dashed_from {
                CurveStyle::Dashed
            } else {
                CurveStyle::Solid
            },
            points: c.points.clone(),
        })
        .collect()
}

fn emit(output: &OutputOpts, rows: Vec<RegionRow>, spec: PlotSpec) -> Result<(), Error> {
    match output.format {
        Format::Csv => {
            let text = region_csv_string(&rows);
            match &output.out {
                Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e))?,
                None => print!("{text}"),
            }
        }
        Format::Svg => {
            let text = svg_string(&spec);
            match &output.out {
                Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e))?,
                None => print!("{text}"),
            }
        }
    }
    Ok(())
}

fn cmd_qubit_region(
    theta: &str,
    grid: usize,
    samples: u64,
    seed: u64,
    overlay: bool,
    output: &OutputOpts,
) -> Result<(), Error> {
    let theta = parse_theta(theta)?;
    if theta == 0.0 {
        eprintln!("warning: theta = 0 gives a degenerate pair; the region collapses to the diagonal");
    }
    let pair = QubitPair::from_angle(theta)?;
    let curves = pair_boundary_segments(&pair, grid)?;
    let mut rows = rows_from_curves(&curves);
    let mut spec = PlotSpec::new(
        format!("qubit pair region, theta = {theta:.6}"),
        "std dev of A",
        "std dev of B",
        (0.0, 1.0),
        (0.0, 1.0),
    )?;
    spec.curves = curves_to_plot(&curves, 2);
    if overlay {
        let scan = scan_qubit_pair(&pair, grid.max(2), samples, (samples / 10).max(1), seed)?;
        rows.extend(rows_from_scan(&scan, "qubit-ball-scan"));
        spec.raster = Some(scan);
    }
    emit(output, rows, spec)
}

fn cmd_triple_region(slices: usize, grid: usize, output: &OutputOpts) -> Result<(), Error> {
    if slices == 0 || grid < 2 {
        return Err(Error::invalid("slices must be >= 1 and grid >= 2"));
    }
    let mut rows = Vec::new();
    let mut spec = PlotSpec::new(
        "triple region slices at fixed std dev of sigma_z",
        "std dev of sigma_x",
        "std dev of sigma_y",
        (0.0, 1.0),
        (0.0, 1.0),
    )?;
    for s in 0..slices {
        let dz = if slices == 1 {
            1.0
        } else {
            s as f64 / (slices - 1) as f64
        };
        let level = 2.0 - dz * dz;
        // inner boundary Δx² + Δy² = level, clipped to the unit square
        let x_lo = (level - 1.0).max(0.0).sqrt();
        let x_hi = level.sqrt().min(1.0);
        let source = format!("triple-slice-inner dz={dz:.6}");
        let mut points = Vec::with_capacity(grid);
        for i in 0..grid {
            let x = x_lo + (x_hi - x_lo) * i as f64 / (grid - 1) as f64;
            let y = (level - x * x).max(0.0).sqrt().min(1.0);
            rows.push(RegionRow {
                x,
                y_min: y,
                y_max: y,
                kind: RowKind::Analytic,
                source: source.clone(),
            });
            points.push((x, y));
        }
        spec.curves.push(PlotCurve {
            label: source,
            style: CurveStyle::Solid,
            points,
        });
    }
    emit(output, rows, spec)
}

fn cmd_qp_envelope(ell: &[f64], grid: usize, output: &OutputOpts) -> Result<(), Error> {
    let env = qp_envelope_curves(0.5, ell, grid)?;
    let mut rows = Vec::new();
    for c in &env.spec.curves {
        for &(x, y) in &c.points {
            rows.push(RegionRow {
                x,
                y_min: y,
                y_max: y,
                kind: RowKind::Analytic,
                source: c.label.clone(),
            });
        }
    }
    emit(output, rows, env.spec)
}

fn cmd_extended_region(grid: usize, overlay: bool, output: &OutputOpts) -> Result<(), Error> {
    if grid < 2 {
        return Err(Error::invalid("grid must be >= 2"));
    }
    let lower = CurveSegment::new(FormulaId::ExtendedLower, 0.0, 1.0, Scale::StdDev)?;
    let lower = SampledCurve::from_fn(lower, grid, |x: f64| x * (1.0 - x * x).max(0.0).sqrt())?;
    let qubit_sub = CurveSegment::new(FormulaId::ExtendedQubitSub, 0.0, 1.0, Scale::StdDev)?;
    let qubit_sub = SampledCurve::from_fn(qubit_sub, grid, |x: f64| (1.0 - x * x).max(0.0).sqrt())?;
    let mut rows = rows_from_curves(&[lower.clone(), qubit_sub.clone()]);
    // mirrored lower boundary, parameterized by the ordinate
    let mirror_name = FormulaId::ExtendedMirror.name();
    let mut mirror_points = Vec::with_capacity(grid);
    for i in 0..grid {
        let t = i as f64 / (grid - 1) as f64;
        let x = t * (1.0 - t * t).max(0.0).sqrt();
        rows.push(RegionRow {
            x,
            y_min: t,
            y_max: t,
            kind: RowKind::Analytic,
            source: mirror_name.to_string(),
        });
        mirror_points.push((x, t));
    }
    let mut spec = PlotSpec::new(
        "extended qubit pair region",
        "std dev of A",
        "std dev of B",
        (0.0, 1.0),
        (0.0, 1.0),
    )?;
    spec.curves = curves_to_plot(&[lower, qubit_sub], 1);
    spec.curves.push(PlotCurve {
        label: mirror_name.to_string(),
        style: CurveStyle::Solid,
        points: mirror_points,
    });
    if overlay {
        let scan = scan_extended_pair(0.0, 201, 201, grid.max(2), Scale::StdDev)?;
        rows.extend(rows_from_scan(&scan, "extended-lattice-scan"));
        spec.raster = Some(scan);
    }
    emit(output, rows, spec)
}

fn cmd_gellmann_region(grid: usize, overlay: bool, output: &OutputOpts) -> Result<(), Error> {
    if grid < 2 {
        return Err(Error::invalid("grid must be >= 2"));
    }
    let mut curves = Vec::new();
    for seg in gm_boundary_segments::<f64>() {
        let f = seg.formula;
        // at least 2 points, proportional to the segment's share of [0, 1]
        let n = ((seg.domain.1 - seg.domain.0) * grid as f64).ceil() as usize + 2;
        curves.push(SampledCurve::from_fn(seg, n, |x| {
            gm_segment_value::<f64>(f, x).unwrap()
        })?);
    }
    let mut rows = rows_from_curves(&curves);
    let mut spec = PlotSpec::new(
        "Gell-Mann pair uncertainty region",
        "variance of A",
        "variance of B",
        (0.0, 1.0),
        (0.0, 1.0),
    )?;
    spec.curves = curves_to_plot(&curves, curves.len());
    if overlay {
        let scan = scan_gellmann(201, 201, 15, 6, grid.max(2))?;
        rows.extend(rows_from_scan(&scan, "gellmann-lattice-scan"));
        spec.raster = Some(scan);
    }
    emit(output, rows, spec)
}

fn cmd_verify(suite: &str, samples: u64, seed: u64, tol: f64) -> Result<bool, Error> {
    if tol <= 0.0 || samples == 0 {
        return Err(Error::invalid("samples must be >= 1 and tol > 0"));
    }
    let cfg = VerifyConfig { samples, seed, tol };
    let results = run_suite(suite, &cfg)?;
    let mut all_pass = true;
    for r in &results {
        println!("{}", r.line());
        all_pass &= r.pass;
    }
    Ok(all_pass)
}

fn run(cli: Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::QubitRegion {
            theta,
            grid,
            samples,
            seed,
            overlay_oracle,
            output,
        } => {
            cmd_qubit_region(theta, *grid, *samples, *seed, *overlay_oracle, output)?;
            Ok(true)
        }
        Command::TripleRegion {
            slices,
            grid,
            output,
        } => {
            cmd_triple_region(*slices, *grid, output)?;
            Ok(true)
        }
        Command::QpEnvelope { ell, grid, output } => {
            cmd_qp_envelope(ell, *grid, output)?;
            Ok(true)
        }
        Command::ExtendedRegion {
            grid,
            overlay_oracle,
            output,
        } => {
            cmd_extended_region(*grid, *overlay_oracle, output)?;
            Ok(true)
        }
        Command::GellmannRegion {
            grid,
            overlay_oracle,
            output,
        } => {
            cmd_gellmann_region(*grid, *overlay_oracle, output)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            tol,
        } => cmd_verify(suite, *samples, *seed, *tol),
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("UA_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e @ Error::InvalidInput(_)) => {
            eprintln!("error: {e}");
            eprintln!("run with --help for usage");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
