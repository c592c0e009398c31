//! Command-line front end.
//!
//! Exit codes: 0 when the requested check passes (or the command succeeds),
//! 1 when it fails, 2 when a margin scan is inconclusive, 3 for usage,
//! parse, and domain errors, 4 when iteration hits the step limit without
//! converging.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_complex::Complex64;

use crate::criterion::{check_preservation, classify_boundary, BoundaryClass, Verdict};
use crate::dynamics::{classify_rotation, iterate_to_fixed_point, RotationKind};
use crate::error::{Error, Result};
use crate::io::{write_margin_table, GridSpec, RunReport, SymbolSpec};
use crate::schwarz::{random_schwarz, SchwarzFn, DEFAULT_TOL};
use crate::subordination::{extreme_point, member_from_schwarz};
use crate::taylor::TaylorPoly;
use crate::verify::{claims, run_all, DEFAULT_SEED};

#[derive(Parser)]
#[command(
    name = "diskops",
    version,
    about = "Preservation checks for weighted composition operators on disk subordination classes"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan the preservation margin of a symbol pair over the disk
    Check {
        /// JSON symbol specification
        spec: PathBuf,
        /// Write the JSON run report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write interior margin samples to this CSV file
        #[arg(long)]
        dump_margins: Option<PathBuf>,
        /// Override the tolerance given in the spec file
        #[arg(long)]
        tol: Option<f64>,
        /// Override the grid as radial,angular,ladder (e.g. 24,128,20)
        #[arg(long)]
        grid: Option<String>,
    },
    /// Run the seeded claim battery and print one line per claim
    VerifyExamples {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single claim by name
        #[arg(long)]
        only: Option<String>,
    },
    /// Iterate the operator on a starting series toward its fixed series
    Iterate {
        /// JSON symbol specification
        spec: PathBuf,
        /// Truncation degree of the iterates
        #[arg(long, default_value_t = 64)]
        deg: usize,
        /// Stop when successive iterates agree within this
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        /// Starting series: one, generator, or random
        #[arg(long, default_value = "one")]
        start: String,
        /// Iterate from a second start too and report the limit gap
        #[arg(long)]
        second_start: Option<String>,
        /// Seed for random starts
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify how the symbols behave toward the boundary circle
    Classify {
        /// JSON symbol specification
        spec: PathBuf,
        /// Angle-fraction and triviality tolerance for the classifier
        #[arg(long, default_value_t = 0.02)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Command::Check {
            spec,
            out,
            dump_margins,
            tol,
            grid,
        } => cmd_check(spec, out, dump_margins, tol, grid),
        Command::VerifyExamples { seed, only } => cmd_verify(seed, only),
        Command::Iterate {
            spec,
            deg,
            tol,
            max_iter,
            start,
            second_start,
            seed,
            out,
        } => cmd_iterate(spec, deg, tol, max_iter, start, second_start, seed, out),
        Command::Classify { spec, tol, out } => cmd_classify(spec, tol, out),
    }
}

fn parse_grid(s: &str) -> Result<GridSpec> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Spec {
            field: "grid",
            reason: format!("expected radial,angular,ladder, got `{s}`"),
        });
    }
    let bad = |what: &str| Error::Spec {
        field: "grid",
        reason: format!("cannot parse {what} from `{s}`"),
    };
    Ok(GridSpec {
        radial: parts[0].trim().parse().map_err(|_| bad("radial count"))?,
        angular: parts[1].trim().parse().map_err(|_| bad("angular count"))?,
        boundary_k_max: parts[2].trim().parse().map_err(|_| bad("ladder depth"))?,
    })
}

fn emit(text: String, out: Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_check(
    spec_path: PathBuf,
    out: Option<PathBuf>,
    dump_margins: Option<PathBuf>,
    tol: Option<f64>,
    grid: Option<String>,
) -> Result<i32> {
    let total = Instant::now();
    let mut spec = SymbolSpec::from_path(&spec_path)?;
    if let Some(t) = tol {
        spec.tol = t;
    }
    if let Some(g) = &grid {
        spec.grid = parse_grid(g)?;
    }
    let (sym, grid, tol) = spec.build()?;

    let scan = Instant::now();
    let mut rep = check_preservation(&sym, &grid, tol);
    let scan_ms = scan.elapsed().as_secs_f64() * 1e3;
    let classify = Instant::now();
    rep.boundary = Some(classify_boundary(
        &sym,
        grid.angles(),
        grid.boundary_radii(),
        0.02,
    ));
    let classify_ms = classify.elapsed().as_secs_f64() * 1e3;

    if let Some(path) = dump_margins {
        let mut file = std::fs::File::create(path)?;
        write_margin_table(&sym, &grid, &mut file)?;
    }

    let mut run = RunReport::from_criterion(&rep);
    run.timings.insert("scan_ms".into(), scan_ms);
    run.timings.insert("classify_ms".into(), classify_ms);
    run.timings
        .insert("total_ms".into(), total.elapsed().as_secs_f64() * 1e3);
    emit(run.to_json_string(), out)?;

    Ok(match rep.verdict {
        Verdict::Preserves => 0,
        Verdict::Fails => 1,
        Verdict::Inconclusive => 2,
    })
}

fn cmd_verify(seed: u64, only: Option<String>) -> Result<i32> {
    if let Some(name) = &only {
        if !claims().contains(&name.as_str()) {
            return Err(Error::Spec {
                field: "only",
                reason: format!("unknown claim `{name}`; known claims: {}", claims().join(", ")),
            });
        }
    }
    let outcomes = run_all(seed, only.as_deref());
    let mut passed = 0usize;
    for o in &outcomes {
        println!(
            "[{}] {} ({:.0} ms): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.millis,
            o.detail
        );
        if o.passed {
            passed += 1;
        }
    }
    println!("{passed} of {} claims passed (seed {seed})", outcomes.len());
    Ok(if passed == outcomes.len() { 0 } else { 1 })
}

fn start_series(name: &str, sym_alpha: crate::subordination::AlphaParam, deg: usize, seed: u64) -> Result<TaylorPoly> {
    match name {
        "one" => Ok(TaylorPoly::one()),
        "generator" => extreme_point(sym_alpha, Complex64::new(1.0, 0.0), deg),
        "random" => {
            let omega = random_schwarz(seed, deg.clamp(1, 16), 0.3)?;
            let sf = SchwarzFn::validate_default(omega.into())?;
            Ok(member_from_schwarz(sym_alpha, &sf, deg))
        }
        other => Err(Error::Spec {
            field: "start",
            reason: format!("unknown start `{other}`; use one, generator, or random"),
        }),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_iterate(
    spec_path: PathBuf,
    deg: usize,
    tol: f64,
    max_iter: usize,
    start: String,
    second_start: Option<String>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<i32> {
    let spec = SymbolSpec::from_path(&spec_path)?;
    let (sym, grid, check_tol) = spec.build()?;

    let phi_t = sym.phi_schwarz().taylor(deg.max(1));
    let rot = classify_rotation(&phi_t, DEFAULT_TOL, 256);
    if rot.kind != RotationKind::NotRotation {
        if sym.omega_sup() > DEFAULT_TOL {
            return Err(Error::WeightedRotation);
        }
        let fixed_set = match rot.kind {
            RotationKind::Identity => "every normalized series is fixed".to_string(),
            RotationKind::RootOfUnity(n) => format!(
                "fixed series are exactly those supported on coefficient indices divisible by {n}"
            ),
            RotationKind::IrrationalRotation => {
                "only the constant series 1 is fixed".to_string()
            }
            RotationKind::NotRotation => unreachable!(),
        };
        let lam = rot.lambda.expect("rotation carries its multiplier");
        let text = serde_json::json!({
            "rotation": rot.kind.to_string(),
            "multiplier": [lam.re, lam.im],
            "fixed_set": fixed_set,
        });
        emit(serde_json::to_string_pretty(&text).expect("plain data"), out)?;
        return Ok(0);
    }

    let rep = check_preservation(&sym, &grid, check_tol);
    if rep.verdict != Verdict::Preserves {
        eprintln!(
            "operator does not certify preservation (verdict {}, min margin {:.3e}); \
             not iterating",
            rep.verdict, rep.min_margin
        );
        return Ok(match rep.verdict {
            Verdict::Fails => 1,
            _ => 2,
        });
    }

    let f0 = start_series(&start, sym.alpha(), deg, seed)?;
    let trace = iterate_to_fixed_point(&sym, &f0, deg, tol, max_iter)?;
    let second = match &second_start {
        Some(name) => {
            let g0 = start_series(name, sym.alpha(), deg, seed.wrapping_add(1))?;
            Some(iterate_to_fixed_point(&sym, &g0, deg, tol, max_iter)?)
        }
        None => None,
    };

    let limit = trace.last();
    let coeffs: Vec<[f64; 2]> = limit.coeffs().iter().map(|c| [c.re, c.im]).collect();
    let gap = second.as_ref().map(|s| s.last().max_coeff_distance(limit));
    let text = serde_json::json!({
        "converged": trace.converged,
        "steps": trace.steps,
        "final_residual": trace.last_residual(),
        "limit_coeffs": coeffs,
        "second_start_gap": gap,
        "second_converged": second.as_ref().map(|s| s.converged),
    });
    emit(serde_json::to_string_pretty(&text).expect("plain data"), out)?;

    let all_converged = trace.converged && second.as_ref().is_none_or(|s| s.converged);
    if !all_converged {
        eprintln!("iteration hit the step limit of {max_iter} before residual {tol:.1e}");
        return Ok(4);
    }
    Ok(0)
}

fn cmd_classify(spec_path: PathBuf, tol: f64, out: Option<PathBuf>) -> Result<i32> {
    let (sym, grid, _) = SymbolSpec::from_path(&spec_path)?.build()?;
    let rep = classify_boundary(&sym, grid.angles(), grid.boundary_radii(), tol);
    let consistent = match rep.class {
        BoundaryClass::PhiInnerLike { consistent, .. }
        | BoundaryClass::OmegaInnerLike { consistent, .. } => Some(consistent),
        BoundaryClass::Generic => None,
    };
    let text = serde_json::json!({
        "class": rep.class.to_string(),
        "phi_inner_fraction": rep.phi_inner_fraction,
        "omega_inner_fraction": rep.omega_inner_fraction,
        "consistent": consistent,
    });
    emit(serde_json::to_string_pretty(&text).expect("plain data"), out)?;
    Ok(match consistent {
        Some(false) => 1,
        _ => 0,
    })
}
