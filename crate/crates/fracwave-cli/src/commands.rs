//! Subcommand implementations.

use crate::args::*;
use crate::csvfmt::{self, SweepRow};
use crate::svg::{self, Series};
use crate::CliError;
use fracwave::analysis::{self, CrossingError};
use fracwave::solver::{self, PeriodicGrid, SpectralState};
use fracwave::{
    group_velocity, omega_bar, phase_velocity, BranchMode, Complex64, DispersionModel,
    FractionalOrder, MittagLeffler,
};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};

/// Environment variable holding the default output directory.
pub const OUTPUT_DIR_ENV: &str = "FRACWAVE_OUTPUT_DIR";

/// Resolves a user path: relative paths land under `$FRACWAVE_OUTPUT_DIR`
/// when the variable is set.
pub fn resolve_path(p: &Path) -> PathBuf {
    if p.is_absolute() {
        return p.to_path_buf();
    }
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if !dir.is_empty() => PathBuf::from(dir).join(p),
        _ => p.to_path_buf(),
    }
}

fn order(alpha: f64) -> Result<FractionalOrder, CliError> {
    FractionalOrder::new(alpha).map_err(|e| CliError::Usage(e.to_string()))
}

fn build_model(kind: ModelKind, c0: f64, mu: f64) -> Result<DispersionModel, CliError> {
    match kind {
        ModelKind::Kinematic => {
            DispersionModel::kinematic_wave_with(c0).map_err(|e| CliError::Usage(e.to_string()))
        }
        ModelKind::Kdv => DispersionModel::linearised_kdv_with(c0, mu)
            .map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn model_name(kind: ModelKind) -> &'static str {
    match kind {
        ModelKind::Kinematic => "kinematic",
        ModelKind::Kdv => "kdv",
    }
}

/// `sweep`: uniform k grid, CSV columns
/// `k,re_omega,im_omega,re_vp,im_vp,re_vg,im_vg,branch_flag`, optional SVG
/// with solid real parts and dashed imaginary parts.
pub fn run_sweep(a: &SweepArgs) -> Result<(), CliError> {
    if a.kmin.is_nan() || a.kmax.is_nan() || a.kmin >= a.kmax {
        return Err(CliError::Usage(format!(
            "need kmin < kmax, got {} and {}",
            a.kmin, a.kmax
        )));
    }
    if a.n < 2 {
        return Err(CliError::Usage(format!("need n >= 2 samples, got {}", a.n)));
    }
    let alpha = order(a.alpha)?;
    let model = build_model(a.model, a.c0, a.mu)?;
    let mode = match a.branch {
        BranchKind::Strict => BranchMode::Strict,
        BranchKind::Permissive => BranchMode::Permissive,
    };

    let mut rows = Vec::with_capacity(a.n);
    for i in 0..a.n {
        let k = a.kmin + (a.kmax - a.kmin) * i as f64 / (a.n - 1) as f64;
        rows.push(sweep_row(&model, alpha, k, mode)?);
    }

    let base = resolve_path(&a.output);
    if let Some(parent) = base.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    if matches!(a.format, SweepFormat::Csv | SweepFormat::Both) {
        let path = base.with_extension("csv");
        fs::write(&path, csvfmt::sweep_csv(&rows))?;
        println!("wrote {}", path.display());
    }
    if matches!(a.format, SweepFormat::Svg | SweepFormat::Both) {
        let path = base.with_extension("svg");
        let title = format!(
            "{} model, alpha = {}: phase and group velocity",
            model_name(a.model),
            a.alpha
        );
        fs::write(&path, svg::render(&title, "k", "velocity", &sweep_series(&rows)))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn sweep_row(
    model: &DispersionModel,
    alpha: FractionalOrder,
    k: f64,
    mode: BranchMode,
) -> Result<SweepRow, CliError> {
    let numeric = |e: fracwave::DispersionError| CliError::Numeric(format!("at k = {k}: {e}"));
    let w = omega_bar(model, alpha, k, mode).map_err(numeric)?;
    let vg = group_velocity(model, alpha, k, mode).map_err(numeric)?;
    // the classical v_p curve extends continuously to k = 0 (v_p -> c0);
    // the library refuses the 0/0 form, so the boundary row is filled with
    // the limit, which is what the figure data needs
    let (vp_value, vp_warn) = if k == 0.0 && alpha.is_classical() {
        (Complex64::new(model.spatial_symbol_derivative(0.0), 0.0), false)
    } else {
        let vp = phase_velocity(model, alpha, k, mode).map_err(numeric)?;
        (vp.value, vp.branch_warning)
    };
    Ok(SweepRow {
        k,
        omega: (w.value.re, w.value.im),
        vp: (vp_value.re, vp_value.im),
        vg: (vg.value.re, vg.value.im),
        branch_flag: w.branch_warning || vp_warn || vg.branch_warning,
    })
}

fn sweep_series(rows: &[SweepRow]) -> Vec<Series> {
    let take = |f: fn(&SweepRow) -> (f64, f64)| rows.iter().map(f).collect::<Vec<_>>();
    vec![
        Series {
            label: "Re v_p".into(),
            color: "#1f77b4",
            dashed: false,
            points: take(|r| (r.k, r.vp.0)),
        },
        Series {
            label: "Im v_p".into(),
            color: "#1f77b4",
            dashed: true,
            points: take(|r| (r.k, r.vp.1)),
        },
        Series {
            label: "Re v_g".into(),
            color: "#d62728",
            dashed: false,
            points: take(|r| (r.k, r.vg.0)),
        },
        Series {
            label: "Im v_g".into(),
            color: "#d62728",
            dashed: true,
            points: take(|r| (r.k, r.vg.1)),
        },
    ]
}

#[derive(Serialize)]
struct EvolveMetadata<'a> {
    command: &'a str,
    library_version: &'a str,
    model: &'a str,
    alpha: f64,
    c0: f64,
    mu: f64,
    n_points: usize,
    length: f64,
    ic: IcMetadata,
    times: &'a [f64],
    files: &'a [String],
}

#[derive(Serialize)]
struct IcMetadata {
    kind: String,
    k0_requested: f64,
    k0_effective: f64,
    sigma: Option<f64>,
    x0: Option<f64>,
    amplitude: Option<f64>,
}

/// `evolve`: one snapshot CSV per time plus a metadata sidecar.
pub fn run_evolve(a: &EvolveArgs) -> Result<(), CliError> {
    let alpha = order(a.alpha)?;
    let model = build_model(a.model, 1.0, 1.0)?;
    if a.times.is_empty() {
        return Err(CliError::Usage("need at least one snapshot time".into()));
    }
    if a.times.windows(2).any(|w| w[1] <= w[0]) || a.times[0] < 0.0 {
        return Err(CliError::Usage(
            "times must be non-negative and strictly ascending".into(),
        ));
    }
    let grid = PeriodicGrid::new(a.n, a.length).map_err(|e| CliError::Usage(e.to_string()))?;

    let (state, ic_meta): (SpectralState, IcMetadata) = match a.ic {
        IcKind::Cosine => {
            // snap to the nearest resolvable grid mode
            let mode_f = a.k0 * a.length / (2.0 * std::f64::consts::PI);
            let mode_index = mode_f.round().max(0.0) as usize;
            if mode_index >= a.n / 2 {
                return Err(CliError::Usage(format!(
                    "k0 = {} is at or beyond the Nyquist wave number",
                    a.k0
                )));
            }
            let k_eff = 2.0 * std::f64::consts::PI * mode_index as f64 / a.length;
            (
                solver::cosine_mode(grid, mode_index, a.amplitude),
                IcMetadata {
                    kind: "cosine".into(),
                    k0_requested: a.k0,
                    k0_effective: k_eff,
                    sigma: None,
                    x0: None,
                    amplitude: Some(a.amplitude),
                },
            )
        }
        IcKind::Packet => {
            let sigma = a
                .sigma
                .ok_or_else(|| CliError::Usage("--ic packet needs --sigma".into()))?;
            let x0 = a.x0.unwrap_or(a.length / 2.0);
            let state = solver::wavepacket(grid, a.k0, sigma, x0)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            (
                state,
                IcMetadata {
                    kind: "packet".into(),
                    k0_requested: a.k0,
                    k0_effective: a.k0,
                    sigma: Some(sigma),
                    x0: Some(x0),
                    amplitude: None,
                },
            )
        }
    };

    let outdir = resolve_path(&a.outdir);
    fs::create_dir_all(&outdir)?;

    let mut files = Vec::with_capacity(a.times.len());
    for (i, &t) in a.times.iter().enumerate() {
        let snap = solver::snapshot(&state, &model, alpha, t)
            .map_err(|e| CliError::Numeric(e.to_string()))?;
        let name = format!("u_{i:03}.csv");
        fs::write(
            outdir.join(&name),
            csvfmt::snapshot_csv(&snap.x, &snap.re, &snap.im),
        )?;
        files.push(name);
    }

    let meta = EvolveMetadata {
        command: "evolve",
        library_version: env!("CARGO_PKG_VERSION"),
        model: model_name(a.model),
        alpha: a.alpha,
        c0: 1.0,
        mu: 1.0,
        n_points: a.n,
        length: a.length,
        ic: ic_meta,
        times: &a.times,
        files: &files,
    };
    let json = serde_json::to_string_pretty(&meta).expect("metadata serialises");
    fs::write(outdir.join("metadata.json"), json + "\n")?;
    println!(
        "wrote {} snapshots and metadata.json to {}",
        files.len(),
        outdir.display()
    );
    Ok(())
}

/// `crossings`: per-alpha crossing report; exit 0 when any order succeeded.
pub fn run_crossings(a: &CrossingsArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let model = build_model(a.model, 1.0, 1.0)?;
    if a.alphas.is_empty() {
        return Err(CliError::Usage("need at least one alpha".into()));
    }
    let mut csv = String::from("alpha,status,k_star,residual\n");
    let mut successes = 0usize;
    writeln!(out, "{:<10} {:<14} {:<22} residual", "alpha", "status", "k_star")?;
    for &al in &a.alphas {
        let alpha = order(al)?;
        match analysis::find_velocity_crossing(&model, alpha, (a.kmin, a.kmax), a.tol) {
            Ok(r) => {
                successes += 1;
                writeln!(
                    out,
                    "{:<10} {:<14} {:<22} {:.3e}",
                    al,
                    "ok",
                    format!("{:.12}", r.k_star),
                    r.residual
                )?;
                csv.push_str(&format!(
                    "{},ok,{},{}\n",
                    csvfmt::fmt_f64(al),
                    csvfmt::fmt_f64(r.k_star),
                    csvfmt::fmt_f64(r.residual)
                ));
            }
            Err(CrossingError::NoSignChange { .. }) => {
                writeln!(out, "{:<10} {:<14} {:<22} -", al, "no-crossing", "-")?;
                csv.push_str(&format!("{},no-crossing,,\n", csvfmt::fmt_f64(al)));
            }
            Err(CrossingError::Degenerate { .. }) => {
                writeln!(
                    out,
                    "{:<10} {:<14} {:<22} -",
                    al, "degenerate", "purely imaginary order"
                )?;
                csv.push_str(&format!("{},degenerate,,\n", csvfmt::fmt_f64(al)));
            }
            Err(e) => return Err(CliError::Numeric(format!("alpha = {al}: {e}"))),
        }
    }
    if let Some(path) = &a.csv {
        let path = resolve_path(path);
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        fs::write(&path, csv)?;
    }
    if successes == 0 {
        return Err(CliError::Numeric(
            "no crossing found for any requested alpha".into(),
        ));
    }
    Ok(())
}

/// `ml-eval`: prints `E_alpha(z)` with 15 significant digits and the
/// evaluator's own error estimate.
pub fn run_ml_eval(a: &MlEvalArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let alpha = order(a.alpha)?;
    let mut ml = MittagLeffler::new(alpha);
    let r = ml
        .eval(Complex64::new(a.re, a.im))
        .map_err(|e| CliError::Numeric(e.to_string()))?;
    writeln!(
        out,
        "E_{}({} {} {}i) = {:.14e} {} {:.14e}i",
        a.alpha,
        a.re,
        if a.im < 0.0 { "-" } else { "+" },
        a.im.abs(),
        r.value.re,
        if r.value.im < 0.0 { "-" } else { "+" },
        r.value.im.abs()
    )?;
    writeln!(out, "relative error estimate: {:.2e}", r.error_estimate)?;
    Ok(())
}

/// `orders`: the purely-imaginary order family.
pub fn run_orders(a: &OrdersArgs, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let orders = analysis::purely_imaginary_orders(a.m_max);
    let mut csv = String::from("m,alpha\n");
    writeln!(out, "{:<6} {:<22} real parts vanish", "m", "alpha")?;
    for (m, al) in orders.iter().enumerate() {
        let flag = analysis::is_purely_imaginary(
            FractionalOrder::new(*al).expect("family lies in (0, 1]"),
            1e-12,
        );
        writeln!(out, "{:<6} {:<22} {}", m, format!("{al:.16}"), flag)?;
        csv.push_str(&format!("{},{}\n", m, csvfmt::fmt_f64(*al)));
    }
    if let Some(path) = &a.csv {
        let path = resolve_path(path);
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        fs::write(&path, csv)?;
    }
    Ok(())
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    let mut stdout = std::io::stdout().lock();
    match &cli.command {
        Command::Sweep(a) => run_sweep(a),
        Command::Evolve(a) => run_evolve(a),
        Command::Crossings(a) => run_crossings(a, &mut stdout),
        Command::MlEval(a) => run_ml_eval(a, &mut stdout),
        Command::Orders(a) => run_orders(a, &mut stdout),
    }
}
