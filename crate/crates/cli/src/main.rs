//! `gupsqueeze` command line.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed, 2 for
//! usage and input errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use log::info;

use gupsqueeze::analytic::uncertainty_product;
use gupsqueeze::boson::verify_bch_collection;
use gupsqueeze::compare::{csv_row, oracle_compare, CompareConfig, CompareError, CSV_HEADER, STANDARD_TAUS};
use gupsqueeze::fock::DEFAULT_G_STEP;
use gupsqueeze::grid::{Axis, Linspace};
use gupsqueeze::physics::{electron_preset, OmegaConvention, Preset};
use gupsqueeze::scan::{
    default_tau_grid, default_theta_grid, figure_surface, sweep, variance_time_series, with_threads,
    write_surface_csv, write_sweep_csv, write_time_series_csv, Surface, SweepConfig,
};
use gupsqueeze::{CoherentAmplitude, PhysicalParams, Validity};

const IDENTITY_TOL: f64 = 1e-12;
const INJECTED_FAULT: f64 = 1e-6;

#[derive(Parser, Debug)]
#[command(name = "gupsqueeze", version, about = "Minimal-length deformed oscillator: variances, squeezing and checks")]
struct Cli {
    /// Worker threads for parallel grids (default: all cores).
    #[arg(long, global = true, env = "GUPSQUEEZE_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compare exact nested-commutator series with the closed forms.
    VerifyBch {
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
    },
    /// Write the data behind figure 1, 2 or 3 as CSV.
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        /// Amplitude |α| for figures 1 and 2; both 1 and 10 when omitted.
        #[arg(long)]
        gamma: Option<f64>,
        /// τ grid as start:end:count.
        #[arg(long, value_parser = parse_linspace)]
        tau: Option<Linspace>,
        /// θ grid as start:end:count (figures 1 and 2).
        #[arg(long, value_parser = parse_linspace)]
        theta: Option<Linspace>,
        /// Preset file for figure 3 (default: electron).
        #[arg(long)]
        preset: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Convention::Angular)]
        omega_convention: Convention,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare analytic first-order slopes with the Fock-space oracle.
    OracleCompare {
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        #[arg(long, default_value_t = 0.0, value_parser = parse_number)]
        theta: f64,
        /// Comma-separated τ values.
        #[arg(long, value_delimiter = ',', value_parser = parse_number)]
        tau: Vec<f64>,
        /// Expansion point in natural units.
        #[arg(long, default_value_t = 0.0)]
        g: f64,
        /// Fock dimension (default: chosen from |α|).
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_G_STEP)]
        g_step: f64,
        /// CSV destination (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that the uncertainty product equals its bound over a grid.
    UncertaintyCheck {
        #[arg(long, default_value = "0:10:10")]
        tau: Axis,
        #[arg(long, default_value = "0:3:10")]
        gamma: Axis,
        #[arg(long, default_value = "0:2pi:10")]
        theta: Axis,
        #[arg(long, default_value = "0:1e-2:10")]
        g: Axis,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Evaluate variance records over a (τ, γ, θ, g) grid.
    Sweep {
        /// key = value file; flags override its entries.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        tau: Option<Axis>,
        #[arg(long)]
        gamma: Option<Axis>,
        #[arg(long)]
        theta: Option<Axis>,
        #[arg(long)]
        g: Option<Axis>,
        #[arg(long)]
        mass: Option<f64>,
        #[arg(long)]
        omega: Option<f64>,
        #[arg(long)]
        hbar: Option<f64>,
        /// CSV destination (default: stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print or save a parameter preset.
    Preset {
        #[arg(value_enum, default_value_t = PresetName::Electron)]
        name: PresetName,
        #[arg(long, value_enum, default_value_t = Convention::Angular)]
        omega_convention: Convention,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    Angular,
    Cyclic,
}

impl From<Convention> for OmegaConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Angular => OmegaConvention::Angular,
            Convention::Cyclic => OmegaConvention::Cyclic,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PresetName {
    Electron,
}

fn parse_number(s: &str) -> Result<f64, String> {
    gupsqueeze::grid::parse_number(s).ok_or_else(|| format!("not a number: '{s}'"))
}

fn parse_linspace(s: &str) -> Result<Linspace, String> {
    match s.parse::<Axis>().map_err(|e| e.to_string())? {
        Axis::Range(l) => Linspace::resolved(l.start, l.end, l.count).map_err(|e| e.to_string()),
        Axis::List(_) => Err(format!("expected start:end:count, got '{s}'")),
    }
}

/// A failed check, as opposed to bad input.
#[derive(Debug)]
struct CheckFailed(String);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// `out.csv` → `out_gamma1.csv`
fn suffixed(path: &Path, gamma: f64) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_gamma{gamma}.{}", ext.to_string_lossy()),
        None => format!("{stem}_gamma{gamma}"),
    };
    path.with_file_name(name)
}

fn verify_bch(max_order: u64) -> Result<()> {
    let report = verify_bch_collection(max_order as usize)?;
    println!("monomial, max_verified_order, status");
    for line in report.lines() {
        println!("{line}");
    }
    if !report.all_passed() {
        bail!(CheckFailed(format!("closed forms disagree below order {max_order}")));
    }
    Ok(())
}

fn figure(
    id: u8,
    gamma: Option<f64>,
    tau: Option<Linspace>,
    theta: Option<Linspace>,
    preset: Option<&Path>,
    convention: OmegaConvention,
    out: &Path,
) -> Result<()> {
    let tau = tau.unwrap_or_else(default_tau_grid);
    if id == 3 {
        let preset = match preset {
            Some(p) => {
                let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
                Preset::from_kv(&text)?
            }
            None => electron_preset(convention),
        };
        let rows = variance_time_series(&preset, tau)?;
        let mut w = create(out)?;
        write_time_series_csv(&mut w, &rows)?;
        w.flush()?;
        info!("wrote {} rows to {}", rows.len(), out.display());
        return Ok(());
    }
    let which = if id == 1 { Surface::Position } else { Surface::Momentum };
    let theta = theta.unwrap_or_else(default_theta_grid);
    let runs: Vec<(f64, PathBuf)> = match gamma {
        Some(g) => vec![(g, out.to_path_buf())],
        None => [1.0, 10.0].into_iter().map(|g| (g, suffixed(out, g))).collect(),
    };
    for (g, path) in runs {
        let scan = figure_surface(g, tau, theta)?;
        let mut w = create(&path)?;
        write_surface_csv(&mut w, &scan, which)?;
        w.flush()?;
        info!("wrote {}", path.display());
    }
    Ok(())
}

fn compare(cfg: CompareConfig, out: Option<&Path>) -> Result<()> {
    let report = match oracle_compare(&cfg) {
        Ok(r) => r,
        Err(CompareError::Truncation(audit)) => bail!(CheckFailed(format!("truncation audit failed: {audit}"))),
        Err(e) => return Err(e.into()),
    };
    info!("{}", report.audit);
    let mut w = output(out)?;
    writeln!(w, "{CSV_HEADER}")?;
    for row in &report.rows {
        writeln!(w, "{}", csv_row(row))?;
    }
    w.flush()?;
    if !report.all_passed() {
        let worst = report.worst().expect("failed report has rows");
        bail!(CheckFailed(format!(
            "{} at tau={} has relative error {:.3e}",
            worst.quantity.name(),
            worst.tau,
            worst.rel_err()
        )));
    }
    Ok(())
}

fn uncertainty_check(tau: &Axis, gamma: &Axis, theta: &Axis, g: &Axis, inject_fault: bool) -> Result<()> {
    let mut worst = (0.0f64, [0.0; 4]);
    let (mut checked, mut skipped) = (0usize, 0usize);
    for t in tau.values() {
        for ga in gamma.values() {
            let amps: Vec<CoherentAmplitude> =
                theta.values().into_iter().map(|th| CoherentAmplitude::new(ga, th)).collect::<Result<_, _>>()?;
            for amp in &amps {
                for gv in g.values() {
                    if Validity::assess(t, gv, ga) == Validity::Refused {
                        skipped += 1;
                        continue;
                    }
                    let u = uncertainty_product(t, amp, &PhysicalParams::natural(gv)?)?;
                    let product = if inject_fault { u.product + INJECTED_FAULT } else { u.product };
                    let dev = (product - u.bound).abs();
                    checked += 1;
                    if dev > worst.0 || dev.is_nan() {
                        worst = (dev, [t, ga, amp.theta(), gv]);
                    }
                }
            }
        }
    }
    let [t, ga, th, gv] = worst.1;
    println!(
        "checked {checked} points, skipped {skipped} outside the validity window; \
         worst |product - bound| = {:.3e} at tau={t}, gamma={ga}, theta={th}, g={gv}",
        worst.0
    );
    if worst.0.is_nan() || worst.0 >= IDENTITY_TOL {
        bail!(CheckFailed(format!("deviation {:.3e} exceeds {IDENTITY_TOL:e}", worst.0)));
    }
    Ok(())
}

struct SweepOverrides {
    tau: Option<Axis>,
    gamma: Option<Axis>,
    theta: Option<Axis>,
    g: Option<Axis>,
    mass: Option<f64>,
    omega: Option<f64>,
    hbar: Option<f64>,
}

fn sweep_config(config: Option<&Path>, o: SweepOverrides) -> Result<SweepConfig> {
    let mut cfg = match config {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            Some(SweepConfig::from_kv(&text).with_context(|| format!("invalid config {}", p.display()))?)
        }
        None => None,
    };
    let axis = |flag: Option<Axis>, from: Option<&Axis>, name: &str| -> Result<Axis> {
        flag.or_else(|| from.cloned())
            .with_context(|| format!("missing '{name}': give --{name} or a config file"))
    };
    let base = cfg.take();
    let cfg = SweepConfig {
        tau: axis(o.tau, base.as_ref().map(|c| &c.tau), "tau")?,
        gamma: axis(o.gamma, base.as_ref().map(|c| &c.gamma), "gamma")?,
        theta: axis(o.theta, base.as_ref().map(|c| &c.theta), "theta")?,
        g: axis(o.g, base.as_ref().map(|c| &c.g), "g")?,
        mass: o.mass.or(base.as_ref().map(|c| c.mass)).unwrap_or(1.0),
        omega: o.omega.or(base.as_ref().map(|c| c.omega)).unwrap_or(1.0),
        hbar: o.hbar.or(base.as_ref().map(|c| c.hbar)).unwrap_or(1.0),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::VerifyBch { max_order } => verify_bch(max_order),
        Command::Figure { id, gamma, tau, theta, preset, omega_convention, out } => {
            with_threads(cli.threads, || {
                figure(id, gamma, tau, theta, preset.as_deref(), omega_convention.into(), &out)
            })?
        }
        Command::OracleCompare { gamma, theta, tau, g, dim, g_step, out } => {
            let taus = if tau.is_empty() { STANDARD_TAUS.to_vec() } else { tau };
            let cfg = CompareConfig { g, dim, g_step, ..CompareConfig::new(CoherentAmplitude::new(gamma, theta)?, taus) };
            compare(cfg, out.as_deref())
        }
        Command::UncertaintyCheck { tau, gamma, theta, g, inject_fault } => {
            uncertainty_check(&tau, &gamma, &theta, &g, inject_fault)
        }
        Command::Sweep { config, tau, gamma, theta, g, mass, omega, hbar, out } => {
            let cfg = sweep_config(config.as_deref(), SweepOverrides { tau, gamma, theta, g, mass, omega, hbar })?;
            info!("sweeping {} points", cfg.len());
            let rows = with_threads(cli.threads, || sweep(&cfg))??;
            let mut w = output(out.as_deref())?;
            write_sweep_csv(&mut w, &rows)?;
            w.flush()?;
            Ok(())
        }
        Command::Preset { name: PresetName::Electron, omega_convention, out } => {
            let preset = electron_preset(omega_convention.into());
            let mut w = output(out.as_deref())?;
            w.write_all(preset.to_kv().as_bytes())?;
            w.flush()?;
            if !preset.honors_beta0_bound() {
                log::warn!("beta0 = {:.4e} is not below 1e50", preset.beta0());
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<CheckFailed>() => {
            eprintln!("check failed: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_keeps_extension() {
        assert_eq!(suffixed(Path::new("out/f.csv"), 10.0), PathBuf::from("out/f_gamma10.csv"));
        assert_eq!(suffixed(Path::new("f"), 1.0), PathBuf::from("f_gamma1"));
    }

    #[test]
    fn linspace_flags() {
        let l = parse_linspace("0:2pi:5").unwrap();
        assert_eq!(l.count, 5);
        assert!(parse_linspace("1,2").is_err());
        assert!(parse_linspace("0:1:1").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
