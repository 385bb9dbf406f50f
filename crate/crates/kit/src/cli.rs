//! Command-line interface. [`run`] returns the process exit code; see
//! [`crate::error::exit`] for the meaning of nonzero codes.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use ur_core::bounds::{
    demo_boson, demo_nonhermitian, eq8_bound, info_operator_bound, maccone_pati_bound, sur_bound, unified_equality,
};
use ur_core::experiments::{run_audit, run_fig1, run_fig2};
use ur_core::{BoundOptions, BoundReport, Complex64, DensityState, Sign};

use crate::error::{exit, KitError, Result};
use crate::formats::{read_operator, read_state, read_vector, report_to_json, write_text};
use crate::{formats, svg, table};

#[derive(Debug, Parser)]
#[command(name = "ur-kit", version, about = "Uncertainty-relation sweeps, audits and bound evaluation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spin-1 mixed-state sweep over alpha with SUR, orthogonal-state and information-operator bounds.
    Fig1 {
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[arg(long, default_value_t = 200)]
        random_trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV; scatter points go to `<stem>_scatter.csv`.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Spin-1 pure-state sweep over beta with the K-term Gram bounds LB_0..LB_3.
    Fig2 {
        #[arg(long, default_value_t = 201)]
        steps: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Randomized check of every identity and inequality.
    Audit {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Use this state in every trial instead of random ones.
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Evaluate one relation on matrices read from JSON files.
    Bound {
        #[arg(long, value_enum)]
        kind: BoundKind,
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        op_a: PathBuf,
        #[arg(long)]
        op_b: Option<PathBuf>,
        #[arg(long)]
        info_r: Option<PathBuf>,
        #[arg(long)]
        info_s: Option<PathBuf>,
        #[arg(long)]
        psi_perp: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SignArg::Best)]
        sign: SignArg,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Built-in scenarios for non-Hermitian operators.
    Demo {
        #[arg(value_enum)]
        name: DemoName,
    },
}

#[derive(Debug, Clone, Args)]
pub struct TolArgs {
    /// Slack tolerance for `satisfied`.
    #[arg(long, env = "UR_KIT_TOL")]
    pub tol: Option<f64>,
    #[arg(long)]
    pub degeneracy_tol: Option<f64>,
    #[arg(long)]
    pub equality_tol: Option<f64>,
    #[arg(long)]
    pub orthogonality_tol: Option<f64>,
}

impl TolArgs {
    pub fn options(&self) -> Result<BoundOptions> {
        let d = BoundOptions::default();
        let pick = |name: &str, v: Option<f64>, default: f64| -> Result<f64> {
            match v {
                Some(x) if !(x.is_finite() && x >= 0.0) => {
                    Err(KitError::Usage(format!("--{name} must be a finite nonnegative number, got {x}")))
                }
                Some(x) => Ok(x),
                None => Ok(default),
            }
        };
        Ok(BoundOptions {
            tol: pick("tol", self.tol, d.tol)?,
            degeneracy_tol: pick("degeneracy-tol", self.degeneracy_tol, d.degeneracy_tol)?,
            equality_tol: pick("equality-tol", self.equality_tol, d.equality_tol)?,
            orthogonality_tol: pick("orthogonality-tol", self.orthogonality_tol, d.orthogonality_tol)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Sur,
    Mp,
    Unified,
    Info,
    Eq8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Plus,
    Minus,
    Best,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
            SignArg::Best => Sign::Best,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    Nonhermitian,
    Boson,
}

fn status(ok: bool) -> i32 {
    if ok {
        0
    } else {
        exit::PROPERTY_FAILURE
    }
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(out, "{text}").map_err(|source| KitError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

fn say(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(|source| KitError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Fig1 {
            steps,
            random_trials,
            seed,
            out: path,
            svg: svg_path,
            tol,
        } => {
            let r = run_fig1(*steps, *random_trials, *seed, &tol.options()?)?;
            table::write_sweep(path, &r.sweep)?;
            let scatter_path = table::sibling(path, "scatter", "csv");
            write_text(&scatter_path, &table::scatter_csv(&r.scatter))?;
            if let Some(p) = svg_path {
                let pts: Vec<(f64, f64)> = r.scatter.iter().map(|s| (s.alpha, s.value)).collect();
                write_text(p, &svg::plot("spin-1, A = Jx, B = Jz", &r.sweep, &pts))?;
            }
            let failed_rows = r.sweep.verdicts.iter().filter(|v| !**v).count();
            let failed_points = r.scatter.iter().filter(|p| !p.passes()).count();
            say(
                out,
                &format!(
                    "fig1: {} rows ({failed_rows} failing), {} scatter points ({failed_points} failing) -> {}",
                    r.sweep.grid.len(),
                    r.scatter.len(),
                    path.display()
                ),
            )?;
            Ok(status(r.all_pass()))
        }
        Command::Fig2 {
            steps,
            restarts,
            seed,
            out: path,
            svg: svg_path,
            tol,
        } => {
            let r = run_fig2(*steps, *restarts, *seed, &tol.options()?)?;
            table::write_sweep(path, &r)?;
            if let Some(p) = svg_path {
                write_text(p, &svg::plot("spin-1, Jx, Jy, Jz", &r, &[]))?;
            }
            let failed = r.verdicts.iter().filter(|v| !**v).count();
            say(
                out,
                &format!("fig2: {} rows ({failed} failing) -> {}", r.grid.len(), path.display()),
            )?;
            Ok(status(r.all_rows_pass()))
        }
        Command::Audit {
            dim,
            trials,
            seed,
            json,
            state,
        } => {
            let fixed = state.as_deref().map(read_state).transpose()?;
            let reports = run_audit(*dim, *trials, *seed, fixed.as_ref())?;
            for r in &reports {
                say(
                    out,
                    &format!(
                        "{:<20} trials {:>6}  failures {:>4}  worst {:.3e}",
                        r.property, r.trials, r.failures, r.worst_violation
                    ),
                )?;
            }
            if let Some(p) = json {
                let text = serde_json::to_string_pretty(&formats::audit_to_json(*dim, *seed, &reports))
                    .expect("json values serialize");
                write_text(p, &(text + "\n"))?;
            }
            Ok(status(reports.iter().all(|r| r.failures == 0)))
        }
        Command::Bound {
            kind,
            state,
            op_a,
            op_b,
            info_r,
            info_s,
            psi_perp,
            sign,
            tol,
        } => {
            let opts = tol.options()?;
            let report = eval_bound(
                *kind,
                &BoundFiles {
                    state,
                    op_a,
                    op_b: op_b.as_deref(),
                    info_r: info_r.as_deref(),
                    info_s: info_s.as_deref(),
                    psi_perp: psi_perp.as_deref(),
                },
                (*sign).into(),
                &opts,
            )?;
            print_json(out, &report_to_json(&report))?;
            Ok(status(report.satisfied))
        }
        Command::Demo { name } => {
            let (value, ok) = run_demo(*name)?;
            print_json(out, &value)?;
            Ok(status(ok))
        }
    }
}

pub struct BoundFiles<'a> {
    pub state: &'a Path,
    pub op_a: &'a Path,
    pub op_b: Option<&'a Path>,
    pub info_r: Option<&'a Path>,
    pub info_s: Option<&'a Path>,
    pub psi_perp: Option<&'a Path>,
}

fn required<'a>(p: Option<&'a Path>, flag: &str, kind: &str) -> Result<&'a Path> {
    p.ok_or_else(|| KitError::Usage(format!("--kind {kind} requires --{flag}")))
}

/// Checks that the flags needed by `kind` are present before reading any file.
pub fn eval_bound(kind: BoundKind, files: &BoundFiles, sign: Sign, opts: &BoundOptions) -> Result<BoundReport> {
    match kind {
        BoundKind::Sur | BoundKind::Unified => {
            let name = if kind == BoundKind::Sur { "sur" } else { "unified" };
            let b_path = required(files.op_b, "op-b", name)?;
            let rho = read_state(files.state)?;
            let a = read_operator(files.op_a)?;
            let b = read_operator(b_path)?;
            Ok(if kind == BoundKind::Sur {
                sur_bound(&rho, &a, &b, opts)?
            } else {
                unified_equality(&rho, &a, &b, opts)?
            })
        }
        BoundKind::Mp => {
            let b_path = required(files.op_b, "op-b", "mp")?;
            let perp_path = required(files.psi_perp, "psi-perp", "mp")?;
            let rho = read_state(files.state)?;
            let a = read_operator(files.op_a)?;
            let b = read_operator(b_path)?;
            let perp = read_vector(perp_path)?;
            Ok(maccone_pati_bound(&rho, &a, &b, &perp, sign, opts)?)
        }
        BoundKind::Info => {
            let o_path = required(files.info_r, "info-r", "info")?;
            let rho = read_state(files.state)?;
            let f = read_operator(files.op_a)?;
            let o = read_operator(o_path)?;
            Ok(info_operator_bound(&rho, &f, &o, opts)?)
        }
        BoundKind::Eq8 => {
            if files.info_r.is_none() && files.info_s.is_none() {
                return Err(KitError::Usage("--kind eq8 requires --info-r and/or --info-s".into()));
            }
            let b_path = required(files.op_b, "op-b", "eq8")?;
            let rho = read_state(files.state)?;
            let a = read_operator(files.op_a)?;
            let b = read_operator(b_path)?;
            let mut candidates = Vec::new();
            for (label, p) in [("R", files.info_r), ("S", files.info_s)] {
                if let Some(p) = p {
                    candidates.push((label, read_operator(p)?));
                }
            }
            let refs: Vec<(&str, &ur_core::Operator)> = candidates.iter().map(|(l, o)| (*l, o)).collect();
            Ok(eq8_bound(&rho, &a, &b, &refs, opts)?)
        }
    }
}

/// Demo output and whether its checks passed. The naive product relation in
/// the non-Hermitian demo is expected to fail on some states; only the
/// unified identity is checked.
pub fn run_demo(name: DemoName) -> Result<(Value, bool)> {
    let opts = BoundOptions::default();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match name {
        DemoName::Nonhermitian => {
            let cases = [("|+>", DensityState::pure_real(&[h, h])?), ("|e>", DensityState::pure_real(&[1.0, 0.0])?)];
            let mut entries = Vec::new();
            let mut ok = true;
            for (label, rho) in &cases {
                let r = demo_nonhermitian(rho, &opts)?;
                let residual = r.real("unified_residual").unwrap_or(0.0);
                ok &= r.label("unified_status") != Some("identity FAILED") && residual <= 1e-10;
                entries.push(json!({
                    "state": label,
                    "naive_sur_holds": r.satisfied,
                    "report": report_to_json(&r),
                }));
            }
            Ok((json!({ "demo": "nonhermitian", "operators": ["sigma_plus", "sigma_minus"], "cases": entries }), ok))
        }
        DemoName::Boson => {
            let cutoff = 3;
            let mut vacuum = vec![Complex64::new(0.0, 0.0); cutoff * cutoff];
            vacuum[0] = Complex64::new(1.0, 0.0);
            // (|01> + |10>)/sqrt(2) with |n1 n2> at index n1 * cutoff + n2
            let mut correlated = vec![Complex64::new(0.0, 0.0); cutoff * cutoff];
            correlated[1] = Complex64::new(h, 0.0);
            correlated[cutoff] = Complex64::new(h, 0.0);
            let cases = [
                ("|00>", DensityState::pure(&vacuum)?),
                ("(|01>+|10>)/sqrt2", DensityState::pure(&correlated)?),
            ];
            let mut entries = Vec::new();
            let mut ok = true;
            for (label, rho) in &cases {
                let r = demo_boson(rho, cutoff, &opts)?;
                ok &= r.slack >= -1e-10;
                entries.push(json!({ "state": label, "report": report_to_json(&r) }));
            }
            Ok((json!({ "demo": "boson", "cutoff": cutoff, "cases": entries }), ok))
        }
    }
}
