//! `coherence-lab` command line.
//!
//! Every subcommand builds a [`Report`]: a header, rows of preformatted
//! cells, and summary notes. `--format table` renders it aligned with the
//! notes underneath; `--format csv` writes plain CSV and sends the notes to
//! the error stream. Both formats print the same cell strings.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::interpretation::{
    exhaustive_algorithm_search, factorial, theorem1_contradiction_witness, Permutation,
    ThetaInterval, MAX_SEARCH_SIZE,
};
use crate::lattice::{
    build_momentum_statement, build_position_statement, commutator_norm, eigenvector_check,
    joint_probability, mode_overlap, verify_idempotent, LatticeConfig, StatementMatrix,
};
use crate::logic::{enumerate_minterms, parse_formula, verify_tautology_of_all, MAX_VARIABLES};
use crate::mc::{self, TrialPlan};
use crate::probability::CoherenceModel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const IDENTITY_TOL: f64 = 1e-12;
const MATRIX_TOL: f64 = 1e-10;
const COMMUTATOR_FLOOR: f64 = 1e-6;
const MC_SIGMAS: f64 = 4.0;

#[derive(Debug, Parser)]
#[command(
    name = "coherence-lab",
    version,
    about = "Interference of probabilities without a quantum of action"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Read angle flags in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minterm expansion and the tautology of all conjunctions.
    #[command(subcommand)]
    Logic(LogicCommand),
    /// The cos² law, classical composition and interference.
    #[command(subcommand)]
    Coherence(CoherenceCommand),
    /// Statement matrices on a periodic lattice.
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Exhaustive search for displacement-indexed permutation rules.
    Theorem1 {
        #[arg(long = "N")]
        n: usize,
    },
    /// Monte Carlo chained measurements.
    #[command(subcommand)]
    Mc(McCommand),
}

#[derive(Debug, Subcommand)]
pub enum LogicCommand {
    /// Expand a formula into its minterm disjunction.
    Expand {
        #[arg(long)]
        formula: String,
        /// Comma-separated ordered variable names.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
    },
    /// Check that the disjunction of all 2^n minterms is a tautology.
    Tautology {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Phase coupling in f(θ) = aθ.
    #[arg(long, default_value = "0.5", allow_hyphen_values = true, value_parser = parse_number)]
    pub a: f64,
}

#[derive(Debug, Subcommand)]
pub enum CoherenceCommand {
    /// Composition table; a displacement left unset is swept over the interval.
    Table {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_number)]
        theta: Option<f64>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_number)]
        vartheta: Option<f64>,
        #[arg(long, default_value = "-pi", allow_hyphen_values = true, value_parser = parse_number)]
        theta_min: f64,
        #[arg(long, default_value = "pi", allow_hyphen_values = true, value_parser = parse_number)]
        theta_max: f64,
        /// Grid points per swept displacement.
        #[arg(long, default_value_t = 17)]
        points: usize,
    },
    /// Classical rule against the exact answer at aθ = aϑ = π/4.
    Violate {
        #[command(flatten)]
        model: ModelArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    /// Idempotency, eigenvector, commutator, probability and translation sweeps.
    Check {
        #[arg(long = "L")]
        sites: usize,
        #[arg(long = "K", default_value = "1", value_parser = parse_number)]
        k_const: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum McCommand {
    /// Estimate the interference term from sampled answers.
    Run {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value = "pi/2", allow_hyphen_values = true, value_parser = parse_number)]
        theta: f64,
        #[arg(long, default_value = "pi/2", allow_hyphen_values = true, value_parser = parse_number)]
        vartheta: f64,
        #[arg(long, default_value_t = mc::DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, env = "COHERENCE_LAB_SEED", default_value_t = mc::DEFAULT_SEED)]
        seed: u64,
        /// Sweep θ over [0, π] with this many points instead of a single θ.
        #[arg(long)]
        sweep: Option<usize>,
    },
}

/// Parses a real number or a multiple of π: `1.5`, `pi`, `-pi/2`, `3pi/4`,
/// `0.25*pi`.
pub fn parse_number(text: &str) -> Result<f64, String> {
    let t = text.trim();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let bad = || format!("not a number or multiple of pi: `{text}`");
    let lower = t.to_ascii_lowercase();
    let Some(at) = lower.find("pi") else {
        return Err(bad());
    };
    let coefficient = match lower[..at].trim_end_matches('*') {
        "" | "+" => 1.0,
        "-" => -1.0,
        c => c.parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match lower[at + 2..].strip_prefix('/') {
        None if lower.len() == at + 2 => 1.0,
        None => return Err(bad()),
        Some(d) => d.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(coefficient * std::f64::consts::PI / divisor)
}

/// Rows of cells plus summary notes.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    pub exit_code: i32,
}

impl Report {
    fn new(headers: &[&'static str]) -> Self {
        Report {
            headers: headers.to_vec(),
            rows: Vec::new(),
            notes: Vec::new(),
            exit_code: EXIT_OK,
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    fn require(&mut self, ok: bool) {
        if !ok {
            self.exit_code = EXIT_VERIFY;
        }
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()
    }

    pub fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| {
            cells
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(&mut self.headers.iter().copied()))?;
        for row in &self.rows {
            writeln!(out, "{}", line(&mut row.iter().map(String::as_str)))?;
        }
        for note in &self.notes {
            writeln!(out, "{note}")?;
        }
        Ok(())
    }
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Shortest round-trip representation; scientific outside `[1e-4, 1e15)`.
fn num(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let mag = v.abs();
    if v.is_finite() && !(1e-4..1e15).contains(&mag) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn logic(cmd: &LogicCommand) -> Result<Report, UsageError> {
    match cmd {
        LogicCommand::Expand { formula, vars } => {
            let f = parse_formula(formula, vars)?;
            let indices = f.to_minterm_disjunction()?;
            let set = enumerate_minterms(f.arity())?;
            let mut report = Report::new(&["k", "conjunction"]);
            for &k in &indices {
                report.row(vec![
                    k.to_string(),
                    set.get(k).expect("valid index").render(vars),
                ]);
            }
            let listed = indices
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",");
            report.note(format!("formula: {f}"));
            report.note(format!(
                "minterms: {{{listed}}} ({} of {})",
                indices.len(),
                set.len()
            ));
            if indices.is_empty() {
                report.note("contradiction: no minterm satisfies the formula");
            } else if indices.len() == set.len() {
                report.note("valid: every minterm satisfies the formula");
            }
            let tautology = verify_tautology_of_all(&set);
            report.note(format!(
                "tautology of all {} minterms: {tautology}",
                set.len()
            ));
            report.require(tautology);
            Ok(report)
        }
        LogicCommand::Tautology { n } => {
            let set = enumerate_minterms(*n)?;
            let tautology = verify_tautology_of_all(&set);
            let mut report = Report::new(&["n", "N", "tautology"]);
            report.row(vec![
                n.to_string(),
                set.len().to_string(),
                tautology.to_string(),
            ]);
            report.note(format!("tautology: {tautology}"));
            report.require(tautology);
            Ok(report)
        }
    }
}

const COMPOSITION_HEADERS: [&str; 9] = [
    "theta",
    "vartheta",
    "p_theta",
    "p_vartheta",
    "classical",
    "interference",
    "composed",
    "exact",
    "abs_error",
];

fn coherence(cmd: &CoherenceCommand, angle: f64) -> Result<Report, UsageError> {
    match cmd {
        CoherenceCommand::Table {
            model,
            theta,
            vartheta,
            theta_min,
            theta_max,
            points,
        } => {
            let m = CoherenceModel::new(model.a)?;
            let interval = ThetaInterval::new(theta_min * angle, theta_max * angle)?;
            if *points == 0 {
                return Err(UsageError("--points must be at least 1".into()));
            }
            let axis = |fixed: Option<f64>| match fixed {
                Some(v) => vec![v * angle],
                None => interval.grid(*points),
            };
            let mut report = Report::new(&COMPOSITION_HEADERS);
            let mut worst = 0.0f64;
            for t in axis(*theta) {
                for v in axis(*vartheta) {
                    let (pt, pv) = (m.p(t).value(), m.p(v).value());
                    let classical = crate::probability::classical_compose(pt, pv)?;
                    let composed = m.compose(t, v);
                    let exact = m.direct(t, v);
                    let err = (composed - exact).abs();
                    worst = worst.max(err);
                    report.row(
                        [
                            t,
                            v,
                            pt,
                            pv,
                            classical,
                            m.interference_term(t, v),
                            composed,
                            exact,
                            err,
                        ]
                        .map(num)
                        .to_vec(),
                    );
                }
            }
            let ok = worst < IDENTITY_TOL;
            report.note(format!(
                "max abs_error: {} over {} rows (tolerance {IDENTITY_TOL:e}): {}",
                num(worst),
                report.rows.len(),
                pass(ok)
            ));
            report.require(ok);
            Ok(report)
        }
        CoherenceCommand::Violate { model } => {
            let m = CoherenceModel::new(model.a)?;
            let w = m.classical_violation_witness()?;
            let mut report = Report::new(&[
                "a",
                "theta",
                "p",
                "classical",
                "required",
                "interference",
                "gap",
            ]);
            report.row(
                [
                    m.a(),
                    w.theta,
                    w.p,
                    w.classical,
                    w.required,
                    w.interference,
                    w.gap,
                ]
                .map(num)
                .to_vec(),
            );
            report.note(format!(
                "at theta = vartheta = {} (a*theta = pi/4): classical {} vs required {}, gap {}",
                num(w.theta),
                num(w.classical),
                num(w.required),
                num(w.gap)
            ));
            report.note(format!(
                "p^2 + (1-p)^2 >= {} for every p (minimum at p = {}), so no classical assignment reaches 0",
                num(w.classical_floor),
                num(w.classical_floor_at)
            ));
            let ok = (w.gap - 0.5).abs() < IDENTITY_TOL && w.required.abs() < IDENTITY_TOL;
            report.require(ok);
            Ok(report)
        }
    }
}

fn lattice(cmd: &LatticeCommand) -> Result<Report, UsageError> {
    let LatticeCommand::Check { sites, k_const } = cmd;
    let config = LatticeConfig::new(*sites, *k_const)?;
    let positions = (0..*sites)
        .map(|q0| build_position_statement(config, q0))
        .collect::<Result<Vec<_>, _>>()?;
    let expected = k_const / *sites as f64;

    let mut report = Report::new(&[
        "L",
        "k",
        "q0",
        "K",
        "idempotency_residual",
        "commutator_norm",
        "joint_probability",
    ]);
    let mut worst_idem = 0.0f64;
    let mut worst_eigen = 0.0f64;
    let mut min_comm = f64::INFINITY;
    let mut worst_prob = 0.0f64;
    let mut worst_order = 0.0f64;
    let mut worst_shift = 0.0f64;
    for k in 0..*sites {
        let m = build_momentum_statement(config, k)?;
        let idem = verify_idempotent(&m);
        worst_idem = worst_idem.max(idem);
        worst_eigen = worst_eigen.max(eigenvector_check(&m).max_deviation());
        worst_shift = worst_shift.max(m.translate(1).matrix().sub(m.matrix()).max_norm());
        for p in &positions {
            let comm = commutator_norm(&m, p)?;
            let w = joint_probability(&m, p)?;
            min_comm = min_comm.min(comm);
            worst_prob = worst_prob.max((w - expected).abs());
            worst_order = worst_order.max((w - joint_probability(p, &m)?).abs());
            report.row(vec![
                sites.to_string(),
                k.to_string(),
                p.site().to_string(),
                num(*k_const),
                num(idem),
                num(comm),
                num(w),
            ]);
        }
    }
    let worst_overlap = (0..*sites)
        .flat_map(|j| (0..*sites).map(move |k| (j, k)))
        .map(|(j, k)| {
            let target = if j == k { *sites as f64 } else { 0.0 };
            (mode_overlap::<f64>(*sites, j, k) - target).norm()
        })
        .fold(0.0f64, f64::max);

    let checks = [
        (
            "idempotency residual",
            worst_idem,
            worst_idem < MATRIX_TOL,
            format!("< {MATRIX_TOL:e}"),
        ),
        (
            "eigenvector deviation",
            worst_eigen,
            worst_eigen < MATRIX_TOL,
            format!("< {MATRIX_TOL:e}"),
        ),
        (
            "mode orthogonality deviation",
            worst_overlap,
            worst_overlap < MATRIX_TOL * *sites as f64,
            format!("< {:e}", MATRIX_TOL * *sites as f64),
        ),
        (
            "min commutator norm",
            min_comm,
            min_comm > COMMUTATOR_FLOOR,
            format!("> {COMMUTATOR_FLOOR:e}"),
        ),
        (
            "max |joint_probability - K/L|",
            worst_prob,
            worst_prob < IDENTITY_TOL,
            format!("< {IDENTITY_TOL:e}"),
        ),
        (
            "max order-swap difference",
            worst_order,
            worst_order < IDENTITY_TOL,
            format!("< {IDENTITY_TOL:e}"),
        ),
        (
            "max change under unit translation",
            worst_shift,
            worst_shift < IDENTITY_TOL,
            format!("< {IDENTITY_TOL:e}"),
        ),
    ];
    report.note(format!("K/L = {}", num(expected)));
    for (name, value, ok, bound) in checks {
        report.note(format!("{name}: {} ({bound}): {}", num(value), pass(ok)));
        report.require(ok);
    }
    Ok(report)
}

fn theorem1(n: usize) -> Result<Report, UsageError> {
    let search = exhaustive_algorithm_search(n)?;
    let steps = factorial(n).expect("N <= 5");
    let mut report = Report::new(&["N", "step", "order", "accumulated", "consistent_targets"]);
    let targets: Vec<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    for g in Permutation::all(n) {
        let mut accumulated = None;
        let mut consistent = 0;
        for t in &targets {
            let w = theorem1_contradiction_witness(n, &g, t)?;
            consistent += usize::from(w.consistent);
            accumulated.get_or_insert(w.accumulated);
        }
        report.row(vec![
            n.to_string(),
            g.to_string(),
            g.order().to_string(),
            accumulated
                .expect("S_N has a non-identity element for N >= 2")
                .to_string(),
            consistent.to_string(),
        ]);
    }
    report.note(format!("steps of theta/N! applied N! = {steps} times"));
    report.note(search.summary());
    report.require(search.consistent_candidates == 0);
    Ok(report)
}

const MC_HEADERS: [&str; 10] = [
    "a",
    "theta",
    "vartheta",
    "trials",
    "seed",
    "p_direct_hat",
    "p_chained_hat",
    "interference_hat",
    "analytic_interference",
    "std_error",
];

fn monte_carlo(cmd: &McCommand, angle: f64) -> Result<Report, UsageError> {
    let McCommand::Run {
        model,
        theta,
        vartheta,
        trials,
        seed,
        sweep,
    } = cmd;
    let m = CoherenceModel::new(model.a)?;
    let rows = match sweep {
        Some(points) => {
            let grid = ThetaInterval::new(0.0, std::f64::consts::PI)?.grid(*points);
            mc::sweep(&m, &grid, vartheta * angle, *trials, *seed)?
        }
        None => vec![mc::run_chained(&TrialPlan {
            model: m,
            theta: theta * angle,
            vartheta: vartheta * angle,
            trials: *trials,
            seed: *seed,
        })?],
    };
    let mut report = Report::new(&MC_HEADERS);
    let mut inside = 0;
    for r in &rows {
        inside += usize::from(r.within(MC_SIGMAS));
        report.row(vec![
            num(r.a),
            num(r.theta),
            num(r.vartheta),
            r.trials.to_string(),
            r.seed.to_string(),
            num(r.p_direct_hat),
            num(r.p_chained_hat),
            num(r.interference_hat),
            num(r.analytic_interference),
            num(r.std_error),
        ]);
    }
    // single runs must land inside the band; sweeps may lose one point in 17
    let required = if rows.len() == 1 {
        1
    } else {
        (rows.len() * 16).div_ceil(17)
    };
    let ok = inside >= required;
    report.note(format!("rng: {}", mc::RNG_ALGORITHM));
    report.note(format!(
        "{inside} of {} rows within {MC_SIGMAS} sigma of the analytic interference (need {required}): {}",
        rows.len(),
        pass(ok)
    ));
    report.require(ok);
    Ok(report)
}

fn build_report(cli: &Cli) -> Result<Report, UsageError> {
    let angle = if cli.degrees {
        std::f64::consts::PI / 180.0
    } else {
        1.0
    };
    match &cli.command {
        Command::Logic(cmd) => logic(cmd),
        Command::Coherence(cmd) => coherence(cmd, angle),
        Command::Lattice(cmd) => lattice(cmd),
        Command::Theorem1 { n } => theorem1(*n),
        Command::Mc(cmd) => monte_carlo(cmd, angle),
    }
}

fn emit(cli: &Cli, report: &Report, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<()> {
    let mut file;
    let target: &mut dyn Write = match &cli.output {
        Some(path) => {
            file = File::create(path)?;
            &mut file
        }
        None => out,
    };
    match cli.format {
        Format::Table => report.write_table(target),
        Format::Csv => {
            report.write_csv(target)?;
            for note in &report.notes {
                writeln!(err, "{note}")?;
            }
            Ok(())
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and writes the
/// report. Returns the process exit code.
pub fn execute<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    if let Command::Theorem1 { n } = cli.command {
        if !(2..=MAX_SEARCH_SIZE).contains(&n) {
            let _ = writeln!(err, "error: --N must be in 2..={MAX_SEARCH_SIZE}, got {n}");
            return EXIT_USAGE;
        }
    }
    if let Command::Logic(LogicCommand::Tautology { n }) = cli.command {
        if !(1..=MAX_VARIABLES).contains(&n) {
            let _ = writeln!(err, "error: --n must be in 1..={MAX_VARIABLES}, got {n}");
            return EXIT_USAGE;
        }
    }
    let report = match build_report(&cli) {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = emit(&cli, &report, out, err) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    report.exit_code
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    execute(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
