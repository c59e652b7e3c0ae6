//! Command implementations behind the `ptspec` binary: parameter validation,
//! dataset generation, and deterministic CSV/JSON serialization.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 verification run
//! with failing checks. Logs go to stderr; data files carry one metadata
//! block plus records, floats in shortest round-trip form.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::PathBuf;

use ptspec_core::verify::{run_verification, CheckRecord, FdGrid};
use ptspec_core::{Arch, HulthenModel, Parity, PoschlTeller, SpectrumEntry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ptspec",
    version,
    about = "Spectra and wave functions of a PT-symmetric Poschl-Teller well \
             and of the generalized Hulthen potential it maps onto along a \
             bent contour",
    max_term_width = 100
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bound states of the Poschl-Teller model on the shifted line
    SpectrumPt {
        #[command(flatten)]
        model: PtModelArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bound states of the generalized Hulthen model on the arch
    SpectrumHulthen {
        #[command(flatten)]
        model: HulthenModelArgs,
        /// Hard cap on the level-index search
        #[arg(long, default_value_t = ptspec_core::hulthen::DEFAULT_N_CAP)]
        n_cap: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// A transformed eigenfunction sampled along the arch
    Wavefunction {
        #[command(flatten)]
        model: HulthenModelArgs,
        /// Sigma parity of the state (defaults to the lowest-energy state)
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<i8>,
        /// Level index of the state (defaults to the lowest-energy state)
        #[arg(long)]
        n: Option<u32>,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The bent contour xi(x) = v - iu itself
    Contour {
        /// Contour shift, in (0, pi/2)
        #[arg(long)]
        epsilon: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One-shot oracle run: finite-difference eigenvalues, residual sweeps
    /// and the transform identity for every bound state
    Verify {
        #[command(flatten)]
        model: PtModelArgs,
        /// Truncation half-width of the finite-difference box
        #[arg(long, default_value_t = 12.0)]
        grid_half_width: f64,
        /// Interior points of the finite-difference grid
        #[arg(long, default_value_t = 2000)]
        grid_points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct PtModelArgs {
    /// Coupling alpha (>= 0) of the cosh^-2 well
    #[arg(long)]
    pub alpha: f64,
    /// Coupling beta (>= 0) of the sinh^-2 spike
    #[arg(long)]
    pub beta: f64,
    /// Contour shift, in (0, pi/2)
    #[arg(long)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct HulthenModelArgs {
    /// Coupling of the squared pole term, A <= 1
    #[arg(long = "A", allow_hyphen_values = true)]
    pub coupling_a: f64,
    /// Coupling of the simple pole term
    #[arg(long = "B", allow_hyphen_values = true)]
    pub coupling_b: f64,
    /// Arch shift, in (0, pi/2)
    #[arg(long)]
    pub epsilon: f64,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 101)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Run one parsed command; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(error) => {
            log::error!("{error}");
            eprintln!("error: {error}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::SpectrumPt { model, output } => {
            let model = PoschlTeller::new(model.alpha, model.beta, model.epsilon)?;
            let spectrum = model.spectrum();
            let metadata = Metadata::new("spectrum-pt")
                .with("alpha", model.alpha())
                .with("beta", model.beta())
                .with("epsilon", model.epsilon());
            let doc = spectrum_document(&metadata, &spectrum, output.format);
            write_output(&output, &doc)?;
            Ok(EXIT_OK)
        }
        Command::SpectrumHulthen {
            model,
            n_cap,
            output,
        } => {
            let model = HulthenModel::new(model.coupling_a, model.coupling_b, model.epsilon)?;
            let spectrum = model.spectrum(n_cap);
            let metadata = hulthen_metadata("spectrum-hulthen", &model);
            let doc = spectrum_document(&metadata, &spectrum, output.format);
            write_output(&output, &doc)?;
            Ok(EXIT_OK)
        }
        Command::Wavefunction {
            model,
            sigma,
            n,
            grid,
            output,
        } => {
            let model = HulthenModel::new(model.coupling_a, model.coupling_b, model.epsilon)?;
            let entry = select_state(&model, sigma, n)?;
            let points = model.arch().sample(grid.x_min, grid.x_max, grid.count)?;
            let values = model.psi_on_arch(&entry, &points)?;
            let metadata = hulthen_metadata("wavefunction", &model)
                .with("sigma", f64::from(i8::from(entry.qn.sigma)))
                .with("n", f64::from(entry.qn.n))
                .with("energy", entry.energy)
                .with_grid(&grid);
            let doc = wavefunction_document(&metadata, &points, &values, output.format);
            write_output(&output, &doc)?;
            Ok(EXIT_OK)
        }
        Command::Contour {
            epsilon,
            grid,
            output,
        } => {
            let arch = Arch::new(epsilon)?;
            let points = arch.sample(grid.x_min, grid.x_max, grid.count)?;
            let metadata = Metadata::new("contour")
                .with("epsilon", epsilon)
                .with_grid(&grid);
            let doc = contour_document(&metadata, &points, output.format);
            write_output(&output, &doc)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            model,
            grid_half_width,
            grid_points,
            output,
        } => {
            let model = PoschlTeller::new(model.alpha, model.beta, model.epsilon)?;
            let grid = FdGrid::new(grid_half_width, grid_points)?;
            let records = run_verification(&model, &grid)?;
            let failures = records.iter().filter(|r| !r.passed).count();
            let metadata = Metadata::new("verify")
                .with("alpha", model.alpha())
                .with("beta", model.beta())
                .with("epsilon", model.epsilon())
                .with("grid_half_width", grid.half_width())
                .with("grid_points", grid.interior_points() as f64);
            let doc = verify_document(&metadata, &records, output.format);
            write_output(&output, &doc)?;
            for record in &records {
                log::info!(
                    "{}: {} (error {:.3e}, tolerance {:.1e})",
                    record.name,
                    if record.passed { "ok" } else { "FAILED" },
                    record.error,
                    record.tolerance
                );
            }
            if failures > 0 {
                eprintln!(
                    "verification failed: {failures} of {} checks",
                    records.len()
                );
                Ok(EXIT_VERIFY_FAILED)
            } else {
                eprintln!("verification passed: all {} checks", records.len());
                Ok(EXIT_OK)
            }
        }
    }
}

fn hulthen_metadata(command: &'static str, model: &HulthenModel) -> Metadata {
    // alpha and C are echoed so the source-model coordinates are on record
    Metadata::new(command)
        .with("A", model.coupling_a())
        .with("B", model.coupling_b())
        .with("epsilon", model.epsilon())
        .with("alpha", model.alpha())
        .with("C", model.coupling_c())
}

fn select_state(
    model: &HulthenModel,
    sigma: Option<i8>,
    n: Option<u32>,
) -> Result<SpectrumEntry, Box<dyn std::error::Error>> {
    let spectrum = model.spectrum(ptspec_core::hulthen::DEFAULT_N_CAP);
    if spectrum.is_empty() {
        return Err("the model has no bound states".into());
    }
    match (sigma, n) {
        (None, None) => Ok(spectrum[0]),
        (sigma, n) => {
            let want_sigma = match sigma {
                Some(-1) => Some(Parity::Minus),
                Some(1) => Some(Parity::Plus),
                Some(other) => return Err(format!("sigma must be -1 or 1, got {other}").into()),
                None => None,
            };
            spectrum
                .iter()
                .find(|e| {
                    want_sigma.is_none_or(|s| e.qn.sigma == s) && n.is_none_or(|n| e.qn.n == n)
                })
                .copied()
                .ok_or_else(|| {
                    format!(
                        "no bound state with sigma={}, n={}; the spectrum has {} entries",
                        sigma.map_or("any".into(), |s| s.to_string()),
                        n.map_or("any".into(), |v| v.to_string()),
                        spectrum.len()
                    )
                    .into()
                })
        }
    }
}

/// Ordered command metadata; keys keep insertion order in both formats.
pub struct Metadata {
    command: &'static str,
    fields: Vec<(&'static str, f64)>,
}

impl Metadata {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            fields: Vec::new(),
        }
    }

    fn with(mut self, key: &'static str, value: f64) -> Self {
        self.fields.push((key, value));
        self
    }

    fn with_grid(self, grid: &GridArgs) -> Self {
        self.with("x_min", grid.x_min)
            .with("x_max", grid.x_max)
            .with("count", grid.count as f64)
    }

    fn json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("command".into(), self.command.into());
        for (key, value) in &self.fields {
            map.insert((*key).into(), (*value).into());
        }
        map.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        serde_json::Value::Object(map)
    }

    fn csv_comment(&self) -> String {
        let mut line = format!("# ptspec {} v{}", self.command, env!("CARGO_PKG_VERSION"));
        for (key, value) in &self.fields {
            let _ = write!(line, " {key}={value}");
        }
        line
    }
}

fn json_document<T: Serialize>(metadata: &Metadata, records: &[T]) -> String {
    let doc = serde_json::json!({
        "metadata": metadata.json(),
        "records": records,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable document");
    text.push('\n');
    text
}

fn csv_document(metadata: &Metadata, header: &str, rows: Vec<String>) -> String {
    let mut text = metadata.csv_comment();
    text.push('\n');
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    text
}

#[derive(Serialize)]
struct SpectrumRecord {
    sigma: i8,
    tau: i8,
    n: u32,
    kappa: f64,
    energy: f64,
    beta_effective: f64,
}

fn spectrum_document(metadata: &Metadata, spectrum: &[SpectrumEntry], format: Format) -> String {
    let records: Vec<SpectrumRecord> = spectrum
        .iter()
        .map(|e| SpectrumRecord {
            sigma: e.qn.sigma.into(),
            tau: e.qn.tau.into(),
            n: e.qn.n,
            kappa: e.kappa,
            energy: e.energy,
            beta_effective: e.beta_effective,
        })
        .collect();
    match format {
        Format::Json => json_document(metadata, &records),
        Format::Csv => csv_document(
            metadata,
            "sigma,tau,n,kappa,energy,beta_effective",
            records
                .iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{}",
                        r.sigma, r.tau, r.n, r.kappa, r.energy, r.beta_effective
                    )
                })
                .collect(),
        ),
    }
}

#[derive(Serialize)]
struct WavefunctionRecord {
    x: f64,
    re_xi: f64,
    im_xi: f64,
    re_psi: f64,
    im_psi: f64,
    abs_psi: f64,
}

fn wavefunction_document(
    metadata: &Metadata,
    points: &[ptspec_core::ContourPoint],
    values: &[num_complex::Complex64],
    format: Format,
) -> String {
    let records: Vec<WavefunctionRecord> = points
        .iter()
        .zip(values)
        .map(|(p, psi)| WavefunctionRecord {
            x: p.x,
            re_xi: p.xi.re,
            im_xi: p.xi.im,
            re_psi: psi.re,
            im_psi: psi.im,
            abs_psi: psi.norm(),
        })
        .collect();
    match format {
        Format::Json => json_document(metadata, &records),
        Format::Csv => csv_document(
            metadata,
            "x,re_xi,im_xi,re_psi,im_psi,abs_psi",
            records
                .iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{}",
                        r.x, r.re_xi, r.im_xi, r.re_psi, r.im_psi, r.abs_psi
                    )
                })
                .collect(),
        ),
    }
}

#[derive(Serialize)]
struct ContourRecord {
    x: f64,
    v: f64,
    u: f64,
    re_r: f64,
    im_r: f64,
}

fn contour_document(
    metadata: &Metadata,
    points: &[ptspec_core::ContourPoint],
    format: Format,
) -> String {
    let records: Vec<ContourRecord> = points
        .iter()
        .map(|p| ContourRecord {
            x: p.x,
            v: p.v,
            u: p.u,
            re_r: p.r.re,
            im_r: p.r.im,
        })
        .collect();
    match format {
        Format::Json => json_document(metadata, &records),
        Format::Csv => csv_document(
            metadata,
            "x,v,u,re_r,im_r",
            records
                .iter()
                .map(|r| format!("{},{},{},{},{}", r.x, r.v, r.u, r.re_r, r.im_r))
                .collect(),
        ),
    }
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    name: &'a str,
    target: f64,
    found_re: f64,
    found_im: f64,
    error: f64,
    tolerance: f64,
    passed: bool,
}

fn verify_document(metadata: &Metadata, records: &[CheckRecord], format: Format) -> String {
    let rows: Vec<VerifyRecord> = records
        .iter()
        .map(|r| VerifyRecord {
            name: &r.name,
            target: r.target,
            found_re: r.found.re,
            found_im: r.found.im,
            error: r.error,
            tolerance: r.tolerance,
            passed: r.passed,
        })
        .collect();
    match format {
        Format::Json => json_document(metadata, &rows),
        Format::Csv => csv_document(
            metadata,
            "name,target,found_re,found_im,error,tolerance,passed",
            rows.iter()
                .map(|r| {
                    format!(
                        "{},{},{},{},{},{},{}",
                        r.name, r.target, r.found_re, r.found_im, r.error, r.tolerance, r.passed
                    )
                })
                .collect(),
        ),
    }
}

fn write_output(output: &OutputArgs, text: &str) -> std::io::Result<()> {
    match &output.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}
