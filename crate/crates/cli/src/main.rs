use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use omsignal_core::campaign::{run_campaign_with_cycles, CampaignConfig};
use omsignal_core::committee::{basis_coefficients, decompose_tope, min_elements};
use omsignal_core::cycle::{find_symmetric_cycles, validate_cycle, SymmetricCycle};
use omsignal_core::io::{self, CycleFile};
use omsignal_core::signal::DistanceVector;
use omsignal_core::spectral::{
    committee_card_quadratic, committee_card_spectral, decomposition_card_spectral, dft_int,
    two_cycle_analysis, QuadraticVariant, SpectralVariant, Tolerances,
};
use omsignal_core::{Error, Tope, TopeSet, ValidationReport};

/// Topes, symmetric cycles, critical committees and distance-signal spectra
/// of simple acyclic oriented matroids.
#[derive(Parser)]
#[command(name = "omsignal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the oriented-matroid axioms of a tope set, or a cycle against its host.
    Validate(Opts),
    /// List the topes of the input.
    Topes(Opts),
    /// List canonical symmetric cycles with flip orders and distance vectors.
    Cycles(Opts),
    /// Critical committee of a cycle with every cardinality formula.
    Committee(Opts),
    /// Decompose a tope over a cycle.
    Decompose(Opts),
    /// DFT of a cycle's distance vector.
    Spectrum(Opts),
    /// Run every identity over every cycle.
    Verify(Opts),
    /// Joint analysis of two cycles.
    TwoCycle(Opts),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Arrangement,
    Topes,
    Cycle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Opts {
    /// Arrangement JSON, tope list, or cycle JSON.
    #[arg(long)]
    input: PathBuf,
    /// Input kind; guessed from the content when omitted.
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// Maximum number of cycles to enumerate, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_limit)]
    limit: Limit,
    /// Absolute tolerance for scalar identities.
    #[arg(long, default_value_t = Tolerances::default().identity)]
    tolerance: f64,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Base tope; all-positive by default.
    #[arg(long)]
    base: Option<String>,
    /// Cycle index in the sorted cycle list.
    #[arg(long, default_value_t = 0)]
    cycle: usize,
    /// Second cycle index for two-cycle.
    #[arg(long, default_value_t = 1)]
    other: usize,
    /// Tope for decompose and spectrum.
    #[arg(long)]
    tope: Option<String>,
    /// Host tope set (arrangement or tope list) for a cycle input;
    /// the full cube by default.
    #[arg(long)]
    host: Option<PathBuf>,
}

#[derive(Clone, Copy)]
struct Limit(Option<usize>);

fn parse_limit(s: &str) -> Result<Limit, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Limit(None));
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive count or `all`, got {s:?}")),
        Ok(n) => Ok(Limit(Some(n))),
    }
}

const EXIT_VALIDATION: u8 = 1;
const EXIT_IDENTITY: u8 = 2;
const EXIT_INPUT: u8 = 3;

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. }
            | Error::EmptyInput
            | Error::BadEntry(_)
            | Error::LengthMismatch { .. }
            | Error::TooLarge(..)
            | Error::BadLength(_)
            | Error::BadSelector(_) => EXIT_INPUT,
            Error::CertificateFailure { .. }
            | Error::MinimaMismatch { .. }
            | Error::NonIntegerResult(_) => EXIT_IDENTITY,
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Validate(o) => cmd_validate(o),
        Command::Topes(o) => cmd_topes(o),
        Command::Cycles(o) => cmd_cycles(o),
        Command::Committee(o) => cmd_committee(o),
        Command::Decompose(o) => cmd_decompose(o),
        Command::Spectrum(o) => cmd_spectrum(o),
        Command::Verify(o) => cmd_verify(o),
        Command::TwoCycle(o) => cmd_two_cycle(o),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

enum Input {
    Set(TopeSet),
    Cycle { file: CycleFile, host: TopeSet },
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn guess_kind(text: &str) -> Kind {
    if !text.trim_start().starts_with('{') {
        return Kind::Topes;
    }
    match serde_json::from_str::<Value>(text) {
        Ok(v) if v.get("vertices").is_some() => Kind::Cycle,
        _ => Kind::Arrangement,
    }
}

fn load_set(text: &str, kind: Kind) -> Result<TopeSet, Failure> {
    match kind {
        Kind::Arrangement => Ok(io::parse_arrangement(text)?.topes()?),
        Kind::Topes => Ok(TopeSet::new(io::parse_tope_list(text)?)?),
        Kind::Cycle => Err(Failure::input("expected a tope set, got a cycle file")),
    }
}

fn load(o: &Opts) -> Result<Input, Failure> {
    let text = read(&o.input)?;
    let kind = o.kind.unwrap_or_else(|| guess_kind(&text));
    if kind != Kind::Cycle {
        return Ok(Input::Set(load_set(&text, kind)?));
    }
    let file = io::parse_cycle(&text)?;
    let host = match &o.host {
        Some(path) => {
            let text = read(path)?;
            let host = load_set(&text, guess_kind(&text))?;
            if host.t() != file.t {
                return Err(Failure::input(format!(
                    "host has ground set size {}, cycle has {}",
                    host.t(),
                    file.t
                )));
            }
            host
        }
        None if (1..=20).contains(&file.t) => TopeSet::hypercube(file.t),
        None => {
            return Err(Failure::input(format!(
                "no default host for t = {}",
                file.t
            )))
        }
    };
    Ok(Input::Cycle { file, host })
}

impl Input {
    fn set(&self) -> &TopeSet {
        match self {
            Input::Set(s) => s,
            Input::Cycle { host, .. } => host,
        }
    }

    /// The cycle list: enumerated, or the single validated cycle of a cycle file.
    fn cycles(&self, limit: Limit) -> Result<Vec<SymmetricCycle>, Failure> {
        match self {
            Input::Set(s) => {
                let cycles = find_symmetric_cycles(s, limit.0)?;
                if cycles.is_empty() {
                    return Err(Error::NoCycleFound.into());
                }
                Ok(cycles)
            }
            Input::Cycle { file, host } => {
                let report = validate_cycle(&file.vertices, host);
                if !report.overall() {
                    return Err(Failure {
                        code: EXIT_VALIDATION,
                        message: format!("invalid cycle: {}", failure_text(&report)),
                    });
                }
                Ok(vec![SymmetricCycle::from_vertices(file.vertices.clone())?])
            }
        }
    }
}

fn failure_text(report: &ValidationReport) -> String {
    report
        .failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{} ({w})", c.name),
            None => c.name.clone(),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn parse_tope(s: &str, t: usize, what: &str) -> Result<Tope, Failure> {
    let tope: Tope = s
        .parse()
        .map_err(|e| Failure::input(format!("--{what} {s:?}: {e}")))?;
    if tope.len() != t {
        return Err(Failure::input(format!(
            "--{what} has length {}, expected {t}",
            tope.len()
        )));
    }
    Ok(tope)
}

fn base(o: &Opts, t: usize) -> Result<Tope, Failure> {
    match &o.base {
        Some(s) => parse_tope(s, t, "base"),
        None => Ok(Tope::positive(t)),
    }
}

fn tolerances(o: &Opts) -> Result<Tolerances, Failure> {
    if !(o.tolerance > 0.0 && o.tolerance.is_finite()) {
        return Err(Failure::input(format!(
            "--tolerance must be positive, got {}",
            o.tolerance
        )));
    }
    Ok(Tolerances {
        identity: o.tolerance,
        ..Tolerances::default()
    })
}

fn pick(cycles: &[SymmetricCycle], index: usize) -> Result<&SymmetricCycle, Failure> {
    cycles.get(index).ok_or_else(|| {
        Failure::input(format!(
            "cycle index {index} out of range ({} cycles)",
            cycles.len()
        ))
    })
}

fn emit(o: &Opts, body: &str) -> Result<(), Failure> {
    match &o.output {
        Some(path) => fs::write(path, body)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::input(format!("cannot write output: {e}")))
        }
    }
}

fn emit_json(o: &Opts, value: &impl serde::Serialize) -> Result<(), Failure> {
    if o.format == Some(Format::Csv) {
        return Err(Failure::input(
            "csv output is only available for topes and spectrum",
        ));
    }
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    emit(o, &text)
}

fn cycle_json(index: usize, cycle: &SymmetricCycle, base: &Tope) -> Result<Value, Failure> {
    let z = DistanceVector::from_cycle(cycle, base)?;
    Ok(json!({
        "index": index,
        "vertices": cycle.vertices(),
        "flip_order": cycle.flip_order(),
        "distance": z.values(),
    }))
}

fn cmd_validate(o: &Opts) -> Outcome {
    let input = load(o)?;
    let report = match &input {
        Input::Set(s) => s.validate(),
        Input::Cycle { file, host } => validate_cycle(&file.vertices, host),
    };
    emit_json(o, &report)?;
    Ok(if report.overall() { 0 } else { EXIT_VALIDATION })
}

fn cmd_topes(o: &Opts) -> Outcome {
    let input = load(o)?;
    let set = input.set();
    match o.format {
        Some(Format::Csv) => emit(o, &io::format_tope_list(set.topes()))?,
        _ => emit_json(
            o,
            &json!({"t": set.t(), "count": set.len(), "topes": set.topes()}),
        )?,
    }
    Ok(0)
}

fn cmd_cycles(o: &Opts) -> Outcome {
    let input = load(o)?;
    let base = base(o, input.set().t())?;
    let cycles = input.cycles(o.limit)?;
    let list = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| cycle_json(i, c, &base))
        .collect::<Result<Vec<_>, _>>()?;
    emit_json(
        o,
        &json!({"t": input.set().t(), "base": base, "count": list.len(), "cycles": list}),
    )?;
    Ok(0)
}

fn cmd_committee(o: &Opts) -> Outcome {
    let input = load(o)?;
    let base = base(o, input.set().t())?;
    let tol = tolerances(o)?;
    let cycles = input.cycles(o.limit)?;
    let cycle = pick(&cycles, o.cycle)?;
    let committee = min_elements(cycle, &base)?;
    let z = DistanceVector::from_cycle(cycle, &base)?;
    let target = committee.cardinality as f64;
    let mut agree = true;
    let mut exact = Vec::new();
    for v in QuadraticVariant::ALL {
        let value = committee_card_quadratic(&z, v)?;
        agree &= value == committee.cardinality;
        exact.push(json!({"variant": v, "value": value}));
    }
    let mut spectral = Vec::new();
    for v in SpectralVariant::ALL {
        let value = committee_card_spectral(&z, v)?;
        agree &= (value - target).abs() <= tol.identity && value.round() == target;
        spectral.push(json!({"variant": v, "value": value}));
    }
    emit_json(
        o,
        &json!({
            "cycle": cycle_json(o.cycle, cycle, &base)?,
            "base": base,
            "committee": committee,
            "exact": exact,
            "spectral": spectral,
            "agree": agree,
        }),
    )?;
    Ok(if agree { 0 } else { EXIT_IDENTITY })
}

fn cmd_decompose(o: &Opts) -> Outcome {
    let input = load(o)?;
    let t = input.set().t();
    let tope = match &o.tope {
        Some(s) => parse_tope(s, t, "tope")?,
        None => return Err(Failure::input("decompose needs --tope")),
    };
    let cycles = input.cycles(o.limit)?;
    let cycle = pick(&cycles, o.cycle)?;
    let coefficients = basis_coefficients(&tope, cycle)?;
    let q = decompose_tope(&tope, cycle)?;
    let spectral = decomposition_card_spectral(&DistanceVector::from_cycle(cycle, &tope)?)?;
    let agree = spectral.round() == q.cardinality as f64;
    emit_json(
        o,
        &json!({
            "cycle": o.cycle,
            "tope": tope,
            "coefficients": coefficients,
            "decomposition": q,
            "spectral_cardinality": spectral,
            "agree": agree,
        }),
    )?;
    Ok(if agree { 0 } else { EXIT_IDENTITY })
}

fn cmd_spectrum(o: &Opts) -> Outcome {
    let input = load(o)?;
    let t = input.set().t();
    let reference = match &o.tope {
        Some(s) => parse_tope(s, t, "tope")?,
        None => base(o, t)?,
    };
    let cycles = input.cycles(o.limit)?;
    let cycle = pick(&cycles, o.cycle)?;
    let z = DistanceVector::from_cycle(cycle, &reference)?;
    let spectrum = dft_int(z.values())?;
    match o.format {
        Some(Format::Json) => {
            let rows: Vec<Value> = spectrum
                .values()
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    json!({
                        "k": k,
                        "re": c.re,
                        "im": c.im,
                        "magnitude_squared": c.norm_sqr(),
                        "sin2_weight": omsignal_core::spectral::dft::sin2(k, t),
                    })
                })
                .collect();
            emit_json(
                o,
                &json!({"tope": reference, "distance": z.values(), "spectrum": rows}),
            )?;
        }
        _ => emit(o, &io::spectrum_csv(&spectrum))?,
    }
    Ok(0)
}

fn cmd_verify(o: &Opts) -> Outcome {
    let input = load(o)?;
    let set = input.set();
    let base = base(o, set.t())?;
    let config = CampaignConfig {
        cycle_limit: o.limit.0,
        tolerances: tolerances(o)?,
        seed: o.seed,
        ..CampaignConfig::default()
    };
    if let Input::Set(s) = &input {
        let report = s.validate();
        if !report.overall() {
            return Err(Failure {
                code: EXIT_VALIDATION,
                message: format!("tope set failed validation: {}", failure_text(&report)),
            });
        }
    }
    let cycles = input.cycles(o.limit)?;
    let report = run_campaign_with_cycles(set, &cycles, &base, &config)?;
    emit_json(o, &report)?;
    eprintln!(
        "verify: {} topes, {} cycles, {} cycle pairs checked: {}",
        report.tope_count,
        report.cycles.len(),
        report.two_cycle.len(),
        if report.overall { "PASS" } else { "FAIL" }
    );
    Ok(if !report.validation_pass {
        EXIT_VALIDATION
    } else if !report.identities_pass {
        EXIT_IDENTITY
    } else {
        0
    })
}

fn cmd_two_cycle(o: &Opts) -> Outcome {
    let input = load(o)?;
    let base = base(o, input.set().t())?;
    let tol = tolerances(o)?;
    let cycles = input.cycles(o.limit)?;
    let first = pick(&cycles, o.cycle)?;
    let second = pick(&cycles, o.other)?;
    let r = two_cycle_analysis(
        &DistanceVector::from_cycle(first, &base)?,
        &DistanceVector::from_cycle(second, &base)?,
        &tol,
    )?;
    emit_json(
        o,
        &json!({
            "cycles": [o.cycle, o.other],
            "base": base,
            "e": r.e,
            "m": r.m,
            "e_magnitudes_squared": r.e_spectrum.magnitudes_squared(),
            "m_magnitudes_squared": r.m_spectrum.magnitudes_squared(),
            "cardinalities": r.cardinalities,
            "combined_spectral": r.combined_spectral,
            "checks": io::identity_reports_json(&r.checks),
            "pass": r.pass(),
        }),
    )?;
    Ok(if r.pass() { 0 } else { EXIT_IDENTITY })
}
