//! `omalous`: batch front end for the omalous-core library.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error. Domain errors are
//! reported on stdout as `{"error": {"code", "message"}}` so that scripts can
//! parse them the same way as results.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use omalous::cayley_bacharach::{
    cb_check, extension_certificate, sample_points, CbSystem, CyclesFile, PointsFile,
};
use omalous::exactmath::{Coefficient, QPoly};
use omalous::liqin::{self, Sign};
use omalous::qsc::{self, ClassicalCheck, DeformationMatrices, RingPresentation};
use omalous::surface::{hypersurface_invariants, HypersurfaceSpec};
use omalous::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(
    name = "omalous",
    version,
    about = "Omalous bundles on surfaces in P^3: bounds, cycles and quotient rings"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "OMALOUS_FORMAT", default_value = "json")]
    format: Format,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SignArg {
    Plus,
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::PlusK,
            SignArg::Minus => Sign::MinusK,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Numerical invariants of a smooth degree-D surface in P^3.
    Invariants {
        #[arg(long)]
        degree: i64,
    },
    /// Li–Qin bound alpha with its term breakdown.
    Alpha {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        rank: i64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Whether X_D is good of type (R, H) for either sign of c1.
    Good {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        rank: i64,
    },
    /// Certified threshold beyond which every X_d is good.
    D0 {
        #[arg(long)]
        rank: i64,
        #[arg(long, default_value_t = liqin::DEFAULT_D_MIN)]
        d_min: i64,
        #[arg(long, default_value_t = liqin::DEFAULT_SCAN_CAP)]
        scan_cap: i64,
    },
    /// Total 0-cycle length forced by c2(E) = c2(X).
    CycleLength {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        rank: i64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Cayley–Bacharach certificate for the rank-R extension built from r-1 cycles.
    Cb {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        cycles: PathBuf,
        #[arg(long)]
        rank: i64,
        #[arg(long, value_enum, default_value = "plus")]
        sign: SignArg,
    },
    /// Cayley–Bacharach check of one cycle against |O_X(M)|.
    CbCheck {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        system_degree: i64,
    },
    /// Random integer points on a surface (heuristic, seeded).
    SampleCycle {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        height: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        max_attempts: usize,
    },
    /// Quotient rings: QH*(P^n), QH*(P^n x P^m) and the deformed quadric.
    Qsc {
        #[command(subcommand)]
        command: QscCommand,
    },
}

#[derive(Subcommand, Debug)]
enum QscCommand {
    /// Print the ring presentation with its Gröbner basis and staircase.
    Ring(RingArgs),
    /// Normal form of a polynomial.
    Reduce {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Coefficient of the top basis monomial in the normal form.
    Correlator {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        poly: PathBuf,
    },
    /// Whether the quadric ring equals QH*(P^1 x P^1).
    CheckClassical {
        #[arg(long)]
        matrices: PathBuf,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RingArgs {
    /// QH*(P^N).
    #[arg(long, value_name = "N")]
    pn: Option<u32>,
    /// QH*(P^N x P^M).
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pnm: Option<Vec<u32>>,
    /// Deformed quadric from a matrices file.
    #[arg(long, value_name = "FILE")]
    matrices: Option<PathBuf>,
}

impl RingArgs {
    fn build(&self) -> Result<RingPresentation> {
        match (self.pn, &self.pnm, &self.matrices) {
            (Some(n), _, _) => qsc::qh_projective_space(n),
            (_, Some(nm), _) => qsc::qh_product_projective(nm[0], nm[1]),
            (_, _, Some(path)) => qsc::quadric_family_relations(&read_json(path)?),
            _ => unreachable!("clap enforces one ring source"),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

struct Report {
    json: Value,
    text: String,
}

fn report<T: Serialize>(value: &T) -> Report {
    let json = serde_json::to_value(value).expect("reports serialize");
    let mut text = String::new();
    flatten(&json, "", &mut text);
    Report { json, text }
}

fn with_text<T: Serialize>(value: &T, text: String) -> Report {
    Report {
        json: serde_json::to_value(value).expect("reports serialize"),
        text,
    }
}

/// `path = value` lines; arrays of scalars stay on one line.
fn flatten(v: &Value, path: &str, out: &mut String) {
    let scalar = |v: &Value| !matches!(v, Value::Object(_) | Value::Array(_));
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                flatten(child, &p, out);
            }
        }
        Value::Array(items) if !items.iter().all(scalar) => {
            for (i, child) in items.iter().enumerate() {
                flatten(child, &format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{path} = {s}\n")),
        other => out.push_str(&format!("{path} = {other}\n")),
    }
}

fn monomial_list(ring: &RingPresentation, ms: Option<&[omalous::exactmath::Monomial]>) -> String {
    match ms {
        None => "infinite".to_string(),
        Some(ms) => {
            let names: Vec<String> = ms.iter().map(|m| m.format(ring.vars())).collect();
            format!("{{{}}}", names.join(", "))
        }
    }
}

fn ring_text(ring: &RingPresentation) -> String {
    let join = |ps: &[qsc::RingPoly]| {
        ps.iter()
            .map(|p| p.to_text())
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!(
        "vars = {}\nparams = {}\nrelations = {}\ngroebner_basis = {}\nstaircase = {}\nbasis = {}\n",
        ring.vars().join(", "),
        ring.params().join(", "),
        join(ring.relations()),
        join(ring.groebner_basis()),
        monomial_list(ring, ring.staircase()),
        monomial_list(ring, ring.basis()),
    )
}

fn read_ring_poly(ring: &RingPresentation, path: &Path) -> Result<qsc::RingPoly> {
    let f: QPoly = read_json(path)?;
    ring.lift(&f)
}

fn surface_spec(path: &Path) -> Result<HypersurfaceSpec> {
    let spec: HypersurfaceSpec = read_json(path)?;
    spec.validate()?;
    Ok(spec)
}

fn run(command: &Command) -> Result<Report> {
    Ok(match command {
        Command::Invariants { degree } => report(&hypersurface_invariants(*degree)?),
        Command::Alpha { degree, rank, sign } => report(&liqin::alpha(
            &hypersurface_invariants(*degree)?,
            *rank,
            (*sign).into(),
        )?),
        Command::Good { degree, rank } => {
            report(&liqin::is_good(&hypersurface_invariants(*degree)?, *rank)?)
        }
        Command::D0 {
            rank,
            d_min,
            scan_cap,
        } => report(&liqin::find_d0(*rank, *d_min, *scan_cap)?),
        Command::CycleLength { degree, rank, sign } => report(&liqin::cycle_length_report(
            &hypersurface_invariants(*degree)?,
            *rank,
            (*sign).into(),
        )?),
        Command::Cb {
            surface,
            cycles,
            rank,
            sign,
        } => {
            let h = surface_spec(surface)?;
            let file: CyclesFile = read_json(cycles)?;
            report(&extension_certificate(
                &h.invariants()?,
                &h,
                &file.cycles,
                *rank,
                (*sign).into(),
            )?)
        }
        Command::CbCheck {
            surface,
            points,
            system_degree,
        } => {
            let sys = CbSystem::new(surface_spec(surface)?, *system_degree)?;
            let file: PointsFile = read_json(points)?;
            report(&cb_check(&file.points, &sys)?)
        }
        Command::SampleCycle {
            surface,
            count,
            height,
            seed,
            max_attempts,
        } => {
            let h = surface_spec(surface)?;
            if *height < 1 {
                return Err(Error::InvalidInput("height must be at least 1".into()));
            }
            report(&PointsFile {
                points: sample_points(&h, *count, *height, *seed, *max_attempts)?,
            })
        }
        Command::Qsc { command } => match command {
            QscCommand::Ring(args) => {
                let ring = args.build()?;
                with_text(&ring, ring_text(&ring))
            }
            QscCommand::Reduce { ring, poly } => {
                let ring = ring.build()?;
                let r = ring.reduce(&read_ring_poly(&ring, poly)?)?;
                let text = format!(
                    "input = {}\nreduced = {}\ncoordinates = {}\n",
                    r.input, r.reduced, r.coordinates
                );
                with_text(&r, text)
            }
            QscCommand::Correlator { ring, poly } => {
                let ring = ring.build()?;
                let r = ring.correlator_report(&read_ring_poly(&ring, poly)?)?;
                let text = format!(
                    "top_monomial = {}\ncorrelator = {}\n",
                    r.top_monomial.format(ring.vars()),
                    r.value.to_text()
                );
                with_text(&r, text)
            }
            QscCommand::CheckClassical { matrices } => {
                let mats: DeformationMatrices = read_json(matrices)?;
                report(&ClassicalCheck {
                    classical: qsc::check_classical_specialization(&mats),
                })
            }
        },
    })
}

fn render(format: Format, r: &Report) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&r.json).expect("JSON");
            s.push('\n');
            s
        }
        Format::Text => r.text.clone(),
    }
}

fn render_error(format: Format, e: &Error) -> String {
    match format {
        Format::Json => {
            let v = serde_json::json!({"error": {"code": e.code(), "message": e.to_string()}});
            let mut s = serde_json::to_string_pretty(&v).expect("JSON");
            s.push('\n');
            s
        }
        Format::Text => format!("error[{}]: {e}\n", e.code()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Command::D0 {
        d_min, scan_cap, ..
    } = &cli.command
    {
        if scan_cap < d_min {
            let e = Cli::command().error(
                ErrorKind::ValueValidation,
                "--scan-cap must be at least --d-min",
            );
            let _ = e.print();
            return ExitCode::from(1);
        }
    }
    let (out, code) = match run(&cli.command) {
        Ok(r) => (render(cli.format, &r), 0),
        Err(e) => (render_error(cli.format, &e), 2),
    };
    print!("{out}");
    if let Some(path) = &cli.output {
        if let Err(e) = fs::write(path, &out) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
