//! Command-line front end. Inputs are JSON ideal documents, outputs are JSON
//! objects with exact rationals written as strings.

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::geometry::{ExponentVector, MAX_DIMENSION};
use crate::ideal::{closure_containment_check, mixed_multiplicity, ContainmentReport, MonomialIdeal, PrimaryMonomialIdeal};
use crate::lelong::{generalized_lelong, normalized_lelong, relative_type, HomogeneousPsh, MonomialWeight};
use crate::oracles::{covolume_monte_carlo, mixed_multiplicity_polarization};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_PRIMARY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lelong", version, about = "Exact invariants of monomial plurisubharmonic weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MassOracle {
    MonteCarlo,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MixedOracle {
    Polarization,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Residual Monge–Ampère mass τ of a weight.
    Mass {
        file: PathBuf,
        #[arg(long, value_enum)]
        oracle: Option<MassOracle>,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Directional Lelong number ν_u(0, a).
    DirLelong {
        file: PathBuf,
        #[arg(long = "a", value_delimiter = ',', required = true)]
        a: Vec<String>,
    },
    /// Atoms of the representing measure γ.
    Gamma { file: PathBuf },
    /// Generalized Lelong number ν(u, φ).
    Lelong {
        u_file: PathBuf,
        phi_file: PathBuf,
        #[arg(long)]
        normalized: bool,
    },
    /// Relative type σ(u, φ).
    Type { u_file: PathBuf, phi_file: PathBuf },
    /// Extremal simplicial direction a and flatness.
    Extremal { file: PathBuf },
    /// Flatness test with a witness probe when not flat.
    Flat { file: PathBuf },
    /// Mixed multiplicity e_{n-1}(J, I).
    Mixed {
        j_file: PathBuf,
        i_file: PathBuf,
        #[arg(long, value_enum)]
        oracle: Option<MixedOracle>,
    },
    /// Containment report for e_{n-1}(J, I) >= p.
    Contain {
        j_file: PathBuf,
        i_file: PathBuf,
        #[arg(short = 'p', allow_negative_numbers = true)]
        p: i64,
    },
    /// Łojasiewicz exponent of a weight.
    Loj { file: PathBuf },
    /// SVG drawing of a planar Newton polyhedron with its γ atoms.
    Plot {
        file: PathBuf,
        #[arg(short = 'o')]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    NotPrimary(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::NotPrimary(_) => EXIT_NOT_PRIMARY,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::NotPrimary(m) => write!(f, "not primary: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(m) => CliError::Input(m),
            Error::NotPrimary(m) => CliError::NotPrimary(m),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// One exponent entry: a JSON integer or a `"p/q"` string.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

/// `{"n": int, "generators": [[int | "p/q", ...], ...], "name"?: string}`
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDocument {
    pub n: usize,
    generators: Vec<Vec<Entry>>,
    #[serde(default)]
    pub name: Option<String>,
}

impl IdealDocument {
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("malformed ideal document: {e}"))
    }

    pub fn exponents(&self) -> Result<Vec<ExponentVector>, String> {
        if !(2..=MAX_DIMENSION).contains(&self.n) {
            return Err(format!("dimension {} outside the supported range 2..={MAX_DIMENSION}", self.n));
        }
        if self.generators.is_empty() {
            return Err("generator list is empty".into());
        }
        self.generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if g.len() != self.n {
                    return Err(format!("generator {} has {} entries, expected {}", i + 1, g.len(), self.n));
                }
                let coords = g
                    .iter()
                    .map(|e| match e {
                        Entry::Int(v) => Ok(Rational::from_integer((*v).into())),
                        Entry::Text(s) => parse_rational(s).map_err(|e| e.to_string()),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                ExponentVector::new(coords).map_err(|e| e.to_string())
            })
            .collect()
    }
}

fn read_exponents(path: &Path) -> CliResult<Vec<ExponentVector>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let doc = IdealDocument::parse(&text).map_err(|m| CliError::Input(format!("{}: {m}", path.display())))?;
    doc.exponents().map_err(|m| CliError::Input(format!("{}: {m}", path.display())))
}

fn read_psh(path: &Path) -> CliResult<HomogeneousPsh> {
    Ok(HomogeneousPsh::new(read_exponents(path)?)?)
}

fn read_weight(path: &Path) -> CliResult<MonomialWeight> {
    Ok(MonomialWeight::new(read_exponents(path)?)?)
}

fn read_ideal(path: &Path) -> CliResult<MonomialIdeal> {
    Ok(MonomialIdeal::new(read_exponents(path)?)?)
}

fn read_primary(path: &Path) -> CliResult<PrimaryMonomialIdeal> {
    Ok(PrimaryMonomialIdeal::new(read_ideal(path)?)?)
}

fn r(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

fn rvec(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(r).collect())
}

fn same_dimension(a: usize, b: usize) -> CliResult<()> {
    if a != b {
        return Err(CliError::Input(format!("inputs have different dimensions ({a} and {b})")));
    }
    Ok(())
}

fn report_json(report: &ContainmentReport) -> Value {
    let generators: Vec<Value> = report
        .generators
        .iter()
        .map(|g| {
            json!({
                "exponent": rvec(g.exponent.coords()),
                "axis_bound": g.axis_bound,
                "closure_member": g.closure_member,
                "literal_member": g.literal_member,
            })
        })
        .collect();
    json!({
        "p": report.p,
        "e": r(&report.mixed_multiplicity),
        "hypothesis": report.hypothesis,
        "axis_multiplicities": rvec(&report.axis_multiplicities),
        "exponents": report.exponents,
        "generators": generators,
        "summary": {
            "axis_bound": report.all_axis_bound(),
            "closure": report.all_closure(),
            "literal": report.all_literal(),
            "literal_discrepancy": report.literal_discrepancy(),
        },
    })
}

fn execute(command: Command) -> CliResult<Value> {
    let value = match command {
        Command::Mass { file, oracle, samples, seed } => {
            let phi = read_weight(&file)?;
            let mut out = Map::new();
            out.insert("tau".into(), r(phi.residual_mass()));
            if let Some(MassOracle::MonteCarlo) = oracle {
                let est = covolume_monte_carlo(phi.polyhedron(), samples, seed)?;
                let fact: f64 = (1..=phi.dimension()).map(|k| k as f64).product();
                out.insert(
                    "monte_carlo".into(),
                    json!({
                        "covolume": est.value,
                        "standard_error": est.standard_error,
                        "tau_estimate": est.value * fact,
                        "samples": est.samples,
                        "seed": est.seed,
                    }),
                );
            }
            Value::Object(out)
        }
        Command::DirLelong { file, a } => {
            let u = read_psh(&file)?;
            let a = a.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
            json!({ "nu": r(&u.directional_lelong(&a)?) })
        }
        Command::Gamma { file } => {
            let phi = read_weight(&file)?;
            let measure = phi.lelong_measure();
            let atoms: Vec<Value> = measure
                .atoms()
                .iter()
                .map(|at| json!({ "t": rvec(&at.vertex), "mass": r(&at.mass) }))
                .collect();
            json!({ "atoms": atoms, "total": r(measure.total_mass()) })
        }
        Command::Lelong { u_file, phi_file, normalized } => {
            let u = read_psh(&u_file)?;
            let phi = read_weight(&phi_file)?;
            same_dimension(u.dimension(), phi.dimension())?;
            if normalized {
                json!({ "nu_tilde": r(&normalized_lelong(&u, &phi)?) })
            } else {
                json!({ "nu": r(&generalized_lelong(&u, &phi)?) })
            }
        }
        Command::Type { u_file, phi_file } => {
            let u = read_psh(&u_file)?;
            let phi = read_weight(&phi_file)?;
            same_dimension(u.dimension(), phi.dimension())?;
            json!({ "sigma": r(&relative_type(&u, &phi)?) })
        }
        Command::Extremal { file } => {
            let phi = read_weight(&file)?;
            json!({ "a": rvec(phi.extremal_direction().a()), "flat": phi.is_flat() })
        }
        Command::Flat { file } => {
            let phi = read_weight(&file)?;
            match phi.flatness_witness() {
                None => json!({ "flat": true }),
                Some(w) => json!({ "flat": false, "witness": rvec(w.coords()) }),
            }
        }
        Command::Mixed { j_file, i_file, oracle } => {
            let j = read_ideal(&j_file)?;
            let i = read_primary(&i_file)?;
            same_dimension(j.dimension(), i.dimension())?;
            let mut out = Map::new();
            out.insert("e".into(), r(&mixed_multiplicity(&j, &i)?));
            if let Some(MixedOracle::Polarization) = oracle {
                let jp = PrimaryMonomialIdeal::new(j)?;
                out.insert("oracle".into(), r(&mixed_multiplicity_polarization(&jp, &i)?));
            }
            Value::Object(out)
        }
        Command::Contain { j_file, i_file, p } => {
            if p < 1 {
                return Err(CliError::Input("p must be a positive integer".into()));
            }
            let j = read_ideal(&j_file)?;
            let i = read_primary(&i_file)?;
            same_dimension(j.dimension(), i.dimension())?;
            report_json(&closure_containment_check(&j, &i, p as u64)?)
        }
        Command::Loj { file } => {
            let phi = read_weight(&file)?;
            json!({ "L": r(&phi.lojasiewicz_exponent()) })
        }
        Command::Plot { file, out } => {
            let phi = read_weight(&file)?;
            if phi.dimension() != 2 {
                return Err(CliError::Input("plot supports dimension 2 only".into()));
            }
            std::fs::write(&out, render_svg(&phi))
                .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
            json!({ "svg": out.display().to_string() })
        }
    };
    Ok(value)
}

/// JSON layout with `", "` between items and `": "` after keys, on one line.
struct SpacedFormatter;

impl serde_json::ser::Formatter for SpacedFormatter {
    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            writer.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        if first {
            Ok(())
        } else {
            writer.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        writer.write_all(b": ")
    }
}

/// Canonical single-line rendering (keys sorted).
pub fn to_canonical_json(value: &Value) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SpacedFormatter);
    serde::Serialize::serialize(value, &mut ser).expect("in-memory serialization");
    String::from_utf8(buf).expect("json is utf-8")
}

fn render_svg(phi: &MonomialWeight) -> String {
    let poly = phi.polyhedron();
    let top = to_f64(&phi.lojasiewicz_exponent()) + 1.0;
    let y = |v: f64| top - v;
    let stroke = top / 150.0;
    let font = top / 28.0;
    let fmt = |v: f64| format!("{v:.4}");

    let verts: Vec<(f64, f64)> = poly.vertices().iter().map(|v| (to_f64(&v[0]), to_f64(&v[1]))).collect();
    let mut region = vec![format!("{},{}", fmt(0.0), fmt(y(top)))];
    region.extend(verts.iter().map(|(a, b)| format!("{},{}", fmt(*a), fmt(y(*b)))));
    region.push(format!("{},{}", fmt(top), fmt(y(0.0))));
    region.push(format!("{},{}", fmt(top), fmt(y(top))));

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {t} {t}\" width=\"480\" height=\"480\">\n",
        t = fmt(top)
    ));
    svg.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#dce8f5\" stroke=\"none\"/>\n",
        region.join(" ")
    ));
    svg.push_str(&format!(
        "  <path d=\"M0,{b} H{t} M0,{b} V0\" stroke=\"#444\" stroke-width=\"{s}\" fill=\"none\"/>\n",
        b = fmt(y(0.0)),
        t = fmt(top),
        s = fmt(stroke)
    ));
    for (facet, atom) in poly.compact_facets().iter().zip(phi.lelong_measure().atoms()) {
        let pts: Vec<(f64, f64)> = facet.vertices.iter().map(|&i| verts[i]).collect();
        let (a, b) = (pts[0], pts[pts.len() - 1]);
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#1f5fa8\" stroke-width=\"{}\"/>\n",
            fmt(a.0),
            fmt(y(a.1)),
            fmt(b.0),
            fmt(y(b.1)),
            fmt(2.0 * stroke)
        ));
        let (mx, my) = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let t: Vec<String> = atom.vertex.iter().map(format_rational).collect();
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" fill=\"#a8321f\">γ={} at ({})</text>\n",
            fmt(mx + stroke * 3.0),
            fmt(y(my) - stroke * 3.0),
            fmt(font),
            format_rational(&atom.mass),
            t.join(", ")
        ));
    }
    for (a, b) in &verts {
        svg.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#1f5fa8\"/>\n",
            fmt(*a),
            fmt(y(*b)),
            fmt(stroke * 2.5)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Runs the CLI with explicit output streams and returns the exit code.
pub fn run_with_io<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(value) => {
            let _ = writeln!(out, "{}", to_canonical_json(&value));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}
