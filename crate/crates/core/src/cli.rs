//! The `orbiblow` command line.
//!
//! Exit status: 0 on success or a certified comparison, 2 when the problem
//! vanishes for degree reasons, 3 when it lies outside the proven range, 1
//! on malformed input or any other error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cyclic::{degree_shift, enumerate_sectors, SectorLabel, TwistedSector, Weight};
use crate::degeneration::{
    certificates_in_all_charts, certify_comparison, degeneration_coefficient, vanishing_certificate,
    Bounds, Certificate, CertifyOptions, Problem, Report, Verdict,
};
use crate::error::Error;
use crate::exact::Rational;
use crate::moduli::{
    contact_admissible, degree_condition, validate_markings, vdim_absolute, vdim_relative,
    vdim_relative_bracket, Insertion, RelativeMarking,
};
use crate::wps::{chern_line, CurveClassData, LineOrbibundle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 1;
pub const EXIT_VANISHES: i32 = 2;
pub const EXIT_OUT_OF_RANGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "orbiblow", version, about = "Dimension counting for weighted blow-ups of symplectic orbifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the twisted sectors of WP(w).
    Sectors {
        #[arg(long)]
        weights: Weight,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Degree shifting number of e^{2 pi i f} acting with weights w.
    Shift {
        #[arg(long)]
        weights: Weight,
        #[arg(long, allow_hyphen_values = true)]
        f: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// First Chern class of the line orbibundle O_w(chi).
    Chern {
        #[arg(long)]
        weights: Weight,
        #[arg(long, allow_hyphen_values = true)]
        chi: Rational,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Virtual dimension of an absolute moduli space (problem file).
    VdimAbs(FileArgs),
    /// Virtual dimension of a relative moduli space.
    VdimRel(FileArgs),
    /// Contact congruence for a list of relative markings.
    Admissible(FileArgs),
    /// Gluing coefficient |Aut| * prod(l).
    Coeff(FileArgs),
    /// Positivity certificate for a single contact point on WP(w).
    Certify(FileArgs),
    /// Full comparison for a problem file.
    Compare {
        #[command(flatten)]
        file: FileArgs,
        /// Evaluate outside the proven range without issuing a verdict.
        #[arg(long)]
        unsafe_explore: bool,
    },
}

#[derive(Debug, clap::Args)]
struct FileArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Input of `vdim-abs` and `compare`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub n: usize,
    pub weights: Weight,
    pub genus: u32,
    pub curve_class: CurveClassData,
    #[serde(default)]
    pub insertions: Vec<Insertion>,
    #[serde(default)]
    pub bounds: Bounds,
}

impl ProblemFile {
    pub fn to_problem(&self) -> Result<Problem, Error> {
        if self.weights.len() != self.n {
            return Err(Error::InvalidProblem(format!(
                "weights: expected {} entries, found {}",
                self.n,
                self.weights.len()
            )));
        }
        if self.bounds.k < 1 || self.bounds.q < 1 {
            return Err(Error::InvalidProblem("bounds: k and q must be at least 1".into()));
        }
        let c1a = self
            .curve_class
            .c1
            .clone()
            .ok_or_else(|| Error::InvalidProblem("curve_class.c1: required for the ambient orbifold".into()))?;
        Ok(Problem {
            weights: self.weights.clone(),
            genus: self.genus,
            c1a,
            insertions: self.insertions.clone(),
        })
    }
}

/// Input of `vdim-rel`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelativeFile {
    n: usize,
    genus: u32,
    curve_class: CurveClassData,
    #[serde(default)]
    insertions: Vec<Insertion>,
    #[serde(default)]
    markings: Vec<RelativeMarking>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MarkingsFile {
    markings: Vec<RelativeMarking>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    weights: Weight,
    sector: SectorLabel,
    ell: Rational,
    #[serde(default)]
    all_charts: bool,
}

/// Failure carrying its exit status.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OutsideProvenRange { .. } => EXIT_OUT_OF_RANGE,
            _ => EXIT_MALFORMED,
        };
        Failure { code, message: e.to_string() }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_MALFORMED, message: message.into() }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command) -> Result<(i32, String), Failure> {
    match command {
        Command::Sectors { weights, format } => Ok((EXIT_OK, sectors(&weights, format))),
        Command::Shift { weights, f, format } => {
            let shift = degree_shift(&weights, &f);
            Ok((EXIT_OK, scalar("shift", &shift, format)))
        }
        Command::Chern { weights, chi, format } => {
            let c1 = chern_line(&LineOrbibundle::new(weights, chi));
            Ok((EXIT_OK, scalar("c1", &c1, format)))
        }
        Command::VdimAbs(args) => {
            let file: ProblemFile = read_json(&args.input)?;
            let p = file.to_problem()?;
            let vdim = vdim_absolute(p.n(), p.genus, &p.c1a, &p.insertions);
            let balanced = degree_condition(p.n(), p.genus, &p.c1a, &p.insertions);
            let text = match args.format {
                Format::Json => json(&serde_json::json!({ "vdim": vdim, "degree_condition": balanced })),
                Format::Text => format!("vdim {vdim}\ndegree_condition {balanced}\n"),
            };
            Ok((EXIT_OK, text))
        }
        Command::VdimRel(args) => {
            let file: RelativeFile = read_json(&args.input)?;
            let c1a = file
                .curve_class
                .c1
                .clone()
                .ok_or_else(|| malformed("curve_class.c1: required"))?;
            let bracket = vdim_relative_bracket(file.n, file.genus, &c1a, &file.insertions, &file.markings);
            let free = vdim_relative(file.n, file.genus, &c1a, &file.insertions, &file.markings)?;
            let text = match args.format {
                Format::Json => json(&serde_json::json!({ "vdim": free, "vdim_bracket": bracket })),
                Format::Text => format!("vdim {free}\nvdim_bracket {bracket}\n"),
            };
            Ok((EXIT_OK, text))
        }
        Command::Admissible(args) => {
            let file: MarkingsFile = read_json(&args.input)?;
            validate_markings(&file.markings)?;
            let flags: Vec<bool> = file.markings.iter().map(contact_admissible).collect();
            let text = match args.format {
                Format::Json => json(&serde_json::json!({ "admissible": flags })),
                Format::Text => {
                    let mut s = String::new();
                    for (i, (m, ok)) in file.markings.iter().zip(&flags).enumerate() {
                        let _ = writeln!(s, "{i}  l={}  sector={}  {}", m.ell(), m.sector, if *ok { "admissible" } else { "violates congruence" });
                    }
                    s
                }
            };
            Ok((EXIT_OK, text))
        }
        Command::Coeff(args) => {
            let file: MarkingsFile = read_json(&args.input)?;
            let labels = file
                .labels
                .clone()
                .unwrap_or_else(|| vec![String::new(); file.markings.len()]);
            let c = degeneration_coefficient(&file.markings, &labels)?;
            Ok((EXIT_OK, scalar("coefficient", &c, args.format)))
        }
        Command::Certify(args) => {
            let file: CertificateFile = read_json(&args.input)?;
            let certs: Vec<Certificate> = if file.all_charts {
                certificates_in_all_charts(&file.weights, &file.sector, &file.ell)?
            } else {
                vec![vanishing_certificate(&file.weights, &file.sector, &file.ell)?]
            };
            let text = match args.format {
                Format::Json => json(&certs),
                Format::Text => {
                    let mut s = String::new();
                    for c in &certs {
                        let terms: Vec<String> = c.l.iter().map(u64::to_string).collect();
                        let _ = writeln!(
                            s,
                            "chart z_{} != 0  q={}  l=[{}]  value={}  reduced={}",
                            c.anchor,
                            c.q,
                            terms.join(","),
                            c.value,
                            c.reduced_value(&file.weights)
                        );
                    }
                    s
                }
            };
            Ok((EXIT_OK, text))
        }
        Command::Compare { file, unsafe_explore } => {
            let pf: ProblemFile = read_json(&file.input)?;
            let problem = pf.to_problem()?;
            let report = certify_comparison(&problem, pf.bounds, CertifyOptions { unsafe_explore })?;
            let code = match report.verdict {
                Verdict::VanishesTrivially => EXIT_VANISHES,
                Verdict::Certified | Verdict::Unverified => EXIT_OK,
            };
            let text = match file.format {
                Format::Json => {
                    let mut s = report.to_json();
                    s.push('\n');
                    s
                }
                Format::Text => report_text(&report),
            };
            Ok((code, text))
        }
    }
}

fn scalar(key: &str, value: &Rational, format: Format) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => json(&serde_json::json!({ key: value })),
    }
}

fn sectors(w: &Weight, format: Format) -> String {
    let list: Vec<TwistedSector> = enumerate_sectors(w);
    match format {
        Format::Json => json(&list),
        Format::Text => {
            let mut s = String::new();
            for sector in &list {
                let fixed: Vec<String> = sector.fixed_indices.iter().map(usize::to_string).collect();
                let _ = writeln!(
                    s,
                    "f={:<6} fixed=[{}]  shift={:<6} dim={}",
                    sector.label.to_string(),
                    fixed.join(","),
                    sector.shift.to_string(),
                    sector.complex_dim
                );
            }
            s
        }
    }
}

/// Human-readable view of a report.
pub fn report_text(report: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "hypothesis        {}", report.hypothesis);
    let _ = writeln!(s, "degree condition  {}", report.degree_condition);
    let _ = writeln!(s, "bounds            k <= {}, q <= {}", report.bounds.k, report.bounds.q);
    if let Some(sym) = &report.symbolic_certificate {
        let _ = writeln!(s, "symbolic          min {} = {}", sym.form, sym.min_value);
    }
    if !report.components.is_empty() {
        let _ = writeln!(s, "components        {}", report.components.len());
        let _ = writeln!(s, "{:>3}  {:<28} {:<14} {:>8} {:>6}  certificates", "k", "sectors", "q", "deficit", "splits");
        for c in &report.components {
            let sectors: Vec<String> = c.sectors.iter().map(ToString::to_string).collect();
            let qs: Vec<String> = c.q.iter().map(u64::to_string).collect();
            let certs: Vec<String> = c.certificates.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "{:>3}  {:<28} {:<14} {:>8} {:>6}  {}",
                c.k,
                sectors.join(","),
                qs.join(","),
                c.deficit.to_string(),
                c.splits,
                certs.join(",")
            );
        }
    }
    for note in &report.notes {
        let _ = writeln!(s, "note              {note}");
    }
    for c in &report.conclusions {
        let _ = writeln!(s, "=> {c}");
    }
    let _ = writeln!(s, "verdict           {}", report.verdict);
    s
}
