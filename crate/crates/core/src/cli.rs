//! The `hksym` command line. [`run`] takes explicit streams so it can be
//! driven from tests.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{ac_builtin, build_named, CatalogObject, CatalogParams, PythagoreanAngle};
use crate::error::{Error, Result};
use crate::exactalg::matrix::Matrix;
use crate::exactalg::scalar::parse_rational;
use crate::exactalg::Scalar;
use crate::io::{extension_to_json, parse_document, quartic_to_json, triple_to_json, Document};
use crate::liealg::HyperKahlerTriple;
use crate::quadext::{build_extension, extract_canonical};
use crate::report::{admissibility_report, extension_report, full_report, quartic_report, triple_report, Report};
use crate::verdict::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "hksym", version, about = "Exact checks for hyper-Kähler symmetric triples and quadratic extensions")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify a triple, or build and verify extension data (`-` reads stdin).
    Verify {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Build the triple `l* ⊕ a ⊕ l` from extension data.
    Build {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check admissibility of extension data.
    Admissible {
        #[arg(default_value = "-")]
        file: String,
    },
    /// Extract canonical extension data from a triple.
    Extract {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterate the tangent construction.
    Tangent {
        #[arg(default_value = "-")]
        file: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a named catalog object as an interchange document.
    Catalog {
        name: String,
        /// Number of `a_A` summands for example2.
        #[arg(long)]
        n: Option<usize>,
        /// A 3×3 matrix for example2, rows separated by `;`, e.g. `1,0,0;0,1,0;0,0,-2`. Repeatable.
        #[arg(long = "matrix")]
        matrices: Vec<String>,
        /// Pythagorean pair `s,c` for a-r and a-s, e.g. `3/5,4/5`.
        #[arg(long)]
        angle: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check `S ∈ (S⁴E)^{h_S}` and tameness for a quartic.
    Accheck {
        #[arg(long, conflicts_with = "file")]
        builtin: bool,
        file: Option<String>,
    },
    /// Run every applicable check on a document.
    Report {
        #[arg(default_value = "-")]
        file: String,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

enum Failure {
    Malformed(String),
    Check(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Malformed(e.to_string())
    }
}

fn malformed(e: Error) -> Failure {
    Failure::Malformed(e.to_string())
}

/// Runs the command line and returns the exit code: 0 when every check
/// passes, 1 when a mathematical check fails, 2 on malformed input.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, out, err, format: cli.format };
    match dispatch(cli.command, &mut io) {
        Ok(passed) => {
            if passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(Failure::Malformed(m)) => {
            let _ = writeln!(io.err, "error: {m}");
            EXIT_MALFORMED
        }
        Err(Failure::Check(m)) => {
            let _ = writeln!(io.err, "check failed: {m}");
            EXIT_CHECK_FAILED
        }
    }
}

fn read_source(file: &str, io: &mut Io) -> std::result::Result<String, Failure> {
    if file == "-" {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::Malformed(format!("{file}: {e}")))
    }
}

fn load(file: &str, io: &mut Io) -> std::result::Result<Document, Failure> {
    let text = read_source(file, io)?;
    parse_document(&text).map_err(|e| match file {
        "-" => malformed(e),
        f => Failure::Malformed(format!("{f}: {e}")),
    })
}

fn emit(report: &Report, w: &mut dyn Write, format: Format) -> std::io::Result<()> {
    match format {
        Format::Text => write!(w, "{}", report.to_text()),
        Format::Json => writeln!(w, "{}", report.to_json()),
    }
}

/// Writes `doc` to `out_path` and the report to stdout, or, without a path,
/// the document to stdout and the report to stderr.
fn emit_with_document(report: &Report, doc: Option<String>, out_path: Option<PathBuf>, io: &mut Io) -> std::result::Result<(), Failure> {
    match (doc, out_path) {
        (Some(d), Some(p)) => {
            std::fs::write(&p, d + "\n").map_err(|e| Failure::Malformed(format!("{}: {e}", p.display())))?;
            emit(report, io.out, io.format)?;
        }
        (Some(d), None) => {
            writeln!(io.out, "{d}")?;
            emit(report, io.err, io.format)?;
        }
        (None, _) => emit(report, io.out, io.format)?,
    }
    Ok(())
}

fn want_triple(doc: Document) -> std::result::Result<HyperKahlerTriple, Failure> {
    match doc {
        Document::Triple(t) => Ok(t),
        Document::Extension(x) => build_extension(&x).map_err(|e| Failure::Check(e.to_string())),
        Document::Quartic(_) => Err(Failure::Malformed("expected a triple or extension document, got a quartic".into())),
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> std::result::Result<bool, Failure> {
    match cmd {
        Command::Verify { file } => {
            let report = match load(&file, io)? {
                Document::Triple(t) => triple_report(&t),
                Document::Extension(x) => extension_report(&x).0,
                Document::Quartic(_) => {
                    return Err(Failure::Malformed("verify expects a triple or extension document; use accheck for quartics".into()))
                }
            };
            emit(&report, io.out, io.format)?;
            Ok(report.passed())
        }
        Command::Build { file, out } => {
            let x = match load(&file, io)? {
                Document::Extension(x) => x,
                d => return Err(Failure::Malformed(format!("build expects extension data, got a {}", d.kind()))),
            };
            let (report, t) = extension_report(&x);
            let doc = t.filter(|_| report.passed()).map(|t| triple_to_json(&t));
            emit_with_document(&report, doc, out, io)?;
            Ok(report.passed())
        }
        Command::Admissible { file } => {
            let x = match load(&file, io)? {
                Document::Extension(x) => x,
                d => return Err(Failure::Malformed(format!("admissible expects extension data, got a {}", d.kind()))),
            };
            let mut report = Report::new("admissibility");
            if let Err(e) = x.validate() {
                report.check("input", Verdict::fail(e.to_string()));
            } else {
                report = admissibility_report(&x);
            }
            emit(&report, io.out, io.format)?;
            Ok(report.passed())
        }
        Command::Extract { file, out } => {
            let t = want_triple(load(&file, io)?)?;
            let mut report = triple_report(&t);
            let mut doc = None;
            if report.passed() {
                match extract_canonical(&t) {
                    Ok(x) => {
                        report.check("extraction", Verdict::Pass);
                        report.absorb(admissibility_report(&x), "extracted");
                        doc = Some(extension_to_json(&x));
                    }
                    Err(e) => report.check("extraction", Verdict::fail(e.to_string())),
                }
            }
            emit_with_document(&report, doc, out, io)?;
            Ok(report.passed())
        }
        Command::Tangent { file, n, out } => {
            let mut t = want_triple(load(&file, io)?)?;
            let mut report = Report::new(format!("tangent iteration, {n} step(s)"));
            report.absorb(triple_report(&t), "T^0");
            for k in 1..=n {
                if !report.passed() {
                    break;
                }
                t = t.tangent().map_err(|e| Failure::Check(e.to_string()))?;
                report.absorb(triple_report(&t), &format!("T^{k}"));
            }
            let doc = report.passed().then(|| triple_to_json(&t));
            emit_with_document(&report, doc, out, io)?;
            Ok(report.passed())
        }
        Command::Catalog { name, n, matrices, angle, out } => {
            let params = CatalogParams {
                n,
                matrices: matrices.iter().map(|m| parse_matrix(m)).collect::<Result<_>>().map_err(malformed)?,
                angle: angle.as_deref().map(parse_angle).transpose().map_err(malformed)?,
            };
            let obj = build_named(&name, &params).map_err(malformed)?;
            let text = match &obj {
                CatalogObject::Extension(x) => extension_to_json(x),
                CatalogObject::Quartic(s) => quartic_to_json(s),
            };
            match out {
                Some(p) => std::fs::write(&p, text + "\n").map_err(|e| Failure::Malformed(format!("{}: {e}", p.display())))?,
                None => writeln!(io.out, "{text}")?,
            }
            Ok(true)
        }
        Command::Accheck { builtin, file } => {
            let s = match (builtin, file) {
                (true, _) | (false, None) => ac_builtin(),
                (false, Some(f)) => match load(&f, io)? {
                    Document::Quartic(s) => s,
                    d => return Err(Failure::Malformed(format!("accheck expects a quartic, got a {}", d.kind()))),
                },
            };
            let report = quartic_report(&s);
            emit(&report, io.out, io.format)?;
            Ok(report.passed())
        }
        Command::Report { file } => {
            let doc = load(&file, io)?;
            let report = full_report(&doc);
            emit(&report, io.out, io.format)?;
            Ok(report.passed())
        }
    }
}

/// `a,b,c;d,e,f;g,h,i` with rational entries.
pub fn parse_matrix(s: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Scalar>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| parse_rational(x).map(Scalar::from_rational)).collect())
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse(format!("ragged matrix {s:?}")));
    }
    Matrix::from_rows(cols, rows)
}

/// `s,c` with `s² + c² = 1`.
pub fn parse_angle(s: &str) -> Result<PythagoreanAngle> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("angle must be `s,c`, got {s:?}")))?;
    PythagoreanAngle::new(Scalar::from_rational(parse_rational(a)?), Scalar::from_rational(parse_rational(b)?))
}
