//! Command implementations behind the `jacobi-cells` binary. Each command
//! produces its complete output as a string plus an exit status, which
//! keeps the binary thin and the commands testable in-process.

pub mod args;
pub mod enumerate;
pub mod verify;

use jacobi_cells::qtpoly::{area_generating, hilbert_cell_poly, poincare, qt_catalan};
use jacobi_cells::{
    certify, check_dual_map_bijective, Error, LaurentBivariate, Semigroup, YoungDiagram,
};
use serde::Serialize;

use args::{Command, Format, PolyFormat};

pub const SCHEMA: &str = "jacobi-cells/1";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command printed and how it wants the process to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn pass(output: String) -> Self {
        Outcome {
            output,
            status: EXIT_PASS,
        }
    }

    fn verdict(output: String, passed: bool) -> Self {
        Outcome {
            output,
            status: if passed { EXIT_PASS } else { EXIT_FAIL },
        }
    }
}

/// A rejected argument; reported with usage text and exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

pub fn parse_columns(text: &str) -> Result<YoungDiagram, UsageError> {
    let text = text.trim().trim_start_matches('(').trim_end_matches(')');
    if text.is_empty() || text == "-" {
        return Ok(YoungDiagram::empty());
    }
    let columns = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| UsageError(format!("bad column list {text:?}: {e}")))?;
    Ok(YoungDiagram::new(columns)?)
}

fn poly_json(command: &str, fields: serde_json::Value, poly: &LaurentBivariate) -> String {
    let mut doc = serde_json::json!({ "schema": SCHEMA, "command": command });
    let obj = doc.as_object_mut().expect("object literal");
    if let serde_json::Value::Object(extra) = fields {
        obj.extend(extra);
    }
    obj.insert(
        "polynomial".into(),
        serde_json::to_value(poly).expect("polynomial serializes"),
    );
    obj.insert("text".into(), poly.to_string().into());
    serde_json::to_string(&doc).expect("json value") + "\n"
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes") + "\n"
}

/// Runs one command. `argv` is echoed into reports.
pub fn run(command: &Command, argv: Vec<String>) -> Result<Outcome, UsageError> {
    match *command {
        Command::Enumerate { p, q, format } => {
            let semigroup = Semigroup::new(p, q)?;
            let rows = enumerate::records(&semigroup);
            Ok(Outcome::pass(match format {
                Format::Table => enumerate::table(&rows),
                Format::Json => enumerate::json(p, q, &rows),
                Format::Csv => enumerate::csv(&rows),
            }))
        }
        Command::Poincare { p, q, format } => {
            let poly = poincare(p, q)?;
            let area = area_generating(p, q)?;
            let matched = poly == area;
            let output = match format {
                PolyFormat::Text if matched => format!("{poly} | MATCH\n"),
                PolyFormat::Text => format!("{poly} | MISMATCH | {area}\n"),
                PolyFormat::Json => {
                    let extra = serde_json::json!({
                        "p": p, "q": q, "area_generating": area, "match": matched,
                    });
                    poly_json("poincare", extra, &poly)
                }
            };
            Ok(Outcome::verdict(output, matched))
        }
        Command::Catalan { n, format } => {
            let poly = qt_catalan(n)?;
            Ok(Outcome::pass(match format {
                PolyFormat::Text => format!("{poly}\n"),
                PolyFormat::Json => poly_json("catalan", serde_json::json!({ "n": n }), &poly),
            }))
        }
        Command::Hilbert { p, q, h, format } => {
            let poly = hilbert_cell_poly(p, q, h)?;
            Ok(Outcome::pass(match format {
                PolyFormat::Text => format!("{poly}\n"),
                PolyFormat::Json => poly_json(
                    "hilbert",
                    serde_json::json!({ "p": p, "q": q, "h": h }),
                    &poly,
                ),
            }))
        }
        Command::Verify {
            scope,
            bound,
            format,
        } => {
            if let Some(b) = bound {
                if b < 1 {
                    return Err(UsageError(format!("bound must be positive, got {b}")));
                }
            }
            let report = verify::run(scope, bound, argv);
            let output = match format {
                PolyFormat::Text => report.render_text(),
                PolyFormat::Json => to_json(&report),
            };
            Ok(Outcome::verdict(output, report.passed))
        }
        Command::Certify { p, q, ref columns } => {
            Semigroup::new(p, q)?;
            let d = parse_columns(columns)?;
            match certify(&d, p, q) {
                Ok(cert) => {
                    #[derive(Serialize)]
                    struct Doc<'a, T> {
                        schema: &'static str,
                        command: &'static str,
                        #[serde(flatten)]
                        certificate: &'a T,
                    }
                    Ok(Outcome::pass(to_json(&Doc {
                        schema: SCHEMA,
                        command: "certify",
                        certificate: &cert,
                    })))
                }
                Err(e @ Error::Certificate { .. }) => Ok(Outcome::verdict(
                    format!("certificate check failed: {e}\n"),
                    false,
                )),
                Err(e) => Err(e.into()),
            }
        }
        Command::Gmap { p, q } => {
            let perm = check_dual_map_bijective(p, q)?;
            #[derive(Serialize)]
            struct Doc<'a, T> {
                schema: &'static str,
                command: &'static str,
                bijective: bool,
                #[serde(flatten)]
                permutation: &'a T,
            }
            let bijective = perm.is_permutation();
            let doc = Doc {
                schema: SCHEMA,
                command: "gmap",
                bijective,
                permutation: &perm,
            };
            Ok(Outcome::verdict(to_json(&doc), bijective))
        }
    }
}
