//! The `tropint` command-line tool: reads system documents, runs the
//! library and writes JSON or SVG.
//!
//! Exit codes: 0 success, 1 usage, 2 invalid input, 3 the computation
//! refused (not isolated, no generic translation, insufficient tail
//! certificate, infinitely many zeros and similar).

pub mod schema;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::convex::{Fan, Polyhedron};
use crate::error::Error;
use crate::extended::{trop_point, ExtendedPoint};
use crate::intersect::{
    component_closure, components, point_multiplicity, stable_multiplicity, MultiplicityReport, TranslatedPoint,
};
use crate::oracle::{known_root_instance, linear_solve_trop, np1d, resultant_count2};
use crate::rational::Rat;
use crate::tropical::TropicalPolynomial;

use schema::{
    cell_doc, cone_doc, opt_str, parse_field, rat_str, vec_str, ComplexDocument, ExtendedPointDoc, Literal,
    SystemDocument,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) | Error::DimensionMismatch { .. } => 2,
            _ => 3,
        };
        let message = match &e {
            Error::GenericityFailure { log, .. } => format!("{e}\n{}", log.join("\n")),
            _ => e.to_string(),
        };
        CliError { code, message }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tropint", version, about = "Exact tropical hypersurfaces, intersections and multiplicities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Io {
    /// Input document (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Write here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Seeds {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of independent seeds that must agree.
    #[arg(long, default_value_t = 5)]
    pub checks: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cells and dual cells of one tropical hypersurface.
    Hypersurface {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        poly: usize,
    },
    /// Connected components of the intersection of all hypersurfaces.
    Components {
        #[command(flatten)]
        io: Io,
    },
    /// Multiplicity at a point, or of every component when no point is given.
    Intersect {
        #[command(flatten)]
        io: Io,
        /// Comma-separated coordinates; `inf` marks a boundary coordinate.
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        seeds: Seeds,
        #[arg(long)]
        fan: Option<usize>,
    },
    /// Stable intersection multiplicity along one component.
    Stable {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        component: usize,
        #[command(flatten)]
        seeds: Seeds,
    },
    /// Closure of one component in the toric variety of a fan.
    Closure {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        component: usize,
        /// Index of a fan in the document; defaults to the common
        /// refinement of the Newton fans.
        #[arg(long)]
        fan: Option<usize>,
    },
    /// Root valuations of a univariate polynomial from its Newton polygon.
    Np1d {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        poly: usize,
    },
    /// Winning terms, Laurent restriction and norms of a truncated series.
    Series {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 0)]
        series: usize,
    },
    /// Independent checks by explicit algebra.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Draw a two-dimensional complex document as SVG.
    Render {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value = "2")]
        svg_ray_length: String,
        /// Leave two-dimensional cells unfilled.
        #[arg(long)]
        no_fill: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// A polynomial with prescribed root valuations and its Newton polygon.
    Np1dRoots {
        /// Comma-separated rational valuations (may be empty).
        #[arg(long, allow_hyphen_values = true)]
        valuations: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Number of common zeros of two literal polynomials with given valuations.
    Resultant2 {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        point: String,
    },
    /// Tropicalized solution of two affine-linear literal equations.
    Linear2 {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        fan: Option<usize>,
    },
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

fn emit_text(text: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::invalid(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::invalid(format!("standard output: {e}"))),
    }
}

fn emit(v: &Value, output: &Option<PathBuf>, out: &mut dyn Write) -> Result<(), CliError> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    emit_text(&s, output, out)
}

fn threads() -> usize {
    std::env::var("TROPINT_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|n| *n > 0)
        .unwrap_or(1)
}

fn parse_point(s: &str) -> Result<Vec<Option<Rat>>, CliError> {
    s.split(',')
        .enumerate()
        .map(|(i, x)| match x.trim() {
            "inf" => Ok(None),
            t => parse_field(t, &format!("--point[{i}]")).map(Some),
        })
        .collect()
}

fn newton_refinement(polys: &[TropicalPolynomial]) -> Fan {
    let mut fan = polys[0].newton_fan();
    for f in &polys[1..] {
        fan = fan.intersect(&f.newton_fan());
    }
    fan
}

fn square(doc: &SystemDocument) -> Result<Vec<TropicalPolynomial>, CliError> {
    let polys = doc.tropicals()?;
    if polys.len() != doc.dim || polys.is_empty() {
        return Err(CliError::invalid(format!(
            "a square system needs {} polynomials, the document has {}",
            doc.dim,
            polys.len()
        )));
    }
    Ok(polys)
}

fn dual_docs(cells: &[Polyhedron]) -> Value {
    json!(cells
        .iter()
        .map(|d| d.points().iter().map(|p| vec_str(p)).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn translated_point_doc(p: &TranslatedPoint) -> Value {
    json!({
        "point": vec_str(&p.point),
        "dual_cells": dual_docs(&p.dual_cells),
        "multiplicity": p.multiplicity,
    })
}

pub fn report_doc(r: &MultiplicityReport) -> Value {
    let mut v = json!({
        "multiplicity": r.multiplicity,
    });
    match &r.locus {
        crate::intersect::Locus::Point(x) => {
            v["point"] = json!(ExtendedPointDoc::from_point(x));
            v["dual_cells"] = dual_docs(&r.dual_cells);
        }
        crate::intersect::Locus::Component(i) => {
            v["component"] = json!(i);
        }
    }
    if let Some(c) = &r.certificate {
        v["certificate"] = json!({
            "thickening": {
                "epsilon": rat_str(&c.thickening.epsilon),
                "relaxed_cells": c.thickening.relaxed.iter().map(|p| cell_doc(p, None)).collect::<Vec<_>>(),
            },
            "translations": c.translations.iter().map(|t| json!({
                "seed": t.seed,
                "directions": t.directions,
                "t": rat_str(&t.t),
                "attempts": t.attempts,
                "points": t.points.iter().map(translated_point_doc).collect::<Vec<_>>(),
                "half_step_points": t.half_step_points.iter().map(translated_point_doc).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        v["seeds"] = json!(c.translations.iter().map(|t| t.seed).collect::<Vec<_>>());
    }
    v
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Hypersurface { io, poly } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let h = doc.tropical(poly)?.hypersurface();
            emit(&json!(ComplexDocument::from_hypersurface(&h)), &io.output, out)
        }
        Command::Components { io } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let comps = components(&doc.tropicals()?)?;
            let list: Vec<Value> = comps
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    json!({
                        "index": i,
                        "dim": c.dim(),
                        "bounded": c.bounded,
                        "cells": c.cells.iter().map(|p| cell_doc(p, None)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            emit(&json!({ "dim": doc.dim, "components": list }), &io.output, out)
        }
        Command::Intersect { io, point, seeds, fan } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let polys = square(&doc)?;
            if let Some(p) = point {
                let coords = parse_point(&p)?;
                if coords.len() != doc.dim {
                    return Err(CliError::invalid(format!(
                        "--point: expected {} coordinates, got {}",
                        doc.dim,
                        coords.len()
                    )));
                }
                let x = if coords.iter().all(Option::is_some) {
                    ExtendedPoint::finite(coords.into_iter().map(Option::unwrap).collect())
                } else {
                    let fan = match fan {
                        Some(i) => doc.fan(i)?,
                        None => newton_refinement(&polys),
                    };
                    trop_point(&coords, &fan)?
                };
                let r = point_multiplicity(&polys, &x)?;
                return emit(&report_doc(&r), &io.output, out);
            }
            let comps = components(&polys)?;
            let mut list = Vec::new();
            let mut total = 0u64;
            for (i, c) in comps.iter().enumerate() {
                let entry = if let Some(v) = c.as_point() {
                    let r = point_multiplicity(&polys, &ExtendedPoint::finite(v.clone()))?;
                    total += r.multiplicity;
                    json!({
                        "index": i,
                        "kind": "point",
                        "point": vec_str(v),
                        "dual_cells": dual_docs(&r.dual_cells),
                        "multiplicity": r.multiplicity,
                    })
                } else {
                    let r = stable_multiplicity(i, &polys, seeds.seed, seeds.checks, threads())?;
                    total += r.multiplicity;
                    json!({
                        "index": i,
                        "kind": "component",
                        "dim": c.dim(),
                        "bounded": c.bounded,
                        "vertices": c.cells.iter().filter(|p| p.dim() == 0).map(|p| vec_str(&p.points()[0])).collect::<Vec<_>>(),
                        "multiplicity": r.multiplicity,
                        "seeds": r.certificate.as_ref().map(|c| c.translations.iter().map(|t| t.seed).collect::<Vec<_>>()),
                    })
                };
                list.push(entry);
            }
            emit(&json!({ "components": list, "total": total }), &io.output, out)
        }
        Command::Stable { io, component, seeds } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let polys = square(&doc)?;
            let r = stable_multiplicity(component, &polys, seeds.seed, seeds.checks, threads())?;
            emit(&report_doc(&r), &io.output, out)
        }
        Command::Closure { io, component, fan } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let polys = doc.tropicals()?;
            if polys.is_empty() {
                return Err(CliError::invalid("the document has no polynomials"));
            }
            let fan = match fan {
                Some(i) => doc.fan(i)?,
                None => newton_refinement(&polys),
            };
            let comps = components(&polys)?;
            let c = comps
                .get(component)
                .ok_or_else(|| CliError::invalid(format!("--component {component}: there are {} components", comps.len())))?;
            let cl = component_closure(c, &fan)?;
            let boundary: Vec<Value> = cl
                .boundary
                .iter()
                .map(|(tau, cells)| {
                    json!({
                        "stratum": cone_doc(tau),
                        "cells": cells.iter().map(|p| cell_doc(p, None)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let points: Vec<ExtendedPointDoc> = cl.boundary_points().iter().map(ExtendedPointDoc::from_point).collect();
            emit(
                &json!({
                    "component": component,
                    "finite_cells": cl.finite.iter().map(|p| cell_doc(p, None)).collect::<Vec<_>>(),
                    "boundary": boundary,
                    "boundary_points": points,
                }),
                &io.output,
                out,
            )
        }
        Command::Np1d { io, poly } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let edges = np1d(&doc.tropical(poly)?)?;
            emit(&np1d_doc(&edges), &io.output, out)
        }
        Command::Series { io, series } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            let s = doc.series(series)?;
            let vertices = s.vertices_on_domain()?;
            let laurent = s.restrict_to_laurent()?;
            emit(
                &json!({
                    "vertices": vertices.iter().map(|(e, w)| json!({ "exp": e, "val": rat_str(w) })).collect::<Vec<_>>(),
                    "laurent": laurent.terms().iter().map(|(e, w)| json!({ "exp": e, "val": rat_str(w) })).collect::<Vec<_>>(),
                    "min_weight": rat_str(&s.min_weight()?),
                    "stability_radius": rat_str(&s.stability_radius()?),
                }),
                &io.output,
                out,
            )
        }
        Command::Oracle { command } => oracle(command, out),
        Command::Render { io, svg_ray_length, no_fill } => {
            let cx = ComplexDocument::parse(&read(&io.input)?)?;
            if cx.dim != 2 {
                return Err(CliError::invalid(format!("render needs a planar complex, got dimension {}", cx.dim)));
            }
            let len = parse_field(&svg_ray_length, "--svg-ray-length")?;
            if len <= Rat::from_integer(0.into()) {
                return Err(CliError::invalid("--svg-ray-length must be positive"));
            }
            let opts = svg::SvgOptions {
                ray_length: len,
                fill_regions: !no_fill,
            };
            emit_text(&svg::render(&cx.polyhedra()?, &opts), &io.output, out)
        }
    }
}

fn np1d_doc(edges: &[(Rat, u64)]) -> Value {
    json!(edges
        .iter()
        .map(|(v, l)| json!({ "valuation": rat_str(v), "length": l }))
        .collect::<Vec<_>>())
}

fn oracle(cmd: OracleCommand, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        OracleCommand::Np1dRoots {
            valuations,
            prime,
            output,
        } => {
            let vals: Vec<Rat> = valuations
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .enumerate()
                .map(|(i, s)| parse_field(s, &format!("--valuations[{i}]")))
                .collect::<Result<_, _>>()?;
            let inst = known_root_instance(&vals, prime)?;
            let computed = np1d(&inst.poly.to_tropical()?)?;
            emit(
                &json!({
                    "prime": prime,
                    "substitution": inst.substitution,
                    "terms": inst.poly.terms().iter().map(|(e, c)| json!({ "exp": e, "coeff": rat_str(&c.value) })).collect::<Vec<_>>(),
                    "expected": np1d_doc(&inst.expected),
                    "np1d": np1d_doc(&computed),
                    "agree": computed == inst.expected,
                }),
                &output,
                out,
            )
        }
        OracleCommand::Resultant2 { io, point } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            if doc.dim != 2 || doc.polynomials.len() != 2 {
                return Err(CliError::invalid("resultant2 needs two polynomials in two variables"));
            }
            let v: Vec<Rat> = parse_point(&point)?
                .into_iter()
                .map(|x| x.ok_or_else(|| CliError::invalid("--point: boundary points are not supported here")))
                .collect::<Result<_, _>>()?;
            let count = match doc.literals()? {
                Literal::PAdic(p) => resultant_count2(&p[0], &p[1], &v)?,
                Literal::Parameter(p) => resultant_count2(&p[0], &p[1], &v)?,
            };
            emit(&json!({ "point": vec_str(&v), "count": count }), &io.output, out)
        }
        OracleCommand::Linear2 { io, fan } => {
            let doc = SystemDocument::parse(&read(&io.input)?)?;
            if doc.dim != 2 || doc.polynomials.len() != 2 {
                return Err(CliError::invalid("linear2 needs two polynomials in two variables"));
            }
            let fan = match fan {
                Some(i) => doc.fan(i)?,
                None => newton_refinement(&doc.tropicals()?),
            };
            let (x, n) = match doc.literals()? {
                Literal::PAdic(p) => linear_solve_trop(&p[0], &p[1], &fan)?,
                Literal::Parameter(p) => linear_solve_trop(&p[0], &p[1], &fan)?,
            };
            // coordinate valuations, when the stratum is a coordinate cone
            let gens = x.stratum.generators();
            let rep = x.representative();
            let axis = |g: &Vec<Rat>| g.iter().filter(|c| **c != Rat::from_integer(0.into())).count() == 1 && g.iter().all(|c| *c >= Rat::from_integer(0.into()));
            let coords: Vec<Option<Rat>> = if gens.iter().all(axis) {
                (0..2)
                    .map(|i| (!gens.iter().any(|g| g[i] != Rat::from_integer(0.into()))).then(|| rep[i].clone()))
                    .collect()
            } else {
                Vec::new()
            };
            emit(
                &json!({
                    "point": ExtendedPointDoc::from_point(&x),
                    "coordinates": coords.iter().map(opt_str).collect::<Vec<_>>(),
                    "count": n,
                }),
                &io.output,
                out,
            )
        }
    }
}
