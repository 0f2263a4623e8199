//! JSON documents read and written by the command-line tool. Every rational
//! is a string `"a/b"` (or an integer string); infinity is `"inf"`.

use serde::{Deserialize, Serialize};

use crate::convex::{Cone, Fan, PolyhedralComplex, Polyhedron};
use crate::extended::ExtendedPoint;
use crate::oracle::{LiteralPolynomial, PAdic, RationalFunction, ValuedField};
use crate::rational::{fmt_rat, parse_rat, QVec, Rat};
use crate::series::TruncatedSeries;
use crate::tropical::{TropicalHypersurface, TropicalPolynomial};

use super::CliError;

pub type RatStr = String;

pub fn rat_str(x: &Rat) -> RatStr {
    fmt_rat(x)
}

pub fn vec_str(v: &[Rat]) -> Vec<RatStr> {
    v.iter().map(rat_str).collect()
}

pub fn opt_str(x: &Option<Rat>) -> RatStr {
    x.as_ref().map(rat_str).unwrap_or_else(|| "inf".into())
}

pub fn parse_field(s: &str, field: &str) -> Result<Rat, CliError> {
    parse_rat(s.trim()).ok_or_else(|| CliError::invalid(format!("{field}: {s:?} is not a rational number")))
}

pub fn parse_vec(v: &[RatStr], field: &str) -> Result<QVec, CliError> {
    v.iter()
        .enumerate()
        .map(|(i, s)| parse_field(s, &format!("{field}[{i}]")))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum ValuationDoc {
    #[serde(rename = "p-adic")]
    PAdic { prime: u64 },
    #[serde(rename = "parameter")]
    Parameter,
    #[serde(rename = "explicit")]
    Explicit,
}

impl Default for ValuationDoc {
    fn default() -> Self {
        ValuationDoc::Explicit
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub val: Option<RatStr>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceDoc {
    pub normal: Vec<RatStr>,
    pub rhs: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Default)]
#[serde(deny_unknown_fields)]
pub struct HRepDoc {
    #[serde(default)]
    pub eqs: Vec<HalfspaceDoc>,
    #[serde(default)]
    pub ineqs: Vec<HalfspaceDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    pub terms: Vec<TermDoc>,
    /// `⟨normal, v⟩ ≤ rhs` and `= rhs`.
    pub domain: HRepDoc,
    pub tail_bound: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FanDoc {
    /// Each cone as a list of generators.
    pub cones: Vec<Vec<Vec<RatStr>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub dim: usize,
    #[serde(default)]
    pub valuation: ValuationDoc,
    #[serde(default)]
    pub polynomials: Vec<Vec<TermDoc>>,
    #[serde(default)]
    pub series: Vec<SeriesDoc>,
    #[serde(default)]
    pub fans: Vec<FanDoc>,
}

/// Literal coefficients in one of the two supported models.
pub enum Literal {
    PAdic(Vec<LiteralPolynomial<PAdic>>),
    Parameter(Vec<LiteralPolynomial<RationalFunction>>),
}

impl SystemDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: SystemDocument =
            serde_json::from_str(text).map_err(|e| CliError::invalid(format!("system document: {e}")))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), CliError> {
        for (i, p) in self.polynomials.iter().enumerate() {
            self.check_terms(p, &format!("polynomials[{i}]"))?;
        }
        for (i, s) in self.series.iter().enumerate() {
            self.check_terms(&s.terms, &format!("series[{i}].terms"))?;
        }
        Ok(())
    }

    fn check_terms(&self, terms: &[TermDoc], field: &str) -> Result<(), CliError> {
        if terms.is_empty() {
            return Err(CliError::invalid(format!("{field}: no terms")));
        }
        let mut has_val = false;
        let mut has_coeff = false;
        for (j, t) in terms.iter().enumerate() {
            if t.exp.len() != self.dim {
                return Err(CliError::invalid(format!(
                    "{field}[{j}].exp: expected {} entries, got {}",
                    self.dim,
                    t.exp.len()
                )));
            }
            match (&t.coeff, &t.val) {
                (Some(_), None) => has_coeff = true,
                (None, Some(_)) => has_val = true,
                _ => {
                    return Err(CliError::invalid(format!(
                        "{field}[{j}]: exactly one of \"coeff\" and \"val\" is required"
                    )))
                }
            }
        }
        if has_val && has_coeff {
            return Err(CliError::invalid(format!("{field}: mixes \"coeff\" and \"val\" terms")));
        }
        if has_coeff && self.valuation == ValuationDoc::Explicit {
            return Err(CliError::invalid(format!(
                "{field}: coefficients need a \"p-adic\" or \"parameter\" valuation"
            )));
        }
        Ok(())
    }

    fn coefficient_valuation(&self, s: &str, field: &str) -> Result<Rat, CliError> {
        let v = match &self.valuation {
            ValuationDoc::PAdic { prime } => PAdic::new(parse_field(s, field)?, *prime).valuation(),
            ValuationDoc::Parameter => RationalFunction::parse(s)
                .map_err(|e| CliError::invalid(format!("{field}: {e}")))?
                .valuation(),
            ValuationDoc::Explicit => unreachable!("validated"),
        };
        v.ok_or_else(|| CliError::invalid(format!("{field}: zero coefficient")))
    }

    fn weights(&self, terms: &[TermDoc], field: &str) -> Result<Vec<(Vec<i64>, Rat)>, CliError> {
        terms
            .iter()
            .enumerate()
            .map(|(j, t)| {
                let f = format!("{field}[{j}]");
                let w = match (&t.coeff, &t.val) {
                    (_, Some(v)) => parse_field(v, &format!("{f}.val"))?,
                    (Some(c), None) => self.coefficient_valuation(c, &format!("{f}.coeff"))?,
                    _ => unreachable!("validated"),
                };
                Ok((t.exp.clone(), w))
            })
            .collect()
    }

    pub fn tropical(&self, i: usize) -> Result<TropicalPolynomial, CliError> {
        let terms = self
            .polynomials
            .get(i)
            .ok_or_else(|| CliError::invalid(format!("--poly {i}: the document has {} polynomials", self.polynomials.len())))?;
        let field = format!("polynomials[{i}]");
        TropicalPolynomial::new(self.dim, self.weights(terms, &field)?).map_err(|e| CliError::invalid(format!("{field}: {e}")))
    }

    pub fn tropicals(&self) -> Result<Vec<TropicalPolynomial>, CliError> {
        (0..self.polynomials.len()).map(|i| self.tropical(i)).collect()
    }

    pub fn literals(&self) -> Result<Literal, CliError> {
        let need_coeff = |i: usize, t: &TermDoc| {
            t.coeff
                .clone()
                .ok_or_else(|| CliError::invalid(format!("polynomials[{i}]: literal coefficients are required")))
        };
        match &self.valuation {
            ValuationDoc::PAdic { prime } => {
                let mut out = Vec::new();
                for (i, p) in self.polynomials.iter().enumerate() {
                    let mut terms = Vec::new();
                    for (j, t) in p.iter().enumerate() {
                        let c = parse_field(&need_coeff(i, t)?, &format!("polynomials[{i}][{j}].coeff"))?;
                        terms.push((t.exp.clone(), PAdic::new(c, *prime)));
                    }
                    out.push(LiteralPolynomial::new(self.dim, terms).map_err(|e| CliError::invalid(e.to_string()))?);
                }
                Ok(Literal::PAdic(out))
            }
            ValuationDoc::Parameter => {
                let mut out = Vec::new();
                for (i, p) in self.polynomials.iter().enumerate() {
                    let mut terms = Vec::new();
                    for (j, t) in p.iter().enumerate() {
                        let c = RationalFunction::parse(&need_coeff(i, t)?)
                            .map_err(|e| CliError::invalid(format!("polynomials[{i}][{j}].coeff: {e}")))?;
                        terms.push((t.exp.clone(), c));
                    }
                    out.push(LiteralPolynomial::new(self.dim, terms).map_err(|e| CliError::invalid(e.to_string()))?);
                }
                Ok(Literal::Parameter(out))
            }
            ValuationDoc::Explicit => Err(CliError::invalid(
                "literal coefficients need a \"p-adic\" or \"parameter\" valuation",
            )),
        }
    }

    pub fn series(&self, i: usize) -> Result<TruncatedSeries, CliError> {
        let s = self
            .series
            .get(i)
            .ok_or_else(|| CliError::invalid(format!("--series {i}: the document has {} series", self.series.len())))?;
        let field = format!("series[{i}]");
        let domain = hrep_polyhedron(self.dim, &s.domain, &format!("{field}.domain"))?;
        let t = parse_field(&s.tail_bound, &format!("{field}.tail_bound"))?;
        TruncatedSeries::new(domain, self.weights(&s.terms, &format!("{field}.terms"))?, t)
            .map_err(|e| CliError::invalid(format!("{field}: {e}")))
    }

    pub fn fan(&self, i: usize) -> Result<Fan, CliError> {
        let f = self
            .fans
            .get(i)
            .ok_or_else(|| CliError::invalid(format!("--fan {i}: the document has {} fans", self.fans.len())))?;
        fan_from_doc(self.dim, f, &format!("fans[{i}]"))
    }
}

pub fn fan_from_doc(dim: usize, f: &FanDoc, field: &str) -> Result<Fan, CliError> {
    let mut gens = Vec::new();
    for (c, cone) in f.cones.iter().enumerate() {
        let mut g = Vec::new();
        for (k, v) in cone.iter().enumerate() {
            let fk = format!("{field}.cones[{c}][{k}]");
            if v.len() != dim {
                return Err(CliError::invalid(format!("{fk}: expected {dim} entries, got {}", v.len())));
            }
            g.push(parse_vec(v, &fk)?);
        }
        gens.push(g);
    }
    let fan = Fan::from_generators(dim, &gens).map_err(|e| CliError::invalid(format!("{field}: {e}")))?;
    if !fan.is_valid() {
        return Err(CliError::invalid(format!("{field}: cones do not meet along common faces")));
    }
    Ok(fan)
}

pub fn hrep_polyhedron(dim: usize, h: &HRepDoc, field: &str) -> Result<Polyhedron, CliError> {
    let conv = |list: &[HalfspaceDoc], kind: &str| -> Result<Vec<(QVec, Rat)>, CliError> {
        list.iter()
            .enumerate()
            .map(|(i, hs)| {
                let f = format!("{field}.{kind}[{i}]");
                if hs.normal.len() != dim {
                    return Err(CliError::invalid(format!(
                        "{f}.normal: expected {dim} entries, got {}",
                        hs.normal.len()
                    )));
                }
                Ok((parse_vec(&hs.normal, &format!("{f}.normal"))?, parse_field(&hs.rhs, &format!("{f}.rhs"))?))
            })
            .collect()
    };
    Polyhedron::from_hrep(dim, &conv(&h.ineqs, "ineqs")?, &conv(&h.eqs, "eqs")?)
        .map_err(|e| CliError::invalid(format!("{field}: {e}")))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct VRepDoc {
    pub points: Vec<Vec<RatStr>>,
    pub rays: Vec<Vec<RatStr>>,
    pub lineality: Vec<Vec<RatStr>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub dim: usize,
    pub hrep: HRepDoc,
    pub vrep: VRepDoc,
    /// Vertices of the dual cell, for hypersurface cells.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<Vec<Vec<RatStr>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub dim: usize,
    pub cells: Vec<CellDoc>,
}

fn halfspace_docs(list: &[(QVec, Rat)]) -> Vec<HalfspaceDoc> {
    list.iter()
        .map(|(u, a)| HalfspaceDoc {
            normal: vec_str(u),
            rhs: rat_str(a),
        })
        .collect()
}

pub fn cell_doc(p: &Polyhedron, dual: Option<&Polyhedron>) -> CellDoc {
    let vs = |l: &[QVec]| l.iter().map(|v| vec_str(v)).collect();
    CellDoc {
        dim: p.dim(),
        hrep: HRepDoc {
            eqs: halfspace_docs(p.equations()),
            ineqs: halfspace_docs(p.facets()),
        },
        vrep: VRepDoc {
            points: vs(p.points()),
            rays: vs(p.rays()),
            lineality: vs(p.lineality()),
        },
        dual: dual.map(|d| vs(d.points())),
    }
}

impl ComplexDocument {
    pub fn from_complex(c: &PolyhedralComplex) -> Self {
        ComplexDocument {
            dim: c.ambient_dim(),
            cells: c.cells().iter().map(|p| cell_doc(p, None)).collect(),
        }
    }

    pub fn from_hypersurface(h: &TropicalHypersurface) -> Self {
        ComplexDocument {
            dim: h.complex.ambient_dim(),
            cells: h
                .cells()
                .iter()
                .zip(&h.dual_cells)
                .map(|(p, d)| cell_doc(p, Some(d)))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::invalid(format!("complex document: {e}")))
    }

    /// The cells, rebuilt from their H-representations.
    pub fn polyhedra(&self) -> Result<Vec<Polyhedron>, CliError> {
        self.cells
            .iter()
            .enumerate()
            .map(|(i, c)| hrep_polyhedron(self.dim, &c.hrep, &format!("cells[{i}].hrep")))
            .collect()
    }

    /// Re-emits the document from the rebuilt cells; equal to `self` for
    /// every document this tool writes.
    pub fn canonical(&self) -> Result<Self, CliError> {
        let polys = self.polyhedra()?;
        Ok(ComplexDocument {
            dim: self.dim,
            cells: polys
                .iter()
                .zip(&self.cells)
                .map(|(p, c)| {
                    let mut d = cell_doc(p, None);
                    d.dual = c.dual.clone();
                    d
                })
                .collect(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ExtendedPointDoc {
    /// Generators of the stratum cone; empty for finite points.
    pub stratum: Vec<Vec<RatStr>>,
    /// Coordinates in the quotient by the stratum cone's span.
    pub coset: Vec<RatStr>,
}

pub fn cone_doc(c: &Cone) -> Vec<Vec<RatStr>> {
    c.generators().iter().map(|g| vec_str(g)).collect()
}

impl ExtendedPointDoc {
    pub fn from_point(x: &ExtendedPoint) -> Self {
        ExtendedPointDoc {
            stratum: cone_doc(&x.stratum),
            coset: vec_str(&x.coset),
        }
    }
}
