//! Tropical Laurent polynomials in the min-plus convention: a term `ν ↦ w_ν`
//! contributes `w_ν + ⟨ν, v⟩` at `v ∈ N_R`.

use std::collections::{BTreeMap, BTreeSet};

use crate::convex::{normal_fan, Cone, Fan, PolyhedralComplex, Polyhedron};
use crate::error::{Error, Result};
use crate::extended::{ExtendedPoint, Quotient};
use crate::rational::{dot_i64, from_i64s, sub, to_i64_vec, QVec, Rat};

pub type Exponent = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial {
    dim: usize,
    terms: BTreeMap<Exponent, Rat>,
}

impl TropicalPolynomial {
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (Exponent, Rat)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, w) in terms {
            if e.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: e.len(),
                });
            }
            if map.insert(e.clone(), w).is_some() {
                return Err(Error::InvalidInput(format!("repeated exponent {e:?}")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidInput("a tropical polynomial needs a term".into()));
        }
        Ok(TropicalPolynomial { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn support(&self) -> Vec<QVec> {
        self.terms.keys().map(|e| from_i64s(e)).collect()
    }

    pub fn newton_polytope(&self) -> Polyhedron {
        Polyhedron::polytope(self.dim, &self.support()).expect("nonempty support")
    }

    /// `min_ν (w_ν + ⟨ν, v⟩)` at a finite point.
    pub fn evaluate(&self, v: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, w)| w + dot_i64(e, v))
            .min()
            .expect("nonempty")
    }

    /// The exponents attaining the minimum at a finite point.
    pub fn minimizers(&self, v: &[Rat]) -> Vec<Exponent> {
        let m = self.evaluate(v);
        self.terms
            .iter()
            .filter(|(e, w)| *w + dot_i64(e, v) == m)
            .map(|(e, _)| e.clone())
            .collect()
    }

    pub fn in_hypersurface(&self, v: &[Rat]) -> bool {
        self.minimizers(v).len() >= 2
    }

    /// Exponents minimizing every generator of `τ`; empty exactly when `τ`
    /// lies in no cone of the Newton fan.
    pub fn stratum_face(&self, tau: &Cone) -> Vec<Exponent> {
        let mut keep: BTreeSet<Exponent> = self.terms.keys().cloned().collect();
        for g in tau.generators() {
            let m = self.terms.keys().map(|e| dot_i64(e, &g)).min().expect("nonempty");
            keep.retain(|e| dot_i64(e, &g) == m);
        }
        keep.into_iter().collect()
    }

    /// The polynomial induced on the stratum `N_R/span(τ)`: the terms on the
    /// `τ`-minimal face of the Newton polytope, shifted by its least
    /// exponent and written in quotient coordinates. For `τ = {0}` this is
    /// `f` itself.
    pub fn face_polynomial(&self, tau: &Cone) -> Result<TropicalPolynomial> {
        if tau.is_zero() {
            return Ok(self.clone());
        }
        let face = self.stratum_face(tau);
        let Some(base) = face.first().cloned() else {
            return Err(Error::FanNotCompatible);
        };
        let q = Quotient::new(tau);
        let base_q = from_i64s(&base);
        let terms = face
            .iter()
            .map(|e| {
                let shifted = sub(&from_i64s(e), &base_q);
                let lambda = q.covector(&shifted).expect("face differences annihilate tau");
                let lambda = to_i64_vec(&lambda).expect("saturated lattice basis");
                (lambda, self.terms[e].clone())
            })
            .collect::<Vec<_>>();
        TropicalPolynomial::new(q.dim(), terms)
    }

    /// Tropical evaluation at a point of `N_R(Δ)`.
    pub fn weight(&self, v: &ExtendedPoint) -> Result<Rat> {
        Ok(self.face_polynomial(&v.stratum)?.evaluate(&v.coset))
    }

    /// The exponents of `f` (original coordinates) attaining the minimum at
    /// a point of `N_R(Δ)`.
    pub fn initial_support(&self, v: &ExtendedPoint) -> Result<Vec<Exponent>> {
        if v.stratum.is_zero() {
            return Ok(self.minimizers(&v.coset));
        }
        let face = self.stratum_face(&v.stratum);
        let Some(base) = face.first().cloned() else {
            return Err(Error::FanNotCompatible);
        };
        let rep = v.representative();
        let val = |e: &Exponent| &self.terms[e] + dot_i64(&diff(e, &base), &rep);
        let m = face.iter().map(val).min().expect("nonempty");
        Ok(face.iter().filter(|e| val(e) == m).cloned().collect())
    }

    /// `w_ν ↦ w_ν − ⟨ν, t⟩`, moving the hypersurface by `t`.
    pub fn translate(&self, t: &[Rat]) -> TropicalPolynomial {
        TropicalPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, w)| (e.clone(), w - dot_i64(e, t)))
                .collect(),
        }
    }

    /// The min-convention normal fan of the Newton polytope.
    pub fn newton_fan(&self) -> Fan {
        normal_fan(&self.newton_polytope()).expect("polytopes are pointed")
    }

    pub fn hypersurface(&self) -> TropicalHypersurface {
        hypersurface(self)
    }
}

fn diff(a: &[i64], b: &[i64]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The canonical polyhedral structure on the tropical hypersurface together
/// with the dual cells of the regular subdivision of the Newton polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalHypersurface {
    pub complex: PolyhedralComplex,
    /// `dual_cells[i]` is `conv` of the minimizing exponents on `complex.cells()[i]`.
    pub dual_cells: Vec<Polyhedron>,
    pub newton_polytope: Polyhedron,
}

impl TropicalHypersurface {
    pub fn cells(&self) -> &[Polyhedron] {
        self.complex.cells()
    }

    pub fn support_contains(&self, v: &[Rat]) -> bool {
        self.complex.support_contains(v)
    }

    pub fn dual_of(&self, cell: &Polyhedron) -> Option<&Polyhedron> {
        self.complex.index_of(cell).map(|i| &self.dual_cells[i])
    }
}

/// Cells are read off the lower faces of the lifted polyhedron
/// `conv{(ν, w_ν)} + R₊e_{n+1}`: every bounded face of positive dimension
/// with lifted point set `S` gives the cell where exactly the terms of `S`
/// (and possibly more) attain the minimum.
pub fn hypersurface(f: &TropicalPolynomial) -> TropicalHypersurface {
    let n = f.dim;
    let newton = f.newton_polytope();
    let lifted: Vec<(Exponent, QVec)> = f
        .terms
        .iter()
        .map(|(e, w)| {
            let mut p = from_i64s(e);
            p.push(w.clone());
            (e.clone(), p)
        })
        .collect();
    let pts: Vec<QVec> = lifted.iter().map(|(_, p)| p.clone()).collect();
    let mut up = vec![Rat::from_integer(0.into()); n + 1];
    up[n] = Rat::from_integer(1.into());
    let hull = Polyhedron::from_vrep(n + 1, &pts, &[up], &[]).expect("nonempty");
    let mut pairs: Vec<(Polyhedron, Polyhedron)> = Vec::new();
    for face in hull.faces() {
        if !face.is_bounded() || face.dim() == 0 {
            continue;
        }
        let on_face: Vec<&Exponent> = lifted
            .iter()
            .filter(|(_, p)| face.contains(p))
            .map(|(e, _)| e)
            .collect();
        let cell = cell_for(f, &on_face);
        let dual = Polyhedron::polytope(n, &on_face.iter().map(|e| from_i64s(e)).collect::<Vec<_>>())
            .expect("nonempty");
        pairs.push((cell, dual));
    }
    pairs.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then_with(|| a.0.cmp(&b.0)));
    let (cells, duals): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    let complex = PolyhedralComplex::from_face_closed(n, cells);
    debug_assert_eq!(complex.len(), duals.len());
    TropicalHypersurface {
        complex,
        dual_cells: duals,
        newton_polytope: newton,
    }
}

/// `{v : all terms in S tie and are ≤ every other term}`.
fn cell_for(f: &TropicalPolynomial, tied: &[&Exponent]) -> Polyhedron {
    let n = f.dim;
    let base = tied[0];
    let wb = &f.terms[base];
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    for e in &tied[1..] {
        // w_e + ⟨e,v⟩ = w_b + ⟨b,v⟩
        eqs.push((from_i64s(&diff(e, base)), wb - &f.terms[*e]));
    }
    for (e, w) in &f.terms {
        if tied.contains(&e) {
            continue;
        }
        // w_b + ⟨b,v⟩ ≤ w_e + ⟨e,v⟩
        ineqs.push((from_i64s(&diff(base, e)), w - wb));
    }
    Polyhedron::from_hrep(n, &ineqs, &eqs).expect("lower faces have nonempty cells")
}

/// The closure of the hypersurface in `N_R(Δ)`, one hypersurface per cone
/// of `Δ` in that stratum's quotient coordinates.
pub fn stratified_closure(
    f: &TropicalPolynomial,
    fan: &Fan,
) -> Result<Vec<(Cone, TropicalHypersurface)>> {
    fan.cones()
        .iter()
        .map(|tau| Ok((tau.clone(), f.face_polynomial(tau)?.hypersurface())))
        .collect()
}
