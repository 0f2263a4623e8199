//! Partial compactifications `N_R(Δ)`: points with coordinates at infinity
//! in the directions of a fan, and closures of polyhedra stratum by stratum.

use crate::convex::lattice::{kernel_basis, to_q};
use crate::convex::{Cone, Fan, Polyhedron};
use crate::error::{Error, Result};
use crate::rational::{dot, solve, QVec, Rat};

/// Lattice coordinates on `N_R / span(τ)`: the coordinate functionals form
/// the Hermite-normal-form basis of the saturated lattice `τ^⊥ ∩ Zⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    ambient: usize,
    basis: Vec<QVec>,
}

impl Quotient {
    pub fn new(tau: &Cone) -> Self {
        let n = tau.ambient_dim();
        let basis = kernel_basis(&tau.span(), n).iter().map(|b| to_q(b)).collect();
        Quotient { ambient: n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn project(&self, v: &[Rat]) -> QVec {
        self.basis.iter().map(|m| dot(m, v)).collect()
    }

    /// The representative of a coset lying in the row space of the basis.
    pub fn lift(&self, c: &[Rat]) -> QVec {
        let k = self.basis.len();
        let gram: Vec<QVec> = (0..k)
            .map(|i| (0..k).map(|j| dot(&self.basis[i], &self.basis[j])).collect())
            .collect();
        let lambda = solve(&gram, c).expect("basis is independent");
        let mut v = vec![Rat::from_integer(0.into()); self.ambient];
        for (l, m) in lambda.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(m) {
                *x += l * y;
            }
        }
        v
    }

    /// Coordinates of a covector `u ∈ τ^⊥` in the dual basis, so that
    /// `⟨u, v⟩ = ⟨λ, project(v)⟩`. `None` when `u ∉ τ^⊥`.
    pub fn covector(&self, u: &[Rat]) -> Option<QVec> {
        let k = self.basis.len();
        if k == 0 {
            return u.iter().all(|x| *x == Rat::from_integer(0.into())).then(Vec::new);
        }
        // least squares on the Gram system, then verify exactness
        let gram: Vec<QVec> = (0..k)
            .map(|i| (0..k).map(|j| dot(&self.basis[i], &self.basis[j])).collect())
            .collect();
        let rhs: QVec = self.basis.iter().map(|m| dot(m, u)).collect();
        let lambda = solve(&gram, &rhs)?;
        let mut back = vec![Rat::from_integer(0.into()); self.ambient];
        for (l, m) in lambda.iter().zip(&self.basis) {
            for (x, y) in back.iter_mut().zip(m) {
                *x += l * y;
            }
        }
        (back == u).then_some(lambda)
    }
}

/// Canonical quotient coordinates of `v` modulo `span(τ)`.
pub fn project_quotient(tau: &Cone, v: &[Rat]) -> QVec {
    Quotient::new(tau).project(v)
}

/// A point of `N_R(Δ)`: a stratum cone `τ` and a point of `N_R/span(τ)`
/// in the canonical quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedPoint {
    pub stratum: Cone,
    pub coset: QVec,
}

impl ExtendedPoint {
    pub fn finite(v: QVec) -> Self {
        let n = v.len();
        ExtendedPoint {
            stratum: Cone::zero(n),
            coset: v,
        }
    }

    /// The stratum point represented by any `v ∈ N_R`.
    pub fn from_representative(stratum: Cone, v: &[Rat]) -> Self {
        let coset = project_quotient(&stratum, v);
        ExtendedPoint { stratum, coset }
    }

    pub fn from_coset(stratum: Cone, coset: QVec) -> Result<Self> {
        let q = Quotient::new(&stratum);
        if coset.len() != q.dim() {
            return Err(Error::DimensionMismatch {
                expected: q.dim(),
                got: coset.len(),
            });
        }
        Ok(ExtendedPoint { stratum, coset })
    }

    pub fn is_finite(&self) -> bool {
        self.stratum.is_zero()
    }

    pub fn ambient_dim(&self) -> usize {
        self.stratum.ambient_dim()
    }

    /// A representative in `N_R` of the coset.
    pub fn representative(&self) -> QVec {
        Quotient::new(&self.stratum).lift(&self.coset)
    }
}

/// The tropicalization of a point whose coordinates have the given
/// valuations (`None` for a vanishing coordinate, i.e. valuation `+∞`).
/// The vanishing coordinates must span a cone of `Δ`.
pub fn trop_point(valuations: &[Option<Rat>], fan: &Fan) -> Result<ExtendedPoint> {
    let n = valuations.len();
    if fan.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: fan.ambient_dim(),
            got: n,
        });
    }
    let gens: Vec<QVec> = (0..n)
        .filter(|&i| valuations[i].is_none())
        .map(|i| {
            let mut e = vec![Rat::from_integer(0.into()); n];
            e[i] = Rat::from_integer(1.into());
            e
        })
        .collect();
    let tau = Cone::from_generators(n, &gens)?;
    if !fan.contains_cone(&tau) {
        return Err(Error::StratumNotInFan);
    }
    let v: QVec = valuations
        .iter()
        .map(|x| x.clone().unwrap_or_else(|| Rat::from_integer(0.into())))
        .collect();
    Ok(ExtendedPoint::from_representative(tau, &v))
}

/// The closure of a pointed polyhedron in `N_R(Δ)`, one polyhedron per
/// face `τ` of its recession cone, in quotient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedPolyhedron {
    pub base: Polyhedron,
    pub strata: Vec<(Cone, Polyhedron)>,
}

impl ExtendedPolyhedron {
    pub fn stratum(&self, tau: &Cone) -> Option<&Polyhedron> {
        self.strata.iter().find(|(c, _)| c == tau).map(|(_, p)| p)
    }

    pub fn contains(&self, x: &ExtendedPoint) -> bool {
        self.stratum(&x.stratum).is_some_and(|p| p.contains(&x.coset))
    }
}

/// Retains the inequalities of `P` whose normals annihilate `τ` and
/// rewrites them in quotient coordinates.
pub fn stratum_polyhedron(p: &Polyhedron, tau: &Cone) -> Polyhedron {
    let q = Quotient::new(tau);
    let mut ineqs = Vec::new();
    let mut eqs = Vec::new();
    for (u, a) in p.equations() {
        if let Some(l) = q.covector(u) {
            eqs.push((l, a.clone()));
        }
    }
    for (u, a) in p.facets() {
        if let Some(l) = q.covector(u) {
            ineqs.push((l, a.clone()));
        }
    }
    Polyhedron::from_hrep(q.dim(), &ineqs, &eqs).expect("the projection of a nonempty set")
}

pub fn closure_polyhedron(p: &Polyhedron, fan: &Fan) -> Result<ExtendedPolyhedron> {
    if !p.is_pointed() {
        return Err(Error::NotPointed);
    }
    let rec = p.recession_cone();
    if !fan.contains_cone(&rec) {
        return Err(Error::ConeNotInFan);
    }
    let strata = rec
        .faces()
        .into_iter()
        .map(|tau| {
            let s = stratum_polyhedron(p, &tau);
            (tau, s)
        })
        .collect();
    Ok(ExtendedPolyhedron {
        base: p.clone(),
        strata,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat};

    fn quadrant_fan() -> Fan {
        Fan::from_generators(2, &[vec![qvec(&[1, 0]), qvec(&[0, 1])]]).unwrap()
    }

    #[test]
    fn diagonal_quotient_coordinate() {
        let tau = Cone::from_generators(2, &[qvec(&[1, 1])]).unwrap();
        assert_eq!(project_quotient(&tau, &qvec(&[2, 0])), qvec(&[2]));
        assert_eq!(project_quotient(&tau, &qvec(&[3, 3])), qvec(&[0]));
        let zero = Cone::zero(2);
        assert_eq!(project_quotient(&zero, &qvec(&[4, -1])), qvec(&[4, -1]));
    }

    #[test]
    fn lift_is_a_section() {
        let tau = Cone::from_generators(3, &[qvec(&[1, 2, 0])]).unwrap();
        let q = Quotient::new(&tau);
        let c = qvec(&[3, -2]);
        assert_eq!(q.project(&q.lift(&c)), c);
    }

    #[test]
    fn trop_points() {
        let fan = quadrant_fan();
        let p = trop_point(&[Some(rat(1)), Some(rat(0))], &fan).unwrap();
        assert!(p.is_finite());
        assert_eq!(p.coset, qvec(&[1, 0]));
        let q = trop_point(&[None, Some(rat(1))], &fan).unwrap();
        assert_eq!(q.stratum.rays(), &[qvec(&[1, 0])]);
        assert_eq!(q.coset, qvec(&[1]));
        let bad = Fan::from_generators(2, &[vec![qvec(&[0, 1])]]).unwrap();
        assert_eq!(trop_point(&[None, Some(rat(1))], &bad), Err(Error::StratumNotInFan));
    }

    #[test]
    fn closure_of_unbounded_example() {
        let p = Polyhedron::from_hrep(
            2,
            &[
                (qvec(&[-1, 0]), rat(-1)),
                (qvec(&[0, -1]), rat(-1)),
                (qvec(&[-1, -1]), rat(-3)),
            ],
            &[],
        )
        .unwrap();
        let c = closure_polyhedron(&p, &quadrant_fan()).unwrap();
        assert_eq!(c.strata.len(), 4);
        let e1 = Cone::from_generators(2, &[qvec(&[1, 0])]).unwrap();
        let s = c.stratum(&e1).unwrap();
        // {∞} × [1, ∞): the y-coordinate ranges over [1, ∞)
        assert_eq!(s.points(), &[qvec(&[1])]);
        assert_eq!(s.rays(), &[qvec(&[1])]);
        let corner = Cone::from_generators(2, &[qvec(&[1, 0]), qvec(&[0, 1])]).unwrap();
        assert_eq!(c.stratum(&corner).unwrap().ambient_dim(), 0);
    }

    #[test]
    fn closure_of_ray() {
        let ray = Polyhedron::from_vrep(2, &[qvec(&[0, 0])], &[qvec(&[1, 0])], &[]).unwrap();
        let c = closure_polyhedron(&ray, &quadrant_fan()).unwrap();
        let e1 = Cone::from_generators(2, &[qvec(&[1, 0])]).unwrap();
        assert_eq!(c.stratum(&e1).unwrap(), &Polyhedron::point(qvec(&[0])));
    }

    #[test]
    fn closure_requires_fan_cone() {
        let ray = Polyhedron::from_vrep(2, &[qvec(&[0, 0])], &[qvec(&[1, 1])], &[]).unwrap();
        assert_eq!(closure_polyhedron(&ray, &quadrant_fan()), Err(Error::ConeNotInFan));
    }
}
