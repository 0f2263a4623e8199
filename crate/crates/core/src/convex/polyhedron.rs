//! Rational polyhedra with integral facet normals, kept in a canonical
//! H-/V-representation pair so that equality is structural.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::dd::extreme_rays;
use super::lp::{LinearProgram, LpOutcome};
use crate::error::{Error, Result};
use crate::rational::{
    add, dot, fmt_rat, is_zero_vec, null_space, primitive, rank, rref, scale, sub, zero_vec, QVec,
    Rat,
};

/// A nonempty polyhedron `{x : ⟨u,x⟩ = a (eqs), ⟨u,x⟩ ≤ a (facets)}`.
///
/// Equations are in reduced echelon form (scaled to primitive integral
/// normals), facet normals are reduced modulo the equations and primitive.
/// The V-representation stores minimal-face representatives (the vertices
/// when pointed), primitive ray generators and a lineality basis, each
/// reduced modulo the lineality space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyhedron {
    ambient: usize,
    eqs: Vec<(QVec, Rat)>,
    facets: Vec<(QVec, Rat)>,
    points: Vec<QVec>,
    rays: Vec<QVec>,
    lineality: Vec<QVec>,
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |x: &QVec| format!("({})", x.iter().map(fmt_rat).collect::<Vec<_>>().join(","));
        f.debug_struct("Polyhedron")
            .field("dim", &self.dim())
            .field("points", &self.points.iter().map(v).collect::<Vec<_>>())
            .field("rays", &self.rays.iter().map(v).collect::<Vec<_>>())
            .field("lineality", &self.lineality.iter().map(v).collect::<Vec<_>>())
            .finish()
    }
}

impl Polyhedron {
    /// Builds `{x : ⟨u,x⟩ ≤ a for ineqs, ⟨u,x⟩ = a for eqs}`; errors when
    /// the system is infeasible.
    pub fn from_hrep(ambient: usize, ineqs: &[(QVec, Rat)], eqs: &[(QVec, Rat)]) -> Result<Self> {
        let mut lp = LinearProgram::new(ambient);
        for (u, a) in ineqs {
            check_len(ambient, u)?;
            lp.le.push((u.clone(), a.clone()));
        }
        for (u, a) in eqs {
            check_len(ambient, u)?;
            lp.eq.push((u.clone(), a.clone()));
        }
        if !lp.is_feasible() {
            return Err(Error::Infeasible);
        }
        let (points, rays, lineality) = hrep_to_vrep(ambient, ineqs, eqs);
        debug_assert!(!points.is_empty());
        Ok(Self::from_minimal_vrep(ambient, points, rays, lineality))
    }

    /// `conv(points) + cone(rays) + span(lineality)`; `points` must be nonempty.
    pub fn from_vrep(
        ambient: usize,
        points: &[QVec],
        rays: &[QVec],
        lineality: &[QVec],
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::Infeasible);
        }
        for v in points.iter().chain(rays).chain(lineality) {
            check_len(ambient, v)?;
        }
        let (eqs, facets) = vrep_to_hrep(ambient, points, rays, lineality);
        let (p, r, l) = hrep_to_vrep(ambient, &facets, &eqs);
        Ok(Self::from_minimal_vrep(ambient, p, r, l))
    }

    pub fn polytope(ambient: usize, points: &[QVec]) -> Result<Self> {
        Self::from_vrep(ambient, points, &[], &[])
    }

    pub fn point(p: QVec) -> Self {
        let n = p.len();
        Self::from_minimal_vrep(n, vec![p], vec![], vec![])
    }

    /// The whole space `Qⁿ`.
    pub fn whole_space(ambient: usize) -> Self {
        let lin = (0..ambient)
            .map(|i| {
                let mut e = zero_vec(ambient);
                e[i] = Rat::one();
                e
            })
            .collect();
        Self::from_minimal_vrep(ambient, vec![zero_vec(ambient)], vec![], lin)
    }

    /// Internal constructor for generator sets that are already minimal
    /// (every point is on a minimal face, every ray extreme).
    pub(crate) fn from_minimal_vrep(
        ambient: usize,
        points: Vec<QVec>,
        rays: Vec<QVec>,
        lineality: Vec<QVec>,
    ) -> Self {
        let (eqs, facets) = vrep_to_hrep(ambient, &points, &rays, &lineality);
        let eqs = canonical_equations(ambient, eqs);
        let facets = canonical_facets(&eqs, facets);
        let mut lin = lineality;
        let lin_pivots = rref(&mut lin);
        let reduce = |v: &QVec| -> QVec {
            let mut v = v.clone();
            for (row, &pc) in lin.iter().zip(&lin_pivots) {
                if !v[pc].is_zero() {
                    let f = v[pc].clone();
                    v = sub(&v, &scale(row, &f));
                }
            }
            v
        };
        let points: BTreeSet<QVec> = points.iter().map(reduce).collect();
        let rays: BTreeSet<QVec> = rays
            .iter()
            .map(|r| primitive(&reduce(r)))
            .filter(|r| !is_zero_vec(r))
            .collect();
        let lineality: Vec<QVec> = lin.iter().map(|l| primitive(l)).collect();
        let p = Polyhedron {
            ambient,
            eqs,
            facets,
            points: points.into_iter().collect(),
            rays: rays.into_iter().collect(),
            lineality,
        };
        debug_assert!(p.generators_satisfy_hrep());
        p
    }

    fn generators_satisfy_hrep(&self) -> bool {
        self.points.iter().all(|x| self.contains(x))
            && self.rays.iter().all(|r| self.contains_direction(r))
            && self.lineality.iter().all(|l| {
                self.contains_direction(l) && self.contains_direction(&l.iter().map(|x| -x).collect::<Vec<_>>())
            })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the affine hull.
    pub fn dim(&self) -> usize {
        self.ambient - self.eqs.len()
    }

    pub fn equations(&self) -> &[(QVec, Rat)] {
        &self.eqs
    }

    pub fn facets(&self) -> &[(QVec, Rat)] {
        &self.facets
    }

    /// All defining halfspaces `⟨u,x⟩ ≤ a`, each equation contributing two.
    pub fn halfspaces(&self) -> Vec<(QVec, Rat)> {
        let mut out = Vec::new();
        for (u, a) in &self.eqs {
            out.push((u.clone(), a.clone()));
            out.push((u.iter().map(|x| -x).collect(), -a.clone()));
        }
        out.extend(self.facets.iter().cloned());
        out
    }

    /// Minimal-face representatives; the vertices when pointed.
    pub fn points(&self) -> &[QVec] {
        &self.points
    }

    pub fn rays(&self) -> &[QVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[QVec] {
        &self.lineality
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn vertices(&self) -> Result<&[QVec]> {
        if self.is_pointed() {
            Ok(&self.points)
        } else {
            Err(Error::NotPointed)
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.eqs.iter().all(|(u, a)| dot(u, x) == *a) && self.facets.iter().all(|(u, a)| dot(u, x) <= *a)
    }

    /// Strict interior membership relative to the ambient space.
    pub fn interior_contains(&self, x: &[Rat]) -> bool {
        self.eqs.is_empty() && self.facets.iter().all(|(u, a)| dot(u, x) < *a)
    }

    /// Relative-interior membership (inside the affine hull, strictly inside
    /// every facet).
    pub fn relint_contains(&self, x: &[Rat]) -> bool {
        self.eqs.iter().all(|(u, a)| dot(u, x) == *a) && self.facets.iter().all(|(u, a)| dot(u, x) < *a)
    }

    pub fn contains_direction(&self, d: &[Rat]) -> bool {
        self.eqs.iter().all(|(u, _)| dot(u, d).is_zero())
            && self.facets.iter().all(|(u, _)| !dot(u, d).is_positive())
    }

    pub fn contains_polyhedron(&self, other: &Polyhedron) -> bool {
        other.points.iter().all(|p| self.contains(p))
            && other.rays.iter().all(|r| self.contains_direction(r))
            && other.lineality.iter().all(|l| {
                self.eqs
                    .iter()
                    .chain(&self.facets)
                    .all(|(u, _)| dot(u, l).is_zero())
            })
    }

    /// A point of the relative interior.
    pub fn relative_interior_point(&self) -> QVec {
        let k = Rat::from_integer((self.points.len() as i64).into());
        let mut c = self
            .points
            .iter()
            .fold(zero_vec(self.ambient), |acc, p| add(&acc, p));
        c = scale(&c, &k.recip());
        for r in &self.rays {
            c = add(&c, r);
        }
        c
    }

    /// Basis of the linear space parallel to the affine hull.
    pub fn direction_space(&self) -> Vec<QVec> {
        let rows: Vec<QVec> = self.eqs.iter().map(|(u, _)| u.clone()).collect();
        null_space(&rows, self.ambient)
    }

    pub fn intersection(&self, other: &Polyhedron) -> Option<Polyhedron> {
        let mut ineqs = self.facets.clone();
        ineqs.extend(other.facets.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        Polyhedron::from_hrep(self.ambient, &ineqs, &eqs).ok()
    }

    pub fn intersects(&self, other: &Polyhedron) -> bool {
        let mut lp = LinearProgram::new(self.ambient);
        lp.le.extend(self.facets.iter().cloned());
        lp.le.extend(other.facets.iter().cloned());
        lp.eq.extend(self.eqs.iter().cloned());
        lp.eq.extend(other.eqs.iter().cloned());
        lp.is_feasible()
    }

    /// `sup ⟨u,x⟩` over the polyhedron, `None` when unbounded.
    pub fn support_value(&self, u: &[Rat]) -> Option<Rat> {
        if self.lineality.iter().any(|l| !dot(u, l).is_zero())
            || self.rays.iter().any(|r| dot(u, r).is_positive())
        {
            return None;
        }
        self.points.iter().map(|p| dot(u, p)).max()
    }

    /// The face where `⟨u,·⟩` attains its maximum.
    pub fn face(&self, u: &[Rat]) -> Result<Polyhedron> {
        check_len(self.ambient, u)?;
        let top = self.support_value(u).ok_or(Error::UnboundedDirection)?;
        let points: Vec<QVec> = self.points.iter().filter(|p| dot(u, p) == top).cloned().collect();
        let rays: Vec<QVec> = self.rays.iter().filter(|r| dot(u, r).is_zero()).cloned().collect();
        Ok(Polyhedron::from_minimal_vrep(self.ambient, points, rays, self.lineality.clone()))
    }

    /// The face where `⟨w,·⟩` attains its minimum.
    pub fn face_min(&self, w: &[Rat]) -> Result<Polyhedron> {
        let neg: QVec = w.iter().map(|x| -x).collect();
        self.face(&neg)
    }

    /// `{d : x + R₊d ⊂ P}`, obtained by zeroing the offsets.
    pub fn recession_cone(&self) -> Cone {
        Cone(Polyhedron::from_minimal_vrep(
            self.ambient,
            vec![zero_vec(self.ambient)],
            self.rays.clone(),
            self.lineality.clone(),
        ))
    }

    /// Relaxes every halfspace (equations counted as two) by `eps`.
    pub fn thicken(&self, eps: &Rat) -> Polyhedron {
        let ineqs: Vec<(QVec, Rat)> = self
            .halfspaces()
            .into_iter()
            .map(|(u, a)| (u, a + eps))
            .collect();
        Polyhedron::from_hrep(self.ambient, &ineqs, &[]).expect("relaxation of a nonempty set")
    }

    /// Every nonempty face, including the polyhedron itself, sorted by
    /// dimension and then canonical form.
    pub fn faces(&self) -> Vec<Polyhedron> {
        let tight_points: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|(u, a)| {
                (0..self.points.len())
                    .filter(|&i| dot(u, &self.points[i]) == *a)
                    .collect()
            })
            .collect();
        let tight_rays: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|(u, _)| (0..self.rays.len()).filter(|&i| dot(u, &self.rays[i]).is_zero()).collect())
            .collect();
        type Key = (BTreeSet<usize>, BTreeSet<usize>);
        let full: Key = ((0..self.points.len()).collect(), (0..self.rays.len()).collect());
        let mut seen: BTreeSet<Key> = BTreeSet::new();
        let mut stack = vec![full.clone()];
        seen.insert(full);
        while let Some((ps, rs)) = stack.pop() {
            for f in 0..self.facets.len() {
                let np: BTreeSet<usize> = ps.intersection(&tight_points[f]).copied().collect();
                if np.is_empty() {
                    continue;
                }
                let nr: BTreeSet<usize> = rs.intersection(&tight_rays[f]).copied().collect();
                if np.len() == ps.len() && nr.len() == rs.len() {
                    continue;
                }
                let key = (np, nr);
                if seen.insert(key.clone()) {
                    stack.push(key);
                }
            }
        }
        let mut out: Vec<Polyhedron> = seen
            .into_iter()
            .map(|(ps, rs)| {
                Polyhedron::from_minimal_vrep(
                    self.ambient,
                    ps.iter().map(|&i| self.points[i].clone()).collect(),
                    rs.iter().map(|&i| self.rays[i].clone()).collect(),
                    self.lineality.clone(),
                )
            })
            .collect();
        sort_by_dim(&mut out);
        out
    }

    /// Lexicographic maximum over the polyhedron via LP, used as an
    /// independent check of the V-representation.
    pub fn lp_support_value(&self, u: &[Rat]) -> Option<Rat> {
        let mut lp = LinearProgram::new(self.ambient);
        lp.le.extend(self.facets.iter().cloned());
        lp.eq.extend(self.eqs.iter().cloned());
        match lp.maximize(u) {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Unbounded => None,
            LpOutcome::Infeasible => unreachable!("polyhedra are nonempty"),
        }
    }

    pub fn translate(&self, t: &[Rat]) -> Polyhedron {
        Polyhedron::from_minimal_vrep(
            self.ambient,
            self.points.iter().map(|p| add(p, t)).collect(),
            self.rays.clone(),
            self.lineality.clone(),
        )
    }
}

pub fn sort_by_dim(cells: &mut [Polyhedron]) {
    cells.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
}

fn check_len(n: usize, v: &[Rat]) -> Result<()> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    Ok(())
}

/// H→V through the homogenized cone `{(x,t) : t·a − ⟨u,x⟩ ≥ 0, t ≥ 0}`.
fn hrep_to_vrep(
    n: usize,
    ineqs: &[(QVec, Rat)],
    eqs: &[(QVec, Rat)],
) -> (Vec<QVec>, Vec<QVec>, Vec<QVec>) {
    let mut cons: Vec<QVec> = Vec::new();
    let hom = |u: &QVec, a: &Rat, sign: i64| -> QVec {
        let s = Rat::from_integer(sign.into());
        let mut row: QVec = u.iter().map(|x| -x * &s).collect();
        row.push(a * &s);
        row
    };
    for (u, a) in eqs {
        cons.push(hom(u, a, 1));
        cons.push(hom(u, a, -1));
    }
    for (u, a) in ineqs {
        cons.push(hom(u, a, 1));
    }
    let mut t = zero_vec(n + 1);
    t[n] = Rat::one();
    cons.push(t);
    let g = extreme_rays(n + 1, &cons);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for r in g.rays {
        let t = r[n].clone();
        let x: QVec = r[..n].to_vec();
        if t.is_positive() {
            points.push(scale(&x, &t.recip()));
        } else {
            rays.push(x);
        }
    }
    let lineality = g.lineality.into_iter().map(|l| l[..n].to_vec()).collect();
    (points, rays, lineality)
}

/// V→H through the polar cone. Returns raw `(equations, facets)`.
#[allow(clippy::type_complexity)]
fn vrep_to_hrep(
    n: usize,
    points: &[QVec],
    rays: &[QVec],
    lineality: &[QVec],
) -> (Vec<(QVec, Rat)>, Vec<(QVec, Rat)>) {
    let mut cons: Vec<QVec> = Vec::new();
    for p in points {
        let mut row = p.clone();
        row.push(Rat::one());
        cons.push(row);
    }
    for r in rays {
        let mut row = r.clone();
        row.push(Rat::zero());
        cons.push(row);
    }
    for l in lineality {
        let mut row = l.clone();
        row.push(Rat::zero());
        cons.push(row.clone());
        cons.push(row.iter().map(|x| -x).collect());
    }
    let g = extreme_rays(n + 1, &cons);
    // y = (c, β) with ⟨c,x⟩ + β ≥ 0, i.e. ⟨−c,x⟩ ≤ β
    let split = |y: &QVec| -> (QVec, Rat) { (y[..n].iter().map(|x| -x).collect(), y[n].clone()) };
    let eqs = g
        .lineality
        .iter()
        .map(split)
        .filter(|(u, _)| !is_zero_vec(u))
        .collect();
    let facets = g
        .rays
        .iter()
        .map(split)
        .filter(|(u, _)| !is_zero_vec(u))
        .collect();
    (eqs, facets)
}

fn canonical_equations(n: usize, eqs: Vec<(QVec, Rat)>) -> Vec<(QVec, Rat)> {
    if eqs.is_empty() {
        return eqs;
    }
    let mut rows: Vec<QVec> = eqs
        .into_iter()
        .map(|(mut u, a)| {
            u.push(a);
            u
        })
        .collect();
    rref(&mut rows);
    rows.into_iter()
        .map(|row| {
            let u = row[..n].to_vec();
            let a = row[n].clone();
            let p = primitive(&u);
            let s = first_ratio(&p, &u);
            (p, a * s)
        })
        .collect()
}

fn canonical_facets(eqs: &[(QVec, Rat)], facets: Vec<(QVec, Rat)>) -> Vec<(QVec, Rat)> {
    // reduce modulo equations using the echelon pivots
    let mut echelon: Vec<QVec> = eqs
        .iter()
        .map(|(u, a)| {
            let mut r = u.clone();
            r.push(a.clone());
            r
        })
        .collect();
    let pivots = rref(&mut echelon);
    let n = eqs.first().map_or(0, |(u, _)| u.len());
    let mut out: BTreeSet<(QVec, Rat)> = BTreeSet::new();
    for (mut u, mut a) in facets {
        for (row, &pc) in echelon.iter().zip(&pivots) {
            if !u[pc].is_zero() {
                let f = u[pc].clone();
                for j in 0..n {
                    u[j] -= &f * &row[j];
                }
                a -= &f * &row[n];
            }
        }
        if is_zero_vec(&u) {
            continue;
        }
        let p = primitive(&u);
        let s = first_ratio(&p, &u);
        out.insert((p, a * s));
    }
    out.into_iter().collect()
}

/// `p[i] / u[i]` for the first nonzero coordinate (p is a positive multiple of u).
fn first_ratio(p: &[Rat], u: &[Rat]) -> Rat {
    let i = u.iter().position(|x| !x.is_zero()).expect("nonzero normal");
    &p[i] / &u[i]
}

/// A polyhedral cone (all offsets zero).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone(pub(crate) Polyhedron);

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cone(rays={:?}, lin={:?})", self.0.rays, self.0.lineality)
    }
}

impl Cone {
    pub fn from_generators(ambient: usize, gens: &[QVec]) -> Result<Cone> {
        Ok(Cone(Polyhedron::from_vrep(ambient, &[zero_vec(ambient)], gens, &[])?))
    }

    pub fn from_polyhedron(p: Polyhedron) -> Option<Cone> {
        let is_cone = p.eqs.iter().chain(&p.facets).all(|(_, a)| a.is_zero());
        is_cone.then_some(Cone(p))
    }

    pub fn zero(ambient: usize) -> Cone {
        Cone(Polyhedron::point(zero_vec(ambient)))
    }

    pub fn whole_space(ambient: usize) -> Cone {
        Cone(Polyhedron::whole_space(ambient))
    }

    pub fn as_polyhedron(&self) -> &Polyhedron {
        &self.0
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.ambient
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim() == 0
    }

    pub fn is_pointed(&self) -> bool {
        self.0.is_pointed()
    }

    pub fn rays(&self) -> &[QVec] {
        &self.0.rays
    }

    pub fn lineality(&self) -> &[QVec] {
        &self.0.lineality
    }

    /// Generators whose nonnegative combinations give the cone (lineality
    /// vectors contribute both signs).
    pub fn generators(&self) -> Vec<QVec> {
        let mut g = self.0.rays.clone();
        for l in &self.0.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    /// Generators of the linear span.
    pub fn span(&self) -> Vec<QVec> {
        let mut g = self.0.rays.clone();
        g.extend(self.0.lineality.iter().cloned());
        g
    }

    /// A point of the relative interior (sum of ray generators).
    pub fn interior_vector(&self) -> QVec {
        self.0.rays.iter().fold(zero_vec(self.0.ambient), |acc, r| add(&acc, r))
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.0.contains(v)
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        self.0.contains_polyhedron(&other.0)
    }

    /// `σ^∨ = {u : ⟨u,g⟩ ≥ 0 for all g ∈ σ}`.
    pub fn dual(&self) -> Cone {
        let n = self.0.ambient;
        let ineqs: Vec<(QVec, Rat)> = self
            .generators()
            .into_iter()
            .map(|g| (g.iter().map(|x| -x).collect(), Rat::zero()))
            .collect();
        Cone(Polyhedron::from_hrep(n, &ineqs, &[]).expect("cones are nonempty"))
    }

    pub fn faces(&self) -> Vec<Cone> {
        self.0.faces().into_iter().map(Cone).collect()
    }

    pub fn intersection(&self, other: &Cone) -> Cone {
        Cone(self.0.intersection(&other.0).expect("cones share the origin"))
    }

    /// Whether `self` is a face of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        other.faces().contains(self)
    }
}

/// Checks that the rank of a set of vectors is full.
pub fn spans(vectors: &[QVec], n: usize) -> bool {
    rank(vectors) == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat};

    fn square() -> Polyhedron {
        Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap()
    }

    fn unbounded_example() -> Polyhedron {
        // x ≥ 1, y ≥ 1, x + y ≥ 3
        Polyhedron::from_hrep(
            2,
            &[
                (qvec(&[-1, 0]), rat(-1)),
                (qvec(&[0, -1]), rat(-1)),
                (qvec(&[-1, -1]), rat(-3)),
            ],
            &[],
        )
        .unwrap()
    }

    #[test]
    fn square_vertices_and_faces() {
        let s = square();
        assert_eq!(
            s.vertices().unwrap(),
            &[qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 0]), qvec(&[1, 1])]
        );
        let left = s.face(&qvec(&[-1, 0])).unwrap();
        assert_eq!(left, Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[0, 1])]).unwrap());
        assert_eq!(s.face(&qvec(&[0, 0])).unwrap(), s);
        assert_eq!(s.faces().len(), 9);
    }

    #[test]
    fn quadrant_faces() {
        let q = Polyhedron::from_hrep(2, &[(qvec(&[-1, 0]), rat(0)), (qvec(&[0, -1]), rat(0))], &[])
            .unwrap();
        let xaxis = q.face(&qvec(&[0, -1])).unwrap();
        assert_eq!(xaxis.rays(), &[qvec(&[1, 0])]);
        assert_eq!(xaxis.points(), &[qvec(&[0, 0])]);
        assert_eq!(q.face(&qvec(&[-1, -1])).unwrap(), Polyhedron::point(qvec(&[0, 0])));
        assert_eq!(q.face(&qvec(&[1, 0])), Err(Error::UnboundedDirection));
    }

    #[test]
    fn unbounded_vertices_and_recession() {
        let p = unbounded_example();
        assert_eq!(p.vertices().unwrap(), &[qvec(&[1, 2]), qvec(&[2, 1])]);
        let u = p.recession_cone();
        assert_eq!(u.rays(), &[qvec(&[0, 1]), qvec(&[1, 0])]);
    }

    #[test]
    fn half_plane_recession_is_not_pointed() {
        let p = Polyhedron::from_hrep(2, &[(qvec(&[-1, 0]), rat(-1))], &[]).unwrap();
        let u = p.recession_cone();
        assert!(!u.is_pointed());
        assert!(u.contains(&qvec(&[0, -5])));
        assert!(u.contains(&qvec(&[3, 0])));
        assert!(!u.contains(&qvec(&[-1, 0])));
        assert_eq!(p.vertices(), Err(Error::NotPointed));
    }

    #[test]
    fn infeasible_is_rejected() {
        let r = Polyhedron::from_hrep(1, &[(qvec(&[1]), rat(0)), (qvec(&[-1]), rat(-1))], &[]);
        assert_eq!(r, Err(Error::Infeasible));
    }

    #[test]
    fn canonical_equality_from_different_descriptions() {
        let a = Polyhedron::from_hrep(
            2,
            &[(qvec(&[2, 0]), rat(2)), (qvec(&[-1, 0]), rat(0))],
            &[(qvec(&[0, 3]), rat(3))],
        )
        .unwrap();
        let b = Polyhedron::polytope(2, &[qvec(&[0, 1]), qvec(&[1, 1]), qvec(&[1, 1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn lp_and_vertex_support_agree() {
        let p = unbounded_example();
        for u in [qvec(&[-1, -2]), qvec(&[-3, -1]), qvec(&[1, -1])] {
            assert_eq!(p.support_value(&u), p.lp_support_value(&u));
        }
    }

    #[test]
    fn cone_dual_of_dual() {
        let c = Cone::from_generators(2, &[qvec(&[1, 0]), qvec(&[1, 2])]).unwrap();
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn zero_dimensional_ambient() {
        let p = Polyhedron::point(vec![]);
        assert_eq!(p.dim(), 0);
        assert_eq!(p.points().len(), 1);
        assert_eq!(p.faces().len(), 1);
    }
}
