//! Zero-dimensional tropical complete intersections: point multiplicities,
//! connected components, thickenings, certified generic translations and
//! stable multiplicities along positive-dimensional components.

use std::collections::BTreeSet;

use num_traits::{ToPrimitive, Zero};

use crate::convex::complex::refine_intersect;
use crate::convex::{mixed_volume, Cone, Fan, PolyhedralComplex, Polyhedron};
use crate::error::{Error, Result};
use crate::extended::{closure_polyhedron, ExtendedPoint};
use crate::rational::{from_i64s, rank, QVec, Rat};
use crate::tropical::TropicalPolynomial;

fn check_dims(polys: &[TropicalPolynomial]) -> Result<usize> {
    let first = polys
        .first()
        .ok_or_else(|| Error::InvalidInput("no polynomials given".into()))?;
    let n = first.dim();
    for f in polys {
        if f.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: f.dim(),
            });
        }
    }
    Ok(n)
}

fn check_square(polys: &[TropicalPolynomial]) -> Result<usize> {
    let n = check_dims(polys)?;
    if polys.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: polys.len(),
        });
    }
    Ok(n)
}

/// A complex supported on `⋂ Trop(fᵢ)`.
pub fn intersection_complex(polys: &[TropicalPolynomial]) -> Result<PolyhedralComplex> {
    check_dims(polys)?;
    let mut acc = polys[0].hypersurface().complex;
    for f in &polys[1..] {
        acc = refine_intersect(&acc, &f.hypersurface().complex);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locus {
    Point(ExtendedPoint),
    Component(usize),
}

/// A point of a translated system inside the thickening.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatedPoint {
    pub point: QVec,
    pub dual_cells: Vec<Polyhedron>,
    pub multiplicity: u64,
}

/// The data of one accepted generic translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    pub seed: u64,
    /// One integer direction per polynomial; the `i`-th hypersurface moves
    /// by `t · directions[i]`.
    pub directions: Vec<Vec<i64>>,
    pub t: Rat,
    pub attempts: usize,
    pub points: Vec<TranslatedPoint>,
    /// Points found at `t/2`, which must carry the same dual cells.
    pub half_step_points: Vec<TranslatedPoint>,
}

impl Translation {
    pub fn multiplicity(&self) -> u64 {
        self.points.iter().map(|p| p.multiplicity).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCertificate {
    pub thickening: Thickening,
    pub translations: Vec<Translation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub locus: Locus,
    /// The dual cells at a point locus; empty for components, whose
    /// per-point cells live in the certificate.
    pub dual_cells: Vec<Polyhedron>,
    pub multiplicity: u64,
    pub certificate: Option<StableCertificate>,
}

fn dual_cells_at(polys: &[TropicalPolynomial], v: &[Rat]) -> Vec<Polyhedron> {
    polys
        .iter()
        .map(|f| {
            let pts: Vec<QVec> = f.minimizers(v).iter().map(|e| from_i64s(e)).collect();
            Polyhedron::polytope(f.dim(), &pts).expect("nonempty")
        })
        .collect()
}

fn mv_u64(cells: &[Polyhedron]) -> u64 {
    let mv = mixed_volume(cells).expect("same ambient dimension");
    debug_assert!(mv.is_integer());
    mv.to_integer().to_u64().expect("mixed volumes are nonnegative")
}

/// The mixed volume of the dual cells at an isolated intersection point.
/// Points off the intersection have multiplicity zero.
pub fn point_multiplicity(polys: &[TropicalPolynomial], v: &ExtendedPoint) -> Result<MultiplicityReport> {
    let n = check_square(polys)?;
    if v.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.ambient_dim(),
        });
    }
    if !v.is_finite() {
        return Err(Error::BoundaryStratum);
    }
    let x = &v.coset;
    let cx = intersection_complex(polys)?;
    if cx.cells().iter().any(|c| c.dim() > 0 && c.contains(x)) {
        return Err(Error::NotIsolated);
    }
    let duals = dual_cells_at(polys, x);
    let multiplicity = mv_u64(&duals);
    Ok(MultiplicityReport {
        locus: Locus::Point(v.clone()),
        dual_cells: duals,
        multiplicity,
        certificate: None,
    })
}

/// A connected component of the intersection complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub cells: Vec<Polyhedron>,
    pub bounded: bool,
}

impl Component {
    pub fn maximal_cells(&self) -> Vec<&Polyhedron> {
        self.cells
            .iter()
            .filter(|c| {
                !self
                    .cells
                    .iter()
                    .any(|d| d.dim() > c.dim() && d.contains_polyhedron(c))
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.cells.iter().map(Polyhedron::dim).max().unwrap_or(0)
    }

    /// The point, when the component is a single point.
    pub fn as_point(&self) -> Option<&QVec> {
        match self.cells.as_slice() {
            [c] if c.dim() == 0 => Some(&c.points()[0]),
            _ => None,
        }
    }
}

/// Cells are adjacent when they intersect; components are ordered by their
/// first cell in the canonical cell order.
pub fn components(polys: &[TropicalPolynomial]) -> Result<Vec<Component>> {
    let cx = intersection_complex(polys)?;
    let cells = cx.cells();
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut j = i;
        while p[j] != r {
            let next = p[j];
            p[j] = r;
            j = next;
        }
        r
    }
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if find(&mut parent, i) != find(&mut parent, j) && cells[i].intersects(&cells[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Polyhedron>)> = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(root, _)| *root == r) {
            Some((_, g)) => g.push(c.clone()),
            None => groups.push((r, vec![c.clone()])),
        }
    }
    groups.sort_by_key(|(r, _)| *r);
    Ok(groups
        .into_iter()
        .map(|(_, cells)| {
            let bounded = cells.iter().all(Polyhedron::is_bounded);
            Component { cells, bounded }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thickening {
    pub base: Vec<Polyhedron>,
    pub epsilon: Rat,
    /// The maximal cells of the base, each halfspace relaxed by `epsilon`.
    pub relaxed: Vec<Polyhedron>,
}

impl Thickening {
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.relaxed.iter().any(|r| r.contains(x))
    }

    pub fn interior_contains(&self, x: &[Rat]) -> bool {
        self.relaxed.iter().any(|r| r.interior_contains(x))
    }
}

/// Halves `ε` from 1 until the relaxed cells miss every other component.
pub fn thicken(component: &Component, polys: &[TropicalPolynomial]) -> Result<Thickening> {
    let others: Vec<Polyhedron> = components(polys)?
        .into_iter()
        .filter(|c| c != component)
        .flat_map(|c| c.cells)
        .collect();
    let base_max: Vec<Polyhedron> = component.maximal_cells().into_iter().cloned().collect();
    let mut eps = Rat::from_integer(1.into());
    loop {
        let relaxed: Vec<Polyhedron> = base_max.iter().map(|c| c.thicken(&eps)).collect();
        if !relaxed.iter().any(|r| others.iter().any(|o| r.intersects(o))) {
            return Ok(Thickening {
                base: component.cells.clone(),
                epsilon: eps,
                relaxed,
            });
        }
        eps /= Rat::from_integer(2.into());
    }
}

/// A splitmix64 stream.
#[derive(Debug, Clone)]
pub struct DirectionStream(u64);

impl DirectionStream {
    pub fn new(seed: u64) -> Self {
        DirectionStream(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// An integer vector with entries in `[-bound, bound]`.
    pub fn vector(&mut self, n: usize, bound: i64) -> Vec<i64> {
        let span = (2 * bound + 1) as u64;
        (0..n).map(|_| (self.next_u64() % span) as i64 - bound).collect()
    }
}

pub const DEFAULT_RETRY_CAP: usize = 64;

fn translated(polys: &[TropicalPolynomial], dirs: &[Vec<i64>], t: &Rat) -> Vec<TropicalPolynomial> {
    polys
        .iter()
        .zip(dirs)
        .map(|(f, d)| {
            let shift: QVec = d.iter().map(|x| t * Rat::from_integer((*x).into())).collect();
            f.translate(&shift)
        })
        .collect()
}

/// The points of the translated system inside the thickening, or the reason
/// they fail to be finite, interior and transverse.
fn probe(
    polys: &[TropicalPolynomial],
    dirs: &[Vec<i64>],
    t: &Rat,
    thick: &Thickening,
) -> std::result::Result<Vec<TranslatedPoint>, String> {
    let n = polys[0].dim();
    let moved = translated(polys, dirs, t);
    let cx = intersection_complex(&moved).expect("dimensions checked");
    let mut out = Vec::new();
    for c in cx.cells() {
        if !thick.relaxed.iter().any(|r| r.intersects(c)) {
            continue;
        }
        if c.dim() > 0 {
            return Err(format!("t={t}: a {}-dimensional cell meets the thickening", c.dim()));
        }
        let q = c.points()[0].clone();
        if !thick.interior_contains(&q) {
            return Err(format!("t={t}: point {q:?} lies on the boundary of the thickening"));
        }
        let duals = dual_cells_at(&moved, &q);
        let total: usize = duals.iter().map(Polyhedron::dim).sum();
        let dirs_all: Vec<QVec> = duals.iter().flat_map(|d| d.direction_space()).collect();
        if total != n || rank(&dirs_all) != n {
            return Err(format!("t={t}: intersection at {q:?} is not transverse"));
        }
        let multiplicity = mv_u64(&duals);
        out.push(TranslatedPoint {
            point: q,
            dual_cells: duals,
            multiplicity,
        });
    }
    Ok(out)
}

/// Pairs each point found at `t` with one found at `t/2` carrying the same
/// dual cells, such that the straight-line extrapolation of the pair to
/// `t = 0` lands on the component. Along a fixed combinatorial type the
/// translated points move affinely in `t`, so this identifies where every
/// point comes from.
fn pair_with_limits(
    at_t: &[TranslatedPoint],
    at_half: &[TranslatedPoint],
    component: &Component,
) -> std::result::Result<(), String> {
    if at_t.len() != at_half.len() {
        return Err(format!("{} points at t but {} at t/2", at_t.len(), at_half.len()));
    }
    let two = Rat::from_integer(2.into());
    let mut used = vec![false; at_half.len()];
    for a in at_t {
        let found = at_half.iter().enumerate().position(|(j, b)| {
            if used[j] || b.dual_cells != a.dual_cells {
                return false;
            }
            let limit: QVec = b.point.iter().zip(&a.point).map(|(y, x)| &two * y - x).collect();
            component.cells.iter().any(|c| c.contains(&limit))
        });
        match found {
            Some(j) => used[j] = true,
            None => return Err(format!("point {:?} does not converge to the component", a.point)),
        }
    }
    Ok(())
}

/// Finds integer directions and a step `t` such that at `t` and `t/2` the
/// translated hypersurfaces meet the thickening in finitely many interior,
/// transverse points, matched across the two steps with identical dual
/// cells and converging to the component. Isolated points use the zero
/// translation.
pub fn admissible_translation(
    component: &Component,
    polys: &[TropicalPolynomial],
    seed: u64,
    retry_cap: usize,
) -> Result<(Thickening, Translation)> {
    let n = check_square(polys)?;
    let thick = thicken(component, polys)?;
    if let Some(v) = component.as_point() {
        let duals = dual_cells_at(polys, v);
        let multiplicity = mv_u64(&duals);
        let pt = TranslatedPoint {
            point: v.clone(),
            dual_cells: duals,
            multiplicity,
        };
        let tr = Translation {
            seed,
            directions: vec![vec![0; n]; n],
            t: Rat::zero(),
            attempts: 0,
            points: vec![pt.clone()],
            half_step_points: vec![pt],
        };
        return Ok((thick, tr));
    }
    let mut stream = DirectionStream::new(seed);
    let mut log = Vec::new();
    for attempt in 0..retry_cap {
        let bound = 1 + (attempt as i64) / 4;
        let dirs: Vec<Vec<i64>> = (0..n).map(|_| stream.vector(n, bound)).collect();
        let scale = Rat::from_integer((2 * (bound + 1)).into()) * Rat::from_integer((1i64 << (attempt / 8).min(30)).into());
        let t = &thick.epsilon / scale;
        let half = &t / Rat::from_integer(2.into());
        let outcome = probe(polys, &dirs, &t, &thick).and_then(|a| {
            let b = probe(polys, &dirs, &half, &thick)?;
            pair_with_limits(&a, &b, component).map_err(|e| format!("t={t}: {e}"))?;
            Ok((a, b))
        });
        match outcome {
            Ok((points, half_step_points)) => {
                let tr = Translation {
                    seed,
                    directions: dirs,
                    t,
                    attempts: attempt + 1,
                    points,
                    half_step_points,
                };
                return Ok((thick, tr));
            }
            Err(why) => log.push(format!("attempt {} directions {:?}: {}", attempt + 1, dirs, why)),
        }
    }
    Err(Error::GenericityFailure {
        attempts: retry_cap,
        log,
    })
}

/// The seeds used for the cross-checks of a stable multiplicity.
pub fn check_seeds(seed: u64, checks: usize) -> Vec<u64> {
    let mut s = DirectionStream::new(seed);
    std::iter::once(seed).chain((1..checks.max(1)).map(|_| s.next_u64())).collect()
}

/// The stable intersection multiplicity along a component, recomputed for
/// `checks` independent seeds which must agree. `threads` bounds how many
/// seeds run concurrently.
pub fn stable_multiplicity(
    component_index: usize,
    polys: &[TropicalPolynomial],
    seed: u64,
    checks: usize,
    threads: usize,
) -> Result<MultiplicityReport> {
    check_square(polys)?;
    let comps = components(polys)?;
    let component = comps
        .get(component_index)
        .ok_or_else(|| Error::InvalidInput(format!("no component {component_index}")))?;
    let seeds = check_seeds(seed, checks);
    let run = |s: u64| admissible_translation(component, polys, s, DEFAULT_RETRY_CAP);
    let results: Vec<Result<(Thickening, Translation)>> = if threads <= 1 {
        seeds.iter().map(|s| run(*s)).collect()
    } else {
        let mut out = Vec::with_capacity(seeds.len());
        for chunk in seeds.chunks(threads) {
            let part: Vec<_> = std::thread::scope(|sc| {
                let handles: Vec<_> = chunk.iter().map(|s| sc.spawn(move || run(*s))).collect();
                handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
            });
            out.extend(part);
        }
        out
    };
    let mut thickening = None;
    let mut translations = Vec::new();
    for r in results {
        let (th, tr) = r?;
        thickening.get_or_insert(th);
        translations.push(tr);
    }
    let values: Vec<u64> = translations.iter().map(Translation::multiplicity).collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::WellDefinednessViolation(values));
    }
    Ok(MultiplicityReport {
        locus: Locus::Component(component_index),
        dual_cells: Vec::new(),
        multiplicity: values[0],
        certificate: Some(StableCertificate {
            thickening: thickening.expect("at least one seed"),
            translations,
        }),
    })
}

/// The closure of a component in `N_R(Δ)`: its finite cells plus, for each
/// nonzero cone `τ`, the pieces the cells acquire in the stratum of `τ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClosure {
    pub finite: Vec<Polyhedron>,
    /// `(τ, cells)` in quotient coordinates, for nonzero `τ` only.
    pub boundary: Vec<(Cone, Vec<Polyhedron>)>,
}

impl ComponentClosure {
    /// The boundary pieces that are single points, as extended points.
    pub fn boundary_points(&self) -> Vec<ExtendedPoint> {
        let mut out = Vec::new();
        for (tau, cells) in &self.boundary {
            for c in cells {
                if c.dim() == 0 {
                    out.push(ExtendedPoint::from_coset(tau.clone(), c.points()[0].clone()).expect("quotient point"));
                }
            }
        }
        out
    }
}

pub fn component_closure(component: &Component, fan: &Fan) -> Result<ComponentClosure> {
    let mut strata: Vec<(Cone, BTreeSet<Polyhedron>)> = Vec::new();
    for cell in &component.cells {
        let ext = closure_polyhedron(cell, fan).map_err(|e| match e {
            Error::ConeNotInFan => Error::FanNotCompatible,
            other => other,
        })?;
        for (tau, piece) in ext.strata {
            if tau.is_zero() {
                continue;
            }
            match strata.iter_mut().find(|(c, _)| *c == tau) {
                Some((_, s)) => {
                    s.insert(piece);
                }
                None => strata.push((tau, BTreeSet::from([piece]))),
            }
        }
    }
    strata.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ComponentClosure {
        finite: component.cells.clone(),
        boundary: strata
            .into_iter()
            .map(|(tau, s)| {
                let cx = PolyhedralComplex::from_cells(tau.ambient_dim() - tau.dim(), s);
                (tau, cx.cells().to_vec())
            })
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat, ratio};

    fn poly(terms: &[(&[i64], i64)]) -> TropicalPolynomial {
        TropicalPolynomial::new(2, terms.iter().map(|(e, w)| (e.to_vec(), rat(*w)))).unwrap()
    }

    fn line(a: i64, b: i64, c: i64) -> TropicalPolynomial {
        poly(&[(&[1, 0], a), (&[0, 1], b), (&[0, 0], c)])
    }

    #[test]
    fn splitmix_reference_values() {
        let mut s = DirectionStream::new(0);
        assert_eq!(s.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(s.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn transverse_lines_meet_once() {
        let f = line(0, 0, 0);
        let g = line(0, 0, 1).translate(&qvec(&[3, 0]));
        let comps = components(&[f.clone(), g.clone()]).unwrap();
        assert_eq!(comps.len(), 1);
        let p = comps[0].as_point().unwrap().clone();
        let r = point_multiplicity(&[f, g], &ExtendedPoint::finite(p)).unwrap();
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn identical_lines_form_one_component() {
        let f = line(0, 0, 0);
        let comps = components(&[f.clone(), f.clone()]).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(!comps[0].bounded);
        assert_eq!(comps[0].dim(), 1);
        let err = point_multiplicity(&[f.clone(), f.clone()], &ExtendedPoint::finite(qvec(&[0, 0])));
        assert_eq!(err.unwrap_err(), Error::NotIsolated);
        let r = stable_multiplicity(0, &[f.clone(), f], 7, 3, 1).unwrap();
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn off_intersection_point_has_zero_multiplicity() {
        let f = line(0, 0, 0);
        let g = line(0, 0, 1).translate(&qvec(&[3, 0]));
        let r = point_multiplicity(&[f, g], &ExtendedPoint::finite(qvec(&[-7, 11]))).unwrap();
        assert_eq!(r.multiplicity, 0);
    }

    #[test]
    fn boundary_points_are_refused() {
        let f = line(0, 0, 0);
        let tau = Cone::from_generators(2, &[qvec(&[1, 0])]).unwrap();
        let x = ExtendedPoint::from_coset(tau, qvec(&[0])).unwrap();
        assert_eq!(point_multiplicity(&[f.clone(), f], &x).unwrap_err(), Error::BoundaryStratum);
    }

    #[test]
    fn nearby_points_force_a_smaller_thickening() {
        // tropical zeros at 0 and -1
        let f = TropicalPolynomial::new(1, [(vec![0], rat(0)), (vec![1], rat(0)), (vec![2], rat(1))]).unwrap();
        let polys = [f];
        let comps = components(&polys).unwrap();
        assert_eq!(comps.len(), 2);
        let th = thicken(&comps[0], &polys).unwrap();
        assert_eq!(th.epsilon, ratio(1, 2));
        let r = stable_multiplicity(1, &polys, 3, 2, 1).unwrap();
        assert_eq!(r.multiplicity, 1);
    }

    #[test]
    fn thickening_halves_until_separated() {
        // the vertex of f sits at (0,0); g's cells pass through (0,0) and (2,0)
        let f = line(0, 0, 0);
        let g = poly(&[(&[2, 0], 0), (&[1, 0], 1), (&[0, 0], 2), (&[0, 1], 5)]);
        let polys = [f, g];
        let comps = components(&polys).unwrap();
        for c in &comps {
            let th = thicken(c, &polys).unwrap();
            assert!(th.epsilon <= ratio(1, 1));
            for o in comps.iter().filter(|o| *o != c) {
                for cell in &o.cells {
                    assert!(!th.relaxed.iter().any(|r| r.intersects(cell)));
                }
            }
        }
    }
}
