//! Lattice-normalized volumes and mixed volumes of rational polytopes.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::polyhedron::Polyhedron;
use crate::error::{Error, Result};
use crate::rational::{add, affine_rank, det, dot, factorial, sub, QVec, Rat};

/// Euclidean volume normalized so the unit lattice cell has volume one;
/// zero for lower-dimensional polytopes.
pub fn lattice_volume(p: &Polyhedron) -> Result<Rat> {
    if !p.is_bounded() {
        return Err(Error::Unbounded);
    }
    let n = p.ambient_dim();
    if p.dim() < n {
        return Ok(Rat::zero());
    }
    if n == 0 {
        return Ok(Rat::from_integer(1.into()));
    }
    let verts = p.points();
    let tight: Vec<BTreeSet<usize>> = p
        .facets()
        .iter()
        .map(|(u, a)| (0..verts.len()).filter(|&i| dot(u, &verts[i]) == *a).collect())
        .collect();
    let all: BTreeSet<usize> = (0..verts.len()).collect();
    let mut simplices = Vec::new();
    pulling_triangulation(verts, &tight, &all, n, &mut Vec::new(), &mut simplices);
    let mut total = Rat::zero();
    for s in &simplices {
        let base = &verts[s[0]];
        let m: Vec<QVec> = s[1..].iter().map(|&i| sub(&verts[i], base)).collect();
        total += det(&m).abs();
    }
    Ok(total / Rat::from_integer(factorial(n)))
}

/// Pulling triangulation: cone the lowest-index vertex over a
/// triangulation of every facet that avoids it.
fn pulling_triangulation(
    verts: &[QVec],
    tight: &[BTreeSet<usize>],
    face: &BTreeSet<usize>,
    dim: usize,
    apex: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let v0 = *face.iter().next().unwrap();
    if dim == 0 {
        let mut s = apex.clone();
        s.push(v0);
        out.push(s);
        return;
    }
    let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for t in tight {
        let sub_face: BTreeSet<usize> = face.intersection(t).copied().collect();
        if sub_face.is_empty() || sub_face.contains(&v0) || sub_face.len() == face.len() {
            continue;
        }
        if seen.contains(&sub_face) {
            continue;
        }
        let pts: Vec<QVec> = sub_face.iter().map(|&i| verts[i].clone()).collect();
        if affine_rank(&pts) != Some(dim - 1) {
            continue;
        }
        seen.insert(sub_face.clone());
        apex.push(v0);
        pulling_triangulation(verts, tight, &sub_face, dim - 1, apex, out);
        apex.pop();
    }
}

/// Minkowski sum of polyhedra given by their V-representations.
pub fn minkowski_sum(a: &Polyhedron, b: &Polyhedron) -> Result<Polyhedron> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            got: b.ambient_dim(),
        });
    }
    let mut points = Vec::new();
    for p in a.points() {
        for q in b.points() {
            points.push(add(p, q));
        }
    }
    let mut rays = a.rays().to_vec();
    rays.extend(b.rays().iter().cloned());
    let mut lin = a.lineality().to_vec();
    lin.extend(b.lineality().iter().cloned());
    Polyhedron::from_vrep(a.ambient_dim(), &points, &rays, &lin)
}

/// `MV(P₁,…,Pₙ) = Σ_{S ⊆ [n]} (−1)^{n−|S|} vol(Σ_{i∈S} Pᵢ)`.
pub fn mixed_volume(polys: &[Polyhedron]) -> Result<Rat> {
    let n = polys.len();
    for p in polys {
        if p.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.ambient_dim(),
            });
        }
        if !p.is_bounded() {
            return Err(Error::Unbounded);
        }
    }
    if n == 0 {
        return Ok(Rat::from_integer(1.into()));
    }
    let mut sums: Vec<Option<Polyhedron>> = vec![None; 1 << n];
    let mut total = Rat::zero();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let s = match &sums[rest] {
            None => polys[low].clone(),
            Some(r) => minkowski_sum(r, &polys[low])?,
        };
        let vol = lattice_volume(&s)?;
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
        sums[mask] = Some(s);
    }
    Ok(total)
}

/// `|det|` of the edge vectors of `n` segments, the mixed volume of
/// lattice segments.
pub fn segment_determinant(edges: &[QVec]) -> Rat {
    det(edges).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat, ratio};

    fn poly(pts: &[&[i64]]) -> Polyhedron {
        let v: Vec<QVec> = pts.iter().map(|p| qvec(p)).collect();
        Polyhedron::polytope(v[0].len(), &v).unwrap()
    }

    #[test]
    fn basic_volumes() {
        assert_eq!(lattice_volume(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap(), rat(1));
        assert_eq!(lattice_volume(&poly(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap(), ratio(1, 2));
        assert_eq!(lattice_volume(&poly(&[&[0, 0], &[3, 7]])).unwrap(), rat(0));
        let cube: Vec<Vec<i64>> = (0..8).map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1]).collect();
        let cube: Vec<&[i64]> = cube.iter().map(|v| v.as_slice()).collect();
        assert_eq!(lattice_volume(&poly(&cube)).unwrap(), rat(1));
    }

    #[test]
    fn unbounded_volume_errors() {
        let q = Polyhedron::from_hrep(1, &[(qvec(&[-1]), rat(0))], &[]).unwrap();
        assert_eq!(lattice_volume(&q), Err(Error::Unbounded));
    }

    #[test]
    fn mixed_volume_examples() {
        let e1 = poly(&[&[0, 0], &[1, 0]]);
        let e2 = poly(&[&[0, 0], &[0, 1]]);
        assert_eq!(mixed_volume(&[e1, e2]).unwrap(), rat(1));
        let p = 3;
        let s1 = poly(&[&[0, 0], &[p - 1, 0]]);
        let s2 = poly(&[&[0, 0], &[p, -1]]);
        assert_eq!(mixed_volume(&[s1, s2]).unwrap(), rat(p - 1));
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(mixed_volume(&[sq.clone(), sq]).unwrap(), rat(2));
    }

    #[test]
    fn dimension_mismatch() {
        let e1 = poly(&[&[0, 0], &[1, 0]]);
        assert!(matches!(mixed_volume(&[e1]), Err(Error::DimensionMismatch { .. })));
    }
}
