//! Fans of rational cones and normal fans of polyhedra.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::polyhedron::{Cone, Polyhedron};
use crate::error::{Error, Result};
use crate::rational::{dot, is_zero_vec, QVec, Rat};

/// A finite collection of cones closed under faces, sorted by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    ambient: usize,
    cones: Vec<Cone>,
}

impl Fan {
    /// Closes the given cones under faces.
    pub fn from_cones(ambient: usize, cones: impl IntoIterator<Item = Cone>) -> Self {
        let mut set: BTreeSet<Cone> = BTreeSet::new();
        for c in cones {
            if set.contains(&c) {
                continue;
            }
            set.extend(c.faces());
        }
        let mut cones: Vec<Cone> = set.into_iter().collect();
        cones.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        Fan { ambient, cones }
    }

    pub fn from_generators(ambient: usize, gens: &[Vec<QVec>]) -> Result<Self> {
        let cones = gens
            .iter()
            .map(|g| Cone::from_generators(ambient, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_cones(ambient, cones))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn contains_cone(&self, c: &Cone) -> bool {
        self.cones.contains(c)
    }

    pub fn index_of(&self, c: &Cone) -> Option<usize> {
        self.cones.iter().position(|x| x == c)
    }

    /// Pointed iff `{0}` is one of the cones.
    pub fn is_pointed(&self) -> bool {
        self.cones.iter().any(Cone::is_zero)
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.dim() > c.dim() && d.contains_cone(c))
            })
            .collect()
    }

    pub fn rays(&self) -> Vec<&Cone> {
        self.cones.iter().filter(|c| c.dim() == 1 && c.is_pointed()).collect()
    }

    /// The cone containing `v` in its relative interior.
    pub fn carrier(&self, v: &[Rat]) -> Option<&Cone> {
        self.cones.iter().find(|c| c.as_polyhedron().relint_contains(v))
    }

    /// Complete iff there is a full-dimensional cone and every wall of a
    /// full-dimensional cone is shared by exactly two of them.
    pub fn is_complete(&self) -> bool {
        let full: Vec<&Cone> = self.cones.iter().filter(|c| c.dim() == self.ambient).collect();
        if full.is_empty() {
            return false;
        }
        let faces: Vec<Vec<Cone>> = full.iter().map(|c| c.faces()).collect();
        for fs in &faces {
            for wall in fs.iter().filter(|w| w.dim() + 1 == self.ambient) {
                let count = faces.iter().filter(|g| g.contains(wall)).count();
                if count != 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Every pairwise intersection is a face of both cones.
    pub fn is_valid(&self) -> bool {
        let faces: Vec<Vec<Cone>> = self.cones.iter().map(Cone::faces).collect();
        for i in 0..self.cones.len() {
            for j in i + 1..self.cones.len() {
                let x = self.cones[i].intersection(&self.cones[j]);
                if !faces[i].contains(&x) || !faces[j].contains(&x) {
                    return false;
                }
            }
        }
        true
    }

    /// The common refinement `{σ ∩ σ′}`.
    pub fn intersect(&self, other: &Fan) -> Fan {
        let mut out = Vec::new();
        for a in &self.cones {
            for b in &other.cones {
                out.push(a.intersection(b));
            }
        }
        Fan::from_cones(self.ambient, out)
    }

    /// The smallest cone of the fan containing `c`, if any.
    pub fn smallest_cone_containing(&self, c: &Cone) -> Option<&Cone> {
        self.cones.iter().find(|d| d.contains_cone(c))
    }
}

/// The normal fan in the minimization convention: the cone attached to a
/// face `F` is `{w : F ⊂ argmin_P ⟨w,·⟩}`. Maximal cones correspond to
/// vertices; the fan is complete iff `P` is a polytope.
pub fn normal_fan(p: &Polyhedron) -> Result<Fan> {
    if !p.is_pointed() {
        return Err(Error::NotPointed);
    }
    let n = p.ambient_dim();
    let mut cones = Vec::new();
    for f in p.faces() {
        let mut gens: Vec<QVec> = Vec::new();
        for (u, a) in p.facets() {
            let tight = f.points().iter().all(|x| dot(u, x) == *a)
                && f.rays().iter().all(|r| dot(u, r).is_zero());
            if tight {
                gens.push(u.iter().map(|x| -x).collect());
            }
        }
        for (u, _) in p.equations() {
            gens.push(u.clone());
            gens.push(u.iter().map(|x| -x).collect());
        }
        gens.retain(|g| !is_zero_vec(g));
        cones.push(Cone::from_generators(n, &gens)?);
    }
    Ok(Fan::from_cones(n, cones))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    fn poly(pts: &[&[i64]]) -> Polyhedron {
        let v: Vec<QVec> = pts.iter().map(|p| qvec(p)).collect();
        Polyhedron::polytope(v[0].len(), &v).unwrap()
    }

    #[test]
    fn square_fan_is_four_quadrants() {
        let fan = normal_fan(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(fan.cones().len(), 9);
        assert_eq!(fan.maximal_cones().len(), 4);
        assert!(fan.is_complete());
        assert!(fan.is_pointed());
        assert!(fan.is_valid());
        let q = Cone::from_generators(2, &[qvec(&[1, 0]), qvec(&[0, 1])]).unwrap();
        assert!(fan.contains_cone(&q));
    }

    #[test]
    fn triangle_fan_min_convention() {
        let fan = normal_fan(&poly(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let mut rays: Vec<QVec> = fan.rays().iter().map(|c| c.rays()[0].clone()).collect();
        rays.sort();
        assert_eq!(rays, vec![qvec(&[-1, -1]), qvec(&[0, 1]), qvec(&[1, 0])]);
        assert_eq!(fan.maximal_cones().len(), 3);
        assert!(fan.is_complete());
    }

    #[test]
    fn point_fan_is_whole_space() {
        let fan = normal_fan(&Polyhedron::point(qvec(&[2, 3]))).unwrap();
        assert_eq!(fan.cones().len(), 1);
        assert_eq!(fan.cones()[0], Cone::whole_space(2));
        assert!(fan.is_complete());
        assert!(!fan.is_pointed());
    }

    #[test]
    fn unbounded_polyhedron_fan_is_incomplete() {
        let q = Polyhedron::from_hrep(2, &[(qvec(&[-1, 0]), Rat::from_integer(0.into())), (qvec(&[0, -1]), Rat::from_integer(0.into()))], &[]).unwrap();
        let fan = normal_fan(&q).unwrap();
        assert!(!fan.is_complete());
        assert_eq!(fan.maximal_cones().len(), 1);
    }
}
