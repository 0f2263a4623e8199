//! Double description: extreme rays and lineality of a homogeneous cone
//! `{x : ⟨aᵢ, x⟩ ≥ 0}`. Both H→V and V→H conversions of polyhedra reduce to
//! this routine through homogenization and polarity.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::rational::{dot, primitive, scale, sub, QVec, Rat};

#[derive(Debug, Clone, Default)]
pub struct ConeGenerators {
    pub lineality: Vec<QVec>,
    pub rays: Vec<QVec>,
}

struct Ray {
    v: QVec,
    zeros: BTreeSet<usize>,
}

pub fn extreme_rays(dim: usize, constraints: &[QVec]) -> ConeGenerators {
    let mut lin: Vec<QVec> = (0..dim)
        .map(|i| {
            let mut e = vec![Rat::zero(); dim];
            e[i] = Rat::from_integer(1.into());
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in constraints.iter().enumerate() {
        if a.iter().all(Zero::is_zero) {
            for r in rays.iter_mut() {
                r.zeros.insert(k);
            }
            continue;
        }
        if let Some(pos) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lin.swap_remove(pos);
            let mut al = dot(a, &l);
            if al.is_negative() {
                l = l.iter().map(|x| -x).collect();
                al = -al;
            }
            for other in lin.iter_mut() {
                let f = dot(a, other) / &al;
                if !f.is_zero() {
                    *other = sub(other, &scale(&l, &f));
                }
            }
            for r in rays.iter_mut() {
                let f = dot(a, &r.v) / &al;
                if !f.is_zero() {
                    r.v = primitive(&sub(&r.v, &scale(&l, &f)));
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                v: primitive(&l),
                zeros: (0..k).collect(),
            });
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, val) in rays.iter().zip(&vals) {
            if !val.is_negative() {
                let mut zeros = r.zeros.clone();
                if val.is_zero() {
                    zeros.insert(k);
                }
                next.push(Ray {
                    v: r.v.clone(),
                    zeros,
                });
            }
        }
        let free_dim = dim - lin.len();
        for (i, p) in rays.iter().enumerate() {
            if !vals[i].is_positive() {
                continue;
            }
            for (j, q) in rays.iter().enumerate() {
                if !vals[j].is_negative() {
                    continue;
                }
                let common: BTreeSet<usize> = p.zeros.intersection(&q.zeros).copied().collect();
                if common.len() + 2 < free_dim {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(m, r)| m != i && m != j && common.is_subset(&r.zeros));
                if blocked {
                    continue;
                }
                let v = sub(&scale(&q.v, &vals[i]), &scale(&p.v, &vals[j]));
                let mut zeros = common;
                zeros.insert(k);
                next.push(Ray {
                    v: primitive(&v),
                    zeros,
                });
            }
        }
        rays = next;
    }

    ConeGenerators {
        lineality: lin.iter().map(|l| primitive(l)).collect(),
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    fn sorted(mut v: Vec<QVec>) -> Vec<QVec> {
        v.sort();
        v
    }

    #[test]
    fn quadrant() {
        let g = extreme_rays(2, &[qvec(&[1, 0]), qvec(&[0, 1])]);
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), vec![qvec(&[0, 1]), qvec(&[1, 0])]);
    }

    #[test]
    fn half_plane_has_lineality() {
        let g = extreme_rays(2, &[qvec(&[1, 0])]);
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, vec![qvec(&[1, 0])]);
    }

    #[test]
    fn square_pyramid_cone() {
        // cone over the square [-1,1]^2 at height 1
        let cons = vec![
            qvec(&[1, 0, 1]),
            qvec(&[-1, 0, 1]),
            qvec(&[0, 1, 1]),
            qvec(&[0, -1, 1]),
        ];
        let g = extreme_rays(3, &cons);
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            vec![
                qvec(&[-1, -1, 1]),
                qvec(&[-1, 1, 1]),
                qvec(&[1, -1, 1]),
                qvec(&[1, 1, 1])
            ]
        );
    }

    #[test]
    fn trivial_cone() {
        let g = extreme_rays(2, &[qvec(&[1, 0]), qvec(&[-1, 0]), qvec(&[0, 1]), qvec(&[0, -1])]);
        assert!(g.lineality.is_empty());
        assert!(g.rays.is_empty());
    }
}
