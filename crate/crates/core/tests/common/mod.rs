//! Shared generators and exact set-level comparisons for the integration
//! suites.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropint::convex::{Fan, Polyhedron};
use tropint::rational::{qvec, rat, QVec};
use tropint::tropical::{Exponent, TropicalPolynomial};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_exponent(r: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Exponent {
    (0..n).map(|_| r.gen_range(lo..=hi)).collect()
}

/// A tropical polynomial with `terms` distinct exponents in `[0, box_hi]ⁿ`
/// and integer weights in `[-w, w]`.
pub fn random_tropical(r: &mut ChaCha8Rng, n: usize, terms: usize, box_hi: i64, w: i64) -> TropicalPolynomial {
    let mut seen = std::collections::BTreeMap::new();
    while seen.len() < terms {
        let e = random_exponent(r, n, 0, box_hi);
        seen.entry(e).or_insert_with(|| rat(r.gen_range(-w..=w)));
    }
    TropicalPolynomial::new(n, seen).unwrap()
}

/// The convex hull of 1 to `max_points` random lattice points in `[-b, b]ⁿ`.
pub fn lattice_polytope(r: &mut ChaCha8Rng, n: usize, max_points: usize, b: i64) -> Polyhedron {
    let k = r.gen_range(1..=max_points);
    let pts: Vec<QVec> = (0..k).map(|_| qvec(&random_exponent(r, n, -b, b))).collect();
    Polyhedron::polytope(n, &pts).unwrap()
}

pub fn full_dimensional_newton(f: &TropicalPolynomial) -> bool {
    f.newton_polytope().dim() == f.dim()
}

pub fn newton_refinement(polys: &[TropicalPolynomial]) -> Fan {
    let mut fan = polys[0].newton_fan();
    for f in &polys[1..] {
        fan = fan.intersect(&f.newton_fan());
    }
    fan
}

fn maximal(cells: &[Polyhedron]) -> Vec<Polyhedron> {
    let mut out: Vec<Polyhedron> = Vec::new();
    for c in cells {
        if out.contains(c) {
            continue;
        }
        if cells.iter().any(|d| d != c && d.contains_polyhedron(c)) {
            continue;
        }
        out.push(c.clone());
    }
    out
}

/// Whether the union of `pieces` equals `c`. Every piece lies in `c`, has
/// the dimension of `c`, and distinct pieces share no relative interior
/// points. A piece facet in the relative interior of `c` must be covered by
/// the traces of the other pieces on it, checked recursively.
fn pieces_cover(c: &Polyhedron, pieces: &[Polyhedron]) -> bool {
    let d = c.dim();
    if pieces.is_empty() {
        return false;
    }
    if d == 0 {
        return true;
    }
    let boundary: Vec<Polyhedron> = c.faces().into_iter().filter(|f| f.dim() + 1 == d).collect();
    for (i, q) in pieces.iter().enumerate() {
        for facet in q.faces().into_iter().filter(|f| f.dim() + 1 == d) {
            if boundary.iter().any(|b| b.contains_polyhedron(&facet)) {
                continue;
            }
            let traces: Vec<Polyhedron> = pieces
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .filter_map(|(_, o)| o.intersection(&facet))
                .filter(|t| t.dim() + 1 == d)
                .collect();
            if !pieces_cover(&facet, &maximal(&traces)) {
                return false;
            }
        }
    }
    true
}

/// `⋃ a ⊆ ⋃ b` for collections whose members pairwise meet in common faces.
pub fn support_subset(a: &[Polyhedron], b: &[Polyhedron]) -> bool {
    maximal(a).iter().all(|c| {
        let d = c.dim();
        let pieces: Vec<Polyhedron> = b
            .iter()
            .filter_map(|x| x.intersection(c))
            .filter(|x| x.dim() == d)
            .collect();
        pieces_cover(c, &maximal(&pieces))
    })
}

pub fn supports_equal(a: &[Polyhedron], b: &[Polyhedron]) -> bool {
    support_subset(a, b) && support_subset(b, a)
}

/// `|det|` of a 2×2 or 3×3 integer matrix by cofactor expansion.
pub fn abs_det(rows: &[Vec<i64>]) -> i64 {
    match rows.len() {
        2 => (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]).abs(),
        3 => {
            let m = rows;
            (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
                .abs()
        }
        _ => unimplemented!("only planes and 3-space"),
    }
}
