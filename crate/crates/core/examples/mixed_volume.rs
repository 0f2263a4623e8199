//! Lattice volumes and mixed volumes, and the Bernstein count of a generic
//! system with given Newton polytopes.

use tropint::convex::{lattice_volume, mixed_volume, Polyhedron};
use tropint::rational::{fmt_rat, qvec};

fn main() {
    let square = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap();
    let triangle = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[2, 0]), qvec(&[0, 2])]).unwrap();
    println!("vol(square) = {}", fmt_rat(&lattice_volume(&square).unwrap()));
    println!("vol(triangle) = {}", fmt_rat(&lattice_volume(&triangle).unwrap()));
    println!("MV(square, triangle) = {}", fmt_rat(&mixed_volume(&[square, triangle.clone()]).unwrap()));

    let s = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[2, 0])]).unwrap();
    let t = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[3, -1])]).unwrap();
    println!("MV of segments (2,0), (3,-1) = {}", fmt_rat(&mixed_volume(&[s, t]).unwrap()));

    let p = 3;
    let n1 = Polyhedron::polytope(2, &[qvec(&[1, 0]), qvec(&[p, 0]), qvec(&[0, p])]).unwrap();
    let n2 = Polyhedron::polytope(2, &[qvec(&[0, 1]), qvec(&[p, 0]), qvec(&[0, p])]).unwrap();
    println!("Bernstein count for the two-curve supports, p = {p}: {}", fmt_rat(&mixed_volume(&[n1, n2]).unwrap()));
}
