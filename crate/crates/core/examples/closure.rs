//! The closure of a tropical hypersurface in a toric variety: one
//! hypersurface per stratum, written in quotient coordinates.

use tropint::rational::{fmt_vec, rat};
use tropint::tropical::{stratified_closure, TropicalPolynomial};

fn main() {
    // 1 + x + y + λxy with val λ = 2
    let f = TropicalPolynomial::new(
        2,
        [(vec![0, 0], rat(0)), (vec![1, 0], rat(0)), (vec![0, 1], rat(0)), (vec![1, 1], rat(2))],
    )
    .unwrap();
    let fan = f.newton_fan();
    for (tau, h) in stratified_closure(&f, &fan).unwrap() {
        let pts: Vec<String> = h
            .cells()
            .iter()
            .filter(|c| c.dim() == 0)
            .map(|c| fmt_vec(&c.points()[0]))
            .collect();
        println!("stratum {:?}: {} cells, vertices {:?}", tau.rays().iter().map(|r| fmt_vec(r)).collect::<Vec<_>>(), h.cells().len(), pts);
    }
}
