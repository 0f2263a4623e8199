//! The tropical line of x + y + λ with val λ = 1: one vertex, three rays, and
//! the dual subdivision of the Newton triangle.

use tropint::rational::{fmt_vec, rat};
use tropint::tropical::TropicalPolynomial;

fn main() {
    let f = TropicalPolynomial::new(2, [(vec![1, 0], rat(0)), (vec![0, 1], rat(0)), (vec![0, 0], rat(1))])
        .expect("valid polynomial");
    let h = f.hypersurface();
    for (cell, dual) in h.cells().iter().zip(&h.dual_cells) {
        let show = |v: &Vec<tropint::rational::Rat>| format!("({})", fmt_vec(v));
        println!(
            "dim {}  points {:?}  rays {:?}  dual {:?}",
            cell.dim(),
            cell.points().iter().map(show).collect::<Vec<_>>(),
            cell.rays().iter().map(show).collect::<Vec<_>>(),
            dual.points().iter().map(show).collect::<Vec<_>>(),
        );
    }
}
