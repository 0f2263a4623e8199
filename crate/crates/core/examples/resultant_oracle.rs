//! Counting common zeros by valuation with resultants, compared with the
//! mixed volume of dual cells at each isolated tropical intersection point.

use tropint::extended::ExtendedPoint;
use tropint::intersect::{components, point_multiplicity};
use tropint::oracle::{resultant_count2, LiteralPolynomial, PAdic};
use tropint::rational::{fmt_vec, rat};

fn main() {
    let p = 3;
    let c = |q: i64| PAdic::new(rat(q), p);
    let f1 = LiteralPolynomial::new(2, [(vec![1, 0], c(3)), (vec![3, 0], c(1)), (vec![0, 3], c(1))]).unwrap();
    let f2 = LiteralPolynomial::new(2, [(vec![0, 1], c(1)), (vec![3, 0], c(2)), (vec![0, 3], c(1))]).unwrap();
    let polys = [f1.to_tropical().unwrap(), f2.to_tropical().unwrap()];
    for comp in components(&polys).unwrap() {
        let Some(v) = comp.as_point() else { continue };
        let engine = point_multiplicity(&polys, &ExtendedPoint::finite(v.clone())).unwrap().multiplicity;
        let oracle = resultant_count2(&f1, &f2, v).unwrap();
        println!("{} mixed volume {engine}, resultant count {oracle}", fmt_vec(v));
    }
    let origin = [rat(0), rat(0)];
    println!("zeros with valuation (0,0): {}", resultant_count2(&f1, &f2, &origin).unwrap());
}
