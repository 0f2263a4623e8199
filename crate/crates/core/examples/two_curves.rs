//! f₁ = px + x^p + y^p and f₂ = y + x^p + y^p over a field with val p = 1.
//! One component is the point (1/(p−1), p/(p−1)); the other is the ray from
//! (0,0) in direction (−1,−1), whose stable multiplicity is p² − p.

use tropint::extended::ExtendedPoint;
use tropint::intersect::{components, point_multiplicity, stable_multiplicity};
use tropint::rational::{fmt_vec, rat};
use tropint::tropical::TropicalPolynomial;

fn main() {
    for p in [3i64, 5] {
        let f1 = TropicalPolynomial::new(2, [(vec![1, 0], rat(1)), (vec![p, 0], rat(0)), (vec![0, p], rat(0))]).unwrap();
        let f2 = TropicalPolynomial::new(2, [(vec![0, 1], rat(0)), (vec![p, 0], rat(0)), (vec![0, p], rat(0))]).unwrap();
        let polys = [f1, f2];
        let mut total = 0;
        for (i, c) in components(&polys).unwrap().iter().enumerate() {
            let m = match c.as_point() {
                Some(v) => {
                    let r = point_multiplicity(&polys, &ExtendedPoint::finite(v.clone())).unwrap();
                    println!("p={p} point {} multiplicity {}", fmt_vec(v), r.multiplicity);
                    r.multiplicity
                }
                None => {
                    let r = stable_multiplicity(i, &polys, 1, 5, 1).unwrap();
                    println!("p={p} component {i} of dimension {} stable multiplicity {}", c.dim(), r.multiplicity);
                    r.multiplicity
                }
            };
            total += m;
        }
        println!("p={p} total {total} = p^2 - 1 = {}", p * p - 1);
    }
}
