//! Two copies of the tropical line meet in the whole line. Its stable
//! multiplicity is 1, its closure in the projective plane adds three
//! boundary points, and solving αx + βy + 1 = x + y + 1 = 0 exactly agrees.

use tropint::convex::Fan;
use tropint::intersect::{component_closure, components, stable_multiplicity};
use tropint::oracle::{linear_solve_trop, LiteralPolynomial, PAdic};
use tropint::rational::{Rat, fmt_rat, fmt_vec, qvec, rat};
use tropint::tropical::TropicalPolynomial;

fn main() {
    let line = TropicalPolynomial::new(2, [(vec![1, 0], rat(0)), (vec![0, 1], rat(0)), (vec![0, 0], rat(0))]).unwrap();
    let polys = [line.clone(), line];
    let r = stable_multiplicity(0, &polys, 42, 5, 1).unwrap();
    println!("stable multiplicity {} (seeds agree)", r.multiplicity);

    let plane = Fan::from_generators(
        2,
        &[
            vec![qvec(&[1, 0]), qvec(&[0, 1])],
            vec![qvec(&[0, 1]), qvec(&[-1, -1])],
            vec![qvec(&[-1, -1]), qvec(&[1, 0])],
        ],
    )
    .unwrap();
    let comp = &components(&polys).unwrap()[0];
    for x in component_closure(comp, &plane).unwrap().boundary_points() {
        println!("boundary point in the stratum of {:?}", x.stratum.rays().iter().map(|r| fmt_vec(r)).collect::<Vec<_>>());
    }

    let c = |q: Rat| PAdic::new(q, 3);
    let f1 = LiteralPolynomial::new(2, [(vec![1, 0], c(rat(1))), (vec![0, 1], c(rat(1))), (vec![0, 0], c(rat(1)))]).unwrap();
    for (alpha, beta) in [(rat(2), rat(2)), (rat(2), rat(5)), (rat(1), rat(2))] {
        let f2 = LiteralPolynomial::new(2, [(vec![1, 0], c(alpha.clone())), (vec![0, 1], c(beta.clone())), (vec![0, 0], c(rat(1)))]).unwrap();
        let (x, n) = linear_solve_trop(&f1, &f2, &plane).unwrap();
        println!(
            "alpha={} beta={}: {} solution, stratum rays {:?}, coset {:?}",
            fmt_rat(&alpha),
            fmt_rat(&beta),
            n,
            x.stratum.rays().iter().map(|r| fmt_vec(r)).collect::<Vec<_>>(),
            fmt_vec(&x.coset)
        );
    }
}
