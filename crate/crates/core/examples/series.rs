//! The series Σ p^{k²} x^k truncated at k ≤ 4 on two intervals: the winning
//! terms, the effective Laurent polynomial and the stability threshold.

use tropint::convex::Polyhedron;
use tropint::rational::{fmt_rat, qvec, rat};
use tropint::series::TruncatedSeries;

fn main() {
    for (a, b, tail) in [(0, 3, 25), (-3, 0, 10)] {
        let domain = Polyhedron::polytope(1, &[qvec(&[a]), qvec(&[b])]).unwrap();
        let s = TruncatedSeries::new(domain, (0..=4).map(|k| (vec![k], rat(k * k))), rat(tail)).unwrap();
        let winners: Vec<i64> = s.vertices_on_domain().unwrap().iter().map(|(e, _)| e[0]).collect();
        println!(
            "P=[{a},{b}] T={tail}: winning exponents {winners:?}, min weight {}, stability threshold {}",
            fmt_rat(&s.min_weight().unwrap()),
            fmt_rat(&s.stability_radius().unwrap())
        );
        let f = s.restrict_to_laurent().unwrap();
        for c in f.hypersurface().cells() {
            println!("  tropical zero at {}", fmt_rat(&c.points()[0][0]));
        }
    }
}
