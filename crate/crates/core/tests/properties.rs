mod common;

use proptest::prelude::*;

use tropint::convex::{mixed_volume, Cone, Polyhedron};
use tropint::extended::{ExtendedPoint, Quotient};
use tropint::intersect::{components, point_multiplicity};
use tropint::oracle::RationalFunction;
use tropint::oracle::ValuedField;
use tropint::rational::{qvec, rat, ratio, QVec};
use tropint::tropical::TropicalPolynomial;

fn poly2() -> impl Strategy<Value = TropicalPolynomial> {
    prop::collection::btree_map((0i64..=3, 0i64..=3), -4i64..=4, 2..=6).prop_map(|m| {
        TropicalPolynomial::new(2, m.into_iter().map(|((a, b), w)| (vec![a, b], rat(w)))).unwrap()
    })
}

fn point2() -> impl Strategy<Value = QVec> {
    ((-12i64..=12, 1i64..=3), (-12i64..=12, 1i64..=3)).prop_map(|((a, da), (b, db))| vec![ratio(a, da), ratio(b, db)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hypersurface_support_is_the_tie_locus(f in poly2(), v in point2()) {
        let h = f.hypersurface();
        prop_assert_eq!(h.support_contains(&v), f.in_hypersurface(&v));
    }

    #[test]
    fn translating_weights_translates_the_hypersurface(f in poly2(), t in point2()) {
        let moved = f.translate(&t).hypersurface();
        prop_assert_eq!(moved.complex, f.hypersurface().complex.translate(&t));
    }

    #[test]
    fn intersection_points_move_with_the_system(f in poly2(), g in poly2(), t in point2()) {
        let polys = [f.clone(), g.clone()];
        let comps = components(&polys).unwrap();
        prop_assume!(comps.iter().all(|c| c.dim() == 0));
        let moved = [f.translate(&t), g.translate(&t)];
        for c in comps {
            let v = c.as_point().unwrap().clone();
            let w: QVec = v.iter().zip(&t).map(|(a, b)| a + b).collect();
            let m = point_multiplicity(&polys, &ExtendedPoint::finite(v)).unwrap().multiplicity;
            let n = point_multiplicity(&moved, &ExtendedPoint::finite(w)).unwrap().multiplicity;
            prop_assert_eq!(m, n);
        }
    }

    #[test]
    fn mixed_volumes_of_lattice_polygons_are_integers(
        a in prop::collection::vec((-3i64..=3, -3i64..=3), 1..5),
        b in prop::collection::vec((-3i64..=3, -3i64..=3), 1..5),
    ) {
        let p = Polyhedron::polytope(2, &a.iter().map(|(x, y)| qvec(&[*x, *y])).collect::<Vec<_>>()).unwrap();
        let q = Polyhedron::polytope(2, &b.iter().map(|(x, y)| qvec(&[*x, *y])).collect::<Vec<_>>()).unwrap();
        let mv = mixed_volume(&[p, q]).unwrap();
        prop_assert!(mv.is_integer() && mv >= rat(0));
    }

    #[test]
    fn quotient_lift_is_a_section(r in (-3i64..=3, -3i64..=3, -3i64..=3), c in (-5i64..=5, -5i64..=5)) {
        prop_assume!(r != (0, 0, 0));
        let tau = Cone::from_generators(3, &[qvec(&[r.0, r.1, r.2])]).unwrap();
        let q = Quotient::new(&tau);
        let coset = qvec(&[c.0, c.1]);
        prop_assert_eq!(q.project(&q.lift(&coset)), coset);
    }

    #[test]
    fn rational_functions_print_and_parse_back(n in prop::collection::vec(-4i64..=4, 1..4), d in prop::collection::vec(-4i64..=4, 1..4)) {
        let poly = |c: &[i64]| tropint::oracle::QPoly::new(c.iter().map(|x| rat(*x)).collect());
        let den = poly(&d);
        prop_assume!(!den.is_zero());
        let f = RationalFunction::new(poly(&n), den);
        let back = RationalFunction::parse(&f.to_string()).unwrap();
        prop_assert_eq!(back.valuation(), f.valuation());
        prop_assert_eq!(back, f);
    }
}

#[test]
fn support_comparison_detects_differences() {
    let seg = |a: &[i64], b: &[i64]| Polyhedron::polytope(2, &[qvec(a), qvec(b)]).unwrap();
    let whole = [seg(&[0, 0], &[2, 0])];
    let halves = [seg(&[0, 0], &[1, 0]), seg(&[1, 0], &[2, 0])];
    assert!(common::supports_equal(&whole, &halves));
    assert!(!common::supports_equal(&whole, &halves[..1]));
    let square = [Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap()];
    let lower = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[1, 1])]).unwrap();
    let upper = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap();
    assert!(common::supports_equal(&square, &[lower.clone(), upper]));
    assert!(!common::supports_equal(&square, &[lower]));
    let ray = Polyhedron::from_vrep(2, &[qvec(&[0, 0])], &[qvec(&[1, 0])], &[]).unwrap();
    let split = [seg(&[0, 0], &[3, 0]), Polyhedron::from_vrep(2, &[qvec(&[3, 0])], &[qvec(&[1, 0])], &[]).unwrap()];
    assert!(common::supports_equal(&[ray.clone()], &split));
    assert!(!common::supports_equal(&[ray], &split[..1]));
}
