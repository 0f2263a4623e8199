use tropint::convex::Polyhedron;
use tropint::rational::{qvec, rat};
use tropint::tropical::TropicalPolynomial;

fn bilinear(lambda: i64) -> TropicalPolynomial {
    TropicalPolynomial::new(
        2,
        [(vec![0, 0], rat(0)), (vec![1, 0], rat(0)), (vec![0, 1], rat(0)), (vec![1, 1], rat(lambda))],
    )
    .unwrap()
}

#[test]
fn bilinear_curve_has_one_bounded_edge() {
    let h = bilinear(2).hypersurface();
    let vertices: Vec<&Polyhedron> = h.cells().iter().filter(|c| c.dim() == 0).collect();
    assert_eq!(vertices, vec![&Polyhedron::point(qvec(&[-2, -2])), &Polyhedron::point(qvec(&[0, 0]))]);
    let bounded: Vec<&Polyhedron> = h.cells().iter().filter(|c| c.dim() == 1 && c.is_bounded()).collect();
    let edge = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[-2, -2])]).unwrap();
    assert_eq!(bounded, vec![&edge]);
    let dual = h.dual_of(&edge).unwrap();
    assert_eq!(dual, &Polyhedron::polytope(2, &[qvec(&[1, 0]), qvec(&[0, 1])]).unwrap());
    assert_eq!(h.cells().iter().filter(|c| c.dim() == 1).count(), 5);
}

#[test]
fn bilinear_curve_degenerates_at_zero_weight() {
    let h = bilinear(0).hypersurface();
    assert_eq!(h.cells().iter().filter(|c| c.dim() == 0).count(), 1);
    assert_eq!(h.cells().iter().filter(|c| c.dim() == 1).count(), 4);
    let square = Polyhedron::polytope(2, &[qvec(&[0, 0]), qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1])]).unwrap();
    assert_eq!(h.dual_cells[0], square);
}
