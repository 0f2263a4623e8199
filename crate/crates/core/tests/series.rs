//! Winning terms of truncated series on intervals, checked against an
//! exact sweep over all breakpoints.

mod common;

use std::collections::BTreeSet;

use rand::Rng;

use tropint::convex::Polyhedron;
use tropint::error::Error;
use tropint::rational::{qvec, rat, Rat};
use tropint::series::TruncatedSeries;

fn interval(a: i64, b: i64) -> Polyhedron {
    Polyhedron::polytope(1, &[qvec(&[a]), qvec(&[b])]).unwrap()
}

/// Exponents attaining the minimum somewhere on `[a, b]`. In one variable
/// the minimizing set only changes at pairwise ties, so the endpoints, the
/// ties and the midpoints between consecutive candidates see every winner.
fn sweep_winners(terms: &[(i64, Rat)], a: &Rat, b: &Rat) -> BTreeSet<i64> {
    let mut pts: BTreeSet<Rat> = [a.clone(), b.clone()].into();
    for (i, (e, w)) in terms.iter().enumerate() {
        for (f, x) in &terms[i + 1..] {
            if e != f {
                let v = (x - w) / rat(e - f);
                if &v >= a && &v <= b {
                    pts.insert(v);
                }
            }
        }
    }
    let sorted: Vec<Rat> = pts.into_iter().collect();
    let mut probes = sorted.clone();
    for w in sorted.windows(2) {
        probes.push((&w[0] + &w[1]) / rat(2));
    }
    let mut out = BTreeSet::new();
    for v in probes {
        let vals: Vec<Rat> = terms.iter().map(|(e, w)| w + &v * rat(*e)).collect();
        let m = vals.iter().min().unwrap().clone();
        for ((e, _), x) in terms.iter().zip(&vals) {
            if *x == m {
                out.insert(*e);
            }
        }
    }
    out
}

fn squares_series(domain: Polyhedron, count: i64, tail: i64) -> TruncatedSeries {
    TruncatedSeries::new(domain, (0..count).map(|k| (vec![k], rat(k * k))), rat(tail)).unwrap()
}

fn winners(s: &TruncatedSeries) -> BTreeSet<i64> {
    s.vertices_on_domain().unwrap().into_iter().map(|(e, _)| e[0]).collect()
}

#[test]
fn square_weights_on_the_positive_interval() {
    let terms: Vec<(i64, Rat)> = (0..5).map(|k| (k, rat(k * k))).collect();
    let oracle = sweep_winners(&terms, &rat(0), &rat(3));
    assert_eq!(oracle, BTreeSet::from([0]));
    assert_eq!(winners(&squares_series(interval(0, 3), 5, 10)), oracle);
}

#[test]
fn square_weights_on_the_negative_interval() {
    let terms: Vec<(i64, Rat)> = (0..5).map(|k| (k, rat(k * k))).collect();
    let oracle = sweep_winners(&terms, &rat(-3), &rat(0));
    assert_eq!(oracle, BTreeSet::from([0, 1, 2]));
    let s = squares_series(interval(-3, 0), 5, 10);
    assert_eq!(winners(&s), oracle);
    // every omitted term k ≥ 5 has k² − 3k ≥ 10 on the interval
    for k in 5..40i64 {
        assert!(k * k - 3 * k >= 10);
    }
    assert_eq!(s.min_weight().unwrap(), rat(-2));
    assert_eq!(s.stability_radius().unwrap(), rat(0));
    let laurent = s.restrict_to_laurent().unwrap();
    for v in [-3, -2, -1, 0] {
        assert_eq!(laurent.evaluate(&qvec(&[v])), s.evaluate(&qvec(&[v])));
    }
}

#[test]
fn insufficient_tail_bound_is_refused() {
    let s = squares_series(interval(-3, 0), 5, 0);
    assert_eq!(s.vertices_on_domain(), Err(Error::CertificateInsufficient));
    assert_eq!(s.stability_radius(), Err(Error::CertificateInsufficient));
}

#[test]
fn random_intervals_match_the_sweep() {
    let mut r = common::rng(21);
    for _ in 0..200 {
        let a = r.gen_range(-4..=3);
        let b = r.gen_range(a + 1..=4);
        let k = r.gen_range(1..=6);
        let mut terms: Vec<(i64, Rat)> = Vec::new();
        while terms.len() < k {
            let e = r.gen_range(-3..=4);
            if !terms.iter().any(|(x, _)| *x == e) {
                terms.push((e, rat(r.gen_range(-5..=5))));
            }
        }
        let s = TruncatedSeries::new(interval(a, b), terms.iter().map(|(e, w)| (vec![*e], w.clone())), rat(100)).unwrap();
        assert_eq!(winners(&s), sweep_winners(&terms, &rat(a), &rat(b)), "{terms:?} on [{a}, {b}]");
    }
}
