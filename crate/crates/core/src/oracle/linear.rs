//! Exact solution of two affine equations `aᵢx + bᵢy + cᵢ = 0`, read in the
//! projective plane so that solutions at infinity land in boundary strata.

use super::field::ValuedField;
use super::LiteralPolynomial;
use crate::convex::{Cone, Fan};
use crate::error::{Error, Result};
use crate::extended::ExtendedPoint;
use crate::rational::{qvec, Rat};

fn affine_coefficients<F: ValuedField>(f: &LiteralPolynomial<F>, zero: &F) -> Result<[F; 3]> {
    if f.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: f.dim(),
        });
    }
    if let Some(e) = f
        .terms()
        .keys()
        .find(|e| !matches!(e.as_slice(), [1, 0] | [0, 1] | [0, 0]))
    {
        return Err(Error::InvalidInput(format!("exponent {e:?} is not affine-linear")));
    }
    let get = |e: &[i64]| f.coefficient(e).cloned().unwrap_or_else(|| zero.clone());
    Ok([get(&[1, 0]), get(&[0, 1]), get(&[0, 0])])
}

/// The tropicalization of the unique solution `[X:Y:Z]` in the projective
/// plane, as a point of `N_R(Δ)`, together with its count. Coordinates that
/// vanish send the point to the stratum of `e₁` (`X = 0`), `e₂` (`Y = 0`)
/// or `−e₁−e₂` (`Z = 0`), and the corresponding cone must lie in `Δ`.
pub fn linear_solve_trop<F: ValuedField>(
    f1: &LiteralPolynomial<F>,
    f2: &LiteralPolynomial<F>,
    fan: &Fan,
) -> Result<(ExtendedPoint, u64)> {
    let seed = f1
        .terms()
        .values()
        .chain(f2.terms().values())
        .next()
        .ok_or(Error::DegenerateSystem)?;
    let zero = seed.zero_like();
    let [a1, b1, c1] = affine_coefficients(f1, &zero)?;
    let [a2, b2, c2] = affine_coefficients(f2, &zero)?;
    let x = b1.mul(&c2).sub(&c1.mul(&b2));
    let y = c1.mul(&a2).sub(&a1.mul(&c2));
    let z = a1.mul(&b2).sub(&b1.mul(&a2));
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    let (vx, vy, vz) = (x.valuation(), y.valuation(), z.valuation());
    let mut gens = Vec::new();
    if vx.is_none() {
        gens.push(qvec(&[1, 0]));
    }
    if vy.is_none() {
        gens.push(qvec(&[0, 1]));
    }
    if vz.is_none() {
        gens.push(qvec(&[-1, -1]));
    }
    let shift = vz.clone().unwrap_or_else(|| Rat::from_integer(0.into()));
    let coord = |v: Option<Rat>| v.map(|v| v - &shift).unwrap_or_else(|| Rat::from_integer(0.into()));
    let rep = vec![coord(vx), coord(vy)];
    let tau = Cone::from_generators(2, &gens)?;
    if !fan.contains_cone(&tau) {
        return Err(Error::StratumNotInFan);
    }
    Ok((ExtendedPoint::from_representative(tau, &rep), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::PAdic;
    use crate::rational::rat;

    fn plane_fan() -> Fan {
        Fan::from_generators(
            2,
            &[
                vec![qvec(&[1, 0]), qvec(&[0, 1])],
                vec![qvec(&[0, 1]), qvec(&[-1, -1])],
                vec![qvec(&[-1, -1]), qvec(&[1, 0])],
            ],
        )
        .unwrap()
    }

    fn system(alpha: Rat, beta: Rat) -> (LiteralPolynomial<PAdic>, LiteralPolynomial<PAdic>) {
        let c = |q: Rat| PAdic::new(q, 3);
        let f1 = LiteralPolynomial::new(2, [(vec![1, 0], c(rat(1))), (vec![0, 1], c(rat(1))), (vec![0, 0], c(rat(1)))]).unwrap();
        let f2 = LiteralPolynomial::new(2, [(vec![1, 0], c(alpha)), (vec![0, 1], c(beta)), (vec![0, 0], c(rat(1)))]).unwrap();
        (f1, f2)
    }

    #[test]
    fn parallel_lines_meet_at_infinity() {
        let (f1, f2) = system(rat(2), rat(2));
        let (pt, n) = linear_solve_trop(&f1, &f2, &plane_fan()).unwrap();
        assert_eq!(n, 1);
        assert_eq!(pt.stratum, Cone::from_generators(2, &[qvec(&[-1, -1])]).unwrap());
        assert_eq!(pt.coset, vec![rat(0)]);
    }

    #[test]
    fn identical_lines_are_degenerate() {
        let (f1, f2) = system(rat(1), rat(1));
        assert_eq!(linear_solve_trop(&f1, &f2, &plane_fan()), Err(Error::DegenerateSystem));
    }

    #[test]
    fn generic_solution_is_finite() {
        // α = 2, β = 5: ξ = (β−1)/(α−β) = −4/3, η = (α−1)/(β−α) = 1/3
        let (f1, f2) = system(rat(2), rat(5));
        let (pt, _) = linear_solve_trop(&f1, &f2, &plane_fan()).unwrap();
        assert!(pt.is_finite());
        assert_eq!(pt.coset, vec![rat(-1), rat(-1)]);
    }

    #[test]
    fn missing_cone_is_reported() {
        let (f1, f2) = system(rat(2), rat(2));
        let quadrant = Fan::from_generators(2, &[vec![qvec(&[1, 0]), qvec(&[0, 1])]]).unwrap();
        assert_eq!(linear_solve_trop(&f1, &f2, &quadrant), Err(Error::StratumNotInFan));
    }
}
