//! The classical Newton polygon of a univariate polynomial, and polynomials
//! with prescribed root valuations.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::field::{p_adic_order, PAdic, ValuedField};
use super::LiteralPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::tropical::TropicalPolynomial;

/// `(root valuation, number of roots)` per lower-hull edge of
/// `{(ν, w_ν)}`, from left to right. A monomial has no edges.
pub fn np1d(f: &TropicalPolynomial) -> Result<Vec<(Rat, u64)>> {
    if f.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: f.dim(),
        });
    }
    let pts: Vec<(i64, &Rat)> = f.terms().iter().map(|(e, w)| (e[0], w)).collect();
    let mut hull: Vec<(i64, &Rat)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // pop b unless it lies strictly below the chord a–p
            let lhs = (b.1 - a.1) * Rat::from_integer((p.0 - a.0).into());
            let rhs = (p.1 - a.1) * Rat::from_integer((b.0 - a.0).into());
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    Ok(hull
        .windows(2)
        .map(|w| {
            let len = w[1].0 - w[0].0;
            let slope = (w[1].1 - w[0].1) / Rat::from_integer(len.into());
            (-slope, len as u64)
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct KnownRootInstance {
    pub poly: LiteralPolynomial<PAdic>,
    /// The substitution `x ↦ x^k` used to realize fractional valuations.
    pub substitution: u64,
    /// `(valuation, count)` in the order `np1d` reports them.
    pub expected: Vec<(Rat, u64)>,
}

const MAX_DEGREE: u64 = 4096;

/// `Π (y − rᵢ)` with `val(rᵢ) = k·vᵢ`, then `y = x^k` with `k` the common
/// denominator, so the roots in `x` have valuations `vᵢ`, each `k` times.
/// The `j`-th root of a given valuation uses the `j`-th positive integer
/// prime to `p` as its unit part.
pub fn known_root_instance(valuations: &[Rat], prime: u64) -> Result<KnownRootInstance> {
    if prime < 2 || (2..prime).take_while(|d| d * d <= prime).any(|d| prime % d == 0) {
        return Err(Error::InvalidInput(format!("{prime} is not prime")));
    }
    let k = valuations
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let k = k.to_u64().filter(|k| k * valuations.len().max(1) as u64 <= MAX_DEGREE).ok_or_else(|| {
        Error::UnrealizableValuation(format!(
            "common denominator {k} exceeds the degree cap {MAX_DEGREE}"
        ))
    })?;
    let unit = PAdic::new(Rat::one(), prime);
    let p = PAdic::new(Rat::from_integer(prime.into()), prime);
    let mut used: BTreeMap<Rat, u64> = BTreeMap::new();
    let mut coeffs = vec![unit.clone()];
    for v in valuations {
        let j = used.entry(v.clone()).or_insert(0);
        *j += 1;
        let u = (1..).filter(|m| m % prime != 0).nth((*j - 1) as usize).unwrap();
        let e = (v * Rat::from_integer(k.into())).to_integer().to_i64().ok_or_else(|| {
            Error::UnrealizableValuation(format!("valuation {v} is too large"))
        })?;
        let pe = if e >= 0 {
            p.pow(e as u32)
        } else {
            unit.div(&p.pow((-e) as u32))
        };
        let root = pe.mul(&unit.from_int_like(u as i64));
        debug_assert_eq!(p_adic_order(root.value.numer(), prime) - p_adic_order(root.value.denom(), prime), e);
        // multiply by (y − root)
        let mut next = vec![unit.zero_like(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].sub(&c.mul(&root));
        }
        coeffs = next;
    }
    let poly = LiteralPolynomial::new(
        1,
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (vec![i as i64 * k as i64], c)),
    )?;
    let mut expected: Vec<(Rat, u64)> = used
        .iter()
        .map(|(v, c)| (v.clone(), c * k))
        .collect();
    expected.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(KnownRootInstance {
        poly,
        substitution: k,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn trop(terms: &[(i64, i64)]) -> TropicalPolynomial {
        TropicalPolynomial::new(1, terms.iter().map(|(e, w)| (vec![*e], rat(*w)))).unwrap()
    }

    #[test]
    fn two_roots_of_different_size() {
        // (x − p)(x − 1) = x² − (p+1)x + p
        assert_eq!(np1d(&trop(&[(0, 1), (1, 0), (2, 0)])).unwrap(), vec![(rat(1), 1), (rat(0), 1)]);
    }

    #[test]
    fn single_and_no_roots() {
        assert_eq!(np1d(&trop(&[(0, 1), (1, 0)])).unwrap(), vec![(rat(1), 1)]);
        assert_eq!(np1d(&trop(&[(2, 0)])).unwrap(), vec![]);
    }

    #[test]
    fn collinear_points_merge() {
        assert_eq!(np1d(&trop(&[(0, 2), (1, 1), (2, 0), (3, 5)])).unwrap()[0], (rat(1), 2));
    }

    #[test]
    fn constructed_roots() {
        let inst = known_root_instance(&[rat(1), rat(1), rat(0)], 3).unwrap();
        // (x − 3)(x − 6)(x − 1) = x³ − 10x² + 27x − 18
        let c: Vec<Rat> = inst.poly.terms().values().map(|c| c.value.clone()).collect();
        assert_eq!(c, vec![rat(-18), rat(27), rat(-10), rat(1)]);
        assert_eq!(inst.expected, vec![(rat(1), 2), (rat(0), 1)]);
        assert_eq!(np1d(&inst.poly.to_tropical().unwrap()).unwrap(), inst.expected);
    }

    #[test]
    fn trivial_instances() {
        let e = known_root_instance(&[], 3).unwrap();
        assert_eq!(e.poly.terms().len(), 1);
        assert!(e.expected.is_empty());
        let q = known_root_instance(&[rat(2)], 5).unwrap();
        assert_eq!(q.poly.coefficient(&[0]).unwrap().value, rat(-25));
        assert_eq!(q.expected, vec![(rat(2), 1)]);
    }

    #[test]
    fn fractional_valuations_use_substitution() {
        let inst = known_root_instance(&[ratio(1, 2), rat(-1)], 2).unwrap();
        assert_eq!(inst.substitution, 2);
        assert_eq!(inst.expected, vec![(ratio(1, 2), 2), (rat(-1), 2)]);
        assert_eq!(np1d(&inst.poly.to_tropical().unwrap()).unwrap(), inst.expected);
    }

    #[test]
    fn huge_denominators_are_refused() {
        assert!(matches!(
            known_root_instance(&[ratio(1, 9973)], 3),
            Err(Error::UnrealizableValuation(_))
        ));
    }
}
