//! Root counts of bivariate systems by valuation, via resultants.
//!
//! Eliminating `y` gives a polynomial whose roots are the `x`-coordinates of
//! the common zeros; its Newton polygon yields how many zeros have each
//! `val(x)`. Eliminating `x` does the same for `val(y)`. A third elimination
//! in `z = x·y^c` separates the candidate pairs, since `c` is chosen to make
//! `(a, b) ↦ a + c·b` injective on them. The three counts must agree.

use std::collections::BTreeMap;

use super::field::ValuedField;
use super::newton::np1d;
use super::LiteralPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::tropical::TropicalPolynomial;

/// `rows[i][j]` is the coefficient of `xⁱ yʲ`, exponents shifted to start
/// at zero.
struct Dense<F> {
    rows: Vec<Vec<F>>,
    zero: F,
}

impl<F: ValuedField> Dense<F> {
    fn from_terms(terms: &[(i64, i64, F)]) -> Self {
        let zero = terms[0].2.zero_like();
        let mx = terms.iter().map(|t| t.0).min().unwrap();
        let my = terms.iter().map(|t| t.1).min().unwrap();
        let dx = terms.iter().map(|t| t.0 - mx).max().unwrap() as usize;
        let dy = terms.iter().map(|t| t.1 - my).max().unwrap() as usize;
        let mut rows = vec![vec![zero.clone(); dy + 1]; dx + 1];
        for (i, j, c) in terms {
            let (a, b) = ((i - mx) as usize, (j - my) as usize);
            rows[a][b] = rows[a][b].add(c);
        }
        Dense { rows, zero }
    }

    fn deg_x(&self) -> usize {
        self.rows.len() - 1
    }

    fn deg_y(&self) -> usize {
        self.rows[0].len() - 1
    }

    /// Coefficients in `y` at `x = x0`.
    fn at_x(&self, x0: &F) -> Vec<F> {
        (0..=self.deg_y())
            .map(|j| {
                self.rows
                    .iter()
                    .rev()
                    .fold(self.zero.clone(), |acc, r| acc.mul(x0).add(&r[j]))
            })
            .collect()
    }
}

fn determinant<F: ValuedField>(mut m: Vec<Vec<F>>, one: &F) -> F {
    let n = m.len();
    let mut det = one.clone();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return one.zero_like();
        };
        if p != c {
            m.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&m[c][c]);
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].div(&m[c][c]);
            for k in c..n {
                let d = f.mul(&m[c][k]);
                m[r][k] = m[r][k].sub(&d);
            }
        }
    }
    det
}

/// Sylvester determinant of two polynomials given by coefficients from
/// degree 0 up, at their formal degrees.
fn sylvester<F: ValuedField>(a: &[F], b: &[F], one: &F) -> F {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return one.clone();
    }
    let zero = one.zero_like();
    let mut rows = Vec::with_capacity(size);
    for s in 0..n {
        let mut row = vec![zero.clone(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[s + i] = c.clone();
        }
        rows.push(row);
    }
    for s in 0..m {
        let mut row = vec![zero.clone(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[s + i] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows, one)
}

/// `Res_y(f, g)` as coefficients in `x`, by evaluation at `x = 0, 1, …` and
/// Newton interpolation.
fn resultant_y<F: ValuedField>(f: &Dense<F>, g: &Dense<F>) -> Vec<F> {
    let one = f.zero.one_like();
    let bound = g.deg_y() * f.deg_x() + f.deg_y() * g.deg_x();
    let nodes: Vec<F> = (0..=bound).map(|i| one.from_int_like(i as i64)).collect();
    let vals: Vec<F> = nodes
        .iter()
        .map(|x0| sylvester(&f.at_x(x0), &g.at_x(x0), &one))
        .collect();
    interpolate(&nodes, vals, &one)
}

fn interpolate<F: ValuedField>(nodes: &[F], mut dd: Vec<F>, one: &F) -> Vec<F> {
    let n = nodes.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = nodes[i].sub(&nodes[i - level]);
            dd[i] = num.div(&den);
        }
    }
    // expand the Newton form from the innermost coefficient outward
    let zero = one.zero_like();
    let mut poly = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![zero.clone(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&nodes[i]));
        }
        next[0] = next[0].add(&dd[i]);
        poly = next;
    }
    poly
}

/// `(valuation, count)` of the nonzero roots of a univariate polynomial.
fn root_valuations<F: ValuedField>(coeffs: &[F]) -> Result<BTreeMap<Rat, u64>> {
    let terms: Vec<(Vec<i64>, Rat)> = coeffs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.valuation().map(|v| (vec![i as i64], v)))
        .collect();
    if terms.is_empty() {
        return Err(Error::NotFinite);
    }
    let trop = TropicalPolynomial::new(1, terms).expect("distinct exponents");
    let mut out = BTreeMap::new();
    for (v, c) in np1d(&trop)? {
        *out.entry(v).or_insert(0) += c;
    }
    Ok(out)
}

fn bivariate<F: ValuedField>(f: &LiteralPolynomial<F>, map: impl Fn(i64, i64) -> (i64, i64)) -> Result<Dense<F>> {
    if f.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: f.dim(),
        });
    }
    if f.is_zero() {
        return Err(Error::NotFinite);
    }
    let terms: Vec<(i64, i64, F)> = f
        .terms()
        .iter()
        .map(|(e, c)| {
            let (a, b) = map(e[0], e[1]);
            (a, b, c.clone())
        })
        .collect();
    Ok(Dense::from_terms(&terms))
}

/// Common torus zeros counted by valuation pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCounts {
    pub by_pair: BTreeMap<(Rat, Rat), u64>,
    pub separator: i64,
}

impl RootCounts {
    pub fn count(&self, v: &[Rat]) -> u64 {
        self.by_pair
            .get(&(v[0].clone(), v[1].clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.by_pair.values().sum()
    }
}

pub fn root_counts<F: ValuedField>(f1: &LiteralPolynomial<F>, f2: &LiteralPolynomial<F>) -> Result<RootCounts> {
    let rows = root_valuations(&resultant_y(
        &bivariate(f1, |i, j| (i, j))?,
        &bivariate(f2, |i, j| (i, j))?,
    ))?;
    let cols = root_valuations(&resultant_y(
        &bivariate(f1, |i, j| (j, i))?,
        &bivariate(f2, |i, j| (j, i))?,
    ))?;
    let total: u64 = rows.values().sum();
    if cols.values().sum::<u64>() != total {
        return Err(Error::PairingAmbiguous);
    }
    let separator = (1..=64i64)
        .find(|c| {
            let mut seen = std::collections::BTreeSet::new();
            rows.keys()
                .all(|a| cols.keys().all(|b| seen.insert(a + Rat::from_integer((*c).into()) * b)))
        })
        .ok_or(Error::PairingAmbiguous)?;
    let c = separator;
    let mixed = root_valuations(&resultant_y(
        &bivariate(f1, |i, j| (i, j - c * i))?,
        &bivariate(f2, |i, j| (i, j - c * i))?,
    ))?;
    let mut by_pair = BTreeMap::new();
    let mut row_sum: BTreeMap<Rat, u64> = BTreeMap::new();
    let mut col_sum: BTreeMap<Rat, u64> = BTreeMap::new();
    let mut used = 0;
    for a in rows.keys() {
        for b in cols.keys() {
            let key = a + Rat::from_integer(c.into()) * b;
            if let Some(&n) = mixed.get(&key) {
                by_pair.insert((a.clone(), b.clone()), n);
                *row_sum.entry(a.clone()).or_insert(0) += n;
                *col_sum.entry(b.clone()).or_insert(0) += n;
                used += n;
            }
        }
    }
    if used != mixed.values().sum::<u64>() || row_sum != rows || col_sum != cols {
        return Err(Error::PairingAmbiguous);
    }
    Ok(RootCounts { by_pair, separator })
}

/// The number of common zeros in the torus with coordinate valuations `v`,
/// with multiplicity.
pub fn resultant_count2<F: ValuedField>(f1: &LiteralPolynomial<F>, f2: &LiteralPolynomial<F>, v: &[Rat]) -> Result<u64> {
    if v.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: v.len(),
        });
    }
    Ok(root_counts(f1, f2)?.count(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::{PAdic, RationalFunction};
    use crate::rational::{rat, ratio};

    fn padic(terms: &[(&[i64], i64)], p: u64) -> LiteralPolynomial<PAdic> {
        LiteralPolynomial::new(
            2,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), PAdic::new(rat(*c), p))),
        )
        .unwrap()
    }

    #[test]
    fn explicit_single_zero() {
        let f1 = padic(&[(&[1, 0], 1), (&[0, 0], -3)], 3);
        let f2 = padic(&[(&[0, 1], 1), (&[0, 0], -9)], 3);
        assert_eq!(resultant_count2(&f1, &f2, &[rat(1), rat(2)]).unwrap(), 1);
        assert_eq!(resultant_count2(&f1, &f2, &[rat(0), rat(0)]).unwrap(), 0);
    }

    #[test]
    fn two_curve_example() {
        for p in [3i64, 5] {
            let f1 = padic(&[(&[1, 0], p), (&[p, 0], 1), (&[0, p], 1)], p as u64);
            // a unit 2 on x^p keeps every valuation; with coefficient 1 the
            // difference f1 − f2 = px − y leaves only p − 1 torus zeros
            let f2 = padic(&[(&[0, 1], 1), (&[p, 0], 2), (&[0, p], 1)], p as u64);
            let counts = root_counts(&f1, &f2).unwrap();
            let q = p - 1;
            assert_eq!(counts.count(&[ratio(1, q), ratio(p, q)]), (p - 1) as u64);
            assert_eq!(counts.count(&[rat(0), rat(0)]), (p * p - p) as u64);
            assert_eq!(counts.total(), (p * p - 1) as u64);
        }
    }

    #[test]
    fn literal_two_curve_system_is_degenerate() {
        let f1 = padic(&[(&[1, 0], 3), (&[3, 0], 1), (&[0, 3], 1)], 3);
        let f2 = padic(&[(&[0, 1], 1), (&[3, 0], 1), (&[0, 3], 1)], 3);
        let counts = root_counts(&f1, &f2).unwrap();
        assert_eq!(counts.total(), 2);
        assert_eq!(counts.count(&[rat(0), rat(0)]), 0);
    }

    #[test]
    fn common_factor_is_not_finite() {
        let f1 = padic(&[(&[1, 0], 1), (&[0, 1], 1)], 2);
        let f2 = padic(&[(&[2, 0], 1), (&[1, 1], 1)], 2);
        assert_eq!(resultant_count2(&f1, &f2, &[rat(0), rat(0)]), Err(Error::NotFinite));
    }

    #[test]
    fn parameter_coefficients() {
        // x = t, y = t³
        let t = RationalFunction::t();
        let one = t.one_like();
        let f1 = LiteralPolynomial::new(2, [(vec![1, 0], one.clone()), (vec![0, 0], t.neg())]).unwrap();
        let f2 = LiteralPolynomial::new(2, [(vec![0, 1], one), (vec![0, 0], t.pow(3).neg())]).unwrap();
        assert_eq!(resultant_count2(&f1, &f2, &[rat(1), rat(3)]).unwrap(), 1);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let one = PAdic::new(rat(1), 2);
        let nodes: Vec<PAdic> = (0..4).map(|i| one.from_int_like(i)).collect();
        // 2 − x + 3x³
        let vals: Vec<PAdic> = (0..4i64).map(|x| one.from_int_like(2 - x + 3 * x * x * x)).collect();
        let c: Vec<Rat> = interpolate(&nodes, vals, &one).into_iter().map(|c| c.value).collect();
        assert_eq!(c, vec![rat(2), rat(-1), rat(0), rat(3)]);
    }
}
