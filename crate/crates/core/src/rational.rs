//! Exact rational scalars and the small amount of vector algebra shared by
//! every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type QVec = Vec<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn qvec(xs: &[i64]) -> QVec {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn zero_vec(n: usize) -> QVec {
    vec![Rat::zero(); n]
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_i64(a: &[i64], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, _)| **x != 0)
        .fold(Rat::zero(), |acc, (x, y)| acc + y * BigInt::from(*x))
}

pub fn add(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> QVec {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rat]) -> QVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn from_i64s(a: &[i64]) -> QVec {
    a.iter().map(|&x| rat(x)).collect()
}

pub fn is_integral(a: &[Rat]) -> bool {
    a.iter().all(|x| x.is_integer())
}

/// Scales a nonzero vector to the unique positive multiple that is a
/// primitive integer vector. The zero vector is returned unchanged.
pub fn primitive(a: &[Rat]) -> QVec {
    if is_zero_vec(a) {
        return a.to_vec();
    }
    let mut l = BigInt::one();
    for x in a {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|x| (x * &l).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    ints.into_iter().map(|x| Rat::from_integer(x / &g)).collect()
}

/// Scales so the first nonzero entry is positive (keeps magnitude).
pub fn orient_positive(a: &[Rat]) -> QVec {
    match a.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(a),
        _ => a.to_vec(),
    }
}

pub fn to_i64(x: &Rat) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

pub fn to_i64_vec(a: &[Rat]) -> Option<Vec<i64>> {
    a.iter().map(to_i64).collect()
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `(a,b,…)` with entries as in [`fmt_rat`].
pub fn fmt_vec(v: &[Rat]) -> String {
    format!("({})", v.iter().map(fmt_rat).collect::<Vec<_>>().join(","))
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Reduced row echelon form, in place; returns pivot columns.
pub fn rref(rows: &mut Vec<QVec>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[QVec]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Rank of the affine hull of a point set (−1 encoded as `None` for the
/// empty set).
pub fn affine_rank(points: &[QVec]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<QVec> = rest.iter().map(|p| sub(p, first)).collect();
    Some(rank(&diffs))
}

/// Exact determinant by Gaussian elimination over Q.
pub fn det(m: &[QVec]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

/// Solves the square system `m x = b`; `None` when singular.
pub fn solve(m: &[QVec], b: &[Rat]) -> Option<QVec> {
    let n = m.len();
    let mut aug: Vec<QVec> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Basis of the rational null space `{x : rows · x = 0}`.
pub fn null_space(rows: &[QVec], n: usize) -> Vec<QVec> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(n);
            v[f] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(2, 3), ratio(-4, 3), rat(0)];
        assert_eq!(primitive(&v), qvec(&[1, -2, 0]));
        assert_eq!(primitive(&qvec(&[0, 0])), qvec(&[0, 0]));
    }

    #[test]
    fn det_and_solve() {
        let m = vec![qvec(&[2, 1]), qvec(&[1, 3])];
        assert_eq!(det(&m), rat(5));
        assert_eq!(solve(&m, &qvec(&[3, 4])), Some(vec![rat(1), rat(1)]));
        assert_eq!(solve(&[qvec(&[1, 1]), qvec(&[2, 2])], &qvec(&[1, 2])), None);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat(" -3/6 "), Some(ratio(-1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(fmt_rat(&ratio(6, 3)), "2");
        assert_eq!(fmt_rat(&ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn null_space_dims() {
        let ns = null_space(&[qvec(&[1, 1, 0])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&qvec(&[1, 1, 0]), v).is_zero());
        }
    }
}
