//! Integer lattice helpers: saturated kernel bases and Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{QVec, Rat};

pub type ZVec = Vec<BigInt>;

/// Clears denominators row by row.
pub fn integral_rows(rows: &[QVec]) -> Vec<ZVec> {
    rows.iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect()
}

pub fn to_q(v: &[BigInt]) -> QVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// A basis of the saturated lattice `{x ∈ Zⁿ : rows · x = 0}` in Hermite
/// normal form.
pub fn kernel_basis(rows: &[QVec], n: usize) -> Vec<ZVec> {
    let a = integral_rows(rows);
    // columns of u, stored as vectors of length n
    let mut cols: Vec<ZVec> = (0..n)
        .map(|j| {
            let mut c = vec![BigInt::zero(); n];
            c[j] = BigInt::one();
            c
        })
        .collect();
    let mut start = 0;
    for row in &a {
        if start == n {
            break;
        }
        let val = |c: &ZVec| -> BigInt { row.iter().zip(c).map(|(x, y)| x * y).sum() };
        loop {
            let vals: Vec<BigInt> = cols[start..].iter().map(val).collect();
            let nz: Vec<usize> = (0..vals.len()).filter(|&i| !vals[i].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    cols.swap(start, start + i);
                    start += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| vals[i].abs()).unwrap();
            for &i in &nz {
                if i == p {
                    continue;
                }
                let q = vals[i].div_floor(&vals[p]);
                let pc = cols[start + p].clone();
                for (x, y) in cols[start + i].iter_mut().zip(&pc) {
                    *x -= &q * y;
                }
            }
        }
    }
    hermite_normal_form(&cols[start..])
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// form with positive pivots and entries above each pivot reduced modulo it.
pub fn hermite_normal_form(rows: &[ZVec]) -> Vec<ZVec> {
    let mut m: Vec<ZVec> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            if nz.len() == 1 {
                break;
            }
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pr = m[r].clone();
        for i in 0..r {
            let q = m[i][c].div_floor(&pr[c]);
            if !q.is_zero() {
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    fn z(v: &[i64]) -> ZVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn diagonal_kernel() {
        assert_eq!(kernel_basis(&[qvec(&[-1, -1])], 2), vec![z(&[1, -1])]);
        assert_eq!(kernel_basis(&[qvec(&[1, 1])], 2), vec![z(&[1, -1])]);
    }

    #[test]
    fn empty_rows_give_identity() {
        assert_eq!(kernel_basis(&[], 3), vec![z(&[1, 0, 0]), z(&[0, 1, 0]), z(&[0, 0, 1])]);
    }

    #[test]
    fn saturation() {
        // kernel of (2, 4) is spanned by (2,-1), which is primitive
        assert_eq!(kernel_basis(&[qvec(&[2, 4])], 2), vec![z(&[2, -1])]);
        // kernel of (1,1,1) has a unimodular basis
        let k = kernel_basis(&[qvec(&[1, 1, 1])], 3);
        assert_eq!(k, vec![z(&[1, 0, -1]), z(&[0, 1, -1])]);
    }

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_normal_form(&[z(&[2, 3]), z(&[1, 1])]);
        let b = hermite_normal_form(&[z(&[3, 4]), z(&[1, 1])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![z(&[1, 0]), z(&[0, 1])]);
    }
}
