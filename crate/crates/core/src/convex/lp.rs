//! Exact rational linear programming: a dense two-phase tableau simplex
//! with Bland's anti-cycling rule. This is the single feasibility kernel
//! used throughout the crate.

use num_traits::{One, Signed, Zero};

use crate::rational::{dot, zero_vec, QVec, Rat};

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { point: QVec, value: Rat },
    Unbounded,
    Infeasible,
}

/// `{x ∈ Qⁿ : ⟨a,x⟩ ≤ b for (a,b) in le, ⟨a,x⟩ = b for (a,b) in eq}` with
/// free variables.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub dim: usize,
    pub le: Vec<(QVec, Rat)>,
    pub eq: Vec<(QVec, Rat)>,
}

impl LinearProgram {
    pub fn new(dim: usize) -> Self {
        LinearProgram {
            dim,
            le: Vec::new(),
            eq: Vec::new(),
        }
    }

    pub fn leq(mut self, a: QVec, b: Rat) -> Self {
        self.le.push((a, b));
        self
    }

    pub fn equal(mut self, a: QVec, b: Rat) -> Self {
        self.eq.push((a, b));
        self
    }

    pub fn feasible_point(&self) -> Option<QVec> {
        match self.maximize(&zero_vec(self.dim)) {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible_point().is_some()
    }

    pub fn maximize(&self, c: &[Rat]) -> LpOutcome {
        assert_eq!(c.len(), self.dim);
        let n = self.dim;
        let rows: Vec<(&QVec, &Rat, bool)> = self
            .le
            .iter()
            .map(|(a, b)| (a, b, true))
            .chain(self.eq.iter().map(|(a, b)| (a, b, false)))
            .collect();
        let m = rows.len();
        if m == 0 {
            return if c.iter().all(Zero::is_zero) {
                LpOutcome::Optimal {
                    point: zero_vec(n),
                    value: Rat::zero(),
                }
            } else {
                LpOutcome::Unbounded
            };
        }
        let n_slack = self.le.len();
        // columns: x+ (n), x- (n), slacks, artificials, rhs
        let n_struct = 2 * n + n_slack;
        let ncols = n_struct + m;
        let mut t: Vec<QVec> = Vec::with_capacity(m);
        let mut slack = 0;
        for (i, (a, b, is_le)) in rows.iter().enumerate() {
            let mut row = zero_vec(ncols + 1);
            for j in 0..n {
                row[j] = a[j].clone();
                row[n + j] = -a[j].clone();
            }
            if *is_le {
                row[2 * n + slack] = Rat::one();
                slack += 1;
            }
            row[ncols] = (*b).clone();
            if row[ncols].is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row[n_struct + i] = Rat::one();
            t.push(row);
        }
        let mut basis: Vec<usize> = (n_struct..ncols).collect();

        // phase 1: maximize -sum(artificials)
        let mut z = zero_vec(ncols + 1);
        for row in &t {
            for j in 0..n_struct {
                z[j] -= &row[j];
            }
            z[ncols] -= &row[ncols];
        }
        if run_simplex(&mut t, &mut z, &mut basis, ncols, usize::MAX).is_err() {
            unreachable!("phase one objective is bounded");
        }
        if !z[ncols].is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive artificials out of the basis
        let mut i = 0;
        while i < t.len() {
            if basis[i] >= n_struct {
                if let Some(j) = (0..n_struct).find(|&j| !t[i][j].is_zero()) {
                    pivot(&mut t, &mut z, &mut basis, i, j, ncols);
                    i += 1;
                } else {
                    t.remove(i);
                    basis.remove(i);
                }
            } else {
                i += 1;
            }
        }
        // drop artificial columns
        for row in t.iter_mut() {
            let rhs = row[ncols].clone();
            row.truncate(n_struct);
            row.push(rhs);
        }
        let mut cost = zero_vec(n_struct);
        for j in 0..n {
            cost[j] = c[j].clone();
            cost[n + j] = -c[j].clone();
        }
        let mut z = zero_vec(n_struct + 1);
        for j in 0..=n_struct {
            let mut s = Rat::zero();
            for (r, &bv) in basis.iter().enumerate() {
                if !cost[bv].is_zero() {
                    s += &cost[bv] * &t[r][j];
                }
            }
            if j < n_struct {
                s -= &cost[j];
            }
            z[j] = s;
        }
        if run_simplex(&mut t, &mut z, &mut basis, n_struct, n_struct).is_err() {
            return LpOutcome::Unbounded;
        }
        let mut x = zero_vec(2 * n + n_slack);
        for (r, &bv) in basis.iter().enumerate() {
            x[bv] = t[r][n_struct].clone();
        }
        let point: QVec = (0..n).map(|j| &x[j] - &x[n + j]).collect();
        let value = dot(c, &point);
        debug_assert_eq!(value, z[n_struct]);
        LpOutcome::Optimal { point, value }
    }
}

struct Unbounded;

/// Runs Bland's-rule simplex on a tableau whose objective row `z` holds
/// reduced costs (entering candidates are negative entries). Only columns
/// below `allowed` may enter.
fn run_simplex(
    t: &mut [QVec],
    z: &mut QVec,
    basis: &mut [usize],
    ncols: usize,
    allowed: usize,
) -> Result<(), Unbounded> {
    loop {
        let Some(enter) = (0..ncols.min(allowed)).find(|&j| z[j].is_negative()) else {
            return Ok(());
        };
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[ncols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((li, _)) = leave else {
            return Err(Unbounded);
        };
        pivot(t, z, basis, li, enter, ncols);
    }
}

fn pivot(t: &mut [QVec], z: &mut QVec, basis: &mut [usize], r: usize, c: usize, ncols: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for j in 0..=ncols {
                if !prow[j].is_zero() {
                    row[j] -= &f * &prow[j];
                }
            }
        }
    }
    if !z[c].is_zero() {
        let f = z[c].clone();
        for j in 0..=ncols {
            if !prow[j].is_zero() {
                z[j] -= &f * &prow[j];
            }
        }
    }
    basis[r] = c;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat, ratio};

    #[test]
    fn bounded_optimum() {
        // max x + y  s.t. x <= 1, y <= 2, x + 2y <= 4
        let lp = LinearProgram::new(2)
            .leq(qvec(&[1, 0]), rat(1))
            .leq(qvec(&[0, 1]), rat(2))
            .leq(qvec(&[1, 2]), rat(4));
        match lp.maximize(&qvec(&[1, 1])) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, ratio(5, 2));
                assert_eq!(point, vec![rat(1), ratio(3, 2)]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_and_infeasible() {
        let lp = LinearProgram::new(2).leq(qvec(&[-1, 0]), rat(0));
        assert_eq!(lp.maximize(&qvec(&[1, 0])), LpOutcome::Unbounded);
        let bad = LinearProgram::new(1)
            .leq(qvec(&[1]), rat(0))
            .leq(qvec(&[-1]), rat(-1));
        assert_eq!(bad.maximize(&qvec(&[0])), LpOutcome::Infeasible);
    }

    #[test]
    fn equalities_and_negative_rhs() {
        // x + y = 3, x >= 2 (i.e. -x <= -2), maximize -y
        let lp = LinearProgram::new(2)
            .equal(qvec(&[1, 1]), rat(3))
            .leq(qvec(&[-1, 0]), rat(-2))
            .leq(qvec(&[1, 0]), rat(5));
        match lp.maximize(&qvec(&[0, -1])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_cycling_instance_terminates() {
        // Beale's classic cycling example (as a maximization).
        let lp = LinearProgram::new(4)
            .leq(vec![ratio(1, 4), rat(-60), ratio(-1, 25), rat(9)], rat(0))
            .leq(vec![ratio(1, 2), rat(-90), ratio(-1, 50), rat(3)], rat(0))
            .leq(qvec(&[0, 0, 1, 0]), rat(1))
            .leq(qvec(&[-1, 0, 0, 0]), rat(0))
            .leq(qvec(&[0, -1, 0, 0]), rat(0))
            .leq(qvec(&[0, 0, -1, 0]), rat(0))
            .leq(qvec(&[0, 0, 0, -1]), rat(0));
        let c = vec![ratio(3, 4), rat(-150), ratio(1, 50), rat(-6)];
        match lp.maximize(&c) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, ratio(1, 20)),
            other => panic!("{other:?}"),
        }
    }
}
