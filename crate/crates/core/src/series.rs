//! Truncated convergent power series on a pointed polyhedral domain.
//!
//! A series is a finite set of retained terms plus a scalar tail bound `T`:
//! every omitted term is promised to have weight at least `T` everywhere on
//! the domain. All queries first check that the retained terms alone stay
//! strictly below `T` on the whole domain, so omitted terms can never reach
//! the minimum.

use std::collections::BTreeMap;

use crate::convex::lp::{LinearProgram, LpOutcome};
use crate::convex::Polyhedron;
use crate::error::{Error, Result};
use crate::rational::{dot_i64, from_i64s, QVec, Rat};
use crate::tropical::{Exponent, TropicalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    domain: Polyhedron,
    terms: BTreeMap<Exponent, Rat>,
    tail_bound: Rat,
}

impl TruncatedSeries {
    /// Every exponent must pair nonnegatively with the recession rays of the
    /// domain, so each term is bounded below there.
    pub fn new(
        domain: Polyhedron,
        terms: impl IntoIterator<Item = (Exponent, Rat)>,
        tail_bound: Rat,
    ) -> Result<Self> {
        if !domain.is_pointed() {
            return Err(Error::NotPointed);
        }
        let n = domain.ambient_dim();
        let mut map = BTreeMap::new();
        for (e, w) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
            if let Some(r) = domain.rays().iter().find(|r| dot_i64(&e, r) < Rat::from_integer(0.into())) {
                return Err(Error::InvalidInput(format!(
                    "exponent {e:?} is unbounded below along the domain direction {r:?}"
                )));
            }
            if map.insert(e.clone(), w).is_some() {
                return Err(Error::InvalidInput(format!("repeated exponent {e:?}")));
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidInput("a series needs a retained term".into()));
        }
        Ok(TruncatedSeries {
            domain,
            terms: map,
            tail_bound,
        })
    }

    pub fn domain(&self) -> &Polyhedron {
        &self.domain
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rat> {
        &self.terms
    }

    pub fn tail_bound(&self) -> &Rat {
        &self.tail_bound
    }

    pub fn dim(&self) -> usize {
        self.domain.ambient_dim()
    }

    /// The same series with one more retained term.
    pub fn with_term(&self, e: Exponent, w: Rat) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.insert(e, w);
        TruncatedSeries::new(self.domain.clone(), terms, self.tail_bound.clone())
    }

    /// Weight of the retained part at a point.
    pub fn evaluate(&self, v: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, w)| w + dot_i64(e, v))
            .min()
            .expect("nonempty")
    }

    /// `sup_{v ∈ P} min_ν (w_ν + ⟨ν,v⟩)` over the retained terms, `None`
    /// when unbounded.
    pub fn retained_sup(&self) -> Option<Rat> {
        let n = self.dim();
        let mut lp = LinearProgram::new(n + 1);
        for (u, a) in self.domain.halfspaces() {
            let mut row = u.clone();
            row.push(Rat::from_integer(0.into()));
            lp = lp.leq(row, a);
        }
        for (e, w) in &self.terms {
            // t − ⟨ν,v⟩ ≤ w_ν
            let mut row: QVec = from_i64s(e).into_iter().map(|x| -x).collect();
            row.push(Rat::from_integer(1.into()));
            lp = lp.leq(row, w.clone());
        }
        let mut c = vec![Rat::from_integer(0.into()); n + 1];
        c[n] = Rat::from_integer(1.into());
        match lp.maximize(&c) {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Unbounded => None,
            LpOutcome::Infeasible => unreachable!("domain is nonempty"),
        }
    }

    fn certified_sup(&self) -> Result<Rat> {
        match self.retained_sup() {
            Some(s) if s < self.tail_bound => Ok(s),
            _ => Err(Error::CertificateInsufficient),
        }
    }

    /// The retained terms that attain the minimum somewhere on the domain.
    pub fn vertices_on_domain(&self) -> Result<Vec<(Exponent, Rat)>> {
        self.certified_sup()?;
        Ok(self
            .terms
            .iter()
            .filter(|(e, w)| self.wins_somewhere(e, w))
            .map(|(e, w)| (e.clone(), w.clone()))
            .collect())
    }

    fn wins_somewhere(&self, e: &Exponent, w: &Rat) -> bool {
        let n = self.dim();
        let mut lp = LinearProgram::new(n);
        for (u, a) in self.domain.halfspaces() {
            lp = lp.leq(u, a);
        }
        for (f, x) in &self.terms {
            if f == e {
                continue;
            }
            // w_e + ⟨e,v⟩ ≤ w_f + ⟨f,v⟩
            let row = e.iter().zip(f).map(|(a, b)| Rat::from_integer((a - b).into())).collect();
            lp = lp.leq(row, x - w);
        }
        lp.is_feasible()
    }

    /// The Laurent polynomial with exactly the winning terms; it has the same
    /// tropical hypersurface as the series on the domain.
    pub fn restrict_to_laurent(&self) -> Result<TropicalPolynomial> {
        TropicalPolynomial::new(self.dim(), self.vertices_on_domain()?)
    }

    /// `min_{v ∈ P}` of the weight, attained at a vertex of the domain.
    pub fn min_weight(&self) -> Result<Rat> {
        let m = self
            .domain
            .vertices()?
            .iter()
            .map(|v| self.evaluate(v))
            .min()
            .expect("pointed polyhedra have a vertex");
        if m < self.tail_bound {
            Ok(m)
        } else {
            Err(Error::CertificateInsufficient)
        }
    }

    /// A threshold `δ`: adding any series whose terms all have weight
    /// strictly above `δ` on the whole domain leaves every minimizing set on
    /// the domain, and hence the winning terms, unchanged.
    pub fn stability_radius(&self) -> Result<Rat> {
        self.certified_sup()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{qvec, rat};

    fn interval(a: i64, b: i64) -> Polyhedron {
        Polyhedron::polytope(1, &[qvec(&[a]), qvec(&[b])]).unwrap()
    }

    #[test]
    fn unbounded_exponent_is_rejected() {
        let ray = Polyhedron::from_vrep(1, &[qvec(&[0])], &[qvec(&[1])], &[]).unwrap();
        assert!(TruncatedSeries::new(ray.clone(), [(vec![-1], rat(0))], rat(5)).is_err());
        assert!(TruncatedSeries::new(ray, [(vec![1], rat(0))], rat(5)).is_ok());
    }

    #[test]
    fn unbounded_retained_weight_is_uncertified() {
        let ray = Polyhedron::from_vrep(1, &[qvec(&[0])], &[qvec(&[1])], &[]).unwrap();
        let s = TruncatedSeries::new(ray, [(vec![1], rat(0))], rat(5)).unwrap();
        assert_eq!(s.vertices_on_domain(), Err(Error::CertificateInsufficient));
        assert_eq!(s.min_weight().unwrap(), rat(0));
    }

    #[test]
    fn monomial_on_interval() {
        let s = TruncatedSeries::new(interval(1, 2), [(vec![1], rat(0))], rat(10)).unwrap();
        assert_eq!(s.min_weight().unwrap(), rat(1));
        assert_eq!(s.stability_radius().unwrap(), rat(2));
        assert!(s.restrict_to_laurent().unwrap().is_monomial());
    }

    #[test]
    fn short_truncation_is_reported() {
        let s = TruncatedSeries::new(interval(0, 1), [(vec![0], rat(3))], rat(3)).unwrap();
        assert_eq!(s.min_weight(), Err(Error::CertificateInsufficient));
        assert_eq!(s.stability_radius(), Err(Error::CertificateInsufficient));
    }
}
