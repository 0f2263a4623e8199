//! Polyhedral complexes: finite, face-closed collections of polyhedra
//! meeting along common faces.

use std::collections::BTreeSet;

use super::polyhedron::{sort_by_dim, Polyhedron};
use crate::rational::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedralComplex {
    ambient: usize,
    cells: Vec<Polyhedron>,
}

impl PolyhedralComplex {
    pub fn empty(ambient: usize) -> Self {
        PolyhedralComplex {
            ambient,
            cells: Vec::new(),
        }
    }

    /// Closes `cells` under taking faces. The caller guarantees the cells
    /// pairwise meet in common faces.
    pub fn from_cells(ambient: usize, cells: impl IntoIterator<Item = Polyhedron>) -> Self {
        let mut set: BTreeSet<Polyhedron> = BTreeSet::new();
        for c in cells {
            if set.contains(&c) {
                continue;
            }
            for f in c.faces() {
                set.insert(f);
            }
        }
        Self::from_face_closed(ambient, set)
    }

    /// For collections already closed under faces.
    pub(crate) fn from_face_closed(ambient: usize, cells: impl IntoIterator<Item = Polyhedron>) -> Self {
        let set: BTreeSet<Polyhedron> = cells.into_iter().collect();
        let mut cells: Vec<Polyhedron> = set.into_iter().collect();
        sort_by_dim(&mut cells);
        PolyhedralComplex { ambient, cells }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cells(&self) -> &[Polyhedron] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Dimension of the largest cell, `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(Polyhedron::dim).max()
    }

    pub fn index_of(&self, p: &Polyhedron) -> Option<usize> {
        self.cells.iter().position(|c| c == p)
    }

    /// `cells[j] ≺ cells[i]` (proper face). Inside a complex containment
    /// already implies the face relation.
    pub fn is_proper_face(&self, j: usize, i: usize) -> bool {
        j != i && self.cells[j].dim() < self.cells[i].dim() && self.cells[i].contains_polyhedron(&self.cells[j])
    }

    pub fn faces_of(&self, i: usize) -> Vec<usize> {
        (0..self.cells.len()).filter(|&j| self.is_proper_face(j, i)).collect()
    }

    pub fn maximal_cells(&self) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| !(0..self.cells.len()).any(|j| self.is_proper_face(i, j)))
            .collect()
    }

    pub fn support_contains(&self, x: &[Rat]) -> bool {
        self.cells.iter().any(|c| c.contains(x))
    }

    /// The unique cell containing `x` in its relative interior.
    pub fn carrier(&self, x: &[Rat]) -> Option<usize> {
        self.cells.iter().position(|c| c.relint_contains(x))
    }

    /// (PC2): every face of every cell is a cell.
    pub fn is_face_closed(&self) -> bool {
        self.cells
            .iter()
            .all(|c| c.faces().iter().all(|f| self.cells.contains(f)))
    }

    /// (PC1): pairwise intersections are common faces (possibly empty).
    pub fn intersections_are_faces(&self) -> bool {
        for (i, a) in self.cells.iter().enumerate() {
            for b in &self.cells[i + 1..] {
                if let Some(x) = a.intersection(b) {
                    if !a.faces().contains(&x) || !b.faces().contains(&x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn translate(&self, t: &[Rat]) -> Self {
        Self::from_face_closed(self.ambient, self.cells.iter().map(|c| c.translate(t)))
    }
}

/// The complex `{P ∩ P′ : P ∈ Π₁, P′ ∈ Π₂}` (nonempty intersections); its
/// support is `|Π₁| ∩ |Π₂|`.
pub fn refine_intersect(a: &PolyhedralComplex, b: &PolyhedralComplex) -> PolyhedralComplex {
    assert_eq!(a.ambient, b.ambient, "complexes live in different spaces");
    let mut set: BTreeSet<Polyhedron> = BTreeSet::new();
    for p in &a.cells {
        for q in &b.cells {
            if let Some(x) = p.intersection(q) {
                set.insert(x);
            }
        }
    }
    PolyhedralComplex::from_face_closed(a.ambient, set)
}
