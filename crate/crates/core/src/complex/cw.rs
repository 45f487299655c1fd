use std::collections::{BTreeSet, HashMap};

use super::{CellComplex, FVector, SimplicialComplex};
use crate::error::{Error, Result};

/// A discrete CW complex: cells added one at a time, each attached to a set of earlier cells.
///
/// The closure of a cell is `W⁻(x) = {x} ∪ ⋃_{a ∈ attach(x)} W⁻(a)`. Attach sets may be any
/// set of earlier cells; they are not required to form a subcomplex or a sphere.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CwComplex {
    ids: Vec<i64>,
    position: HashMap<i64, usize>,
    attach: Vec<Vec<usize>>,
    dims: Vec<usize>,
    cores: Vec<Vec<usize>>,
    stars: Vec<Vec<usize>>,
}

impl CwComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(id, attach ids)` pairs in filtration order.
    pub fn from_cells<I, A>(cells: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, A)>,
        A: IntoIterator<Item = i64>,
    {
        let mut cw = Self::new();
        for (id, attach) in cells {
            cw.push_cell(id, attach)?;
        }
        Ok(cw)
    }

    fn push_cell(&mut self, id: i64, attach: impl IntoIterator<Item = i64>) -> Result<()> {
        if self.position.contains_key(&id) {
            return Err(Error::input(format!("duplicate cell id {id}")));
        }
        let mut positions = BTreeSet::new();
        for a in attach {
            let p = *self
                .position
                .get(&a)
                .ok_or_else(|| Error::input(format!("cell {id} attaches to unknown cell {a}")))?;
            positions.insert(p);
        }
        let me = self.ids.len();
        let dim = positions.iter().map(|&p| self.dims[p] + 1).max().unwrap_or(0);
        let mut core: BTreeSet<usize> = BTreeSet::new();
        for &p in &positions {
            core.extend(self.cores[p].iter().copied());
        }
        core.insert(me);
        self.stars.push(Vec::new());
        for &c in &core {
            self.stars[c].push(me);
        }
        self.cores.push(core.into_iter().collect());
        self.attach.push(positions.into_iter().collect());
        self.dims.push(dim);
        self.ids.push(id);
        self.position.insert(id, me);
        Ok(())
    }

    /// Returns a new complex with one more cell attached to `attach_ids`.
    /// The new cell gets id `max id + 1` (or `1` in an empty complex).
    pub fn attach_cell(&self, attach_ids: &[i64]) -> Result<CwComplex> {
        let id = self.ids.iter().max().map_or(1, |m| m + 1);
        self.attach_cell_with_id(id, attach_ids)
    }

    pub fn attach_cell_with_id(&self, id: i64, attach_ids: &[i64]) -> Result<CwComplex> {
        let mut next = self.clone();
        next.push_cell(id, attach_ids.iter().copied())?;
        Ok(next)
    }

    /// Attaches a new cell to every existing cell.
    pub fn cone_cell(&self) -> Result<CwComplex> {
        let all = self.ids.clone();
        self.attach_cell(&all)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[i64] {
        &self.ids
    }

    /// Attach set of cell at position `i`, as ids.
    pub fn attach_ids(&self, i: usize) -> Vec<i64> {
        self.attach[i].iter().map(|&p| self.ids[p]).collect()
    }

    /// `W⁻` of the cell with the given id, as ids.
    pub fn closure_ids(&self, id: i64) -> Result<Vec<i64>> {
        let p = *self
            .position
            .get(&id)
            .ok_or_else(|| Error::input(format!("unknown cell id {id}")))?;
        Ok(self.cores[p].iter().map(|&q| self.ids[q]).collect())
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dims.iter().max().map_or(0, |d| d + 1)];
        for &d in &self.dims {
            counts[d] += 1;
        }
        FVector::new(counts)
    }
}

impl From<&SimplicialComplex> for CwComplex {
    /// Cells in canonical order with ids `1..=n`, each attached to its facets.
    fn from(g: &SimplicialComplex) -> Self {
        let mut cw = CwComplex::new();
        for (i, x) in g.simplices().iter().enumerate() {
            let attach = x.facets().into_iter().map(|f| g.index_of(&f).expect("closed complex") as i64 + 1);
            cw.push_cell(i as i64 + 1, attach).expect("facets precede their simplex");
        }
        cw
    }
}

impl CellComplex for CwComplex {
    fn cell_count(&self) -> usize {
        self.len()
    }

    fn cell_dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    fn core_of(&self, i: usize) -> &[usize] {
        &self.cores[i]
    }

    fn star_of(&self, i: usize) -> &[usize] {
        &self.stars[i]
    }

    fn cell_label(&self, i: usize) -> String {
        self.ids[i].to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{standard_complex, StandardKind};

    fn c4() -> SimplicialComplex {
        standard_complex(StandardKind::Cycle, 4).unwrap()
    }

    #[test]
    fn disc_over_c4_has_nine_subcells() {
        let cw = CwComplex::from(&c4()).cone_cell().unwrap();
        assert_eq!(cw.len(), 9);
        assert_eq!(cw.core_of(8).len(), 9);
        assert_eq!(cw.cell_dim(8), 2);
        assert_eq!(cw.f_vector().counts(), &[4, 4, 1]);
    }

    #[test]
    fn cell_over_octahedron() {
        let octa = standard_complex(StandardKind::CrossPolytope, 2).unwrap();
        let cw = CwComplex::from(&octa).cone_cell().unwrap();
        assert_eq!(cw.len(), 27);
        assert_eq!(cw.core_of(26).len(), 27);
    }

    #[test]
    fn attach_to_single_vertex() {
        let cw = CwComplex::new().attach_cell(&[]).unwrap();
        let cw = cw.attach_cell(&[1]).unwrap();
        assert_eq!(cw.closure_ids(2).unwrap(), vec![1, 2]);
        assert_eq!(cw.cell_dim(1), 1);
    }

    #[test]
    fn unknown_and_duplicate_ids_are_errors() {
        let cw = CwComplex::new().attach_cell(&[]).unwrap();
        assert!(cw.attach_cell(&[5]).is_err());
        assert!(cw.attach_cell_with_id(1, &[]).is_err());
        assert!(CwComplex::from_cells([(1, vec![2]), (2, vec![])]).is_err());
    }

    #[test]
    fn embedding_reproduces_simplicial_cores() {
        let g = standard_complex(StandardKind::Complete, 4).unwrap();
        let cw = CwComplex::from(&g);
        for i in 0..g.len() {
            assert_eq!(cw.core_of(i), g.core_of(i));
            assert_eq!(cw.star_of(i), g.star_of(i));
            assert_eq!(cw.cell_dim(i), g.cell_dim(i));
            assert_eq!(cw.core_of(i).len(), (1 << g.get(i).len()) - 1);
        }
    }
}
