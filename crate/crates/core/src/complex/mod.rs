//! Finite abstract simplicial complexes and discrete CW complexes.

mod cw;
mod fvector;
mod graph;
mod simplex;
mod standard;

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

pub use cw::CwComplex;
pub use fvector::FVector;
pub use graph::{gauss_bonnet_residual, poincare_hopf_residual, whitney_complex, Graph};
pub use simplex::{sorted_intersection_len, Simplex};
pub use standard::{
    barycentric_refinement, join, random_complex, standard_complex, suspension, StandardKind,
};

/// Read access shared by simplicial and CW complexes: cells in a fixed order, each with
/// its core `W⁻` and star `W⁺` as ascending index lists.
pub trait CellComplex: Sync {
    fn cell_count(&self) -> usize;
    fn cell_dim(&self, i: usize) -> usize;
    /// Indices of all cells contained in cell `i`, including `i`.
    fn core_of(&self, i: usize) -> &[usize];
    /// Indices of all cells containing cell `i`, including `i`.
    fn star_of(&self, i: usize) -> &[usize];
    fn cell_label(&self, i: usize) -> String;

    /// `(-1)^dim`; a vertex has sign `+1`.
    fn cell_omega(&self, i: usize) -> i32 {
        if self.cell_dim(i) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn labels(&self) -> Vec<String> {
        (0..self.cell_count()).map(|i| self.cell_label(i)).collect()
    }
}

/// A finite set of simplices closed under taking nonempty subsets, in canonical order.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    cores: Vec<Vec<usize>>,
    stars: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::from_closed(Vec::new())
    }

    /// Downward closure of the generator sets, without the empty set.
    pub fn generate_closure<I, S>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = u32>,
    {
        let mut all = Vec::new();
        for g in generators {
            let x = Simplex::new(g)?;
            all.extend(x.nonempty_subsets());
        }
        Ok(Self::from_closed(all))
    }

    /// Closure of already-built simplices.
    pub fn closure_of(generators: &[Simplex]) -> Self {
        Self::from_closed(generators.iter().flat_map(|g| g.nonempty_subsets()).collect())
    }

    /// Takes an explicit list of sets and checks that it is closed under nonempty subsets.
    pub fn from_sets<I, S>(sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = u32>,
    {
        let simplices = sets.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        let present: HashSet<&Simplex> = simplices.iter().collect();
        for x in &simplices {
            if let Some(f) = x.facets().into_iter().find(|f| !present.contains(f)) {
                return Err(Error::input(format!(
                    "set list is not closed: {x} is present but its face {f} is not"
                )));
            }
        }
        Ok(Self::from_closed(simplices))
    }

    /// Sorts, deduplicates and indexes. Callers guarantee closure.
    pub(crate) fn from_closed(mut simplices: Vec<Simplex>) -> Self {
        simplices.sort();
        simplices.dedup();
        let index: HashMap<Simplex, usize> =
            simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let cores: Vec<Vec<usize>> = simplices
            .iter()
            .map(|x| {
                let mut c: Vec<usize> = x.nonempty_subsets().map(|y| index[&y]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        let mut stars = vec![Vec::new(); simplices.len()];
        for (y, core) in cores.iter().enumerate() {
            for &x in core {
                stars[x].push(y);
            }
        }
        Self { simplices, index, cores, stars }
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn get(&self, i: usize) -> &Simplex {
        &self.simplices[i]
    }

    pub fn index_of(&self, x: &Simplex) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Simplex) -> bool {
        self.index.contains_key(x)
    }

    fn require(&self, x: &Simplex) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::input(format!("{x} is not a simplex of the complex")))
    }

    /// The core `W⁻(x)`: every simplex contained in `x`.
    pub fn core(&self, x: &Simplex) -> Result<Vec<&Simplex>> {
        let i = self.require(x)?;
        Ok(self.cores[i].iter().map(|&j| &self.simplices[j]).collect())
    }

    /// The star `W⁺(x)`: every simplex containing `x`.
    pub fn star(&self, x: &Simplex) -> Result<Vec<&Simplex>> {
        let i = self.require(x)?;
        Ok(self.stars[i].iter().map(|&j| &self.simplices[j]).collect())
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> Vec<u32> {
        self.simplices.iter().take_while(|x| x.len() == 1).map(|x| x.vertices()[0]).collect()
    }

    pub fn max_label(&self) -> u32 {
        self.vertices().last().copied().unwrap_or(0)
    }

    /// Largest simplex dimension, `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    /// Inclusion-maximal simplices.
    pub fn facets(&self) -> Vec<&Simplex> {
        (0..self.len()).filter(|&i| self.stars[i].len() == 1).map(|i| &self.simplices[i]).collect()
    }

    pub fn f_vector(&self) -> FVector {
        let mut counts = vec![0u64; self.dimension().map_or(0, |d| d + 1)];
        for x in &self.simplices {
            counts[x.dim()] += 1;
        }
        FVector::new(counts)
    }

    /// `χ(G) = Σ_x ω(x)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|x| x.omega() as i64).sum()
    }

    /// Relabels vertices by adding `offset`.
    pub(crate) fn shifted(&self, offset: u32) -> SimplicialComplex {
        Self::from_closed(self.simplices.iter().map(|x| x.shifted(offset)).collect())
    }
}

impl CellComplex for SimplicialComplex {
    fn cell_count(&self) -> usize {
        self.len()
    }

    fn cell_dim(&self, i: usize) -> usize {
        self.simplices[i].dim()
    }

    fn core_of(&self, i: usize) -> &[usize] {
        &self.cores[i]
    }

    fn star_of(&self, i: usize) -> &[usize] {
        &self.stars[i]
    }

    fn cell_label(&self, i: usize) -> String {
        self.simplices[i].to_string()
    }
}

/// Either kind of complex, as loaded from a file.
#[derive(Clone, Debug)]
pub enum AnyComplex {
    Simplicial(SimplicialComplex),
    Cw(CwComplex),
}

impl AnyComplex {
    pub fn as_simplicial(&self) -> Option<&SimplicialComplex> {
        match self {
            AnyComplex::Simplicial(g) => Some(g),
            AnyComplex::Cw(_) => None,
        }
    }

    /// Cell counts per dimension.
    pub fn f_vector(&self) -> FVector {
        match self {
            AnyComplex::Simplicial(g) => g.f_vector(),
            AnyComplex::Cw(c) => c.f_vector(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..self.cell_count()).map(|i| self.cell_omega(i) as i64).sum()
    }
}

impl CellComplex for AnyComplex {
    fn cell_count(&self) -> usize {
        match self {
            AnyComplex::Simplicial(g) => g.cell_count(),
            AnyComplex::Cw(c) => c.cell_count(),
        }
    }

    fn cell_dim(&self, i: usize) -> usize {
        match self {
            AnyComplex::Simplicial(g) => g.cell_dim(i),
            AnyComplex::Cw(c) => c.cell_dim(i),
        }
    }

    fn core_of(&self, i: usize) -> &[usize] {
        match self {
            AnyComplex::Simplicial(g) => g.core_of(i),
            AnyComplex::Cw(c) => c.core_of(i),
        }
    }

    fn star_of(&self, i: usize) -> &[usize] {
        match self {
            AnyComplex::Simplicial(g) => g.star_of(i),
            AnyComplex::Cw(c) => c.star_of(i),
        }
    }

    fn cell_label(&self, i: usize) -> String {
        match self {
            AnyComplex::Simplicial(g) => g.cell_label(i),
            AnyComplex::Cw(c) => c.cell_label(i),
        }
    }
}

impl From<SimplicialComplex> for AnyComplex {
    fn from(g: SimplicialComplex) -> Self {
        AnyComplex::Simplicial(g)
    }
}

impl From<CwComplex> for AnyComplex {
    fn from(c: CwComplex) -> Self {
        AnyComplex::Cw(c)
    }
}
