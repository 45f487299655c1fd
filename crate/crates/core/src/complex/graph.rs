use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::One;

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `1..=vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<u32>>,
}

impl Graph {
    /// Rejects self-loops, repeated edges (in either orientation) and out-of-range endpoints.
    pub fn new(vertex_count: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adjacency = vec![BTreeSet::new(); vertex_count as usize];
        for &(a, b) in edges {
            if a == b {
                return Err(Error::input(format!("self-loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > vertex_count {
                    return Err(Error::input(format!(
                        "edge ({a},{b}) leaves the vertex range 1..={vertex_count}"
                    )));
                }
            }
            if !adjacency[a as usize - 1].insert(b) {
                return Err(Error::input(format!("duplicate edge ({a},{b})")));
            }
            adjacency[b as usize - 1].insert(a);
        }
        Ok(Self { adjacency })
    }

    pub fn vertex_count(&self) -> u32 {
        self.adjacency.len() as u32
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.vertex_count()
    }

    pub fn neighbors(&self, v: u32) -> &BTreeSet<u32> {
        &self.adjacency[v as usize - 1]
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.vertices()
            .flat_map(|a| self.neighbors(a).range(a + 1..).map(move |&b| (a, b)))
            .collect()
    }

    /// Maximal cliques of the subgraph induced on `allowed`, by Bron–Kerbosch with pivoting.
    pub fn maximal_cliques_within(&self, allowed: &BTreeSet<u32>) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.bron_kerbosch(&mut current, allowed.clone(), BTreeSet::new(), allowed, &mut out);
        out.sort();
        out
    }

    pub fn maximal_cliques(&self) -> Vec<Vec<u32>> {
        self.maximal_cliques_within(&self.vertices().collect())
    }

    fn bron_kerbosch(
        &self,
        current: &mut Vec<u32>,
        mut candidates: BTreeSet<u32>,
        mut excluded: BTreeSet<u32>,
        allowed: &BTreeSet<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() && !current.is_empty() {
                let mut clique = current.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = candidates
            .union(&excluded)
            .max_by_key(|&&u| self.neighbors(u).intersection(&candidates).count())
            .copied()
            .expect("nonempty");
        let branch: Vec<u32> = candidates.difference(self.neighbors(pivot)).copied().collect();
        for v in branch {
            let nbrs: BTreeSet<u32> =
                self.neighbors(v).iter().filter(|u| allowed.contains(u)).copied().collect();
            current.push(v);
            self.bron_kerbosch(
                current,
                candidates.intersection(&nbrs).copied().collect(),
                excluded.intersection(&nbrs).copied().collect(),
                allowed,
                out,
            );
            current.pop();
            candidates.remove(&v);
            excluded.insert(v);
        }
    }

    /// Whitney complex of the subgraph induced on `vertices`.
    pub fn clique_complex_within(&self, vertices: &BTreeSet<u32>) -> SimplicialComplex {
        let generators: Vec<Simplex> = self
            .maximal_cliques_within(vertices)
            .into_iter()
            .map(Simplex::from_sorted_unchecked)
            .collect();
        SimplicialComplex::closure_of(&generators)
    }

    /// Whitney complex of the unit sphere `S(x)`: the subgraph induced on the neighbours of `x`.
    pub fn unit_sphere(&self, x: u32) -> SimplicialComplex {
        self.clique_complex_within(self.neighbors(x))
    }
}

/// The Whitney (clique) complex of a graph.
pub fn whitney_complex(graph: &Graph) -> SimplicialComplex {
    graph.clique_complex_within(&graph.vertices().collect())
}

/// `f_G(t) − 1 − Σ_x F_{S(x)}(t)` for the Whitney complex `G` of `graph`; vanishes identically.
pub fn gauss_bonnet_residual(graph: &Graph, t: &BigRational) -> BigRational {
    let lhs = whitney_complex(graph).f_vector().f_eval(t);
    let curvature: BigRational =
        graph.vertices().map(|x| graph.unit_sphere(x).f_vector().antiderivative_eval(t)).sum();
    lhs - BigRational::one() - curvature
}

/// `f_G(t) − 1 − t Σ_x f_{S_g(x)}(t)` where `S_g(x)` is the part of the unit sphere with
/// smaller `g` values. `g[v - 1]` is the value at vertex `v`; it must differ across every edge.
pub fn poincare_hopf_residual(graph: &Graph, g: &[i64], t: &BigRational) -> Result<BigRational> {
    if g.len() != graph.vertex_count() as usize {
        return Err(Error::input(format!(
            "expected {} vertex values, got {}",
            graph.vertex_count(),
            g.len()
        )));
    }
    let value = |v: u32| g[v as usize - 1];
    for (a, b) in graph.edges() {
        if value(a) == value(b) {
            return Err(Error::input(format!(
                "function is not locally injective: vertices {a} and {b} share value {}",
                value(a)
            )));
        }
    }
    let lhs = whitney_complex(graph).f_vector().f_eval(t);
    let index_sum: BigRational = graph
        .vertices()
        .map(|x| {
            let lower: BTreeSet<u32> =
                graph.neighbors(x).iter().filter(|&&y| value(y) < value(x)).copied().collect();
            graph.clique_complex_within(&lower).f_vector().f_eval(t)
        })
        .sum();
    Ok(lhs - BigRational::one() - t * index_sum)
}
