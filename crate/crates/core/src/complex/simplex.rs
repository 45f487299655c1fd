use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A nonempty finite set of positive vertex labels, stored sorted ascending.
///
/// Simplices order canonically: by cardinality first, then lexicographically on the
/// sorted vertex list. Every complex in this crate lists its simplices in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<u32>,
}

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut vertices: Vec<u32> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.is_empty() {
            return Err(Error::input("a simplex needs at least one vertex"));
        }
        if vertices[0] == 0 {
            return Err(Error::input("vertex labels must be positive integers"));
        }
        Ok(Self { vertices })
    }

    /// Builds from a list the caller guarantees to be sorted, deduplicated, nonempty and positive.
    pub(crate) fn from_sorted_unchecked(vertices: Vec<u32>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Self { vertices }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    /// Number of vertices `|x|`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Parity sign `(-1)^dim(x)`, so a point has sign `+1`.
    pub fn omega(&self) -> i32 {
        if self.dim() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                match w.cmp(v) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn intersection_len(&self, other: &Simplex) -> usize {
        sorted_intersection_len(&self.vertices, &other.vertices)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: Vec<u32> = self.vertices.iter().chain(&other.vertices).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex::from_sorted_unchecked(v)
    }

    /// All nonempty subsets, including the simplex itself.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let k = self.len();
        assert!(k < 32, "simplex with {k} vertices has too many faces to enumerate");
        (1u32..(1u32 << k)).map(move |mask| {
            let v = (0..k)
                .filter(|b| mask & (1 << b) != 0)
                .map(|b| self.vertices[b])
                .collect();
            Simplex::from_sorted_unchecked(v)
        })
    }

    /// Codimension-one faces; empty for a vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.len() == 1 {
            return Vec::new();
        }
        (0..self.len())
            .map(|skip| {
                let v = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                Simplex::from_sorted_unchecked(v)
            })
            .collect()
    }

    pub(crate) fn shifted(&self, offset: u32) -> Simplex {
        Simplex::from_sorted_unchecked(self.vertices.iter().map(|v| v + offset).collect())
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Size of the intersection of two ascending lists, by linear merge.
pub fn sorted_intersection_len<T: Ord>(a: &[T], b: &[T]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}
