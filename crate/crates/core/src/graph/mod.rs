//! Bipartite graphs with sorted adjacency in both directions.
//!
//! The left class holds point vertices and the right class line vertices.
//! Files and the girth search use a single index space where left vertex
//! `i` is `i` and right vertex `j` is `left_count + j`.

pub mod families;
pub mod io;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Left(u32),
    Right(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BipartiteGraph {
    left: Vec<Vec<u32>>,
    right: Vec<Vec<u32>>,
}

impl BipartiteGraph {
    /// Builds a graph from `(left, right)` edges. Duplicate or out-of-range
    /// edges are rejected.
    pub fn from_edges(
        left_count: usize,
        right_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut left = vec![Vec::new(); left_count];
        let mut right = vec![Vec::new(); right_count];
        for (u, v) in edges {
            if u as usize >= left_count || v as usize >= right_count {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u}, {v}) out of range"
                )));
            }
            left[u as usize].push(v);
            right[v as usize].push(u);
        }
        for adj in left.iter_mut().chain(right.iter_mut()) {
            adj.sort_unstable();
            if adj.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedGraph("duplicate edge".into()));
            }
        }
        Ok(BipartiteGraph { left, right })
    }

    /// Takes both adjacency directions as given and checks that they are
    /// sorted, in range and transposes of each other.
    pub fn from_adjacency(left: Vec<Vec<u32>>, right: Vec<Vec<u32>>) -> Result<Self> {
        let g = BipartiteGraph { left, right };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let (nl, nr) = (self.left.len(), self.right.len());
        let sorted = |a: &[u32]| a.windows(2).all(|w| w[0] < w[1]);
        for (u, adj) in self.left.iter().enumerate() {
            if !sorted(adj) || adj.iter().any(|&v| v as usize >= nr) {
                return Err(Error::MalformedGraph(format!(
                    "bad adjacency at left vertex {u}"
                )));
            }
        }
        for (v, adj) in self.right.iter().enumerate() {
            if !sorted(adj) || adj.iter().any(|&u| u as usize >= nl) {
                return Err(Error::MalformedGraph(format!(
                    "bad adjacency at right vertex {v}"
                )));
            }
        }
        let left_edges: usize = self.left.iter().map(Vec::len).sum();
        let right_edges: usize = self.right.iter().map(Vec::len).sum();
        if left_edges != right_edges {
            return Err(Error::MalformedGraph(
                "adjacency lists are not transposes".into(),
            ));
        }
        for (u, adj) in self.left.iter().enumerate() {
            for &v in adj {
                if self.right[v as usize].binary_search(&(u as u32)).is_err() {
                    return Err(Error::MalformedGraph(format!(
                        "edge ({u}, {v}) missing from right side"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn left_count(&self) -> usize {
        self.left.len()
    }

    pub fn right_count(&self) -> usize {
        self.right.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn edge_count(&self) -> usize {
        self.left.iter().map(Vec::len).sum()
    }

    #[inline]
    pub fn left_neighbors(&self, u: u32) -> &[u32] {
        &self.left[u as usize]
    }

    #[inline]
    pub fn right_neighbors(&self, v: u32) -> &[u32] {
        &self.right[v as usize]
    }

    pub fn left_adjacency(&self) -> &[Vec<u32>] {
        &self.left
    }

    pub fn right_adjacency(&self) -> &[Vec<u32>] {
        &self.right
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.left
            .get(u as usize)
            .is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Edges sorted by `(left, right)`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.left
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().map(move |&v| (u as u32, v)))
    }

    pub fn with_edge(&self, u: u32, v: u32) -> Result<Self> {
        BipartiteGraph::from_edges(
            self.left_count(),
            self.right_count(),
            self.edges().chain([(u, v)]),
        )
    }

    pub fn index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Left(i) => i as usize,
            Vertex::Right(j) => self.left.len() + j as usize,
        }
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        if index < self.left.len() {
            Vertex::Left(index as u32)
        } else {
            Vertex::Right((index - self.left.len()) as u32)
        }
    }

    /// Neighbours in the unified index space.
    pub fn neighbors_unified(&self, index: usize) -> Vec<usize> {
        let nl = self.left.len();
        if index < nl {
            self.left[index].iter().map(|&v| nl + v as usize).collect()
        } else {
            self.right[index - nl].iter().map(|&u| u as usize).collect()
        }
    }

    /// Neighbours of an arbitrary vertex as tagged vertices.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match v {
            Vertex::Left(u) => self
                .left_neighbors(u)
                .iter()
                .map(|&x| Vertex::Right(x))
                .collect(),
            Vertex::Right(w) => self
                .right_neighbors(w)
                .iter()
                .map(|&x| Vertex::Left(x))
                .collect(),
        }
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        match (a, b) {
            (Vertex::Left(u), Vertex::Right(v)) | (Vertex::Right(v), Vertex::Left(u)) => {
                self.has_edge(u, v)
            }
            _ => false,
        }
    }
}
