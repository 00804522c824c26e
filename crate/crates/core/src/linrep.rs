//! Linear representation of a point set S ⊂ PG(n,q) and its incidence graph.
//!
//! PG(n,q) is the hyperplane `x₀ = 0` of PG(n+1,q). A point `s ∈ S` becomes
//! the direction `(0, s)`, and the affine points are `(1, a)` with
//! `a ∈ GF(q)^(n+1)`. The lines of the geometry are the affine lines
//! `{a + λs}`; two of them with the same direction are parallel.
//!
//! Vertex layout: affine point `a` has index `Σ a_k q^(n-k)` (lexicographic).
//! Line vertices are grouped by direction, `s_index · q^n + base_index`,
//! where the base is `a` with its coordinate at the pivot of `s` cleared and
//! `base_index` encodes the remaining n coordinates lexicographically.

use crate::construct::PointSet;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, Gf};
use crate::graph::io::{write_graph, GraphFile, GraphFormat, GraphMeta};
use crate::graph::BipartiteGraph;
use crate::par;

pub const DEFAULT_MAX_EDGES: u128 = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct LinrepConfig {
    pub max_edges: u128,
}

impl Default for LinrepConfig {
    fn default() -> Self {
        LinrepConfig {
            max_edges: DEFAULT_MAX_EDGES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineVertexId {
    pub s_index: usize,
    /// Affine representative with a zero at the pivot of `S[s_index]`.
    pub base: Vec<FieldElement>,
}

#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    graph: BipartiteGraph,
    set: PointSet,
    t: Option<usize>,
}

struct Layout {
    q: u32,
    dim: usize,
}

impl Layout {
    fn point_coords(&self, mut idx: usize, out: &mut [FieldElement]) {
        for c in out.iter_mut().rev() {
            *c = FieldElement((idx % self.q as usize) as u32);
            idx /= self.q as usize;
        }
    }

    fn point_index(&self, coords: &[FieldElement]) -> usize {
        coords
            .iter()
            .fold(0, |acc, c| acc * self.q as usize + c.value() as usize)
    }

    fn base_index(&self, base: &[FieldElement], pivot: usize) -> usize {
        base.iter()
            .enumerate()
            .filter(|&(k, _)| k != pivot)
            .fold(0, |acc, (_, c)| acc * self.q as usize + c.value() as usize)
    }

    fn base_from_index(&self, mut idx: usize, pivot: usize) -> Vec<FieldElement> {
        let mut base = vec![FieldElement::ZERO; self.dim];
        for k in (0..self.dim).rev().filter(|&k| k != pivot) {
            base[k] = FieldElement((idx % self.q as usize) as u32);
            idx /= self.q as usize;
        }
        base
    }
}

/// Builds Γ_{S,n,q}: `q^(n+1)` point vertices of degree |S| and `|S|·q^n`
/// line vertices of degree q.
pub fn build_linear_representation(set: &PointSet, cfg: &LinrepConfig) -> Result<IncidenceGraph> {
    if set.is_empty() {
        return Err(Error::InvalidParams("point set is empty".into()));
    }
    if set.max_secant().is_none() {
        return Err(Error::Unaudited);
    }
    let f: &Gf = set.field();
    let q = f.q();
    let n = set.n();
    let dim = n + 1;
    let q128 = q as u128;
    let points = q128.checked_pow(dim as u32);
    let edges = points
        .and_then(|p| p.checked_mul(set.len() as u128))
        .unwrap_or(u128::MAX);
    if edges > cfg.max_edges || edges > u32::MAX as u128 {
        return Err(Error::CapExceeded {
            what: "edge count",
            size: edges,
            cap: cfg.max_edges,
        });
    }
    let point_count = points.unwrap() as usize;
    let lines_per_class = point_count / q as usize;
    let layout = Layout { q, dim };
    let dirs: Vec<(&[FieldElement], usize)> = set
        .points()
        .iter()
        .map(|s| (s.coords(), s.pivot()))
        .collect();

    let point_adj = par::map_range_init(
        point_count,
        || (vec![FieldElement::ZERO; dim], vec![FieldElement::ZERO; dim]),
        |(a, base), idx| {
            layout.point_coords(idx, a);
            dirs.iter()
                .enumerate()
                .map(|(si, &(s, pivot))| {
                    let shift = a[pivot];
                    for k in 0..dim {
                        base[k] = f.sub(a[k], f.mul(shift, s[k]));
                    }
                    (si * lines_per_class + layout.base_index(base, pivot)) as u32
                })
                .collect::<Vec<u32>>()
        },
    );
    let line_count = set.len() * lines_per_class;
    let line_adj = par::map_range_init(
        line_count,
        || vec![FieldElement::ZERO; dim],
        |pt, l| {
            let (s, pivot) = dirs[l / lines_per_class];
            let base = layout.base_from_index(l % lines_per_class, pivot);
            let mut members: Vec<u32> = f
                .elements()
                .map(|lambda| {
                    for k in 0..dim {
                        pt[k] = f.add(base[k], f.mul(lambda, s[k]));
                    }
                    layout.point_index(pt) as u32
                })
                .collect();
            members.sort_unstable();
            members
        },
    );
    let graph = BipartiteGraph::from_adjacency(point_adj, line_adj)?;
    let g = IncidenceGraph {
        graph,
        set: set.clone(),
        t: None,
    };
    g.check_invariants()?;
    Ok(g)
}

impl IncidenceGraph {
    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn set(&self) -> &PointSet {
        &self.set
    }

    pub fn q(&self) -> u32 {
        self.set.field().q()
    }

    /// Dimension n of the space containing S.
    pub fn n(&self) -> usize {
        self.set.n()
    }

    pub fn point_count(&self) -> usize {
        self.graph.left_count()
    }

    pub fn line_count(&self) -> usize {
        self.graph.right_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// `q^n`, the size of each parallel class.
    pub fn lines_per_class(&self) -> usize {
        self.point_count() / self.q() as usize
    }

    /// Declared θ parameter; defaults to the audited maximum secant of S.
    pub fn t(&self) -> Option<usize> {
        self.t.or(self.set.max_secant())
    }

    pub fn with_t(mut self, t: usize) -> Self {
        self.t = Some(t);
        self
    }

    pub fn line_id(&self, l: u32) -> LineVertexId {
        let per = self.lines_per_class();
        let s_index = l as usize / per;
        let pivot = self.set.points()[s_index].pivot();
        let layout = Layout {
            q: self.q(),
            dim: self.n() + 1,
        };
        LineVertexId {
            s_index,
            base: layout.base_from_index(l as usize % per, pivot),
        }
    }

    /// Affine coordinates of a point vertex.
    pub fn point_coords(&self, p: u32) -> Vec<FieldElement> {
        let layout = Layout {
            q: self.q(),
            dim: self.n() + 1,
        };
        let mut out = vec![FieldElement::ZERO; self.n() + 1];
        layout.point_coords(p as usize, &mut out);
        out
    }

    /// Counts, degrees and adjacency consistency.
    pub fn check_invariants(&self) -> Result<()> {
        let q = self.q() as usize;
        let s = self.set.len();
        let expect_points = q.pow(self.n() as u32 + 1);
        let bad = |m: String| Err(Error::MalformedGraph(m));
        if self.point_count() != expect_points {
            return bad(format!(
                "expected {expect_points} point vertices, found {}",
                self.point_count()
            ));
        }
        if self.line_count() != s * expect_points / q {
            return bad(format!(
                "expected {} line vertices, found {}",
                s * expect_points / q,
                self.line_count()
            ));
        }
        if let Some(u) = self
            .graph
            .left_adjacency()
            .iter()
            .position(|a| a.len() != s)
        {
            return bad(format!("point vertex {u} does not have degree {s}"));
        }
        if let Some(l) = self
            .graph
            .right_adjacency()
            .iter()
            .position(|a| a.len() != q)
        {
            return bad(format!("line vertex {l} does not have degree {q}"));
        }
        if self.edge_count() != s * expect_points {
            return bad("edge count differs from |S| q^(n+1)".into());
        }
        self.graph.validate()
    }

    pub fn meta(&self) -> GraphMeta {
        GraphMeta {
            q: Some(self.q()),
            t: self.t(),
            n: Some(self.n()),
            set_size: Some(self.set.len()),
            field: Some(self.set.field().params().clone()),
        }
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            meta: self.meta(),
            graph: self.graph.clone(),
        }
    }
}

/// Line vertices grouped by direction: class `i` holds the lines through `S[i]`.
pub fn parallel_classes(g: &IncidenceGraph) -> Vec<Vec<u32>> {
    let per = g.lines_per_class();
    (0..g.set().len())
        .map(|i| ((i * per) as u32..((i + 1) * per) as u32).collect())
        .collect()
}

pub fn export_graph(g: &IncidenceGraph, format: GraphFormat) -> String {
    write_graph(&g.to_file(), format)
}
