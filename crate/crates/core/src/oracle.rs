//! Brute-force reference implementations. They are deliberately naive,
//! single-threaded, and refuse inputs above their caps.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::PointSet;
use crate::error::{Error, Result};
use crate::graph::{families, BipartiteGraph, Vertex};
use crate::projgeom::{enumerate_lines, point_count};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub max_ambient_points: usize,
    pub trial_count: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 60,
            max_ambient_points: 50,
            trial_count: 1000,
            seed: 0,
        }
    }
}

fn check_vertices(g: &BipartiteGraph, cfg: &OracleConfig) -> Result<()> {
    let n = g.vertex_count();
    if n > cfg.max_vertices || n > 64 {
        return Err(Error::CapExceeded {
            what: "vertex count",
            size: n as u128,
            cap: cfg.max_vertices as u128,
        });
    }
    Ok(())
}

/// All simple `u–v` paths with exactly three edges, as their two interior
/// vertices, in the unified index space.
fn three_paths(g: &BipartiteGraph, u: usize, v: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in g.neighbors_unified(u) {
        if x == v {
            continue;
        }
        for y in g.neighbors_unified(x) {
            if y == u || y == v || y == x {
                continue;
            }
            if g.neighbors_unified(y).contains(&v) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Largest family of internally disjoint 3-edge `u–v` paths, by exhaustive
/// search. Paths are grouped by their vertex next to `u`; each group
/// contributes at most one path, and the search state is the set of used
/// vertices next to `v`.
pub fn brute_theta_count(
    g: &BipartiteGraph,
    u: Vertex,
    v: Vertex,
    cfg: &OracleConfig,
) -> Result<usize> {
    check_vertices(g, cfg)?;
    let (ui, vi) = (g.index(u), g.index(v));
    if ui >= g.vertex_count() || vi >= g.vertex_count() || ui == vi {
        return Err(Error::InvalidParams(
            "need two distinct vertices in range".into(),
        ));
    }
    let mut groups: Vec<(usize, u64)> = Vec::new();
    for (x, y) in three_paths(g, ui, vi) {
        match groups.last_mut() {
            Some((gx, mask)) if *gx == x => *mask |= 1 << y,
            _ => groups.push((x, 1 << y)),
        }
    }
    let masks: Vec<u64> = groups.into_iter().map(|(_, m)| m).collect();
    // suffix[i]: every far-side vertex reachable from groups i..
    let mut suffix = vec![0u64; masks.len() + 1];
    for i in (0..masks.len()).rev() {
        suffix[i] = suffix[i + 1] | masks[i];
    }
    let mut memo = HashMap::new();
    Ok(best_from(&masks, &suffix, 0, 0, &mut memo))
}

fn best_from(
    masks: &[u64],
    suffix: &[u64],
    i: usize,
    used: u64,
    memo: &mut HashMap<(usize, u64), usize>,
) -> usize {
    let bound = (masks.len() - i).min((suffix[i] & !used).count_ones() as usize);
    if bound == 0 {
        return 0;
    }
    let key = (i, used & suffix[i]);
    if let Some(&b) = memo.get(&key) {
        return b;
    }
    let mut best = 0;
    let mut free = masks[i] & !used;
    while free != 0 && best < bound {
        let y = free & free.wrapping_neg();
        free &= free - 1;
        best = best.max(1 + best_from(masks, suffix, i + 1, used | y, memo));
    }
    if best < bound {
        best = best.max(best_from(masks, suffix, i + 1, used, memo));
    }
    memo.insert(key, best);
    best
}

/// Whether any four distinct vertices span a 4-cycle.
pub fn brute_c4(g: &BipartiteGraph, cfg: &OracleConfig) -> Result<bool> {
    check_vertices(g, cfg)?;
    let n = g.vertex_count();
    let adj: Vec<u64> = (0..n)
        .map(|i| {
            g.neighbors_unified(i)
                .iter()
                .fold(0u64, |m, &w| m | (1 << w))
        })
        .collect();
    let e = |a: usize, b: usize| adj[a] >> b & 1 == 1;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let cyc = |w: usize, x: usize, y: usize, z: usize| {
                        e(w, x) && e(x, y) && e(y, z) && e(z, w)
                    };
                    if cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

/// θ(3,t)-freeness by brute force over every vertex pair.
pub fn brute_theta_free(g: &BipartiteGraph, t: usize, cfg: &OracleConfig) -> Result<bool> {
    check_vertices(g, cfg)?;
    for u in 0..g.left_count() as u32 {
        for v in 0..g.right_count() as u32 {
            if brute_theta_count(g, Vertex::Left(u), Vertex::Right(v), cfg)? >= t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn secant_audit_in_cap(set: &PointSet, cfg: &OracleConfig) -> bool {
    point_count(set.n(), set.field().q()).is_some_and(|c| c <= cfg.max_ambient_points as u128)
}

/// Maximum `|line ∩ S|` over every line of the ambient space.
pub fn brute_secant_audit(set: &PointSet, cfg: &OracleConfig) -> Result<usize> {
    if !secant_audit_in_cap(set, cfg) {
        let size = point_count(set.n(), set.field().q()).unwrap_or(u128::MAX);
        return Err(Error::CapExceeded {
            what: "ambient point count",
            size,
            cap: cfg.max_ambient_points as u128,
        });
    }
    let f = set.field();
    let members: HashSet<_> = set.points().iter().collect();
    let lines = enumerate_lines(f, set.n(), usize::MAX)?;
    Ok(lines
        .iter()
        .map(|l| l.points(f).iter().filter(|p| members.contains(p)).count())
        .max()
        .unwrap_or(0))
}

/// Seeded random bipartite graphs with at most `max_vertices` vertices and
/// edge density swept linearly from 0.05 to 0.5 across the trials.
pub fn random_corpus(cfg: &OracleConfig) -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let half = (cfg.max_vertices / 2).max(1);
    (0..cfg.trial_count)
        .map(|i| {
            let density = 0.05 + 0.45 * i as f64 / (cfg.trial_count.max(2) - 1) as f64;
            let left = rng.gen_range(1..=half);
            let right = rng.gen_range(1..=half);
            families::random_bipartite(&mut rng, left, right, density)
        })
        .collect()
}
