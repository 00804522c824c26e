//! Forbidden-subgraph certificates for bipartite graphs: C4, θ(3,t) and girth.
//!
//! θ(3,t) here is two hub vertices joined by `t` internally vertex-disjoint
//! paths of three edges. In a bipartite graph the hubs of such a path lie in
//! opposite classes, so every (point, line) pair is tested; whether the hubs
//! are adjacent does not matter.

use std::fmt::{self, Write as _};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    C4,
    Theta(usize),
    Girth { min: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

/// One 3-edge path `hub_point – line – point – hub_line`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThreePath {
    pub mid_line: u32,
    pub mid_point: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two points with two common lines.
    C4 { points: [u32; 2], lines: [u32; 2] },
    Theta {
        hub_point: u32,
        hub_line: u32,
        paths: Vec<ThreePath>,
    },
}

impl Witness {
    /// Checks that the witness is an actual subgraph of `g`.
    pub fn replay(&self, g: &BipartiteGraph) -> std::result::Result<(), String> {
        let in_range =
            |u: u32, v: u32| (u as usize) < g.left_count() && (v as usize) < g.right_count();
        match self {
            Witness::C4 {
                points: [a, b],
                lines: [x, y],
            } => {
                if a == b || x == y {
                    return Err("C4 witness repeats a vertex".into());
                }
                for (u, v) in [(*a, *x), (*a, *y), (*b, *x), (*b, *y)] {
                    if !in_range(u, v) || !g.has_edge(u, v) {
                        return Err(format!("C4 witness edge ({u}, {v}) absent"));
                    }
                }
                Ok(())
            }
            Witness::Theta {
                hub_point: u,
                hub_line: v,
                paths,
            } => {
                let mut lines: Vec<u32> = paths.iter().map(|p| p.mid_line).collect();
                let mut points: Vec<u32> = paths.iter().map(|p| p.mid_point).collect();
                lines.sort_unstable();
                points.sort_unstable();
                if lines.windows(2).any(|w| w[0] == w[1]) || points.windows(2).any(|w| w[0] == w[1])
                {
                    return Err("θ witness paths are not internally disjoint".into());
                }
                if lines.contains(v) || points.contains(u) {
                    return Err("θ witness path passes through a hub".into());
                }
                for p in paths {
                    for (a, b) in [
                        (*u, p.mid_line),
                        (p.mid_point, p.mid_line),
                        (p.mid_point, *v),
                    ] {
                        if !in_range(a, b) || !g.has_edge(a, b) {
                            return Err(format!("θ witness edge ({a}, {b}) absent"));
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyStats {
    pub pairs_examined: u64,
    /// Largest disjoint-path count seen. When the matching stopped early this
    /// is a lower bound equal to the stopping threshold.
    pub max_disjoint_paths: usize,
    /// Upper bound on the disjoint-path count over every (point, line) pair,
    /// from the pruning scores. Below `t` it certifies freeness on its own.
    pub max_path_bound: usize,
    pub exact: bool,
    pub girth: Option<Option<usize>>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: Check,
    pub outcome: Outcome,
    pub witness: Option<Witness>,
    pub stats: VerifyStats,
    /// Number of point vertices, used to print line vertices in file indices.
    pub point_count: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Stable `key: value` rendering. Timing is left out so that reports of
    /// identical inputs are byte-identical.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let p = self.point_count as u64;
        match self.check {
            Check::C4 => out.push_str("check: c4\n"),
            Check::Theta(t) => {
                out.push_str("check: theta\n");
                writeln!(out, "t: {t}").unwrap();
            }
            Check::Girth { min } => {
                out.push_str("check: girth\n");
                writeln!(out, "min_girth: {min}").unwrap();
            }
        }
        let outcome = if self.passed() { "pass" } else { "fail" };
        writeln!(out, "outcome: {outcome}").unwrap();
        writeln!(out, "pairs_examined: {}", self.stats.pairs_examined).unwrap();
        if let Check::Theta(_) = self.check {
            writeln!(out, "max_path_bound: {}", self.stats.max_path_bound).unwrap();
            writeln!(out, "max_disjoint_paths: {}", self.stats.max_disjoint_paths).unwrap();
            writeln!(out, "max_exact: {}", self.stats.exact).unwrap();
        }
        if let Some(g) = self.stats.girth {
            match g {
                Some(g) => writeln!(out, "girth: {g}").unwrap(),
                None => out.push_str("girth: inf\n"),
            }
        }
        match &self.witness {
            None => out.push_str("witness: none\n"),
            Some(Witness::C4 { points, lines }) => {
                writeln!(
                    out,
                    "witness: c4 points={},{} lines={},{}",
                    points[0],
                    points[1],
                    p + lines[0] as u64,
                    p + lines[1] as u64
                )
                .unwrap();
            }
            Some(Witness::Theta {
                hub_point,
                hub_line,
                paths,
            }) => {
                writeln!(
                    out,
                    "witness: theta hub_point={hub_point} hub_line={}",
                    p + *hub_line as u64
                )
                .unwrap();
                for path in paths {
                    writeln!(
                        out,
                        "path: {} {} {} {}",
                        hub_point,
                        p + path.mid_line as u64,
                        path.mid_point,
                        p + *hub_line as u64
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// C4 detection: two points with two common lines. For every point `u`, walk
/// `u → line → w` for `w > u` and flag the first `w` reached through two
/// different lines.
pub fn find_c4(g: &BipartiteGraph) -> VerificationReport {
    let start = Instant::now();
    let nl = g.left_count();
    let per_point = par::map_range_init(
        nl,
        || (vec![u32::MAX; nl], vec![0u32; nl]),
        |(stamp, via), u| {
            let u = u as u32;
            let mut walks = 0u64;
            for &r in g.left_neighbors(u) {
                for &w in g.right_neighbors(r) {
                    if w <= u {
                        continue;
                    }
                    walks += 1;
                    if stamp[w as usize] == u {
                        let first = via[w as usize];
                        return (
                            walks,
                            Some(Witness::C4 {
                                points: [u, w],
                                lines: [first, r],
                            }),
                        );
                    }
                    stamp[w as usize] = u;
                    via[w as usize] = r;
                }
            }
            (walks, None)
        },
    );
    let pairs_examined = per_point.iter().map(|r| r.0).sum();
    let witness = per_point.into_iter().find_map(|r| r.1);
    VerificationReport {
        check: Check::C4,
        outcome: if witness.is_some() {
            Outcome::Fail
        } else {
            Outcome::Pass
        },
        witness,
        stats: VerifyStats {
            pairs_examined,
            elapsed: start.elapsed(),
            ..Default::default()
        },
        point_count: nl,
    }
}

/// Reusable buffers for the auxiliary matching.
struct Matcher {
    stamp: Vec<u32>,
    pos: Vec<u32>,
    epoch: u32,
    adj: Vec<Vec<u32>>,
    match_b: Vec<u32>,
    seen: Vec<u32>,
    seen_epoch: u32,
}

const UNMATCHED: u32 = u32::MAX;

impl Matcher {
    fn new(left_count: usize) -> Self {
        Matcher {
            stamp: vec![0; left_count],
            pos: vec![0; left_count],
            epoch: 0,
            adj: Vec::new(),
            match_b: Vec::new(),
            seen: Vec::new(),
            seen_epoch: 0,
        }
    }

    /// Maximum number of internally disjoint 3-paths between point `u` and
    /// line `v`, stopping once `limit` is reached. Returns the count and the
    /// matched `(line, point)` middles.
    fn run(&mut self, g: &BipartiteGraph, u: u32, v: u32, limit: usize) -> (usize, Vec<ThreePath>) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        // B = N(v) \ {u}
        let b: Vec<u32> = g
            .right_neighbors(v)
            .iter()
            .copied()
            .filter(|&p| p != u)
            .collect();
        for (i, &p) in b.iter().enumerate() {
            self.stamp[p as usize] = self.epoch;
            self.pos[p as usize] = i as u32;
        }
        // A = N(u) \ {v}, each with its neighbours in B
        let a: Vec<u32> = g
            .left_neighbors(u)
            .iter()
            .copied()
            .filter(|&m| m != v)
            .collect();
        self.adj.resize(a.len(), Vec::new());
        for (i, &m) in a.iter().enumerate() {
            self.adj[i].clear();
            for &p in g.right_neighbors(m) {
                if self.stamp[p as usize] == self.epoch {
                    self.adj[i].push(self.pos[p as usize]);
                }
            }
        }
        self.match_b.clear();
        self.match_b.resize(b.len(), UNMATCHED);
        self.seen.clear();
        self.seen.resize(b.len(), 0);
        let mut size = 0;
        for i in 0..a.len() {
            if size >= limit {
                break;
            }
            if self.adj[i].is_empty() {
                continue;
            }
            self.seen_epoch = self.seen_epoch.wrapping_add(1);
            if self.seen_epoch == 0 {
                self.seen.iter_mut().for_each(|s| *s = 0);
                self.seen_epoch = 1;
            }
            if self.augment(i) {
                size += 1;
            }
        }
        let paths = self
            .match_b
            .iter()
            .enumerate()
            .filter(|&(_, &ai)| ai != UNMATCHED)
            .map(|(bi, &ai)| ThreePath {
                mid_line: a[ai as usize],
                mid_point: b[bi],
            })
            .collect();
        (size, paths)
    }

    fn augment(&mut self, ai: usize) -> bool {
        for k in 0..self.adj[ai].len() {
            let bi = self.adj[ai][k] as usize;
            if self.seen[bi] == self.seen_epoch {
                continue;
            }
            self.seen[bi] = self.seen_epoch;
            let owner = self.match_b[bi];
            if owner == UNMATCHED || self.augment(owner as usize) {
                self.match_b[bi] = ai as u32;
                return true;
            }
        }
        false
    }
}

fn as_point_line(g: &BipartiteGraph, u: Vertex, v: Vertex) -> Result<(u32, u32)> {
    let (p, l) = match (u, v) {
        (Vertex::Left(p), Vertex::Right(l)) | (Vertex::Right(l), Vertex::Left(p)) => (p, l),
        _ => {
            return Err(Error::InvalidParams(
                "3-paths join vertices of opposite classes".into(),
            ))
        }
    };
    if p as usize >= g.left_count() || l as usize >= g.right_count() {
        return Err(Error::InvalidParams("vertex out of range".into()));
    }
    Ok((p, l))
}

/// Maximum number of internally vertex-disjoint `u–v` paths with exactly
/// three edges, as a maximum matching between `N(u)∖{v}` and `N(v)∖{u}`.
pub fn max_disjoint_3paths(g: &BipartiteGraph, u: Vertex, v: Vertex) -> Result<usize> {
    let (p, l) = as_point_line(g, u, v)?;
    Ok(Matcher::new(g.left_count()).run(g, p, l, usize::MAX).0)
}

/// The paths realising [`max_disjoint_3paths`].
pub fn disjoint_3paths(g: &BipartiteGraph, u: Vertex, v: Vertex) -> Result<Vec<ThreePath>> {
    let (p, l) = as_point_line(g, u, v)?;
    Ok(Matcher::new(g.left_count()).run(g, p, l, usize::MAX).1)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ThetaOptions {
    /// Match every reachable pair to completion instead of only the pairs
    /// that could reach `t`, so `max_disjoint_paths` is exact.
    pub exact_stats: bool,
}

struct PointResult {
    pairs: u64,
    max: usize,
    bound: usize,
    witness: Option<Witness>,
}

/// θ(3,t)-freeness: every (point, line) pair has at most `t-1` disjoint 3-paths.
///
/// For each point `u` the lines `v` are first scored by how many distinct
/// lines through `u` reach a point of `v`; only lines scoring at least `t`
/// (which includes every line within distance 3 that could fail) go to the
/// matching.
pub fn verify_theta_free(
    g: &BipartiteGraph,
    t: usize,
    opts: ThetaOptions,
) -> Result<VerificationReport> {
    if t < 2 {
        return Err(Error::InvalidParams(format!("t must be >= 2, got {t}")));
    }
    let start = Instant::now();
    let (nl, nr) = (g.left_count(), g.right_count());
    let (limit, threshold) = if opts.exact_stats {
        (usize::MAX, 1)
    } else {
        (t, t)
    };
    let results = par::map_range_init(
        nl,
        || {
            (
                Matcher::new(nl),
                vec![0u32; nr],
                vec![u32::MAX; nr],
                Vec::<u32>::new(),
            )
        },
        |(matcher, score, last_m, touched), u| {
            let u = u as u32;
            for &m in g.left_neighbors(u) {
                for &p in g.right_neighbors(m) {
                    if p == u {
                        continue;
                    }
                    for &v in g.left_neighbors(p) {
                        if v == m || last_m[v as usize] == m {
                            continue;
                        }
                        last_m[v as usize] = m;
                        if score[v as usize] == 0 {
                            touched.push(v);
                        }
                        score[v as usize] += 1;
                    }
                }
            }
            touched.sort_unstable();
            let mut res = PointResult {
                pairs: 0,
                max: 0,
                bound: 0,
                witness: None,
            };
            for &v in touched.iter() {
                res.bound = res.bound.max(score[v as usize] as usize);
                if (score[v as usize] as usize) < threshold {
                    continue;
                }
                res.pairs += 1;
                let (k, paths) = matcher.run(g, u, v, limit);
                res.max = res.max.max(k);
                if k >= t && res.witness.is_none() {
                    let paths = paths.into_iter().take(t).collect();
                    res.witness = Some(Witness::Theta {
                        hub_point: u,
                        hub_line: v,
                        paths,
                    });
                }
            }
            for &v in touched.iter() {
                score[v as usize] = 0;
                last_m[v as usize] = u32::MAX;
            }
            touched.clear();
            res
        },
    );
    let pairs_examined = results.iter().map(|r| r.pairs).sum();
    let max_disjoint_paths = results.iter().map(|r| r.max).max().unwrap_or(0);
    let max_path_bound = results.iter().map(|r| r.bound).max().unwrap_or(0);
    let witness = results.into_iter().find_map(|r| r.witness);
    Ok(VerificationReport {
        check: Check::Theta(t),
        outcome: if witness.is_some() {
            Outcome::Fail
        } else {
            Outcome::Pass
        },
        witness,
        stats: VerifyStats {
            pairs_examined,
            max_disjoint_paths,
            max_path_bound,
            exact: opts.exact_stats,
            girth: None,
            elapsed: start.elapsed(),
        },
        point_count: nl,
    })
}

/// Length of a shortest cycle, `None` for forests. Breadth-first search from
/// every vertex, cut off once the current depth cannot beat the best cycle.
pub fn girth(g: &BipartiteGraph) -> Option<usize> {
    let n = g.vertex_count();
    let best = AtomicUsize::new(usize::MAX);
    let nl = g.left_count();
    par::map_range_init(
        n,
        || {
            (
                vec![u32::MAX; n],
                vec![u32::MAX; n],
                Vec::<u32>::with_capacity(n),
                Vec::<u32>::new(),
            )
        },
        |(dist, parent, queue, visited), s| {
            queue.clear();
            dist[s] = 0;
            visited.push(s as u32);
            queue.push(s as u32);
            let mut head = 0;
            let mut local = best.load(Ordering::Relaxed);
            while head < queue.len() {
                let x = queue[head] as usize;
                head += 1;
                if 2 * dist[x] as usize >= local {
                    break;
                }
                let neigh: &[u32] = if x < nl {
                    g.left_neighbors(x as u32)
                } else {
                    g.right_neighbors((x - nl) as u32)
                };
                let offset = if x < nl { nl } else { 0 };
                for &w in neigh {
                    let w = w as usize + offset;
                    if dist[w] == u32::MAX {
                        dist[w] = dist[x] + 1;
                        parent[w] = x as u32;
                        visited.push(w as u32);
                        queue.push(w as u32);
                    } else if parent[x] != w as u32 {
                        local = local.min((dist[x] + dist[w] + 1) as usize);
                    }
                }
            }
            best.fetch_min(local, Ordering::Relaxed);
            for &v in visited.iter() {
                dist[v as usize] = u32::MAX;
                parent[v as usize] = u32::MAX;
            }
            visited.clear();
        },
    );
    let b = best.into_inner();
    (b != usize::MAX).then_some(b)
}

/// Girth check: pass iff there is no cycle shorter than `min`.
pub fn verify_girth(g: &BipartiteGraph, min: usize) -> VerificationReport {
    let start = Instant::now();
    let gi = girth(g);
    let pass = gi.is_none_or(|x| x >= min);
    VerificationReport {
        check: Check::Girth { min },
        outcome: if pass { Outcome::Pass } else { Outcome::Fail },
        witness: None,
        stats: VerifyStats {
            girth: Some(gi),
            elapsed: start.elapsed(),
            ..Default::default()
        },
        point_count: g.left_count(),
    }
}
