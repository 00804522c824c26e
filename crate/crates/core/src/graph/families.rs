//! Small named bipartite graphs used as fixtures and negative controls.

use rand::Rng;

use super::BipartiteGraph;

pub fn complete_bipartite(a: usize, b: usize) -> BipartiteGraph {
    let edges = (0..a as u32).flat_map(|u| (0..b as u32).map(move |v| (u, v)));
    BipartiteGraph::from_edges(a, b, edges).unwrap()
}

/// The cycle `C_{2k}`: left `i` is joined to right `i` and right `i-1`.
pub fn even_cycle(k: usize) -> BipartiteGraph {
    assert!(k >= 2, "C_2k needs k >= 2");
    let k32 = k as u32;
    let edges = (0..k32).flat_map(|i| [(i, i), (i, (i + k32 - 1) % k32)]);
    BipartiteGraph::from_edges(k, k, edges).unwrap()
}

/// Path on `2k` vertices alternating left/right, starting on the left.
pub fn path(k: usize) -> BipartiteGraph {
    let k32 = k as u32;
    let edges = (0..k32).flat_map(|i| {
        let back = (i > 0).then(|| (i, i - 1));
        std::iter::once((i, i)).chain(back)
    });
    BipartiteGraph::from_edges(k, k, edges).unwrap()
}

/// θ with `t` internally disjoint 3-edge paths between left 0 and right 0.
/// Path `i` is `L0 – R(i+1) – L(i+1) – R0`.
pub fn theta3(t: usize) -> BipartiteGraph {
    let edges = (1..=t as u32).flat_map(|i| [(0, i), (i, i), (i, 0)]);
    BipartiteGraph::from_edges(t + 1, t + 1, edges).unwrap()
}

/// A star `K_{1,leaves}` hanging off left 0, with each leaf extended by one
/// extra left vertex: a tree with `2·leaves + 1` vertices.
pub fn spider(leaves: usize) -> BipartiteGraph {
    let l = leaves as u32;
    let edges = (0..l).flat_map(|i| [(0, i), (i + 1, i)]);
    BipartiteGraph::from_edges(leaves + 1, leaves, edges).unwrap()
}

/// Each of the `left × right` edges present independently with probability `density`.
pub fn random_bipartite<R: Rng>(
    rng: &mut R,
    left: usize,
    right: usize,
    density: f64,
) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..left as u32 {
        for v in 0..right as u32 {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(left, right, edges).unwrap()
}
