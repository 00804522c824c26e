//! Adding an edge can only create forbidden subgraphs, never remove them.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use theta_forge::graph::{families, BipartiteGraph, Vertex};
use theta_forge::verify::{find_c4, girth, max_disjoint_3paths, verify_theta_free, ThetaOptions};

fn graph_and_edge() -> impl Strategy<Value = (BipartiteGraph, u32, u32)> {
    (any::<u64>(), 1usize..12, 1usize..12, 0.05f64..0.5).prop_flat_map(|(seed, l, r, d)| {
        let g = families::random_bipartite(&mut ChaCha8Rng::seed_from_u64(seed), l, r, d);
        (Just(g), 0..l as u32, 0..r as u32)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn checks_are_monotone((g, u, v) in graph_and_edge()) {
        prop_assume!(!g.has_edge(u, v));
        let h = g.with_edge(u, v).unwrap();
        if !find_c4(&g).passed() {
            prop_assert!(!find_c4(&h).passed());
        }
        for t in 2..=3 {
            if !verify_theta_free(&g, t, ThetaOptions::default()).unwrap().passed() {
                prop_assert!(!verify_theta_free(&h, t, ThetaOptions::default()).unwrap().passed());
            }
        }
        if let Some(a) = girth(&g) {
            prop_assert!(girth(&h).is_some_and(|b| b <= a));
        }
        for a in 0..g.left_count() as u32 {
            for b in 0..g.right_count() as u32 {
                let before = max_disjoint_3paths(&g, Vertex::Left(a), Vertex::Right(b)).unwrap();
                let after = max_disjoint_3paths(&h, Vertex::Left(a), Vertex::Right(b)).unwrap();
                prop_assert!(after >= before);
            }
        }
    }

    #[test]
    fn verdicts_do_not_depend_on_thread_count((g, _u, _v) in graph_and_edge()) {
        let one = theta_forge::with_jobs(Some(1), || verify_theta_free(&g, 2, ThetaOptions { exact_stats: true }).unwrap());
        let many = theta_forge::with_jobs(Some(4), || verify_theta_free(&g, 2, ThetaOptions { exact_stats: true }).unwrap());
        prop_assert_eq!(one.render(), many.render());
        prop_assert_eq!(find_c4(&g).render(), theta_forge::with_jobs(Some(1), || find_c4(&g)).render());
    }
}
