use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use tdmsd::canon::canonical_code;
use tdmsd::characterization::{
    characterize_with, lemma14_sufficient_sd_gt_one, longest_path, predicts_sd_one, Branch, SelectorPolicy,
};
use tdmsd::domination::{
    all_min_total_dominating_sets, gamma, gamma_t, gamma_t_set_avoiding_leaves, is_total_dominating,
};
use tdmsd::enumerate::{enumerate_connected_graphs, enumerate_trees};
use tdmsd::family::{generate_family, verify_bc_property};
use tdmsd::graph::named::{cycle, path};
use tdmsd::graph::{is_star, private_neighborhood, structure_profile};
use tdmsd::subdivision::{msd_gamma_t, sd_gamma_t};
use tdmsd::{Edge, Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.1f64..0.9).prop_map(|(n, seed, p)| {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

fn connected_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_strategy(max_n).prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subdivision_sizes(g in connected_strategy(9), idx in any::<usize>(), t in 1usize..4) {
        let edges = g.edges();
        let e = edges[idx % edges.len()];
        let h = g.subdivide(e, t).unwrap();
        prop_assert_eq!(h.n(), g.n() + t);
        prop_assert_eq!(h.m(), g.m() + t);
    }

    #[test]
    fn subdividing_paths_and_cycles(n in 3usize..12, t in 1usize..5) {
        let p = path(n).subdivide(Edge::new(1, 2), t).unwrap();
        prop_assert_eq!(canonical_code(&p).unwrap(), canonical_code(&path(n + t)).unwrap());
        let c = cycle(n).subdivide(Edge::new(0, n - 1), t).unwrap();
        prop_assert_eq!(canonical_code(&c).unwrap(), canonical_code(&cycle(n + t)).unwrap());
    }

    #[test]
    fn private_neighborhood_of_singleton(g in graph_strategy(10), u in 0usize..10) {
        let u = u % g.n();
        let pn = private_neighborhood(&g, u, VertexSet::singleton(u)).unwrap();
        prop_assert_eq!(pn, g.closed_neighbors(u));
    }

    #[test]
    fn canonical_code_invariance(g in graph_strategy(10), seed in any::<u64>()) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..g.n()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(canonical_code(&g.permuted(&order)).unwrap(), canonical_code(&g).unwrap());
    }

    #[test]
    fn structure_profile_consistency(g in connected_strategy(12)) {
        prop_assume!(g.n() >= 3);
        let p = structure_profile(&g);
        for s in p.strong_supports {
            prop_assert!(g.neighbors(s).intersection(p.leaves).len() >= 2);
        }
        for e in &p.pendant_edges {
            prop_assert_eq!(u8::from(g.degree(e.u) == 1) + u8::from(g.degree(e.v) == 1), 1);
        }
    }

    #[test]
    fn domination_bounds(g in graph_strategy(11)) {
        let d = gamma(&g);
        prop_assert!(tdmsd::domination::is_dominating(&g, d.witness));
        if let Ok(t) = gamma_t(&g) {
            prop_assert!(t.value >= 2);
            prop_assert!(t.value >= d.value);
            prop_assert!(is_total_dominating(&g, t.witness));
        }
    }

    #[test]
    fn minimum_sets_are_minimum(g in graph_strategy(9)) {
        prop_assume!(g.isolated_vertex().is_none());
        let k = gamma_t(&g).unwrap().value;
        let sets = all_min_total_dominating_sets(&g).unwrap();
        prop_assert!(!sets.is_empty());
        prop_assert!(sets.iter().all(|s| s.len() == k && is_total_dominating(&g, *s)));
        let smaller = (0u64..1 << g.n())
            .filter(|m| (m.count_ones() as usize) < k)
            .any(|m| is_total_dominating(&g, VertexSet::from_bits(m)));
        prop_assert!(!smaller);
    }

    #[test]
    fn leaf_avoiding_sets(g in connected_strategy(10)) {
        prop_assume!(g.n() >= 3 && !is_star(&g));
        let s = gamma_t_set_avoiding_leaves(&g).unwrap();
        prop_assert_eq!(s.len(), gamma_t(&g).unwrap().value);
        prop_assert!(s.is_disjoint(g.leaves()));
    }

    #[test]
    fn sd_one_iff_msd_one(g in connected_strategy(8)) {
        prop_assume!(g.n() >= 3);
        let sd1 = sd_gamma_t(&g, 1).unwrap().value == Some(1);
        let msd1 = msd_gamma_t(&g, 1).unwrap().value == Some(1);
        prop_assert_eq!(sd1, msd1);
    }

    #[test]
    fn witnesses_reproduce_increase(g in connected_strategy(8)) {
        prop_assume!(g.n() >= 3);
        for r in [sd_gamma_t(&g, g.m()).unwrap(), msd_gamma_t(&g, 3).unwrap()] {
            let h = r.witness_graph(&g).unwrap().unwrap();
            prop_assert_eq!(Some(gamma_t(&h).unwrap().value), r.increased_value);
            prop_assert!(r.increased_value.unwrap() > r.base_value);
        }
    }
}

#[test]
fn adjacent_supports_force_sd_one() {
    for n in 3..=7 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let p = structure_profile(&g);
            let adjacent = g.edges().iter().any(|e| p.supports.contains(e.u) && p.supports.contains(e.v));
            if adjacent {
                assert_eq!(sd_gamma_t(&g, 1).unwrap().value, Some(1));
            }
        }
    }
}

#[test]
fn family_members_have_sd_and_msd_three() {
    for t in generate_family(13) {
        assert_eq!(sd_gamma_t(&t.tree, t.tree.m()).unwrap().value, Some(3));
        assert_eq!(msd_gamma_t(&t.tree, 3).unwrap().value, Some(3));
        assert!(verify_bc_property(&t));
        // orders 6 + 3a + 4b with gamma_t 4 + 2(a + b)
        let gt = gamma_t(&t.tree).unwrap().value;
        let ok = (0..=3).any(|a| (0..=2).any(|b| 6 + 3 * a + 4 * b == t.tree.n() && gt == 4 + 2 * (a + b)));
        assert!(ok, "{t}");
    }
}

#[test]
fn selector_policies_agree_on_small_trees() {
    for n in 3..=11 {
        for t in enumerate_trees(n).unwrap() {
            let sd1 = sd_gamma_t(&t, 1).unwrap().value == Some(1);
            for policy in [SelectorPolicy::EitherBranch, SelectorPolicy::EveryBranch] {
                let fired = characterize_with(&t, policy).unwrap() != Branch::None;
                assert_eq!(fired, sd1);
            }
        }
    }
}

#[test]
fn characterization_and_lemma14_exclusive() {
    for n in 3..=11 {
        for t in enumerate_trees(n).unwrap() {
            assert!(!(predicts_sd_one(&t).unwrap() && lemma14_sufficient_sd_gt_one(&t).unwrap()));
        }
    }
}

#[test]
fn double_bfs_longest_path_ends() {
    for n in 7..=13 {
        for t in enumerate_trees(n).unwrap() {
            if msd_gamma_t(&t, 3).unwrap().value != Some(3) {
                continue;
            }
            let p = longest_path(&t).unwrap();
            let leaves = t.leaves();
            for q in [p.clone(), p.iter().rev().copied().collect()] {
                assert_eq!((t.degree(q[1]), t.degree(q[2])), (2, 2));
                assert!(t.neighbors(q[3]).is_disjoint(leaves));
            }
        }
    }
}
