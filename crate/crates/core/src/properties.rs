//! Cross-module property tests against independent oracles.

use crate::coloring::{
    chi_minus_coloring, chromatic_number, clique_number, is_k_colorable, is_perfect, is_weakly_perfect,
};
use crate::corefinder::{core_si_lower_bound, find_core, is_vertex_critical, oracle_core};
use crate::harness::corpus::random_graph;
use crate::{Graph, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Plain backtracking over colour assignments, no heuristics.
fn naive_chi(g: &Graph) -> usize {
    fn extend(g: &Graph, k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.order() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.adjacent(u, v) || colors[u] != c) {
                colors.push(c);
                if extend(g, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (1..=g.order()).find(|&k| extend(g, k, &mut Vec::new())).unwrap()
}

fn without(g: &Graph, v: usize) -> Graph {
    let mut set = g.vertices();
    set.remove(v);
    g.induced_subgraph(set).unwrap().graph
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u128..(1u128 << n)).map(VertexSet::from_mask)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn chi_matches_naive_and_has_witness(g in arb_graph(8)) {
        let r = chromatic_number(&g).unwrap();
        prop_assert_eq!(r.chi, naive_chi(&g));
        prop_assert!(r.witness.is_proper(&g));
        prop_assert_eq!(r.witness.colors(), r.chi);
        prop_assert!(is_k_colorable(&g, r.chi - 1).is_none() || r.chi == 0);
    }

    #[test]
    fn chi_monotone_under_vertex_deletion(g in arb_graph(7)) {
        let chi = chromatic_number(&g).unwrap().chi;
        for v in 0..g.order() {
            if g.order() == 1 {
                break;
            }
            let c = chromatic_number(&without(&g, v)).unwrap().chi;
            prop_assert!(c == chi || c + 1 == chi);
        }
    }

    #[test]
    fn clique_chi_degree_bounds(g in arb_graph(9)) {
        let chi = chromatic_number(&g).unwrap().chi;
        let (omega, clique) = clique_number(&g).unwrap();
        prop_assert!(omega <= chi && chi <= g.max_degree() + 1);
        prop_assert_eq!(clique.len(), omega);
        prop_assert!(clique.iter().all(|u| clique.iter().all(|v| u == v || g.adjacent(u, v))));
        // Brooks.
        if g.is_connected() && !g.is_complete() && !g.is_odd_cycle() {
            prop_assert!(chi <= g.max_degree());
        }
    }

    #[test]
    fn perfect_iff_every_induced_subgraph_weakly_perfect(g in arb_graph(8)) {
        let direct = subsets(g.order()).all(|s| is_weakly_perfect(&g.induced_subgraph(s).unwrap().graph));
        prop_assert_eq!(is_perfect(&g).unwrap(), direct);
    }

    #[test]
    fn core_matches_oracle(g in arb_graph(9)) {
        let core = find_core(&g).unwrap();
        let o = oracle_core(&g).unwrap();
        prop_assert_eq!(core.si, o.si);
        prop_assert!(o.contains(core.vertices));
    }

    #[test]
    fn core_invariants(g in arb_graph(9)) {
        let core = find_core(&g).unwrap();
        let h = core.subgraph(&g).unwrap();
        let chi = chromatic_number(&g).unwrap().chi;
        prop_assert_eq!(core.chi, chi);
        prop_assert_eq!(chromatic_number(&h).unwrap().chi, chi);
        prop_assert!(h.is_connected());
        prop_assert!(is_vertex_critical(&h));
        prop_assert!(h.min_degree() + 1 >= chi);
        let lb = core_si_lower_bound(chi).unwrap();
        prop_assert!(core.si >= lb);
        prop_assert_eq!(core.si == lb, h.is_complete());
        prop_assert_eq!(core.host_hash, g.content_hash());
    }

    #[test]
    fn component_rule(g in arb_graph(5), h in arb_graph(5)) {
        let u = g.disjoint_union(&h).unwrap();
        let (cg, ch) = (find_core(&g).unwrap(), find_core(&h).unwrap());
        let top = cg.chi.max(ch.chi);
        let expected = [&cg, &ch].iter().filter(|c| c.chi == top).map(|c| c.si).min().unwrap();
        let cu = find_core(&u).unwrap();
        prop_assert_eq!((cu.chi, cu.si), (top, expected));
    }

    #[test]
    fn mycielski_raises_chi_by_one(g in arb_graph(6)) {
        let m = g.mycielski().unwrap();
        prop_assert_eq!((m.order(), m.size()), (2 * g.order() + 1, 3 * g.size() + g.order()));
        if g.size() > 0 {
            prop_assert_eq!(chromatic_number(&m).unwrap().chi, chromatic_number(&g).unwrap().chi + 1);
        }
    }
}

/// Class sizes of χ⁻ dominate, lexicographically, every χ-colouring found by
/// randomized greedy colouring.
#[test]
fn chi_minus_dominates_random_restarts() {
    for seed in 0..12u64 {
        let g = random_graph(8 + (seed % 3) as usize, 0.4, 100 + seed).unwrap();
        let chi = chromatic_number(&g).unwrap().chi;
        let best = chi_minus_coloring(&g).unwrap();
        assert_eq!(best.colors(), chi);
        let best_sizes = best.class_sizes();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..g.order()).collect();
        let mut hits = 0;
        for _ in 0..1000 {
            order.shuffle(&mut rng);
            let mut color = vec![usize::MAX; g.order()];
            for &v in &order {
                color[v] = (0..).find(|&c| (0..g.order()).all(|u| !g.adjacent(u, v) || color[u] != c)).unwrap();
            }
            let k = color.iter().max().unwrap() + 1;
            if k != chi {
                continue;
            }
            hits += 1;
            let mut sizes = vec![0; k];
            for &c in &color {
                sizes[c] += 1;
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            assert!(sizes <= best_sizes, "seed {seed}: {sizes:?} beats {best_sizes:?}");
        }
        assert!(hits > 0, "seed {seed}: no random chi-colouring found");
    }
}
