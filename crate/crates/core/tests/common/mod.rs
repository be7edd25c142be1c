#![allow(dead_code)]

use indom::Graph;
use proptest::prelude::*;
use rand::Rng;

/// G(n, p) with edges drawn in lexicographic order.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

pub fn arb_nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("nonempty", |g| g.order() > 0)
}

/// Isomorphism by trying every permutation; only for tiny graphs.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let n = a.order();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, a: &Graph, b: &Graph) -> bool {
        if k <= 1 {
            return a.relabel(perm).unwrap() == *b;
        }
        for i in 0..k {
            if heap(k - 1, perm, a, b) {
                return true;
            }
            let j = if k.is_multiple_of(2) { i } else { 0 };
            perm.swap(j, k - 1);
        }
        false
    }
    heap(n, &mut perm, a, b)
}
