//! Brute-force oracles over the power set, for small widths only.
#![allow(dead_code)]

use minhit::{Hypergraph, SetFamily, VertexSet, WildcardRow};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn all_subsets(w: usize) -> impl Iterator<Item = VertexSet> {
    assert!(w <= 20);
    (0u64..1 << w).map(move |m| VertexSet::from_indices(w, (0..w).filter(|i| m >> i & 1 == 1)))
}

pub fn is_minimal_hs(h: &Hypergraph, z: &VertexSet) -> bool {
    h.is_hitting_set(z)
        && z.iter().all(|v| {
            let mut y = z.clone();
            y.remove(v);
            !h.is_hitting_set(&y)
        })
}

pub fn brute_hs(h: &Hypergraph) -> Vec<VertexSet> {
    all_subsets(h.width()).filter(|z| h.is_hitting_set(z)).collect()
}

pub fn brute_ehs(h: &Hypergraph) -> Vec<VertexSet> {
    all_subsets(h.width()).filter(|z| h.is_exact_hitting_set(z)).collect()
}

pub fn brute_mhs(h: &Hypergraph) -> Vec<VertexSet> {
    all_subsets(h.width()).filter(|z| is_minimal_hs(h, z)).collect()
}

/// Definition of MC: every element owns an edge meeting the set only there.
pub fn is_mc(h: &Hypergraph, z: &VertexSet) -> bool {
    z.iter().all(|b| h.edges().iter().any(|e| e.contains(b) && e.intersection_len(z) == 1))
}

pub fn brute_min_not_mc(h: &Hypergraph) -> Vec<VertexSet> {
    all_subsets(h.width())
        .filter(|z| {
            !is_mc(h, z)
                && z.iter().all(|v| {
                    let mut y = z.clone();
                    y.remove(v);
                    is_mc(h, &y)
                })
        })
        .collect()
}

pub fn brute_noncovers(f: &SetFamily) -> Vec<VertexSet> {
    all_subsets(f.width()).filter(|z| f.iter().all(|y| !y.is_subset(z))).collect()
}

/// Members of the rows, with a check that no member repeats.
pub fn disjoint_union(rows: &[WildcardRow]) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = rows.iter().flat_map(|r| r.members(1 << 22).unwrap()).collect();
    v.sort();
    let n = v.len();
    v.dedup();
    assert_eq!(n, v.len(), "rows overlap");
    v
}

pub fn sorted(mut v: Vec<VertexSet>) -> Vec<VertexSet> {
    v.sort();
    v
}

/// Random full hypergraph: `h` edges with sizes in `kmin..=kmax`, then every
/// uncovered vertex is added to a random edge.
pub fn random_full(rng: &mut ChaCha8Rng, w: usize, h: usize, kmin: usize, kmax: usize) -> Hypergraph {
    let mut edges: Vec<VertexSet> = (0..h)
        .map(|_| {
            let k = rng.gen_range(kmin..=kmax.min(w));
            VertexSet::from_indices(w, rand::seq::index::sample(rng, w, k))
        })
        .collect();
    for v in 0..w {
        if !edges.iter().any(|e| e.contains(v)) {
            let i = rng.gen_range(0..edges.len());
            edges[i].insert(v);
        }
    }
    Hypergraph::new(w, edges).unwrap()
}

pub fn set(w: usize, v: &[usize]) -> VertexSet {
    VertexSet::from_one_based(w, v.iter().copied()).unwrap()
}

pub fn lists(v: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut l: Vec<Vec<usize>> = v.iter().map(|z| z.to_one_based()).collect();
    l.sort();
    l
}
