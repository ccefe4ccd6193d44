//! Vertical layout: a set family stored column-wise.
//!
//! Column `j` of a [`BitMatrix`] is a bitstring over the members, with bit
//! `i` set iff vertex `j` belongs to member `i`. Most queries reduce to a few
//! word-parallel ORs (or saturating additions) of columns.

use std::collections::HashMap;

use crate::bits::{all_ones, words_for, VertexSet};
use crate::hypergraph::{Hypergraph, SetFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    width: usize,
    height: usize,
    cols: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn new(width: usize) -> Self {
        BitMatrix {
            width,
            height: 0,
            cols: vec![Vec::new(); width],
        }
    }

    pub fn from_sets(width: usize, sets: &[VertexSet]) -> Self {
        let mut m = BitMatrix {
            width,
            height: sets.len(),
            cols: vec![vec![0; words_for(sets.len())]; width],
        };
        for (i, s) in sets.iter().enumerate() {
            for j in s {
                m.cols[j][i / 64] |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn build(family: &SetFamily) -> Self {
        Self::from_sets(family.width(), family.members())
    }

    pub fn of_edges(h: &Hypergraph) -> Self {
        Self::from_sets(h.width(), h.edges())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn column(&self, j: usize) -> &[u64] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cols[j][i / 64] >> (i % 64) & 1 == 1
    }

    /// Member `i` as a vertex set.
    pub fn row(&self, i: usize) -> VertexSet {
        VertexSet::from_indices(self.width, (0..self.width).filter(|&j| self.get(i, j)))
    }

    /// Appends one member.
    pub fn push(&mut self, set: &VertexSet) {
        let i = self.height;
        self.height += 1;
        let words = words_for(self.height);
        for col in &mut self.cols {
            col.resize(words, 0);
        }
        for j in set {
            self.cols[j][i / 64] |= 1 << (i % 64);
        }
    }

    /// Bitwise OR of the chosen columns.
    pub fn or_columns<I: IntoIterator<Item = usize>>(&self, positions: I) -> Vec<u64> {
        let mut acc = vec![0u64; words_for(self.height)];
        for j in positions {
            for (a, c) in acc.iter_mut().zip(&self.cols[j]) {
                *a |= c;
            }
        }
        acc
    }

    fn is_all_ones(&self, v: &[u64]) -> bool {
        v == all_ones(self.height).as_slice()
    }

    /// True iff every member meets `positions`, i.e. the positions form a
    /// transversal of the family.
    pub fn covers_all(&self, positions: &VertexSet) -> bool {
        self.is_all_ones(&self.or_columns(positions))
    }

    /// Rows (as a bitstring) of the members contained in `z`.
    pub fn members_within(&self, z: &VertexSet) -> Vec<u64> {
        let outside = self.or_columns(z.complement().iter());
        all_ones(self.height)
            .into_iter()
            .zip(outside)
            .map(|(a, o)| a & !o)
            .collect()
    }

    /// True iff no member is a subset of `z`.
    pub fn none_within(&self, z: &VertexSet) -> bool {
        self.is_all_ones(&self.or_columns(z.complement().iter()))
    }

    /// Rows of the members meeting `positions` in at least two vertices.
    /// Columns are added with a two-bit saturating counter instead of ORed.
    pub fn at_least_two(&self, positions: &VertexSet) -> Vec<u64> {
        let words = words_for(self.height);
        let mut at1 = vec![0u64; words];
        let mut at2 = vec![0u64; words];
        for j in positions {
            for ((a1, a2), c) in at1.iter_mut().zip(at2.iter_mut()).zip(&self.cols[j]) {
                *a2 |= *a1 & c;
                *a1 |= c;
            }
        }
        at2
    }
}

/// Indices of the set bits of a row bitstring.
pub fn bit_indices(v: &[u64]) -> impl Iterator<Item = usize> + '_ {
    v.iter().enumerate().flat_map(|(k, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            }
        })
    })
}

/// Inclusion-minimal members of a family, deduplicated.
///
/// Members are swept by increasing cardinality. A candidate survives iff no
/// member kept so far lies inside it, which is one OR over the columns
/// outside the candidate.
pub fn minimize_family(family: &SetFamily) -> SetFamily {
    let w = family.width();
    let mut buckets: Vec<Vec<&VertexSet>> = Vec::new();
    for m in family {
        let k = m.len();
        if buckets.len() <= k {
            buckets.resize(k + 1, Vec::new());
        }
        buckets[k].push(m);
    }
    let mut kept = BitMatrix::new(w);
    let mut out = SetFamily::new(w);
    for mut bucket in buckets {
        bucket.sort();
        bucket.dedup();
        let fresh: Vec<&VertexSet> = bucket.into_iter().filter(|y| kept.none_within(y)).collect();
        for y in fresh {
            kept.push(y);
            out.push(y.clone());
        }
    }
    out
}

/// Classes of vertices lying in exactly the same hyperedges, ordered by
/// their least element.
pub fn equivalence_classes(h: &Hypergraph) -> Vec<VertexSet> {
    // transposed layout: one bitstring over the edges per vertex
    let m = BitMatrix::of_edges(h);
    let mut index: HashMap<&[u64], usize> = HashMap::new();
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..h.width() {
        let col = m.column(v);
        match index.get(col) {
            Some(&c) => classes[c].insert(v),
            None => {
                index.insert(col, classes.len());
                classes.push(VertexSet::from_indices(h.width(), [v]));
            }
        }
    }
    classes
}

/// True iff no hyperedge lies inside `zeros`, i.e. some hitting set avoids
/// all of `zeros`. `edges` is the matrix of the hyperedges.
pub fn hs_feasible(edges: &BitMatrix, zeros: &VertexSet) -> bool {
    edges.none_within(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(w: usize, lists: &[&[usize]]) -> SetFamily {
        SetFamily::from_lists(w, lists.iter().map(|l| l.iter().copied())).unwrap()
    }

    fn h2() -> Hypergraph {
        Hypergraph::from_lists(6, [vec![1, 2, 5], vec![3, 4], vec![4, 5, 6], vec![1, 3, 5], vec![2, 6]])
            .unwrap()
    }

    #[test]
    fn matrix_layout() {
        let f = fam(3, &[&[1], &[1, 2]]);
        let m = BitMatrix::build(&f);
        assert_eq!(m.height(), 2);
        assert_eq!(m.column(0), &[0b11]);
        assert_eq!(m.column(1), &[0b10]);
        assert_eq!(m.row(1).to_one_based(), vec![1, 2]);
        let e = BitMatrix::build(&SetFamily::new(4));
        assert_eq!(e.height(), 0);
        assert!(e.covers_all(&VertexSet::empty(4)));
    }

    #[test]
    fn cover_tests_on_min_not_mc() {
        // the eight minimal non-MC sets of H2
        let g = fam(
            6,
            &[&[1, 2, 3], &[1, 5], &[1, 2, 6], &[2, 5, 6], &[1, 3, 4], &[3, 4, 5], &[3, 4, 6], &[2, 4, 6]],
        );
        let m = BitMatrix::build(&g);
        let x = VertexSet::from_one_based(6, [1, 2, 5]).unwrap();
        assert!(!m.covers_all(&x));
        let z = VertexSet::from_one_based(6, [2, 3, 4]).unwrap();
        assert!(m.none_within(&z));
        let z2 = VertexSet::from_one_based(6, [1, 2, 3]).unwrap();
        assert!(!m.none_within(&z2));
        assert_eq!(bit_indices(&m.members_within(&z2)).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn at_least_two_counts() {
        let f = fam(5, &[&[1, 2], &[1, 3, 4], &[5], &[2, 3, 4, 5]]);
        let m = BitMatrix::build(&f);
        let p = VertexSet::from_one_based(5, [2, 3, 4]).unwrap();
        assert_eq!(bit_indices(&m.at_least_two(&p)).collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn minimize() {
        let f = fam(5, &[&[1, 5], &[1, 4, 5], &[2], &[2], &[1, 5]]);
        assert_eq!(minimize_family(&f).sorted_lists(), vec![vec![1, 5], vec![2]]);
        let a = fam(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(minimize_family(&a).len(), 3);
        let with_empty = fam(3, &[&[1], &[]]);
        assert_eq!(minimize_family(&with_empty).sorted_lists(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn classes_of_h1() {
        let h1 = Hypergraph::from_lists(9, [vec![2, 3, 4, 6], vec![1, 2, 3, 4, 5, 7], vec![2, 8, 9]])
            .unwrap();
        let cls: Vec<Vec<usize>> = equivalence_classes(&h1).iter().map(|c| c.to_one_based()).collect();
        assert_eq!(cls, vec![vec![1, 5, 7], vec![2], vec![3, 4], vec![6], vec![8, 9]]);
        let single = Hypergraph::from_lists(4, [vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(equivalence_classes(&single).len(), 1);
    }

    #[test]
    fn feasibility() {
        let h = h2();
        let m = BitMatrix::of_edges(&h);
        assert!(!hs_feasible(&m, &VertexSet::from_one_based(6, [3, 4]).unwrap()));
        assert!(hs_feasible(&m, &VertexSet::empty(6)));
        assert!(hs_feasible(&m, &VertexSet::from_one_based(6, [1, 2]).unwrap()));
    }
}
