//! The noncover n-algorithm and `e ∩ n` emptiness.
//!
//! `NC(S)` is the family of sets containing no member of `S`. It is built
//! like the hitting sets, with 0 and 1 swapped: imposing `Y` demands "some 0
//! inside `Y`", and the `n`-wildcard reads "at least one 0 here".

use crate::bits::VertexSet;
use crate::exact::{flag_parts, Part};
use crate::hypergraph::SetFamily;
use crate::row::{Kind, PendingRow, WildcardRow};

/// Sons of an `n`-row whose members do not contain `y`. Pairwise disjoint,
/// with union `{ x ∈ row : y ⊄ x }`.
pub fn impose_at_least_zero(row: &WildcardRow, y: &VertexSet) -> Vec<WildcardRow> {
    let live = y.difference(row.ones());
    if y.intersects(row.zeros()) || row.bubbles().iter().any(|b| b.is_subset(&live)) {
        return vec![row.clone()];
    }
    if live.is_empty() {
        return Vec::new();
    }
    let parts = flag_parts(row, &live, true);
    let mut sons = Vec::with_capacity(parts.len());
    for i in 0..parts.len() {
        let mut ones = row.ones().clone();
        let mut twos = row.twos().clone();
        let mut bubbles: Vec<VertexSet> = row.bubbles().to_vec();
        let mut fresh = Vec::new();
        for (j, p) in parts.iter().enumerate().take(i + 1) {
            match p {
                Part::Twos(set) => {
                    twos.difference_with(set);
                    if j < i {
                        ones.union_with(set);
                    } else {
                        fresh.push(set.clone());
                    }
                }
                Part::Bubble(b, set) => {
                    if j < i {
                        bubbles[*b].difference_with(set);
                        ones.union_with(set);
                    } else {
                        twos.union_with(&bubbles[*b].difference(set));
                        bubbles[*b] = set.clone();
                    }
                }
            }
        }
        bubbles.extend(fresh);
        sons.push(WildcardRow::assemble(Kind::N, row.zeros().clone(), ones, twos, bubbles));
    }
    sons
}

/// `NC(source)` as disjoint `n`-rows.
#[derive(Clone, Debug)]
pub struct NoncoverSet {
    pub rows: Vec<WildcardRow>,
}

impl NoncoverSet {
    /// Row-maximal members pooled over all rows, in row order.
    pub fn pooled_maxima(&self) -> SetFamily {
        let w = self.rows.first().map_or(0, |r| r.width());
        let mut fam = SetFamily::new(w);
        for r in &self.rows {
            for m in r.max_members().expect("n-row").into_members() {
                fam.push(m);
            }
        }
        fam
    }

    /// The maximal members of the union: complements of the minimal
    /// complements of the pooled row maxima.
    pub fn maximal_members(&self) -> SetFamily {
        let pooled = self.pooled_maxima();
        let w = pooled.width();
        let comp = SetFamily::from_members(w, pooled.iter().map(|m| m.complement()).collect()).unwrap();
        let min = crate::vlayout::minimize_family(&comp);
        SetFamily::from_members(w, min.iter().map(|m| m.complement()).collect()).unwrap()
    }
}

/// Imposes the members of `source` in order on the all-twos `n`-row.
pub fn enumerate_nc(source: &SetFamily) -> NoncoverSet {
    let members = source.members();
    let mut stack = vec![PendingRow {
        row: WildcardRow::all_twos(source.width(), Kind::N),
        next: 0,
    }];
    let mut rows = Vec::new();
    while let Some(PendingRow { row, next }) = stack.pop() {
        if next == members.len() {
            rows.push(row);
            continue;
        }
        for s in impose_at_least_zero(&row, &members[next]).into_iter().rev() {
            stack.push(PendingRow { row: s, next: next + 1 });
        }
    }
    NoncoverSet { rows }
}

/// True iff the `e`-row and the `n`-row share no member.
///
/// Forced values are propagated to a fixpoint: an `e`-bubble with a forced
/// 1 is satisfied, one with a single unforced position forces it to 1, one
/// with none left is void; dually for `n`-bubbles. At the fixpoint every
/// open bubble has two free positions, and a common member exists.
pub fn e_intersect_n_empty(r: &WildcardRow, sigma: &WildcardRow) -> bool {
    debug_assert_eq!(r.width(), sigma.width());
    let mut one = r.ones().union(sigma.ones());
    let mut zero = r.zeros().union(sigma.zeros());
    if one.intersects(&zero) {
        return true;
    }
    // (bubble, demands a 1)
    let mut open: Vec<(&VertexSet, bool)> = r
        .bubbles()
        .iter()
        .map(|b| (b, true))
        .chain(sigma.bubbles().iter().map(|b| (b, false)))
        .collect();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k < open.len() {
            let (b, want_one) = open[k];
            let (hit, miss) = if want_one { (&one, &zero) } else { (&zero, &one) };
            if b.intersects(hit) {
                open.swap_remove(k);
                changed = true;
                continue;
            }
            let live = b.difference(miss);
            match live.len() {
                0 => return true,
                1 => {
                    let p = live.first().unwrap();
                    if want_one {
                        one.insert(p);
                    } else {
                        zero.insert(p);
                    }
                    open.swap_remove(k);
                    changed = true;
                    continue;
                }
                _ => {}
            }
            k += 1;
        }
        if !changed {
            return false;
        }
    }
}
