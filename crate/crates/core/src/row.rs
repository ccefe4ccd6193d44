//! Wildcard rows.
//!
//! A row over `[w]` fixes some positions to 0 or 1, leaves some free (`2`)
//! and groups the rest into disjoint bubbles. All bubbles of a row share one
//! [`Kind`]:
//!
//! * `g`: exactly one 1 inside the bubble,
//! * `e`: at least one 1 inside the bubble,
//! * `n`: at least one 0 inside the bubble.
//!
//! The text form has one token per position, e.g. `2 e1 e2 0 1 e2 0 e1 2 e2 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::hypergraph::SetFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "g")]
    G,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "n")]
    N,
}

impl Kind {
    pub fn symbol(self) -> char {
        match self {
            Kind::G => 'g',
            Kind::E => 'e',
            Kind::N => 'n',
        }
    }

    fn from_symbol(c: char) -> Option<Kind> {
        match c {
            'g' => Some(Kind::G),
            'e' => Some(Kind::E),
            'n' => Some(Kind::N),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WildcardRow {
    width: usize,
    kind: Kind,
    zeros: VertexSet,
    ones: VertexSet,
    twos: VertexSet,
    bubbles: Vec<VertexSet>,
}

impl WildcardRow {
    /// Builds a row, checking that the parts partition `[w]`.
    ///
    /// Bubbles of size 1 are normalized (a `g`/`e` singleton becomes a fixed
    /// 1, an `n` singleton a fixed 0) and bubbles are put in canonical order.
    /// Empty bubbles are rejected since they would make the row empty.
    pub fn new(
        kind: Kind,
        zeros: VertexSet,
        ones: VertexSet,
        twos: VertexSet,
        bubbles: Vec<VertexSet>,
    ) -> Result<Self> {
        let width = zeros.width();
        let mut seen = VertexSet::empty(width);
        for part in [&zeros, &ones, &twos].into_iter().chain(bubbles.iter()) {
            if part.width() != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: part.width(),
                });
            }
            if seen.intersects(part) {
                return Err(Error::InvalidRow("overlapping parts".into()));
            }
            seen.union_with(part);
        }
        if seen.len() != width {
            return Err(Error::InvalidRow("parts do not cover every position".into()));
        }
        if bubbles.iter().any(|b| b.is_empty()) {
            return Err(Error::InvalidRow("empty bubble".into()));
        }
        Ok(Self::assemble(kind, zeros, ones, twos, bubbles))
    }

    /// Normalizes and sorts without the partition check. Callers inside the
    /// crate guarantee the partition and nonempty bubbles.
    pub(crate) fn assemble(
        kind: Kind,
        mut zeros: VertexSet,
        mut ones: VertexSet,
        twos: VertexSet,
        mut bubbles: Vec<VertexSet>,
    ) -> Self {
        bubbles.retain(|b| {
            debug_assert!(!b.is_empty());
            if b.len() == 1 {
                let v = b.first().unwrap();
                match kind {
                    Kind::G | Kind::E => ones.insert(v),
                    Kind::N => zeros.insert(v),
                }
                false
            } else {
                true
            }
        });
        bubbles.sort_by_key(|b| b.first());
        WildcardRow {
            width: zeros.width(),
            kind,
            zeros,
            ones,
            twos,
            bubbles,
        }
    }

    /// The row whose every position is free: all of `P[w]`.
    pub fn all_twos(width: usize, kind: Kind) -> Self {
        WildcardRow {
            width,
            kind,
            zeros: VertexSet::empty(width),
            ones: VertexSet::empty(width),
            twos: VertexSet::full(width),
            bubbles: Vec::new(),
        }
    }

    /// A row containing exactly one set.
    pub fn singleton(kind: Kind, set: &VertexSet) -> Self {
        WildcardRow {
            width: set.width(),
            kind,
            zeros: set.complement(),
            ones: set.clone(),
            twos: VertexSet::empty(set.width()),
            bubbles: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn zeros(&self) -> &VertexSet {
        &self.zeros
    }

    pub fn ones(&self) -> &VertexSet {
        &self.ones
    }

    pub fn twos(&self) -> &VertexSet {
        &self.twos
    }

    pub fn bubbles(&self) -> &[VertexSet] {
        &self.bubbles
    }

    /// The same member set read as a row of another kind. Only legal when
    /// the row has no bubbles.
    pub fn with_kind(&self, kind: Kind) -> Option<Self> {
        if !self.bubbles.is_empty() && kind != self.kind {
            return None;
        }
        let mut r = self.clone();
        r.kind = kind;
        Some(r)
    }

    /// Number of members: `2^|twos|` times one factor per bubble.
    pub fn cardinality(&self) -> BigUint {
        let mut c = BigUint::one() << self.twos.len();
        for b in &self.bubbles {
            c *= bubble_factor(self.kind, b.len());
        }
        c
    }

    pub fn contains(&self, x: &VertexSet) -> bool {
        if x.intersects(&self.zeros) || !self.ones.is_subset(x) {
            return false;
        }
        self.bubbles.iter().all(|b| {
            let k = b.intersection_len(x);
            match self.kind {
                Kind::G => k == 1,
                Kind::E => k >= 1,
                Kind::N => k < b.len(),
            }
        })
    }

    /// `|ones| + #bubbles`, the common cardinality of all row-minimal sets
    /// of an `e`-row.
    pub fn degree(&self) -> usize {
        self.ones.len() + self.bubbles.len()
    }

    /// Number of row-minimal members of an `e`-row (product of bubble sizes).
    pub fn promise_size(&self) -> BigUint {
        self.bubbles
            .iter()
            .fold(BigUint::one(), |acc, b| acc * BigUint::from(b.len()))
    }

    /// Row-minimal members of an `e`-row: twos set to 0 and exactly one 1
    /// per bubble.
    pub fn min_members(&self) -> Result<SetFamily> {
        self.require(Kind::E)?;
        Ok(SetFamily::from_members(self.width, self.pick_one_each(&self.ones, false)).unwrap())
    }

    /// Row-maximal members of an `n`-row: twos set to 1 and exactly one 0
    /// per bubble.
    pub fn max_members(&self) -> Result<SetFamily> {
        self.require(Kind::N)?;
        let base = self.ones.union(&self.twos);
        Ok(SetFamily::from_members(self.width, self.pick_one_each(&base, true)).unwrap())
    }

    /// One element per bubble, in mixed-radix order (last bubble fastest).
    /// With `drop` the chosen element is removed from `base ∪ bubble`
    /// instead of being added to `base`.
    fn pick_one_each(&self, base: &VertexSet, drop: bool) -> Vec<VertexSet> {
        let mut out = vec![base.clone()];
        for b in &self.bubbles {
            let mut next = Vec::with_capacity(out.len() * b.len());
            for s in &out {
                for v in b {
                    let mut t = s.clone();
                    if drop {
                        t.union_with(b);
                        t.remove(v);
                    } else {
                        t.insert(v);
                    }
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }

    /// Turns a very-good `e`-row into the `g`-row whose members are exactly
    /// the row-minimal sets.
    pub fn finalize_e_to_g(&self) -> Result<Self> {
        self.require(Kind::E)?;
        Ok(WildcardRow {
            width: self.width,
            kind: Kind::G,
            zeros: self.zeros.union(&self.twos),
            ones: self.ones.clone(),
            twos: VertexSet::empty(self.width),
            bubbles: self.bubbles.clone(),
        })
    }

    /// Streams every member exactly once. Refuses when the row has more
    /// than `limit` members.
    pub fn expand(&self, limit: u64) -> Result<Expand<'_>> {
        let card = self.cardinality();
        if card > BigUint::from(limit) {
            return Err(Error::TooLarge {
                size: card.to_string(),
                limit,
            });
        }
        Ok(Expand::new(self))
    }

    /// All members, collected. Convenience for small rows.
    pub fn members(&self, limit: u64) -> Result<Vec<VertexSet>> {
        Ok(self.expand(limit)?.collect())
    }

    pub(crate) fn require(&self, kind: Kind) -> Result<()> {
        if self.kind == kind || (self.bubbles.is_empty() && kind != Kind::G) {
            Ok(())
        } else {
            Err(Error::WrongKind {
                expected: kind.symbol(),
                found: self.kind.symbol(),
            })
        }
    }

    /// Parses the text form, reading bubble-free rows as `kind`.
    pub fn parse_as(text: &str, kind: Kind) -> Result<Self> {
        let mut row = parse_row(text, Some(kind))?;
        if row.bubbles.is_empty() {
            row.kind = kind;
        }
        Ok(row)
    }

    /// Symbol at a 0-based position: `0`, `1`, `2` or `<kind><index>`.
    pub fn token(&self, pos: usize) -> String {
        if self.zeros.contains(pos) {
            "0".into()
        } else if self.ones.contains(pos) {
            "1".into()
        } else if self.twos.contains(pos) {
            "2".into()
        } else {
            let k = self.bubbles.iter().position(|b| b.contains(pos)).unwrap();
            format!("{}{}", self.kind.symbol(), k + 1)
        }
    }
}

fn bubble_factor(kind: Kind, eps: usize) -> BigUint {
    match kind {
        Kind::G => BigUint::from(eps),
        Kind::E | Kind::N => (BigUint::one() << eps) - 1u32,
    }
}

impl fmt::Display for WildcardRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for pos in 0..self.width {
            if pos > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.token(pos))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WildcardRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Rows without any bubble token parse as `g`-rows; use
/// [`WildcardRow::parse_as`] to pick another kind.
impl FromStr for WildcardRow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_row(s, None)
    }
}

fn parse_row(text: &str, expected: Option<Kind>) -> Result<WildcardRow> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let w = tokens.len();
    let mut zeros = VertexSet::empty(w);
    let mut ones = VertexSet::empty(w);
    let mut twos = VertexSet::empty(w);
    let mut kind = None;
    let mut bubbles: Vec<(usize, VertexSet)> = Vec::new();
    for (pos, tok) in tokens.iter().enumerate() {
        match *tok {
            "0" => zeros.insert(pos),
            "1" => ones.insert(pos),
            "2" => twos.insert(pos),
            _ => {
                let mut chars = tok.chars();
                let k = chars
                    .next()
                    .and_then(Kind::from_symbol)
                    .ok_or_else(|| Error::InvalidRow(format!("bad token `{tok}`")))?;
                let idx: usize = chars
                    .as_str()
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::InvalidRow(format!("bad bubble index in `{tok}`")))?;
                match kind {
                    None => kind = Some(k),
                    Some(prev) if prev != k => {
                        return Err(Error::InvalidRow("mixed bubble kinds".into()))
                    }
                    _ => {}
                }
                match bubbles.iter_mut().find(|(i, _)| *i == idx) {
                    Some((_, b)) => b.insert(pos),
                    None => bubbles.push((idx, VertexSet::from_indices(w, [pos]))),
                }
            }
        }
    }
    if let (Some(k), Some(e)) = (kind, expected) {
        if k != e {
            return Err(Error::WrongKind {
                expected: e.symbol(),
                found: k.symbol(),
            });
        }
    }
    let kind = kind.or(expected).unwrap_or(Kind::G);
    Ok(WildcardRow::assemble(
        kind,
        zeros,
        ones,
        twos,
        bubbles.into_iter().map(|(_, b)| b).collect(),
    ))
}

#[derive(Serialize, Deserialize)]
struct RowRepr {
    width: usize,
    kind: Kind,
    zeros: Vec<usize>,
    ones: Vec<usize>,
    twos: Vec<usize>,
    bubbles: Vec<Vec<usize>>,
}

impl Serialize for WildcardRow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RowRepr {
            width: self.width,
            kind: self.kind,
            zeros: self.zeros.to_one_based(),
            ones: self.ones.to_one_based(),
            twos: self.twos.to_one_based(),
            bubbles: self.bubbles.iter().map(|b| b.to_one_based()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WildcardRow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = RowRepr::deserialize(d)?;
        let set = |v: Vec<usize>| {
            VertexSet::from_one_based(r.width, v)
                .ok_or_else(|| D::Error::custom("position out of range"))
        };
        let zeros = set(r.zeros)?;
        let ones = set(r.ones)?;
        let twos = set(r.twos)?;
        let bubbles = r
            .bubbles
            .into_iter()
            .map(set)
            .collect::<std::result::Result<Vec<_>, _>>()?;
        WildcardRow::new(r.kind, zeros, ones, twos, bubbles).map_err(D::Error::custom)
    }
}

/// A row together with the index of the first hyperedge (or family member)
/// not yet imposed on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingRow {
    pub row: WildcardRow,
    pub next: usize,
}

/// Iterator over the members of a row. See [`WildcardRow::expand`].
pub struct Expand<'a> {
    row: &'a WildcardRow,
    twos: Vec<usize>,
    bubbles: Vec<Vec<usize>>,
    // one counter per free position followed by one per bubble
    radix: Vec<u64>,
    digits: Vec<u64>,
    done: bool,
}

impl<'a> Expand<'a> {
    fn new(row: &'a WildcardRow) -> Self {
        let twos: Vec<usize> = row.twos.iter().collect();
        let bubbles: Vec<Vec<usize>> = row.bubbles.iter().map(|b| b.iter().collect()).collect();
        let mut radix = vec![2u64; twos.len()];
        for b in &bubbles {
            radix.push(match row.kind {
                Kind::G => b.len() as u64,
                // nonempty subsets (e) or non-full subsets (n), indexed 0..2^ε-1
                Kind::E | Kind::N => (1u64 << b.len()) - 1,
            });
        }
        let digits = vec![0; radix.len()];
        Expand {
            row,
            twos,
            bubbles,
            radix,
            digits,
            done: false,
        }
    }

    fn current(&self) -> VertexSet {
        let mut x = self.row.ones.clone();
        for (i, &p) in self.twos.iter().enumerate() {
            if self.digits[i] == 1 {
                x.insert(p);
            }
        }
        let off = self.twos.len();
        for (j, b) in self.bubbles.iter().enumerate() {
            let d = self.digits[off + j];
            match self.row.kind {
                Kind::G => x.insert(b[d as usize]),
                Kind::E => {
                    let mask = d + 1;
                    for (t, &p) in b.iter().enumerate() {
                        if mask >> t & 1 == 1 {
                            x.insert(p);
                        }
                    }
                }
                Kind::N => {
                    for (t, &p) in b.iter().enumerate() {
                        if d >> t & 1 == 1 {
                            x.insert(p);
                        }
                    }
                }
            }
        }
        x
    }
}

impl Iterator for Expand<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let x = self.current();
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < self.radix[k] {
                break;
            }
            self.digits[k] = 0;
        }
        Some(x)
    }
}

/// Sum of row cardinalities.
pub fn total_cardinality<'a, I: IntoIterator<Item = &'a WildcardRow>>(rows: I) -> BigUint {
    rows.into_iter()
        .fold(BigUint::zero(), |acc, r| acc + r.cardinality())
}

pub(crate) fn to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Serializes big counts as decimal strings.
pub(crate) fn as_string<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn as_strings<T: fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(w: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_one_based(w, v.iter().copied()).unwrap()
    }

    fn brute_members(row: &WildcardRow) -> Vec<VertexSet> {
        let w = row.width();
        (0u64..1 << w)
            .map(|m| VertexSet::from_indices(w, (0..w).filter(|i| m >> i & 1 == 1)))
            .filter(|x| row.contains(x))
            .collect()
    }

    #[test]
    fn text_round_trip() {
        let text = "2 e1 e2 0 1 e2 0 e1 2 e2 1";
        let r: WildcardRow = text.parse().unwrap();
        assert_eq!(r.kind(), Kind::E);
        assert_eq!(r.to_string(), text);
        assert_eq!(r.bubbles()[0].to_one_based(), vec![2, 8]);
        assert_eq!(r.bubbles()[1].to_one_based(), vec![3, 6, 10]);
        // indices get renumbered into canonical order
        let s: WildcardRow = "e2 e1 e2 e1".parse().unwrap();
        assert_eq!(s.to_string(), "e1 e2 e1 e2");
    }

    #[test]
    fn singletons_are_normalized() {
        let r: WildcardRow = "g1 0 g2 g2".parse().unwrap();
        assert_eq!(r.to_string(), "1 0 g1 g1");
        let n: WildcardRow = "n1 2 n2 n2".parse().unwrap();
        assert_eq!(n.to_string(), "0 2 n1 n1");
    }

    #[test]
    fn rejects_bad_rows() {
        assert!("2 g1 e1".parse::<WildcardRow>().is_err());
        assert!("2 x 0".parse::<WildcardRow>().is_err());
        assert!("g0 g0".parse::<WildcardRow>().is_err());
        assert!(WildcardRow::parse_as("e1 e1", Kind::G).is_err());
        let w = 3;
        let bad = WildcardRow::new(
            Kind::G,
            set(w, &[1]),
            set(w, &[1]),
            set(w, &[2, 3]),
            vec![],
        );
        assert!(bad.is_err());
        let gap = WildcardRow::new(Kind::G, set(w, &[1]), set(w, &[]), set(w, &[2]), vec![]);
        assert!(gap.is_err());
    }

    #[test]
    fn cardinality_matches_expansion() {
        for text in [
            "2 e1 e2 0 1 e2 0 e1 2 e2 1",
            "g1 g1 2 0 g2 g2 g2",
            "n1 n1 2 n2 n2 n2 1",
            "",
            "1 1 1",
        ] {
            let r: WildcardRow = text.parse().unwrap();
            let got: Vec<VertexSet> = r.expand(1 << 20).unwrap().collect();
            assert_eq!(BigUint::from(got.len()), r.cardinality(), "{text}");
            let mut sorted = got.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), got.len());
            let mut brute = brute_members(&r);
            brute.sort();
            assert_eq!(sorted, brute, "{text}");
        }
        let r: WildcardRow = "2 e1 e2 0 1 e2 0 e1 2 e2 1".parse().unwrap();
        assert_eq!(r.cardinality(), BigUint::from(84u32));
        assert!(r.expand(83).is_err());
    }

    #[test]
    fn min_and_max_members() {
        let r: WildcardRow = "2 e1 e2 0 1 e2 0 e1 2 e2 1".parse().unwrap();
        let min = r.min_members().unwrap();
        assert_eq!(min.len(), 6);
        assert_eq!(r.degree(), 4);
        assert!(min.iter().all(|x| x.len() == 4 && r.contains(x)));
        assert!(min.iter().any(|x| x.to_one_based() == vec![2, 3, 5, 11]));
        let s = WildcardRow::parse_as("0 n1 1 n1 2", Kind::N).unwrap();
        assert_eq!(s.max_members().unwrap().sorted_lists(), vec![vec![2, 3, 5], vec![3, 4, 5]]);
        assert!(r.max_members().is_err());
    }

    #[test]
    fn finalize_keeps_min_members() {
        let r: WildcardRow = "e1 e1 1 0 0 1".parse().unwrap();
        let g = r.finalize_e_to_g().unwrap();
        assert_eq!(g.to_string(), "g1 g1 1 0 0 1");
        let mut a = g.members(100).unwrap();
        a.sort();
        let mut b = r.min_members().unwrap().into_members();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn json_round_trip() {
        let r: WildcardRow = "2 e1 e2 0 1 e2 0 e1 2 e2 1".parse().unwrap();
        let j = serde_json::to_string(&r).unwrap();
        assert!(j.contains("\"kind\":\"e\""));
        let back: WildcardRow = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
    }
}
