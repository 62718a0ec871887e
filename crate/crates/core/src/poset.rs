//! Finite graded posets whose covers carry integer labels.
//!
//! A [`LabeledPoset`] is validated on construction: it has a unique minimum and
//! maximum, no cycles, and every cover raises the rank by exactly one. Element
//! ids are dense `0..len()`; the bounds are discovered from the cover relation.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

mod equivalence;

pub use equivalence::label_equivalent;

/// Largest supported rank. Descent sets are stored as `u64` bitmasks over
/// positions `1..rank`.
pub const MAX_RANK: usize = 64;

/// Ranks up to this value keep the full `2^(n-1)` table of descent counts.
pub const DENSE_RANK_LIMIT: usize = 16;

pub type Label = i64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("NotGraded: cover {lower} -> {upper} does not raise the rank by exactly one")]
    NotGraded { lower: usize, upper: usize },
    #[error("NoUniqueBounds: {0}")]
    NoUniqueBounds(String),
    #[error("CycleDetected: the cover relation contains a directed cycle")]
    CycleDetected,
    #[error("DuplicateCover: pair ({0}, {1}) appears more than once")]
    DuplicateCover(usize, usize),
    #[error("ElementOutOfRange: element id {id} is not below {n_elems}")]
    ElementOutOfRange { id: usize, n_elems: usize },
    #[error("NotComparable: element {0} is not below element {1}")]
    NotComparable(usize, usize),
    #[error("RankTooLarge: rank {0} exceeds the supported maximum of {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("OutOfRange: {0} is not a position strictly between 0 and {1}")]
    OutOfRange(usize, usize),
    #[error("ParseError: line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A cover `lower ⋖ upper` together with its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub label: Label,
}

impl Cover {
    pub fn new(lower: usize, upper: usize, label: Label) -> Self {
        Cover { lower, upper, label }
    }
}

/// A subset of `{1, ..., n-1}` for an ambient rank `n`.
///
/// Position `j` is stored in bit `j - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankSet {
    n: usize,
    bits: u64,
}

impl RankSet {
    pub fn empty(n: usize) -> Self {
        RankSet { n, bits: 0 }
    }

    /// All of `{1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        RankSet { n, bits: full_mask(n) }
    }

    pub fn new<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self, PosetError> {
        if n > MAX_RANK {
            return Err(PosetError::RankTooLarge(n));
        }
        let mut bits = 0u64;
        for j in members {
            if j == 0 || j >= n {
                return Err(PosetError::OutOfRange(j, n));
            }
            bits |= 1 << (j - 1);
        }
        Ok(RankSet { n, bits })
    }

    /// Builds a set from its bitmask. Bits outside `{1..n-1}` are rejected.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self, PosetError> {
        if n > MAX_RANK {
            return Err(PosetError::RankTooLarge(n));
        }
        if bits & !full_mask(n) != 0 {
            let j = 64 - bits.leading_zeros() as usize;
            return Err(PosetError::OutOfRange(j, n));
        }
        Ok(RankSet { n, bits })
    }

    pub fn ambient_rank(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 1 && j < self.n && self.bits & (1 << (j - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &RankSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&j| self.contains(j))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `{1..n-1}`, ordered by bitmask.
    pub fn all(n: usize) -> impl Iterator<Item = RankSet> {
        let count = if n <= 1 { 1u64 } else { 1u64 << (n - 1) };
        (0..count).map(move |bits| RankSet { n, bits })
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, j) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "}}")
    }
}

fn full_mask(n: usize) -> u64 {
    match n {
        0 | 1 => 0,
        n if n > 64 => u64::MAX,
        n => (1u64 << (n - 1)) - 1,
    }
}

/// Positions `j` (1-based) with `word[j-1] > word[j]`.
pub fn descent_set(word: &[Label]) -> RankSet {
    RankSet {
        n: word.len(),
        bits: descent_bits(word),
    }
}

pub(crate) fn descent_bits(word: &[Label]) -> u64 {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .fold(0u64, |acc, (j, _)| acc | (1 << j))
}

/// A maximal chain and its word of labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainWord {
    pub elements: Vec<usize>,
    pub word: Vec<Label>,
}

impl ChainWord {
    pub fn descent_set(&self) -> RankSet {
        descent_set(&self.word)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPoset {
    n_elems: usize,
    covers: Vec<Cover>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ranks: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl LabeledPoset {
    /// Validates a cover relation and computes ranks.
    pub fn new<I: IntoIterator<Item = Cover>>(n_elems: usize, covers: I) -> Result<Self, PosetError> {
        let mut covers: Vec<Cover> = covers.into_iter().collect();
        for c in &covers {
            for id in [c.lower, c.upper] {
                if id >= n_elems {
                    return Err(PosetError::ElementOutOfRange { id, n_elems });
                }
            }
            if c.lower == c.upper {
                return Err(PosetError::CycleDetected);
            }
        }
        covers.sort();
        for w in covers.windows(2) {
            if (w[0].lower, w[0].upper) == (w[1].lower, w[1].upper) {
                return Err(PosetError::DuplicateCover(w[0].lower, w[0].upper));
            }
        }
        if n_elems == 0 {
            return Err(PosetError::NoUniqueBounds("the poset is empty".into()));
        }

        let mut up = vec![Vec::new(); n_elems];
        let mut down = vec![Vec::new(); n_elems];
        for (k, c) in covers.iter().enumerate() {
            up[c.lower].push(k);
            down[c.upper].push(k);
        }

        // Kahn's algorithm detects cycles before bounds are examined.
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n_elems).filter(|&x| indeg[x] == 0).collect();
        let mut order = Vec::with_capacity(n_elems);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &k in &up[x] {
                let y = covers[k].upper;
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push_back(y);
                }
            }
        }
        if order.len() != n_elems {
            return Err(PosetError::CycleDetected);
        }

        let minima: Vec<usize> = (0..n_elems).filter(|&x| down[x].is_empty()).collect();
        let maxima: Vec<usize> = (0..n_elems).filter(|&x| up[x].is_empty()).collect();
        if minima.len() != 1 {
            return Err(PosetError::NoUniqueBounds(format!(
                "expected one minimal element, found {minima:?}"
            )));
        }
        if maxima.len() != 1 {
            return Err(PosetError::NoUniqueBounds(format!(
                "expected one maximal element, found {maxima:?}"
            )));
        }

        // With a unique source every element lies above it, so ranks are
        // forced along any path; a mismatch means the poset is not graded.
        let mut ranks = vec![usize::MAX; n_elems];
        ranks[minima[0]] = 0;
        for &x in &order {
            for &k in &up[x] {
                let y = covers[k].upper;
                if ranks[y] == usize::MAX {
                    ranks[y] = ranks[x] + 1;
                } else if ranks[y] != ranks[x] + 1 {
                    return Err(PosetError::NotGraded { lower: x, upper: y });
                }
            }
        }
        let rank = ranks[maxima[0]];
        if rank > MAX_RANK {
            return Err(PosetError::RankTooLarge(rank));
        }

        Ok(LabeledPoset {
            n_elems,
            covers,
            up,
            down,
            ranks,
            bottom: minima[0],
            top: maxima[0],
        })
    }

    /// The one-element poset, unit of the product.
    pub fn point() -> Self {
        LabeledPoset::new(1, []).expect("one point is graded")
    }

    pub fn len(&self) -> usize {
        self.n_elems
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rank of the poset, the length of every maximal chain.
    pub fn rank(&self) -> usize {
        self.ranks[self.top]
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.ranks[x]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Covers sorted by `(lower, upper)`.
    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    /// Covers `x ⋖ y`, by increasing `y`.
    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.up[x].iter().map(move |&k| &self.covers[k])
    }

    /// Covers `y ⋖ x`, by increasing `y`.
    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = &Cover> + '_ {
        self.down[x].iter().map(move |&k| &self.covers[k])
    }

    pub fn label(&self, lower: usize, upper: usize) -> Option<Label> {
        self.upper_covers(lower)
            .find(|c| c.upper == upper)
            .map(|c| c.label)
    }

    pub fn elements_of_rank(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_elems).filter(move |&x| self.ranks[x] == r)
    }

    /// Elements sorted by `(rank, id)`.
    pub fn elements_by_rank(&self) -> Vec<usize> {
        let mut xs: Vec<usize> = (0..self.n_elems).collect();
        xs.sort_by_key(|&x| (self.ranks[x], x));
        xs
    }

    pub fn min_label(&self) -> Option<Label> {
        self.covers.iter().map(|c| c.label).min()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.covers.iter().map(|c| c.label).max()
    }

    /// Elements `z` with `x ≤ z`, as a membership mask.
    pub fn up_set(&self, x: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n_elems];
        let mut stack = vec![x];
        seen[x] = true;
        while let Some(z) = stack.pop() {
            for c in self.upper_covers(z) {
                if !seen[c.upper] {
                    seen[c.upper] = true;
                    stack.push(c.upper);
                }
            }
        }
        seen
    }

    /// Elements `z` with `z ≤ y`, as a membership mask.
    pub fn down_set(&self, y: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n_elems];
        let mut stack = vec![y];
        seen[y] = true;
        while let Some(z) = stack.pop() {
            for c in self.lower_covers(z) {
                if !seen[c.lower] {
                    seen[c.lower] = true;
                    stack.push(c.lower);
                }
            }
        }
        seen
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ranks[x] <= self.ranks[y] && self.up_set(x)[y]
    }

    /// `order[x][y]` is true iff `x ≤ y`.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n_elems).map(|x| self.up_set(x)).collect()
    }

    /// The closed interval `[x, y]` with inherited labels. Elements keep their
    /// relative id order, so `x` and `y` become its bounds.
    pub fn interval(&self, x: usize, y: usize) -> Result<LabeledPoset, PosetError> {
        if x >= self.n_elems || y >= self.n_elems {
            return Err(PosetError::ElementOutOfRange {
                id: x.max(y),
                n_elems: self.n_elems,
            });
        }
        let above = self.up_set(x);
        if !above[y] {
            return Err(PosetError::NotComparable(x, y));
        }
        let below = self.down_set(y);
        let mut index = vec![usize::MAX; self.n_elems];
        let mut next = 0;
        for z in 0..self.n_elems {
            if above[z] && below[z] {
                index[z] = next;
                next += 1;
            }
        }
        let covers = self
            .covers
            .iter()
            .filter(|c| index[c.lower] != usize::MAX && index[c.upper] != usize::MAX)
            .map(|c| Cover::new(index[c.lower], index[c.upper], c.label));
        LabeledPoset::new(next, covers)
    }

    /// Cartesian product. `other`'s labels are shifted so that they all exceed
    /// the labels of `self`; element `(p, q)` gets id `p * other.len() + q`.
    pub fn product(&self, other: &LabeledPoset) -> LabeledPoset {
        let shift = match (self.max_label(), other.min_label()) {
            (Some(hi), Some(lo)) => hi - lo + 1,
            _ => 0,
        };
        let m = other.n_elems;
        let mut covers = Vec::with_capacity(self.covers.len() * m + other.covers.len() * self.n_elems);
        for c in &self.covers {
            for q in 0..m {
                covers.push(Cover::new(c.lower * m + q, c.upper * m + q, c.label));
            }
        }
        for p in 0..self.n_elems {
            for c in &other.covers {
                covers.push(Cover::new(p * m + c.lower, p * m + c.upper, c.label + shift));
            }
        }
        LabeledPoset::new(self.n_elems * m, covers).expect("a product of graded posets is graded")
    }

    /// Applies `f` to every label. The caller is responsible for `f` being
    /// order-preserving when descent data should be kept.
    pub fn relabel<F: Fn(Label) -> Label>(&self, f: F) -> LabeledPoset {
        let mut out = self.clone();
        for c in &mut out.covers {
            c.label = f(c.label);
        }
        out
    }

    /// Calls `visit(elements, word)` for every maximal chain, in lexicographic
    /// order of element ids.
    pub fn for_each_chain<F: FnMut(&[usize], &[Label])>(&self, visit: F) {
        self.for_each_chain_from(&[self.bottom], &[], visit);
    }

    /// Extends the chain prefix `elements` (starting at the bottom, with
    /// `word` its labels) to every maximal chain.
    pub fn for_each_chain_from<F: FnMut(&[usize], &[Label])>(
        &self,
        elements: &[usize],
        word: &[Label],
        mut visit: F,
    ) {
        let mut elems = elements.to_vec();
        let mut labels = word.to_vec();
        self.walk(&mut elems, &mut labels, &mut visit);
    }

    fn walk<F: FnMut(&[usize], &[Label])>(
        &self,
        elems: &mut Vec<usize>,
        labels: &mut Vec<Label>,
        visit: &mut F,
    ) {
        let x = *elems.last().expect("non-empty prefix");
        if x == self.top {
            visit(elems, labels);
            return;
        }
        for &k in &self.up[x] {
            let c = &self.covers[k];
            elems.push(c.upper);
            labels.push(c.label);
            self.walk(elems, labels, visit);
            elems.pop();
            labels.pop();
        }
    }

    pub fn maximal_chains(&self) -> Vec<ChainWord> {
        let mut out = Vec::new();
        self.for_each_chain(|elements, word| {
            out.push(ChainWord {
                elements: elements.to_vec(),
                word: word.to_vec(),
            })
        });
        out
    }

    /// `|R(P)|`, counted without enumerating chains.
    pub fn chain_count(&self) -> u64 {
        let mut count = vec![0u64; self.n_elems];
        count[self.bottom] = 1;
        for x in self.elements_by_rank() {
            for c in self.upper_covers(x) {
                count[c.upper] = count[c.upper]
                    .checked_add(count[x])
                    .expect("chain count overflows u64");
            }
        }
        count[self.top]
    }

    /// For every `y ≥ x`, the number of chains of `[x, y]` per descent set,
    /// with positions measured from `x`. Entries for `y` not above `x` are `None`.
    pub fn descent_profiles_from(&self, x: usize) -> Vec<Option<BTreeMap<u64, u64>>> {
        let mut states: Vec<HashMap<(u64, Option<Label>), u64>> = vec![HashMap::new(); self.n_elems];
        let mut reached = vec![false; self.n_elems];
        states[x].insert((0, None), 1);
        reached[x] = true;
        let base = self.ranks[x];
        let order = self.elements_by_rank();
        for &z in order.iter().filter(|&&z| self.ranks[z] >= base) {
            if !reached[z] || self.up[z].is_empty() {
                continue;
            }
            let here = std::mem::take(&mut states[z]);
            let pos = self.ranks[z] - base;
            for c in self.upper_covers(z) {
                reached[c.upper] = true;
                let target = &mut states[c.upper];
                for (&(bits, last), &n) in &here {
                    let bits = match last {
                        Some(prev) if prev > c.label => bits | (1 << (pos - 1)),
                        _ => bits,
                    };
                    let slot = target.entry((bits, Some(c.label))).or_insert(0);
                    *slot = slot.checked_add(n).expect("chain count overflows u64");
                }
            }
            states[z] = here;
        }
        (0..self.n_elems)
            .map(|y| {
                reached[y].then(|| {
                    let mut out = BTreeMap::new();
                    for (&(bits, _), &n) in &states[y] {
                        *out.entry(bits).or_insert(0) += n;
                    }
                    out
                })
            })
            .collect()
    }

    /// Number of chains with each descent set, computed by dynamic
    /// programming over `(element, descent set so far, last label)`.
    pub fn flag_stats(&self) -> FlagStats {
        let profile = self.descent_profiles_from(self.bottom)[self.top]
            .clone()
            .expect("top lies above bottom");
        FlagStats::from_descent_counts(self.rank(), profile)
    }

    /// Canonical text serialization: `elements N` followed by one `cover U V L`
    /// line per cover, sorted by `(U, V)`.
    pub fn to_text(&self) -> String {
        let mut s = format!("elements {}\n", self.n_elems);
        for c in &self.covers {
            s.push_str(&format!("cover {} {} {}\n", c.lower, c.upper, c.label));
        }
        s
    }

    /// Single-line form of [`to_text`](Self::to_text), e.g.
    /// `{elements 2; cover 0 1 5}`.
    pub fn to_inline(&self) -> String {
        let mut parts = vec![format!("elements {}", self.n_elems)];
        parts.extend(
            self.covers
                .iter()
                .map(|c| format!("cover {} {} {}", c.lower, c.upper, c.label)),
        );
        format!("{{{}}}", parts.join("; "))
    }

    /// Parses the text format. `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<LabeledPoset, PosetError> {
        let mut n_elems = None;
        let mut covers = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("");
            let toks: Vec<&str> = content.split_whitespace().collect();
            let err = |msg: String| PosetError::Parse { line, msg };
            match toks.as_slice() {
                [] => {}
                ["elements", n] => {
                    if n_elems.is_some() {
                        return Err(err("repeated `elements` line".into()));
                    }
                    n_elems = Some(n.parse::<usize>().map_err(|e| err(format!("bad count {n:?}: {e}")))?);
                }
                ["cover", u, v, l] => {
                    if n_elems.is_none() {
                        return Err(err("`cover` before `elements`".into()));
                    }
                    let u = u.parse::<usize>().map_err(|e| err(format!("bad id {u:?}: {e}")))?;
                    let v = v.parse::<usize>().map_err(|e| err(format!("bad id {v:?}: {e}")))?;
                    let l = l.parse::<Label>().map_err(|e| err(format!("bad label {l:?}: {e}")))?;
                    covers.push(Cover::new(u, v, l));
                }
                _ => return Err(err(format!("unrecognized line {:?}", content.trim()))),
            }
        }
        let n = n_elems.ok_or(PosetError::Parse {
            line: 0,
            msg: "missing `elements` line".into(),
        })?;
        LabeledPoset::new(n, covers)
    }
}

impl fmt::Display for LabeledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_inline())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Table {
    Dense(Vec<u64>),
    Sparse(BTreeMap<u64, u64>),
}

/// The numbers `d_I` (chains with descent set exactly `I`) and `f_J` (chains
/// with descent set inside `J`) of a poset of rank `n`.
///
/// Up to [`DENSE_RANK_LIMIT`] both tables are stored for all `2^(n-1)`
/// subsets; above it only the nonzero `d_I` are kept and `f_J` is summed on
/// demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagStats {
    rank: usize,
    d: Table,
    f: Option<Vec<u64>>,
}

impl FlagStats {
    /// Builds the tables from counts keyed by descent bitmask.
    pub fn from_descent_counts(rank: usize, counts: BTreeMap<u64, u64>) -> FlagStats {
        if rank <= DENSE_RANK_LIMIT {
            let size = if rank <= 1 { 1 } else { 1usize << (rank - 1) };
            let mut d = vec![0u64; size];
            for (bits, n) in counts {
                d[bits as usize] += n;
            }
            // Subset-sum transform: f[J] = sum of d[I] over I ⊆ J.
            let mut f = d.clone();
            for b in 0..rank.saturating_sub(1) {
                for mask in 0..size {
                    if mask & (1 << b) != 0 {
                        f[mask] += f[mask ^ (1 << b)];
                    }
                }
            }
            FlagStats {
                rank,
                d: Table::Dense(d),
                f: Some(f),
            }
        } else {
            let counts = counts.into_iter().filter(|&(_, n)| n != 0).collect();
            FlagStats {
                rank,
                d: Table::Sparse(counts),
                f: None,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn d(&self, i: &RankSet) -> u64 {
        match &self.d {
            Table::Dense(v) => v[i.bits() as usize],
            Table::Sparse(m) => m.get(&i.bits()).copied().unwrap_or(0),
        }
    }

    pub fn f(&self, j: &RankSet) -> u64 {
        match &self.f {
            Some(v) => v[j.bits() as usize],
            None => self
                .nonzero_d()
                .filter(|(i, _)| i.is_subset(j))
                .map(|(_, n)| n)
                .sum(),
        }
    }

    /// Nonzero `d_I`, by increasing bitmask.
    pub fn nonzero_d(&self) -> Box<dyn Iterator<Item = (RankSet, u64)> + '_> {
        let n = self.rank;
        match &self.d {
            Table::Dense(v) => Box::new(
                v.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(move |(b, &c)| (RankSet { n, bits: b as u64 }, c)),
            ),
            Table::Sparse(m) => Box::new(m.iter().map(move |(&b, &c)| (RankSet { n, bits: b }, c))),
        }
    }

    /// `|R(P)|`.
    pub fn total_chains(&self) -> u64 {
        self.nonzero_d().map(|(_, n)| n).sum()
    }

    /// `d_I` recovered from the `f` table by inclusion–exclusion.
    pub fn d_by_inclusion_exclusion(&self, i: &RankSet) -> i128 {
        let n = self.rank;
        let top = i.bits();
        let mut sub = top;
        let mut total = 0i128;
        loop {
            let j = RankSet { n, bits: sub };
            let sign = if (top ^ sub).count_ones().is_multiple_of(2) { 1 } else { -1 };
            total += sign * self.f(&j) as i128;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        total
    }
}
