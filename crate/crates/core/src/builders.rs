//! Constructors for standard families of edge-labeled posets.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::poset::{Cover, Label, LabeledPoset};
use crate::symfunc::Partition;

pub const MAX_BOOLEAN_RANK: usize = 10;
pub const MAX_WEAK_ORDER_LENGTH: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("OutOfBounds: Boolean rank {0} exceeds {MAX_BOOLEAN_RANK}")]
    OutOfBounds(usize),
    #[error("NotContained: {0} is not contained in {1}")]
    NotContained(Partition, Partition),
    #[error("TooLong: permutation length {0} exceeds {MAX_WEAK_ORDER_LENGTH}")]
    TooLong(usize),
    #[error("InvalidPermutation: {0:?} is not a permutation of 1..n")]
    InvalidPermutation(Vec<usize>),
    #[error("ParseError: {0}")]
    Parse(String),
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, BuildError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(BuildError::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }

    /// `(i, i+1) · self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
                .collect(),
        )
    }

    /// `self · (i, i+1)`: swaps positions `i` and `i + 1`.
    pub fn right_mul_simple(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// `ℓ((i, i+1) · self) < ℓ(self)`, i.e. `i + 1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |value: usize| self.0.iter().position(|&v| v == value).expect("value present");
        pos(i + 1) < pos(i)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() < 10 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = BuildError;

    /// `321` (single digits) or `3,2,1`.
    fn from_str(s: &str) -> Result<Self, BuildError> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        Permutation::new(values.ok_or_else(|| BuildError::Parse(format!("bad permutation {s:?}")))?)
    }
}

/// Subsets of `{1, ..., n}` under inclusion. The cover `X ⋖ X ∪ {i}` is
/// labeled `i`. Element ids are the subset bitmasks.
pub fn boolean_poset(n: usize) -> Result<LabeledPoset, BuildError> {
    if n > MAX_BOOLEAN_RANK {
        return Err(BuildError::OutOfBounds(n));
    }
    let size = 1usize << n;
    let covers = (0..size).flat_map(|x| {
        (0..n)
            .filter(move |i| x & (1 << i) == 0)
            .map(move |i| Cover::new(x, x | (1 << i), i as Label + 1))
    });
    Ok(LabeledPoset::new(size, covers).expect("Boolean lattices are graded"))
}

/// A single chain reading `word` from bottom to top.
pub fn chain_poset(word: &[Label]) -> LabeledPoset {
    LabeledPoset::new(
        word.len() + 1,
        word.iter().enumerate().map(|(k, &l)| Cover::new(k, k + 1, l)),
    )
    .expect("a chain is graded")
}

/// The interval `[mu, nu]` of Young's lattice. Adding a box in row `i`
/// (1-based) to reach a shape with row length `λ_i` is labeled by the box's
/// content `λ_i - i`, so that `F_{[mu, nu]}` is the skew Schur function
/// `s_{nu/mu}`. Elements are numbered by (size, rows).
pub fn young_interval(mu: &Partition, nu: &Partition) -> Result<LabeledPoset, BuildError> {
    if !mu.is_contained_in(nu) {
        return Err(BuildError::NotContained(mu.clone(), nu.clone()));
    }
    let rows = nu.len();
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    fn go(i: usize, mu: &Partition, nu: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == nu.len() {
            out.push(cur.clone());
            return;
        }
        let hi = if i == 0 { nu.row(0) } else { nu.row(i).min(cur[i - 1]) };
        for r in mu.row(i)..=hi {
            cur.push(r);
            go(i + 1, mu, nu, cur, out);
            cur.pop();
        }
    }
    go(0, mu, nu, &mut Vec::with_capacity(rows), &mut shapes);
    shapes.sort_by_key(|s| (s.iter().sum::<usize>(), s.clone()));
    let index: HashMap<Vec<usize>, usize> = shapes.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect();

    let mut covers = Vec::new();
    for (id, shape) in shapes.iter().enumerate() {
        for i in 0..rows {
            let mut next = shape.clone();
            next[i] += 1;
            if let Some(&up) = index.get(&next) {
                covers.push(Cover::new(id, up, shape[i] as Label - i as Label));
            }
        }
    }
    Ok(LabeledPoset::new(shapes.len(), covers).expect("Young intervals are graded"))
}

/// The interval `[1, w]` of the left weak order. The cover `u ⋖ (i,i+1)·u` is
/// labeled `i`, so a maximal chain reads `(a_1, ..., a_ℓ)` with
/// `w = s_{a_ℓ} ⋯ s_{a_1}`. Elements are numbered by (length, one-line
/// notation); the identity is element 0.
pub fn weak_order_interval(w: &Permutation) -> Result<LabeledPoset, BuildError> {
    let len = w.length();
    if len > MAX_WEAK_ORDER_LENGTH {
        return Err(BuildError::TooLong(len));
    }
    let n = w.size();
    let mut members: BTreeSet<(usize, Permutation)> = BTreeSet::new();
    let mut stack = vec![w.clone()];
    members.insert((len, w.clone()));
    while let Some(u) = stack.pop() {
        for i in 1..n {
            if u.has_left_descent(i) {
                let v = u.left_mul_simple(i);
                if members.insert((v.length(), v.clone())) {
                    stack.push(v);
                }
            }
        }
    }
    let ordered: Vec<Permutation> = members.into_iter().map(|(_, p)| p).collect();
    let index: HashMap<&Permutation, usize> = ordered.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let mut covers = Vec::new();
    for (id, u) in ordered.iter().enumerate() {
        for i in 1..n {
            if u.has_left_descent(i) {
                covers.push(Cover::new(index[&u.left_mul_simple(i)], id, i as Label));
            }
        }
    }
    Ok(LabeledPoset::new(ordered.len(), covers).expect("weak order intervals are graded"))
}

/// A random graded poset of rank `1..=max_rank` with at most `max_width`
/// elements per inner rank and labels drawn from `0..label_range`.
pub fn random_graded_poset<R: Rng + ?Sized>(
    rng: &mut R,
    max_rank: usize,
    max_width: usize,
    label_range: Label,
) -> LabeledPoset {
    let rank = rng.gen_range(1..=max_rank.max(1));
    let widths: Vec<usize> = (0..=rank)
        .map(|r| if r == 0 || r == rank { 1 } else { rng.gen_range(1..=max_width.max(1)) })
        .collect();
    let mut first = Vec::with_capacity(widths.len());
    let mut next = 0;
    for &w in &widths {
        first.push(next);
        next += w;
    }
    let mut covers = Vec::new();
    for r in 0..rank {
        let lower: Vec<usize> = (first[r]..first[r] + widths[r]).collect();
        let upper: Vec<usize> = (first[r + 1]..first[r + 1] + widths[r + 1]).collect();
        let mut has_up = vec![false; lower.len()];
        for &y in &upper {
            let k = rng.gen_range(1..=lower.len());
            let chosen: Vec<usize> = lower.choose_multiple(rng, k).copied().collect();
            for x in chosen {
                has_up[x - first[r]] = true;
                covers.push((x, y));
            }
        }
        for (k, ok) in has_up.into_iter().enumerate() {
            if !ok {
                let y = *upper.choose(rng).expect("non-empty rank");
                covers.push((lower[k], y));
            }
        }
    }
    LabeledPoset::new(
        next,
        covers
            .into_iter()
            .map(|(x, y)| Cover::new(x, y, rng.gen_range(0..label_range.max(1)))),
    )
    .expect("random construction is graded")
}

/// A builder invocation: `boolean N`, `chain L1,L2,...`, `young MU / NU` or
/// `weak-order PERM`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuilderSpec {
    Boolean(usize),
    Chain(Vec<Label>),
    Young(Partition, Partition),
    WeakOrder(Permutation),
}

impl BuilderSpec {
    pub fn build(&self) -> Result<LabeledPoset, BuildError> {
        match self {
            BuilderSpec::Boolean(n) => boolean_poset(*n),
            BuilderSpec::Chain(word) => Ok(chain_poset(word)),
            BuilderSpec::Young(mu, nu) => young_interval(mu, nu),
            BuilderSpec::WeakOrder(w) => weak_order_interval(w),
        }
    }
}

impl FromStr for BuilderSpec {
    type Err = BuildError;

    /// Tokens may be split across whitespace; `young 2,1` means `young - / 2,1`.
    fn from_str(s: &str) -> Result<Self, BuildError> {
        let s = s.trim();
        let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let rest = rest.trim();
        let bad = |m: String| BuildError::Parse(m);
        match head {
            "boolean" => rest
                .parse()
                .map(BuilderSpec::Boolean)
                .map_err(|_| bad(format!("bad Boolean rank {rest:?}"))),
            "chain" => {
                let word: Result<Vec<Label>, _> = rest
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<Label>())
                    .collect();
                word.map(BuilderSpec::Chain)
                    .map_err(|_| bad(format!("bad chain labels {rest:?}")))
            }
            "young" => {
                let (mu, nu) = rest.split_once('/').unwrap_or(("", rest));
                let parse = |t: &str| t.parse::<Partition>().map_err(|e| bad(e.to_string()));
                Ok(BuilderSpec::Young(parse(mu)?, parse(nu)?))
            }
            "weak-order" => Ok(BuilderSpec::WeakOrder(rest.parse()?)),
            _ => Err(bad(format!("unknown builder {head:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(p: &LabeledPoset) -> Vec<Vec<Label>> {
        let mut w: Vec<_> = p.maximal_chains().into_iter().map(|c| c.word).collect();
        w.sort();
        w
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn boolean_small() {
        let b0 = boolean_poset(0).unwrap();
        assert_eq!((b0.len(), b0.rank()), (1, 0));
        assert_eq!(words(&boolean_poset(2).unwrap()), vec![vec![1, 2], vec![2, 1]]);
        let w3 = words(&boolean_poset(3).unwrap());
        assert_eq!(w3.len(), 6);
        assert_eq!(w3[0], vec![1, 2, 3]);
        assert_eq!(w3[5], vec![3, 2, 1]);
        assert_eq!(boolean_poset(11), Err(BuildError::OutOfBounds(11)));
    }

    #[test]
    fn chains() {
        assert_eq!(chain_poset(&[]).len(), 1);
        assert_eq!(chain_poset(&[1, 3, 2]).rank(), 3);
        assert_eq!(words(&chain_poset(&[5])), vec![vec![5]]);
    }

    #[test]
    fn young_small() {
        let p = young_interval(&Partition::empty(), &part(&[1])).unwrap();
        assert_eq!(words(&p), vec![vec![0]]);
        let p = young_interval(&Partition::empty(), &part(&[2, 1])).unwrap();
        assert_eq!(words(&p), vec![vec![0, -1, 1], vec![0, 1, -1]]);
        let p = young_interval(&part(&[1]), &part(&[2, 1])).unwrap();
        assert_eq!(p.maximal_chains().len(), 2);
        let row = young_interval(&Partition::empty(), &part(&[3])).unwrap();
        assert_eq!(words(&row), vec![vec![0, 1, 2]]);
        let column = young_interval(&Partition::empty(), &part(&[1, 1, 1])).unwrap();
        assert_eq!(words(&column), vec![vec![0, -1, -2]]);
        assert!(matches!(
            young_interval(&part(&[2]), &part(&[1, 1])),
            Err(BuildError::NotContained(..))
        ));
    }

    #[test]
    fn young_chain_counts_are_standard_tableaux() {
        // f^(3,2) = 5, f^(2,2,1) = 5, f^(3,1,1) = 6.
        for (shape, count) in [(vec![3, 2], 5), (vec![2, 2, 1], 5), (vec![3, 1, 1], 6)] {
            let p = young_interval(&Partition::empty(), &part(&shape)).unwrap();
            assert_eq!(p.chain_count(), count);
        }
    }

    #[test]
    fn weak_order_small() {
        let id = weak_order_interval(&Permutation::identity(3)).unwrap();
        assert_eq!(id.len(), 1);
        let w0 = weak_order_interval(&"321".parse().unwrap()).unwrap();
        assert_eq!(words(&w0), vec![vec![1, 2, 1], vec![2, 1, 2]]);
        let s1 = weak_order_interval(&"213".parse().unwrap()).unwrap();
        assert_eq!(words(&s1), vec![vec![1]]);
        assert!(matches!(
            weak_order_interval(&"54321".parse().unwrap()),
            Err(BuildError::TooLong(10))
        ));
    }

    #[test]
    fn weak_order_chain_reads_left_factors() {
        let w: Permutation = "2413".parse().unwrap();
        for chain in weak_order_interval(&w).unwrap().maximal_chains() {
            let mut u = Permutation::identity(4);
            for &a in &chain.word {
                u = u.left_mul_simple(a as usize);
            }
            assert_eq!(u, w);
        }
    }

    #[test]
    fn permutations_parse() {
        assert_eq!("312".parse::<Permutation>().unwrap().one_line(), &[3, 1, 2]);
        assert_eq!("3,1,2".parse::<Permutation>().unwrap().length(), 2);
        assert!("33".parse::<Permutation>().is_err());
        assert!("3a".parse::<Permutation>().is_err());
    }

    #[test]
    fn builder_specs() {
        assert_eq!("boolean 2".parse::<BuilderSpec>().unwrap(), BuilderSpec::Boolean(2));
        assert_eq!("chain 1,-3,2".parse::<BuilderSpec>().unwrap(), BuilderSpec::Chain(vec![1, -3, 2]));
        assert_eq!(
            "young 1 / 2,1".parse::<BuilderSpec>().unwrap(),
            BuilderSpec::Young(part(&[1]), part(&[2, 1]))
        );
        assert_eq!(
            "young 2,1".parse::<BuilderSpec>().unwrap(),
            BuilderSpec::Young(Partition::empty(), part(&[2, 1]))
        );
        assert!(matches!("weak-order 321".parse::<BuilderSpec>().unwrap(), BuilderSpec::WeakOrder(_)));
        assert!("cube 3".parse::<BuilderSpec>().is_err());
    }

    #[test]
    fn random_posets_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_graded_poset(&mut rng, 5, 3, 4);
            assert!(p.rank() >= 1 && p.rank() <= 5);
            assert!(p.chain_count() >= 1);
        }
    }
}
