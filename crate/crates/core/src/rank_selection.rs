//! Rank-selected posets, classical and weighted flag f-vectors, and
//! (relative) R-labelings.
//!
//! An *increasing* chain is one whose word has no descent, i.e. is weakly
//! increasing. With distinct labels inside every interval this agrees with
//! strict increase.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poset::{LabeledPoset, RankSet};
use crate::qsym::{Composition, QBasis, QSymExpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankSelectionError {
    #[error("NotRelativeRLabeled: the labeling is not a relative R-labeling")]
    NotRelativeRLabeled,
}

/// `P(I)`: elements of rank in `I` together with the bounds, with covers
/// between consecutive selected ranks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSelectedPoset {
    selection: RankSet,
    /// Selected elements, by (rank, id) in the original poset.
    elements: Vec<usize>,
    /// Covers of `P(I)` as original ids, with their weights (all 1 when
    /// unweighted).
    covers: Vec<(usize, usize, u64)>,
    bottom: usize,
    top: usize,
    weighted: bool,
}

impl RankSelectedPoset {
    pub fn selection(&self) -> &RankSet {
        &self.selection
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize, u64)] {
        &self.covers
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Sum over maximal chains of the product of cover weights.
    pub fn weighted_chain_count(&self) -> u64 {
        let mut count: BTreeMap<usize, u64> = BTreeMap::new();
        count.insert(self.bottom, 1);
        // Covers are sorted by the rank of their lower element.
        for &(x, y, w) in &self.covers {
            let here = count.get(&x).copied().unwrap_or(0);
            *count.entry(y).or_insert(0) += here * w;
        }
        count.get(&self.top).copied().unwrap_or(0)
    }
}

fn selected_ranks(p: &LabeledPoset, selection: &RankSet) -> Vec<usize> {
    assert_eq!(
        selection.ambient_rank(),
        p.rank(),
        "rank selection must be taken in the poset's own rank"
    );
    let mut ranks = vec![0];
    ranks.extend(selection.iter());
    if p.rank() > 0 {
        ranks.push(p.rank());
    }
    ranks
}

fn build_selected(p: &LabeledPoset, selection: &RankSet, weights: Option<&[Vec<Option<u64>>]>) -> RankSelectedPoset {
    let ranks = selected_ranks(p, selection);
    let order = p.order_matrix();
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    for (k, &r) in ranks.iter().enumerate() {
        let level: Vec<usize> = p.elements_of_rank(r).collect();
        elements.extend(&level);
        if let Some(&next) = ranks.get(k + 1) {
            for &x in &level {
                for y in p.elements_of_rank(next) {
                    if order[x][y] {
                        let w = weights.map_or(1, |inc| inc[x][y].unwrap_or(0));
                        covers.push((x, y, w));
                    }
                }
            }
        }
    }
    RankSelectedPoset {
        selection: *selection,
        elements,
        covers,
        bottom: p.bottom(),
        top: p.top(),
        weighted: weights.is_some(),
    }
}

pub fn rank_selected(p: &LabeledPoset, selection: &RankSet) -> RankSelectedPoset {
    build_selected(p, selection, None)
}

/// `P(I)_wt`: each cover `x ⋖ y` of `P(I)` weighted by the number of
/// increasing chains of `[x, y]` in `P`.
pub fn rank_selected_weighted(p: &LabeledPoset, selection: &RankSet) -> RankSelectedPoset {
    let inc = increasing_chain_counts(p);
    build_selected(p, selection, Some(&inc))
}

/// `φ_I(P)`, the number of maximal chains of `P(I)`, for every `I`.
pub fn flag_fvector_classic(p: &LabeledPoset) -> BTreeMap<RankSet, u64> {
    RankSet::all(p.rank())
        .map(|i| (i, rank_selected(p, &i).weighted_chain_count()))
        .collect()
}

/// `E_P = Σ_I φ_I(P) M_{α(I)}`.
pub fn ehrenborg_ep(p: &LabeledPoset) -> QSymExpr {
    QSymExpr::from_terms(
        QBasis::Monomial,
        flag_fvector_classic(p)
            .into_iter()
            .map(|(i, c)| (Composition::from_rank_set(&i), BigInt::from(c))),
    )
}

/// The weighted chain count of `P(I)_wt`, which equals `f_I(P)`.
pub fn weighted_flag_count(p: &LabeledPoset, selection: &RankSet) -> u64 {
    rank_selected_weighted(p, selection).weighted_chain_count()
}

/// `inc[x][y]` is the number of increasing maximal chains of `[x, y]`, or
/// `None` when `x ≰ y`.
pub fn increasing_chain_counts(p: &LabeledPoset) -> Vec<Vec<Option<u64>>> {
    (0..p.len())
        .map(|x| {
            p.descent_profiles_from(x)
                .into_iter()
                .map(|prof| prof.map(|m| m.get(&0).copied().unwrap_or(0)))
                .collect()
        })
        .collect()
}

/// Every interval has exactly one increasing chain.
pub fn is_r_labeled(p: &LabeledPoset) -> bool {
    increasing_chain_counts(p)
        .iter()
        .flatten()
        .all(|c| c.is_none_or(|n| n == 1))
}

/// Every interval has at most one increasing chain, and every subinterval of
/// an interval with an increasing chain has one too.
pub fn is_relative_r_labeled(p: &LabeledPoset) -> bool {
    let inc = increasing_chain_counts(p);
    let order = p.order_matrix();
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            match inc[x][y] {
                Some(c) if c > 1 => return false,
                Some(1) => {
                    for a in (0..n).filter(|&a| order[x][a] && order[a][y]) {
                        for b in (0..n).filter(|&b| order[a][b] && order[b][y]) {
                            if inc[a][b] == Some(0) {
                                return false;
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    true
}

/// `φ_I(P/Γ)`: maximal chains `0̂ = t_0 < ... < t_r = 1̂` of `P(I)` such that
/// every `[t_{i-1}, t_i]` has an increasing chain. Chains are tested one at a
/// time; `Γ` is never built.
pub fn relative_flag_count(p: &LabeledPoset, selection: &RankSet) -> Result<u64, RankSelectionError> {
    if !is_relative_r_labeled(p) {
        return Err(RankSelectionError::NotRelativeRLabeled);
    }
    let inc = increasing_chain_counts(p);
    let sel = rank_selected(p, selection);
    let mut up: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(x, y, _) in sel.covers() {
        up.entry(x).or_default().push(y);
    }
    let mut count = 0;
    let mut stack = vec![vec![p.bottom()]];
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("non-empty");
        if last == p.top() {
            let outside_gamma = chain.windows(2).all(|w| inc[w[0]][w[1]].unwrap_or(0) > 0);
            count += u64::from(outside_gamma);
            continue;
        }
        for &y in up.get(&last).into_iter().flatten() {
            let mut next = chain.clone();
            next.push(y);
            stack.push(next);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{boolean_poset, chain_poset, weak_order_interval, young_interval};
    use crate::symfunc::Partition;

    fn set(n: usize, members: &[usize]) -> RankSet {
        RankSet::new(n, members.iter().copied()).unwrap()
    }

    fn young21() -> LabeledPoset {
        young_interval(&Partition::empty(), &Partition::new(vec![2, 1]).unwrap()).unwrap()
    }

    fn w0() -> LabeledPoset {
        weak_order_interval(&"321".parse().unwrap()).unwrap()
    }

    #[test]
    fn classic_flag_vector() {
        let b2 = boolean_poset(2).unwrap();
        let phi = flag_fvector_classic(&b2);
        assert_eq!(phi[&set(2, &[])], 1);
        assert_eq!(phi[&set(2, &[1])], 2);
        let b3 = boolean_poset(3).unwrap();
        assert_eq!(flag_fvector_classic(&b3)[&set(3, &[1, 2])], 6);
        assert_eq!(flag_fvector_classic(&b3)[&set(3, &[2])], 3);
        for p in [b3, young21(), w0(), chain_poset(&[3, 1])] {
            assert_eq!(flag_fvector_classic(&p)[&RankSet::empty(p.rank())], 1);
        }
    }

    #[test]
    fn ehrenborg_small() {
        assert_eq!(ehrenborg_ep(&chain_poset(&[4])).to_string(), "+1 M[1]");
        assert_eq!(ehrenborg_ep(&boolean_poset(2).unwrap()).to_string(), "+1 M[2] +2 M[1,1]");
        assert_eq!(ehrenborg_ep(&LabeledPoset::point()).to_string(), "+1 M[]");
    }

    #[test]
    fn weighted_counts() {
        let b3 = boolean_poset(3).unwrap();
        assert_eq!(weighted_flag_count(&b3, &RankSet::full(3)), 6);
        assert_eq!(weighted_flag_count(&b3, &set(3, &[1])), 3);
        assert_eq!(weighted_flag_count(&chain_poset(&[2, 1]), &RankSet::empty(2)), 0);
        let sel = rank_selected_weighted(&b3, &set(3, &[1]));
        assert!(sel.is_weighted());
        assert_eq!(sel.elements().len(), 5);
        // 0̂ to each atom, each atom to 1̂ through a Boolean square.
        assert!(sel.covers().iter().all(|&(_, _, w)| w == 1));
    }

    #[test]
    fn r_labelings() {
        for n in 0..=4 {
            assert!(is_r_labeled(&boolean_poset(n).unwrap()), "B_{n}");
        }
        assert!(!is_r_labeled(&chain_poset(&[2, 1])));
        assert!(!is_r_labeled(&young21()));
        assert!(is_relative_r_labeled(&young21()));
        assert!(is_relative_r_labeled(&w0()));
        assert!(is_relative_r_labeled(&boolean_poset(3).unwrap()));
    }

    #[test]
    fn relative_counts() {
        assert_eq!(relative_flag_count(&young21(), &set(3, &[1])).unwrap(), 1);
        assert_eq!(relative_flag_count(&boolean_poset(3).unwrap(), &RankSet::empty(3)).unwrap(), 1);
        assert_eq!(relative_flag_count(&w0(), &set(3, &[1, 2])).unwrap(), 2);
    }

    #[test]
    fn not_relative() {
        // Two increasing chains in one interval.
        let p = LabeledPoset::new(
            4,
            [
                crate::poset::Cover::new(0, 1, 1),
                crate::poset::Cover::new(0, 2, 1),
                crate::poset::Cover::new(1, 3, 2),
                crate::poset::Cover::new(2, 3, 2),
            ],
        )
        .unwrap();
        assert!(!is_relative_r_labeled(&p));
        assert_eq!(
            relative_flag_count(&p, &RankSet::empty(2)),
            Err(RankSelectionError::NotRelativeRLabeled)
        );
    }
}
