//! Label-equivalence: a poset isomorphism under which every interval keeps
//! its descent counts.

use std::collections::BTreeMap;

use super::LabeledPoset;

type Profile = BTreeMap<u64, u64>;

struct Invariants {
    order: Vec<Vec<bool>>,
    /// `profiles[x][y]` is the descent profile of `[x, y]` when `x ≤ y`.
    profiles: Vec<Vec<Option<Profile>>>,
    signature: Vec<Signature>,
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone)]
struct Signature {
    rank: usize,
    up_degree: usize,
    down_degree: usize,
    below: Profile,
    above: Profile,
}

impl Invariants {
    fn new(p: &LabeledPoset) -> Self {
        let order = p.order_matrix();
        let profiles: Vec<Vec<Option<Profile>>> =
            (0..p.len()).map(|x| p.descent_profiles_from(x)).collect();
        let signature = (0..p.len())
            .map(|x| Signature {
                rank: p.rank_of(x),
                up_degree: p.upper_covers(x).count(),
                down_degree: p.lower_covers(x).count(),
                below: profiles[p.bottom()][x].clone().unwrap_or_default(),
                above: profiles[x][p.top()].clone().unwrap_or_default(),
            })
            .collect();
        Invariants {
            order,
            profiles,
            signature,
        }
    }
}

/// True iff some order isomorphism `P → Q` preserves the descent counts of
/// every interval `[x, y]`.
///
/// Exhaustive backtracking, pruned by per-element signatures (rank, cover
/// degrees, descent profiles of `[0̂, x]` and `[x, 1̂]`). Intended for posets of
/// a few dozen elements.
pub fn label_equivalent(p: &LabeledPoset, q: &LabeledPoset) -> bool {
    if p.len() != q.len() || p.rank() != q.rank() || p.covers().len() != q.covers().len() {
        return false;
    }
    if p.flag_stats() != q.flag_stats() {
        return false;
    }
    let ip = Invariants::new(p);
    let iq = Invariants::new(q);

    let mut ps: Vec<_> = ip.signature.iter().collect();
    let mut qs: Vec<_> = iq.signature.iter().collect();
    ps.sort();
    qs.sort();
    if ps != qs {
        return false;
    }

    let order = p.elements_by_rank();
    let candidates: Vec<Vec<usize>> = order
        .iter()
        .map(|&x| {
            (0..q.len())
                .filter(|&y| iq.signature[y] == ip.signature[x])
                .collect()
        })
        .collect();
    let mut image = vec![usize::MAX; p.len()];
    let mut used = vec![false; q.len()];
    search(0, &order, &candidates, &ip, &iq, &mut image, &mut used)
}

fn search(
    depth: usize,
    order: &[usize],
    candidates: &[Vec<usize>],
    ip: &Invariants,
    iq: &Invariants,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &candidates[depth] {
        if used[y] || !consistent(x, y, &order[..depth], ip, iq, image) {
            continue;
        }
        image[x] = y;
        used[y] = true;
        if search(depth + 1, order, candidates, ip, iq, image, used) {
            return true;
        }
        used[y] = false;
        image[x] = usize::MAX;
    }
    false
}

fn consistent(x: usize, y: usize, assigned: &[usize], ip: &Invariants, iq: &Invariants, image: &[usize]) -> bool {
    assigned.iter().all(|&a| {
        let b = image[a];
        ip.order[a][x] == iq.order[b][y]
            && ip.order[x][a] == iq.order[y][b]
            && ip.profiles[a][x] == iq.profiles[b][y]
            && ip.profiles[x][a] == iq.profiles[y][b]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Cover;

    fn diamond(a: i64, b: i64) -> LabeledPoset {
        LabeledPoset::new(
            4,
            [Cover::new(0, 1, a), Cover::new(0, 2, b), Cover::new(1, 3, b), Cover::new(2, 3, a)],
        )
        .unwrap()
    }

    fn chain(word: &[i64]) -> LabeledPoset {
        LabeledPoset::new(
            word.len() + 1,
            word.iter().enumerate().map(|(k, &l)| Cover::new(k, k + 1, l)),
        )
        .unwrap()
    }

    #[test]
    fn reflexive() {
        let p = diamond(1, 2);
        assert!(label_equivalent(&p, &p));
    }

    #[test]
    fn monotone_relabeling() {
        assert!(label_equivalent(&diamond(1, 2), &diamond(10, 20)));
        assert!(label_equivalent(&diamond(1, 2), &diamond(2, 1)));
    }

    #[test]
    fn descent_mismatch() {
        assert!(!label_equivalent(&chain(&[1, 2]), &chain(&[2, 1])));
        assert!(label_equivalent(&chain(&[1, 2]), &chain(&[-4, 9])));
    }

    #[test]
    fn renumbered_elements() {
        let p = diamond(1, 2);
        let q = LabeledPoset::new(
            4,
            [Cover::new(3, 2, 7), Cover::new(3, 0, 8), Cover::new(2, 1, 8), Cover::new(0, 1, 7)],
        )
        .unwrap();
        assert!(label_equivalent(&p, &q));
        assert!(label_equivalent(&q, &p));
    }

    #[test]
    fn different_descent_sets() {
        assert!(!label_equivalent(&chain(&[1, 2, 3]), &chain(&[1, 3, 2])));
    }

    #[test]
    fn product_factors_commute() {
        let low = diamond(1, 2).product(&chain(&[0]));
        let high = chain(&[0]).product(&diamond(1, 2));
        assert_ne!(low, high);
        assert!(label_equivalent(&low, &high));
    }

    #[test]
    fn same_counts_different_shape() {
        // A rank-2 poset with three atoms whose chains have descents {}, {1}, {}
        // versus one with words arranged differently across atoms.
        let p = LabeledPoset::new(
            5,
            [
                Cover::new(0, 1, 1),
                Cover::new(0, 2, 2),
                Cover::new(0, 3, 3),
                Cover::new(1, 4, 5),
                Cover::new(2, 4, 1),
                Cover::new(3, 4, 4),
            ],
        )
        .unwrap();
        let q = p.relabel(|l| if l == 4 { 0 } else { l });
        assert_eq!(p.flag_stats().total_chains(), q.flag_stats().total_chains());
        assert!(!label_equivalent(&p, &q));
    }
}
