//! Shared corpus and brute-force oracles for the integration suites.

#![allow(dead_code)]

use std::collections::BTreeMap;

use chainform::builders::{
    boolean_poset, random_graded_poset, weak_order_interval, young_interval, Permutation,
};
use chainform::poset::{descent_set, Label, LabeledPoset, RankSet};
use chainform::symfunc::Partition;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const RANDOM_SEED: u64 = 0x5eed_c4a1;
pub const RANDOM_COUNT: usize = 20;

#[derive(Clone)]
pub struct Named {
    pub name: String,
    pub poset: LabeledPoset,
}

fn named(name: impl Into<String>, poset: LabeledPoset) -> Named {
    Named { name: name.into(), poset }
}

pub fn booleans() -> Vec<Named> {
    (0..=4).map(|n| named(format!("B_{n}"), boolean_poset(n).unwrap())).collect()
}

/// Every interval `[μ, ν]` of Young's lattice with `|ν| ≤ max`.
pub fn young_intervals(max: usize) -> Vec<Named> {
    let mut out = Vec::new();
    for n in 0..=max {
        for nu in Partition::all(n) {
            for m in 0..=n {
                for mu in Partition::all(m) {
                    if mu.is_contained_in(&nu) {
                        let p = young_interval(&mu, &nu).unwrap();
                        out.push(named(format!("young {mu} / {nu}"), p));
                    }
                }
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::new(v.clone()).unwrap());
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            break;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

pub fn weak_intervals(n: usize) -> Vec<Named> {
    permutations(n)
        .into_iter()
        .map(|w| named(format!("weak {w}"), weak_order_interval(&w).unwrap()))
        .collect()
}

pub fn random_posets() -> Vec<Named> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    (0..RANDOM_COUNT)
        .map(|k| named(format!("random #{k}"), random_graded_poset(&mut rng, 5, 3, 4)))
        .collect()
}

/// B_0..B_4, Young intervals with |ν| ≤ 5, weak intervals of S_4, and the
/// seeded random posets.
pub fn corpus() -> Vec<Named> {
    let mut out = booleans();
    out.extend(young_intervals(5));
    out.extend(weak_intervals(4));
    out.extend(random_posets());
    out
}

/// Distinct posets of rank ≤ `max_rank` and at most `max_len` elements,
/// keeping the first name seen.
pub fn small_pool(max_rank: usize, max_len: usize) -> Vec<Named> {
    let mut seen = std::collections::BTreeSet::new();
    corpus()
        .into_iter()
        .filter(|n| n.poset.rank() <= max_rank && n.poset.len() <= max_len)
        .filter(|n| seen.insert(n.poset.to_text()))
        .collect()
}

/// `d_I` by listing every maximal chain through the public chain list.
pub fn brute_d(p: &LabeledPoset) -> BTreeMap<RankSet, u64> {
    let mut out = BTreeMap::new();
    for chain in p.maximal_chains() {
        *out.entry(descent_set(&chain.word)).or_insert(0) += 1;
    }
    out
}

/// `f_J` summed from [`brute_d`].
pub fn brute_f(p: &LabeledPoset, j: &RankSet) -> u64 {
    brute_d(p)
        .iter()
        .filter(|(i, _)| i.is_subset(j))
        .map(|(_, c)| *c)
        .sum()
}

/// Reduced words `(a_1, ..., a_ℓ)` of `w` under `w = s_{a_ℓ} ⋯ s_{a_1}`,
/// found by trying every word of length `ℓ(w)`.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<Label>> {
    let n = w.size();
    let len = w.length();
    let mut out = Vec::new();
    if n < 2 {
        if len == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let total = (n - 1).pow(len as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            word.push((c % (n - 1)) as Label + 1);
            c /= n - 1;
        }
        let mut u: Vec<usize> = (1..=n).collect();
        for &a in &word {
            // Left multiplication by (a, a+1) swaps the values a and a+1.
            let a = a as usize;
            for v in u.iter_mut() {
                if *v == a {
                    *v = a + 1;
                } else if *v == a + 1 {
                    *v = a;
                }
            }
        }
        if u == w.one_line() {
            out.push(word);
        }
    }
    out
}

/// `c^ν_{μ,λ}`: fillings of `ν / μ` with content `λ`, rows weakly
/// increasing, columns strictly increasing, whose right-to-left, top-to-bottom
/// reading word is a lattice word.
pub fn littlewood_richardson(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if mu.weight() + lambda.weight() != nu.weight() || !mu.is_contained_in(nu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (mu.row(r)..nu.row(r)).map(move |c| (r, c)))
        .collect();
    let k = lambda.len().max(1);
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut count = 0;
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        k: usize,
        lambda: &Partition,
        filling: &mut BTreeMap<(usize, usize), usize>,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            let mut content = vec![0usize; k + 1];
            let mut rows: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
            for (&(r, c), &v) in filling.iter() {
                rows.entry(r).or_default().push((c, v));
            }
            for (_, mut row) in rows {
                row.sort();
                for &(_, v) in row.iter().rev() {
                    content[v] += 1;
                    if v > 1 && content[v] > content[v - 1] {
                        return;
                    }
                }
            }
            if (1..=k).all(|v| content[v] == lambda.row(v - 1)) {
                *count += 1;
            }
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=k {
            if c > 0 {
                if let Some(&left) = filling.get(&(r, c - 1)) {
                    if left > v {
                        continue;
                    }
                }
            }
            if r > 0 {
                if let Some(&above) = filling.get(&(r - 1, c)) {
                    if above >= v {
                        continue;
                    }
                }
            }
            filling.insert((r, c), v);
            go(idx + 1, cells, k, lambda, filling, count);
            filling.remove(&(r, c));
        }
    }
    go(0, &cells, k, lambda, &mut filling, &mut count);
    count
}
