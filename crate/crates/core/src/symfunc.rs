//! Symmetric functions in the monomial (`m_λ`) and Schur (`s_λ`) bases.
//!
//! Schur functions enter only through Kostka numbers: `s_λ = Σ_μ K_{λμ} m_μ`.
//! The inverse change of basis is exact back-substitution, since the Kostka
//! matrix is unitriangular for the dominance order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::expr;
use crate::generating::{fp, Method};
use crate::poset::{FlagStats, LabeledPoset};
use crate::qsym::{Composition, QBasis, QSymExpr};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("WeightMismatch: |{0}| != |{1}|")]
    WeightMismatch(Partition, Partition),
    #[error("NotSymmetric: the generating function is not symmetric")]
    NotSymmetric,
    #[error("NotPartition: {0:?} is not weakly decreasing with positive parts")]
    NotPartition(Vec<usize>),
    #[error("ParseError: {0}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Drops trailing zeros, e.g. from a padded row vector.
    pub fn from_padded(parts: &[usize]) -> Result<Self, SymError> {
        let end = parts.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1);
        Partition::new(parts[..end].to_vec())
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `i` (0-based), zero past the last part.
    pub fn row(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ⊵ other` (equal weights assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.row(i);
            b += other.row(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in canonical order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Every distinct rearrangement of the parts, as compositions.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut v: Vec<usize> = self.0.iter().rev().copied().collect();
        let mut out = vec![Composition::new(v.clone()).expect("positive parts")];
        while next_permutation(&mut v) {
            out.push(Composition::new(v.clone()).expect("positive parts"));
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.len(), &self.0).cmp(&(other.weight(), other.len(), &other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = SymError;

    /// Comma-separated parts; an empty string, `0` or `-` is the empty partition.
    fn from_str(s: &str) -> Result<Self, SymError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = expr::parse_usizes(s).map_err(SymError::Parse)?;
        Partition::new(parts)
    }
}

/// `λ(α)`: the parts of `α` in decreasing order.
pub fn sort_composition(alpha: &Composition) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition(parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymBasis {
    /// Monomial symmetric functions `m_λ`.
    Monomial,
    /// Schur functions `s_λ`.
    Schur,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: SymBasis,
    terms: BTreeMap<Partition, BigInt>,
}

impl SymExpr {
    pub fn zero(basis: SymBasis) -> Self {
        SymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: SymBasis, lambda: Partition) -> Self {
        let mut out = SymExpr::zero(basis);
        out.add_term(lambda, BigInt::one());
        out
    }

    pub fn from_terms<I, C>(basis: SymBasis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut out = SymExpr::zero(basis);
        for (l, c) in terms {
            out.add_term(l, c.into());
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        expr::add_into(&mut self.terms, lambda, c);
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn in_basis(&self, basis: SymBasis) -> SymExpr {
        match (self.basis, basis) {
            (SymBasis::Monomial, SymBasis::Schur) => m_to_schur(self),
            (SymBasis::Schur, SymBasis::Monomial) => schur_to_m(self),
            _ => self.clone(),
        }
    }

    /// The same function as a quasi-symmetric expression in the `M` basis,
    /// via `m_μ = Σ_{λ(α)=μ} M_α`.
    pub fn to_qsym(&self) -> QSymExpr {
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for (mu, c) in &schur_to_m(self).terms {
            for alpha in mu.rearrangements() {
                out.add_term(alpha, c.clone());
            }
        }
        out
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            SymBasis::Monomial => "m",
            SymBasis::Schur => "s",
        };
        let s = expr::render(self.terms.iter().map(|(l, c)| {
            let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
            (c, format!("{tag}[{}]", parts.join(",")))
        }));
        f.write_str(&s)
    }
}

impl FromStr for SymExpr {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, SymError> {
        let tokens = expr::tokenize(s).map_err(SymError::Parse)?;
        let mut out: Option<SymExpr> = None;
        for (c, term) in tokens {
            let (basis, list) = if let Some(l) = expr::bracket_list(&term, "m") {
                (SymBasis::Monomial, l)
            } else if let Some(l) = expr::bracket_list(&term, "s") {
                (SymBasis::Schur, l)
            } else {
                return Err(SymError::Parse(format!("unknown term {term:?}")));
            };
            let lambda = Partition::new(expr::parse_usizes(list).map_err(SymError::Parse)?)?;
            let acc = out.get_or_insert_with(|| SymExpr::zero(basis));
            if acc.basis != basis {
                return Err(SymError::Parse("mixed bases in one expression".into()));
            }
            acc.add_term(lambda, c);
        }
        Ok(out.unwrap_or_else(|| SymExpr::zero(SymBasis::Monomial)))
    }
}

/// The `m`-expansion of `a` if its `M_α` coefficients depend only on `λ(α)`.
pub fn is_symmetric(a: &QSymExpr) -> Option<SymExpr> {
    let a = a.f_to_m();
    let mut out = SymExpr::zero(SymBasis::Monomial);
    let mut seen: Vec<Partition> = a.terms().keys().map(sort_composition).collect();
    seen.sort();
    seen.dedup();
    for mu in seen {
        let mut coeffs = mu.rearrangements().into_iter().map(|alpha| a.coeff(&alpha));
        let first = coeffs.next().expect("at least one rearrangement");
        if coeffs.any(|c| c != first) {
            return None;
        }
        out.add_term(mu, first);
    }
    Some(out)
}

/// Whether `f_α(P)` depends only on `λ(α)`, read directly off the flag
/// statistics.
pub fn has_symmetric_flag_counts(stats: &FlagStats) -> bool {
    Partition::all(stats.rank()).into_iter().all(|mu| {
        let mut values = mu.rearrangements().into_iter().map(|alpha| {
            stats.f(&alpha.to_rank_set().expect("rank within bounds"))
        });
        let first = values.next().expect("at least one rearrangement");
        values.all(|v| v == first)
    })
}

fn kostka_cache() -> &'static Mutex<HashMap<(Partition, Partition), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
///
/// Tableaux are enumerated as chains of partitions `∅ ⊂ λ¹ ⊂ ... ⊂ λ` whose
/// successive differences are horizontal strips of sizes `μ_1, μ_2, ...`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64, SymError> {
    if lambda.weight() != mu.weight() {
        return Err(SymError::WeightMismatch(lambda.clone(), mu.clone()));
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&k) = kostka_cache().lock().expect("kostka cache").get(&key) {
        return Ok(k);
    }
    let rows = lambda.len();
    let mut current = vec![0usize; rows];
    let k = count_strip_chains(lambda.parts(), mu.parts(), &mut current);
    kostka_cache().lock().expect("kostka cache").insert(key, k);
    Ok(k)
}

fn count_strip_chains(shape: &[usize], content: &[usize], current: &mut Vec<usize>) -> u64 {
    let Some((&size, rest)) = content.split_first() else {
        return u64::from(current.as_slice() == shape);
    };
    let mut total = 0;
    let before = current.clone();
    add_strip(0, size, shape, &before, current, &mut |cur| {
        total += count_strip_chains(shape, rest, cur);
    });
    total
}

/// Visits every horizontal strip of `size` boxes added to `before` inside
/// `shape`. Row `i` may grow up to `before[i-1]` so that no two new boxes
/// share a column.
fn add_strip(
    row: usize,
    size: usize,
    shape: &[usize],
    before: &[usize],
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if row == shape.len() {
        if size == 0 {
            visit(current);
        }
        return;
    }
    let cap = if row == 0 { shape[0] } else { shape[row].min(before[row - 1]) };
    let max_add = cap.saturating_sub(before[row]).min(size);
    for add in 0..=max_add {
        current[row] = before[row] + add;
        add_strip(row + 1, size - add, shape, before, current, visit);
    }
    current[row] = before[row];
}

/// Expands each `s_λ` as `Σ_μ K_{λμ} m_μ`.
pub fn schur_to_m(a: &SymExpr) -> SymExpr {
    if a.basis == SymBasis::Monomial {
        return a.clone();
    }
    let mut out = SymExpr::zero(SymBasis::Monomial);
    for (lambda, c) in &a.terms {
        for mu in Partition::all(lambda.weight()) {
            let k = kostka(lambda, &mu).expect("equal weights");
            if k != 0 {
                out.add_term(mu, c * BigInt::from(k));
            }
        }
    }
    out
}

/// Inverts [`schur_to_m`] by peeling off the lexicographically largest
/// partition, whose Schur coefficient equals its `m` coefficient.
pub fn m_to_schur(a: &SymExpr) -> SymExpr {
    if a.basis == SymBasis::Schur {
        return a.clone();
    }
    let mut rest = a.clone();
    let mut out = SymExpr::zero(SymBasis::Schur);
    while let Some(lambda) = rest.terms.keys().max_by(|x, y| x.parts().cmp(y.parts())).cloned() {
        let c = rest.coeff(&lambda);
        let expansion = schur_to_m(&SymExpr::basis_element(SymBasis::Schur, lambda.clone()));
        debug_assert!(expansion.coeff(&lambda).is_one());
        for (mu, k) in &expansion.terms {
            rest.add_term(mu.clone(), -(&c * k));
        }
        debug_assert!(rest.coeff(&lambda).is_zero());
        out.add_term(lambda, c);
    }
    out
}

/// The coefficients `c^P_λ` of `F_P = Σ_λ c^P_λ s_λ`.
pub fn schur_expansion(p: &LabeledPoset) -> Result<BTreeMap<Partition, BigInt>, SymError> {
    let m = is_symmetric(&fp(p, Method::ViaChains)).ok_or(SymError::NotSymmetric)?;
    Ok(m_to_schur(&m).terms)
}
