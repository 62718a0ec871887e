//! Quasi-symmetric functions with integer coefficients in the monomial
//! (`M_α`) and fundamental (`F_{I,n}`) bases.
//!
//! Both bases are indexed by [`Composition`]s; a fundamental term keyed by `α`
//! stands for `F_{I(α),|α|}`. Products, coproducts and antipodes are computed
//! in the monomial basis.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::expr;
use crate::poset::{RankSet, MAX_RANK};

mod polynomial;

pub use polynomial::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QSymError {
    #[error("OutOfRange: {member} is not strictly between 0 and {n}")]
    OutOfRange { member: usize, n: usize },
    #[error("ZeroPart: composition parts must be positive")]
    ZeroPart,
    #[error("RankTooLarge: weight {0} exceeds {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("ParseError: {0}")]
    Parse(String),
}

/// A sequence of positive integers.
///
/// Ordered by weight, then length, then lexicographically; this is the
/// canonical term order of every expression in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, QSymError> {
        if parts.contains(&0) {
            return Err(QSymError::ZeroPart);
        }
        Ok(Composition(parts))
    }

    /// The empty composition, indexing the unit.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// Drops zero parts of a weak composition.
    pub fn from_weak(parts: &[usize]) -> Self {
        Composition(parts.iter().copied().filter(|&p| p > 0).collect())
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

    /// `α_1 + ... + α_j` for `j = 1..=ℓ(α)`.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    /// `α_{≤j}`.
    pub fn prefix(&self, j: usize) -> Composition {
        Composition(self.0[..j].to_vec())
    }

    /// `α_{>j}`.
    pub fn suffix(&self, j: usize) -> Composition {
        Composition(self.0[j..].to_vec())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `α(I)` for `I ⊆ {1, ..., n-1}` given as a list of members.
    pub fn from_set(members: &[usize], n: usize) -> Result<Composition, QSymError> {
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&j| j == 0 || j >= n) {
            return Err(QSymError::OutOfRange { member: bad, n });
        }
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for j in sorted.into_iter().chain((n > 0).then_some(n)) {
            parts.push(j - prev);
            prev = j;
        }
        Ok(Composition(parts))
    }

    pub fn from_rank_set(set: &RankSet) -> Composition {
        Composition::from_set(&set.to_vec(), set.ambient_rank()).expect("rank sets are in range")
    }

    /// `I(α)`, the partial sums except the last.
    pub fn to_rank_set(&self) -> Result<RankSet, QSymError> {
        let n = self.weight();
        if n > MAX_RANK {
            return Err(QSymError::RankTooLarge(n));
        }
        let sums = self.partial_sums();
        let members = sums[..sums.len().saturating_sub(1)].iter().copied();
        Ok(RankSet::new(n, members).expect("partial sums lie in range"))
    }

    /// All compositions of `n`, in canonical order.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out: Vec<Composition> = if n == 0 {
            vec![Composition::empty()]
        } else {
            (0..1u64 << (n - 1))
                .map(|bits| {
                    let members: Vec<usize> = (1..n).filter(|j| bits & (1 << (j - 1)) != 0).collect();
                    Composition::from_set(&members, n).expect("members in range")
                })
                .collect()
        };
        out.sort();
        out
    }

    /// All compositions of weight at most `n`.
    pub fn up_to(n: usize) -> Vec<Composition> {
        (0..=n).flat_map(Composition::all).collect()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.len(), &self.0).cmp(&(other.weight(), other.len(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QBasis {
    /// Monomial quasi-symmetric functions `M_α`.
    Monomial,
    /// Fundamental quasi-symmetric functions `F_{I,n}`.
    Fundamental,
}

/// An integer combination of basis elements, possibly of mixed degree.
/// Equality compares the functions, not the basis they are written in.
#[derive(Debug, Clone)]
pub struct QSymExpr {
    basis: QBasis,
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymExpr {
    pub fn zero(basis: QBasis) -> Self {
        QSymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: QBasis) -> Self {
        QSymExpr::basis_element(basis, Composition::empty())
    }

    pub fn basis_element(basis: QBasis, alpha: Composition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(alpha, BigInt::one());
        QSymExpr { basis, terms }
    }

    /// `M_α`.
    pub fn monomial(alpha: Composition) -> Self {
        QSymExpr::basis_element(QBasis::Monomial, alpha)
    }

    /// `F_{I,n}` for the given descent set.
    pub fn fundamental(set: &RankSet) -> Self {
        QSymExpr::basis_element(QBasis::Fundamental, Composition::from_rank_set(set))
    }

    pub fn from_terms<I, C>(basis: QBasis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut out = QSymExpr::zero(basis);
        for (alpha, c) in terms {
            out.add_term(alpha, c.into());
        }
        out
    }

    pub fn add_term(&mut self, alpha: Composition, c: BigInt) {
        expr::add_into(&mut self.terms, alpha, c);
    }

    pub fn basis(&self) -> QBasis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Composition, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The degree-0 coefficient.
    pub fn counit(&self) -> BigInt {
        self.coeff(&Composition::empty())
    }

    pub fn homogeneous_component(&self, n: usize) -> QSymExpr {
        QSymExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.weight() == n)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> QSymExpr {
        let mut out = QSymExpr::zero(self.basis);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c * k);
        }
        out
    }

    pub fn in_basis(&self, basis: QBasis) -> QSymExpr {
        match (self.basis, basis) {
            (QBasis::Monomial, QBasis::Fundamental) => self.m_to_f(),
            (QBasis::Fundamental, QBasis::Monomial) => self.f_to_m(),
            _ => self.clone(),
        }
    }

    /// Rewrites in the monomial basis using `F_{I,n} = Σ_{J ⊇ I} M_{α(J)}`.
    pub fn f_to_m(&self) -> QSymExpr {
        if self.basis == QBasis::Monomial {
            return self.clone();
        }
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for (alpha, c) in &self.terms {
            for (beta, _) in refinements(alpha) {
                out.add_term(beta, c.clone());
            }
        }
        out
    }

    /// Rewrites in the fundamental basis using
    /// `M_α = Σ_{J ⊇ I(α)} (-1)^{|J - I(α)|} F_{J,n}`.
    pub fn m_to_f(&self) -> QSymExpr {
        if self.basis == QBasis::Fundamental {
            return self.clone();
        }
        let mut out = QSymExpr::zero(QBasis::Fundamental);
        for (alpha, c) in &self.terms {
            for (beta, sign) in refinements(alpha) {
                out.add_term(beta, c * sign);
            }
        }
        out
    }

    /// The product, returned in the monomial basis.
    pub fn mul(&self, other: &QSymExpr) -> QSymExpr {
        let a = self.f_to_m();
        let b = other.f_to_m();
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for (alpha, ca) in &a.terms {
            for (beta, cb) in &b.terms {
                let coeff = ca * cb;
                for (gamma, k) in quasi_shuffle(alpha.parts(), beta.parts()) {
                    out.add_term(Composition(gamma), &coeff * BigInt::from(k));
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> QSymExpr {
        (0..k).fold(QSymExpr::one(QBasis::Monomial), |acc, _| acc.mul(self))
    }

    /// `Δ M_α = Σ_j M_{α≤j} ⊗ M_{α>j}`, extended linearly.
    pub fn coproduct(&self) -> QSymTensor {
        let mut out = QSymTensor::zero();
        for (alpha, c) in &self.f_to_m().terms {
            for j in 0..=alpha.len() {
                out.add_term([alpha.prefix(j), alpha.suffix(j)], c.clone());
            }
        }
        out
    }

    /// The antipode, in the monomial basis, by the recursion
    /// `S(M_α) = -M_α - Σ_{0<j<ℓ(α)} S(M_{α≤j}) M_{α>j}`.
    pub fn antipode(&self) -> QSymExpr {
        let mut memo = HashMap::new();
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for (alpha, c) in &self.f_to_m().terms {
            let s = antipode_monomial(alpha, &mut memo);
            out = out + s.scale(c);
        }
        out
    }

    /// Sets `x_{k+1} = x_{k+2} = ... = 0` and expands directly from the basis
    /// definitions.
    pub fn expand_polynomial(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(k);
        for (alpha, c) in &self.terms {
            let p = match self.basis {
                QBasis::Monomial => Polynomial::monomial_qsym(alpha.parts(), k),
                QBasis::Fundamental => Polynomial::fundamental_qsym(alpha, k),
            };
            for (e, k) in p.terms() {
                out.add_term(e.clone(), k * c);
            }
        }
        out
    }
}

/// Pairs `(α(J), (-1)^{|J - I(α)|})` for every `J ⊇ I(α)`, i.e. every
/// refinement of `α`.
fn refinements(alpha: &Composition) -> Vec<(Composition, i32)> {
    let mut out = vec![(Vec::new(), 1)];
    for &part in alpha.parts() {
        // Each part splits independently into a composition of itself.
        let mut next = Vec::new();
        for (prefix, sign) in &out {
            for piece in Composition::all(part) {
                let mut v: Vec<usize> = prefix.clone();
                v.extend_from_slice(piece.parts());
                let extra = piece.len() as i32 - 1;
                next.push((v, if extra % 2 == 0 { *sign } else { -sign }));
            }
        }
        out = next;
    }
    out.into_iter().map(|(v, s)| (Composition(v), s)).collect()
}

/// The quasi-shuffle of two compositions with multiplicities.
fn quasi_shuffle(a: &[usize], b: &[usize]) -> HashMap<Vec<usize>, u64> {
    fn go(
        a: &[usize],
        b: &[usize],
        memo: &mut HashMap<(usize, usize), HashMap<Vec<usize>, u64>>,
    ) -> HashMap<Vec<usize>, u64> {
        if a.is_empty() || b.is_empty() {
            let rest = if a.is_empty() { b } else { a };
            return HashMap::from([(rest.to_vec(), 1)]);
        }
        let key = (a.len(), b.len());
        if let Some(hit) = memo.get(&key) {
            return hit.clone();
        }
        let mut out: HashMap<Vec<usize>, u64> = HashMap::new();
        let branches = [
            (a[0], go(&a[1..], b, memo)),
            (b[0], go(a, &b[1..], memo)),
            (a[0] + b[0], go(&a[1..], &b[1..], memo)),
        ];
        for (head, tails) in branches {
            for (tail, k) in tails {
                let mut v = Vec::with_capacity(tail.len() + 1);
                v.push(head);
                v.extend(tail);
                *out.entry(v).or_insert(0) += k;
            }
        }
        memo.insert(key, out.clone());
        out
    }
    go(a, b, &mut HashMap::new())
}

fn antipode_monomial(alpha: &Composition, memo: &mut HashMap<Composition, QSymExpr>) -> QSymExpr {
    if let Some(hit) = memo.get(alpha) {
        return hit.clone();
    }
    let result = if alpha.is_empty() {
        QSymExpr::one(QBasis::Monomial)
    } else {
        let mut acc = -QSymExpr::monomial(alpha.clone());
        for j in 1..alpha.len() {
            let left = antipode_monomial(&alpha.prefix(j), memo);
            acc = acc - left.mul(&QSymExpr::monomial(alpha.suffix(j)));
        }
        acc
    };
    memo.insert(alpha.clone(), result.clone());
    result
}

impl PartialEq for QSymExpr {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.in_basis(QBasis::Monomial).terms == other.in_basis(QBasis::Monomial).terms
        }
    }
}

impl Eq for QSymExpr {}

impl Add for QSymExpr {
    type Output = QSymExpr;
    fn add(self, rhs: QSymExpr) -> QSymExpr {
        let rhs = rhs.in_basis(self.basis);
        let mut out = self;
        for (a, c) in rhs.terms {
            out.add_term(a, c);
        }
        out
    }
}

impl Neg for QSymExpr {
    type Output = QSymExpr;
    fn neg(self) -> QSymExpr {
        QSymExpr {
            basis: self.basis,
            terms: self.terms.into_iter().map(|(a, c)| (a, -c)).collect(),
        }
    }
}

impl Sub for QSymExpr {
    type Output = QSymExpr;
    fn sub(self, rhs: QSymExpr) -> QSymExpr {
        self + (-rhs)
    }
}

impl Mul for &QSymExpr {
    type Output = QSymExpr;
    fn mul(self, rhs: &QSymExpr) -> QSymExpr {
        QSymExpr::mul(self, rhs)
    }
}

fn render_key(basis: QBasis, alpha: &Composition) -> String {
    match basis {
        QBasis::Monomial => {
            let parts: Vec<String> = alpha.parts().iter().map(|p| p.to_string()).collect();
            format!("M[{}]", parts.join(","))
        }
        QBasis::Fundamental => {
            let sums = alpha.partial_sums();
            let set: Vec<String> = sums[..sums.len().saturating_sub(1)]
                .iter()
                .map(|p| p.to_string())
                .collect();
            format!("F[{}|{}]", set.join(","), alpha.weight())
        }
    }
}

fn parse_key(term: &str) -> Result<(QBasis, Composition), QSymError> {
    let bad = |m: String| QSymError::Parse(m);
    if let Some(list) = expr::bracket_list(term, "M") {
        let parts = expr::parse_usizes(list).map_err(bad)?;
        return Ok((QBasis::Monomial, Composition::new(parts)?));
    }
    if let Some(body) = expr::bracket_list(term, "F") {
        let (set, n) = body
            .split_once('|')
            .ok_or_else(|| bad(format!("missing `|` in {term:?}")))?;
        let members = expr::parse_usizes(set).map_err(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad(format!("bad degree in {term:?}")))?;
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(bad(format!("descent set not increasing in {term:?}")));
        }
        return Ok((QBasis::Fundamental, Composition::from_set(&members, n)?));
    }
    Err(bad(format!("unknown term {term:?}")))
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = expr::render(self.terms.iter().map(|(a, c)| (c, render_key(self.basis, a))));
        f.write_str(&s)
    }
}

impl FromStr for QSymExpr {
    type Err = QSymError;

    /// Parses the rendered form. A bare `0` parses as zero in the monomial
    /// basis; mixing bases is an error.
    fn from_str(s: &str) -> Result<Self, QSymError> {
        let tokens = expr::tokenize(s).map_err(QSymError::Parse)?;
        let mut out: Option<QSymExpr> = None;
        for (c, term) in tokens {
            let (basis, alpha) = parse_key(&term)?;
            let acc = out.get_or_insert_with(|| QSymExpr::zero(basis));
            if acc.basis != basis {
                return Err(QSymError::Parse("mixed bases in one expression".into()));
            }
            acc.add_term(alpha, c);
        }
        Ok(out.unwrap_or_else(|| QSymExpr::zero(QBasis::Monomial)))
    }
}

/// An element of `QSym^{⊗K}` in the monomial basis of each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymTensor<const K: usize = 2> {
    terms: BTreeMap<[Composition; K], BigInt>,
}

impl<const K: usize> QSymTensor<K> {
    pub fn zero() -> Self {
        QSymTensor { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, key: [Composition; K], c: BigInt) {
        expr::add_into(&mut self.terms, key, c);
    }

    pub fn terms(&self) -> &BTreeMap<[Composition; K], BigInt> {
        &self.terms
    }

    pub fn coeff(&self, key: &[Composition; K]) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    /// Factor-wise product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QSymTensor::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                // Expand the product factor by factor.
                let mut partial: Vec<(Vec<Composition>, BigInt)> = vec![(Vec::new(), ca * cb)];
                for slot in 0..K {
                    let prod = QSymExpr::monomial(ka[slot].clone()).mul(&QSymExpr::monomial(kb[slot].clone()));
                    let mut next = Vec::new();
                    for (prefix, c) in &partial {
                        for (gamma, k) in prod.terms() {
                            let mut v = prefix.clone();
                            v.push(gamma.clone());
                            next.push((v, c * k));
                        }
                    }
                    partial = next;
                }
                for (v, c) in partial {
                    let key: [Composition; K] = v.try_into().expect("K factors");
                    out.add_term(key, c);
                }
            }
        }
        out
    }
}

impl QSymTensor<2> {
    /// `m ∘ (S ⊗ id)`.
    pub fn antipode_left_collapse(&self) -> QSymExpr {
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for ([a, b], c) in &self.terms {
            let left = QSymExpr::monomial(a.clone()).antipode();
            out = out + left.mul(&QSymExpr::monomial(b.clone())).scale(c);
        }
        out
    }

    /// `m ∘ (id ⊗ S)`.
    pub fn antipode_right_collapse(&self) -> QSymExpr {
        let mut out = QSymExpr::zero(QBasis::Monomial);
        for ([a, b], c) in &self.terms {
            let right = QSymExpr::monomial(b.clone()).antipode();
            out = out + QSymExpr::monomial(a.clone()).mul(&right).scale(c);
        }
        out
    }

    /// `(Δ ⊗ id)`.
    pub fn coproduct_left(&self) -> QSymTensor<3> {
        let mut out = QSymTensor::zero();
        for ([a, b], c) in &self.terms {
            for j in 0..=a.len() {
                out.add_term([a.prefix(j), a.suffix(j), b.clone()], c.clone());
            }
        }
        out
    }

    /// `(id ⊗ Δ)`.
    pub fn coproduct_right(&self) -> QSymTensor<3> {
        let mut out = QSymTensor::zero();
        for ([a, b], c) in &self.terms {
            for j in 0..=b.len() {
                out.add_term([a.clone(), b.prefix(j), b.suffix(j)], c.clone());
            }
        }
        out
    }
}

impl<const K: usize> fmt::Display for QSymTensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = expr::render(self.terms.iter().map(|(key, c)| {
            let factors: Vec<String> = key.iter().map(|a| render_key(QBasis::Monomial, a)).collect();
            (c, factors.join("⊗"))
        }));
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn m(parts: &[usize]) -> QSymExpr {
        QSymExpr::monomial(comp(parts))
    }

    fn parse(s: &str) -> QSymExpr {
        s.parse().unwrap()
    }

    #[test]
    fn composition_from_set() {
        assert_eq!(Composition::from_set(&[1, 3], 4).unwrap(), comp(&[1, 2, 1]));
        assert_eq!(Composition::from_set(&[], 5).unwrap(), comp(&[5]));
        assert_eq!(Composition::from_set(&[], 0).unwrap(), Composition::empty());
        assert_eq!(
            Composition::from_set(&[4], 4),
            Err(QSymError::OutOfRange { member: 4, n: 4 })
        );
        assert_eq!(Composition::new(vec![1, 0]), Err(QSymError::ZeroPart));
    }

    #[test]
    fn set_composition_roundtrip() {
        for set in RankSet::all(6) {
            let alpha = Composition::from_rank_set(&set);
            assert_eq!(alpha.weight(), 6);
            assert_eq!(alpha.to_rank_set().unwrap(), set);
        }
        assert_eq!(Composition::all(6).len(), 32);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![comp(&[1, 1]), comp(&[3]), comp(&[2]), Composition::empty(), comp(&[1, 2]), comp(&[2, 1])];
        v.sort();
        assert_eq!(v, vec![Composition::empty(), comp(&[2]), comp(&[1, 1]), comp(&[3]), comp(&[1, 2]), comp(&[2, 1])]);
    }

    #[test]
    fn products() {
        assert_eq!(m(&[1]).mul(&m(&[1])), parse("+2 M[1,1] +1 M[2]"));
        assert_eq!(m(&[2]).mul(&m(&[1])), parse("M[2,1] + M[1,2] + M[3]"));
        let a = parse("+3 M[2,1] -1 M[1]");
        assert_eq!(a.mul(&QSymExpr::one(QBasis::Monomial)), a);
    }

    #[test]
    fn coproducts() {
        let d = m(&[2, 1]).coproduct();
        assert_eq!(d.to_string(), "+1 M[]⊗M[2,1] +1 M[2]⊗M[1] +1 M[2,1]⊗M[]");
        let d1 = QSymExpr::one(QBasis::Monomial).coproduct();
        assert_eq!(d1.to_string(), "+1 M[]⊗M[]");
        assert_eq!(m(&[3]).coproduct().terms().len(), 2);
    }

    #[test]
    fn basis_changes() {
        let f = parse("F[|2]");
        assert_eq!(f.f_to_m(), parse("M[2] + M[1,1]"));
        assert_eq!(m(&[2]).m_to_f(), parse("+1 F[|2] -1 F[1|2]"));
        for alpha in Composition::up_to(6) {
            let x = m(alpha.parts());
            assert_eq!(x.m_to_f().f_to_m(), x);
            let y = QSymExpr::basis_element(QBasis::Fundamental, alpha.clone());
            assert_eq!(y.f_to_m().m_to_f(), y);
        }
    }

    #[test]
    fn antipode_small() {
        assert_eq!(m(&[1]).antipode(), -m(&[1]));
        assert_eq!(QSymExpr::one(QBasis::Monomial).antipode(), QSymExpr::one(QBasis::Monomial));
        assert!(m(&[2, 1]).coproduct().antipode_left_collapse().is_zero());
    }

    /// Closed form `S(M_α) = (-1)^{ℓ(α)} Σ_{β coarsens rev(α)} M_β`, an
    /// independent check of the recursion.
    fn antipode_closed_form(alpha: &Composition) -> QSymExpr {
        let rev = alpha.reversed();
        let sign = if alpha.len().is_multiple_of(2) { 1 } else { -1 };
        let mut out = QSymExpr::zero(QBasis::Monomial);
        if rev.is_empty() {
            return QSymExpr::one(QBasis::Monomial);
        }
        let gaps = rev.len() - 1;
        for mask in 0u32..(1 << gaps) {
            let mut parts = vec![rev.parts()[0]];
            for g in 0..gaps {
                let next = rev.parts()[g + 1];
                if mask & (1 << g) != 0 {
                    *parts.last_mut().unwrap() += next;
                } else {
                    parts.push(next);
                }
            }
            out.add_term(Composition(parts), BigInt::from(sign));
        }
        out
    }

    #[test]
    fn antipode_matches_closed_form() {
        for alpha in Composition::up_to(6) {
            assert_eq!(m(alpha.parts()).antipode(), antipode_closed_form(&alpha), "at {alpha}");
        }
    }

    #[test]
    fn polynomial_examples() {
        let p = m(&[1, 1]).expand_polynomial(2);
        assert_eq!(p.to_string(), "+1 x1x2");
        let f = parse("F[1|2]").expand_polynomial(2);
        assert_eq!(f.to_string(), "+1 x1x2");
        let q = m(&[2, 1]).expand_polynomial(3);
        assert_eq!(q.to_string(), "+1 x1^2x2 +1 x1^2x3 +1 x2^2x3");
    }

    #[test]
    fn render_and_parse() {
        let a = parse("+1 M[2] +2 M[1,1]");
        assert_eq!(a.to_string(), "+1 M[2] +2 M[1,1]");
        let f = parse("-3 F[1,2|4] +1 F[|0]");
        assert_eq!(f.to_string(), "+1 F[|0] -3 F[1,2|4]");
        assert_eq!(QSymExpr::zero(QBasis::Monomial).to_string(), "0");
        assert!("M[1] F[|1]".parse::<QSymExpr>().is_err());
        assert!("M[0]".parse::<QSymExpr>().is_err());
        assert!("F[2|2]".parse::<QSymExpr>().is_err());
        assert!("F[2,1|4]".parse::<QSymExpr>().is_err());
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = parse("M[1]") - parse("M[1]");
        assert!(a.is_zero());
    }
}
