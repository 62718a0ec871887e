//! The incidence Hopf algebra on label-equivalence classes of edge-labeled
//! posets, and the morphism `Φ: P ↦ F_P` into quasi-symmetric functions.
//!
//! A class is carried by a concrete representative. Normalized values never
//! hold two label-equivalent representatives in the same slot position, and
//! the representative of a class is the member with the least
//! [`LabeledPoset::to_text`] among those that were merged.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::generating::{fp, Method};
use crate::poset::{label_equivalent, LabeledPoset};
use crate::qsym::{Composition, QBasis, QSymExpr, QSymTensor};

/// Cheap invariants of a class: equal for label-equivalent posets.
type Fingerprint = (usize, usize, usize, Vec<(u64, u64)>);

fn fingerprint(p: &LabeledPoset) -> Fingerprint {
    let stats = p.flag_stats();
    (
        p.len(),
        p.rank(),
        p.covers().len(),
        stats.nonzero_d().map(|(i, c)| (i.bits(), c)).collect(),
    )
}

struct ClassMember {
    fingerprint: Fingerprint,
    text: String,
    poset: LabeledPoset,
}

/// Assigns class indices to posets, merging label-equivalent ones.
#[derive(Default)]
struct ClassTable {
    classes: Vec<ClassMember>,
    by_fingerprint: HashMap<Fingerprint, Vec<usize>>,
    by_text: HashMap<String, usize>,
}

impl ClassTable {
    fn class_of(&mut self, p: &LabeledPoset) -> usize {
        let text = p.to_text();
        if let Some(&k) = self.by_text.get(&text) {
            return k;
        }
        let fp = fingerprint(p);
        let bucket = self.by_fingerprint.entry(fp.clone()).or_default();
        let found = bucket
            .iter()
            .copied()
            .find(|&k| label_equivalent(&self.classes[k].poset, p));
        let k = match found {
            Some(k) => {
                if text < self.classes[k].text {
                    self.classes[k].text = text.clone();
                    self.classes[k].poset = p.clone();
                }
                k
            }
            None => {
                let k = self.classes.len();
                bucket.push(k);
                self.classes.push(ClassMember {
                    fingerprint: fp,
                    text: text.clone(),
                    poset: p.clone(),
                });
                k
            }
        };
        self.by_text.insert(text, k);
        k
    }

    fn sort_key(&self, k: usize) -> (usize, &str) {
        (self.classes[k].fingerprint.1, &self.classes[k].text)
    }
}

fn normalize_keys<const K: usize>(
    raw: impl IntoIterator<Item = ([LabeledPoset; K], BigInt)>,
) -> Vec<([LabeledPoset; K], BigInt)> {
    let mut table = ClassTable::default();
    let mut sums: HashMap<[usize; K], BigInt> = HashMap::new();
    for (slots, c) in raw {
        if c.is_zero() {
            continue;
        }
        let key: [usize; K] = std::array::from_fn(|s| table.class_of(&slots[s]));
        *sums.entry(key).or_insert_with(BigInt::zero) += c;
    }
    let mut kept: Vec<([usize; K], BigInt)> = sums.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    kept.sort_by(|(a, _), (b, _)| {
        let ka: Vec<_> = a.iter().map(|&k| table.sort_key(k)).collect();
        let kb: Vec<_> = b.iter().map(|&k| table.sort_key(k)).collect();
        ka.cmp(&kb)
    });
    kept.into_iter()
        .map(|(key, c)| (key.map(|k| table.classes[k].poset.clone()), c))
        .collect()
}

/// A finite integer combination of classes.
#[derive(Debug, Clone)]
pub struct IncidenceElement {
    terms: Vec<(LabeledPoset, BigInt)>,
}

/// A finite integer combination of `K`-fold tensors of classes.
#[derive(Debug, Clone)]
pub struct IncidenceTensor<const K: usize = 2> {
    terms: Vec<([LabeledPoset; K], BigInt)>,
}

impl IncidenceElement {
    pub fn zero() -> Self {
        IncidenceElement { terms: Vec::new() }
    }

    /// The class of the one-element poset.
    pub fn one() -> Self {
        Self::from_poset(LabeledPoset::point())
    }

    pub fn from_poset(p: LabeledPoset) -> Self {
        normalize([(p, BigInt::one())])
    }

    pub fn terms(&self) -> &[(LabeledPoset, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        normalize(self.terms.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    pub fn homogeneous_component(&self, rank: usize) -> Self {
        IncidenceElement {
            terms: self.terms.iter().filter(|(p, _)| p.rank() == rank).cloned().collect(),
        }
    }

    /// Coefficient of the class of `p`.
    pub fn coeff(&self, p: &LabeledPoset) -> BigInt {
        self.terms
            .iter()
            .find(|(q, _)| label_equivalent(p, q))
            .map_or_else(BigInt::zero, |(_, c)| c.clone())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| hopf_product(&acc, self))
    }
}

/// Merges label-equivalent representatives, summing coefficients, and drops
/// zeros. Terms are ordered by (rank, serialization).
pub fn normalize<I>(raw: I) -> IncidenceElement
where
    I: IntoIterator<Item = (LabeledPoset, BigInt)>,
{
    IncidenceElement {
        terms: normalize_keys(raw.into_iter().map(|(p, c)| ([p], c)))
            .into_iter()
            .map(|([p], c)| (p, c))
            .collect(),
    }
}

impl PartialEq for IncidenceElement {
    /// Equality of classes, not of representatives.
    fn eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

impl Add for IncidenceElement {
    type Output = IncidenceElement;

    fn add(self, other: Self) -> Self {
        normalize(self.terms.into_iter().chain(other.terms))
    }
}

impl Neg for IncidenceElement {
    type Output = IncidenceElement;

    fn neg(self) -> Self {
        IncidenceElement {
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl Sub for IncidenceElement {
    type Output = IncidenceElement;

    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl fmt::Display for IncidenceElement {
    /// One `±c {poset}` term per line; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_lines(f, self.terms.iter().map(|(p, c)| (c, p.to_inline())))
    }
}

fn render_lines<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a BigInt, String)>) -> fmt::Result {
    let lines: Vec<String> = terms.map(|(c, t)| crate::expr::render([(c, t)])).collect();
    if lines.is_empty() {
        f.write_str("0")
    } else {
        f.write_str(&lines.join("\n"))
    }
}

impl<const K: usize> IncidenceTensor<K> {
    pub fn zero() -> Self {
        IncidenceTensor { terms: Vec::new() }
    }

    pub fn from_terms<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = ([LabeledPoset; K], BigInt)>,
    {
        IncidenceTensor {
            terms: normalize_keys(raw),
        }
    }

    pub fn terms(&self) -> &[([LabeledPoset; K], BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .cloned()
                .chain(other.terms.iter().map(|(k, c)| (k.clone(), -c))),
        )
    }

    /// `(Φ ⊗ ... ⊗ Φ)(self)`.
    pub fn phi(&self) -> QSymTensor<K> {
        let mut out = QSymTensor::<K>::zero();
        for (slots, c) in &self.terms {
            let images: Vec<QSymExpr> = slots.iter().map(|p| fp(p, Method::ViaChains)).collect();
            let mut partial: Vec<(Vec<Composition>, BigInt)> = vec![(Vec::new(), c.clone())];
            for image in &images {
                partial = partial
                    .into_iter()
                    .flat_map(|(key, k)| {
                        image.terms().iter().map(move |(alpha, a)| {
                            let mut key = key.clone();
                            key.push(alpha.clone());
                            (key, &k * a)
                        })
                    })
                    .collect();
            }
            for (key, k) in partial {
                let key: [Composition; K] = key.try_into().expect("one composition per slot");
                out.add_term(key, k);
            }
        }
        out
    }
}

impl<const K: usize> PartialEq for IncidenceTensor<K> {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl<const K: usize> fmt::Display for IncidenceTensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_lines(
            f,
            self.terms.iter().map(|(slots, c)| {
                let parts: Vec<String> = slots.iter().map(|p| p.to_inline()).collect();
                (c, parts.join("⊗"))
            }),
        )
    }
}

fn split(p: &LabeledPoset) -> impl Iterator<Item = [LabeledPoset; 2]> + '_ {
    (0..p.len()).map(move |x| {
        [
            p.interval(p.bottom(), x).expect("0̂ ≤ x"),
            p.interval(x, p.top()).expect("x ≤ 1̂"),
        ]
    })
}

impl IncidenceTensor<2> {
    /// `(Δ ⊗ id)(self)`.
    pub fn coproduct_left(&self) -> IncidenceTensor<3> {
        IncidenceTensor::from_terms(self.terms.iter().flat_map(|([a, b], c)| {
            split(a).map(move |[a1, a2]| ([a1, a2, b.clone()], c.clone()))
        }))
    }

    /// `(id ⊗ Δ)(self)`.
    pub fn coproduct_right(&self) -> IncidenceTensor<3> {
        IncidenceTensor::from_terms(self.terms.iter().flat_map(|([a, b], c)| {
            split(b).map(move |[b1, b2]| ([a.clone(), b1, b2], c.clone()))
        }))
    }

    /// `μ ∘ (S ⊗ id)(self)`.
    pub fn antipode_left_collapse(&self) -> IncidenceElement {
        let mut memo = HashMap::new();
        let mut raw = Vec::new();
        for ([a, b], c) in &self.terms {
            let sa = antipode_of(a, &mut memo);
            for (p, k) in sa.terms() {
                raw.push((p.product(b), k * c));
            }
        }
        normalize(raw)
    }

    /// `μ ∘ (id ⊗ S)(self)`.
    pub fn antipode_right_collapse(&self) -> IncidenceElement {
        let mut memo = HashMap::new();
        let mut raw = Vec::new();
        for ([a, b], c) in &self.terms {
            let sb = antipode_of(b, &mut memo);
            for (p, k) in sb.terms() {
                raw.push((a.product(p), k * c));
            }
        }
        normalize(raw)
    }
}

/// Bilinear extension of the poset product.
pub fn hopf_product(a: &IncidenceElement, b: &IncidenceElement) -> IncidenceElement {
    normalize(
        a.terms
            .iter()
            .flat_map(|(p, c)| b.terms.iter().map(move |(q, k)| (p.product(q), c * k))),
    )
}

/// `Δ(P) = Σ_{x ∈ P} [0̂, x] ⊗ [x, 1̂]`, extended linearly.
pub fn hopf_coproduct(a: &IncidenceElement) -> IncidenceTensor {
    IncidenceTensor::from_terms(
        a.terms
            .iter()
            .flat_map(|(p, c)| split(p).map(move |pair| (pair, c.clone()))),
    )
}

/// Coefficient of the rank-0 class.
pub fn counit(a: &IncidenceElement) -> BigInt {
    a.terms
        .iter()
        .filter(|(p, _)| p.rank() == 0)
        .map(|(_, c)| c.clone())
        .sum()
}

/// `S(1) = 1` and `S(P) = -Σ_{x ≠ 1̂} S([0̂, x]) · [x, 1̂]`.
pub fn antipode_incidence(a: &IncidenceElement) -> IncidenceElement {
    let mut memo = HashMap::new();
    let mut raw = Vec::new();
    for (p, c) in &a.terms {
        for (q, k) in antipode_of(p, &mut memo).terms() {
            raw.push((q.clone(), k * c));
        }
    }
    normalize(raw)
}

fn antipode_of(p: &LabeledPoset, memo: &mut HashMap<String, IncidenceElement>) -> IncidenceElement {
    let key = p.to_text();
    if let Some(s) = memo.get(&key) {
        return s.clone();
    }
    let result = if p.rank() == 0 {
        IncidenceElement::one()
    } else {
        let mut raw = Vec::new();
        for x in (0..p.len()).filter(|&x| x != p.top()) {
            let lower = p.interval(p.bottom(), x).expect("0̂ ≤ x");
            let upper = p.interval(x, p.top()).expect("x ≤ 1̂");
            for (q, k) in antipode_of(&lower, memo).terms() {
                raw.push((q.product(&upper), -k));
            }
        }
        normalize(raw)
    };
    memo.insert(key, result.clone());
    result
}

/// `Φ(a) = Σ c · F_P`, in the monomial basis.
pub fn phi(a: &IncidenceElement) -> QSymExpr {
    let mut out = QSymExpr::zero(QBasis::Monomial);
    for (p, c) in &a.terms {
        out = out + fp(p, Method::ViaChains).scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{boolean_poset, chain_poset};

    fn x() -> IncidenceElement {
        IncidenceElement::from_poset(chain_poset(&[1]))
    }

    fn b2() -> IncidenceElement {
        IncidenceElement::from_poset(boolean_poset(2).unwrap())
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn normalize_merges_and_cancels() {
        let p = boolean_poset(2).unwrap();
        let q = p.relabel(|l| 10 * l);
        let a = normalize([(p.clone(), int(1)), (q, int(2))]);
        assert_eq!(a.terms().len(), 1);
        assert_eq!(a.terms()[0].1, int(3));
        let c = chain_poset(&[1]);
        assert!(normalize([(c.clone(), int(1)), (c, int(-1))]).is_zero());
        assert!(normalize(std::iter::empty()).is_zero());
    }

    #[test]
    fn normalize_is_idempotent_and_picks_least_text() {
        let p = chain_poset(&[7]);
        let q = chain_poset(&[3]);
        let a = normalize([(p, int(1)), (q.clone(), int(1))]);
        assert_eq!(a.terms()[0].0, q);
        let again = normalize(a.terms().iter().cloned());
        assert_eq!(again.terms(), a.terms());
    }

    #[test]
    fn products() {
        assert_eq!(hopf_product(&x(), &x()), b2());
        assert_eq!(hopf_product(&b2(), &IncidenceElement::one()), b2());
        let ab = hopf_product(&x(), &b2());
        let ba = hopf_product(&b2(), &x());
        assert_eq!(ab, ba);
        assert_eq!(x().pow(3), IncidenceElement::from_poset(boolean_poset(3).unwrap()));
    }

    #[test]
    fn coproducts() {
        let one = LabeledPoset::point();
        let xp = chain_poset(&[1]);
        let dx = hopf_coproduct(&x());
        assert_eq!(
            dx,
            IncidenceTensor::from_terms([([one.clone(), xp.clone()], int(1)), ([xp.clone(), one.clone()], int(1))])
        );
        let b = boolean_poset(2).unwrap();
        let db = hopf_coproduct(&b2());
        let expected = IncidenceTensor::from_terms([
            ([one.clone(), b.clone()], int(1)),
            ([xp.clone(), xp.clone()], int(2)),
            ([b, one.clone()], int(1)),
        ]);
        assert_eq!(db, expected);
        assert_eq!(
            hopf_coproduct(&IncidenceElement::one()),
            IncidenceTensor::from_terms([([one.clone(), one], int(1))])
        );
    }

    #[test]
    fn counits() {
        assert_eq!(counit(&IncidenceElement::one()), int(1));
        assert_eq!(counit(&x()), int(0));
        let a = IncidenceElement::one().scale(&int(3)) + b2().scale(&int(2));
        assert_eq!(counit(&a), int(3));
    }

    #[test]
    fn antipodes() {
        assert_eq!(antipode_incidence(&x()), -x());
        assert_eq!(antipode_incidence(&IncidenceElement::one()), IncidenceElement::one());
        let d = hopf_coproduct(&b2());
        assert!(d.antipode_left_collapse().is_zero());
        assert!(d.antipode_right_collapse().is_zero());
        // S(B_2) = 2x^2 - B_2 = B_2 for this class.
        assert_eq!(antipode_incidence(&b2()), b2());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&x()).to_string(), "+1 M[1]");
        assert_eq!(phi(&b2()).to_string(), "+1 M[2] +2 M[1,1]");
        assert!(phi(&IncidenceElement::zero()).is_zero());
        let d = hopf_coproduct(&b2());
        assert_eq!(d.phi(), phi(&b2()).coproduct());
    }

    #[test]
    fn coassociative_on_b2() {
        let d = hopf_coproduct(&b2());
        assert_eq!(d.coproduct_left(), d.coproduct_right());
    }

    #[test]
    fn rendering() {
        assert_eq!(IncidenceElement::zero().to_string(), "0");
        assert_eq!((-x()).to_string(), "-1 {elements 2; cover 0 1 1}");
        assert_eq!(
            hopf_coproduct(&x()).to_string(),
            "+1 {elements 1}⊗{elements 2; cover 0 1 1}\n+1 {elements 2; cover 0 1 1}⊗{elements 1}"
        );
    }
}
