//! The chain-descent generating function `F_P`, computed three ways:
//!
//! * [`Method::ViaM`]: `Σ_α f_{I(α)}(P) M_α`,
//! * [`Method::ViaDF`]: `Σ_I d_I(P) F_{I,n}`,
//! * [`Method::ViaChains`]: `Σ_ρ F_{D(ρ),n}` over maximal chains `ρ`.
//!
//! The first two read the flag statistics produced by dynamic programming;
//! the last walks every chain and is independent of it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::poset::{descent_bits, LabeledPoset, RankSet};
use crate::qsym::{Composition, QBasis, QSymExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    ViaM,
    ViaDF,
    #[default]
    ViaChains,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::ViaM, Method::ViaDF, Method::ViaChains];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ViaM => "via_M",
            Method::ViaDF => "via_dF",
            Method::ViaChains => "via_chains",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "via_M" => Ok(Method::ViaM),
            "via_dF" => Ok(Method::ViaDF),
            "via_chains" => Ok(Method::ViaChains),
            _ => Err(format!("unknown method {s:?} (expected via_M, via_dF or via_chains)")),
        }
    }
}

/// `F_P` in the monomial basis.
pub fn fp(p: &LabeledPoset, method: Method) -> QSymExpr {
    fp_in_basis(p, method, QBasis::Monomial)
}

pub fn fp_in_basis(p: &LabeledPoset, method: Method, basis: QBasis) -> QSymExpr {
    let native = match method {
        Method::ViaM => fp_via_m(p),
        Method::ViaDF => fp_via_df(p),
        Method::ViaChains => fp_via_chains(p),
    };
    native.in_basis(basis)
}

/// `Σ_{α ⊨ rk P} f_{I(α)}(P) M_α`.
pub fn fp_via_m(p: &LabeledPoset) -> QSymExpr {
    let stats = p.flag_stats();
    let n = p.rank();
    QSymExpr::from_terms(
        QBasis::Monomial,
        RankSet::all(n).map(|j| (Composition::from_rank_set(&j), BigInt::from(stats.f(&j)))),
    )
}

/// `Σ_I d_I(P) F_{I,n}`.
pub fn fp_via_df(p: &LabeledPoset) -> QSymExpr {
    let stats = p.flag_stats();
    QSymExpr::from_terms(
        QBasis::Fundamental,
        stats
            .nonzero_d()
            .map(|(i, c)| (Composition::from_rank_set(&i), BigInt::from(c))),
    )
}

/// `Σ_ρ F_{D(ρ),n}`, accumulated while streaming chains. Result is in the
/// fundamental basis.
pub fn fp_via_chains(p: &LabeledPoset) -> QSymExpr {
    let n = p.rank();
    QSymExpr::from_terms(
        QBasis::Fundamental,
        descent_counts_by_enumeration(p).into_iter().map(|(bits, c)| {
            let set = RankSet::from_bits(n, bits).expect("descent bits lie in range");
            (Composition::from_rank_set(&set), BigInt::from(c))
        }),
    )
}

/// Chain counts per descent bitmask, by walking every maximal chain. Chains
/// are split by their first two covers and walked in parallel on the current
/// rayon pool; the merged counts do not depend on the split.
pub fn descent_counts_by_enumeration(p: &LabeledPoset) -> BTreeMap<u64, u64> {
    let mut prefixes: Vec<(Vec<usize>, Vec<i64>)> = vec![(vec![p.bottom()], Vec::new())];
    for _ in 0..2 {
        let mut next = Vec::new();
        for (elems, word) in prefixes {
            let last = *elems.last().expect("non-empty");
            if last == p.top() {
                next.push((elems, word));
                continue;
            }
            for c in p.upper_covers(last) {
                let mut e = elems.clone();
                let mut w = word.clone();
                e.push(c.upper);
                w.push(c.label);
                next.push((e, w));
            }
        }
        prefixes = next;
    }
    prefixes
        .par_iter()
        .map(|(elems, word)| {
            let mut local = BTreeMap::new();
            p.for_each_chain_from(elems, word, |_, w| {
                *local.entry(descent_bits(w)).or_insert(0u64) += 1;
            });
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
}

/// Whether `F_{P×Q} = F_P · F_Q`.
pub fn fp_product_check(p: &LabeledPoset, q: &LabeledPoset) -> bool {
    let lhs = fp(&p.product(q), Method::ViaChains);
    let rhs = fp(p, Method::ViaChains).mul(&fp(q, Method::ViaChains));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Cover;

    fn chain(word: &[i64]) -> LabeledPoset {
        LabeledPoset::new(
            word.len() + 1,
            word.iter().enumerate().map(|(k, &l)| Cover::new(k, k + 1, l)),
        )
        .unwrap()
    }

    fn b2() -> LabeledPoset {
        chain(&[1]).product(&chain(&[2]))
    }

    #[test]
    fn boolean_two() {
        for m in Method::ALL {
            assert_eq!(fp(&b2(), m).to_string(), "+1 M[2] +2 M[1,1]", "{m}");
        }
    }

    #[test]
    fn primitive() {
        for m in Method::ALL {
            assert_eq!(fp(&chain(&[5]), m).to_string(), "+1 M[1]");
        }
    }

    #[test]
    fn single_chain_in_f_basis() {
        let f = fp_in_basis(&chain(&[1, 3, 2]), Method::ViaChains, QBasis::Fundamental);
        assert_eq!(f.to_string(), "+1 F[2|3]");
    }

    #[test]
    fn point_is_unit() {
        for m in Method::ALL {
            assert_eq!(fp(&LabeledPoset::point(), m), QSymExpr::one(QBasis::Monomial));
        }
    }

    #[test]
    fn product_checks() {
        let x = chain(&[1]);
        assert!(fp_product_check(&x, &x));
        assert_eq!(fp(&x.product(&x), Method::ViaM), fp(&x, Method::ViaM).pow(2));
        assert!(fp_product_check(&b2(), &x));
        assert!(fp_product_check(&chain(&[1, 2]), &LabeledPoset::point()));
    }

    #[test]
    fn methods_parse() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("via_x".parse::<Method>().is_err());
    }
}
