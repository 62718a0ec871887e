//! Executable identities relating flag statistics, `F_P` and the incidence
//! Hopf algebra. Each check returns `true` when the identity holds exactly.

use num_bigint::BigInt;

use crate::generating::{descent_counts_by_enumeration, fp, fp_product_check, Method};
use crate::incidence::{antipode_incidence, hopf_coproduct, phi, IncidenceElement};
use crate::poset::{FlagStats, LabeledPoset, RankSet};
use crate::qsym::Composition;
use crate::rank_selection::{
    ehrenborg_ep, flag_fvector_classic, is_r_labeled, is_relative_r_labeled, relative_flag_count,
    weighted_flag_count,
};
use crate::symfunc::{has_symmetric_flag_counts, is_symmetric, schur_expansion, schur_to_m, SymBasis, SymExpr};

/// `via_M`, `via_dF` and `via_chains` give the same monomial coefficients.
pub fn three_methods_agree(p: &LabeledPoset) -> bool {
    let reference = fp(p, Method::ViaM);
    Method::ALL.iter().all(|&m| fp(p, m) == reference)
}

/// `d_I` recovered from `f` by inclusion-exclusion matches the stored `d_I`,
/// and `f_J` is the sum of `d_I` over `I ⊆ J`.
pub fn inclusion_exclusion_roundtrip(p: &LabeledPoset) -> bool {
    let stats = p.flag_stats();
    let n = p.rank();
    RankSet::all(n).all(|i| {
        let f_sum: u64 = RankSet::all(n).filter(|s| s.is_subset(&i)).map(|s| stats.d(&s)).sum();
        stats.d_by_inclusion_exclusion(&i) == i128::from(stats.d(&i)) && f_sum == stats.f(&i)
    })
}

/// Weak compositions `β ≤ α` (componentwise) of weight `weight`.
fn bounded_splits(alpha: &[usize], weight: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(alpha: &[usize], left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == alpha.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for b in 0..=alpha[cur.len()].min(left) {
            cur.push(b);
            go(alpha, left - b, cur, out);
            cur.pop();
        }
    }
    go(alpha, weight, &mut Vec::new(), &mut out);
    out
}

fn f_of(stats: &FlagStats, weak: &[usize]) -> u64 {
    let alpha = Composition::from_weak(weak);
    stats.f(&alpha.to_rank_set().expect("composition of the rank"))
}

/// `f_{I(α)}(P × Q) = Σ_{β + γ = α} f_{I(β)}(P) f_{I(γ)}(Q)` over weak
/// compositions `β` of `rk P` and `γ` of `rk Q`, with the left side counted by
/// walking the chains of the product.
pub fn product_convolution(p: &LabeledPoset, q: &LabeledPoset) -> bool {
    let product = p.product(q);
    let n = product.rank();
    let lhs = FlagStats::from_descent_counts(n, descent_counts_by_enumeration(&product));
    let (sp, sq) = (p.flag_stats(), q.flag_stats());
    Composition::all(n).into_iter().all(|alpha| {
        let expected: u64 = bounded_splits(alpha.parts(), p.rank())
            .into_iter()
            .map(|beta| {
                let gamma: Vec<usize> = alpha.parts().iter().zip(&beta).map(|(a, b)| a - b).collect();
                f_of(&sp, &beta) * f_of(&sq, &gamma)
            })
            .sum();
        lhs.f(&alpha.to_rank_set().expect("composition of the rank")) == expected
    })
}

/// `f_α(P) = Σ_{rk x = α_1 + ... + α_j} f_{α≤j}[0̂, x] · f_{α>j}[x, 1̂]` for
/// every composition `α` of the rank and every `1 ≤ j ≤ ℓ(α)`.
pub fn splitting_identity(p: &LabeledPoset) -> bool {
    let stats = p.flag_stats();
    let lower: Vec<FlagStats> = (0..p.len())
        .map(|x| p.interval(p.bottom(), x).expect("0̂ ≤ x").flag_stats())
        .collect();
    let upper: Vec<FlagStats> = (0..p.len())
        .map(|x| p.interval(x, p.top()).expect("x ≤ 1̂").flag_stats())
        .collect();
    Composition::all(p.rank()).into_iter().all(|alpha| {
        let whole = f_of(&stats, alpha.parts());
        (1..=alpha.len()).all(|j| {
            let head = alpha.prefix(j);
            let tail = alpha.suffix(j);
            let total: u64 = p
                .elements_of_rank(head.weight())
                .map(|x| f_of(&lower[x], head.parts()) * f_of(&upper[x], tail.parts()))
                .sum();
            total == whole
        })
    })
}

/// `Δ(F_P) = (Φ ⊗ Φ)(Δ P)`.
pub fn coproduct_morphism(p: &LabeledPoset) -> bool {
    let a = IncidenceElement::from_poset(p.clone());
    hopf_coproduct(&a).phi() == phi(&a).coproduct()
}

/// `F_{P×Q} = F_P · F_Q`.
pub fn product_morphism(p: &LabeledPoset, q: &LabeledPoset) -> bool {
    fp_product_check(p, q)
}

/// `Φ(S(P)) = S(Φ(P))`.
pub fn antipode_morphism(p: &LabeledPoset) -> bool {
    let a = IncidenceElement::from_poset(p.clone());
    phi(&antipode_incidence(&a)) == phi(&a).antipode()
}

/// `(Δ ⊗ id) Δ P = (id ⊗ Δ) Δ P` in the incidence Hopf algebra.
pub fn incidence_coassociative(p: &LabeledPoset) -> bool {
    let d = hopf_coproduct(&IncidenceElement::from_poset(p.clone()));
    d.coproduct_left() == d.coproduct_right()
}

/// `μ(S ⊗ id)Δ P = μ(id ⊗ S)Δ P = ε(P) · 1`.
pub fn incidence_antipode_convolution(p: &LabeledPoset) -> bool {
    let d = hopf_coproduct(&IncidenceElement::from_poset(p.clone()));
    let unit = if p.rank() == 0 {
        IncidenceElement::one()
    } else {
        IncidenceElement::zero()
    };
    d.antipode_left_collapse() == unit && d.antipode_right_collapse() == unit
}

/// `E_P = F_P` and `φ_I = f_I` when R-labeled; `weighted_flag_count = f_I`
/// always; `φ_I(P/Γ) = f_I` when relatively R-labeled.
pub fn rank_selection_identities(p: &LabeledPoset) -> bool {
    let stats = p.flag_stats();
    let n = p.rank();
    if is_r_labeled(p) {
        let phi = flag_fvector_classic(p);
        if ehrenborg_ep(p) != fp(p, Method::ViaM) || phi.iter().any(|(i, &c)| stats.f(i) != c) {
            return false;
        }
    }
    if !RankSet::all(n).all(|i| weighted_flag_count(p, &i) == stats.f(&i)) {
        return false;
    }
    if is_relative_r_labeled(p) {
        return RankSet::all(n).all(|i| relative_flag_count(p, &i) == Ok(stats.f(&i)));
    }
    true
}

/// Symmetry of `F_P` agrees with the direct check on `f`, and when symmetric
/// the Schur expansion maps back to the monomial expansion.
pub fn symmetry_identities(p: &LabeledPoset) -> bool {
    let f = fp(p, Method::ViaChains);
    let monomial = is_symmetric(&f);
    if monomial.is_some() != has_symmetric_flag_counts(&p.flag_stats()) {
        return false;
    }
    match (monomial, schur_expansion(p)) {
        (Some(m), Ok(schur)) => schur_to_m(&SymExpr::from_terms(SymBasis::Schur, schur)) == m,
        (None, Err(_)) => true,
        _ => false,
    }
}

/// `F_P` is unchanged by an order-preserving relabeling.
pub fn monotone_relabeling_invariant(p: &LabeledPoset) -> bool {
    fp(p, Method::ViaChains) == fp(&p.relabel(|l| 3 * l + 7), Method::ViaChains)
}

/// The single-poset checks, by name.
pub fn poset_suite(p: &LabeledPoset) -> Vec<(&'static str, bool)> {
    vec![
        ("three-methods", three_methods_agree(p)),
        ("inclusion-exclusion", inclusion_exclusion_roundtrip(p)),
        ("splitting", splitting_identity(p)),
        ("coproduct-morphism", coproduct_morphism(p)),
        ("antipode-morphism", antipode_morphism(p)),
        ("coassociativity", incidence_coassociative(p)),
        ("antipode-convolution", incidence_antipode_convolution(p)),
        ("counit", phi(&IncidenceElement::from_poset(p.clone())).counit() == BigInt::from(u8::from(p.rank() == 0))),
        ("rank-selection", rank_selection_identities(p)),
        ("symmetry", symmetry_identities(p)),
        ("monotone-relabeling", monotone_relabeling_invariant(p)),
    ]
}

/// The two-poset checks, by name.
pub fn pair_suite(p: &LabeledPoset, q: &LabeledPoset) -> Vec<(&'static str, bool)> {
    vec![
        ("product-convolution", product_convolution(p, q)),
        ("product-morphism", product_morphism(p, q)),
        (
            "product-commutes",
            crate::poset::label_equivalent(&p.product(q), &q.product(p)),
        ),
    ]
}
