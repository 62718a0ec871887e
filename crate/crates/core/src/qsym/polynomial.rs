//! Polynomials in finitely many variables, used as an independent model of
//! quasi-symmetric functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::expr;
use crate::qsym::Composition;

/// A polynomial in `x_1, ..., x_k` with integer coefficients, keyed by
/// exponent vectors of length `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        expr::add_into(&mut self.terms, exps, c);
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut sums: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *sums.entry(e).or_default() += ca * cb;
            }
        }
        Polynomial {
            nvars: self.nvars,
            terms: sums.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `M_α(x_1, ..., x_k)`: the sum over `i_1 < ... < i_ℓ ≤ k` of
    /// `x_{i_1}^{α_1} ... x_{i_ℓ}^{α_ℓ}`.
    pub fn monomial_qsym(parts: &[usize], k: usize) -> Polynomial {
        let mut out = Polynomial::zero(k);
        let mut exps = vec![0u32; k];
        fn go(parts: &[usize], start: usize, exps: &mut Vec<u32>, out: &mut Polynomial) {
            let Some((&first, rest)) = parts.split_first() else {
                out.add_term(exps.clone(), BigInt::from(1));
                return;
            };
            for i in start..exps.len() {
                exps[i] = first as u32;
                go(rest, i + 1, exps, out);
                exps[i] = 0;
            }
        }
        go(parts, 0, &mut exps, &mut out);
        out
    }

    /// `F_{I(α),n}(x_1, ..., x_k)`: the sum over `j_1 ≤ ... ≤ j_n ≤ k`, strict
    /// at every position of `I(α)`, of `x_{j_1} ... x_{j_n}`.
    pub fn fundamental_qsym(alpha: &Composition, k: usize) -> Polynomial {
        let n = alpha.weight();
        let sums = alpha.partial_sums();
        let strict: Vec<bool> = (1..=n).map(|j| j < n && sums.contains(&j)).collect();
        let mut out = Polynomial::zero(k);
        let mut exps = vec![0u32; k];
        fn go(pos: usize, min: usize, strict: &[bool], exps: &mut Vec<u32>, out: &mut Polynomial) {
            if pos == strict.len() {
                out.add_term(exps.clone(), BigInt::from(1));
                return;
            }
            for j in min..exps.len() {
                exps[j] += 1;
                let next = if strict[pos] { j + 1 } else { j };
                go(pos + 1, next, strict, exps, out);
                exps[j] -= 1;
            }
        }
        go(0, 0, &strict, &mut exps, &mut out);
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = expr::render(self.terms.iter().rev().map(|(e, c)| {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            (c, if mono.is_empty() { "1".to_string() } else { mono })
        }));
        f.write_str(&s)
    }
}
