//! Weak-order intervals [1, w]: maximal chains are reduced words of w, and
//! F_[1,w] is the Stanley symmetric function of w.
//!
//! cargo run --example stanley_weak_order -- 4231

use chainform::builders::{weak_order_interval, Permutation};
use chainform::generating::{fp, Method};
use chainform::symfunc::schur_expansion;

fn main() {
    let w: Permutation = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "4231".into())
        .parse()
        .expect("a permutation such as 4231");
    let p = weak_order_interval(&w).expect("length within the builder bound");

    println!("w = {w}, length {}", w.length());
    for chain in p.maximal_chains() {
        let word: Vec<String> = chain.word.iter().map(|a| a.to_string()).collect();
        println!("  reduced word {}  descents {}", word.join(""), chain.descent_set());
    }
    println!("F_w = {}", fp(&p, Method::ViaChains));
    match schur_expansion(&p) {
        Ok(schur) => {
            let terms: Vec<String> = schur.iter().map(|(l, c)| format!("{c}·s{l}")).collect();
            println!("    = {}", terms.join(" + "));
        }
        Err(e) => println!("    {e}"),
    }
}
