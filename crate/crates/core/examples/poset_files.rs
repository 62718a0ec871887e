//! Reading, checking and writing the plain-text poset format.

use chainform::generating::{fp, Method};
use chainform::poset::LabeledPoset;

const DIAMOND: &str = "\
# a square with one descending chain
elements 4
cover 0 1 1
cover 0 2 2
cover 1 3 2
cover 2 3 1
";

const BROKEN: &str = "\
elements 4
cover 0 1 1
cover 1 2 2
cover 2 3 3
cover 0 3 5
";

fn main() {
    let p = LabeledPoset::parse(DIAMOND).expect("valid file");
    println!("parsed: {p}");
    for chain in p.maximal_chains() {
        println!("  {:?} word {:?} descents {}", chain.elements, chain.word, chain.descent_set());
    }
    println!("F = {}", fp(&p, Method::ViaChains));

    match LabeledPoset::parse(BROKEN) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }

    let square = p.product(&p);
    println!("product has {} elements and rank {}", square.len(), square.rank());
    let text = square.to_text();
    let back = LabeledPoset::parse(&text).expect("roundtrip");
    println!("text roundtrip preserved the poset: {}", back == square);
    println!("{}", text.lines().take(4).collect::<Vec<_>>().join("\n"));
}
