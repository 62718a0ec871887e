//! Descent statistics of the Boolean lattices B_n and their generating
//! functions, which are powers of h_1 = M_(1).
//!
//! cargo run --example boolean_lattice -- 4

use chainform::builders::boolean_poset;
use chainform::generating::{fp, fp_in_basis, Method};
use chainform::poset::RankSet;
use chainform::qsym::QBasis;
use chainform::rank_selection::is_r_labeled;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let b = boolean_poset(n).expect("rank within the builder bound");
    let stats = b.flag_stats();

    println!("B_{n}: {} elements, {} maximal chains", b.len(), stats.total_chains());
    println!("{:<12} {:>6} {:>6}", "I", "d_I", "f_I");
    for i in RankSet::all(n) {
        println!("{:<12} {:>6} {:>6}", i.to_string(), stats.d(&i), stats.f(&i));
    }

    let f = fp(&b, Method::ViaChains);
    println!("F = {f}");
    println!("  = {}", fp_in_basis(&b, Method::ViaChains, QBasis::Fundamental));
    let x = fp(&boolean_poset(1).unwrap(), Method::ViaChains);
    println!("F == h_1^{n}: {}", f == x.pow(n));
    println!("R-labeled: {}", is_r_labeled(&b));
}
