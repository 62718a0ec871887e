//! Intervals of Young's lattice: F_[mu,nu] is the skew Schur function
//! s_{nu/mu}, whose Schur coefficients are Littlewood-Richardson numbers.
//!
//! cargo run --example young_skew_schur -- 1 3,2,1

use chainform::builders::young_interval;
use chainform::generating::{fp, Method};
use chainform::symfunc::{is_symmetric, schur_expansion, Partition};

fn main() {
    let mut args = std::env::args().skip(1);
    let mu: Partition = args.next().unwrap_or_else(|| "1".into()).parse().expect("partition");
    let nu: Partition = args.next().unwrap_or_else(|| "3,2,1".into()).parse().expect("partition");
    let p = young_interval(&mu, &nu).expect("mu inside nu");

    println!("[{mu}, {nu}]: {} elements, {} standard skew tableaux", p.len(), p.chain_count());
    let f = fp(&p, Method::ViaChains);
    println!("F = {f}");
    let m = is_symmetric(&f).expect("skew Schur functions are symmetric");
    println!("  = {m}");
    println!("Littlewood-Richardson coefficients c^{nu}_({mu}, λ):");
    for (lambda, c) in schur_expansion(&p).expect("symmetric") {
        println!("  λ = {lambda}: {c}");
    }
}
