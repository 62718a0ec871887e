//! Rank selection: the classical flag f-vector, its generating function E_P,
//! weighted chain counts and relative R-labelings.

use chainform::builders::{boolean_poset, young_interval};
use chainform::generating::{fp, Method};
use chainform::poset::{LabeledPoset, RankSet};
use chainform::rank_selection::{
    ehrenborg_ep, flag_fvector_classic, is_r_labeled, is_relative_r_labeled, relative_flag_count,
    weighted_flag_count,
};
use chainform::symfunc::Partition;

fn report(name: &str, p: &LabeledPoset) {
    let stats = p.flag_stats();
    let relative = is_relative_r_labeled(p);
    println!("{name}: R-labeled {}, relative R-labeled {relative}", is_r_labeled(p));
    println!("  {:<8} {:>4} {:>4} {:>4} {:>4}", "I", "phi", "f", "wt", "rel");
    for (i, phi) in flag_fvector_classic(p) {
        let rel = if relative {
            relative_flag_count(p, &i).map(|c| c.to_string()).unwrap_or_default()
        } else {
            "-".to_string()
        };
        println!(
            "  {:<8} {:>4} {:>4} {:>4} {:>4}",
            i.to_string(),
            phi,
            stats.f(&i),
            weighted_flag_count(p, &i),
            rel
        );
    }
    println!("  E_P = {}", ehrenborg_ep(p));
    println!("  F_P = {}", fp(p, Method::ViaM));
}

fn main() {
    report("B_3", &boolean_poset(3).unwrap());
    let shape = Partition::new(vec![2, 1]).unwrap();
    let young = young_interval(&Partition::empty(), &shape).unwrap();
    report("[∅,(2,1)]", &young);
    let full = RankSet::full(young.rank());
    println!("maximal chains of [∅,(2,1)] by weight: {}", weighted_flag_count(&young, &full));
}
