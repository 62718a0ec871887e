//! The incidence Hopf algebra of edge-labeled posets and its morphism Φ to
//! quasi-symmetric functions.

use chainform::builders::{boolean_poset, chain_poset};
use chainform::incidence::{antipode_incidence, counit, hopf_coproduct, hopf_product, phi, IncidenceElement};

fn main() {
    let x = IncidenceElement::from_poset(chain_poset(&[1]));
    let b2 = IncidenceElement::from_poset(boolean_poset(2).unwrap());

    println!("x · x == [B_2]: {}", hopf_product(&x, &x) == b2);
    println!("Δ[B_2] =\n{}", hopf_coproduct(&b2));
    println!("S(x) = {}", antipode_incidence(&x));
    println!("S([B_2]) = {}", antipode_incidence(&b2));
    println!("ε([B_2]) = {}", counit(&b2));

    let delta = hopf_coproduct(&b2);
    println!("Φ([B_2]) = {}", phi(&b2));
    println!("(Φ⊗Φ)Δ[B_2] = {}", delta.phi());
    println!("ΔΦ([B_2])    = {}", phi(&b2).coproduct());
    println!("coassociative: {}", delta.coproduct_left() == delta.coproduct_right());
    println!("S * id = ε: {}", delta.antipode_left_collapse().is_zero());
}
