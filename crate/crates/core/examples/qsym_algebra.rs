//! Arithmetic in the quasi-symmetric functions: quasi-shuffle products, the
//! deconcatenation coproduct, the antipode and the two standard bases.

use chainform::qsym::{Composition, QBasis, QSymExpr};

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("positive parts")
}

fn main() {
    let m1 = QSymExpr::monomial(comp(&[1]));
    let m21 = QSymExpr::monomial(comp(&[2, 1]));

    println!("M[1] * M[1]   = {}", m1.mul(&m1));
    println!("M[1] * M[2,1] = {}", m1.mul(&m21));
    println!("Δ M[2,1]      = {}", m21.coproduct());
    println!("S M[2,1]      = {}", m21.antipode());

    let f: QSymExpr = "F[1|3]".parse().expect("valid expression");
    println!("F[1|3] in M   = {}", f.in_basis(QBasis::Monomial));
    println!("M[2,1] in F   = {}", m21.in_basis(QBasis::Fundamental));

    // Restricting to three variables gives an honest polynomial.
    println!("M[2,1](x1,x2,x3) = {}", m21.expand_polynomial(3));

    let sum: QSymExpr = "M[2,1] + M[1,2] + M[3]".parse().expect("valid expression");
    println!("M[2,1] + M[1,2] + M[3] = {} (= M[1] * M[2])", sum);
    println!("check: {}", sum == m1.mul(&QSymExpr::monomial(comp(&[2]))));
}
