//! Rational functions in k and the graded scalars built on top of them.

use hilbfock::exact::{GradedScalar, Poly, Rational, RationalFunction};

fn main() -> Result<(), hilbfock::Error> {
    let k = RationalFunction::k();
    let one = RationalFunction::one();

    // (k^2 - 1) / (k - 1) reduces to k + 1
    let f = RationalFunction::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1]))?;
    println!("(k^2-1)/(k-1) = {f}");

    let g = one.div(&k.add(&one))?;
    println!("1/(1+k) + k/(1+k) = {}", g.add(&k.mul(&g)));
    println!("f at k = 3/2: {}", f.eval(&Rational::new(3.into(), 2.into()))?);

    let e1 = GradedScalar::eps1();
    let e2 = GradedScalar::eps2();
    let kx = GradedScalar::kx();
    println!("eps1 = {e1}, eps2 = {e2}, K_X = {kx}");
    println!("eps1 * eps2 = {}", e1.mul(&e2));
    println!("(eps1 + eps2) / eps1 = {}", e1.add(&e2).div(&e1)?);

    match GradedScalar::one().div(&kx.add(&GradedScalar::one())) {
        Ok(q) => println!("unexpected quotient {q}"),
        Err(e) => println!("1 / (K_X + 1): {e}"),
    }
    Ok(())
}
