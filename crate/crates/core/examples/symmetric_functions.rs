//! Symmetric polynomials in variable subsets and the Steinberg membership
//! test for the coinvariant ideal.

use coinvariant::groebner::Ideal;
use coinvariant::poly::Polynomial;
use coinvariant::symmetric::{
    coinvariant_ideal, complete, eh_duality_check, elementary, schur, steinberg_member, Partition,
};

fn main() -> coinvariant::Result<()> {
    let n = 4;
    let a = [1, 3];
    println!("e_2(x1,x3)  = {}", elementary(2, &a, n));
    println!("h_2(x1,x3)  = {}", complete(2, &a, n));
    let lam = Partition::new(&[2, 1])?;
    println!("s_{lam}(x1,x3) = {}", schur(&lam, &a, n));

    // h_d(A) ≡ (-1)^d e_d(B) modulo the coinvariant ideal when [n] = A ⊔ B
    for d in 0..=4 {
        println!("d = {d}: h_d(1,3) ≡ ±e_d(2,4): {}", eh_duality_check(d, &a, &[2, 4], n)?);
    }

    // Steinberg and Groebner membership agree
    let ideal: Ideal = coinvariant_ideal(n);
    for s in ["x1^4", "x1^3", "x1*x2*x3*x4", "x1^2*x2-x2^2*x1", "x1+x2+x3+x4"] {
        let f = Polynomial::parse(s, n)?;
        println!("{s:>16}: steinberg {} groebner {}", steinberg_member(&f), ideal.contains(&f)?);
    }
    // s_λ(A) lies in the ideal once λ_1 > n - |A|
    let big = Partition::new(&[3])?;
    println!("s_(3)(x1,x3) in ideal: {}", steinberg_member(&schur(&big, &a, n)));
    Ok(())
}
