//! The superspace ring, its total derivative, and the bigraded dimensions of
//! the superspace coinvariant ring.

use coinvariant::superspace::{
    artin_monomials, default_cap, sr_bigraded_hilbert, sr_basis_report, SuperElement,
};

fn main() -> coinvariant::Result<()> {
    let a: SuperElement = "x1^2*t2+x3*t1*t3".parse()?;
    let b = SuperElement::parse("x2*t1-t3", 3)?;
    println!("a = {a}\nb = {b}");
    println!("a b   = {}", a.multiply(&b)?);
    println!("d a   = {}", a.euler_d());
    println!("d d a = {}", a.euler_d().euler_d());
    println!("(1 2 3) a = {}", a.sn_act(&[2, 3, 1])?);

    let n = 3;
    let m: Vec<String> = artin_monomials(n).iter().map(|m| m.to_string()).collect();
    println!("M for n = {n}: {}", m.join(", "));
    println!("{}", sr_bigraded_hilbert(n, default_cap(n))?);
    for n in 1..=4 {
        println!("{:?}", sr_basis_report(n)?);
    }
    Ok(())
}
