//! Exact polynomial arithmetic: parsing, products, derivatives, the apolar
//! pairing and substitution.

use coinvariant::poly::{Polynomial, Target};

fn main() -> coinvariant::Result<()> {
    let f: Polynomial = "x1^2*x2-3/2*x1*x3+x3".parse()?;
    let g = Polynomial::parse("x1-x2", 3)?;
    println!("f        = {f}");
    println!("g        = {g}");
    println!("f*g      = {}", f.multiply(&g)?);
    println!("d f/d x1 = {}", f.partial(1)?);
    println!("f(x3=0)  = {}", f.specialize(3, Target::Zero)?);
    println!("f(x3=x1) = {}", f.specialize(3, Target::Var(1))?);

    // the Vandermonde determinant and the pairing f ⊙ g = f(∂) g
    let delta = Polynomial::vandermonde(3);
    println!("delta_3  = {delta}");
    let e1 = Polynomial::parse("x1+x2+x3", 3)?;
    println!("e1 ⊙ delta_3 = {}", e1.odot(&delta)?);
    println!("(x1-x2) ⊙ delta_3 = {}", g.odot(&delta)?);

    let swapped = delta.permute(&[2, 1, 3])?;
    println!("s_1 delta_3 = -delta_3: {}", swapped == -&delta);
    println!("delta_3 / (x1-x2) = {}", delta.div_exact(&g)?);
    Ok(())
}
