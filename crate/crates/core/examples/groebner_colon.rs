//! Reduced Groebner bases, Hilbert series and colon ideals `(e_1, ..., e_n) : f_J`.

use coinvariant::arrangement::{f_poly, staircase};
use coinvariant::derivation::g_generators;
use coinvariant::groebner::{ideal_equal, Ideal, MonomialOrder};
use coinvariant::symmetric::coinvariant_ideal;

fn main() -> coinvariant::Result<()> {
    let n = 3;
    let coinv = coinvariant_ideal(n);
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let gb = coinv.groebner_basis(order)?;
        let polys: Vec<String> = gb.polynomials().iter().map(|p| p.to_string()).collect();
        println!("{} basis: {}", order.name(), polys.join(", "));
    }
    println!("Hilb(S/(e1,e2,e3)) = {}", coinv.hilbert_series(0)?);

    let n = 4;
    let coinv = coinvariant_ideal(n);
    for j in [vec![], vec![2], vec![3, 4], vec![2, 4], vec![1, 3]] {
        let f = f_poly(&j, n);
        let colon = coinv.colon(&f)?;
        let again = coinv.colon_degreewise(&f)?;
        let hilb = colon.hilbert_series(0)?;
        print!("J = {j:?}: st = {:?}, Hilb = {hilb}, routes agree: {}", staircase(&j, n), ideal_equal(&colon, &again)?);
        if !j.contains(&1) {
            let g = Ideal::new(n, g_generators(&j, n))?;
            print!(", generated by g_J: {}", ideal_equal(&g, &colon)?);
        }
        println!();
    }
    Ok(())
}
