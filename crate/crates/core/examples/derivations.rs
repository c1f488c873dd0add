//! Derivation modules: Saito's criterion for the southwest and `A_J` bases,
//! and a pair that fails it.

use coinvariant::arrangement::{build_aj, Arrangement, LinearArrangement};
use coinvariant::derivation::{aj_basis, saito_check, southwest_basis, Derivation};
use coinvariant::poly::Polynomial;

fn main() -> coinvariant::Result<()> {
    let a: Arrangement = "n=3; H:0-1,0-2,1-2,0-3,1-3".parse()?;
    let basis = southwest_basis(&a)?;
    for (k, b) in basis.iter().enumerate() {
        println!("rho_{} = {b}", k + 1);
    }
    let r = saito_check(&basis, &a)?;
    let quotient = r.quotient.as_ref().map_or("not a constant".to_string(), |q| q.to_string());
    println!("det = {}, det/Q = {quotient}, passed {}", r.determinant, r.passed);

    let j = [2];
    let aj = build_aj(&j, 3);
    let r = saito_check(&aj_basis(&j, 3), &aj)?;
    let degrees: Vec<String> = r.degrees.iter().map(|d| d.map_or("-".into(), |d| d.to_string())).collect();
    println!("A_{{2}} = {aj}: degrees ({}), passed {}", degrees.join(","), r.passed);

    // x1 + x2 = 0: the Euler-type field is tangent, x2 d1 - x1 d2 is not
    let x = |s: &str| Polynomial::parse(s, 2);
    let plane = LinearArrangement::new(2, vec![x("x1+x2")?])?;
    let good = vec![Derivation::new(vec![x("1")?, x("-1")?])?, Derivation::new(vec![x("x2")?, x("x1")?])?];
    let bad = vec![Derivation::new(vec![x("1")?, x("-1")?])?, Derivation::new(vec![x("x2")?, x("-x1")?])?];
    println!("{{d1-d2, x2 d1 + x1 d2}}: {}", saito_check(&good, &plane)?.passed);
    let r = saito_check(&bad, &plane)?;
    println!("{{d1-d2, x2 d1 - x1 d2}}: membership {:?}, passed {}", r.membership, r.passed);
    Ok(())
}
