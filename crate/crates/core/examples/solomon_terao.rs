//! Solomon-Terao algebras: the trichotomy, deletion-restriction, and monomial bases.

use coinvariant::arrangement::{Arrangement, LinearArrangement};
use coinvariant::derivation::{CMap, Derivation};
use coinvariant::poly::Polynomial;
use coinvariant::solomon_terao::{
    classify, classify_with_basis, exact_sequence_check, ss_j_report, sw_monomial_basis_report,
};

fn main() -> coinvariant::Result<()> {
    let empty = classify(&Arrangement::empty(3), &CMap::iota(3))?;
    println!("empty arrangement: {}", empty.tag);

    let x = |s: &str| Polynomial::parse(s, 2);
    let plane = LinearArrangement::new(2, vec![x("x1+x2")?])?;
    let basis = vec![Derivation::new(vec![x("1")?, x("-1")?])?, Derivation::new(vec![x("x2")?, x("x1")?])?];
    let line = classify_with_basis(&plane, &CMap::iota(2), basis)?;
    println!("x1 + x2 = 0: {} (Hilb {})", line.tag, line.hilbert);

    for n in 1..=4 {
        let st = classify(&Arrangement::augmented_braid(n), &CMap::iota(n))?;
        println!("full arrangement, n = {n}: {}, Hilb {}", st.tag, st.hilbert);
    }

    let a: Arrangement = "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5".parse()?;
    let st = classify(&a, &CMap::iota(5))?;
    println!("running example: {}, Hilb {}, consistent {}", st.tag, st.hilbert, st.consistent());
    println!("box monomial basis: {:?}", sw_monomial_basis_report(&a)?);
    let r = exact_sequence_check(&a)?;
    println!("deletion {} / restriction {}: additive {}, ideal identity {}", r.deletion, r.restriction, r.additive, r.restriction_ideal);

    println!("J = {{2,4}}: {:?}", ss_j_report(&[2, 4], 5)?);
    Ok(())
}
