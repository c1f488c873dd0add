//! Subarrangements of the augmented braid arrangement: southwest
//! enumeration, h-sequences, intersection lattices and point counts.

use coinvariant::arrangement::{build_aj, staircase, Arrangement, CharPoly, HyperplaneSet};
use coinvariant::verify::enumerate_southwest;

fn main() -> coinvariant::Result<()> {
    let a: Arrangement = "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5".parse()?;
    println!("{a}\n{}", a.diagram());
    println!("southwest {} essential {} chordal {}", a.is_southwest(), a.is_essential(), a.is_chordal());
    println!("h = {:?}", a.h_sequence());
    let lattice = a.intersection_lattice()?;
    println!("{} flats, chi = {}", lattice.len(), lattice.characteristic_polynomial());
    let p = a.check_prime();
    println!("points of F_{p}^5 off A: {}", a.count_points_mod(p));
    println!("restriction to x2 = 0: {}", a.restrict_coord(2)?);

    for n in 1..=5 {
        let all = enumerate_southwest(n, false)?;
        let essential = all.iter().filter(|a| a.is_essential()).count();
        println!("n = {n}: {} southwest, {essential} essential", all.len());
    }

    let j = [2, 4];
    let aj = build_aj(&j, 5);
    let roots: Vec<i64> = staircase(&j, 5).iter().map(|&s| s as i64).collect();
    println!("A_{{2,4}} = {aj}");
    println!("chi = {} vs {}", aj.characteristic_polynomial()?, CharPoly::from_roots(&roots));
    Ok(())
}
