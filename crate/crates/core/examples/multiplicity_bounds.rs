//! Compares multiplicities with the bound from the maximal shifts.

use boij_soderberg::koszul::{betti_table, MonomialIdeal};
use boij_soderberg::{hilbert_numerator, multiplicity_bounds_check, BettiTable};

fn main() -> Result<(), boij_soderberg::Error> {
    let examples = [
        ("x^2,x*y,x*z^2", "x,y,z"),
        ("x^2,y^2,z^2", "x,y,z"),
        ("x*y,y*z,z*w", "x,y,z,w"),
        ("x^3,x^2*y,y^4", "x,y"),
    ];
    for (gens, vars) in examples {
        let beta = betti_table(&MonomialIdeal::parse(gens, vars)?)?;
        println!("I = ({gens})");
        println!("H(t) numerator: {}", hilbert_numerator(&beta));
        println!("{}", multiplicity_bounds_check(&beta, None)?);
    }

    let pure = BettiTable::from_ints(3, &[(0, 0, 1), (1, 2, 5), (2, 3, 5), (3, 5, 1)])?;
    println!("pure table (1,5,5,1):\n{}", multiplicity_bounds_check(&pure, None)?);
    Ok(())
}
