//! Builds the functional that certifies the facet opposite b in the chain
//! (0,2,3,4) > (0,1,3,4) > (0,1,2,4), and prints its coefficients.

use boij_soderberg::cohomology::coefficient_grid;
use boij_soderberg::rational::format;
use boij_soderberg::{facet_functional, normalize_chain, pure_diagram, BettiTable, ChainTriple};

fn main() -> Result<(), boij_soderberg::Error> {
    let chain = ChainTriple::new("0,2,3,4".parse()?, "0,1,3,4".parse()?, "0,1,2,4".parse()?)?;
    let f = facet_functional(&chain, 4)?;
    let (table, trunc) = f.supernatural().expect("two-position chain");
    println!(
        "roots {:?}, rank {}, tau {}, kappa {:?}",
        table.roots(),
        table.rank(),
        trunc.tau,
        trunc.kappa
    );
    for d in [&chain.a, &chain.b, &chain.c] {
        println!("  on {d}: {}", format(&f.evaluate(pure_diagram(d, 4)?.canonical())));
    }
    let module = BettiTable::from_ints(4, &[(0, 0, 2), (1, 1, 4), (2, 3, 4), (3, 4, 2)])?;
    println!("  on the module table (2,4,4,2): {}", format(&f.evaluate(&module)));

    println!("\ncoefficients, column i and row k - i:");
    for (row, values) in (-3..=2).zip(coefficient_grid(table, Some(trunc), 4, -3..=2)) {
        let cells: Vec<String> = values.iter().map(|v| format!("{:>4}", format(v))).collect();
        println!("{row:>3}: {}", cells.join(""));
    }

    // chains with infinite entries are first moved to a finite one
    let open = ChainTriple::new("0".parse()?, "0,1".parse()?, "0,1,3".parse()?)?;
    println!("\n{open} normalizes to {}", normalize_chain(&open)?);
    Ok(())
}
