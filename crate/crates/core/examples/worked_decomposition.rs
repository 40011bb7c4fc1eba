//! Decomposes the Betti table of S/(x^2, xy, xz^2) into pure diagrams.
//!
//! Run with `cargo run --example worked_decomposition`.

use boij_soderberg::koszul::{betti_table, MonomialIdeal};
use boij_soderberg::{decompose, greedy_step};

fn main() -> Result<(), boij_soderberg::Error> {
    let ideal = MonomialIdeal::parse("x^2,x*y,x*z^2", "x,y,z")?;
    let mut table = betti_table(&ideal)?;
    println!("Betti table of S/I, I = {ideal}:\n{table}");

    // walk the greedy algorithm by hand
    let mut step = 1;
    while !table.is_empty() {
        let s = greedy_step(&table)?;
        println!(
            "step {step}: subtract {} x ({}) on {}",
            boij_soderberg::rational::format(&s.coefficient),
            s.diagram.canonical_values().iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            s.diagram.degrees()
        );
        table = s.remainder;
        step += 1;
    }

    let d = decompose(&betti_table(&ideal)?)?;
    println!("\n{}", d.summary(false));
    println!("{}", d.summary(true));
    Ok(())
}
