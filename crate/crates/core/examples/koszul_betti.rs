//! Betti tables of monomial quotients from multigraded Koszul homology,
//! checked against a direct count of standard monomials.

use boij_soderberg::hilbert::hilbert_series;
use boij_soderberg::koszul::{betti_table, random_ideal, standard_monomial_counts};

fn main() -> Result<(), boij_soderberg::Error> {
    for seed in 0..40 {
        let ideal = random_ideal(seed, 3, 5, 4);
        if ideal.generators().len() < 4 {
            continue;
        }
        let beta = betti_table(&ideal)?;
        let max_k = i64::from(ideal.max_generator_degree()) + 3;
        let agree = hilbert_series(&beta, max_k) == standard_monomial_counts(&ideal, max_k)?;
        println!("I = {ideal}, Hilbert function agrees up to degree {max_k}: {agree}\n{beta}");
    }
    Ok(())
}
