//! Pairs Betti tables of random monomial ideals with random supernatural
//! tables and reports the smallest value seen. Every value should be
//! nonnegative.
//!
//! `cargo run --release --example positivity_sweep -- 100`

use boij_soderberg::koszul::{betti_table, random_ideal};
use boij_soderberg::{pairing, truncated_pairing, Rational, SupernaturalTable, TruncationSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), boij_soderberg::Error> {
    let ideals: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut evaluations = 0u64;
    let mut smallest: Option<Rational> = None;
    for seed in 0..ideals {
        let beta = betti_table(&random_ideal(seed, rng.gen_range(1..=4), 6, 5))?;
        let (lo, hi) = beta.degree_range().expect("S/I is nonzero");
        for _ in 0..10 {
            let mut pool: Vec<i64> = (-6..=6).collect();
            pool.shuffle(&mut rng);
            let mut roots = pool[..rng.gen_range(0..=3)].to_vec();
            roots.sort_unstable_by(|a, b| b.cmp(a));
            let gamma = SupernaturalTable::integral(roots)?;
            let mut values = vec![pairing(&beta, &gamma)];
            for tau in 0..=4 {
                for kappa in lo - 2..=hi + 2 {
                    values.push(truncated_pairing(&beta, &gamma, &TruncationSpec::new(tau, kappa)));
                }
            }
            evaluations += values.len() as u64;
            let low = values.into_iter().min().unwrap();
            if smallest.as_ref().map_or(true, |s| low < *s) {
                smallest = Some(low);
            }
        }
    }
    println!("{evaluations} evaluations over {ideals} ideals, smallest value {}", smallest.unwrap());
    Ok(())
}
