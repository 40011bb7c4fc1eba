//! Pure diagrams, their canonical integer tables and the Herzog-Kuhl
//! equations they satisfy.

use boij_soderberg::rational::int;
use boij_soderberg::{herzog_kuhl_residuals, pure_diagram, DegreeSequence};

fn main() -> Result<(), boij_soderberg::Error> {
    let sequences: [&[i64]; 6] = [
        &[0, 2, 3, 5],
        &[0, 1, 3, 4],
        &[0, 1, 2, 4],
        &[0, 1, 2, 3, 6],
        &[-1, 1, 2, 3, 4],
        &[0, 3],
    ];
    for d in sequences {
        let d = DegreeSequence::new(d.to_vec())?;
        let p = pure_diagram(&d, d.last_index().max(1))?;
        let values: Vec<String> = p.canonical_values().iter().map(ToString::to_string).collect();
        let residuals = herzog_kuhl_residuals(&p);
        println!(
            "{d}: canonical ({}) = {} * normalized, HK residuals all zero: {}",
            values.join(","),
            p.scale(),
            residuals.iter().all(|r| *r == int(0))
        );
    }
    let d: DegreeSequence = "0,2,4,5".parse()?;
    println!("\n{}", pure_diagram(&d, 3)?.canonical());
    Ok(())
}
