//! Supernatural cohomology tables and their pairing with Betti tables.

use boij_soderberg::rational::{format, int};
use boij_soderberg::{pairing, pure_diagram, supernatural_gamma, SupernaturalTable};

fn main() -> Result<(), boij_soderberg::Error> {
    let t = SupernaturalTable::integral(vec![0, -4])?;
    println!("roots {:?}, smallest integral rank {}", t.roots(), t.rank());
    for j in (0..=2).rev() {
        let row: Vec<String> = (-8..=3).map(|k| format!("{:>4}", format(&supernatural_gamma(&t, j, k)))).collect();
        println!("h^{j}: {}", row.join(""));
    }
    println!("  k: {}", (-8..=3).map(|k| format!("{k:>4}")).collect::<String>());

    let rank_two = SupernaturalTable::new(vec![-1, -2], int(2))?;
    println!("\nchi(0) for roots (-1,-2), rank 2: {}", rank_two.euler(0));

    for d in ["0,1,3,4", "0,1,2,4", "0,2,3,4"] {
        let p = pure_diagram(&d.parse()?, 4)?;
        println!("<beta({d}), gamma> = {}", format(&pairing(p.canonical(), &t)));
    }
    Ok(())
}
