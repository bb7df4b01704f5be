//! Exact counts far beyond brute force, via the memoized recursion.
//!
//! ```bash
//! cargo run --release -p transfer-systems --example count_large
//! ```

use transfer_systems::counting::{CountTables, Family};

fn main() {
    let mut tables = CountTables::new();

    println!("{:>3} {:>22} {:>22}", "n", "liftable", "all");
    for n in 0..=15 {
        println!(
            "{n:>3} {:>22} {:>22}",
            tables.total(Family::Liftable, n),
            tables.total(Family::All, n)
        );
    }

    // counts refined by the number of stationary (k) and extendable (l)
    // elements; the general table is symmetric in (k, l) by duality
    let n = 4;
    println!("\ngeneral counts on [1] x [{n}] by (k, l):");
    for k in 1..=n + 1 {
        let row: Vec<String> = (1..=n + 1)
            .map(|l| tables.cell(Family::All, n, k, l).to_string())
            .collect();
        println!("  {}", row.join(" "));
    }

    // a single stratum: systems counted by their minimal fibrant element
    println!("\nliftable systems on [1] x [4] with k=3, l=2, minimal fibrant (0,1):");
    println!("  {}", tables.stratum(Family::Liftable, 4, 3, 2, 0, 1));

    let n = 40;
    println!("\nat n = {n} the counts need big integers:");
    println!("  liftable: {}", tables.total(Family::Liftable, n));
    println!("  all:      {}", tables.total(Family::All, n));
}
