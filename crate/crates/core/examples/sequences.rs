//! The classical sequences the counts decompose into: Tamari-interval
//! numbers, (refined) large Schroder numbers, antichain numbers, Catalan
//! numbers, and the saturated count.
//!
//! ```bash
//! cargo run -p transfer-systems --example sequences
//! ```

use transfer_systems::counting::{
    antichain, catalan, refined_schroder, saturated_liftable_count, schroder_row, tam, tam_total,
    CountTables, Family,
};

fn main() {
    println!("Tamari-interval triangle (rows n = 0..=6, k = 1..=n+1):");
    for n in 0..=6 {
        let row: Vec<String> = (1..=n + 1).map(|k| tam(n, k).to_string()).collect();
        println!("  n={n}: {}  (total {})", row.join(" "), tam_total(n));
    }

    println!("\nlarge Schroder numbers:");
    let row = schroder_row(10);
    println!("  {}", row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "));

    println!("\nrefined Schroder triangle (by diagonal returns, rows n = 1..=6):");
    for n in 1..=6 {
        let row: Vec<String> = (1..=n).map(|k| refined_schroder(n, k).to_string()).collect();
        println!("  n={n}: {}", row.join(" "));
    }

    println!("\nantichain numbers (rooted subtrees of rooted planar trees):");
    let row: Vec<String> = (1..=10).map(|n| antichain(n).to_string()).collect();
    println!("  {}", row.join(", "));

    println!("\nCatalan numbers:");
    let row: Vec<String> = (0..=10).map(|n| catalan(n).to_string()).collect();
    println!("  {}", row.join(", "));

    println!("\nsaturated liftable counts (n+2) 2^n:");
    let row: Vec<String> = (0..=8).map(|n| saturated_liftable_count(n).to_string()).collect();
    println!("  {}", row.join(", "));

    // how the sequences meet the grid counts: maximally extendable
    // liftable systems are counted by Schroder numbers, and the general
    // ones match the antichain numbers as far as anyone has checked
    let mut tables = CountTables::new();
    println!("\nmaximally extendable counts on [1] x [n]:");
    println!("{:>3} {:>12} {:>12} {:>12} {:>12}", "n", "liftable", "schroder", "all", "antichain");
    for n in 0..=8 {
        println!(
            "{n:>3} {:>12} {:>12} {:>12} {:>12}",
            tables.max_extendable(Family::Liftable, n),
            schroder_row(n + 1)[n + 1],
            tables.max_extendable(Family::All, n),
            antichain(n + 2)
        );
    }
}
