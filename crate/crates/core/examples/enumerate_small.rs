//! Enumerate every transfer system on a small grid and stratify the
//! result by its statistics.
//!
//! ```bash
//! cargo run -p transfer-systems --example enumerate_small
//! ```

use transfer_systems::enumerate::{enumerate_all, stratify};
use transfer_systems::lattice::Grid;

fn main() {
    let grid = Grid::new(2);
    let enumeration = enumerate_all(grid.semilattice()).unwrap();
    println!("[1] x [2] carries {} transfer systems", enumeration.len());

    let strata = stratify(&grid, &enumeration);
    println!("stationary extendable min_fibrant liftable saturated full_vertical  count");
    for (stats, count) in &strata {
        println!(
            "{:^10} {:^10} {:^11} {:^8} {:^9} {:^13} {:>6}",
            stats.stationary,
            stats.extendable,
            format!("({},{})", stats.minimal_fibrant.0, stats.minimal_fibrant.1),
            stats.liftable,
            stats.saturated,
            stats.full_vertical,
            count
        );
    }

    let liftable: u64 = strata.iter().filter(|(s, _)| s.liftable).map(|(_, c)| c).sum();
    let tam: u64 = strata.iter().filter(|(s, _)| s.full_vertical).map(|(_, c)| c).sum();
    println!("liftable: {liftable}, with the full right vertical: {tam}");

    // systems serialize to a compact JSON wire form
    let sample = &enumeration.systems()[1];
    println!(
        "second system as JSON: {}",
        serde_json::to_string(&sample.to_grid_json(&grid)).unwrap()
    );
}
