//! Write the five data series as `.dat` files, ready for any plotting
//! tool, and print the growth-ratio trend of the maximally extendable
//! counts.
//!
//! ```bash
//! cargo run --release -p transfer-systems --example export_figures -- [out_dir] [max_n]
//! ```

use std::path::PathBuf;

use transfer_systems::counting::CountTables;
use transfer_systems::series::{
    asymptotic_ratio_trend, export_series, Series, GROWTH_CONSTANT_NANOS,
};

fn main() {
    let mut args = std::env::args().skip(1);
    let out: PathBuf = args.next().unwrap_or_else(|| "figure-data".into()).into();
    let max_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(40);

    let mut tables = CountTables::new();
    let paths = export_series(&mut tables, &Series::ALL, max_n, &out).unwrap();
    for p in &paths {
        println!("wrote {}", p.display());
    }

    println!("\ngrowth ratio Lmax(n) n^(3/2) / (3 + sqrt 8)^n:");
    let trend = asymptotic_ratio_trend(max_n.max(2));
    for (n, value) in &trend {
        if *n == 1 || n % 10 == 0 {
            println!("  n={n:>3}: {}", &value[..14]);
        }
    }
    println!(
        "  the ratio drifts toward {}.{}",
        GROWTH_CONSTANT_NANOS / 1_000_000_000,
        GROWTH_CONSTANT_NANOS % 1_000_000_000
    );
}
