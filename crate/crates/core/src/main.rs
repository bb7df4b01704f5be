//! Command-line front end: exact counts, enumeration, sequence tables,
//! figure-data export, and the verification suites. All logic lives in the
//! library; this binary only parses flags and prints.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use transfer_systems::counting::{
    antichain, catalan, refined_schroder_triangle, saturated_liftable_count, schroder_row, tam,
    tam_total, CountTables, Family,
};
use transfer_systems::enumerate::{enumerate_with_budget, stratify, DEFAULT_BUDGET};
use transfer_systems::lattice::Grid;
use transfer_systems::series::{export_series, Series};
use transfer_systems::transfer::GridSystemJson;
use transfer_systems::verify::{run_suite, Suite, SuiteError};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "transfer-systems",
    version,
    about = "Exact enumeration and counting of transfer systems on [1] x [n]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count transfer systems on [1] x [n] with the exact recursion.
    Count {
        /// Which family to count: dihedral counts liftable systems only.
        #[arg(long, value_enum)]
        group: GroupKind,
        #[arg(long)]
        n: usize,
        /// Print the (k, l) matrix of counts by stationary and extendable
        /// elements instead of the total.
        #[arg(long)]
        by_strata: bool,
    },
    /// List every transfer system on [1] x [n] as JSON, with a strata
    /// summary. Filters compose conjunctively.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Keep liftable systems only.
        #[arg(long)]
        liftable: bool,
        /// Keep saturated systems only.
        #[arg(long)]
        saturated: bool,
        /// Keep systems with the full right vertical only.
        #[arg(long)]
        tam: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Cap on the number of systems discovered.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Print a sequence table, one line per n.
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceName,
        #[arg(long)]
        max_n: usize,
    },
    /// Write figure data series as .dat files (n, value; space-separated).
    Export {
        /// Comma-separated subset of L,T,Lmax,Tmax,ratio. Default: all.
        #[arg(long, value_delimiter = ',')]
        series: Vec<SeriesArg>,
        #[arg(long, default_value_t = 80)]
        max_n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a cross-validation suite and report each check.
    Verify {
        /// One of: tables, oracle, duality, schroder, antichain,
        /// conjecture, saturated, asymptotics.
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        /// Emit the deterministic JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupKind {
    /// Liftable transfer systems on [1] x [n].
    Dihedral,
    /// All transfer systems on [1] x [n].
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceName {
    /// Tamari-interval totals.
    Tamari,
    /// Tamari-interval triangle rows, k = 1..=n+1.
    TamariTriangle,
    /// Large Schroder numbers.
    Schroder,
    /// Refined Schroder triangle rows, k = 1..=n (starts at n = 1).
    RefinedSchroder,
    /// Rooted-subtree counts (starts at n = 1).
    Antichain,
    /// Catalan numbers.
    Catalan,
    /// Saturated liftable counts (n+2) 2^n.
    Saturated,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    #[value(name = "L")]
    L,
    #[value(name = "T")]
    T,
    #[value(name = "Lmax")]
    Lmax,
    #[value(name = "Tmax")]
    Tmax,
    #[value(name = "ratio")]
    Ratio,
}

impl From<SeriesArg> for Series {
    fn from(arg: SeriesArg) -> Series {
        match arg {
            SeriesArg::L => Series::L,
            SeriesArg::T => Series::T,
            SeriesArg::Lmax => Series::Lmax,
            SeriesArg::Tmax => Series::Tmax,
            SeriesArg::Ratio => Series::Ratio,
        }
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: SuiteError| e.to_string())
}

#[derive(Serialize)]
struct StratumRow {
    stationary: usize,
    extendable: usize,
    minimal_fibrant: [usize; 2],
    liftable: bool,
    saturated: bool,
    full_vertical: bool,
    count: u64,
}

#[derive(Serialize)]
struct EnumerateOutput {
    n: usize,
    count: usize,
    systems: Vec<GridSystemJson>,
    strata: Vec<StratumRow>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Count { group, n, by_strata } => {
            let family = match group {
                GroupKind::Dihedral => Family::Liftable,
                GroupKind::Cyclic => Family::All,
            };
            let mut tables = CountTables::new();
            if by_strata {
                for k in 1..=n + 1 {
                    let row: Vec<String> = (1..=n + 1)
                        .map(|l| tables.cell(family, n, k, l).to_string())
                        .collect();
                    println!("{}", row.join(" "));
                }
            } else {
                println!("{}", tables.total(family, n));
            }
            ExitCode::SUCCESS
        }
        Command::Enumerate { n, liftable, saturated, tam, format: _, budget } => {
            if 2 * (n + 1) > transfer_systems::lattice::MAX_ELEMENTS {
                eprintln!("error: n={n} exceeds the supported carrier size");
                return ExitCode::from(EXIT_USAGE);
            }
            let grid = Grid::new(n);
            let enumeration = match enumerate_with_budget(grid.semilattice(), budget) {
                Ok(e) => e,
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(EXIT_FAILURE);
                }
            };
            let keep = |stats: &transfer_systems::GridStats| {
                (!liftable || stats.liftable)
                    && (!saturated || stats.saturated)
                    && (!tam || stats.full_vertical)
            };
            let mut systems = Vec::new();
            let mut strata: Vec<StratumRow> = Vec::new();
            for (stats, count) in stratify(&grid, &enumeration) {
                if keep(&stats) {
                    strata.push(StratumRow {
                        stationary: stats.stationary,
                        extendable: stats.extendable,
                        minimal_fibrant: [stats.minimal_fibrant.0, stats.minimal_fibrant.1],
                        liftable: stats.liftable,
                        saturated: stats.saturated,
                        full_vertical: stats.full_vertical,
                        count,
                    });
                }
            }
            for ts in enumeration.systems() {
                if keep(&transfer_systems::transfer::grid_stats(&grid, ts)) {
                    systems.push(ts.to_grid_json(&grid));
                }
            }
            let out = EnumerateOutput { n, count: systems.len(), systems, strata };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            ExitCode::SUCCESS
        }
        Command::Sequence { name, max_n } => {
            match name {
                SequenceName::Tamari => {
                    for n in 0..=max_n {
                        println!("{n} {}", tam_total(n));
                    }
                }
                SequenceName::TamariTriangle => {
                    for n in 0..=max_n {
                        let row: Vec<String> =
                            (1..=n + 1).map(|k| tam(n, k).to_string()).collect();
                        println!("{n} {}", row.join(" "));
                    }
                }
                SequenceName::Schroder => {
                    for (n, v) in schroder_row(max_n).iter().enumerate() {
                        println!("{n} {v}");
                    }
                }
                SequenceName::RefinedSchroder => {
                    let triangle = refined_schroder_triangle(max_n);
                    for (n, row) in triangle.iter().enumerate().skip(1) {
                        let cells: Vec<String> =
                            row[1..=n].iter().map(|v| v.to_string()).collect();
                        println!("{n} {}", cells.join(" "));
                    }
                }
                SequenceName::Antichain => {
                    for n in 1..=max_n {
                        println!("{n} {}", antichain(n));
                    }
                }
                SequenceName::Catalan => {
                    for n in 0..=max_n {
                        println!("{n} {}", catalan(n));
                    }
                }
                SequenceName::Saturated => {
                    for n in 0..=max_n {
                        println!("{n} {}", saturated_liftable_count(n));
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Command::Export { series, max_n, out } => {
            let list: Vec<Series> = if series.is_empty() {
                Series::ALL.to_vec()
            } else {
                series.into_iter().map(Series::from).collect()
            };
            let mut tables = CountTables::new();
            match export_series(&mut tables, &list, max_n, &out) {
                Ok(paths) => {
                    for p in paths {
                        eprintln!("wrote {}", p.display());
                    }
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    ExitCode::from(EXIT_FAILURE)
                }
            }
        }
        Command::Verify { suite, max_n, json } => match run_suite(suite, max_n) {
            Ok(report) => {
                if json {
                    println!("{}", report.to_json());
                } else {
                    print!("{}", report.render_text());
                }
                if report.passed {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(EXIT_FAILURE)
                }
            }
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(EXIT_USAGE)
            }
        },
    }
}
