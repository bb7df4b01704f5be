//! Decompose a transfer system at its minimal fibrant element and put it
//! back together. Recomposition accepts exactly the restriction-closed
//! pairs.
//!
//! ```bash
//! cargo run -p transfer-systems --example split_and_compose
//! ```

use transfer_systems::lattice::Grid;
use transfer_systems::transfer::{compose, minimal_fibrant, split, TransferSystem};

fn main() {
    // a system on [1] x [3] whose minimal fibrant element is (0,1):
    // verticals at columns 0 and 1, parallel tails 2 -> 3 in both rows,
    // and everything forced above (0,1)
    let grid = Grid::new(3);
    let ts = TransferSystem::from_pairs(
        grid.semilattice(),
        &[
            (grid.elem(0, 0), grid.elem(1, 0)),
            (grid.elem(0, 1), grid.elem(1, 1)),
            (grid.elem(0, 2), grid.elem(0, 3)),
            (grid.elem(1, 2), grid.elem(1, 3)),
            (grid.elem(0, 1), grid.elem(0, 2)),
            (grid.elem(0, 1), grid.elem(0, 3)),
            (grid.elem(0, 1), grid.elem(1, 2)),
            (grid.elem(0, 1), grid.elem(1, 3)),
        ],
    )
    .unwrap();

    let (a, b) = grid.coords(minimal_fibrant(grid.lattice(), &ts));
    println!("minimal fibrant element: ({a},{b})");

    let parts = split(grid.lattice(), &ts);
    println!(
        "split at the pivot: {} relations below, {} relations above",
        parts.complement_system.len(),
        parts.upset_system.len()
    );

    let back = compose(
        grid.lattice(),
        parts.pivot,
        &parts.complement_system,
        &parts.upset_system,
    )
    .unwrap();
    println!("compose(split(ts)) == ts: {}", back == ts);

    // dropping the lower part's relation breaks restriction closure
    let discrete_below = TransferSystem::discrete(&parts.complement.semilattice);
    match compose(grid.lattice(), parts.pivot, &discrete_below, &parts.upset_system) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(err) => println!("discrete lower part rejected: {err}"),
    }
}
