//! The duality involution on grid transfer systems: flipping through the
//! downward closure swaps the statistics and is its own inverse, but does
//! not preserve liftability.
//!
//! ```bash
//! cargo run -p transfer-systems --example duality_involution
//! ```

use transfer_systems::enumerate::enumerate_all;
use transfer_systems::lattice::Grid;
use transfer_systems::transfer::{dual, grid_stats, is_liftable, TransferSystem};

fn main() {
    let grid = Grid::new(2);
    let lattice = grid.lattice();
    let duality = grid.duality();

    // extremes swap
    let discrete = TransferSystem::discrete(grid.semilattice());
    let complete = TransferSystem::complete(grid.semilattice());
    println!(
        "dual(discrete) = complete: {}",
        dual(lattice, &duality, &discrete) == complete
    );

    // two verticals: liftable, but its dual is not
    let verticals = TransferSystem::from_pairs(
        grid.semilattice(),
        &[(grid.elem(0, 0), grid.elem(1, 0)), (grid.elem(0, 1), grid.elem(1, 1))],
    )
    .unwrap();
    let flipped = dual(lattice, &duality, &verticals);
    println!(
        "two verticals are liftable: {}; their dual is liftable: {}",
        is_liftable(&grid, &verticals),
        is_liftable(&grid, &flipped)
    );

    // the involution and the statistics swap, over every system
    let enumeration = enumerate_all(grid.semilattice()).unwrap();
    let mut involution_holds = true;
    let mut swap_holds = true;
    for ts in enumeration.systems() {
        let d = dual(lattice, &duality, ts);
        involution_holds &= dual(lattice, &duality, &d) == *ts;
        let s = grid_stats(&grid, ts);
        let sd = grid_stats(&grid, &d);
        let (a, b) = s.minimal_fibrant;
        swap_holds &= (sd.stationary, sd.extendable, sd.minimal_fibrant)
            == (s.extendable, s.stationary, (1 - a, grid.n() - b));
    }
    println!(
        "over all {} systems: double dual is the identity: {involution_holds}; \
         statistics swap as (k, l, (a,b)) -> (l, k, (1-a, n-b)): {swap_holds}",
        enumeration.len()
    );
}
