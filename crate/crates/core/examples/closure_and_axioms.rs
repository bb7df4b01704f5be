//! Check the transfer-system axioms on explicit relations and grow seeds
//! to their closure.
//!
//! ```bash
//! cargo run -p transfer-systems --example closure_and_axioms
//! ```

use transfer_systems::lattice::Grid;
use transfer_systems::transfer::TransferSystem;

fn show(grid: &Grid, ts: &TransferSystem) -> String {
    let pairs: Vec<String> = ts
        .strict_pairs(grid.semilattice())
        .into_iter()
        .map(|(x, y)| {
            let (a, b) = grid.coords(x);
            let (c, d) = grid.coords(y);
            format!("({a},{b})R({c},{d})")
        })
        .collect();
    if pairs.is_empty() {
        "{}".to_string()
    } else {
        format!("{{{}}}", pairs.join(", "))
    }
}

fn main() {
    let grid = Grid::new(1);
    let carrier = grid.semilattice();

    // a lone diagonal arrow fails the restriction axiom, with a witness
    let diagonal = [(grid.elem(0, 1), grid.elem(1, 1))];
    match TransferSystem::from_pairs(carrier, &diagonal) {
        Ok(_) => println!("unexpectedly valid"),
        Err(violation) => println!("lone diagonal rejected: {violation}"),
    }

    // its closure adds exactly the missing vertical
    let closed = TransferSystem::closure(carrier, &diagonal);
    println!("closure of the diagonal: {}", show(&grid, &closed));

    // a top-row arrow forces the bottom row underneath it
    let top = [(grid.elem(1, 0), grid.elem(1, 1))];
    let closed = TransferSystem::closure(carrier, &top);
    println!("closure of the top arrow: {}", show(&grid, &closed));

    // closing all covering pairs yields the complete system
    let grid2 = Grid::new(2);
    let covers: Vec<(usize, usize)> = grid2
        .semilattice()
        .pairs()
        .iter()
        .copied()
        .filter(|&(x, y)| {
            let (a, b) = grid2.coords(x);
            let (c, d) = grid2.coords(y);
            c - a + d - b == 1
        })
        .collect();
    let closed = TransferSystem::closure(grid2.semilattice(), &covers);
    println!(
        "closing the {} covering pairs of [1] x [2] yields the complete system: {}",
        covers.len(),
        closed == TransferSystem::complete(grid2.semilattice())
    );
}
