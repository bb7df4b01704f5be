//! Build the carriers everything else runs on: chains, products, grids,
//! up-sets and their complements, and the canonical grid duality.
//!
//! ```bash
//! cargo run -p transfer-systems --example build_lattices
//! ```

use transfer_systems::lattice::{Grid, Lattice};

fn main() {
    let chain = Lattice::chain(3);
    println!(
        "chain [3]: {} elements, bottom {}, top {}",
        chain.size(),
        chain.label(chain.bottom()),
        chain.label(chain.top())
    );

    let grid = Grid::new(3);
    let lattice = grid.lattice();
    println!(
        "grid [1] x [3]: {} elements, meet((0,1), (1,0)) = {}",
        lattice.size(),
        lattice.label(lattice.meet(grid.elem(0, 1), grid.elem(1, 0)))
    );

    // the up-set of (0,1) is a smaller grid; its complement is a chain
    let pivot = grid.elem(0, 1);
    let upset = lattice.up_set(pivot);
    let complement = lattice.up_set_complement(pivot).unwrap();
    println!(
        "up-set of (0,1) has {} elements and is a copy of [1] x [2]: {}",
        upset.lattice.size(),
        upset.lattice.order_eq(Grid::new(2).lattice())
    );
    println!(
        "its complement has {} elements and is a chain: {}",
        complement.semilattice.size(),
        complement.semilattice.order_eq(Lattice::chain(1).semilattice())
    );

    // the coordinate flip (a, b) -> (1 - a, n - b) reverses the order
    let duality = grid.duality();
    println!(
        "duality sends (0,1) to {} and is an involution: {}",
        lattice.label(duality.apply(grid.elem(0, 1))),
        duality.is_involution()
    );

    // lattices round-trip through a plain text form listing covering pairs
    let text = Lattice::chain(2).to_text();
    print!("chain [2] as text:\n{text}");
    let parsed = Lattice::from_text(&text).unwrap();
    println!("parses back to an equal order: {}", parsed.order_eq(&Lattice::chain(2)));
}
