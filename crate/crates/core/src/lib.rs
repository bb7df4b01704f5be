//! Transfer systems on finite lattices: exact enumeration and counting.
//!
//! A transfer system on a lattice is a partial order that refines the lattice
//! order and is closed under pullback along meets. This crate provides
//!
//! * carriers: finite lattices and meet-semilattices with precomputed
//!   meet/join tables, chains `[n]`, grids `[1] x [n]`, and order-reversing
//!   dualities ([`lattice`]);
//! * the transfer-system axioms, closure, classification (liftable,
//!   saturated, stationary/extendable statistics), the duality involution,
//!   and the split/compose decomposition at the minimal fibrant element
//!   ([`transfer`]);
//! * a brute-force enumerator that lists every transfer system on a small
//!   carrier, used as the oracle for everything else ([`enumerate`]);
//! * exact big-integer recursions and closed formulas: counts of liftable
//!   and general transfer systems on grids, Tamari-interval numbers,
//!   (refined) Schroder numbers, antichain numbers, Catalan/Narayana
//!   ([`counting`]);
//! * reproducible data series and `.dat` file export for the count
//!   sequences and their growth ratios ([`series`]);
//! * cross-validation suites with machine-readable reports ([`verify`]).
//!
//! The `examples/` directory has one runnable walkthrough per capability;
//! the `transfer-systems` binary exposes the same functionality as a small
//! command-line tool.

pub mod counting;
pub mod enumerate;
pub mod lattice;
pub mod series;
pub mod transfer;
pub mod verify;

pub use lattice::{DualityMap, Grid, Lattice, LatticeError, MeetSemilattice};
pub use transfer::{GridStats, TransferSystem};

pub use num_bigint::BigUint;
