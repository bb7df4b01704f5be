//! Exhaustive, deterministic enumeration of transfer systems on a small
//! carrier.
//!
//! Breadth-first search from the discrete system: extend each known system
//! by one absent comparable pair, close, and deduplicate. Every transfer
//! system is the closure of a maximal proper subsystem plus one pair, so
//! the search is complete; the output is sorted by the canonical
//! bit-vector so two runs are byte-identical.

use std::collections::{BTreeMap, HashMap, HashSet};

use thiserror::Error;

use crate::counting::catalan;
use crate::lattice::{Grid, Lattice, MeetSemilattice};
use crate::transfer::{grid_stats, GridStats, TransferSystem};

/// Default cap on the number of distinct systems discovered.
pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration exceeded its budget after {discovered} systems")]
    BudgetExceeded { discovered: usize },
}

/// The complete, canonically sorted list of transfer systems on a carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    systems: Vec<TransferSystem>,
    generation_counts: Vec<u32>,
}

impl Enumeration {
    pub fn systems(&self) -> &[TransferSystem] {
        &self.systems
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    /// How many times `systems()[i]` arose as the closure of a proper
    /// subsystem extended by one pair. Zero only for the discrete system.
    pub fn generation_count(&self, i: usize) -> u32 {
        self.generation_counts[i]
    }
}

pub fn enumerate_all(carrier: &MeetSemilattice) -> Result<Enumeration, EnumerateError> {
    enumerate_with_budget(carrier, DEFAULT_BUDGET)
}

pub fn enumerate_with_budget(
    carrier: &MeetSemilattice,
    budget: usize,
) -> Result<Enumeration, EnumerateError> {
    let npairs = carrier.pairs().len();
    let discrete = TransferSystem::discrete(carrier);
    let mut seen: HashSet<TransferSystem> = HashSet::new();
    let mut generated: HashMap<TransferSystem, u32> = HashMap::new();
    seen.insert(discrete.clone());
    let mut frontier = vec![discrete];
    while !frontier.is_empty() {
        frontier.sort_unstable();
        let mut next = Vec::new();
        for ts in &frontier {
            for i in 0..npairs {
                if ts.pair_set().contains(i) {
                    continue;
                }
                let ext = ts.closure_with(carrier, i);
                *generated.entry(ext.clone()).or_insert(0) += 1;
                if seen.insert(ext.clone()) {
                    if seen.len() > budget {
                        return Err(EnumerateError::BudgetExceeded { discovered: seen.len() });
                    }
                    next.push(ext);
                }
            }
        }
        frontier = next;
    }
    let mut systems: Vec<TransferSystem> = seen.into_iter().collect();
    systems.sort_unstable();
    let generation_counts = systems
        .iter()
        .map(|s| generated.get(s).copied().unwrap_or(0))
        .collect();
    Ok(Enumeration { systems, generation_counts })
}

/// Groups an enumeration of a grid by the full statistics tuple. The counts
/// sum to the number of systems; marginal sums over this map reproduce
/// every count the recursion computes.
pub fn stratify(grid: &Grid, enumeration: &Enumeration) -> BTreeMap<GridStats, u64> {
    let mut strata = BTreeMap::new();
    for ts in &enumeration.systems {
        *strata.entry(grid_stats(grid, ts)).or_insert(0) += 1;
    }
    strata
}

/// Checks that the chain `[n]` carries exactly the `(n+1)`-st Catalan
/// number of transfer systems.
pub fn chain_count_matches_catalan(n: usize) -> bool {
    let chain = Lattice::chain(n);
    match enumerate_all(chain.semilattice()) {
        Ok(e) => catalan(n + 1) == e.len().into(),
        Err(_) => false,
    }
}
