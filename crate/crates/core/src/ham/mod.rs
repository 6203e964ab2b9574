//! Exact enumeration and counting of Hamiltonian cycles and paths.

pub mod cycle;
pub mod search;

pub use cycle::{is_ham_path_within, HamCycle, HamFamily};
pub use search::{
    count_ham_cycles, count_ham_cycles_within, count_ham_paths, count_ham_paths_within, default_budget,
    enumerate_ham_cycles, find_ham_cycle, find_ham_cycle_within, for_each_ham_cycle_within,
    for_each_ham_path_within, ham_paths_within, Constraints, HamError, BUDGET_ENV, DEFAULT_BUDGET,
};
