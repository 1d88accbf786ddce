//! Exact graph invariants: connectivity, toughness, circumference and longest paths.

mod connectivity;
mod cycles;
mod paths;
mod toughness;
mod walk;

pub use connectivity::{is_vertex_cut, local_vertex_connectivity, vertex_connectivity};
pub use cycles::{
    all_longest_cycles, circumference, cycles_of_length, is_hamiltonian, Circumference,
    CycleSearchError,
};
pub use paths::{all_longest_paths_in, has_path_of_length_at_least, longest_path_in, LongestPaths};
pub use toughness::{toughness, Toughness};
pub use walk::{OrientedCycle, Path, WalkError};
