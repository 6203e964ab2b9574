//! Separating cycles, diamonds, saturation and common-neighbourhood pairs.

pub mod cycles;
pub mod diamond;
pub mod pairs;
pub mod saturation;

pub use cycles::{
    cycles_of_length, cycles_within, has_separating_triangle, is_separating, on_separating_4cycles,
    separating_cycles, three_adjacent_to_separating_4cycles,
};
pub use diamond::{find_diamonds, find_diamonds_within, DiamondCert, DiamondKind, Pattern};
pub use pairs::{max_common_neighborhood_pair, PairCert};
pub use saturation::{saturates, SatObject, SaturationError};
