//! S-Dowling posets: elements, covers, enumeration, local structure.

mod context;
mod element;
mod functorial;
mod order;
mod structure;

pub use context::{DowlingContext, DEFAULT_CAP};
pub use element::{Block, DowlingElement, ElementJson};
pub use functorial::{apply_functorial, target_context, Morphism};
pub use order::{covers_up, enumerate_poset, index_of, leq};
pub use structure::{interval_char_poly, interval_factors, upper_label, IntervalFactor};
