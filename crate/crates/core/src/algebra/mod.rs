//! The algebra E_n(u) of braids and ties.

mod basis;
mod element;
mod engine;

pub use basis::{BasisElement, BasisKey, BasisTables};
pub use element::AlgebraElement;
pub use engine::Engine;
