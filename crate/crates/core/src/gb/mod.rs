//! Gröbner bases of submodules of free modules, normal forms, membership and
//! syzygies.

mod basis;
mod element;
mod matrix;
mod syzygy;
mod vector;

pub use basis::{buchberger, buchberger_with, member, normal_form, BuchbergerOptions, Submodule};
pub use element::ModuleElement;
pub use matrix::PolyMatrix;
pub use syzygy::{syzygy_matrix, syzygy_module, syzygy_module_with};
pub use vector::{ModuleKind, ModuleOrder};

#[cfg(test)]
mod tests;
