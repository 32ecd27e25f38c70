//! Independent combinatorial ground truth.

pub mod hhl;
pub mod llt;
pub mod nabla;

pub use hhl::{hhl_macdonald, hhl_weight};
pub use llt::{llt_polynomial, llt_schur, ribbons_from_subset, RibbonTuple};
pub use nabla::{nabla, nabla_inverse, verify_nabla_llt, RationalSchur};
