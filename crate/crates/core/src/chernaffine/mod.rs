//! Localizations `s_SM(Σ̊^f)|_g` of Segre-MacPherson classes of affine
//! opposite Schubert cells, with the imaginary root set to zero.

mod checks;
mod coloring;
mod recursion;

pub use checks::{
    eq53_check, right_recursion_check, thm62_compare, thm62_factor, Thm62Mismatch, Thm62Report,
};
pub use coloring::{coloring_oracle, local_move_suite, strand_weight, LocalCase, LocalMoveReport};
pub use recursion::{affine_ssm_loc, AffineLocCache};
