//! Cylindrical pipe dreams for bounded affine permutations and the symmetric
//! rational function `F̃_f` they generate.

mod enumerate;
mod ftilde;
mod pipedream;

pub use enumerate::{enumerate_pd, enumerate_pd_baseline};
pub use ftilde::{
    f_tilde, specialize_check, symmetry_check, FTilde, SpecializeMismatch, SpecializeReport,
};
pub use pipedream::{PipeDream, Tile};
