//! Finite and extended affine symmetric groups in window notation, Bruhat
//! orders and the extended parabolic Bruhat order.

mod affine;
mod bounded;
mod finite;
mod order;
mod parabolic;
mod poset;

pub use affine::{AffinePerm, TieBreak};
pub use bounded::enumerate_bounded;
pub use finite::FinitePerm;
pub use order::{
    bruhat_leq, bruhat_leq_by_covers, ext_p_bruhat, k_bruhat, k_parabolic, ExtAlgorithm,
};
pub use parabolic::ParabolicData;
pub use poset::{poset_export, single_step_arcs};
