//! Localized CSM and SM classes on `G/B` and `G/P` for `G = GL_n`.

mod loctable;
mod operators;
mod projrich;
mod schubert;

pub use loctable::{FixedPoint, FixedPoints, LocTable, Space};
pub use operators::{dl_operator, DlOperator};
pub use projrich::{projrich_ssm_recursive, projrich_via_pushforward, ProjRichTable};
pub use schubert::{pushforward_gp, richardson_csm, tangent_chern_gp, SchubertTables};
