/// Size guards shared by the enumerating operations.
///
/// The defaults are the hard limits; callers may lower them freely, raising
/// them is the caller's responsibility.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for finite flag tables (`|S_n|^2` tables).
    pub schubert_n: usize,
    /// Largest `n` for the projected Richardson recursion.
    pub projrich_n: usize,
    /// Largest `n` for the relation digraph export.
    pub poset_n: usize,
    /// Largest `k * n` for pipe dream enumeration.
    pub pipe_cells: usize,
    /// Largest `n` for the specialization check.
    pub specialize_n: usize,
    /// Largest length of `g` accepted by the coloring oracle.
    pub coloring_len: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        schubert_n: 5,
        projrich_n: 4,
        poset_n: 6,
        pipe_cells: 24,
        specialize_n: 5,
        coloring_len: 16,
    };

    pub fn check(what: &'static str, got: usize, limit: usize) -> crate::Result<()> {
        if got > limit {
            Err(crate::CsmError::SizeGuard { what, got, limit })
        } else {
            Ok(())
        }
    }

    /// Componentwise minimum, used when a caller asks for tighter guards.
    pub fn min(self, other: Limits) -> Limits {
        Limits {
            schubert_n: self.schubert_n.min(other.schubert_n),
            projrich_n: self.projrich_n.min(other.projrich_n),
            poset_n: self.poset_n.min(other.poset_n),
            pipe_cells: self.pipe_cells.min(other.pipe_cells),
            specialize_n: self.specialize_n.min(other.specialize_n),
            coloring_len: self.coloring_len.min(other.coloring_len),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
