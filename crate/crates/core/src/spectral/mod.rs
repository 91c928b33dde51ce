//! Spectral computations in two tiers: floating point for eigenvalues, exact
//! integers for every identity (traces, walk counts, ranks).

pub mod charpoly;
pub mod eigen;
pub mod exact;
pub mod majorization;
pub mod partition;

pub use charpoly::{path_charpoly_eval, rk_quotient_charpoly_eval, rk_quotient_matrix, rk_spectral_radius};
pub use eigen::{inertia_sums, spectrum, symmetric_eigenvalues, InertiaSums, Spectrum, DEFAULT_ZERO_TOL};
pub use exact::{closed_walks, integer_rank, rank_exact, walks};
pub use majorization::{p_norm, weakly_majorizes};
pub use partition::{quotient_matrix, rk_partition_blocks, EquitablePartition};
