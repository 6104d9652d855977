//! Floating-point approximation of symmetric multiple zeta(-star) values by
//! truncated sums, and verification of the weighted sum formula mod zeta(2)
//! by rational reconstruction.

mod dd;
mod reconstruct;
mod symmetric;
mod truncated;

pub use dd::DoubleDouble;
pub use reconstruct::rational_reconstruct;
pub use symmetric::{
    smzsv_approx, smzv_star_approx, verify_smzv_weighted_sum, SmzvWsfParams, SmzvWsfReport,
    SymmetricApprox,
};
pub use truncated::{reference_zeta2_zeta3, truncated_mzv, TruncatedValue};
