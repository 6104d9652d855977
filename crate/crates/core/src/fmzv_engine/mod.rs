//! Exact computation of finite multiple zeta(-star) values mod p and prime
//! sweeps over the identities they satisfy.

mod cache;
mod harmonic;
mod prime_field;
mod verify;

pub use cache::ValueCache;
pub use harmonic::{
    composition_values_mod_p, eval_combination_mod_p, fmzsv_mod_p, fmzv_mod_p, harmonic_mod_p,
};
pub use prime_field::{
    inverse_mod, inverse_table, mul_mod, pow_mod, primes_in, PrimeFieldValue,
};
pub use verify::{
    verify_antipode, verify_oyama, verify_phi_duality, verify_symmetric_sum, verify_weighted_sum,
    weighted_sum_residue, PrimeRange, PrimeSweepReport, SweepParams, SweepRow, SweepSummary,
};
