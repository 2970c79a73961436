//! Fifth-degree modular algebra: maps between continued-fraction values,
//! j-invariants and moduli; the radical ascent `k_r → k_{25r}`; and numeric
//! validators for the modular identities these rest on.

mod ascent;
mod identities;
mod quantities;
mod tfun;

pub use ascent::{
    alpha_from_p, ascend_25n, depressed_residual, p_from_alpha, psi, quintic_modular_residual, s_from_p, u_fwd, u_star,
    xy_relation_residual, y_cubic_residual, y_roots, AscentState,
};
pub use identities::{validate_identity, validate_suite, IdentityReport, IdentityRow, IdentityTag};
pub use quantities::ramanujan_quantity;
pub use tfun::{f1, modulus_orbit, t1, t2, t3, t3_candidates, t3_nearest, t3_side, t4, t5, t6, t7, T3Candidate, TBranch};
