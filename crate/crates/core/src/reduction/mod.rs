//! Tschirnhausen reduction of the general quintic to principal,
//! Bring–Jerrard and Bring form, and the way back.

pub mod chain;
pub mod radicals;
mod terms;
pub mod tschirnhaus;

pub use chain::{back_map, reduce, TransformChain};
pub use radicals::{cubic_roots, solve_cubic, solve_quadratic, solve_quartic};
pub use tschirnhaus::{
    image_polynomial, power_sums, principal_candidates, quartic_stage_discriminant, root_scale, to_bring, to_bring_jerrard,
    to_principal, BringForm, BringJerrard, PrincipalQuintic, QuadraticStage, QuarticStage, Stage,
};
