pub mod bring;
pub mod error;
pub mod hermite;
pub mod modular;
pub mod numeric;
pub mod oracle;
pub mod poly;
pub mod reduction;
pub mod solve;
pub mod special;

pub use error::{Error, Result};
pub use numeric::NumericContext;
pub use poly::Polynomial;
pub use solve::{solve, Method, SolveReport};
