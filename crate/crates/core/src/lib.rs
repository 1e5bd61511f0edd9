pub(crate) mod coeffs;
pub mod error;
pub mod fibonacci;
pub mod genfun;
pub mod geometric;
pub mod poly;
pub mod rational;
pub mod realroots;
pub mod subst;
