pub mod cartan;
pub mod cli;
pub mod error;
pub mod hecke;
pub mod ratfun;
pub mod smoothness;
pub mod verify;
pub mod weyl;
