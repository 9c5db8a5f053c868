pub mod chain;
pub mod classes;
pub mod connection;
pub mod corpus;
pub mod error;
pub mod group;
pub mod ops;
pub mod perm;
pub mod primes;
pub mod quotient;
pub mod search;
pub mod suite;
pub mod table;
pub mod theorems;
pub mod workspace;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::Permutation;
pub use primes::PrimeSet;
pub use quotient::{quotient, QuotientMap};
