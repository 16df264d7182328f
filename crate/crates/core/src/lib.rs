pub mod linalg;
pub mod poly;
pub mod algebra;
pub mod catalog;
pub mod derivations;
pub mod lie;
pub mod nullindex;
pub mod bounds;
pub mod error;
pub mod report;
pub mod scan;

pub use error::ArtinderError;
