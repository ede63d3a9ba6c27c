//! Finite group toolkit for Gruenberg-Kegel graphs of groups whose elements
//! are rational or inverse semi-rational.

pub mod arith;
pub mod catalog;
pub mod element;
pub mod error;
pub mod frobenius;
pub mod group;
pub mod prime_graph;
pub mod rationality;
pub mod report;
pub mod spec_file;
pub mod structure;
pub mod suites;

pub use element::{Element, Matrix, Perm};
pub use error::GroupError;
pub use group::{GroupHandle, SubgroupHandle};
