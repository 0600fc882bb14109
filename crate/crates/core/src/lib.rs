//! Divisibility graphs of conjugacy class sizes for finite classical groups
//! in odd characteristic.
//!
//! The crate has two halves. The formula side evaluates closed-form data:
//! the `q`-exponents of unipotent centralizers ([`unipotent`]) and the generic
//! centralizer orders of `PSLε(3,q)` ([`generic`]). The brute-force side
//! enumerates small matrix groups ([`group`]) and rebuilds the same objects
//! from scratch so the two can be compared. [`divgraphs`] holds the graph
//! kernel both sides feed into, and [`report`] assembles the JSON reports
//! printed by the `divclass` binary.

pub mod arith;
pub mod divgraphs;
mod error;
pub mod field;
pub mod generic;
pub mod group;
pub mod matrix;
pub mod report;
pub mod unipotent;

pub use divgraphs::{
    divisibility_graph, from_centralizer_orders, ComponentShape, DivGraph, ShapeDescriptor,
};
pub use error::{Error, Result};
