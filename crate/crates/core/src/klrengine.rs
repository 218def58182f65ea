//! Exact operator realization of thin and thick KLR diagrams for the two
//! colors of sl3, and the verification suites built on it.
//!
//! Operator equality is the verification criterion: a passing check
//! certifies an identity in the image of the polynomial representation.

pub mod builder;
pub mod operator;
pub mod rational;
pub mod report;
pub mod thick;
pub mod verify;

pub use builder::Builder;
pub use operator::{Degree, DiagramOperator, OperatorError};
pub use rational::RationalCoeff;
pub use report::{CheckResult, Report};
pub use thick::{Edge, ThickDiagram, ThickError};
pub use verify::{Direction, Triple};
