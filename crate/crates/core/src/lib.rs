//! Exact computations in the positive half of quantum sl3 and its
//! categorification by thick KLR diagrams.
//!
//! The crate is layered bottom-up:
//!
//! - [`qlaurent`]: Laurent polynomials in `q` over big integers, quantum
//!   integers and binomials.
//! - [`partitions`]: partitions, hat-complements, Littlewood-Richardson
//!   coefficients and Schur polynomials.
//! - [`poly`]: sparse multivariate integer polynomials (shared carrier for
//!   Schur polynomials and operator coefficients).
//! - [`u3algebra`]: divided-power monomials and rewriting onto the canonical
//!   basis, with a q-shuffle embedding used as an independent check.
//! - [`u3category`]: graded objects, their decomposition into
//!   indecomposables, decategorification and dotless degree spectra.
//! - [`klrengine`]: exact operator realization of thin and thick diagrams and
//!   the verification suites built on it.
//! - [`cli`]: expression grammar, command dispatch and reports.

pub mod cli;
pub mod klrengine;
pub mod partitions;
pub mod poly;
pub mod qlaurent;
pub mod text;
pub mod u3algebra;
pub mod u3category;

use std::fmt;

/// One of the two adjacent simple roots of sl3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub const ALL: [Color; 2] = [Color::One, Color::Two];

    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    /// The label `1` or `2`.
    pub fn index(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }

    pub fn from_index(i: u8) -> Option<Color> {
        match i {
            1 => Some(Color::One),
            2 => Some(Color::Two),
            _ => None,
        }
    }

    /// Cartan pairing `i·j`: 2 on the diagonal, -1 otherwise.
    pub fn pairing(self, other: Color) -> i64 {
        if self == other {
            2
        } else {
            -1
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}
