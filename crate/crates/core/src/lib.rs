//! Exact arithmetic on Farey rows and the `[0, 1]` Stern-Brocot tree.
//!
//! * [`rational`]: reduced fractions, gcd and extended gcd, the mediant.
//! * [`farey`]: Farey rows built by mediant insertion, a brute-force
//!   reference, cardinalities and neighbors.
//! * [`stern_brocot`]: levels, L/R paths, locate/decode, ancestors, children
//!   and rendering.
//! * [`bezout`]: certificates `m*x + n*y = 1` read off the tree and checked
//!   against the Euclidean algorithm.
//! * [`approx`]: best approximation with a bounded denominator.
//!
//! ```
//! use mediant::{bezout_via_tree, locate, Fraction};
//!
//! let f: Fraction = "3/7".parse().unwrap();
//! assert_eq!(locate(f).unwrap().to_string(), "LRR");
//! let c = bezout_via_tree(3, 7).unwrap();
//! assert_eq!(3 * c.x + 7 * c.y, 1);
//! ```

pub mod approx;
pub mod bezout;
pub mod error;
pub mod farey;
pub mod rational;
pub mod stern_brocot;

pub use approx::{best_approximation, Decimal};
pub use bezout::{bezout_via_euclid, bezout_via_tree, verify_certificate, BezoutCertificate};
pub use error::{Error, Result};
pub use farey::{
    farey_length, farey_neighbors, farey_row, farey_row_oracle, row_order, FareyLevels, FareyRow,
    FareyStream,
};
pub use rational::{
    compare, extended_gcd, gcd, make_fraction, mediant, ExtGcdResult, Fraction, NeighborPair,
    RawFraction,
};
pub use stern_brocot::{
    ancestors, build_levels, children, creation_neighbors, decode, locate, render_tree, walk, Path,
    RenderFormat, Step, TreeLevel,
};
