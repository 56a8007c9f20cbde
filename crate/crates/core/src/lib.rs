//! Gentle algebras, symmetric special biserial algebras and Brauer graphs.
//!
//! The library converts between Brauer graphs and their algebras, builds
//! trivial extensions of gentle algebras, enumerates admissible cuts and
//! reads Jacobian algebras off triangulated surfaces. Every construction is
//! combinatorial: algebras are handled through bound quiver presentations
//! and bases of paths.

pub mod brauer;
pub mod check;
pub mod cut;
pub mod dot;
pub mod enumerate;
pub mod gentle;
pub mod names;
pub mod quiver;
pub mod report;
pub mod ssb;
pub mod surface;
pub mod text;
pub mod trivext;
