//! Constructive transformations between coloring problems.
//!
//! - [`psi_transform`] turns a list coloring instance into an interval
//!   instance by hanging a pendant vertex off `v` for every color missing
//!   from `L(v)`, with the pendant pinned to that color.
//! - [`modular_lift`] turns a proper `k`-coloring into a coloring from any
//!   assignment of length-`k` intervals by picking, in each interval, the
//!   unique element in the vertex's residue class mod `k`.

mod lift;
mod psi;

pub use lift::{modular_lift, residue_class, LiftResult};
pub use psi::{psi_transform, restrict_witness, PsiResult};
