//! Frame construction and the basic frame calculus.

mod completion;
mod frame;
mod generate;
pub mod io;
pub mod rng;
mod subset;
mod subspace;

pub use completion::{complete_to_tight, TightCompletion};
pub use frame::{operator_of, BesselCheck, Field, Frame, FrameBounds};
pub use generate::{generate, random_gaussian, random_isometry, random_parseval, FrameKind};
pub use subset::IndexSubset;
pub use subspace::{coordinate_isometry, embed_subspace_frame, SubspaceFrame};

pub(crate) use frame::max_deviation;
