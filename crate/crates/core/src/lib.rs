//! Exact characteristic-class computations on smooth hypersurfaces, aimed at
//! Chern classes of Ulrich bundles and the invariants of their degeneracy loci.

pub mod charcls;
pub mod cohring;
pub mod degloc;
pub mod error;
pub mod exactnum;
pub mod golden;
pub mod hygeo;
pub mod pipeline;
pub mod report;
pub mod ulrich;

pub use error::{Error, Result};
