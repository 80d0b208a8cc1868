//! Cell decompositions of the compactified Jacobian of the curve
//! singularity `x^p = y^q`, through their combinatorics: semi-modules over
//! the numerical semigroup `<p, q>`, Young diagrams under the `(p, q)`
//! staircase, and the cell geometry that computes the dimension of each
//! affine cell.
//!
//! The main entry points are [`Semigroup`], [`SemiModule`],
//! [`YoungDiagram`], [`certify`], [`dual_map`] and the generating functions
//! in [`qtpoly`].
//!
//! ```
//! use jacobi_cells::{SemiModule, Semigroup, YoungDiagram};
//!
//! let semigroup = Semigroup::new(5, 7)?;
//! let module = SemiModule::from_diagram(&semigroup, &YoungDiagram::new(vec![4, 2])?)?;
//! assert_eq!(module.p_basis(), vec![0, 7, 8, 11, 14]);
//! assert_eq!(module.dimension(), 7);
//! # Ok::<(), jacobi_cells::Error>(())
//! ```

pub mod cellgeom;
pub mod diagram;
pub mod error;
pub mod gmap;
pub mod qtpoly;
pub mod semigroup;
pub mod semimodule;

pub use cellgeom::{certify, CellCertificate, Part, TaggedBox};
pub use diagram::{dinv, h_plus, label, LatticeBox, Staircase, YoungDiagram};
pub use error::{Error, Result};
pub use gmap::{
    check_dual_map_bijective, dual_diagram, dual_map, reconstruct_from_dual, DualMapPermutation,
};
pub use qtpoly::LaurentBivariate;
pub use semigroup::Semigroup;
pub use semimodule::{enumerate_semimodules, SemiModule};
