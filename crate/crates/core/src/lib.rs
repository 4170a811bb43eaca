//! Intersection theory on the Picard lattice of the projective plane blown up
//! at up to eight general points, with a classifier for classes containing
//! smooth rational curves and the dimensions of their spaces of rational maps.
//!
//! ```
//! use delpezzo::{moduli, Surface};
//!
//! let cubic = Surface::cubic();
//! let beta = cubic.parse_class("3;2,1,1,1,1,1").unwrap();
//! assert_eq!(cubic.self_intersection(&beta).unwrap(), 0);
//! assert_eq!(moduli::dim_mor(&cubic, &beta).unwrap(), 4);
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod moduli;
pub mod search;
pub mod table;
pub mod weyl;

pub use classify::{has_smooth_rational_representative, Coverage, Reason, Verdict};
pub use error::{Error, Result};
pub use lattice::{DivisorClass, Surface};
pub use moduli::ClassReport;
pub use table::{generate_table, Table, TableRow};
pub use weyl::{OrbitResult, Root};
