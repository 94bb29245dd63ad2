//! Exact computations with group-graded quasialgebras.
//!
//! The layers, bottom up:
//!
//! * [`group`]: finite abelian groups `Z_(n_1) x ... x Z_(n_m)`;
//! * [`scalar`]: unit monomials over named generators, and cyclotomic numbers;
//! * [`cocycle`]: dense 3-cocycle and 2-cochain tables, the cocycle checker,
//!   named families and the `Z_3` parametrisation;
//! * [`quasialg`]: monomial algebras checked against a cocycle, including the
//!   octonions;
//! * [`quasimatrix`]: the quasimatrix algebras `M_(n,phi)` and their product
//!   on concrete matrices;
//! * [`classify`]: brute-force enumeration and cohomology classes over `mu_N`.
//!
//! ```
//! use quasialg::cocycle::{check_cocycle, octonion_cocycle};
//!
//! let report = check_cocycle(&octonion_cocycle());
//! assert!(report.passed());
//! assert_eq!(report.checked_quadruples, 4096);
//! ```

pub mod classify;
pub mod cocycle;
pub mod error;
pub mod group;
pub mod quasialg;
pub mod quasimatrix;
pub mod scalar;

pub use classify::{coboundary_search, cohomology_classes, enumerate_cocycles, SearchConfig};
pub use cocycle::{check_cocycle, coboundary, BicharacterTable, CochainTable, CocycleTable};
pub use error::{Error, Result};
pub use group::{GroupElem, GroupSpec};
pub use quasialg::QuasiAlgebra;
pub use quasimatrix::{qmat_mul, CycloMatrix, QuasimatrixAlgebra};
pub use scalar::{Cyclotomic, Embedding, GeneratorSpec, UnitScalar};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups-and-scalars.md")]
    mod groups_and_scalars {}
    #[doc = include_str!("../../../book/src/cocycles.md")]
    mod cocycles {}
    #[doc = include_str!("../../../book/src/z3.md")]
    mod z3 {}
    #[doc = include_str!("../../../book/src/quasialgebras.md")]
    mod quasialgebras {}
    #[doc = include_str!("../../../book/src/quasimatrices.md")]
    mod quasimatrices {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
