//! Exact intersection theory for degree thresholds of very general
//! hypersurfaces in homogeneous varieties.
//!
//! The crate is organised around five computational pieces and a CLI:
//!
//! - [`grassmann_chow`]: the Chow ring of `G(k,n)` with Pieri/Giambelli
//!   multiplication, duality and an independent Schur-polynomial oracle.
//! - [`chern_fano`]: Chern classes of `Sym^d S*` on `G(2,N)` via Chern roots,
//!   the class of the Fano scheme of lines and classical line counts.
//! - [`variety_catalog`]: Picard-level data of Grassmannians, orthogonal and
//!   symplectic Grassmannians, flag varieties and products, with the
//!   hyperbolicity / lines classification.
//! - [`genus_bound`]: exact-rational genus lower bounds and the certified
//!   hyperbolicity constant.
//! - [`section_dominating`]: rank checks for section domination on projective
//!   spaces.
//! - [`cli`]: argument parsing and rendering for the `hypercert` binary.
//!
//! Everything is exact: integers are arbitrary precision and rationals are
//! reduced fractions. All values are immutable and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod chern_fano;
pub mod cli;
pub mod error;
pub mod genus_bound;
pub mod grassmann_chow;
pub mod section_dominating;
pub mod variety_catalog;

pub use error::{Error, Result};
