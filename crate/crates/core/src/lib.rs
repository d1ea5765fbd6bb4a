//! Exact computation of Drinfel'd centres of String 2-groups.
//!
//! The centre of a String 2-group `G_k` is a braided categorical group: an
//! abelian group of isomorphism classes together with a Q/Z-valued quadratic
//! form recording the self-braidings. This crate computes that data exactly
//! (no floating point on any decision path) for `G` any compact connected
//! Lie group presented as (torus x product of simple simply-connected
//! factors) / finite central subgroup, with an integer level.
//!
//! Layers, bottom up:
//! - [`qz`], [`matrix`]: exact Q/Z arithmetic and integer/rational linear
//!   algebra (Smith normal form, cokernels, saturations).
//! - [`abelian`], [`qform`]: finite abelian groups in invariant-factor form
//!   and quadratic forms on them (evaluation, enumeration, naming,
//!   isomorphism testing).
//! - [`root_data`]: Cartan matrices, the basic inner product on coroots,
//!   fundamental coweights, centres with coweight lifts.
//! - [`torus`]: centres of categorical tori and their maximal compact part.
//! - [`string_centre`]: the main pipeline for simply-connected, product and
//!   quotient groups, including level descent and the perp/quotient step.
//! - [`oracle`]: an independent brute-force construction of the centre for
//!   finite cyclic groups with explicit 3-cocycles, used for verification
//!   only.
//! - [`report`]: the batch interface behind the `stringcentre` CLI.

pub mod abelian;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod qform;
pub mod qz;
pub mod report;
pub mod root_data;
pub mod string_centre;
pub mod table;
pub mod torus;

pub use error::{Error, Result};
pub use qz::{qz, QZElem};
