//! Brauer groups, Amitsur subgroups and indices of varieties obtained by
//! pinching a cover along a finite closed subscheme.
//!
//! A [`PinchingConfig`] describes the cover `X̃`, the pinch locus `Y` and the
//! residue-field extensions along `Ỹ → Y`. [`analyze`] evaluates the
//! structure theorems on it, and [`oracle`] recomputes the exact part of the
//! answer by enumerating subgroups of ℚ/ℤ.
//!
//! ```
//! use brauer_pinch::{analyze, CoverData, FieldSpec, PinchPoint, PinchingConfig};
//!
//! let k = FieldSpec::p_adic(3);
//! let y = PinchPoint::separable(&k, "y", 1, &[2, 4]).unwrap();
//! let config = PinchingConfig::new(CoverData::ch0_trivial(k), vec![y]);
//! let report = analyze(&config).unwrap();
//! assert_eq!(report.br1_pinched.to_string(), "Q/Z (+) Z/2");
//! ```

pub mod cli;
pub mod error;
pub mod field;
pub mod oracle;
pub mod order;
pub mod pinch;
pub mod qz;
pub mod theorems;

pub use error::{Error, Result};
pub use field::{ExtensionSpec, FieldKind, FieldSpec};
pub use order::Order;
pub use pinch::{CoverData, CoverKind, PinchPoint, PinchingConfig, Violation};
pub use qz::{AbGroup, Exponent, FiniteGroup, GroupOrder, QzSubgroup};
pub use theorems::{analyze, BrauerReport, Theorem};
