//! Exact polynomial gcd and resultant by trail pseudo-division and the generalized
//! subresultant algorithm, over Z and Z[y].
//!
//! The main entry points are [`prs::gen_gcd`], [`prs::gen_resultant`] and
//! [`prs::resultant_any`]. [`prs::classic_gcd`] is the classical subresultant baseline.
//! The [`matrix`] module holds the determinant definitions the sequences are checked against.

pub mod error;
pub mod matrix;
pub mod poly;
pub mod prs;
pub mod pseudo;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
pub use matrix::{
    bareiss_det, build_mk, build_sk, det_poly, gcd_degree_detect, gcd_degree_report,
    prs_det_correspondence, sylvester_matrix, verify_prs_det_correspondence, DetMatrix,
    SplitPolicy, SplitSpec, SubresPoly,
};
pub use poly::Poly;
pub use prs::{
    classic_gcd, classic_resultant, gen_gcd, gen_resultant, resultant_any, run_traced, Algorithm,
    PrsStep, PrsTrace,
};
pub use pseudo::{gen_prem, prem, tprem, DivisionKind, GenPRem};
pub use ring::{Integer, Ring, SizeMeasure, YPoly};
pub use text::{format_poly, parse_poly, ParseError, TextCoeff};
