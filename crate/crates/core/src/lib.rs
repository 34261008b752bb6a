//! Truth tables, Walsh spectra and cryptographic criteria for Boolean
//! functions, with fast block-string builders for the rotation-symmetric
//! quadratic and cubic functions `f_2^n` and `f_3^n`.

mod bitvec;

pub mod affine;
pub mod anf;
pub mod blocks;
pub mod builders;
pub mod criteria;
pub mod error;
pub mod monomial;
pub mod theory;
pub mod truth_table;
pub mod walsh;

pub use affine::{apply_affine_transform, AffineTransform, Gf2Matrix};
pub use anf::{AnfPolynomial, Monomial};
pub use blocks::{BitString, Block4, OpCounter};
pub use builders::{build_f2, build_f3, component_weights_f3, f2_table, f3_table};
pub use criteria::{
    correlation, is_bent, is_semi_bent_spectral, nonlinearity, pc_check, pc_profile, Dyadic,
    PcProfile,
};
pub use error::{Error, Result, MAX_VARS};
pub use monomial::{monomial_table_degree2, monomial_table_general, rots_orbit_anf};
pub use truth_table::TruthTable;
pub use walsh::{walsh_transform, WalshSpectrum};
