//! Irreducibility certificates for polynomials from Dumas valuations, with
//! exact arithmetic over `Z`, quadratic orders, pure cubic orders and
//! polynomial rings over them.

pub mod criterion;
pub mod error;
pub mod oracle;
pub mod par;
pub mod poly;
pub mod ring;
pub mod sample;
pub mod text;
pub mod valuation;
pub mod value;

pub use criterion::{certify, Certificate, Verdict};
pub use error::{Error, ParseError, Result};
pub use oracle::{bounded_factor_search, verify_witness, FactorWitness, SearchBudget};
pub use poly::{MultiIndex, Polynomial, UnivariateView, WeightVector};
pub use ring::{CubicOrder, Elem, PolyRing, QuadForm, QuadOrder, Ring};
pub use valuation::{Kind, PrimeCertificate, Valuation};
pub use value::ExtValue;
