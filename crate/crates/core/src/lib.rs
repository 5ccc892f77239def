//! Exact checks of when finite point sets in projective space impose
//! independent conditions on homogeneous forms.

pub mod algebra;
pub mod conditions;
pub mod error;
pub mod generators;
pub mod geom;
pub mod incidence;
pub mod io;
pub mod poly;
pub mod theorems;

pub use algebra::{Field, FieldDescriptor, Fp};

pub type Rational = num_rational::BigRational;
pub type F101 = Fp<101>;
pub type F1009 = Fp<1009>;
pub type F7919 = Fp<7919>;
pub type F32003 = Fp<32003>;
