//! Exact computational 2-linear algebra over the rationals.
//!
//! The crate implements the strict 2-category of 2-term chain complexes of
//! finite-dimensional ℚ-vector spaces ([`ch2`]), finite skeletal 2-groups
//! presented by multiplication tables, actions, and 3-cocycles ([`grp`]),
//! bar-complex group cohomology with coefficients in a bimodule of matrices
//! ([`cohom`]), and representations of 2-groups on 2-term complexes together
//! with their 1- and 2-intertwiners ([`rep2`], [`rep1`]).  Every computation
//! is exact: scalars are arbitrary-precision rationals and equality means
//! equality.
//!
//! The numeric core is generic over a [`scalar::Scalar`] type; the concrete
//! aliases below fix the scalars to `num`'s `BigRational`, which is what the
//! file formats in [`io`] and the CLI operate on.

pub mod ch2;
pub mod cohom;
pub mod error;
pub mod grp;
pub mod io;
pub mod linalg;
pub mod rep1;
pub mod rep2;
pub mod sample;
pub mod scalar;

pub use error::{Error, Result, Violation};

/// Exact rational scalar: arbitrary-precision, always reduced, positive denominator.
pub type Rat = num::rational::BigRational;

pub type RatMatrix = linalg::Matrix<Rat>;
pub type RatTwoVect = ch2::TwoVect<Rat>;
pub type RatOneCell = ch2::OneCell<Rat>;
pub type RatTwoCell = ch2::TwoCell<Rat>;
pub type RatEqMorphism = ch2::EqMorphism<Rat>;
pub type RatBimodule = cohom::Bimodule<Rat>;
pub type RatCochain = cohom::Cochain<Rat>;
pub type RatRep1 = rep1::Rep1<Rat>;
pub type RatRepFull = rep2::RepFull<Rat>;
pub type RatRepReduced = rep2::RepReduced<Rat>;
pub type RatInter1 = rep2::Inter1<Rat>;
pub type RatInter2 = rep2::Inter2<Rat>;

/// Build a rational from an integer numerator and denominator.
///
/// Panics if `den == 0`; use [`io::parse_rat`] for untrusted input.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(num.into(), den.into())
}

/// Integer-valued rational.
pub fn rati(num: i64) -> Rat {
    rat(num, 1)
}
