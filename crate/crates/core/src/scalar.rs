use num::traits::Num;
use std::fmt::Debug;
use std::ops::Neg;

/// Field-like scalar for the matrix core.
///
/// Elimination divides by pivots and tests entries against zero, so the type
/// must support exact arithmetic for the results to be exact; `BigRational`
/// is the intended instantiation.
pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + Debug {}

/// Embed a small non-negative integer into the scalar field by repeated doubling.
pub fn from_usize<T: Scalar>(n: usize) -> T {
    let mut acc = T::zero();
    let mut bit = T::one();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + bit.clone();
        }
        n >>= 1;
        if n > 0 {
            bit = bit.clone() + bit;
        }
    }
    acc
}

/// Embed a small signed integer into the scalar field.
pub fn from_i64<T: Scalar>(n: i64) -> T {
    if n < 0 {
        -from_usize::<T>(n.unsigned_abs() as usize)
    } else {
        from_usize::<T>(n as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rati, Rat};

    #[test]
    fn embeds_integers() {
        assert_eq!(from_usize::<Rat>(0), rati(0));
        assert_eq!(from_usize::<Rat>(7), rati(7));
        assert_eq!(from_i64::<Rat>(-12), rati(-12));
        assert_eq!(from_i64::<f64>(-3), -3.0);
    }
}
