//! Floating-point scalar abstraction.
//!
//! All numerics in this crate are generic over the real scalar type so the
//! same code instantiates at `f32` and `f64`. Concrete aliases for the
//! double-precision instantiation live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar type underlying all matrices, rates, and frequencies.
pub trait Scalar:
    Float + FloatConst + NumAssign + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lift an `f64` literal into the scalar type.
    fn real(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    /// Complex unit `i`.
    fn i() -> Complex<Self> {
        Complex::new(Self::zero(), Self::one())
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Complex number over a generic scalar.
pub type C<T> = Complex<T>;

/// Real part as a complex value.
pub fn cr<T: Scalar>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

/// Imaginary part as a complex value.
pub fn ci<T: Scalar>(x: T) -> C<T> {
    Complex::new(T::zero(), x)
}
