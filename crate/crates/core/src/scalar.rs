//! Scalar abstraction. All numeric code in this crate is generic over [`Real`],
//! implemented for `f32` and `f64`. Tests and the CLI run in `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, NumAssignOps};

/// Floating-point scalar the tensor and network code is generic over.
pub trait Real:
    Float + NumAssignOps + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from `f64`; total for `f32`/`f64`.
    fn from_f64(v: f64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("f64 -> Real conversion")
    }

    /// Widening conversion to `f64`.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real -> f64 conversion")
    }

    /// Exact conversion from a unit count (used by normalization factors).
    fn from_usize(v: usize) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("usize -> Real conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}
