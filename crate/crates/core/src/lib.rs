//! Exact computations in the braids-and-ties algebra E_n(u) and its
//! Partition Temperley-Lieb quotient PTL_n(u).
//!
//! The algebra, representation, quotient and trace code is generic over a
//! coefficient [`scalar::Field`]; the aliases below fix the common choices.

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod partition;
pub mod permutation;
pub mod ptl;
pub mod relations;
pub mod scalar;
pub mod tensor;
pub mod trace;

pub use algebra::{AlgebraElement, BasisElement, BasisKey, BasisTables, Engine};
pub use error::{Error, Result};
pub use partition::SetPartition;
pub use permutation::Permutation;
pub use scalar::{Field, Fp, Poly2, RationalFunction};

/// Q(√u), the default coefficient field.
pub type Scalar = RationalFunction;
/// Values of the trace: polynomials in A, B over Q(√u).
pub type TraceValue = Poly2<RationalFunction>;
/// E_n over Q(√u).
pub type SymbolicEngine = Engine<RationalFunction>;
/// E_n at a rational value of √u.
pub type RationalEngine = Engine<num_rational::BigRational>;
/// E_n at a value of √u in F_p, p = 2^61 - 1.
pub type ModularEngine = Engine<Fp>;
/// E_n in floating point, for quick numerical experiments only.
pub type FloatEngine = Engine<f64>;
