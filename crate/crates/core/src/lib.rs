//! Reducibility of parabolically induced discrete series for affine Hecke
//! algebras of type `B_n` with labels `q₂ = q₁^m`, at real central characters.
//!
//! An induction datum `(n, m, κ, μ)` fixes the Levi `A_{κ_1-1} × … × B_{|μ|}`
//! and the residual point of its `B` factor. The induced representation splits
//! into `2^d` summands, where `d` counts the distinct parts of `κ` whose strip
//! glues onto the m-tableau of `μ`; see [`rgroup::r_group`].
//!
//! ```
//! use hecke_rgroup::{r_group, InductionDatum, Partition, Rational};
//!
//! let datum = InductionDatum::new(
//!     36,
//!     Rational::from_int(3),
//!     Partition::new(vec![11, 7, 4, 3]),
//!     Partition::new(vec![4, 3, 2, 1, 1]),
//! )
//! .unwrap();
//! let result = r_group(&datum);
//! assert_eq!(result.gluable_lengths, vec![11, 7]);
//! assert_eq!(result.component_count, 4);
//! ```

pub mod cfun;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod rgroup;
pub mod splitting;
pub mod sweeps;
pub mod symbols;
pub mod tableau;
pub mod weyl;

pub use error::{Error, Result};
pub use partition::{Bipartition, BoxCoord, Partition};
pub use rational::Rational;
pub use rgroup::{r_group, InductionDatum, RGroupResult};
pub use splitting::{split, SplitResult};
pub use symbols::{Symbol, SymbolVariant};
pub use weyl::SignedPermutation;
