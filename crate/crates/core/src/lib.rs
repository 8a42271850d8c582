//! Exact computations for numerical semigroups `⟨A⟩`, their quotients
//! `⟨A⟩/p = {n : p·n ∈ ⟨A⟩}` and the representation generating functions
//! `RGF_p(x) = Σ_n d(p·n; A) x^n`.
//!
//! All arithmetic is exact (`num` big integers and rationals); nothing here
//! uses floating point.
//!
//! | module | contents |
//! |---|---|
//! | [`exactalg`] | dense polynomials, rational functions in x, truncated series |
//! | [`semigroup`] | certified membership sieves, Frobenius numbers, gaps, Apéry sets, denumerants |
//! | [`quotient`] | quotient sieves, the residue-tuple generator system, the three-generator table |
//! | [`rgf`] | `RGF_p` as a series and as a certified closed form |
//! | [`ctengine`] | constant terms in λ by partial fractions, over ℚ(x) |
//! | [`cli`] | the `nsq` command line |
//!
//! ```
//! use nsq::quotient::{generators_thm, frobenius_quotient, QuotientSpec};
//! use nsq::semigroup::Limits;
//!
//! let q = QuotientSpec::from_slice(&[5, 6], 3).unwrap();
//! let limits = Limits::default();
//! assert_eq!(generators_thm(&q, &limits).unwrap(), vec![2, 5]);
//! assert_eq!(frobenius_quotient(&q, &limits).unwrap(), Some(3));
//! ```
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```bash
//! cargo run --example semigroup_basics
//! cargo run --example quotient_by_p
//! cargo run --example residue_table
//! cargo run --example rgf_closed_form
//! cargo run --example consecutive_pair
//! cargo run --example constant_term
//! cargo run --example exact_algebra
//! cargo run --example cross_check
//! ```

pub mod cli;
pub mod ctengine;
pub mod error;
pub mod exactalg;
pub mod quotient;
pub mod rgf;
pub mod semigroup;

pub use error::{Error, Result};
pub use quotient::QuotientSpec;
pub use rgf::RgfRational;
pub use semigroup::{GeneratorList, Limits, MembershipTable};
