//! Exact arithmetic over the completions of ℚ used throughout the workspace.
//!
//! Everything here is computed in exact rational arithmetic — there is no
//! floating point anywhere. The crate provides:
//!
//! - [`Rat`]/[`Int`] scalars with p-adic valuations, residues, and square
//!   detection at a [`Place`] (an odd prime p or the real place; residue
//!   characteristic 2 is rejected at construction);
//! - signs ([`Sign`]) and eighth roots of unity ([`Mu8`]) as exact group
//!   elements;
//! - the residue fields 𝔽_q ([`Fq`], [`FqElem`]);
//! - finite extensions of ℚ_p presented as an unramified stage followed by an
//!   Eisenstein stage ([`ExtField`], [`ExtElem`]), with exact valuations,
//!   residues, squares and tame Hilbert symbols;
//! - Hilbert symbols and rank-one Weil indices over ℚ itself ([`symbols`]);
//! - exact linear algebra over ℚ ([`linalg`]) including characteristic
//!   polynomials, Smith reduction over ℤ_(p), and symplectic (Darboux) bases
//!   of unimodular alternating forms;
//! - dense polynomial arithmetic over ℚ and over 𝔽_p ([`poly`]).

pub mod error;
pub mod ext;
pub mod fq;
pub mod linalg;
pub mod place;
pub mod poly;
pub mod rat;
pub mod sign;
pub mod symbols;

pub use error::{BaseError, Result};
pub use ext::{ExtElem, ExtField};
pub use fq::{Fq, FqElem};
pub use linalg::Mat;
pub use place::{Place, PsiSpec};
pub use rat::{Int, Rat};
pub use sign::{Mu8, Sign};
