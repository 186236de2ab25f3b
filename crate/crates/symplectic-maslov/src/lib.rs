//! Symplectic linear algebra over ℚ in exact rational arithmetic.
//!
//! The crate provides:
//!
//! - symplectic spaces presented by an antisymmetric nondegenerate Gram
//!   matrix, with lagrangian subspaces, group elements, and Lie algebra
//!   elements as validated rational matrices ([`space`]);
//! - graphs of group elements as lagrangians of the doubled space
//!   (W̄ ⊕ W, (−⟨·|·⟩) ⊕ ⟨·|·⟩);
//! - the Kashiwara form of a lagrangian triple — the cyclic form
//!   q(x₁,x₂,x₃) = ⟨x₁|x₂⟩ + ⟨x₂|x₃⟩ + ⟨x₃|x₁⟩ on the kernel of the sum
//!   map, with the radical split off — together with Witt classes of
//!   longer tuples by the chain rule, the closed dimension formula, and
//!   metaplectic cocycle values γ_ψ(τ(ℓ, gℓ, gg′ℓ)) ([`maslov`]);
//! - Cayley transforms C_x = 2(x−1)(x+1)⁻¹ with their exact inverse
//!   x = (2+X)(2−X)⁻¹, and the quadratic forms q[X](w₁|w₂) = ⟨Xw₁|w₂⟩
//!   attached to invertible Lie algebra elements ([`cayley`]).
//!
//! Subspaces and matrices live over ℚ; a place enters only when a
//! quadratic form or a Weil index is extracted.

pub mod cayley;
pub mod maslov;
pub mod space;

pub use cayley::{cayley, cayley_inverse, q_of_x};
pub use maslov::{cocycle_value, kashiwara_form, maslov_dim, maslov_form, maslov_witt};
pub use space::{graph, Lagrangian, SpElement, SpLieElement, SympSpace};
