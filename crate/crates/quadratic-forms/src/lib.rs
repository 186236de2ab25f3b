//! Quadratic forms over the p-adic and real places of ℚ, with exact
//! arithmetic throughout: congruence diagonalization, determinant class,
//! Hasse invariant, signature, the Weil index γ_ψ(q) ∈ μ₈, Witt
//! classification and isometry decisions, and the trace-form
//! constructions on monogenic étale algebras.

pub mod diagonal;
pub mod monogenic;
pub mod qform;

pub use diagonal::congruence_diagonal;
pub use monogenic::{q1_q2_grams, trace_form, trace_form_gram, MonogenicAlgebra, QuadExt};
pub use qform::{isometric, normalize_class, witt_equal, QForm, WittClass};
