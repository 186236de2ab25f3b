//! Étale algebras with involution over local fields and the parameters
//! (K/K#, a, c) of regular semisimple conjugacy classes in classical
//! groups.
//!
//! The crate provides:
//!
//! - coefficient fields K# — finite extensions of ℚ_p (odd p), ℝ, and ℂ —
//!   with exact arithmetic, Hilbert symbols, and square classes
//!   ([`field`]);
//! - étale algebras K = ∏ K_i with involution, each factor split
//!   (K# × K# with the swap) or inert (K#(√d) with √d ↦ −√d), together
//!   with traces, norms, characteristic polynomials, Ṗ_a(a), and the
//!   sign character sgn_{K/K#} as a product of Hilbert symbols with the
//!   inert data d_i ([`algebra`]);
//! - validated class parameters in group mode (τ(a) = a⁻¹) and Lie mode
//!   (τ(a) = −a), their matrix realizations (Gram matrix of
//!   tr_{K/F}(c·τ(x)·y) and the multiplication operator of a), existence
//!   tests against reference twists, stable-orbit enumeration over sign
//!   vectors of the inert factors, and the two-block character κ
//!   ([`class_param`]);
//! - a JSON wire format for parameters ([`json`]).

pub mod algebra;
pub mod class_param;
pub mod field;
pub mod json;

pub use algebra::{poly_derivative, EtaleAlg, EtaleElem, Factor, FactorKind};
pub use class_param::{
    class_exists, kappa_pair, stable_orbit, ClassParam, GroupKind, HClassParam, Mode,
};
pub use field::{SharpElem, SharpField};
pub use json::{class_param_from_json, class_param_to_json};
