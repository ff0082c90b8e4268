//! Exact truncated bosonic Fock-space algebra and the Laurent expansion of
//! the vertex operator `V(z) = exp(Σ zⁿ f_n) exp(Σ z⁻ⁿ g_n*)` into
//! operator-valued Schur coefficients `S_w`.
//!
//! All arithmetic is over Gaussian rationals, so every identity is checked
//! by exact equality at finite mode, degree and order cutoffs.

pub mod combinatorics;
pub mod error;
pub mod fock;
pub mod laurent;
pub mod multi_index;
pub mod poly;
pub mod render;
pub mod scalar;
pub mod verify;
pub mod vertex;

pub use combinatorics::{count_pq, enumerate_pq, enumerate_weight, Cutoffs, TuplePair};
pub use error::{Error, Result};
pub use fock::{
    annihilate, check_multiplicability, coherent, create, exp_annihilate, fock_mul, inner, power_annihilate_coherent,
    BasisConfig, FockVector, OneParticleVector,
};
pub use laurent::{LaurentPoly, LaurentSlice};
pub use multi_index::MultiIndex;
pub use poly::Polynomial;
pub use scalar::Scalar;
pub use vertex::{
    apply_schur, elementary_schur, matrix_element_closed, matrix_element_expansion, partial_exp,
    power_matrix_element, power_matrix_element_operator, schur_terms, truncated_expansion_element,
    verify_lemma_term, SchurOperator, SchurTerm,
};
