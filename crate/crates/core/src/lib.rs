//! Certified simultaneous polynomial root finding.
//!
//! The toolkit runs the simultaneous (Weierstrass / Durand–Kerner) iteration
//! and, more importantly, certifies its inputs: from a polynomial and a
//! vector of distinct approximations alone it computes the quantity
//! `E = ‖W_f(x)/d(x)‖_p` and, when `E` clears a closed-form threshold,
//! produces mutually disjoint disks each guaranteed to contain exactly one
//! zero. A calculus of radius conversions relates the computable condition
//! to classical closeness-to-roots conditions, and a seeded oracle harness
//! verifies every certificate against ground truth.
//!
//! Modules:
//! - [`numerics`]: polynomials, guess vectors, p-norms, distance machinery.
//! - [`weierstrass`]: the correction, one step, and the iteration driver.
//! - [`certify`]: `E`, the radius functions, and the inclusion-disk
//!   certificates.
//! - [`condition`]: conversions between closeness-condition families and the
//!   classical radii.
//! - [`oracle`]: ground-truth instances, certificate verification, and
//!   randomized soundness surveys.

// Guards written as `!(t >= 0.0)` are deliberate: NaN must take the
// rejection branch, which the suggested `partial_cmp` rewrite obscures.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod certify;
pub mod condition;
pub mod error;
pub mod numerics;
pub mod oracle;
pub mod serde_ext;
pub mod weierstrass;

pub use num_complex;
pub use num_complex::Complex64;

pub use certify::{
    alpha, beta, braess_hadeler_disks, certify_fixed_r, certify_gamma, certify_main, compute_e,
    disjointness_check, gamma, gamma_bound, localize_with_c, main_bound, root_proximity_bound,
    Certificate, Certifier, InclusionDisk, TheoremKind, INFLATION,
};
pub use condition::{
    check_condition, classical_radius, condition_value, convert_first_to_second,
    convert_first_to_third, convert_first_to_third_simple, convert_second_to_third,
    convert_second_to_third_simple, prop41_inequality_holds, ClassicalRadius, ConditionKind,
    ConditionType, ConversionResult, NormForm,
};
pub use error::{Error, Result};
pub use numerics::{
    componentwise_ratio, conjugate_exponent, distance_vector, norm_constants, p_norm, separation,
    DistanceVector, GuessVector, PNormSpec, Polynomial,
};
pub use oracle::{
    perturbed_guess, polynomial_from_roots, random_instance, survey, verify_certificate,
    GroundTruthInstance, Histogram, SurveyConfig, SurveyReport, TheoremTally, VerificationRecord,
};
pub use weierstrass::{
    errors_to_reference, iterate, weierstrass_correction, weierstrass_step, CorrectionVector,
    IterationStatus, IterationTrace,
};
