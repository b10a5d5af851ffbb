//! The simultaneous correction `W_i(x) = f(x_i) / (a0 * prod_{j!=i}(x_i - x_j))`
//! and the iteration `x <- x - W_f(x)` built on it, with a trace suitable for
//! convergence diagnostics.
//!
//! The denominator product is evaluated left-to-right without rescaling;
//! degrees here are desk-scale (n <= 50), so overflow of the product is not a
//! practical concern.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{GuessVector, Polynomial};

/// The vector of simultaneous corrections at a guess.
///
/// It vanishes (up to round-off) exactly when the guess is a root-vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionVector {
    values: Vec<Complex64>,
}

impl CorrectionVector {
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Max modulus of the corrections.
    pub fn norm_inf(&self) -> f64 {
        self.values.iter().map(|w| w.norm()).fold(0.0, f64::max)
    }
}

/// How an iteration run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IterationStatus {
    /// Relative correction-norm test met.
    Converged,
    /// Budget exhausted before the tolerance was met.
    MaxIterations,
    /// A step produced a non-finite or degenerate iterate.
    DivergedNonfinite,
}

/// Full record of an iteration run.
///
/// `iterates[0]` is the starting guess; `correction_norms` holds the inf-norm
/// of the correction evaluated at each recorded iterate (so the last entry is
/// the norm that triggered convergence, when it did). `error_ratios` is filled
/// only when a reference root-vector is supplied: entry k is
/// `e_{k+1} / e_k^2` with `e_k` the inf-norm distance of iterate k to the
/// reference, skipping pairs where `e_k` is exactly zero.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub iterates: Vec<GuessVector>,
    pub correction_norms: Vec<f64>,
    pub status: IterationStatus,
    pub error_ratios: Vec<f64>,
}

impl IterationTrace {
    /// The last iterate reached.
    pub fn final_guess(&self) -> &GuessVector {
        self.iterates
            .last()
            .expect("trace holds at least the start")
    }

    /// Number of steps actually taken (iterate count minus the start).
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }
}

fn validate(f: &Polynomial, x: &GuessVector) -> Result<()> {
    if x.len() != f.degree() {
        return Err(Error::DimensionMismatch {
            expected: f.degree(),
            got: x.len(),
        });
    }
    if !x.is_distinct() {
        return Err(Error::DegenerateGuess("coinciding components"));
    }
    Ok(())
}

/// The correction vector `W_f(x)`.
pub fn weierstrass_correction(f: &Polynomial, x: &GuessVector) -> Result<CorrectionVector> {
    validate(f, x)?;
    let c = x.components();
    let a0 = f.leading();
    let mut values = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let mut denom = a0;
        for j in 0..c.len() {
            if j != i {
                denom *= c[i] - c[j];
            }
        }
        let w = f.eval(c[i]) / denom;
        if !w.re.is_finite() || !w.im.is_finite() {
            return Err(Error::NonfiniteArithmetic("correction overflowed"));
        }
        values.push(w);
    }
    Ok(CorrectionVector { values })
}

/// One sweep of the simultaneous iteration: `x - W_f(x)`.
pub fn weierstrass_step(f: &Polynomial, x: &GuessVector) -> Result<GuessVector> {
    let w = weierstrass_correction(f, x)?;
    let next = x
        .components()
        .iter()
        .zip(w.values())
        .map(|(xi, wi)| xi - wi)
        .collect();
    Ok(GuessVector::new(next))
}

/// Runs the iteration from `x0` until the relative correction-norm test
/// `|W|_inf <= tol * max(1, |x|_inf)` is met or `max_iter` steps are taken.
///
/// Mid-run failures (non-finite values, components driven together) end the
/// trace with [`IterationStatus::DivergedNonfinite`] rather than erroring;
/// only invalid arguments error out.
pub fn iterate(
    f: &Polynomial,
    x0: &GuessVector,
    max_iter: usize,
    tol: f64,
    reference: Option<&GuessVector>,
) -> Result<IterationTrace> {
    if max_iter < 1 {
        return Err(Error::Domain("max_iter must be at least 1".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol = {tol} must be positive")));
    }
    validate(f, x0)?;
    if let Some(r) = reference {
        if r.len() != x0.len() {
            return Err(Error::DimensionMismatch {
                expected: x0.len(),
                got: r.len(),
            });
        }
    }

    let mut iterates = vec![x0.clone()];
    let mut correction_norms = Vec::new();
    let mut status = IterationStatus::MaxIterations;

    let mut current = x0.clone();
    for _ in 0..=max_iter {
        let w = match weierstrass_correction(f, &current) {
            Ok(w) => w,
            Err(_) => {
                status = IterationStatus::DivergedNonfinite;
                break;
            }
        };
        let norm = w.norm_inf();
        correction_norms.push(norm);
        if norm <= tol * current.norm_inf().max(1.0) {
            status = IterationStatus::Converged;
            break;
        }
        if iterates.len() > max_iter {
            // budget spent: max_iter steps already recorded
            break;
        }
        let next: Vec<Complex64> = current
            .components()
            .iter()
            .zip(w.values())
            .map(|(xi, wi)| xi - wi)
            .collect();
        if next.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            status = IterationStatus::DivergedNonfinite;
            break;
        }
        current = GuessVector::new(next);
        iterates.push(current.clone());
    }

    let error_ratios = match reference {
        Some(r) => error_ratios(&iterates, r),
        None => Vec::new(),
    };

    Ok(IterationTrace {
        iterates,
        correction_norms,
        status,
        error_ratios,
    })
}

/// Inf-norm distances of each iterate to a reference root-vector.
pub fn errors_to_reference(iterates: &[GuessVector], reference: &GuessVector) -> Vec<f64> {
    iterates
        .iter()
        .map(|x| {
            x.components()
                .iter()
                .zip(reference.components())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
        })
        .collect()
}

fn error_ratios(iterates: &[GuessVector], reference: &GuessVector) -> Vec<f64> {
    let errs = errors_to_reference(iterates, reference);
    errs.windows(2)
        .filter(|w| w[0] > 0.0)
        .map(|w| w[1] / (w[0] * w[0]))
        .collect()
}
