//! Computable localization certificates.
//!
//! Everything is driven by the single quantity `E = ‖W_f(x)/d(x)‖_p`: when it
//! is small enough, the disks centered at the guess components with radii
//! proportional to the corrections are mutually disjoint and each contains
//! exactly one zero of the polynomial. A satisfied certificate additionally
//! implies that all zeros of the polynomial are simple.
//!
//! Certificates are conservative at desk precision: `E` is inflated by
//! `1 + 1e-12` before every threshold comparison, so a value that rounds just
//! below a bound its exact counterpart exceeds still fails. The inflation
//! factor is recorded in the certificate. This is not interval arithmetic —
//! the guarantee is soundness against last-digit rounding, not against
//! adversarial cancellation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    componentwise_ratio, distance_vector, p_norm, DistanceVector, GuessVector, PNormSpec,
    Polynomial,
};
use crate::serde_ext::{complex_pair, ext_real};
use crate::weierstrass::{weierstrass_correction, CorrectionVector};

/// Relative inflation applied to `E` before every threshold comparison.
pub const INFLATION: f64 = 1e-12;

/// Radicand values this close to zero are treated as exactly zero: at the
/// admissible boundary the radicand vanishes analytically, and evaluation
/// round-off may land on either side.
const RADICAND_SNAP: f64 = 1e-14;

/// A closed disk in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InclusionDisk {
    #[serde(with = "complex_pair")]
    pub center: Complex64,
    pub radius: f64,
}

impl InclusionDisk {
    /// Membership test, boundary included.
    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }

    /// True iff the two closed disks have no common point (strict gap).
    pub fn is_disjoint_from(&self, other: &InclusionDisk) -> bool {
        (self.center - other.center).norm() > self.radius + other.radius
    }
}

/// Which localization statement a certificate instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremKind {
    /// Threshold `1/(1+√a)²`, admissible factors `[α(E), β(E)]`.
    #[serde(rename = "main-localization")]
    MainLocalization,
    /// Tighter threshold `1/(2(a+1))`, admissible factors `[γ(E), β(E)]`.
    #[serde(rename = "gamma-corollary")]
    GammaCorollary,
    /// Caller-chosen level `R`, radii `|Wᵢ|/(1−(a+1)R)`.
    #[serde(rename = "fixed-R-corollary")]
    FixedRCorollary,
    /// Caller-chosen disk factor `c`, checked against both raw inequalities.
    #[serde(rename = "prop-localization")]
    PropLocalization,
}

/// Outcome of a localization check.
///
/// When `satisfied` is true, the `disks` are pairwise disjoint and each
/// contains exactly one zero of the polynomial (so in particular all zeros
/// are simple). When false, `failure` names the inequality that failed and
/// the disk fields are absent.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: TheoremKind,
    #[serde(with = "ext_real")]
    pub p: f64,
    #[serde(with = "ext_real")]
    pub q: f64,
    pub a: f64,
    pub b: f64,
    #[serde(rename = "E", with = "ext_real")]
    pub e: f64,
    pub bound: f64,
    pub satisfied: bool,
    pub strict_boundary_case: bool,
    pub c_interval: Option<[f64; 2]>,
    pub c_used: Option<f64>,
    pub inflation: f64,
    pub disks: Vec<InclusionDisk>,
    #[serde(skip)]
    pub failure: Option<String>,
}

/// Largest `E` the widest localization statement accepts: `1/(1+√a)²`.
pub fn main_bound(a: f64) -> f64 {
    let s = 1.0 + a.sqrt();
    1.0 / (s * s)
}

/// Largest `E` the rational-factor variant accepts: `1/(2(a+1))`. This is
/// also the right end of the admissible `R` range of the fixed-level variant.
pub fn gamma_bound(a: f64) -> f64 {
    1.0 / (2.0 * (a + 1.0))
}

fn check_a(a: f64) -> Result<()> {
    if !a.is_finite() || a < 1.0 {
        return Err(Error::Domain(format!(
            "constant a = {a} must be in [1, inf)"
        )));
    }
    Ok(())
}

/// Radicand of the smaller-root formula, snapped to zero near the boundary.
/// `None` means genuinely negative (argument beyond the admissible range).
fn radicand(t: f64, a: f64) -> Option<f64> {
    let s = 1.0 - (a - 1.0) * t;
    let r = s * s - 4.0 * t;
    if r.abs() <= RADICAND_SNAP {
        Some(0.0)
    } else if r < 0.0 {
        None
    } else {
        Some(r)
    }
}

fn alpha_unchecked(t: f64, a: f64) -> Option<f64> {
    let r = radicand(t, a)?;
    Some(2.0 / (1.0 - (a - 1.0) * t + r.sqrt()))
}

/// Smallest admissible disk factor: `α(t) = 2/(1−(a−1)t+√((1−(a−1)t)²−4t))`.
///
/// Defined for `0 ≤ t ≤ 1/(1+√a)²`. The domain test is the sign of the
/// radicand itself (with the snap window), so a `t` that sits on the right
/// endpoint up to round-off is accepted and evaluates to `β(t)` there; the
/// `s > 0` guard excludes the far region where the radicand turns positive
/// again without meaning anything.
pub fn alpha(t: f64, a: f64) -> Result<f64> {
    check_a(a)?;
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("t = {t} must be non-negative")));
    }
    if 1.0 - (a - 1.0) * t <= 0.0 {
        return Err(Error::Domain(format!("t = {t} beyond 1/(1+sqrt a)^2")));
    }
    alpha_unchecked(t, a).ok_or_else(|| Error::Domain(format!("t = {t} beyond 1/(1+sqrt a)^2")))
}

/// Largest admissible disk factor: `β(t) = 2/(1−(a−1)t)`.
pub fn beta(t: f64, a: f64) -> Result<f64> {
    check_a(a)?;
    if !(t >= 0.0) || (a - 1.0) * t >= 1.0 {
        return Err(Error::Domain(format!("t = {t} outside [0, 1/(a-1))")));
    }
    Ok(2.0 / (1.0 - (a - 1.0) * t))
}

/// Rational stand-in for `α`: `γ(t) = 1/(1−(a+1)t)`, defined for
/// `0 ≤ t < 1/(a+1)`.
pub fn gamma(t: f64, a: f64) -> Result<f64> {
    check_a(a)?;
    if !(t >= 0.0) || (a + 1.0) * t >= 1.0 {
        return Err(Error::Domain(format!("t = {t} outside [0, 1/(a+1))")));
    }
    Ok(1.0 / (1.0 - (a + 1.0) * t))
}

/// The computable certification quantity `E = ‖W_f(x)/d(x)‖_p` (raw, not
/// inflated — inflation happens at comparison time inside the certifiers).
pub fn compute_e(f: &Polynomial, x: &GuessVector, spec: &PNormSpec) -> Result<f64> {
    Certifier::new(f, x, spec).map(|c| c.e())
}

/// True iff `b·c·‖u/d(x)‖_p < 1` (with the conservative inflation), which
/// guarantees the closed disks centered at the components of `x` with radii
/// `c·|uᵢ|` are pairwise disjoint.
pub fn disjointness_check(
    x: &GuessVector,
    u: &[Complex64],
    c: f64,
    spec: &PNormSpec,
) -> Result<bool> {
    if !(c >= 0.0) {
        return Err(Error::Domain(format!("c = {c} must be non-negative")));
    }
    let d = distance_vector(x)?;
    let ratio = componentwise_ratio(u, d.values())?;
    let norm = p_norm(&ratio, spec);
    Ok(spec.b * c * norm * (1.0 + INFLATION) < 1.0)
}

/// Weighted all-zeros enclosure: disk `i` is centered at `xᵢ` with radius
/// `(1/wᵢ)·Σⱼ wⱼ|Wⱼ(x)|`. The union of the disks contains every zero of `f`
/// (no per-disk claim).
pub fn braess_hadeler_disks(
    f: &Polynomial,
    x: &GuessVector,
    weights: &[f64],
) -> Result<Vec<InclusionDisk>> {
    if weights.len() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: weights.len(),
        });
    }
    if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
        return Err(Error::InvalidWeights);
    }
    let w = weierstrass_correction(f, x)?;
    let weighted_sum: f64 = weights
        .iter()
        .zip(w.values())
        .map(|(&ai, wi)| ai * wi.norm())
        .sum();
    Ok(x.components()
        .iter()
        .zip(weights)
        .map(|(&center, &ai)| InclusionDisk {
            center,
            radius: weighted_sum / ai,
        })
        .collect())
}

/// Shared state for certifying one `(f, x, p)` instance several ways without
/// recomputing the correction, the distances, or `E`.
#[derive(Debug, Clone)]
pub struct Certifier {
    spec: PNormSpec,
    correction: CorrectionVector,
    distances: DistanceVector,
    centers: Vec<Complex64>,
    e: f64,
}

impl Certifier {
    pub fn new(f: &Polynomial, x: &GuessVector, spec: &PNormSpec) -> Result<Self> {
        if spec.n != f.degree() {
            return Err(Error::DimensionMismatch {
                expected: f.degree(),
                got: spec.n,
            });
        }
        let correction = weierstrass_correction(f, x)?;
        let distances = distance_vector(x)?;
        let ratio = componentwise_ratio(correction.values(), distances.values())?;
        let e = p_norm(&ratio, spec);
        Ok(Self {
            spec: *spec,
            correction,
            distances,
            centers: x.components().to_vec(),
            e,
        })
    }

    /// The raw (uninflated) certification quantity.
    pub fn e(&self) -> f64 {
        self.e
    }

    /// `E` after conservative inflation, the value actually compared.
    pub fn e_inflated(&self) -> f64 {
        self.e * (1.0 + INFLATION)
    }

    pub fn correction(&self) -> &CorrectionVector {
        &self.correction
    }

    pub fn distances(&self) -> &DistanceVector {
        &self.distances
    }

    fn disks(&self, c: f64) -> Vec<InclusionDisk> {
        self.centers
            .iter()
            .zip(self.correction.values())
            .map(|(&center, wi)| InclusionDisk {
                center,
                radius: c * wi.norm(),
            })
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn certificate(
        &self,
        theorem: TheoremKind,
        bound: f64,
        strict: bool,
        c_interval: Option<[f64; 2]>,
        c_used: Option<f64>,
        satisfied: bool,
        failure: Option<String>,
    ) -> Certificate {
        Certificate {
            theorem,
            p: self.spec.p,
            q: self.spec.q,
            a: self.spec.a,
            b: self.spec.b,
            e: self.e,
            bound,
            satisfied,
            strict_boundary_case: strict,
            c_interval: if satisfied { c_interval } else { None },
            c_used: if satisfied { c_used } else { None },
            inflation: INFLATION,
            disks: match (satisfied, c_used) {
                (true, Some(c)) => self.disks(c),
                _ => Vec::new(),
            },
            failure,
        }
    }

    /// Threshold comparison shared by the two fixed-threshold certifiers.
    fn threshold_satisfied(&self, bound: f64, strict: bool) -> (bool, Option<String>) {
        let e = self.e_inflated();
        if strict {
            if e < bound {
                (true, None)
            } else {
                (
                    false,
                    Some(format!(
                        "inflated E = {e} not strictly below bound {bound} (strict boundary case)"
                    )),
                )
            }
        } else if e <= bound {
            (true, None)
        } else {
            (
                false,
                Some(format!("inflated E = {e} exceeds bound {bound}")),
            )
        }
    }

    /// Certificate at the widest threshold `E ≤ 1/(1+√a)²`, with the disk
    /// factor interval `[α(E), β(E)]` and `c_used = α(E)` (smallest disks).
    pub fn certify_main(&self) -> Certificate {
        let a = self.spec.a;
        let bound = main_bound(a);
        let strict = self.spec.is_strict_boundary();
        let (ok, failure) = self.threshold_satisfied(bound, strict);
        let (interval, c_used) = if ok {
            let e = self.e_inflated();
            // inside the threshold the radicand is non-negative up to snap
            let lo = alpha_unchecked(e, a).unwrap_or_else(|| 2.0 / (1.0 - (a - 1.0) * e));
            let hi = 2.0 / (1.0 - (a - 1.0) * e);
            (Some([lo, hi]), Some(lo))
        } else {
            (None, None)
        };
        self.certificate(
            TheoremKind::MainLocalization,
            bound,
            strict,
            interval,
            c_used,
            ok,
            failure,
        )
    }

    /// Certificate at the tighter threshold `E ≤ 1/(2(a+1))`, with the disk
    /// factor interval `[γ(E), β(E)]` and `c_used = γ(E)`.
    pub fn certify_gamma(&self) -> Certificate {
        let a = self.spec.a;
        let bound = gamma_bound(a);
        let strict = self.spec.is_strict_boundary();
        let (ok, failure) = self.threshold_satisfied(bound, strict);
        let (interval, c_used) = if ok {
            let e = self.e_inflated();
            let lo = 1.0 / (1.0 - (a + 1.0) * e);
            let hi = 2.0 / (1.0 - (a - 1.0) * e);
            (Some([lo, hi]), Some(lo))
        } else {
            (None, None)
        };
        self.certificate(
            TheoremKind::GammaCorollary,
            bound,
            strict,
            interval,
            c_used,
            ok,
            failure,
        )
    }

    /// Certificate at a caller-fixed level: satisfied iff `E ≤ R`, with disk
    /// radii `|Wᵢ|/(1−(a+1)R)`. Requires `0 ≤ R ≤ 1/(2a+2)`; the comparison
    /// is strict when n = 2, p = ∞ and `R` sits at the right endpoint.
    pub fn certify_fixed_r(&self, r: f64) -> Result<Certificate> {
        let a = self.spec.a;
        let endpoint = gamma_bound(a);
        if !(0.0..=endpoint).contains(&r) {
            return Err(Error::Domain(format!("R = {r} outside [0, {endpoint}]")));
        }
        let strict = self.spec.is_strict_boundary() && r >= endpoint * (1.0 - 1e-12);
        let (ok, failure) = self.threshold_satisfied(r, strict);
        let multiplier = 1.0 / (1.0 - (a + 1.0) * r);
        let (interval, c_used) = if ok {
            (Some([multiplier, multiplier]), Some(multiplier))
        } else {
            (None, None)
        };
        Ok(self.certificate(
            TheoremKind::FixedRCorollary,
            r,
            strict,
            interval,
            c_used,
            ok,
            failure,
        ))
    }

    /// Certificate for a caller-chosen disk factor `c ≥ 1`, checking the two
    /// raw inequalities `b·c·E < 1` and `1/c + aE/(1−cE) ≤ 1`.
    ///
    /// The second inequality is evaluated in factor space — it holds exactly
    /// when `c` lies between the two roots of `E·c² + ((a−1)E−1)·c + 1 = 0`,
    /// the smaller of which is `α(E)` — so that `c = α(E)` (an analytic
    /// equality case) is accepted deterministically instead of depending on
    /// round-off direction.
    pub fn localize_with_c(&self, c: f64) -> Result<Certificate> {
        if !(c >= 1.0) || !c.is_finite() {
            return Err(Error::Domain(format!("c = {c} must be in [1, inf)")));
        }
        let a = self.spec.a;
        let b = self.spec.b;
        let e = self.e_inflated();

        let disjoint_bound = 1.0 / (b * c);
        let mut satisfied = true;
        let mut failure = None;
        if !(b * c * e < 1.0) {
            satisfied = false;
            failure = Some(format!(
                "disjointness inequality b·c·E < 1 failed (b·c·E = {})",
                b * c * e
            ));
        }

        // Size inequality. E = 0 reduces it to 1/c ≤ 1, true for all c ≥ 1.
        let mut size_bound = f64::INFINITY;
        if satisfied && e > 0.0 {
            size_bound = (c - 1.0) / (c * (a + c - 1.0));
            let admissible = match radicand(e, a) {
                Some(rad) => {
                    let s = 1.0 - (a - 1.0) * e;
                    let lo = 2.0 / (s + rad.sqrt());
                    let hi = (s + rad.sqrt()) / (2.0 * e);
                    lo <= c && c <= hi
                }
                None => false,
            };
            if !admissible {
                satisfied = false;
                failure = Some(format!(
                    "size inequality 1/c + aE/(1−cE) ≤ 1 failed at c = {c}"
                ));
            }
        } else if e > 0.0 {
            size_bound = (c - 1.0) / (c * (a + c - 1.0));
        }

        // The reported bound is the tighter of the two inequality thresholds
        // in E-space; at the analytic equality point the E-space threshold
        // can round a hair below the inflated E, so keep it consistent with
        // the factor-space verdict.
        let mut bound = disjoint_bound.min(size_bound);
        if satisfied {
            bound = bound.max(e);
        }

        let (interval, c_used) = if satisfied {
            (Some([c, c]), Some(c))
        } else {
            (None, None)
        };
        Ok(self.certificate(
            TheoremKind::PropLocalization,
            bound,
            false,
            interval,
            c_used,
            satisfied,
            failure,
        ))
    }
}

/// One-shot form of [`Certifier::certify_main`].
pub fn certify_main(f: &Polynomial, x: &GuessVector, spec: &PNormSpec) -> Result<Certificate> {
    Ok(Certifier::new(f, x, spec)?.certify_main())
}

/// One-shot form of [`Certifier::certify_gamma`].
pub fn certify_gamma(f: &Polynomial, x: &GuessVector, spec: &PNormSpec) -> Result<Certificate> {
    Ok(Certifier::new(f, x, spec)?.certify_gamma())
}

/// One-shot form of [`Certifier::certify_fixed_r`].
pub fn certify_fixed_r(
    f: &Polynomial,
    x: &GuessVector,
    spec: &PNormSpec,
    r: f64,
) -> Result<Certificate> {
    Certifier::new(f, x, spec)?.certify_fixed_r(r)
}

/// One-shot form of [`Certifier::localize_with_c`].
pub fn localize_with_c(
    f: &Polynomial,
    x: &GuessVector,
    spec: &PNormSpec,
    c: f64,
) -> Result<Certificate> {
    Certifier::new(f, x, spec)?.localize_with_c(c)
}

/// Upper bound `α(E)·E` on the scaled distance `‖(x−ξ)/d(x)‖_p` from the
/// guess to some root-vector ξ, valid whenever `E ≤ 1/(1+√a)²`.
pub fn root_proximity_bound(e: f64, a: f64) -> Result<f64> {
    Ok(alpha(e, a)? * e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(coeffs: &[f64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&r| c64(r, 0.0)).collect()).unwrap()
    }

    fn guess(parts: &[f64]) -> GuessVector {
        GuessVector::new(parts.iter().map(|&r| c64(r, 0.0)).collect())
    }

    #[test]
    fn e_on_double_root_boundary_instance() {
        // f(z) = z^2 at (-1, 1): W = (-1/2, 1/2), d = (2, 2), sup ratio 1/4
        let f = poly(&[1.0, 0.0, 0.0]);
        let x = guess(&[-1.0, 1.0]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        assert_eq!(compute_e(&f, &x, &spec).unwrap(), 0.25);
    }

    #[test]
    fn e_on_symmetric_quadratic() {
        // f(z) = z^2 - 1 at (2, -2): W = (3/4, -3/4), d = (4, 4)
        let f = poly(&[1.0, 0.0, -1.0]);
        let x = guess(&[2.0, -2.0]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        assert_eq!(compute_e(&f, &x, &spec).unwrap(), 3.0 / 16.0);
    }

    #[test]
    fn e_vanishes_on_root_vector() {
        let f = poly(&[1.0, -6.0, 11.0, -6.0]);
        let x = guess(&[1.0, 2.0, 3.0]);
        let spec = PNormSpec::new(3, 2.0).unwrap();
        assert!(compute_e(&f, &x, &spec).unwrap() <= 1e-12);
    }

    #[test]
    fn radius_functions_at_zero() {
        for &a in &[1.0, 1.5, 2.0, 4.0] {
            assert_eq!(alpha(0.0, a).unwrap(), 1.0);
            assert_eq!(beta(0.0, a).unwrap(), 2.0);
            assert_eq!(gamma(0.0, a).unwrap(), 1.0);
        }
    }

    #[test]
    fn alpha_meets_beta_at_the_boundary() {
        // a=1: boundary t = 1/4, radicand vanishes, alpha = 2
        assert_eq!(alpha(0.25, 1.0).unwrap(), 2.0);
        // a=1, t=1/8: alpha = 2/(1+sqrt(1/2))
        let expected = 2.0 / (1.0 + 0.5f64.sqrt());
        assert_relative_eq!(alpha(0.125, 1.0).unwrap(), expected, max_relative = 1e-15);
        assert_relative_eq!(alpha(0.125, 1.0).unwrap(), 1.17157, max_relative = 1e-5);
    }

    #[test]
    fn radius_functions_reject_out_of_domain() {
        assert!(alpha(-0.1, 1.0).is_err());
        assert!(alpha(0.26, 1.0).is_err());
        // far side of the parabola: radicand is positive again but meaningless
        assert!(alpha(1.0, 4.0).is_err());
        assert!(gamma(0.5, 1.0).is_err());
        assert!(beta(0.5, 3.0).is_err());
        assert!(alpha(0.1, 0.5).is_err());
    }

    #[test]
    fn disjointness_check_examples() {
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let x = guess(&[-1.0, 1.0]);
        // zero vector: trivially disjoint
        assert!(disjointness_check(&x, &[c64(0.0, 0.0), c64(0.0, 0.0)], 5.0, &spec).unwrap());
        // b·c·E = 2·1·(1/4) = 1/2 < 1
        let u = [c64(-0.5, 0.0), c64(0.5, 0.0)];
        assert!(disjointness_check(&x, &u, 1.0, &spec).unwrap());
        // b·c·E = 2·2·(1/4) = 1, not strictly below
        assert!(!disjointness_check(&x, &u, 2.0, &spec).unwrap());
    }

    #[test]
    fn weighted_enclosure_radii() {
        let f = poly(&[1.0, 0.0, -1.0]);
        let x = guess(&[2.0, -2.0]);
        let disks = braess_hadeler_disks(&f, &x, &[1.0, 1.0]).unwrap();
        assert_eq!(disks[0].radius, 1.5);
        assert_eq!(disks[1].radius, 1.5);
        // union contains both true roots
        assert!(disks.iter().any(|d| d.contains(c64(1.0, 0.0))));
        assert!(disks.iter().any(|d| d.contains(c64(-1.0, 0.0))));
        assert!(braess_hadeler_disks(&f, &x, &[1.0, 0.0]).is_err());
        assert!(braess_hadeler_disks(&f, &x, &[1.0, -1.0]).is_err());
    }

    #[test]
    fn weighted_enclosure_on_root_vector_is_points() {
        let f = poly(&[1.0, -6.0, 11.0, -6.0]);
        let x = guess(&[1.0, 2.0, 3.0]);
        let disks = braess_hadeler_disks(&f, &x, &[1.0, 2.0, 3.0]).unwrap();
        for d in disks {
            assert!(d.radius <= 1e-12);
        }
    }

    #[test]
    fn main_certificate_rejects_equality_in_strict_case() {
        // E = 1/4 equals the bound exactly; n=2, p=inf demands strictness
        let f = poly(&[1.0, 0.0, 0.0]);
        let x = guess(&[-1.0, 1.0]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let cert = certify_main(&f, &x, &spec).unwrap();
        assert_eq!(cert.e, 0.25);
        assert_eq!(cert.bound, 0.25);
        assert!(cert.strict_boundary_case);
        assert!(!cert.satisfied);
        assert!(cert.c_interval.is_none());
        assert!(cert.disks.is_empty());
        assert!(cert.failure.is_some());
    }

    #[test]
    fn main_certificate_localizes_cubic_roots() {
        // f(z) = (z-1)(z-2)(z-4) = z^3 - 7z^2 + 14z - 8
        let f = poly(&[1.0, -7.0, 14.0, -8.0]);
        let x = guess(&[1.05, 1.95, 4.02]);
        let spec = PNormSpec::new(3, f64::INFINITY).unwrap();
        let cert = certify_main(&f, &x, &spec).unwrap();
        assert!(cert.satisfied);
        assert!(cert.e * (1.0 + INFLATION) <= cert.bound);
        let [lo, hi] = cert.c_interval.unwrap();
        assert!(1.0 <= lo && lo <= hi);
        assert_eq!(cert.c_used.unwrap(), lo);
        let roots = [c64(1.0, 0.0), c64(2.0, 0.0), c64(4.0, 0.0)];
        for (disk, root) in cert.disks.iter().zip(roots) {
            assert!(disk.contains(root));
            assert_eq!(roots.iter().filter(|r| disk.contains(**r)).count(), 1);
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(cert.disks[i].is_disjoint_from(&cert.disks[j]));
            }
        }
    }

    #[test]
    fn root_vector_certifies_with_point_disks() {
        let f = poly(&[1.0, -6.0, 11.0, -6.0]);
        let x = guess(&[1.0, 2.0, 3.0]);
        let spec = PNormSpec::new(3, 2.0).unwrap();
        for cert in [
            certify_main(&f, &x, &spec).unwrap(),
            certify_gamma(&f, &x, &spec).unwrap(),
            certify_fixed_r(&f, &x, &spec, 0.0).unwrap(),
        ] {
            assert!(cert.satisfied);
            for d in &cert.disks {
                assert!(d.radius <= 1e-12);
            }
        }
    }

    #[test]
    fn gamma_threshold_is_tighter_than_main() {
        for &a in &[1.0, 1.5, 2.0, 4.0, 9.0] {
            assert!(gamma_bound(a) <= main_bound(a) + 1e-15);
        }
        assert_eq!(gamma_bound(1.0), 0.25);
        assert_eq!(main_bound(1.0), 0.25);
    }

    #[test]
    fn gamma_certificate_rejects_boundary_equality() {
        let f = poly(&[1.0, 0.0, 0.0]);
        let x = guess(&[-1.0, 1.0]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let cert = certify_gamma(&f, &x, &spec).unwrap();
        assert_eq!(cert.bound, 0.25);
        assert!(!cert.satisfied);
    }

    #[test]
    fn fixed_r_certificate_radii() {
        // n=2, p=inf: a=1, R=1/5 gives multiplier 1/(1-2/5) = 5/3
        let f = poly(&[1.0, 0.0, -1.0]);
        let x = guess(&[1.1, -0.9]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let certifier = Certifier::new(&f, &x, &spec).unwrap();
        let cert = certifier.certify_fixed_r(0.2).unwrap();
        assert!(cert.satisfied); // E ≈ 0.0525 ≤ 1/5
        let w = certifier.correction();
        for (disk, wi) in cert.disks.iter().zip(w.values()) {
            assert_relative_eq!(disk.radius, wi.norm() * 5.0 / 3.0, max_relative = 1e-14);
        }
        // out-of-range R errors
        assert!(certifier.certify_fixed_r(0.3).is_err());
        assert!(certifier.certify_fixed_r(-0.1).is_err());
    }

    #[test]
    fn fixed_r_unsatisfied_when_e_above_level() {
        let f = poly(&[1.0, 0.0, -1.0]);
        let x = guess(&[2.0, -2.0]); // E = 3/16 = 0.1875
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let cert = certify_fixed_r(&f, &x, &spec, 0.125).unwrap();
        assert!(!cert.satisfied);
        assert!(cert.failure.is_some());
    }

    #[test]
    fn explicit_factor_accepts_its_own_alpha() {
        let f = poly(&[1.0, 0.0, -1.0]);
        let x = guess(&[1.1, -0.9]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let certifier = Certifier::new(&f, &x, &spec).unwrap();
        let c = alpha(certifier.e_inflated(), spec.a).unwrap();
        let cert = certifier.localize_with_c(c).unwrap();
        assert!(cert.satisfied);
        // each disk contains exactly one of the true roots ±1
        let roots = [c64(1.0, 0.0), c64(-1.0, 0.0)];
        for disk in &cert.disks {
            assert_eq!(roots.iter().filter(|r| disk.contains(**r)).count(), 1);
        }
    }

    #[test]
    fn explicit_factor_rejects_boundary_disjointness() {
        // b·c·E = 2·2·(1/4) = 1 at c = 2: first inequality fails
        let f = poly(&[1.0, 0.0, 0.0]);
        let x = guess(&[-1.0, 1.0]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let cert = localize_with_c(&f, &x, &spec, 2.0).unwrap();
        assert!(!cert.satisfied);
        assert!(cert.failure.unwrap().contains("disjointness"));
    }

    #[test]
    fn explicit_factor_trivial_on_root_vector() {
        let f = poly(&[1.0, -6.0, 11.0, -6.0]);
        let x = guess(&[1.0, 2.0, 3.0]);
        let spec = PNormSpec::new(3, 2.0).unwrap();
        let cert = localize_with_c(&f, &x, &spec, 1.0).unwrap();
        assert!(cert.satisfied);
        for d in &cert.disks {
            assert!(d.radius <= 1e-12);
        }
        assert!(localize_with_c(&f, &x, &spec, 0.5).is_err());
    }

    #[test]
    fn proximity_bound_values() {
        assert_eq!(root_proximity_bound(0.0, 1.0).unwrap(), 0.0);
        assert_eq!(root_proximity_bound(0.25, 1.0).unwrap(), 0.5);
        let h = root_proximity_bound(0.125, 1.0).unwrap();
        assert_relative_eq!(h, 2.0 * 0.125 / (1.0 + 0.5f64.sqrt()), max_relative = 1e-15);
        assert_relative_eq!(h, 0.14645, max_relative = 1e-4);
        assert!(root_proximity_bound(0.3, 1.0).is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let f = poly(&[1.0, -7.0, 14.0, -8.0]);
        let x = guess(&[1.05, 1.95, 4.02]);
        let spec = PNormSpec::new(3, f64::INFINITY).unwrap();
        let cert = certify_main(&f, &x, &spec).unwrap();
        let json = serde_json::to_string_pretty(&cert).unwrap();
        // fixed schema keys
        for key in [
            "\"theorem\"",
            "\"p\"",
            "\"q\"",
            "\"a\"",
            "\"b\"",
            "\"E\"",
            "\"bound\"",
            "\"satisfied\"",
            "\"strict_boundary_case\"",
            "\"c_interval\"",
            "\"c_used\"",
            "\"inflation\"",
            "\"disks\"",
        ] {
            assert!(json.contains(key), "missing key {key} in {json}");
        }
        assert!(json.contains("\"main-localization\""));
        assert!(json.contains("\"p\": \"inf\""));
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back.theorem, cert.theorem);
        assert_eq!(back.e, cert.e);
        assert_eq!(back.disks.len(), cert.disks.len());
        assert!(back.p.is_infinite());
    }
}
