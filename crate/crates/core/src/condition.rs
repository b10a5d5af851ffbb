//! Conversions between the three families of closeness conditions and the
//! classical convergence radii.
//!
//! The three families measure, respectively: distance of a guess to the true
//! root-vector scaled by the root separations (first), the same distance
//! scaled by the guess's own separations (second), and the correction size
//! scaled by the guess's separations (third). Only the third is computable
//! without knowing the roots, which is why the conversion maps matter: they
//! turn a radius constant valid for one family into one valid for another.
//!
//! Each family comes in two norm forms: componentwise (each entry divided by
//! the per-component nearest-neighbour distance, then a p-norm) and aggregate
//! (p-norm of the raw vector divided by the overall minimum separation).
//! The forms are not interchangeable entry for entry; converters and checks
//! are explicit about which one they use and never convert between them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    componentwise_ratio, distance_vector, p_norm, separation, GuessVector, PNormSpec, Polynomial,
};
use crate::weierstrass::weierstrass_correction;

/// Which quantity a closeness condition constrains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionKind {
    /// `(x - ξ)` scaled by the root-vector separations — needs the roots.
    First,
    /// `(x - ξ)` scaled by the guess separations — needs the roots.
    Second,
    /// `W_f(x)` scaled by the guess separations — computable from data.
    Third,
}

/// Componentwise or aggregate scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormForm {
    #[serde(rename = "componentwise-d")]
    ComponentwiseD,
    #[serde(rename = "aggregate-delta")]
    AggregateDelta,
}

/// A fully specified condition family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionType {
    pub kind: ConditionKind,
    pub norm_form: NormForm,
}

impl ConditionType {
    pub fn componentwise(kind: ConditionKind) -> Self {
        Self {
            kind,
            norm_form: NormForm::ComponentwiseD,
        }
    }
}

/// Outcome of a radius conversion.
///
/// `domain_ok` is false when `R_in` lies beyond the admissible range of the
/// conversion map (then `R_out` is absent). `strict_required` marks inputs
/// where the target statement only holds with strict inequality — at a
/// domain endpoint with n = 2 and p = ∞, or anywhere in the degenerate
/// first-to-third case where that endpoint is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConversionResult {
    pub source: ConditionType,
    pub target: ConditionType,
    #[serde(rename = "R_in")]
    pub r_in: f64,
    #[serde(rename = "R_out")]
    pub r_out: Option<f64>,
    pub domain_ok: bool,
    pub strict_required: bool,
}

fn validate_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!(
            "radius R = {r} must be a positive finite real"
        )));
    }
    Ok(())
}

fn at_endpoint(r: f64, endpoint: f64) -> bool {
    endpoint.is_finite() && r >= endpoint * (1.0 - 1e-12)
}

fn result(
    source: ConditionKind,
    target: ConditionKind,
    r_in: f64,
    r_out: Option<f64>,
    strict_required: bool,
) -> ConversionResult {
    ConversionResult {
        source: ConditionType::componentwise(source),
        target: ConditionType::componentwise(target),
        r_in,
        r_out,
        domain_ok: r_out.is_some(),
        strict_required,
    }
}

/// First-type radius `R` to the second-type radius `R/(1+bR)`: closeness to
/// the roots in root-separation scale implies closeness in guess-separation
/// scale at the reduced radius. Valid for every `R > 0`.
pub fn convert_first_to_second(r: f64, n: usize, p: f64) -> Result<ConversionResult> {
    validate_radius(r)?;
    let spec = PNormSpec::new(n, p)?;
    let out = r / (1.0 + spec.b * r);
    Ok(result(
        ConditionKind::First,
        ConditionKind::Second,
        r,
        Some(out),
        false,
    ))
}

/// Second-type radius `R` to the third-type threshold
/// `g(R) = R(1−R)/(1+(a−1)R)`: a correction-size condition at level `g(R)`
/// guarantees a root-vector within second-type distance `R`.
///
/// Domain `0 < R ≤ 1/(1+√a)`; at the right endpoint with n = 2 and p = ∞
/// the guarantee needs strict inequality in the threshold condition.
pub fn convert_second_to_third(r: f64, n: usize, p: f64) -> Result<ConversionResult> {
    validate_radius(r)?;
    let spec = PNormSpec::new(n, p)?;
    let a = spec.a;
    let endpoint = 1.0 / (1.0 + a.sqrt());
    if r > endpoint {
        return Ok(result(
            ConditionKind::Second,
            ConditionKind::Third,
            r,
            None,
            false,
        ));
    }
    let out = r * (1.0 - r) / (1.0 + (a - 1.0) * r);
    let strict = spec.is_strict_boundary() && at_endpoint(r, endpoint);
    Ok(result(
        ConditionKind::Second,
        ConditionKind::Third,
        r,
        Some(out),
        strict,
    ))
}

/// Rational variant of [`convert_second_to_third`]: threshold
/// `R/(1+(a+1)R)` on the smaller domain `0 < R ≤ 1/(1+a)`. Never exceeds
/// the sharper map where both are defined.
pub fn convert_second_to_third_simple(r: f64, n: usize, p: f64) -> Result<ConversionResult> {
    validate_radius(r)?;
    let spec = PNormSpec::new(n, p)?;
    let a = spec.a;
    let endpoint = 1.0 / (1.0 + a);
    if r > endpoint {
        return Ok(result(
            ConditionKind::Second,
            ConditionKind::Third,
            r,
            None,
            false,
        ));
    }
    let out = r / (1.0 + (a + 1.0) * r);
    let strict = spec.is_strict_boundary() && at_endpoint(r, endpoint);
    Ok(result(
        ConditionKind::Second,
        ConditionKind::Third,
        r,
        Some(out),
        strict,
    ))
}

/// First-type radius `R` to the third-type threshold
/// `R(1+(b−1)R) / ((1+bR)(1+(a+b−1)R))` — the composition of
/// [`convert_first_to_second`] with [`convert_second_to_third`].
///
/// Domain `0 < R ≤ 1/(1−b+√a)`. With n = 2 and p = ∞ the denominator
/// `1−b+√a` vanishes, the endpoint is infinite, every finite `R` is
/// admissible, and `strict_required` is flagged for all of them.
pub fn convert_first_to_third(r: f64, n: usize, p: f64) -> Result<ConversionResult> {
    validate_radius(r)?;
    let spec = PNormSpec::new(n, p)?;
    let (a, b) = (spec.a, spec.b);
    let denom = 1.0 - b + a.sqrt();
    let degenerate = denom <= 0.0;
    if !degenerate && r > 1.0 / denom {
        return Ok(result(
            ConditionKind::First,
            ConditionKind::Third,
            r,
            None,
            false,
        ));
    }
    let out = r * (1.0 + (b - 1.0) * r) / ((1.0 + b * r) * (1.0 + (a + b - 1.0) * r));
    Ok(result(
        ConditionKind::First,
        ConditionKind::Third,
        r,
        Some(out),
        degenerate,
    ))
}

/// Rational variant of [`convert_first_to_third`]: threshold
/// `R/(1+(a+b+1)R)` on the domain `0 < R ≤ 1/(a−b+1)`, with the same
/// degenerate-domain handling when `a−b+1` vanishes (n = 2, p = ∞).
pub fn convert_first_to_third_simple(r: f64, n: usize, p: f64) -> Result<ConversionResult> {
    validate_radius(r)?;
    let spec = PNormSpec::new(n, p)?;
    let (a, b) = (spec.a, spec.b);
    let denom = a - b + 1.0;
    let degenerate = denom <= 0.0;
    if !degenerate && r > 1.0 / denom {
        return Ok(result(
            ConditionKind::First,
            ConditionKind::Third,
            r,
            None,
            false,
        ));
    }
    let out = r / (1.0 + (a + b + 1.0) * r);
    Ok(result(
        ConditionKind::First,
        ConditionKind::Third,
        r,
        Some(out),
        degenerate,
    ))
}

/// The classical sup-norm convergence radii.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalRadius {
    /// First-type radius `(c−1)/(2c−1)`, `c = 2^(1/(n−1))`.
    Dochev,
    /// Second-type radius `(c−1)/(4c−3)`, `c = 2^(1/(n−1))`.
    WangZhao,
    /// Third-type threshold `1/(5n)`.
    Pct,
}

/// Value of a classical radius constant for degree `n`.
pub fn classical_radius(which: ClassicalRadius, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("degree n = {n} must be at least 2")));
    }
    let c = 2f64.powf(1.0 / (n as f64 - 1.0));
    Ok(match which {
        ClassicalRadius::Dochev => (c - 1.0) / (2.0 * c - 1.0),
        ClassicalRadius::WangZhao => (c - 1.0) / (4.0 * c - 3.0),
        ClassicalRadius::Pct => 1.0 / (5.0 * n as f64),
    })
}

/// The two-vector inequality underpinning the first/second conversions:
/// `‖(u−v)/d(u)‖_p ≥ (1 − b‖(u−v)/d(u)‖_p) · ‖(u−v)/d(v)‖_p`.
/// A test predicate — expected true for all distinct-component pairs.
pub fn prop41_inequality_holds(u: &GuessVector, v: &GuessVector, spec: &PNormSpec) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    let diff: Vec<_> = u
        .components()
        .iter()
        .zip(v.components())
        .map(|(a, b)| a - b)
        .collect();
    let du = distance_vector(u)?;
    let dv = distance_vector(v)?;
    let lhs = p_norm(&componentwise_ratio(&diff, du.values())?, spec);
    let rhs_norm = p_norm(&componentwise_ratio(&diff, dv.values())?, spec);
    Ok(lhs >= (1.0 - spec.b * lhs) * rhs_norm)
}

/// Evaluates a closeness condition at level `R`.
///
/// Third-type checks need only `(f, x)`. First- and second-type checks
/// compare against the true root-vector and exist for oracle and test
/// support; they error when `xi` is absent.
pub fn check_condition(
    condition: ConditionType,
    f: &Polynomial,
    x: &GuessVector,
    spec: &PNormSpec,
    r: f64,
    xi: Option<&GuessVector>,
) -> Result<bool> {
    if !(r >= 0.0) {
        return Err(Error::Domain(format!("level R = {r} must be non-negative")));
    }
    let value = condition_value(condition, f, x, spec, xi)?;
    Ok(value <= r)
}

/// The left-hand side of a closeness condition (the quantity compared to R).
pub fn condition_value(
    condition: ConditionType,
    f: &Polynomial,
    x: &GuessVector,
    spec: &PNormSpec,
    xi: Option<&GuessVector>,
) -> Result<f64> {
    let need_xi = || {
        xi.ok_or(Error::MissingReference(
            "first- and second-type checks need the true root-vector",
        ))
    };
    let diff_to = |xi: &GuessVector| -> Result<Vec<_>> {
        if xi.len() != x.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                got: xi.len(),
            });
        }
        Ok(x.components()
            .iter()
            .zip(xi.components())
            .map(|(a, b)| a - b)
            .collect())
    };

    match (condition.kind, condition.norm_form) {
        (ConditionKind::First, NormForm::ComponentwiseD) => {
            let xi = need_xi()?;
            let d = distance_vector(xi)?;
            Ok(p_norm(
                &componentwise_ratio(&diff_to(xi)?, d.values())?,
                spec,
            ))
        }
        (ConditionKind::First, NormForm::AggregateDelta) => {
            let xi = need_xi()?;
            let delta = separation(xi);
            if delta == 0.0 {
                return Err(Error::DegenerateGuess("coinciding reference components"));
            }
            let moduli: Vec<f64> = diff_to(xi)?.iter().map(|z| z.norm()).collect();
            Ok(p_norm(&moduli, spec) / delta)
        }
        (ConditionKind::Second, NormForm::ComponentwiseD) => {
            let xi = need_xi()?;
            let d = distance_vector(x)?;
            Ok(p_norm(
                &componentwise_ratio(&diff_to(xi)?, d.values())?,
                spec,
            ))
        }
        (ConditionKind::Second, NormForm::AggregateDelta) => {
            let xi = need_xi()?;
            let delta = separation(x);
            if delta == 0.0 {
                return Err(Error::DegenerateGuess("coinciding components"));
            }
            let moduli: Vec<f64> = diff_to(xi)?.iter().map(|z| z.norm()).collect();
            Ok(p_norm(&moduli, spec) / delta)
        }
        (ConditionKind::Third, NormForm::ComponentwiseD) => {
            let w = weierstrass_correction(f, x)?;
            let d = distance_vector(x)?;
            Ok(p_norm(&componentwise_ratio(w.values(), d.values())?, spec))
        }
        (ConditionKind::Third, NormForm::AggregateDelta) => {
            let w = weierstrass_correction(f, x)?;
            let delta = separation(x);
            if delta == 0.0 {
                return Err(Error::DegenerateGuess("coinciding components"));
            }
            let moduli: Vec<f64> = w.values().iter().map(|z| z.norm()).collect();
            Ok(p_norm(&moduli, spec) / delta)
        }
    }
}
