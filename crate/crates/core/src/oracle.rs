//! Ground truth and verification: polynomials built from known roots,
//! geometric checking of issued certificates against those roots, and a
//! seeded randomized survey that hunts for soundness violations.
//!
//! Randomness contract: all sampling uses the ChaCha8 generator seeded
//! explicitly, so every instance, guess and survey report is reproducible
//! bit-for-bit across runs and platforms. The generator choice is part of
//! the external contract; changing it changes archived reports.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::certify::{main_bound, Certificate, Certifier, TheoremKind};
use crate::error::{Error, Result};
use crate::numerics::{separation, GuessVector, PNormSpec, Polynomial};

/// A polynomial together with the roots it was built from.
#[derive(Debug, Clone)]
pub struct GroundTruthInstance {
    pub roots: Vec<Complex64>,
    pub leading: Complex64,
    pub polynomial: Polynomial,
    pub min_separation: f64,
}

impl GroundTruthInstance {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// The root-vector as a guess (useful as an iteration reference).
    pub fn root_vector(&self) -> GuessVector {
        GuessVector::new(self.roots.clone())
    }
}

/// Expands `a0 · ∏(z − rootᵢ)` by iterated convolution.
pub fn polynomial_from_roots(roots: &[Complex64], a0: Complex64) -> Result<GroundTruthInstance> {
    if roots.len() < 2 {
        return Err(Error::InvalidInstance("need at least two roots"));
    }
    if a0.norm() == 0.0 || !a0.re.is_finite() || !a0.im.is_finite() {
        return Err(Error::InvalidInstance(
            "leading coefficient must be nonzero and finite",
        ));
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            if roots[i] == roots[j] {
                return Err(Error::InvalidInstance("duplicate roots"));
            }
        }
    }
    let mut coeffs = vec![a0];
    for &root in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c * root;
        }
        coeffs = next;
    }
    let polynomial = Polynomial::new(coeffs)?;
    let min_separation = separation(&GuessVector::new(roots.to_vec()));
    Ok(GroundTruthInstance {
        roots: roots.to_vec(),
        leading: a0,
        polynomial,
        min_separation,
    })
}

fn sample_unit_disk(rng: &mut ChaCha8Rng) -> Complex64 {
    // polar sampling with sqrt-distributed radius is uniform over the disk
    let r = rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * std::f64::consts::TAU;
    Complex64::from_polar(r, theta)
}

/// Samples an instance with `n` roots uniform in the square of half-width
/// `box_half` around the origin, rejecting candidates closer than `min_sep`
/// to an already-accepted root. The leading coefficient has magnitude in
/// `[1/2, 2]` and uniform phase. Deterministic in `seed`.
pub fn random_instance(
    n: usize,
    seed: u64,
    min_sep: f64,
    box_half: f64,
) -> Result<GroundTruthInstance> {
    if n < 2 {
        return Err(Error::Domain(format!("degree n = {n} must be at least 2")));
    }
    if !(min_sep > 0.0) || !(box_half > 0.0) {
        return Err(Error::Domain("min_sep and box must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _round in 0..50 {
        let mut roots: Vec<Complex64> = Vec::with_capacity(n);
        let mut attempts = 0usize;
        while roots.len() < n && attempts < 500 * n {
            attempts += 1;
            let candidate = Complex64::new(
                rng.gen_range(-box_half..box_half),
                rng.gen_range(-box_half..box_half),
            );
            if roots.iter().all(|r| (candidate - r).norm() >= min_sep) {
                roots.push(candidate);
            }
        }
        if roots.len() < n {
            continue;
        }
        let magnitude = rng.gen_range(0.5..2.0);
        let phase = rng.gen::<f64>() * std::f64::consts::TAU;
        let a0 = Complex64::from_polar(magnitude, phase);
        return polynomial_from_roots(&roots, a0);
    }
    Err(Error::InstanceGeneration(
        "could not place roots at the requested separation",
    ))
}

/// Adds to each root an independent uniform perturbation of modulus at most
/// `rho · δ(ξ)`. For `rho < 1/2` the components stay distinct by the
/// triangle inequality; for larger `rho` collisions trigger resampling.
/// Deterministic in `seed`.
pub fn perturbed_guess(inst: &GroundTruthInstance, rho: f64, seed: u64) -> Result<GuessVector> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(Error::Domain(format!(
            "rho = {rho} must be a non-negative real"
        )));
    }
    let radius = rho * inst.min_separation;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..100 {
        let guess = GuessVector::new(
            inst.roots
                .iter()
                .map(|&root| root + sample_unit_disk(&mut rng) * radius)
                .collect(),
        );
        if guess.is_distinct() {
            return Ok(guess);
        }
    }
    Err(Error::InstanceGeneration(
        "perturbed components kept colliding",
    ))
}

/// Result of checking one certificate against the true roots.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub verified: bool,
    pub violations: Vec<String>,
}

/// Checks a satisfied certificate's geometric claims against the known
/// roots: disks pairwise disjoint, the nearest-root assignment is a
/// bijection, every matched root lies in its disk, and no disk holds a
/// second root. An unsatisfied certificate claims nothing and verifies
/// vacuously.
///
/// Matching is greedy nearest-root per disk; with truly disjoint one-root
/// disks this is the unique valid assignment, and the bijection check turns
/// any matching failure into a reported violation.
pub fn verify_certificate(cert: &Certificate, inst: &GroundTruthInstance) -> VerificationRecord {
    let mut violations = Vec::new();
    if !cert.satisfied {
        return VerificationRecord {
            verified: true,
            violations,
        };
    }
    let roots = &inst.roots;
    if cert.disks.len() != roots.len() {
        violations.push(format!(
            "{} disks for {} roots",
            cert.disks.len(),
            roots.len()
        ));
        return VerificationRecord {
            verified: false,
            violations,
        };
    }

    for (i, di) in cert.disks.iter().enumerate() {
        for (j, dj) in cert.disks.iter().enumerate().skip(i + 1) {
            if !di.is_disjoint_from(dj) {
                violations.push(format!("disks {i} and {j} intersect"));
            }
        }
    }

    let mut assignment = Vec::with_capacity(cert.disks.len());
    for (i, disk) in cert.disks.iter().enumerate() {
        let (nearest, dist) = roots
            .iter()
            .enumerate()
            .map(|(j, r)| (j, (r - disk.center).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("at least two roots");
        assignment.push(nearest);
        if dist > disk.radius {
            violations.push(format!(
                "disk {i} does not contain its nearest root (distance {dist} > radius {})",
                disk.radius
            ));
        }
        let inside = roots.iter().filter(|r| disk.contains(**r)).count();
        if inside != 1 {
            violations.push(format!("disk {i} contains {inside} roots"));
        }
    }
    let mut seen = assignment.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != assignment.len() {
        violations.push("root assignment is not a bijection".into());
    }

    VerificationRecord {
        verified: violations.is_empty(),
        violations,
    }
}

/// Perturbation grades used by the survey, as fractions of the root
/// separation. All lie below 1/2 so perturbed guesses stay distinct; the
/// upper grades routinely produce unsatisfied certificates, exercising both
/// branches.
const RHO_GRADES: [f64; 8] = [1e-4, 1e-3, 0.01, 0.03, 0.08, 0.15, 0.3, 0.45];

/// Survey parameters. `Default` gives the acceptance-scale run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurveyConfig {
    pub n_min: usize,
    pub n_max: usize,
    #[serde(with = "p_values_serde")]
    pub p_values: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
}

mod p_values_serde {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|&p| {
                if p.is_infinite() {
                    serde_json::Value::from("inf")
                } else {
                    serde_json::Value::from(p)
                }
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        Vec::<Raw>::deserialize(d)?
            .into_iter()
            .map(|raw| match raw {
                Raw::Num(x) => Ok(x),
                Raw::Str(s) if s == "inf" => Ok(f64::INFINITY),
                Raw::Str(s) => Err(D::Error::custom(format!("bad exponent \"{s}\""))),
            })
            .collect()
    }
}

impl Default for SurveyConfig {
    fn default() -> Self {
        Self {
            n_min: 2,
            n_max: 12,
            p_values: vec![1.0, 2.0, f64::INFINITY],
            trials: 10_000,
            seed: 7,
        }
    }
}

/// Per-theorem tallies. `violations` counts satisfied certificates whose
/// geometric claims failed verification; zero is the pass condition.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremTally {
    pub satisfied: u64,
    pub verified: u64,
    pub violations: u64,
}

/// Histogram of `E / bound` ratios (bound = the widest threshold for the
/// trial's `a`). `edges` has one more entry than `counts`; ratios at or
/// beyond the last edge land in `overflow`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub overflow: u64,
}

impl Histogram {
    fn new() -> Self {
        let edges = (0..=20).map(|k| k as f64 / 10.0).collect();
        Self {
            edges,
            counts: vec![0; 20],
            overflow: 0,
        }
    }

    fn record(&mut self, ratio: f64) {
        if !ratio.is_finite() || ratio >= 2.0 {
            self.overflow += 1;
        } else {
            let bin = ((ratio / 0.1) as usize).min(19);
            self.counts[bin] += 1;
        }
    }
}

/// Outcome of a randomized soundness survey.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SurveyReport {
    pub trials: u64,
    pub results: BTreeMap<String, TheoremTally>,
    pub histogram: Histogram,
    pub seed: u64,
    pub config: SurveyConfig,
}

impl SurveyReport {
    pub fn total_violations(&self) -> u64 {
        self.results.values().map(|t| t.violations).sum()
    }
}

fn theorem_key(kind: TheoremKind) -> &'static str {
    match kind {
        TheoremKind::MainLocalization => "main-localization",
        TheoremKind::GammaCorollary => "gamma-corollary",
        TheoremKind::FixedRCorollary => "fixed-R-corollary",
        TheoremKind::PropLocalization => "prop-localization",
    }
}

/// Runs `config.trials` randomized trials: build an instance, perturb its
/// roots at a graded radius, issue all three certificates, and verify every
/// satisfied one against the true roots. Deterministic in the seed;
/// per-trial generation failures are skipped, never fatal.
pub fn survey(config: &SurveyConfig) -> Result<SurveyReport> {
    if config.trials < 1 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    if config.n_min < 2 || config.n_min > config.n_max {
        return Err(Error::Domain(format!(
            "bad degree range {}..={}",
            config.n_min, config.n_max
        )));
    }
    if config.p_values.is_empty() {
        return Err(Error::Domain("need at least one exponent".into()));
    }
    for &p in &config.p_values {
        crate::numerics::conjugate_exponent(p)?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut results: BTreeMap<String, TheoremTally> = BTreeMap::new();
    for kind in [
        TheoremKind::MainLocalization,
        TheoremKind::GammaCorollary,
        TheoremKind::FixedRCorollary,
    ] {
        results.insert(theorem_key(kind).to_string(), TheoremTally::default());
    }
    let mut histogram = Histogram::new();

    for _ in 0..config.trials {
        // derive all per-trial randomness up front so a skipped trial
        // consumes exactly as much of the stream as a completed one
        let instance_seed = rng.gen::<u64>();
        let guess_seed = rng.gen::<u64>();
        let n = rng.gen_range(config.n_min..=config.n_max);
        let p = config.p_values[rng.gen_range(0..config.p_values.len())];
        let rho = RHO_GRADES[rng.gen_range(0..RHO_GRADES.len())];
        let r_fraction = rng.gen::<f64>();

        let Ok(inst) = random_instance(n, instance_seed, 0.3, 3.0) else {
            continue;
        };
        let Ok(guess) = perturbed_guess(&inst, rho, guess_seed) else {
            continue;
        };
        let spec = PNormSpec::new(n, p).expect("validated exponent");
        let Ok(certifier) = Certifier::new(&inst.polynomial, &guess, &spec) else {
            continue;
        };

        histogram.record(certifier.e() / main_bound(spec.a));

        let r_level = r_fraction * crate::certify::gamma_bound(spec.a);
        let certificates = [
            certifier.certify_main(),
            certifier.certify_gamma(),
            certifier
                .certify_fixed_r(r_level)
                .expect("level inside admissible range"),
        ];
        for cert in &certificates {
            let tally = results
                .get_mut(theorem_key(cert.theorem))
                .expect("tally preallocated");
            if cert.satisfied {
                tally.satisfied += 1;
                let record = verify_certificate(cert, &inst);
                if record.verified {
                    tally.verified += 1;
                } else {
                    tally.violations += record.violations.len() as u64;
                }
            }
        }
    }

    Ok(SurveyReport {
        trials: config.trials as u64,
        results,
        histogram,
        seed: config.seed,
        config: config.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn expansion_matches_hand_results() {
        let inst = polynomial_from_roots(&[c(1.0, 0.0), c(-1.0, 0.0)], c(1.0, 0.0)).unwrap();
        assert_eq!(
            inst.polynomial.coeffs(),
            &[c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]
        );
        let inst =
            polynomial_from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], c(1.0, 0.0)).unwrap();
        assert_eq!(
            inst.polynomial.coeffs(),
            &[c(1.0, 0.0), c(-6.0, 0.0), c(11.0, 0.0), c(-6.0, 0.0)]
        );
        assert_eq!(inst.min_separation, 1.0);
        let inst = polynomial_from_roots(&[c(0.0, 1.0), c(0.0, -1.0)], c(2.0, 0.0)).unwrap();
        assert_eq!(
            inst.polynomial.coeffs(),
            &[c(2.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)]
        );
    }

    #[test]
    fn expansion_rejects_bad_input() {
        assert!(polynomial_from_roots(&[c(1.0, 0.0), c(1.0, 0.0)], c(1.0, 0.0)).is_err());
        assert!(polynomial_from_roots(&[c(1.0, 0.0), c(2.0, 0.0)], c(0.0, 0.0)).is_err());
        assert!(polynomial_from_roots(&[c(1.0, 0.0)], c(1.0, 0.0)).is_err());
    }

    #[test]
    fn expansion_residual_is_small_at_roots() {
        let inst = random_instance(8, 3, 0.4, 3.0).unwrap();
        let scale = inst
            .polynomial
            .coeffs()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        for &root in &inst.roots {
            assert!(inst.polynomial.eval(root).norm() <= 1e-10 * scale);
        }
    }

    #[test]
    fn random_instance_is_deterministic_and_separated() {
        let a = random_instance(5, 7, 0.5, 2.0).unwrap();
        let b = random_instance(5, 7, 0.5, 2.0).unwrap();
        assert_eq!(a.roots, b.roots);
        assert_eq!(a.leading, b.leading);
        assert!(a.min_separation >= 0.5);
        let lead_mag = a.leading.norm();
        assert!((0.5..=2.0).contains(&lead_mag));
    }

    #[test]
    fn random_instance_fails_on_impossible_packing() {
        // 40 roots pairwise 5 apart cannot fit in a half-width-1 square
        assert!(matches!(
            random_instance(40, 1, 5.0, 1.0),
            Err(Error::InstanceGeneration(_))
        ));
    }

    #[test]
    fn perturbed_guess_basics() {
        let inst = random_instance(6, 11, 0.5, 3.0).unwrap();
        let exact = perturbed_guess(&inst, 0.0, 5).unwrap();
        assert_eq!(exact.components(), inst.roots.as_slice());
        let x = perturbed_guess(&inst, 0.49, 5).unwrap();
        assert!(x.is_distinct());
        for (xi, root) in x.components().iter().zip(&inst.roots) {
            assert!((xi - root).norm() <= 0.49 * inst.min_separation * (1.0 + 1e-15));
        }
        let again = perturbed_guess(&inst, 0.49, 5).unwrap();
        assert_eq!(x.components(), again.components());
        assert!(perturbed_guess(&inst, -0.1, 5).is_err());
    }

    #[test]
    fn verification_accepts_point_disks_at_roots() {
        let inst =
            polynomial_from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], c(1.0, 0.0)).unwrap();
        let spec = PNormSpec::new(3, 2.0).unwrap();
        let cert =
            crate::certify::certify_main(&inst.polynomial, &inst.root_vector(), &spec).unwrap();
        assert!(cert.satisfied);
        let record = verify_certificate(&cert, &inst);
        assert!(record.verified, "{:?}", record.violations);
    }

    #[test]
    fn verification_is_vacuous_for_unsatisfied() {
        let inst = polynomial_from_roots(&[c(0.0, 1e-9), c(0.0, -1e-9)], c(1.0, 0.0)).unwrap();
        let x = GuessVector::new(vec![c(-1.0, 0.0), c(1.0, 0.0)]);
        let spec = PNormSpec::new(2, f64::INFINITY).unwrap();
        let cert = crate::certify::certify_main(&inst.polynomial, &x, &spec).unwrap();
        assert!(!cert.satisfied);
        assert!(verify_certificate(&cert, &inst).verified);
    }

    #[test]
    fn verification_flags_wrong_claims() {
        use crate::certify::InclusionDisk;
        let inst =
            polynomial_from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], c(1.0, 0.0)).unwrap();
        let spec = PNormSpec::new(3, 2.0).unwrap();
        let mut cert =
            crate::certify::certify_main(&inst.polynomial, &inst.root_vector(), &spec).unwrap();
        // a disk far away from every root
        cert.disks[0] = InclusionDisk {
            center: c(50.0, 50.0),
            radius: 0.1,
        };
        let record = verify_certificate(&cert, &inst);
        assert!(!record.verified);
        assert!(!record.violations.is_empty());
    }

    #[test]
    fn small_survey_is_deterministic_and_sound() {
        let config = SurveyConfig {
            trials: 60,
            ..SurveyConfig::default()
        };
        let a = survey(&config).unwrap();
        let b = survey(&config).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.total_violations(), 0);
        assert_eq!(a.trials, 60);
        // some satisfied certificates must occur at the small rho grades
        assert!(a.results["main-localization"].satisfied > 0);
        for tally in a.results.values() {
            assert_eq!(tally.satisfied, tally.verified);
        }
    }

    #[test]
    fn survey_rejects_bad_config() {
        let no_trials = SurveyConfig {
            trials: 0,
            ..SurveyConfig::default()
        };
        assert!(survey(&no_trials).is_err());
        let degree_too_small = SurveyConfig {
            n_min: 1,
            ..SurveyConfig::default()
        };
        assert!(survey(&degree_too_small).is_err());
        let bad_exponent = SurveyConfig {
            p_values: vec![0.5],
            ..SurveyConfig::default()
        };
        assert!(survey(&bad_exponent).is_err());
    }

    #[test]
    fn survey_report_round_trips() {
        let config = SurveyConfig {
            trials: 10,
            ..SurveyConfig::default()
        };
        let report = survey(&config).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        for key in [
            "\"trials\"",
            "\"results\"",
            "\"histogram\"",
            "\"seed\"",
            "\"config\"",
        ] {
            assert!(json.contains(key));
        }
        let back: SurveyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(
            serde_json::to_string(&back).unwrap(),
            serde_json::to_string(&report).unwrap()
        );
        assert!(back.config.p_values[2].is_infinite());
    }
}
