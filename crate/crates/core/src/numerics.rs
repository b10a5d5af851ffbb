//! Complex polynomials, p-norms and the component-distance quantities that
//! every localization bound is phrased in.
//!
//! Distances between guess components are exact: two components are
//! "coinciding" only when their difference is exactly zero. Nearly equal
//! components are legal inputs that simply lead to large corrections and
//! large inclusion disks.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A complex polynomial stored leading-to-constant.
///
/// The leading coefficient is kept explicit because the Weierstrass
/// correction divides by it.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients ordered leading-to-constant.
    ///
    /// Requires degree >= 2 and a nonzero, finite leading coefficient.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 3 {
            return Err(Error::InvalidPolynomial("degree must be at least 2"));
        }
        let lead = coeffs[0];
        if lead.norm() == 0.0 {
            return Err(Error::InvalidPolynomial("leading coefficient is zero"));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidPolynomial("non-finite coefficient"));
        }
        Ok(Self { coeffs })
    }

    /// Degree of the polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The leading coefficient.
    pub fn leading(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Coefficients, leading first.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Evaluates the polynomial at `z` by Horner's scheme (one pass).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in &self.coeffs {
            acc = acc * z + c;
        }
        acc
    }
}

/// A vector of simultaneous root approximations.
#[derive(Debug, Clone, PartialEq)]
pub struct GuessVector {
    components: Vec<Complex64>,
}

impl GuessVector {
    pub fn new(components: Vec<Complex64>) -> Self {
        Self { components }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    /// True iff all components are pairwise distinct, exactly.
    pub fn is_distinct(&self) -> bool {
        let x = &self.components;
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                if x[i] == x[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Max modulus of the components (0 for the empty vector).
    pub fn norm_inf(&self) -> f64 {
        self.components.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

impl From<Vec<Complex64>> for GuessVector {
    fn from(components: Vec<Complex64>) -> Self {
        Self::new(components)
    }
}

/// The vector of distances from each component to its nearest neighbour.
///
/// Every entry is strictly positive; construction fails on coinciding
/// components.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceVector {
    values: Vec<f64>,
}

impl DistanceVector {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Smallest entry, i.e. the overall component separation.
    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Distance from each component of `x` to the nearest other component.
pub fn distance_vector(x: &GuessVector) -> Result<DistanceVector> {
    let c = x.components();
    if c.len() < 2 {
        return Err(Error::DegenerateGuess("fewer than two components"));
    }
    let mut values = Vec::with_capacity(c.len());
    for i in 0..c.len() {
        let mut best = f64::INFINITY;
        for j in 0..c.len() {
            if j != i {
                best = best.min((c[i] - c[j]).norm());
            }
        }
        if best == 0.0 {
            return Err(Error::DegenerateGuess("coinciding components"));
        }
        values.push(best);
    }
    Ok(DistanceVector { values })
}

/// Minimum pairwise component distance; 0 when components coincide.
pub fn separation(x: &GuessVector) -> f64 {
    let c = x.components();
    let mut best = f64::INFINITY;
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            best = best.min((c[i] - c[j]).norm());
        }
    }
    if best.is_finite() {
        best
    } else {
        0.0
    }
}

/// The real vector with entries `|x_i| / y_i`.
///
/// `y` must have the same length as `x` and strictly positive entries.
pub fn componentwise_ratio(x: &[Complex64], y: &[f64]) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: y.len(),
            got: x.len(),
        });
    }
    x.iter()
        .zip(y)
        .map(|(xi, &yi)| {
            if yi <= 0.0 {
                Err(Error::DegenerateGuess("zero denominator entry"))
            } else {
                Ok(xi.norm() / yi)
            }
        })
        .collect()
}

/// Conjugate exponent `q` of `p`, with `q = inf` for `p = 1` and `q = 1`
/// for `p = inf`.
pub fn conjugate_exponent(p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    if p == 1.0 {
        Ok(f64::INFINITY)
    } else if p.is_infinite() {
        Ok(1.0)
    } else {
        Ok(p / (p - 1.0))
    }
}

/// The constants `a = (n-1)^(1/q)` and `b = 2^(1/q)` for degree `n` and
/// exponent `p`; both equal 1 when `q = inf`.
pub fn norm_constants(n: usize, p: f64) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::Domain(format!("degree n = {n} must be at least 2")));
    }
    let q = conjugate_exponent(p)?;
    // The endpoint exponents are exact integers; bypass powf so that the
    // localization constants carry no spurious rounding there.
    let (a, b) = if q.is_infinite() {
        (1.0, 1.0)
    } else if q == 1.0 {
        ((n - 1) as f64, 2.0)
    } else {
        let inv_q = 1.0 / q;
        (((n - 1) as f64).powf(inv_q), 2f64.powf(inv_q))
    };
    Ok((a, b))
}

/// A p-norm exponent together with the degree-dependent constants the
/// localization bounds use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PNormSpec {
    /// Exponent in `[1, inf]`.
    pub p: f64,
    /// Conjugate exponent, `1/p + 1/q = 1`.
    pub q: f64,
    /// Degree context.
    pub n: usize,
    /// `(n-1)^(1/q)`, between 1 and n-1.
    pub a: f64,
    /// `2^(1/q)`, between 1 and 2.
    pub b: f64,
}

impl PNormSpec {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        let q = conjugate_exponent(p)?;
        let (a, b) = norm_constants(n, p)?;
        Ok(Self { p, q, n, a, b })
    }

    /// True for the degree-2 sup-norm case where several bounds must hold
    /// strictly.
    pub fn is_strict_boundary(&self) -> bool {
        self.n == 2 && self.p.is_infinite()
    }
}

/// The p-norm of a real vector.
///
/// Finite exponents are computed with the maximum factored out so that
/// large `p` does not overflow `|v_i|^p`.
pub fn p_norm(v: &[f64], spec: &PNormSpec) -> f64 {
    let p = spec.p;
    let max = v.iter().map(|x| x.abs()).fold(0.0, f64::max);
    if max == 0.0 || p.is_infinite() {
        return max;
    }
    if p == 1.0 {
        return v.iter().map(|x| x.abs()).sum();
    }
    if p == 2.0 {
        let sum: f64 = v.iter().map(|x| (x.abs() / max).powi(2)).sum();
        return max * sum.sqrt();
    }
    let sum: f64 = v.iter().map(|x| (x.abs() / max).powf(p)).sum();
    max * sum.powf(1.0 / p)
}
