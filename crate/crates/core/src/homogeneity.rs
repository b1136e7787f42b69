//! Radial and polar weighted homogeneity: degrees, Euler identities, the
//! `ℝ₊` and `S¹` actions, and certificates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::ExactComplex;
use crate::error::{Error, Result};
use crate::mixedpoly::{ExponentPair, MixedPolynomial};
use crate::C64;

/// Integer covector `P = (p₁, …, pₙ)`, never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() || entries.iter().all(|&e| e == 0) {
            return Err(Error::InvalidWeight("zero weight vector".into()));
        }
        Ok(Self(entries))
    }

    pub fn planar(p1: i64, p2: i64) -> Self {
        Self::new(vec![p1, p2]).expect("nonzero planar weight")
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `P ≫ 0`: every entry strictly positive.
    pub fn strictly_positive(&self) -> bool {
        self.0.iter().all(|&p| p > 0)
    }

    pub fn non_negative(&self) -> bool {
        self.0.iter().all(|&p| p >= 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.0.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1
    }

    /// Divides out the gcd of the entries.
    pub fn primitive(&self) -> Self {
        let g = self.0.iter().fold(0i64, |g, &x| g.gcd(&x));
        Self(self.0.iter().map(|x| x / g).collect())
    }

    pub fn apply_u32(&self, v: &[u32]) -> i64 {
        self.0.iter().zip(v).map(|(p, &x)| p * x as i64).sum()
    }

    pub fn apply_i64(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(p, x)| p * x).sum()
    }

    /// `P(ν + μ)`
    pub fn radial_of(&self, e: &ExponentPair) -> i64 {
        self.apply_u32(&e.nu) + self.apply_u32(&e.mu)
    }

    /// `P(ν − μ)`
    pub fn polar_of(&self, e: &ExponentPair) -> i64 {
        self.apply_u32(&e.nu) - self.apply_u32(&e.mu)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn check_weight(f: &MixedPolynomial, w: &WeightVector) -> Result<()> {
    f.require_nonzero()?;
    if w.dim() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: w.dim() });
    }
    Ok(())
}

fn constant_value<I: Iterator<Item = i64>>(mut it: I) -> Option<i64> {
    let first = it.next()?;
    it.all(|v| v == first).then_some(first)
}

/// The common value of `P(ν+μ)` over all terms, whatever its sign.
pub fn radial_constant(f: &MixedPolynomial, p: &WeightVector) -> Result<Option<i64>> {
    check_weight(f, p)?;
    Ok(constant_value(f.terms().iter().map(|t| p.radial_of(&t.exps))))
}

/// Radial degree `d_r > 0` of `f` with respect to `P`, if `f` is radially
/// weighted homogeneous.
pub fn radial_degree(f: &MixedPolynomial, p: &WeightVector) -> Result<Option<i64>> {
    Ok(radial_constant(f, p)?.filter(|&d| d > 0))
}

/// Polar degree `d_p` (any sign) of `f` with respect to `Q`.
pub fn polar_degree(f: &MixedPolynomial, q: &WeightVector) -> Result<Option<i64>> {
    check_weight(f, q)?;
    Ok(constant_value(f.terms().iter().map(|t| q.polar_of(&t.exps))))
}

/// `Σ_j w_j z_j ∂f/∂z_j` (holomorphic half) or `Σ_j w_j z̄_j ∂f/∂z̄_j`.
pub fn euler_half(f: &MixedPolynomial, w: &WeightVector, conjugated: bool) -> MixedPolynomial {
    let n = f.n();
    let mut acc = MixedPolynomial::zero(n);
    for (j, &wj) in w.entries().iter().enumerate() {
        if wj == 0 {
            continue;
        }
        let mut e = ExponentPair::zero(n);
        if conjugated {
            e.mu[j] = 1;
        } else {
            e.nu[j] = 1;
        }
        let part = f.wirtinger(j, conjugated).mul_monomial(&e).scale(&ExactComplex::from_int(wj));
        acc = &acc + &part;
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub weight: WeightVector,
    pub radial_degree: Option<i64>,
    pub polar_degree: Option<i64>,
    /// `Σ p_j (z_j ∂_j f + z̄_j ∂̄_j f) = d_r f`, when checked.
    pub radial_identity: Option<bool>,
    /// `Σ p_j (z_j ∂_j f − z̄_j ∂̄_j f) = d_p f`, when checked.
    pub polar_identity: Option<bool>,
    /// `((d_r+d_p)/2, (d_r−d_p)/2)` when both are integral.
    pub half_degrees: Option<(i64, i64)>,
    /// `Σ p_j z_j ∂_j f = ((d_r+d_p)/2) f` and `Σ p_j z̄_j ∂̄_j f = ((d_r−d_p)/2) f`.
    pub half_identities: Option<(bool, bool)>,
    pub notes: Vec<String>,
}

impl EulerReport {
    pub fn all_pass(&self) -> bool {
        self.radial_identity != Some(false)
            && self.polar_identity != Some(false)
            && self.half_identities.is_none_or(|(a, b)| a && b)
    }
}

/// Checks the Euler equalities as exact polynomial identities.
pub fn verify_euler(f: &MixedPolynomial, p: &WeightVector) -> Result<EulerReport> {
    let dr = radial_degree(f, p)?;
    let dp = polar_degree(f, p)?;
    if dr.is_none() && dp.is_none() {
        return Err(Error::NotHomogeneous(format!(
            "f is neither radially nor polar weighted homogeneous w.r.t. {p}"
        )));
    }
    let hol = euler_half(f, p, false);
    let anti = euler_half(f, p, true);
    let mut notes = Vec::new();
    let scaled = |d: i64| f.scale(&ExactComplex::from_int(d));

    let radial_identity = dr.map(|d| &hol + &anti == scaled(d));
    if dr.is_none() {
        notes.push(format!("radial identity skipped: not radially homogeneous w.r.t. {p}"));
    }
    let polar_identity = dp.map(|d| &hol - &anti == scaled(d));
    if dp.is_none() {
        notes.push(format!("polar identity skipped: not polar homogeneous w.r.t. {p}"));
    }
    let (half_degrees, half_identities) = match (dr, dp) {
        (Some(r), Some(q)) if (r + q) % 2 == 0 => {
            let (a, b) = ((r + q) / 2, (r - q) / 2);
            (Some((a, b)), Some((hol == scaled(a), anti == scaled(b))))
        }
        (Some(_), Some(_)) => {
            notes.push("half-degree identities skipped: d_r ± d_p is odd".into());
            (None, None)
        }
        _ => (None, None),
    };
    Ok(EulerReport {
        weight: p.clone(),
        radial_degree: dr,
        polar_degree: dp,
        radial_identity,
        polar_identity,
        half_degrees,
        half_identities,
        notes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneityCertificate {
    pub weight: WeightVector,
    pub radial: Option<(WeightVector, i64)>,
    pub polar: Option<(WeightVector, i64)>,
    /// `P(ν+μ)` is constant but equal to zero.
    pub radial_degenerate: bool,
    pub strongly_mixed: bool,
    pub polar_positive: bool,
}

impl HomogeneityCertificate {
    pub fn radial_degree(&self) -> Option<i64> {
        self.radial.as_ref().map(|r| r.1)
    }

    pub fn polar_degree(&self) -> Option<i64> {
        self.polar.as_ref().map(|r| r.1)
    }
}

/// Certifies radial and polar homogeneity of `f` w.r.t. the single weight `P`.
pub fn classify(f: &MixedPolynomial, p: &WeightVector) -> Result<HomogeneityCertificate> {
    let constant = radial_constant(f, p)?;
    let dr = constant.filter(|&d| d > 0 && p.non_negative());
    let dp = polar_degree(f, p)?;
    let strongly_mixed = dr.is_some() && dp.is_some();
    Ok(HomogeneityCertificate {
        weight: p.clone(),
        radial: dr.map(|d| (p.clone(), d)),
        polar: dp.map(|d| (p.clone(), d)),
        radial_degenerate: constant == Some(0),
        strongly_mixed,
        polar_positive: strongly_mixed && dp.is_some_and(|d| d > 0),
    })
}

/// Result of solving the weight-constancy system for one kind of degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightSolution {
    /// Every weight works (all terms share one exponent vector).
    Any,
    /// The unique primitive weight up to sign, sign-normalized.
    Unique(WeightVector),
    None,
}

/// Admissible radial and polar weights for a planar `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiscovery {
    pub radial: WeightSolution,
    pub polar: WeightSolution,
}

fn solve_constancy(points: &[[i64; 2]]) -> Option<[i64; 2]> {
    // None: all points coincide
    let base = points[0];
    let diffs: Vec<[i64; 2]> =
        points.iter().map(|p| [p[0] - base[0], p[1] - base[1]]).filter(|d| *d != [0, 0]).collect();
    let d = *diffs.first()?;
    let g = d[0].gcd(&d[1]);
    let w = [-d[1] / g, d[0] / g];
    if diffs.iter().all(|e| w[0] * e[0] + w[1] * e[1] == 0) {
        Some(w)
    } else {
        Some([0, 0])
    }
}

/// Solves for all weights making `f` radially / polar homogeneous (n = 2).
///
/// The radial weight must be non-negative with positive degree; the polar
/// weight is normalized so its first nonzero entry is positive.
pub fn discover_weights(f: &MixedPolynomial) -> Result<WeightDiscovery> {
    f.require_planar()?;
    f.require_nonzero()?;
    let rad: Vec<[i64; 2]> =
        f.terms().iter().map(|t| t.exps.radial()).map(|s| [s[0] as i64, s[1] as i64]).collect();
    let pol: Vec<[i64; 2]> =
        f.terms().iter().map(|t| t.exps.polar()).map(|s| [s[0], s[1]]).collect();

    let radial = match solve_constancy(&rad) {
        None => WeightSolution::Any,
        Some([0, 0]) => WeightSolution::None,
        Some(w) => {
            let w = if w[0] < 0 || w[1] < 0 { [-w[0], -w[1]] } else { w };
            let d = w[0] * rad[0][0] + w[1] * rad[0][1];
            if w[0] >= 0 && w[1] >= 0 && d > 0 {
                WeightSolution::Unique(WeightVector::planar(w[0], w[1]))
            } else {
                WeightSolution::None
            }
        }
    };
    let polar = match solve_constancy(&pol) {
        None => WeightSolution::Any,
        Some([0, 0]) => WeightSolution::None,
        Some(w) => {
            let w = if w[0] < 0 || (w[0] == 0 && w[1] < 0) { [-w[0], -w[1]] } else { w };
            WeightSolution::Unique(WeightVector::planar(w[0], w[1]))
        }
    };
    Ok(WeightDiscovery { radial, polar })
}

/// `t ∘ z = (t^{p₁} z₁, …)` for real `t > 0`.
pub fn radial_action(z: &[C64], p: &WeightVector, t: f64) -> Vec<C64> {
    z.iter().zip(p.entries()).map(|(zj, &pj)| zj * libm::pow(t, pj as f64)).collect()
}

/// `θ ∘ z = (e^{i q₁ θ} z₁, …)`.
pub fn polar_action(z: &[C64], q: &WeightVector, theta: f64) -> Vec<C64> {
    z.iter().zip(q.entries()).map(|(zj, &qj)| zj * C64::from_polar(1.0, qj as f64 * theta)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActionReport {
    pub samples: usize,
    pub radial_max_rel_err: Option<f64>,
    pub polar_max_rel_err: Option<f64>,
    pub tolerance: f64,
}

impl ActionReport {
    pub fn pass(&self) -> bool {
        self.radial_max_rel_err.is_none_or(|e| e < self.tolerance)
            && self.polar_max_rel_err.is_none_or(|e| e < self.tolerance)
    }
}

/// Sum of the moduli of the individual terms at `z`; the natural scale for
/// relative errors of `f(z)` (which may itself vanish).
pub fn term_magnitude(f: &MixedPolynomial, z: &[C64]) -> f64 {
    f.terms()
        .iter()
        .map(|t| {
            let mut m = t.coeff.to_c64().norm();
            for (j, zj) in z.iter().enumerate() {
                m *= libm::pow(zj.norm(), (t.exps.nu[j] + t.exps.mu[j]) as f64);
            }
            m
        })
        .sum()
}

/// Relative error of the radial law `f(t∘z) = t^{d_r} f(z)` at one point.
pub fn radial_law_error(f: &MixedPolynomial, p: &WeightVector, dr: i64, z: &[C64], t: f64) -> f64 {
    let lhs = f.evaluate(&radial_action(z, p, t));
    let rhs = f.evaluate(z) * libm::pow(t, dr as f64);
    let scale = term_magnitude(f, z) * libm::pow(t, dr as f64);
    (lhs - rhs).norm() / scale.max(f64::MIN_POSITIVE)
}

/// Relative error of the polar law `f(θ∘z) = e^{i d_p θ} f(z)` at one point.
pub fn polar_law_error(f: &MixedPolynomial, q: &WeightVector, dp: i64, z: &[C64], theta: f64) -> f64 {
    let lhs = f.evaluate(&polar_action(z, q, theta));
    let rhs = f.evaluate(z) * C64::from_polar(1.0, dp as f64 * theta);
    (lhs - rhs).norm() / term_magnitude(f, z).max(f64::MIN_POSITIVE)
}

/// Numerically checks both group-action laws at `samples` random torus points.
///
/// Errors are measured relative to the sum of term moduli, since `f(z)` can
/// vanish at a sample point.
pub fn check_action(
    f: &MixedPolynomial,
    p: &WeightVector,
    samples: usize,
    seed: u64,
) -> Result<ActionReport> {
    let cert = classify(f, p)?;
    if cert.radial.is_none() && cert.polar.is_none() {
        return Err(Error::NotHomogeneous(format!("no certificate for weight {p}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rad_err: Option<f64> = cert.radial.as_ref().map(|_| 0.0);
    let mut pol_err: Option<f64> = cert.polar.as_ref().map(|_| 0.0);
    for _ in 0..samples {
        let z: Vec<C64> = (0..f.n())
            .map(|_| C64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..core::f64::consts::TAU)))
            .collect();
        let t: f64 = rng.gen_range(0.25..4.0);
        let theta: f64 = rng.gen_range(0.0..core::f64::consts::TAU);
        if let (Some(e), Some((_, d))) = (rad_err.as_mut(), cert.radial.as_ref()) {
            *e = e.max(radial_law_error(f, p, *d, &z, t));
        }
        if let (Some(e), Some((_, d))) = (pol_err.as_mut(), cert.polar.as_ref()) {
            *e = e.max(polar_law_error(f, p, *d, &z, theta));
        }
    }
    Ok(ActionReport { samples, radial_max_rel_err: rad_err, polar_max_rel_err: pol_err, tolerance: 1e-9 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> MixedPolynomial {
        parse(s, &Default::default()).unwrap()
    }

    const CASE_IV: &str = "z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2";

    #[test]
    fn degree_examples() {
        let w12 = WeightVector::planar(1, 2);
        assert_eq!(radial_degree(&p(CASE_IV), &w12).unwrap(), Some(6));
        assert_eq!(radial_degree(&p("z2^2*~z2"), &WeightVector::planar(1, 1)).unwrap(), Some(3));
        assert_eq!(radial_degree(&p("z1 + z2"), &w12).unwrap(), None);
        assert_eq!(polar_degree(&p(CASE_IV), &w12).unwrap(), Some(2));
        assert_eq!(polar_degree(&p("-6*z1^4*~z1^2"), &WeightVector::planar(1, 3)).unwrap(), Some(2));
        assert_eq!(
            polar_degree(&p("z1^2*~z1 - z2*~z2^2"), &WeightVector::planar(1, -1)).unwrap(),
            Some(1)
        );
        assert_eq!(radial_degree(&p("0"), &w12), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn euler_case_iv() {
        let r = verify_euler(&p(CASE_IV), &WeightVector::planar(1, 2)).unwrap();
        assert_eq!(r.radial_identity, Some(true));
        assert_eq!(r.polar_identity, Some(true));
        assert_eq!(r.half_degrees, Some((4, 2)));
        assert_eq!(r.half_identities, Some((true, true)));
    }

    #[test]
    fn euler_rejects_non_homogeneous() {
        let e = verify_euler(&p("z1 + z2^3*~z1"), &WeightVector::planar(1, 2));
        assert!(matches!(e, Err(Error::NotHomogeneous(_))));
        let r = verify_euler(&p("z1^2*~z1 - z2*~z2^2"), &WeightVector::planar(1, 1)).unwrap();
        assert_eq!(r.polar_identity, None);
        assert_eq!(r.radial_identity, Some(true));
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&p(CASE_IV), &WeightVector::planar(1, 2)).unwrap();
        assert!(c.strongly_mixed && c.polar_positive);
        assert_eq!((c.radial_degree(), c.polar_degree()), (Some(6), Some(2)));

        let rho = classify(&p("z1*~z1 + z2*~z2"), &WeightVector::planar(1, 1)).unwrap();
        assert_eq!((rho.radial_degree(), rho.polar_degree()), (Some(2), Some(0)));
        assert!(rho.strongly_mixed && !rho.polar_positive);

        let holo = classify(&p("z2^3 - 6*z1^2*z2^2 + 11*z1^4*z2 - 6*z1^6"), &WeightVector::planar(1, 2))
            .unwrap();
        assert_eq!((holo.radial_degree(), holo.polar_degree()), (Some(6), Some(6)));

        let degenerate = classify(&p("z1*z2"), &WeightVector::planar(1, -1)).unwrap();
        assert!(degenerate.radial_degenerate && degenerate.radial.is_none());
    }

    #[test]
    fn discovery() {
        let d = discover_weights(&p(CASE_IV)).unwrap();
        assert_eq!(d.radial, WeightSolution::Unique(WeightVector::planar(1, 2)));
        assert_eq!(d.polar, WeightSolution::Unique(WeightVector::planar(1, 2)));
        let oka = discover_weights(&p("z1^2*~z1 - z2*~z2^2")).unwrap();
        assert_eq!(oka.radial, WeightSolution::Unique(WeightVector::planar(1, 1)));
        assert_eq!(oka.polar, WeightSolution::Unique(WeightVector::planar(1, -1)));
        let mono = discover_weights(&p("z1*~z1")).unwrap();
        assert_eq!(mono.radial, WeightSolution::Any);
        let none = discover_weights(&p("z1 + z2 + z1*z2")).unwrap();
        assert_eq!(none.radial, WeightSolution::None);
    }

    #[test]
    fn action_laws() {
        let f = p(CASE_IV);
        let w = WeightVector::planar(1, 2);
        let one = [C64::new(1.0, 0.0); 2];
        let e = radial_law_error(&f, &w, 6, &one, 2.0);
        assert!(e < 1e-9, "{e}");
        assert_eq!(radial_law_error(&f, &w, 6, &[C64::new(0.3, 0.7), C64::new(-1.1, 0.2)], 1.0), 0.0);
        assert_eq!(polar_law_error(&f, &w, 2, &[C64::new(0.3, 0.7), C64::new(-1.1, 0.2)], 0.0), 0.0);
        let r = check_action(&f, &w, 100, 7).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
