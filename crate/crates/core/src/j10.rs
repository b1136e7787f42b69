//! The mixed `J₁₀⁻` family
//! `z₂^a z̄₂^{3−a} − (k+3) z₁^b z̄₁^{2−b} z₂^c z̄₂^{2−c} + (3k+2) z₁^d z̄₁^{4−d} z₂^e z̄₂^{1−e} − 2k z₁^f z̄₁^{6−f}`,
//! its strongly mixed members, checkable identities from the
//! non-criticality argument for case IV, and the exploratory `k`-sweep.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{ratio_to_f64, ExactComplex};
use crate::error::{Error, Result};
use crate::homogeneity::{classify, verify_euler, WeightVector};
use crate::mixedpoly::{MixedPolynomial, MixedTerm};
use crate::mixedpoly::ExponentPair;
use crate::nondeg::{search_critical, SearchConfig, SearchReport};
use crate::C64;

/// Exponent ranges `a ≤ 3, b, c ≤ 2, d ≤ 4, e ≤ 1, f ≤ 6`.
pub const MAX_EXPONENTS: [u8; 6] = [3, 2, 2, 4, 1, 6];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct J10Params {
    /// `(a, b, c, d, e, f)`
    pub exps: [u8; 6],
    pub k: BigRational,
}

impl J10Params {
    pub fn new(exps: [u8; 6], k: BigRational) -> Result<Self> {
        if let Some(i) = (0..6).find(|&i| exps[i] > MAX_EXPONENTS[i]) {
            return Err(Error::OutOfRange(format!(
                "exponent {} = {} exceeds {}",
                "abcdef".as_bytes()[i] as char,
                exps[i],
                MAX_EXPONENTS[i]
            )));
        }
        if k <= BigRational::from_integer(BigInt::from(2)) {
            return Err(Error::OutOfRange(format!("k = {k} must exceed 2")));
        }
        Ok(Self { exps, k })
    }

    pub fn case(case: Case, k: BigRational) -> Result<Self> {
        Self::new(case.exps(), k)
    }
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The coefficients `1, −(k+3), 3k+2, −2k`.
pub fn coefficients(k: &BigRational) -> [BigRational; 4] {
    [int(1), -(k + int(3)), int(3) * k + int(2), -(int(2) * k)]
}

pub fn build(params: &J10Params) -> MixedPolynomial {
    let [a, b, c, d, e, f] = params.exps.map(u32::from);
    let shapes = [
        ([0, a], [0, 3 - a]),
        ([b, c], [2 - b, 2 - c]),
        ([d, e], [4 - d, 1 - e]),
        ([f, 0], [6 - f, 0]),
    ];
    let terms = coefficients(&params.k)
        .into_iter()
        .zip(shapes)
        .map(|(c, (nu, mu))| MixedTerm::new(ExactComplex::real(c), ExponentPair::new(nu.to_vec(), mu.to_vec())));
    MixedPolynomial::from_terms(2, terms)
}

/// The five strongly mixed members (polar degree positive).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
}

impl Case {
    pub const ALL: [Case; 5] = [Case::I, Case::II, Case::III, Case::IV, Case::V];

    pub fn exps(self) -> [u8; 6] {
        match self {
            Case::I => [3, 2, 2, 4, 1, 6],
            Case::II => [2, 2, 1, 4, 0, 4],
            Case::III => [2, 0, 2, 4, 0, 4],
            Case::IV => [2, 2, 1, 2, 1, 4],
            Case::V => [2, 0, 2, 2, 1, 4],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
            Case::V => "V",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.label().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub label: String,
    pub exps: [u8; 6],
    pub radial_degree: i64,
    pub polar_degree: i64,
    pub holomorphic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationTable {
    pub enumerated: usize,
    /// Strongly mixed with positive polar degree, labelled I, II, …
    pub rows: Vec<ClassRow>,
    /// Strongly mixed tuples with negative polar degree; these are the
    /// complex conjugates of the rows (`f ↦ f̄` flips the polar degree).
    pub conjugate_mirrors: Vec<ClassRow>,
}

const ROMAN: [&str; 10] = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"];

/// Enumerates all 2520 exponent tuples and keeps those that are strongly
/// mixed weighted homogeneous for `P = (1,2)`. Classification does not
/// depend on `k`; `k = 3` is used.
pub fn classify_family() -> ClassificationTable {
    classify_family_at(&int(3))
}

pub fn classify_family_at(k: &BigRational) -> ClassificationTable {
    let p = WeightVector::planar(1, 2);
    let mut rows = Vec::new();
    let mut mirrors = Vec::new();
    let mut enumerated = 0;
    for a in 0..=3u8 {
        for b in 0..=2u8 {
            for c in 0..=2u8 {
                for d in 0..=4u8 {
                    for e in 0..=1u8 {
                        for f in 0..=6u8 {
                            enumerated += 1;
                            let params = J10Params { exps: [a, b, c, d, e, f], k: k.clone() };
                            let poly = build(&params);
                            let cert = classify(&poly, &p).expect("planar nonzero weight");
                            if !cert.strongly_mixed {
                                continue;
                            }
                            let row = ClassRow {
                                label: String::new(),
                                exps: params.exps,
                                radial_degree: cert.radial_degree().unwrap(),
                                polar_degree: cert.polar_degree().unwrap(),
                                holomorphic: poly.is_holomorphic(),
                            };
                            if row.polar_degree > 0 {
                                rows.push(row);
                            } else {
                                mirrors.push(row);
                            }
                        }
                    }
                }
            }
        }
    }
    let key = |r: &ClassRow| (core::cmp::Reverse(r.polar_degree.abs()), core::cmp::Reverse(r.exps[3]), core::cmp::Reverse(r.exps[1]));
    rows.sort_by_key(key);
    mirrors.sort_by_key(key);
    for (i, r) in rows.iter_mut().enumerate() {
        r.label = ROMAN.get(i).map_or_else(|| format!("#{}", i + 1), |s| String::from(*s));
    }
    ClassificationTable { enumerated, rows, conjugate_mirrors: mirrors }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LemmaReport {
    pub k: BigRational,
    /// `(d_r ± d_p)/2` Euler identities hold exactly for case IV.
    pub euler_exact: bool,
    /// Max relative error of
    /// `ā₁∂f/∂z̄₁ + 2ā₂∂f/∂z̄₂ = 2[(11|a₁|⁴+|a₂|²)a₂ − 6(|a₁|⁴+|a₂|²)a₁²]`
    /// at random torus points (only for `k = 3`).
    pub constraint_identity_error: Option<f64>,
    /// Discriminant of `x² − 8x + 11`; its roots `4 ± √5` are `|a₂|²/|a₁|⁴`.
    pub modulus_discriminant: i64,
    /// `|a₂|⁴ − 8|a₁|⁴|a₂|² + 11|a₁|⁸` at `|a₁| = 1`, `|a₂|² = 4 ± √5`.
    pub modulus_residuals: [f64; 2],
    /// `ξ± = √(4 ± √5)`.
    pub xi: [f64; 2],
    /// `f(1, ξ±)`, the cubic `ξ³ − 6ξ² + 11ξ − 6` for `k = 3`.
    pub cubic_values: [f64; 2],
    /// Roots of `f(1, x)` for real `x`: `1, 2, k`.
    pub cubic_roots: [BigRational; 3],
    /// `f(1, x) = (x−1)(x−2)(x−k)` as exact polynomials.
    pub cubic_factorization_exact: bool,
}

impl LemmaReport {
    pub fn passes(&self) -> bool {
        let three = self.k == int(3);
        self.euler_exact
            && self.cubic_factorization_exact
            && (!three
                || (self.constraint_identity_error.is_some_and(|e| e < 1e-12)
                    && self.modulus_discriminant == 20
                    && self.modulus_residuals.iter().all(|r| r.abs() < 1e-12)
                    && self.cubic_values.iter().all(|v| v.abs() > 1e-3)))
    }
}

/// Coefficients of `f(1, x)` in powers of real `x`, exactly.
pub fn real_line_coefficients(f: &MixedPolynomial) -> Vec<BigRational> {
    let g = f.substitute(0, &ExactComplex::one());
    let mut out: Vec<BigRational> = Vec::new();
    for t in g.terms() {
        let d = (t.exps.nu[0] + t.exps.mu[0]) as usize;
        if out.len() <= d {
            out.resize(d + 1, BigRational::zero());
        }
        out[d] += t.coeff.re.clone();
    }
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Independent checks of the identities in the case-IV non-criticality
/// argument. For `k ≠ 3` only the `k`-generic parts are meaningful.
pub fn lemma_oracles(k: &BigRational) -> Result<LemmaReport> {
    let params = J10Params::case(Case::IV, k.clone())?;
    let f = build(&params);
    let euler = verify_euler(&f, &WeightVector::planar(1, 2))?;
    let euler_exact = euler.all_pass() && euler.half_degrees == Some((4, 2));

    let constraint_identity_error = (*k == int(3)).then(|| {
        let dz1b = f.wirtinger(0, true).compile();
        let dz2b = f.wirtinger(1, true).compile();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let a = [
                C64::from_polar(rng.gen_range(0.2..3.0), rng.gen_range(-3.2..3.2)),
                C64::from_polar(rng.gen_range(0.2..3.0), rng.gen_range(-3.2..3.2)),
            ];
            let lhs = a[0].conj() * dz1b.evaluate(&a) + 2.0 * a[1].conj() * dz2b.evaluate(&a);
            let (m1, m2) = (a[0].norm_sqr().powi(2), a[1].norm_sqr());
            let rhs = 2.0 * ((11.0 * m1 + m2) * a[1] - 6.0 * (m1 + m2) * a[0] * a[0]);
            worst = worst.max((lhs - rhs).norm() / rhs.norm().max(1.0));
        }
        worst
    });

    let sqrt5 = libm::sqrt(5.0);
    let squares = [4.0 + sqrt5, 4.0 - sqrt5];
    let modulus_residuals = squares.map(|s| s * s - 8.0 * s + 11.0);
    let xi = squares.map(libm::sqrt);
    let fc = f.compile();
    let cubic_values = xi.map(|x| fc.evaluate(&[C64::new(1.0, 0.0), C64::new(x, 0.0)]).re);

    let roots = [int(1), int(2), k.clone()];
    let product = roots.iter().fold(vec![int(1)], |acc, r| poly_mul(&acc, &[-r.clone(), int(1)]));
    let cubic_factorization_exact = real_line_coefficients(&f) == product;

    Ok(LemmaReport {
        k: k.clone(),
        euler_exact,
        constraint_identity_error,
        modulus_discriminant: 8 * 8 - 4 * 11,
        modulus_residuals,
        xi,
        cubic_values,
        cubic_roots: roots,
        cubic_factorization_exact,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub case: Case,
    pub k: BigRational,
    pub report: SearchReport,
}

impl SweepRow {
    pub fn k_f64(&self) -> f64 {
        ratio_to_f64(&self.k)
    }
}

/// One `(case, k)` cell of the sweep.
pub fn sweep_one(case: Case, k: &BigRational, cfg: &SearchConfig) -> Result<SweepRow> {
    let f = build(&J10Params::case(case, k.clone())?);
    Ok(SweepRow { case, k: k.clone(), report: search_critical(&f, cfg)? })
}

/// Exploratory critical-point search over a grid of `k`; finds evidence,
/// never a proof either way.
pub fn sweep(case: Case, k_grid: &[BigRational], cfg: &SearchConfig) -> Result<Vec<SweepRow>> {
    k_grid.iter().map(|k| sweep_one(case, k, cfg)).collect()
}

/// `start, start+step, …` up to and including `stop`, exactly.
pub fn k_grid(start: &BigRational, stop: &BigRational, step: &BigRational) -> Result<Vec<BigRational>> {
    if !step.is_positive() {
        return Err(Error::OutOfRange(format!("step {step} must be positive")));
    }
    let mut out = Vec::new();
    let mut k = start.clone();
    while k <= *stop {
        out.push(k.clone());
        k += step;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::newton_polyhedron;
    use crate::parse::parse;

    const CASE_IV: &str = "z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2";

    fn p(s: &str) -> MixedPolynomial {
        parse(s, &Default::default()).unwrap()
    }

    #[test]
    fn build_examples() {
        let f = build(&J10Params::case(Case::IV, int(3)).unwrap());
        assert_eq!(f, p(CASE_IV));
        let h = build(&J10Params::case(Case::I, int(3)).unwrap());
        assert_eq!(h, p("(z2 - z1^2)*(z2 - 2*z1^2)*(z2 - 3*z1^2)"));
        assert!(J10Params::new([2, 2, 1, 2, 1, 4], int(2)).is_err());
        assert!(J10Params::new([4, 2, 1, 2, 1, 4], int(3)).is_err());
    }

    #[test]
    fn newton_support_is_uniform() {
        for exps in [[0, 0, 0, 0, 0, 0], [3, 2, 2, 4, 1, 6], [1, 1, 0, 3, 1, 2]] {
            let f = build(&J10Params::new(exps, ratio(7, 2)).unwrap());
            let pts: Vec<_> = newton_polyhedron(&f).unwrap().support.into_iter().map(|s| s.point).collect();
            assert_eq!(pts, [vec![0, 3], vec![2, 2], vec![4, 1], vec![6, 0]]);
        }
    }

    #[test]
    fn classification_table() {
        let t = classify_family();
        assert_eq!(t.enumerated, 2520);
        let got: Vec<_> = t.rows.iter().map(|r| (r.label.as_str(), r.exps, r.polar_degree)).collect();
        let want: Vec<_> = Case::ALL
            .iter()
            .map(|c| (c.label(), c.exps(), if *c == Case::I { 6 } else { 2 }))
            .collect();
        assert_eq!(got, want);
        assert!(t.rows[0].holomorphic && t.rows[1..].iter().all(|r| !r.holomorphic));
        assert!(t.rows.iter().all(|r| r.radial_degree == 6));
        assert_eq!(t.conjugate_mirrors.len(), 5);
        assert_eq!(classify_family_at(&ratio(5, 2)).rows, t.rows);
    }

    #[test]
    fn lemma_chain_k3() {
        let r = lemma_oracles(&int(3)).unwrap();
        assert!(r.passes(), "{r:?}");
        assert!((r.xi[0] - 2.4966).abs() < 1e-3);
        assert!(r.cubic_values[0] < -0.3 && r.cubic_values[1] > 0.03);
        let r = lemma_oracles(&ratio(5, 2)).unwrap();
        assert!(r.passes());
        assert!(r.constraint_identity_error.is_none());
    }

    #[test]
    fn grids() {
        let g = k_grid(&ratio(5, 2), &int(5), &ratio(1, 2)).unwrap();
        assert_eq!(g.len(), 6);
        assert!(sweep(Case::IV, &[], &SearchConfig::default()).unwrap().is_empty());
    }
}
