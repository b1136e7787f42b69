//! Sparse mixed polynomials `Σ c_{ν,μ} z^ν z̄^μ` with exact coefficients.
//!
//! A [`MixedPolynomial`] is always kept in canonical form: no zero
//! coefficients, no repeated exponent pairs, and terms sorted by
//! [`term_order`]. Two polynomials are equal exactly when their term lists are.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::coeff::ExactComplex;
use crate::error::{Error, Result};
use crate::C64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentPair {
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
}

impl ExponentPair {
    pub fn new(nu: Vec<u32>, mu: Vec<u32>) -> Self {
        assert_eq!(nu.len(), mu.len(), "ν and μ must have the same length");
        Self { nu, mu }
    }

    pub fn zero(n: usize) -> Self {
        Self { nu: vec![0; n], mu: vec![0; n] }
    }

    pub fn dim(&self) -> usize {
        self.nu.len()
    }

    /// `ν + μ`, the point this term contributes to the radial Newton polyhedron.
    pub fn radial(&self) -> Vec<u32> {
        self.nu.iter().zip(&self.mu).map(|(a, b)| a + b).collect()
    }

    /// `ν − μ`.
    pub fn polar(&self) -> Vec<i64> {
        self.nu.iter().zip(&self.mu).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn swapped(&self) -> Self {
        Self { nu: self.mu.clone(), mu: self.nu.clone() }
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self {
            nu: self.nu.iter().zip(&other.nu).map(|(a, b)| a + b).collect(),
            mu: self.mu.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
        }
    }
}

/// The fixed total order on exponent pairs used for canonical form.
///
/// With `s = ν + μ`: ascending in `s₁`, then descending in `s₂, …, sₙ`, then
/// descending in `ν` (holomorphic factors first), then descending in `μ`.
/// For two variables this lists `z₂³ − 6z₁²z₂² + 11z₁⁴z₂ − 6z₁⁶` and chart
/// polynomials such as `u₂²ū₂ − 6u₂ū₂ + 11u₂ − 6` in their familiar order.
pub fn term_order(a: &ExponentPair, b: &ExponentPair) -> Ordering {
    let sa = a.radial();
    let sb = b.radial();
    let mut ord = Ordering::Equal;
    for (j, (x, y)) in sa.iter().zip(&sb).enumerate() {
        let o = if j == 0 { x.cmp(y) } else { y.cmp(x) };
        if o != Ordering::Equal {
            ord = o;
            break;
        }
    }
    ord.then_with(|| b.nu.cmp(&a.nu)).then_with(|| b.mu.cmp(&a.mu))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedTerm {
    pub coeff: ExactComplex,
    pub exps: ExponentPair,
}

impl MixedTerm {
    pub fn new(coeff: ExactComplex, exps: ExponentPair) -> Self {
        Self { coeff, exps }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedPolynomial {
    n: usize,
    terms: Vec<MixedTerm>,
}

impl MixedPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: ExactComplex) -> Self {
        Self::from_terms(n, [MixedTerm::new(c, ExponentPair::zero(n))])
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactComplex::one())
    }

    pub fn monomial(n: usize, coeff: ExactComplex, nu: Vec<u32>, mu: Vec<u32>) -> Self {
        Self::from_terms(n, [MixedTerm::new(coeff, ExponentPair::new(nu, mu))])
    }

    /// `z_j` (or `z̄_j` when `conjugated`), zero-based `j`.
    pub fn variable(n: usize, j: usize, conjugated: bool) -> Self {
        let mut e = ExponentPair::zero(n);
        if conjugated {
            e.mu[j] = 1;
        } else {
            e.nu[j] = 1;
        }
        Self::from_terms(n, [MixedTerm::new(ExactComplex::one(), e)])
    }

    /// Builds the canonical form from arbitrary terms: merges equal exponent
    /// pairs, drops zeros and sorts.
    pub fn from_terms<I: IntoIterator<Item = MixedTerm>>(n: usize, terms: I) -> Self {
        let mut terms: Vec<MixedTerm> = terms.into_iter().collect();
        for t in &terms {
            assert_eq!(t.exps.dim(), n, "term dimension differs from ambient dimension");
        }
        terms.sort_by(|a, b| term_order(&a.exps, &b.exps));
        let mut out: Vec<MixedTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.exps == t.exps => last.coeff += &t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Self { n, terms: out }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[MixedTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.iter().all(|t| t.exps.mu.iter().all(|&m| m == 0))
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_real())
    }

    pub fn require_planar(&self) -> Result<()> {
        if self.n != 2 {
            return Err(Error::NotPlanar(self.n));
        }
        Ok(())
    }

    pub fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(())
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_terms(self.n, self.terms.iter().chain(&other.terms).cloned()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut prod = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                prod.push(MixedTerm::new(&a.coeff * &b.coeff, a.exps.plus(&b.exps)));
            }
        }
        Ok(Self::from_terms(self.n, prod))
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().map(|t| MixedTerm::new(&t.coeff * c, t.exps.clone())),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial `z^ν z̄^μ`.
    pub fn mul_monomial(&self, e: &ExponentPair) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().map(|t| MixedTerm::new(t.coeff.clone(), t.exps.plus(e))),
        )
    }

    /// Wirtinger derivative `∂/∂z_j` (or `∂/∂z̄_j` when `conjugated`).
    ///
    /// Panics if `var >= n`.
    pub fn wirtinger(&self, var: usize, conjugated: bool) -> Self {
        assert!(var < self.n, "variable index {var} out of range");
        let terms = self.terms.iter().filter_map(|t| {
            let k = if conjugated { t.exps.mu[var] } else { t.exps.nu[var] };
            if k == 0 {
                return None;
            }
            let mut e = t.exps.clone();
            if conjugated {
                e.mu[var] -= 1;
            } else {
                e.nu[var] -= 1;
            }
            Some(MixedTerm::new(t.coeff.scale_int(k as i64), e))
        });
        Self::from_terms(self.n, terms)
    }

    /// Swaps `ν ↔ μ` and conjugates every coefficient, so that
    /// `conjugate(f)(z) = conj(f(z))`.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(
            self.n,
            self.terms.iter().map(|t| MixedTerm::new(t.coeff.conj(), t.exps.swapped())),
        )
    }

    /// Restriction to the coordinate subspace `{z_j = 0 : j ∉ keep}`.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let terms = self.terms.iter().filter(|t| {
            (0..self.n).all(|j| keep.contains(&j) || (t.exps.nu[j] == 0 && t.exps.mu[j] == 0))
        });
        Self::from_terms(self.n, terms.cloned())
    }

    /// Keeps the terms selected by `pred`.
    pub fn filter_terms<F: FnMut(&MixedTerm) -> bool>(&self, mut pred: F) -> Self {
        Self::from_terms(self.n, self.terms.iter().filter(|t| pred(t)).cloned())
    }

    /// Drops variable `var` entirely, returning a polynomial in `n − 1`
    /// variables. Terms that involve `var` are discarded (restriction to
    /// `z_var = 0`).
    pub fn eliminate(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|t| {
            if t.exps.nu[var] != 0 || t.exps.mu[var] != 0 {
                return None;
            }
            let mut nu = t.exps.nu.clone();
            let mut mu = t.exps.mu.clone();
            nu.remove(var);
            mu.remove(var);
            Some(MixedTerm::new(t.coeff.clone(), ExponentPair::new(nu, mu)))
        });
        Self::from_terms(self.n - 1, terms)
    }

    /// Substitutes `z_var = value` (a real or complex exact constant),
    /// returning a polynomial in the remaining `n − 1` variables.
    pub fn substitute(&self, var: usize, value: &ExactComplex) -> Self {
        let conj_value = value.conj();
        let terms = self.terms.iter().map(|t| {
            let mut c = t.coeff.clone();
            for _ in 0..t.exps.nu[var] {
                c = &c * value;
            }
            for _ in 0..t.exps.mu[var] {
                c = &c * &conj_value;
            }
            let mut nu = t.exps.nu.clone();
            let mut mu = t.exps.mu.clone();
            nu.remove(var);
            mu.remove(var);
            MixedTerm::new(c, ExponentPair::new(nu, mu))
        });
        Self::from_terms(self.n - 1, terms)
    }

    /// Largest exponent of any single `z_j` or `z̄_j`.
    pub fn max_exponent(&self) -> u32 {
        self.terms
            .iter()
            .flat_map(|t| t.exps.nu.iter().chain(&t.exps.mu))
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Double-precision evaluation, summed left to right in canonical order.
    ///
    /// Panics if `p.len() != n`.
    pub fn evaluate(&self, p: &[C64]) -> C64 {
        self.compile().evaluate(p)
    }

    /// Numeric snapshot of this polynomial for repeated evaluation.
    pub fn compile(&self) -> NumericPoly {
        NumericPoly {
            n: self.n,
            max_exp: self.max_exponent() as usize,
            terms: self
                .terms
                .iter()
                .map(|t| (t.coeff.to_c64(), t.exps.nu.clone(), t.exps.mu.clone()))
                .collect(),
        }
    }
}

/// A mixed polynomial with double coefficients, for hot numeric loops.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    n: usize,
    max_exp: usize,
    terms: Vec<(C64, Vec<u32>, Vec<u32>)>,
}

impl NumericPoly {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn evaluate(&self, p: &[C64]) -> C64 {
        assert_eq!(p.len(), self.n, "point dimension differs from ambient dimension");
        let width = self.max_exp + 1;
        let mut pows = vec![C64::new(1.0, 0.0); 2 * self.n * width];
        for (j, z) in p.iter().enumerate() {
            let zc = z.conj();
            for k in 1..width {
                pows[(2 * j) * width + k] = pows[(2 * j) * width + k - 1] * z;
                pows[(2 * j + 1) * width + k] = pows[(2 * j + 1) * width + k - 1] * zc;
            }
        }
        let mut acc = C64::new(0.0, 0.0);
        for (c, nu, mu) in &self.terms {
            let mut v = *c;
            for j in 0..self.n {
                v *= pows[(2 * j) * width + nu[j] as usize];
                v *= pows[(2 * j + 1) * width + mu[j] as usize];
            }
            acc += v;
        }
        acc
    }
}

impl NumericPoly {
    /// `Σ |c| ∏ |z_j|^{ν_j+μ_j}`, the natural scale for relative residuals.
    pub fn magnitude(&self, p: &[C64]) -> f64 {
        let abs: Vec<f64> = p.iter().map(|z| z.norm()).collect();
        self.terms
            .iter()
            .map(|(c, nu, mu)| {
                let mut m = c.norm();
                for j in 0..self.n {
                    m *= libm::pow(abs[j], (nu[j] + mu[j]) as f64);
                }
                m
            })
            .sum()
    }
}

/// `f` together with all of its first Wirtinger derivatives, compiled.
#[derive(Clone, Debug)]
pub struct Gradient {
    pub f: NumericPoly,
    /// `∂f/∂z_j`
    pub dz: Vec<NumericPoly>,
    /// `∂f/∂z̄_j`
    pub dzbar: Vec<NumericPoly>,
}

impl Gradient {
    pub fn new(f: &MixedPolynomial) -> Self {
        Self {
            f: f.compile(),
            dz: (0..f.n()).map(|j| f.wirtinger(j, false).compile()).collect(),
            dzbar: (0..f.n()).map(|j| f.wirtinger(j, true).compile()).collect(),
        }
    }
}

impl Add for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn add(self, rhs: &MixedPolynomial) -> MixedPolynomial {
        self.checked_add(rhs).expect("ambient dimensions must agree")
    }
}

impl Sub for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn sub(self, rhs: &MixedPolynomial) -> MixedPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn mul(self, rhs: &MixedPolynomial) -> MixedPolynomial {
        self.checked_mul(rhs).expect("ambient dimensions must agree")
    }
}

impl Neg for &MixedPolynomial {
    type Output = MixedPolynomial;
    fn neg(self) -> MixedPolynomial {
        MixedPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|t| MixedTerm::new(-&t.coeff, t.exps.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MixedPolynomial {
            type Output = MixedPolynomial;
            fn $m(self, rhs: MixedPolynomial) -> MixedPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MixedPolynomial {
    type Output = MixedPolynomial;
    fn neg(self) -> MixedPolynomial {
        -&self
    }
}
