//! Toric chart maps `π_σ(u) = (u₁^{(P₁)₁} u₂^{(P₂)₁}, u₁^{(P₁)₂} u₂^{(P₂)₂})`,
//! pullbacks and strict transforms.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::fan::{det, Cone2, Ray};
use crate::mixedpoly::{ExponentPair, MixedPolynomial, MixedTerm};
use crate::C64;

/// A unimodular chart. Chart variable `u_i` belongs to ray `P_i`; the order
/// is the caller's, so `(S, E₁)` and `(E₁, S)` give swapped coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChartMap {
    rays: [Ray; 2],
}

impl ChartMap {
    pub fn new(p1: Ray, p2: Ray) -> Result<Self> {
        let d = det(p1, p2);
        if d.abs() != 1 {
            return Err(Error::NonUnimodular(d));
        }
        Ok(Self { rays: [p1, p2] })
    }

    pub fn from_cone(c: &Cone2) -> Result<Self> {
        Self::new(c.a, c.b)
    }

    pub fn identity() -> Self {
        Self { rays: [Ray::E1, Ray::E2] }
    }

    pub fn rays(&self) -> [Ray; 2] {
        self.rays
    }

    /// Columns `P₁, P₂`.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        let (a, b) = (self.rays[0].v(), self.rays[1].v());
        [[a[0], b[0]], [a[1], b[1]]]
    }

    pub fn det(&self) -> i64 {
        det(self.rays[0], self.rays[1])
    }

    /// `P_i(ν)` for both chart variables.
    fn image(&self, v: &[u32]) -> Vec<u32> {
        self.rays
            .iter()
            .map(|r| {
                let p = r.v();
                (p[0] * v[0] as i64 + p[1] * v[1] as i64) as u32
            })
            .collect()
    }

    /// `π_σ(u)` in double precision.
    pub fn map_point(&self, u: &[C64]) -> [C64; 2] {
        let m = self.matrix();
        let mut z = [C64::new(1.0, 0.0); 2];
        for (j, zj) in z.iter_mut().enumerate() {
            for (i, ui) in u.iter().enumerate() {
                *zj *= ui.powi(m[j][i] as i32);
            }
        }
        z
    }
}

/// `π*f = u^m ū^m̄ · f̃` with the maximal monomial factor pulled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTransform {
    pub chart: ChartMap,
    /// `(m_i, m̄_i)`: exponents of `u_i` and `ū_i` in the exceptional factor.
    pub exceptional: [(u32, u32); 2],
    pub reduced: MixedPolynomial,
}

impl StrictTransform {
    pub fn exceptional_monomial(&self) -> ExponentPair {
        ExponentPair::new(
            vec![self.exceptional[0].0, self.exceptional[1].0],
            vec![self.exceptional[0].1, self.exceptional[1].1],
        )
    }

    /// `exceptional × reduced`, which equals the pullback.
    pub fn recompose(&self) -> MixedPolynomial {
        self.reduced.mul_monomial(&self.exceptional_monomial())
    }
}

/// Term-wise substitution `c z^ν z̄^μ ↦ c ∏ u_i^{P_i(ν)} ū_i^{P_i(μ)}`.
pub fn pullback(f: &MixedPolynomial, chart: &ChartMap) -> Result<MixedPolynomial> {
    f.require_planar()?;
    let terms = f.terms().iter().map(|t| {
        MixedTerm::new(
            t.coeff.clone(),
            ExponentPair::new(chart.image(&t.exps.nu), chart.image(&t.exps.mu)),
        )
    });
    Ok(MixedPolynomial::from_terms(2, terms))
}

pub fn strict_transform(f: &MixedPolynomial, chart: &ChartMap) -> Result<StrictTransform> {
    let pb = pullback(f, chart)?;
    let mut exceptional = [(0u32, 0u32); 2];
    if !pb.is_zero() {
        for (i, slot) in exceptional.iter_mut().enumerate() {
            let m = pb.terms().iter().map(|t| t.exps.nu[i]).min().unwrap_or(0);
            let mb = pb.terms().iter().map(|t| t.exps.mu[i]).min().unwrap_or(0);
            *slot = (m, mb);
        }
    }
    let reduced = MixedPolynomial::from_terms(
        2,
        pb.terms().iter().map(|t| {
            let mut e = t.exps.clone();
            for i in 0..2 {
                e.nu[i] -= exceptional[i].0;
                e.mu[i] -= exceptional[i].1;
            }
            MixedTerm::new(t.coeff.clone(), e)
        }),
    );
    Ok(StrictTransform { chart: *chart, exceptional, reduced })
}

/// `f̃` on the divisor `{u_axis = 0}` (0-based axis), as a one-variable
/// polynomial in the remaining chart coordinate.
pub fn exceptional_locus_values(st: &StrictTransform, axis: usize) -> Result<MixedPolynomial> {
    if axis >= 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: axis + 1 });
    }
    Ok(st.reduced.eliminate(axis))
}
