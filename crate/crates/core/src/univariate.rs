//! Zeros on `ℂ*` of one-variable mixed polynomials `g(u) = Σ c u^a ū^b`.
//!
//! Writing `u = r e^{iθ}` turns `g` into `Σ_m A_m(r) e^{imθ}` with `m = a − b`.
//! One group vanishes on whole circles; two groups reduce to the real
//! equation `|A₁(r)|² = |A₂(r)|²` plus an explicit phase; anything else
//! falls back to a grid scan with Newton polishing.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::mixedpoly::{MixedPolynomial, NumericPoly};
use crate::C64;

/// Acceptance threshold for a located zero.
pub const ZERO_TOL: f64 = 1e-10;
/// Zeros closer than this are merged.
pub const DEDUP_RADIUS: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Nonzero constant or identically zero.
    Trivial,
    /// A single phase group: zeros are circles `|u| = r`.
    SingleGroup,
    /// Two phase groups: radial equation plus phase branches.
    TwoGroups,
    GridFallback,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TorusZeros {
    /// Isolated zeros, sorted by modulus then argument.
    pub points: Vec<C64>,
    /// Radii of circles on which `g` vanishes identically.
    pub circles: Vec<f64>,
    /// `g ≡ 0`.
    pub whole_torus: bool,
    pub method: Method,
}

impl TorusZeros {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.circles.is_empty() && !self.whole_torus
    }
}

/// Coefficients in `r` of each phase group `A_m(r)`, keyed by `m`.
fn phase_groups(g: &MixedPolynomial) -> BTreeMap<i64, Vec<C64>> {
    let mut groups: BTreeMap<i64, Vec<C64>> = BTreeMap::new();
    for t in g.terms() {
        let (a, b) = (t.exps.nu[0], t.exps.mu[0]);
        let coeffs = groups.entry(a as i64 - b as i64).or_default();
        let deg = (a + b) as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, C64::new(0.0, 0.0));
        }
        coeffs[deg] += t.coeff.to_c64();
    }
    groups
}

fn horner_c(c: &[C64], r: f64) -> C64 {
    c.iter().rev().fold(C64::new(0.0, 0.0), |acc, &x| acc * r + x)
}

fn horner(c: &[f64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &x| acc * r + x)
}

fn abs_scale(c: &[f64], r: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &x| acc * r + x.abs())
}

fn trim(mut c: Vec<f64>) -> Vec<f64> {
    while c.last().is_some_and(|x| *x == 0.0) {
        c.pop();
    }
    c
}

/// `|A(r)|²` for real `r`, as a real polynomial.
fn modulus_squared(c: &[C64]) -> Vec<f64> {
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; 2 * c.len() - 1];
    for (i, x) in c.iter().enumerate() {
        for (j, y) in c.iter().enumerate() {
            out[i + j] += (x * y.conj()).re;
        }
    }
    out
}

fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(i, x)| i as f64 * x).collect()
}

/// Bounds `[lo, hi]` containing every positive root (Cauchy, both ends).
fn root_bounds(c: &[f64]) -> Option<(f64, f64)> {
    let low = c.iter().position(|x| *x != 0.0)?;
    let c = &c[low..];
    let n = c.len() - 1;
    if n == 0 {
        return None;
    }
    let hi = 1.0 + c[..n].iter().map(|x| (x / c[n]).abs()).fold(0.0, f64::max);
    let lo_inv = 1.0 + c[1..].iter().map(|x| (x / c[0]).abs()).fold(0.0, f64::max);
    Some((1.0 / lo_inv, hi))
}

fn bisect(c: &[f64], mut a: f64, mut b: f64) -> f64 {
    let mut fa = horner(c, a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = horner(c, m);
        if fm == 0.0 {
            return m;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn push_unique(out: &mut Vec<f64>, r: f64) {
    if !out.iter().any(|x| (x - r).abs() <= 1e-9 * r.max(1.0)) {
        out.push(r);
    }
}

/// Positive real roots of a real polynomial, including multiple roots
/// (found as roots of derivatives where the polynomial itself is tiny).
pub fn positive_real_roots(c: &[f64]) -> Vec<f64> {
    positive_roots_rec(&trim(c.to_vec()), 0)
}

fn positive_roots_rec(c: &[f64], depth: usize) -> Vec<f64> {
    let Some((lo, hi)) = root_bounds(c) else { return Vec::new() };
    let mut out = Vec::new();
    const N: usize = 4000;
    let (la, lb) = (libm::log(lo * 0.5), libm::log(hi * 2.0));
    let mut prev_r = libm::exp(la);
    let mut prev = horner(c, prev_r);
    for k in 1..=N {
        let r = libm::exp(la + (lb - la) * k as f64 / N as f64);
        let v = horner(c, r);
        if v == 0.0 {
            push_unique(&mut out, r);
        } else if prev != 0.0 && (v < 0.0) != (prev < 0.0) {
            push_unique(&mut out, bisect(c, prev_r, r));
        }
        prev_r = r;
        prev = v;
    }
    if depth < c.len() {
        let d = trim(derivative(c));
        if d.len() > 1 {
            for r in positive_roots_rec(&d, depth + 1) {
                if horner(c, r).abs() <= 1e-9 * abs_scale(c, r) {
                    push_unique(&mut out, r);
                }
            }
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Positive `r` with `A(r) = 0` for a complex-coefficient polynomial.
fn positive_common_roots(c: &[C64]) -> Vec<f64> {
    // every common root of Re A and Im A is a double root of |A|²
    let re: Vec<f64> = c.iter().map(|x| x.re).collect();
    let im: Vec<f64> = c.iter().map(|x| x.im).collect();
    let pick = if trim(re.clone()).is_empty() { im } else { re };
    positive_real_roots(&pick)
        .into_iter()
        .filter(|&r| {
            let scale: f64 = c.iter().rev().fold(0.0, |acc, x| acc * r + x.norm());
            horner_c(c, r).norm() <= 1e-9 * scale.max(1.0)
        })
        .collect()
}

/// Nonzero real `x` with `p(x) = 0` where `p` is given by complex
/// coefficients in powers of `x`.
pub fn real_roots(c: &[C64]) -> Vec<f64> {
    let neg: Vec<C64> =
        c.iter().enumerate().map(|(i, x)| if i % 2 == 1 { -x } else { *x }).collect();
    let mut out: Vec<f64> = positive_common_roots(&neg).into_iter().map(|r| -r).collect();
    out.reverse();
    out.extend(positive_common_roots(c));
    out
}

/// `g` with its two Wirtinger derivatives, compiled for Newton steps.
struct Polisher {
    g: NumericPoly,
    gu: NumericPoly,
    gub: NumericPoly,
}

impl Polisher {
    fn new(g: &MixedPolynomial) -> Self {
        Self { g: g.compile(), gu: g.wirtinger(0, false).compile(), gub: g.wirtinger(0, true).compile() }
    }

    fn value(&self, u: C64) -> C64 {
        self.g.evaluate(&[u])
    }

    /// Newton on `g(u+δ) ≈ g + aδ + bδ̄`; solves `(a+b)x + i(a−b)y = −g`.
    fn polish(&self, mut u: C64) -> C64 {
        let mut best = (self.value(u).norm(), u);
        for _ in 0..60 {
            let g = self.g.evaluate(&[u]);
            if g.norm() == 0.0 {
                return u;
            }
            let a = self.gu.evaluate(&[u]);
            let b = self.gub.evaluate(&[u]);
            let p = a + b;
            let q = C64::new(0.0, 1.0) * (a - b);
            let det = p.re * q.im - q.re * p.im;
            if det == 0.0 || !det.is_finite() {
                break;
            }
            let x = (-g.re * q.im + q.re * g.im) / det;
            let y = (-p.re * g.im + g.re * p.im) / det;
            let step = C64::new(x, y);
            u += step;
            let v = self.value(u).norm();
            if v < best.0 {
                best = (v, u);
            }
            if step.norm() <= 1e-16 * u.norm() {
                break;
            }
        }
        best.1
    }
}

fn finish(p: &Polisher, candidates: impl IntoIterator<Item = C64>) -> Vec<C64> {
    let mut out: Vec<C64> = Vec::new();
    for c in candidates {
        let u = p.polish(c);
        if u.norm() == 0.0 || !u.norm().is_finite() || p.value(u).norm() >= ZERO_TOL {
            continue;
        }
        if !out.iter().any(|v| (v - u).norm() < DEDUP_RADIUS) {
            out.push(u);
        }
    }
    out.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(a.arg().total_cmp(&b.arg())));
    out
}

/// All zeros of `g` on `ℂ*`; `g` must have exactly one variable.
pub fn torus_zeros(g: &MixedPolynomial) -> Result<TorusZeros> {
    if g.n() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: g.n() });
    }
    let mut res = TorusZeros { points: Vec::new(), circles: Vec::new(), whole_torus: false, method: Method::Trivial };
    if g.is_zero() {
        res.whole_torus = true;
        return Ok(res);
    }
    let groups = phase_groups(g);
    let pol = Polisher::new(g);
    match groups.len() {
        1 => {
            res.method = Method::SingleGroup;
            let a = groups.values().next().unwrap();
            if a.iter().filter(|x| x.norm() != 0.0).count() > 1 {
                res.circles = positive_common_roots(a);
            } else {
                res.method = Method::Trivial;
            }
        }
        2 => {
            res.method = Method::TwoGroups;
            let mut it = groups.iter();
            let (m2, a2) = it.next().unwrap();
            let (m1, a1) = it.next().unwrap();
            let d = (m1 - m2) as usize;
            let mut dpoly = modulus_squared(a1);
            for (i, x) in modulus_squared(a2).into_iter().enumerate() {
                if i >= dpoly.len() {
                    dpoly.push(0.0);
                }
                dpoly[i] -= x;
            }
            let mut cands = Vec::new();
            for r in positive_real_roots(&dpoly) {
                let (v1, v2) = (horner_c(a1, r), horner_c(a2, r));
                let scale = a1.iter().chain(a2).rev().fold(0.0, |acc, x| acc * r + x.norm()).max(1.0);
                if v1.norm() <= 1e-9 * scale && v2.norm() <= 1e-9 * scale {
                    res.circles.push(r);
                    continue;
                }
                if v1.norm() == 0.0 {
                    continue;
                }
                let base = (-v2 / v1).arg();
                for j in 0..d {
                    let theta = (base + 2.0 * PI * j as f64) / d as f64;
                    cands.push(C64::from_polar(r, theta));
                }
            }
            res.points = finish(&pol, cands);
        }
        _ => {
            res.method = Method::GridFallback;
            res.points = grid_scan(g, 720, 200, (1e-3, 1e3))?;
        }
    }
    Ok(res)
}

/// Dense `θ × log r` scan: every grid local minimum of `|g|` is polished and
/// kept if `|g| < 1e-10`.
pub fn grid_scan(g: &MixedPolynomial, n_theta: usize, n_r: usize, r_range: (f64, f64)) -> Result<Vec<C64>> {
    if g.n() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, found: g.n() });
    }
    let pol = Polisher::new(g);
    let (la, lb) = (libm::log(r_range.0), libm::log(r_range.1));
    let point = |i: usize, k: usize| {
        let theta = 2.0 * PI * i as f64 / n_theta as f64;
        let r = libm::exp(la + (lb - la) * k as f64 / (n_r - 1).max(1) as f64);
        C64::from_polar(r, theta)
    };
    let vals: Vec<f64> = (0..n_theta)
        .flat_map(|i| (0..n_r).map(move |k| (i, k)))
        .map(|(i, k)| pol.value(point(i, k)).norm())
        .collect();
    let at = |i: usize, k: usize| vals[i * n_r + k];
    let mut cands = Vec::new();
    for i in 0..n_theta {
        for k in 0..n_r {
            let v = at(i, k);
            let mut is_min = true;
            'nb: for di in [n_theta - 1, 0, 1] {
                for dk in [-1i64, 0, 1] {
                    let kk = k as i64 + dk;
                    if (di == 0 && dk == 0) || kk < 0 || kk >= n_r as i64 {
                        continue;
                    }
                    if at((i + di) % n_theta, kk as usize) < v {
                        is_min = false;
                        break 'nb;
                    }
                }
            }
            if is_min {
                cands.push(point(i, k));
            }
        }
    }
    Ok(finish(&pol, cands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_with;

    fn u(s: &str) -> MixedPolynomial {
        parse_with(s, &Default::default(), 'u', Some(1)).unwrap()
    }

    fn assert_close(got: &[C64], want: &[C64]) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (a, b) in got.iter().zip(want) {
            assert!((a - b).norm() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn sigma3_restriction() {
        let g = u("u1^2*~u1 - 6*u1*~u1 + 11*u1 - 6");
        let z = torus_zeros(&g).unwrap();
        assert_eq!(z.method, Method::TwoGroups);
        assert!(z.circles.is_empty());
        let want: Vec<C64> = [1.0, 2.0, 3.0].iter().map(|&x| C64::new(x, 0.0)).collect();
        assert_close(&z.points, &want);
        let grid = grid_scan(&g, 720, 200, (1e-3, 1e3)).unwrap();
        assert_close(&grid, &want);
    }

    #[test]
    fn holomorphic_roots_of_unity() {
        let z = torus_zeros(&u("u1^3 - 8")).unwrap();
        assert_eq!(z.points.len(), 3);
        for p in &z.points {
            assert!((p.norm() - 2.0).abs() < 1e-12);
            assert!((p.powi(3) - 8.0).norm() < 1e-10);
        }
    }

    #[test]
    fn circles_and_trivial() {
        let z = torus_zeros(&u("u1*~u1 - 4")).unwrap();
        assert_eq!(z.method, Method::SingleGroup);
        assert_eq!(z.circles.len(), 1);
        assert!((z.circles[0] - 2.0).abs() < 1e-12);
        assert!(torus_zeros(&u("u1*~u1 + 1")).unwrap().is_empty());
        assert!(torus_zeros(&u("1")).unwrap().is_empty());
        assert!(torus_zeros(&u("u1^2*~u1")).unwrap().is_empty());
        assert!(torus_zeros(&MixedPolynomial::zero(1)).unwrap().whole_torus);
    }

    #[test]
    fn double_root() {
        // a double zero is only located to about √ε
        let z = torus_zeros(&u("u1^2 - 2*u1 + 1")).unwrap();
        assert_eq!(z.points.len(), 1);
        assert!((z.points[0] - 1.0).norm() < 1e-6);
    }

    #[test]
    fn real_root_finder() {
        // (x−1)(x−2)(x+3)
        let c = [C64::new(6.0, 0.0), C64::new(-7.0, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0)];
        let r = real_roots(&c);
        assert_eq!(r.len(), 3);
        for (a, b) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(positive_real_roots(&[1.0, -2.0, 1.0]).len(), 1);
        assert!(positive_real_roots(&[1.0, 0.0, 1.0]).is_empty());
    }
}
