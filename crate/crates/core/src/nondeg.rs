//! Mixed critical points on the torus and Newton non-degeneracy certificates.
//!
//! A point `a ∈ ℂ*ⁿ` is mixed critical for `f` iff `conj(∂f/∂z(a)) = α ∂f/∂z̄(a)`
//! for some `|α| = 1`. The residual below measures the failure of that
//! alignment after weighting coordinate `j` by `|a_j|`, which leaves the
//! criterion unchanged and makes the residual invariant under the radial and
//! polar torus actions as well as under `f ↦ c·f`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::ExactComplex;
use crate::error::{Error, Result};
use crate::homogeneity::{discover_weights, polar_degree, WeightSolution, WeightVector};
use crate::mixedpoly::{Gradient, MixedPolynomial};
use crate::newton::{compact_faces, face_function, NewtonPolyhedron};
use crate::optim::NelderMead;
use crate::univariate::{real_roots, torus_zeros};
use crate::C64;

pub type TorusPoint = Vec<C64>;

#[derive(Clone, Debug, PartialEq)]
pub struct CriticalityResidual {
    pub point: TorusPoint,
    /// `|a_j| · conj(∂f/∂z_j(a))`
    pub g: Vec<C64>,
    /// `|a_j| · ∂f/∂z̄_j(a)`
    pub h: Vec<C64>,
    /// The phase of `⟨g, h⟩`, when that is nonzero.
    pub alpha_candidate: Option<C64>,
    pub residual: f64,
}

fn check_torus(p: &[C64]) -> Result<()> {
    match p.iter().position(|z| z.norm() == 0.0 || !z.norm().is_finite()) {
        Some(j) => Err(Error::OffTorus(j)),
        None => Ok(()),
    }
}

/// Residual from already-weighted `g, h`:
/// `max(min_{|α|=1} ‖g − αh‖, Σ_j ||g_j| − |h_j||) / max(‖g‖, ‖h‖)`.
fn residual_parts(g: &[C64], h: &[C64]) -> (Option<C64>, f64) {
    let ng = g.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let nh = h.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let ip: C64 = g.iter().zip(h).map(|(a, b)| a * b.conj()).sum();
    let alpha = (ip.norm() > 0.0).then(|| ip / ip.norm());
    let a = alpha.unwrap_or(C64::new(1.0, 0.0));
    let aligned = g.iter().zip(h).map(|(x, y)| (x - a * y).norm_sqr()).sum::<f64>().sqrt();
    let modulus: f64 = g.iter().zip(h).map(|(x, y)| (x.norm() - y.norm()).abs()).sum();
    let den = ng.max(nh).max(f64::MIN_POSITIVE);
    (alpha, aligned.max(modulus) / den)
}

fn weighted_gradient(grad: &Gradient, p: &[C64]) -> (Vec<C64>, Vec<C64>) {
    let g = grad.dz.iter().zip(p).map(|(d, z)| d.evaluate(p).conj() * z.norm()).collect();
    let h = grad.dzbar.iter().zip(p).map(|(d, z)| d.evaluate(p) * z.norm()).collect();
    (g, h)
}

/// Residual with a precompiled gradient; `p` is assumed to be on the torus.
pub fn residual_at(grad: &Gradient, p: &[C64]) -> f64 {
    let (g, h) = weighted_gradient(grad, p);
    residual_parts(&g, &h).1
}

pub fn criticality_residual(f: &MixedPolynomial, p: &[C64]) -> Result<CriticalityResidual> {
    if p.len() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: p.len() });
    }
    check_torus(p)?;
    let grad = Gradient::new(f);
    let (g, h) = weighted_gradient(&grad, p);
    let (alpha_candidate, residual) = residual_parts(&g, &h);
    Ok(CriticalityResidual { point: p.to_vec(), g, h, alpha_candidate, residual })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub starts: usize,
    pub seed: u64,
    /// Residual below which an end point counts as a candidate.
    pub tolerance: f64,
    /// Residual the polishing pass aims for.
    pub polish_target: f64,
    /// Half-width of the sampling box for the free coordinates.
    pub box_radius: f64,
    pub penalty_weight: f64,
    pub dedup_radius: f64,
    /// Raw hits kept (in start order) before deduplication.
    pub max_candidates: usize,
    /// Evaluation budget per local minimization.
    pub local_evals: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            starts: 10_000,
            seed: 0,
            tolerance: 1e-8,
            polish_target: 1e-12,
            box_radius: 10.0,
            penalty_weight: 1e3,
            dedup_radius: 1e-6,
            max_candidates: 64,
            local_evals: 400,
        }
    }
}

/// How the torus actions are used to cut down the search space (n = 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// `z₁ = 1`; search over `z₂`.
    Full,
    /// `|z₁| = 1`; search over `arg z₁` and `z₂`.
    Modulus,
    /// `arg z₁ = 0`; search over `log |z₁|` and `z₂`.
    Argument,
    Free,
}

impl Normalization {
    pub fn dim(self) -> usize {
        match self {
            Self::Full => 2,
            Self::Modulus | Self::Argument => 3,
            Self::Free => 4,
        }
    }

    fn point(self, x: &[f64]) -> [C64; 2] {
        match self {
            Self::Full => [C64::new(1.0, 0.0), C64::new(x[0], x[1])],
            Self::Modulus => [C64::from_polar(1.0, x[0]), C64::new(x[1], x[2])],
            Self::Argument => [C64::new(libm::exp(x[0]), 0.0), C64::new(x[1], x[2])],
            Self::Free => [C64::new(x[0], x[1]), C64::new(x[2], x[3])],
        }
    }

    fn sample(self, rng: &mut ChaCha8Rng, r: f64) -> Vec<f64> {
        let mut box_coord = || rng.gen_range(-r..=r);
        match self {
            Self::Full => vec![box_coord(), box_coord()],
            Self::Modulus => {
                let (a, b) = (box_coord(), box_coord());
                vec![rng.gen_range(-core::f64::consts::PI..=core::f64::consts::PI), a, b]
            }
            Self::Argument => {
                let (a, b) = (box_coord(), box_coord());
                let l = libm::log(r.max(1.0 + f64::EPSILON));
                vec![rng.gen_range(-l..=l), a, b]
            }
            Self::Free => (0..4).map(|_| box_coord()).collect(),
        }
    }
}

/// The normalization available for `f` and whether every mixed critical
/// point is forced into `f = 0` (radial homogeneity plus nonzero polar degree).
pub fn search_setup(f: &MixedPolynomial) -> Result<(Normalization, bool)> {
    let w = discover_weights(f)?;
    let radial = match w.radial {
        WeightSolution::Any => Some(WeightVector::planar(1, 0)),
        WeightSolution::Unique(p) => Some(p),
        WeightSolution::None => None,
    };
    let polar = match w.polar {
        WeightSolution::Any => Some(WeightVector::planar(1, 0)),
        WeightSolution::Unique(q) => Some(q),
        WeightSolution::None => None,
    };
    let modulus = radial.as_ref().is_some_and(|p| p.entries()[0] > 0);
    let argument = polar.as_ref().is_some_and(|q| q.entries()[0] != 0);
    let norm = match (modulus, argument) {
        (true, true) => Normalization::Full,
        (true, false) => Normalization::Modulus,
        (false, true) => Normalization::Argument,
        (false, false) => Normalization::Free,
    };
    let dp = match &polar {
        Some(q) => polar_degree(f, q)?.unwrap_or(0),
        None => 0,
    };
    Ok((norm, radial.is_some() && dp != 0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub start: usize,
    pub point: TorusPoint,
    pub residual: f64,
    /// `|f| / Σ|terms|` at the point.
    pub relative_value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub starts: usize,
    pub evaluations: usize,
    pub normalization: Normalization,
    pub zero_set_penalty: bool,
    /// Smallest residual over all local-search end points.
    pub best_residual: f64,
    pub best_point: Option<TorusPoint>,
    /// End points that left the torus (some `|z_j| < dedup_radius`).
    pub off_torus: usize,
    /// Number of starts whose end point fell below the tolerance.
    pub hits: usize,
    /// Deduplicated polished candidates, from the first `max_candidates` hits.
    pub candidates: Vec<Candidate>,
}

impl SearchReport {
    fn empty(normalization: Normalization, zero_set_penalty: bool) -> Self {
        Self {
            starts: 0,
            evaluations: 0,
            normalization,
            zero_set_penalty,
            best_residual: f64::INFINITY,
            best_point: None,
            off_torus: 0,
            hits: 0,
            candidates: Vec::new(),
        }
    }

    /// Combines reports over consecutive start ranges, given in start order.
    /// The result is identical to a single run over the union.
    pub fn merge(parts: Vec<SearchReport>, cfg: &SearchConfig) -> Option<SearchReport> {
        let mut it = parts.into_iter();
        let mut acc = it.next()?;
        let mut raw = core::mem::take(&mut acc.candidates);
        for p in it {
            acc.starts += p.starts;
            acc.evaluations += p.evaluations;
            acc.off_torus += p.off_torus;
            acc.hits += p.hits;
            if p.best_residual < acc.best_residual {
                acc.best_residual = p.best_residual;
                acc.best_point = p.best_point;
            }
            raw.extend(p.candidates);
        }
        raw.truncate(cfg.max_candidates);
        acc.candidates = dedup(raw, cfg.dedup_radius);
        Some(acc)
    }
}

fn dedup(raw: Vec<Candidate>, radius: f64) -> Vec<Candidate> {
    let mut out: Vec<Candidate> = Vec::new();
    for c in raw {
        let near = |o: &Candidate| {
            o.point.iter().zip(&c.point).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt() < radius
        };
        if !out.iter().any(near) {
            out.push(c);
        }
    }
    out
}

/// Multistart search over all starts (see [`search_critical_range`]).
pub fn search_critical(f: &MixedPolynomial, cfg: &SearchConfig) -> Result<SearchReport> {
    let part = search_critical_range(f, cfg, 0..cfg.starts)?;
    Ok(SearchReport::merge(vec![part], cfg).expect("one part"))
}

/// Runs the starts with indices in `range`. Start `i` draws from its own
/// ChaCha8 stream, so any partition of `0..starts` merged with
/// [`SearchReport::merge`] reproduces the sequential result exactly.
///
/// The returned report is partial: its candidates are the raw hits, not yet
/// deduplicated; [`SearchReport::merge`] finishes it.
pub fn search_critical_range(f: &MixedPolynomial, cfg: &SearchConfig, range: Range<usize>) -> Result<SearchReport> {
    f.require_planar()?;
    f.require_nonzero()?;
    let (norm, penalty) = search_setup(f)?;
    let grad = Gradient::new(f);
    let mut report = SearchReport::empty(norm, penalty);
    let torus_floor = cfg.dedup_radius;
    let on_torus = |z: &[C64; 2]| z.iter().all(|w| w.norm() >= torus_floor && w.norm().is_finite());
    let relative_value = |z: &[C64; 2]| grad.f.evaluate(z).norm() / grad.f.magnitude(z).max(f64::MIN_POSITIVE);
    let pure = |x: &[f64]| {
        let z = norm.point(x);
        if !on_torus(&z) {
            return f64::INFINITY;
        }
        residual_at(&grad, &z)
    };
    let objective = |x: &[f64]| {
        let z = norm.point(x);
        if !on_torus(&z) {
            return f64::INFINITY;
        }
        let r = residual_at(&grad, &z);
        if penalty {
            r + cfg.penalty_weight * relative_value(&z)
        } else {
            r
        }
    };
    let local = NelderMead { initial_step: 0.1 * cfg.box_radius.max(1e-3), max_evals: cfg.local_evals, ftol: 1e-14, xtol: 1e-12 };
    let polish = NelderMead { initial_step: 1e-4, max_evals: 20 * cfg.local_evals, ftol: 0.0, xtol: 1e-15 };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for i in range {
        rng.set_stream(i as u64);
        rng.set_word_pos(0);
        let x0 = norm.sample(&mut rng, cfg.box_radius);
        let m = local.minimize(objective, &x0);
        report.starts += 1;
        report.evaluations += m.evals;
        let z = norm.point(&m.x);
        if !on_torus(&z) {
            report.off_torus += 1;
            continue;
        }
        let r = pure(&m.x);
        if r < report.best_residual {
            report.best_residual = r;
            report.best_point = Some(z.to_vec());
        }
        if r < cfg.tolerance {
            report.hits += 1;
            if report.candidates.len() < cfg.max_candidates {
                let mut x = m.x;
                let mut r = r;
                if r > cfg.polish_target {
                    let p = polish.minimize(pure, &x);
                    report.evaluations += p.evals;
                    if p.value < r {
                        x = p.x;
                        r = p.value;
                    }
                }
                let z = norm.point(&x);
                report.candidates.push(Candidate { start: i, point: z.to_vec(), residual: r, relative_value: relative_value(&z) });
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceStatus {
    StronglyNondegenerate,
    NewtonNondegenerate,
    Inconclusive,
    Degenerate,
}

impl FaceStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::StronglyNondegenerate => "strongly_nondegenerate",
            Self::NewtonNondegenerate => "newton_nondegenerate",
            Self::Inconclusive => "inconclusive",
            Self::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for FaceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// Single monomial; `distinct` is `ν ≠ μ`.
    Monomial { distinct: bool },
    /// A monomial with `ν = μ` is a positive real multiple of `∏|z_j|^{2ν_j}`.
    NeverVanishes,
    ZeroWitness(TorusPoint),
    NoZeroWitness,
    Holomorphic,
    PolarDegree(i64),
    Search { starts: usize, best_residual: f64, hits: usize, candidates: usize, zero_set_penalty: bool },
    /// Candidates exist but none lies on `f = 0`.
    CriticalOffZeroSet,
    CriticalOnZeroSet,
    Note(String),
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Monomial { distinct: true } => f.write_str("symbolic: monomial with nu != mu has no mixed critical points"),
            Self::Monomial { distinct: false } => f.write_str("symbolic: monomial with nu == mu, every torus point is critical"),
            Self::NeverVanishes => f.write_str("symbolic: face function never vanishes on the torus"),
            Self::ZeroWitness(p) => {
                f.write_str("torus zero witness (")?;
                for (i, z) in p.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}{:+}i", z.re, z.im)?;
                }
                f.write_str(")")
            }
            Self::NoZeroWitness => f.write_str("no torus zero found on the probe"),
            Self::Holomorphic => f.write_str("holomorphic face function"),
            Self::PolarDegree(d) => write!(f, "polar degree {d}"),
            Self::Search { starts, best_residual, hits, candidates, zero_set_penalty } => write!(
                f,
                "search: {starts} starts, best residual {best_residual:.3e}, {hits} hits, {candidates} candidates{}",
                if *zero_set_penalty { ", zero-set penalty" } else { "" }
            ),
            Self::CriticalOffZeroSet => f.write_str("critical points found, none on the zero set"),
            Self::CriticalOnZeroSet => f.write_str("critical point found on the zero set"),
            Self::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FaceCertificate {
    pub weight: Option<WeightVector>,
    pub dim: usize,
    pub face_function: MixedPolynomial,
    pub status: FaceStatus,
    pub evidence: Vec<Evidence>,
    /// Whether the status rests on a numerical search.
    pub search_based: bool,
}

pub fn monomial_face_check(f_delta: &MixedPolynomial) -> Result<FaceCertificate> {
    if f_delta.len() != 1 {
        return Err(Error::NotMonomial(f_delta.len()));
    }
    let e = &f_delta.terms()[0].exps;
    let distinct = e.nu != e.mu;
    Ok(FaceCertificate {
        weight: None,
        dim: 0,
        face_function: f_delta.clone(),
        status: if distinct { FaceStatus::StronglyNondegenerate } else { FaceStatus::Degenerate },
        evidence: vec![Evidence::Monomial { distinct }],
        search_based: false,
    })
}

/// Fixes `z_var = value` and looks for a zero in the other coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct LineProbe {
    pub var: usize,
    pub value: ExactComplex,
}

impl Default for LineProbe {
    fn default() -> Self {
        Self { var: 0, value: ExactComplex::one() }
    }
}

/// A torus zero on the probe line: real solutions first (sign changes and
/// bisection), then the polar-form solver over `ℂ*`.
pub fn torus_zero_witness(f: &MixedPolynomial, probe: &LineProbe) -> Result<Option<TorusPoint>> {
    f.require_planar()?;
    if probe.var >= 2 || probe.value.is_zero() {
        return Err(Error::OutOfRange(format!("probe z{} = {}", probe.var + 1, probe.value)));
    }
    let g = f.substitute(probe.var, &probe.value);
    let fixed = probe.value.to_c64();
    let lift = |w: C64| if probe.var == 0 { vec![fixed, w] } else { vec![w, fixed] };
    let check = |p: &TorusPoint| f.evaluate(p).norm() < crate::univariate::ZERO_TOL;

    let mut coeffs: Vec<C64> = Vec::new();
    for t in g.terms() {
        let d = (t.exps.nu[0] + t.exps.mu[0]) as usize;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, C64::new(0.0, 0.0));
        }
        coeffs[d] += t.coeff.to_c64();
    }
    let mut real = real_roots(&coeffs);
    real.sort_by(|a, b| a.abs().total_cmp(&b.abs()).then(b.total_cmp(a)));
    if let Some(p) = real.into_iter().map(|x| lift(C64::new(x, 0.0))).find(check) {
        return Ok(Some(p));
    }
    let z = torus_zeros(&g)?;
    if let Some(p) = z.points.iter().map(|w| lift(*w)).find(check) {
        return Ok(Some(p));
    }
    if z.whole_torus {
        return Ok(Some(lift(C64::new(1.0, 0.0))));
    }
    Ok(z.circles.iter().map(|r| lift(C64::new(*r, 0.0))).find(check))
}

/// [`certify_faces_with`] using the sequential search.
pub fn certify_faces(f: &MixedPolynomial, np: &NewtonPolyhedron, cfg: &SearchConfig) -> Result<Vec<FaceCertificate>> {
    certify_faces_with(f, np, |g| search_critical(g, cfg))
}

/// Certificates for every compact face, in the order of
/// [`compact_faces`]; `search` runs the critical-point search on a face
/// function (callers may parallelize it).
pub fn certify_faces_with<S>(f: &MixedPolynomial, np: &NewtonPolyhedron, mut search: S) -> Result<Vec<FaceCertificate>>
where
    S: FnMut(&MixedPolynomial) -> Result<SearchReport>,
{
    let mut out = Vec::new();
    for cf in compact_faces(np) {
        let fd = face_function(f, &cf.weight)?;
        let mut cert = if fd.len() == 1 {
            let mut c = monomial_face_check(&fd)?;
            if c.status == FaceStatus::Degenerate {
                // 0 is not a critical value: the monomial has no torus zeros
                c.status = FaceStatus::NewtonNondegenerate;
                c.evidence.push(Evidence::NeverVanishes);
            }
            c
        } else {
            certify_polynomial_face(&fd, &mut search)?
        };
        cert.weight = Some(cf.weight);
        cert.dim = cf.dim;
        out.push(cert);
    }
    Ok(out)
}

fn certify_polynomial_face<S>(fd: &MixedPolynomial, search: &mut S) -> Result<FaceCertificate>
where
    S: FnMut(&MixedPolynomial) -> Result<SearchReport>,
{
    let mut evidence = Vec::new();
    let holomorphic = fd.is_holomorphic();
    if holomorphic {
        evidence.push(Evidence::Holomorphic);
    }
    let dp = match discover_weights(fd)?.polar {
        WeightSolution::Unique(q) => polar_degree(fd, &q)?,
        WeightSolution::Any => Some(0),
        WeightSolution::None => None,
    };
    if let Some(d) = dp {
        evidence.push(Evidence::PolarDegree(d));
    }
    let witness = torus_zero_witness(fd, &LineProbe::default())?
        .or(torus_zero_witness(fd, &LineProbe { var: 1, value: ExactComplex::one() })?);
    evidence.push(match &witness {
        Some(p) => Evidence::ZeroWitness(p.clone()),
        None => Evidence::NoZeroWitness,
    });
    let report = search(fd)?;
    evidence.push(Evidence::Search {
        starts: report.starts,
        best_residual: report.best_residual,
        hits: report.hits,
        candidates: report.candidates.len(),
        zero_set_penalty: report.zero_set_penalty,
    });
    let status = if !report.candidates.is_empty() {
        if report.candidates.iter().any(|c| c.relative_value < 1e-8) {
            evidence.push(Evidence::CriticalOnZeroSet);
            FaceStatus::Degenerate
        } else {
            evidence.push(Evidence::CriticalOffZeroSet);
            FaceStatus::NewtonNondegenerate
        }
    } else if holomorphic && witness.is_some() {
        evidence.push(Evidence::Note("search-clean; holomorphic branch of the upgrade".into()));
        FaceStatus::StronglyNondegenerate
    } else if dp.is_some_and(|d| d != 0) {
        if witness.is_some() {
            evidence.push(Evidence::Note("search-clean; nonzero polar degree with a torus zero gives the upgrade".into()));
            FaceStatus::StronglyNondegenerate
        } else {
            evidence.push(Evidence::Note("search-clean; surjectivity not established".into()));
            FaceStatus::NewtonNondegenerate
        }
    } else {
        evidence.push(Evidence::Note("search-clean but polar degree is zero or undefined; no upgrade".into()));
        FaceStatus::Inconclusive
    };
    Ok(FaceCertificate { weight: None, dim: 1, face_function: fd.clone(), status, evidence, search_based: true })
}

/// Germ-level verdict: the weakest face status.
pub fn overall(certs: &[FaceCertificate]) -> FaceStatus {
    certs.iter().map(|c| c.status).max().unwrap_or(FaceStatus::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::newton_polyhedron;
    use crate::parse::parse;

    fn p(s: &str) -> MixedPolynomial {
        parse(s, &Default::default()).unwrap()
    }

    const CASE_IV: &str = "z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2";

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn small() -> SearchConfig {
        SearchConfig { starts: 300, ..Default::default() }
    }

    #[test]
    fn residual_examples() {
        let rho = p("z1*~z1 + z2*~z2");
        for pt in [[c(1.0, 0.0), c(0.3, -2.0)], [c(-0.5, 0.5), c(4.0, 1.0)]] {
            assert!(criticality_residual(&rho, &pt).unwrap().residual < 1e-15);
        }
        let f = p(CASE_IV);
        assert!(criticality_residual(&f, &[c(1.0, 0.0), c(2.0, 0.0)]).unwrap().residual > 0.01);
        let z1 = p("z1");
        let r = criticality_residual(&z1, &[c(1.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(r.residual, 1.0);
        assert!(r.alpha_candidate.is_none());
        assert_eq!(criticality_residual(&z1, &[c(0.0, 0.0), c(1.0, 0.0)]), Err(Error::OffTorus(0)));
    }

    #[test]
    fn residual_invariances() {
        let f = p(CASE_IV);
        let pt = [c(0.7, -0.2), c(1.3, 0.4)];
        let base = criticality_residual(&f, &pt).unwrap().residual;
        let scaled = f.scale(&(ExactComplex::from_int(3) - ExactComplex::i().scale_int(2)));
        assert!((criticality_residual(&scaled, &pt).unwrap().residual - base).abs() < 1e-12);
        let w = WeightVector::planar(1, 2);
        let t = crate::homogeneity::radial_action(&pt, &w, 1.7);
        let th = crate::homogeneity::polar_action(&pt, &w, 0.9);
        assert!((criticality_residual(&f, &t).unwrap().residual - base).abs() < 1e-9);
        assert!((criticality_residual(&f, &th).unwrap().residual - base).abs() < 1e-9);
    }

    #[test]
    fn monomial_checks() {
        assert_eq!(monomial_face_check(&p("z2^2*~z2")).unwrap().status, FaceStatus::StronglyNondegenerate);
        assert_eq!(monomial_face_check(&p("-6*z1^4*~z1^2")).unwrap().status, FaceStatus::StronglyNondegenerate);
        assert_eq!(monomial_face_check(&p("z1*~z1")).unwrap().status, FaceStatus::Degenerate);
        assert_eq!(monomial_face_check(&p("z1 + z2")), Err(Error::NotMonomial(2)));
    }

    #[test]
    fn witnesses() {
        let w = torus_zero_witness(&p(CASE_IV), &LineProbe::default()).unwrap().unwrap();
        assert!((w[0] - 1.0).norm() < 1e-15 && (w[1] - 1.0).norm() < 1e-12);
        assert_eq!(torus_zero_witness(&p("z1*~z1 + z2*~z2"), &LineProbe::default()).unwrap(), None);
    }

    #[test]
    fn search_rho_finds_candidates() {
        let r = search_critical(&p("z1*~z1 + z2*~z2"), &small()).unwrap();
        assert!(!r.zero_set_penalty);
        assert!(r.hits > 0 && !r.candidates.is_empty());
        assert!(r.best_residual < 1e-12);
    }

    #[test]
    fn search_oka_example_clean() {
        let r = search_critical(&p("z1^2*~z1 - z2*~z2^2"), &small()).unwrap();
        assert_eq!(r.normalization, Normalization::Full);
        assert!(r.zero_set_penalty);
        assert!(r.candidates.is_empty(), "{:?}", r.candidates);
    }

    #[test]
    fn merge_matches_sequential() {
        let f = p("z1*~z1 + z2*~z2");
        let cfg = SearchConfig { starts: 90, max_candidates: 10, ..Default::default() };
        let seq = search_critical(&f, &cfg).unwrap();
        let parts = [0..25, 25..60, 60..90]
            .into_iter()
            .map(|r| search_critical_range(&f, &cfg, r).unwrap())
            .collect();
        assert_eq!(SearchReport::merge(parts, &cfg).unwrap(), seq);
    }

    #[test]
    fn certify_j10_and_rho() {
        let f = p(CASE_IV);
        let certs = certify_faces(&f, &newton_polyhedron(&f).unwrap(), &small()).unwrap();
        assert_eq!(certs.len(), 3);
        assert!(certs.iter().all(|c| c.status == FaceStatus::StronglyNondegenerate), "{certs:#?}");
        assert_eq!([certs[0].search_based, certs[1].search_based, certs[2].search_based], [false, true, false]);

        let rho = p("z1*~z1 + z2*~z2");
        let certs = certify_faces(&rho, &newton_polyhedron(&rho).unwrap(), &small()).unwrap();
        assert_eq!(overall(&certs), FaceStatus::NewtonNondegenerate);
        assert!(certs[1].evidence.contains(&Evidence::CriticalOffZeroSet));
    }
}
