//! Serializable reports for every command, with their plain-text renderings.
//!
//! Field order is fixed by the struct definitions and no timestamps or host
//! details are recorded, so equal inputs give byte-identical JSON.

use std::fmt::Write as _;

use mixsing_core::fan::{chart_matrix, is_admissible, is_convenient_subdivision, subdivide, Fan2, Ray};
use mixsing_core::homogeneity::{classify, discover_weights, verify_euler, WeightSolution, WeightVector};
use mixsing_core::j10::{self, Case, ClassRow, LemmaReport};
use mixsing_core::mixedpoly::MixedPolynomial;
use mixsing_core::newton::{compact_faces, dual_diagram, face, face_function, is_convenient, newton_polyhedron, NewtonPolyhedron};
use mixsing_core::nondeg::{certify_faces_with, overall, Candidate, Evidence, FaceCertificate, FaceStatus, SearchConfig, SearchReport};
use mixsing_core::resolution::{chart_report_for, l_sigma_report, AxisIntersection, ChartReport, LambdaValue};
use mixsing_core::toric::ChartMap;
use mixsing_core::coeff::ratio_to_f64;
use mixsing_core::{ExactComplex, C64};
use num_rational::BigRational;
use serde::Serialize;

use crate::config::{SearchSettings, SweepSpec};
use crate::error::CliError;
use crate::input::{parse_ray_list, parse_real};
use crate::parallel;

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn pair(z: &C64) -> [f64; 2] {
    [z.re, z.im]
}

fn ray_json(r: &Ray) -> [i64; 2] {
    r.v()
}

fn weight_json(w: &WeightVector) -> [i64; 2] {
    [w.entries()[0], w.entries()[1]]
}

fn weight_solution(w: &WeightSolution) -> String {
    match w {
        WeightSolution::Any => "any".into(),
        WeightSolution::Unique(v) => v.to_string(),
        WeightSolution::None => "none".into(),
    }
}

fn monomial_text(nu: &[u32], mu: &[u32], prefix: char) -> String {
    MixedPolynomial::monomial(nu.len(), ExactComplex::one(), nu.to_vec(), mu.to_vec())
        .display_as(prefix)
        .to_string()
}

/// `auto` refines the dual Newton diagram; otherwise the listed rays are
/// completed to the minimal regular fan containing them.
pub fn fan_from_spec(spec: &str, np: &NewtonPolyhedron) -> Result<Fan2, CliError> {
    let rays = if spec.trim().eq_ignore_ascii_case("auto") {
        dual_diagram(np).iter().map(Ray::from_weight).collect::<Result<Vec<_>, _>>()?
    } else {
        parse_ray_list(spec)?
    };
    subdivide(&rays).map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeJson {
    pub rays: [[i64; 2]; 2],
    pub det: i64,
    pub matrix: Option<[[i64; 2]; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FanJson {
    pub rays: Vec<[i64; 2]>,
    pub cones: Vec<ConeJson>,
    pub regular: bool,
    pub admissible: bool,
    pub convenient: bool,
}

fn fan_json(fan: &Fan2, f: &MixedPolynomial, np: &NewtonPolyhedron) -> Result<FanJson, CliError> {
    Ok(FanJson {
        rays: fan.rays().iter().map(ray_json).collect(),
        cones: fan
            .cones()
            .iter()
            .map(|c| ConeJson { rays: [c.a.v(), c.b.v()], det: c.det(), matrix: chart_matrix(c).ok() })
            .collect(),
        regular: fan.regular_simplicial(),
        admissible: is_admissible(fan, np),
        convenient: is_convenient_subdivision(fan, f)?,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SupportJson {
    pub point: Vec<u32>,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeJson {
    pub from: [u32; 2],
    pub to: [u32; 2],
    pub normal: [i64; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerJson {
    pub radial_identity: Option<bool>,
    pub polar_identity: Option<bool>,
    pub half_degrees: Option<(i64, i64)>,
    pub half_identities: Option<(bool, bool)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomogeneityJson {
    pub weight: [i64; 2],
    pub radial_degree: Option<i64>,
    pub polar_degree: Option<i64>,
    pub strongly_mixed: bool,
    pub polar_positive: bool,
    pub euler: Option<EulerJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightsJson {
    pub radial: String,
    pub polar: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceJson {
    pub weight: [i64; 2],
    pub dim: usize,
    pub d: i64,
    pub face_function: String,
    pub radial_degree: Option<i64>,
    pub polar_degree: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub polynomial: String,
    pub support: Vec<SupportJson>,
    pub hull_vertices: Vec<[u32; 2]>,
    pub compact_edges: Vec<EdgeJson>,
    pub dual_diagram: Vec<[i64; 2]>,
    pub convenient: bool,
    pub weights: WeightsJson,
    pub homogeneity: Option<HomogeneityJson>,
    pub faces: Vec<FaceJson>,
    pub fan: FanJson,
    pub notes: Vec<String>,
}

pub fn analyze(f: &MixedPolynomial, fan_spec: &str) -> Result<(AnalyzeReport, NewtonPolyhedron, Fan2), CliError> {
    let np = newton_polyhedron(f)?;
    let fan = fan_from_spec(fan_spec, &np)?;
    let mut notes = Vec::new();
    let disc = discover_weights(f)?;
    let weight = match (&disc.radial, &disc.polar) {
        (WeightSolution::Unique(p), _) => Some(p.clone()),
        (WeightSolution::Any, WeightSolution::Unique(q)) if q.non_negative() => Some(q.clone()),
        (WeightSolution::Any, _) => Some(WeightVector::planar(1, 1)),
        (WeightSolution::None, WeightSolution::Unique(q)) => Some(q.clone()),
        (WeightSolution::None, _) => None,
    };
    let homogeneity = match &weight {
        Some(w) => {
            let cert = classify(f, w)?;
            let euler = verify_euler(f, w).ok().map(|e| EulerJson {
                radial_identity: e.radial_identity,
                polar_identity: e.polar_identity,
                half_degrees: e.half_degrees,
                half_identities: e.half_identities,
            });
            Some(HomogeneityJson {
                weight: weight_json(w),
                radial_degree: cert.radial_degree(),
                polar_degree: cert.polar_degree(),
                strongly_mixed: cert.strongly_mixed,
                polar_positive: cert.polar_positive,
                euler,
            })
        }
        None => {
            notes.push("no weight makes f radially or polar weighted homogeneous".into());
            None
        }
    };
    let mut faces = Vec::new();
    for cf in compact_faces(&np) {
        let fd = face_function(f, &cf.weight)?;
        let cert = classify(&fd, &cf.weight)?;
        faces.push(FaceJson {
            weight: weight_json(&cf.weight),
            dim: cf.dim,
            d: face(f, &cf.weight)?.d,
            face_function: fd.to_string(),
            radial_degree: cert.radial_degree(),
            polar_degree: cert.polar_degree(),
        });
    }
    let report = AnalyzeReport {
        polynomial: f.to_string(),
        support: np
            .support
            .iter()
            .map(|s| SupportJson {
                point: s.point.clone(),
                monomials: s.witnesses.iter().map(|e| monomial_text(&e.nu, &e.mu, 'z')).collect(),
            })
            .collect(),
        hull_vertices: np.hull_vertices.clone(),
        compact_edges: np
            .compact_edges
            .iter()
            .map(|e| EdgeJson { from: e.from, to: e.to, normal: weight_json(&e.normal) })
            .collect(),
        dual_diagram: dual_diagram(&np).iter().map(weight_json).collect(),
        convenient: is_convenient(f).convenient,
        weights: WeightsJson { radial: weight_solution(&disc.radial), polar: weight_solution(&disc.polar) },
        homogeneity,
        faces,
        fan: fan_json(&fan, f, &np)?,
        notes,
    };
    Ok((report, np, fan))
}

pub fn analyze_text(r: &AnalyzeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", r.polynomial);
    let pts: Vec<String> = r.support.iter().map(|p| format!("({},{})", p.point[0], p.point[1])).collect();
    let _ = writeln!(s, "support: {}", pts.join(" "));
    let hv: Vec<String> = r.hull_vertices.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
    let _ = writeln!(s, "hull vertices: {}", hv.join(" "));
    let dd: Vec<String> = r.dual_diagram.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
    let _ = writeln!(s, "dual diagram: {}", dd.join(" "));
    let _ = writeln!(s, "convenient: {}", r.convenient);
    let _ = writeln!(s, "weights: radial {}, polar {}", r.weights.radial, r.weights.polar);
    if let Some(h) = &r.homogeneity {
        let deg = |d: Option<i64>| d.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            s,
            "homogeneity w.r.t. ({},{}): d_r={}, d_p={}, strongly mixed: {}, polar positive: {}",
            h.weight[0],
            h.weight[1],
            deg(h.radial_degree),
            deg(h.polar_degree),
            h.strongly_mixed,
            h.polar_positive
        );
        if let Some(e) = &h.euler {
            let _ = writeln!(
                s,
                "euler identities: radial {:?}, polar {:?}, half {:?}",
                e.radial_identity, e.polar_identity, e.half_identities
            );
        }
    }
    let _ = writeln!(s, "compact faces:");
    for fc in &r.faces {
        let _ = writeln!(
            s,
            "  ({},{}) dim {} d={}: {}  [rdeg {:?}, pdeg {:?}]",
            fc.weight[0], fc.weight[1], fc.dim, fc.d, fc.face_function, fc.radial_degree, fc.polar_degree
        );
    }
    let rays: Vec<String> = r.fan.rays.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
    let _ = writeln!(
        s,
        "fan: {}  regular: {}, admissible: {}, convenient: {}",
        rays.join(" "),
        r.fan.regular,
        r.fan.admissible,
        r.fan.convenient
    );
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionJson {
    pub ray: [i64; 2],
    /// 1-based chart variable that vanishes on the divisor.
    pub axis: usize,
    pub restriction: String,
    pub method: String,
    pub zeros: Vec<[f64; 2]>,
    pub zero_moduli: Vec<f64>,
    pub circles: Vec<f64>,
    pub whole_torus: bool,
    pub grid_agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartJson {
    pub rays: [[i64; 2]; 2],
    pub matrix: [[i64; 2]; 2],
    pub pullback: String,
    pub exceptional: [[u32; 2]; 2],
    pub exceptional_factor: String,
    pub reduced: String,
    pub origin_value: String,
    pub intersections: Vec<IntersectionJson>,
    pub assumption_star: bool,
}

fn other_var(axis: usize) -> usize {
    1 - axis
}

fn intersection_json(i: &AxisIntersection) -> IntersectionJson {
    // name the surviving variable by its chart index
    let restriction = {
        let keep = other_var(i.axis);
        let terms = i.restriction.terms().iter().map(|t| {
            let mut nu = vec![0; 2];
            let mut mu = vec![0; 2];
            nu[keep] = t.exps.nu[0];
            mu[keep] = t.exps.mu[0];
            mixsing_core::MixedTerm::new(t.coeff.clone(), mixsing_core::ExponentPair::new(nu, mu))
        });
        MixedPolynomial::from_terms(2, terms).display_as('u').to_string()
    };
    IntersectionJson {
        ray: i.ray.v(),
        axis: i.axis + 1,
        restriction,
        method: format!("{:?}", i.zeros.method),
        zeros: i.zeros.points.iter().map(pair).collect(),
        zero_moduli: i.zeros.points.iter().map(|z| z.norm()).collect(),
        circles: i.zeros.circles.clone(),
        whole_torus: i.zeros.whole_torus,
        grid_agrees: i.grid_agrees(),
    }
}

pub fn chart_json(c: &ChartReport) -> ChartJson {
    let e = c.transform.exceptional;
    let [a, b] = c.chart.rays();
    ChartJson {
        rays: [a.v(), b.v()],
        matrix: c.chart.matrix(),
        pullback: c.transform.recompose().display_as('u').to_string(),
        exceptional: [[e[0].0, e[0].1], [e[1].0, e[1].1]],
        exceptional_factor: monomial_text(&[e[0].0, e[1].0], &[e[0].1, e[1].1], 'u'),
        reduced: c.transform.reduced.display_as('u').to_string(),
        origin_value: c.origin_value.to_string(),
        intersections: c.intersections.iter().map(intersection_json).collect(),
        assumption_star: c.assumption_star,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OffenderJson {
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
    pub vertex: [i64; 2],
    pub excess: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumJson {
    pub chart: [[i64; 2]; 2],
    pub meets: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaJson {
    pub cone: Vec<[i64; 2]>,
    pub value: Option<i64>,
    pub offenders: Vec<OffenderJson>,
    /// Emptiness checks of the open stratum, for cones with a value.
    pub checks: Vec<StratumJson>,
    pub passes: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolveReport {
    pub polynomial: String,
    pub fan: Vec<[i64; 2]>,
    pub charts: Vec<ChartJson>,
    pub lambda: Vec<LambdaJson>,
    pub l_sigma_empty: bool,
    pub notes: Vec<String>,
}

fn lambda_json(lv: &LambdaValue, checks: Option<&mixsing_core::resolution::ConeCheck>) -> LambdaJson {
    LambdaJson {
        cone: lv.rays.iter().map(ray_json).collect(),
        value: lv.value,
        offenders: lv
            .offenders
            .iter()
            .map(|o| OffenderJson { nu: o.exps.nu.clone(), mu: o.exps.mu.clone(), vertex: o.vertex.v(), excess: o.excess })
            .collect(),
        checks: checks
            .map(|c| c.checks.iter().map(|s| StratumJson { chart: [s.chart[0].v(), s.chart[1].v()], meets: s.meets }).collect())
            .unwrap_or_default(),
        passes: checks.map(|c| c.passes()),
    }
}

pub fn resolve(f: &MixedPolynomial, fan_spec: &str) -> Result<(ResolveReport, Fan2), CliError> {
    let np = newton_polyhedron(f)?;
    let fan = fan_from_spec(fan_spec, &np)?;
    let rep = l_sigma_report(f, &fan)?;
    let lambda = rep
        .lambda
        .iter()
        .map(|lv| lambda_json(lv, rep.cones.iter().find(|c| c.rays == lv.rays)))
        .collect();
    let mut notes = vec![rep.verdict().to_string()];
    notes.push(format!(
        "chart conditions (origin avoided, isolated divisor intersections): {}",
        if rep.assumption_star { "satisfied in every chart" } else { "violated in some chart" }
    ));
    if !is_admissible(&fan, &np) {
        notes.push("the fan does not refine the dual Newton diagram".into());
    }
    notes.push("chart variables follow the stored (counterclockwise) ray order; use --chart to pick another order".into());
    let report = ResolveReport {
        polynomial: f.to_string(),
        fan: fan.rays().iter().map(ray_json).collect(),
        charts: rep.charts.iter().map(chart_json).collect(),
        lambda,
        l_sigma_empty: rep.l_sigma_empty,
        notes,
    };
    Ok((report, fan))
}

fn fmt_zero(z: &[f64; 2]) -> String {
    if z[1] == 0.0 || z[1].abs() < 1e-12 * z[0].abs().max(1.0) {
        format!("{}", round_for_text(z[0]))
    } else {
        format!("{}{:+}i", round_for_text(z[0]), round_for_text(z[1]))
    }
}

fn round_for_text(x: f64) -> f64 {
    (x * 1e10).round() / 1e10
}

fn chart_text(s: &mut String, c: &ChartJson) {
    let _ = writeln!(
        s,
        "chart ({},{}),({},{})  matrix {:?}",
        c.rays[0][0], c.rays[0][1], c.rays[1][0], c.rays[1][1], c.matrix
    );
    let _ = writeln!(s, "  pullback: {}", c.pullback);
    let _ = writeln!(s, "  exceptional factor: {}", c.exceptional_factor);
    let _ = writeln!(s, "  strict transform: {}", c.reduced);
    let _ = writeln!(s, "  value at chart origin: {}", c.origin_value);
    for i in &c.intersections {
        let zeros: Vec<String> = i.zeros.iter().map(fmt_zero).collect();
        let _ = writeln!(
            s,
            "  on u{} = 0 (ray ({},{})): {}  torus zeros: [{}]{}{}",
            i.axis,
            i.ray[0],
            i.ray[1],
            i.restriction,
            zeros.join(", "),
            if i.circles.is_empty() { String::new() } else { format!("  circles |u| = {:?}", i.circles) },
            if i.whole_torus { "  (vanishes identically)" } else { "" }
        );
    }
}

pub fn resolve_text(r: &ResolveReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", r.polynomial);
    let rays: Vec<String> = r.fan.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
    let _ = writeln!(s, "fan: {}", rays.join(" "));
    for c in &r.charts {
        chart_text(&mut s, c);
    }
    for l in &r.lambda {
        let cone: Vec<String> = l.cone.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
        let value = l.value.map_or("absent".to_string(), |v| v.to_string());
        let _ = writeln!(s, "Lambda(Cone({})) = {}  ({} offenders)", cone.join(","), value, l.offenders.len());
    }
    let _ = writeln!(s, "L(Σ*) empty: {}", r.l_sigma_empty);
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct SingleChartReport {
    pub polynomial: String,
    pub chart: ChartJson,
}

pub fn single_chart(f: &MixedPolynomial, spec: &str) -> Result<SingleChartReport, CliError> {
    let rays = parse_ray_list(spec)?;
    let [a, b] = rays[..] else {
        return Err(CliError::Usage(format!("--chart needs exactly two rays, got `{spec}`")));
    };
    let chart = ChartMap::new(a, b).map_err(|e| CliError::Usage(e.to_string()))?;
    let rep = chart_report_for(f, &chart, true)?;
    Ok(SingleChartReport { polynomial: f.to_string(), chart: chart_json(&rep) })
}

pub fn single_chart_text(r: &SingleChartReport) -> String {
    let mut s = format!("polynomial: {}\n", r.polynomial);
    chart_text(&mut s, &r.chart);
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateJson {
    pub start: usize,
    pub point: Vec<[f64; 2]>,
    pub residual: f64,
    pub relative_value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchJson {
    pub starts: usize,
    pub evaluations: usize,
    pub normalization: String,
    pub zero_set_penalty: bool,
    pub best_residual: Option<f64>,
    pub best_point: Option<Vec<[f64; 2]>>,
    pub off_torus: usize,
    pub hits: usize,
    pub candidates: Vec<CandidateJson>,
}

fn candidate_json(c: &Candidate) -> CandidateJson {
    CandidateJson { start: c.start, point: c.point.iter().map(pair).collect(), residual: c.residual, relative_value: c.relative_value }
}

pub fn search_json(r: &SearchReport) -> SearchJson {
    SearchJson {
        starts: r.starts,
        evaluations: r.evaluations,
        normalization: format!("{:?}", r.normalization).to_lowercase(),
        zero_set_penalty: r.zero_set_penalty,
        best_residual: finite(r.best_residual),
        best_point: r.best_point.as_ref().map(|p| p.iter().map(pair).collect()),
        off_torus: r.off_torus,
        hits: r.hits,
        candidates: r.candidates.iter().map(candidate_json).collect(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceCertJson {
    pub weight: [i64; 2],
    pub dim: usize,
    pub face_function: String,
    pub status: String,
    pub basis: String,
    pub evidence: Vec<String>,
    pub search: Option<SearchJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub polynomial: String,
    pub faces: Vec<FaceCertJson>,
    pub overall: String,
    pub verdict: String,
    pub search_settings: SearchSettings,
}

fn w_text(w: &Option<WeightVector>) -> String {
    w.as_ref().map_or("?".into(), |w| w.to_string())
}

pub fn verdict(certs: &[FaceCertificate]) -> String {
    match overall(certs) {
        FaceStatus::StronglyNondegenerate => {
            let symbolic: Vec<String> = certs.iter().filter(|c| !c.search_based).map(|c| w_text(&c.weight)).collect();
            let searched: Vec<String> = certs.iter().filter(|c| c.search_based).map(|c| w_text(&c.weight)).collect();
            let mut parts = Vec::new();
            if !symbolic.is_empty() {
                parts.push(format!("{}: symbolic", symbolic.join(",")));
            }
            if !searched.is_empty() {
                parts.push(format!("{}: search-clean + upgrade", searched.join(",")));
            }
            format!("strongly Newton non-degenerate ({})", parts.join("; "))
        }
        FaceStatus::NewtonNondegenerate => "Newton non-degenerate; NOT strongly".into(),
        FaceStatus::Degenerate => "Newton degenerate".into(),
        FaceStatus::Inconclusive => "inconclusive".into(),
    }
}

pub fn certify(f: &MixedPolynomial, settings: &SearchSettings, workers: usize) -> Result<CertifyReport, CliError> {
    let np = newton_polyhedron(f)?;
    let cfg = SearchConfig::from(settings);
    let mut reports = Vec::new();
    let certs = certify_faces_with(f, &np, |g| {
        let r = parallel::search(g, &cfg, workers)?;
        reports.push((g.clone(), r.clone()));
        Ok(r)
    })?;
    let faces = certs
        .iter()
        .map(|c| FaceCertJson {
            weight: c.weight.as_ref().map_or([0, 0], weight_json),
            dim: c.dim,
            face_function: c.face_function.to_string(),
            status: c.status.to_string(),
            basis: if c.search_based { "search".into() } else { "symbolic".into() },
            evidence: c.evidence.iter().map(Evidence::to_string).collect(),
            search: reports.iter().find(|(g, _)| *g == c.face_function).map(|(_, r)| search_json(r)),
        })
        .collect();
    Ok(CertifyReport {
        polynomial: f.to_string(),
        faces,
        overall: overall(&certs).to_string(),
        verdict: verdict(&certs),
        search_settings: settings.clone(),
    })
}

pub fn certify_text(r: &CertifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "polynomial: {}", r.polynomial);
    for fc in &r.faces {
        let _ = writeln!(
            s,
            "face ({},{}) dim {}: {}  -> {} ({})",
            fc.weight[0], fc.weight[1], fc.dim, fc.face_function, fc.status, fc.basis
        );
        for e in &fc.evidence {
            let _ = writeln!(s, "    {e}");
        }
    }
    let _ = writeln!(s, "verdict: {}", r.verdict);
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRowJson {
    pub k: String,
    pub k_value: f64,
    pub search: SearchJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub exploratory: bool,
    pub note: String,
    pub case: String,
    pub polynomial_template: String,
    pub rows: Vec<SweepRowJson>,
    pub search_settings: SearchSettings,
}

pub fn parse_kgrid(text: &str) -> Result<Vec<BigRational>, CliError> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts[..] {
        [a, b, c] => Ok(j10::k_grid(&parse_real(a)?, &parse_real(b)?, &parse_real(c)?).map_err(|e| CliError::Usage(e.to_string()))?),
        _ if text.trim().is_empty() => Ok(Vec::new()),
        _ => text.split(',').map(parse_real).collect(),
    }
}

pub fn sweep(spec: &SweepSpec, settings: &SearchSettings, workers: usize) -> Result<SweepReport, CliError> {
    let case = Case::parse(&spec.case).ok_or_else(|| CliError::Usage(format!("unknown case `{}` (I..V)", spec.case)))?;
    let ks = parse_kgrid(&spec.kgrid)?;
    let cfg = SearchConfig::from(settings);
    let mut rows = Vec::new();
    for k in &ks {
        let params = j10::J10Params::case(case, k.clone()).map_err(|e| CliError::Math(e.to_string()))?;
        let f = j10::build(&params);
        let r = parallel::search(&f, &cfg, workers)?;
        rows.push(SweepRowJson { k: k.to_string(), k_value: ratio_to_f64(k), search: search_json(&r) });
    }
    let e = case.exps();
    Ok(SweepReport {
        exploratory: true,
        note: "exploratory: the existence of mixed critical points for k != 3 is an open question; rows are search evidence only".into(),
        case: case.label().into(),
        polynomial_template: format!("(a,b,c,d,e,f) = ({},{},{},{},{},{})", e[0], e[1], e[2], e[3], e[4], e[5]),
        rows,
        search_settings: settings.clone(),
    })
}

pub fn sweep_text(r: &SweepReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sweep, case {} {} — {}", r.case, r.polynomial_template, r.note);
    let _ = writeln!(s, "{:>10}  {:>14}  {:>6}  {:>10}", "k", "best residual", "hits", "candidates");
    for row in &r.rows {
        let best = row.search.best_residual.map_or("-".to_string(), |b| format!("{b:.6e}"));
        let _ = writeln!(s, "{:>10}  {:>14}  {:>6}  {:>10}", row.k, best, row.search.hits, row.search.candidates.len());
    }
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRowJson {
    pub label: String,
    pub a: u8,
    pub b: u8,
    pub c: u8,
    pub d: u8,
    pub e: u8,
    pub f: u8,
    pub radial_degree: i64,
    pub polar_degree: i64,
    pub holomorphic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub weight: [i64; 2],
    pub enumerated: usize,
    pub rows: Vec<ClassRowJson>,
    pub conjugate_mirrors: Vec<ClassRowJson>,
    pub notes: Vec<String>,
}

fn class_row(r: &ClassRow) -> ClassRowJson {
    let [a, b, c, d, e, f] = r.exps;
    ClassRowJson {
        label: r.label.clone(),
        a,
        b,
        c,
        d,
        e,
        f,
        radial_degree: r.radial_degree,
        polar_degree: r.polar_degree,
        holomorphic: r.holomorphic,
    }
}

pub fn classify_report() -> ClassifyReport {
    let t = j10::classify_family();
    ClassifyReport {
        weight: [1, 2],
        enumerated: t.enumerated,
        rows: t.rows.iter().map(class_row).collect(),
        conjugate_mirrors: t.conjugate_mirrors.iter().map(class_row).collect(),
        notes: vec![
            "rows: strongly mixed weighted homogeneous members with positive polar degree".into(),
            "conjugate_mirrors: members with negative polar degree; each is the complex conjugate of a row".into(),
        ],
    }
}

pub fn classify_text(r: &ClassifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "enumerated {} tuples; weight ({},{})", r.enumerated, r.weight[0], r.weight[1]);
    let _ = writeln!(s, "{:<5} a b c d e f  rdeg pdeg", "");
    for row in &r.rows {
        let _ = writeln!(
            s,
            "{:<5} {} {} {} {} {} {}  {:>4} {:>4}{}",
            row.label,
            row.a,
            row.b,
            row.c,
            row.d,
            row.e,
            row.f,
            row.radial_degree,
            row.polar_degree,
            if row.holomorphic { "  holomorphic" } else { "" }
        );
    }
    let _ = writeln!(s, "conjugate mirrors (negative polar degree): {}", r.conjugate_mirrors.len());
    s
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaJson {
    pub k: String,
    pub passes: bool,
    pub euler_exact: bool,
    pub constraint_identity_error: Option<f64>,
    pub modulus_discriminant: i64,
    pub modulus_residuals: [f64; 2],
    pub xi: [f64; 2],
    pub cubic_values: [f64; 2],
    pub cubic_roots: Vec<String>,
    pub cubic_factorization_exact: bool,
}

pub fn lemma_report(k: &BigRational) -> Result<LemmaJson, CliError> {
    let r: LemmaReport = j10::lemma_oracles(k).map_err(|e| CliError::Math(e.to_string()))?;
    Ok(LemmaJson {
        k: r.k.to_string(),
        passes: r.passes(),
        euler_exact: r.euler_exact,
        constraint_identity_error: r.constraint_identity_error,
        modulus_discriminant: r.modulus_discriminant,
        modulus_residuals: r.modulus_residuals,
        xi: r.xi,
        cubic_values: r.cubic_values,
        cubic_roots: r.cubic_roots.iter().map(|x| x.to_string()).collect(),
        cubic_factorization_exact: r.cubic_factorization_exact,
    })
}

pub fn lemma_text(r: &LemmaJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "k = {}", r.k);
    let _ = writeln!(s, "half Euler identities exact: {}", r.euler_exact);
    if let Some(e) = r.constraint_identity_error {
        let _ = writeln!(s, "constraint identity max error: {e:.3e}");
    }
    let _ = writeln!(s, "x^2 - 8x + 11: discriminant {}, residuals at 4±√5: {:?}", r.modulus_discriminant, r.modulus_residuals);
    let _ = writeln!(s, "cubic at ξ± = {:?}: {:?}", r.xi, r.cubic_values);
    let _ = writeln!(s, "real-line cubic roots: {{{}}} (exact factorization: {})", r.cubic_roots.join(", "), r.cubic_factorization_exact);
    let _ = writeln!(s, "all checks pass: {}", r.passes);
    s
}
