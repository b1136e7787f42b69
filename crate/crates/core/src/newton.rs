//! Radial Newton polygon `Γ₊(f)` of a planar mixed polynomial, its faces
//! `Δ(P)`, face functions, convenience and the dual Newton diagram.
//!
//! All geometry is exact integer arithmetic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::homogeneity::WeightVector;
use crate::mixedpoly::{ExponentPair, MixedPolynomial};

/// A point `ν + μ` of the support with the exponent pairs that land on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPoint {
    pub point: Vec<u32>,
    pub witnesses: Vec<ExponentPair>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactEdge {
    pub from: [u32; 2],
    pub to: [u32; 2],
    /// Primitive, strictly positive inner normal.
    pub normal: WeightVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub support: Vec<SupportPoint>,
    /// Vertices of the compact boundary, by increasing first coordinate.
    pub hull_vertices: Vec<[u32; 2]>,
    pub compact_edges: Vec<CompactEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub normal: WeightVector,
    /// `d(P)`, the minimum of `P` over the support.
    pub d: i64,
    pub points: Vec<Vec<u32>>,
    pub dim: usize,
}

fn cross(o: [i64; 2], a: [i64; 2], b: [i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

pub fn support(f: &MixedPolynomial) -> Vec<SupportPoint> {
    let mut map: BTreeMap<Vec<u32>, Vec<ExponentPair>> = BTreeMap::new();
    for t in f.terms() {
        map.entry(t.exps.radial()).or_default().push(t.exps.clone());
    }
    map.into_iter().map(|(point, witnesses)| SupportPoint { point, witnesses }).collect()
}

/// Lower-left convex chain of `points`: the vertices of the compact faces of
/// `conv(points) + ℝ₊²`, ordered by increasing first coordinate.
pub fn lower_left_hull(points: &[[u32; 2]]) -> Vec<[u32; 2]> {
    let mut pts: Vec<[u32; 2]> = points.to_vec();
    pts.sort();
    pts.dedup();
    // dominance-minimal points: strictly decreasing second coordinate
    let mut minimal: Vec<[i64; 2]> = Vec::new();
    for p in pts {
        let q = [p[0] as i64, p[1] as i64];
        if minimal.last().is_none_or(|m| q[1] < m[1]) {
            minimal.push(q);
        }
    }
    let mut chain: Vec<[i64; 2]> = Vec::with_capacity(minimal.len());
    for p in minimal {
        while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], p) <= 0 {
            chain.pop();
        }
        chain.push(p);
    }
    chain.into_iter().map(|p| [p[0] as u32, p[1] as u32]).collect()
}

/// Primitive inner normal of the compact edge `a → b` (with `a` left of `b`).
pub fn edge_normal(a: [u32; 2], b: [u32; 2]) -> WeightVector {
    let dx = b[0] as i64 - a[0] as i64;
    let dy = b[1] as i64 - a[1] as i64;
    debug_assert!(dx > 0 && dy < 0);
    let g = dx.gcd(&dy);
    WeightVector::planar(-dy / g, dx / g)
}

pub fn newton_polyhedron(f: &MixedPolynomial) -> Result<NewtonPolyhedron> {
    f.require_planar()?;
    f.require_nonzero()?;
    let support = support(f);
    let pts: Vec<[u32; 2]> = support.iter().map(|s| [s.point[0], s.point[1]]).collect();
    let hull_vertices = lower_left_hull(&pts);
    let compact_edges = hull_vertices
        .windows(2)
        .map(|w| CompactEdge { from: w[0], to: w[1], normal: edge_normal(w[0], w[1]) })
        .collect();
    Ok(NewtonPolyhedron { support, hull_vertices, compact_edges })
}

fn check_face_weight(f: &MixedPolynomial, p: &WeightVector) -> Result<()> {
    f.require_nonzero()?;
    if p.dim() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: p.dim() });
    }
    if !p.non_negative() {
        return Err(Error::InvalidWeight("face weights must be non-negative".into()));
    }
    Ok(())
}

/// Affine dimension of a set of lattice points.
fn affine_dim(points: &[Vec<u32>]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<i64>> = points
        .iter()
        .map(|p| p.iter().zip(base).map(|(&a, &b)| a as i64 - b as i64).collect())
        .filter(|d: &Vec<i64>| d.iter().any(|&x| x != 0))
        .collect();
    let Some(first) = diffs.first() else { return 0 };
    if first.len() != 2 {
        // rank of the difference set, n-generic Gaussian elimination is not needed
        // for the shipped planar algorithms
        return 1;
    }
    if diffs.iter().all(|d| first[0] * d[1] - first[1] * d[0] == 0) {
        1
    } else {
        2
    }
}

/// `Δ(P)`: the points of the support minimizing `P`.
pub fn face(f: &MixedPolynomial, p: &WeightVector) -> Result<Face> {
    check_face_weight(f, p)?;
    let sup = support(f);
    let d = sup.iter().map(|s| p.apply_u32(&s.point)).min().expect("nonzero polynomial");
    let points: Vec<Vec<u32>> =
        sup.into_iter().filter(|s| p.apply_u32(&s.point) == d).map(|s| s.point).collect();
    let dim = affine_dim(&points);
    Ok(Face { normal: p.clone(), d, points, dim })
}

/// `f_{Δ(P)}`: the terms whose `ν + μ` lies on the compact face `Δ(P)`.
pub fn face_function(f: &MixedPolynomial, p: &WeightVector) -> Result<MixedPolynomial> {
    if !p.strictly_positive() {
        return Err(Error::InvalidWeight("face functions need a strictly positive weight".into()));
    }
    let fc = face(f, p)?;
    Ok(f.filter_terms(|t| p.radial_of(&t.exps) == fc.d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvenienceReport {
    /// `(I, f^I ≢ 0)` for each nonempty zero-based index subset `I`.
    pub subsets: Vec<(Vec<usize>, bool)>,
    pub convenient: bool,
}

pub fn is_convenient(f: &MixedPolynomial) -> ConvenienceReport {
    let n = f.n();
    let mut subsets = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let keep: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        let nonzero = !f.restrict(&keep).is_zero();
        subsets.push((keep, nonzero));
    }
    subsets.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let convenient = subsets.iter().all(|s| s.1);
    ConvenienceReport { subsets, convenient }
}

/// `Γ*(f)`: `E₁`, the compact-edge normals counterclockwise, then `E₂`.
pub fn dual_diagram(np: &NewtonPolyhedron) -> Vec<WeightVector> {
    let mut rays = vec![WeightVector::planar(1, 0)];
    rays.extend(np.compact_edges.iter().map(|e| e.normal.clone()));
    rays.push(WeightVector::planar(0, 1));
    rays
}

/// One compact face of `Γ₊(f)` with a strictly positive weight exposing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFace {
    pub weight: WeightVector,
    pub dim: usize,
    pub vertex: Option<[u32; 2]>,
}

/// All compact faces in counterclockwise order of their normals.
///
/// A vertex sitting between dual rays `a` and `b` is exposed by the primitive
/// part of `a + b`; for the J₁₀ family this yields `(1,1)` and `(1,3)`.
pub fn compact_faces(np: &NewtonPolyhedron) -> Vec<CompactFace> {
    let rays = dual_diagram(np);
    let mut out = Vec::new();
    for (i, v) in np.hull_vertices.iter().enumerate() {
        let (a, b) = (&rays[i], &rays[i + 1]);
        let sum = WeightVector::planar(a.entries()[0] + b.entries()[0], a.entries()[1] + b.entries()[1]);
        out.push(CompactFace { weight: sum.primitive(), dim: 0, vertex: Some(*v) });
        if let Some(e) = np.compact_edges.get(i) {
            out.push(CompactFace { weight: e.normal.clone(), dim: 1, vertex: None });
        }
    }
    out
}
