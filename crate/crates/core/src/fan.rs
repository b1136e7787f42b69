//! Two-dimensional lattice fans in the positive quadrant: rays, cones,
//! regular (unimodular) subdivision, admissibility and convenience.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::homogeneity::WeightVector;
use crate::mixedpoly::MixedPolynomial;
use crate::newton::{dual_diagram, NewtonPolyhedron};

/// A primitive vector of `ℤ₊² \ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ray([i64; 2]);

impl Ray {
    pub fn new(p1: i64, p2: i64) -> Result<Self> {
        if p1 < 0 || p2 < 0 || (p1 == 0 && p2 == 0) {
            return Err(Error::InvalidRay(format!("({p1},{p2}) is not in the positive quadrant")));
        }
        if p1.gcd(&p2) != 1 {
            return Err(Error::InvalidRay(format!("({p1},{p2}) is not primitive")));
        }
        Ok(Self([p1, p2]))
    }

    pub const E1: Ray = Ray([1, 0]);
    pub const E2: Ray = Ray([0, 1]);

    pub fn v(&self) -> [i64; 2] {
        self.0
    }

    pub fn strictly_positive(&self) -> bool {
        self.0[0] > 0 && self.0[1] > 0
    }

    pub fn weight(&self) -> WeightVector {
        WeightVector::planar(self.0[0], self.0[1])
    }

    pub fn from_weight(w: &WeightVector) -> Result<Self> {
        match w.entries() {
            [a, b] => Self::new(*a, *b),
            _ => Err(Error::InvalidRay(format!("{w} is not planar"))),
        }
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// `det(a b) = a₁b₂ − a₂b₁`.
pub fn det(a: Ray, b: Ray) -> i64 {
    a.0[0] * b.0[1] - a.0[1] * b.0[0]
}

/// A two-dimensional cone with counterclockwise-ordered rays.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cone2 {
    pub a: Ray,
    pub b: Ray,
}

impl Cone2 {
    pub fn new(a: Ray, b: Ray) -> Result<Self> {
        if det(a, b) <= 0 {
            return Err(Error::InvalidRay(format!("{a}, {b} are not counterclockwise")));
        }
        Ok(Self { a, b })
    }

    pub fn det(&self) -> i64 {
        det(self.a, self.b)
    }

    pub fn regular(&self) -> bool {
        self.det() == 1
    }

    pub fn rays(&self) -> [Ray; 2] {
        [self.a, self.b]
    }
}

/// Columns are the cone's rays in stored order; determinant 1.
pub fn chart_matrix(c: &Cone2) -> Result<[[i64; 2]; 2]> {
    if !c.regular() {
        return Err(Error::NonRegularCone(c.det()));
    }
    let (a, b) = (c.a.v(), c.b.v());
    Ok([[a[0], b[0]], [a[1], b[1]]])
}

/// Counterclockwise list of rays; cones are consecutive pairs.
///
/// Fans built by [`subdivide`] run from `E₁` to `E₂`; hand-built fans may
/// cover a smaller sector (see [`Fan2::complete`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan2 {
    rays: Vec<Ray>,
}

impl Fan2 {
    pub fn from_rays(rays: Vec<Ray>) -> Result<Self> {
        if rays.is_empty() {
            return Err(Error::InvalidRay("empty fan".into()));
        }
        for w in rays.windows(2) {
            if det(w[0], w[1]) <= 0 {
                return Err(Error::InvalidRay(format!(
                    "rays {} and {} are not in counterclockwise order",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { rays })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn cones(&self) -> Vec<Cone2> {
        self.rays.windows(2).map(|w| Cone2 { a: w[0], b: w[1] }).collect()
    }

    /// Starts at `E₁` and ends at `E₂`.
    pub fn complete(&self) -> bool {
        self.rays.first() == Some(&Ray::E1) && self.rays.last() == Some(&Ray::E2)
    }

    pub fn regular_simplicial(&self) -> bool {
        self.cones().iter().all(Cone2::regular)
    }

    pub fn contains(&self, r: &Ray) -> bool {
        self.rays.contains(r)
    }

    /// The two-dimensional cones having `r` as a vertex.
    pub fn cones_containing(&self, r: Ray) -> Vec<Cone2> {
        self.cones().into_iter().filter(|c| c.a == r || c.b == r).collect()
    }
}

/// Rays strictly inside `Cone(a, b)` that make it regular, in order.
///
/// Each step takes the unique `c = (b + k·a)/d` with `0 < k < d` integral,
/// so `det(a, c) = 1` and `det(c, b) = k < d`; the chain is the boundary of
/// the convex hull of the nonzero lattice points of the cone.
pub fn regular_chain(a: Ray, b: Ray) -> Vec<Ray> {
    let mut out = Vec::new();
    let mut a = a;
    loop {
        let d = det(a, b);
        debug_assert!(d > 0);
        if d == 1 {
            return out;
        }
        let k = (1..d)
            .find(|k| (b.0[0] + k * a.0[0]) % d == 0 && (b.0[1] + k * a.0[1]) % d == 0)
            .expect("a lattice point adjacent to a exists for primitive rays");
        let c = Ray([(b.0[0] + k * a.0[0]) / d, (b.0[1] + k * a.0[1]) / d]);
        out.push(c);
        a = c;
    }
}

/// Minimal regular simplicial fan containing every input ray.
///
/// The input must contain `E₁` and `E₂`; order is irrelevant.
pub fn subdivide(rays: &[Ray]) -> Result<Fan2> {
    if !rays.contains(&Ray::E1) || !rays.contains(&Ray::E2) {
        return Err(Error::InvalidRay("subdivision input must contain E1 and E2".into()));
    }
    let mut sorted = rays.to_vec();
    // primitive rays in the quadrant are parallel iff equal
    sorted.sort_by(|x, y| 0.cmp(&det(*x, *y)));
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::InvalidRay(format!("parallel duplicate ray {}", w[0])));
        }
    }
    let mut out = vec![sorted[0]];
    for w in sorted.windows(2) {
        out.extend(regular_chain(w[0], w[1]));
        out.push(w[1]);
    }
    Fan2::from_rays(out)
}

/// The fan refines `Γ*(f)`: every dual-diagram ray is a ray of the fan.
pub fn is_admissible(fan: &Fan2, np: &NewtonPolyhedron) -> bool {
    dual_diagram(np).iter().all(|w| Ray::from_weight(w).is_ok_and(|r| fan.contains(&r)))
}

/// For each `I ⊆ {1,2}` with `f^I ≢ 0`, the cone `E_{I^c}` belongs to the fan.
pub fn is_convenient_subdivision(fan: &Fan2, f: &MixedPolynomial) -> Result<bool> {
    f.require_planar()?;
    // I = {1}: needs Cone(E2); I = {2}: needs Cone(E1); I = {1,2}: the zero cone
    let needs_e2 = !f.restrict(&[0]).is_zero();
    let needs_e1 = !f.restrict(&[1]).is_zero();
    Ok((!needs_e2 || fan.contains(&Ray::E2)) && (!needs_e1 || fan.contains(&Ray::E1)))
}
