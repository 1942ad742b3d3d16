use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::gcd;
use super::{LatticeError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        LatticePoint::new(0, 0)
    }

    pub fn to_vector(&self) -> LatticeVector {
        LatticeVector { dx: self.x.clone(), dy: self.y.clone() }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticePoint) -> LatticeVector {
        LatticeVector { dx: &self.x - &rhs.x, dy: &self.y - &rhs.y }
    }
}

impl Add<&LatticeVector> for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticeVector) -> LatticePoint {
        LatticePoint { x: &self.x + &rhs.dx, y: &self.y + &rhs.dy }
    }
}

/// Integer vector; also used for linear functionals `u(p) = dx * p.x + dy * p.y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub dx: BigInt,
    pub dy: BigInt,
}

impl LatticeVector {
    pub fn new(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Self {
        LatticeVector { dx: dx.into(), dy: dy.into() }
    }

    /// `gcd(|dx|, |dy|)`, with `gcd(0, n) = |n|`.
    pub fn content(&self) -> BigInt {
        gcd(&self.dx, &self.dy)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Divides out the content. The zero vector is returned unchanged.
    pub fn primitive_part(&self) -> LatticeVector {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        LatticeVector { dx: &self.dx / &g, dy: &self.dy / &g }
    }

    pub fn det(&self, other: &LatticeVector) -> BigInt {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn dot(&self, other: &LatticeVector) -> BigInt {
        &self.dx * &other.dx + &self.dy * &other.dy
    }

    /// Evaluates this vector as a linear functional on a point.
    pub fn eval(&self, p: &LatticePoint) -> BigInt {
        &self.dx * &p.x + &self.dy * &p.y
    }

    pub fn scale(&self, k: &BigInt) -> LatticeVector {
        LatticeVector { dx: &self.dx * k, dy: &self.dy * k }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.dx, self.dy)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector { dx: -&self.dx, dy: -&self.dy }
    }
}

/// `p -> A p + t` with `A` in GL2(Z).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnimodularAffineMap {
    matrix: [[BigInt; 2]; 2],
    translation: LatticeVector,
}

impl UnimodularAffineMap {
    pub fn new(matrix: [[BigInt; 2]; 2], translation: LatticeVector) -> Result<Self> {
        let det = &matrix[0][0] * &matrix[1][1] - &matrix[0][1] * &matrix[1][0];
        if det.abs() != BigInt::one() {
            return Err(LatticeError::NotUnimodular(det.to_string()));
        }
        Ok(UnimodularAffineMap { matrix, translation })
    }

    pub fn from_i64(m: [[i64; 2]; 2], t: (i64, i64)) -> Result<Self> {
        Self::new(
            [
                [BigInt::from(m[0][0]), BigInt::from(m[0][1])],
                [BigInt::from(m[1][0]), BigInt::from(m[1][1])],
            ],
            LatticeVector::new(t.0, t.1),
        )
    }

    pub fn identity() -> Self {
        UnimodularAffineMap {
            matrix: [[BigInt::one(), BigInt::zero()], [BigInt::zero(), BigInt::one()]],
            translation: LatticeVector::new(0, 0),
        }
    }

    pub fn translation_by(t: LatticeVector) -> Self {
        UnimodularAffineMap { translation: t, ..Self::identity() }
    }

    pub fn matrix(&self) -> &[[BigInt; 2]; 2] {
        &self.matrix
    }

    pub fn translation(&self) -> &LatticeVector {
        &self.translation
    }

    pub fn det(&self) -> BigInt {
        let m = &self.matrix;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn apply_vector(&self, v: &LatticeVector) -> LatticeVector {
        let m = &self.matrix;
        LatticeVector {
            dx: &m[0][0] * &v.dx + &m[0][1] * &v.dy,
            dy: &m[1][0] * &v.dx + &m[1][1] * &v.dy,
        }
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        let v = self.apply_vector(&p.to_vector());
        LatticePoint { x: v.dx + &self.translation.dx, y: v.dy + &self.translation.dy }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &UnimodularAffineMap) -> UnimodularAffineMap {
        let a = &self.matrix;
        let b = &other.matrix;
        let matrix = [
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ];
        let t = self.apply_vector(&other.translation);
        UnimodularAffineMap {
            matrix,
            translation: LatticeVector { dx: t.dx + &self.translation.dx, dy: t.dy + &self.translation.dy },
        }
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let m = &self.matrix;
        let det = self.det();
        // det is ±1, so the adjugate times det is the inverse.
        let matrix = [
            [&m[1][1] * &det, -&m[0][1] * &det],
            [-&m[1][0] * &det, &m[0][0] * &det],
        ];
        let inv = UnimodularAffineMap { matrix, translation: LatticeVector::new(0, 0) };
        let t = inv.apply_vector(&self.translation);
        UnimodularAffineMap { translation: -&t, ..inv }
    }
}

impl fmt::Display for UnimodularAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.matrix;
        write!(
            f,
            "[[{}, {}], [{}, {}]] + {}",
            m[0][0], m[0][1], m[1][0], m[1][1], self.translation
        )
    }
}

/// Strictly convex lattice polygon with counterclockwise vertices, starting
/// at the lexicographically smallest one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Strict constructor: the vertex list must already describe a strictly
    /// convex polygon of positive area, in counterclockwise order. The
    /// starting vertex is free; it is rotated to the lexicographic minimum.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(LatticeError::DegenerateInput);
        }
        let poly = Self::from_ccw_unchecked(vertices);
        let h = super::hull(&poly.vertices)?;
        if h.vertices != poly.vertices {
            return Err(LatticeError::NotConvex(format!(
                "expected the counterclockwise extreme points {h}, got {poly}"
            )));
        }
        Ok(poly)
    }

    /// Rotates a counterclockwise strictly convex vertex cycle so the
    /// lexicographically smallest vertex comes first.
    pub(crate) fn from_ccw_unchecked(mut vertices: Vec<LatticePoint>) -> Self {
        let start = vertices
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        vertices.rotate_left(start);
        LatticePolygon { vertices }
    }

    pub fn from_i64(coords: &[(i64, i64)]) -> Result<Self> {
        super::hull(&coords.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect::<Vec<_>>())
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &LatticePoint {
        &self.vertices[i % self.vertices.len()]
    }

    /// Edge `i` as `(vertex i, vertex i+1)`.
    pub fn edge(&self, i: usize) -> (&LatticePoint, &LatticePoint) {
        (self.vertex(i), self.vertex(i + 1))
    }

    /// Shoelace sum, i.e. twice the area (the normalized area).
    pub fn twice_area(&self) -> BigInt {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let p = &self.vertices[i];
                let q = &self.vertices[(i + 1) % n];
                &p.x * &q.y - &p.y * &q.x
            })
            .sum()
    }

    /// Primitive inner normal functional of edge `i`.
    pub fn inner_normal(&self, i: usize) -> LatticeVector {
        let (p, q) = self.edge(i);
        let e = (q - p).primitive_part();
        LatticeVector { dx: -e.dy, dy: e.dx }
    }

    /// Whether `p` lies in the closed polygon.
    pub fn contains(&self, p: &LatticePoint) -> bool {
        (0..self.len()).all(|i| {
            let (a, b) = self.edge(i);
            (b - a).det(&(p - a)) >= BigInt::zero()
        })
    }

    /// Image under an affine unimodular map, re-oriented counterclockwise.
    pub fn apply_map(&self, m: &UnimodularAffineMap) -> LatticePolygon {
        let mut image: Vec<LatticePoint> = self.vertices.iter().map(|p| m.apply(p)).collect();
        if m.det().is_negative() {
            image.reverse();
        }
        Self::from_ccw_unchecked(image)
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// `(p, q)` with `0 <= q < p`, the GL2(Z) normal form `A v = (1, 0)`,
/// `A w = (-q, p)` of a pair of primitive vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalizedPair {
    pub p: BigInt,
    pub q: BigInt,
}

/// `ceil(p/q)`, or infinity when `q = 0`. Finite values are at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gamma {
    Finite(BigInt),
    Infinite,
}

impl Gamma {
    pub fn finite(v: impl Into<BigInt>) -> Gamma {
        Gamma::Finite(v.into())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Gamma::Finite(_))
    }

    pub fn value(&self) -> Option<&BigInt> {
        match self {
            Gamma::Finite(v) => Some(v),
            Gamma::Infinite => None,
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma::Finite(v) => write!(f, "{v}"),
            Gamma::Infinite => write!(f, "∞"),
        }
    }
}

/// A primitive edge `E = bc` together with its boundary neighbours.
///
/// `a` precedes `b` and `d` follows `c` on the counterclockwise boundary walk,
/// so `b -> c` runs counterclockwise and the interior lies to its left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimitiveEdge {
    /// Index of the polygon edge (vertex `index` to vertex `index + 1`).
    pub index: usize,
    pub b: LatticePoint,
    pub c: LatticePoint,
    pub a: LatticePoint,
    pub d: LatticePoint,
    /// Primitive inner normal: `u(b) = u(c) <= u(p)` for every `p` in the polygon.
    pub u: LatticeVector,
}

impl PrimitiveEdge {
    pub fn height(&self, p: &LatticePoint) -> BigInt {
        self.u.eval(p) - self.u.eval(&self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeInvariants {
    pub mu: BigInt,
    pub gamma_b: Gamma,
    pub gamma_c: Gamma,
}
