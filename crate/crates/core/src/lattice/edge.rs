use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::{ceil_div, extended_gcd, modulo};
use super::polygon::{boundary_lattice_points, row_range};
use super::types::{
    EdgeInvariants, Gamma, LatticePolygon, LatticeVector, NormalizedPair,
    PrimitiveEdge, UnimodularAffineMap,
};
use super::width::is_scroll_width;
use super::{LatticeError, Result};

/// GL2(Z) normal form of a pair of primitive vectors: `p = |det(v, w)|` and
/// `q = -(alpha * w.x + beta * w.y) mod p` where `alpha * v.x + beta * v.y = 1`.
pub fn normalize_pair(v: &LatticeVector, w: &LatticeVector) -> Result<NormalizedPair> {
    for x in [v, w] {
        if !x.is_primitive() {
            return Err(LatticeError::NotPrimitive(Box::new(x.clone())));
        }
    }
    let det = v.det(w);
    if det.is_zero() {
        return Err(LatticeError::ZeroDeterminant(Box::new(v.clone()), Box::new(w.clone())));
    }
    let p = det.abs();
    let (_, alpha, beta) = extended_gcd(&v.dx, &v.dy);
    let t = alpha * &w.dx + beta * &w.dy;
    let q = modulo(&-t, &p);
    Ok(NormalizedPair { p, q })
}

pub fn gamma(v: &LatticeVector, w: &LatticeVector) -> Result<Gamma> {
    let NormalizedPair { p, q } = normalize_pair(v, w)?;
    if q.is_zero() {
        return Ok(Gamma::Infinite);
    }
    let g = ceil_div(&p, &q);
    if g <= BigInt::one() {
        return Err(LatticeError::InternalInconsistency(format!(
            "gamma({v}, {w}) = {g} with p = {p}, q = {q}; finite values must be at least 2"
        )));
    }
    Ok(Gamma::Finite(g))
}

/// One entry per polygon edge whose endpoints are its only lattice points,
/// in edge order.
pub fn primitive_edges(poly: &LatticePolygon) -> Vec<PrimitiveEdge> {
    let boundary = boundary_lattice_points(poly);
    let nb = boundary.len();
    let mut out = Vec::new();
    let mut pos = 0usize;
    for i in 0..poly.len() {
        let (b, c) = poly.edge(i);
        let e = c - b;
        let len = e.content();
        debug_assert_eq!(&boundary[pos], b);
        if len.is_one() {
            out.push(PrimitiveEdge {
                index: i,
                b: b.clone(),
                c: c.clone(),
                a: boundary[(pos + nb - 1) % nb].clone(),
                d: boundary[(pos + 2) % nb].clone(),
                u: poly.inner_normal(i),
            });
        }
        pos += usize::try_from(&len).expect("boundary walk already materialized");
    }
    out
}

/// Affine unimodular map sending `b` to the origin, `c` to `(1, 0)`, the
/// polygon into the upper half-plane and `a` to `(-q, p)` with `0 <= q < p`.
pub fn standardize_edge(
    poly: &LatticePolygon,
    edge: &PrimitiveEdge,
) -> (LatticePolygon, UnimodularAffineMap) {
    let e = &edge.c - &edge.b;
    let (_, alpha, beta) = extended_gcd(&e.dx, &e.dy);
    let base = UnimodularAffineMap::new(
        [[alpha, beta], [-&e.dy, e.dx.clone()]],
        LatticeVector::new(0, 0),
    )
    .expect("rows (alpha, beta) and (-e.y, e.x) have determinant 1");
    let a0 = base.apply_vector(&(&edge.a - &edge.b));
    let p = a0.dy.clone();
    debug_assert!(p.is_positive());
    let q = modulo(&-&a0.dx, &p);
    let k = (-&q - &a0.dx) / &p;
    let shear = UnimodularAffineMap::new(
        [[BigInt::one(), k], [BigInt::zero(), BigInt::one()]],
        LatticeVector::new(0, 0),
    )
    .expect("shear is unimodular");
    let linear = shear.compose(&base);
    let shift = linear.apply_vector(&edge.b.to_vector());
    let map = UnimodularAffineMap::translation_by(-&shift).compose(&linear);
    (poly.apply_map(&map), map)
}

/// Number of lattice points at height one above the edge: in the standard
/// frame this is the length of the row `y = 1`.
pub fn mu(poly: &LatticePolygon, edge: &PrimitiveEdge) -> BigInt {
    let (std, _) = standardize_edge(poly, edge);
    match row_range(&std, &BigInt::one()) {
        Some((lo, hi)) => hi - lo + 1,
        None => BigInt::zero(),
    }
}

/// `(gamma(c - b, a - b), gamma(b - c, d - c))`.
///
/// When the polygon is not a scroll the values used by the classification
/// must be finite; a violation is reported as an internal inconsistency.
pub fn edge_gammas(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<(Gamma, Gamma)> {
    let gb = gamma(&(&edge.c - &edge.b), &(&edge.a - &edge.b))?;
    let gc = gamma(&(&edge.b - &edge.c), &(&edge.d - &edge.c))?;
    if !is_scroll_width(poly) {
        let m = mu(poly, edge);
        let finite = [&gb, &gc].iter().filter(|g| g.is_finite()).count();
        let violated = (m == BigInt::from(2) && finite == 0) || (m.is_one() && finite < 2);
        if violated {
            return Err(LatticeError::InternalInconsistency(format!(
                "edge {} -> {} of non-scroll polygon has mu = {m}, gamma_b = {gb}, gamma_c = {gc}",
                edge.b, edge.c
            )));
        }
    }
    Ok((gb, gc))
}

pub fn edge_invariants(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<EdgeInvariants> {
    let (gamma_b, gamma_c) = edge_gammas(poly, edge)?;
    let mu = mu(poly, edge);
    if mu < BigInt::one() {
        return Err(LatticeError::InternalInconsistency(format!(
            "mu = {mu} for edge {} -> {}",
            edge.b, edge.c
        )));
    }
    Ok(EdgeInvariants { mu, gamma_b, gamma_c })
}
