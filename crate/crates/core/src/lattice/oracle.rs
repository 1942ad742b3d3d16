//! Brute-force oracles for differential testing of the formula paths.
//!
//! These scan lattice points directly and never go through
//! `normalize_pair` or `standardize_edge`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::{ceil_div, extended_gcd, floor_div};
use super::types::{Gamma, LatticePoint, LatticePolygon, LatticeVector, PrimitiveEdge, UnimodularAffineMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Around `b`: left of the ray from `b` through the leftmost height-one point.
    Left,
    /// Around `c`: right of the ray from `c` through the rightmost height-one point.
    Right,
}

/// Every lattice point of the polygon, row by row: each inner half-plane
/// `u . p >= u . v_i` cuts the row `y` down to an interval of `x`.
fn scan_points(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let ys = poly.vertices().iter().map(|v| &v.y);
    let (ylo, yhi) = (ys.clone().min().unwrap().clone(), ys.max().unwrap().clone());
    let planes: Vec<(LatticeVector, BigInt)> = (0..poly.len())
        .map(|i| {
            let u = poly.inner_normal(i);
            let c = u.eval(poly.vertex(i));
            (u, c)
        })
        .collect();
    let mut out = Vec::new();
    let mut y = ylo;
    'rows: while y <= yhi {
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for (u, c) in &planes {
            let r = c - &u.dy * &y;
            if u.dx.is_positive() {
                let b = ceil_div(&r, &u.dx);
                lo = Some(lo.map_or(b.clone(), |l| l.max(b)));
            } else if u.dx.is_negative() {
                let b = floor_div(&r, &u.dx);
                hi = Some(hi.map_or(b.clone(), |h| h.min(b)));
            } else if r.is_positive() {
                y += 1;
                continue 'rows;
            }
        }
        let (Some(mut x), Some(hi)) = (lo, hi) else { unreachable!("bounded polygon") };
        while x <= hi {
            out.push(LatticePoint { x: x.clone(), y: y.clone() });
            x += 1;
        }
        y += 1;
    }
    out
}

/// Any orientation-preserving frame with `b = (0, 0)` and `c = (1, 0)`.
fn edge_frame(edge: &PrimitiveEdge) -> UnimodularAffineMap {
    let e = &edge.c - &edge.b;
    let (_, alpha, beta) = extended_gcd(&e.dx, &e.dy);
    let linear = UnimodularAffineMap::new([[alpha, beta], [-&e.dy, e.dx.clone()]], LatticeVector::new(0, 0))
        .expect("determinant 1");
    let shift = linear.apply_vector(&edge.b.to_vector());
    UnimodularAffineMap::translation_by(-&shift).compose(&linear)
}

/// Ray-scan reading of gamma: the first height `h >= 2` at which a lattice
/// point of the polygon lies strictly beyond the boundary ray on `side`.
pub fn gamma_geometric(poly: &LatticePolygon, edge: &PrimitiveEdge, side: Side) -> Gamma {
    let frame = edge_frame(edge);
    // scan in the original coordinates; the sheared image can have a much larger bounding box
    let points: Vec<LatticePoint> = scan_points(poly).iter().map(|p| frame.apply(p)).collect();
    let one = BigInt::one();
    let row1: Vec<&BigInt> = points.iter().filter(|p| p.y == one).map(|p| &p.x).collect();
    let (Some(left), Some(right)) = (row1.iter().min(), row1.iter().max()) else {
        return Gamma::Infinite;
    };
    let beyond = |p: &LatticePoint| match side {
        // cross((l, 1), (x, h)) > 0
        Side::Left => *left * &p.y - &p.x > BigInt::zero(),
        // cross((r - 1, 1), (x - 1, h)) < 0
        Side::Right => (*right - 1) * &p.y - (&p.x - 1) < BigInt::zero(),
    };
    points
        .iter()
        .filter(|p| p.y >= BigInt::from(2) && beyond(p))
        .map(|p| p.y.clone())
        .min()
        .map(Gamma::Finite)
        .unwrap_or(Gamma::Infinite)
}

/// Direct count of lattice points one step above the edge.
pub fn mu_by_height_count(poly: &LatticePolygon, edge: &PrimitiveEdge) -> BigInt {
    let base = edge.u.eval(&edge.b);
    BigInt::from(scan_points(poly).iter().filter(|p| edge.u.eval(p) - &base == BigInt::one()).count())
}

/// Lattice width by enumerating all primitive functionals with coefficients
/// bounded by the bounding box size.
pub fn lattice_width_brute(poly: &LatticePolygon) -> BigInt {
    let xs: Vec<&BigInt> = poly.vertices().iter().map(|v| &v.x).collect();
    let ys: Vec<&BigInt> = poly.vertices().iter().map(|v| &v.y).collect();
    let w = *xs.iter().max().unwrap() - *xs.iter().min().unwrap();
    let h = *ys.iter().max().unwrap() - *ys.iter().min().unwrap();
    let bound = if w > h { w } else { h };
    let mut best: Option<BigInt> = None;
    let mut a = -bound.clone();
    while a <= bound {
        let mut b = -bound.clone();
        while b <= bound {
            let u = LatticeVector { dx: a.clone(), dy: b.clone() };
            if u.is_primitive() {
                let vals: Vec<BigInt> = poly.vertices().iter().map(|v| u.eval(v)).collect();
                let s = vals.iter().max().unwrap() - vals.iter().min().unwrap();
                if best.as_ref().is_none_or(|x| s < *x) {
                    best = Some(s);
                }
            }
            b += 1;
        }
        a += 1;
    }
    best.map(|s| s.abs()).expect("bounding box is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{edge_gammas, hull, mu, primitive_edges};

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        hull(&c.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn ray_scan_examples() {
        let tri = poly(&[(0, 0), (2, 1), (1, 2)]);
        let e = primitive_edges(&tri).into_iter().find(|e| e.b == LatticePoint::origin()).unwrap();
        assert_eq!(gamma_geometric(&tri, &e, Side::Left), Gamma::finite(3));
        let sq = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        for e in primitive_edges(&sq) {
            assert_eq!(gamma_geometric(&sq, &e, Side::Left), Gamma::finite(2));
            assert_eq!(gamma_geometric(&sq, &e, Side::Right), Gamma::finite(2));
        }
        let p32 = poly(&[(0, 0), (1, 0), (0, 3), (1, 2)]);
        let e = primitive_edges(&p32).into_iter().find(|e| e.b == LatticePoint::origin()).unwrap();
        assert_eq!(gamma_geometric(&p32, &e, Side::Left), Gamma::Infinite);
        assert_eq!(gamma_geometric(&p32, &e, Side::Right), Gamma::Infinite);
    }

    #[test]
    fn oracles_agree_with_formulas() {
        let polys = [
            poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]),
            poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (1, -1)]),
            poly(&[(0, 0), (5, 2), (3, 7), (-1, 3)]),
            poly(&[(0, 0), (1, 0), (0, 5), (1, 2)]),
            poly(&[(0, 0), (3, 1), (1, 4)]),
        ];
        for p in &polys {
            for e in primitive_edges(p) {
                let (gb, gc) = edge_gammas(p, &e).unwrap();
                assert_eq!(gamma_geometric(p, &e, Side::Left), gb, "{p} edge {}", e.index);
                assert_eq!(gamma_geometric(p, &e, Side::Right), gc, "{p} edge {}", e.index);
                assert_eq!(mu_by_height_count(p, &e), mu(p, &e));
            }
        }
    }

    #[test]
    fn brute_width() {
        assert_eq!(lattice_width_brute(&poly(&[(0, 0), (1, 0), (0, 3), (1, 2)])), BigInt::one());
        let hex = poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]);
        assert_eq!(lattice_width_brute(&hex), BigInt::from(2));
    }
}
