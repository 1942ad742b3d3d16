use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::arith::{ceil_div, floor_div};
use super::types::{LatticePoint, LatticePolygon, LatticeVector};
use super::{LatticeError, Result};

fn turn(o: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> BigInt {
    (a - o).det(&(b - o))
}

/// Counterclockwise convex hull keeping only extreme points (monotone chain).
pub fn hull(points: &[LatticePoint]) -> Result<LatticePolygon> {
    let mut pts: Vec<LatticePoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(LatticeError::DegenerateInput);
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= BigInt::zero() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= BigInt::zero() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(LatticeError::DegenerateInput);
    }
    Ok(LatticePolygon::from_ccw_unchecked(lower))
}

/// Integer range `[lo, hi]` of `x` values on the horizontal line at height
/// `y` that satisfy every edge half-plane, or `None` when the row is empty.
pub(crate) fn row_range(poly: &LatticePolygon, y: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for i in 0..poly.len() {
        let (p, q) = poly.edge(i);
        // det(q - p, (x, y) - p) >= 0  <=>  coef * x + rest >= 0
        let e = q - p;
        let coef = -&e.dy;
        let rest = &e.dx * (y - &p.y) + &e.dy * &p.x;
        if coef.is_zero() {
            if rest.is_negative() {
                return None;
            }
        } else if coef.is_positive() {
            let bound = ceil_div(&-rest, &coef);
            lo = Some(match lo {
                Some(l) if l >= bound => l,
                _ => bound,
            });
        } else {
            let bound = floor_div(&rest, &-coef);
            hi = Some(match hi {
                Some(h) if h <= bound => h,
                _ => bound,
            });
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) if l <= h => Some((l, h)),
        _ => None,
    }
}

fn y_range(poly: &LatticePolygon) -> (BigInt, BigInt) {
    let ys = poly.vertices().iter().map(|v| &v.y);
    let lo = ys.clone().min().cloned().unwrap_or_default();
    let hi = ys.max().cloned().unwrap_or_default();
    (lo, hi)
}

/// All lattice points of the closed polygon, sorted lexicographically.
pub fn lattice_points(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let (ylo, yhi) = y_range(poly);
    let mut out = Vec::new();
    let mut y = ylo;
    while y <= yhi {
        if let Some((lo, hi)) = row_range(poly, &y) {
            let mut x = lo;
            while x <= hi {
                out.push(LatticePoint { x: x.clone(), y: y.clone() });
                x += 1;
            }
        }
        y += 1;
    }
    out.sort();
    out
}

/// Boundary lattice points in counterclockwise cyclic order, starting at the
/// first vertex.
pub fn boundary_lattice_points(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, q) = poly.edge(i);
        let e = q - p;
        let g = e.content();
        let step = e.primitive_part();
        let mut k = BigInt::zero();
        while k < g {
            out.push(p + &step.scale(&k));
            k += 1;
        }
    }
    out
}

/// True iff at each vertex the primitive directions of the two outgoing
/// edges form a lattice basis.
pub fn is_smooth(poly: &LatticePolygon) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let v = poly.vertex(i);
        let next: LatticeVector = (poly.vertex(i + 1) - v).primitive_part();
        let prev: LatticeVector = (poly.vertex(i + n - 1) - v).primitive_part();
        next.det(&prev).abs().is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::UnimodularAffineMap;

    fn pts(c: &[(i64, i64)]) -> Vec<LatticePoint> {
        c.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect()
    }

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        hull(&pts(c)).unwrap()
    }

    /// Independent point count: scan the bounding box with half-plane tests.
    fn brute_points(p: &LatticePolygon) -> Vec<LatticePoint> {
        let xs: Vec<i64> = p.vertices().iter().map(|v| i64::try_from(&v.x).unwrap()).collect();
        let ys: Vec<i64> = p.vertices().iter().map(|v| i64::try_from(&v.y).unwrap()).collect();
        let mut out = Vec::new();
        for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
            for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
                let q = LatticePoint::new(x, y);
                if p.contains(&q) {
                    out.push(q);
                }
            }
        }
        out
    }

    #[test]
    fn hull_examples() {
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(t.vertices(), pts(&[(0, 0), (1, 0), (0, 1)]).as_slice());
        let t = poly(&[(0, 0), (2, 0), (1, 0), (0, 2)]);
        assert_eq!(t.vertices(), pts(&[(0, 0), (2, 0), (0, 2)]).as_slice());
        assert_eq!(hull(&pts(&[(0, 0), (1, 0)])), Err(LatticeError::DegenerateInput));
        assert_eq!(hull(&pts(&[(0, 0), (1, 1), (3, 3)])), Err(LatticeError::DegenerateInput));
    }

    #[test]
    fn strict_constructor_rejects_bad_input() {
        assert!(LatticePolygon::new(pts(&[(0, 0), (1, 0), (0, 1)])).is_ok());
        // clockwise
        assert!(LatticePolygon::new(pts(&[(0, 0), (0, 1), (1, 0)])).is_err());
        // collinear middle vertex
        assert!(LatticePolygon::new(pts(&[(0, 0), (1, 0), (2, 0), (0, 2)])).is_err());
        // rotation of a valid cycle is fine
        let p = LatticePolygon::new(pts(&[(1, 0), (0, 1), (0, 0)])).unwrap();
        assert_eq!(p.vertex(0), &LatticePoint::new(0, 0));
    }

    #[test]
    fn lattice_point_examples() {
        assert_eq!(lattice_points(&poly(&[(0, 0), (1, 0), (0, 1)])).len(), 3);
        let sq = poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert_eq!(lattice_points(&sq), pts(&[(-1, 0), (0, -1), (0, 0), (0, 1), (1, 0)]));
        let tri = poly(&[(0, 0), (2, 1), (1, 2)]);
        assert_eq!(lattice_points(&tri), pts(&[(0, 0), (1, 1), (1, 2), (2, 1)]));
        for p in [&sq, &tri] {
            assert_eq!(lattice_points(p), brute_points(p));
        }
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary_lattice_points(&poly(&[(0, 0), (1, 0), (0, 1)])).len(), 3);
        let v = poly(&[(0, 0), (2, 0), (0, 2)]);
        assert_eq!(
            boundary_lattice_points(&v),
            pts(&[(0, 0), (1, 0), (2, 0), (1, 1), (0, 2), (0, 1)])
        );
        assert_eq!(boundary_lattice_points(&poly(&[(0, 0), (1, 0), (0, 2)])).len(), 4);
    }

    #[test]
    fn pick_theorem_holds() {
        let cases: [&[(i64, i64)]; 4] = [
            &[(0, 0), (5, 1), (2, 7)],
            &[(-3, -1), (4, -2), (3, 3), (-1, 4)],
            &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
            &[(0, 0), (7, 3), (1, 1)],
        ];
        for c in cases {
            let p = poly(c);
            let all = lattice_points(&p);
            assert_eq!(all, brute_points(&p));
            let boundary = boundary_lattice_points(&p).len() as i64;
            let interior = all.len() as i64 - boundary;
            // 2A = 2I + B - 2
            assert_eq!(p.twice_area(), BigInt::from(2 * interior + boundary - 2));
        }
    }

    #[test]
    fn smoothness_examples() {
        let hex = poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]);
        assert!(is_smooth(&hex));
        assert!(!is_smooth(&poly(&[(0, 0), (2, 1), (1, 2)])));
        assert!(is_smooth(&poly(&[(0, 0), (1, 0), (0, 1)])));
    }

    #[test]
    fn apply_map_examples() {
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(sq.apply_map(&UnimodularAffineMap::identity()), sq);
        let rot = UnimodularAffineMap::from_i64([[0, -1], [1, 0]], (0, 0)).unwrap();
        assert_eq!(sq.apply_map(&rot), poly(&[(0, 0), (-1, 0), (-1, 1), (0, 1)]));
        let shear = UnimodularAffineMap::from_i64([[1, 1], [0, 1]], (0, 0)).unwrap();
        let t = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(t.apply_map(&shear), poly(&[(0, 0), (1, 0), (1, 1)]));
        let flip = UnimodularAffineMap::from_i64([[1, 0], [0, -1]], (0, 0)).unwrap();
        let img = t.apply_map(&flip);
        assert!(img.twice_area() > BigInt::zero());
        assert_eq!(img, poly(&[(0, 0), (1, 0), (0, -1)]));
    }
}
