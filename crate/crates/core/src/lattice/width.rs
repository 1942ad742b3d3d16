use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::types::{LatticePolygon, LatticeVector};

fn spread(poly: &LatticePolygon, u: &LatticeVector) -> BigInt {
    let vals: Vec<BigInt> = poly.vertices().iter().map(|v| u.eval(v)).collect();
    let max = vals.iter().max().expect("polygon has vertices");
    let min = vals.iter().min().expect("polygon has vertices");
    max - min
}

/// Sign convention for directions: first nonzero coordinate positive.
fn canonical_sign(u: LatticeVector) -> LatticeVector {
    if u.dx.is_negative() || (u.dx.is_zero() && u.dy.is_negative()) {
        -&u
    } else {
        u
    }
}

/// Minimum over the edge normals of the spread of the normal functional.
///
/// This is an upper bound for the lattice width, exact whenever it equals 1:
/// a polygon of width one lies on two adjacent lattice lines, and one of
/// them carries an edge. Ties go to the lexicographically smallest direction.
pub fn lattice_width(poly: &LatticePolygon) -> (BigInt, LatticeVector) {
    let mut best: Option<(BigInt, LatticeVector)> = None;
    for i in 0..poly.len() {
        let u = canonical_sign(poly.inner_normal(i));
        let w = spread(poly, &u);
        let better = match &best {
            None => true,
            Some((bw, bu)) => w < *bw || (w == *bw && u < *bu),
        };
        if better {
            best = Some((w, u));
        }
    }
    best.expect("polygon has edges")
}

/// Width-one test; equivalent to being lattice equivalent to some `P_{a,b}`.
pub fn is_scroll_width(poly: &LatticePolygon) -> bool {
    (0..poly.len()).any(|i| spread(poly, &poly.inner_normal(i)).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{hull, LatticePoint};

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        hull(&c.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn width_examples() {
        let p32 = poly(&[(0, 0), (1, 0), (0, 3), (1, 2)]);
        assert_eq!(lattice_width(&p32), (BigInt::one(), LatticeVector::new(1, 0)));
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(lattice_width(&sq), (BigInt::one(), LatticeVector::new(0, 1)));
        let hex = poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]);
        assert_eq!(lattice_width(&hex).0, BigInt::from(2));
        assert!(!is_scroll_width(&hex));
        assert!(is_scroll_width(&p32));
    }
}
