use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arith::{extended_gcd, modulo};
use super::types::{LatticePolygon, LatticeVector, UnimodularAffineMap};

/// Map sending vertex `i` to the origin, the primitive direction of the next
/// edge to `(1, 0)` and the previous edge direction to `(x, y)` with
/// `-y < x <= 0`.
fn vertex_frame(poly: &LatticePolygon, i: usize) -> UnimodularAffineMap {
    let n = poly.len();
    let v = poly.vertex(i);
    let e1 = (poly.vertex(i + 1) - v).primitive_part();
    let e2 = (poly.vertex(i + n - 1) - v).primitive_part();
    let (_, alpha, beta) = extended_gcd(&e1.dx, &e1.dy);
    let base = UnimodularAffineMap::new([[alpha, beta], [-&e1.dy, e1.dx.clone()]], LatticeVector::new(0, 0))
        .expect("determinant 1 by construction");
    let w = base.apply_vector(&e2);
    let target = -modulo(&-&w.dx, &w.dy);
    let k = (target - &w.dx) / &w.dy;
    let shear = UnimodularAffineMap::new(
        [[BigInt::one(), k], [BigInt::zero(), BigInt::one()]],
        LatticeVector::new(0, 0),
    )
    .expect("shear");
    let linear = shear.compose(&base);
    let shift = linear.apply_vector(&v.to_vector());
    UnimodularAffineMap::translation_by(-&shift).compose(&linear)
}

/// Canonical representative of the unimodular equivalence class: the
/// lexicographically smallest vertex list over all vertex frames of the
/// polygon and of its mirror image. Two polygons are lattice equivalent iff
/// their normal forms coincide.
pub fn unimodular_normal_form(poly: &LatticePolygon) -> LatticePolygon {
    let mirror = UnimodularAffineMap::from_i64([[-1, 0], [0, 1]], (0, 0)).expect("reflection");
    let reflected = poly.apply_map(&mirror);
    let mut best: Option<LatticePolygon> = None;
    for q in [poly, &reflected] {
        for i in 0..q.len() {
            let img = q.apply_map(&vertex_frame(q, i));
            if best.as_ref().is_none_or(|b| img.vertices() < b.vertices()) {
                best = Some(img);
            }
        }
    }
    best.expect("polygon has vertices")
}
