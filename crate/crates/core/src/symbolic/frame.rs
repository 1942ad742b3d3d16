use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;

use crate::lattice::{
    edge_invariants, is_scroll_width, lattice_points, standardize_edge, EdgeInvariants, LatticePoint,
    LatticePolygon, PrimitiveEdge, UnimodularAffineMap,
};

use super::Result;

/// A polygon moved so that the active edge is `b = (0,0)`, `c = (1,0)` and the
/// boundary point before `b` is `a = (-q, p)` with `0 <= q < p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardEdgeFrame {
    pub polygon: LatticePolygon,
    /// Takes the input polygon onto `polygon`.
    pub map: UnimodularAffineMap,
    pub edge_index: usize,
    pub points: BTreeSet<LatticePoint>,
    pub b: LatticePoint,
    pub c: LatticePoint,
    pub a: LatticePoint,
    pub v: LatticePoint,
    /// `(1,1)`, present iff `mu >= 2`.
    pub w: Option<LatticePoint>,
    /// `(-1, gamma_b)` when `gamma_b` is finite and the point lies in the polygon.
    pub a_prime: Option<LatticePoint>,
    /// `(0, 2)` when present.
    pub d_prime: Option<LatticePoint>,
    pub invariants: EdgeInvariants,
    pub scroll: bool,
}

impl StandardEdgeFrame {
    pub fn new(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<Self> {
        let invariants = edge_invariants(poly, edge)?;
        let (polygon, map) = standardize_edge(poly, edge);
        let points: BTreeSet<LatticePoint> = lattice_points(&polygon).into_iter().collect();
        let present = |x: i64, y: BigInt| {
            let p = LatticePoint { x: x.into(), y };
            points.contains(&p).then_some(p)
        };
        let w = present(1, BigInt::one());
        let a_prime = invariants.gamma_b.value().and_then(|g| present(-1, g.clone()));
        let d_prime = present(0, BigInt::from(2));
        let v = LatticePoint::new(0, 1);
        debug_assert!(points.contains(&v));
        Ok(StandardEdgeFrame {
            a: map.apply(&edge.a),
            scroll: is_scroll_width(poly),
            polygon,
            map,
            edge_index: edge.index,
            b: LatticePoint::origin(),
            c: LatticePoint::new(1, 0),
            v,
            w,
            a_prime,
            d_prime,
            points,
            invariants,
        })
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.contains(p)
    }

    /// Lattice points at height at least one, row by row, left to right.
    pub fn upper_points(&self) -> Vec<LatticePoint> {
        let mut pts: Vec<LatticePoint> = self.points.iter().filter(|p| p.y >= BigInt::one()).cloned().collect();
        pts.sort_by(|p, q| (&p.y, &p.x).cmp(&(&q.y, &q.x)));
        pts
    }

    /// The reflection `(x, y) ↦ (1 - x + (mu - 2) y, y)`, which swaps `b` and
    /// `c` and preserves the height-one row.
    pub fn mirror(&self, p: &LatticePoint) -> LatticePoint {
        let k = &self.invariants.mu - 2;
        LatticePoint { x: 1 - &p.x + k * &p.y, y: p.y.clone() }
    }
}
