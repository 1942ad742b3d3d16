#![allow(dead_code)]

use proptest::prelude::*;
use toric_fano::classify::ScrollForm;
use toric_fano::lattice::{hull, LatticePoint, LatticePolygon, LatticeVector, UnimodularAffineMap};

pub fn poly(c: &[(i64, i64)]) -> LatticePolygon {
    LatticePolygon::from_i64(c).unwrap()
}

pub fn hexagon() -> LatticePolygon {
    poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
}

pub fn pentagon() -> LatticePolygon {
    poly(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (1, -1)])
}

pub fn square() -> LatticePolygon {
    poly(&[(1, 0), (0, 1), (-1, 0), (0, -1)])
}

pub fn cubic() -> LatticePolygon {
    poly(&[(0, 0), (2, 1), (1, 2)])
}

pub fn two_fat_products() -> LatticePolygon {
    poly(&[(0, 0), (1, 0), (-4, 8)])
}

pub fn veronese() -> LatticePolygon {
    poly(&[(0, 0), (2, 0), (0, 2)])
}

pub fn scroll(alpha: i64, beta: i64) -> LatticePolygon {
    ScrollForm::polygon(&alpha.into(), &beta.into()).unwrap()
}

/// The non-scroll polygons of the example corpus.
pub fn surfaces() -> Vec<(&'static str, LatticePolygon)> {
    vec![
        ("hexagon", hexagon()),
        ("pentagon", pentagon()),
        ("square", square()),
        ("cubic", cubic()),
        ("fat-products", two_fat_products()),
        ("veronese", veronese()),
    ]
}

pub fn scrolls() -> Vec<(&'static str, LatticePolygon)> {
    vec![
        ("P10", scroll(1, 0)),
        ("P11", scroll(1, 1)),
        ("P20", scroll(2, 0)),
        ("P31", scroll(3, 1)),
        ("P22", scroll(2, 2)),
    ]
}

pub fn corpus() -> Vec<(&'static str, LatticePolygon)> {
    let mut out = surfaces();
    out.extend(scrolls());
    out
}

/// A random element of `GL2(Z)` as a word in shears, the swap and a sign,
/// followed by a translation.
pub fn arb_unimodular() -> impl Strategy<Value = UnimodularAffineMap> {
    (
        prop::collection::vec((0u8..3, -3i64..=3), 0..6),
        any::<bool>(),
        (-20i64..=20, -20i64..=20),
    )
        .prop_map(|(word, flip, t)| {
            let mut m = UnimodularAffineMap::identity();
            for (kind, k) in word {
                let g = match kind {
                    0 => [[1, k], [0, 1]],
                    1 => [[1, 0], [k, 1]],
                    _ => [[0, 1], [1, 0]],
                };
                m = UnimodularAffineMap::from_i64(g, (0, 0)).unwrap().compose(&m);
            }
            if flip {
                m = UnimodularAffineMap::from_i64([[-1, 0], [0, 1]], (0, 0)).unwrap().compose(&m);
            }
            UnimodularAffineMap::translation_by(LatticeVector::new(t.0, t.1)).compose(&m)
        })
}

/// Hull of a few random points in `[lo, hi]^2`, skipping degenerate draws.
pub fn arb_polygon(lo: i64, hi: i64) -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((lo..=hi, lo..=hi), 3..8).prop_filter_map("degenerate hull", |pts| {
        let pts: Vec<LatticePoint> = pts.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect();
        hull(&pts).ok()
    })
}
