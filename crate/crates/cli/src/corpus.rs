//! Built-in example polygons.
//!
//! Two entries are marked `reconstructed`: their exact shape is not given
//! anywhere, only their invariant profile. [`search_degree_ten_pentagons`]
//! and [`search_fat_product_pairs`] are the bounded searches that pick them.

use num_bigint::BigInt;
use toric_fano::classify::{classify, ComponentDescriptor};
use toric_fano::lattice::enumerate::polygon_classes_in_box;
use toric_fano::lattice::{
    boundary_lattice_points, hull, is_scroll_width, lattice_points, unimodular_normal_form, LatticePoint,
    LatticePolygon,
};

use crate::document::PolygonDocument;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub polygon: LatticePolygon,
    pub reconstructed: bool,
}

impl CorpusEntry {
    pub fn document(&self) -> PolygonDocument {
        PolygonDocument { name: Some(self.name.to_string()), vertices: self.polygon.vertices().to_vec() }
    }
}

fn entry(name: &'static str, description: &'static str, coords: &[(i64, i64)], reconstructed: bool) -> CorpusEntry {
    let points: Vec<LatticePoint> = coords.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect();
    let polygon = hull(&points).expect("corpus polygon");
    CorpusEntry { name, description, polygon, reconstructed }
}

pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        entry("dp6-hexagon", "smooth del Pezzo surface of degree 6", &[(-1, 0), (0, -1), (1, -1), (1, 0), (0, 1), (-1, 1)], false),
        entry("dp5-pentagon", "singular del Pezzo surface of degree 5", &[(-1, 0), (1, -1), (1, 0), (0, 1), (-1, 1)], true),
        entry("dp4-square", "del Pezzo surface of degree 4", &[(-1, 0), (0, -1), (1, 0), (0, 1)], false),
        entry("dp3-cubic", "cubic surface xyz = w^3", &[(0, 0), (2, 1), (1, 2)], false),
        entry("dp2-type", "two mu = 1 edges with gammas {2, 3}", &[(-4, 8), (0, 0), (1, 0)], true),
        entry("veronese", "Veronese surface", &[(0, 0), (2, 0), (0, 2)], false),
        entry("scroll-1-0", "P_{1,0}: the projective plane", &[(0, 0), (1, 0), (0, 1)], false),
        entry("scroll-1-1", "P_{1,1}: the quadric surface", &[(0, 0), (1, 0), (1, 1), (0, 1)], false),
        entry("scroll-2-0", "P_{2,0}: the quadric cone", &[(0, 0), (1, 0), (0, 2)], false),
        entry("scroll-3-1", "P_{3,1}", &[(0, 0), (1, 0), (1, 1), (0, 3)], false),
        entry("scroll-2-2", "P_{2,2}", &[(0, 0), (1, 0), (1, 2), (0, 2)], false),
    ]
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

/// Non-scroll classes with vertices in `[lo, hi]^2`, in normal form, whose
/// Fano scheme has degree 10 with five components and whose polygon has a
/// single interior lattice point.
pub fn search_degree_ten_pentagons(lo: i64, hi: i64) -> Vec<LatticePolygon> {
    polygon_classes_in_box(lo, hi)
        .into_iter()
        .filter(|p| {
            if is_scroll_width(p) || lattice_points(p).len() - boundary_lattice_points(p).len() != 1 {
                return false;
            }
            let d = classify(p).expect("classify");
            d.total_degree == Some(BigInt::from(10)) && d.components.len() == 5
        })
        .collect()
}

/// Non-scroll classes with vertices in `[lo, hi]^2` whose Fano scheme is
/// two copies of `ξ2 × ξ3`, smallest area first (ties by normal form).
pub fn search_fat_product_pairs(lo: i64, hi: i64) -> Vec<LatticePolygon> {
    let want = ComponentDescriptor::fat_point_product(BigInt::from(2), BigInt::from(3));
    let mut out: Vec<LatticePolygon> = polygon_classes_in_box(lo, hi)
        .into_iter()
        .filter(|p| {
            if is_scroll_width(p) {
                return false;
            }
            let d = classify(p).expect("classify");
            d.components.len() == 2 && d.components.iter().all(|c| c.component == want)
        })
        .collect();
    out.sort_by(|a, b| (a.twice_area(), a.vertices()).cmp(&(b.twice_area(), b.vertices())));
    out
}

/// Whether two polygons are unimodularly equivalent.
pub fn equivalent(a: &LatticePolygon, b: &LatticePolygon) -> bool {
    unimodular_normal_form(a) == unimodular_normal_form(b)
}
