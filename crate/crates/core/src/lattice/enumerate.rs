//! Exhaustive enumeration of convex lattice polygons in a small box, up to
//! unimodular equivalence.
//!
//! The search runs on machine integers: box sides are small (the whole point
//! is exhaustiveness), and every intermediate value is bounded by a few
//! multiples of the box side squared.

use std::collections::HashSet;

use super::types::{LatticePoint, LatticePolygon};

type P = (i64, i64);

fn cross(a: P, b: P) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: P, b: P) -> P {
    (a.0 - b.0, a.1 - b.1)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

fn primitive(v: P) -> P {
    let g = gcd(v.0, v.1);
    (v.0 / g, v.1 / g)
}

fn rotate_min(mut v: Vec<P>) -> Vec<P> {
    let start = (0..v.len()).min_by_key(|&i| v[i]).unwrap_or(0);
    v.rotate_left(start);
    v
}

/// Same construction as `unimodular_normal_form`, on machine integers.
fn normal_form(vertices: &[P]) -> Vec<P> {
    let mirrored: Vec<P> = vertices.iter().rev().map(|&(x, y)| (-x, y)).collect();
    let mut best: Option<Vec<P>> = None;
    for q in [vertices, mirrored.as_slice()] {
        let n = q.len();
        for i in 0..n {
            let v = q[i];
            let e1 = primitive(sub(q[(i + 1) % n], v));
            let e2 = primitive(sub(q[(i + n - 1) % n], v));
            let (_, alpha, beta) = egcd(e1.0, e1.1);
            // rows (alpha, beta), (-e1.y, e1.x)
            let apply = |p: P| (alpha * p.0 + beta * p.1, -e1.1 * p.0 + e1.0 * p.1);
            let w = apply(e2);
            let target = -((-w.0).rem_euclid(w.1));
            let k = (target - w.0) / w.1;
            let img: Vec<P> = q
                .iter()
                .map(|&p| {
                    let r = apply(sub(p, v));
                    (r.0 + k * r.1, r.1)
                })
                .collect();
            let img = rotate_min(img);
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.unwrap_or_default()
}

struct Search {
    points: Vec<P>,
    seen: HashSet<Vec<P>>,
}

impl Search {
    fn extend(&mut self, path: &mut Vec<P>) {
        let s = path[0];
        let cur = *path.last().unwrap();
        if path.len() >= 3 {
            let prev = path[path.len() - 2];
            if cross(sub(cur, prev), sub(s, cur)) > 0
                && cross(sub(s, cur), sub(path[1], s)) > 0
                && path.iter().map(|p| p.1).min() == Some(0)
            {
                let nf = normal_form(path);
                self.seen.insert(nf);
            }
        }
        for idx in 0..self.points.len() {
            let n = self.points[idx];
            if n <= s {
                continue;
            }
            if path.len() >= 2 {
                if cross(sub(cur, s), sub(n, s)) <= 0 {
                    continue;
                }
                if cross(sub(cur, path[path.len() - 2]), sub(n, cur)) <= 0 {
                    continue;
                }
            }
            path.push(n);
            self.extend(path);
            path.pop();
        }
    }
}

/// Representatives (in unimodular normal form, sorted) of every class of
/// convex lattice polygons with all vertices in `[lo, hi]^2`.
pub fn polygon_classes_in_box(lo: i64, hi: i64) -> Vec<LatticePolygon> {
    let side = hi - lo;
    assert!((0..=64).contains(&side), "box side must be between 0 and 64");
    let points: Vec<P> = (0..=side).flat_map(|x| (0..=side).map(move |y| (x, y))).collect();
    let mut search = Search { points: points.clone(), seen: HashSet::new() };
    // translation representatives: the lexicographically smallest vertex sits on x = 0
    for y in 0..=side {
        let mut path = vec![(0, y)];
        search.extend(&mut path);
    }
    let mut classes: Vec<Vec<P>> = search.seen.into_iter().collect();
    classes.sort();
    classes
        .into_iter()
        .map(|vs| {
            LatticePolygon::from_ccw_unchecked(vs.into_iter().map(|(x, y)| LatticePoint::new(x, y)).collect())
        })
        .collect()
}
