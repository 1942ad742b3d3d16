//! SVG 1.1 figures: lattice grid, polygon, lattice points, and primitive
//! edges highlighted with their `μ / γ(b) / γ(c)` labels.

use std::fmt::Write as _;

use num_bigint::BigInt;
use toric_fano::lattice::{
    edge_invariants, lattice_points, primitive_edges, LatticeError, LatticePolygon,
};

const CELL: i64 = 48;
const MARGIN: i64 = 1;

struct Frame {
    x0: BigInt,
    y1: BigInt,
}

impl Frame {
    fn x(&self, p: &BigInt) -> BigInt {
        (p - &self.x0 + MARGIN) * CELL
    }

    fn y(&self, p: &BigInt) -> BigInt {
        (&self.y1 - p + MARGIN) * CELL
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(poly: &LatticePolygon) -> Result<String, LatticeError> {
    let vs = poly.vertices();
    let x0 = vs.iter().map(|v| &v.x).min().unwrap().clone();
    let x1 = vs.iter().map(|v| &v.x).max().unwrap().clone();
    let y0 = vs.iter().map(|v| &v.y).min().unwrap().clone();
    let y1 = vs.iter().map(|v| &v.y).max().unwrap().clone();
    let width = (&x1 - &x0 + 2 * MARGIN) * CELL;
    let height = (&y1 - &y0 + 2 * MARGIN) * CELL;
    let fr = Frame { x0: x0.clone(), y1: y1.clone() };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);

    let _ = writeln!(s, r##"<g class="grid" stroke="#dddddd" stroke-width="1">"##);
    let mut x = &x0 - MARGIN;
    while x <= &x1 + MARGIN {
        let px = fr.x(&x);
        let _ = writeln!(s, r#"<line x1="{px}" y1="0" x2="{px}" y2="{height}"/>"#);
        x += 1;
    }
    let mut y = &y0 - MARGIN;
    while y <= &y1 + MARGIN {
        let py = fr.y(&y);
        let _ = writeln!(s, r#"<line x1="0" y1="{py}" x2="{width}" y2="{py}"/>"#);
        y += 1;
    }
    let _ = writeln!(s, "</g>");

    let pts: Vec<String> = vs.iter().map(|v| format!("{},{}", fr.x(&v.x), fr.y(&v.y))).collect();
    let _ = writeln!(
        s,
        r##"<polygon class="polygon" points="{}" fill="#e8eef8" stroke="#334466" stroke-width="2"/>"##,
        pts.join(" ")
    );

    let _ = writeln!(s, r#"<g class="primitive-edges">"#);
    for e in primitive_edges(poly) {
        let inv = edge_invariants(poly, &e)?;
        let (bx, by) = (fr.x(&e.b.x), fr.y(&e.b.y));
        let (cx, cy) = (fr.x(&e.c.x), fr.y(&e.c.y));
        let _ = writeln!(
            s,
            r##"<line class="primitive-edge" x1="{bx}" y1="{by}" x2="{cx}" y2="{cy}" stroke="#cc2222" stroke-width="4"/>"##
        );
        // label outside the polygon, against the inner normal
        let mid_x: BigInt = (&bx + &cx) / 2 - &e.u.dx * (CELL / 3);
        let mid_y: BigInt = (&by + &cy) / 2 + &e.u.dy * (CELL / 3);
        let label = format!("μ={} γb={} γc={}", inv.mu, inv.gamma_b, inv.gamma_c);
        let _ = writeln!(
            s,
            r##"<text class="edge-label" x="{mid_x}" y="{mid_y}" font-family="sans-serif" font-size="11" text-anchor="middle" fill="#cc2222">{}</text>"##,
            escape(&label)
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g class="lattice-points">"#);
    for p in lattice_points(poly) {
        let vertex = vs.contains(&p);
        let _ = writeln!(
            s,
            r##"<circle cx="{}" cy="{}" r="{}" fill="{}"/>"##,
            fr.x(&p.x),
            fr.y(&p.y),
            if vertex { 5 } else { 4 },
            if vertex { "#334466" } else { "#7788aa" }
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    Ok(s)
}
