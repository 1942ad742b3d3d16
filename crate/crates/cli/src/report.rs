//! Classification and verification reports, as text or canonical JSON.
//!
//! JSON output is built from `serde_json::Value` maps, which keep their keys
//! sorted, so identical inputs give byte-identical output. Integers of any
//! size are written as JSON numbers; an infinite gamma is the string `"inf"`
//! and an infinite line count the string `"infinite"`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use toric_fano::classify::{classify, ComponentDescriptor, FanoDescription, LineCount, ScrollForm};
use toric_fano::lattice::{
    edge_invariants, primitive_edges, EdgeInvariants, Gamma, LatticePoint, LatticePolygon, PrimitiveEdge,
    UnimodularAffineMap,
};
use toric_fano::symbolic::{Field, VerificationReport};

use crate::document::PolygonDocument;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRow {
    pub edge: PrimitiveEdge,
    pub invariants: EdgeInvariants,
    /// `None` for scrolls, where the components are global.
    pub component: Option<ComponentDescriptor>,
    pub degree: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSection {
    pub degree_bound: u32,
    pub field: Field,
    pub edges: Vec<VerificationReport>,
}

impl VerificationSection {
    pub fn ok(&self) -> bool {
        self.edges.iter().all(VerificationReport::ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub input: PolygonDocument,
    pub polygon: LatticePolygon,
    pub description: FanoDescription,
    pub edges: Vec<EdgeRow>,
    pub verification: Option<VerificationSection>,
}

impl ReportDocument {
    pub fn classify(input: &PolygonDocument) -> Result<Self, CliError> {
        let polygon = input.polygon()?;
        let description = classify(&polygon).map_err(|e| CliError::Internal(e.to_string()))?;
        let mut edges = Vec::new();
        for e in primitive_edges(&polygon) {
            let invariants = edge_invariants(&polygon, &e).map_err(|e| CliError::Internal(e.to_string()))?;
            let comp = description.components.iter().find(|c| c.edge.index == e.index);
            edges.push(EdgeRow {
                component: comp.map(|c| c.component.clone()),
                degree: comp.map(|c| c.degree.clone()),
                edge: e,
                invariants,
            });
        }
        Ok(ReportDocument { input: input.clone(), polygon, description, edges, verification: None })
    }

    pub fn to_json(&self) -> String {
        let d = &self.description;
        let mut root = json!({
            "schema_version": SCHEMA_VERSION,
            "input": {
                "name": self.input.name,
                "vertices": points_json(&self.input.vertices),
            },
            "polygon": points_json(self.polygon.vertices()),
            "scroll": d.scroll.as_ref().map(scroll_json),
            "edges": self.edges.iter().map(edge_json).collect::<Vec<_>>(),
            "summary": d.summary(),
            "components": d.component_multiset().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "total_degree": d.total_degree.as_ref().map(number),
            "reduced": d.reduced,
            "line_count": match d.line_count {
                LineCount::Finite(n) => json!(n),
                LineCount::Infinite => json!("infinite"),
            },
            "bound_note": d.bound_note,
            "verification": Value::Null,
        });
        if let Some(v) = &self.verification {
            root["verification"] = json!({
                "degree_bound": v.degree_bound,
                "field": v.field.to_string(),
                "ok": v.ok(),
                "edges": v.edges.iter().map(verification_json).collect::<Vec<_>>(),
            });
        }
        let mut out = serde_json::to_string_pretty(&root).expect("serializable");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let d = &self.description;
        let mut out = String::new();
        let w = &mut out;
        if let Some(name) = &self.input.name {
            let _ = writeln!(w, "polygon: {name}");
        }
        let _ = writeln!(w, "vertices: {}", join(self.polygon.vertices()));
        match &d.scroll {
            Some(form) => {
                let _ = writeln!(w, "scroll: P_{{{},{}}} via {}", form.alpha, form.beta, form.map);
            }
            None => {
                let _ = writeln!(w, "scroll: no");
            }
        }
        if self.edges.is_empty() {
            let _ = writeln!(w, "primitive edges: none");
        } else {
            let _ = writeln!(w, "primitive edges:");
            for row in &self.edges {
                let inv = &row.invariants;
                let _ = write!(
                    w,
                    "  edge {}: {} -> {}  mu = {}  gamma_b = {}  gamma_c = {}",
                    row.edge.index, row.edge.b, row.edge.c, inv.mu, inv.gamma_b, inv.gamma_c
                );
                if let (Some(c), Some(deg)) = (&row.component, &row.degree) {
                    let _ = write!(w, "  {c} (degree {deg})");
                }
                let _ = writeln!(w);
            }
        }
        let _ = writeln!(w, "F1: {}", d.summary());
        let opt = |o: &Option<BigInt>| o.as_ref().map_or("n/a".to_string(), ToString::to_string);
        let _ = writeln!(w, "total degree: {}", opt(&d.total_degree));
        let _ = writeln!(w, "reduced: {}", d.reduced.map_or("n/a", |r| if r { "yes" } else { "no" }));
        let _ = writeln!(w, "lines: {}", d.line_count);
        let _ = writeln!(w, "bound: {}", d.bound_note);
        if let Some(v) = &self.verification {
            let _ = writeln!(w, "verification (D = {}, {}): {}", v.degree_bound, v.field, if v.ok() { "ok" } else { "FAILED" });
            for r in &v.edges {
                let _ = writeln!(
                    w,
                    "  edge {}: {} -> {}  {}  D_min = {}  forward {} ({} steps)  backward {} ({} generators)  chart {}  expected {}  {}",
                    r.edge_index,
                    r.b,
                    r.c,
                    r.case.name(),
                    r.required_degree,
                    if r.forward_ok { "ok" } else { "FAILED" },
                    r.forward_steps,
                    if r.backward_ok { "ok" } else { "FAILED" },
                    r.generators,
                    r.chart,
                    r.expected_chart,
                    if r.ok() { "ok" } else { "MISMATCH" },
                );
                for f in r.forward_failures.iter().chain(&r.backward_failures) {
                    let _ = writeln!(w, "    {f}");
                }
            }
        }
        out
    }
}

fn join(points: &[LatticePoint]) -> String {
    points.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn number(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("integer literal"))
}

pub fn point_json(p: &LatticePoint) -> Value {
    json!([number(&p.x), number(&p.y)])
}

pub fn points_json(points: &[LatticePoint]) -> Value {
    Value::Array(points.iter().map(point_json).collect())
}

fn gamma_json(g: &Gamma) -> Value {
    match g.value() {
        Some(v) => number(v),
        None => json!("inf"),
    }
}

fn map_json(m: &UnimodularAffineMap) -> Value {
    let a = m.matrix();
    let t = m.translation();
    json!({
        "matrix": [[number(&a[0][0]), number(&a[0][1])], [number(&a[1][0]), number(&a[1][1])]],
        "translation": [number(&t.dx), number(&t.dy)],
    })
}

fn scroll_json(form: &ScrollForm) -> Value {
    json!({
        "alpha": number(&form.alpha),
        "beta": number(&form.beta),
        "map": map_json(&form.map),
    })
}

fn edge_json(row: &EdgeRow) -> Value {
    json!({
        "index": row.edge.index,
        "b": point_json(&row.edge.b),
        "c": point_json(&row.edge.c),
        "mu": number(&row.invariants.mu),
        "gamma_b": gamma_json(&row.invariants.gamma_b),
        "gamma_c": gamma_json(&row.invariants.gamma_c),
        "component": row.component.as_ref().map(ToString::to_string),
        "degree": row.degree.as_ref().map(number),
    })
}

fn verification_json(r: &VerificationReport) -> Value {
    json!({
        "index": r.edge_index,
        "b": point_json(&r.b),
        "c": point_json(&r.c),
        "case": r.case.name(),
        "degree_bound": r.degree_bound,
        "required_degree": r.required_degree,
        "forward_ok": r.forward_ok,
        "forward_steps": r.forward_steps,
        "forward_failures": r.forward_failures,
        "backward_ok": r.backward_ok,
        "generators": r.generators,
        "backward_failure_count": r.backward_failure_count,
        "backward_failures": r.backward_failures,
        "length": r.length.as_ref().map(number),
        "chart": r.chart.to_string(),
        "expected_chart": r.expected_chart.to_string(),
        "matches_classifier": r.matches_classifier,
        "relations": r.rewrite_system.to_string().lines().map(str::to_string).collect::<Vec<_>>(),
    })
}
