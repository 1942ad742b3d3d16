//! Scheme structure of the Fano scheme of lines `F1(X_P)`.
//!
//! Two regimes:
//!
//! * `P` has lattice width one. Then `P` is equivalent to
//!   `P_{a,b} = conv{(0,0), (1,0), (0,a), (1,b)}` with `a >= max(b, 1)`, the
//!   surface is a rational normal scroll, and `F1` is one of five
//!   positive-dimensional schemes depending only on `(a, b)`.
//! * Otherwise `F1` is zero-dimensional (or empty) with one component per
//!   primitive edge `E`, determined by `mu_E`, `gamma_b` and `gamma_c`:
//!
//! | `mu_E` | component                   | degree          |
//! |--------|-----------------------------|-----------------|
//! | `>= 3` | `ξ1` (reduced point)        | 1               |
//! | `2`    | `ξ_min(γb, γc)`             | `min(γb, γc)`   |
//! | `1`    | `ξ_γb × ξ_γc`               | `γb · γc`       |
//!
//! The first row is stated for `mu_E >= 3`: with `mu_E = 2` the second row
//! applies, and the local computation for reduced points uses the lattice
//! point `(2, 1)`, which only exists when `mu_E >= 3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{
    edge_invariants, extended_gcd, hull, primitive_edges, EdgeInvariants,
    Gamma, LatticeError, LatticePoint, LatticePolygon, LatticeVector, PrimitiveEdge,
    UnimodularAffineMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("invalid scroll parameters alpha = {alpha}, beta = {beta}")]
    InvalidScroll { alpha: BigInt, beta: BigInt },
    #[error("edge invariants mu = {mu}, gamma_b = {gamma_b}, gamma_c = {gamma_c} need a finite gamma")]
    InfiniteGamma { mu: BigInt, gamma_b: Gamma, gamma_c: Gamma },
    #[error("fixed points are only computed for k <= 2, got k = {0}")]
    UnsupportedK(u32),
    #[error("the Fano scheme of lines is positive-dimensional")]
    NotZeroDimensional,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, ClassifyError>;

/// `P` together with a unimodular map taking it onto `P_{alpha,beta}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScrollForm {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub map: UnimodularAffineMap,
}

impl ScrollForm {
    /// `P_{alpha,beta} = conv{(0,0), (1,0), (0,alpha), (1,beta)}`.
    pub fn polygon(alpha: &BigInt, beta: &BigInt) -> Result<LatticePolygon> {
        if !alpha.is_positive() || beta.is_negative() || beta > alpha {
            return Err(ClassifyError::InvalidScroll { alpha: alpha.clone(), beta: beta.clone() });
        }
        Ok(hull(&[
            LatticePoint::new(0, 0),
            LatticePoint::new(1, 0),
            LatticePoint { x: BigInt::zero(), y: alpha.clone() },
            LatticePoint { x: BigInt::one(), y: beta.clone() },
        ])?)
    }
}

/// An irreducible component, or a disjoint union of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentDescriptor {
    /// `ξ1`, a reduced point.
    ReducedPoint,
    /// `ξ_l = Spec K[z]/z^l` with `l >= 2`.
    FatPoint(BigInt),
    /// `ξ_a × ξ_b`, stored with `a <= b`.
    FatPointProduct(BigInt, BigInt),
    ProjectiveLine,
    ProjectivePlane,
    /// `P1 × ξ2`.
    LineTimesDoublePoint,
    Disjoint(Vec<ComponentDescriptor>),
}

impl ComponentDescriptor {
    pub fn fat_point_product(a: BigInt, b: BigInt) -> Self {
        if a <= b {
            ComponentDescriptor::FatPointProduct(a, b)
        } else {
            ComponentDescriptor::FatPointProduct(b, a)
        }
    }

    /// Length of a zero-dimensional scheme; `None` when positive-dimensional.
    pub fn degree(&self) -> Option<BigInt> {
        match self {
            ComponentDescriptor::ReducedPoint => Some(BigInt::one()),
            ComponentDescriptor::FatPoint(l) => Some(l.clone()),
            ComponentDescriptor::FatPointProduct(a, b) => Some(a * b),
            ComponentDescriptor::Disjoint(parts) => parts.iter().map(|p| p.degree()).sum(),
            _ => None,
        }
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.degree().is_some()
    }

    pub fn is_reduced(&self) -> bool {
        match self {
            ComponentDescriptor::ReducedPoint
            | ComponentDescriptor::ProjectiveLine
            | ComponentDescriptor::ProjectivePlane => true,
            ComponentDescriptor::FatPoint(_)
            | ComponentDescriptor::FatPointProduct(..)
            | ComponentDescriptor::LineTimesDoublePoint => false,
            ComponentDescriptor::Disjoint(parts) => parts.iter().all(|p| p.is_reduced()),
        }
    }

    /// Stable machine-readable kind name.
    pub fn kind(&self) -> &'static str {
        match self {
            ComponentDescriptor::ReducedPoint => "reduced_point",
            ComponentDescriptor::FatPoint(_) => "fat_point",
            ComponentDescriptor::FatPointProduct(..) => "fat_point_product",
            ComponentDescriptor::ProjectiveLine => "projective_line",
            ComponentDescriptor::ProjectivePlane => "projective_plane",
            ComponentDescriptor::LineTimesDoublePoint => "line_times_double_point",
            ComponentDescriptor::Disjoint(_) => "disjoint_union",
        }
    }
}

fn subscript(n: &BigInt) -> String {
    n.to_string()
        .chars()
        .map(|c| match c {
            '0'..='9' => char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap(),
            other => other,
        })
        .collect()
}

impl fmt::Display for ComponentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentDescriptor::ReducedPoint => write!(f, "ξ₁"),
            ComponentDescriptor::FatPoint(l) => write!(f, "ξ{}", subscript(l)),
            ComponentDescriptor::FatPointProduct(a, b) => write!(f, "ξ{} × ξ{}", subscript(a), subscript(b)),
            ComponentDescriptor::ProjectiveLine => write!(f, "ℙ¹"),
            ComponentDescriptor::ProjectivePlane => write!(f, "ℙ²"),
            ComponentDescriptor::LineTimesDoublePoint => write!(f, "ℙ¹ × ξ₂"),
            ComponentDescriptor::Disjoint(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ⊔ ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeComponent {
    pub edge: PrimitiveEdge,
    pub invariants: EdgeInvariants,
    pub component: ComponentDescriptor,
    pub degree: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineCount {
    Finite(usize),
    Infinite,
}

impl fmt::Display for LineCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineCount::Finite(n) => write!(f, "{n}"),
            LineCount::Infinite => write!(f, "infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoDescription {
    pub polygon: LatticePolygon,
    pub scroll: Option<ScrollForm>,
    /// The whole scheme for scrolls; `None` in the zero-dimensional regime.
    pub global: Option<ComponentDescriptor>,
    /// One entry per primitive edge, in edge order; empty for scrolls.
    pub components: Vec<EdgeComponent>,
    /// `None` when the scheme is positive-dimensional.
    pub total_degree: Option<BigInt>,
    /// `None` when the scheme is positive-dimensional.
    pub reduced: Option<bool>,
    pub line_count: LineCount,
    pub bound_note: String,
}

impl FanoDescription {
    pub fn is_zero_dimensional(&self) -> bool {
        self.scroll.is_none()
    }

    pub fn is_empty(&self) -> bool {
        self.scroll.is_none() && self.components.is_empty()
    }

    /// Sorted component descriptors, for comparisons that ignore edge order.
    pub fn component_multiset(&self) -> Vec<ComponentDescriptor> {
        let mut out: Vec<ComponentDescriptor> = match &self.global {
            Some(ComponentDescriptor::Disjoint(parts)) => parts.clone(),
            Some(g) => vec![g.clone()],
            None => self.components.iter().map(|c| c.component.clone()).collect(),
        };
        out.sort();
        out
    }

    /// Human-readable summary such as `ξ₃ × ξ₃ ⊔ ξ₃ × ξ₃ ⊔ ξ₃ × ξ₃` or `∅`.
    pub fn summary(&self) -> String {
        if let Some(g) = &self.global {
            return g.to_string();
        }
        if self.components.is_empty() {
            return "∅".to_string();
        }
        ComponentDescriptor::Disjoint(self.components.iter().map(|c| c.component.clone()).collect()).to_string()
    }
}

fn spread(poly: &LatticePolygon, u: &LatticeVector) -> (BigInt, BigInt) {
    let vals: Vec<BigInt> = poly.vertices().iter().map(|v| u.eval(v)).collect();
    (vals.iter().min().unwrap().clone(), vals.iter().max().unwrap().clone())
}

fn flatten(m: &UnimodularAffineMap) -> [BigInt; 6] {
    let a = m.matrix();
    let t = m.translation();
    [
        a[0][0].clone(),
        a[0][1].clone(),
        a[1][0].clone(),
        a[1][1].clone(),
        t.dx.clone(),
        t.dy.clone(),
    ]
}

/// Candidate normalizations for one width-one functional `u` (with values
/// `m` and `m + 1` on the vertices).
fn scroll_candidates(poly: &LatticePolygon, u: &LatticeVector) -> Vec<ScrollForm> {
    let (m, _) = spread(poly, u);
    let (_, alpha, beta) = extended_gcd(&u.dx, &u.dy);
    // r completes u to a basis: det [[u], [r]] = 1
    let r = LatticeVector { dx: -beta, dy: alpha };
    let mut col0: Vec<BigInt> = Vec::new();
    let mut col1: Vec<BigInt> = Vec::new();
    for v in poly.vertices() {
        let x = u.eval(v) - &m;
        let y = r.eval(v);
        if x.is_zero() {
            col0.push(y);
        } else {
            col1.push(y);
        }
    }
    let (lo0, hi0) = (col0.iter().min().unwrap().clone(), col0.iter().max().unwrap().clone());
    let (lo1, hi1) = (col1.iter().min().unwrap().clone(), col1.iter().max().unwrap().clone());
    let (len0, len1) = (&hi0 - &lo0, &hi1 - &lo1);
    // y' = r(p) - lo0 - (lo1 - lo0) * (u(p) - m)
    let slope = &lo1 - &lo0;
    let row1 = LatticeVector { dx: &r.dx - &slope * &u.dx, dy: &r.dy - &slope * &u.dy };
    let t1 = -&lo0 + &slope * &m;
    let straight = UnimodularAffineMap::new(
        [[u.dx.clone(), u.dy.clone()], [row1.dx.clone(), row1.dy.clone()]],
        LatticeVector { dx: -&m, dy: t1.clone() },
    )
    .expect("rows u and r - k u have determinant 1");
    let flipped = UnimodularAffineMap::new(
        [[-&u.dx, -&u.dy], [row1.dx.clone(), row1.dy.clone()]],
        LatticeVector { dx: &m + 1, dy: t1 },
    )
    .expect("determinant -1");
    let mut out = Vec::new();
    if len0 >= len1 {
        out.push(ScrollForm { alpha: len0.clone(), beta: len1.clone(), map: straight });
    }
    if len1 >= len0 {
        out.push(ScrollForm { alpha: len1, beta: len0, map: flipped });
    }
    out
}

/// Detects lattice width one and returns the normalization onto
/// `P_{alpha,beta}`; ties between several valid maps go to the
/// lexicographically smallest `(matrix, translation)`.
pub fn detect_scroll(poly: &LatticePolygon) -> Option<ScrollForm> {
    let mut best: Option<ScrollForm> = None;
    for i in 0..poly.len() {
        for u in [poly.inner_normal(i), -&poly.inner_normal(i)] {
            let (lo, hi) = spread(poly, &u);
            if hi - lo != BigInt::one() {
                continue;
            }
            for cand in scroll_candidates(poly, &u) {
                let better = match &best {
                    None => true,
                    Some(b) => flatten(&cand.map) < flatten(&b.map),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    if let Some(form) = &best {
        debug_assert_eq!(
            Some(poly.apply_map(&form.map)),
            ScrollForm::polygon(&form.alpha, &form.beta).ok()
        );
    }
    best
}

/// The five scroll cases.
pub fn classify_scroll(form: &ScrollForm) -> Result<ComponentDescriptor> {
    classify_scroll_params(&form.alpha, &form.beta)
}

pub fn classify_scroll_params(alpha: &BigInt, beta: &BigInt) -> Result<ComponentDescriptor> {
    if !alpha.is_positive() || beta.is_negative() || beta > alpha {
        return Err(ClassifyError::InvalidScroll { alpha: alpha.clone(), beta: beta.clone() });
    }
    let one = BigInt::one();
    Ok(if alpha.is_one() && beta.is_zero() {
        ComponentDescriptor::ProjectivePlane
    } else if alpha.is_one() {
        ComponentDescriptor::Disjoint(vec![
            ComponentDescriptor::ProjectiveLine,
            ComponentDescriptor::ProjectiveLine,
        ])
    } else if beta.is_zero() {
        ComponentDescriptor::LineTimesDoublePoint
    } else if *beta == one {
        ComponentDescriptor::Disjoint(vec![
            ComponentDescriptor::ProjectiveLine,
            ComponentDescriptor::ReducedPoint,
        ])
    } else {
        ComponentDescriptor::ProjectiveLine
    })
}

/// Component and degree of the fixed point for one primitive edge of a
/// polygon that is not a scroll.
pub fn classify_edge(inv: &EdgeInvariants) -> Result<(ComponentDescriptor, BigInt)> {
    let infinite = || ClassifyError::InfiniteGamma {
        mu: inv.mu.clone(),
        gamma_b: inv.gamma_b.clone(),
        gamma_c: inv.gamma_c.clone(),
    };
    let two = BigInt::from(2);
    if inv.mu > two {
        return Ok((ComponentDescriptor::ReducedPoint, BigInt::one()));
    }
    if inv.mu == two {
        let g = [inv.gamma_b.value(), inv.gamma_c.value()]
            .into_iter()
            .flatten()
            .min()
            .cloned()
            .ok_or_else(infinite)?;
        if g <= BigInt::one() {
            return Err(ClassifyError::InternalInconsistency(format!("min gamma = {g} on a mu = 2 edge")));
        }
        return Ok((ComponentDescriptor::FatPoint(g.clone()), g));
    }
    if inv.mu.is_one() {
        let (Some(gb), Some(gc)) = (inv.gamma_b.value(), inv.gamma_c.value()) else {
            return Err(infinite());
        };
        return Ok((ComponentDescriptor::fat_point_product(gb.clone(), gc.clone()), gb * gc));
    }
    Err(ClassifyError::InternalInconsistency(format!("mu = {} < 1", inv.mu)))
}

/// Full description of `F1(X_P)`.
pub fn classify(poly: &LatticePolygon) -> Result<FanoDescription> {
    if let Some(form) = detect_scroll(poly) {
        let global = classify_scroll(&form)?;
        let mut desc = FanoDescription {
            polygon: poly.clone(),
            reduced: None,
            scroll: Some(form),
            global: Some(global),
            components: Vec::new(),
            total_degree: None,
            line_count: LineCount::Infinite,
            bound_note: String::new(),
        };
        desc.bound_note = bound_note(&desc);
        return Ok(desc);
    }
    let mut components = Vec::new();
    for edge in primitive_edges(poly) {
        let invariants = edge_invariants(poly, &edge)?;
        let (component, degree) = classify_edge(&invariants)?;
        components.push(EdgeComponent { edge, invariants, component, degree });
    }
    let total: BigInt = components.iter().map(|c| &c.degree).sum();
    let line_count = components.len();
    let mut desc = FanoDescription {
        polygon: poly.clone(),
        scroll: None,
        global: None,
        reduced: Some(components.iter().all(|c| c.component.is_reduced())),
        total_degree: Some(total),
        line_count: LineCount::Finite(line_count),
        components,
        bound_note: String::new(),
    };
    desc.bound_note = bound_note(&desc);
    Ok(desc)
}

fn bound_note(desc: &FanoDescription) -> String {
    line_count_bound_report(desc).unwrap_or_else(|_| {
        "F1(X_P) is positive-dimensional: X_P contains infinitely many lines and the degeneration bound does not apply"
            .to_string()
    })
}

/// Line-count statement from the degeneration inequality
/// `deg F1(Y) <= deg F1(X_P)` for flat families with special fibre `X_P`
/// and equal Fano scheme dimensions.
pub fn line_count_bound_report(desc: &FanoDescription) -> Result<String> {
    let (Some(total), LineCount::Finite(count)) = (&desc.total_degree, &desc.line_count) else {
        return Err(ClassifyError::NotZeroDimensional);
    };
    if desc.components.is_empty() {
        return Ok("0 lines: F1(X_P) is empty".to_string());
    }
    Ok(format!(
        "at most {total} lines on any surface with zero-dimensional F1 that degenerates flatly to X_P; X_P has exactly {count} lines"
    ))
}

/// Faces of `P` that are primitive `k`-simplices; these are the torus-fixed
/// points of `F_k(X_P)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPlanes {
    pub k: u32,
    pub faces: Vec<Vec<LatticePoint>>,
}

impl FixedPlanes {
    pub fn count(&self) -> usize {
        self.faces.len()
    }
}

pub fn fixed_planes(poly: &LatticePolygon, k: u32) -> Result<FixedPlanes> {
    let faces = match k {
        0 => poly.vertices().iter().map(|v| vec![v.clone()]).collect(),
        1 => primitive_edges(poly).into_iter().map(|e| vec![e.b, e.c]).collect(),
        2 => {
            if poly.len() == 3 && poly.twice_area().is_one() {
                vec![poly.vertices().to_vec()]
            } else {
                Vec::new()
            }
        }
        _ => return Err(ClassifyError::UnsupportedK(k)),
    };
    Ok(FixedPlanes { k, faces })
}
