use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::{Gamma, LatticePoint, LatticePolygon, PrimitiveEdge};

use super::frame::StandardEdgeFrame;
use super::poly::{Monomial, Poly, Var};
use super::{exponent, Result, SymbolicError};

/// Which local picture applies at the fixed point of an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalCase {
    /// `mu >= 3`: a reduced point.
    ReducedPoint,
    /// `mu = 2` with `gamma = min(gamma_b, gamma_c)` finite. `from_c` records
    /// which side attains the minimum (`b` on ties).
    FatPoint { gamma: BigInt, from_c: bool },
    /// `mu = 2` on a scroll with both gammas infinite: an affine line.
    ScrollLine,
    /// `mu = 1` with both gammas finite.
    FatPointProduct { gamma_b: BigInt, gamma_c: BigInt },
    /// `mu = 1` on `P_{alpha,0}`, `alpha >= 2`: `A^1 x ξ2`. `double_on_c`
    /// says whether the truncation is `τ_v^2` (gamma_b infinite) or `σ_v^2`.
    ScrollDoubleLine { double_on_c: bool },
    /// The unit triangle: no relations.
    Plane,
}

impl LocalCase {
    pub fn name(&self) -> &'static str {
        match self {
            LocalCase::ReducedPoint => "reduced_point",
            LocalCase::FatPoint { .. } => "fat_point",
            LocalCase::ScrollLine => "scroll_line",
            LocalCase::FatPointProduct { .. } => "fat_point_product",
            LocalCase::ScrollDoubleLine { .. } => "scroll_double_line",
            LocalCase::Plane => "plane",
        }
    }
}

/// Triangular presentation of `J`: every `σ_u, τ_u` other than `σ_v, τ_v`
/// is replaced by a polynomial in `σ_v, τ_v`, and monomials in the survivors
/// divisible by a truncation vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    pub v: LatticePoint,
    pub substitutions: BTreeMap<Var, Poly>,
    pub truncations: Vec<Monomial>,
}

impl RewriteSystem {
    pub fn empty(v: LatticePoint) -> Self {
        RewriteSystem { v, substitutions: BTreeMap::new(), truncations: Vec::new() }
    }

    pub fn sigma_v(&self) -> Var {
        Var::Sigma(self.v.clone())
    }

    pub fn tau_v(&self) -> Var {
        Var::Tau(self.v.clone())
    }

    /// Truncation exponents `(i, j)` for `σ_v^i τ_v^j`.
    pub fn truncation_exponents(&self) -> Vec<(u32, u32)> {
        let (sv, tv) = (self.sigma_v(), self.tau_v());
        self.truncations.iter().map(|m| (m.exponent(&sv), m.exponent(&tv))).collect()
    }

    /// Relation polynomials: `var - image` for each substitution, then the
    /// truncation monomials.
    pub fn relations(&self) -> Vec<Poly> {
        let mut out: Vec<Poly> =
            self.substitutions.iter().map(|(v, img)| &Poly::var(v.clone()) - img).collect();
        out.extend(self.truncations.iter().map(|m| Poly::monomial(m.clone())));
        out
    }
}

impl fmt::Display for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, img) in &self.substitutions {
            writeln!(f, "{v} -> {img}")?;
        }
        for m in &self.truncations {
            writeln!(f, "{m} = 0")?;
        }
        Ok(())
    }
}

/// Applies substitutions, then drops monomials divisible by a truncation.
pub fn normal_form(f: &Poly, rw: &RewriteSystem) -> Poly {
    f.substitute(|v| rw.substitutions.get(v).cloned()).truncate(&rw.truncations)
}

fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn sv_tv_term(v: &LatticePoint, coeff: BigInt, i: &BigInt, j: &BigInt) -> Result<Poly> {
    if coeff.is_zero() {
        return Ok(Poly::zero());
    }
    if i.is_negative() || j.is_negative() {
        return Err(SymbolicError::ExponentOverflow(if i.is_negative() { i.clone() } else { j.clone() }));
    }
    let m = Monomial::var(Var::Sigma(v.clone()), exponent(i)?).mul(&Monomial::var(Var::Tau(v.clone()), exponent(j)?));
    Ok(Poly::term(BigRational::from_integer(coeff), m))
}

/// `σ_u` in terms of `σ_v, τ_v` for `u = (i, j)`, `j >= 1`, before truncation:
/// `C(j, i+j) σ_v^(i+j) τ_v^(-i)` when `i <= 0`, zero otherwise.
pub fn closed_form_sigma(u: &LatticePoint) -> Result<Poly> {
    let v = LatticePoint::new(0, 1);
    if u.x.is_positive() {
        return Ok(Poly::zero());
    }
    let k = &u.x + &u.y;
    if k.is_negative() {
        return Ok(Poly::zero());
    }
    let c = binomial(exponent(&u.y)?, exponent(&k)?);
    sv_tv_term(&v, c, &k, &-&u.x)
}

/// `τ_u` in terms of `σ_v, τ_v`: `C(j, i+j-1) σ_v^(i+j-1) τ_v^(1-i)` when
/// `i <= 1`, zero otherwise.
pub fn closed_form_tau(u: &LatticePoint) -> Result<Poly> {
    let v = LatticePoint::new(0, 1);
    if u.x > BigInt::one() {
        return Ok(Poly::zero());
    }
    let k: BigInt = &u.x + &u.y - 1;
    if k.is_negative() {
        return Ok(Poly::zero());
    }
    let c = binomial(exponent(&u.y)?, exponent(&k)?);
    sv_tv_term(&v, c, &k, &(1 - &u.x))
}

fn gamma_label(g: &Gamma) -> String {
    g.to_string()
}

pub(crate) fn local_case(frame: &StandardEdgeFrame) -> Result<LocalCase> {
    let inv = &frame.invariants;
    let unhandled = || SymbolicError::UnhandledCase {
        mu: inv.mu.clone(),
        gamma_b: gamma_label(&inv.gamma_b),
        gamma_c: gamma_label(&inv.gamma_c),
        scroll: frame.scroll,
    };
    let two = BigInt::from(2);
    let (gb, gc) = (inv.gamma_b.value(), inv.gamma_c.value());
    if inv.mu > two {
        return Ok(LocalCase::ReducedPoint);
    }
    if inv.mu == two {
        return match (gb, gc) {
            (None, None) if frame.scroll => Ok(LocalCase::ScrollLine),
            (None, None) => Err(unhandled()),
            (Some(b), None) => Ok(LocalCase::FatPoint { gamma: b.clone(), from_c: false }),
            (None, Some(c)) => Ok(LocalCase::FatPoint { gamma: c.clone(), from_c: true }),
            (Some(b), Some(c)) if c < b => Ok(LocalCase::FatPoint { gamma: c.clone(), from_c: true }),
            (Some(b), Some(_)) => Ok(LocalCase::FatPoint { gamma: b.clone(), from_c: false }),
        };
    }
    if !inv.mu.is_one() {
        return Err(unhandled());
    }
    let three = BigInt::from(3);
    match (gb, gc) {
        (Some(b), Some(c)) => {
            if *b == two || *c == two || (*b == three && *c == three) {
                Ok(LocalCase::FatPointProduct { gamma_b: b.clone(), gamma_c: c.clone() })
            } else {
                Err(unhandled())
            }
        }
        (None, Some(c)) if frame.scroll && *c == two => Ok(LocalCase::ScrollDoubleLine { double_on_c: true }),
        (Some(b), None) if frame.scroll && *b == two => Ok(LocalCase::ScrollDoubleLine { double_on_c: false }),
        (None, None) if frame.polygon.len() == 3 && frame.polygon.twice_area().is_one() => Ok(LocalCase::Plane),
        _ => Err(unhandled()),
    }
}

fn case_truncations(case: &LocalCase, v: &LatticePoint) -> Result<Vec<Monomial>> {
    let s = |e: &BigInt| -> Result<Monomial> { Ok(Monomial::var(Var::Sigma(v.clone()), exponent(e)?)) };
    let t = |e: &BigInt| -> Result<Monomial> { Ok(Monomial::var(Var::Tau(v.clone()), exponent(e)?)) };
    let one = BigInt::one();
    let two = BigInt::from(2);
    Ok(match case {
        LocalCase::ReducedPoint => vec![s(&one)?, t(&one)?],
        LocalCase::FatPoint { gamma, .. } => vec![t(&one)?, s(gamma)?],
        LocalCase::ScrollLine => vec![t(&one)?],
        LocalCase::FatPointProduct { gamma_b, gamma_c } => vec![s(gamma_b)?, t(gamma_c)?],
        LocalCase::ScrollDoubleLine { double_on_c: true } => vec![t(&two)?],
        LocalCase::ScrollDoubleLine { double_on_c: false } => vec![s(&two)?],
        LocalCase::Plane => Vec::new(),
    })
}

pub(crate) fn claimed_for_frame(frame: &StandardEdgeFrame) -> Result<(LocalCase, RewriteSystem)> {
    let case = local_case(frame)?;
    let mut rw = RewriteSystem::empty(frame.v.clone());
    rw.truncations = case_truncations(&case, &frame.v)?;
    for u in frame.upper_points() {
        if u == frame.v {
            continue;
        }
        let sigma = closed_form_sigma(&u)?.truncate(&rw.truncations);
        let tau = closed_form_tau(&u)?.truncate(&rw.truncations);
        rw.substitutions.insert(Var::Sigma(u.clone()), sigma);
        rw.substitutions.insert(Var::Tau(u), tau);
    }
    Ok((case, rw))
}

/// The presentation of `J` asserted for the fixed point of `edge`, in the
/// standard frame of that edge.
pub fn claimed_rewrite_system(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<RewriteSystem> {
    let frame = StandardEdgeFrame::new(poly, edge)?;
    Ok(claimed_for_frame(&frame)?.1)
}

/// Local chart of the Fano scheme described by a truncation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chart {
    /// Zero-dimensional, with this length.
    Artinian(BigInt),
    AffineLine,
    /// `A^1 x ξ_a`, `a >= 2`.
    AffineLineTimesFatPoint(BigInt),
    AffinePlane,
    /// Positive-dimensional but none of the above.
    Other,
}

impl Chart {
    pub fn length(&self) -> Option<&BigInt> {
        match self {
            Chart::Artinian(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::Artinian(n) => write!(f, "length {n}"),
            Chart::AffineLine => write!(f, "𝔸¹"),
            Chart::AffineLineTimesFatPoint(a) => write!(f, "𝔸¹ × ξ{a}"),
            Chart::AffinePlane => write!(f, "𝔸²"),
            Chart::Other => write!(f, "other"),
        }
    }
}

/// Number of monomials `σ_v^i τ_v^j` outside the truncation ideal; `None`
/// when infinite.
pub fn artinian_length(rw: &RewriteSystem) -> Option<BigInt> {
    let ex = rw.truncation_exponents();
    let sigma_bound = ex.iter().filter(|(_, j)| *j == 0).map(|(i, _)| *i).min()?;
    let tau_bound = ex.iter().filter(|(i, _)| *i == 0).map(|(_, j)| *j).min()?;
    let mut count = 0u64;
    for i in 0..sigma_bound {
        for j in 0..tau_bound {
            if !ex.iter().any(|(a, b)| *a <= i && *b <= j) {
                count += 1;
            }
        }
    }
    Some(BigInt::from(count))
}

pub fn chart(rw: &RewriteSystem) -> Chart {
    if let Some(n) = artinian_length(rw) {
        return Chart::Artinian(n);
    }
    let ex = rw.truncation_exponents();
    if ex.is_empty() {
        return Chart::AffinePlane;
    }
    if ex.len() == 1 {
        let (i, j) = ex[0];
        let pure = if j == 0 { Some(i) } else if i == 0 { Some(j) } else { None };
        return match pure {
            Some(1) => Chart::AffineLine,
            Some(a) => Chart::AffineLineTimesFatPoint(BigInt::from(a)),
            None => Chart::Other,
        };
    }
    Chart::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::primitive_edges;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn sv() -> Poly {
        Poly::var(Var::Sigma(pt(0, 1)))
    }

    fn tv() -> Poly {
        Poly::var(Var::Tau(pt(0, 1)))
    }

    fn trunc(pairs: &[(u32, u32)]) -> RewriteSystem {
        let mut rw = RewriteSystem::empty(pt(0, 1));
        rw.truncations = pairs
            .iter()
            .map(|&(i, j)| Monomial::var(Var::Sigma(pt(0, 1)), i).mul(&Monomial::var(Var::Tau(pt(0, 1)), j)))
            .collect();
        rw
    }

    #[test]
    fn lengths() {
        assert_eq!(artinian_length(&trunc(&[(2, 0), (0, 2)])), Some(BigInt::from(4)));
        assert_eq!(artinian_length(&trunc(&[(1, 0), (0, 1)])), Some(BigInt::one()));
        assert_eq!(artinian_length(&trunc(&[(3, 0)])), None);
        assert_eq!(artinian_length(&trunc(&[(3, 0), (0, 3), (1, 1)])), Some(BigInt::from(5)));
        assert_eq!(chart(&trunc(&[(3, 0)])), Chart::AffineLineTimesFatPoint(BigInt::from(3)));
        assert_eq!(chart(&trunc(&[(0, 1)])), Chart::AffineLine);
        assert_eq!(chart(&trunc(&[])), Chart::AffinePlane);
    }

    #[test]
    fn closed_forms() {
        // (b21): σ_(0,j) = σ_v^j, τ_(0,j) = j τ_v σ_v^(j-1)
        assert_eq!(closed_form_sigma(&pt(0, 3)).unwrap(), sv().pow(3));
        assert_eq!(closed_form_tau(&pt(0, 3)).unwrap(), (&sv().pow(2) * &tv()).scale(&BigRational::from_integer(3.into())));
        // a' = (-1, 3): σ = 3 σ_v^2 τ_v, τ = 3 σ_v τ_v^2
        assert_eq!(closed_form_sigma(&pt(-1, 3)).unwrap(), (&sv().pow(2) * &tv()).scale(&BigRational::from_integer(3.into())));
        assert_eq!(closed_form_tau(&pt(-1, 3)).unwrap(), (&sv() * &tv().pow(2)).scale(&BigRational::from_integer(3.into())));
        assert_eq!(closed_form_tau(&pt(1, 1)).unwrap(), sv());
        assert!(closed_form_sigma(&pt(1, 1)).unwrap().is_zero());
        assert!(closed_form_tau(&pt(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn claimed_systems() {
        let hex = LatticePolygon::from_i64(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]).unwrap();
        let rw = claimed_rewrite_system(&hex, &primitive_edges(&hex)[0]).unwrap();
        assert!(rw.substitutions.values().all(Poly::is_zero));
        assert_eq!(rw.truncation_exponents(), vec![(1, 0), (0, 1)]);
        assert!(normal_form(&Poly::var(Var::Sigma(pt(1, 1))), &rw).is_zero());

        let tri = LatticePolygon::from_i64(&[(0, 0), (2, 1), (1, 2)]).unwrap();
        let rw = claimed_rewrite_system(&tri, &primitive_edges(&tri)[0]).unwrap();
        assert_eq!(rw.truncation_exponents(), vec![(3, 0), (0, 3)]);
        assert_eq!(artinian_length(&rw), Some(BigInt::from(9)));
        assert_eq!(
            rw.substitutions[&Var::Sigma(pt(-1, 3))],
            (&sv().pow(2) * &tv()).scale(&BigRational::from_integer(3.into()))
        );
        assert!(normal_form(&sv().pow(3), &rw).is_zero());

        // P_{3,1} bottom edge: σ_(0,i) = τ_(1,i) = σ_v^i, τ_(0,i) = σ_(1,i) = 0
        let p31 = LatticePolygon::from_i64(&[(0, 0), (1, 0), (0, 3), (1, 1)]).unwrap();
        let e = primitive_edges(&p31).into_iter().find(|e| e.b == pt(0, 0) && e.c == pt(1, 0)).unwrap();
        let rw = claimed_rewrite_system(&p31, &e).unwrap();
        assert_eq!(rw.truncation_exponents(), vec![(0, 1)]);
        assert_eq!(rw.substitutions[&Var::Sigma(pt(0, 3))], sv().pow(3));
        assert_eq!(rw.substitutions[&Var::Tau(pt(1, 1))], sv());
        assert!(rw.substitutions[&Var::Tau(pt(0, 2))].is_zero());
        assert_eq!(chart(&rw), Chart::AffineLine);
        let b21 = &Poly::var(Var::Sigma(pt(0, 2))) - &sv().pow(2);
        assert!(normal_form(&b21, &rw).is_zero());
    }
}
