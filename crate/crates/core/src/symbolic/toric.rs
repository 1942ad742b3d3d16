use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lattice::{lattice_points, LatticePoint, LatticePolygon, PrimitiveEdge};

use super::frame::StandardEdgeFrame;
use super::poly::{Monomial, Poly, Var};
use super::{exponent, Result, SymbolicError};

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn x_monomial(points: &[LatticePoint], idx: &[usize]) -> Monomial {
    Monomial::from_pairs(idx.iter().map(|&i| (Var::X(points[i].clone()), 1)))
}

/// Binomials `x^A - x^B` of the toric ideal with `2 <= |A| = |B| <= max_degree`,
/// `sum A = sum B` as lattice points, and disjoint supports.
///
/// Order: by degree, then by the common point sum, then by the position of
/// `A` and `B` in the lexicographic list of multisets; `A` comes first.
pub fn toric_binomials(poly: &LatticePolygon, max_degree: u32) -> Vec<Poly> {
    let points = lattice_points(poly);
    let mut out = Vec::new();
    for k in 2..=max_degree as usize {
        let mut groups: BTreeMap<(BigInt, BigInt), Vec<Vec<usize>>> = BTreeMap::new();
        for ms in multisets(points.len(), k) {
            let mut sx = BigInt::zero();
            let mut sy = BigInt::zero();
            for &i in &ms {
                sx += &points[i].x;
                sy += &points[i].y;
            }
            groups.entry((sx, sy)).or_default().push(ms);
        }
        for group in groups.values() {
            for (i, a) in group.iter().enumerate() {
                for bm in &group[i + 1..] {
                    if a.iter().any(|x| bm.contains(x)) {
                        continue;
                    }
                    out.push(&Poly::monomial(x_monomial(&points, a)) - &Poly::monomial(x_monomial(&points, bm)));
                }
            }
        }
    }
    out
}

/// `(Z^2-degree, total degree)` of a polynomial in the `x` variables when it
/// is homogeneous for both gradings.
pub fn binomial_degree(f: &Poly) -> Option<((BigInt, BigInt), u32)> {
    let mut found: Option<((BigInt, BigInt), u32)> = None;
    for (m, _) in f.terms() {
        let mut d = (BigInt::zero(), BigInt::zero());
        for (v, e) in m.factors() {
            let Var::X(u) = v else { return None };
            d.0 += &u.x * *e;
            d.1 += &u.y * *e;
        }
        let this = (d, m.degree());
        match &found {
            None => found = Some(this),
            Some(prev) if *prev != this => return None,
            _ => {}
        }
    }
    found
}

/// The 2 x (alpha + beta) matrix whose 2 x 2 minors cut out the scroll
/// `P_{alpha,beta}`: column `(0,i), (0,i+1)` for `i < alpha`, then
/// `(1,i), (1,i+1)` for `i < beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorMatrix {
    pub rows: [Vec<LatticePoint>; 2],
}

impl MinorMatrix {
    pub fn columns(&self) -> usize {
        self.rows[0].len()
    }

    pub fn minors(&self) -> Vec<Poly> {
        let x = |p: &LatticePoint| Poly::var(Var::X(p.clone()));
        let n = self.columns();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = &(&x(&self.rows[0][i]) * &x(&self.rows[1][j])) - &(&x(&self.rows[0][j]) * &x(&self.rows[1][i]));
                if !m.is_zero() {
                    out.push(m);
                }
            }
        }
        out
    }
}

pub fn scroll_minor_matrix(alpha: u32, beta: u32) -> MinorMatrix {
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (x, len) in [(0, alpha), (1, beta)] {
        for i in 0..len {
            top.push(LatticePoint::new(x, i));
            bottom.push(LatticePoint::new(x, i + 1));
        }
    }
    MinorMatrix { rows: [top, bottom] }
}

fn phi_var(frame: &StandardEdgeFrame, v: &Var) -> Result<Poly> {
    let Var::X(u) = v else {
        return Err(SymbolicError::UnknownVariable(v.to_string()));
    };
    if *u == frame.b {
        Ok(Poly::var(Var::S))
    } else if *u == frame.c {
        Ok(Poly::var(Var::T))
    } else if frame.contains(u) {
        Ok(&(&Poly::var(Var::Sigma(u.clone())) * &Poly::var(Var::S))
            + &(&Poly::var(Var::Tau(u.clone())) * &Poly::var(Var::T)))
    } else {
        Err(SymbolicError::UnknownVariable(v.to_string()))
    }
}

/// Weight of a chart monomial: `σ_u, τ_u` weigh `u_2`, `s, t` weigh zero.
fn weight(m: &Monomial) -> BigInt {
    m.factors()
        .iter()
        .map(|(v, e)| match v {
            Var::Sigma(u) | Var::Tau(u) => &u.y * *e,
            _ => BigInt::zero(),
        })
        .sum()
}

/// `x_b ↦ s, x_c ↦ t, x_u ↦ σ_u s + τ_u t`, expanded.
///
/// Each monomial of `f` of degree `(i, j)` and total degree `n` must map to
/// terms of weight `j` that are homogeneous of degree `n` in `s, t`; anything
/// else is reported as a [`SymbolicError::GradingViolation`].
pub fn phi(f: &Poly, frame: &StandardEdgeFrame) -> Result<Poly> {
    let mut out = Poly::zero();
    for (m, c) in f.terms() {
        let mut img = Poly::constant(c.clone());
        let mut j = BigInt::zero();
        for (v, e) in m.factors() {
            img = &img * &phi_var(frame, v)?.pow(*e);
            if let Var::X(u) = v {
                j += &u.y * *e;
            }
        }
        for (t, _) in img.terms() {
            let ((ds, dt), _) = t.split_st();
            if weight(t) != j || ds + dt != m.degree() {
                return Err(SymbolicError::GradingViolation {
                    input: f.to_string(),
                    detail: format!("term {t} of phi({m}) has weight {} and s,t-degree {}", weight(t), ds + dt),
                });
            }
        }
        out = &out + &img;
    }
    Ok(out)
}

/// Generators of the bounded local ideal `J_D`: every `s, t` coefficient of
/// `phi(f)` for `f` in `toric_binomials` of the standardized polygon, made
/// monic and deduplicated, in first-seen order.
pub fn local_fano_ideal(poly: &LatticePolygon, edge: &PrimitiveEdge, max_degree: u32) -> Result<Vec<Poly>> {
    let frame = StandardEdgeFrame::new(poly, edge)?;
    ideal_generators(&frame, max_degree)
}

pub(crate) fn ideal_generators(frame: &StandardEdgeFrame, max_degree: u32) -> Result<Vec<Poly>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for f in toric_binomials(&frame.polygon, max_degree) {
        for (_, c) in phi(&f, frame)?.st_coefficients().into_iter().rev() {
            let g = c.monic();
            if !g.is_zero() && seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// `x_{p_1} ... x_{p_k}` for a list of points with exponents.
pub(crate) fn x_power_product(factors: &[(LatticePoint, BigInt)]) -> Result<Poly> {
    let mut m = Monomial::one();
    for (p, e) in factors {
        if *e < BigInt::zero() {
            return Err(SymbolicError::ExponentOverflow(e.clone()));
        }
        m = m.mul(&Monomial::var(Var::X(p.clone()), exponent(e)?));
    }
    Ok(Poly::monomial(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::primitive_edges;

    fn poly(c: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_i64(c).unwrap()
    }

    fn x(a: i64, b: i64) -> Poly {
        Poly::var(Var::X(LatticePoint::new(a, b)))
    }

    #[test]
    fn binomial_examples() {
        let sq = toric_binomials(&poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]), 2);
        assert_eq!(sq, vec![&(&x(0, 0) * &x(1, 1)) - &(&x(0, 1) * &x(1, 0))]);
        assert!(toric_binomials(&poly(&[(0, 0), (1, 0), (0, 1)]), 3).is_empty());
        let p20 = toric_binomials(&poly(&[(0, 0), (1, 0), (0, 2)]), 2);
        assert_eq!(p20, vec![&(&x(0, 0) * &x(0, 2)) - &x(0, 1).pow(2)]);
    }

    #[test]
    fn minor_matrix_examples() {
        let m = scroll_minor_matrix(2, 0);
        assert_eq!(m.rows[0], vec![LatticePoint::new(0, 0), LatticePoint::new(0, 1)]);
        assert_eq!(m.rows[1], vec![LatticePoint::new(0, 1), LatticePoint::new(0, 2)]);
        assert_eq!(m.minors().len(), 1);
        let m = scroll_minor_matrix(1, 1);
        assert_eq!(m.rows[0], vec![LatticePoint::new(0, 0), LatticePoint::new(1, 0)]);
        assert_eq!(m.rows[1], vec![LatticePoint::new(0, 1), LatticePoint::new(1, 1)]);
    }

    #[test]
    fn phi_examples() {
        let sq = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let e = primitive_edges(&sq).into_iter().find(|e| e.b == LatticePoint::origin()).unwrap();
        let frame = StandardEdgeFrame::new(&sq, &e).unwrap();
        let f = &(&x(0, 0) * &x(1, 1)) - &(&x(1, 0) * &x(0, 1));
        let img = phi(&f, &frame).unwrap();
        let sigma = |a, b| Poly::var(Var::Sigma(LatticePoint::new(a, b)));
        let tau = |a, b| Poly::var(Var::Tau(LatticePoint::new(a, b)));
        assert_eq!(img.st_coefficient(2, 0), sigma(1, 1));
        assert_eq!(img.st_coefficient(1, 1), &tau(1, 1) - &sigma(0, 1));
        assert_eq!(img.st_coefficient(0, 2), -&tau(0, 1));
        assert_eq!(phi(&x(0, 0), &frame).unwrap(), Poly::var(Var::S));
        assert!(matches!(phi(&x(5, 5), &frame), Err(SymbolicError::UnknownVariable(_))));
    }

    #[test]
    fn ideal_of_unit_square_and_triangle() {
        let sq = poly(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let e = primitive_edges(&sq).into_iter().find(|e| e.b == LatticePoint::origin()).unwrap();
        let gens = local_fano_ideal(&sq, &e, 2).unwrap();
        assert_eq!(gens.len(), 3);
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        let e = &primitive_edges(&tri)[0];
        assert!(local_fano_ideal(&tri, e, 4).unwrap().is_empty());
    }
}
