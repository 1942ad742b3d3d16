use num_bigint::BigInt;
use num_traits::One;

use crate::classify::{classify_edge, classify_scroll, detect_scroll, ComponentDescriptor};
use crate::lattice::{LatticePoint, LatticePolygon, PrimitiveEdge};

use super::frame::StandardEdgeFrame;
use super::poly::{Field, Monomial, Poly, Var};
use super::rewrite::{chart, claimed_for_frame, closed_form_tau, normal_form, Chart, LocalCase, RewriteSystem};
use super::toric::{ideal_generators, phi, x_power_product};
use super::{exponent, Result, SymbolicError};

pub const DEFAULT_DEGREE_BOUND: u32 = 4;

/// Failures kept per report; the counts are always complete.
const MAX_LISTED_FAILURES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Establishes {
    Substitution(Var, Poly),
    Truncation(Monomial),
}

impl Establishes {
    pub fn relation(&self) -> Poly {
        match self {
            Establishes::Substitution(v, img) => &Poly::var(v.clone()) - img,
            Establishes::Truncation(m) => Poly::monomial(m.clone()),
        }
    }
}

/// One derivation: the `s^a t^b` coefficient of `phi(witness)` equals a
/// nonzero multiple of the relation, modulo everything established earlier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardStep {
    pub label: String,
    pub witness: Poly,
    pub coefficient: (u32, u32),
    pub establishes: Establishes,
    /// Part of the claimed system, as opposed to an intermediate relation.
    pub claimed: bool,
}

impl ForwardStep {
    pub fn degree(&self) -> u32 {
        self.witness.total_degree().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub edge_index: usize,
    pub b: LatticePoint,
    pub c: LatticePoint,
    pub case: LocalCase,
    pub degree_bound: u32,
    pub required_degree: u32,
    pub field: Field,
    pub forward_ok: bool,
    pub forward_steps: usize,
    pub forward_failures: Vec<String>,
    pub backward_ok: bool,
    pub generators: usize,
    pub backward_failure_count: usize,
    pub backward_failures: Vec<String>,
    /// `None` when the chart is positive-dimensional.
    pub length: Option<BigInt>,
    pub chart: Chart,
    pub expected_chart: Chart,
    pub matches_classifier: bool,
    pub rewrite_system: RewriteSystem,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.forward_ok && self.backward_ok && self.matches_classifier
    }
}

struct Planner<'a> {
    frame: &'a StandardEdgeFrame,
    steps: Vec<ForwardStep>,
}

impl Planner<'_> {
    fn binomial(
        &self,
        label: &str,
        lhs: &[(LatticePoint, BigInt)],
        rhs: &[(LatticePoint, BigInt)],
    ) -> Result<Poly> {
        for (p, e) in lhs.iter().chain(rhs) {
            if *e > BigInt::from(0) && !self.frame.contains(p) {
                return Err(SymbolicError::WitnessNotFound { relation: label.to_string(), point: p.clone() });
            }
        }
        Ok(&x_power_product(lhs)? - &x_power_product(rhs)?)
    }

    fn push(&mut self, label: String, witness: Poly, coefficient: (u32, u32), establishes: Establishes, claimed: bool) {
        self.steps.push(ForwardStep { label, witness, coefficient, establishes, claimed });
    }

    fn sigma_v_power(&self, e: &BigInt) -> Result<Monomial> {
        Ok(Monomial::var(Var::Sigma(self.frame.v.clone()), exponent(e)?))
    }

    fn tau_v_power(&self, e: &BigInt) -> Result<Monomial> {
        Ok(Monomial::var(Var::Tau(self.frame.v.clone()), exponent(e)?))
    }

    /// `x_b x_w - x_c x_v`: `τ_w = σ_v` at `st`, `τ_v = 0` at `t^2`.
    fn square(&mut self) -> Result<()> {
        let f = self.frame;
        let w = LatticePoint::new(1, 1);
        let one = BigInt::one();
        let sq = self.binomial(
            "x_b x_w - x_c x_v",
            &[(f.b.clone(), one.clone()), (w.clone(), one.clone())],
            &[(f.c.clone(), one.clone()), (f.v.clone(), one.clone())],
        )?;
        let img = closed_form_tau(&w)?;
        self.push(format!("{} = {img}", Var::Tau(w.clone())), sq.clone(), (1, 1), Establishes::Substitution(Var::Tau(w), img), false);
        let m = self.tau_v_power(&one)?;
        self.push(format!("{m} = 0"), sq, (0, 2), Establishes::Truncation(m), true);
        Ok(())
    }

    /// `x_{a'} x_b^(γ-2) x_c - x_v^γ` with `a' = (-1, γ)`; gives `σ_v^γ` at `s^γ`.
    fn b_side(&mut self, gamma: &BigInt) -> Result<()> {
        let f = self.frame;
        let a = LatticePoint { x: BigInt::from(-1), y: gamma.clone() };
        let one = BigInt::one();
        let m = self.sigma_v_power(gamma)?;
        let label = format!("{m} = 0");
        let wit = self.binomial(
            &label,
            &[(a, one.clone()), (f.b.clone(), gamma - 2), (f.c.clone(), one)],
            &[(f.v.clone(), gamma.clone())],
        )?;
        let g = exponent(gamma)?;
        self.push(label, wit, (g, 0), Establishes::Truncation(m), true);
        Ok(())
    }

    /// Mirror image of [`Self::b_side`]: `x_{a'_c} x_c^(γ-2) x_b - x_{v_c}^γ`
    /// read at `t^γ`, where `v_c = (mu - 1, 1)`.
    fn c_side(&mut self, gamma: &BigInt, relation: Monomial) -> Result<()> {
        let f = self.frame;
        let a = f.mirror(&LatticePoint { x: BigInt::from(-1), y: gamma.clone() });
        let vc = f.mirror(&f.v);
        let one = BigInt::one();
        let label = format!("{relation} = 0");
        let wit = self.binomial(
            &label,
            &[(a, one.clone()), (f.c.clone(), gamma - 2), (f.b.clone(), one)],
            &[(vc, gamma.clone())],
        )?;
        let g = exponent(gamma)?;
        self.push(label, wit, (0, g), Establishes::Truncation(relation), true);
        Ok(())
    }

    fn truncation_steps(&mut self, case: &LocalCase) -> Result<()> {
        let one = BigInt::one();
        match case {
            LocalCase::ReducedPoint => {
                self.square()?;
                let f = self.frame;
                let m = self.sigma_v_power(&one)?;
                let wit = self.binomial(
                    "x_b x_(2,1) - x_c x_w",
                    &[(f.b.clone(), one.clone()), (LatticePoint::new(2, 1), one.clone())],
                    &[(f.c.clone(), one.clone()), (LatticePoint::new(1, 1), one.clone())],
                )?;
                self.push(format!("{m} = 0"), wit, (0, 2), Establishes::Truncation(m), true);
            }
            LocalCase::FatPoint { gamma, from_c } => {
                self.square()?;
                if *from_c {
                    let m = self.sigma_v_power(gamma)?;
                    self.c_side(gamma, m)?;
                } else {
                    self.b_side(gamma)?;
                }
            }
            LocalCase::ScrollLine => self.square()?,
            LocalCase::FatPointProduct { gamma_b, gamma_c } => {
                self.b_side(gamma_b)?;
                let m = self.tau_v_power(gamma_c)?;
                self.c_side(gamma_c, m)?;
            }
            LocalCase::ScrollDoubleLine { double_on_c } => {
                let two = BigInt::from(2);
                if *double_on_c {
                    let m = self.tau_v_power(&two)?;
                    self.c_side(&two, m)?;
                } else {
                    self.b_side(&two)?;
                }
            }
            LocalCase::Plane => {}
        }
        Ok(())
    }

    /// Two steps per lattice point `u = (i, j)` above the edge, both read off
    /// one witness:
    ///
    /// - a shift quadric `x_u x_b - x_(u - (1,0)) x_c` when `i >= 1` and the
    ///   left neighbour exists;
    /// - else a split quadric `x_u x_e - x_u' x_u''` with `e` one of `b, c`
    ///   and `u' + u'' = u + e`, both strictly lower and at height at least
    ///   one (read at `s^2, st` for `b` and `st, t^2` for `c`);
    /// - else the height-one expansion `x_u x_b^(i+j-1) x_c^(-i) - x_v^j`
    ///   (`i < 0`) or `x_u x_b^(i+j-1) - x_v^j x_c^i` (`i >= 0`).
    fn substitution_steps(&mut self, rw: &RewriteSystem) -> Result<()> {
        let f = self.frame;
        let one = BigInt::one();
        let upper = f.upper_points();
        for u in &upper {
            let u = u.clone();
            if u == f.v {
                continue;
            }
            let split = [(&f.b, (2, 0), (1, 1)), (&f.c, (1, 1), (0, 2))].into_iter().find_map(|(e, s_at, t_at)| {
                let target = LatticePoint { x: &u.x + &e.x, y: &u.y + &e.y };
                upper.iter().take_while(|p| p.y < u.y).find_map(|p| {
                    let q = LatticePoint { x: &target.x - &p.x, y: &target.y - &p.y };
                    (q.y >= one && f.contains(&q)).then(|| (e.clone(), p.clone(), q, s_at, t_at))
                })
            });
            let sigma = Var::Sigma(u.clone());
            let tau = Var::Tau(u.clone());
            let label_s = format!("{sigma} = {}", rw.substitutions[&sigma]);
            let label_t = format!("{tau} = {}", rw.substitutions[&tau]);
            let left = LatticePoint { x: &u.x - 1, y: u.y.clone() };
            let (wit, s_at, t_at) = if u.x >= one && f.contains(&left) {
                let wit = self.binomial(
                    &label_s,
                    &[(u.clone(), one.clone()), (f.b.clone(), one.clone())],
                    &[(left, one.clone()), (f.c.clone(), one.clone())],
                )?;
                (wit, (2, 0), (1, 1))
            } else if let Some((e, p, q, s_at, t_at)) = split {
                let rhs = if p == q { vec![(p, BigInt::from(2))] } else { vec![(p, one.clone()), (q, one.clone())] };
                let wit = self.binomial(&label_s, &[(u.clone(), one.clone()), (e, one.clone())], &rhs)?;
                (wit, s_at, t_at)
            } else {
                let i = &u.x;
                let j = &u.y;
                let k = exponent(&(i + j))?;
                if i >= &BigInt::from(0) {
                    let wit = self.binomial(
                        &label_s,
                        &[(u.clone(), one.clone()), (f.b.clone(), i + j - 1)],
                        &[(f.v.clone(), j.clone()), (f.c.clone(), i.clone())],
                    )?;
                    (wit, (k, 0), (k - 1, 1))
                } else {
                    let mi = exponent(&-i)?;
                    let wit = self.binomial(
                        &label_s,
                        &[(u.clone(), one.clone()), (f.b.clone(), i + j - 1), (f.c.clone(), -i)],
                        &[(f.v.clone(), j.clone())],
                    )?;
                    (wit, (k, mi), (k - 1, mi + 1))
                }
            };
            self.push(label_s, wit.clone(), s_at, Establishes::Substitution(sigma.clone(), rw.substitutions[&sigma].clone()), true);
            self.push(label_t, wit, t_at, Establishes::Substitution(tau.clone(), rw.substitutions[&tau].clone()), true);
        }
        Ok(())
    }
}

fn plan(frame: &StandardEdgeFrame) -> Result<(LocalCase, RewriteSystem, Vec<ForwardStep>)> {
    let (case, rw) = claimed_for_frame(frame)?;
    let mut planner = Planner { frame, steps: Vec::new() };
    planner.truncation_steps(&case)?;
    planner.substitution_steps(&rw)?;
    Ok((case, rw, planner.steps))
}

/// Witness derivations for every relation of the claimed system, in order.
pub fn forward_plan(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<Vec<ForwardStep>> {
    let frame = StandardEdgeFrame::new(poly, edge)?;
    Ok(plan(&frame)?.2)
}

/// Largest witness degree (at least 2).
pub fn minimum_degree_bound(poly: &LatticePolygon, edge: &PrimitiveEdge) -> Result<u32> {
    Ok(forward_plan(poly, edge)?.iter().map(ForwardStep::degree).max().unwrap_or(0).max(2))
}

/// The chart the classification predicts at this fixed point.
pub fn expected_chart(poly: &LatticePolygon, frame: &StandardEdgeFrame) -> Result<Chart> {
    let Some(form) = detect_scroll(poly) else {
        let (_, degree) = classify_edge(&frame.invariants)?;
        return Ok(Chart::Artinian(degree));
    };
    let mu_large = frame.invariants.mu > BigInt::from(2);
    Ok(match classify_scroll(&form)? {
        ComponentDescriptor::ProjectivePlane => Chart::AffinePlane,
        ComponentDescriptor::LineTimesDoublePoint => Chart::AffineLineTimesFatPoint(BigInt::from(2)),
        ComponentDescriptor::Disjoint(parts) if parts.contains(&ComponentDescriptor::ReducedPoint) && mu_large => {
            Chart::Artinian(BigInt::one())
        }
        _ => Chart::AffineLine,
    })
}

fn proportional(c: &Poly, r: &Poly, field: &Field) -> Result<bool> {
    if c.is_zero() || r.is_zero() {
        return Ok(c.is_zero() && r.is_zero());
    }
    let k = c.leading().unwrap().1 / r.leading().unwrap().1;
    Ok((c - &r.scale(&k)).reduce(field)?.is_zero())
}

/// Certifies the claimed presentation at the fixed point of `edge`.
///
/// Forward: each claimed relation is read off as an `s, t` coefficient of
/// `phi` of an explicit binomial, modulo earlier relations. Backward: every
/// generator of `J_D` has normal form zero. The chart is compared with the
/// classification.
pub fn verify_local_structure(
    poly: &LatticePolygon,
    edge: &PrimitiveEdge,
    max_degree: u32,
    field: &Field,
) -> Result<VerificationReport> {
    let frame = StandardEdgeFrame::new(poly, edge)?;
    let (case, rw, steps) = plan(&frame)?;
    let required = steps.iter().map(ForwardStep::degree).max().unwrap_or(0).max(2);
    if max_degree < required {
        return Err(SymbolicError::DegreeBoundTooSmall { required, given: max_degree });
    }

    let mut established = RewriteSystem::empty(frame.v.clone());
    let mut forward_failures = Vec::new();
    for step in &steps {
        let image = phi(&step.witness, &frame)?;
        let coeff = image.st_coefficient(step.coefficient.0, step.coefficient.1);
        let c = normal_form(&coeff, &established).reduce(field)?;
        let r = normal_form(&step.establishes.relation(), &established).reduce(field)?;
        if !proportional(&c, &r, field)? {
            forward_failures.push(format!(
                "{}: coefficient of s^{} t^{} in phi({}) reduces to {c}, expected a multiple of {r}",
                step.label, step.coefficient.0, step.coefficient.1, step.witness
            ));
        }
        match &step.establishes {
            Establishes::Substitution(v, img) => {
                established.substitutions.insert(v.clone(), normal_form(img, &established));
            }
            Establishes::Truncation(m) => established.truncations.push(m.clone()),
        }
    }
    let forward_ok = forward_failures.is_empty();
    forward_failures.truncate(MAX_LISTED_FAILURES);

    let generators = ideal_generators(&frame, max_degree)?;
    let mut backward_failures = Vec::new();
    let mut backward_failure_count = 0;
    for g in &generators {
        let nf = normal_form(g, &rw).reduce(field)?;
        if !nf.is_zero() {
            backward_failure_count += 1;
            if backward_failures.len() < MAX_LISTED_FAILURES {
                backward_failures.push(format!("{g} reduces to {nf}"));
            }
        }
    }

    let chart = chart(&rw);
    let expected = expected_chart(poly, &frame)?;
    Ok(VerificationReport {
        edge_index: edge.index,
        b: edge.b.clone(),
        c: edge.c.clone(),
        case,
        degree_bound: max_degree,
        required_degree: required,
        field: field.clone(),
        forward_ok,
        forward_steps: steps.len(),
        forward_failures,
        backward_ok: backward_failure_count == 0,
        generators: generators.len(),
        backward_failure_count,
        backward_failures,
        length: chart.length().cloned(),
        matches_classifier: chart == expected,
        chart,
        expected_chart: expected,
        rewrite_system: rw,
    })
}
