//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lattice::LatticePoint;

use super::{Result, SymbolicError};

/// Variables of the ambient ring and of the line chart. The derived order
/// `S < T < Sigma < Tau < X` is the variable order of the monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    T,
    Sigma(LatticePoint),
    Tau(LatticePoint),
    X(LatticePoint),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S => write!(f, "s"),
            Var::T => write!(f, "t"),
            Var::Sigma(u) => write!(f, "σ({},{})", u.x, u.y),
            Var::Tau(u) => write!(f, "τ({},{})", u.x, u.y),
            Var::X(u) => write!(f, "x({},{})", u.x, u.y),
        }
    }
}

/// Exponent vector: sorted by variable, no zero exponents.
///
/// Ordered by total degree, then lexicographically with earlier variables
/// more significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            m = m.mul(&Monomial::var(v, e));
        }
        m
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// Splits into the `(s, t)` exponents and the remaining factor.
    pub fn split_st(&self) -> ((u32, u32), Monomial) {
        let s = self.exponent(&Var::S);
        let t = self.exponent(&Var::T);
        let rest = self.0.iter().filter(|(v, _)| !matches!(v, Var::S | Var::T)).cloned().collect();
        ((s, t), Monomial(rest))
    }

    pub fn variables(&self) -> impl Iterator<Item = &Var> {
        self.0.iter().map(|(v, _)| v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(eb);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        // chart variables first, then s and t
        let is_st = |v: &Var| matches!(v, Var::S | Var::T);
        let ordered = self.0.iter().filter(|(v, _)| !is_st(v)).chain(self.0.iter().filter(|(v, _)| is_st(v)));
        for (k, (v, e)) in ordered.enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient field. Computation always runs over the rationals; prime
/// fields are handled by reducing coefficients with [`Poly::reduce`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(BigInt),
}

impl Field {
    pub fn prime(p: impl Into<BigInt>) -> Result<Field> {
        let p = p.into();
        if is_prime(&p) {
            Ok(Field::Prime(p))
        } else {
            Err(SymbolicError::NotPrime(p))
        }
    }

    /// `0` means the rationals.
    pub fn from_characteristic(p: u64) -> Result<Field> {
        if p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(p)
        }
    }

    pub fn characteristic(&self) -> BigInt {
        match self {
            Field::Rational => BigInt::zero(),
            Field::Prime(p) => p.clone(),
        }
    }

    /// Canonical image of a rational number; `None` if the denominator
    /// is not invertible.
    pub fn canonical(&self, c: &BigRational) -> Option<BigRational> {
        match self {
            Field::Rational => Some(c.clone()),
            Field::Prime(p) => {
                let d = c.denom().mod_floor(p);
                if d.is_zero() {
                    return None;
                }
                let inv = d.modpow(&(p - 2u32), p);
                Some(BigRational::from_integer((c.numer() * inv).mod_floor(p)))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: &BigInt) -> bool {
    if *p < BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial: nonzero coefficients keyed by monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Poly::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Poly::term(BigRational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(BigRational::one(), m)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the leading one down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, k: &BigRational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scalar multiple with leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Image in `field`, with canonical coefficient representatives.
    pub fn reduce(&self, field: &Field) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let c = field.canonical(c).ok_or_else(|| SymbolicError::NonInvertible(field.characteristic()))?;
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Coefficients as a polynomial in `s` and `t`, keyed by `(deg_s, deg_t)`.
    pub fn st_coefficients(&self) -> BTreeMap<(u32, u32), Poly> {
        let mut out: BTreeMap<(u32, u32), Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (key, rest) = m.split_st();
            out.entry(key).or_default().add_term(rest, c.clone());
        }
        out
    }

    pub fn st_coefficient(&self, s: u32, t: u32) -> Poly {
        self.st_coefficients().remove(&(s, t)).unwrap_or_default()
    }

    /// Replaces variables through `f`; variables mapped to `None` are kept.
    pub fn substitute(&self, f: impl Fn(&Var) -> Option<Poly>) -> Poly {
        let mut cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            let mut kept = Monomial::one();
            for (v, e) in m.factors() {
                match f(v) {
                    None => kept = kept.mul(&Monomial::var(v.clone(), *e)),
                    Some(img) => {
                        let power = cache.entry((v.clone(), *e)).or_insert_with(|| img.pow(*e));
                        acc = &acc * &*power;
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc.mul_monomial(&kept);
        }
        out
    }

    /// Drops every term whose monomial is divisible by one of `monomials`.
    pub fn truncate(&self, monomials: &[Monomial]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !monomials.iter().any(|t| t.divides(m)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.variables().cloned()).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}
