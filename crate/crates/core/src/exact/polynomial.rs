use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients.
///
/// The same type represents elements of the ring `k[x1..xn]` and of the
/// dual ring `k[y1..yn]`; only the printed variable prefix differs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(c, Monomial::one(n))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Rational::ONE, m)
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(n: usize, it: I) -> Self {
        let mut p = Polynomial::zero(n);
        for (m, c) in it {
            assert_eq!(m.n(), n, "monomial has wrong variable count");
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Maximum total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, u: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.mul(u), c.clone())).collect(),
        }
    }

    /// Contraction of a single dual term by a ring monomial.
    pub fn contract_monomial(&self, u: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            if let Some(q) = u.quotient_of(m) {
                out.terms.insert(q, c.clone());
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n, "point has wrong dimension");
        self.terms
            .iter()
            .map(|(m, c)| m.exps().iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * x.pow(e)))
            .sum()
    }

    /// Substitutes `subs[i]` for the `i`-th variable.
    pub fn compose(&self, subs: &[Polynomial]) -> Polynomial {
        assert_eq!(subs.len(), self.n, "substitution has wrong length");
        let target = subs.first().map_or(0, Polynomial::n);
        let mut powers: Vec<Vec<Polynomial>> = subs.iter().map(|s| vec![Polynomial::constant(s.n, Rational::ONE), s.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e as usize];
            }
            out = &out + &acc;
        }
        out
    }

    pub fn display_with(&self, prefix: char) -> PolynomialDisplay<'_> {
        PolynomialDisplay { p: self, prefix }
    }

    pub fn to_string_with(&self, prefix: char) -> String {
        self.display_with(prefix).to_string()
    }

    fn check_n(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        Ok(())
    }
}

/// Contraction action `g ∘ f` of a ring element on a dual element:
/// `x^a ∘ y^b = y^(b-a)` when `b >= a`, otherwise `0`.
pub fn contract(g: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    g.check_n(f)?;
    let mut out = Polynomial::zero(f.n);
    for (u, a) in &g.terms {
        for (m, b) in &f.terms {
            if let Some(q) = u.quotient_of(m) {
                out.add_term(q, &(a * b));
            }
        }
    }
    Ok(out)
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = Polynomial::zero(self.n);
        for (m, a) in &self.terms {
            for (u, b) in &rhs.terms {
                out.add_term(m.mul(u), &(a * b));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_integer(-1))
    }
}

pub struct PolynomialDisplay<'a> {
    p: &'a Polynomial,
    prefix: char,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display_with(self.prefix))?;
            } else {
                write!(f, "{abs}*{}", m.display_with(self.prefix))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with('x').fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        crate::exact::parse::parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(contract(&p("x1", 2), &p("y1^2", 2)).unwrap(), p("y1", 2));
        assert!(contract(&p("x1*x2", 2), &p("y1", 2)).unwrap().is_zero());
        assert_eq!(contract(&p("x1 + x2", 2), &p("y1*y2", 2)).unwrap(), p("y2 + y1", 2));
        assert!(contract(&p("x1", 2), &p("y1", 3)).is_err());
    }

    #[test]
    fn prints_descending_with_signs() {
        let q = p("-x2 + 3/2*x1^2*x3 - 1", 3);
        assert_eq!(q.to_string(), "3/2*x1^2*x3 - x2 - 1");
        assert_eq!(q.to_string_with('y'), "3/2*y1^2*y3 - y2 - 1");
    }

    #[test]
    fn arithmetic_cancels() {
        let a = p("x1^2 - x2", 2);
        assert!((&a - &a).is_zero());
        assert_eq!(&(&a + &a), &a.scale(&Rational::from_integer(2)));
        assert_eq!((&p("x1 + x2", 2) * &p("x1 - x2", 2)), p("x1^2 - x2^2", 2));
    }
}
