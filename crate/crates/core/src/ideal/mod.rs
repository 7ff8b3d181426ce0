//! Monomial ideals of finite colength.

mod enumerate;
mod stable;

pub use enumerate::{enumerate_monomial_ideals, enumerate_monomial_ideals_capped, DEFAULT_NODE_CAP};
pub use stable::{enumerate_strongly_stable, lex_segment_ideal};

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::parse::parse_raw;
use crate::exact::Monomial;
use crate::hilbert::HilbertFunction;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

/// Generator display order: ascending degree, descending monomial order
/// within a degree.
fn gen_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
    /// Standard monomials in ascending order, when finitely many.
    staircase: Option<Vec<Monomial>>,
    index: HashMap<Monomial, usize>,
    hilbert: Option<HilbertFunction>,
}

impl MonomialIdeal {
    /// Ideal generated by `gens`, reduced to its minimal generators.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("an ideal needs at least one generator".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::VariableMismatch(g.n(), n));
        }
        Ok(Self::build(n, minimize(gens)))
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    /// Parses a comma-separated list of monomials such as `x1^3, x2*x3`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let polys = crate::exact::parse_polynomial_list(text, n)?;
        let n = polys[0].n();
        let mut gens = Vec::new();
        for p in polys {
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if c.is_one() => gens.push(m.clone()),
                _ => {
                    return Err(Error::Domain(format!(
                        "`{p}` is not a monic monomial generator"
                    )))
                }
            }
        }
        Self::new(n, gens)
    }

    /// The ideal whose standard monomials are exactly `staircase`, which
    /// must be closed under division.
    pub fn from_staircase(n: usize, staircase: &[Monomial]) -> Result<Self> {
        let set: std::collections::HashSet<&Monomial> = staircase.iter().collect();
        if staircase.is_empty() || !set.contains(&Monomial::one(n)) {
            return Err(Error::Domain("staircase must contain 1".into()));
        }
        for m in staircase {
            for i in 0..n {
                if let Some(q) = m.div_var(i) {
                    if !set.contains(&q) {
                        return Err(Error::Domain(format!("staircase not closed under division at {m}")));
                    }
                }
            }
        }
        let mut gens = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for m in staircase {
            for i in 0..n {
                let c = m.mul_var(i);
                if set.contains(&c) || !seen.insert(c.clone()) {
                    continue;
                }
                if (0..n).all(|j| c.div_var(j).is_none_or(|q| set.contains(&q))) {
                    gens.push(c);
                }
            }
        }
        gens.sort_by(gen_order);
        Ok(Self::build(n, gens))
    }

    fn build(n: usize, gens: Vec<Monomial>) -> Self {
        let finite = (0..n).all(|i| gens.iter().any(|g| g.degree() == g.exp(i) && g.exp(i) > 0))
            || gens.iter().any(Monomial::is_one);
        let mut ideal = MonomialIdeal { n, gens, staircase: None, index: HashMap::new(), hilbert: None };
        if finite {
            let mut st = Vec::new();
            let mut queue = VecDeque::new();
            let mut seen = std::collections::HashSet::new();
            let one = Monomial::one(n);
            if !ideal.contains(&one) {
                seen.insert(one.clone());
                queue.push_back(one);
            }
            while let Some(m) = queue.pop_front() {
                for i in 0..n {
                    let c = m.mul_var(i);
                    if !seen.contains(&c) && !ideal.contains(&c) {
                        seen.insert(c.clone());
                        queue.push_back(c);
                    }
                }
                st.push(m);
            }
            st.sort();
            let mut hf = vec![0u64; st.last().map_or(0, |m| m.degree() as usize + 1)];
            for m in &st {
                hf[m.degree() as usize] += 1;
            }
            ideal.index = st.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
            ideal.hilbert = HilbertFunction::new(hf).ok();
            ideal.staircase = Some(st);
        }
        ideal
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn colength(&self) -> Colength {
        match &self.staircase {
            Some(s) => Colength::Finite(s.len() as u64),
            None => Colength::Infinite,
        }
    }

    /// Standard monomials in ascending order.
    pub fn staircase(&self) -> Option<&[Monomial]> {
        self.staircase.as_deref()
    }

    /// Position of a standard monomial in [`Self::staircase`].
    pub fn standard_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn hilbert_function(&self) -> Result<&HilbertFunction> {
        self.hilbert.as_ref().ok_or(Error::InfiniteColength)
    }

    /// Largest degree of a standard monomial.
    pub fn socle_degree(&self) -> Result<usize> {
        Ok(self.hilbert_function()?.socle_degree())
    }

    /// Strong stability with `x1` dominant: for each generator `u`, each
    /// `x_j | u` and each `i < j`, `u * x_i / x_j` lies in the ideal.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| {
            (0..self.n).all(|j| match u.div_var(j) {
                None => true,
                Some(q) => (0..j).all(|i| self.contains(&q.mul_var(i))),
            })
        })
    }

    /// Standard monomials `m` with `m * x_i` in the ideal for every `i`.
    pub fn socle_monomials(&self) -> Vec<Monomial> {
        self.staircase
            .iter()
            .flatten()
            .filter(|m| (0..self.n).all(|i| !self.is_standard(&m.mul_var(i))))
            .cloned()
            .collect()
    }

    /// Comma-separated generator list, e.g. `x1*x2, x2^2, x1^3`.
    pub fn generator_list(&self) -> String {
        self.gens.iter().map(Monomial::to_string).collect::<Vec<_>>().join(", ")
    }
}

/// Divisibility-minimal subset of `gens`, in generator display order.
pub fn minimal_generators(gens: &[Monomial]) -> Vec<Monomial> {
    minimize(gens.to_vec())
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(gen_order);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        // sorted by degree, so only earlier elements can divide g
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl std::hash::Hash for MonomialIdeal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.gens.hash(state);
    }
}

impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.gens.iter().zip(&other.gens) {
                match gen_order(a, b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            self.gens.len().cmp(&other.gens.len())
        })
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator_list())
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    gens: Vec<String>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson { n: self.n, gens: self.gens.iter().map(Monomial::to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = IdealJson::deserialize(d)?;
        let mut gens = Vec::new();
        for g in &raw.gens {
            let p = parse_raw(g).map_err(D::Error::custom)?.into_polynomial(raw.n).map_err(D::Error::custom)?;
            let m = p.leading_monomial().cloned().ok_or_else(|| D::Error::custom("zero generator"))?;
            if p.len() != 1 {
                return Err(D::Error::custom(format!("`{g}` is not a monomial")));
            }
            gens.push(m);
        }
        MonomialIdeal::new(raw.n, gens).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn minimalization() {
        assert_eq!(ideal("x1^2, x1^3", 1).generator_list(), "x1^2");
        assert_eq!(ideal("x1, x1*x2, x2", 2).generator_list(), "x1, x2");
        let ii = ideal("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", 3);
        assert_eq!(ii.generators().len(), 6);
    }

    #[test]
    fn colengths_and_hilbert_functions() {
        for k in 1..8 {
            let c = MonomialIdeal::new(3, vec![Monomial::var(3, 0), Monomial::var(3, 1), Monomial::new(vec![0, 0, k])])
                .unwrap();
            assert_eq!(c.colength(), Colength::Finite(k as u64));
            assert_eq!(c.hilbert_function().unwrap().values(), vec![1; k as usize].as_slice());
        }
        let worked = ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        assert_eq!(worked.colength(), Colength::Finite(10));
        assert_eq!(worked.hilbert_function().unwrap().values(), &[1, 3, 3, 2, 1]);
        let ii = ideal("x2^2, x1*x2, x1^2, x2*x3^2, x1*x3^2, x3^4", 3);
        assert_eq!(ii.hilbert_function().unwrap().values(), &[1, 3, 3, 1]);
        let inf = ideal("x1, x2", 3);
        assert_eq!(inf.colength(), Colength::Infinite);
        assert!(matches!(inf.hilbert_function(), Err(Error::InfiniteColength)));
    }

    #[test]
    fn strong_stability() {
        assert!(!ideal("x2", 2).is_strongly_stable());
        assert!(ideal("x1", 2).is_strongly_stable());
        assert!(!ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3).is_strongly_stable());
    }

    #[test]
    fn staircase_round_trip() {
        let ii = ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        let back = MonomialIdeal::from_staircase(3, ii.staircase().unwrap()).unwrap();
        assert_eq!(back, ii);
    }

    #[test]
    fn socle_of_worked_example() {
        let ii = ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        let soc: Vec<String> = ii.socle_monomials().iter().map(|m| m.to_string()).collect();
        assert_eq!(soc, ["x1^2", "x2*x3^3"]);
    }

    #[test]
    fn json_shape() {
        let ii = ideal("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        let s = serde_json::to_string(&ii).unwrap();
        assert_eq!(s, r#"{"n":3,"gens":["x1*x2","x2^2","x1*x3","x1^3","x3^4"]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ii);
    }
}
