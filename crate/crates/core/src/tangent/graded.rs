use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{monomial_basis, EchelonBasis, Monomial, Polynomial, Rational};
use crate::hilbert::HilbertFunction;
use crate::ideal::MonomialIdeal;

/// Degree cap used when building an ideal from generators.
pub const DEFAULT_DEGREE_CAP: u32 = 40;

/// One graded piece `I_e` inside `R_e`, with the induced quotient basis.
#[derive(Clone, Debug)]
pub struct Piece {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: EchelonBasis,
    /// Non-pivot columns of the echelon form, ascending. Their monomials
    /// represent a basis of `(R/I)_e`.
    quotient: Vec<usize>,
    /// Normal form of each basis monomial in quotient coordinates.
    nf: Vec<Vec<(usize, Rational)>>,
}

impl Piece {
    fn new(n: usize, e: u32, ideal: EchelonBasis) -> Self {
        let basis = monomial_basis(n, e);
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut is_pivot = vec![None; basis.len()];
        for (r, &p) in ideal.pivots().iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let quotient: Vec<usize> = (0..basis.len()).filter(|&c| is_pivot[c].is_none()).collect();
        let mut qpos = vec![usize::MAX; basis.len()];
        for (q, &c) in quotient.iter().enumerate() {
            qpos[c] = q;
        }
        let nf = (0..basis.len())
            .map(|c| match is_pivot[c] {
                None => vec![(qpos[c], Rational::ONE)],
                Some(r) => ideal.rows()[r]
                    .iter()
                    .enumerate()
                    .filter(|(j, v)| !v.is_zero() && qpos[*j] != usize::MAX)
                    .map(|(j, v)| (qpos[j], -v))
                    .collect(),
            })
            .collect();
        Piece { basis, index, ideal, quotient, nf }
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn column(&self, m: &Monomial) -> usize {
        self.index[m]
    }

    pub fn ideal(&self) -> &EchelonBasis {
        &self.ideal
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient.len()
    }

    /// Monomials representing the quotient basis.
    pub fn quotient_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.quotient.iter().map(|&c| &self.basis[c])
    }

    /// Normal form of a monomial of this degree, as sparse quotient coordinates.
    pub fn normal_form(&self, m: &Monomial) -> &[(usize, Rational)] {
        &self.nf[self.index[m]]
    }

    pub fn is_full(&self) -> bool {
        self.quotient.is_empty()
    }

    fn to_vector(&self, p: &Polynomial) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; self.basis.len()];
        for (m, c) in p.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    fn to_polynomial(&self, n: usize, v: &[Rational]) -> Polynomial {
        Polynomial::from_terms(n, self.basis.iter().cloned().zip(v.iter().cloned()))
    }
}

/// Homogeneous ideal of finite colength, stored degree by degree up to the
/// first degree `s + 1` where it fills the whole ring.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    n: usize,
    pieces: Vec<Piece>,
    mingens: Vec<Polynomial>,
    hilbert: HilbertFunction,
}

impl GradedIdeal {
    pub fn from_monomial(ideal: &MonomialIdeal) -> Result<Self> {
        let s = ideal.socle_degree()?;
        let n = ideal.n();
        let spans = (0..=s as u32 + 1)
            .map(|e| {
                monomial_basis(n, e)
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| ideal.contains(m))
                    .map(|(i, _)| unit(i, binom_len(n, e)))
                    .collect()
            })
            .collect();
        Self::from_degree_spans(n, spans)
    }

    /// Ideal generated by homogeneous polynomials, built degree by degree
    /// until it contains every monomial of some degree.
    pub fn from_generators(polys: &[Polynomial], n: usize, degree_cap: u32) -> Result<Self> {
        let mut by_degree: HashMap<u32, Vec<&Polynomial>> = HashMap::new();
        for p in polys {
            if p.n() != n {
                return Err(Error::VariableMismatch(p.n(), n));
            }
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(Error::NotHomogeneous(p.to_string()));
            }
            by_degree.entry(p.degree().unwrap()).or_default().push(p);
        }
        if by_degree.contains_key(&0) {
            return Err(Error::Domain("generators include a unit".into()));
        }
        let mut pieces: Vec<Piece> = Vec::new();
        for e in 0..=degree_cap {
            let mut span = EchelonBasis::new(binom_len(n, e));
            if let Some(prev) = pieces.last() {
                let piece = Piece::new(n, e, EchelonBasis::new(binom_len(n, e)));
                for row in prev.ideal.rows() {
                    let p = prev.to_polynomial(n, row);
                    for l in 0..n {
                        span.insert(piece.to_vector(&p.mul_monomial(&Monomial::var(n, l))));
                    }
                }
                for g in by_degree.get(&e).into_iter().flatten() {
                    span.insert(piece.to_vector(g));
                }
            }
            let full = span.rank() == span.dim();
            pieces.push(Piece::new(n, e, span));
            if full {
                return Self::assemble(n, pieces);
            }
        }
        Err(Error::ResourceCap(format!("ideal does not reach finite colength by degree {degree_cap}")))
    }

    /// Ideal given by spanning vectors of each piece `I_e` in the
    /// coordinates of [`monomial_basis`]`(n, e)`. Pieces past the end of
    /// `spans` must already be full.
    pub fn from_degree_spans(n: usize, spans: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let mut pieces = Vec::new();
        for (e, span) in spans.into_iter().enumerate() {
            let mut b = EchelonBasis::new(binom_len(n, e as u32));
            for v in span {
                b.insert(v);
            }
            let full = b.rank() == b.dim();
            pieces.push(Piece::new(n, e as u32, b));
            if full {
                break;
            }
        }
        if !pieces.last().is_some_and(Piece::is_full) {
            return Err(Error::InfiniteColength);
        }
        let g = Self::assemble(n, pieces)?;
        g.check_ideal()?;
        Ok(g)
    }

    fn assemble(n: usize, pieces: Vec<Piece>) -> Result<Self> {
        if pieces[0].is_full() {
            return Err(Error::Domain("unit ideal has colength zero".into()));
        }
        let top = pieces.len() - 1;
        let hilbert = HilbertFunction::new(pieces[..top].iter().map(|p| p.quotient_dim() as u64).collect())?;
        let mut mingens = Vec::new();
        for e in 1..pieces.len() {
            let mut lower = EchelonBasis::new(pieces[e].basis.len());
            for row in pieces[e - 1].ideal.rows() {
                let p = pieces[e - 1].to_polynomial(n, row);
                for l in 0..n {
                    lower.insert(pieces[e].to_vector(&p.mul_monomial(&Monomial::var(n, l))));
                }
            }
            for row in pieces[e].ideal.rows() {
                if lower.insert(row.clone()) {
                    mingens.push(pieces[e].to_polynomial(n, row));
                }
            }
        }
        Ok(GradedIdeal { n, pieces, mingens, hilbert })
    }

    fn check_ideal(&self) -> Result<()> {
        for e in 0..self.pieces.len() - 1 {
            for row in self.pieces[e].ideal.rows() {
                let p = self.pieces[e].to_polynomial(self.n, row);
                for l in 0..self.n {
                    let q = p.mul_monomial(&Monomial::var(self.n, l));
                    if !self.pieces[e + 1].ideal.contains(&self.pieces[e + 1].to_vector(&q)) {
                        return Err(Error::Domain(format!("degree pieces are not closed under x{}", l + 1)));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn hilbert_function(&self) -> &HilbertFunction {
        &self.hilbert
    }

    pub fn colength(&self) -> u64 {
        self.hilbert.sum()
    }

    pub fn socle_degree(&self) -> usize {
        self.hilbert.socle_degree()
    }

    /// Piece `I_e`, or `None` past `s + 1` where `I_e = R_e`.
    pub fn piece(&self, e: i64) -> Option<&Piece> {
        usize::try_from(e).ok().and_then(|e| self.pieces.get(e))
    }

    pub fn quotient_dim(&self, e: i64) -> usize {
        self.piece(e).map_or(0, Piece::quotient_dim)
    }

    /// Minimal generators, ascending by degree, each the echelon row of
    /// its leading monomial.
    pub fn minimal_generators(&self) -> &[Polynomial] {
        &self.mingens
    }

    pub fn generator_count_in_degree(&self, e: u32) -> usize {
        self.mingens.iter().filter(|g| g.degree() == Some(e)).count()
    }

    /// Basis of `I_e` as polynomials.
    pub fn degree_basis(&self, e: u32) -> Vec<Polynomial> {
        match self.piece(e as i64) {
            Some(p) => p.ideal.rows().iter().map(|r| p.to_polynomial(self.n, r)).collect(),
            None => monomial_basis(self.n, e).into_iter().map(Polynomial::monomial).collect(),
        }
    }

    /// Pieces `I_0 ..= I_{s+1}` as echelon row lists, for equality checks.
    pub fn degree_rows(&self) -> Vec<&[Vec<Rational>]> {
        self.pieces.iter().map(|p| p.ideal.rows()).collect()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        (0..=p.degree().unwrap_or(0)).all(|e| {
            let h = p.homogeneous_part(e);
            h.is_zero() || self.piece(e as i64).is_none_or(|piece| piece.ideal.contains(&piece.to_vector(&h)))
        })
    }

    /// The monomial ideal with the same pieces, when every piece is
    /// spanned by monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        let monomial_rows = self
            .pieces
            .iter()
            .all(|p| p.ideal.rows().iter().all(|r| r.iter().filter(|v| !v.is_zero()).count() == 1));
        if !monomial_rows {
            return None;
        }
        let gens = self.mingens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        MonomialIdeal::new(self.n, gens).ok()
    }

    pub fn generator_strings(&self, prefix: char) -> Vec<String> {
        self.mingens.iter().map(|g| g.to_string_with(prefix)).collect()
    }
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.degree_rows() == other.degree_rows()
    }
}

fn binom_len(n: usize, e: u32) -> usize {
    crate::exact::binomial(n as i64 + e as i64 - 1, e as i64) as usize
}

fn unit(i: usize, len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; len];
    v[i] = Rational::ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_polynomial_list, Matrix};

    fn mono(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn monomial_path() {
        let g = GradedIdeal::from_monomial(&mono("x1, x2, x3^5", 3)).unwrap();
        assert_eq!(g.hilbert_function().values(), &[1, 1, 1, 1, 1]);
        assert_eq!(g.socle_degree(), 4);
        let w = GradedIdeal::from_monomial(&mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3)).unwrap();
        assert_eq!(w.hilbert_function().values(), &[1, 3, 3, 2, 1]);
        assert_eq!(w.as_monomial().unwrap(), mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3));
        let m2 = GradedIdeal::from_monomial(&mono("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2", 3)).unwrap();
        assert_eq!(m2.hilbert_function().values(), &[1, 3]);
    }

    #[test]
    fn generator_path_matches_monomial_path() {
        let polys = parse_polynomial_list("x1, x2, x3^4", Some(3)).unwrap();
        let a = GradedIdeal::from_generators(&polys, 3, DEFAULT_DEGREE_CAP).unwrap();
        let b = GradedIdeal::from_monomial(&mono("x1, x2, x3^4", 3)).unwrap();
        assert_eq!(a, b);
    }

    /// dim I_e by the rank of all generator multiples at once.
    fn brute_hilbert(polys: &[Polynomial], n: usize, upto: u32) -> Vec<u64> {
        (0..=upto)
            .map(|e| {
                let basis = monomial_basis(n, e);
                let mut rows = Vec::new();
                for g in polys {
                    let dg = g.degree().unwrap();
                    if dg > e {
                        continue;
                    }
                    for u in monomial_basis(n, e - dg) {
                        let p = g.mul_monomial(&u);
                        rows.push(basis.iter().map(|m| p.coeff(m)).collect());
                    }
                }
                let r = Matrix::from_rows(rows, basis.len()).rank();
                (basis.len() - r) as u64
            })
            .collect()
    }

    #[test]
    fn non_monomial_generators() {
        let polys = parse_polynomial_list("x1^2 - x2^2, x1*x2, x2^3, x3", Some(3)).unwrap();
        let g = GradedIdeal::from_generators(&polys, 3, DEFAULT_DEGREE_CAP).unwrap();
        let mut brute = brute_hilbert(&polys, 3, 6);
        while brute.last() == Some(&0) {
            brute.pop();
        }
        assert_eq!(g.hilbert_function().values(), brute.as_slice());
        assert!(g.as_monomial().is_none());
        assert!(g.contains(&crate::exact::parse_polynomial("x1^3", 3).unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        let inhom = parse_polynomial_list("x1^2 - x2, x3", Some(3)).unwrap();
        assert!(matches!(GradedIdeal::from_generators(&inhom, 3, 10), Err(Error::NotHomogeneous(_))));
        let infinite = parse_polynomial_list("x1, x2", Some(3)).unwrap();
        assert!(matches!(GradedIdeal::from_generators(&infinite, 3, 10), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn minimal_generator_counts() {
        let w = GradedIdeal::from_monomial(&mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3)).unwrap();
        assert_eq!(w.generator_count_in_degree(2), 3);
        assert_eq!(w.generator_count_in_degree(3), 1);
        assert_eq!(w.generator_count_in_degree(4), 1);
        assert_eq!(w.minimal_generators().len(), 5);
    }
}
