//! Macaulay inverse systems and apolar ideals under the contraction action.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{monomial_basis, monomials_up_to, EchelonBasis, Matrix, Monomial, Polynomial, Rational};
use crate::hilbert::HilbertFunction;
use crate::tangent::GradedIdeal;

/// Dual generators `f_1, ..., f_t` in `k[y1..yn]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InverseSystem {
    n: usize,
    gens: Vec<Polynomial>,
}

impl InverseSystem {
    pub fn new(n: usize, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("inverse system needs a generator".into()));
        }
        for g in &gens {
            if g.n() != n {
                return Err(Error::VariableMismatch(g.n(), n));
            }
            if g.is_zero() {
                return Err(Error::Domain("inverse system generators must be nonzero".into()));
            }
        }
        Ok(InverseSystem { n, gens })
    }

    /// Parses a comma-separated list such as `y1^4, y2^3, y3*y4`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let gens = crate::exact::parse_polynomial_list(text, n)?;
        Self::new(gens[0].n(), gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    /// The same system with the dual variables `y_{j+1}`, `j` in `vars`,
    /// appended as generators.
    pub fn with_linear_forms(&self, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(vars.into_iter().map(|j| Polynomial::var(self.n, j)));
        InverseSystem { n: self.n, gens }
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with('y')).collect()
    }
}

impl Serialize for InverseSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.generator_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for InverseSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let items = Vec::<String>::deserialize(d)?;
        InverseSystem::parse(&items.join(","), None).map_err(D::Error::custom)
    }
}

/// Annihilator of a homogeneous inverse system, degree by degree:
/// `Ann_e = { g in R_e : g ∘ f_i = 0 for all i }`.
pub fn apolar_ideal(fs: &InverseSystem) -> Result<GradedIdeal> {
    if let Some(g) = fs.gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(format!(
            "{}; use apolar_local_invariants for inhomogeneous systems",
            g.to_string_with('y')
        )));
    }
    let n = fs.n;
    let top = fs.max_degree() + 1;
    let spans = (0..=top)
        .map(|e| {
            let cols = monomial_basis(n, e);
            let mut m = Matrix::zeros(0, cols.len());
            for f in &fs.gens {
                let df = f.degree().unwrap();
                if df < e {
                    continue;
                }
                let images: Vec<Polynomial> = cols.iter().map(|u| f.contract_monomial(u)).collect();
                for t in monomial_basis(n, df - e) {
                    m.push_row(images.iter().map(|p| p.coeff(&t)).collect());
                }
            }
            m.kernel_basis()
        })
        .collect();
    GradedIdeal::from_degree_spans(n, spans)
}

/// Basis of `M = R ∘ {f_i}`, the span of all contractions of all
/// generators, as echelon rows over monomials in descending order.
pub fn partials_module(fs: &InverseSystem) -> Vec<Polynomial> {
    partials_span(fs, 0).1
}

/// Span of `u ∘ f_i` over monomials `u` of degree at least `min_deg`.
fn partials_span(fs: &InverseSystem, min_deg: u32) -> (usize, Vec<Polynomial>) {
    let n = fs.n;
    let dmax = fs.max_degree();
    let mut cols = monomials_up_to(n, dmax);
    cols.reverse();
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = EchelonBasis::new(cols.len());
    for u in monomials_up_to(n, dmax).iter().filter(|u| u.degree() >= min_deg) {
        for f in &fs.gens {
            let p = f.contract_monomial(u);
            if p.is_zero() {
                continue;
            }
            let mut v = vec![Rational::ZERO; cols.len()];
            for (m, c) in p.terms() {
                v[index[m]] = c.clone();
            }
            span.insert(v);
        }
    }
    let basis = span
        .rows()
        .iter()
        .map(|r| Polynomial::from_terms(n, cols.iter().cloned().zip(r.iter().cloned())))
        .collect();
    (span.rank(), basis)
}

/// Invariants of the local algebra `A = R / Ann(M)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ApolarReport {
    pub k: u64,
    pub hilbert: HilbertFunction,
    pub tau: u64,
    pub graded: bool,
}

/// Dimension, local Hilbert function and socle dimension of the algebra
/// apolar to a possibly inhomogeneous system.
///
/// An element `g` of `A` is identified with the tuple `(g ∘ f_1, ...,
/// g ∘ f_t)`, which is faithful. The image of `m^i` is spanned by the
/// tuples of monomials of degree at least `i`, so `H(i)` is the rank drop
/// between consecutive filtration steps. The socle dimension equals the
/// minimal number of generators of `M`, i.e. `dim M - dim m ∘ M`.
pub fn apolar_local_invariants(fs: &InverseSystem) -> ApolarReport {
    let n = fs.n;
    let dmax = fs.max_degree();
    let mut offsets = Vec::new();
    let mut indices = Vec::new();
    let mut width = 0;
    for f in &fs.gens {
        let mons = monomials_up_to(n, f.degree().unwrap());
        offsets.push(width);
        width += mons.len();
        indices.push(mons.into_iter().enumerate().map(|(i, m)| (m, i)).collect::<HashMap<_, _>>());
    }
    let mut span = EchelonBasis::new(width);
    let mut ranks_from = vec![0usize; dmax as usize + 2];
    for d in (0..=dmax).rev() {
        for u in monomial_basis(n, d) {
            let mut v = vec![Rational::ZERO; width];
            for (i, f) in fs.gens.iter().enumerate() {
                for (m, c) in f.contract_monomial(&u).terms() {
                    v[offsets[i] + indices[i][m]] = c.clone();
                }
            }
            span.insert(v);
        }
        ranks_from[d as usize] = span.rank();
    }
    let hf: Vec<u64> = (0..=dmax as usize).map(|i| (ranks_from[i] - ranks_from[i + 1]) as u64).collect();
    let dim_m = partials_span(fs, 0).0;
    let dim_mm = partials_span(fs, 1).0;
    ApolarReport {
        k: span.rank() as u64,
        hilbert: HilbertFunction::new(hf).expect("local Hilbert function starts at 1"),
        tau: (dim_m - dim_mm) as u64,
        graded: fs.is_homogeneous(),
    }
}

/// Homogeneous pieces of `I^⊥`: in each degree `e`, the dual forms
/// orthogonal to `I_e` under `<x^a, y^b> = δ_{ab}`.
pub fn inverse_system_of(ideal: &GradedIdeal) -> InverseSystem {
    let n = ideal.n();
    let mut gens = Vec::new();
    for e in 0..=ideal.socle_degree() as u32 {
        let piece = ideal.piece(e as i64).expect("piece within socle degree");
        let rows: Vec<Vec<Rational>> = piece.ideal().rows().to_vec();
        let m = Matrix::from_rows(rows, piece.basis().len());
        for v in m.kernel_basis() {
            gens.push(Polynomial::from_terms(n, piece.basis().iter().cloned().zip(v)));
        }
    }
    InverseSystem::new(n, gens).expect("quotient is nonzero in degree 0")
}

/// Homogeneous form of degree `d` with coefficients uniform in `-9..=9`,
/// redrawn if all coefficients vanish.
pub fn random_form(rng: &mut impl Rng, n: usize, d: u32) -> Polynomial {
    loop {
        let p = Polynomial::from_terms(
            n,
            monomial_basis(n, d).into_iter().map(|m| (m, Rational::from_integer(rng.gen_range(-9..=9)))),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial of degree at most `d` with random coefficients.
pub fn random_polynomial(rng: &mut impl Rng, n: usize, d: u32) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for e in 0..=d {
        p = &p + &random_form(rng, n, e);
    }
    p
}

/// One random form per entry of `shape`, deterministic in `seed`.
pub fn random_inverse_system(shape: &[u32], n: usize, seed: u64) -> InverseSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = shape.iter().map(|&d| random_form(&mut rng, n, d)).collect();
    InverseSystem::new(n, gens).expect("random forms are nonzero")
}

/// Draws systems with seeds `seed, seed+1, ...` until `accept` holds.
/// Returns the system, the seed that produced it and the number of draws.
pub fn draw_generic(
    shape: &[u32],
    n: usize,
    seed: u64,
    max_draws: u64,
    accept: impl Fn(&InverseSystem) -> bool,
) -> Result<(InverseSystem, u64, u64)> {
    for attempt in 0..max_draws {
        let s = seed.wrapping_add(attempt);
        let fs = random_inverse_system(shape, n, s);
        if accept(&fs) {
            if attempt > 0 {
                log::info!("generic draw for shape {shape:?} needed {} reseeds", attempt);
            }
            return Ok((fs, s, attempt + 1));
        }
        log::info!("draw with seed {s} is degenerate, reseeding");
    }
    Err(Error::ResourceCap(format!("no generic draw within {max_draws} seeds")))
}

/// A sample `y1^4 + a y1^2 y3 + F3(y1, y2) + F(y1, y2, y3)` with `a != 0`,
/// `F3` a binary cubic and `deg F <= 2`.
pub fn standard_form_sample(seed: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 3;
    let y = |e: [u32; 3]| Polynomial::monomial(Monomial::new(e.to_vec()));
    let alpha = loop {
        let a: i64 = rng.gen_range(-9..=9);
        if a != 0 {
            break Rational::from_integer(a);
        }
    };
    let cubic2 = random_form(&mut rng, 2, 3);
    let cubic = Polynomial::from_terms(
        n,
        cubic2.terms().map(|(m, c)| (Monomial::new(vec![m.exp(0), m.exp(1), 0]), c.clone())),
    );
    let low = random_polynomial(&mut rng, n, 2);
    let mut g = &y([4, 0, 0]) + &y([2, 0, 1]).scale(&alpha);
    g = &g + &cubic;
    &g + &low
}
