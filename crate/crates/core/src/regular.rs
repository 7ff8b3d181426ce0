//! Maps to projective spaces and Grassmannians, and exact sampling checks
//! of `k`-regularity: any `k` distinct points must span a `tau k`
//! dimensional subspace.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{monomials_up_to, rank, EchelonBasis, Matrix, Monomial, Polynomial, Rational};

/// Coordinates of sampled points are drawn from `-SAMPLE_RADIUS..=SAMPLE_RADIUS`.
pub const SAMPLE_RADIUS: i64 = 20;

/// A morphism `A^n -> P^(N-1)` given by `N` polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMap {
    n: usize,
    coords: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(n: usize, coords: Vec<Polynomial>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Domain("a map needs at least one coordinate".into()));
        }
        if let Some(p) = coords.iter().find(|p| p.n() != n) {
            return Err(Error::VariableMismatch(n, p.n()));
        }
        Ok(PolyMap { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coordinates `N`.
    pub fn target_dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coordinates(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn eval(&self, x: &[Rational]) -> Vec<Rational> {
        self.coords.iter().map(|p| p.eval(x)).collect()
    }
}

/// All monomials of degree at most `k - 1` in `n` variables. Any length-`k`
/// scheme imposes independent conditions on these, so the map is
/// `k`-regular.
pub fn monomial_regular_map(n: usize, k: u32) -> Result<PolyMap> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("n and k must be positive".into()));
    }
    let coords = monomials_up_to(n, k - 1).into_iter().map(Polynomial::monomial).collect();
    PolyMap::new(n, coords)
}

/// A map to `Gr(tau, M)`, evaluated as `tau` spanning vectors per point.
pub trait GrassmannMap {
    fn n(&self) -> usize;
    fn tau(&self) -> usize;
    fn ambient_dim(&self) -> usize;
    fn frame(&self, x: &[Rational]) -> Vec<Vec<Rational>>;
}

/// `f^tau(x) = span(f(x) e_1, ..., f(x) e_tau)` inside `(k^N)^tau`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMap {
    base: PolyMap,
    tau: usize,
}

pub fn tau_power(f: PolyMap, tau: usize) -> Result<BlockMap> {
    if tau == 0 {
        return Err(Error::Domain("tau must be positive".into()));
    }
    Ok(BlockMap { base: f, tau })
}

impl BlockMap {
    pub fn base(&self) -> &PolyMap {
        &self.base
    }
}

impl GrassmannMap for BlockMap {
    fn n(&self) -> usize {
        self.base.n
    }

    fn tau(&self) -> usize {
        self.tau
    }

    fn ambient_dim(&self) -> usize {
        self.tau * self.base.target_dim()
    }

    fn frame(&self, x: &[Rational]) -> Vec<Vec<Rational>> {
        let v = self.base.eval(x);
        let big_n = v.len();
        (0..self.tau)
            .map(|j| {
                let mut row = vec![Rational::ZERO; self.tau * big_n];
                row[j * big_n..(j + 1) * big_n].clone_from_slice(&v);
                row
            })
            .collect()
    }
}

/// A Grassmannian map followed by a linear projection `k^M -> k^m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectedMap<F> {
    inner: F,
    projection: Matrix,
}

impl<F: GrassmannMap> ProjectedMap<F> {
    pub fn new(inner: F, projection: Matrix) -> Result<Self> {
        if projection.ncols() != inner.ambient_dim() {
            return Err(Error::Domain(format!(
                "projection has {} columns, ambient dimension is {}",
                projection.ncols(),
                inner.ambient_dim()
            )));
        }
        Ok(ProjectedMap { inner, projection })
    }

    /// Projection to `target` coordinates with seeded entries in `-9..=9`.
    pub fn random(inner: F, target: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cols = inner.ambient_dim();
        let rows = (0..target).map(|_| (0..cols).map(|_| Rational::from_integer(rng.gen_range(-9..=9))).collect()).collect();
        ProjectedMap { inner, projection: Matrix::from_rows(rows, cols) }
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }
}

impl<F: GrassmannMap> GrassmannMap for ProjectedMap<F> {
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn tau(&self) -> usize {
        self.inner.tau()
    }

    fn ambient_dim(&self) -> usize {
        self.projection.nrows()
    }

    fn frame(&self, x: &[Rational]) -> Vec<Vec<Rational>> {
        self.inner.frame(x).iter().map(|v| self.projection.mul_vec(v)).collect()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegularityVerdict {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RegularityReport {
    pub k: usize,
    pub tau: usize,
    pub ambient_dim: usize,
    pub trials: usize,
    pub verdict: RegularityVerdict,
    /// First failing tuple, in sampling order.
    pub witness: Option<Vec<Vec<i64>>>,
    pub witness_rank: Option<usize>,
}

/// `k` distinct integer points in `[-SAMPLE_RADIUS, SAMPLE_RADIUS]^n`.
pub fn sample_tuple(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<i64>> {
    let available = (2 * SAMPLE_RADIUS as u128 + 1).checked_pow(n as u32).unwrap_or(u128::MAX);
    assert!(k as u128 <= available, "cannot draw {k} distinct points from a grid of {available}");
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-SAMPLE_RADIUS..=SAMPLE_RADIUS)).collect();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// Rank of the stacked `k tau x M` matrix of frames at `points`.
pub fn span_rank<F: GrassmannMap + ?Sized>(f: &F, points: &[Vec<i64>]) -> usize {
    let mut span = EchelonBasis::new(f.ambient_dim());
    for p in points {
        let x: Vec<Rational> = p.iter().map(|&c| Rational::from_integer(c)).collect();
        for row in f.frame(&x) {
            span.insert(row);
        }
    }
    span.rank()
}

/// Samples `trials` tuples of `k` distinct points and checks that each
/// spans a subspace of dimension `tau k`.
pub fn check_k_regular<F: GrassmannMap + ?Sized>(f: &F, k: usize, trials: usize, seed: u64) -> RegularityReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tuples: Vec<Vec<Vec<i64>>> = (0..trials).map(|_| sample_tuple(&mut rng, f.n(), k)).collect();
    let mut report = RegularityReport {
        k,
        tau: f.tau(),
        ambient_dim: f.ambient_dim(),
        trials,
        verdict: RegularityVerdict::Pass,
        witness: None,
        witness_rank: None,
    };
    for t in tuples {
        let r = span_rank(f, &t);
        if r < k * f.tau() {
            report.verdict = RegularityVerdict::Fail;
            report.witness = Some(t);
            report.witness_rank = Some(r);
            break;
        }
    }
    report
}

/// Projects `f` to `target` coordinates, redrawing the projection until it
/// passes the sampled check. Returns the report, the seed used and the
/// number of draws.
pub fn project_until_regular<F: GrassmannMap + Clone>(
    f: &F,
    target: usize,
    k: usize,
    trials: usize,
    seed: u64,
    max_draws: usize,
) -> Result<(RegularityReport, u64, usize)> {
    for draw in 0..max_draws {
        let s = seed.wrapping_add(draw as u64);
        let p = ProjectedMap::random(f.clone(), target, s);
        let report = check_k_regular(&p, k, trials, s);
        if report.verdict == RegularityVerdict::Pass {
            return Ok((report, s, draw + 1));
        }
        log::info!("projection draw {} with seed {s} is not {k}-regular, redrawing", draw + 1);
    }
    Err(Error::ResourceCap(format!("no {k}-regular projection to dimension {target} in {max_draws} draws")))
}

/// Dimension of the span of `f` over the length-`k` curvilinear scheme
/// cut out by the curve `gamma` at `t = p`: the rank of the first `k`
/// Taylor coefficients of `f(gamma(t))` at `p`.
pub fn curvilinear_span_dim(f: &PolyMap, gamma: &[Polynomial], p: &Rational, k: usize) -> Result<usize> {
    if gamma.len() != f.n() {
        return Err(Error::VariableMismatch(f.n(), gamma.len()));
    }
    if let Some(g) = gamma.iter().find(|g| g.n() != 1) {
        return Err(Error::VariableMismatch(1, g.n()));
    }
    let shift = &Polynomial::constant(1, p.clone()) + &Polynomial::var(1, 0);
    let shifted: Vec<Polynomial> = gamma.iter().map(|g| g.compose(std::slice::from_ref(&shift))).collect();
    let cols: Vec<Polynomial> = f.coordinates().iter().map(|c| c.compose(&shifted)).collect();
    let rows: Vec<Vec<Rational>> = (0..k as u32)
        .map(|j| {
            let u = Monomial::new(vec![j]);
            cols.iter().map(|c| c.coeff(&u)).collect()
        })
        .collect();
    Ok(rank(&Matrix::from_rows(rows, cols.len())))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SocleReduction {
    pub lambda: [Rational; 3],
    /// Dimension of the span attached to `Z' = V(lambda . x)`, modulo
    /// `e_1, f_1`.
    pub span_dim: usize,
    pub verified: bool,
}

/// For the double point `Z = Spec k[x1,x2,x3]/m^2` mapping to `Gr(2, k^8)`
/// by `span(e2 x1 + e3 x2 + e4 x3, f2 x1 + f3 x2 + f4 x3)` modulo
/// `span(e1, f1)`: finds `lambda` orthogonal to `alpha` and `beta` and
/// checks that `p = sum alpha_i e_(i+1) + beta_i f_(i+1)` lies in the span
/// attached to the hyperplane section `Z' = V(lambda . x)`.
pub fn socle_reduction_example(alpha: &[Rational; 3], beta: &[Rational; 3]) -> Result<SocleReduction> {
    let lambda = orthogonal_vector(alpha, beta)?;
    // O_Z has basis 1, x1, x2, x3; functionals on O_Z' are those killing lambda . x
    let ell: Vec<Rational> = [Rational::ZERO].into_iter().chain(lambda.iter().cloned()).collect();
    let functionals = Matrix::from_rows(vec![ell], 4).kernel_basis();
    // the two sections, as 6-vectors in the coordinates e2..e4, f2..f4 per
    // basis element of O_Z; multiplying by x_j lands in m^2 = 0
    let section = |which: usize, basis: usize| -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; 6];
        if basis > 0 {
            v[3 * which + basis - 1] = Rational::ONE;
        }
        v
    };
    let mut span = EchelonBasis::new(6);
    for phi in &functionals {
        for which in 0..2 {
            let mut v = vec![Rational::ZERO; 6];
            for (b, c) in phi.iter().enumerate() {
                for (slot, s) in section(which, b).into_iter().enumerate() {
                    v[slot] += &(c * &s);
                }
            }
            span.insert(v);
        }
    }
    let p: Vec<Rational> = alpha.iter().chain(beta.iter()).cloned().collect();
    Ok(SocleReduction { verified: span.contains(&p), span_dim: span.rank(), lambda })
}

fn orthogonal_vector(alpha: &[Rational; 3], beta: &[Rational; 3]) -> Result<[Rational; 3]> {
    let m = Matrix::from_rows(vec![alpha.to_vec(), beta.to_vec()], 3);
    if m.rank() == 0 {
        return Err(Error::Domain("alpha and beta are both zero".into()));
    }
    let v = m.kernel_basis().into_iter().next().expect("kernel of a rank <= 2 map on k^3");
    Ok([v[0].clone(), v[1].clone(), v[2].clone()])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn monomial_map_sizes() {
        assert_eq!(monomial_regular_map(1, 3).unwrap().target_dim(), 3);
        let f = monomial_regular_map(2, 2).unwrap();
        let shown: Vec<String> = f.coordinates().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["1", "x1", "x2"]);
        assert_eq!(monomial_regular_map(3, 4).unwrap().target_dim(), 20);
        assert_eq!(tau_power(monomial_regular_map(2, 3).unwrap(), 2).unwrap().ambient_dim(), 12);
    }

    #[test]
    fn frames_have_rank_tau() {
        let f = tau_power(monomial_regular_map(2, 3).unwrap(), 3).unwrap();
        let fr = f.frame(&[q(2), q(-5)]);
        assert_eq!(rank(&Matrix::from_rows(fr, 18)), 3);
    }

    #[test]
    fn regularity_checks() {
        let f = tau_power(monomial_regular_map(2, 3).unwrap(), 2).unwrap();
        assert_eq!(check_k_regular(&f, 3, 100, 7).verdict, RegularityVerdict::Pass);
        let line = tau_power(monomial_regular_map(1, 2).unwrap(), 1).unwrap();
        let r = check_k_regular(&line, 3, 10, 7);
        assert_eq!(r.verdict, RegularityVerdict::Fail);
        assert_eq!(r.witness.as_ref().unwrap().len(), 3);
        assert!(r.witness_rank.unwrap() <= 2);
    }

    #[test]
    fn projections() {
        let f = tau_power(monomial_regular_map(1, 3).unwrap(), 1).unwrap();
        let (r, _, draws) = project_until_regular(&f, 3, 3, 20, 1, 10).unwrap();
        assert_eq!(r.verdict, RegularityVerdict::Pass);
        assert!(draws >= 1);
        let p = ProjectedMap::random(f, 2, 3);
        assert_eq!(check_k_regular(&p, 3, 5, 1).verdict, RegularityVerdict::Fail);
    }

    #[test]
    fn jets() {
        let t = Polynomial::var(1, 0);
        for k in 1..6 {
            let f = monomial_regular_map(1, k).unwrap();
            for p in [-3, 0, 4] {
                assert_eq!(curvilinear_span_dim(&f, std::slice::from_ref(&t), &q(p), k as usize).unwrap(), k as usize);
            }
        }
        let constant = PolyMap::new(2, vec![Polynomial::constant(2, q(3)), Polynomial::constant(2, q(-1))]).unwrap();
        assert_eq!(curvilinear_span_dim(&constant, &[t.clone(), t.clone()], &q(1), 4).unwrap(), 1);
        let f = monomial_regular_map(2, 3).unwrap();
        let gamma = [t.clone(), &t * &t];
        assert_eq!(curvilinear_span_dim(&f, &gamma, &Rational::ZERO, 3).unwrap(), 3);
    }

    #[test]
    fn socle_reduction() {
        let r = socle_reduction_example(&[q(1), q(0), q(0)], &[q(0), q(1), q(0)]).unwrap();
        assert!(r.lambda[0].is_zero() && r.lambda[1].is_zero() && !r.lambda[2].is_zero());
        assert!(r.verified);
        assert_eq!(r.span_dim, 4);
        assert!(socle_reduction_example(&[q(1), q(0), q(0)], &[q(1), q(0), q(0)]).unwrap().verified);
        assert!(socle_reduction_example(&[q(0), q(0), q(0)], &[q(0), q(0), q(0)]).is_err());
    }
}
