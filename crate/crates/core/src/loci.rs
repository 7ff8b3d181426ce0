//! Closed-form locus dimensions, bounds and the margins by which loci
//! exceed the expected dimension `(n-1)(k-1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apolarity::InverseSystem;
use crate::error::{Error, Result};
use crate::exact::{binomial, Monomial, Polynomial, Rational};
use crate::hilbert::{is_o_sequence_values, HilbertFunction};

fn c(n: i64, k: i64) -> i64 {
    binomial(n, k)
}

fn grassmannian_dim(k: i64, n: i64) -> i64 {
    k * (n - k)
}

fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Negligible,
    Violating,
}

/// A locus dimension against the expected dimension.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MarginReport {
    pub subject: String,
    pub locus: i64,
    pub expected: i64,
    pub margin: i64,
    pub verdict: Verdict,
}

impl MarginReport {
    pub fn new(subject: impl Into<String>, locus: i64, expected: i64) -> Self {
        let margin = locus - expected;
        let verdict = if margin > 0 { Verdict::Violating } else { Verdict::Negligible };
        MarginReport { subject: subject.into(), locus, expected, margin, verdict }
    }

    pub fn is_violating(&self) -> bool {
        self.verdict == Verdict::Violating
    }
}

/// Dimension of the locus of local Gorenstein algebras with Hilbert
/// function `(1, n, b, 1, ..., 1)` of socle degree `s`.
pub fn gorenstein_locus_dim(n: i64, b: i64, s: i64) -> Result<i64> {
    if s < 3 || b < 1 || b > n {
        return Err(domain(format!("gorenstein locus needs s >= 3 and 1 <= b <= n, got n={n} b={b} s={s}")));
    }
    Ok((n - 1) * (s - 3) + (n - b) * b + c(b + 2, 3) - 1 + c(n + 2, 2) - (1 + n + b))
}

/// Splits `(1, n, b, 1, ..., 1)` into `(n, b, s)`.
fn h3eq1_shape(h: &HilbertFunction, n: i64) -> Result<(i64, i64)> {
    let v = h.values();
    if v.len() < 4 || v[1] as i64 != n || v[3..].iter().any(|&x| x != 1) {
        return Err(Error::Inadmissible(v.to_vec()));
    }
    Ok((v[2] as i64, v.len() as i64 - 1))
}

/// Bound for local algebras with `H = (1, n, b, 1, ..., 1)` and `tau <= 2`.
/// Either the dual socle generator of degree two is minimal, and the algebra
/// is a Gorenstein algebra of `H - T^2` plus a choice of quadric, or it is
/// not and the algebra is Gorenstein with Hilbert function `H`.
pub fn h3eq1_bound(h: &HilbertFunction, n: i64) -> Result<i64> {
    let (b, s) = h3eq1_shape(h, n)?;
    let mut best: Option<i64> = None;
    if b >= 2 && b - 1 <= n {
        let with_quadric = gorenstein_locus_dim(n, b - 1, s)? + c(n + 1, 2) - b - 1;
        best = Some(with_quadric);
    }
    if b <= n {
        let gor = gorenstein_locus_dim(n, b, s)?;
        best = Some(best.map_or(gor, |x| x.max(gor)));
    }
    best.ok_or_else(|| domain(format!("no branch applies to {h} with n={n}")))
}

/// Checks every `H = (1, n, b, 1)` with `sum H <= sum_cap` and `b <= n+1`.
/// Longer tails of ones raise the bound and the expected dimension equally,
/// so socle degree three suffices.
pub fn check_h3eq1_negligible(sum_cap: u64) -> Vec<MarginReport> {
    let mut out = Vec::new();
    let cap = sum_cap as i64;
    for n in 1..=cap - 3 {
        for b in 1..=n + 1 {
            if n + b + 2 > cap || !is_o_sequence_values(&[1, n as u64, b as u64, 1]) {
                continue;
            }
            let h = HilbertFunction::new(vec![1, n as u64, b as u64, 1]).expect("valid shape");
            let Ok(bound) = h3eq1_bound(&h, n) else { continue };
            let k = n + b + 2;
            out.push(MarginReport::new(h.to_string(), bound, (k - 1) * (n - 1)));
        }
    }
    out
}

/// Hilbert function `(1, n, 2, ..., 2, 1, ..., 1)` with `H(i) = 2` exactly
/// for `2 <= i <= t` and socle degree `s`.
pub fn h2eq2_hilbert(n: usize, s: usize, t: usize) -> Result<HilbertFunction> {
    if n < 2 || t < 1 || t > s || s < 2 {
        return Err(domain(format!("need n >= 2 and 1 <= t <= s, s >= 2; got n={n} s={s} t={t}")));
    }
    let mut v = vec![1, n as u64];
    v.extend((2..=s).map(|i| if i <= t { 2 } else { 1 }));
    HilbertFunction::new(v)
}

/// Inverse system `y1^s, y1^(t-1) y2, y3, ..., yn`.
pub fn h2eq2_inverse_system(n: usize, s: usize, t: usize) -> Result<InverseSystem> {
    h2eq2_hilbert(n, s, t)?;
    let mut top = vec![0u32; n];
    top[0] = s as u32;
    let mut gens = vec![Polynomial::monomial(Monomial::new(top))];
    let mut e = vec![0u32; n];
    e[0] = t as u32 - 1;
    e[1] = 1;
    gens.push(Polynomial::monomial(Monomial::new(e)));
    gens.extend((2..n).map(|i| Polynomial::var(n, i)));
    InverseSystem::new(n, gens)
}

/// Nonnegative tangent series of the algebra dual to
/// `y1^s, y1^(t-1) y2, y3, ..., yn`, as coefficients of `T^0..T^(s-2)`:
/// `T^(s-t-1) + c (T^(t-2) + T^(s-2)) + (n-1) sum_{i=2}^s H(i) T^(i-2)`
/// with `c = C(n+1,2) - 2 - (n-1)` and negative powers dropped.
pub fn h2eq2_tangent_series(n: usize, s: usize, t: usize) -> Result<Vec<u64>> {
    let h = h2eq2_hilbert(n, s, t)?;
    let (ni, si, ti) = (n as i64, s as i64, t as i64);
    let mut series = vec![0i64; s - 1];
    let mut add = |deg: i64, v: i64| {
        if deg >= 0 {
            series[deg as usize] += v;
        }
    };
    add(si - ti - 1, 1);
    let quad = c(ni + 1, 2) - 2 - (ni - 1);
    add(ti - 2, quad);
    add(si - 2, quad);
    for i in 2..=s {
        add(i as i64 - 2, (ni - 1) * h.get(i) as i64);
    }
    Ok(series.into_iter().map(|x| x as u64).collect())
}

/// Dimension of a fiber of the associated-graded map over `(1, n, a, b)`.
pub fn fiber_dim(n: i64, a: i64, b: i64) -> Result<i64> {
    let quads = c(n + 1, 2);
    if a < 0 || a > quads || b < 0 {
        return Err(domain(format!("(1,{n},{a},{b}) is not admissible")));
    }
    Ok((quads - a) * b)
}

/// Target dimension `N(tau, k, n)` above which a generic map is
/// `k`-regular.
#[allow(non_snake_case)]
pub fn N_bound(tau: u64, k: u64, n: u64) -> Result<u64> {
    if tau == 0 || k == 0 || n == 0 {
        return Err(domain("tau, k and n must be positive"));
    }
    if k <= 8 || (tau <= 2 && k <= 11) {
        Ok((n - 1) * (k - 1) + tau * k)
    } else {
        Ok(k * n - 1 + tau * k)
    }
}

/// `max_i (tau i - 1 + dims[i-1])` over `1 <= i <= k`.
pub fn areole_bound(tau: u64, k: usize, dims: &[u64]) -> Result<u64> {
    if k == 0 || dims.len() != k {
        return Err(domain(format!("expected {k} locus dimensions, got {}", dims.len())));
    }
    Ok(dims.iter().enumerate().map(|(i, d)| tau * (i as u64 + 1) - 1 + d).max().unwrap())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CounterexampleKind {
    #[serde(rename = "tau_geq_3")]
    TauGeq3,
    #[serde(rename = "tau_1")]
    Tau1,
    #[serde(rename = "tau_2")]
    Tau2,
}

impl CounterexampleKind {
    pub const ALL: [CounterexampleKind; 3] = [CounterexampleKind::TauGeq3, CounterexampleKind::Tau1, CounterexampleKind::Tau2];

    pub fn min_n(self) -> i64 {
        match self {
            CounterexampleKind::TauGeq3 | CounterexampleKind::Tau2 => 2,
            CounterexampleKind::Tau1 => 1,
        }
    }
}

impl fmt::Display for CounterexampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CounterexampleKind::TauGeq3 => "tau_geq_3",
            CounterexampleKind::Tau1 => "tau_1",
            CounterexampleKind::Tau2 => "tau_2",
        })
    }
}

impl FromStr for CounterexampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau_geq_3" => Ok(CounterexampleKind::TauGeq3),
            "tau_1" => Ok(CounterexampleKind::Tau1),
            "tau_2" => Ok(CounterexampleKind::Tau2),
            other => Err(domain(format!("unknown counterexample kind {other:?}"))),
        }
    }
}

/// Margin of the explicit non-negligible loci:
/// - `tau_geq_3`: `H = (1, n, 3)`, parametrized by `Gr(3, C(n+1,2))`;
/// - `tau_1`: Gorenstein `H = (1, n, n, 1)`;
/// - `tau_2`: `H = (1, n, n+1, 1)` from a general cubic and quadric, i.e.
///   homogeneous choices `C(n+2,3) - 1 + C(n+1,2) - n - 1` plus the fiber.
pub fn counterexample_margin(kind: CounterexampleKind, n: i64) -> Result<MarginReport> {
    if n < kind.min_n() {
        return Err(domain(format!("{kind} needs n >= {}", kind.min_n())));
    }
    let quads = c(n + 1, 2);
    let (h, locus) = match kind {
        CounterexampleKind::TauGeq3 => (vec![1, n, 3], 3 * (quads - 3)),
        CounterexampleKind::Tau1 => (vec![1, n, n, 1], gorenstein_locus_dim(n, n, 3)?),
        CounterexampleKind::Tau2 => {
            let graded = c(n + 2, 3) - 1 + quads - n - 1;
            (vec![1, n, n + 1, 1], graded + fiber_dim(n, n + 1, 1)?)
        }
    };
    let k: i64 = h.iter().sum();
    let label = format!("{kind} H=({})", h.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    Ok(MarginReport::new(label, locus, (n - 1) * (k - 1)))
}

/// The closed form `C(n-1,2) - 6` commonly quoted for the `tau_geq_3`
/// margin. It disagrees with the direct subtraction, e.g. `0` vs `4` at
/// `n = 5`.
pub fn quoted_tau_geq_3_margin(n: i64) -> i64 {
    c(n - 1, 2) - 6
}

/// The intermediate `C(n+2,3) - 1 + C(n+2,2) - n(2n-1)` quoted for the
/// `tau_1` margin. It does not equal the cubic `n(n-1)(n-5)/6`.
pub fn quoted_tau_1_intermediate(n: i64) -> i64 {
    c(n + 2, 3) - 1 + c(n + 2, 2) - n * (2 * n - 1)
}

/// `n(n-1)(n-5)/6`, exact since `n(n-1)(n-5)` is divisible by 6.
pub fn tau_1_cubic(n: i64) -> Rational {
    Rational::new(n * (n - 1) * (n - 5), 6)
}

/// The four cell-dimension bounds available from tangent data and
/// optional base and fiber dimensions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub t_zero: u64,
    pub t_pos: u64,
    pub base_dim: Option<u64>,
    pub fiber_dim: Option<u64>,
    pub tangent: u64,
    pub base_and_tangent_to_fiber: Option<u64>,
    pub tangent_to_base_and_fiber: Option<u64>,
    pub base_and_fiber: Option<u64>,
    pub estimate: u64,
}

pub fn dimension_estimates(t_zero: u64, t_pos: u64, base_dim: Option<u64>, fiber_dim: Option<u64>) -> DimensionEstimate {
    let tangent = t_zero + t_pos;
    let base_and_tangent_to_fiber = base_dim.map(|b| b + t_pos);
    let tangent_to_base_and_fiber = fiber_dim.map(|f| t_zero + f);
    let base_and_fiber = base_dim.zip(fiber_dim).map(|(b, f)| b + f);
    let estimate = [Some(tangent), base_and_tangent_to_fiber, tangent_to_base_and_fiber, base_and_fiber]
        .into_iter()
        .flatten()
        .min()
        .unwrap();
    DimensionEstimate {
        t_zero,
        t_pos,
        base_dim,
        fiber_dim,
        tangent,
        base_and_tangent_to_fiber,
        tangent_to_base_and_fiber,
        base_and_fiber,
        estimate,
    }
}

/// Dimensions of the four loci of graded algebras with `H = (1, n, 3, 2, 1)`:
/// 1. `l1^4, l2^3, q`: `Gr(1,n)^2 x Gr(1, C(n+1,2) - 2)`;
/// 2. binary quartic with two second partials, and `q`: a divisor in
///    `Gr(2,n) x P^4 x Gr(1, C(n+1,2) - 2)`;
/// 3. general binary quartic: `Gr(2,n) x P^4`;
/// 4. `l^4` and a cubic whose partials with `l^2` span three dimensions:
///    at most `3n - 2`.
pub fn h1n321_locus_dims(n: i64) -> Result<[i64; 4]> {
    if n < 2 {
        return Err(domain("(1,n,3,2,1) needs n >= 2"));
    }
    let quad_choice = grassmannian_dim(1, c(n + 1, 2) - 2);
    Ok([
        2 * grassmannian_dim(1, n) + quad_choice,
        grassmannian_dim(2, n) + 4 + quad_choice - 1,
        grassmannian_dim(2, n) + 4,
        3 * n - 2,
    ])
}

/// Dimensions of the five loci of graded algebras with `H = (1, 3, 4, 2, 1)`.
pub fn h13421_locus_dims() -> [i64; 5] {
    let n = 3;
    let sym2 = c(n + 1, 2);
    [
        // l1^4, l2^3 and two quadrics independent from l1^2, l2^2
        2 * grassmannian_dim(1, n) + grassmannian_dim(2, sym2 - 2),
        // binary quartic with two second partials, two quadrics
        grassmannian_dim(2, n) + 4 + grassmannian_dim(2, sym2 - 2) - 1,
        // l^4 and a general ternary cubic modulo l^3
        grassmannian_dim(1, n) + (c(n + 2, 3) - 1) - 1,
        // general binary quartic and a quadric outside its three partials
        grassmannian_dim(2, n) + 4 + grassmannian_dim(1, sym2 - 3),
        // l^4, a non-perfect cubic and a quadric
        h1n321_locus_dims(n).expect("n = 3")[3] + 2,
    ]
}

/// Tangent inputs for the `(1, 4, 3, 2, 1)` budget: positive tangent
/// dimensions at the apolar ideals of the named systems.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct H14321Tangents {
    /// `y1^4, y2^3 + y3^3, y4`.
    pub quartic_and_cubic: u64,
    /// `y1^4 + y2^4, y3^2, y4`.
    pub quartic_sum: u64,
    /// `y1^3 y2, y3^2, y4`.
    pub quartic_mixed: u64,
    /// `y1^4, y2^3, y3^2, y4`.
    pub powers_square: u64,
    /// `y1^4, y2^3, y3 y4`.
    pub powers_product: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BudgetLine {
    pub case: String,
    pub base: i64,
    pub fiber: i64,
    pub total: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Budget {
    pub lines: Vec<BudgetLine>,
    pub bound: i64,
}

impl Budget {
    pub fn holds(&self) -> bool {
        self.lines.iter().all(|l| l.total <= self.bound)
    }
}

/// Base-plus-fiber budget for `H = (1, 4, 3, 2, 1)` with `tau = 2`, against
/// `(n-1)(k-1) = 30`.
pub fn h14321_budget(t: &H14321Tangents) -> Budget {
    let n = 4;
    let loci = h1n321_locus_dims(n).expect("n = 4");
    // quadratic part modulo the partials of a binary quartic, and a cubic
    // part in span(y1..y4) k[y1,y2]_2
    let binary_fiber = (c(n + 1, 2) - 3) + (4 + (n - 2) * 3);
    let line = |case: &str, base: i64, fiber: i64| BudgetLine { case: case.into(), base, fiber, total: base + fiber };
    let sums = t.quartic_sum.max(t.quartic_mixed) as i64;
    Budget {
        lines: vec![
            line("general binary quartic", loci[2], binary_fiber),
            line("perfect quartic and cubic", loci[3], t.quartic_and_cubic as i64),
            line("binary quartic and quadric", loci[1], sums),
            line("powers with special quadric", loci[0] - 1, t.powers_square as i64),
            line("powers with general quadric", loci[0], t.powers_product as i64),
        ],
        bound: (n - 1) * 10,
    }
}
