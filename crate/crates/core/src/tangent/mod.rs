//! Graded tangent spaces `Hom_R(I, R/I)_d` of homogeneous ideals.

mod graded;
mod kernel;
mod syzygy;

pub use graded::{GradedIdeal, Piece, DEFAULT_DEGREE_CAP};
pub use kernel::{hom_dim_kernel, KernelTangent};
pub use syzygy::hom_dim_syzygy;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::{EchelonBasis, Monomial, Rational};
use crate::ideal::MonomialIdeal;

/// How an ideal is shown in reports: variable count and generator strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdealSummary {
    pub n: usize,
    pub gens: Vec<String>,
}

/// Something whose graded tangent dimensions can be computed.
pub trait TangentSource {
    fn summary(&self) -> IdealSummary;
    fn colength(&self) -> u64;
    fn socle_degree(&self) -> usize;
    /// `dim Hom_R(I, R/I)_d` for each `d` in `lo..=hi`.
    fn hom_dims(&self, lo: i64, hi: i64) -> Vec<u64>;
}

impl TangentSource for MonomialIdeal {
    fn summary(&self) -> IdealSummary {
        IdealSummary { n: self.n(), gens: self.generators().iter().map(Monomial::to_string).collect() }
    }

    fn colength(&self) -> u64 {
        self.hilbert_function().expect("finite colength").sum()
    }

    fn socle_degree(&self) -> usize {
        MonomialIdeal::socle_degree(self).expect("finite colength")
    }

    fn hom_dims(&self, lo: i64, hi: i64) -> Vec<u64> {
        (lo..=hi).map(|d| hom_dim_syzygy(self, d).expect("finite colength")).collect()
    }
}

impl TangentSource for GradedIdeal {
    fn summary(&self) -> IdealSummary {
        IdealSummary { n: self.n(), gens: self.generator_strings('x') }
    }

    fn colength(&self) -> u64 {
        GradedIdeal::colength(self)
    }

    fn socle_degree(&self) -> usize {
        GradedIdeal::socle_degree(self)
    }

    fn hom_dims(&self, lo: i64, hi: i64) -> Vec<u64> {
        let mut kt = KernelTangent::new(self);
        (lo..=hi).map(|d| kt.hom_dim(d)).collect()
    }
}

/// Tangent dimensions over the window `[-(s+1), s]` and the statistics
/// derived from them.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TangentReport {
    pub ideal: IdealSummary,
    pub k: u64,
    pub series: BTreeMap<i64, u64>,
    #[serde(rename = "T_nonneg")]
    pub t_nonneg: u64,
    #[serde(rename = "T_pos")]
    pub t_pos: u64,
    #[serde(rename = "T_zero")]
    pub t_zero: u64,
    pub expected: u64,
    #[serde(rename = "D")]
    pub d: i64,
}

impl TangentReport {
    pub fn from_series(ideal: IdealSummary, k: u64, series: BTreeMap<i64, u64>, expected: u64) -> Self {
        let t_pos: u64 = series.range(1..).map(|(_, v)| v).sum();
        let t_zero = series.get(&0).copied().unwrap_or(0);
        let t_nonneg = t_pos + t_zero;
        TangentReport { ideal, k, series, t_nonneg, t_pos, t_zero, expected, d: t_nonneg as i64 - expected as i64 }
    }

    /// Total tangent dimension over the whole window.
    pub fn total(&self) -> u64 {
        self.series.values().sum()
    }

    /// The positive part as a polynomial in `T`, e.g. `5T+3T^2`.
    pub fn positive_series_string(&self) -> String {
        let parts: Vec<String> = self
            .series
            .range(1..)
            .filter(|(_, &v)| v > 0)
            .map(|(&d, &v)| {
                let coeff = if v == 1 { String::new() } else { v.to_string() };
                if d == 1 {
                    format!("{coeff}T")
                } else {
                    format!("{coeff}T^{d}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// Full report for `ideal` with threshold `expected`.
pub fn tangent_report<S: TangentSource + ?Sized>(ideal: &S, expected: u64) -> TangentReport {
    let s = ideal.socle_degree() as i64;
    let dims = ideal.hom_dims(-(s + 1), s);
    let series = (-(s + 1)..=s).zip(dims).collect();
    TangentReport::from_series(ideal.summary(), ideal.colength(), series, expected)
}

/// Only the nonnegative part, which is all the threshold tests need.
pub fn nonnegative_tangent_dim<S: TangentSource + ?Sized>(ideal: &S) -> u64 {
    ideal.hom_dims(0, ideal.socle_degree() as i64).iter().sum()
}

/// Socle dimension `sum_e dim { a in (R/I)_e : x_j a in I for all j }`.
pub fn graded_socle_dimension(ideal: &GradedIdeal) -> u64 {
    let n = ideal.n();
    let mut total = 0;
    for e in 0..=ideal.socle_degree() as i64 {
        let src = ideal.piece(e).expect("piece within socle degree");
        let dst = ideal.piece(e + 1).expect("piece up to s + 1");
        let qsrc: Vec<&Monomial> = src.quotient_monomials().collect();
        let qd = dst.quotient_dim();
        // columns: quotient basis of degree e; rows: (variable, target coordinate)
        let mut image = EchelonBasis::new(qsrc.len());
        let mut rows = vec![vec![Rational::ZERO; qsrc.len()]; n * qd];
        for (c, m) in qsrc.iter().enumerate() {
            for j in 0..n {
                for (t, v) in dst.normal_form(&m.mul_var(j)) {
                    rows[j * qd + t][c] = v.clone();
                }
            }
        }
        for r in rows {
            image.insert(r);
        }
        total += (qsrc.len() - image.rank()) as u64;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn worked_example_report() {
        let i = mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        let r = tangent_report(&i, 18);
        assert_eq!(r.positive_series_string(), "5T+3T^2");
        assert_eq!(r.t_pos, 8);
        assert_eq!(*r.series.keys().next().unwrap(), -5);
        assert_eq!(*r.series.keys().last().unwrap(), 4);
    }

    #[test]
    fn curvilinear_is_on_threshold() {
        for k in 2..=11u32 {
            let i = MonomialIdeal::new(3, vec![Monomial::var(3, 0), Monomial::var(3, 1), Monomial::new(vec![0, 0, k])])
                .unwrap();
            let r = tangent_report(&i, 2 * (k as u64 - 1));
            assert_eq!(r.d, 0, "k={k}");
        }
    }

    #[test]
    fn socle_dimensions() {
        let m2 = GradedIdeal::from_monomial(&mono("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2", 3)).unwrap();
        assert_eq!(graded_socle_dimension(&m2), 3);
        let w = GradedIdeal::from_monomial(&mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3)).unwrap();
        assert_eq!(graded_socle_dimension(&w), 2);
        let c = GradedIdeal::from_monomial(&mono("x1, x2, x3^6", 3)).unwrap();
        assert_eq!(graded_socle_dimension(&c), 1);
    }

    #[test]
    fn report_json_shape() {
        let i = mono("x1, x2, x3^2", 3);
        let v: serde_json::Value = serde_json::to_value(tangent_report(&i, 2)).unwrap();
        for key in ["ideal", "series", "T_nonneg", "T_pos", "T_zero", "D"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert!(v["series"].get("-1").is_some());
    }
}
