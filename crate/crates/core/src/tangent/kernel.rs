use std::collections::HashMap;

use super::graded::GradedIdeal;
use crate::exact::{monomial_basis, EchelonBasis, Matrix, Monomial, Rational};

/// Kernel-based tangent computation for arbitrary homogeneous ideals.
///
/// Unknowns are the coordinates of `phi(g_i)` in `(R/I)_{e_i + d}` for the
/// minimal generators `g_i`. For each degree `e`, every linear relation
/// `sum r_{i,u} u g_i = 0` with `deg u = e - e_i` must map to zero in
/// `(R/I)_{e + d}`. The relation spaces depend only on `e`, so they are
/// computed once and shared across degrees `d`.
/// A relation as sparse `(generator, multiplier, coefficient)` terms.
type Relation = Vec<(usize, Monomial, Rational)>;

pub struct KernelTangent<'a> {
    ideal: &'a GradedIdeal,
    gen_degrees: Vec<u32>,
    /// `relations[e]`: kernel vectors of `(i, u) -> u g_i`.
    relations: HashMap<u32, Vec<Relation>>,
}

impl<'a> KernelTangent<'a> {
    pub fn new(ideal: &'a GradedIdeal) -> Self {
        let gen_degrees = ideal.minimal_generators().iter().map(|g| g.degree().unwrap()).collect();
        KernelTangent { ideal, gen_degrees, relations: HashMap::new() }
    }

    fn ensure_relations(&mut self, e: u32) {
        let ideal = self.ideal;
        let gen_degrees = &self.gen_degrees;
        self.relations.entry(e).or_insert_with(|| {
            let n = ideal.n();
            let target = monomial_basis(n, e);
            let index: HashMap<&Monomial, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut cols: Vec<(usize, Monomial)> = Vec::new();
            for (i, &ei) in gen_degrees.iter().enumerate() {
                if ei <= e {
                    cols.extend(monomial_basis(n, e - ei).into_iter().map(|u| (i, u)));
                }
            }
            let mut m = Matrix::zeros(target.len(), cols.len());
            for (c, (i, u)) in cols.iter().enumerate() {
                for (mono, coef) in ideal.minimal_generators()[*i].terms() {
                    m.set(index[&mono.mul(u)], c, coef.clone());
                }
            }
            m.kernel_basis()
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(c, x)| (cols[c].0, cols[c].1.clone(), x))
                        .collect()
                })
                .collect()
        });
    }

    /// `dim Hom_R(I, R/I)_d`.
    pub fn hom_dim(&mut self, d: i64) -> u64 {
        let ideal = self.ideal;
        let s = ideal.socle_degree() as i64;
        // unknown layout: generator i owns a contiguous range of quotient coordinates
        let mut offsets = Vec::with_capacity(self.gen_degrees.len());
        let mut unknowns = 0usize;
        for &ei in &self.gen_degrees {
            offsets.push(unknowns);
            unknowns += ideal.quotient_dim(ei as i64 + d);
        }
        if unknowns == 0 {
            return 0;
        }
        let mut span = EchelonBasis::new(unknowns);
        // Minimal first syzygies of an ideal with socle degree s live in
        // degrees <= s + 2; relations above that only add implied rows.
        let top = (s - d).min(s + 2);
        let emin = self.gen_degrees.iter().copied().min().unwrap_or(0) as i64;
        for e in emin.max(-d).max(0)..=top {
            let Some(target) = ideal.piece(e + d) else { continue };
            if target.quotient_dim() == 0 {
                continue;
            }
            let qdim = target.quotient_dim();
            let sources: Vec<Vec<Monomial>> = self
                .gen_degrees
                .iter()
                .map(|&ei| {
                    ideal.piece(ei as i64 + d).map_or(Vec::new(), |p| p.quotient_monomials().cloned().collect())
                })
                .collect();
            self.ensure_relations(e as u32);
            for rel in &self.relations[&(e as u32)] {
                let mut rows = vec![vec![Rational::ZERO; unknowns]; qdim];
                for (i, u, r) in rel {
                    for (bpos, b) in sources[*i].iter().enumerate() {
                        for (t, v) in target.normal_form(&u.mul(b)) {
                            rows[*t][offsets[*i] + bpos] += &(r * v);
                        }
                    }
                }
                for row in rows {
                    span.insert(row);
                    if span.rank() == unknowns {
                        return 0;
                    }
                }
            }
        }
        (unknowns - span.rank()) as u64
    }
}

/// `dim Hom_R(I, R/I)_d` for a homogeneous ideal, by the kernel method.
pub fn hom_dim_kernel(ideal: &GradedIdeal, d: i64) -> u64 {
    KernelTangent::new(ideal).hom_dim(d)
}
