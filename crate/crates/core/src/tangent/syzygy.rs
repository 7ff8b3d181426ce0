use std::collections::BTreeMap;

use crate::error::Result;
use crate::exact::Monomial;
use crate::ideal::MonomialIdeal;

/// `dim Hom_R(I, R/I)_d` for a monomial ideal, from the pairwise syzygies
/// `(lcm/m_i) e_i - (lcm/m_j) e_j`.
///
/// Unknowns are the coordinates of `phi(m_i)` on standard monomials `b` of
/// degree `deg m_i + d`. Every constraint is homogeneous for the fine
/// grading by the shift `a = b - m_i` in `Z^n`, so the system splits into
/// blocks. Inside a block the unknowns are the active generators `i` (with
/// `m_i + a` standard), and pair `(i, j)` contributes a row whenever
/// `lcm(m_i, m_j) + a` is standard: `+1` at `i` if active, `-1` at `j` if
/// active.
pub fn hom_dim_syzygy(ideal: &MonomialIdeal, d: i64) -> Result<u64> {
    let stair = ideal.hilbert_function().map(|_| ideal.staircase().unwrap())?;
    let gens = ideal.generators();
    let mut blocks: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    for (i, g) in gens.iter().enumerate() {
        let target = g.degree() as i64 + d;
        for b in stair.iter().filter(|b| b.degree() as i64 == target) {
            let a: Vec<i64> = b.exps().iter().zip(g.exps()).map(|(&x, &y)| x as i64 - y as i64).collect();
            blocks.entry(a).or_default().push(i);
        }
    }
    let lcms: Vec<Vec<Monomial>> =
        gens.iter().map(|gi| gens.iter().map(|gj| gi.lcm(gj)).collect()).collect();
    let mut total = 0u64;
    for (a, active) in &blocks {
        let mut is_active = vec![false; gens.len()];
        for &i in active {
            is_active[i] = true;
        }
        let mut dsu = SignedGraphRank::new(gens.len());
        for &i in active {
            for j in 0..gens.len() {
                if j == i || (is_active[j] && j < i) {
                    continue;
                }
                if shifted_is_standard(ideal, &lcms[i][j], a) {
                    if is_active[j] {
                        dsu.union(i, j);
                    } else {
                        dsu.ground(i);
                    }
                }
            }
        }
        total += active.iter().filter(|&&i| dsu.is_free_root(i)).count() as u64;
    }
    Ok(total)
}

fn shifted_is_standard(ideal: &MonomialIdeal, m: &Monomial, a: &[i64]) -> bool {
    let mut exps = Vec::with_capacity(a.len());
    for (&e, &s) in m.exps().iter().zip(a) {
        let v = e as i64 + s;
        if v < 0 {
            return false;
        }
        exps.push(v as u32);
    }
    ideal.is_standard(&Monomial::new(exps))
}

/// Rank bookkeeping for a matrix whose rows are `e_i - e_j` or `±e_i`.
/// Such rows span, on each connected component of the graph with edges
/// `{i, j}`, the sum-zero subspace, or the whole coordinate space of the
/// component once any row `±e_i` touches it. The nullity is the number of
/// components without such a row.
struct SignedGraphRank {
    parent: Vec<usize>,
    grounded: Vec<bool>,
}

impl SignedGraphRank {
    fn new(n: usize) -> Self {
        SignedGraphRank { parent: (0..n).collect(), grounded: vec![false; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[rb] = ra;
            self.grounded[ra] |= self.grounded[rb];
        }
    }

    fn ground(&mut self, a: usize) {
        let r = self.find(a);
        self.grounded[r] = true;
    }

    /// True for exactly one member of each ungrounded component.
    fn is_free_root(&mut self, a: usize) -> bool {
        self.find(a) == a && !self.grounded[a]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Matrix, Rational};

    fn mono(s: &str, n: usize) -> MonomialIdeal {
        MonomialIdeal::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn worked_example_degrees() {
        let i = mono("x1^3, x2^2, x1*x3, x1*x2, x3^4", 3);
        assert_eq!(hom_dim_syzygy(&i, 1).unwrap(), 5);
        assert_eq!(hom_dim_syzygy(&i, 2).unwrap(), 3);
        for d in 3..8 {
            assert_eq!(hom_dim_syzygy(&i, d).unwrap(), 0);
        }
    }

    /// The same system assembled as one dense matrix over all unknowns.
    fn dense(ideal: &MonomialIdeal, d: i64) -> u64 {
        let stair = ideal.staircase().unwrap();
        let gens = ideal.generators();
        let mut unknowns = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            for b in stair.iter().filter(|b| b.degree() as i64 == g.degree() as i64 + d) {
                unknowns.push((i, b.clone()));
            }
        }
        let mut rows = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let l = gens[i].lcm(&gens[j]);
                let ui = gens[i].quotient_of(&l).unwrap();
                let uj = gens[j].quotient_of(&l).unwrap();
                for c in stair {
                    let mut row = vec![Rational::ZERO; unknowns.len()];
                    for (col, (g, b)) in unknowns.iter().enumerate() {
                        if *g == i && ui.mul(b) == *c {
                            row[col] += &Rational::ONE;
                        }
                        if *g == j && uj.mul(b) == *c {
                            row[col] -= &Rational::ONE;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let r = Matrix::from_rows(rows, unknowns.len()).rank();
        (unknowns.len() - r) as u64
    }

    #[test]
    fn blocks_agree_with_dense_system() {
        for k in 1..=6 {
            for ideal in crate::ideal::enumerate_monomial_ideals(3, k).unwrap() {
                let s = ideal.socle_degree().unwrap() as i64;
                for d in -(s + 1)..=s + 1 {
                    assert_eq!(hom_dim_syzygy(&ideal, d).unwrap(), dense(&ideal, d), "{ideal} d={d}");
                }
            }
        }
    }
}
