use std::collections::HashSet;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exact::{monomial_basis, Monomial};
use crate::hilbert::{is_o_sequence, HilbertFunction};

/// All strongly stable ideals of colength `k` in `n` variables, sorted.
///
/// The staircase of a strongly stable ideal is closed under the moves
/// `x_i -> x_j` for `i < j`. It is grown one degree slice at a time: the
/// candidates in degree `d` are monomials whose degree `d-1` divisors all
/// lie in the previous slice, and a slice is a move-closed subset of them.
pub fn enumerate_strongly_stable(n: usize, k: u64) -> Vec<MonomialIdeal> {
    assert!(n >= 1 && k >= 1, "need n >= 1 and k >= 1");
    let mut found = Vec::new();
    let mut stair = vec![Monomial::one(n)];
    grow(n, &[Monomial::one(n)], k as usize - 1, &mut stair, &mut found);
    let mut out: Vec<MonomialIdeal> = found
        .iter()
        .map(|s| MonomialIdeal::from_staircase(n, s).expect("slices keep staircases closed"))
        .collect();
    out.sort();
    out
}

fn grow(n: usize, prev: &[Monomial], rem: usize, stair: &mut Vec<Monomial>, found: &mut Vec<Vec<Monomial>>) {
    if rem == 0 {
        found.push(stair.clone());
        return;
    }
    let prev_set: HashSet<&Monomial> = prev.iter().collect();
    let d = prev[0].degree() + 1;
    // ascending order puts every move target before its source
    let mut cands: Vec<Monomial> = monomial_basis(n, d)
        .into_iter()
        .filter(|m| (0..n).all(|i| m.div_var(i).is_none_or(|q| prev_set.contains(&q))))
        .collect();
    cands.sort();
    let targets: Vec<Vec<usize>> = cands
        .iter()
        .map(|m| {
            // adjacent moves x_i -> x_{i+1}; None marks a target outside the candidates
            (0..n.saturating_sub(1))
                .filter_map(|i| m.div_var(i).map(|q| q.mul_var(i + 1)))
                .map(|t| cands.iter().position(|c| *c == t).unwrap_or(usize::MAX))
                .collect()
        })
        .collect();
    let mut chosen = vec![false; cands.len()];
    choose(n, &cands, &targets, 0, 0, rem, &mut chosen, stair, found);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    n: usize,
    cands: &[Monomial],
    targets: &[Vec<usize>],
    at: usize,
    size: usize,
    rem: usize,
    chosen: &mut Vec<bool>,
    stair: &mut Vec<Monomial>,
    found: &mut Vec<Vec<Monomial>>,
) {
    if at == cands.len() {
        if size == 0 {
            return;
        }
        let slice: Vec<Monomial> =
            cands.iter().zip(chosen.iter()).filter(|(_, &c)| c).map(|(m, _)| m.clone()).collect();
        let base = stair.len();
        stair.extend(slice.iter().cloned());
        grow(n, &slice, rem - size, stair, found);
        stair.truncate(base);
        return;
    }
    choose(n, cands, targets, at + 1, size, rem, chosen, stair, found);
    if size < rem && targets[at].iter().all(|&t| t != usize::MAX && chosen[t]) {
        chosen[at] = true;
        choose(n, cands, targets, at + 1, size + 1, rem, chosen, stair, found);
        chosen[at] = false;
    }
}

/// The lexicographic segment ideal with Hilbert function `h`: its
/// staircase in degree `d` is the `h(d)` lex-smallest monomials.
pub fn lex_segment_ideal(h: &HilbertFunction, n: usize) -> Result<MonomialIdeal> {
    if !is_o_sequence(h) || h.get(1) > n as u64 {
        return Err(Error::Inadmissible(h.values().to_vec()));
    }
    let mut stair = Vec::new();
    for (d, &count) in h.values().iter().enumerate() {
        let mut basis = monomial_basis(n, d as u32);
        basis.sort_by(|a, b| a.cmp_lex(b));
        stair.extend(basis.into_iter().take(count as usize));
    }
    MonomialIdeal::from_staircase(n, &stair).map_err(|_| Error::Inadmissible(h.values().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_three_vars() {
        let counts: Vec<usize> = (1..=8).map(|k| enumerate_strongly_stable(3, k).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 4, 6, 9, 12]);
    }

    #[test]
    fn all_outputs_are_strongly_stable_with_right_colength() {
        for k in 1..=8 {
            for i in enumerate_strongly_stable(4, k) {
                assert!(i.is_strongly_stable(), "{i}");
                assert_eq!(i.colength(), super::super::Colength::Finite(k));
            }
        }
    }

    #[test]
    fn lex_segment_examples() {
        let h = HilbertFunction::new(vec![1, 1, 1]).unwrap();
        let lex = lex_segment_ideal(&h, 2).unwrap();
        assert_eq!(lex.generator_list(), "x1, x2^3");
        let bad = HilbertFunction::new(vec![1, 2, 4]).unwrap();
        assert!(lex_segment_ideal(&bad, 3).is_err());
        let wide = HilbertFunction::new(vec![1, 3]).unwrap();
        assert!(lex_segment_ideal(&wide, 2).is_err());
    }
}
