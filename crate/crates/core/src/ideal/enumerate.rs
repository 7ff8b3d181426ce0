use std::collections::HashSet;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::exact::Monomial;

pub const DEFAULT_NODE_CAP: u64 = 10_000_000;

/// All monomial ideals of colength `k` in `n` variables, sorted.
pub fn enumerate_monomial_ideals(n: usize, k: u64) -> Result<Vec<MonomialIdeal>> {
    enumerate_monomial_ideals_capped(n, k, DEFAULT_NODE_CAP)
}

/// Reverse search over staircases. The parent of a staircase drops its
/// largest removable corner; a child is visited only from its parent, so
/// each staircase is reached exactly once.
pub fn enumerate_monomial_ideals_capped(n: usize, k: u64, cap: u64) -> Result<Vec<MonomialIdeal>> {
    if n == 0 || k == 0 {
        return Err(Error::Domain("need n >= 1 and k >= 1".into()));
    }
    let mut search = Search { n, k: k as usize, cap, nodes: 0, out: Vec::new() };
    let mut stair = vec![Monomial::one(n)];
    let mut set: HashSet<Monomial> = stair.iter().cloned().collect();
    search.visit(&mut stair, &mut set)?;
    let mut out: Vec<MonomialIdeal> = search
        .out
        .iter()
        .map(|s| MonomialIdeal::from_staircase(n, s).expect("search keeps staircases closed"))
        .collect();
    out.sort();
    Ok(out)
}

struct Search {
    n: usize,
    k: usize,
    cap: u64,
    nodes: u64,
    out: Vec<Vec<Monomial>>,
}

impl Search {
    fn visit(&mut self, stair: &mut Vec<Monomial>, set: &mut HashSet<Monomial>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(Error::ResourceCap(format!(
                "monomial ideal enumeration exceeded {} search nodes",
                self.cap
            )));
        }
        if stair.len() == self.k {
            self.out.push(stair.clone());
            return Ok(());
        }
        for c in addable_corners(self.n, stair, set) {
            set.insert(c.clone());
            stair.push(c.clone());
            if largest_removable_corner(self.n, stair, set).as_ref() == Some(&c) {
                self.visit(stair, set)?;
            }
            stair.pop();
            set.remove(&c);
        }
        Ok(())
    }
}

/// Monomials outside the staircase all of whose divisors lie inside.
fn addable_corners(n: usize, stair: &[Monomial], set: &HashSet<Monomial>) -> Vec<Monomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for m in stair {
        for i in 0..n {
            let c = m.mul_var(i);
            if set.contains(&c) || !seen.insert(c.clone()) {
                continue;
            }
            if (0..n).all(|j| c.div_var(j).is_none_or(|q| set.contains(&q))) {
                out.push(c);
            }
        }
    }
    out.sort();
    out
}

fn largest_removable_corner(n: usize, stair: &[Monomial], set: &HashSet<Monomial>) -> Option<Monomial> {
    stair
        .iter()
        .filter(|m| !m.is_one() && (0..n).all(|i| !set.contains(&m.mul_var(i))))
        .max()
        .cloned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6).map(|k| enumerate_monomial_ideals(3, k).unwrap().len()).collect();
        assert_eq!(counts, [1, 3, 6, 13, 24, 48]);
        // plane partitions in two variables are integer partitions
        let counts: Vec<usize> = (1..=8).map(|k| enumerate_monomial_ideals(2, k).unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
        for k in 1..6 {
            let one = enumerate_monomial_ideals(1, k).unwrap();
            assert_eq!(one.len(), 1);
            assert_eq!(one[0].generators(), &[Monomial::new(vec![k as u32])]);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_monomial_ideals_capped(3, 8, 50), Err(Error::ResourceCap(_))));
    }
}
