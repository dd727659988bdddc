//! Finite posets: covering relations, ranks, gradedness, rank symmetry,
//! duality and isomorphism, plus the noncrossing partition lattice itself.

mod iso;
mod nc;

pub use iso::{find_isomorphism, is_self_dual, poset_isomorphic, DEFAULT_MAX_ISO_ELEMENTS};
pub use nc::{build_nc_poset, interval, nc_join, nc_meet, NcLattice, Subposet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite poset on `0..len()`, stored as up-sets with cached covers.
///
/// Ranks are either supplied by the caller (the noncrossing lattice uses
/// `n − bl(π)`) or default to the height above the minimal elements.
#[derive(Clone, Debug)]
pub struct Poset {
    up: Vec<FixedBitSet>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    rank: Vec<usize>,
}

impl Poset {
    /// Builds a poset from a reflexive, antisymmetric, transitive relation.
    pub fn from_leq(len: usize, leq: impl Fn(usize, usize) -> bool, rank: Option<Vec<usize>>) -> Self {
        let mut up = vec![FixedBitSet::with_capacity(len); len];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..len {
                if i == j || leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::from_up_sets(up, rank)
    }

    pub(crate) fn from_up_sets(up: Vec<FixedBitSet>, rank: Option<Vec<usize>>) -> Self {
        let len = up.len();
        let mut down_count = vec![0usize; len];
        for row in &up {
            for j in row.ones() {
                down_count[j] += 1;
            }
        }
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&i| (down_count[i], i));
        let mut pos = vec![0; len];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let mut upper = vec![Vec::new(); len];
        let mut lower = vec![Vec::new(); len];
        let mut dominated = FixedBitSet::with_capacity(len);
        for i in 0..len {
            let mut above: Vec<usize> = up[i].ones().filter(|&j| j != i).collect();
            above.sort_by_key(|&j| pos[j]);
            dominated.clear();
            for j in above {
                if !dominated.contains(j) {
                    upper[i].push(j);
                    lower[j].push(i);
                    dominated.union_with(&up[j]);
                }
            }
            upper[i].sort_unstable();
        }
        for l in &mut lower {
            l.sort_unstable();
        }
        let rank = rank.unwrap_or_else(|| {
            let mut height = vec![0usize; len];
            for &j in &order {
                height[j] = lower[j].iter().map(|&i| height[i] + 1).max().unwrap_or(0);
            }
            height
        });
        assert_eq!(rank.len(), len);
        Poset {
            up,
            upper,
            lower,
            rank,
        }
    }

    /// The chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Self {
        Poset::from_leq(len, |i, j| i <= j, Some((0..len).collect()))
    }

    /// `Bool(n)`: subsets of an `n`-set under inclusion; element `i` is the subset with bitmask `i`.
    pub fn boolean(n: usize) -> Self {
        let len = 1usize << n;
        Poset::from_leq(
            len,
            |i, j| i & !j == 0,
            Some((0..len).map(|i| i.count_ones() as usize).collect()),
        )
    }

    /// Componentwise order on pairs; element `(i, j)` has index `i * other.len() + j`.
    pub fn product(&self, other: &Poset) -> Self {
        let nb = other.len();
        let len = self.len() * nb;
        let rank = (0..len).map(|k| self.rank[k / nb] + other.rank[k % nb]).collect();
        Poset::from_leq(
            len,
            |x, y| self.leq(x / nb, y / nb) && other.leq(x % nb, y % nb),
            Some(rank),
        )
    }

    /// Same elements, reversed order. Ranks are mirrored.
    pub fn dual(&self) -> Self {
        let max = self.rank.iter().copied().max().unwrap_or(0);
        let min = self.rank.iter().copied().min().unwrap_or(0);
        Poset::from_leq(
            self.len(),
            |i, j| self.leq(j, i),
            Some(self.rank.iter().map(|r| max + min - r).collect()),
        )
    }

    /// The induced subposet on `members` (element `k` is `members[k]`); ranks are inherited.
    pub fn induced(&self, members: &[usize]) -> Self {
        Poset::from_leq(
            members.len(),
            |a, b| self.leq(members[a], members[b]),
            Some(members.iter().map(|&m| self.rank[m]).collect()),
        )
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn is_cover(&self, i: usize, j: usize) -> bool {
        self.upper[i].binary_search(&j).is_ok()
    }

    /// All covering pairs `(lower, upper)` in index order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.upper
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// The unique minimum, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        let mut minimal = (0..self.len()).filter(|&i| self.lower[i].is_empty());
        let first = minimal.next()?;
        minimal.next().is_none().then_some(first)
    }

    /// The unique maximum, if there is one.
    pub fn top(&self) -> Option<usize> {
        let mut maximal = (0..self.len()).filter(|&i| self.upper[i].is_empty());
        let first = maximal.next()?;
        maximal.next().is_none().then_some(first)
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// First cover across which the rank does not rise by exactly one.
    pub fn grading_witness(&self) -> Option<(usize, usize)> {
        self.covers()
            .into_iter()
            .find(|&(i, j)| self.rank[j] != self.rank[i] + 1)
    }

    pub fn graded_info(&self) -> GradedInfo {
        let witness = self.grading_witness();
        GradedInfo {
            is_graded: witness.is_none(),
            rank_of: self.rank.clone(),
            rank_vector: self.level_sizes(),
            witness,
        }
    }

    /// Number of elements at each rank from the lowest rank present to the highest.
    pub fn level_sizes(&self) -> Vec<usize> {
        let (Some(&min), Some(&max)) = (self.rank.iter().min(), self.rank.iter().max()) else {
            return Vec::new();
        };
        let mut v = vec![0; max - min + 1];
        for &r in &self.rank {
            v[r - min] += 1;
        }
        v
    }

    /// Level sizes; errors if the poset is not graded.
    pub fn rank_vector(&self) -> Result<Vec<usize>> {
        if !self.graded_info().is_graded {
            return Err(Error::NotGraded);
        }
        Ok(self.level_sizes())
    }

    /// Palindromic rank vector; errors if the poset is not graded.
    pub fn is_rank_symmetric(&self) -> Result<bool> {
        let v = self.rank_vector()?;
        Ok(v.iter().eq(v.iter().rev()))
    }

    /// Checks reflexivity, antisymmetry and transitivity of the stored relation.
    pub fn check_order_axioms(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return false;
            }
            for j in self.up[i].ones() {
                if j != i && self.leq(j, i) {
                    return false;
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of the gradedness check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedInfo {
    pub is_graded: bool,
    pub rank_of: Vec<usize>,
    pub rank_vector: Vec<usize>,
    /// A covering pair `(lower, upper)` whose ranks differ by something other than one.
    pub witness: Option<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_shape() {
        let b3 = Poset::boolean(3);
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.cover_count(), 12);
        assert_eq!(b3.level_sizes(), vec![1, 3, 3, 1]);
        assert_eq!(b3.bottom(), Some(0));
        assert_eq!(b3.top(), Some(7));
        assert!(b3.check_order_axioms());
        assert!(b3.is_rank_symmetric().unwrap());
    }

    #[test]
    fn product_of_chains() {
        let grid = Poset::chain(3).product(&Poset::chain(2));
        assert_eq!(grid.len(), 6);
        assert_eq!(grid.cover_count(), 7);
        assert_eq!(grid.level_sizes(), vec![1, 2, 2, 1]);
        assert!(grid.graded_info().is_graded);
    }

    #[test]
    fn default_ranks_are_heights() {
        // 0 < 1 < 3 and 0 < 2 < 3, plus 0 < 3 directly
        let rel = |i: usize, j: usize| i == j || i == 0 || j == 3;
        let p = Poset::from_leq(4, rel, None);
        assert_eq!(p.ranks(), &[0, 1, 1, 2]);
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn ungraded_witness() {
        // pentagon N5: 0 < a < b < 1, 0 < c < 1
        let leq = |i: usize, j: usize| {
            i == j || i == 0 || j == 4 || (i == 1 && j == 2)
        };
        let ranks = vec![0, 1, 2, 1, 3];
        let p = Poset::from_leq(5, leq, Some(ranks));
        let info = p.graded_info();
        assert!(!info.is_graded);
        assert_eq!(info.witness, Some((3, 4)));
        assert_eq!(p.rank_vector(), Err(Error::NotGraded));
    }

    #[test]
    fn dual_reverses() {
        let c = Poset::chain(4);
        let d = c.dual();
        assert!(d.leq(3, 0));
        assert_eq!(d.rank(3), 0);
        assert_eq!(d.bottom(), Some(3));
    }

    #[test]
    fn induced_keeps_ambient_ranks() {
        let b = Poset::boolean(3);
        let sub = b.induced(&[1, 3, 7]);
        assert_eq!(sub.ranks(), &[1, 2, 3]);
        assert_eq!(sub.covers(), vec![(0, 1), (1, 2)]);
    }
}
