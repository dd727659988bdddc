//! Set partitions of `{0, ..., n-1}`, the refinement order, and enumeration of
//! the noncrossing partitions of a configuration.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{convex_hull, hulls_disjoint, Configuration, Predicates, MAX_MASK_POINTS};

/// Default upper bound on configuration size for enumeration.
pub const DEFAULT_MAX_POINTS: usize = 12;

/// A partition in canonical form: blocks sorted ascending, blocks ordered by
/// their minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes a list of blocks over `{0, ..., n-1}`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &i in block.iter() {
                if i >= n {
                    return Err(Error::InvalidPartition(format!("element {i} outside 0..{n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidPartition(format!("element {i} appears twice")));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("element {missing} not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// From a block-label vector (any labels; equal labels share a block).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first_seen: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &l) in labels.iter().enumerate() {
            match first_seen.iter().find(|(label, _)| *label == l) {
                Some(&(_, b)) => blocks[b].push(i),
                None => {
                    first_seen.push((l, blocks.len()));
                    blocks.push(vec![i]);
                }
            }
        }
        SetPartition {
            n: labels.len(),
            blocks,
        }
    }

    /// From disjoint bitmasks covering `{0, ..., n-1}`.
    pub fn from_masks(n: usize, masks: &[u64]) -> Result<Self> {
        let blocks = masks
            .iter()
            .map(|&m| (0..64).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        SetPartition::new(n, blocks)
    }

    /// `0̂`: every element on its own.
    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// `1̂`: one block (no blocks when `n = 0`).
    pub fn single_block(n: usize) -> Self {
        SetPartition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `n − bl(π)`.
    pub fn rank(&self) -> usize {
        self.n - self.blocks.len()
    }

    /// Index of the block holding `i`.
    pub fn block_of(&self, i: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&i).is_ok())
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        match self.block_of(i) {
            Some(b) => self.blocks[b].binary_search(&j).is_ok(),
            None => false,
        }
    }

    /// Block-label vector where labels follow canonical block order.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }

    /// Blocks as bitmasks; requires `n ≤ 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= MAX_MASK_POINTS);
        self.blocks
            .iter()
            .map(|b| b.iter().fold(0u64, |m, &i| m | 1 << i))
            .collect()
    }

    fn check_ground(&self, other: &SetPartition) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroundMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Partition whose blocks are the nonempty pairwise intersections.
    pub fn common_refinement(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_ground(other)?;
        let (la, lb) = (self.labels(), other.labels());
        let pairs: Vec<usize> = la.iter().zip(&lb).map(|(&a, &b)| a * self.n.max(1) + b).collect();
        Ok(SetPartition::from_labels(&pairs))
    }

    /// Finest partition coarser than both (transitive block merging).
    pub fn common_coarsening(&self, other: &SetPartition) -> Result<SetPartition> {
        self.check_ground(other)?;
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for block in self.blocks.iter().chain(&other.blocks) {
            for w in block.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a.max(b)] = a.min(b);
            }
        }
        let roots: Vec<usize> = (0..self.n).map(|i| find(&mut parent, i)).collect();
        Ok(SetPartition::from_labels(&roots))
    }

    /// The partition of the sub-ground `keep` (in that order) induced by `self`,
    /// reindexed to `0..keep.len()`.
    pub fn restrict(&self, keep: &[usize]) -> SetPartition {
        let labels = self.labels();
        SetPartition::from_labels(&keep.iter().map(|&i| labels[i]).collect::<Vec<_>>())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, i) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks: Vec<Vec<usize>> = Vec::deserialize(deserializer)?;
        let n = blocks.iter().map(Vec::len).sum();
        SetPartition::new(n, blocks).map_err(serde::de::Error::custom)
    }
}

/// `π ≤ μ` in the refinement order: every block of `pi` lies inside a block of `mu`.
pub fn refines(pi: &SetPartition, mu: &SetPartition) -> Result<bool> {
    pi.check_ground(mu)?;
    let labels = mu.labels();
    Ok(pi
        .blocks
        .iter()
        .all(|b| b.iter().all(|&i| labels[i] == labels[b[0]])))
}

/// `true` iff the hulls of the blocks of `pi` are pairwise disjoint.
///
/// Uses the rational hull route from [`crate::geometry`].
pub fn is_noncrossing(config: &Configuration, pi: &SetPartition) -> Result<bool> {
    if pi.ground_size() != config.len() {
        return Err(Error::GroundMismatch {
            left: config.len(),
            right: pi.ground_size(),
        });
    }
    let hulls = pi
        .blocks()
        .iter()
        .map(|b| convex_hull(config, b))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..hulls.len() {
        for j in i + 1..hulls.len() {
            if !hulls_disjoint(&hulls[i], &hulls[j]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_cap(config: &Configuration, max_points: usize) -> Result<()> {
    let cap = max_points.min(MAX_MASK_POINTS);
    if config.len() > cap {
        return Err(Error::TooLarge {
            what: "configuration",
            size: config.len(),
            cap,
        });
    }
    Ok(())
}

/// Depth-first restricted-growth search. Each block keeps a bitmask; after a
/// point joins a block, only that block's hull needs re-checking against the
/// others, and since hulls only grow, a crossing prefix can be abandoned.
struct Enumerator<'a> {
    pred: &'a Predicates,
    n: usize,
    blocks: Vec<u64>,
    visit: &'a mut dyn FnMut(&[u64]),
}

impl Enumerator<'_> {
    fn run(&mut self, i: usize) {
        if i == self.n {
            (self.visit)(&self.blocks);
            return;
        }
        let bit = 1u64 << i;
        for b in 0..self.blocks.len() {
            let grown = self.blocks[b] | bit;
            let ok = self
                .blocks
                .iter()
                .enumerate()
                .all(|(c, &other)| c == b || self.pred.blocks_disjoint(grown, other));
            if ok {
                let old = std::mem::replace(&mut self.blocks[b], grown);
                self.run(i + 1);
                self.blocks[b] = old;
            }
        }
        if self.blocks.iter().all(|&other| self.pred.blocks_disjoint(bit, other)) {
            self.blocks.push(bit);
            self.run(i + 1);
            self.blocks.pop();
        }
    }
}

/// Calls `visit` with the block masks of every noncrossing partition, in
/// lexicographic restricted-growth order.
pub fn for_each_noncrossing(
    config: &Configuration,
    max_points: usize,
    visit: &mut dyn FnMut(&[u64]),
) -> Result<()> {
    check_cap(config, max_points)?;
    let pred = Predicates::new(config)?;
    let mut e = Enumerator {
        pred: &pred,
        n: config.len(),
        blocks: Vec::new(),
        visit,
    };
    e.run(0);
    Ok(())
}

/// All noncrossing partitions, each once, in lexicographic restricted-growth order.
pub fn enumerate_noncrossing(config: &Configuration) -> Result<Vec<SetPartition>> {
    enumerate_noncrossing_capped(config, DEFAULT_MAX_POINTS)
}

pub fn enumerate_noncrossing_capped(
    config: &Configuration,
    max_points: usize,
) -> Result<Vec<SetPartition>> {
    let n = config.len();
    let mut out = Vec::new();
    for_each_noncrossing(config, max_points, &mut |masks| {
        out.push(SetPartition::from_masks(n, masks).expect("enumerator yields partitions"));
    })?;
    Ok(out)
}

/// `|NC(P)|`.
pub fn count_noncrossing(config: &Configuration) -> Result<BigUint> {
    count_noncrossing_capped(config, DEFAULT_MAX_POINTS)
}

pub fn count_noncrossing_capped(config: &Configuration, max_points: usize) -> Result<BigUint> {
    let mut count = 0u64;
    for_each_noncrossing(config, max_points, &mut |_| count += 1)?;
    Ok(BigUint::from(count))
}

/// Every set partition of `{0, ..., n-1}` in lexicographic restricted-growth order.
pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn go(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        if i == rgs.len() {
            out.push(SetPartition::from_labels(rgs));
            return;
        }
        for v in 0..=max + usize::from(i > 0) {
            rgs[i] = v;
            go(i + 1, max.max(v), rgs, out);
        }
    }
    if n == 0 {
        return vec![SetPartition::singletons(0)];
    }
    go(1, 0, &mut rgs, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{standard_config, Family};

    fn p(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = p(4, &[&[3, 1], &[2], &[0]]);
        assert_eq!(a.blocks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a, SetPartition::from_labels(&[7, 2, 5, 2]));
        assert!(SetPartition::new(3, vec![vec![0, 1]]).is_err());
        assert!(SetPartition::new(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(SetPartition::new(2, vec![vec![0, 1], vec![]]).is_err());
        assert_eq!(a.to_string(), "{{0},{1,3},{2}}");
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[[0],[1,3],[2]]");
        assert_eq!(serde_json::from_str::<SetPartition>(&json).unwrap(), a);
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&p(3, &[&[0], &[1], &[2]]), &p(3, &[&[0, 1], &[2]])).unwrap());
        assert!(!refines(&p(3, &[&[0, 1], &[2]]), &p(3, &[&[0, 2], &[1]])).unwrap());
        for n in 0..=5 {
            for pi in all_partitions(n) {
                assert!(refines(&pi, &pi).unwrap());
            }
        }
        assert!(matches!(
            refines(&SetPartition::singletons(2), &SetPartition::singletons(3)),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn meet_examples() {
        let m = p(3, &[&[0, 1, 2]]).common_refinement(&p(3, &[&[0, 1], &[2]])).unwrap();
        assert_eq!(m, p(3, &[&[0, 1], &[2]]));
        let t = p(4, &[&[0, 1], &[2, 3]]).common_refinement(&p(4, &[&[0, 2], &[1, 3]])).unwrap();
        assert_eq!(t, SetPartition::singletons(4));
    }

    #[test]
    fn meet_is_greatest_lower_bound_brute_force() {
        for n in 0..=6 {
            let all = all_partitions(n);
            // a deterministic spread of pairs
            for (i, a) in all.iter().enumerate().step_by(7) {
                for b in all.iter().skip(i % 5).step_by(11) {
                    let m = a.common_refinement(b).unwrap();
                    assert!(refines(&m, a).unwrap() && refines(&m, b).unwrap());
                    for c in &all {
                        if refines(c, a).unwrap() && refines(c, b).unwrap() {
                            assert!(refines(c, &m).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bell_numbers_from_oracle() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(all_partitions(n).len(), b);
        }
    }

    #[test]
    fn noncrossing_examples() {
        let q4 = standard_config(Family::Polygon, 4, 0).unwrap();
        assert!(!is_noncrossing(&q4, &p(4, &[&[0, 2], &[1, 3]])).unwrap());
        assert!(is_noncrossing(&q4, &SetPartition::singletons(4)).unwrap());
        let p4 = standard_config(Family::Collinear, 4, 0).unwrap();
        assert!(!is_noncrossing(&p4, &p(4, &[&[0, 2], &[1], &[3]])).unwrap());
        assert!(matches!(
            is_noncrossing(&p4, &SetPartition::singletons(3)),
            Err(Error::GroundMismatch { .. })
        ));
    }

    #[test]
    fn enumeration_examples() {
        let count = |f, m, n| enumerate_noncrossing(&standard_config(f, m, n).unwrap()).unwrap().len();
        assert_eq!(count(Family::Polygon, 4, 0), 14);
        assert_eq!(count(Family::Collinear, 4, 0), 8);
        assert_eq!(count(Family::T, 4, 0), 28);
        let c = |f, m, n| count_noncrossing(&standard_config(f, m, n).unwrap()).unwrap();
        assert_eq!(c(Family::U, 2, 2), BigUint::from(14u32));
        assert_eq!(c(Family::V, 3, 2), BigUint::from(86u32));
        assert_eq!(c(Family::S, 1, 3), BigUint::from(118u32));
    }

    #[test]
    fn empty_configuration_has_one_partition() {
        let empty = standard_config(Family::U, 0, 0).unwrap();
        assert_eq!(enumerate_noncrossing(&empty).unwrap(), vec![SetPartition::singletons(0)]);
    }

    #[test]
    fn cap_is_enforced() {
        let big = standard_config(Family::Collinear, 13, 0).unwrap();
        assert!(matches!(enumerate_noncrossing(&big), Err(Error::TooLarge { .. })));
        assert_eq!(enumerate_noncrossing_capped(&big, 13).unwrap().len(), 1 << 12);
    }

    #[test]
    fn enumeration_order_is_restricted_growth_lex() {
        let q = standard_config(Family::Polygon, 5, 0).unwrap();
        let out = enumerate_noncrossing(&q).unwrap();
        let labels: Vec<Vec<usize>> = out.iter().map(|p| p.labels()).collect();
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(labels, sorted);
    }

    #[test]
    fn collinear_and_polygon_counts() {
        for n in 1..=10 {
            let c = standard_config(Family::Collinear, n, 0).unwrap();
            assert_eq!(count_noncrossing(&c).unwrap(), BigUint::from(1u64 << (n - 1)));
        }
        let catalan = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430];
        for n in 1..=8 {
            let q = standard_config(Family::Polygon, n, 0).unwrap();
            assert_eq!(count_noncrossing(&q).unwrap(), BigUint::from(catalan[n]));
        }
    }

    #[test]
    fn restrict_reindexes() {
        let a = p(5, &[&[0, 4], &[1, 2], &[3]]);
        assert_eq!(a.restrict(&[4, 3, 0]), p(3, &[&[0, 2], &[1]]));
    }
}
