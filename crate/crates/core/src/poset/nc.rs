use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde_json::json;

use super::{GradedInfo, Poset};
use crate::error::{Error, Result};
use crate::geometry::{Configuration, Predicates};
use crate::partition::{for_each_noncrossing, is_noncrossing, SetPartition, DEFAULT_MAX_POINTS};

/// `NC(P)` ordered by refinement, with ranks `ρ(π) = n − bl(π)`.
#[derive(Clone, Debug)]
pub struct NcLattice {
    config: Configuration,
    predicates: Predicates,
    elements: Vec<SetPartition>,
    masks: Vec<Vec<u64>>,
    index: HashMap<SetPartition, usize>,
    poset: Poset,
}

/// An induced subposet together with the lattice indices of its members.
#[derive(Clone, Debug)]
pub struct Subposet {
    pub members: Vec<usize>,
    pub poset: Poset,
}

pub fn build_nc_poset(config: &Configuration) -> Result<NcLattice> {
    NcLattice::build(config, DEFAULT_MAX_POINTS)
}

impl NcLattice {
    pub fn build(config: &Configuration, max_points: usize) -> Result<Self> {
        let n = config.len();
        let mut masks: Vec<Vec<u64>> = Vec::new();
        for_each_noncrossing(config, max_points, &mut |m| masks.push(m.to_vec()))?;
        let elements: Vec<SetPartition> = masks
            .iter()
            .map(|m| SetPartition::from_masks(n, m).expect("enumerator yields partitions"))
            .collect();
        // canonical block order for the mask lists too
        for m in &mut masks {
            m.sort_unstable_by_key(|b| b.trailing_zeros());
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        let len = elements.len();
        let owner: Vec<Vec<u8>> = masks
            .iter()
            .map(|blocks| {
                let mut o = vec![0u8; n];
                for (b, &mask) in blocks.iter().enumerate() {
                    for (i, slot) in o.iter_mut().enumerate() {
                        if mask >> i & 1 == 1 {
                            *slot = b as u8;
                        }
                    }
                }
                o
            })
            .collect();
        let mut up = vec![FixedBitSet::with_capacity(len); len];
        for (i, row) in up.iter_mut().enumerate() {
            let finer = &masks[i];
            for j in 0..len {
                let coarser = &masks[j];
                if coarser.len() > finer.len() {
                    continue;
                }
                let below = finer.iter().all(|&b| {
                    let host = coarser[owner[j][b.trailing_zeros() as usize] as usize];
                    b & !host == 0
                });
                if below {
                    row.insert(j);
                }
            }
        }
        let rank = elements.iter().map(SetPartition::rank).collect();
        let poset = Poset::from_up_sets(up, Some(rank));
        Ok(NcLattice {
            config: config.clone(),
            predicates: Predicates::new(config)?,
            elements,
            masks,
            index,
            poset,
        })
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn elements(&self) -> &[SetPartition] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SetPartition {
        &self.elements[i]
    }

    /// Block masks of element `i`, ordered by lowest point.
    pub fn masks(&self, i: usize) -> &[u64] {
        &self.masks[i]
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn predicates(&self) -> &Predicates {
        &self.predicates
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, pi: &SetPartition) -> Option<usize> {
        self.index.get(pi).copied()
    }

    fn require(&self, pi: &SetPartition) -> Result<usize> {
        if pi.ground_size() != self.config.len() {
            return Err(Error::GroundMismatch {
                left: self.config.len(),
                right: pi.ground_size(),
            });
        }
        self.index_of(pi).ok_or(Error::NotNoncrossing)
    }

    /// Index of `0̂` (all singletons).
    pub fn bottom(&self) -> usize {
        self.index[&SetPartition::singletons(self.config.len())]
    }

    /// Index of `1̂` (one block).
    pub fn top(&self) -> usize {
        self.index[&SetPartition::single_block(self.config.len())]
    }

    /// Checks that `ρ = n − bl` rises by exactly one across every cover.
    pub fn gradedness(&self) -> GradedInfo {
        self.poset.graded_info()
    }

    pub fn rank_vector(&self) -> Result<Vec<usize>> {
        self.poset.rank_vector()
    }

    pub fn is_rank_symmetric(&self) -> Result<bool> {
        self.poset.is_rank_symmetric()
    }

    /// Meet by common refinement.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a]
            .common_refinement(&self.elements[b])
            .expect("same ground set");
        *self.index.get(&m).expect("refinement of noncrossing partitions is noncrossing")
    }

    /// Join: merge in `Π(P)`, then merge the first pair of blocks with
    /// intersecting hulls until none remain.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let j = join_with(&self.predicates, &self.elements[a], &self.elements[b]);
        *self.index.get(&j).expect("join is noncrossing")
    }

    pub fn meet_partitions(&self, pi: &SetPartition, mu: &SetPartition) -> Result<SetPartition> {
        let (a, b) = (self.require(pi)?, self.require(mu)?);
        Ok(self.elements[self.meet(a, b)].clone())
    }

    pub fn join_partitions(&self, pi: &SetPartition, mu: &SetPartition) -> Result<SetPartition> {
        let (a, b) = (self.require(pi)?, self.require(mu)?);
        Ok(self.elements[self.join(a, b)].clone())
    }

    /// `[π, μ]` as an induced subposet.
    pub fn interval(&self, pi: &SetPartition, mu: &SetPartition) -> Result<Subposet> {
        let (a, b) = (self.require(pi)?, self.require(mu)?);
        self.interval_by_index(a, b)
    }

    pub fn interval_by_index(&self, a: usize, b: usize) -> Result<Subposet> {
        if !self.poset.leq(a, b) {
            return Err(Error::NotComparable);
        }
        let members: Vec<usize> = self
            .poset
            .up_set(a)
            .ones()
            .filter(|&x| self.poset.leq(x, b))
            .collect();
        Ok(self.subposet(members))
    }

    pub fn subposet(&self, members: Vec<usize>) -> Subposet {
        let poset = self.poset.induced(&members);
        Subposet { members, poset }
    }

    /// Human-readable block list using the configuration's labels.
    pub fn label(&self, i: usize) -> String {
        let labels = self.config.labels();
        self.elements[i]
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&p| labels[p].as_str()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// `{configuration, elements, covers, rank_vector, flags}`.
    pub fn to_json(&self) -> serde_json::Value {
        let info = self.gradedness();
        let rank_symmetric = self.is_rank_symmetric().ok();
        json!({
            "configuration": self.config.to_json_value(),
            "elements": self.elements,
            "covers": self.poset.covers(),
            "rank_vector": info.rank_vector,
            "flags": {
                "bounded": self.poset.is_bounded(),
                "graded": info.is_graded,
                "rank_symmetric": rank_symmetric,
            },
        })
    }

    /// Hasse diagram in DOT; when graded, nodes of equal rank share a layer.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let graded = self.gradedness().is_graded;
        writeln!(out, "digraph nc {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
        for i in 0..self.len() {
            writeln!(out, "  n{i} [label=\"{}\"];", self.label(i)).unwrap();
        }
        if graded {
            let levels = self.poset.level_sizes().len();
            for r in 0..levels {
                let ids: Vec<String> = (0..self.len())
                    .filter(|&i| self.poset.rank(i) == r)
                    .map(|i| format!("n{i}"))
                    .collect();
                writeln!(out, "  {{ rank=same; {}; }}", ids.join("; ")).unwrap();
            }
        }
        for (a, b) in self.poset.covers() {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

pub(crate) fn join_with(pred: &Predicates, pi: &SetPartition, mu: &SetPartition) -> SetPartition {
    let n = pi.ground_size();
    let mut blocks = pi.common_coarsening(mu).expect("same ground set").masks();
    'merge: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if !pred.blocks_disjoint(blocks[i], blocks[j]) {
                    blocks[i] |= blocks[j];
                    blocks.remove(j);
                    blocks.sort_unstable_by_key(|b| b.trailing_zeros());
                    continue 'merge;
                }
            }
        }
        break;
    }
    SetPartition::from_masks(n, &blocks).expect("merging keeps a partition")
}

fn check_noncrossing(config: &Configuration, pi: &SetPartition) -> Result<()> {
    if !is_noncrossing(config, pi)? {
        return Err(Error::NotNoncrossing);
    }
    Ok(())
}

/// Greatest lower bound in `NC(P)`.
pub fn nc_meet(config: &Configuration, pi: &SetPartition, mu: &SetPartition) -> Result<SetPartition> {
    check_noncrossing(config, pi)?;
    check_noncrossing(config, mu)?;
    let meet = pi.common_refinement(mu)?;
    debug_assert!(is_noncrossing(config, &meet)?);
    Ok(meet)
}

/// Least upper bound in `NC(P)`.
pub fn nc_join(config: &Configuration, pi: &SetPartition, mu: &SetPartition) -> Result<SetPartition> {
    check_noncrossing(config, pi)?;
    check_noncrossing(config, mu)?;
    let pred = Predicates::new(config)?;
    Ok(join_with(&pred, pi, mu))
}

/// `[π, μ]` in `NC(P)`.
pub fn interval(lattice: &NcLattice, pi: &SetPartition, mu: &SetPartition) -> Result<Subposet> {
    lattice.interval(pi, mu)
}
