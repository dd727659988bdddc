//! Recursive decompositions for the standard families.
//!
//! Points are processed along their counterclockwise order `p_1, ..., p_N`.
//! Removing the last point (the pivot) splits `NC` into
//!
//! * `A`: the pivot is a singleton or shares a block with `p_{N−1}`, a copy of
//!   `NC(p_1..p_{N−1}) × 2`;
//! * `B_j`: the pivot's block contains `p_j` but none of `p_{j+1}..p_{N−1}`, a
//!   copy of `NC(p_{j+1}..p_{N−1}) × NC(p_1..p_j)`.
//!
//! Each family states which `B_j` are nonempty and which family each factor
//! belongs to. Chains are built on block bitmasks over the full point set, so
//! factor chains glue together without reindexing.

use std::collections::HashSet;

use serde::Serialize;

use super::{generic_scd, product_chains, verify_scd, ChainDecomposition, ScdSearch, DEFAULT_MAX_SCD_ELEMENTS};
use crate::error::{Error, Result};
use crate::geometry::{hull_vertex_indices, on_convex_boundary, standard_config, Configuration, Family};
use crate::partition::SetPartition;
use crate::poset::{NcLattice, Poset};

type Blocks = Vec<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Arc {
    Collinear,
    Convex,
    T,
    U { m: usize, n: usize },
    V { m: usize, n: usize },
    S { m: usize, n: usize },
}

struct BPart {
    j: usize,
    sigma: Arc,
    tau: Arc,
}

enum Plan {
    Leaf(Arc),
    Split { arc: Vec<usize>, a: Arc, b: Vec<BPart> },
}

fn plan(arc: &[usize], kind: Arc) -> Plan {
    let len = arc.len();
    let split = |a: Arc, b: Vec<BPart>| Plan::Split {
        arc: arc.to_vec(),
        a,
        b,
    };
    match kind {
        Arc::Collinear | Arc::Convex => Plan::Leaf(kind),
        Arc::T if len <= 2 => Plan::Leaf(Arc::Collinear),
        Arc::T => split(Arc::T, vec![BPart {
            j: 0,
            sigma: Arc::Collinear,
            tau: Arc::Collinear,
        }]),
        Arc::U { m, n } if m == 0 || n == 0 => Plan::Leaf(Arc::Collinear),
        Arc::U { m: 1, .. } => {
            let mut rotated = vec![arc[len - 1]];
            rotated.extend_from_slice(&arc[..len - 1]);
            plan(&rotated, Arc::T)
        }
        Arc::U { m, n } => split(
            Arc::U { m: m - 1, n },
            (1..=n)
                .map(|k| BPart {
                    j: n - k,
                    sigma: Arc::U { m: m - 1, n: k - 1 },
                    tau: Arc::Collinear,
                })
                .collect(),
        ),
        Arc::V { m, n } if m == 0 || n == 0 => Plan::Leaf(Arc::Collinear),
        Arc::V { m, n } => split(
            Arc::V { m: m - 1, n },
            (1..=n)
                .map(|k| BPart {
                    j: n - k,
                    sigma: Arc::V { m: m - 1, n: k - 1 },
                    tau: Arc::Collinear,
                })
                .collect(),
        ),
        Arc::S { n: 0, .. } => Plan::Leaf(Arc::Collinear),
        Arc::S { m: 0, .. } => Plan::Leaf(Arc::Convex),
        Arc::S { m, n } => split(
            Arc::S { m: m - 1, n },
            (1..=n)
                .map(|k| BPart {
                    j: n - k,
                    sigma: Arc::S { m: m - 1, n: k - 1 },
                    tau: Arc::Convex,
                })
                .collect(),
        ),
    }
}

fn normalize(mut blocks: Blocks) -> Blocks {
    blocks.sort_unstable_by_key(|b| b.trailing_zeros());
    blocks
}

/// Adds `point` to the block containing `host`.
fn attach(blocks: &[u64], host: usize, point: usize) -> Blocks {
    normalize(
        blocks
            .iter()
            .map(|&b| if b >> host & 1 == 1 { b | 1 << point } else { b })
            .collect(),
    )
}

struct Assembler<'a> {
    config: &'a Configuration,
    max_points: usize,
}

impl Assembler<'_> {
    fn chains(&self, arc: &[usize], kind: Arc) -> Result<Vec<Vec<Blocks>>> {
        match plan(arc, kind) {
            Plan::Leaf(Arc::Convex) => self.convex(arc),
            Plan::Leaf(_) => Ok(collinear_chains(arc)),
            Plan::Split { arc, a, b } => {
                let len = arc.len();
                let (pivot, neighbor) = (arc[len - 1], arc[len - 2]);
                let mut out = Vec::new();
                let lower = self.chains(&arc[..len - 1], a)?;
                for chain in product_chains(&lower, &[vec![false, true]]) {
                    out.push(
                        chain
                            .into_iter()
                            .map(|(blocks, joined)| {
                                if joined {
                                    attach(&blocks, neighbor, pivot)
                                } else {
                                    let mut blocks = blocks;
                                    blocks.push(1 << pivot);
                                    normalize(blocks)
                                }
                            })
                            .collect(),
                    );
                }
                for part in b {
                    let sigma = self.chains(&arc[part.j + 1..len - 1], part.sigma)?;
                    let tau = self.chains(&arc[..=part.j], part.tau)?;
                    for chain in product_chains(&sigma, &tau) {
                        out.push(
                            chain
                                .into_iter()
                                .map(|(s, t)| {
                                    let mut blocks = attach(&t, arc[part.j], pivot);
                                    blocks.extend(s);
                                    normalize(blocks)
                                })
                                .collect(),
                        );
                    }
                }
                Ok(out)
            }
        }
    }

    fn convex(&self, arc: &[usize]) -> Result<Vec<Vec<Blocks>>> {
        if arc.len() <= 1 {
            return Ok(collinear_chains(arc));
        }
        let sub = self.config.subset(arc)?;
        let lattice = NcLattice::build(&sub, self.max_points)?;
        let ScdSearch::Found(dec) = generic_scd(lattice.poset(), DEFAULT_MAX_SCD_ELEMENTS)? else {
            return Err(Error::AssemblyFailure(format!(
                "no decomposition found for the convex factor on {} points",
                arc.len()
            )));
        };
        let globalize = |local: u64| {
            arc.iter()
                .enumerate()
                .filter(|(i, _)| local >> i & 1 == 1)
                .fold(0u64, |acc, (_, &p)| acc | 1 << p)
        };
        Ok(dec
            .chains
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&e| normalize(lattice.masks(e).iter().map(|&b| globalize(b)).collect()))
                    .collect()
            })
            .collect())
    }
}

/// Points on a line in order: noncrossing partitions are interval partitions,
/// i.e. subsets of the `len − 1` gaps, decomposed by bracketing.
fn collinear_chains(arc: &[usize]) -> Vec<Vec<Blocks>> {
    if arc.is_empty() {
        return vec![vec![Vec::new()]];
    }
    super::boolean_scd(arc.len() - 1)
        .chains
        .into_iter()
        .map(|chain| {
            chain
                .into_iter()
                .map(|gaps| {
                    let mut blocks = vec![1u64 << arc[0]];
                    for i in 1..arc.len() {
                        if gaps >> (i - 1) & 1 == 1 {
                            *blocks.last_mut().expect("nonempty") |= 1 << arc[i];
                        } else {
                            blocks.push(1 << arc[i]);
                        }
                    }
                    normalize(blocks)
                })
                .collect()
        })
        .collect()
}

/// One piece of the top-level split of a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Piece {
    /// `"A"` or `"B:<label>"`, naming the point the pivot is attached to.
    pub label: String,
    /// Arc position of that point, for `B` pieces.
    pub anchor: Option<usize>,
    pub members: Vec<usize>,
}

/// Splits the lattice along `arc` (a counterclockwise ordering of all points)
/// by where the last point sits. Empty `B` pieces are omitted.
pub fn pivot_pieces(lattice: &NcLattice, arc: &[usize]) -> Result<Vec<Piece>> {
    let n = lattice.config().len();
    let mut sorted = arc.to_vec();
    sorted.sort_unstable();
    if n < 2 || sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidInput("arc must order all points, at least two".into()));
    }
    let (pivot, neighbor) = (arc[n - 1], arc[n - 2]);
    let mut a = Vec::new();
    let mut b: Vec<Vec<usize>> = vec![Vec::new(); n - 2];
    for i in 0..lattice.len() {
        let pi = lattice.element(i);
        let block = &pi.blocks()[pi.block_of(pivot).expect("pivot in ground set")];
        if block.len() == 1 || block.contains(&neighbor) {
            a.push(i);
        } else {
            let j = (0..n - 2).rev().find(|&j| block.contains(&arc[j])).expect("block has another point");
            b[j].push(i);
        }
    }
    let labels = lattice.config().labels();
    let mut pieces = vec![Piece {
        label: "A".into(),
        anchor: None,
        members: a,
    }];
    for (j, members) in b.into_iter().enumerate() {
        if !members.is_empty() {
            pieces.push(Piece {
                label: format!("B:{}", labels[arc[j]]),
                anchor: Some(j),
                members,
            });
        }
    }
    Ok(pieces)
}

/// Structural facts about one piece that the gluing argument relies on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceCheck {
    pub label: String,
    pub size: usize,
    pub bounded: bool,
    pub bottom_rank: Option<usize>,
    pub top_rank: Option<usize>,
    /// `rank(min) + rank(max) = N − 1`.
    pub centered: bool,
    /// `A = [0̂, β] ∪ [α, 1̂]` for the `A` piece; `B` pieces are intervals.
    pub shape: bool,
}

impl PieceCheck {
    pub fn holds(&self) -> bool {
        self.bounded && self.centered && self.shape
    }
}

fn check_piece(lattice: &NcLattice, arc: &[usize], piece: &Piece) -> PieceCheck {
    let n = arc.len();
    let sub = lattice.subposet(piece.members.clone());
    let p = &sub.poset;
    let bottom = p.bottom().map(|i| sub.members[i]);
    let top = p.top().map(|i| sub.members[i]);
    let rank = |x: Option<usize>| x.map(|i| lattice.poset().rank(i));
    let (bottom_rank, top_rank) = (rank(bottom), rank(top));
    let centered = matches!((bottom_rank, top_rank), (Some(a), Some(b)) if a + b + 1 == n);
    let member_set: HashSet<usize> = piece.members.iter().copied().collect();
    let shape = if piece.anchor.is_none() {
        let (pivot, neighbor) = (arc[n - 1], arc[n - 2]);
        let rest: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        let beta = SetPartition::new(n, vec![rest, vec![pivot]]).ok();
        let mut pair_blocks: Vec<Vec<usize>> = (0..n).filter(|&i| i != pivot && i != neighbor).map(|i| vec![i]).collect();
        pair_blocks.push(vec![neighbor, pivot]);
        let alpha = SetPartition::new(n, pair_blocks).ok();
        match (
            beta.and_then(|b| lattice.index_of(&b)),
            alpha.and_then(|a| lattice.index_of(&a)),
        ) {
            (Some(beta), Some(alpha)) => {
                let expected: HashSet<usize> = (0..lattice.len())
                    .filter(|&x| lattice.poset().leq(x, beta) || lattice.poset().leq(alpha, x))
                    .collect();
                expected == member_set
            }
            _ => false,
        }
    } else {
        match (bottom, top) {
            (Some(lo), Some(hi)) => lattice
                .interval_by_index(lo, hi)
                .map(|iv| iv.members.iter().copied().collect::<HashSet<_>>() == member_set)
                .unwrap_or(false),
            _ => false,
        }
    };
    PieceCheck {
        label: piece.label.clone(),
        size: piece.members.len(),
        bounded: bottom.is_some() && top.is_some(),
        bottom_rank,
        top_rank,
        centered,
        shape,
    }
}

/// A verified decomposition of a standard family's lattice, together with
/// checks on the top-level pieces it was glued from.
#[derive(Clone, Debug)]
pub struct ScdConstruction {
    pub lattice: NcLattice,
    pub decomposition: ChainDecomposition,
    /// The ordering of points used for the top-level split (empty for leaves).
    pub split_arc: Vec<usize>,
    pub pieces: Vec<PieceCheck>,
}

fn arc_kind(family: Family, m: usize, n: usize) -> Result<Arc> {
    Ok(match family {
        Family::Generic => return Err(Error::UnknownFamily("generic".into())),
        Family::Collinear => Arc::Collinear,
        Family::Polygon => Arc::Convex,
        Family::T => Arc::T,
        Family::U => Arc::U { m, n },
        Family::V => Arc::V { m, n },
        Family::S => Arc::S { m, n },
    })
}

/// Builds the decomposition for `family(m, n)` and verifies it against the
/// lattice computed from scratch. Fails with [`Error::AssemblyFailure`] if the
/// glued chains do not form a symmetric chain decomposition.
pub fn scd_family(family: Family, m: usize, n: usize, max_points: usize) -> Result<ScdConstruction> {
    let kind = arc_kind(family, m, n)?;
    let config = standard_config(family, m, n)?;
    let lattice = NcLattice::build(&config, max_points)?;
    let size = config.len();
    let arc: Vec<usize> = (0..size).collect();
    let chains = Assembler {
        config: &config,
        max_points,
    }
    .chains(&arc, kind)?;
    let mut indexed = Vec::with_capacity(chains.len());
    for chain in chains {
        let mut idx = Vec::with_capacity(chain.len());
        for blocks in chain {
            let pi = SetPartition::from_masks(size, &blocks)?;
            let i = lattice
                .index_of(&pi)
                .ok_or_else(|| Error::AssemblyFailure(format!("assembled partition {pi} is not noncrossing")))?;
            idx.push(i);
        }
        indexed.push(idx);
    }
    let decomposition = ChainDecomposition::new(indexed);
    let report = verify_scd(lattice.poset(), &decomposition)?;
    if let Some(v) = report.violation {
        return Err(Error::AssemblyFailure(format!("glued chains are not symmetric: {v:?}")));
    }
    let (split_arc, pieces) = match plan(&arc, kind) {
        Plan::Split { arc, .. } => {
            let pieces = pivot_pieces(&lattice, &arc)?
                .iter()
                .map(|p| check_piece(&lattice, &arc, p))
                .collect();
            (arc, pieces)
        }
        Plan::Leaf(_) => (Vec::new(), Vec::new()),
    };
    if let Some(bad) = pieces.iter().find(|p: &&PieceCheck| !p.holds()) {
        return Err(Error::AssemblyFailure(format!("piece {} fails its structural check: {bad:?}", bad.label)));
    }
    Ok(ScdConstruction {
        lattice,
        decomposition,
        split_arc,
        pieces,
    })
}

pub fn scd_t(n: usize, max_points: usize) -> Result<ScdConstruction> {
    scd_family(Family::T, n, 0, max_points)
}

pub fn scd_u(m: usize, n: usize, max_points: usize) -> Result<ScdConstruction> {
    scd_family(Family::U, m, n, max_points)
}

pub fn scd_v(m: usize, n: usize, max_points: usize) -> Result<ScdConstruction> {
    scd_family(Family::V, m, n, max_points)
}

pub fn scd_s(m: usize, n: usize, max_points: usize) -> Result<ScdConstruction> {
    scd_family(Family::S, m, n, max_points)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RemovalMode {
    /// The last two points share a block; a copy of `NC` of the first `N − 1` points.
    SharesBlock,
    /// The last point is a singleton or shares a block with the previous one;
    /// a copy of `NC(first N − 1) × 2`.
    SharesOrSingleton,
}

/// The subposet cut out by a [`RemovalMode`], with the candidate isomorphism
/// from the smaller lattice (times a 2-chain, for `SharesOrSingleton`).
#[derive(Clone, Debug)]
pub struct Removal {
    pub mode: RemovalMode,
    pub reduced: NcLattice,
    pub members: Vec<usize>,
    /// Image of each domain element; for `SharesOrSingleton` the domain element
    /// `(σ, bit)` has index `2σ + bit`. `None` if the image is not noncrossing.
    pub map: Vec<Option<usize>>,
}

impl Removal {
    pub fn domain(&self) -> Poset {
        match self.mode {
            RemovalMode::SharesBlock => self.reduced.poset().clone(),
            RemovalMode::SharesOrSingleton => self.reduced.poset().product(&Poset::chain(2)),
        }
    }

    /// Whether `map` is an order isomorphism onto `members`.
    pub fn is_isomorphism(&self, lattice: &NcLattice) -> bool {
        let Some(map) = self.map.iter().copied().collect::<Option<Vec<usize>>>() else {
            return false;
        };
        let mut image = map.clone();
        image.sort_unstable();
        image.dedup();
        if image.len() != map.len() || image != self.members {
            return false;
        }
        let domain = self.domain();
        (0..map.len()).all(|x| (0..map.len()).all(|y| domain.leq(x, y) == lattice.poset().leq(map[x], map[y])))
    }
}

/// Requires the points in convex position up to boundary points, listed
/// counterclockwise, with the first and last points hull vertices.
pub fn subposet_under_removal(lattice: &NcLattice, mode: RemovalMode) -> Result<Removal> {
    let config = lattice.config();
    let n = config.len();
    if n < 2 {
        return Err(Error::HypothesisViolated("need at least two points".into()));
    }
    if !on_convex_boundary(config) {
        return Err(Error::HypothesisViolated("a point lies inside the convex hull".into()));
    }
    let vertices = hull_vertex_indices(config);
    if !vertices.contains(&0) || !vertices.contains(&(n - 1)) {
        return Err(Error::HypothesisViolated("first and last points must be hull vertices".into()));
    }
    let (pivot, neighbor) = (n - 1, n - 2);
    let reduced = NcLattice::build(&config.subset(&(0..n - 1).collect::<Vec<_>>())?, n)?;
    let members: Vec<usize> = (0..lattice.len())
        .filter(|&i| {
            let pi = lattice.element(i);
            pi.same_block(pivot, neighbor)
                || (mode == RemovalMode::SharesOrSingleton && pi.blocks()[pi.block_of(pivot).expect("in ground set")].len() == 1)
        })
        .collect();
    let lift = |sigma: usize, joined: bool| {
        let masks = reduced.masks(sigma);
        let blocks = if joined {
            attach(masks, neighbor, pivot)
        } else {
            let mut b = masks.to_vec();
            b.push(1 << pivot);
            b
        };
        SetPartition::from_masks(n, &blocks).ok().and_then(|p| lattice.index_of(&p))
    };
    let map = match mode {
        RemovalMode::SharesBlock => (0..reduced.len()).map(|s| lift(s, true)).collect(),
        RemovalMode::SharesOrSingleton => (0..reduced.len())
            .flat_map(|s| [lift(s, false), lift(s, true)])
            .collect(),
    };
    Ok(Removal {
        mode,
        reduced,
        members,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::DEFAULT_MAX_POINTS;

    #[test]
    fn small_families_decompose() {
        for (family, m, n) in [
            (Family::T, 1, 0),
            (Family::T, 4, 0),
            (Family::U, 1, 2),
            (Family::U, 3, 2),
            (Family::V, 2, 2),
            (Family::S, 0, 3),
            (Family::S, 2, 2),
            (Family::Collinear, 5, 0),
            (Family::Polygon, 5, 0),
        ] {
            let c = scd_family(family, m, n, DEFAULT_MAX_POINTS).unwrap_or_else(|e| panic!("{family:?} {m} {n}: {e}"));
            let v = c.lattice.rank_vector().unwrap();
            assert_eq!(c.decomposition.len(), *v.iter().max().unwrap(), "{family:?} {m} {n}");
        }
    }

    #[test]
    fn collinear_chains_are_interval_partitions() {
        let chains = collinear_chains(&[0, 1, 2]);
        assert_eq!(chains.len(), 2);
        assert_eq!(chains.iter().map(Vec::len).sum::<usize>(), 4);
        assert_eq!(collinear_chains(&[]), vec![vec![Vec::<u64>::new()]]);
    }

    #[test]
    fn removal_isomorphisms() {
        let config = standard_config(Family::S, 1, 2).unwrap();
        let lattice = NcLattice::build(&config, 12).unwrap();
        for mode in [RemovalMode::SharesBlock, RemovalMode::SharesOrSingleton] {
            let r = subposet_under_removal(&lattice, mode).unwrap();
            assert!(r.is_isomorphism(&lattice), "{mode:?}");
        }
    }

    #[test]
    fn removal_hypothesis() {
        // interior point
        let config = Configuration::new(
            vec![
                crate::geometry::Point::from_ints(0, 0),
                crate::geometry::Point::from_ints(4, 0),
                crate::geometry::Point::from_ints(1, 1),
                crate::geometry::Point::from_ints(0, 4),
            ],
            None,
        )
        .unwrap();
        let lattice = NcLattice::build(&config, 12).unwrap();
        assert!(matches!(
            subposet_under_removal(&lattice, RemovalMode::SharesBlock),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
