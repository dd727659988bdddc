//! Symmetric chain decompositions: verification, the bracketing construction
//! for Boolean lattices, products of decompositions, a layered search for
//! arbitrary graded rank-symmetric posets, and the recursive constructions for
//! the `T`, `U`, `V` and `S` families.

mod families;

pub use families::{
    pivot_pieces, scd_family, scd_s, scd_t, scd_u, scd_v, subposet_under_removal, Piece, PieceCheck,
    Removal, RemovalMode, ScdConstruction,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// Disjoint saturated chains over the elements of a host poset (by index).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

impl ChainDecomposition {
    pub fn new(chains: Vec<Vec<usize>>) -> Self {
        ChainDecomposition { chains }
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn element_count(&self) -> usize {
        self.chains.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ScdViolation {
    EmptyChain { chain: usize },
    OutOfRange { chain: usize, element: usize },
    Repeated { element: usize },
    Uncovered { element: usize },
    NotSaturated { chain: usize, position: usize },
    NotCentered { chain: usize, low: usize, high: usize },
}

/// Outcome of [`verify_scd`]; `violation` is the first problem found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScdReport {
    pub valid: bool,
    pub violation: Option<ScdViolation>,
}

/// Checks disjointness, coverage, saturation and centering.
///
/// Centering is measured against the lowest and highest rank of the poset,
/// which are the ranks of `0̂` and `1̂` for bounded posets.
pub fn verify_scd(poset: &Poset, dec: &ChainDecomposition) -> Result<ScdReport> {
    if !poset.graded_info().is_graded {
        return Err(Error::NotGraded);
    }
    let fail = |v| Ok(ScdReport {
        valid: false,
        violation: Some(v),
    });
    let lo = poset.ranks().iter().copied().min().unwrap_or(0);
    let hi = poset.ranks().iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; poset.len()];
    for (c, chain) in dec.chains.iter().enumerate() {
        if chain.is_empty() {
            return fail(ScdViolation::EmptyChain { chain: c });
        }
        for &e in chain {
            if e >= poset.len() {
                return fail(ScdViolation::OutOfRange { chain: c, element: e });
            }
            if std::mem::replace(&mut seen[e], true) {
                return fail(ScdViolation::Repeated { element: e });
            }
        }
        for (k, w) in chain.windows(2).enumerate() {
            if !poset.is_cover(w[0], w[1]) {
                return fail(ScdViolation::NotSaturated { chain: c, position: k });
            }
        }
        let (low, high) = (poset.rank(chain[0]), poset.rank(chain[chain.len() - 1]));
        if low + high != lo + hi {
            return fail(ScdViolation::NotCentered { chain: c, low, high });
        }
    }
    if let Some(element) = seen.iter().position(|s| !s) {
        return fail(ScdViolation::Uncovered { element });
    }
    Ok(ScdReport {
        valid: true,
        violation: None,
    })
}

/// Bracketing decomposition of `Bool(n)`; element indices are subset bitmasks,
/// matching [`Poset::boolean`].
///
/// Read a subset as a word with `0` = "(" and `1` = ")". Matched pairs are
/// fixed along a chain; the unmatched positions always read `1…1 0…0`, and the
/// chain flips them to `1` from left to right.
pub fn boolean_scd(n: usize) -> ChainDecomposition {
    let mut chains = Vec::new();
    for start in 0usize..1 << n {
        let mut open: Vec<usize> = Vec::new();
        let mut unmatched_one = false;
        for i in 0..n {
            if start >> i & 1 == 0 {
                open.push(i);
            } else if open.pop().is_none() {
                unmatched_one = true;
                break;
            }
        }
        if unmatched_one {
            continue;
        }
        // `open` holds the unmatched zeros, left to right
        let mut chain = vec![start];
        let mut cur = start;
        for &i in &open {
            cur |= 1 << i;
            chain.push(cur);
        }
        chains.push(chain);
    }
    ChainDecomposition { chains }
}

/// Tiles the grid of every pair of chains with `min(a, b)` centered
/// saturated chains: chain `i` runs along row `i` of the first factor and then
/// up column `a − 1 − i`.
pub fn product_chains<A: Clone, B: Clone>(left: &[Vec<A>], right: &[Vec<B>]) -> Vec<Vec<(A, B)>> {
    let mut out = Vec::new();
    for ca in left {
        for cb in right {
            let (p, q) = (ca.len(), cb.len());
            for i in 0..p.min(q) {
                let mut chain = Vec::with_capacity(p + q - 1 - 2 * i);
                for x in 0..p - i {
                    chain.push((ca[x].clone(), cb[i].clone()));
                }
                for y in cb.iter().take(q).skip(i + 1) {
                    chain.push((ca[p - 1 - i].clone(), y.clone()));
                }
                out.push(chain);
            }
        }
    }
    out
}

/// Decomposition of `a.product(b)` from decompositions of the factors.
pub fn product_scd(
    a: &Poset,
    dec_a: &ChainDecomposition,
    b: &Poset,
    dec_b: &ChainDecomposition,
) -> Result<ChainDecomposition> {
    for (p, d, name) in [(a, dec_a, "left"), (b, dec_b, "right")] {
        let report = verify_scd(p, d).map_err(|e| Error::InvalidInput(format!("{name} factor: {e}")))?;
        if !report.valid {
            return Err(Error::InvalidInput(format!(
                "{name} factor decomposition fails: {:?}",
                report.violation
            )));
        }
    }
    let nb = b.len();
    Ok(ChainDecomposition {
        chains: product_chains(&dec_a.chains, &dec_b.chains)
            .into_iter()
            .map(|c| c.into_iter().map(|(i, j)| i * nb + j).collect())
            .collect(),
    })
}

/// Result of [`generic_scd`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScdSearch {
    Found(ChainDecomposition),
    /// Every alternative within the node budget was tried without success.
    Exhausted,
}

pub const DEFAULT_MAX_SCD_ELEMENTS: usize = 2000;
const SEARCH_BUDGET: usize = 2_000_000;

/// Builds a symmetric chain decomposition level by level.
///
/// Chains are grown upward: at each rank the chains that must continue are
/// matched into the next level along covers, and leftover elements of the
/// next level start new chains while that is still below the middle rank.
/// The first matching tried at each level is the lexicographically smallest
/// feasible one; when a later level gets stuck the search backtracks into
/// other matchings.
pub fn generic_scd(poset: &Poset, cap: usize) -> Result<ScdSearch> {
    if poset.len() > cap {
        return Err(Error::TooLarge {
            what: "poset",
            size: poset.len(),
            cap,
        });
    }
    if !poset.is_rank_symmetric()? {
        return Err(Error::NotRankSymmetric);
    }
    if poset.is_empty() {
        return Ok(ScdSearch::Found(ChainDecomposition { chains: vec![] }));
    }
    let lo = poset.ranks().iter().copied().min().unwrap_or(0);
    let top = poset.ranks().iter().copied().max().unwrap_or(0) - lo;
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for i in 0..poset.len() {
        levels[poset.rank(i) - lo].push(i);
    }
    let mut search = LevelSearch {
        poset,
        levels,
        top,
        lo,
        budget: SEARCH_BUDGET,
    };
    let chains: Vec<Vec<usize>> = search.levels[0].iter().map(|&e| vec![e]).collect();
    Ok(match search.extend(0, chains) {
        Some(chains) => ScdSearch::Found(ChainDecomposition { chains }),
        None => ScdSearch::Exhausted,
    })
}

struct LevelSearch<'a> {
    poset: &'a Poset,
    levels: Vec<Vec<usize>>,
    top: usize,
    lo: usize,
    budget: usize,
}

impl LevelSearch<'_> {
    /// Chains currently end at relative rank `r` or below; extend across `r → r+1`.
    fn extend(&mut self, r: usize, chains: Vec<Vec<usize>>) -> Option<Vec<Vec<usize>>> {
        if r == self.top {
            return Some(chains);
        }
        let continuing: Vec<usize> = chains
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                let start = self.poset.rank(c[0]) - self.lo;
                let last = self.poset.rank(c[c.len() - 1]) - self.lo;
                last == r && self.top - start > r
            })
            .map(|(k, _)| k)
            .collect();
        let next = self.levels[r + 1].clone();
        let may_start = 2 * (r + 1) <= self.top;
        let targets: Vec<Vec<usize>> = continuing
            .iter()
            .map(|&k| {
                let end = chains[k][chains[k].len() - 1];
                next.iter()
                    .enumerate()
                    .filter(|&(_, &e)| self.poset.is_cover(end, e))
                    .map(|(t, _)| t)
                    .collect()
            })
            .collect();
        let mut assign = vec![usize::MAX; continuing.len()];
        let mut used = vec![false; next.len()];
        self.assign(0, &targets, &mut assign, &mut used, &mut |me, assign, used| {
            if !may_start && used.iter().any(|u| !u) {
                return None;
            }
            let mut grown = chains.clone();
            for (k, &t) in continuing.iter().zip(assign) {
                grown[*k].push(next[t]);
            }
            for (t, &u) in used.iter().enumerate() {
                if !u {
                    grown.push(vec![next[t]]);
                }
            }
            me.extend(r + 1, grown)
        })
    }

    fn assign(
        &mut self,
        k: usize,
        targets: &[Vec<usize>],
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        done: &mut dyn FnMut(&mut Self, &[usize], &[bool]) -> Option<Vec<Vec<usize>>>,
    ) -> Option<Vec<Vec<usize>>> {
        if self.budget == 0 {
            return None;
        }
        self.budget -= 1;
        if k == targets.len() {
            return done(self, assign, used);
        }
        for &t in &targets[k] {
            if used[t] {
                continue;
            }
            used[t] = true;
            assign[k] = t;
            if has_saturating_matching(&targets[k + 1..], used) {
                if let Some(found) = self.assign(k + 1, targets, assign, used, done) {
                    return Some(found);
                }
            }
            used[t] = false;
        }
        assign[k] = usize::MAX;
        None
    }
}

/// Kuhn's augmenting paths: can every row be matched to a distinct unused column?
fn has_saturating_matching(rows: &[Vec<usize>], used: &[bool]) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; used.len()];
    fn augment(r: usize, rows: &[Vec<usize>], used: &[bool], owner: &mut Vec<Option<usize>>, seen: &mut Vec<bool>) -> bool {
        for &c in &rows[r] {
            if used[c] || seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c].is_none() || augment(owner[c].unwrap(), rows, used, owner, seen) {
                owner[c] = Some(r);
                return true;
            }
        }
        false
    }
    (0..rows.len()).all(|r| {
        let mut seen = vec![false; used.len()];
        augment(r, rows, used, &mut owner, &mut seen)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn single_chain_decomposition() {
        let c = Poset::chain(2);
        let dec = ChainDecomposition::new(vec![vec![0, 1]]);
        assert!(verify_scd(&c, &dec).unwrap().valid);
    }

    #[test]
    fn missing_element_is_reported() {
        let b = Poset::boolean(2);
        let dec = ChainDecomposition::new(vec![vec![0, 1, 3]]);
        let report = verify_scd(&b, &dec).unwrap();
        assert_eq!(report.violation, Some(ScdViolation::Uncovered { element: 2 }));
    }

    #[test]
    fn other_violations() {
        let b = Poset::boolean(2);
        let skip = ChainDecomposition::new(vec![vec![0, 3], vec![1], vec![2]]);
        assert!(matches!(
            verify_scd(&b, &skip).unwrap().violation,
            Some(ScdViolation::NotSaturated { .. })
        ));
        let off = ChainDecomposition::new(vec![vec![0, 1, 3], vec![2, 2]]);
        assert!(matches!(
            verify_scd(&b, &off).unwrap().violation,
            Some(ScdViolation::Repeated { element: 2 })
        ));
        let uncentered = ChainDecomposition::new(vec![vec![0, 1], vec![2, 3]]);
        assert!(matches!(
            verify_scd(&b, &uncentered).unwrap().violation,
            Some(ScdViolation::NotCentered { .. })
        ));
    }

    #[test]
    fn boolean_chain_counts() {
        assert_eq!(boolean_scd(0).chains, vec![vec![0]]);
        let three = boolean_scd(3);
        let mut sizes: Vec<usize> = three.chains.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 4]);
        assert_eq!(boolean_scd(4).len(), 6);
        for n in 0..=8 {
            let dec = boolean_scd(n);
            assert_eq!(dec.len(), binomial(n, n / 2));
            assert!(verify_scd(&Poset::boolean(n), &dec).unwrap().valid, "n={n}");
        }
    }

    // brute-force width: size of the largest antichain of Bool(4)
    #[test]
    fn boolean_width_matches_chain_count() {
        let b = Poset::boolean(4);
        let mut best = 0;
        for set in 0u32..1 << 16 {
            let members: Vec<usize> = (0..16).filter(|i| set >> i & 1 == 1).collect();
            if members.len() <= best {
                continue;
            }
            let antichain = members.iter().all(|&x| members.iter().all(|&y| x == y || !b.leq(x, y)));
            if antichain {
                best = members.len();
            }
        }
        assert_eq!(best, boolean_scd(4).len());
    }

    #[test]
    fn grid_tiling() {
        let chains = product_chains(&[vec![0, 1, 2]], &[vec![0, 1]]);
        assert_eq!(chains, vec![
            vec![(0, 0), (1, 0), (2, 0), (2, 1)],
            vec![(0, 1), (1, 1)],
        ]);
        let a = Poset::chain(3);
        let b = Poset::chain(2);
        let dec = product_scd(
            &a,
            &ChainDecomposition::new(vec![vec![0, 1, 2]]),
            &b,
            &ChainDecomposition::new(vec![vec![0, 1]]),
        )
        .unwrap();
        assert_eq!(dec.len(), 2);
        assert!(verify_scd(&a.product(&b), &dec).unwrap().valid);
    }

    #[test]
    fn boolean_product() {
        let b1 = Poset::boolean(1);
        let d = boolean_scd(1);
        let dec = product_scd(&b1, &d, &b1, &d).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(verify_scd(&b1.product(&b1), &dec).unwrap().valid);
        let bad = ChainDecomposition::new(vec![vec![0]]);
        assert!(matches!(product_scd(&b1, &bad, &b1, &d), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn generic_search_on_boolean() {
        let b3 = Poset::boolean(3);
        let ScdSearch::Found(dec) = generic_scd(&b3, 100).unwrap() else {
            panic!("no decomposition found")
        };
        assert_eq!(dec.len(), 3);
        assert!(verify_scd(&b3, &dec).unwrap().valid);
    }

    #[test]
    fn generic_search_preconditions() {
        // graded, not rank-symmetric: bottom with two atoms and no top
        let vee = Poset::from_leq(3, |i, j| i == j || i == 0, None);
        assert_eq!(generic_scd(&vee, 100), Err(Error::NotRankSymmetric));
        let n5 = Poset::from_leq(5, |i, j| i == j || i == 0 || j == 4 || (i == 1 && j == 2), Some(vec![0, 1, 2, 1, 3]));
        assert_eq!(generic_scd(&n5, 100), Err(Error::NotGraded));
    }
}
