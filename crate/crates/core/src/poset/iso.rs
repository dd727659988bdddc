//! Order isomorphism by backtracking.
//!
//! Elements are first coloured by iterated refinement of
//! `(|down|, |up|, #lower covers, #upper covers)` over the Hasse diagram,
//! computed jointly for both posets so colours are comparable. The search then
//! maps elements in a cover-connected order, only to targets of the same
//! colour, and checks the full order relation against every earlier choice.

use std::collections::BTreeMap;

use super::Poset;
use crate::error::{Error, Result};

/// Default cap on poset size for isomorphism and duality searches.
pub const DEFAULT_MAX_ISO_ELEMENTS: usize = 2000;

fn refine_colors(a: &Poset, b: &Poset) -> (Vec<usize>, Vec<usize>) {
    let posets = [a, b];
    let initial: Vec<Vec<(usize, usize, usize, usize)>> = posets
        .iter()
        .map(|p| {
            let mut down = vec![0usize; p.len()];
            for i in 0..p.len() {
                for j in p.up_set(i).ones() {
                    down[j] += 1;
                }
            }
            (0..p.len())
                .map(|i| (down[i], p.up_set(i).count_ones(..), p.lower_covers(i).len(), p.upper_covers(i).len()))
                .collect()
        })
        .collect();
    let mut start: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for k in initial.iter().flatten() {
        let next = start.len();
        start.entry(*k).or_insert(next);
    }
    let mut colors: Vec<Vec<usize>> = initial
        .iter()
        .map(|ks| ks.iter().map(|k| start[k]).collect())
        .collect();
    let mut classes = 0;
    loop {
        let mut table: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let keys: Vec<Vec<(usize, Vec<usize>, Vec<usize>)>> = posets
            .iter()
            .zip(&colors)
            .map(|(p, c)| {
                (0..p.len())
                    .map(|i| {
                        let mut lo: Vec<usize> = p.lower_covers(i).iter().map(|&j| c[j]).collect();
                        let mut hi: Vec<usize> = p.upper_covers(i).iter().map(|&j| c[j]).collect();
                        lo.sort_unstable();
                        hi.sort_unstable();
                        (c[i], lo, hi)
                    })
                    .collect()
            })
            .collect();
        for k in keys.iter().flatten() {
            let next = table.len();
            table.entry(k.clone()).or_insert(next);
        }
        colors = keys
            .iter()
            .map(|ks| ks.iter().map(|k| table[k]).collect())
            .collect();
        if table.len() == classes {
            break;
        }
        classes = table.len();
    }
    let b_colors = colors.pop().expect("two posets");
    let a_colors = colors.pop().expect("two posets");
    (a_colors, b_colors)
}

fn check_cap(p: &Poset, cap: usize) -> Result<()> {
    if p.len() > cap {
        return Err(Error::TooLarge {
            what: "poset",
            size: p.len(),
            cap,
        });
    }
    Ok(())
}

struct Search<'a> {
    a: &'a Poset,
    b: &'a Poset,
    ca: Vec<usize>,
    cb: Vec<usize>,
    order: Vec<usize>,
    // for each position in `order`, an earlier element joined to it by a cover (and whether it lies above)
    anchor: Vec<Option<(usize, bool)>>,
    by_color: BTreeMap<usize, Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

const UNMAPPED: usize = usize::MAX;

impl Search<'_> {
    fn consistent(&self, x: usize, y: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&w| {
            let v = self.map[w];
            self.a.leq(x, w) == self.b.leq(y, v) && self.a.leq(w, x) == self.b.leq(v, y)
        })
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let candidates: Vec<usize> = match self.anchor[depth] {
            Some((w, above)) => {
                let v = self.map[w];
                let near = if above { self.b.lower_covers(v) } else { self.b.upper_covers(v) };
                near.iter().copied().filter(|&y| self.cb[y] == self.ca[x]).collect()
            }
            None => self.by_color.get(&self.ca[x]).cloned().unwrap_or_default(),
        };
        for y in candidates {
            if self.used[y] || !self.consistent(x, y, depth) {
                continue;
            }
            self.map[x] = y;
            self.used[y] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.used[y] = false;
            self.map[x] = UNMAPPED;
        }
        false
    }
}

/// An order isomorphism `a → b` as an index map, if one exists.
pub fn find_isomorphism(a: &Poset, b: &Poset, cap: usize) -> Result<Option<Vec<usize>>> {
    check_cap(a, cap)?;
    check_cap(b, cap)?;
    if a.len() != b.len() || a.cover_count() != b.cover_count() {
        return Ok(None);
    }
    let (ca, cb) = refine_colors(a, b);
    let histogram = |c: &[usize]| {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for &x in c {
            *h.entry(x).or_default() += 1;
        }
        h
    };
    let (ha, hb) = (histogram(&ca), histogram(&cb));
    if ha != hb {
        return Ok(None);
    }

    // cover-connected order, rarest colours first
    let n = a.len();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut anchor = Vec::with_capacity(n);
    let mut link: Vec<Option<(usize, bool)>> = vec![None; n];
    while order.len() < n {
        let unplaced = (0..n).filter(|&x| !placed[x]);
        let x = unplaced
            .clone()
            .filter(|&x| link[x].is_some())
            .min_by_key(|&x| (ha[&ca[x]], x))
            .or_else(|| unplaced.min_by_key(|&x| (ha[&ca[x]], x)))
            .expect("unplaced element exists");
        anchor.push(link[x]);
        placed[x] = true;
        order.push(x);
        for &y in a.upper_covers(x) {
            link[y].get_or_insert((x, false));
        }
        for &y in a.lower_covers(x) {
            link[y].get_or_insert((x, true));
        }
    }

    let mut by_color: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (y, &c) in cb.iter().enumerate() {
        by_color.entry(c).or_default().push(y);
    }
    let mut search = Search {
        a,
        b,
        ca,
        cb,
        order,
        anchor,
        by_color,
        map: vec![UNMAPPED; n],
        used: vec![false; n],
    };
    if search.run(0) {
        Ok(Some(search.map))
    } else {
        Ok(None)
    }
}

pub fn poset_isomorphic(a: &Poset, b: &Poset, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, cap)?.is_some())
}

/// An order-reversing bijection of `p` onto itself, if one exists.
pub fn is_self_dual(p: &Poset, cap: usize) -> Result<Option<Vec<usize>>> {
    check_cap(p, cap)?;
    find_isomorphism(p, &p.dual(), cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_square_vs_chain() {
        let b2 = Poset::boolean(2);
        let c4 = Poset::chain(4);
        assert!(!poset_isomorphic(&b2, &c4, 100).unwrap());
        assert!(poset_isomorphic(&b2, &Poset::chain(2).product(&Poset::chain(2)), 100).unwrap());
    }

    #[test]
    fn map_is_an_isomorphism() {
        let a = Poset::boolean(3);
        let b = Poset::chain(2).product(&Poset::boolean(2));
        let f = find_isomorphism(&a, &b, 100).unwrap().unwrap();
        for i in 0..a.len() {
            for j in 0..a.len() {
                assert_eq!(a.leq(i, j), b.leq(f[i], f[j]));
            }
        }
    }

    #[test]
    fn duality() {
        assert!(is_self_dual(&Poset::boolean(3), 100).unwrap().is_some());
        // a "Y": bottom, middle, two tops
        let y = Poset::from_leq(4, |i, j| i == j || i == 0 || (i == 1 && j >= 2), None);
        assert!(is_self_dual(&y, 100).unwrap().is_none());
    }

    #[test]
    fn cap() {
        assert!(matches!(
            poset_isomorphic(&Poset::boolean(4), &Poset::boolean(4), 10),
            Err(Error::TooLarge { .. })
        ));
    }
}
