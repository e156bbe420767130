//! Canonical labelling of small multigraphs, used as the memo key for the
//! Tutte recursion.
//!
//! Colour refinement seeded by degree, followed by individualisation of the
//! first non-singleton cell and exhaustive branching. The key is the
//! lexicographically smallest relabelled edge list over all leaves of the
//! search tree. Without automorphism pruning the tree can blow up on very
//! symmetric graphs, so the search gives up after a leaf budget and the
//! caller simply skips caching.

use crate::graph::Multigraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    n: u32,
    edges: Vec<(u32, u32)>,
}

pub const DEFAULT_LEAF_BUDGET: usize = 512;

/// Returns the canonical key of `g`, or `None` when more than `leaf_budget`
/// labellings would have to be compared.
pub fn canonical_key(g: &Multigraph, leaf_budget: usize) -> Option<CanonicalKey> {
    let initial: Vec<u64> = (0..g.n())
        .map(|v| {
            let loops = g.incident(v).iter().filter(|&&(_, w)| w == v).count() as u64;
            ((g.incident(v).len() as u64) << 32) | loops
        })
        .collect();
    let colours = refine(g, rank(&initial));
    let mut search = Search {
        g,
        best: None,
        leaves: 0,
        budget: leaf_budget,
    };
    if !search.descend(colours) {
        return None;
    }
    search.best
}

struct Search<'a> {
    g: &'a Multigraph,
    best: Option<CanonicalKey>,
    leaves: usize,
    budget: usize,
}

impl Search<'_> {
    /// Returns false once the leaf budget is exhausted.
    fn descend(&mut self, colours: Vec<u32>) -> bool {
        let n = colours.len();
        let mut sizes = vec![0usize; n];
        for &c in &colours {
            sizes[c as usize] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaves += 1;
            if self.leaves > self.budget {
                return false;
            }
            let key = relabel(self.g, &colours);
            if self.best.as_ref().is_none_or(|b| key < *b) {
                self.best = Some(key);
            }
            return true;
        };
        let target = target as u32;
        for v in (0..n).filter(|&v| colours[v] == target) {
            let split: Vec<u64> = colours
                .iter()
                .enumerate()
                .map(|(w, &c)| 2 * u64::from(c) + u64::from(c == target && w != v))
                .collect();
            if !self.descend(refine(self.g, rank(&split))) {
                return false;
            }
        }
        true
    }
}

fn relabel(g: &Multigraph, colours: &[u32]) -> CanonicalKey {
    let mut edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (colours[a], colours[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    CanonicalKey {
        n: g.n() as u32,
        edges,
    }
}

/// Replaces arbitrary ordered labels by their dense ranks.
fn rank<T: Ord + Clone>(labels: &[T]) -> Vec<u32> {
    let mut distinct = labels.to_vec();
    distinct.sort();
    distinct.dedup();
    labels
        .iter()
        .map(|l| distinct.binary_search(l).expect("present") as u32)
        .collect()
}

/// Equitable refinement: splits colour classes by the multiset of
/// neighbouring colours until stable. Existing colour order is preserved.
fn refine(g: &Multigraph, mut colours: Vec<u32>) -> Vec<u32> {
    let mut classes = count_distinct(&colours);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut around: Vec<u32> = g.incident(v).iter().map(|&(_, w)| colours[w]).collect();
                around.sort_unstable();
                (colours[v], around)
            })
            .collect();
        let next = rank(&signatures);
        let next_classes = count_distinct(&next);
        colours = next;
        if next_classes == classes {
            return colours;
        }
        classes = next_classes;
    }
}

fn count_distinct(colours: &[u32]) -> usize {
    let mut seen = vec![false; colours.len()];
    colours.iter().filter(|&&c| !std::mem::replace(&mut seen[c as usize], true)).count()
}
