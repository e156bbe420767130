//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own cycle, cut or Tutte routines.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use num_bigint::{BigInt, BigUint};
use partial_orient::{EdgeState, Multigraph, PartialOrientation, TuttePolynomial};

pub fn suite() -> Vec<(&'static str, Multigraph)> {
    vec![
        ("single edge", Multigraph::path(1)),
        ("single loop", Multigraph::cycle(1).unwrap()),
        ("path", Multigraph::path(3)),
        ("star", Multigraph::star(3)),
        ("K3", Multigraph::cycle(3).unwrap()),
        ("theta", Multigraph::theta(3)),
        ("double edge + loop", Multigraph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap()),
        ("K3 + pendant", Multigraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap()),
        ("K4", Multigraph::complete(4).unwrap()),
    ]
}

pub fn graph(name: &str) -> Multigraph {
    suite().into_iter().find(|(n, _)| *n == name).expect("suite graph").1
}

pub fn states(g: &Multigraph) -> impl Iterator<Item = PartialOrientation> {
    let m = g.m();
    (0..3u64.pow(m as u32)).map(move |i| PartialOrientation::from_index(m, i))
}

/// Oriented arcs as (tail, head).
pub fn arcs(g: &Multigraph, o: &PartialOrientation) -> Vec<(usize, usize)> {
    (0..g.m())
        .filter_map(|e| {
            let (a, b) = g.endpoints(e);
            match o.state(e) {
                EdgeState::Forward => Some((a, b)),
                EdgeState::Backward => Some((b, a)),
                EdgeState::Unoriented => None,
            }
        })
        .collect()
}

/// Acyclicity by repeatedly peeling sources (an oriented loop is never a
/// source).
pub fn acyclic_oracle(g: &Multigraph, o: &PartialOrientation) -> bool {
    let arcs = arcs(g, o);
    let mut indeg = vec![0usize; g.n()];
    for &(_, h) in &arcs {
        indeg[h] += 1;
    }
    let mut queue: VecDeque<usize> = (0..g.n()).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = queue.pop_front() {
        removed += 1;
        for &(t, h) in &arcs {
            if t == v {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
    }
    removed == g.n()
}

/// Directed cut by trying every proper nonempty vertex subset.
pub fn has_directed_cut_oracle(g: &Multigraph, o: &PartialOrientation) -> bool {
    let n = g.n();
    (1..(1u32 << n) - 1).any(|mask| {
        let inside = |v: usize| mask >> v & 1 == 1;
        let mut crossing = 0;
        for e in 0..g.m() {
            let (a, b) = g.endpoints(e);
            if inside(a) == inside(b) {
                continue;
            }
            crossing += 1;
            let tail = match o.state(e) {
                EdgeState::Forward => a,
                EdgeState::Backward => b,
                EdgeState::Unoriented => return false,
            };
            if !inside(tail) {
                return false;
            }
        }
        crossing > 0
    })
}

pub fn reachable_from(g: &Multigraph, o: &PartialOrientation, q: usize) -> Vec<bool> {
    let arcs = arcs(g, o);
    let mut seen = vec![false; g.n()];
    seen[q] = true;
    let mut stack = vec![q];
    while let Some(v) = stack.pop() {
        for &(t, h) in &arcs {
            if t == v && !seen[h] {
                seen[h] = true;
                stack.push(h);
            }
        }
    }
    seen
}

fn rank(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    let mut r = 0;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            r += 1;
        }
    }
    r
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Subset expansion `sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))` as integer
/// coefficients.
pub fn rank_nullity_tutte(g: &Multigraph) -> BTreeMap<(u32, u32), BigInt> {
    let m = g.m();
    let full = rank(g.n(), g.edges());
    let mut out: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for mask in 0u32..(1 << m) {
        let subset: Vec<(usize, usize)> = (0..m).filter(|e| mask >> e & 1 == 1).map(|e| g.endpoints(e)).collect();
        let r = rank(g.n(), &subset);
        let (a, b) = ((full - r) as u32, (subset.len() - r) as u32);
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                *out.entry((i, j)).or_default() += binomial(a, i) * binomial(b, j) * sign;
            }
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

pub fn as_signed(t: &TuttePolynomial) -> BTreeMap<(u32, u32), BigInt> {
    t.terms().map(|(k, c)| (k, BigInt::from(c.clone()))).collect()
}

/// `sum over states passing `keep` of k^(#oriented) l^(#unoriented)`.
pub fn weighted(g: &Multigraph, k: u64, l: u64, keep: impl Fn(&PartialOrientation) -> bool) -> BigUint {
    states(g)
        .filter(|o| keep(o))
        .map(|o| {
            let j = o.oriented_count();
            BigUint::from(k).pow(j as u32) * BigUint::from(l).pow((g.m() - j) as u32)
        })
        .sum()
}
