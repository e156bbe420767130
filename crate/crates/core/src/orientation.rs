//! Partial orientations: representation, enumeration and the two structural
//! predicates (directed cycles and directed cuts).

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::graph::{EdgeClass, EdgeId, Multigraph, Vertex};

/// State of one edge relative to its stored `(tail, head)` direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum EdgeState {
    Unoriented = 0,
    Forward = 1,
    Backward = 2,
}

impl EdgeState {
    pub const ALL: [EdgeState; 3] = [EdgeState::Unoriented, EdgeState::Forward, EdgeState::Backward];

    pub fn is_oriented(self) -> bool {
        self != EdgeState::Unoriented
    }

    pub fn reversed(self) -> Self {
        match self {
            EdgeState::Unoriented => EdgeState::Unoriented,
            EdgeState::Forward => EdgeState::Backward,
            EdgeState::Backward => EdgeState::Forward,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EdgeState::Unoriented => '0',
            EdgeState::Forward => '+',
            EdgeState::Backward => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(EdgeState::Unoriented),
            '+' => Some(EdgeState::Forward),
            '-' => Some(EdgeState::Backward),
            _ => None,
        }
    }

    /// The state that orients edge `(t, h)` from `from` to the other end.
    /// For a loop this is `Forward`.
    pub fn leaving(endpoints: (Vertex, Vertex), from: Vertex) -> Self {
        if endpoints.0 == from {
            EdgeState::Forward
        } else {
            EdgeState::Backward
        }
    }

    /// The state that orients edge `(t, h)` into `to`. For a loop this is
    /// `Forward`.
    pub fn entering(endpoints: (Vertex, Vertex), to: Vertex) -> Self {
        if endpoints.1 == to {
            EdgeState::Forward
        } else {
            EdgeState::Backward
        }
    }
}

/// `(tail, head)` of edge `e` under `state`, or `None` when unoriented.
pub fn arc(g: &Multigraph, e: EdgeId, state: EdgeState) -> Option<(Vertex, Vertex)> {
    let (t, h) = g.endpoints(e);
    match state {
        EdgeState::Unoriented => None,
        EdgeState::Forward => Some((t, h)),
        EdgeState::Backward => Some((h, t)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialOrientation {
    states: Vec<EdgeState>,
}

impl PartialOrientation {
    pub fn unoriented(m: usize) -> Self {
        Self {
            states: vec![EdgeState::Unoriented; m],
        }
    }

    pub fn from_states(states: Vec<EdgeState>) -> Self {
        Self { states }
    }

    /// State number `index` of the base-3 counter over edge ids, edge 0 being
    /// the least significant digit.
    pub fn from_index(m: usize, mut index: u64) -> Self {
        let states = (0..m)
            .map(|_| {
                let s = EdgeState::ALL[(index % 3) as usize];
                index /= 3;
                s
            })
            .collect();
        Self { states }
    }

    pub fn index(&self) -> u64 {
        self.states.iter().rev().fold(0, |acc, &s| acc * 3 + s as u64)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn state(&self, e: EdgeId) -> EdgeState {
        self.states[e]
    }

    pub fn set(&mut self, e: EdgeId, s: EdgeState) {
        self.states[e] = s;
    }

    pub fn reverse_edge(&mut self, e: EdgeId) {
        self.states[e] = self.states[e].reversed();
    }

    pub fn oriented_count(&self) -> usize {
        self.states.iter().filter(|s| s.is_oriented()).count()
    }

    pub fn is_full(&self) -> bool {
        self.states.iter().all(|s| s.is_oriented())
    }

    pub fn check_len(&self, g: &Multigraph) -> Result<()> {
        if self.len() == g.m() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.m(),
                found: self.len(),
            })
        }
    }

    /// Edges on which `self` and `other` differ.
    pub fn difference(&self, other: &Self) -> Vec<EdgeId> {
        (0..self.len()).filter(|&e| self.states[e] != other.states[e]).collect()
    }

    pub fn indegree_sequence(&self, g: &Multigraph) -> IndegreeSequence {
        let mut d = vec![0; g.n()];
        for (e, &s) in self.states.iter().enumerate() {
            if let Some((_, h)) = arc(g, e, s) {
                d[h] += 1;
            }
        }
        IndegreeSequence(d)
    }

    /// Out-adjacency over oriented edges: `out[v]` lists `(edge, head)`.
    pub fn out_arcs(&self, g: &Multigraph) -> Vec<Vec<(EdgeId, Vertex)>> {
        let mut out = vec![Vec::new(); g.n()];
        for (e, &s) in self.states.iter().enumerate() {
            if let Some((t, h)) = arc(g, e, s) {
                out[t].push((e, h));
            }
        }
        out
    }

    /// Some directed cycle, if the oriented edges contain one. Oriented loops
    /// are reported first as cycles of length one.
    pub fn find_directed_cycle(&self, g: &Multigraph) -> Option<DirectedCycleWitness> {
        if let Some(e) = (0..g.m()).find(|&e| g.is_loop(e) && self.states[e].is_oriented()) {
            return Some(DirectedCycleWitness {
                edges: vec![e],
                vertices: vec![g.endpoints(e).0],
            });
        }
        let out = self.out_arcs(g);
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; g.n()];
        for root in 0..g.n() {
            if mark[root] != Mark::New {
                continue;
            }
            // Each frame: (vertex, edge that entered it, next arc index).
            let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            mark[root] = Mark::Active;
            while let Some(top) = stack.last_mut() {
                let (v, i) = (top.0, top.2);
                if let Some(&(e, w)) = out[v].get(i) {
                    top.2 += 1;
                    match mark[w] {
                        Mark::New => {
                            mark[w] = Mark::Active;
                            stack.push((w, Some(e), 0));
                        }
                        Mark::Active => {
                            let start = stack.iter().position(|f| f.0 == w).expect("on stack");
                            let mut edges: Vec<EdgeId> =
                                stack[start + 1..].iter().map(|f| f.1.expect("entered")).collect();
                            edges.push(e);
                            let vertices = stack[start..].iter().map(|f| f.0).collect();
                            return Some(DirectedCycleWitness { edges, vertices });
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[v] = Mark::Done;
                    stack.pop();
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self, g: &Multigraph) -> bool {
        self.find_directed_cycle(g).is_none()
    }

    /// Some directed cut, found through the strongly connected components of
    /// the mixed graph (an unoriented edge counts as two opposite arcs). The
    /// returned side `X` is the complement of the sink component containing
    /// the smallest vertex.
    pub fn find_directed_cut(&self, g: &Multigraph) -> Result<Option<DirectedCutWitness>> {
        g.require_connected()?;
        let component = self.mixed_components(g);
        let count = component.iter().max().map_or(0, |&c| c + 1);
        if count <= 1 {
            return Ok(None);
        }
        let mut has_exit = vec![false; count];
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            let (ct, ch) = (component[t], component[h]);
            if ct == ch {
                continue;
            }
            match self.states[e] {
                EdgeState::Forward => has_exit[ct] = true,
                EdgeState::Backward => has_exit[ch] = true,
                EdgeState::Unoriented => {
                    has_exit[ct] = true;
                    has_exit[ch] = true;
                }
            }
        }
        let sink = (0..g.n())
            .map(|v| component[v])
            .find(|&c| !has_exit[c])
            .expect("a condensation has a sink");
        let side: Vec<bool> = component.iter().map(|&c| c != sink).collect();
        Ok(Some(DirectedCutWitness::from_side(g, side)))
    }

    pub fn is_strongly_connected(&self, g: &Multigraph) -> Result<bool> {
        Ok(self.find_directed_cut(g)?.is_none())
    }

    /// Strongly connected component id of each vertex in the mixed graph.
    fn mixed_components(&self, g: &Multigraph) -> Vec<usize> {
        let mut dg = DiGraph::<(), ()>::with_capacity(g.n(), 2 * g.m());
        let nodes: Vec<_> = (0..g.n()).map(|_| dg.add_node(())).collect();
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            if t == h {
                continue;
            }
            match self.states[e] {
                EdgeState::Forward => {
                    dg.add_edge(nodes[t], nodes[h], ());
                }
                EdgeState::Backward => {
                    dg.add_edge(nodes[h], nodes[t], ());
                }
                EdgeState::Unoriented => {
                    dg.add_edge(nodes[t], nodes[h], ());
                    dg.add_edge(nodes[h], nodes[t], ());
                }
            }
        }
        let mut component = vec![0; g.n()];
        for (c, scc) in tarjan_scc(&dg).into_iter().enumerate() {
            for v in scc {
                component[v.index()] = c;
            }
        }
        component
    }

    /// Orients every unoriented edge along a linear extension of the
    /// reachability order of the oriented arcs (smallest available vertex
    /// first).
    pub fn extend_to_full_acyclic(&self, g: &Multigraph) -> Result<Self> {
        self.check_len(g)?;
        if let Some(e) = (0..g.m()).find(|&e| g.is_loop(e)) {
            return Err(Error::HasLoop(e));
        }
        let out = self.out_arcs(g);
        let mut indeg = vec![0usize; g.n()];
        for arcs in &out {
            for &(_, h) in arcs {
                indeg[h] += 1;
            }
        }
        let mut ready: BinaryHeap<Reverse<Vertex>> =
            (0..g.n()).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut position = vec![usize::MAX; g.n()];
        let mut next = 0;
        while let Some(Reverse(v)) = ready.pop() {
            position[v] = next;
            next += 1;
            for &(_, h) in &out[v] {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.push(Reverse(h));
                }
            }
        }
        if next < g.n() {
            return Err(Error::NotAcyclic);
        }
        let mut full = self.clone();
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            if !self.states[e].is_oriented() {
                let s = if position[t] < position[h] {
                    EdgeState::Forward
                } else {
                    EdgeState::Backward
                };
                full.states[e] = s;
            }
        }
        Ok(full)
    }

    /// Orients every unoriented edge so that no directed cut appears, by
    /// backtracking over the unoriented edges in id order. Loops are oriented
    /// `Forward`.
    pub fn extend_to_full_strong(&self, g: &Multigraph) -> Result<Self> {
        self.check_len(g)?;
        if let Some(e) = g.edge_classes().iter().position(|&c| c == EdgeClass::Bridge) {
            return Err(Error::HasBridge(e));
        }
        if !self.is_strongly_connected(g)? {
            return Err(Error::NotStronglyConnected);
        }
        let mut work = self.clone();
        let open: Vec<EdgeId> = (0..g.m()).filter(|&e| !self.states[e].is_oriented()).collect();
        for &e in &open {
            if g.is_loop(e) {
                work.states[e] = EdgeState::Forward;
            }
        }
        let open: Vec<EdgeId> = open.into_iter().filter(|&e| !g.is_loop(e)).collect();
        if extend_strong(g, &mut work, &open)? {
            Ok(work)
        } else {
            Err(Error::ExtensionFailed)
        }
    }
}

fn extend_strong(g: &Multigraph, work: &mut PartialOrientation, open: &[EdgeId]) -> Result<bool> {
    let Some((&e, rest)) = open.split_first() else {
        return Ok(true);
    };
    for s in [EdgeState::Forward, EdgeState::Backward] {
        work.states[e] = s;
        if work.is_strongly_connected(g)? && extend_strong(g, work, rest)? {
            return Ok(true);
        }
    }
    work.states[e] = EdgeState::Unoriented;
    Ok(false)
}

impl fmt::Display for PartialOrientation {
    /// One character per edge: `0` unoriented, `+` forward, `-` backward.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.states.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for PartialOrientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| {
                EdgeState::from_symbol(c)
                    .ok_or_else(|| Error::Parse(format!("invalid orientation character {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_states)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndegreeSequence(pub Vec<usize>);

impl IndegreeSequence {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// A simple directed cycle: `edges[i]` runs from `vertices[i]` to
/// `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedCycleWitness {
    pub edges: Vec<EdgeId>,
    pub vertices: Vec<Vertex>,
}

impl DirectedCycleWitness {
    /// Checks that the witness is a simple cycle oriented along traversal in
    /// `o`.
    pub fn validate(&self, g: &Multigraph, o: &PartialOrientation) -> Result<()> {
        let k = self.edges.len();
        if k == 0 || self.vertices.len() != k {
            return Err(Error::NotDirectedCycle);
        }
        let mut seen_v = self.vertices.clone();
        seen_v.sort_unstable();
        seen_v.dedup();
        let mut seen_e = self.edges.clone();
        seen_e.sort_unstable();
        seen_e.dedup();
        if seen_v.len() != k || seen_e.len() != k {
            return Err(Error::NotDirectedCycle);
        }
        for i in 0..k {
            let e = self.edges[i];
            g.check_edge(e)?;
            if arc(g, e, o.state(e)) != Some((self.vertices[i], self.vertices[(i + 1) % k])) {
                return Err(Error::NotDirectedCycle);
            }
        }
        Ok(())
    }
}

/// A vertex set `X` whose crossing edges are all oriented out of `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedCutWitness {
    pub side: Vec<bool>,
    pub crossing: Vec<EdgeId>,
}

impl DirectedCutWitness {
    pub fn from_side(g: &Multigraph, side: Vec<bool>) -> Self {
        let crossing = crossing_edges(g, &side);
        Self { side, crossing }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }
}

pub fn crossing_edges(g: &Multigraph, side: &[bool]) -> Vec<EdgeId> {
    (0..g.m())
        .filter(|&e| {
            let (t, h) = g.endpoints(e);
            side[t] != side[h]
        })
        .collect()
}

/// Whether every edge crossing `side` is oriented out of it and at least one
/// edge crosses.
pub fn is_directed_cut(g: &Multigraph, o: &PartialOrientation, side: &[bool]) -> bool {
    let mut any = false;
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if side[t] == side[h] {
            continue;
        }
        any = true;
        match arc(g, e, o.state(e)) {
            Some((a, _)) if side[a] => {}
            _ => return false,
        }
    }
    any
}

/// The `3^m` partial orientations of an `m`-edge graph in counter order.
#[derive(Clone, Copy, Debug)]
pub struct StateSpace {
    m: usize,
}

impl StateSpace {
    pub fn new(m: usize) -> Self {
        Self { m }
    }

    pub fn size(&self) -> u64 {
        3u64.pow(self.m as u32)
    }

    pub fn iter(&self) -> impl Iterator<Item = PartialOrientation> + '_ {
        self.range(0, self.size())
    }

    /// States with counter index in `start..end`.
    pub fn range(&self, start: u64, end: u64) -> impl Iterator<Item = PartialOrientation> + '_ {
        (start..end.min(self.size())).map(|i| PartialOrientation::from_index(self.m, i))
    }
}

pub fn enumerate_partial_orientations(g: &Multigraph) -> impl Iterator<Item = PartialOrientation> {
    let space = StateSpace::new(g.m());
    (0..space.size()).map(move |i| PartialOrientation::from_index(space.m, i))
}
