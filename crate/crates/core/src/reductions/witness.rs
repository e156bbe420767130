//! Exhaustive scans for directed bonds, simple directed cycles and half-open
//! paths, and the minimality test against a reference pair.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::orientation::{
    arc, is_directed_cut, DirectedCutWitness, DirectedCycleWitness, EdgeState, PartialOrientation,
};

use super::pair::ReferencePair;

/// Vertex-subset scans are exponential in `n`.
pub const MAX_BOND_SCAN_VERTICES: usize = 20;

/// A directed path `edges[i]: vertices[i] -> vertices[i + 1]` followed by an
/// unoriented `terminal` edge at the last vertex, imagined in state
/// `imagined` so that it leaves that vertex.
///
/// `vertices[1..]` are pairwise distinct; the start vertex and the far end of
/// the terminal edge may coincide with path vertices. This is exactly the
/// family closed under [`HalfOpenPath::reversed`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfOpenPath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    pub terminal: EdgeId,
    pub imagined: EdgeState,
}

impl HalfOpenPath {
    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("nonempty")
    }

    /// All edges, terminal last.
    pub fn all_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied().chain(std::iter::once(self.terminal))
    }

    pub fn validate(&self, g: &Multigraph, o: &PartialOrientation) -> Result<()> {
        let k = self.edges.len();
        if k == 0 {
            return Err(Error::InvalidPath("needs at least one oriented edge"));
        }
        if self.vertices.len() != k + 1 {
            return Err(Error::InvalidPath("vertex and edge counts disagree"));
        }
        let mut inner = self.vertices[1..].to_vec();
        inner.sort_unstable();
        inner.dedup();
        if inner.len() != k {
            return Err(Error::InvalidPath("path revisits a vertex"));
        }
        for (i, &e) in self.edges.iter().enumerate() {
            g.check_edge(e)?;
            if arc(g, e, o.state(e)) != Some((self.vertices[i], self.vertices[i + 1])) {
                return Err(Error::InvalidPath("edge not oriented along the path"));
            }
        }
        g.check_edge(self.terminal)?;
        if o.state(self.terminal).is_oriented() {
            return Err(Error::InvalidPath("terminal edge is oriented"));
        }
        match arc(g, self.terminal, self.imagined) {
            Some((t, _)) if t == self.last() => Ok(()),
            _ => Err(Error::InvalidPath("terminal edge does not leave the last vertex")),
        }
    }

    /// The path left behind by a cascade along `self`: the terminal edge
    /// becomes the first edge and the first edge becomes the new terminal.
    pub fn reversed(&self, g: &Multigraph, o: &PartialOrientation) -> HalfOpenPath {
        let (_, far) = arc(g, self.terminal, self.imagined).expect("imagined is oriented");
        let mut vertices = vec![far];
        vertices.extend(self.vertices[1..].iter().rev());
        let mut edges = vec![self.terminal];
        edges.extend(self.edges[1..].iter().rev());
        HalfOpenPath {
            vertices,
            edges,
            terminal: self.edges[0],
            imagined: o.state(self.edges[0]).reversed(),
        }
    }

    /// State of `e` along the path (the imagined state for the terminal).
    pub fn state_along(&self, o: &PartialOrientation, e: EdgeId) -> EdgeState {
        if e == self.terminal {
            self.imagined
        } else {
            o.state(e)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessKind {
    Cut,
    Cycle,
    HalfOpenPath,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    Cut(DirectedCutWitness),
    Cycle(DirectedCycleWitness),
    Path(HalfOpenPath),
}

impl Witness {
    pub fn kind(&self) -> WitnessKind {
        match self {
            Witness::Cut(_) => WitnessKind::Cut,
            Witness::Cycle(_) => WitnessKind::Cycle,
            Witness::Path(_) => WitnessKind::HalfOpenPath,
        }
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        match self {
            Witness::Cut(c) => c.crossing.clone(),
            Witness::Cycle(c) => c.edges.clone(),
            Witness::Path(p) => p.all_edges().collect(),
        }
    }

    /// `(edge, state)` for every edge of the witness, imagined state for a
    /// path's terminal edge.
    pub fn pattern(&self, o: &PartialOrientation) -> Vec<(EdgeId, EdgeState)> {
        let mut pattern: Vec<_> = match self {
            Witness::Path(p) => p.all_edges().map(|e| (e, p.state_along(o, e))).collect(),
            _ => self.edges().into_iter().map(|e| (e, o.state(e))).collect(),
        };
        pattern.sort_unstable();
        pattern
    }

    /// Minimal iff the lowest-ranked edge is oriented as in the reference.
    pub fn is_minimal(&self, o: &PartialOrientation, pair: &ReferencePair) -> bool {
        let pattern = self.pattern(o);
        let &(e, s) = pattern
            .iter()
            .min_by_key(|(e, _)| pair.rank(*e))
            .expect("witnesses are nonempty");
        pair.agrees(e, s)
    }
}

/// Deterministic witness order: sorted edge-id set, then the orientation
/// pattern, then the kind.
pub fn witness_order(o: &PartialOrientation, a: &Witness, b: &Witness) -> Ordering {
    let key = |w: &Witness| {
        let pattern = w.pattern(o);
        let ids: Vec<EdgeId> = pattern.iter().map(|p| p.0).collect();
        (ids, pattern, w.kind())
    };
    key(a).cmp(&key(b))
}

pub fn check_bond_scan(g: &Multigraph) -> Result<()> {
    if g.n() > MAX_BOND_SCAN_VERTICES {
        return Err(Error::TooManyVertices {
            n: g.n(),
            limit: MAX_BOND_SCAN_VERTICES,
        });
    }
    Ok(())
}

/// Directed cuts whose two sides each induce a connected subgraph.
pub fn directed_bonds(g: &Multigraph, o: &PartialOrientation) -> Vec<DirectedCutWitness> {
    let n = g.n();
    assert!(n <= MAX_BOND_SCAN_VERTICES, "bond scan limited to {MAX_BOND_SCAN_VERTICES} vertices");
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut side = vec![false; n];
    let mut outside = vec![false; n];
    for mask in 1..(1u32 << n) - 1 {
        for v in 0..n {
            side[v] = mask >> v & 1 == 1;
            outside[v] = !side[v];
        }
        if is_directed_cut(g, o, &side) && g.induces_connected(&side) && g.induces_connected(&outside) {
            out.push(DirectedCutWitness::from_side(g, side.clone()));
        }
    }
    out
}

/// Every simple directed cycle once, oriented loops included.
pub fn directed_cycles(g: &Multigraph, o: &PartialOrientation) -> Vec<DirectedCycleWitness> {
    let mut out = Vec::new();
    for e in 0..g.m() {
        if g.is_loop(e) && o.state(e).is_oriented() {
            out.push(DirectedCycleWitness {
                edges: vec![e],
                vertices: vec![g.endpoints(e).0],
            });
        }
    }
    let arcs = o.out_arcs(g);
    let mut on_path = vec![false; g.n()];
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    // Each cycle is reported from its smallest vertex.
    for start in 0..g.n() {
        on_path[start] = true;
        vertices.push(start);
        cycle_search(start, start, &arcs, &mut on_path, &mut vertices, &mut edges, &mut out);
        vertices.pop();
        on_path[start] = false;
    }
    out
}

fn cycle_search(
    start: Vertex,
    v: Vertex,
    arcs: &[Vec<(EdgeId, Vertex)>],
    on_path: &mut [bool],
    vertices: &mut Vec<Vertex>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<DirectedCycleWitness>,
) {
    for &(e, w) in &arcs[v] {
        if w == v {
            continue;
        }
        if w == start {
            let mut cycle_edges = edges.clone();
            cycle_edges.push(e);
            out.push(DirectedCycleWitness {
                edges: cycle_edges,
                vertices: vertices.clone(),
            });
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            vertices.push(w);
            edges.push(e);
            cycle_search(start, w, arcs, on_path, vertices, edges, out);
            edges.pop();
            vertices.pop();
            on_path[w] = false;
        }
    }
}

/// Every half-open path of `o`. An unoriented loop at the last vertex yields
/// two paths, one per imagined state.
pub fn half_open_paths(g: &Multigraph, o: &PartialOrientation) -> Vec<HalfOpenPath> {
    let arcs = o.out_arcs(g);
    let mut out = Vec::new();
    let mut inner = vec![false; g.n()];
    for (v0, first) in arcs.iter().enumerate() {
        for &(e, v1) in first {
            let mut vertices = vec![v0, v1];
            let mut edges = vec![e];
            inner[v1] = true;
            path_search(g, o, &arcs, &mut inner, &mut vertices, &mut edges, &mut out);
            inner[v1] = false;
        }
    }
    out
}

fn path_search(
    g: &Multigraph,
    o: &PartialOrientation,
    arcs: &[Vec<(EdgeId, Vertex)>],
    inner: &mut [bool],
    vertices: &mut Vec<Vertex>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<HalfOpenPath>,
) {
    let v = *vertices.last().expect("nonempty");
    for &(e, _) in g.incident(v) {
        if o.state(e).is_oriented() {
            continue;
        }
        let imagined: &[EdgeState] = if g.is_loop(e) {
            &[EdgeState::Forward, EdgeState::Backward]
        } else if g.endpoints(e).0 == v {
            &[EdgeState::Forward]
        } else {
            &[EdgeState::Backward]
        };
        for &s in imagined {
            out.push(HalfOpenPath {
                vertices: vertices.clone(),
                edges: edges.clone(),
                terminal: e,
                imagined: s,
            });
        }
    }
    for &(e, w) in &arcs[v] {
        if !inner[w] {
            inner[w] = true;
            vertices.push(w);
            edges.push(e);
            path_search(g, o, arcs, inner, vertices, edges, out);
            edges.pop();
            vertices.pop();
            inner[w] = false;
        }
    }
}

/// All witnesses of the requested kinds, minimal or not.
pub fn witnesses(g: &Multigraph, o: &PartialOrientation, kinds: &[WitnessKind]) -> Vec<Witness> {
    let mut out = Vec::new();
    if kinds.contains(&WitnessKind::Cut) {
        out.extend(directed_bonds(g, o).into_iter().map(Witness::Cut));
    }
    if kinds.contains(&WitnessKind::Cycle) {
        out.extend(directed_cycles(g, o).into_iter().map(Witness::Cycle));
    }
    if kinds.contains(&WitnessKind::HalfOpenPath) {
        out.extend(half_open_paths(g, o).into_iter().map(Witness::Path));
    }
    out
}

/// Every nonminimal witness of the requested kinds, in [`witness_order`].
pub fn nonminimal_witnesses(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    kinds: &[WitnessKind],
) -> Vec<Witness> {
    let mut out: Vec<Witness> = witnesses(g, o, kinds)
        .into_iter()
        .filter(|w| !w.is_minimal(o, pair))
        .collect();
    out.sort_by(|a, b| witness_order(o, a, b));
    out
}

/// The first nonminimal witness in [`witness_order`], if any.
pub fn find_nonminimal(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    kinds: &[WitnessKind],
) -> Option<Witness> {
    nonminimal_witnesses(g, o, pair, kinds).into_iter().next()
}

/// Early-exit test: no nonminimal witness of the given kinds.
pub fn is_minimal_for(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    kinds: &[WitnessKind],
) -> bool {
    witnesses(g, o, kinds).iter().all(|w| w.is_minimal(o, pair))
}

pub fn is_cut_minimal(g: &Multigraph, o: &PartialOrientation, pair: &ReferencePair) -> bool {
    is_minimal_for(g, o, pair, &[WitnessKind::Cut])
}

pub fn is_cycle_minimal(g: &Multigraph, o: &PartialOrientation, pair: &ReferencePair) -> bool {
    is_minimal_for(g, o, pair, &[WitnessKind::Cycle])
}

pub fn is_cycle_path_minimal(g: &Multigraph, o: &PartialOrientation, pair: &ReferencePair) -> bool {
    is_minimal_for(g, o, pair, &[WitnessKind::Cycle, WitnessKind::HalfOpenPath])
}
