//! The local moves: cut reversal, cycle reversal, edge pivot and the
//! cascade of pivots along a half-open path.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::orientation::{
    arc, crossing_edges, is_directed_cut, DirectedCutWitness, DirectedCycleWitness, EdgeState,
    PartialOrientation,
};

use super::witness::{HalfOpenPath, Witness};

/// Reverses every edge crossing `side`, which must be a directed cut.
pub fn apply_cut_reversal(g: &Multigraph, o: &PartialOrientation, side: &[bool]) -> Result<PartialOrientation> {
    o.check_len(g)?;
    if side.len() != g.n() || !is_directed_cut(g, o, side) {
        return Err(Error::NotDirectedCut);
    }
    let mut out = o.clone();
    for e in crossing_edges(g, side) {
        out.reverse_edge(e);
    }
    Ok(out)
}

pub fn apply_cycle_reversal(
    g: &Multigraph,
    o: &PartialOrientation,
    cycle: &DirectedCycleWitness,
) -> Result<PartialOrientation> {
    o.check_len(g)?;
    cycle.validate(g, o)?;
    let mut out = o.clone();
    for &e in &cycle.edges {
        out.reverse_edge(e);
    }
    Ok(out)
}

/// Unorients `into` (oriented with head `v`) and orients the unoriented
/// edge `unoriented` toward `v`. An unoriented loop at `v` becomes
/// `Forward`.
pub fn apply_edge_pivot(
    g: &Multigraph,
    o: &PartialOrientation,
    unoriented: EdgeId,
    into: EdgeId,
    v: Vertex,
) -> Result<PartialOrientation> {
    let target = EdgeState::entering(g.endpoints(unoriented), v);
    pivot_to(g, o, unoriented, target, into, v)
}

/// Pivot with an explicit final state for `unoriented`; the state must point
/// into `v` (either state does for a loop).
pub(crate) fn pivot_to(
    g: &Multigraph,
    o: &PartialOrientation,
    unoriented: EdgeId,
    target: EdgeState,
    into: EdgeId,
    v: Vertex,
) -> Result<PartialOrientation> {
    o.check_len(g)?;
    g.check_edge(unoriented)?;
    g.check_edge(into)?;
    g.check_vertex(v)?;
    if unoriented == into {
        return Err(Error::InvalidPivot("the two edges must differ"));
    }
    if o.state(unoriented).is_oriented() {
        return Err(Error::InvalidPivot("first edge is already oriented"));
    }
    if !matches!(arc(g, unoriented, target), Some((_, h)) if h == v) {
        return Err(Error::InvalidPivot("first edge is not incident to the pivot vertex"));
    }
    if !matches!(arc(g, into, o.state(into)), Some((_, h)) if h == v) {
        return Err(Error::InvalidPivot("second edge is not oriented into the pivot vertex"));
    }
    let mut out = o.clone();
    out.set(unoriented, target);
    out.set(into, EdgeState::Unoriented);
    Ok(out)
}

/// Runs the pivots of a Jacob's ladder cascade from the terminal end
/// backward. Every edge of the path ends up reversed: the terminal edge is
/// oriented into the last vertex, the interior edges flip, and the first edge
/// becomes unoriented.
pub fn apply_cascade(g: &Multigraph, o: &PartialOrientation, path: &HalfOpenPath) -> Result<PartialOrientation> {
    o.check_len(g)?;
    path.validate(g, o)?;
    let k = path.edges.len();
    let mut out = pivot_to(g, o, path.terminal, path.imagined.reversed(), path.edges[k - 1], path.vertices[k])?;
    for i in (1..k).rev() {
        // edges[i] was just unoriented; point it back into vertices[i].
        let target = EdgeState::entering(g.endpoints(path.edges[i]), path.vertices[i]);
        out = pivot_to(g, &out, path.edges[i], target, path.edges[i - 1], path.vertices[i])?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    CutReversal(DirectedCutWitness),
    CycleReversal(DirectedCycleWitness),
    Pivot { unoriented: EdgeId, into: EdgeId, vertex: Vertex },
    Cascade(HalfOpenPath),
}

impl Move {
    pub fn apply(&self, g: &Multigraph, o: &PartialOrientation) -> Result<PartialOrientation> {
        match self {
            Move::CutReversal(c) => apply_cut_reversal(g, o, &c.side),
            Move::CycleReversal(c) => apply_cycle_reversal(g, o, c),
            Move::Pivot { unoriented, into, vertex } => apply_edge_pivot(g, o, *unoriented, *into, *vertex),
            Move::Cascade(p) => apply_cascade(g, o, p),
        }
    }

    pub fn describe(&self) -> String {
        fn ids(edges: &[EdgeId]) -> String {
            edges.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            Move::CutReversal(c) => {
                let side: Vec<String> = c.vertices().iter().map(ToString::to_string).collect();
                format!("cut X={{{}}} edges [{}]", side.join(","), ids(&c.crossing))
            }
            Move::CycleReversal(c) => format!("cycle edges [{}]", ids(&c.edges)),
            Move::Pivot { unoriented, into, vertex } => {
                format!("pivot at {vertex}: orient {unoriented}, unorient {into}")
            }
            Move::Cascade(p) => format!("cascade edges [{}] + {}", ids(&p.edges), p.terminal),
        }
    }
}

impl From<Witness> for Move {
    fn from(w: Witness) -> Self {
        match w {
            Witness::Cut(c) => Move::CutReversal(c),
            Witness::Cycle(c) => Move::CycleReversal(c),
            Witness::Path(p) => Move::Cascade(p),
        }
    }
}

/// Moves applied in order; replaying from the input reproduces the output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub moves: Vec<Move>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn replay(&self, g: &Multigraph, start: &PartialOrientation) -> Result<PartialOrientation> {
        self.moves.iter().try_fold(start.clone(), |o, mv| mv.apply(g, &o))
    }
}
