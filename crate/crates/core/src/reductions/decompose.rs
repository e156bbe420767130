//! Edge-disjoint decomposition of the difference between two partial
//! orientations into directed cuts, or into directed cycles and half-open
//! paths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::orientation::{arc, DirectedCutWitness, DirectedCycleWitness, PartialOrientation};

use super::witness::{HalfOpenPath, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeMode {
    /// Orientations related by cut reversals.
    CutOnly,
    /// Orientations with equal indegree sequences.
    CyclePivot,
}

/// Witnesses of `from`, pairwise edge-disjoint, whose application in any
/// order turns `from` into `to`.
pub fn decompose_difference(
    g: &Multigraph,
    from: &PartialOrientation,
    to: &PartialOrientation,
    mode: DecomposeMode,
) -> Result<Vec<Witness>> {
    from.check_len(g)?;
    to.check_len(g)?;
    match mode {
        DecomposeMode::CutOnly => decompose_cuts(g, from, to),
        DecomposeMode::CyclePivot => decompose_cycles_and_paths(g, from, to),
    }
}

/// Reads a potential `f` off the difference (drop by one along every
/// reversed edge, constant across every other edge); the level sets of `f`
/// are the cuts.
fn decompose_cuts(g: &Multigraph, from: &PartialOrientation, to: &PartialOrientation) -> Result<Vec<Witness>> {
    g.require_connected()?;
    let mut drop = vec![None; g.m()];
    for e in from.difference(to) {
        if !from.state(e).is_oriented() || to.state(e) != from.state(e).reversed() || g.is_loop(e) {
            return Err(Error::NoDecomposition);
        }
        drop[e] = arc(g, e, from.state(e));
    }
    let mut f: Vec<Option<i64>> = vec![None; g.n()];
    f[0] = Some(0);
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        let fv = f[v].expect("visited");
        for &(e, w) in g.incident(v) {
            let fw = match drop[e] {
                Some((t, _)) if t == v => fv - 1,
                Some(_) => fv + 1,
                None => fv,
            };
            match f[w] {
                None => {
                    f[w] = Some(fw);
                    queue.push_back(w);
                }
                Some(existing) if existing != fw => return Err(Error::NoDecomposition),
                Some(_) => {}
            }
        }
    }
    let f: Vec<i64> = f.into_iter().map(|x| x.expect("connected")).collect();
    let low = *f.iter().min().expect("nonempty");
    let high = *f.iter().max().expect("nonempty");
    Ok((low + 1..=high)
        .map(|t| Witness::Cut(DirectedCutWitness::from_side(g, f.iter().map(|&x| x >= t).collect())))
        .collect())
}

/// An arc of the walk: edge with its tail and head in `from`.
type Step = (EdgeId, Vertex, Vertex);

/// Pairs, at every vertex, the differing edges whose head it is in `from`
/// with those whose head it is in `to`. Following the pairing backward
/// along `from` traces open walks (from an edge unoriented in `from` to an
/// edge unoriented in `to`) and closed walks; splitting them at repeated
/// vertices leaves half-open paths and simple cycles.
fn decompose_cycles_and_paths(
    g: &Multigraph,
    from: &PartialOrientation,
    to: &PartialOrientation,
) -> Result<Vec<Witness>> {
    if from.indegree_sequence(g) != to.indegree_sequence(g) {
        return Err(Error::IndegreeMismatch);
    }
    let diff = from.difference(to);
    let head_from = |e: EdgeId| arc(g, e, from.state(e)).map(|a| a.1);
    let head_to = |e: EdgeId| arc(g, e, to.state(e)).map(|a| a.1);

    let mut entering_from: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    for &e in &diff {
        if let Some(h) = head_from(e) {
            entering_from[h].push(e);
        }
    }
    // next[x] = the edge whose head in `from` is x's head in `to`.
    let mut next: Vec<Option<EdgeId>> = vec![None; g.m()];
    let mut cursor = vec![0usize; g.n()];
    for &e in &diff {
        if let Some(h) = head_to(e) {
            let partner = *entering_from[h].get(cursor[h]).ok_or(Error::IndegreeMismatch)?;
            cursor[h] += 1;
            next[e] = Some(partner);
        }
    }

    let mut used = vec![false; g.m()];
    let mut out = Vec::new();
    for &start in &diff {
        if head_from(start).is_some() {
            continue;
        }
        // start is the terminal edge; walk back to the first edge.
        let mut chain = vec![start];
        used[start] = true;
        let mut x = start;
        while let Some(y) = next[x] {
            chain.push(y);
            used[y] = true;
            x = y;
        }
        let terminal = chain[0];
        let steps: Vec<Step> = chain[1..]
            .iter()
            .rev()
            .map(|&e| {
                let (t, h) = arc(g, e, from.state(e)).expect("oriented in from");
                (e, t, h)
            })
            .collect();
        if steps.is_empty() {
            return Err(Error::NoDecomposition);
        }
        split_open(steps, terminal, to, &mut out);
    }
    for &start in &diff {
        if used[start] {
            continue;
        }
        let mut chain = Vec::new();
        let mut x = start;
        while !used[x] {
            used[x] = true;
            chain.push(x);
            x = next[x].ok_or(Error::NoDecomposition)?;
        }
        let steps: Vec<Step> = chain
            .iter()
            .rev()
            .map(|&e| {
                let (t, h) = arc(g, e, from.state(e)).expect("oriented in from");
                (e, t, h)
            })
            .collect();
        split_closed(steps, &mut out);
    }
    Ok(out)
}

fn split_open(mut steps: Vec<Step>, terminal: EdgeId, to: &PartialOrientation, out: &mut Vec<Witness>) {
    loop {
        let repeat = (0..steps.len()).find_map(|p| ((p + 1)..steps.len()).find(|&q| steps[q].2 == steps[p].2).map(|q| (p, q)));
        let Some((p, q)) = repeat else { break };
        let cycle: Vec<Step> = steps.drain(p + 1..=q).collect();
        split_closed(cycle, out);
    }
    let mut vertices = vec![steps[0].1];
    vertices.extend(steps.iter().map(|s| s.2));
    out.push(Witness::Path(HalfOpenPath {
        vertices,
        edges: steps.iter().map(|s| s.0).collect(),
        terminal,
        imagined: to.state(terminal).reversed(),
    }));
}

fn split_closed(steps: Vec<Step>, out: &mut Vec<Witness>) {
    let repeat = (0..steps.len()).find_map(|p| ((p + 1)..steps.len()).find(|&q| steps[q].1 == steps[p].1).map(|q| (p, q)));
    match repeat {
        Some((p, q)) => {
            let mut outer = steps[..p].to_vec();
            outer.extend_from_slice(&steps[q..]);
            split_closed(steps[p..q].to_vec(), out);
            split_closed(outer, out);
        }
        None => out.push(Witness::Cycle(DirectedCycleWitness {
            edges: steps.iter().map(|s| s.0).collect(),
            vertices: steps.iter().map(|s| s.1).collect(),
        })),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::EdgeState::{self, Backward as B, Forward as F, Unoriented as U};
    use crate::reductions::moves::Move;

    fn o(states: &[EdgeState]) -> PartialOrientation {
        PartialOrientation::from_states(states.to_vec())
    }

    fn replay(g: &Multigraph, start: &PartialOrientation, ws: &[Witness]) -> PartialOrientation {
        ws.iter().fold(start.clone(), |cur, w| Move::from(w.clone()).apply(g, &cur).unwrap())
    }

    #[test]
    fn identical_orientations() {
        let g = Multigraph::cycle(3).unwrap();
        for mode in [DecomposeMode::CutOnly, DecomposeMode::CyclePivot] {
            assert!(decompose_difference(&g, &o(&[F, U, B]), &o(&[F, U, B]), mode).unwrap().is_empty());
        }
    }

    #[test]
    fn triangle_cycle() {
        let g = Multigraph::cycle(3).unwrap();
        let ws = decompose_difference(&g, &o(&[F, F, F]), &o(&[B, B, B]), DecomposeMode::CyclePivot).unwrap();
        assert_eq!(ws.len(), 1);
        assert!(matches!(ws[0], Witness::Cycle(_)));
    }

    #[test]
    fn star_cascade() {
        let g = Multigraph::star(3);
        let (a, b) = (o(&[B, U, U]), o(&[U, B, U]));
        let ws = decompose_difference(&g, &a, &b, DecomposeMode::CyclePivot).unwrap();
        assert_eq!(ws.len(), 1);
        assert!(matches!(ws[0], Witness::Path(_)));
        assert_eq!(replay(&g, &a, &ws), b);
    }

    #[test]
    fn lollipop_walk() {
        // a1 = 0->1, a2 = 1->0 (parallel), a3 = 0->2, e = {2,3} unoriented.
        let g = Multigraph::new(4, vec![(0, 1), (1, 0), (0, 2), (2, 3)]).unwrap();
        let a = o(&[F, F, F, U]);
        let b = o(&[U, B, B, B]);
        let ws = decompose_difference(&g, &a, &b, DecomposeMode::CyclePivot).unwrap();
        assert_eq!(replay(&g, &a, &ws), b);
        assert_eq!(ws.len(), 1);
    }

    #[test]
    fn cut_levels() {
        let g = Multigraph::path(3);
        let a = o(&[F, U, B]);
        let b = o(&[B, U, F]);
        let ws = decompose_difference(&g, &a, &b, DecomposeMode::CutOnly).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(replay(&g, &a, &ws), b);
        assert_eq!(
            decompose_difference(&g, &a, &o(&[U, U, B]), DecomposeMode::CutOnly),
            Err(Error::NoDecomposition)
        );
        assert_eq!(
            decompose_difference(&g, &a, &o(&[U, U, B]), DecomposeMode::CyclePivot),
            Err(Error::IndegreeMismatch)
        );
    }
}
