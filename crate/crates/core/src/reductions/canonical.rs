//! Greedy canonicalisation: keep applying the move that discharges some
//! nonminimal witness until none is left.

use rand::Rng;

use crate::error::Result;
use crate::graph::Multigraph;
use crate::orientation::PartialOrientation;

use super::moves::{Move, MoveTrace};
use super::pair::ReferencePair;
use super::witness::{check_bond_scan, nonminimal_witnesses, Witness, WitnessKind};
use super::MinimalClass;

/// Far above anything the greedy needs at enumeration scale; hitting it
/// means the reduction system is broken.
const STEP_LIMIT: usize = 1 << 20;

/// Canonical representative of `o` for `class`, choosing the first
/// nonminimal witness in the deterministic witness order at every step.
pub fn canonical_rep(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    class: MinimalClass,
) -> Result<(PartialOrientation, MoveTrace)> {
    canonical_rep_by(g, o, pair, class, |_| 0)
}

/// Same as [`canonical_rep`] but picks a uniformly random nonminimal witness
/// at every step.
pub fn canonical_rep_random<R: Rng + ?Sized>(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    class: MinimalClass,
    rng: &mut R,
) -> Result<(PartialOrientation, MoveTrace)> {
    canonical_rep_by(g, o, pair, class, |ws| rng.gen_range(0..ws.len()))
}

/// Greedy reduction with a caller-supplied witness choice. `choose` receives
/// the nonempty list of current nonminimal witnesses and returns an index.
pub fn canonical_rep_by(
    g: &Multigraph,
    o: &PartialOrientation,
    pair: &ReferencePair,
    class: MinimalClass,
    mut choose: impl FnMut(&[Witness]) -> usize,
) -> Result<(PartialOrientation, MoveTrace)> {
    o.check_len(g)?;
    pair.check_graph(g)?;
    let kinds = class.kinds();
    if kinds.contains(&WitnessKind::Cut) {
        check_bond_scan(g)?;
    }
    let mut current = o.clone();
    let mut trace = MoveTrace::default();
    for _ in 0..STEP_LIMIT {
        let mut found = nonminimal_witnesses(g, &current, pair, kinds);
        if found.is_empty() {
            return Ok((current, trace));
        }
        let pick = choose(&found);
        let mv = Move::from(found.swap_remove(pick));
        current = mv.apply(g, &current)?;
        trace.moves.push(mv);
    }
    panic!("{class:?} reduction of {o} did not terminate");
}
