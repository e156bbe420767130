//! Reference pairs and the reduction systems they induce.
//!
//! A reference pair fixes a total order on the edges and a reference
//! orientation. Cut reversals, cycle reversals and cascades (chains of edge
//! pivots) each discharge a structure whose lowest edge disagrees with the
//! reference; greedy discharge ends in the unique minimal representative of
//! the orbit.

mod canonical;
mod decompose;
mod encoding;
mod moves;
mod pair;
mod witness;

pub use canonical::{canonical_rep, canonical_rep_by, canonical_rep_random};
pub use decompose::{decompose_difference, DecomposeMode};
pub use encoding::monomial_encoding;
pub(crate) use moves::pivot_to;
pub use moves::{apply_cascade, apply_cut_reversal, apply_cycle_reversal, apply_edge_pivot, Move, MoveTrace};
pub use pair::{RefDir, ReferencePair};
pub use witness::{
    check_bond_scan, directed_bonds, directed_cycles, find_nonminimal, half_open_paths, is_cut_minimal, is_cycle_minimal,
    is_cycle_path_minimal, is_minimal_for, nonminimal_witnesses, witness_order, witnesses, HalfOpenPath,
    Witness, WitnessKind, MAX_BOND_SCAN_VERTICES,
};

/// The four classes of minimal partial orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinimalClass {
    Cut,
    Cycle,
    CycleCut,
    CyclePath,
}

impl MinimalClass {
    pub const ALL: [MinimalClass; 4] = [
        MinimalClass::Cut,
        MinimalClass::Cycle,
        MinimalClass::CycleCut,
        MinimalClass::CyclePath,
    ];

    /// Witness kinds whose minimality defines the class.
    pub fn kinds(self) -> &'static [WitnessKind] {
        match self {
            MinimalClass::Cut => &[WitnessKind::Cut],
            MinimalClass::Cycle => &[WitnessKind::Cycle],
            MinimalClass::CycleCut => &[WitnessKind::Cut, WitnessKind::Cycle],
            MinimalClass::CyclePath => &[WitnessKind::Cycle, WitnessKind::HalfOpenPath],
        }
    }

    pub fn is_minimal(
        self,
        g: &crate::graph::Multigraph,
        o: &crate::orientation::PartialOrientation,
        pair: &ReferencePair,
    ) -> bool {
        is_minimal_for(g, o, pair, self.kinds())
    }
}
