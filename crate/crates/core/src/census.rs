//! Exhaustive ground truth over all `3^m` partial orientations: weighted
//! class counts, orbits under move sets, indegree sequences, and the
//! identity report that compares all of them with the closed forms.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{chromatic_count_from, reliability_from, OrientationClass};
use crate::graph::Multigraph;
use crate::orientation::{arc, EdgeState, PartialOrientation, StateSpace};
use crate::reductions::pivot_to;
use crate::reductions::{directed_bonds, directed_cycles, MinimalClass, ReferencePair};
use crate::reliability::chromatic_cutmin_probability;
use crate::tutte::tutte_polynomial;

/// Largest edge count the exhaustive routines accept.
pub const ENUMERATION_LIMIT: usize = 14;

const CHUNK: u64 = 1 << 14;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct MoveSet {
    pub cut_reversal: bool,
    pub cycle_reversal: bool,
    pub edge_pivot: bool,
}

impl MoveSet {
    pub const CUT: MoveSet = MoveSet {
        cut_reversal: true,
        cycle_reversal: false,
        edge_pivot: false,
    };
    pub const CYCLE: MoveSet = MoveSet {
        cut_reversal: false,
        cycle_reversal: true,
        edge_pivot: false,
    };
    pub const CYCLE_CUT: MoveSet = MoveSet {
        cut_reversal: true,
        cycle_reversal: true,
        edge_pivot: false,
    };
    pub const CYCLE_PIVOT: MoveSet = MoveSet {
        cut_reversal: false,
        cycle_reversal: true,
        edge_pivot: true,
    };

    /// The moves under which `class` picks one representative per orbit.
    pub fn for_class(class: MinimalClass) -> Self {
        match class {
            MinimalClass::Cut => Self::CUT,
            MinimalClass::Cycle => Self::CYCLE,
            MinimalClass::CycleCut => Self::CYCLE_CUT,
            MinimalClass::CyclePath => Self::CYCLE_PIVOT,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.cut_reversal || self.cycle_reversal || self.edge_pivot)
    }

    /// Every state one move away from `o`. Cut reversals are generated by
    /// directed bonds, which suffices since every directed cut is a disjoint
    /// union of directed bonds.
    pub fn neighbours(&self, g: &Multigraph, o: &PartialOrientation) -> Vec<PartialOrientation> {
        let mut out = Vec::new();
        let flip = |edges: &[usize]| {
            let mut next = o.clone();
            for &e in edges {
                next.reverse_edge(e);
            }
            next
        };
        if self.cut_reversal {
            out.extend(directed_bonds(g, o).iter().map(|c| flip(&c.crossing)));
        }
        if self.cycle_reversal {
            out.extend(directed_cycles(g, o).iter().map(|c| flip(&c.edges)));
        }
        if self.edge_pivot {
            for e in (0..g.m()).filter(|&e| !o.state(e).is_oriented()) {
                for target in [EdgeState::Forward, EdgeState::Backward] {
                    let (_, v) = arc(g, e, target).expect("oriented");
                    for &(f, _) in g.incident(v) {
                        if let Ok(next) = pivot_to(g, o, e, target, f, v) {
                            out.push(next);
                        }
                    }
                }
            }
        }
        out
    }
}

fn guard(g: &Multigraph) -> Result<StateSpace> {
    if g.m() > ENUMERATION_LIMIT {
        return Err(Error::EnumerationGuard {
            m: g.m(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(StateSpace::new(g.m()))
}

/// Whether `o` belongs to `class`; `pair` matters only for the minimal
/// classes.
pub fn is_member(g: &Multigraph, o: &PartialOrientation, class: OrientationClass, pair: &ReferencePair) -> Result<bool> {
    Ok(match class {
        OrientationClass::Acyclic => o.is_acyclic(g),
        OrientationClass::StronglyConnected => o.is_strongly_connected(g)?,
        OrientationClass::All => true,
        other => other.minimal_class().expect("minimal").is_minimal(g, o, pair),
    })
}

/// Histogram of class members by number of oriented edges.
pub fn members_by_oriented_count(
    g: &Multigraph,
    class: OrientationClass,
    pair: &ReferencePair,
) -> Result<Vec<u64>> {
    let space = guard(g)?;
    g.require_connected()?;
    pair.check_graph(g)?;
    let m = g.m();
    let chunks = space.size().div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hist = vec![0u64; m + 1];
            for o in space.range(c * CHUNK, (c + 1) * CHUNK) {
                if is_member(g, &o, class, pair)? {
                    hist[o.oriented_count()] += 1;
                }
            }
            Ok(hist)
        })
        .try_reduce(
            || vec![0u64; m + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )
}

/// `sum over members of k^(#oriented) * l^(#unoriented)` by enumeration.
pub fn brute_count(g: &Multigraph, class: OrientationClass, pair: &ReferencePair, k: u64, l: u64) -> Result<BigUint> {
    let hist = members_by_oriented_count(g, class, pair)?;
    Ok(weigh(&hist, k, l))
}

/// Weighted total of a histogram from [`members_by_oriented_count`]
/// (`0^0 = 1`).
pub fn weigh(hist: &[u64], k: u64, l: u64) -> BigUint {
    let m = hist.len() - 1;
    hist.iter()
        .enumerate()
        .map(|(j, &c)| BigUint::from(c) * BigUint::from(k).pow(j as u32) * BigUint::from(l).pow((m - j) as u32))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitScan {
    pub count: usize,
    /// Orbit of every state, named by its smallest counter index.
    pub ids: Vec<u32>,
}

impl OrbitScan {
    pub fn orbit_of(&self, o: &PartialOrientation) -> u32 {
        self.ids[o.index() as usize]
    }
}

/// Orbits of all `3^m` states under `moves`, by union-find over the move
/// graph (every move used here is undone by a move of the same kind).
pub fn orbit_scan(g: &Multigraph, moves: MoveSet) -> Result<OrbitScan> {
    let space = guard(g)?;
    g.require_connected()?;
    if moves.is_empty() {
        return Err(Error::EmptyMoveSet);
    }
    let size = space.size() as usize;
    let mut uf = UnionFind::<u32>::new(size);
    let chunks = space.size().div_ceil(CHUNK);
    for c in 0..chunks {
        let edges: Vec<(u32, u32)> = space
            .range(c * CHUNK, (c + 1) * CHUNK)
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|o| {
                let from = o.index() as u32;
                moves.neighbours(g, &o).into_iter().map(move |p| (from, p.index() as u32))
            })
            .collect();
        for (a, b) in edges {
            uf.union(a, b);
        }
    }
    let mut root_id = vec![u32::MAX; size];
    let mut ids = Vec::with_capacity(size);
    let mut count = 0;
    for i in 0..size as u32 {
        let root = uf.find_mut(i) as usize;
        if root_id[root] == u32::MAX {
            root_id[root] = i;
            count += 1;
        }
        ids.push(root_id[root]);
    }
    Ok(OrbitScan { count, ids })
}

/// Number of distinct indegree sequences over all partial orientations.
pub fn indegree_census(g: &Multigraph) -> Result<usize> {
    let space = guard(g)?;
    let seqs: HashSet<Vec<usize>> = space.iter().map(|o| o.indegree_sequence(g).0).collect();
    Ok(seqs.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRecord {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<usize>,
    pub formula: String,
    pub brute: String,
    pub equal: bool,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub records: Vec<IdentityRecord>,
    pub all_passed: bool,
}

impl CensusReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records.iter().filter(|r| !r.equal)
    }
}

struct Recorder {
    records: Vec<IdentityRecord>,
    started: Instant,
}

impl Recorder {
    fn push(&mut self, identity: String, kl: Option<(u64, u64)>, pair: Option<usize>, formula: String, brute: String) {
        let micros = self.started.elapsed().as_micros() as u64;
        self.records.push(IdentityRecord {
            identity,
            k: kl.map(|x| x.0),
            l: kl.map(|x| x.1),
            pair,
            equal: formula == brute,
            formula,
            brute,
            micros,
        });
        self.started = Instant::now();
    }
}

/// Compares every closed form with enumeration on `g`:
/// the four class formulas for every `(k,l)` in `kl` (minimal classes under
/// every pair), orbit counts against minimal-state counts for all four
/// minimal classes, one minimal state per orbit, the indegree-sequence
/// count against pivot-and-cycle orbits, and the cut-minimal probability
/// against the reliability polynomial.
pub fn verify_identities(g: &Multigraph, pairs: &[ReferencePair], kl: &[(u64, u64)]) -> Result<CensusReport> {
    guard(g)?;
    g.require_connected()?;
    let default_pair = ReferencePair::default_for(g);
    let pairs: Vec<&ReferencePair> = if pairs.is_empty() { vec![&default_pair] } else { pairs.iter().collect() };
    for p in &pairs {
        p.check_graph(g)?;
    }
    let t = tutte_polynomial(g)?;
    let mut rec = Recorder {
        records: Vec::new(),
        started: Instant::now(),
    };

    for class in [OrientationClass::Acyclic, OrientationClass::StronglyConnected] {
        let hist = members_by_oriented_count(g, class, &default_pair)?;
        for &(k, l) in kl {
            let formula = chromatic_count_from(&t, g, class, k, l)?;
            rec.push(class.name().into(), Some((k, l)), None, formula.to_string(), weigh(&hist, k, l).to_string());
        }
    }

    for class in MinimalClass::ALL {
        let oclass = OrientationClass::from(class);
        let scan = orbit_scan(g, MoveSet::for_class(class))?;
        for (i, pair) in pairs.iter().enumerate() {
            let hist = members_by_oriented_count(g, oclass, pair)?;
            let minimal: u64 = hist.iter().sum();
            rec.push(
                format!("{}-orbits", oclass.name()),
                None,
                Some(i),
                scan.count.to_string(),
                minimal.to_string(),
            );
            if OrientationClass::WITH_FORMULA.contains(&oclass) {
                for &(k, l) in kl {
                    let formula = chromatic_count_from(&t, g, oclass, k, l)?;
                    rec.push(oclass.name().into(), Some((k, l)), Some(i), formula.to_string(), weigh(&hist, k, l).to_string());
                }
            }
            let mut per_orbit = vec![0u32; scan.ids.len()];
            for o in StateSpace::new(g.m()).iter() {
                if class.is_minimal(g, &o, pair) {
                    per_orbit[scan.orbit_of(&o) as usize] += 1;
                }
            }
            let bad = scan
                .ids
                .iter()
                .enumerate()
                .filter(|&(i, &id)| i as u32 == id && per_orbit[i] != 1)
                .count();
            rec.push(format!("{}-unique", oclass.name()), None, Some(i), "0".into(), bad.to_string());
        }
    }

    let pivot_orbits = orbit_scan(g, MoveSet::CYCLE_PIVOT)?;
    rec.push(
        "indegree-sequences".into(),
        None,
        None,
        indegree_census(g)?.to_string(),
        pivot_orbits.count.to_string(),
    );

    for &(k, l) in kl.iter().filter(|kl| kl.0 > 0) {
        let p = num_rational::BigRational::new(k.into(), (2 * k + l).into());
        let exact = reliability_from(&t, g, &p)?;
        rec.push(
            "reliability".into(),
            Some((k, l)),
            None,
            exact.to_string(),
            chromatic_cutmin_probability(g, k, l)?.to_string(),
        );
    }

    let all_passed = rec.records.iter().all(|r| r.equal);
    Ok(CensusReport {
        graph: format!("n={} m={}", g.n(), g.m()),
        n: g.n(),
        m: g.m(),
        records: rec.records,
        all_passed,
    })
}
