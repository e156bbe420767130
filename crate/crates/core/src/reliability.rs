//! Exact and Monte Carlo evaluation of the all-terminal reliability
//! polynomial, the latter both by random edge deletion and by random
//! partial orientations tested for cut-minimality.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use petgraph::unionfind::UnionFind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{check_probability, chromatic_count, OrientationClass};
use crate::graph::Multigraph;
use crate::orientation::{EdgeState, PartialOrientation};
use crate::reductions::{check_bond_scan, is_cut_minimal, ReferencePair};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McConfig {
    pub trials: u64,
    pub seed: u64,
    pub p: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub successes: u64,
    pub trials: u64,
    pub seed: u64,
}

impl McEstimate {
    fn new(successes: u64, cfg: &McConfig) -> Self {
        let estimate = successes as f64 / cfg.trials as f64;
        Self {
            estimate,
            std_error: (estimate * (1.0 - estimate) / cfg.trials as f64).sqrt(),
            successes,
            trials: cfg.trials,
            seed: cfg.seed,
        }
    }

    /// Distance from `target` in standard errors (infinite when the
    /// standard error vanishes and the estimate misses).
    pub fn z_score(&self, target: f64) -> f64 {
        let diff = (self.estimate - target).abs();
        if diff == 0.0 {
            0.0
        } else {
            diff / self.std_error
        }
    }
}

/// `p = num/den` compared against a uniform 64-bit draw `u` exactly:
/// `u / 2^64 < j * num / den` iff `u * den < j * num * 2^64`.
#[derive(Clone, Copy, Debug)]
struct Threshold {
    num: u128,
    den: u128,
}

impl Threshold {
    fn new(p: &BigRational) -> Result<Self> {
        let too_fine = || Error::ProbabilityOutOfRange(format!("{p} needs a denominator below 2^63"));
        let num = p.numer().to_u64().ok_or_else(too_fine)?;
        let den = p.denom().to_u64().ok_or_else(too_fine)?;
        if den >= 1 << 63 {
            return Err(too_fine());
        }
        Ok(Self {
            num: num.into(),
            den: den.into(),
        })
    }

    /// True with probability `multiple * p`.
    fn below(self, u: u64, multiple: u128) -> bool {
        u128::from(u) * self.den < (multiple * self.num) << 64
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn check_config(cfg: &McConfig, max: &BigRational, inclusive: bool) -> Result<Threshold> {
    if cfg.trials == 0 {
        return Err(Error::ZeroTrials);
    }
    check_probability(&cfg.p, max, inclusive)?;
    Threshold::new(&cfg.p)
}

/// Deletes each edge with probability `p`; success when the survivors
/// connect every vertex.
pub fn mc_subgraph(g: &Multigraph, cfg: &McConfig) -> Result<McEstimate> {
    g.require_connected()?;
    let threshold = check_config(cfg, &BigRational::one(), false)?;
    let successes = (0..cfg.trials)
        .into_par_iter()
        .filter(|&trial| {
            let mut rng = trial_rng(cfg.seed, trial);
            let mut components = g.n();
            let mut uf = UnionFind::<usize>::new(g.n());
            for &(a, b) in g.edges() {
                let deleted = threshold.below(rng.gen(), 1);
                if !deleted && uf.union(a, b) {
                    components -= 1;
                }
            }
            components == 1
        })
        .count();
    Ok(McEstimate::new(successes as u64, cfg))
}

/// Orients each edge forward or backward with probability `p` apiece and
/// leaves it unoriented otherwise; success when the result is cut-minimal
/// for `pair`.
pub fn mc_cutminimal(g: &Multigraph, cfg: &McConfig, pair: &ReferencePair) -> Result<McEstimate> {
    g.require_connected()?;
    pair.check_graph(g)?;
    check_bond_scan(g)?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let threshold = check_config(cfg, &half, true)?;
    let successes = (0..cfg.trials)
        .into_par_iter()
        .filter(|&trial| {
            let mut rng = trial_rng(cfg.seed, trial);
            let states = (0..g.m())
                .map(|_| {
                    let u = rng.gen();
                    if threshold.below(u, 1) {
                        EdgeState::Forward
                    } else if threshold.below(u, 2) {
                        EdgeState::Backward
                    } else {
                        EdgeState::Unoriented
                    }
                })
                .collect();
            is_cut_minimal(g, &PartialOrientation::from_states(states), pair)
        })
        .count();
    Ok(McEstimate::new(successes as u64, cfg))
}

/// Fraction of `(k,l)`-chromatic partial orientations that are cut-minimal.
pub fn chromatic_cutmin_probability(g: &Multigraph, k: u64, l: u64) -> Result<BigRational> {
    let count = chromatic_count(g, OrientationClass::CutMinimal, k, l)?;
    let total = BigUint::from(2 * k + l).pow(g.m() as u32);
    Ok(BigRational::new(count.into(), total.into()))
}
