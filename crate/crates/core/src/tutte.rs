//! Exact Tutte polynomial by deletion-contraction.
//!
//! Every call first strips loops (factor `y`) and bridges (factor `x`), then
//! splits on the highest-id remaining edge. Reduced minors are memoised under
//! their canonical labelling; the cache only ever saves work, a miss or a
//! skipped key changes nothing about the result.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::{canonical_key, CanonicalKey, DEFAULT_LEAF_BUDGET};
use crate::error::Result;
use crate::graph::{EdgeClass, Multigraph};

/// Two-variable polynomial with nonnegative big-integer coefficients, keyed
/// by `(x-degree, y-degree)`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TuttePolynomial {
    terms: BTreeMap<(u32, u32), BigUint>,
}

impl TuttePolynomial {
    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((i, j), BigUint::one());
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigUint)>) -> Self {
        let mut p = Self::default();
        for (deg, c) in terms {
            p.add_term(deg, c);
        }
        p
    }

    fn add_term(&mut self, deg: (u32, u32), c: BigUint) {
        if !c.is_zero() {
            *self.terms.entry(deg).or_default() += c;
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigUint {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigUint)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `x^i y^j`.
    pub fn shifted(&self, i: u32, j: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let max_i = self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let xs = powers(x, max_i);
        let ys = powers(y, max_j);
        self.terms.iter().fold(BigRational::zero(), |acc, (&(i, j), c)| {
            let c = BigRational::from_integer(BigInt::from(c.clone()));
            acc + c * &xs[i as usize] * &ys[j as usize]
        })
    }

    pub fn evaluate_int(&self, x: i64, y: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.into()), &BigRational::from_integer(y.into()))
    }
}

fn powers(base: &BigRational, max: u32) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BigRational::one());
    for k in 1..=max as usize {
        out.push(&out[k - 1] * base);
    }
    out
}

impl std::ops::Add for TuttePolynomial {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (deg, c) in rhs.terms {
            self.add_term(deg, c);
        }
        self
    }
}

impl fmt::Display for TuttePolynomial {
    /// Highest total degree first, e.g. `x^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut degs: Vec<_> = self.terms.keys().copied().collect();
        degs.sort_by_key(|d| std::cmp::Reverse((d.0 + d.1, d.0)));
        for (k, (i, j)) in degs.into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[&(i, j)];
            let mut parts = Vec::new();
            if !c.is_one() || (i == 0 && j == 0) {
                parts.push(c.to_string());
            }
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    _ => parts.push(format!("{var}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TutteOptions {
    /// Memoise reduced minors under their canonical labelling.
    pub memoize: bool,
    /// Skip canonical keys for minors with fewer edges than this.
    pub min_cached_edges: usize,
    /// Evaluate the two branches of a split with `rayon::join` while the
    /// minor still has at least this many edges.
    pub parallel_min_edges: Option<usize>,
    pub leaf_budget: usize,
}

impl Default for TutteOptions {
    fn default() -> Self {
        Self {
            memoize: true,
            min_cached_edges: 6,
            parallel_min_edges: None,
            leaf_budget: DEFAULT_LEAF_BUDGET,
        }
    }
}

impl TutteOptions {
    pub fn parallel() -> Self {
        Self {
            parallel_min_edges: Some(10),
            ..Self::default()
        }
    }

    pub fn uncached() -> Self {
        Self {
            memoize: false,
            ..Self::default()
        }
    }
}

/// Tutte polynomial of a connected multigraph.
pub fn tutte_polynomial(g: &Multigraph) -> Result<TuttePolynomial> {
    tutte_polynomial_with(g, TutteOptions::default())
}

pub fn tutte_polynomial_with(g: &Multigraph, opts: TutteOptions) -> Result<TuttePolynomial> {
    g.require_connected()?;
    let engine = Engine {
        opts,
        cache: Mutex::new(HashMap::new()),
    };
    Ok(engine.run(g))
}

struct Engine {
    opts: TutteOptions,
    cache: Mutex<HashMap<CanonicalKey, TuttePolynomial>>,
}

impl Engine {
    fn run(&self, g: &Multigraph) -> TuttePolynomial {
        let (core, bridges, loops) = strip(g);
        if core.m() == 0 {
            return TuttePolynomial::monomial(bridges, loops);
        }
        let key = (self.opts.memoize && core.m() >= self.opts.min_cached_edges)
            .then(|| canonical_key(&core, self.opts.leaf_budget))
            .flatten();
        if let Some(hit) = key.as_ref().and_then(|k| self.cache.lock().unwrap().get(k).cloned()) {
            return hit.shifted(bridges, loops);
        }

        let pivot = core.m() - 1;
        let deleted = core.delete_edge(pivot).expect("valid pivot").graph;
        let contracted = core.contract_edge(pivot).expect("ordinary pivot").graph;
        let (a, b) = match self.opts.parallel_min_edges {
            Some(min) if core.m() >= min => {
                rayon::join(|| self.run(&deleted), || self.run(&contracted))
            }
            _ => (self.run(&deleted), self.run(&contracted)),
        };
        let poly = a + b;
        if let Some(k) = key {
            self.cache.lock().unwrap().entry(k).or_insert_with(|| poly.clone());
        }
        poly.shifted(bridges, loops)
    }
}

/// Deletes every loop and contracts every bridge. Returns the reduced graph
/// (all of whose edges are ordinary) with the bridge and loop counts.
fn strip(g: &Multigraph) -> (Multigraph, u32, u32) {
    let classes = g.edge_classes();
    if classes.iter().all(|&c| c == EdgeClass::Ordinary) {
        return (g.clone(), 0, 0);
    }
    let mut bridges = 0;
    let mut loops = 0;
    // Union the endpoints of every bridge, then rebuild on the quotient.
    let mut rep: Vec<usize> = (0..g.n()).collect();
    fn find(rep: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while rep[r] != r {
            r = rep[r];
        }
        rep[v] = r;
        r
    }
    for (e, class) in classes.iter().enumerate() {
        match class {
            EdgeClass::Bridge => {
                bridges += 1;
                let (a, b) = g.endpoints(e);
                let (ra, rb) = (find(&mut rep, a), find(&mut rep, b));
                rep[ra.max(rb)] = ra.min(rb);
            }
            EdgeClass::Loop => loops += 1,
            EdgeClass::Ordinary => {}
        }
    }
    let roots: Vec<usize> = (0..g.n()).map(|v| find(&mut rep, v)).collect();
    let mut index = vec![usize::MAX; g.n()];
    let mut next = 0;
    for &r in &roots {
        if index[r] == usize::MAX {
            index[r] = next;
            next += 1;
        }
    }
    let edges = (0..g.m())
        .filter(|&e| classes[e] == EdgeClass::Ordinary)
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (index[roots[a]], index[roots[b]])
        })
        .collect();
    let core = Multigraph::new(next, edges).expect("quotient is valid");
    (core, bridges, loops)
}

impl serde::Serialize for TuttePolynomial {
    /// A list of `[i, j, "coefficient"]` triples.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (&(i, j), c) in &self.terms {
            seq.serialize_element(&(i, j, c.to_string()))?;
        }
        seq.end()
    }
}

pub(crate) fn rational_pow(base: &BigRational, exp: usize) -> BigRational {
    base.pow(i32::try_from(exp).expect("exponent fits in i32"))
}
