use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Multigraph, Vertex};
use crate::orientation::EdgeState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefDir {
    AsStored,
    Reversed,
}

impl RefDir {
    pub fn state(self) -> EdgeState {
        match self {
            RefDir::AsStored => EdgeState::Forward,
            RefDir::Reversed => EdgeState::Backward,
        }
    }
}

/// A total order on the edges together with a reference full orientation.
///
/// `order[r]` is the edge of rank `r`; a structure is minimal when its
/// lowest-ranked edge is oriented as in the reference.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReferencePair {
    order: Vec<EdgeId>,
    rank: Vec<usize>,
    reference: Vec<RefDir>,
}

impl ReferencePair {
    pub fn new(order: Vec<EdgeId>, reference: Vec<RefDir>) -> Result<Self> {
        let m = order.len();
        if reference.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                found: reference.len(),
            });
        }
        let mut rank = vec![usize::MAX; m];
        for (r, &e) in order.iter().enumerate() {
            if e >= m || rank[e] != usize::MAX {
                return Err(Error::InvalidPair("order is not a permutation of the edge ids"));
            }
            rank[e] = r;
        }
        Ok(Self { order, rank, reference })
    }

    /// Identity order, every edge referenced as stored.
    pub fn default_for(g: &Multigraph) -> Self {
        let m = g.m();
        Self::new((0..m).collect(), vec![RefDir::AsStored; m]).expect("identity is valid")
    }

    /// Breadth-first spanning tree from `q` (vertices and incident edges in
    /// id order). Tree edges get the lowest ranks in discovery order and
    /// point away from `q`; the other edges follow in id order, as stored.
    pub fn q_connected(g: &Multigraph, q: Vertex) -> Result<Self> {
        g.check_vertex(q)?;
        g.require_connected()?;
        let m = g.m();
        let mut reference = vec![RefDir::AsStored; m];
        let mut order = Vec::with_capacity(m);
        let mut in_tree = vec![false; m];
        let mut seen = vec![false; g.n()];
        seen[q] = true;
        let mut queue = VecDeque::from([q]);
        while let Some(v) = queue.pop_front() {
            for &(e, w) in g.incident(v) {
                if !seen[w] {
                    seen[w] = true;
                    in_tree[e] = true;
                    order.push(e);
                    if g.endpoints(e).0 != v {
                        reference[e] = RefDir::Reversed;
                    }
                    queue.push_back(w);
                }
            }
        }
        order.extend((0..m).filter(|&e| !in_tree[e]));
        Self::new(order, reference)
    }

    /// Uniformly random order and reference directions.
    pub fn random<R: Rng + ?Sized>(g: &Multigraph, rng: &mut R) -> Self {
        let mut order: Vec<EdgeId> = (0..g.m()).collect();
        order.shuffle(rng);
        let reference = (0..g.m())
            .map(|_| if rng.gen() { RefDir::AsStored } else { RefDir::Reversed })
            .collect();
        Self::new(order, reference).expect("shuffle is a permutation")
    }

    pub fn m(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn rank(&self, e: EdgeId) -> usize {
        self.rank[e]
    }

    pub fn reference(&self, e: EdgeId) -> RefDir {
        self.reference[e]
    }

    /// The state of `e` in the reference orientation.
    pub fn reference_state(&self, e: EdgeId) -> EdgeState {
        self.reference[e].state()
    }

    pub fn agrees(&self, e: EdgeId, state: EdgeState) -> bool {
        state == self.reference_state(e)
    }

    /// Lowest-ranked edge among `edges`.
    pub fn min_edge(&self, edges: impl IntoIterator<Item = EdgeId>) -> Option<EdgeId> {
        edges.into_iter().min_by_key(|&e| self.rank[e])
    }

    pub fn check_graph(&self, g: &Multigraph) -> Result<()> {
        if self.m() == g.m() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.m(),
                found: self.m(),
            })
        }
    }
}

impl fmt::Display for ReferencePair {
    /// `order: 0,2,1` on the first line, `reference: aar` on the second.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order: Vec<String> = self.order.iter().map(ToString::to_string).collect();
        let flags: String = self
            .reference
            .iter()
            .map(|r| if *r == RefDir::AsStored { 'a' } else { 'r' })
            .collect();
        write!(f, "order: {}\nreference: {}", order.join(","), flags)
    }
}

impl FromStr for ReferencePair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut order = None;
        let mut reference = None;
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(rest) = line.strip_prefix("order:") {
                let ids = rest
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<EdgeId>().map_err(|_| Error::Parse(format!("bad edge id {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                order = Some(ids);
            } else if let Some(rest) = line.strip_prefix("reference:") {
                let flags = rest
                    .trim()
                    .chars()
                    .map(|c| match c {
                        'a' => Ok(RefDir::AsStored),
                        'r' => Ok(RefDir::Reversed),
                        _ => Err(Error::Parse(format!("bad reference flag {c:?}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                reference = Some(flags);
            } else {
                return Err(Error::Parse(format!("unexpected line {line:?}")));
            }
        }
        match (order, reference) {
            (Some(o), Some(r)) => Self::new(o, r),
            _ => Err(Error::Parse("expected \"order:\" and \"reference:\" lines".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn default_pair() {
        let g = Multigraph::cycle(3).unwrap();
        let p = ReferencePair::default_for(&g);
        assert_eq!(p.order(), &[0, 1, 2]);
        assert!((0..3).all(|e| p.reference(e) == RefDir::AsStored));
        assert_eq!(p, ReferencePair::default_for(&g));
        let empty = Multigraph::new(1, vec![]).unwrap();
        assert_eq!(ReferencePair::default_for(&empty).m(), 0);
    }

    #[test]
    fn q_connected_pairs() {
        let path = Multigraph::path(3);
        let p = ReferencePair::q_connected(&path, 0).unwrap();
        assert_eq!(p.order(), &[0, 1, 2]);
        assert!((0..3).all(|e| p.reference(e) == RefDir::AsStored));

        let p = ReferencePair::q_connected(&path, 3).unwrap();
        assert_eq!(p.order(), &[2, 1, 0]);
        assert!((0..3).all(|e| p.reference(e) == RefDir::Reversed));

        let star = Multigraph::star(3);
        let p = ReferencePair::q_connected(&star, 0).unwrap();
        assert!((0..3).all(|e| p.reference(e) == RefDir::AsStored));

        let k3 = Multigraph::cycle(3).unwrap();
        let p = ReferencePair::q_connected(&k3, 0).unwrap();
        assert_eq!(p.order(), &[0, 2, 1]);
        assert_eq!(p.reference(0), RefDir::AsStored);
        assert_eq!(p.reference(2), RefDir::Reversed);
        assert_eq!(p.reference(1), RefDir::AsStored);

        assert!(ReferencePair::q_connected(&k3, 7).is_err());
    }

    #[test]
    fn validation_and_text() {
        assert!(ReferencePair::new(vec![0, 0], vec![RefDir::AsStored; 2]).is_err());
        assert!(ReferencePair::new(vec![0, 1], vec![RefDir::AsStored]).is_err());
        let g = Multigraph::complete(4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p = ReferencePair::random(&g, &mut rng);
        assert_eq!(p.to_string().parse::<ReferencePair>().unwrap(), p);
        let parsed: ReferencePair = "order: 2,0,1\nreference: arr".parse().unwrap();
        assert_eq!(parsed.rank(2), 0);
        assert_eq!(parsed.reference_state(1), EdgeState::Backward);
    }
}
