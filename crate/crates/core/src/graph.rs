//! Undirected multigraphs with loops and parallel edges.
//!
//! Edges are stored as `(tail, head)` pairs. The stored direction is the
//! default reference direction of the edge, and the edge order doubles as the
//! default total order on edges. Deletion and contraction return a [`Minor`]
//! carrying the old-id to new-id mapping so that orientations can be
//! transported between a graph and its minors.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // adj[v] lists (edge, other endpoint); a loop appears once at its vertex.
    adj: Vec<Vec<(EdgeId, Vertex)>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    Bridge,
    Loop,
    Ordinary,
}

/// A graph minor together with the map from the parent's edge ids.
///
/// `edge_map[e]` is the id of parent edge `e` in `graph`, or `None` for the
/// edge that was removed. `vertex_map[v]` is the vertex that parent vertex
/// `v` became.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub graph: Multigraph,
    pub edge_map: Vec<Option<EdgeId>>,
    pub vertex_map: Vec<Vertex>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        for (edge, &(t, h)) in edges.iter().enumerate() {
            if let Some(vertex) = [t, h].into_iter().find(|&v| v >= n) {
                return Err(Error::EndpointOutOfRange { edge, vertex, n });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(t, h)) in edges.iter().enumerate() {
            adj[t].push((e, h));
            if t != h {
                adj[h].push((e, t));
            }
        }
        Ok(Self { n, edges, adj })
    }

    /// Cycle graph `C_n`; `n = 1` gives a single loop and `n = 2` a double edge.
    pub fn cycle(n: usize) -> Result<Self> {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn path(edges: usize) -> Self {
        Self::new(edges + 1, (0..edges).map(|i| (i, i + 1)).collect()).expect("valid path")
    }

    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i)).collect()).expect("valid star")
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::new(n, edges)
    }

    /// Two vertices joined by `k` parallel edges.
    pub fn theta(k: usize) -> Self {
        Self::new(2, vec![(0, 1); k]).expect("valid theta")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Incident edges of `v` as `(edge, other endpoint)`, in edge-id order.
    pub fn incident(&self, v: Vertex) -> &[(EdgeId, Vertex)] {
        &self.adj[v]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (t, h) = self.edges[e];
        t == h
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::InvalidEdge { edge: e, m: self.m() })
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Minor> {
        self.check_edge(e)?;
        let mut edge_map = Vec::with_capacity(self.m());
        let mut edges = Vec::with_capacity(self.m() - 1);
        for (id, &uv) in self.edges.iter().enumerate() {
            if id == e {
                edge_map.push(None);
            } else {
                edge_map.push(Some(edges.len()));
                edges.push(uv);
            }
        }
        Ok(Minor {
            graph: Self::new(self.n, edges)?,
            edge_map,
            vertex_map: (0..self.n).collect(),
        })
    }

    /// Contracts a non-loop edge. The smaller endpoint survives and vertices
    /// above the larger endpoint shift down by one.
    pub fn contract_edge(&self, e: EdgeId) -> Result<Minor> {
        self.check_edge(e)?;
        let (t, h) = self.edges[e];
        if t == h {
            return Err(Error::ContractLoop(e));
        }
        let (keep, gone) = (t.min(h), t.max(h));
        let vertex_map: Vec<Vertex> = (0..self.n)
            .map(|v| match v.cmp(&gone) {
                std::cmp::Ordering::Less => v,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => v - 1,
            })
            .collect();
        let mut edge_map = Vec::with_capacity(self.m());
        let mut edges = Vec::with_capacity(self.m() - 1);
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if id == e {
                edge_map.push(None);
            } else {
                edge_map.push(Some(edges.len()));
                edges.push((vertex_map[a], vertex_map[b]));
            }
        }
        Ok(Minor {
            graph: Self::new(self.n - 1, edges)?,
            edge_map,
            vertex_map,
        })
    }

    pub fn classify_edge(&self, e: EdgeId) -> Result<EdgeClass> {
        self.check_edge(e)?;
        Ok(self.edge_classes()[e])
    }

    /// Classifies every edge at once (bridges by DFS low-link).
    pub fn edge_classes(&self) -> Vec<EdgeClass> {
        let bridges = self.bridges();
        (0..self.m())
            .map(|e| {
                if self.is_loop(e) {
                    EdgeClass::Loop
                } else if bridges[e] {
                    EdgeClass::Bridge
                } else {
                    EdgeClass::Ordinary
                }
            })
            .collect()
    }

    fn bridges(&self) -> Vec<bool> {
        let mut is_bridge = vec![false; self.m()];
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0; self.n];
        let mut timer = 0;
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, edge used to enter it, next adjacency index)
            let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(&mut (v, parent_edge, ref mut next)) = stack.last_mut() {
                if let Some(&(e, w)) = self.adj[v].get(*next) {
                    *next += 1;
                    if Some(e) == parent_edge || v == w {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (parent_edge, stack.last()) {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            is_bridge[e] = true;
                        }
                    }
                }
            }
        }
        is_bridge
    }

    /// Breadth-first search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &(_, w) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Cycle rank `m - n + 1` of a connected graph.
    pub fn genus(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.m() + 1 - self.n)
    }

    /// Whether `vertices` (given as a membership mask) induces a connected
    /// subgraph. The empty set is not connected.
    pub fn induces_connected(&self, inside: &[bool]) -> bool {
        let Some(start) = inside.iter().position(|&b| b) else {
            return false;
        };
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(_, w) in &self.adj[v] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n).all(|v| !inside[v] || seen[v])
    }
}

impl fmt::Display for Multigraph {
    /// Writes the plain-text graph format accepted by [`Multigraph::from_str`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for &(t, h) in &self.edges {
            writeln!(f, "{t} {h}")?;
        }
        Ok(())
    }
}

impl FromStr for Multigraph {
    type Err = Error;

    /// Parses `n m` followed by `m` lines `tail head`; `#` lines and blank
    /// lines are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing \"n m\" header".into()))?;
        let (n, m) = parse_pair(header)
            .ok_or_else(|| Error::Parse(format!("malformed header {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let pair = parse_pair(line)
                .ok_or_else(|| Error::Parse(format!("malformed edge line {line:?}")))?;
            edges.push(pair);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header declares {m} edges but {} edge lines follow",
                edges.len()
            )));
        }
        Self::new(n, edges)
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}
