//! Graph fixtures shared by the benchmarks.

use partial_orient::Multigraph;

pub fn petersen() -> Multigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::new(10, edges).expect("valid")
}

/// Hub 0 joined to every vertex of an `n`-cycle on 1..=n.
pub fn wheel(n: usize) -> Multigraph {
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, i % n + 1));
    }
    Multigraph::new(n + 1, edges).expect("valid")
}

/// `k x k` grid.
pub fn grid(k: usize) -> Multigraph {
    let mut edges = Vec::new();
    for r in 0..k {
        for c in 0..k {
            let v = r * k + c;
            if c + 1 < k {
                edges.push((v, v + 1));
            }
            if r + 1 < k {
                edges.push((v, v + k));
            }
        }
    }
    Multigraph::new(k * k, edges).expect("valid")
}
