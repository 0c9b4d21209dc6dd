use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matcore::{content_lines, validate_stochastic, DenseMatrix, StochasticMatrix};

/// Simple undirected graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from 1-based edges. Self-loops, duplicates (in either
    /// orientation) and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        let mut adjacency = vec![false; n * n];
        let mut neighbors = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = (u.min(v) - 1, u.max(v) - 1);
            if adjacency[a * n + b] {
                return Err(Error::DuplicateEdge(a + 1, b + 1));
            }
            adjacency[a * n + b] = true;
            adjacency[b * n + a] = true;
            neighbors[a].push(b + 1);
            neighbors[b].push(a + 1);
            list.push((a + 1, b + 1));
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adjacency,
            neighbors,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v - 1].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v - 1]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[(u - 1) * self.n + (v - 1)]
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![1];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v - 1] {
                    seen[v - 1] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// `Some(r)` if every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(1);
        self.neighbors.iter().all(|nb| nb.len() == d).then_some(d)
    }

    /// Relabels vertex `v` as `perm[v - 1]` (a 1-based permutation).
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        Graph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|u| (u, u + 1))).expect("path is simple")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Graph::new(n, (1..=n).map(|u| (u, u % n + 1))).expect("cycle is simple")
    }

    /// Star with center 1 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).expect("star is simple")
    }
}

/// Number of common neighbors `|N_i ∩ N_j|` of two distinct vertices.
pub fn common_neighbors(g: &Graph, i: usize, j: usize) -> Result<usize> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if i == j {
        return Err(Error::SameVertex(i));
    }
    Ok(count_common(g.neighbors(i), g.neighbors(j)))
}

/// Merge-count of two sorted lists.
pub(crate) fn count_common(a: &[usize], b: &[usize]) -> usize {
    let (mut p, mut q, mut count) = (0, 0, 0);
    while p < a.len() && q < b.len() {
        match a[p].cmp(&b[q]) {
            std::cmp::Ordering::Less => p += 1,
            std::cmp::Ordering::Greater => q += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                p += 1;
                q += 1;
            }
        }
    }
    count
}

fn check_randic_input(g: &Graph) -> Result<()> {
    g.check_connected()?;
    if let Some(v) = (1..=g.order()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

/// Random-walk form `D^{-1} A`: entry `(i, j)` is `1/d_i` when `i ~ j`.
pub fn randic_matrix(g: &Graph) -> Result<StochasticMatrix> {
    check_randic_input(g)?;
    let m = DenseMatrix::from_fn(g.order(), |i, j| {
        if g.adjacent(i + 1, j + 1) {
            1.0 / g.degree(i + 1) as f64
        } else {
            0.0
        }
    });
    validate_stochastic(m, 1e-12)
}

/// Symmetric form `D^{-1/2} A D^{-1/2}`, similar to [`randic_matrix`].
pub fn symmetric_randic(g: &Graph) -> Result<DenseMatrix> {
    check_randic_input(g)?;
    Ok(DenseMatrix::from_fn(g.order(), |i, j| {
        if g.adjacent(i + 1, j + 1) {
            1.0 / ((g.degree(i + 1) * g.degree(j + 1)) as f64).sqrt()
        } else {
            0.0
        }
    }))
}

/// Parses an edge-list file: a header line `n m`, then `m` lines `u v`.
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header, "`n m` header")?;
    if n == 0 {
        return Err(Error::parse(header_line, "graph needs at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line_no, line) in lines.by_ref().take(m) {
        last_line = line_no;
        let (u, v) = parse_pair(line_no, line, "edge `u v`")?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(Error::parse(line_no, format!("vertex {w} out of range 1..={n}")));
            }
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::parse(line_no, format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::parse(line_no, "trailing data after edge list"));
    }
    Graph::new(n, edges)
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let nums: Vec<usize> = line
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(line_no, format!("expected {what}, found {line:?}")))?;
    match nums[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::parse(line_no, format!("expected {what}, found {line:?}"))),
    }
}
