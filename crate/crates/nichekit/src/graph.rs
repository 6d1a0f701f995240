//! Graph, digraph, and multipartite-tournament value types.
//!
//! All types are immutable after validated construction. Vertices are
//! `0..n-1` and adjacency is kept as per-vertex bit rows of width `n`,
//! so `n` is capped at 64.

use std::fmt;

use thiserror::Error;

/// Hard cap imposed by the bit-row representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{0} vertices exceed the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("arc ({u}, {v}) joins two vertices of part {part}")]
    IntraPartArc { u: usize, v: usize, part: usize },
    #[error("both arcs ({0}, {1}) and ({1}, {0}) are present")]
    Digon(usize, usize),
    #[error("no arc between cross-part vertices {0} and {1}")]
    MissingCrossPair(usize, usize),
    #[error("part sizes must all be at least 1")]
    EmptyPart,
    #[error("a multipartite tournament needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("induced vertex set leaves fewer than 2 nonempty parts")]
    TooFewPartsInduced,
    #[error("partition is empty")]
    EmptyPartition,
    #[error("cannot split {n} vertices into {k} positive parts")]
    BadPartitionShape { n: usize, k: usize },
}

fn check_vertex(v: usize, n: usize) -> Result<(), BuildError> {
    if v >= n {
        Err(BuildError::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn check_n(n: usize) -> Result<(), BuildError> {
    if n > MAX_VERTICES {
        Err(BuildError::TooManyVertices(n))
    } else {
        Ok(())
    }
}

/// Finite simple undirected graph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse; loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, BuildError> {
        check_n(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(BuildError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Graph from precomputed symmetric adjacency rows. Diagonal bits and
    /// bits past `n` must be clear; debug-checked only.
    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &row)| row & (1 << v) == 0 && (n == 64 || row >> n == 0)));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (adj[u] >> v) & 1 == (adj[v] >> u) & 1)));
        Graph { n, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let all = mask_below(n);
        let adj = (0..n).map(|v| all & !(1 << v)).collect();
        Graph { n, adj }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighborhood of `v` as a bit row.
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bit row.
    pub fn closed_row(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut row = self.adj[u] & !mask_below(u + 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced on the set bits of `mask`, relabeled to
    /// `0..popcount(mask)` preserving vertex order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = bits(mask).collect();
        let m = verts.len();
        let mut adj = vec![0u64; m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: m, adj }
    }

    /// The graph with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Loop-free digraph on vertices `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self, BuildError> {
        check_n(n)?;
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for &(u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(BuildError::SelfLoop(u));
            }
            out[u] |= 1 << v;
            inn[v] |= 1 << u;
        }
        Ok(Digraph { n, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Open out-neighborhood of `v` as a bit row.
    pub fn out_row(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// Open in-neighborhood of `v` as a bit row.
    pub fn in_row(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].count_ones() as usize
    }

    /// Sorted arc list.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in bits(self.out[u]) {
                out.push((u, v));
            }
        }
        out
    }

    /// The digraph with every arc reversed.
    pub fn converse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Subdigraph induced on the set bits of `mask`, relabeled preserving order.
    pub fn induced(&self, mask: u64) -> Digraph {
        let verts: Vec<usize> = bits(mask).collect();
        let m = verts.len();
        let mut out = vec![0u64; m];
        let mut inn = vec![0u64; m];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_arc(u, v) {
                    out[i] |= 1 << j;
                    inn[j] |= 1 << i;
                }
            }
        }
        Digraph { n: m, out, inn }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph(n={}, arcs={:?})", self.n, self.arcs())
    }
}

/// Orientation of a complete multipartite graph. Part `i` occupies the
/// consecutive index block after parts `0..i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteTournament {
    digraph: Digraph,
    part_sizes: Vec<usize>,
}

impl MultipartiteTournament {
    /// Validates that `arcs` orient every cross-part pair exactly once.
    pub fn new(part_sizes: &[usize], arcs: &[(usize, usize)]) -> Result<Self, BuildError> {
        let digraph = Digraph::new(part_sizes.iter().sum(), arcs)?;
        Self::from_digraph(digraph, part_sizes)
    }

    pub fn from_digraph(digraph: Digraph, part_sizes: &[usize]) -> Result<Self, BuildError> {
        if part_sizes.len() < 2 {
            return Err(BuildError::TooFewParts(part_sizes.len()));
        }
        if part_sizes.contains(&0) {
            return Err(BuildError::EmptyPart);
        }
        let n: usize = part_sizes.iter().sum();
        assert_eq!(n, digraph.n());
        let part_of = part_index_table(part_sizes);
        for u in 0..n {
            for v in u + 1..n {
                let fwd = digraph.has_arc(u, v);
                let bwd = digraph.has_arc(v, u);
                if part_of[u] == part_of[v] {
                    if fwd || bwd {
                        return Err(BuildError::IntraPartArc {
                            u,
                            v,
                            part: part_of[u],
                        });
                    }
                } else if fwd && bwd {
                    return Err(BuildError::Digon(u, v));
                } else if !fwd && !bwd {
                    return Err(BuildError::MissingCrossPair(u, v));
                }
            }
        }
        Ok(MultipartiteTournament {
            digraph,
            part_sizes: part_sizes.to_vec(),
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn n(&self) -> usize {
        self.digraph.n()
    }

    pub fn k(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_of(&self, v: usize) -> usize {
        let mut acc = 0;
        for (i, &s) in self.part_sizes.iter().enumerate() {
            acc += s;
            if v < acc {
                return i;
            }
        }
        panic!("vertex {v} out of range");
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        self.digraph.arcs()
    }

    /// Same parts, every arc reversed.
    pub fn converse(&self) -> MultipartiteTournament {
        MultipartiteTournament {
            digraph: self.digraph.converse(),
            part_sizes: self.part_sizes.clone(),
        }
    }

    /// Subtournament induced on the set bits of `mask`; empty parts drop,
    /// vertices relabel to `0..|S|-1` preserving order. Fails when fewer
    /// than 2 nonempty parts remain.
    pub fn induced(&self, mask: u64) -> Result<MultipartiteTournament, BuildError> {
        let part_of = part_index_table(&self.part_sizes);
        let mut kept_sizes = vec![0usize; self.part_sizes.len()];
        for v in bits(mask) {
            check_vertex(v, self.n())?;
            kept_sizes[part_of[v]] += 1;
        }
        let part_sizes: Vec<usize> = kept_sizes.into_iter().filter(|&s| s > 0).collect();
        if part_sizes.len() < 2 {
            return Err(BuildError::TooFewPartsInduced);
        }
        Ok(MultipartiteTournament {
            digraph: self.digraph.induced(mask),
            part_sizes,
        })
    }
}

impl fmt::Debug for MultipartiteTournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MultipartiteTournament(parts={:?}, arcs={:?})",
            self.part_sizes,
            self.arcs()
        )
    }
}

/// Multiset of positive part sizes, stored nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(sizes: &[usize]) -> Result<Self, BuildError> {
        if sizes.is_empty() {
            return Err(BuildError::EmptyPartition);
        }
        if sizes.contains(&0) {
            return Err(BuildError::EmptyPart);
        }
        let mut sizes = sizes.to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Number of cross-part pairs, i.e. orientable edges.
    pub fn cross_pair_count(&self) -> usize {
        let n = self.n();
        let sq: usize = self.0.iter().map(|s| s * s).sum();
        (n * n - sq) / 2
    }
}

/// Maps each vertex to its part index under the block convention.
pub fn part_index_table(part_sizes: &[usize]) -> Vec<usize> {
    let mut table = Vec::with_capacity(part_sizes.iter().sum());
    for (i, &s) in part_sizes.iter().enumerate() {
        table.extend(std::iter::repeat_n(i, s));
    }
    table
}

/// Iterates the set bit positions of `mask` in increasing order.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        (mask != 0).then_some(mask),
        |m| {
            let next = m & (m - 1);
            (next != 0).then_some(next)
        },
    )
    .map(|m| m.trailing_zeros() as usize)
}

/// Bit mask with the low `n` bits set.
pub fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
