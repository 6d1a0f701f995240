//! The niche-graph operator, true-twin machinery, and clique expansions.

use crate::graph::{Digraph, Graph};

/// Niche graph of a loop-free digraph: `uv` is an edge iff `u != v` and
/// the two vertices share a common out-neighbor or a common in-neighbor.
pub fn niche_graph(d: &Digraph) -> Graph {
    let n = d.n();
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if d.out_row(u) & d.out_row(v) != 0 || d.in_row(u) & d.in_row(v) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    Graph::from_rows(n, adj)
}

/// Partition of a vertex set into true-twin classes, each sorted, listed
/// by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClasses {
    classes: Vec<Vec<usize>>,
}

impl TwinClasses {
    fn group_by_key(n: usize, key: impl Fn(usize) -> (u64, u64)) -> TwinClasses {
        let mut classes: Vec<((u64, u64), Vec<usize>)> = Vec::new();
        for v in 0..n {
            let k = key(v);
            match classes.iter_mut().find(|(ck, _)| *ck == k) {
                Some((_, members)) => members.push(v),
                None => classes.push((k, vec![v])),
            }
        }
        TwinClasses {
            classes: classes.into_iter().map(|(_, m)| m).collect(),
        }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&v))
            .expect("vertex not covered")
    }
}

/// Digraph true twins: identical open out- and in-neighborhoods.
pub fn twin_classes_digraph(d: &Digraph) -> TwinClasses {
    TwinClasses::group_by_key(d.n(), |v| (d.out_row(v), d.in_row(v)))
}

/// Graph true twins: identical closed neighborhoods. Two isolated
/// vertices are not twins ({u} != {v}).
pub fn twin_classes_graph(g: &Graph) -> TwinClasses {
    TwinClasses::group_by_key(g.n(), |v| (g.closed_row(v), 0))
}

/// A base graph together with the clique size each base vertex expands to.
#[derive(Clone, Debug)]
pub struct ExpansionSpec {
    pub base: Graph,
    pub sizes: Vec<usize>,
}

impl ExpansionSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> ExpansionSpec {
        assert_eq!(sizes.len(), base.n(), "one size per base vertex");
        assert!(sizes.iter().all(|&s| s >= 1), "sizes must be at least 1");
        ExpansionSpec { base, sizes }
    }
}

/// Replaces each base vertex with a clique; cliques of adjacent base
/// vertices are completely joined. Blocks follow base-vertex order.
pub fn expand(spec: &ExpansionSpec) -> Graph {
    let n: usize = spec.sizes.iter().sum();
    let mut starts = Vec::with_capacity(spec.base.n());
    let mut acc = 0;
    for &s in &spec.sizes {
        starts.push(acc);
        acc += s;
    }
    let block = |i: usize| starts[i]..starts[i] + spec.sizes[i];
    let mut edges = Vec::new();
    for i in 0..spec.base.n() {
        for u in block(i) {
            for v in block(i) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        for j in i + 1..spec.base.n() {
            if spec.base.has_edge(i, j) {
                for u in block(i) {
                    for v in block(j) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    Graph::new(n, &edges).expect("expansion of a valid graph is valid")
}

/// The fixed base used for expansion recognition: vertex 0 isolated,
/// vertices 1-2-3 a path with middle 2.
pub fn p3_k1() -> Graph {
    Graph::new(4, &[(1, 2), (2, 3)]).unwrap()
}

/// Recognizes `G` as an expansion of `P3 ∪ K1`, returning block sizes in
/// the order (K1, end, middle, end) with the larger end first. Sound via
/// the true-twin quotient: no two base vertices of `P3 ∪ K1` are graph
/// true twins, so the quotient reproduces the base exactly.
pub fn recognize_expansion_p3_k1(g: &Graph) -> Option<ExpansionSpec> {
    let twins = twin_classes_graph(g);
    if twins.len() != 4 {
        return None;
    }
    // Quotient adjacency: twin classes are cliques and cross adjacency is
    // all-or-nothing, so one representative per class suffices.
    let reps: Vec<usize> = twins.classes().iter().map(|c| c[0]).collect();
    let qdeg = |i: usize| {
        (0..4)
            .filter(|&j| j != i && g.has_edge(reps[i], reps[j]))
            .count()
    };
    let degs: Vec<usize> = (0..4).map(qdeg).collect();
    let mut sorted = degs.clone();
    sorted.sort_unstable();
    if sorted != [0, 1, 1, 2] {
        return None;
    }
    let isolated = degs.iter().position(|&d| d == 0).unwrap();
    let mid = degs.iter().position(|&d| d == 2).unwrap();
    let mut ends: Vec<usize> = (0..4).filter(|&i| degs[i] == 1).collect();
    // Degree-1 classes must hang off the middle, not off each other.
    if !ends
        .iter()
        .all(|&e| g.has_edge(reps[e], reps[mid]))
    {
        return None;
    }
    ends.sort_unstable_by_key(|&e| std::cmp::Reverse(twins.classes()[e].len()));
    let sizes = vec![
        twins.classes()[isolated].len(),
        twins.classes()[ends[0]].len(),
        twins.classes()[mid].len(),
        twins.classes()[ends[1]].len(),
    ];
    Some(ExpansionSpec::new(p3_k1(), sizes))
}
