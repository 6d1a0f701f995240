//! Exact structural predicates and metrics on small graphs.

use thiserror::Error;

use crate::graph::{bits, mask_below, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SizeGuardError {
    #[error("operation limited to {limit} vertices, got {n}")]
    Exceeded { n: usize, limit: usize },
}

fn guard(n: usize, limit: usize) -> Result<(), SizeGuardError> {
    if n > limit {
        Err(SizeGuardError::Exceeded { n, limit })
    } else {
        Ok(())
    }
}

/// Connected components as sorted vertex lists, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for v in 0..n {
        if seen >> v & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << v;
        loop {
            let mut grown = comp;
            for u in bits(comp) {
                grown |= g.row(u);
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        seen |= comp;
        out.push(bits(comp).collect());
    }
    out
}

/// Component of `v` as a bit mask.
fn component_mask(g: &Graph, v: usize) -> u64 {
    let mut comp = 1u64 << v;
    loop {
        let mut grown = comp;
        for u in bits(comp) {
            grown |= g.row(u);
        }
        if grown == comp {
            return comp;
        }
        comp = grown;
    }
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && component_mask(g, 0) == mask_below(g.n())
}

/// Exact stability (independence) number by bitset branch and bound.
pub fn stability_number(g: &Graph) -> Result<usize, SizeGuardError> {
    guard(g.n(), 64)?;
    let mut best = 0;
    branch_stable(g, mask_below(g.n()), 0, &mut best);
    Ok(best)
}

fn branch_stable(g: &Graph, avail: u64, current: usize, best: &mut usize) {
    if current + avail.count_ones() as usize <= *best {
        return;
    }
    if avail == 0 {
        *best = (*best).max(current);
        return;
    }
    // Greedy clique cover of the available vertices bounds the gain.
    let mut cover = 0;
    let mut rest = avail;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let mut clique = 1u64 << v;
        let mut candidates = rest & g.row(v);
        while candidates != 0 {
            let u = candidates.trailing_zeros() as usize;
            clique |= 1 << u;
            candidates &= g.row(u);
        }
        rest &= !clique;
        cover += 1;
    }
    if current + cover <= *best {
        return;
    }
    // Branch on a vertex of maximum degree within avail.
    let v = bits(avail)
        .max_by_key(|&v| (g.row(v) & avail).count_ones())
        .unwrap();
    branch_stable(g, avail & !(1 << v) & !g.row(v), current + 1, best);
    branch_stable(g, avail & !(1 << v), current, best);
}

/// Maximum eccentricity, or `None` when disconnected or empty.
pub fn diameter(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n == 0 || !is_connected(g) {
        return None;
    }
    let mut diam = 0;
    for s in 0..n {
        let mut reached = 1u64 << s;
        let mut frontier = reached;
        let mut dist = 0;
        while reached != mask_below(n) {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.row(v);
            }
            next &= !reached;
            reached |= next;
            frontier = next;
            dist += 1;
        }
        diam = diam.max(dist);
    }
    Some(diam)
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in bits(g.row(u) & !mask_below(u + 1)) {
            if g.row(u) & g.row(v) != 0 {
                return true;
            }
        }
    }
    false
}

/// True iff `G` has no induced subgraph isomorphic to the 6-vertex path.
/// Reference implementation: scan all 6-subsets.
pub fn is_p6_free(g: &Graph) -> Result<bool, SizeGuardError> {
    guard(g.n(), 64)?;
    let n = g.n();
    if n < 6 {
        return Ok(true);
    }
    let mut subset = [0usize; 6];
    Ok(!any_subset_induces_p6(g, &mut subset, 0, 0, n))
}

fn any_subset_induces_p6(
    g: &Graph,
    subset: &mut [usize; 6],
    depth: usize,
    from: usize,
    n: usize,
) -> bool {
    if depth == 6 {
        let mask = subset.iter().fold(0u64, |m, &v| m | (1 << v));
        return induces_path(g, mask);
    }
    (from..n).any(|v| {
        subset[depth] = v;
        any_subset_induces_p6(g, subset, depth + 1, v + 1, n)
    })
}

/// Whether the induced subgraph on `mask` is a path spanning `mask`:
/// connected, |V|-1 edges, max degree 2.
fn induces_path(g: &Graph, mask: u64) -> bool {
    let size = mask.count_ones() as usize;
    let mut edge_doubled = 0;
    for v in bits(mask) {
        let deg = (g.row(v) & mask).count_ones() as usize;
        if deg > 2 {
            return false;
        }
        edge_doubled += deg;
    }
    if edge_doubled != 2 * (size - 1) {
        return false;
    }
    // Connectivity within the mask.
    let start = mask.trailing_zeros() as usize;
    let mut comp = 1u64 << start;
    loop {
        let mut grown = comp;
        for u in bits(comp) {
            grown |= g.row(u) & mask;
        }
        if grown == comp {
            return comp == mask;
        }
        comp = grown;
    }
}

/// If every component is a complete graph, returns component sizes in
/// nonincreasing order; otherwise `None`.
pub fn recognize_disjoint_cliques(g: &Graph) -> Option<Vec<usize>> {
    let mut sizes = Vec::new();
    for comp in components(g) {
        let s = comp.len();
        let mask = comp.iter().fold(0u64, |m, &v| m | (1 << v));
        for &v in &comp {
            if (g.row(v) & mask).count_ones() as usize != s - 1 {
                return None;
            }
        }
        sizes.push(s);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

/// Isomorphism-invariant byte encoding: vertex count followed by the
/// lexicographically minimal upper-triangle bit packing over admissible
/// relabelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

const ISO_LIMIT: usize = 12;

/// Invariant used to pre-partition vertices: (degree, sorted multiset of
/// neighbor degrees). Permutations only map vertices within equal-invariant
/// classes, which is sound because the invariant is preserved by
/// isomorphism.
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = bits(g.row(v)).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

/// Orders vertices into classes of equal invariant; returns (class id per
/// vertex, class order is the sorted invariant order).
fn invariant_classes(g: &Graph) -> (Vec<usize>, usize) {
    let inv = vertex_invariants(g);
    let mut keys: Vec<&(usize, Vec<usize>)> = inv.iter().collect();
    keys.sort_unstable();
    keys.dedup();
    let ids = inv
        .iter()
        .map(|k| keys.binary_search(&k).unwrap())
        .collect();
    (ids, keys.len())
}

fn encode(g: &Graph, perm: &[usize]) -> Vec<u8> {
    // perm[v] = new label of v; pack the upper triangle row-major.
    let n = g.n();
    let mut inv = vec![0usize; n];
    for v in 0..n {
        inv[perm[v]] = v;
    }
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in i + 1..n {
            acc = (acc << 1) | u8::from(g.has_edge(inv[i], inv[j]));
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    bytes
}

/// All permutations assigning new labels consistent with invariant
/// classes: class 0 takes the lowest labels, class 1 the next, and so on.
fn for_each_admissible_perm(class_of: &[usize], classes: usize, mut f: impl FnMut(&[usize])) {
    let n = class_of.len();
    let mut class_members: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for (v, &c) in class_of.iter().enumerate() {
        class_members[c].push(v);
    }
    let mut offsets = vec![0usize; classes];
    let mut acc = 0;
    for c in 0..classes {
        offsets[c] = acc;
        acc += class_members[c].len();
    }
    let mut perm = vec![0usize; n];
    permute_classes(&class_members, &offsets, 0, &mut perm, &mut f);
}

fn permute_classes(
    members: &[Vec<usize>],
    offsets: &[usize],
    class: usize,
    perm: &mut [usize],
    f: &mut impl FnMut(&[usize]),
) {
    if class == members.len() {
        f(perm);
        return;
    }
    let mut order = members[class].clone();
    heap_permutations(&mut order, &mut |arrangement| {
        for (slot, &v) in arrangement.iter().enumerate() {
            perm[v] = offsets[class] + slot;
        }
        permute_classes(members, offsets, class + 1, perm, f);
    });
}

fn heap_permutations(items: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            rec(items, k - 1, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    rec(items, k, f);
}

/// Minimum encoding over all admissible relabelings.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SizeGuardError> {
    guard(g.n(), ISO_LIMIT)?;
    let (class_of, classes) = invariant_classes(g);
    let mut best: Option<Vec<u8>> = None;
    for_each_admissible_perm(&class_of, classes, |perm| {
        let enc = encode(g, perm);
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    });
    Ok(CanonicalForm {
        bytes: best.unwrap_or_else(|| vec![0]),
    })
}

/// Searches for an edge-preserving bijection from `G` to `H` by
/// backtracking with degree and neighbor-degree pruning. Returns the
/// mapping `v -> image` when one exists.
pub fn isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    let gi = vertex_invariants(g);
    let mut hi = vertex_invariants(h);
    {
        let mut gs = gi.clone();
        gs.sort_unstable();
        hi.sort_unstable();
        if gs != hi {
            return None;
        }
    }
    let hi = vertex_invariants(h);
    let mut mapping = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend_isomorphism(g, h, &gi, &hi, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    gi: &[(usize, Vec<usize>)],
    hi: &[(usize, Vec<usize>)],
    v: usize,
    mapping: &mut Vec<usize>,
    used: &mut u64,
) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if *used >> w & 1 == 1 || gi[v] != hi[w] {
            continue;
        }
        let ok = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(mapping[u], w));
        if !ok {
            continue;
        }
        mapping[v] = w;
        *used |= 1 << w;
        if extend_isomorphism(g, h, gi, hi, v + 1, mapping, used) {
            return true;
        }
        *used &= !(1 << w);
        mapping[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn p3_union_k1() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn components_examples() {
        assert_eq!(components(&p3_union_k1()).len(), 2);
        let g = Graph::new(4, &[(0, 1)]).unwrap(); // K2 ∪ K1 ∪ K1
        assert_eq!(components(&g).len(), 3);
        assert_eq!(components(&Graph::cycle(6)).len(), 1);
    }

    #[test]
    fn stability_examples() {
        assert_eq!(stability_number(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(stability_number(&Graph::empty(3)).unwrap(), 3);
        let k33 = complete_bipartite(3, 3);
        assert_eq!(stability_number(&k33).unwrap(), 3);
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter(&Graph::path(5)), Some(4));
        assert_eq!(diameter(&Graph::cycle(6)), Some(3));
        assert_eq!(diameter(&p3_union_k1()), None);
    }

    #[test]
    fn triangle_examples() {
        assert!(has_triangle(&Graph::complete(3)));
        assert!(!has_triangle(&Graph::cycle(5)));
        assert!(!has_triangle(&complete_bipartite(3, 3)));
    }

    #[test]
    fn p6_free_examples() {
        assert!(!is_p6_free(&Graph::path(6)).unwrap());
        assert!(is_p6_free(&Graph::cycle(6)).unwrap());
        let mut p5_k1 = Graph::path(5).edges();
        p5_k1.retain(|_| true);
        let g = Graph::new(6, &p5_k1).unwrap();
        assert!(is_p6_free(&g).unwrap());
    }

    #[test]
    fn disjoint_cliques_examples() {
        let g = Graph::new(4, &[(0, 1)]).unwrap();
        assert_eq!(recognize_disjoint_cliques(&g), Some(vec![2, 1, 1]));
        assert_eq!(recognize_disjoint_cliques(&p3_union_k1()), None);
        assert_eq!(recognize_disjoint_cliques(&Graph::complete(4)), Some(vec![4]));
    }

    #[test]
    fn isomorphic_examples() {
        // G4 of Figure 7 in block labeling vs K_{2,3}.
        let g4 = Graph::new(5, &[(0, 1), (0, 3), (1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let k23 = complete_bipartite(2, 3);
        let phi = isomorphic(&g4, &k23).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(g4.has_edge(u, v), k23.has_edge(phi[u], phi[v]));
            }
        }

        assert!(isomorphic(&Graph::cycle(5), &Graph::path(5)).is_none());

        // G5 of Figure 7 vs K_{3,3}.
        let g5 = Graph::new(
            6,
            &[
                (0, 1),
                (0, 3),
                (1, 2),
                (1, 4),
                (2, 3),
                (2, 5),
                (3, 4),
                (4, 5),
                (5, 0),
            ],
        )
        .unwrap();
        assert!(isomorphic(&g5, &complete_bipartite(3, 3)).is_some());
    }

    #[test]
    fn canonical_form_examples() {
        let p3a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let p3b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&p3a).unwrap(), canonical_form(&p3b).unwrap());
        assert_ne!(
            canonical_form(&p3a).unwrap(),
            canonical_form(&Graph::complete(3)).unwrap()
        );
    }

    #[test]
    fn canonical_forms_count_11_on_4_vertices() {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut forms = std::collections::BTreeSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(4, &edges).unwrap();
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn iso_iff_same_canonical_form_up_to_5() {
        // All graphs on up to 5 vertices, grouped by canonical form: every
        // member must be isomorphic to its group representative and the
        // representatives of distinct groups must not be isomorphic.
        // Transitivity then settles every pair.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let m = pairs.len();
            let mut groups: std::collections::BTreeMap<CanonicalForm, Vec<Graph>> =
                std::collections::BTreeMap::new();
            for mask in 0u32..1 << m {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                groups.entry(canonical_form(&g).unwrap()).or_default().push(g);
            }
            let reps: Vec<&Graph> = groups.values().map(|v| &v[0]).collect();
            for members in groups.values() {
                for g in members {
                    assert!(isomorphic(&members[0], g).is_some());
                }
            }
            for (i, a) in reps.iter().enumerate() {
                for b in reps.iter().skip(i + 1) {
                    assert!(isomorphic(a, b).is_none());
                }
            }
        }
    }
}
