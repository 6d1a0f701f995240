//! Exhaustive generation of orientations of complete multipartite graphs
//! and the brute-force realizability oracle.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{part_index_table, BuildError, Digraph, Graph, MultipartiteTournament, Partition};
use crate::niche::niche_graph;
use crate::props::{canonical_form, isomorphic, CanonicalForm};

/// Default cap on the number of orientable cross pairs (2^m orientations).
pub const DEFAULT_CROSS_PAIR_GUARD: usize = 28;

/// Default cap on the vertex count for the brute-force oracle.
pub const DEFAULT_REALIZE_GUARD: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("partition needs 1 <= k <= n, got n={n}, k={k}")]
    BadPartitionArgs { n: usize, k: usize },
    #[error("{m} cross pairs exceed the enumeration guard of {guard}")]
    CrossPairGuard { m: usize, guard: usize },
    #[error("{n} vertices exceed the oracle guard of {guard}")]
    RealizeGuard { n: usize, guard: usize },
    #[error("graph has {n} vertices, fewer than k={k}")]
    TooFewVertices { n: usize, k: usize },
    #[error(transparent)]
    Build(#[from] BuildError),
}

/// All multisets of `k` positive integers summing to `n`, nonincreasing,
/// in lexicographically sorted order.
pub fn partitions(n: usize, k: usize) -> Result<Vec<Partition>, EnumError> {
    if k == 0 || k > n {
        return Err(EnumError::BadPartitionArgs { n, k });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fill_partitions(n, k, n, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

fn fill_partitions(
    remaining: usize,
    slots: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition::new(current).unwrap());
        }
        return;
    }
    // Each of the remaining slots needs at least 1.
    let lo = remaining.div_ceil(slots);
    let hi = max.min(remaining + 1 - slots);
    for first in lo..=hi {
        current.push(first);
        fill_partitions(remaining - first, slots - 1, first, current, out);
        current.pop();
    }
}

/// Splittable cursor over all `2^m` orientations of the complete
/// multipartite graph `K_p`. Bit `j` of the index picks the direction of
/// cross pair `j` (0 keeps the lexicographic `(u, v)` orientation).
#[derive(Clone, Debug)]
pub struct Orientations {
    part_sizes: Vec<usize>,
    cross_pairs: Vec<(usize, usize)>,
}

impl Orientations {
    pub fn new(p: &Partition) -> Result<Self, EnumError> {
        Self::with_guard(p, DEFAULT_CROSS_PAIR_GUARD)
    }

    pub fn with_guard(p: &Partition, guard: usize) -> Result<Self, EnumError> {
        let m = p.cross_pair_count();
        if m > guard {
            return Err(EnumError::CrossPairGuard { m, guard });
        }
        let part_sizes = p.sizes().to_vec();
        let part_of = part_index_table(&part_sizes);
        let n = p.n();
        let mut cross_pairs = Vec::with_capacity(m);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    cross_pairs.push((u, v));
                }
            }
        }
        Ok(Orientations {
            part_sizes,
            cross_pairs,
        })
    }

    pub fn count(&self) -> u64 {
        1u64 << self.cross_pairs.len()
    }

    pub fn cross_pair_count(&self) -> usize {
        self.cross_pairs.len()
    }

    /// The tournament selected by `index`.
    pub fn tournament(&self, index: u64) -> MultipartiteTournament {
        debug_assert!(index < self.count());
        let n: usize = self.part_sizes.iter().sum();
        let arcs: Vec<(usize, usize)> = self
            .cross_pairs
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| if index >> j & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let digraph = Digraph::new(n, &arcs).expect("cross pairs are loop-free and in range");
        MultipartiteTournament::from_digraph(digraph, &self.part_sizes)
            .expect("every cross pair oriented exactly once")
    }

    /// Iterates the index range `[lo, hi)` in order.
    pub fn range(
        &self,
        lo: u64,
        hi: u64,
    ) -> impl Iterator<Item = MultipartiteTournament> + '_ {
        (lo..hi.min(self.count())).map(move |i| self.tournament(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = MultipartiteTournament> + '_ {
        self.range(0, self.count())
    }
}

/// Multiset of canonical niche graphs over all orientations of `K_p`.
/// When `converse_symmetry` is set, indices above their bitwise
/// complement are skipped and each hit counts twice (self-complementary
/// indices cannot occur: complementing flips every cross pair).
pub fn niche_spectrum(
    p: &Partition,
    guard: usize,
    converse_symmetry: bool,
) -> Result<BTreeMap<CanonicalForm, u64>, EnumError> {
    let orientations = Orientations::with_guard(p, guard)?;
    let m = orientations.cross_pair_count();
    let full = orientations.count();
    let spectrum = (0..full)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<CanonicalForm, u64>, index| {
            let weight = if converse_symmetry {
                let complement = !index & ((1u64 << m) - 1);
                if index > complement {
                    return acc;
                }
                2
            } else {
                1
            };
            let t = orientations.tournament(index);
            let form = canonical_form(&niche_graph(t.digraph()))
                .expect("enumeration stays within the canonical-form size guard");
            *acc.entry(form).or_insert(0) += weight;
            acc
        })
        .reduce(BTreeMap::new, merge_spectra);
    Ok(spectrum)
}

pub fn merge_spectra(
    mut a: BTreeMap<CanonicalForm, u64>,
    b: BTreeMap<CanonicalForm, u64>,
) -> BTreeMap<CanonicalForm, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Searches all partitions of `G.n` into `k` parts and all orientations
/// for a tournament whose niche graph is isomorphic to `G`. Deterministic:
/// first hit in (partition, index) order.
pub fn brute_force_realize(
    g: &Graph,
    k: usize,
    guard: usize,
) -> Result<Option<MultipartiteTournament>, EnumError> {
    let n = g.n();
    if n < k {
        return Err(EnumError::TooFewVertices { n, k });
    }
    if n > guard {
        return Err(EnumError::RealizeGuard { n, guard });
    }
    let target = canonical_form(g).expect("guard keeps n within canonical-form limits");
    for p in partitions(n, k)? {
        let orientations = Orientations::with_guard(&p, DEFAULT_CROSS_PAIR_GUARD)?;
        for t in orientations.iter() {
            let niche = niche_graph(t.digraph());
            // Cheap screen before canonicalizing.
            if niche.edge_count() != g.edge_count() {
                continue;
            }
            if isomorphic(&niche, g).is_some() {
                debug_assert_eq!(canonical_form(&niche).unwrap(), target);
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::props::components;

    #[test]
    fn partitions_examples() {
        let to_vecs = |ps: Vec<Partition>| -> Vec<Vec<usize>> {
            ps.into_iter().map(|p| p.sizes().to_vec()).collect()
        };
        assert_eq!(to_vecs(partitions(5, 3).unwrap()), vec![vec![3, 1, 1], vec![2, 2, 1]]);
        assert_eq!(to_vecs(partitions(4, 4).unwrap()), vec![vec![1, 1, 1, 1]]);
        assert_eq!(
            to_vecs(partitions(6, 3).unwrap()),
            vec![vec![4, 1, 1], vec![3, 2, 1], vec![2, 2, 2]]
        );
        assert!(partitions(3, 4).is_err());
        assert!(partitions(3, 0).is_err());
    }

    #[test]
    fn orientation_counts() {
        for (sizes, expect) in [
            (vec![1, 1, 1], 8u64),
            (vec![2, 1, 1], 32),
            (vec![2, 2, 2], 4096),
        ] {
            let p = Partition::new(&sizes).unwrap();
            let o = Orientations::new(&p).unwrap();
            assert_eq!(o.count(), expect);
        }
    }

    #[test]
    fn orientations_distinct_and_valid() {
        // Completeness on every partition with n <= 5.
        for n in 2..=5 {
            for k in 2..=n {
                for p in partitions(n, k).unwrap() {
                    let o = Orientations::new(&p).unwrap();
                    let all: std::collections::BTreeSet<Vec<(usize, usize)>> =
                        o.iter().map(|t| t.arcs()).collect();
                    assert_eq!(all.len() as u64, o.count());
                }
            }
        }
    }

    #[test]
    fn guard_rejects_large_partitions() {
        let p = Partition::new(&[4, 4]).unwrap();
        assert!(matches!(
            Orientations::with_guard(&p, 10),
            Err(EnumError::CrossPairGuard { m: 16, guard: 10 })
        ));
    }

    #[test]
    fn spectrum_k111() {
        let p = Partition::new(&[1, 1, 1]).unwrap();
        let spectrum = niche_spectrum(&p, 28, false).unwrap();
        let i3 = canonical_form(&Graph::empty(3)).unwrap();
        let p3 = canonical_form(&Graph::path(3)).unwrap();
        assert_eq!(spectrum.get(&i3), Some(&2));
        assert_eq!(spectrum.get(&p3), Some(&6));
        assert_eq!(spectrum.len(), 2);
    }

    #[test]
    fn spectrum_converse_symmetry_matches_full() {
        for sizes in [vec![2, 1, 1], vec![2, 2, 1], vec![1, 1, 1, 1]] {
            let p = Partition::new(&sizes).unwrap();
            let full = niche_spectrum(&p, 28, false).unwrap();
            let halved = niche_spectrum(&p, 28, true).unwrap();
            assert_eq!(full, halved);
        }
    }

    #[test]
    fn spectrum_range_split_union() {
        let p = Partition::new(&[2, 1, 1]).unwrap();
        let o = Orientations::new(&p).unwrap();
        let whole = niche_spectrum(&p, 28, false).unwrap();
        let mut merged = BTreeMap::new();
        for (lo, hi) in [(0, 7), (7, 19), (19, 32)] {
            let part: BTreeMap<CanonicalForm, u64> = o
                .range(lo, hi)
                .map(|t| canonical_form(&niche_graph(t.digraph())).unwrap())
                .fold(BTreeMap::new(), |mut acc, f| {
                    *acc.entry(f).or_insert(0) += 1;
                    acc
                });
            merged = merge_spectra(merged, part);
        }
        assert_eq!(whole, merged);
    }

    #[test]
    fn spectrum_k211_disconnected_forms() {
        let p = Partition::new(&[2, 1, 1]).unwrap();
        let spectrum = niche_spectrum(&p, 28, false).unwrap();
        let p3_k1 = canonical_form(&Graph::new(4, &[(1, 2), (2, 3)]).unwrap()).unwrap();
        let k2_k1_k1 = canonical_form(&Graph::new(4, &[(0, 1)]).unwrap()).unwrap();
        for form in spectrum.keys() {
            // Reconstruct a representative to inspect its components: the
            // disconnected forms must be P3 ∪ K1 or a three-component graph.
            let o = Orientations::new(&p).unwrap();
            let rep = o
                .iter()
                .map(|t| niche_graph(t.digraph()))
                .find(|g| &canonical_form(g).unwrap() == form)
                .unwrap();
            let comps = components(&rep).len();
            if comps == 2 {
                assert_eq!(*form, p3_k1);
            } else if comps == 3 {
                assert_eq!(*form, k2_k1_k1);
            }
        }
    }

    #[test]
    fn spectrum_k1111_contains_p4() {
        let p = Partition::new(&[1, 1, 1, 1]).unwrap();
        let spectrum = niche_spectrum(&p, 28, false).unwrap();
        let p4 = canonical_form(&Graph::path(4)).unwrap();
        assert!(spectrum.contains_key(&p4));
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_realize(&Graph::complete(4), 3, 8)
            .unwrap()
            .is_none());
        let witness = brute_force_realize(&Graph::cycle(5), 5, 8)
            .unwrap()
            .unwrap();
        assert_eq!(witness.part_sizes(), &[1, 1, 1, 1, 1]);
        assert!(isomorphic(&niche_graph(witness.digraph()), &Graph::cycle(5)).is_some());
        assert!(brute_force_realize(&Graph::path(5), 4, 8).unwrap().is_none());
    }

    #[test]
    fn brute_force_guards() {
        assert!(matches!(
            brute_force_realize(&Graph::complete(3), 4, 8),
            Err(EnumError::TooFewVertices { n: 3, k: 4 })
        ));
        assert!(matches!(
            brute_force_realize(&Graph::complete(9), 3, 8),
            Err(EnumError::RealizeGuard { n: 9, guard: 8 })
        ));
    }
}
