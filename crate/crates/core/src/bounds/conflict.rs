use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::realizer::RealizerFamily;

/// Graph on `[n]` joining, for every member of a realizer of `singleton(n)`,
/// the two singletons placed last among the member's singletons.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConflictGraph {
    pub n: usize,
    /// Edges `(i, j)` with `1 <= i < j <= n`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl ConflictGraph {
    pub fn new(n: usize) -> Self {
        ConflictGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && (1..=self.n).contains(&i) && (1..=self.n).contains(&j));
        self.edges.insert((i.min(j), i.max(j)));
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(p, &i)| set[p + 1..].iter().all(|&j| i != j && !self.has_edge(i, j)))
    }

    /// Adjacency as bitmasks, bit `j - 1` of entry `i - 1` for edge `{i, j}`.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(i, j) in &self.edges {
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
        }
        adj
    }
}

pub fn conflict_graph(family: &RealizerFamily, n: usize) -> Result<ConflictGraph> {
    if n == 0 || n > 31 {
        return Err(Error::parameter(format!("n = {n} outside 1..=31")));
    }
    let bound = 1u32 << n;
    let mut graph = ConflictGraph::new(n);
    for ple in family.ples() {
        let mut singles = Vec::new();
        for &id in ple.elements() {
            if id == 0 || id >= bound {
                return Err(Error::Range {
                    id,
                    poset: format!("singleton:{n}"),
                });
            }
            if id.count_ones() == 1 {
                singles.push(id.trailing_zeros() as usize + 1);
            }
        }
        if let [.., i, j] = singles[..] {
            graph.add_edge(i, j);
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realizer::PartialLinearExtension;
    use crate::singleton::build_singleton_realizer;

    #[test]
    fn last_two_singletons_form_the_edge() {
        // {1}, {1,2}, {3}, {2}
        let f = RealizerFamily::new(vec![PartialLinearExtension::new(vec![1, 3, 4, 2])]);
        let g = conflict_graph(&f, 3).unwrap();
        assert_eq!(g.edges.into_iter().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn members_without_two_singletons_add_nothing() {
        let f = RealizerFamily::new(vec![
            PartialLinearExtension::new(vec![3, 5, 7]),
            PartialLinearExtension::new(vec![3, 4]),
        ]);
        assert!(conflict_graph(&f, 3).unwrap().edges.is_empty());
    }

    #[test]
    fn out_of_range_ids() {
        let f = RealizerFamily::new(vec![PartialLinearExtension::new(vec![0, 1])]);
        assert!(matches!(conflict_graph(&f, 3), Err(Error::Range { .. })));
        let f = RealizerFamily::new(vec![PartialLinearExtension::new(vec![8])]);
        assert!(matches!(conflict_graph(&f, 3), Err(Error::Range { .. })));
    }

    #[test]
    fn edge_count_bounded_by_size() {
        for n in 2..=9 {
            let f = build_singleton_realizer(n, None).unwrap();
            let g = conflict_graph(&f, n).unwrap();
            assert!(g.edges.len() <= f.size());
        }
    }
}
