use super::conflict::ConflictGraph;

/// Largest graph solved exactly; bigger graphs get the greedy answer.
pub const EXACT_LIMIT: usize = 20;

/// An inclusion-maximal independent set, of maximum size when
/// `n <= EXACT_LIMIT`. Vertices are 1-based and sorted.
pub fn independent_set(graph: &ConflictGraph) -> Vec<usize> {
    let adj = graph.adjacency();
    let mask = if graph.n <= EXACT_LIMIT {
        let mut best = 0u64;
        branch(&adj, full(graph.n), 0, &mut best);
        best
    } else {
        greedy(&adj, graph.n)
    };
    to_vertices(mask)
}

fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn to_vertices(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

fn branch(adj: &[u64], candidates: u64, current: u64, best: &mut u64) {
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return;
    }
    if current.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u64 << v;
    // isolated candidates always join
    if adj[v] & candidates == 0 {
        branch(adj, candidates & !bit, current | bit, best);
        return;
    }
    branch(adj, candidates & !bit & !adj[v], current | bit, best);
    branch(adj, candidates & !bit, current, best);
}

/// Repeatedly takes a minimum-degree vertex of the remaining graph.
fn greedy(adj: &[u64], n: usize) -> u64 {
    let mut remaining = full(n);
    let mut chosen = 0u64;
    while remaining != 0 {
        let v = (0..n)
            .filter(|&v| remaining >> v & 1 == 1)
            .min_by_key(|&v| ((adj[v] & remaining).count_ones(), v))
            .expect("remaining is nonempty");
        chosen |= 1 << v;
        remaining &= !(1u64 << v) & !adj[v];
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ConflictGraph {
        let mut g = ConflictGraph::new(n);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    fn brute_force_max(g: &ConflictGraph) -> usize {
        (0u64..1 << g.n)
            .filter(|&s| g.is_independent(&to_vertices(s)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn is_maximal(g: &ConflictGraph, set: &[usize]) -> bool {
        g.is_independent(set)
            && (1..=g.n)
                .filter(|v| !set.contains(v))
                .all(|v| set.iter().any(|&u| g.has_edge(u, v)))
    }

    #[test]
    fn edgeless_and_complete() {
        let g = graph(6, &[]);
        assert_eq!(independent_set(&g), vec![1, 2, 3, 4, 5, 6]);
        let mut k = ConflictGraph::new(5);
        for i in 1..=5 {
            for j in i + 1..=5 {
                k.add_edge(i, j);
            }
        }
        assert_eq!(independent_set(&k).len(), 1);
    }

    #[test]
    fn path_on_five() {
        let g = graph(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(brute_force_max(&g), 3);
        assert_eq!(independent_set(&g), vec![1, 3, 5]);
    }

    #[test]
    fn exact_matches_brute_force_on_pseudorandom_graphs() {
        let mut state = 0x9e3779b97f4a7c15u64;
        for n in 1..=12 {
            for _ in 0..20 {
                let mut g = ConflictGraph::new(n);
                for i in 1..=n {
                    for j in i + 1..=n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state.is_multiple_of(3) {
                            g.add_edge(i, j);
                        }
                    }
                }
                let set = independent_set(&g);
                assert!(is_maximal(&g, &set));
                assert_eq!(set.len(), brute_force_max(&g));
            }
        }
    }

    #[test]
    fn greedy_is_maximal_on_large_graphs() {
        let n = 40;
        let mut g = ConflictGraph::new(n);
        for i in 1..n {
            g.add_edge(i, i + 1);
        }
        let set = independent_set(&g);
        assert!(is_maximal(&g, &set));
        assert_eq!(set.len(), 20);
    }
}
