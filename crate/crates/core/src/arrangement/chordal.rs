//! Chordality of small graphs via maximum cardinality search.
//!
//! Graphs have at most 64 vertices and are given as adjacency bitmasks.

/// Maximum cardinality search order (last visited vertex first in the returned list).
fn mcs_order(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut done = 0u64;
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| done & (1 << v) == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done |= 1 << v;
        visit.push(v);
        for u in 0..n {
            if adj[v] & (1 << u) != 0 && done & (1 << u) == 0 {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// `true` if `order` is a perfect elimination ordering: each vertex's later
/// neighbours form a clique.
pub fn is_perfect_elimination_ordering(adj: &[u64], order: &[usize]) -> bool {
    let n = adj.len();
    let mut pos = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    for &v in order {
        let later: Vec<usize> =
            (0..n).filter(|&u| adj[v] & (1 << u) != 0 && pos[u] > pos[v]).collect();
        for (a, &x) in later.iter().enumerate() {
            for &y in &later[a + 1..] {
                if adj[x] & (1 << y) == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// A perfect elimination ordering if the graph is chordal.
pub fn perfect_elimination_ordering(adj: &[u64]) -> Option<Vec<usize>> {
    assert!(adj.len() <= 64, "at most 64 vertices");
    let order = mcs_order(adj);
    is_perfect_elimination_ordering(adj, &order).then_some(order)
}

pub fn is_chordal(adj: &[u64]) -> bool {
    perfect_elimination_ordering(adj).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    #[test]
    fn cycles() {
        assert!(!is_chordal(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])));
        assert!(is_chordal(&graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])));
        assert!(is_chordal(&graph(3, &[(0, 1), (1, 2), (0, 2)])));
        assert!(!is_chordal(&graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])));
        assert!(is_chordal(&graph(5, &[])));
    }
}
