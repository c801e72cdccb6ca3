//! Bipartite b-matching by augmenting paths.

/// True iff every left vertex can be matched to an adjacent right vertex with
/// right vertex `j` used at most `capacity[j]` times.
pub fn saturates_left(adj: &[Vec<usize>], capacity: &[usize]) -> bool {
    let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); capacity.len()];
    for left in 0..adj.len() {
        let mut visited = vec![false; capacity.len()];
        if !augment(left, adj, capacity, &mut assigned, &mut visited) {
            return false;
        }
    }
    true
}

fn augment(
    left: usize,
    adj: &[Vec<usize>],
    capacity: &[usize],
    assigned: &mut [Vec<usize>],
    visited: &mut [bool],
) -> bool {
    for &right in &adj[left] {
        if visited[right] {
            continue;
        }
        visited[right] = true;
        if assigned[right].len() < capacity[right] {
            assigned[right].push(left);
            return true;
        }
        for k in 0..assigned[right].len() {
            let other = assigned[right][k];
            if augment(other, adj, capacity, assigned, visited) {
                assigned[right][k] = left;
                return true;
            }
        }
    }
    false
}
