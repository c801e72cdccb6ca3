//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

/// All maximal cliques of the graph on `0..n`, each sorted, listed in sorted order.
pub fn maximal_cliques(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let adj: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i != j && adjacent(i, j)).collect()).collect();
    let mut out = Vec::new();
    expand(&adj, &mut Vec::new(), (0..n).collect(), Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
        r.push(v);
        expand(adj, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
