//! Maximal cliques of the commutation graph (Bron–Kerbosch with pivoting).

use crate::error::Result;
use crate::heisenberg::HeisTriple;

/// `adj[i][j]` iff generators `i` and `j` commute (`i != j`).
pub fn commutation_graph(gens: &[HeisTriple]) -> Result<Vec<Vec<bool>>> {
    let r = gens.len();
    let mut adj = vec![vec![false; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let c = gens[i].commutes(&gens[j])?;
            adj[i][j] = c;
            adj[j][i] = c;
        }
    }
    Ok(adj)
}

/// All maximal cliques, each sorted ascending, listed in lexicographic order.
pub fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let p: Vec<usize> = (0..adj.len()).collect();
    expand(adj, &mut Vec::new(), p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(adj: &[Vec<bool>], r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // Pivot with the most neighbours in P.
    let pivot =
        p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count()).expect("P is non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
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
