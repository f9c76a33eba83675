//! Bounded breadth-first search for identity products.
//!
//! Explores products level by level in lexicographic order of index
//! sequences, so the first identity found is the shortest one and, among
//! those, the lexicographically smallest. This is a semi-decision used to
//! cross-check [`crate::decider`]; it can confirm `YES` but never `NO`.

use std::collections::HashSet;

use crate::heisenberg::HeisTriple;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_length: usize,
    /// Skip states whose triple was already reached at the same or a smaller depth.
    pub dedup: bool,
    /// Upper bound on the number of stored states.
    pub state_budget: Option<usize>,
}

impl SearchConfig {
    pub fn new(max_length: usize) -> Self {
        SearchConfig { max_length: max_length.max(1), dedup: true, state_budget: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<usize>),
    /// Every product up to `max_length` was examined.
    NotFound {
        max_length: usize,
    },
    /// The state budget ran out after completing `depth` levels.
    BudgetExhausted {
        depth: usize,
        states: usize,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&[usize]> {
        match self {
            SearchOutcome::Found(s) => Some(s),
            _ => None,
        }
    }
}

struct Node {
    parent: usize,
    generator: usize,
}

const ROOT: usize = usize::MAX;

fn path(nodes: &[Node], mut at: usize) -> Vec<usize> {
    let mut out = Vec::new();
    while at != ROOT {
        out.push(nodes[at].generator);
        at = nodes[at].parent;
    }
    out.reverse();
    out
}

pub fn bfs_identity(gens: &[HeisTriple], cfg: &SearchConfig) -> SearchOutcome {
    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: HashSet<HeisTriple> = HashSet::new();
    let mut frontier: Vec<(usize, HeisTriple)> = Vec::new();

    for (g, x) in gens.iter().enumerate() {
        if x.is_identity() {
            return SearchOutcome::Found(vec![g]);
        }
        if cfg.dedup && !seen.insert(x.clone()) {
            continue;
        }
        nodes.push(Node { parent: ROOT, generator: g });
        frontier.push((nodes.len() - 1, x.clone()));
    }

    for depth in 2..=cfg.max_length {
        let mut next = Vec::new();
        for (id, state) in &frontier {
            for (g, x) in gens.iter().enumerate() {
                let Ok(y) = state.compose(x) else {
                    continue;
                };
                if y.is_identity() {
                    let mut p = path(&nodes, *id);
                    p.push(g);
                    return SearchOutcome::Found(p);
                }
                if depth == cfg.max_length {
                    continue;
                }
                if cfg.dedup && !seen.insert(y.clone()) {
                    continue;
                }
                if cfg.state_budget.is_some_and(|b| nodes.len() >= b) {
                    return SearchOutcome::BudgetExhausted { depth: depth - 1, states: nodes.len() };
                }
                nodes.push(Node { parent: *id, generator: g });
                next.push((nodes.len() - 1, y));
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    SearchOutcome::NotFound { max_length: cfg.max_length }
}
