use std::collections::VecDeque;

use super::{Graph, Vertex};

/// Two sides of a proper 2-colouring, each sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

/// A 2-colouring by BFS, or `None` when an odd cycle exists.
///
/// The smallest vertex of each component goes to `left`.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<bool>> = vec![None; g.n()];
    for s in g.vertices() {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("coloured on push");
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for v in g.vertices() {
        if side[v] == Some(false) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some(Bipartition { left, right })
}
