use serde::{Deserialize, Serialize};

use super::{Graph, Vertex};

/// Result of min-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degeneracy {
    /// Largest degree seen at removal time.
    pub value: usize,
    /// Removal order.
    pub ordering: Vec<Vertex>,
}

impl Degeneracy {
    /// The densest core: vertices still present when the peeling first hit `value`.
    pub fn core(&self, g: &Graph) -> Vec<Vertex> {
        let pos = position_of_max(g, &self.ordering, self.value);
        let mut core = self.ordering[pos..].to_vec();
        core.sort_unstable();
        core
    }
}

fn position_of_max(g: &Graph, ordering: &[Vertex], value: usize) -> usize {
    let mut removed = vec![false; g.n()];
    for (i, &v) in ordering.iter().enumerate() {
        let deg = g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
        if deg == value {
            return i;
        }
        removed[v] = true;
    }
    0
}

/// Repeatedly removes a minimum-degree vertex, ties to the smallest index.
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_deg = deg.iter().copied().max().unwrap_or(0);
    // Buckets hold vertices by current degree; each bucket is a sorted set so the
    // smallest index pops first.
    let mut buckets: Vec<std::collections::BTreeSet<Vertex>> =
        vec![Default::default(); max_deg + 1];
    for v in g.vertices() {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut ordering = Vec::with_capacity(n);
    let mut value = 0;
    let mut low = 0;
    for _ in 0..n {
        while buckets[low].is_empty() {
            low += 1;
        }
        let v = buckets[low].pop_first().expect("non-empty bucket");
        value = value.max(low);
        removed[v] = true;
        ordering.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[deg[w]].remove(&w);
                deg[w] -= 1;
                buckets[deg[w]].insert(w);
            }
        }
        low = low.saturating_sub(1);
    }
    Degeneracy { value, ordering }
}

/// An upper bound `d(l)` on the degeneracy of graphs without a `K_l` minor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum DegeneracyBound {
    /// `2^(l-2)`.
    Mader,
    /// `ceil(c * l * sqrt(ln l))`, at least 1.
    Scaled(f64),
    /// A fixed value, at least 1.
    Explicit(u64),
}

impl DegeneracyBound {
    pub fn d(&self, l: usize) -> u64 {
        match *self {
            DegeneracyBound::Mader => {
                if l <= 2 {
                    1
                } else {
                    1u64.checked_shl((l - 2) as u32).unwrap_or(u64::MAX)
                }
            }
            DegeneracyBound::Scaled(c) => {
                let lf = l as f64;
                let raw = (c * lf * lf.ln().max(0.0).sqrt()).ceil();
                if raw.is_finite() && raw >= 1.0 {
                    raw as u64
                } else {
                    1
                }
            }
            DegeneracyBound::Explicit(v) => v.max(1),
        }
    }
}

impl std::str::FromStr for DegeneracyBound {
    type Err = String;

    /// Accepts `mader`, `scaled:<c>` and `explicit:<d>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "mader" if arg.is_empty() => Ok(DegeneracyBound::Mader),
            "scaled" => arg
                .parse::<f64>()
                .ok()
                .filter(|c| c.is_finite() && *c > 0.0)
                .map(DegeneracyBound::Scaled)
                .ok_or_else(|| format!("bad scale constant `{arg}`")),
            "explicit" => arg
                .parse()
                .map(DegeneracyBound::Explicit)
                .map_err(|_| format!("bad explicit bound `{arg}`")),
            _ => Err(format!(
                "unknown degeneracy bound `{s}` (expected mader, scaled:C or explicit:D)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn complete_and_edgeless() {
        assert_eq!(degeneracy(&generators::complete(4)).value, 3);
        let d = degeneracy(&Graph::empty(5));
        assert_eq!(d.value, 0);
        assert_eq!(d.ordering, vec![0, 1, 2, 3, 4]);
        assert_eq!(degeneracy(&Graph::empty(0)).value, 0);
    }

    #[test]
    fn grid_is_two_degenerate() {
        let g = generators::grid(4);
        let d = degeneracy(&g);
        assert_eq!(d.value, 2);
        // Peeling from corners: vertex 0 has degree 2 and goes first.
        assert_eq!(d.ordering[0], 0);
    }

    #[test]
    fn ties_break_on_smallest_index() {
        let d = degeneracy(&generators::cycle(5));
        assert_eq!(d.ordering, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn densest_core() {
        // K4 with a pendant path attached.
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
            .unwrap();
        let d = degeneracy(&g);
        assert_eq!(d.value, 3);
        assert_eq!(d.core(&g), vec![0, 1, 2, 3]);
    }

    #[test]
    fn bounds() {
        assert_eq!(DegeneracyBound::Mader.d(2), 1);
        assert_eq!(DegeneracyBound::Mader.d(3), 2);
        assert_eq!(DegeneracyBound::Mader.d(6), 16);
        assert_eq!(DegeneracyBound::Explicit(0).d(4), 1);
        let s = DegeneracyBound::Scaled(1.0);
        assert!((2..20).all(|l| s.d(l) >= 1 && s.d(l + 1) >= s.d(l)));
        assert_eq!("mader".parse::<DegeneracyBound>(), Ok(DegeneracyBound::Mader));
        assert_eq!("explicit:3".parse::<DegeneracyBound>(), Ok(DegeneracyBound::Explicit(3)));
        assert!("scaled:-1".parse::<DegeneracyBound>().is_err());
    }
}
