use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{bitset, Bramble};
use crate::graph::Vertex;

/// Exhaustive search runs when the elements cover at most this many vertices.
pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Order of a bramble with a hitting set of that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCertificate {
    /// Size of `hitting_set`; the exact order when `exhaustive` is set.
    pub order: usize,
    pub hitting_set: Vec<Vertex>,
    /// Set when the search proved no smaller hitting set exists.
    pub exhaustive: bool,
    /// Proven lower bound on the order; equals `order` when exhaustive.
    pub lower_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateDefect {
    #[error("hitting set misses element {0}")]
    MissesElement(usize),
    #[error("order {order} differs from hitting-set size {size}")]
    SizeMismatch { order: usize, size: usize },
    #[error("lower bound {lower} exceeds order {order}")]
    BoundsInverted { lower: usize, order: usize },
    #[error("claimed minimum {claimed} but a hitting set of size {found} exists")]
    NotMinimum { claimed: usize, found: usize },
}

/// Minimum hitting set by branch and bound.
///
/// A greedy cover seeds the incumbent, disjoint-element packing bounds each node
/// from below. When the elements cover more than `exact_limit` vertices only
/// the bounds are returned, with `exhaustive` unset.
pub fn bramble_order(b: &Bramble, exact_limit: usize) -> OrderCertificate {
    let n = b.graph().n();
    let sets: Vec<FixedBitSet> = b.elements().iter().map(|e| bitset(n, e)).collect();
    let (greedy, lower) = min_hitting_set_bounds(n, &sets);
    let mut support = FixedBitSet::with_capacity(n);
    for s in &sets {
        support.union_with(s);
    }
    if support.count_ones(..) > exact_limit || lower == greedy.len() {
        let exhaustive = lower == greedy.len();
        return OrderCertificate {
            order: greedy.len(),
            hitting_set: greedy,
            exhaustive,
            lower_bound: lower,
        };
    }
    let mut search = Search {
        n,
        sets: &sets,
        best: greedy,
    };
    let mut chosen = Vec::new();
    let unhit: Vec<usize> = (0..sets.len()).collect();
    search.branch(&mut chosen, &unhit, &FixedBitSet::with_capacity(n));
    let mut best = search.best;
    best.sort_unstable();
    debug_assert!(b.is_hit_by(&best));
    OrderCertificate {
        order: best.len(),
        lower_bound: best.len(),
        hitting_set: best,
        exhaustive: true,
    }
}

/// Greedy hitting set (most unhit elements first, ties to the smallest vertex)
/// and the better of two lower bounds: a packing of disjoint elements and
/// `ceil(elements / max multiplicity)`.
pub fn min_hitting_set_bounds(n: usize, sets: &[FixedBitSet]) -> (Vec<Vertex>, usize) {
    let mut unhit: Vec<usize> = (0..sets.len()).collect();
    let mut chosen = Vec::new();
    while !unhit.is_empty() {
        let mut count = vec![0usize; n];
        for &i in &unhit {
            for v in sets[i].ones() {
                count[v] += 1;
            }
        }
        let v = (0..n)
            .max_by_key(|&v| (count[v], std::cmp::Reverse(v)))
            .expect("unhit elements are non-empty");
        chosen.push(v);
        unhit.retain(|&i| !sets[i].contains(v));
    }
    chosen.sort_unstable();
    let all: Vec<usize> = (0..sets.len()).collect();
    let packing = packing_bound(n, sets, &all, None);
    let mut mult = vec![0usize; n];
    for s in sets {
        for v in s.ones() {
            mult[v] += 1;
        }
    }
    let max_mult = mult.into_iter().max().unwrap_or(0);
    let counting = if max_mult == 0 {
        0
    } else {
        sets.len().div_ceil(max_mult)
    };
    (chosen, packing.max(counting))
}

/// Greedily packs pairwise disjoint elements (smallest first) among `which`,
/// ignoring vertices in `forbidden`.
fn packing_bound(
    n: usize,
    sets: &[FixedBitSet],
    which: &[usize],
    forbidden: Option<&FixedBitSet>,
) -> usize {
    let live = |i: usize| -> FixedBitSet {
        let mut s = sets[i].clone();
        if let Some(f) = forbidden {
            s.difference_with(f);
        }
        s
    };
    let mut order: Vec<(usize, FixedBitSet)> = which.iter().map(|&i| (i, live(i))).collect();
    order.sort_by_key(|(i, s)| (s.count_ones(..), *i));
    let mut used = FixedBitSet::with_capacity(n);
    let mut packed = 0;
    for (_, s) in order {
        if s.is_disjoint(&used) {
            used.union_with(&s);
            packed += 1;
        }
    }
    packed
}

struct Search<'a> {
    n: usize,
    sets: &'a [FixedBitSet],
    best: Vec<Vertex>,
}

impl Search<'_> {
    /// Branches on the unhit element with the fewest allowed vertices; vertices
    /// tried in earlier sibling branches are forbidden in later ones.
    fn branch(&mut self, chosen: &mut Vec<Vertex>, unhit: &[usize], forbidden: &FixedBitSet) {
        if unhit.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }
        let lower = packing_bound(self.n, self.sets, unhit, Some(forbidden));
        if chosen.len() + lower >= self.best.len() {
            return;
        }
        let pick = unhit
            .iter()
            .copied()
            .map(|i| {
                let mut s = self.sets[i].clone();
                s.difference_with(forbidden);
                (s.count_ones(..), i, s)
            })
            .min_by_key(|(c, i, _)| (*c, *i));
        let Some((count, _, allowed)) = pick else {
            return;
        };
        if count == 0 {
            return;
        }
        let mut local_forbidden = forbidden.clone();
        for v in allowed.ones() {
            chosen.push(v);
            let rest: Vec<usize> = unhit
                .iter()
                .copied()
                .filter(|&i| !self.sets[i].contains(v))
                .collect();
            self.branch(chosen, &rest, &local_forbidden);
            chosen.pop();
            local_forbidden.insert(v);
        }
    }
}

/// Checks a certificate against its bramble; an exhaustive claim is re-derived.
pub fn verify_certificate(b: &Bramble, cert: &OrderCertificate) -> Result<(), CertificateDefect> {
    if cert.order != cert.hitting_set.len() {
        return Err(CertificateDefect::SizeMismatch {
            order: cert.order,
            size: cert.hitting_set.len(),
        });
    }
    if cert.lower_bound > cert.order {
        return Err(CertificateDefect::BoundsInverted {
            lower: cert.lower_bound,
            order: cert.order,
        });
    }
    let hit = bitset(b.graph().n(), &cert.hitting_set);
    if let Some(i) = b
        .elements()
        .iter()
        .position(|e| !e.iter().any(|&v| hit.contains(v)))
    {
        return Err(CertificateDefect::MissesElement(i));
    }
    let claimed = if cert.exhaustive { cert.order } else { cert.lower_bound };
    let exact = bramble_order(b, usize::MAX);
    if exact.order < claimed {
        return Err(CertificateDefect::NotMinimum {
            claimed,
            found: exact.order,
        });
    }
    Ok(())
}
