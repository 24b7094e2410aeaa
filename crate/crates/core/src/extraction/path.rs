use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// A simple path given by its vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path(pub Vec<Vertex>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path is empty")]
    Empty,
    #[error("vertex {0} is outside the host")]
    OutOfRange(Vertex),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("vertex {0} repeats")]
    Repeated(Vertex),
}

impl Path {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PathError> {
        if self.0.is_empty() {
            return Err(PathError::Empty);
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.0 {
            if v >= g.n() {
                return Err(PathError::OutOfRange(v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(PathError::Repeated(v));
            }
        }
        match self.0.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            Some(w) => Err(PathError::NotAdjacent(w[0], w[1])),
            None => Ok(()),
        }
    }

    pub fn meets(&self, other: &Path) -> bool {
        self.0.iter().any(|v| other.0.contains(v))
    }

    pub fn sorted_vertices(&self) -> Vec<Vertex> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

/// Spine paths and, for every pair `i < j`, a family of `k` linking paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub spines: Vec<Path>,
    pub links: BTreeMap<(usize, usize), Vec<Path>>,
    pub k: usize,
    pub l: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathSystemDefect {
    #[error("expected {expected} spines, found {found}")]
    SpineCount { expected: usize, found: usize },
    #[error("spine {index}: {source}")]
    BadSpine { index: usize, source: PathError },
    #[error("spines {0} and {1} intersect")]
    SpinesMeet(usize, usize),
    #[error("no link family for pair {0},{1}")]
    MissingFamily(usize, usize),
    #[error("unexpected link family key {0},{1}")]
    StrayFamily(usize, usize),
    #[error("pair {i},{j}: expected {expected} links, found {found}")]
    LinkCount {
        i: usize,
        j: usize,
        expected: usize,
        found: usize,
    },
    #[error("pair {i},{j} link {index}: {source}")]
    BadLink {
        i: usize,
        j: usize,
        index: usize,
        source: PathError,
    },
    #[error("pair {i},{j}: links {a} and {b} intersect")]
    LinksMeet { i: usize, j: usize, a: usize, b: usize },
    #[error("pair {i},{j} link {index} does not run from spine {i} to spine {j}")]
    WrongEnds { i: usize, j: usize, index: usize },
    #[error("pair {i},{j} link {index} has an internal vertex on spine {i} or {j}")]
    InternalOnSpine { i: usize, j: usize, index: usize },
}

impl PathSystem {
    /// Checks every invariant against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<(), PathSystemDefect> {
        if self.spines.len() != self.l {
            return Err(PathSystemDefect::SpineCount {
                expected: self.l,
                found: self.spines.len(),
            });
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (index, s) in self.spines.iter().enumerate() {
            s.validate(g)
                .map_err(|source| PathSystemDefect::BadSpine { index, source })?;
            for &v in s.vertices() {
                if owner[v] != usize::MAX {
                    return Err(PathSystemDefect::SpinesMeet(owner[v], index));
                }
                owner[v] = index;
            }
        }
        for &(i, j) in self.links.keys() {
            if !(i < j && j < self.l) {
                return Err(PathSystemDefect::StrayFamily(i, j));
            }
        }
        for i in 0..self.l {
            for j in i + 1..self.l {
                let family = self
                    .links
                    .get(&(i, j))
                    .ok_or(PathSystemDefect::MissingFamily(i, j))?;
                if family.len() != self.k {
                    return Err(PathSystemDefect::LinkCount {
                        i,
                        j,
                        expected: self.k,
                        found: family.len(),
                    });
                }
                let mut used = vec![usize::MAX; g.n()];
                for (index, q) in family.iter().enumerate() {
                    q.validate(g).map_err(|source| PathSystemDefect::BadLink {
                        i,
                        j,
                        index,
                        source,
                    })?;
                    for &v in q.vertices() {
                        if used[v] != usize::MAX {
                            return Err(PathSystemDefect::LinksMeet {
                                i,
                                j,
                                a: used[v],
                                b: index,
                            });
                        }
                        used[v] = index;
                    }
                    let vs = q.vertices();
                    let (first, last) = (vs[0], vs[vs.len() - 1]);
                    if owner[first] != i || owner[last] != j {
                        return Err(PathSystemDefect::WrongEnds { i, j, index });
                    }
                    let inner = &vs[1..vs.len() - 1];
                    if inner.iter().any(|&v| owner[v] == i || owner[v] == j) {
                        return Err(PathSystemDefect::InternalOnSpine { i, j, index });
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PathSystemRepr {
    spines: Vec<Path>,
    links: BTreeMap<String, Vec<Path>>,
    k: usize,
    l: usize,
}

impl Serialize for PathSystem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PathSystemRepr {
            spines: self.spines.clone(),
            links: self
                .links
                .iter()
                .map(|(&(i, j), f)| (format!("{i},{j}"), f.clone()))
                .collect(),
            k: self.k,
            l: self.l,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathSystem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PathSystemRepr::deserialize(d)?;
        let mut links = BTreeMap::new();
        for (key, family) in repr.links {
            let pair = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| serde::de::Error::custom(format!("bad link key `{key}`")))?;
            links.insert(pair, family);
        }
        Ok(PathSystem {
            spines: repr.spines,
            links,
            k: repr.k,
            l: repr.l,
        })
    }
}
