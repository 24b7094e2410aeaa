use serde::{Deserialize, Serialize};

use super::{intersection_graph, verify_glm, GlmError, GlmModel, GridLikeMinor};
use crate::bramble::{bramble_order, Bramble, DEFAULT_EXACT_LIMIT};
use crate::extraction::{many_paths, Path, PathSystem};
use crate::graph::minor::{find_minor_dense_with_budget, DEFAULT_BUDGET};
use crate::graph::{degeneracy, DegeneracyBound, Graph};
use crate::transversal::{
    default_max_rounds, lll_threshold, resample, search_transversal, transversal_lll,
    ColouredGraph, TransversalError,
};

/// Partial transversal choices explored before giving up on proving absence.
const SEARCH_LIMIT: u64 = 1_000_000;

/// `ceil(2e(2 C(l, 2) - 3) d(l))`, the family size that makes a transversal of
/// link families certain. Rejects `l < 3`, where the factor is negative.
pub fn k_threshold(l: usize, bound: DegeneracyBound) -> Result<usize, GlmError> {
    if l < 3 {
        return Err(GlmError::InvalidParameter(format!(
            "k threshold needs l >= 3, got {l}"
        )));
    }
    Ok(lll_threshold(l * (l - 1) / 2, bound.d(l) as usize)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlmParams {
    /// Family size; the threshold when unset.
    pub k_override: Option<usize>,
    pub seed: u64,
    pub exact_limit: usize,
    /// Resampling cap; ten rounds per conflict edge when unset.
    pub max_rounds: Option<u64>,
    pub minor_budget: u64,
}

impl Default for GlmParams {
    fn default() -> Self {
        GlmParams {
            k_override: None,
            seed: 0,
            exact_limit: DEFAULT_EXACT_LIMIT,
            max_rounds: None,
            minor_budget: DEFAULT_BUDGET,
        }
    }
}

/// How the grid-like-minor was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum GlmBranch {
    /// Two link families whose intersection graph has degeneracy above `d(l)`.
    Dense {
        first: (usize, usize),
        second: (usize, usize),
        degeneracy: usize,
    },
    /// Spines plus one link per family.
    Transversal {
        rounds: u64,
        /// Family size met the threshold, so a transversal was certain.
        guaranteed: bool,
        /// The intersection graph is exactly the 1-subdivision of `K_l`.
        subdivision: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlmRun {
    pub glm: GridLikeMinor,
    pub k: usize,
    pub branch: GlmBranch,
    pub system: PathSystem,
}

pub fn find_glm(
    b: &Bramble,
    l: usize,
    bound: DegeneracyBound,
    k_override: Option<usize>,
    seed: u64,
) -> Result<GlmRun, GlmError> {
    let params = GlmParams {
        k_override,
        seed,
        ..GlmParams::default()
    };
    find_glm_with(b, l, bound, &params)
}

/// The full pipeline: a path system from the bramble, then either a dense pair
/// of link families or a transversal of all families.
pub fn find_glm_with(
    b: &Bramble,
    l: usize,
    bound: DegeneracyBound,
    params: &GlmParams,
) -> Result<GlmRun, GlmError> {
    if l == 0 {
        return Err(GlmError::InvalidParameter("l must be positive".into()));
    }
    let k = match params.k_override {
        Some(0) => return Err(GlmError::InvalidParameter("k must be positive".into())),
        Some(k) => k,
        None => k_threshold(l, bound)?,
    };
    let needed = k * l;
    let cert = bramble_order(b, params.exact_limit);
    if cert.order < needed {
        return Err(GlmError::InsufficientOrder {
            order: cert.order,
            needed,
        });
    }
    let system = many_paths(b, k, l, params.exact_limit)?;
    let (glm, branch) = glm_from_system(b.graph(), &system, bound, params)?;
    Ok(GlmRun {
        glm,
        k,
        branch,
        system,
    })
}

/// Steps after path extraction, on any valid path system.
pub fn glm_from_system(
    g: &Graph,
    system: &PathSystem,
    bound: DegeneracyBound,
    params: &GlmParams,
) -> Result<(GridLikeMinor, GlmBranch), GlmError> {
    system.validate(g).map_err(crate::extraction::ExtractionError::from)?;
    let l = system.l;
    let d = bound.d(l) as usize;
    let keys: Vec<(usize, usize)> = system.links.keys().copied().collect();
    let mut links: Vec<Path> = Vec::new();
    let mut classes = Vec::new();
    for fam in system.links.values() {
        classes.push((links.len()..links.len() + fam.len()).collect::<Vec<_>>());
        links.extend(fam.iter().cloned());
    }
    let conflicts = intersection_graph(g, &links)?;
    let cg = ColouredGraph::new(conflicts, classes.clone())
        .expect("links within a family are disjoint");

    for p in 0..keys.len() {
        for q in p + 1..keys.len() {
            let mut keep = classes[p].clone();
            keep.extend_from_slice(&classes[q]);
            let (h, labels) = cg.graph().induced_subgraph(&keep);
            let deg = degeneracy(&h).value;
            if deg <= d {
                continue;
            }
            let model = find_minor_dense_with_budget(&h, l, bound, params.minor_budget)?;
            let glm = GridLikeMinor {
                graph: g.clone(),
                paths: labels.iter().map(|&i| links[i].clone()).collect(),
                side_a: (0..classes[p].len()).collect(),
                side_b: (classes[p].len()..labels.len()).collect(),
                model: GlmModel {
                    pattern_l: l,
                    branch_sets: model.branch_sets,
                },
            };
            verify_glm(&glm)?;
            let branch = GlmBranch::Dense {
                first: keys[p],
                second: keys[q],
                degeneracy: deg,
            };
            return Ok((glm, branch));
        }
    }

    let max_rounds = params.max_rounds.unwrap_or_else(|| default_max_rounds(&cg));
    let k_min = classes.iter().map(Vec::len).min().unwrap_or(0);
    let guaranteed = keys.len() >= 2 && k_min >= lll_threshold(keys.len(), d)?;
    let (chosen, rounds) = if guaranteed {
        let run = transversal_lll(&cg, d, params.seed, max_rounds)?;
        (run.transversal, run.rounds)
    } else {
        match resample(&cg, params.seed, max_rounds) {
            Some(found) => found,
            None => {
                return Err(match search_transversal(&cg, SEARCH_LIMIT) {
                    Ok(None) => GlmError::NoTransversal,
                    _ => TransversalError::RoundsExhausted { rounds: max_rounds }.into(),
                })
            }
        }
    };

    let mut paths = system.spines.clone();
    paths.extend(chosen.vertices.iter().map(|&i| links[i].clone()));
    let mut branch_sets: Vec<Vec<usize>> = (0..l).map(|i| vec![i]).collect();
    for (idx, &(i, _)) in keys.iter().enumerate() {
        branch_sets[i].push(l + idx);
    }
    let glm = GridLikeMinor {
        graph: g.clone(),
        side_a: (0..l).collect(),
        side_b: (l..paths.len()).collect(),
        paths,
        model: GlmModel {
            pattern_l: l,
            branch_sets,
        },
    };
    verify_glm(&glm)?;
    // Each link meets its own two spines; any further edge is a foreign contact.
    let subdivision = intersection_graph(g, &glm.paths)?.m() == 2 * keys.len();
    Ok((
        glm,
        GlmBranch::Transversal {
            rounds,
            guaranteed,
            subdivision,
        },
    ))
}
