//! Graphviz output.

use std::fmt::Write;

use crate::graph::minor::MinorModel;
use crate::gridlike::GridLikeMinor;

const PALETTE: [&str; 10] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
    "#1b9e77", "#d95f02",
];

/// Host edges in grey, each path as a chain in its own colour; side-B chains dashed.
pub fn glm_to_dot(glm: &GridLikeMinor) -> String {
    let g = &glm.graph;
    let mut out = String::from("graph glm {\n  node [shape=circle];\n");
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v} [color=\"#cccccc\"];").unwrap();
    }
    let in_b: Vec<bool> = (0..glm.paths.len()).map(|p| glm.side_b.contains(&p)).collect();
    for (i, p) in glm.paths.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let style = if in_b[i] { "dashed" } else { "solid" };
        let chain: Vec<String> = p.0.iter().map(|v| v.to_string()).collect();
        if chain.len() == 1 {
            writeln!(out, "  {} [color=\"{colour}\", penwidth=3];", chain[0]).unwrap();
        } else {
            writeln!(
                out,
                "  {} [color=\"{colour}\", penwidth=3, style={style}, label=\"P{i}\"];",
                chain.join(" -- ")
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Host graph with branch-set vertices filled by colour.
pub fn model_to_dot(m: &MinorModel) -> String {
    let owners = m.owners();
    let mut out = String::from("graph model {\n  node [shape=circle, style=filled];\n");
    for (v, owner) in owners.iter().enumerate() {
        match owner {
            Some(b) => writeln!(
                out,
                "  {v} [fillcolor=\"{}\", xlabel=\"B{b}\"];",
                PALETTE[b % PALETTE.len()]
            )
            .unwrap(),
            None => writeln!(out, "  {v} [fillcolor=white];").unwrap(),
        }
    }
    for &(u, v) in m.host.edges() {
        let inside = owners[u].is_some() && owners[u] == owners[v];
        let attr = if inside { " [penwidth=3]" } else { "" };
        writeln!(out, "  {u} -- {v}{attr};").unwrap();
    }
    out.push_str("}\n");
    out
}
