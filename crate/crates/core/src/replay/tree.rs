//! The tree of Hamiltonian cycles grown down a nested chain: a node at depth `s` is a
//! cycle of `G` with the interior of `C_{s+1}` contracted, and its children replace
//! the contracted vertex by each path of the next ladder region.

use super::region::{all_paths, close};
use super::{hypothesis, NestedChain, ReplayConfig, ReplayError};
use crate::ham::{count_ham_paths_within, is_ham_path_within, Constraints, HamFamily};
use crate::plane_graph::{bit, edge, set_of, Graph, PlaneGraph, VSet};
use crate::tutte::tutte_path;
use serde::Serialize;
use serde_json::json;

/// Per-level path counts of `G_j - (C_j \ {c, d})` for the six corner pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelProfile {
    pub level: usize,
    pub cycle: [usize; 4],
    pub counts: Vec<(usize, usize, u64)>,
    /// Pairs with exactly one path.
    pub unique: Vec<(usize, usize)>,
}

/// Consecutive levels whose unique paths hand the contracted vertex's two
/// neighbours to a unique pair of the next level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniqueRun {
    /// Level of the first pair: the offset the argument would shift to 1.
    pub start: usize,
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub depth: usize,
    /// The two cycle neighbours of the contracted vertex; the leaf's tree position otherwise.
    pub ends: (usize, usize),
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// The cycle minus the contracted vertex, from `ends.0` to `ends.1`; empty at leaves.
    #[serde(skip)]
    pub outside: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleTree {
    pub nodes: Vec<TreeNode>,
    pub leaves: HamFamily,
    /// The node budget ran out before every node was expanded.
    pub partial: bool,
    pub profile: Vec<LevelProfile>,
    pub unique_run: Option<UniqueRun>,
    /// Node count per depth, root first.
    pub per_depth: Vec<u64>,
}

impl CycleTree {
    pub fn depth(&self) -> usize {
        self.per_depth.len().saturating_sub(1)
    }

    /// Fewest children of any expanded inner node at each depth.
    pub fn min_branching(&self) -> Vec<usize> {
        let mut out = vec![usize::MAX; self.depth()];
        for node in self.nodes.iter().filter(|n| !n.children.is_empty()) {
            out[node.depth] = out[node.depth].min(node.children.len());
        }
        out
    }
}

/// `G_j` on the ids of `G`, with the contracted interior of `C_{j+1}` as vertex `n`.
struct Ladder {
    graph: Graph,
    cycle: [usize; 4],
    /// `V(G_j)`, including the contracted vertex when there is one.
    vertices: VSet,
    z: Option<usize>,
}

impl Ladder {
    fn within(&self, c: usize, d: usize) -> VSet {
        self.vertices & !(set_of(self.cycle) & !bit(c) & !bit(d))
    }
}

fn ladders(g: &Graph, chain: &NestedChain) -> Vec<Ladder> {
    let n = g.n();
    let t = chain.len();
    (0..t)
        .map(|j| {
            let d = &chain.levels[j].diamond;
            let next = chain.levels.get(j + 1).map(|l| &l.diamond);
            let cut = next.map_or(0, |e| e.interior);
            let keep = d.inner_closure() & !cut;
            let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&(a, b)| keep & bit(a) != 0 && keep & bit(b) != 0).collect();
            let z = next.map(|e| {
                edges.extend(e.inner.iter().filter(|&&c| g.adj(c) & e.interior != 0).map(|&c| (c, n)));
                n
            });
            let vertices = keep | z.map_or(0, bit);
            Ladder { graph: Graph::from_edges(n + usize::from(z.is_some()), edges), cycle: d.inner, vertices, z }
        })
        .collect()
}

fn pairs(cycle: [usize; 4]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..4 {
        for k in i + 1..4 {
            out.push((cycle[i], cycle[k]));
        }
    }
    out
}

fn profile(ladders: &[Ladder]) -> Result<Vec<LevelProfile>, ReplayError> {
    let none = Constraints::none();
    ladders
        .iter()
        .enumerate()
        .map(|(level, l)| {
            let mut counts = Vec::new();
            for (c, d) in pairs(l.cycle) {
                counts.push((c, d, count_ham_paths_within(&l.graph, l.within(c, d), c, d, &none)?));
            }
            let unique = counts.iter().filter(|p| p.2 == 1).map(|p| (p.0, p.1)).collect();
            Ok(LevelProfile { level, cycle: l.cycle, counts, unique })
        })
        .collect()
}

/// The neighbours of the contracted vertex on a path.
fn straddle(path: &[usize], z: usize) -> Option<(usize, usize)> {
    let i = path.iter().position(|&y| y == z)?;
    Some((path[i - 1], path[i + 1]))
}

/// The first unique-path run by level order, extended as far as it goes.
fn unique_run(ladders: &[Ladder], profile: &[LevelProfile]) -> Result<Option<UniqueRun>, ReplayError> {
    let Some(start) = profile.iter().position(|p| !p.unique.is_empty()) else { return Ok(None) };
    let mut pairs = vec![profile[start].unique[0]];
    let mut j = start;
    while let Some(z) = ladders[j].z {
        let (c, d) = *pairs.last().expect("nonempty");
        let path = all_paths(&ladders[j].graph, ladders[j].within(c, d), c, d, 1)?.pop().expect("unique path exists");
        let (a, b) = straddle(&path, z).expect("the path covers z");
        let Some(&next) = profile[j + 1].unique.iter().find(|&&p| p == (a, b) || p == (b, a)) else { break };
        pairs.push(next);
        j += 1;
    }
    Ok(Some(UniqueRun { start, pairs }))
}

/// Grows the cycle tree over `chain`, verifying every leaf as a Hamiltonian cycle of
/// `G`; the root's two ends are the first corner pair of `C_1` with two paths.
pub fn theorem2_tree(pg: &PlaneGraph, chain: &NestedChain, cfg: &ReplayConfig) -> Result<CycleTree, ReplayError> {
    let g = pg.graph();
    let n = g.n();
    if n >= VSet::BITS as usize {
        return Err(hypothesis("the contracted vertex needs a free id below 64"));
    }
    if chain.is_empty() {
        return Err(hypothesis("empty chain"));
    }
    let ladders = ladders(g, chain);
    let profile = profile(&ladders)?;
    let unique_run = unique_run(&ladders, &profile)?;
    let t = ladders.len();
    let broken = |level: usize, instance: serde_json::Value| ReplayError::ChainBroken { level, instance: instance.to_string() };

    let first = &chain.levels[0].diamond;
    let (c, d) = profile[0].counts.iter().find(|p| p.2 >= 2).map(|p| (p.0, p.1)).ok_or_else(|| broken(0, json!({"profile": profile[0]})))?;
    let cyc = first.inner;
    let at = cyc.iter().position(|&y| y == d).expect("corner");
    let far = [cyc[(at + 1) % 4], cyc[(at + 3) % 4]].into_iter().find(|&y| y != c).expect("two cycle neighbours");
    let outer = g.restricted(g.vertices() & !first.interior);
    let q = tutte_path(&outer, &cyc, c, d, edge(d, far))?;
    if !q.is_hamiltonian_in(&outer) {
        return Err(super::failed("root_path_hamiltonian", json!({"edges": outer.edges(), "path": q.path})));
    }

    let mut nodes = vec![TreeNode { depth: 0, ends: (c, d), parent: None, children: vec![], outside: q.path }];
    let mut leaves = HamFamily::new("theorem2_tree");
    let mut partial = false;
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        let (depth, (c, d)) = (nodes[id].depth, nodes[id].ends);
        let l = &ladders[depth];
        let room = cfg.max_tree_nodes.saturating_sub(nodes.len());
        if room == 0 {
            partial = true;
            break;
        }
        let paths = all_paths(&l.graph, l.within(c, d), c, d, room)?;
        if paths.is_empty() {
            return Err(broken(depth, json!({"ends": [c, d], "outside": nodes[id].outside, "cycle": l.cycle})));
        }
        let expected = profile[depth].counts.iter().find(|p| (p.0, p.1) == (c, d) || (p.1, p.0) == (c, d)).map_or(0, |p| p.2);
        if paths.len() < room && paths.len() as u64 != expected {
            return Err(super::failed("continuations_match_profile", json!({"level": depth, "ends": [c, d], "got": paths.len(), "expected": expected})));
        }
        partial |= paths.len() == room;
        let outside = std::mem::take(&mut nodes[id].outside);
        for p in paths {
            let child = nodes.len();
            if depth + 1 == t {
                let cycle = close(&outside, &p);
                if !cycle.is_hamiltonian_in(g) {
                    return Err(super::failed("leaf_hamiltonian", json!({"cycle": cycle})));
                }
                if !leaves.insert(cycle, format!("node {child}")) {
                    return Err(super::failed("leaves_distinct", json!({"path": p})));
                }
                nodes.push(TreeNode { depth: t, ends: (c, d), parent: Some(id), children: vec![], outside: vec![] });
            } else {
                let z = l.z.expect("inner levels contract the next interior");
                let iz = p.iter().position(|&y| y == z).expect("the path covers z");
                let mut next: Vec<usize> = p[..iz].iter().rev().copied().collect();
                next.extend_from_slice(&outside[1..]);
                next.extend(p[iz + 1..p.len() - 1].iter().rev());
                let ends = (p[iz - 1], p[iz + 1]);
                let shrunk = g.vertices() & !chain.levels[depth + 1].diamond.interior;
                if !is_ham_path_within(g, shrunk, &next) || (next[0], *next.last().expect("nonempty")) != ends {
                    return Err(super::failed("child_path_hamiltonian", json!({"path": next, "ends": ends})));
                }
                nodes.push(TreeNode { depth: depth + 1, ends, parent: Some(id), children: vec![], outside: next });
                stack.push(child);
            }
            nodes[id].children.push(child);
        }
    }
    let mut per_depth = vec![0u64; t + 1];
    for node in &nodes {
        per_depth[node.depth] += 1;
    }
    for node in nodes.iter_mut() {
        node.outside.clear();
    }
    Ok(CycleTree { nodes, leaves, partial, profile, unique_run, per_depth })
}
