//! Vertex connectivity, blocks and block chains.

use super::graph::{bit, members, Graph, VSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
///
/// Unit-capacity max flow on the vertex-split digraph: vertex `v` becomes
/// `v_in = 2v` and `v_out = 2v + 1`.
fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let m = 2 * n;
    // cap[a][b] as a flat matrix; only arcs that exist in the split graph get capacity.
    let mut cap = vec![0u8; m * m];
    for v in 0..n {
        let (vin, vout) = (2 * v, 2 * v + 1);
        cap[vin * m + vout] = if v == s || v == t { limit as u8 + 1 } else { 1 };
        for w in g.neighbors(v) {
            cap[vout * m + 2 * w] = limit as u8 + 1;
        }
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; m];
    let mut queue = Vec::with_capacity(m);
    while flow < limit {
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        parent[source] = source;
        queue.clear();
        queue.push(source);
        let mut head = 0;
        while head < queue.len() && parent[sink] == usize::MAX {
            let a = queue[head];
            head += 1;
            for b in 0..m {
                if parent[b] == usize::MAX && cap[a * m + b] > 0 {
                    parent[b] = a;
                    queue.push(b);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            cap[a * m + b] -= 1;
            cap[b * m + a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// True iff `g` has more than `k` vertices and no vertex cut of size less than `k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    if n <= k {
        return false;
    }
    if !g.is_connected() {
        return false;
    }
    if g.min_degree() < k {
        return false;
    }
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) && local_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Vertex connectivity (n - 1 for complete graphs).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in (s + 1)..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// Blocks (maximal 2-connected subgraphs or bridge edges) of the subgraph induced
/// by `within`, as vertex sets, plus the cut vertices. Isolated vertices form no block.
pub fn blocks(g: &Graph, within: VSet) -> (Vec<VSet>, VSet) {
    struct State<'a> {
        g: &'a Graph,
        within: VSet,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VSet>,
        cuts: VSet,
    }
    fn dfs(st: &mut State, v: usize, parent: usize) {
        st.time += 1;
        st.disc[v] = st.time;
        st.low[v] = st.time;
        let mut children = 0;
        for w in members(st.g.adj(v) & st.within) {
            if st.disc[w] == 0 {
                children += 1;
                st.stack.push((v, w));
                dfs(st, w, v);
                st.low[v] = st.low[v].min(st.low[w]);
                if st.low[w] >= st.disc[v] {
                    if parent != usize::MAX || children > 1 {
                        st.cuts |= bit(v);
                    }
                    let mut block = 0;
                    while let Some((a, b)) = st.stack.pop() {
                        block |= bit(a) | bit(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    st.blocks.push(block);
                }
            } else if w != parent && st.disc[w] < st.disc[v] {
                st.stack.push((v, w));
                st.low[v] = st.low[v].min(st.disc[w]);
            }
        }
    }
    let mut st = State {
        g,
        within,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for v in members(within) {
        if st.disc[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    let (mut blocks, cuts) = (st.blocks, st.cuts);
    blocks.sort_unstable();
    (blocks, cuts)
}

/// Blocks `B_1..B_t` strung between `b_0 = a` and `b_t = b` with consecutive blocks
/// meeting in exactly one cut vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockChain {
    pub blocks: Vec<VSet>,
    /// `b_0, b_1, ..., b_t`; interior entries are the cut vertices.
    pub joints: Vec<usize>,
}

impl BlockChain {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_size(&self, i: usize) -> usize {
        self.blocks[i].count_ones() as usize
    }

    /// Indices of blocks with at least three vertices.
    pub fn big_blocks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.block_size(i) >= 3).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("endpoints must be distinct vertices of the subgraph")]
    BadEndpoints,
    #[error("subgraph is not connected")]
    Disconnected,
    #[error("block structure is not a chain between the endpoints")]
    NotAChain,
}

/// Orders the blocks of `g[within]` along every `a`-`b` path.
pub fn block_chain(g: &Graph, within: VSet, a: usize, b: usize) -> Result<BlockChain, ChainError> {
    if a == b || within & bit(a) == 0 || within & bit(b) == 0 {
        return Err(ChainError::BadEndpoints);
    }
    if !g.is_connected_within(within) {
        return Err(ChainError::Disconnected);
    }
    let (blocks, cuts) = blocks(g, within);
    let mut remaining: Vec<VSet> = blocks;
    let mut chain = Vec::new();
    let mut joints = vec![a];
    let mut current = a;
    while current != b {
        let mut found = remaining
            .iter()
            .enumerate()
            .filter(|(_, blk)| *blk & bit(current) != 0);
        let (idx, blk) = match (found.next(), found.next()) {
            (Some((i, &blk)), None) => (i, blk),
            _ => return Err(ChainError::NotAChain),
        };
        remaining.swap_remove(idx);
        let next = if blk & bit(b) != 0 {
            b
        } else {
            let exits = blk & cuts & !bit(current);
            if exits.count_ones() != 1 {
                return Err(ChainError::NotAChain);
            }
            exits.trailing_zeros() as usize
        };
        // the block must not carry any other cut vertex (that would hang a pendant block)
        if blk & cuts & !bit(current) & !bit(next) != 0 {
            return Err(ChainError::NotAChain);
        }
        chain.push(blk);
        joints.push(next);
        current = next;
    }
    if !remaining.is_empty() {
        return Err(ChainError::NotAChain);
    }
    Ok(BlockChain { blocks: chain, joints })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_graph_chain() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let chain = block_chain(&g, 0b111, 0, 2).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.joints, vec![0, 1, 2]);
    }

    #[test]
    fn pendant_block_is_not_a_chain() {
        // square 0-1-2-3 with a pendant edge 3-4; a=0, b=2 share the block
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]);
        assert_eq!(block_chain(&g, 0b11111, 0, 2), Err(ChainError::NotAChain));
    }

    #[test]
    fn connectivity_of_small_graphs() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(is_k_connected(&k4, 3));
        assert!(!is_k_connected(&k4, 4));
        assert_eq!(vertex_connectivity(&k4), 3);
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(vertex_connectivity(&c5), 2);
    }
}
