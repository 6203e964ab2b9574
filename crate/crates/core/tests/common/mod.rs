//! Independent reference implementations shared by the integration tests.
#![allow(dead_code)]

use hamforge::plane_graph::{bit, Graph};

/// Hamiltonian cycle count by subset dynamic programming over paths from vertex 0.
pub fn dp_cycle_count(g: &Graph) -> u64 {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    let full = (1usize << n) - 1;
    let mut dp = vec![0u64; (1 << n) * n];
    dp[n] = 1; // mask {0}, at vertex 0
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        for v in 0..n {
            let ways = dp[mask * n + v];
            if ways == 0 {
                continue;
            }
            for w in 0..n {
                if mask & (1 << w) == 0 && g.has_edge(v, w) {
                    dp[(mask | (1 << w)) * n + w] += ways;
                }
            }
        }
    }
    let closed: u64 = (1..n).filter(|&v| g.has_edge(v, 0)).map(|v| dp[full * n + v]).sum();
    closed / 2
}

/// Hamiltonian a-b path count by subset dynamic programming.
pub fn dp_path_count(g: &Graph, a: usize, b: usize) -> u64 {
    let n = g.n();
    let full = (1usize << n) - 1;
    let mut dp = vec![0u64; (1 << n) * n];
    dp[(1 << a) * n + a] = 1;
    for mask in 1..=full {
        for v in 0..n {
            let ways = dp[mask * n + v];
            if ways == 0 || v == b {
                continue;
            }
            for w in 0..n {
                if mask & (1 << w) == 0 && g.has_edge(v, w) {
                    dp[(mask | (1 << w)) * n + w] += ways;
                }
            }
        }
    }
    dp[full * n + b]
}

/// All Hamiltonian cycles as sorted edge lists, by trying every vertex order.
pub fn brute_cycles(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut out = std::collections::BTreeSet::new();
    let mut rest: Vec<usize> = (1..n).collect();
    permute(&mut rest, 0, &mut |p| {
        let mut order = vec![0];
        order.extend_from_slice(p);
        if (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n])) {
            let mut e: Vec<(usize, usize)> =
                (0..n).map(|i| hamforge::plane_graph::edge(order[i], order[(i + 1) % n])).collect();
            e.sort_unstable();
            out.insert(e);
        }
    });
    out.into_iter().collect()
}

pub fn permute(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Connectivity by removing every vertex subset of size below `k`.
pub fn brute_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    let all = g.vertices();
    (0u64..(1 << n)).filter(|s| (s.count_ones() as usize) < k).all(|s| g.is_connected_within(all & !s))
}

pub fn set(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |a, &v| a | bit(v))
}
