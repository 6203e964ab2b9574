//! Backtracking search for Hamiltonian cycles and paths.
//!
//! The path grows from a fixed start. A branch is cut when some unvisited vertex
//! has fewer than two usable neighbours left, when the unvisited vertices can no
//! longer be reached from the path end, or when a required edge at a vertex being
//! left is not the one taken. Cycles are rooted at the least vertex and counted in
//! one direction only (second vertex below the last).

use super::cycle::{HamCycle, HamFamily};
use crate::plane_graph::{bit, edge, full_set, members, Edge, Graph, VSet};
use std::ops::ControlFlow;
use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
pub const BUDGET_ENV: &str = "HAMFORGE_BUDGET";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HamError {
    #[error("search budget of {0} nodes exhausted")]
    Timeout(u64),
    #[error("edge ({0},{1}) is both required and forbidden")]
    ConflictingConstraints(usize, usize),
    #[error("required edge ({0},{1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("path endpoints must be distinct vertices of the subgraph")]
    BadEndpoints,
    #[error("cap must be at least 1")]
    ZeroCap,
}

/// Node budget from `HAMFORGE_BUDGET`, else [`DEFAULT_BUDGET`].
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub required: Vec<Edge>,
    pub forbidden: Vec<Edge>,
    /// Search nodes allowed; `None` means [`default_budget`].
    pub budget: Option<u64>,
}

impl Constraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn requiring(edges: &[Edge]) -> Self {
        Constraints { required: edges.to_vec(), ..Self::default() }
    }

    pub fn forbidding(edges: &[Edge]) -> Self {
        Constraints { forbidden: edges.to_vec(), ..Self::default() }
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }
}

struct Engine {
    adj: Vec<VSet>,
    req: Vec<VSet>,
    within: VSet,
    start: usize,
    /// `Some(b)` for paths ending at `b`, `None` for cycles.
    end: Option<usize>,
    nodes: u64,
    budget: u64,
    path: Vec<usize>,
}

/// Outcome of [`Engine::prepare`]: either a ready engine or a trivially empty answer.
enum Prepared {
    Run(Engine),
    Empty,
}

impl Engine {
    fn prepare(
        g: &Graph,
        within: VSet,
        start: usize,
        end: Option<usize>,
        c: &Constraints,
    ) -> Result<Prepared, HamError> {
        for &(a, b) in &c.required {
            if c.forbidden.iter().any(|&f| edge(f.0, f.1) == edge(a, b)) {
                return Err(HamError::ConflictingConstraints(a, b));
            }
            if a >= g.n() || b >= g.n() || !g.has_edge(a, b) {
                return Err(HamError::MissingEdge(a, b));
            }
        }
        let mut adj: Vec<VSet> = (0..g.n()).map(|v| g.adj(v) & within).collect();
        for &(a, b) in &c.forbidden {
            if a < g.n() && b < g.n() {
                adj[a] &= !bit(b);
                adj[b] &= !bit(a);
            }
        }
        let mut req = vec![0; g.n()];
        for &(a, b) in &c.required {
            if within & bit(a) == 0 || within & bit(b) == 0 {
                return Ok(Prepared::Empty);
            }
            req[a] |= bit(b);
            req[b] |= bit(a);
        }
        if req.iter().any(|r| r.count_ones() > 2) {
            return Ok(Prepared::Empty);
        }
        if let Some(b) = end {
            // path ends carry one path edge each
            if req[start].count_ones() > 1 || req[b].count_ones() > 1 || (req[start] & bit(b) != 0 && within.count_ones() > 2) {
                return Ok(Prepared::Empty);
            }
        }
        Ok(Prepared::Run(Engine {
            adj,
            req,
            within,
            start,
            end,
            nodes: 0,
            budget: c.budget.unwrap_or_else(default_budget),
            path: vec![start],
        }))
    }

    fn feasible(&self, cur: usize, visited: VSet) -> bool {
        let unvisited = self.within & !visited;
        if unvisited == 0 {
            return true;
        }
        let mut anchors = bit(cur);
        if self.end.is_none() {
            anchors |= bit(self.start);
        }
        let usable = unvisited | anchors;
        for w in members(unvisited) {
            let need = if Some(w) == self.end { 1 } else { 2 };
            if ((self.adj[w] & usable).count_ones() as usize) < need {
                return false;
            }
        }
        let region = unvisited | bit(cur);
        if self.reach(cur, region) != region {
            return false;
        }
        if self.end.is_none() && self.path.len() >= 2 {
            // some unvisited neighbour of the start must be able to close the cycle
            let closers = self.adj[self.start] & unvisited & !full_set(self.path[1] + 1);
            if closers == 0 {
                return false;
            }
        }
        true
    }

    fn reach(&self, from: usize, within: VSet) -> VSet {
        let mut seen = bit(from);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    fn run<F: FnMut(&[usize]) -> ControlFlow<()>>(&mut self, visit: &mut F) -> Result<ControlFlow<()>, HamError> {
        let start = self.start;
        if !self.feasible(start, bit(start)) {
            return Ok(ControlFlow::Continue(()));
        }
        self.step(start, usize::MAX, bit(start), visit)
    }

    fn step<F: FnMut(&[usize]) -> ControlFlow<()>>(
        &mut self,
        cur: usize,
        prev: usize,
        visited: VSet,
        visit: &mut F,
    ) -> Result<ControlFlow<()>, HamError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(HamError::Timeout(self.budget));
        }
        let prev_bit = if prev == usize::MAX { 0 } else { bit(prev) };
        if visited == self.within {
            let done = match self.end {
                Some(b) => cur == b && self.req[cur] & !prev_bit == 0,
                None => {
                    let s = self.start;
                    let k = self.path.len();
                    k >= 3
                        && self.adj[cur] & bit(s) != 0
                        && self.path[1] < cur
                        && self.req[cur] & !(prev_bit | bit(s)) == 0
                        && self.req[s] & !(bit(self.path[1]) | bit(cur)) == 0
                }
            };
            if done {
                return Ok(visit(&self.path));
            }
            return Ok(ControlFlow::Continue(()));
        }
        if Some(cur) == self.end {
            return Ok(ControlFlow::Continue(()));
        }
        let pending = self.req[cur] & !prev_bit;
        let mut cand = self.adj[cur] & !visited;
        if cur == self.start && self.end.is_none() {
            // one required edge at the cycle root may be the closing edge instead
            if pending.count_ones() == 2 {
                cand &= pending;
            }
        } else if pending != 0 {
            if pending.count_ones() > 1 {
                return Ok(ControlFlow::Continue(()));
            }
            cand &= pending;
        }
        if let Some(b) = self.end {
            // enter the end only as the last vertex
            if (self.within & !visited) != bit(b) {
                cand &= !bit(b);
            }
        }
        for w in members(cand) {
            // w must not owe a required edge to an interior path vertex
            let owed = self.req[w] & visited & !bit(cur);
            let closing_ok = self.end.is_none() && owed == bit(self.start);
            if owed != 0 && !closing_ok {
                continue;
            }
            let nv = visited | bit(w);
            self.path.push(w);
            if self.feasible(w, nv) {
                if let ControlFlow::Break(()) = self.step(w, cur, nv, visit)? {
                    self.path.pop();
                    return Ok(ControlFlow::Break(()));
                }
            }
            self.path.pop();
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn cycle_engine(g: &Graph, within: VSet, c: &Constraints) -> Result<Option<Engine>, HamError> {
    if within.count_ones() < 3 {
        return Ok(None);
    }
    let start = within.trailing_zeros() as usize;
    match Engine::prepare(g, within, start, None, c)? {
        Prepared::Run(e) => Ok(Some(e)),
        Prepared::Empty => Ok(None),
    }
}

/// Calls `visit` on every Hamiltonian cycle of `g[within]` meeting the constraints,
/// in lexicographic order of the rooted vertex sequence.
pub fn for_each_ham_cycle_within<F: FnMut(&[usize]) -> ControlFlow<()>>(
    g: &Graph,
    within: VSet,
    c: &Constraints,
    mut visit: F,
) -> Result<(), HamError> {
    if let Some(mut e) = cycle_engine(g, within, c)? {
        let _ = e.run(&mut visit)?;
    }
    Ok(())
}

pub fn count_ham_cycles_within(g: &Graph, within: VSet, c: &Constraints) -> Result<u64, HamError> {
    let mut count = 0;
    for_each_ham_cycle_within(g, within, c, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Exact number of Hamiltonian cycles (as edge sets) meeting the constraints.
pub fn count_ham_cycles(g: &Graph, c: &Constraints) -> Result<u64, HamError> {
    count_ham_cycles_within(g, g.vertices(), c)
}

pub fn find_ham_cycle_within(g: &Graph, within: VSet, c: &Constraints) -> Result<Option<HamCycle>, HamError> {
    let mut found = None;
    for_each_ham_cycle_within(g, within, c, |p| {
        found = Some(HamCycle::new(p));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

pub fn find_ham_cycle(g: &Graph, c: &Constraints) -> Result<Option<HamCycle>, HamError> {
    find_ham_cycle_within(g, g.vertices(), c)
}

/// The first `cap` Hamiltonian cycles in search order.
pub fn enumerate_ham_cycles(g: &Graph, cap: usize, c: &Constraints) -> Result<HamFamily, HamError> {
    if cap == 0 {
        return Err(HamError::ZeroCap);
    }
    let mut fam = HamFamily::new("enumerate");
    for_each_ham_cycle_within(g, g.vertices(), c, |p| {
        fam.insert(HamCycle::new(p), "enumerate");
        if fam.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(fam)
}

/// Calls `visit` on every Hamiltonian `a`-`b` path of `g[within]`.
pub fn for_each_ham_path_within<F: FnMut(&[usize]) -> ControlFlow<()>>(
    g: &Graph,
    within: VSet,
    a: usize,
    b: usize,
    c: &Constraints,
    mut visit: F,
) -> Result<(), HamError> {
    if a == b || a >= g.n() || b >= g.n() || within & bit(a) == 0 || within & bit(b) == 0 {
        return Err(HamError::BadEndpoints);
    }
    if let Prepared::Run(mut e) = Engine::prepare(g, within, a, Some(b), c)? {
        let _ = e.run(&mut visit)?;
    }
    Ok(())
}

pub fn count_ham_paths_within(g: &Graph, within: VSet, a: usize, b: usize, c: &Constraints) -> Result<u64, HamError> {
    let mut count = 0;
    for_each_ham_path_within(g, within, a, b, c, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Exact number of Hamiltonian `a`-`b` paths of `g`.
pub fn count_ham_paths(g: &Graph, a: usize, b: usize) -> Result<u64, HamError> {
    count_ham_paths_within(g, g.vertices(), a, b, &Constraints::none())
}

/// Up to `cap` Hamiltonian `a`-`b` paths of `g[within]`, in search order.
pub fn ham_paths_within(
    g: &Graph,
    within: VSet,
    a: usize,
    b: usize,
    c: &Constraints,
    cap: usize,
) -> Result<Vec<Vec<usize>>, HamError> {
    if cap == 0 {
        return Err(HamError::ZeroCap);
    }
    let mut out = Vec::new();
    for_each_ham_path_within(g, within, a, b, c, |p| {
        out.push(p.to_vec());
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{double_wheel, icosahedron, k4, octahedron};

    #[test]
    fn small_counts() {
        let none = Constraints::none();
        assert_eq!(count_ham_cycles(k4().graph(), &none), Ok(3));
        assert_eq!(count_ham_cycles(octahedron().graph(), &none), Ok(16));
        assert_eq!(count_ham_cycles(double_wheel(8).unwrap().graph(), &none), Ok(48));
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(count_ham_paths(&c4, 0, 1), Ok(1));
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(count_ham_paths(&p3, 0, 2), Ok(1));
        assert_eq!(count_ham_paths(&p3, 0, 0), Err(HamError::BadEndpoints));
    }

    #[test]
    fn constraints() {
        let g = k4();
        let g = g.graph();
        assert_eq!(count_ham_cycles(g, &Constraints::requiring(&[(0, 1)])), Ok(2));
        assert_eq!(count_ham_cycles(g, &Constraints::requiring(&[(0, 1), (2, 3)])), Ok(2));
        assert_eq!(count_ham_cycles(g, &Constraints::requiring(&[(0, 1), (0, 2), (0, 3)])), Ok(0));
        assert_eq!(count_ham_cycles(g, &Constraints::forbidding(&[(0, 1)])), Ok(1));
        let both = Constraints { required: vec![(0, 1)], forbidden: vec![(1, 0)], budget: None };
        assert_eq!(count_ham_cycles(g, &both), Err(HamError::ConflictingConstraints(0, 1)));
    }

    #[test]
    fn budget_and_cap() {
        let g = icosahedron();
        let tiny = Constraints::none().with_budget(10);
        assert_eq!(count_ham_cycles(g.graph(), &tiny), Err(HamError::Timeout(10)));
        assert_eq!(enumerate_ham_cycles(k4().graph(), 0, &Constraints::none()), Err(HamError::ZeroCap));
        assert_eq!(enumerate_ham_cycles(k4().graph(), 10, &Constraints::none()).unwrap().len(), 3);
        let five = enumerate_ham_cycles(octahedron().graph(), 5, &Constraints::none()).unwrap();
        assert_eq!(five.len(), 5);
        assert!(five.all_hamiltonian_in(octahedron().graph()));
    }
}
