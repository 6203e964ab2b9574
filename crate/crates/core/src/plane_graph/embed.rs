//! Rotation-system embeddings.
//!
//! `rotation[v]` lists the neighbours of `v` in clockwise order. Faces are traced
//! with the rule "after the dart `u -> v` comes `v -> w`, where `w` follows `u` in
//! the rotation of `v`". Under this rule every bounded face lies to the left of its
//! darts, so a cycle listed clockwise has its interior on the right.

use super::graph::{bit, edge, members, Edge, Graph, VSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("a plane graph needs between 2 and {MAX_VERTICES} vertices, got {0}")]
    BadSize(usize),
    #[error("vertex {0} lists invalid neighbour {1}")]
    BadNeighbor(usize, usize),
    #[error("edge ({0},{1}) is listed more than once")]
    MultiEdge(usize, usize),
    #[error("edge ({0},{1}) appears in the rotation of {0} but not of {1}")]
    InconsistentRotation(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("face census violates Euler: V={v} E={e} F={f}")]
    NonPlanarTrace { v: usize, e: usize, f: usize },
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("cycle has an empty interior")]
    EmptyInterior,
    #[error("cycle interior is disconnected")]
    DisconnectedInterior,
    #[error("no face with index {0}")]
    NoSuchFace(usize),
    #[error("designated outer cycle is not a face")]
    OuterNotAFace,
    #[error("inner face {0:?} is not a triangle")]
    InnerFaceNotTriangle(Vec<usize>),
    #[error("edge ({0},{1}) is not in the graph")]
    NoSuchEdge(usize, usize),
    #[error("flip of edge ({0},{1}) is not allowed")]
    FlipRejected(usize, usize),
}

/// Traces the faces of a rotation system. Works for disconnected systems too.
/// Returns the faces (as vertex sequences) and, for every dart `v -> rot[v][i]`,
/// the index of the face containing it.
pub fn trace_faces(rot: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = rot.len();
    let mut pos = vec![[u8::MAX; MAX_VERTICES]; n];
    for (v, list) in rot.iter().enumerate() {
        for (i, &w) in list.iter().enumerate() {
            pos[v][w] = i as u8;
        }
    }
    let mut dart_face: Vec<Vec<usize>> = rot.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..n {
        for i in 0..rot[v].len() {
            if dart_face[v][i] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let (mut a, mut j) = (v, i);
            while dart_face[a][j] == usize::MAX {
                dart_face[a][j] = id;
                face.push(a);
                let b = rot[a][j];
                let p = pos[b][a] as usize;
                let deg = rot[b].len();
                j = (p + 1) % deg;
                a = b;
            }
            faces.push(face);
        }
    }
    (faces, dart_face)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PlaneRecord", into = "PlaneRecord")]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    dart_face: Vec<Vec<usize>>,
    outer_face: Option<usize>,
}

/// Serialized form of a [`PlaneGraph`]: the rotation table and the outer face.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlaneRecord {
    pub rotation: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_face: Option<Vec<usize>>,
}

impl From<PlaneGraph> for PlaneRecord {
    fn from(g: PlaneGraph) -> Self {
        let outer_face = g.outer_face.map(|f| g.faces[f].clone());
        PlaneRecord { rotation: g.rotation, outer_face }
    }
}

impl TryFrom<PlaneRecord> for PlaneGraph {
    type Error = EmbeddingError;

    fn try_from(r: PlaneRecord) -> Result<Self, Self::Error> {
        let mut g = PlaneGraph::from_rotation(r.rotation)?;
        if let Some(seq) = r.outer_face {
            g.outer_face = Some(g.find_face(&seq).ok_or(EmbeddingError::OuterNotAFace)?);
        }
        Ok(g)
    }
}

/// Result of contracting a connected vertex set to a single vertex.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: PlaneGraph,
    pub new_vertex: usize,
    /// Old id -> new id. Contracted vertices map to `new_vertex`.
    pub map: Vec<usize>,
    /// New id -> old id, `None` for the new vertex when it merges several old ones.
    pub origin: Vec<Option<usize>>,
}

/// One side of a cycle.
#[derive(Clone, Debug)]
pub struct Side {
    /// The cycle, oriented so that this side lies on its right.
    pub cycle: Vec<usize>,
    pub faces: Vec<bool>,
    /// Vertices strictly inside.
    pub inner: VSet,
}

impl PlaneGraph {
    /// Validates a rotation table and traces its faces.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        let n = rotation.len();
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(EmbeddingError::BadSize(n));
        }
        let mut graph = Graph::empty(n);
        for (v, list) in rotation.iter().enumerate() {
            let mut seen: VSet = 0;
            for &w in list {
                if w >= n || w == v {
                    return Err(EmbeddingError::BadNeighbor(v, w));
                }
                if seen & bit(w) != 0 {
                    return Err(EmbeddingError::MultiEdge(v, w));
                }
                seen |= bit(w);
            }
        }
        for (v, list) in rotation.iter().enumerate() {
            for &w in list {
                if !rotation[w].contains(&v) {
                    return Err(EmbeddingError::InconsistentRotation(v, w));
                }
                graph.add_edge(v, w);
            }
        }
        if !graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let (faces, dart_face) = trace_faces(&rotation);
        let (v, e, f) = (n, graph.edge_count(), faces.len());
        if v + f != e + 2 {
            return Err(EmbeddingError::NonPlanarTrace { v, e, f });
        }
        Ok(PlaneGraph { graph, rotation, faces, dart_face, outer_face: None })
    }

    /// Builds the embedding whose faces are the given vertex cycles. Each face
    /// `f` contributes the rotation step "after `f[i]` comes `f[i+2]` around `f[i+1]`".
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self, EmbeddingError> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(EmbeddingError::BadSize(n));
        }
        let mut succ = vec![[usize::MAX; MAX_VERTICES]; n];
        let mut present: Vec<VSet> = vec![0; n];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if a >= n || b >= n || c >= n || a == b {
                    return Err(EmbeddingError::BadNeighbor(a, b));
                }
                if succ[b][a] != usize::MAX {
                    return Err(EmbeddingError::MultiEdge(a, b));
                }
                succ[b][a] = c;
                present[b] |= bit(a);
            }
        }
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let Some(start) = members(present[v]).next() else {
                return Err(EmbeddingError::Disconnected);
            };
            let mut list = vec![start];
            let mut w = succ[v][start];
            while w != start {
                if w == usize::MAX || list.len() > present[v].count_ones() as usize {
                    return Err(EmbeddingError::InconsistentRotation(v, *list.last().unwrap()));
                }
                list.push(w);
                w = succ[v][w];
            }
            if list.len() != present[v].count_ones() as usize {
                return Err(EmbeddingError::InconsistentRotation(v, start));
            }
            rot.push(list);
        }
        PlaneGraph::from_rotation(rot)
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn is_triangulation(&self) -> bool {
        self.n() >= 3 && self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    /// Re-roots the embedding on another face. The rotation system is unchanged.
    pub fn with_outer_face(mut self, face: usize) -> Result<Self, EmbeddingError> {
        if face >= self.faces.len() {
            return Err(EmbeddingError::NoSuchFace(face));
        }
        self.outer_face = Some(face);
        Ok(self)
    }

    pub fn without_outer_face(mut self) -> Self {
        self.outer_face = None;
        self
    }

    fn position(&self, v: usize, w: usize) -> Option<usize> {
        self.rotation[v].iter().position(|&x| x == w)
    }

    /// Neighbour following `w` clockwise around `v`.
    pub fn succ(&self, v: usize, w: usize) -> usize {
        let i = self.position(v, w).expect("not a neighbour");
        self.rotation[v][(i + 1) % self.rotation[v].len()]
    }

    /// Neighbour preceding `w` clockwise around `v`.
    pub fn pred(&self, v: usize, w: usize) -> usize {
        let i = self.position(v, w).expect("not a neighbour");
        let d = self.rotation[v].len();
        self.rotation[v][(i + d - 1) % d]
    }

    /// Index of the face containing the dart `u -> v`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.position(u, v).map(|i| self.dart_face[u][i])
    }

    /// Finds the face traced exactly as `seq` (up to cyclic shift, same direction).
    pub fn find_face(&self, seq: &[usize]) -> Option<usize> {
        if seq.len() < 2 {
            return None;
        }
        let f = self.face_of_dart(seq[0], seq[1])?;
        let face = &self.faces[f];
        if face.len() != seq.len() {
            return None;
        }
        let start = face.iter().position(|&x| x == seq[0])?;
        let same = (0..seq.len()).all(|i| face[(start + i) % face.len()] == seq[i]);
        same.then_some(f)
    }

    /// Finds a face with exactly this vertex set, in either direction.
    pub fn find_face_either(&self, seq: &[usize]) -> Option<usize> {
        self.find_face(seq).or_else(|| {
            let rev: Vec<usize> = seq.iter().rev().copied().collect();
            self.find_face(&rev)
        })
    }

    pub fn mirror(&self) -> PlaneGraph {
        let rot = self.rotation.iter().map(|l| l.iter().rev().copied().collect()).collect();
        let mut g = PlaneGraph::from_rotation(rot).expect("mirror of a valid embedding");
        if let Some(f) = self.outer_face {
            let rev: Vec<usize> = self.faces[f].iter().rev().copied().collect();
            g.outer_face = g.find_face(&rev);
        }
        g
    }

    /// Rotation system of the subgraph induced by `keep`, relabelled densely.
    /// Returns the rotation table and new -> old labels.
    pub fn sub_rotation(&self, keep: VSet) -> (Vec<Vec<usize>>, Vec<usize>) {
        let labels: Vec<usize> = members(keep & self.graph.vertices()).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let rot = labels
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .filter(|&&w| keep & bit(w) != 0)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (rot, labels)
    }

    /// The induced plane subgraph on `keep`; fails if it is disconnected.
    pub fn induced(&self, keep: VSet) -> Result<(PlaneGraph, Vec<usize>), EmbeddingError> {
        let (rot, labels) = self.sub_rotation(keep);
        Ok((PlaneGraph::from_rotation(rot)?, labels))
    }

    pub fn remove_edges(&self, edges: &[Edge]) -> Result<PlaneGraph, EmbeddingError> {
        let gone: BTreeSet<Edge> = edges.iter().map(|&(a, b)| edge(a, b)).collect();
        for &(a, b) in &gone {
            if !self.graph.has_edge(a, b) {
                return Err(EmbeddingError::NoSuchEdge(a, b));
            }
        }
        let rot = (0..self.n())
            .map(|v| {
                self.rotation[v].iter().copied().filter(|&w| !gone.contains(&edge(v, w))).collect()
            })
            .collect();
        PlaneGraph::from_rotation(rot)
    }

    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        if k < 3 || cycle.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let set: BTreeSet<usize> = cycle.iter().copied().collect();
        set.len() == k && (0..k).all(|i| self.graph.has_edge(cycle[i], cycle[(i + 1) % k]))
    }

    /// The side of `cycle` lying to its right when traversed in the given order.
    pub fn right_side(&self, cycle: &[usize]) -> Result<Side, EmbeddingError> {
        if !self.is_cycle(cycle) {
            return Err(EmbeddingError::NotACycle);
        }
        let k = cycle.len();
        let cyc_edges: BTreeSet<Edge> =
            (0..k).map(|i| edge(cycle[i], cycle[(i + 1) % k])).collect();
        let mut right = vec![false; self.faces.len()];
        let mut stack = Vec::new();
        for i in 0..k {
            let f = self.face_of_dart(cycle[(i + 1) % k], cycle[i]).expect("cycle edge");
            if !right[f] {
                right[f] = true;
                stack.push(f);
            }
        }
        while let Some(f) = stack.pop() {
            let face = &self.faces[f];
            for j in 0..face.len() {
                let (a, b) = (face[j], face[(j + 1) % face.len()]);
                if cyc_edges.contains(&edge(a, b)) {
                    continue;
                }
                let g = self.face_of_dart(b, a).expect("reverse dart");
                if !right[g] {
                    right[g] = true;
                    stack.push(g);
                }
            }
        }
        for i in 0..k {
            let f = self.face_of_dart(cycle[i], cycle[(i + 1) % k]).expect("cycle edge");
            if right[f] {
                return Err(EmbeddingError::NotACycle);
            }
        }
        let on_cycle: VSet = cycle.iter().fold(0, |acc, &v| acc | bit(v));
        let mut inner = 0;
        for (f, &r) in right.iter().enumerate() {
            if r {
                for &v in &self.faces[f] {
                    inner |= bit(v);
                }
            }
        }
        Ok(Side { cycle: cycle.to_vec(), faces: right, inner: inner & !on_cycle })
    }

    /// The interior side of `cycle`: the side away from the designated outer face
    /// when there is one, otherwise the side to the right of the given order.
    pub fn interior_side(&self, cycle: &[usize]) -> Result<Side, EmbeddingError> {
        let side = self.right_side(cycle)?;
        match self.outer_face {
            Some(f) if side.faces[f] => {
                let rev: Vec<usize> = cycle.iter().rev().copied().collect();
                self.right_side(&rev)
            }
            _ => Ok(side),
        }
    }

    /// Vertices strictly inside `cycle`.
    pub fn interior(&self, cycle: &[usize]) -> Result<VSet, EmbeddingError> {
        Ok(self.interior_side(cycle)?.inner)
    }

    /// The closed disc bounded by `cycle` as a near triangulation with `cycle` outer.
    pub fn closure(&self, cycle: &[usize]) -> Result<NearTriangulation, EmbeddingError> {
        let side = self.interior_side(cycle)?;
        self.closure_of_side(&side)
    }

    pub fn closure_of_side(&self, side: &Side) -> Result<NearTriangulation, EmbeddingError> {
        let on_cycle: VSet = side.cycle.iter().fold(0, |acc, &v| acc | bit(v));
        let keep = on_cycle | side.inner;
        let labels: Vec<usize> = members(keep).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let rot: Vec<Vec<usize>> = labels
            .iter()
            .map(|&v| {
                self.rotation[v]
                    .iter()
                    .enumerate()
                    .filter(|&(i, &w)| {
                        keep & bit(w) != 0
                            && (side.faces[self.dart_face[v][i]]
                                || self.face_of_dart(w, v).is_some_and(|f| side.faces[f]))
                    })
                    .map(|(_, &w)| index[w])
                    .collect()
            })
            .collect();
        let plane = PlaneGraph::from_rotation(rot)?;
        // the dart c0 -> c1 has the removed side on its left, so it traces the outer face
        let outer: Vec<usize> = side.cycle.iter().map(|&v| index[v]).collect();
        let mut nt = NearTriangulation::new(plane, outer)?;
        nt.labels = labels;
        Ok(nt)
    }

    /// Contracts the interior of `cycle` to one new vertex (the last id).
    pub fn contract_interior(&self, cycle: &[usize]) -> Result<Contraction, EmbeddingError> {
        let side = self.interior_side(cycle)?;
        self.contract_side(&side)
    }

    pub fn contract_side(&self, side: &Side) -> Result<Contraction, EmbeddingError> {
        let inner = side.inner;
        if inner == 0 {
            return Err(EmbeddingError::EmptyInterior);
        }
        if !self.graph.is_connected_within(inner) {
            return Err(EmbeddingError::DisconnectedInterior);
        }
        let n = self.n();
        let kept: Vec<usize> = (0..n).filter(|&v| inner & bit(v) == 0).collect();
        let star = kept.len();
        let mut map = vec![star; n];
        for (i, &v) in kept.iter().enumerate() {
            map[v] = i;
        }
        let mut rot: Vec<Vec<usize>> = Vec::with_capacity(star + 1);
        for &v in &kept {
            let mapped: Vec<usize> = self.rotation[v].iter().map(|&w| map[w]).collect();
            let collapsed = collapse_cyclic(&mapped);
            if collapsed.iter().filter(|&&w| w == star).count() > 1 {
                return Err(EmbeddingError::DisconnectedInterior);
            }
            rot.push(collapsed);
        }
        // clockwise around the new vertex = along the cycle oriented with the interior on its right
        let star_rot: Vec<usize> = side
            .cycle
            .iter()
            .filter(|&&c| self.graph.adj(c) & inner != 0)
            .map(|&c| map[c])
            .collect();
        rot.push(star_rot);
        let mut graph = PlaneGraph::from_rotation(rot)?;
        if let Some(f) = self.outer_face {
            let seq: Vec<usize> = self.faces[f].iter().map(|&v| map[v]).collect();
            graph.outer_face = graph.find_face(&seq);
        }
        let mut origin: Vec<Option<usize>> = kept.iter().map(|&v| Some(v)).collect();
        origin.push(if inner.count_ones() == 1 { Some(inner.trailing_zeros() as usize) } else { None });
        Ok(Contraction { graph, new_vertex: star, map, origin })
    }

    /// Contracts the edge `uv`; the merged vertex takes the id of `u` after removing `v`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Contraction, EmbeddingError> {
        if !self.graph.has_edge(u, v) {
            return Err(EmbeddingError::NoSuchEdge(u, v));
        }
        let n = self.n();
        let map: Vec<usize> = (0..n)
            .map(|w| if w == v { u - (u > v) as usize } else { w - (w > v) as usize })
            .collect();
        let rotate_from = |a: usize, b: usize| -> Vec<usize> {
            let list = &self.rotation[a];
            let i = list.iter().position(|&x| x == b).unwrap();
            (1..list.len()).map(|k| list[(i + k) % list.len()]).collect()
        };
        let pu = rotate_from(u, v);
        let qv = rotate_from(v, u);
        let mut merged: Vec<usize> = pu.clone();
        if qv.len() >= 2 {
            merged.extend_from_slice(&qv[1..qv.len() - 1]);
        }
        let mut rot = Vec::with_capacity(n - 1);
        for w in (0..n).filter(|&w| w != v) {
            let list: Vec<usize> = if w == u {
                merged.iter().map(|&x| map[x]).collect()
            } else {
                self.rotation[w].iter().map(|&x| map[x]).collect()
            };
            let list = collapse_cyclic(&list);
            rot.push(list);
        }
        let mut graph = PlaneGraph::from_rotation(rot)?;
        if let Some(f) = self.outer_face {
            let seq = collapse_cyclic(&self.faces[f].iter().map(|&x| map[x]).collect::<Vec<_>>());
            graph.outer_face = graph.find_face(&seq);
        }
        let mu = map[u];
        let origin = (0..n - 1)
            .map(|i| if i == mu { None } else { (0..n).find(|&w| w != v && w != u && map[w] == i) })
            .collect();
        Ok(Contraction { graph, new_vertex: mu, map, origin })
    }

    /// Replaces the diagonal `uv` of the quadrilateral formed by its two incident
    /// triangles with the other diagonal.
    pub fn flip(&self, u: usize, v: usize) -> Result<PlaneGraph, EmbeddingError> {
        if !self.graph.has_edge(u, v) {
            return Err(EmbeddingError::NoSuchEdge(u, v));
        }
        let w = self.succ(v, u);
        let x = self.succ(u, v);
        if w == x
            || self.graph.has_edge(w, x)
            || self.graph.degree(u) <= 3
            || self.graph.degree(v) <= 3
            || self.succ(w, v) != u
            || self.succ(x, u) != v
        {
            return Err(EmbeddingError::FlipRejected(u, v));
        }
        let mut rot = self.rotation.clone();
        rot[u].retain(|&y| y != v);
        rot[v].retain(|&y| y != u);
        let i = rot[w].iter().position(|&y| y == v).unwrap();
        rot[w].insert(i + 1, x);
        let j = rot[x].iter().position(|&y| y == u).unwrap();
        rot[x].insert(j + 1, w);
        PlaneGraph::from_rotation(rot)
    }
}

/// Collapses cyclically consecutive duplicates: [a,a,b,c,a] -> [a,b,c].
fn collapse_cyclic(list: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(list.len());
    for &x in list {
        if out.last() != Some(&x) {
            out.push(x);
        }
    }
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// A plane graph whose faces, except the designated outer cycle, are triangles.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NearTriangulation {
    pub plane: PlaneGraph,
    /// Outer cycle, in the order it is traced as a face.
    pub outer: Vec<usize>,
    /// Ids of the vertices in the graph this was cut from (identity when built directly).
    pub labels: Vec<usize>,
}

impl NearTriangulation {
    pub fn new(plane: PlaneGraph, outer: Vec<usize>) -> Result<Self, EmbeddingError> {
        let f = plane.find_face(&outer).ok_or(EmbeddingError::OuterNotAFace)?;
        let set: BTreeSet<usize> = outer.iter().copied().collect();
        if set.len() != outer.len() || outer.len() < 3 {
            return Err(EmbeddingError::NotACycle);
        }
        for (i, face) in plane.faces.iter().enumerate() {
            if i != f && face.len() != 3 {
                return Err(EmbeddingError::InnerFaceNotTriangle(face.clone()));
            }
        }
        let labels = (0..plane.n()).collect();
        let plane = plane.with_outer_face(f)?;
        Ok(NearTriangulation { plane, outer, labels })
    }

    pub fn graph(&self) -> &Graph {
        self.plane.graph()
    }

    pub fn n(&self) -> usize {
        self.plane.n()
    }

    pub fn outer_set(&self) -> VSet {
        self.outer.iter().fold(0, |acc, &v| acc | bit(v))
    }

    pub fn outer_edges(&self) -> Vec<Edge> {
        let k = self.outer.len();
        (0..k).map(|i| edge(self.outer[i], self.outer[(i + 1) % k])).collect()
    }

    /// The same graph with the outer cycle re-listed from a new starting vertex or
    /// direction; the face is unchanged.
    pub fn relabel_outer(&self, outer: Vec<usize>) -> Result<Self, EmbeddingError> {
        let set_a: BTreeSet<usize> = outer.iter().copied().collect();
        let set_b: BTreeSet<usize> = self.outer.iter().copied().collect();
        if set_a != set_b || !self.plane.is_cycle(&outer) {
            return Err(EmbeddingError::NotACycle);
        }
        Ok(NearTriangulation { plane: self.plane.clone(), outer, labels: self.labels.clone() })
    }

    /// Deletes vertex `v` and uses `new_outer` (ids of this graph) as the outer cycle
    /// of the result.
    pub fn delete_vertex(&self, v: usize, new_outer: &[usize]) -> Result<Self, EmbeddingError> {
        let keep = self.plane.graph().vertices() & !bit(v);
        let (plane, sub_labels) = self.plane.induced(keep)?;
        let index = |x: usize| sub_labels.iter().position(|&y| y == x);
        let outer: Option<Vec<usize>> = new_outer.iter().map(|&x| index(x)).collect();
        let outer = outer.ok_or(EmbeddingError::NotACycle)?;
        let outer = if plane.find_face(&outer).is_some() {
            outer
        } else {
            outer.iter().rev().copied().collect()
        };
        let mut nt = NearTriangulation::new(plane, outer)?;
        nt.labels = sub_labels.iter().map(|&x| self.labels[x]).collect();
        Ok(nt)
    }
}
