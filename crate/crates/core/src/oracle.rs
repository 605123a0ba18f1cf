//! Exact search for antipaths and anticycles, and exhaustive enumeration of
//! small labelled oriented graphs.
//!
//! The search grows an alternating sequence from one end, trying every start
//! vertex. Once the first arc is fixed the direction of every later arc is
//! forced, so each step only branches over one neighbourhood. Neighbours are
//! visited in increasing order, so the first maximum-length sequence found is
//! the lexicographically least one.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::antiwalk::{AnticycleWitness, AntipathWitness, Direction};
use crate::graph::{OrientedGraph, VertexId};

/// Largest `n` that [`enumerate_oriented_graphs`] accepts.
pub const DEFAULT_ENUMERATION_CAP: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration on {n} vertices exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Neighbours of `v` across an arc traversed in direction `d`, ascending.
#[inline]
fn step(g: &OrientedGraph, v: VertexId, d: Direction) -> &[VertexId] {
    match d {
        Direction::Forward => g.out_neighbors(v),
        Direction::Backward => g.in_neighbors(v),
    }
}

/// All neighbours of `v` with the direction of the arc, ascending by vertex.
fn first_steps(g: &OrientedGraph, v: VertexId) -> Vec<(VertexId, Direction)> {
    let mut steps: Vec<(VertexId, Direction)> = g
        .out_neighbors(v)
        .iter()
        .map(|&w| (w, Direction::Forward))
        .chain(g.in_neighbors(v).iter().map(|&w| (w, Direction::Backward)))
        .collect();
    steps.sort_unstable();
    steps
}

struct PathSearch<'g> {
    g: &'g OrientedGraph,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    start: Direction,
    /// Stop as soon as a path of this length exists; `None` maximizes.
    target: Option<usize>,
    best: Option<(Vec<VertexId>, Direction)>,
}

impl<'g> PathSearch<'g> {
    fn new(g: &'g OrientedGraph, target: Option<usize>) -> Self {
        Self {
            g,
            visited: vec![false; g.vertex_count()],
            path: Vec::with_capacity(g.vertex_count()),
            start: Direction::Forward,
            target,
            best: None,
        }
    }

    fn best_len(&self) -> Option<usize> {
        self.best.as_ref().map(|(p, _)| p.len() - 1)
    }

    fn done(&self) -> bool {
        match (self.target, self.best_len()) {
            (Some(t), Some(b)) => b >= t,
            (None, Some(b)) => b + 1 == self.g.vertex_count(),
            _ => false,
        }
    }

    fn run(&mut self, start_filter: Option<Direction>) {
        let g = self.g;
        for v0 in 0..g.vertex_count() {
            for (v1, d) in first_steps(g, v0) {
                if start_filter.is_some_and(|f| f != d) {
                    continue;
                }
                self.start = d;
                self.push(v0);
                self.push(v1);
                self.record();
                if !self.done() {
                    self.extend(d.flip());
                }
                self.pop();
                self.pop();
                if self.done() {
                    return;
                }
            }
        }
    }

    fn push(&mut self, v: VertexId) {
        self.visited[v] = true;
        self.path.push(v);
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.visited[v] = false;
    }

    fn record(&mut self) {
        let len = self.path.len() - 1;
        let better = match self.target {
            Some(t) => len == t,
            None => self.best_len().is_none_or(|b| len > b),
        };
        if better {
            self.best = Some((self.path.clone(), self.start));
        }
    }

    fn extend(&mut self, next: Direction) {
        let len = self.path.len() - 1;
        let remaining = self.g.vertex_count() - self.path.len();
        match self.target {
            Some(t) if len >= t || len + remaining < t => return,
            None if self.best_len().is_some_and(|b| len + remaining <= b) => return,
            _ => {}
        }
        let g = self.g;
        let last = *self.path.last().expect("non-empty path");
        for &w in step(g, last, next) {
            if self.visited[w] {
                continue;
            }
            self.push(w);
            self.record();
            if !self.done() {
                self.extend(next.flip());
            }
            self.pop();
            if self.done() {
                return;
            }
        }
    }

    fn into_witness(self) -> Option<AntipathWitness> {
        self.best.map(|(vertices, start)| {
            AntipathWitness::from_parts(vertices, start).expect("search paths have length >= 1")
        })
    }
}

/// A longest antipath of `g`, lexicographically least among those of
/// maximum length. `None` iff `g` has no arcs.
pub fn longest_antipath(g: &OrientedGraph) -> Option<AntipathWitness> {
    let mut search = PathSearch::new(g, None);
    search.run(None);
    search.into_witness()
}

/// Length of a longest antipath, 0 for an arcless graph.
pub fn longest_antipath_len(g: &OrientedGraph) -> usize {
    longest_antipath(g).map_or(0, |w| w.len())
}

/// An antipath of length exactly `k`, or `None`.
///
/// With `shape` given the witness starts in that direction. For odd `k` the
/// two directions describe the same path read from opposite ends, so only
/// the orientation of the returned witness changes. For even `k` they are
/// different paths and only the requested one is searched for.
pub fn contains_antipath_of_length(
    g: &OrientedGraph,
    k: usize,
    shape: Option<Direction>,
) -> Option<AntipathWitness> {
    if k == 0 || k >= g.vertex_count() {
        return None;
    }
    let filter = if k.is_multiple_of(2) { shape } else { None };
    let mut search = PathSearch::new(g, Some(k));
    search.run(filter);
    let found = search.into_witness()?;
    match shape {
        Some(d) if found.start_direction() != d => Some(found.reversed()),
        _ => Some(found),
    }
}

/// Calls `f` on every antipath of length `len` (each path once per reading
/// direction), in lexicographic order of the vertex sequence.
pub fn for_each_antipath_of_length<F>(g: &OrientedGraph, len: usize, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[VertexId], Direction) -> ControlFlow<()>,
{
    fn walk<F>(
        g: &OrientedGraph,
        visited: &mut [bool],
        path: &mut Vec<VertexId>,
        start: Direction,
        len: usize,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[VertexId], Direction) -> ControlFlow<()>,
    {
        if path.len() - 1 == len {
            return f(path, start);
        }
        let next = start.at(path.len() - 1);
        let last = *path.last().expect("non-empty");
        for &w in step(g, last, next) {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            path.push(w);
            let flow = walk(g, visited, path, start, len, f);
            path.pop();
            visited[w] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    if len == 0 {
        return ControlFlow::Continue(());
    }
    let mut visited = vec![false; g.vertex_count()];
    let mut path = Vec::with_capacity(len + 1);
    for v0 in 0..g.vertex_count() {
        for (v1, d) in first_steps(g, v0) {
            visited[v0] = true;
            visited[v1] = true;
            path.extend([v0, v1]);
            let flow = walk(g, &mut visited, &mut path, d, len, &mut f);
            path.clear();
            visited[v0] = false;
            visited[v1] = false;
            flow?;
        }
    }
    ControlFlow::Continue(())
}

struct CycleSearch<'g> {
    g: &'g OrientedGraph,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    start: Direction,
    max_len: usize,
    best: Option<(Vec<VertexId>, Direction)>,
}

impl CycleSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(0, |(c, _)| c.len())
    }

    fn extend(&mut self, next: Direction) {
        let root = self.path[0];
        let len = self.path.len();
        // A cycle through `len` vertices closes with arc index `len - 1`.
        if len >= 4 && len.is_multiple_of(2) && len > self.best_len() {
            let last = self.path[len - 1];
            if next.holds(self.g, last, root) {
                self.best = Some((self.path.clone(), self.start));
            }
        }
        let unvisited_above_root = (self.g.vertex_count() - 1 - root) - (len - 1);
        let reachable = (len + unvisited_above_root).min(self.max_len);
        if len >= self.max_len || reachable <= self.best_len() || reachable < 4 {
            return;
        }
        let g = self.g;
        let last = self.path[len - 1];
        for &w in step(g, last, next) {
            if w <= root || self.visited[w] {
                continue;
            }
            self.visited[w] = true;
            self.path.push(w);
            self.extend(next.flip());
            self.path.pop();
            self.visited[w] = false;
        }
    }
}

/// A longest anticycle of length at most `max_len`, lexicographically least
/// among the longest. Each cycle is read from its smallest vertex.
pub fn longest_anticycle_at_most(g: &OrientedGraph, max_len: usize) -> Option<AnticycleWitness> {
    let mut search = CycleSearch {
        g,
        visited: vec![false; g.vertex_count()],
        path: Vec::with_capacity(g.vertex_count()),
        start: Direction::Forward,
        max_len,
        best: None,
    };
    for root in 0..g.vertex_count() {
        if g.vertex_count() - root <= search.best_len() {
            break;
        }
        for (v1, d) in first_steps(g, root) {
            if v1 <= root {
                continue;
            }
            search.start = d;
            search.visited[root] = true;
            search.visited[v1] = true;
            search.path.extend([root, v1]);
            search.extend(d.flip());
            search.path.clear();
            search.visited[root] = false;
            search.visited[v1] = false;
        }
    }
    search.best.map(|(vertices, _)| {
        AnticycleWitness::validate(g, &vertices).expect("search emits alternating cycles")
    })
}

/// A longest anticycle of `g`, or `None` if there is none.
pub fn longest_anticycle(g: &OrientedGraph) -> Option<AnticycleWitness> {
    longest_anticycle_at_most(g, g.vertex_count())
}

/// Number of labelled oriented graphs on `n` vertices: `3^(n choose 2)`.
pub fn oriented_graph_count(n: usize) -> u64 {
    let pairs = n * n.saturating_sub(1) / 2;
    3u64.pow(pairs as u32)
}

/// The `index`-th labelled oriented graph on `n` vertices. Pairs `(i, j)`,
/// `i < j`, are taken in lexicographic order and each consumes one base-3
/// digit of `index`, least significant first: 0 absent, 1 `i -> j`, 2 `j -> i`.
pub fn oriented_graph_at(n: usize, mut index: u64) -> OrientedGraph {
    let mut g = OrientedGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            match index % 3 {
                1 => g.add_arc(i, j),
                2 => g.add_arc(j, i),
                _ => Ok(()),
            }
            .expect("each pair is set once");
            index /= 3;
        }
    }
    g
}

/// Iterator over every labelled oriented graph on `n` vertices.
#[derive(Debug, Clone)]
pub struct OrientedGraphs {
    n: usize,
    next: u64,
    total: u64,
}

impl Iterator for OrientedGraphs {
    type Item = OrientedGraph;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let g = oriented_graph_at(self.n, self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for OrientedGraphs {}

pub fn enumerate_oriented_graphs(n: usize) -> Result<OrientedGraphs, OracleError> {
    enumerate_oriented_graphs_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_oriented_graphs_with_cap(
    n: usize,
    cap: usize,
) -> Result<OrientedGraphs, OracleError> {
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    Ok(OrientedGraphs {
        n,
        next: 0,
        total: oriented_graph_count(n),
    })
}
