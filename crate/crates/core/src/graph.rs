//! Oriented graphs: loop-free digraphs with at most one arc per vertex pair.
//!
//! Vertices are dense indices `0..n`. Out- and in-neighbourhoods are kept as
//! sorted lists so both directions enumerate in O(degree); arc membership goes
//! through a hash set.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

/// Dense vertex label in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("arc {0}->{1} already present")]
    DuplicateArc(VertexId, VertexId),
    #[error("arc {1}->{0} already present, adding {0}->{1} would create a 2-cycle")]
    AntiparallelArc(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("arc {0}->{1} not present")]
    MissingArc(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct OrientedGraph {
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
    arcs: HashSet<(VertexId, VertexId)>,
}

impl PartialEq for OrientedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.out_adj == other.out_adj
    }
}

impl Eq for OrientedGraph {}

impl OrientedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
            arcs: HashSet::new(),
        }
    }

    /// Builds a graph from an arc list, rejecting anything `add_arc` rejects.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Self::new(n);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.out_adj.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.arcs.contains(&(u, v)) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        if self.arcs.contains(&(v, u)) {
            return Err(GraphError::AntiparallelArc(u, v));
        }
        self.arcs.insert((u, v));
        insert_sorted(&mut self.out_adj[u], v);
        insert_sorted(&mut self.in_adj[v], u);
        Ok(())
    }

    pub fn remove_arc(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if !self.arcs.remove(&(u, v)) {
            return Err(GraphError::MissingArc(u, v));
        }
        remove_sorted(&mut self.out_adj[u], v);
        remove_sorted(&mut self.in_adj[v], u);
        Ok(())
    }

    #[inline]
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// True if either orientation of the pair is present.
    #[inline]
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Out-neighbours in increasing order.
    #[inline]
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out_adj[v]
    }

    /// In-neighbours in increasing order.
    #[inline]
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_adj[v]
    }

    #[inline]
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_adj[v].len()
    }

    /// All arcs, sorted lexicographically.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out_adj
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// The same vertex set with every arc flipped.
    pub fn reverse(&self) -> Self {
        Self {
            out_adj: self.in_adj.clone(),
            in_adj: self.out_adj.clone(),
            arcs: self.arcs.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[VertexId]) -> Self {
        assert_eq!(perm.len(), self.vertex_count(), "permutation length");
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            assert!(p < perm.len() && !seen[p], "not a permutation");
            seen[p] = true;
        }
        Self::from_arcs(
            self.vertex_count(),
            self.arcs().map(|(u, v)| (perm[u], perm[v])),
        )
        .expect("relabelling preserves orientation")
    }

    /// 64-bit FNV-1a over the sorted arc list, each endpoint as a
    /// little-endian `u32`. Stable across platforms and releases.
    pub fn stable_hash(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        for (u, v) in self.arcs() {
            for byte in (u as u32)
                .to_le_bytes()
                .into_iter()
                .chain((v as u32).to_le_bytes())
            {
                h ^= u64::from(byte);
                h = h.wrapping_mul(PRIME);
            }
        }
        h
    }

    /// Serializes to the edge-list text format: `n m` then one `u v` line per arc.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.arc_count());
        for (u, v) in self.arcs() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(ParseError {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut g = Self::new(n);
        let mut read = 0usize;
        for (line, l) in lines {
            if read == m {
                return Err(ParseError {
                    line,
                    message: format!("more arc lines than the declared {m}"),
                });
            }
            let [u, v] = parse_pair(line, l)?;
            g.add_arc(u, v).map_err(|e| ParseError {
                line,
                message: e.to_string(),
            })?;
            read += 1;
        }
        if read != m {
            return Err(ParseError {
                line: text.lines().count().max(1),
                message: format!("expected {m} arc lines, found {read}"),
            });
        }
        Ok(g)
    }

    /// Graphviz DOT with one edge statement per arc. Arcs joining consecutive
    /// vertices of `highlight` are drawn bold red, as are its vertices.
    pub fn to_dot(&self, highlight: Option<&[VertexId]>) -> String {
        let mut on_path = vec![false; self.vertex_count()];
        let mut path_arcs = HashSet::new();
        if let Some(seq) = highlight {
            for &v in seq {
                if v < on_path.len() {
                    on_path[v] = true;
                }
            }
            for w in seq.windows(2) {
                path_arcs.insert((w[0], w[1]));
                path_arcs.insert((w[1], w[0]));
            }
        }

        let mut s = String::from("digraph G {\n");
        for (v, &hl) in on_path.iter().enumerate() {
            if hl {
                let _ = writeln!(s, "  {v} [color=red, penwidth=2];");
            } else {
                let _ = writeln!(s, "  {v};");
            }
        }
        for (u, v) in self.arcs() {
            if path_arcs.contains(&(u, v)) {
                let _ = writeln!(s, "  {u} -> {v} [color=red, penwidth=2];");
            } else {
                let _ = writeln!(s, "  {u} -> {v};");
            }
        }
        s.push_str("}\n");
        s
    }
}

impl FromStr for OrientedGraph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_edge_list(s)
    }
}

impl fmt::Display for OrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2], ParseError> {
    let mut fields = text.split_whitespace();
    let mut out = [0usize; 2];
    for slot in &mut out {
        let tok = fields.next().ok_or_else(|| ParseError {
            line,
            message: format!("expected two integers, got {text:?}"),
        })?;
        *slot = tok.parse().map_err(|_| ParseError {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })?;
    }
    if let Some(extra) = fields.next() {
        return Err(ParseError {
            line,
            message: format!("unexpected trailing token {extra:?}"),
        });
    }
    Ok(out)
}

fn insert_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    let pos = list.partition_point(|&x| x < v);
    list.insert(pos, v);
}

fn remove_sorted(list: &mut Vec<VertexId>, v: VertexId) {
    if let Ok(pos) = list.binary_search(&v) {
        list.remove(pos);
    }
}

/// Per-vertex degrees and the two minimum-degree statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub in_degree: Vec<usize>,
    pub out_degree: Vec<usize>,
    /// Minimum over vertices of `min(d⁻, d⁺)`; 0 for the empty graph.
    pub min_semidegree: usize,
    /// Largest `d` such that every non-zero in- or out-degree is at least `d`;
    /// 0 if there are no arcs.
    pub min_pseudo_semidegree: usize,
}

impl DegreeProfile {
    pub fn of(g: &OrientedGraph) -> Self {
        let n = g.vertex_count();
        let in_degree: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
        let out_degree: Vec<usize> = (0..n).map(|v| g.out_degree(v)).collect();
        let min_semidegree = in_degree
            .iter()
            .zip(&out_degree)
            .map(|(&i, &o)| i.min(o))
            .min()
            .unwrap_or(0);
        // Every non-zero degree must reach d, so the best d is the smallest
        // non-zero degree.
        let min_pseudo_semidegree = in_degree
            .iter()
            .chain(&out_degree)
            .copied()
            .filter(|&d| d > 0)
            .min()
            .unwrap_or(0);
        Self {
            in_degree,
            out_degree,
            min_semidegree,
            min_pseudo_semidegree,
        }
    }

    pub fn pd(&self) -> usize {
        self.min_pseudo_semidegree
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blowup_triangle_2() -> OrientedGraph {
        let mut g = OrientedGraph::new(6);
        for j in 0..3 {
            let next = (j + 1) % 3;
            for a in 0..2 {
                for b in 0..2 {
                    g.add_arc(2 * j + a, 2 * next + b).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn new_graph_is_arcless() {
        let g = OrientedGraph::new(0);
        assert_eq!((g.vertex_count(), g.arc_count()), (0, 0));
        let g = OrientedGraph::new(3);
        assert_eq!((g.vertex_count(), g.arc_count()), (3, 0));
        assert!((0..3).all(|v| g.out_degree(v) == 0 && g.in_degree(v) == 0));
    }

    #[test]
    fn add_arc_errors() {
        let mut g = OrientedGraph::new(3);
        g.add_arc(0, 1).unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.add_arc(1, 0), Err(GraphError::AntiparallelArc(1, 0)));
        assert_eq!(g.add_arc(0, 1), Err(GraphError::DuplicateArc(0, 1)));
        assert_eq!(g.add_arc(2, 2), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            g.add_arc(0, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn single_arc_profile() {
        let g = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.out_degree[0], 1);
        assert_eq!(p.in_degree[0], 0);
        assert_eq!(p.min_semidegree, 0);
        assert_eq!(p.pd(), 1);
    }

    #[test]
    fn blowup_profile() {
        let g = blowup_triangle_2();
        assert_eq!(g.arc_count(), 12);
        let p = g.degree_profile();
        assert!(p.in_degree.iter().chain(&p.out_degree).all(|&d| d == 2));
        assert_eq!((p.min_semidegree, p.pd()), (2, 2));
    }

    #[test]
    fn arcless_profile() {
        let p = OrientedGraph::new(5).degree_profile();
        assert_eq!((p.min_semidegree, p.pd()), (0, 0));
    }

    #[test]
    fn reverse_single_arc_and_blowup() {
        let g = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(g.reverse().arcs().collect::<Vec<_>>(), vec![(1, 0)]);

        let b = blowup_triangle_2();
        let r = b.reverse();
        assert!(r.has_arc(2, 0) && !r.has_arc(0, 2));
        assert_eq!(r.degree_profile().pd(), 2);
        assert_eq!(r.reverse(), b);
    }

    #[test]
    fn remove_then_readd() {
        let mut g = blowup_triangle_2();
        g.remove_arc(0, 2).unwrap();
        assert!(!g.has_arc(0, 2));
        assert_eq!(g.degree_profile(), DegreeProfile::of(&g.clone()));
        assert_eq!(g.degree_profile().pd(), 1);
        assert_eq!(g.remove_arc(0, 2), Err(GraphError::MissingArc(0, 2)));
        g.add_arc(2, 0).unwrap();
        assert!(g.has_arc(2, 0));
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = blowup_triangle_2();
        let text = g.to_edge_list();
        assert!(text.starts_with("6 12\n"));
        assert_eq!(OrientedGraph::parse_edge_list(&text).unwrap(), g);

        let err = OrientedGraph::parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = OrientedGraph::parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("2-cycle"));
        let err = OrientedGraph::parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(err.message.contains("expected 2"));
        let err = OrientedGraph::parse_edge_list("").unwrap_err();
        assert_eq!(err.line, 1);

        let g = OrientedGraph::parse_edge_list("5 0\n").unwrap();
        assert_eq!((g.vertex_count(), g.arc_count()), (5, 0));
    }

    #[test]
    fn dot_highlights_witness() {
        let g = OrientedGraph::from_arcs(4, [(0, 1), (2, 1), (2, 3), (0, 3)]).unwrap();
        let dot = g.to_dot(Some(&[0, 1, 2]));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("0 -> 1 [color=red"));
        assert!(dot.contains("2 -> 1 [color=red"));
        assert!(dot.contains("  2 -> 3;"));
        assert!(dot.contains("  3;"));
    }

    #[test]
    fn stable_hash_depends_only_on_arcs() {
        let a = OrientedGraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let b = OrientedGraph::from_arcs(3, [(1, 2), (0, 1)]).unwrap();
        assert_eq!(a.stable_hash(), b.stable_hash());
        assert_ne!(a.stable_hash(), a.reverse().stable_hash());
        // FNV-1a offset basis for the empty arc list.
        assert_eq!(OrientedGraph::new(4).stable_hash(), 0xcbf2_9ce4_8422_2325);
    }
}
