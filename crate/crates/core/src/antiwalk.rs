//! Antidirected paths and cycles as witnesses checked against a host graph.
//!
//! A witness stores only its vertex sequence and the direction of its first
//! arc. Everything else is re-derived from the host when validating.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{OrientedGraph, VertexId};

/// How an arc is traversed relative to the sequence order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `v_i -> v_{i+1}`
    Forward,
    /// `v_i <- v_{i+1}`
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    /// Direction of arc `i` on an alternating walk whose arc 0 goes `self`.
    pub fn at(self, i: usize) -> Self {
        if i.is_multiple_of(2) {
            self
        } else {
            self.flip()
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Direction::Forward => '+',
            Direction::Backward => '-',
        }
    }

    /// Whether `a b` traverses an arc of `g` in this direction.
    #[inline]
    pub fn holds(self, g: &OrientedGraph, a: VertexId, b: VertexId) -> bool {
        match self {
            Direction::Forward => g.has_arc(a, b),
            Direction::Backward => g.has_arc(b, a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("sequence too short: {len} vertices, need at least {min}")]
    TooShort { len: usize, min: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("vertex {0} repeated")]
    RepeatedVertex(VertexId),
    #[error("no arc between positions {0} and {next}", next = .0 + 1)]
    NotAdjacent(usize),
    #[error("arcs meeting at position {0} point the same way")]
    AlternationBroken(usize),
    #[error("closing arc breaks alternation at the first vertex")]
    WrapAlternationBroken,
    #[error("antipath length must be at least 1")]
    ZeroLength,
    #[error("recorded start direction does not match the host graph")]
    DirectionMismatch,
    #[error("malformed witness line: {0}")]
    Malformed(String),
}

fn arc_direction(
    g: &OrientedGraph,
    a: VertexId,
    b: VertexId,
    position: usize,
) -> Result<Direction, WalkError> {
    if g.has_arc(a, b) {
        Ok(Direction::Forward)
    } else if g.has_arc(b, a) {
        Ok(Direction::Backward)
    } else {
        Err(WalkError::NotAdjacent(position))
    }
}

fn check_vertices(g: &OrientedGraph, seq: &[VertexId]) -> Result<(), WalkError> {
    let mut seen = vec![false; g.vertex_count()];
    for &v in seq {
        if v >= g.vertex_count() {
            return Err(WalkError::VertexOutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(WalkError::RepeatedVertex(v));
        }
    }
    Ok(())
}

/// Checks adjacency and alternation along the open sequence; returns the
/// direction of the first arc.
fn check_alternation(g: &OrientedGraph, seq: &[VertexId]) -> Result<Direction, WalkError> {
    let start = arc_direction(g, seq[0], seq[1], 0)?;
    let mut prev = start;
    for i in 1..seq.len() - 1 {
        let d = arc_direction(g, seq[i], seq[i + 1], i)?;
        if d == prev {
            return Err(WalkError::AlternationBroken(i));
        }
        prev = d;
    }
    Ok(start)
}

/// An antidirected path `v_0 … v_m` with `m ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AntipathWitness {
    vertices: Vec<VertexId>,
    start: Direction,
}

impl AntipathWitness {
    /// Validates `seq` against `g`.
    pub fn validate(g: &OrientedGraph, seq: &[VertexId]) -> Result<Self, WalkError> {
        if seq.len() < 2 {
            return Err(if seq.len() == 1 {
                WalkError::ZeroLength
            } else {
                WalkError::TooShort {
                    len: seq.len(),
                    min: 2,
                }
            });
        }
        check_vertices(g, seq)?;
        let start = check_alternation(g, seq)?;
        Ok(Self {
            vertices: seq.to_vec(),
            start,
        })
    }

    /// Builds a witness without consulting a host. Callers that hold the host
    /// should prefer [`AntipathWitness::validate`] or [`AntipathWitness::revalidate`].
    pub fn from_parts(vertices: Vec<VertexId>, start: Direction) -> Result<Self, WalkError> {
        if vertices.len() < 2 {
            return Err(WalkError::ZeroLength);
        }
        Ok(Self { vertices, start })
    }

    /// Checks this witness against `g`, including its recorded start direction.
    pub fn revalidate(&self, g: &OrientedGraph) -> Result<(), WalkError> {
        let fresh = Self::validate(g, &self.vertices)?;
        if fresh.start != self.start {
            return Err(WalkError::DirectionMismatch);
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    pub fn start_direction(&self) -> Direction {
        self.start
    }

    /// Number of arcs.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Direction of the last arc.
    pub fn end_direction(&self) -> Direction {
        self.start.at(self.len() - 1)
    }

    /// The same path read from the other end.
    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self {
            vertices,
            start: self.end_direction().flip(),
        }
    }

    /// The path traversed so that its first arc is forward, if possible.
    /// Odd-length paths always succeed; even-length ones only if they already
    /// start forward.
    pub fn oriented_forward(&self) -> Option<Self> {
        match (self.start, self.len() % 2) {
            (Direction::Forward, _) => Some(self.clone()),
            (Direction::Backward, 1) => Some(self.reversed()),
            _ => None,
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for AntipathWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("antipath:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, " dir={}", self.start.symbol())
    }
}

fn parse_witness_line(s: &str, tag: &str) -> Result<(Vec<VertexId>, Direction), WalkError> {
    let malformed = || WalkError::Malformed(s.to_string());
    let rest = s.trim().strip_prefix(tag).ok_or_else(malformed)?;
    let mut tokens: Vec<&str> = rest.split_whitespace().collect();
    let dir = match tokens.pop() {
        Some("dir=+") => Direction::Forward,
        Some("dir=-") => Direction::Backward,
        _ => return Err(malformed()),
    };
    let vertices = tokens
        .iter()
        .map(|t| t.parse::<VertexId>().map_err(|_| malformed()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((vertices, dir))
}

impl FromStr for AntipathWitness {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (vertices, start) = parse_witness_line(s, "antipath:")?;
        Self::from_parts(vertices, start)
    }
}

impl Serialize for AntipathWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AntipathWitness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A closed antidirected walk on distinct vertices. Always of even length ≥ 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnticycleWitness {
    vertices: Vec<VertexId>,
    start: Direction,
}

impl AnticycleWitness {
    pub fn validate(g: &OrientedGraph, seq: &[VertexId]) -> Result<Self, WalkError> {
        if seq.len() < 4 {
            return Err(WalkError::TooShort {
                len: seq.len(),
                min: 4,
            });
        }
        check_vertices(g, seq)?;
        let start = check_alternation(g, seq)?;
        let last = seq.len() - 1;
        let closing = arc_direction(g, seq[last], seq[0], last)?;
        if closing == start.at(last - 1) {
            return Err(WalkError::AlternationBroken(last));
        }
        if closing == start {
            return Err(WalkError::WrapAlternationBroken);
        }
        debug_assert!(seq.len().is_multiple_of(2));
        Ok(Self {
            vertices: seq.to_vec(),
            start,
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn start_direction(&self) -> Direction {
        self.start
    }

    /// Number of arcs, equal to the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn revalidate(&self, g: &OrientedGraph) -> Result<(), WalkError> {
        let fresh = Self::validate(g, &self.vertices)?;
        if fresh.start != self.start {
            return Err(WalkError::DirectionMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for AnticycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("anticycle:")?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        write!(f, " dir={}", self.start.symbol())
    }
}

impl Serialize for AnticycleWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Number of pairwise non-isomorphic antipaths of length `k`.
pub fn antipath_shapes(k: usize) -> Result<usize, WalkError> {
    match k {
        0 => Err(WalkError::ZeroLength),
        k if k % 2 == 1 => Ok(1),
        _ => Ok(2),
    }
}
