//! Rotation and extension moves on an odd antipath `v_0 … v_m` whose first
//! arc is `v_0 -> v_1`.
//!
//! With that orientation every path arc runs from an even position to an odd
//! one. The moves here either reorder the same vertex set (rotations and the
//! endpoint swaps through `v_1`) or produce an antipath one arc longer. The
//! auditor checks the structural facts that must hold when the path is a
//! longest antipath; whenever one fails it returns the longer structure that
//! disproves maximality.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;
use thiserror::Error;

use crate::antiwalk::{AnticycleWitness, AntipathWitness, Direction, WalkError};
use crate::graph::{OrientedGraph, VertexId};

/// Default bound on the number of distinct paths explored by the closure.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("rotation machinery needs an odd-length path, got length {0}")]
    EvenLengthPath(usize),
    #[error("invalid path: {0}")]
    InvalidPath(#[from] WalkError),
    #[error("arc {0}->{1} required by the move is absent")]
    MissingArc(VertexId, VertexId),
    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },
    #[error("vertex {0} is not an in-neighbour of v1 off the path tail")]
    NotInF(VertexId),
    #[error("the two F-vertices must differ, both are {0}")]
    SameVertex(VertexId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    SameLengthRotation,
    LengthPlusOneExtension,
    NoMove,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOutcome {
    pub kind: MoveKind,
    pub result: AntipathWitness,
}

impl MoveOutcome {
    fn same_length(g: &OrientedGraph, seq: &[VertexId]) -> Self {
        Self {
            kind: MoveKind::SameLengthRotation,
            result: witness(g, seq),
        }
    }

    fn extension(g: &OrientedGraph, seq: &[VertexId]) -> Self {
        Self {
            kind: MoveKind::LengthPlusOneExtension,
            result: witness(g, seq),
        }
    }
}

fn witness(g: &OrientedGraph, seq: &[VertexId]) -> AntipathWitness {
    AntipathWitness::validate(g, seq)
        .unwrap_or_else(|e| panic!("move produced a non-antipath {seq:?}: {e}"))
}

fn require_arc(g: &OrientedGraph, u: VertexId, v: VertexId) -> Result<(), RotationError> {
    if g.has_arc(u, v) {
        Ok(())
    } else {
        Err(RotationError::MissingArc(u, v))
    }
}

fn check_index(index: usize, min: usize, max: usize) -> Result<(), RotationError> {
    if (min..=max).contains(&index) && min <= max {
        Ok(())
    } else {
        Err(RotationError::IndexOutOfRange { index, min, max })
    }
}

/// `v_{2i} v_{2i-1} … v_0 v_{2i+1} … v_m`, using the chord `v_0 -> v_{2i+1}`;
/// `1 <= i <= (m-1)/2`.
fn rotate_start_seq(
    g: &OrientedGraph,
    seq: &[VertexId],
    i: usize,
) -> Result<Vec<VertexId>, RotationError> {
    let m = seq.len() - 1;
    check_index(i, 1, (m - 1) / 2)?;
    require_arc(g, seq[0], seq[2 * i + 1])?;
    let mut out: Vec<VertexId> = seq[..=2 * i].iter().rev().copied().collect();
    out.extend_from_slice(&seq[2 * i + 1..]);
    Ok(out)
}

/// `v_0 … v_{2i} v_m v_{m-1} … v_{2i+1}`, using the chord `v_{2i} -> v_m`;
/// `0 <= i <= (m-3)/2` (the value `(m-1)/2` would return the path unchanged).
fn rotate_end_seq(
    g: &OrientedGraph,
    seq: &[VertexId],
    i: usize,
) -> Result<Vec<VertexId>, RotationError> {
    let m = seq.len() - 1;
    if m < 3 {
        return Err(RotationError::IndexOutOfRange {
            index: i,
            min: 0,
            max: 0,
        });
    }
    check_index(i, 0, (m - 3) / 2)?;
    require_arc(g, seq[2 * i], seq[m])?;
    let mut out = seq[..=2 * i].to_vec();
    out.extend(seq[2 * i + 1..].iter().rev());
    Ok(out)
}

/// Every path reachable from `seq` by start and end rotations, in BFS order
/// starting with `seq` itself.
#[derive(Debug, Clone)]
pub struct Closure {
    pub paths: Vec<Vec<VertexId>>,
    pub truncated: bool,
}

fn rotation_closure(g: &OrientedGraph, seq: &[VertexId], cap: usize) -> Closure {
    let m = seq.len() - 1;
    let mut seen: HashSet<Vec<VertexId>> = HashSet::new();
    let mut paths = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seq.to_vec());
    queue.push_back(seq.to_vec());
    let mut truncated = false;
    while let Some(p) = queue.pop_front() {
        let starts = (1..=(m - 1) / 2).map(|i| rotate_start_seq(g, &p, i));
        let ends = (0..=(m.saturating_sub(3)) / 2)
            .filter(|_| m >= 3)
            .map(|i| rotate_end_seq(g, &p, i));
        for next in starts.chain(ends).filter_map(Result::ok) {
            if seen.contains(&next) {
                continue;
            }
            if seen.len() >= cap {
                truncated = true;
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
        paths.push(p);
    }
    Closure { paths, truncated }
}

/// A path with its parity classes and the derived sets used by the moves.
#[derive(Debug, Clone)]
pub struct RotationState<'g> {
    pub host: &'g OrientedGraph,
    pub path: AntipathWitness,
    /// Vertices at even positions `v_0, v_2, …, v_{m-1}`.
    pub even: Vec<VertexId>,
    /// Vertices at odd positions `v_1, v_3, …, v_m`.
    pub odd: Vec<VertexId>,
    /// Odd-position vertices that can be second on a rotation of the path.
    pub s_set: BTreeSet<VertexId>,
    /// Even-position vertices that can be penultimate on a rotation.
    pub p_set: BTreeSet<VertexId>,
    /// In-neighbours of `v_1` outside `{v_2, …, v_m}`.
    pub f_set: BTreeSet<VertexId>,
    pub closure_size: usize,
    pub closure_truncated: bool,
}

impl<'g> RotationState<'g> {
    pub fn build(g: &'g OrientedGraph, path: &AntipathWitness) -> Result<Self, RotationError> {
        Self::build_with_cap(g, path, DEFAULT_CLOSURE_CAP)
    }

    /// Reverses a backward-starting path so that `v_0 -> v_1`, then derives
    /// every set from scratch.
    pub fn build_with_cap(
        g: &'g OrientedGraph,
        path: &AntipathWitness,
        closure_cap: usize,
    ) -> Result<Self, RotationError> {
        path.revalidate(g)?;
        let m = path.len();
        if m.is_multiple_of(2) {
            return Err(RotationError::EvenLengthPath(m));
        }
        let path = path.oriented_forward().expect("odd paths orient forward");
        let seq = path.vertices();
        let even = seq.iter().step_by(2).copied().collect();
        let odd = seq.iter().skip(1).step_by(2).copied().collect();
        let tail: HashSet<VertexId> = seq[2..].iter().copied().collect();
        let f_set = g
            .in_neighbors(seq[1])
            .iter()
            .copied()
            .filter(|v| !tail.contains(v))
            .collect();

        let closure = rotation_closure(g, seq, closure_cap);
        let s_set = closure.paths.iter().map(|p| p[1]).collect();
        let p_set = closure.paths.iter().map(|p| p[m - 1]).collect();

        Ok(Self {
            host: g,
            path,
            even,
            odd,
            s_set,
            p_set,
            f_set,
            closure_size: closure.paths.len(),
            closure_truncated: closure.truncated,
        })
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn seq(&self) -> &[VertexId] {
        self.path.vertices()
    }

    /// Uses the chord `v_0 -> v_{2i+1}`, `0 < i < m/2`.
    pub fn rotate_start(&self, i: usize) -> Result<MoveOutcome, RotationError> {
        let out = rotate_start_seq(self.host, self.seq(), i)?;
        Ok(MoveOutcome::same_length(self.host, &out))
    }

    /// Uses the chord `v_{2i} -> v_m`, `0 <= i <= (m-3)/2`.
    pub fn rotate_end(&self, i: usize) -> Result<MoveOutcome, RotationError> {
        let out = rotate_end_seq(self.host, self.seq(), i)?;
        Ok(MoveOutcome::same_length(self.host, &out))
    }

    /// Rotation closure with an explicit cap.
    pub fn closure(&self, cap: usize) -> Closure {
        rotation_closure(self.host, self.seq(), cap)
    }

    /// Whether some arc runs from `v_0` into `P` or from `S` into `v_m`.
    pub fn has_endpoint_chord(&self) -> bool {
        let seq = self.seq();
        let (first, last) = (seq[0], seq[seq.len() - 1]);
        self.p_set.iter().any(|&p| self.host.has_arc(first, p))
            || self.s_set.iter().any(|&s| self.host.has_arc(s, last))
    }

    /// Same-length paths through `v_1`: with the chord `v_1 -> v_m`, the path
    /// `v_2 … v_m v_1 w` for each out-neighbour `w` of `v_1` off the path; and
    /// `w v_1 … v_m` for each in-neighbour `w` of `v_1` off the path.
    pub fn figure1_moves(&self) -> Vec<MoveOutcome> {
        let g = self.host;
        let seq = self.seq();
        let m = seq.len() - 1;
        let v1 = seq[1];
        let on_path: HashSet<VertexId> = seq.iter().copied().collect();
        let mut moves = Vec::new();
        if m >= 2 && g.has_arc(v1, seq[m]) {
            for &w in g.out_neighbors(v1) {
                if on_path.contains(&w) {
                    continue;
                }
                let mut out = seq[2..].to_vec();
                out.extend([v1, w]);
                moves.push(MoveOutcome::same_length(g, &out));
            }
        }
        for &w in g.in_neighbors(v1) {
            if on_path.contains(&w) {
                continue;
            }
            let mut out = vec![w];
            out.extend_from_slice(&seq[1..]);
            moves.push(MoveOutcome::same_length(g, &out));
        }
        moves
    }

    fn check_pair(&self, v: VertexId, w: VertexId, i: usize) -> Result<(), RotationError> {
        let m = self.len();
        check_index(i, 1, (m - 1) / 2)?;
        if v == w {
            return Err(RotationError::SameVertex(v));
        }
        for x in [v, w] {
            if !self.f_set.contains(&x) {
                return Err(RotationError::NotInF(x));
            }
        }
        Ok(())
    }

    /// With `v -> v_{2i}`, `w -> v_{2i+1}` and `w -> v_{2i-1}`:
    /// `v_{2i} v v_1 … v_{2i-1} w v_{2i+1} … v_m`.
    pub fn figure2_extension(
        &self,
        v: VertexId,
        w: VertexId,
        i: usize,
    ) -> Result<MoveOutcome, RotationError> {
        self.check_pair(v, w, i)?;
        let seq = self.seq();
        require_arc(self.host, v, seq[2 * i])?;
        require_arc(self.host, w, seq[2 * i + 1])?;
        require_arc(self.host, w, seq[2 * i - 1])?;
        let mut out = vec![seq[2 * i], v];
        out.extend_from_slice(&seq[1..2 * i]);
        out.push(w);
        out.extend_from_slice(&seq[2 * i + 1..]);
        Ok(MoveOutcome::extension(self.host, &out))
    }

    /// With `v -> v_{2i}`, `w -> v_{2i+1}` and `w -> v_{2i}`:
    /// `v_{2i-1} … v_1 v v_{2i} w v_{2i+1} … v_m`.
    pub fn figure3_extension(
        &self,
        v: VertexId,
        w: VertexId,
        i: usize,
    ) -> Result<MoveOutcome, RotationError> {
        self.check_pair(v, w, i)?;
        let seq = self.seq();
        require_arc(self.host, v, seq[2 * i])?;
        require_arc(self.host, w, seq[2 * i + 1])?;
        require_arc(self.host, w, seq[2 * i])?;
        let mut out: Vec<VertexId> = seq[1..2 * i].iter().rev().copied().collect();
        out.extend([v, seq[2 * i], w]);
        out.extend_from_slice(&seq[2 * i + 1..]);
        Ok(MoveOutcome::extension(self.host, &out))
    }

    /// Every applicable extension of the given family, ordered by `(i, v, w)`.
    fn all_extensions(&self, figure3: bool) -> Vec<MoveOutcome> {
        let m = self.len();
        let mut out = Vec::new();
        for i in 1..=(m - 1) / 2 {
            for &v in &self.f_set {
                for &w in &self.f_set {
                    if v == w {
                        continue;
                    }
                    let mv = if figure3 {
                        self.figure3_extension(v, w, i)
                    } else {
                        self.figure2_extension(v, w, i)
                    };
                    if let Ok(mv) = mv {
                        out.push(mv);
                    }
                }
            }
        }
        out
    }

    /// Checks the facts a longest antipath must satisfy, for target length `k`.
    pub fn audit_claims(&self, k: usize) -> AuditReport {
        audit(self, k)
    }
}

/// Paths one arc longer obtained by adding a vertex at either end,
/// lexicographically sorted.
pub fn endpoint_extensions(g: &OrientedGraph, path: &AntipathWitness) -> Vec<AntipathWitness> {
    let seq = path.vertices();
    let m = path.len();
    let on_path: HashSet<VertexId> = seq.iter().copied().collect();
    let mut out = Vec::new();

    let after = path.start_direction().at(m);
    let tail_nbrs = match after {
        Direction::Forward => g.out_neighbors(seq[m]),
        Direction::Backward => g.in_neighbors(seq[m]),
    };
    for &w in tail_nbrs.iter().filter(|w| !on_path.contains(w)) {
        let mut s = seq.to_vec();
        s.push(w);
        out.push(witness(g, &s));
    }
    // A new first vertex u must make `u v_0` alternate with the old first arc.
    let head_nbrs = match path.start_direction() {
        Direction::Forward => g.out_neighbors(seq[0]),
        Direction::Backward => g.in_neighbors(seq[0]),
    };
    for &u in head_nbrs.iter().filter(|u| !on_path.contains(u)) {
        let mut s = vec![u];
        s.extend_from_slice(seq);
        out.push(witness(g, &s));
    }
    out.sort();
    out
}

/// A simple starting path: the least arc, extended greedily at its tail with
/// the smallest admissible vertex.
pub fn greedy_antipath(g: &OrientedGraph) -> Option<AntipathWitness> {
    let (u, v) = g.arcs().next()?;
    let mut path = AntipathWitness::validate(g, &[u, v]).expect("single arc");
    loop {
        let m = path.len();
        let last = path.vertices()[m];
        let nbrs = match path.start_direction().at(m) {
            Direction::Forward => g.out_neighbors(last),
            Direction::Backward => g.in_neighbors(last),
        };
        let Some(&w) = nbrs.iter().find(|w| !path.contains(**w)) else {
            return Some(path);
        };
        let mut s = path.into_vertices();
        s.push(w);
        path = witness(g, &s);
    }
}

fn least(mut v: Vec<AntipathWitness>) -> Option<AntipathWitness> {
    v.sort();
    v.into_iter().next()
}

/// Same-length variants of an odd path, in exploration order: the path, its
/// `v_1` swaps, then its rotations, each rotation followed by its own swaps.
fn same_length_variants(
    g: &OrientedGraph,
    path: &AntipathWitness,
    cap: usize,
) -> Vec<AntipathWitness> {
    let Ok(state) = RotationState::build_with_cap(g, path, cap) else {
        return vec![path.clone()];
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |w: AntipathWitness, out: &mut Vec<AntipathWitness>| {
        if seen.insert(w.vertices().to_vec()) {
            out.push(w);
        }
    };
    push(state.path.clone(), &mut out);
    for mv in state.figure1_moves() {
        push(mv.result, &mut out);
    }
    for p in state.closure(cap).paths.into_iter().skip(1) {
        let rotated = witness(g, &p);
        let swaps = RotationState::build_with_cap(g, &rotated, 1)
            .map(|s| s.figure1_moves())
            .unwrap_or_default();
        push(rotated, &mut out);
        for mv in swaps {
            push(mv.result, &mut out);
        }
    }
    out
}

/// Lengthening moves on one odd path, in the order endpoint extension,
/// `figure3_extension`, `figure2_extension`. Returns the least result of the
/// first family that applies.
fn direct_lengthening(g: &OrientedGraph, path: &AntipathWitness) -> Option<AntipathWitness> {
    if let Some(w) = least(endpoint_extensions(g, path)) {
        return Some(w);
    }
    let state = RotationState::build_with_cap(g, path, 1).ok()?;
    for figure3 in [true, false] {
        let ext = state.all_extensions(figure3);
        if let Some(w) = least(ext.into_iter().map(|m| m.result).collect()) {
            return Some(w);
        }
    }
    None
}

fn lengthen(g: &OrientedGraph, path: &AntipathWitness, cap: usize) -> Option<AntipathWitness> {
    if path.len() % 2 == 1 {
        let variants = same_length_variants(g, path, cap);
        // Endpoint extensions of the path and its v_1 swaps come first.
        let first_swaps = 1 + RotationState::build_with_cap(g, path, 1)
            .map(|s| s.figure1_moves().len())
            .unwrap_or(0);
        for v in variants.iter().take(first_swaps) {
            if let Some(w) = least(endpoint_extensions(g, v)) {
                return Some(w);
            }
        }
        return variants.iter().find_map(|v| direct_lengthening(g, v));
    }

    if let Some(w) = least(endpoint_extensions(g, path)) {
        return Some(w);
    }
    // Even length: grow an odd sub-path by one through the machinery, then
    // look for an endpoint extension of the result.
    let seq = path.vertices();
    let m = path.len();
    for sub in [&seq[..m], &seq[1..]] {
        let sub = witness(g, sub);
        for v in same_length_variants(g, &sub, cap) {
            let Some(grown) = direct_lengthening(g, &v) else {
                continue;
            };
            if let Some(w) = least(endpoint_extensions(g, &grown)) {
                return Some(w);
            }
        }
    }
    None
}

/// Repeatedly applies lengthening moves until none applies. The result is
/// never shorter than `path` and always validates against `g`.
pub fn improve(
    g: &OrientedGraph,
    path: &AntipathWitness,
) -> Result<AntipathWitness, RotationError> {
    improve_with_cap(g, path, DEFAULT_CLOSURE_CAP)
}

pub fn improve_with_cap(
    g: &OrientedGraph,
    path: &AntipathWitness,
    cap: usize,
) -> Result<AntipathWitness, RotationError> {
    path.revalidate(g)?;
    let mut current = path.clone();
    while let Some(next) = lengthen(g, &current, cap) {
        debug_assert!(next.len() > current.len());
        current = next;
    }
    Ok(current)
}

/// One failed structural check on an audited path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "claim", rename_all = "kebab-case")]
pub enum Violation {
    /// `v -> v_{2i}`, `w -> v_{2i+1}` together with `w -> v_{2i-1}` or
    /// `w -> v_{2i}`; `longer` is the antipath this yields.
    ForbiddenPair {
        i: usize,
        v: VertexId,
        w: VertexId,
        target: VertexId,
        longer: AntipathWitness,
    },
    /// More arcs from F into `{v_{4i}, …, v_{4i+3}}` than allowed.
    QuadrupleBound { i: usize, arcs: usize, bound: usize },
    /// An arc from F to `v_0`; `longer` is `v_0 w v_1 … v_m`.
    ArcIntoFirstVertex {
        from: VertexId,
        longer: AntipathWitness,
    },
    /// An arc from F to `v_m`, closing the anticycle `w v_1 … v_m`.
    ArcIntoLastVertex {
        from: VertexId,
        cycle: AnticycleWitness,
    },
    /// An out-neighbour of F off the path; `longer` is `x w v_1 … v_m`.
    OutNeighborOffPath {
        from: VertexId,
        to: VertexId,
        longer: AntipathWitness,
    },
    /// `arcs_into_path > (k/2)|F| + (k-4)/4`, stated as
    /// `4 * arcs > 2k|F| + k - 4`.
    CountingUpperBound { arcs: usize, bound_times_four: i64 },
}

impl Violation {
    pub fn claim_id(&self) -> &'static str {
        match self {
            Violation::ForbiddenPair { .. } => "forbidden-pair",
            Violation::QuadrupleBound { .. } => "quadruple-bound",
            Violation::ArcIntoFirstVertex { .. } => "arc-into-first-vertex",
            Violation::ArcIntoLastVertex { .. } => "arc-into-last-vertex",
            Violation::OutNeighborOffPath { .. } => "out-neighbor-off-path",
            Violation::CountingUpperBound { .. } => "counting-upper-bound",
        }
    }

    /// Whether the violation comes with an explicit antipath one arc longer
    /// than the audited one.
    pub fn longer_path(&self) -> Option<&AntipathWitness> {
        match self {
            Violation::ForbiddenPair { longer, .. }
            | Violation::ArcIntoFirstVertex { longer, .. }
            | Violation::OutNeighborOffPath { longer, .. } => Some(longer),
            _ => None,
        }
    }
}

/// The counting argument on arcs leaving F.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingCheck {
    pub f_size: usize,
    /// Arcs from F into the path's vertex set.
    pub arcs_into_path: usize,
    /// Every out-neighbour of F lies on the path.
    pub out_closed: bool,
    /// `pd * |F|`, a lower bound on `arcs_into_path` when `out_closed`.
    pub lower_bound: usize,
    /// `2k|F| + k - 4`, four times the upper bound.
    pub upper_bound_times_four: i64,
    /// The upper bound is only derived for paths shorter than `k`.
    pub upper_bound_applies: bool,
    /// `out_closed` and `4 * lower_bound > upper_bound_times_four`.
    pub bounds_contradict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub path: AntipathWitness,
    pub length: usize,
    pub k: usize,
    pub pd: usize,
    pub f_set: Vec<VertexId>,
    pub s_set: Vec<VertexId>,
    pub p_set: Vec<VertexId>,
    /// An arc `v_0 -> P` or `S -> v_m` exists.
    pub endpoint_chord: bool,
    pub closure_truncated: bool,
    pub counting: CountingCheck,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn count(&self, claim: &str) -> usize {
        self.violations
            .iter()
            .filter(|v| v.claim_id() == claim)
            .count()
    }

    /// Violations that by themselves exhibit a longer antipath.
    pub fn maximality_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| v.longer_path().is_some())
    }
}

fn audit(st: &RotationState<'_>, k: usize) -> AuditReport {
    let g = st.host;
    let seq = st.seq();
    let m = seq.len() - 1;
    let pd = g.degree_profile().pd();
    let f: Vec<VertexId> = st.f_set.iter().copied().collect();
    let on_path: HashSet<VertexId> = seq.iter().copied().collect();
    let mut violations = Vec::new();

    for i in 1..=(m - 1) / 2 {
        for &v in &f {
            if !g.has_arc(v, seq[2 * i]) {
                continue;
            }
            for &w in &f {
                if w == v || !g.has_arc(w, seq[2 * i + 1]) {
                    continue;
                }
                if let Ok(mv) = st.figure2_extension(v, w, i) {
                    violations.push(Violation::ForbiddenPair {
                        i,
                        v,
                        w,
                        target: seq[2 * i - 1],
                        longer: mv.result,
                    });
                }
                if let Ok(mv) = st.figure3_extension(v, w, i) {
                    violations.push(Violation::ForbiddenPair {
                        i,
                        v,
                        w,
                        target: seq[2 * i],
                        longer: mv.result,
                    });
                }
            }
        }
    }

    let arcs_from_f = |block: &[VertexId]| -> usize {
        f.iter()
            .map(|&u| block.iter().filter(|&&x| g.has_arc(u, x)).count())
            .sum()
    };
    // The per-quadruple bounds rely on two distinct members of F.
    if f.len() >= 2 && m >= 3 {
        for i in 0..=(m - 3) / 4 {
            let arcs = arcs_from_f(&seq[4 * i..4 * i + 4]);
            let bound = if i == 0 { 2 * f.len() } else { 2 * f.len() + 1 };
            if arcs > bound {
                violations.push(Violation::QuadrupleBound { i, arcs, bound });
            }
        }
    }

    for &w in &f {
        if w != seq[0] && g.has_arc(w, seq[0]) {
            let mut s = vec![seq[0], w];
            s.extend_from_slice(&seq[1..]);
            violations.push(Violation::ArcIntoFirstVertex {
                from: w,
                longer: witness(g, &s),
            });
        }
        if m >= 3 && g.has_arc(w, seq[m]) {
            let mut s = vec![w];
            s.extend_from_slice(&seq[1..]);
            let cycle = AnticycleWitness::validate(g, &s)
                .unwrap_or_else(|e| panic!("closing arc should give an anticycle: {e}"));
            violations.push(Violation::ArcIntoLastVertex { from: w, cycle });
        }
        for &x in g.out_neighbors(w) {
            if !on_path.contains(&x) {
                let mut s = vec![x, w];
                s.extend_from_slice(&seq[1..]);
                violations.push(Violation::OutNeighborOffPath {
                    from: w,
                    to: x,
                    longer: witness(g, &s),
                });
            }
        }
    }

    let arcs_into_path = arcs_from_f(seq);
    let out_closed = f
        .iter()
        .all(|&u| g.out_neighbors(u).iter().all(|x| on_path.contains(x)));
    let f_size = f.len();
    let upper4 = 2 * k as i64 * f_size as i64 + k as i64 - 4;
    let lower_bound = pd * f_size;
    let upper_bound_applies = m < k;
    if upper_bound_applies && 4 * arcs_into_path as i64 > upper4 {
        violations.push(Violation::CountingUpperBound {
            arcs: arcs_into_path,
            bound_times_four: upper4,
        });
    }
    let counting = CountingCheck {
        f_size,
        arcs_into_path,
        out_closed,
        lower_bound,
        upper_bound_times_four: upper4,
        upper_bound_applies,
        bounds_contradict: out_closed && 4 * lower_bound as i64 > upper4,
    };

    AuditReport {
        path: st.path.clone(),
        length: m,
        k,
        pd,
        f_set: f,
        s_set: st.s_set.iter().copied().collect(),
        p_set: st.p_set.iter().copied().collect(),
        endpoint_chord: st.has_endpoint_chord(),
        closure_truncated: st.closure_truncated,
        counting,
        violations,
    }
}
