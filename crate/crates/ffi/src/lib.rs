//! C ABI over the `antipath` library.
//!
//! Graphs are opaque `ApGraph` handles created by `ap_graph_new`,
//! `ap_graph_parse_edge_list` or one of the generators, and released with
//! `ap_graph_free`. Every fallible call returns an `ApStatus`; outputs go
//! through caller-provided pointers. Vertex sequences are written into
//! caller buffers: if the buffer is too small the required length is still
//! stored and `AP_STATUS_BUFFER_TOO_SMALL` is returned. Strings returned by the
//! library must be released with `ap_string_free`.
//!
//! No call unwinds across the boundary; a panic inside the library is
//! reported as `AP_STATUS_INTERNAL_ERROR`.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use antipath::antiwalk::{AntipathWitness, Direction, WalkError};
use antipath::constructions::{self, ConstructionError};
use antipath::graph::{GraphError, OrientedGraph};
use antipath::{oracle, rotation};

/// Opaque graph handle.
pub struct ApGraph {
    inner: OrientedGraph,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApStatus {
    Ok = 0,
    NullPointer = 1,
    SelfLoop = 2,
    DuplicateArc = 3,
    AntiparallelArc = 4,
    VertexOutOfRange = 5,
    ParseError = 6,
    InvalidArgument = 7,
    NotFound = 8,
    BufferTooSmall = 9,
    InvalidPath = 10,
    Utf8Error = 11,
    InternalError = 12,
}

impl From<GraphError> for ApStatus {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::SelfLoop(_) => ApStatus::SelfLoop,
            GraphError::DuplicateArc(..) => ApStatus::DuplicateArc,
            GraphError::AntiparallelArc(..) => ApStatus::AntiparallelArc,
            GraphError::VertexOutOfRange { .. } => ApStatus::VertexOutOfRange,
            GraphError::MissingArc(..) => ApStatus::InvalidArgument,
        }
    }
}

impl From<ConstructionError> for ApStatus {
    fn from(_: ConstructionError) -> Self {
        ApStatus::InvalidArgument
    }
}

impl From<WalkError> for ApStatus {
    fn from(_: WalkError) -> Self {
        ApStatus::InvalidPath
    }
}

fn guard<F>(f: F) -> ApStatus
where
    F: FnOnce() -> Result<(), ApStatus>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ApStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => ApStatus::InternalError,
    }
}

unsafe fn graph_ref<'a>(g: *const ApGraph) -> Result<&'a OrientedGraph, ApStatus> {
    // SAFETY: caller passes a live handle or null.
    unsafe { g.as_ref() }
        .map(|h| &h.inner)
        .ok_or(ApStatus::NullPointer)
}

unsafe fn store_graph(out: *mut *mut ApGraph, g: OrientedGraph) -> Result<(), ApStatus> {
    if out.is_null() {
        return Err(ApStatus::NullPointer);
    }
    let handle = Box::into_raw(Box::new(ApGraph { inner: g }));
    // SAFETY: `out` is non-null and points to writable storage per the contract.
    unsafe { *out = handle };
    Ok(())
}

unsafe fn read_seq<'a>(seq: *const usize, len: usize) -> Result<&'a [usize], ApStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if seq.is_null() {
        return Err(ApStatus::NullPointer);
    }
    // SAFETY: caller guarantees `len` readable elements at `seq`.
    Ok(unsafe { std::slice::from_raw_parts(seq, len) })
}

/// Writes a witness to `(buf, cap)`, its vertex count to `len_out` and its
/// start direction (1 forward, 0 backward) to `start_forward` if non-null.
unsafe fn write_witness(
    w: &AntipathWitness,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
    start_forward: *mut c_int,
) -> Result<(), ApStatus> {
    if len_out.is_null() {
        return Err(ApStatus::NullPointer);
    }
    let vs = w.vertices();
    // SAFETY: `len_out` is non-null and writable.
    unsafe { *len_out = vs.len() };
    if !start_forward.is_null() {
        // SAFETY: checked non-null.
        unsafe { *start_forward = c_int::from(w.start_direction() == Direction::Forward) };
    }
    if cap < vs.len() {
        return Err(ApStatus::BufferTooSmall);
    }
    if buf.is_null() {
        return Err(ApStatus::NullPointer);
    }
    // SAFETY: `buf` holds at least `cap >= vs.len()` elements.
    unsafe { ptr::copy_nonoverlapping(vs.as_ptr(), buf, vs.len()) };
    Ok(())
}

/// New graph on `n` isolated vertices. Never null.
#[no_mangle]
pub extern "C" fn ap_graph_new(n: usize) -> *mut ApGraph {
    Box::into_raw(Box::new(ApGraph {
        inner: OrientedGraph::new(n),
    }))
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_free(g: *mut ApGraph) {
    if !g.is_null() {
        // SAFETY: handle originated from Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Adds the arc `u -> v`.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_add_arc(g: *mut ApGraph, u: usize, v: usize) -> ApStatus {
    guard(|| {
        // SAFETY: caller passes a live handle or null.
        let h = unsafe { g.as_mut() }.ok_or(ApStatus::NullPointer)?;
        h.inner.add_arc(u, v).map_err(ApStatus::from)
    })
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_has_arc(g: *const ApGraph, u: usize, v: usize) -> bool {
    // SAFETY: forwarded contract.
    unsafe { graph_ref(g) }.is_ok_and(|g| g.has_arc(u, v))
}

/// # Safety
/// `g` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn ap_graph_vertex_count(g: *const ApGraph) -> usize {
    // SAFETY: forwarded contract.
    unsafe { graph_ref(g) }.map_or(0, |g| g.vertex_count())
}

/// # Safety
/// `g` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn ap_graph_arc_count(g: *const ApGraph) -> usize {
    // SAFETY: forwarded contract.
    unsafe { graph_ref(g) }.map_or(0, |g| g.arc_count())
}

/// Parses the edge-list format (`n m` then `m` lines `u v`). On a parse error
/// the offending 1-based line number is stored in `error_line` if non-null.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_parse_edge_list(
    text: *const c_char,
    out: *mut *mut ApGraph,
    error_line: *mut usize,
) -> ApStatus {
    guard(|| {
        if text.is_null() {
            return Err(ApStatus::NullPointer);
        }
        // SAFETY: caller guarantees a NUL-terminated string.
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| ApStatus::Utf8Error)?;
        match s.parse::<OrientedGraph>() {
            // SAFETY: forwarded contract on `out`.
            Ok(g) => unsafe { store_graph(out, g) },
            Err(e) => {
                if !error_line.is_null() {
                    // SAFETY: checked non-null.
                    unsafe { *error_line = e.line };
                }
                Err(ApStatus::ParseError)
            }
        }
    })
}

/// Minimum semidegree and minimum pseudo-semidegree. Either output may be null.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_degree_stats(
    g: *const ApGraph,
    min_semidegree: *mut usize,
    min_pseudo_semidegree: *mut usize,
) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        let p = g.degree_profile();
        // SAFETY: each pointer is checked before writing.
        unsafe {
            if let Some(x) = min_semidegree.as_mut() {
                *x = p.min_semidegree;
            }
            if let Some(x) = min_pseudo_semidegree.as_mut() {
                *x = p.min_pseudo_semidegree;
            }
        }
        Ok(())
    })
}

/// The graph with every arc reversed, as a new handle.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_reverse(g: *const ApGraph, out: *mut *mut ApGraph) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        // SAFETY: forwarded contract.
        unsafe { store_graph(out, g.reverse()) }
    })
}

/// Graphviz DOT text; `highlight` (may be null when `highlight_len` is 0)
/// is drawn in red. Release with `ap_string_free`. Null on error.
///
/// # Safety
/// `g` must be a live handle; `highlight` must hold `highlight_len` elements.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_to_dot(
    g: *const ApGraph,
    highlight: *const usize,
    highlight_len: usize,
) -> *mut c_char {
    let result = catch_unwind(AssertUnwindSafe(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }.ok()?;
        // SAFETY: forwarded contract.
        let hl = unsafe { read_seq(highlight, highlight_len) }.ok()?;
        let dot = g.to_dot((!hl.is_empty()).then_some(hl));
        CString::new(dot).ok().map(CString::into_raw)
    }));
    result.ok().flatten().unwrap_or(ptr::null_mut())
}

/// Edge-list text of the graph. Release with `ap_string_free`.
///
/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ap_graph_to_edge_list(g: *const ApGraph) -> *mut c_char {
    // SAFETY: forwarded contract.
    match unsafe { graph_ref(g) } {
        Ok(g) => CString::new(g.to_edge_list()).map_or(ptr::null_mut(), CString::into_raw),
        Err(_) => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ap_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Blow-up of the directed `ell`-cycle with blobs of size `b`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_cycle_blowup(ell: usize, b: usize, out: *mut *mut ApGraph) -> ApStatus {
    guard(|| {
        let g = constructions::cycle_blowup(ell, b)?;
        // SAFETY: forwarded contract.
        unsafe { store_graph(out, g) }
    })
}

/// Seeded random oriented graph, see the library documentation for the
/// generator.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_random_oriented_graph(
    n: usize,
    p: f64,
    seed: u64,
    out: *mut *mut ApGraph,
) -> ApStatus {
    guard(|| {
        let g = constructions::random_oriented_graph(n, p, seed)?;
        // SAFETY: forwarded contract.
        unsafe { store_graph(out, g) }
    })
}

/// Seeded random graph with minimum pseudo-semidegree at least `d`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_random_with_min_pd(
    n: usize,
    d: usize,
    seed: u64,
    max_attempts: usize,
    out: *mut *mut ApGraph,
) -> ApStatus {
    guard(|| {
        let g = constructions::random_with_min_pd(n, d, seed, max_attempts)?;
        // SAFETY: forwarded contract.
        unsafe { store_graph(out, g) }
    })
}

/// `(k - 1 + sqrt(k - 3)) / 2`, for `k >= 4`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_threshold(k: usize, out: *mut f64) -> ApStatus {
    guard(|| {
        let t = constructions::threshold(k)?;
        // SAFETY: checked non-null.
        *unsafe { out.as_mut() }.ok_or(ApStatus::NullPointer)? = t;
        Ok(())
    })
}

/// Smallest integer strictly above `ap_threshold(k)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_integer_threshold(k: usize, out: *mut usize) -> ApStatus {
    guard(|| {
        let t = constructions::integer_threshold(k)?;
        // SAFETY: checked non-null.
        *unsafe { out.as_mut() }.ok_or(ApStatus::NullPointer)? = t;
        Ok(())
    })
}

/// Writes a longest antipath (lexicographically least) into `buf`.
/// `AP_STATUS_NOT_FOUND` if the graph has no arcs.
///
/// # Safety
/// `g` must be a live handle, `buf` must hold `cap` elements, `len_out`
/// must be writable, `start_forward` may be null.
#[no_mangle]
pub unsafe extern "C" fn ap_longest_antipath(
    g: *const ApGraph,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
    start_forward: *mut c_int,
) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        let w = oracle::longest_antipath(g).ok_or(ApStatus::NotFound)?;
        // SAFETY: forwarded contract.
        unsafe { write_witness(&w, buf, cap, len_out, start_forward) }
    })
}

/// Looks for an antipath with `k` arcs. `shape` is 0 for any, 1 for a
/// forward first arc, -1 for a backward first arc. `AP_STATUS_NOT_FOUND` if absent.
///
/// # Safety
/// As for `ap_longest_antipath`.
#[no_mangle]
pub unsafe extern "C" fn ap_find_antipath(
    g: *const ApGraph,
    k: usize,
    shape: c_int,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
    start_forward: *mut c_int,
) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        let shape = match shape {
            0 => None,
            1 => Some(Direction::Forward),
            -1 => Some(Direction::Backward),
            _ => return Err(ApStatus::InvalidArgument),
        };
        let w = oracle::contains_antipath_of_length(g, k, shape).ok_or(ApStatus::NotFound)?;
        // SAFETY: forwarded contract.
        unsafe { write_witness(&w, buf, cap, len_out, start_forward) }
    })
}

/// `AP_STATUS_OK` if `seq` is an antipath of the graph, `AP_STATUS_INVALID_PATH` otherwise.
///
/// # Safety
/// `g` must be a live handle; `seq` must hold `len` elements.
#[no_mangle]
pub unsafe extern "C" fn ap_validate_antipath(
    g: *const ApGraph,
    seq: *const usize,
    len: usize,
) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        // SAFETY: forwarded contract.
        let seq = unsafe { read_seq(seq, len) }?;
        AntipathWitness::validate(g, seq)?;
        Ok(())
    })
}

/// Number of arcs of the longest anticycle, 0 if there is none.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ap_longest_anticycle_len(g: *const ApGraph, out: *mut usize) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        let len = oracle::longest_anticycle(g).map_or(0, |c| c.len());
        // SAFETY: checked non-null.
        *unsafe { out.as_mut() }.ok_or(ApStatus::NullPointer)? = len;
        Ok(())
    })
}

/// Runs the rotation-extension heuristic from the antipath `seq` and writes
/// the result (never shorter than `seq`).
///
/// # Safety
/// `g` must be a live handle; `seq` must hold `len` elements; outputs as for
/// `ap_longest_antipath`.
#[no_mangle]
pub unsafe extern "C" fn ap_improve(
    g: *const ApGraph,
    seq: *const usize,
    len: usize,
    buf: *mut usize,
    cap: usize,
    len_out: *mut usize,
    start_forward: *mut c_int,
) -> ApStatus {
    guard(|| {
        // SAFETY: forwarded contract.
        let g = unsafe { graph_ref(g) }?;
        // SAFETY: forwarded contract.
        let seq = unsafe { read_seq(seq, len) }?;
        let start = AntipathWitness::validate(g, seq)?;
        let w = rotation::improve(g, &start).map_err(|_| ApStatus::InvalidPath)?;
        // SAFETY: forwarded contract.
        unsafe { write_witness(&w, buf, cap, len_out, start_forward) }
    })
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn ap_status_message(status: ApStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ApStatus::Ok => c"ok",
        ApStatus::NullPointer => c"null pointer argument",
        ApStatus::SelfLoop => c"self-loop",
        ApStatus::DuplicateArc => c"arc already present",
        ApStatus::AntiparallelArc => c"reverse arc present; oriented graphs forbid 2-cycles",
        ApStatus::VertexOutOfRange => c"vertex out of range",
        ApStatus::ParseError => c"edge-list parse error",
        ApStatus::InvalidArgument => c"invalid argument",
        ApStatus::NotFound => c"not found",
        ApStatus::BufferTooSmall => c"output buffer too small",
        ApStatus::InvalidPath => c"sequence is not an antipath of the graph",
        ApStatus::Utf8Error => c"input is not valid UTF-8",
        ApStatus::InternalError => c"internal error",
    };
    s.as_ptr()
}
