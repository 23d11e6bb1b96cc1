//! C ABI over `resolvekit`.
//!
//! Graphs cross the boundary as opaque `RkGraph` handles created by
//! [`rk_graph_parse`] or [`rk_graph_generate`] and released with
//! [`rk_graph_free`]. Every fallible call returns an [`RkStatus`]; on
//! failure [`rk_last_error_message`] describes the error for the calling
//! thread. Strings returned through out-parameters are owned by the caller
//! and must be released with [`rk_string_free`].
//!
//! Pointers must be non-null unless stated otherwise. Input strings are
//! NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use resolvekit::certificate::{construct_certificate, mu_certificate, Method};
use resolvekit::graph_file::{AnyGraph, GraphFile};
use resolvekit::metric::{exact_metric_dimension, resolves, SolverConfig};
use resolvekit::graph::all_pairs_distances;
use resolvekit::line_graph::{directed_line_graph, undirected_line_graph};
use resolvekit::topologies::{corollary_mu, generate, Family, TopologySpec};
use resolvekit::Error;

/// Status codes. Values 1 to 4 match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkStatus {
    Ok = 0,
    /// Input violates a precondition of the requested operation.
    Precondition = 1,
    /// Malformed graph text or unknown label.
    Parse = 2,
    /// Input is not (strongly) connected.
    Disconnected = 3,
    /// Exact search refused: too many vertices for the cap.
    CapExceeded = 4,
    NullArgument = 10,
    InvalidUtf8 = 11,
    /// A Rust panic was caught at the boundary.
    Internal = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkFamily {
    DeBruijn = 0,
    Kautz = 1,
    Flowered = 2,
    Complete = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RkMethod {
    Theorem1 = 0,
    SpanTree = 1,
    Tree = 2,
}

/// Opaque graph handle.
pub struct RkGraph {
    file: GraphFile,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> RkStatus {
    match err.exit_code() {
        2 => RkStatus::Parse,
        3 => RkStatus::Disconnected,
        4 => RkStatus::CapExceeded,
        _ => RkStatus::Precondition,
    }
}

enum Failure {
    Status(RkStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Core(err)
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(RkStatus::NullArgument, format!("`{what}` is null"))
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> RkStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => RkStatus::Ok,
        Ok(Err(Failure::Status(status, message))) => {
            set_last_error(&message);
            status
        }
        Ok(Err(Failure::Core(err))) => {
            set_last_error(&err.to_string());
            status_of(&err)
        }
        Err(_) => {
            set_last_error("internal panic");
            RkStatus::Internal
        }
    }
}

unsafe fn graph_ref<'a>(graph: *const RkGraph) -> Result<&'a RkGraph, Failure> {
    // SAFETY: caller passes a handle from rk_graph_parse/rk_graph_generate.
    unsafe { graph.as_ref() }.ok_or_else(|| null("graph"))
}

fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: non-null and, per the contract, writable.
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

fn family_of(family: RkFamily) -> Family {
    match family {
        RkFamily::DeBruijn => Family::DeBruijn,
        RkFamily::Kautz => Family::Kautz,
        RkFamily::Flowered => Family::FloweredComplete,
        RkFamily::Complete => Family::CompleteDigraph,
    }
}

/// Parses edge-list text into a new graph handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_graph_parse(text: *const c_char, out: *mut *mut RkGraph) -> RkStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: non-null, NUL-terminated per the contract.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| Failure::Status(RkStatus::InvalidUtf8, "text is not UTF-8".into()))?;
        let file = GraphFile::parse(text)?;
        write_out(out, Box::into_raw(Box::new(RkGraph { file })))
    })
}

/// Generates a topology. `n` is ignored for the flowered and complete
/// families.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_graph_generate(
    family: RkFamily,
    d: usize,
    n: usize,
    out: *mut *mut RkGraph,
) -> RkStatus {
    guard(|| {
        let topology = generate(TopologySpec {
            family: family_of(family),
            d,
            n,
        })?;
        let file = GraphFile::from_topology(&topology);
        write_out(out, Box::into_raw(Box::new(RkGraph { file })))
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rk_graph_free(graph: *mut RkGraph) {
    if !graph.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// # Safety
/// `graph` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn rk_graph_vertex_count(graph: *const RkGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.file.graph.order())
}

/// # Safety
/// `graph` must be a live handle or null (returns 0).
#[no_mangle]
pub unsafe extern "C" fn rk_graph_edge_count(graph: *const RkGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.file.graph.size())
}

/// # Safety
/// `graph` must be a live handle or null (returns false).
#[no_mangle]
pub unsafe extern "C" fn rk_graph_is_directed(graph: *const RkGraph) -> bool {
    unsafe { graph.as_ref() }.is_some_and(|g| g.file.graph.is_directed())
}

/// Canonical edge-list text of the graph.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_graph_to_text(graph: *const RkGraph, out: *mut *mut c_char) -> RkStatus {
    guard(|| {
        let g = unsafe { graph_ref(graph) }?;
        write_out(out, into_c_string(g.file.to_text()))
    })
}

fn solver(cap: usize) -> SolverConfig {
    SolverConfig::with_cap(cap)
}

/// Exact metric dimension of the graph, or of its line graph when `line`.
///
/// # Safety
/// `graph` must be a live handle; `out_mu` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_metric_dimension(
    graph: *const RkGraph,
    line: bool,
    cap: usize,
    out_mu: *mut usize,
) -> RkStatus {
    guard(|| {
        let g = unsafe { graph_ref(graph) }?;
        let config = solver(cap);
        let cert = match (&g.file.graph, line) {
            (AnyGraph::Undirected(u), false) => exact_metric_dimension(u, &config)?,
            (AnyGraph::Directed(d), false) => exact_metric_dimension(d, &config)?,
            (AnyGraph::Undirected(u), true) => {
                all_pairs_distances(u).require_connected()?;
                exact_metric_dimension(&undirected_line_graph(u)?.line, &config)?
            }
            (AnyGraph::Directed(d), true) => {
                all_pairs_distances(d).require_connected()?;
                exact_metric_dimension(&directed_line_graph(d)?.line, &config)?
            }
        };
        write_out(out_mu, cert.mu_claimed.unwrap_or(0))
    })
}

/// JSON certificate for the exact metric dimension (schema 1).
///
/// # Safety
/// `graph` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_mu_certificate_json(
    graph: *const RkGraph,
    line: bool,
    cap: usize,
    out_json: *mut *mut c_char,
) -> RkStatus {
    guard(|| {
        let g = unsafe { graph_ref(graph) }?;
        let cert = mu_certificate(&g.file, line, &solver(cap))?;
        write_out(out_json, into_c_string(cert.to_json()))
    })
}

/// JSON certificate for a line-graph construction (schema 1).
///
/// # Safety
/// `graph` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_construct_certificate_json(
    graph: *const RkGraph,
    method: RkMethod,
    cap: usize,
    out_json: *mut *mut c_char,
) -> RkStatus {
    guard(|| {
        let g = unsafe { graph_ref(graph) }?;
        let method = match method {
            RkMethod::Theorem1 => Method::Theorem1,
            RkMethod::SpanTree => Method::SpanTree,
            RkMethod::Tree => Method::Tree,
        };
        let cert = construct_certificate(&g.file, method, &solver(cap))?;
        write_out(out_json, into_c_string(cert.to_json()))
    })
}

/// Whether `landmarks[0..len]` resolves the graph (vertex ids) or its line
/// graph (edge ids) when `line`.
///
/// # Safety
/// `graph` must be a live handle; `landmarks` must point to `len` readable
/// values; `out_resolving` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_is_resolving(
    graph: *const RkGraph,
    landmarks: *const usize,
    len: usize,
    line: bool,
    out_resolving: *mut bool,
) -> RkStatus {
    guard(|| {
        let g = unsafe { graph_ref(graph) }?;
        if landmarks.is_null() {
            return Err(null("landmarks"));
        }
        // SAFETY: non-null and `len` elements long per the contract.
        let ids = unsafe { std::slice::from_raw_parts(landmarks, len) };
        let dm = match (&g.file.graph, line) {
            (AnyGraph::Undirected(u), false) => all_pairs_distances(u),
            (AnyGraph::Directed(d), false) => all_pairs_distances(d),
            (AnyGraph::Undirected(u), true) => all_pairs_distances(&undirected_line_graph(u)?.line),
            (AnyGraph::Directed(d), true) => all_pairs_distances(&directed_line_graph(d)?.line),
        };
        dm.require_connected()?;
        write_out(out_resolving, resolves(&dm, ids)?.resolving)
    })
}

/// Closed-form metric dimension of `B(d, n)` or `K(d, n)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn rk_corollary_mu(
    family: RkFamily,
    d: usize,
    n: usize,
    out: *mut usize,
) -> RkStatus {
    guard(|| write_out(out, corollary_mu(family_of(family), d, n)?))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn rk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rk_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}
