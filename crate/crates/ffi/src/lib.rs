//! C interface to `unicwd`.
//!
//! Graphs and expressions cross the boundary as opaque handles that the
//! caller frees with the matching `_free` function. Every fallible call
//! returns a [`UnicwdStatus`]; on failure `unicwd_last_error_message`
//! describes the most recent error on the calling thread. Strings handed
//! out by the library are released with `unicwd_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use unicwd::catalog::is_unigraph;
use unicwd::edgelist::{parse_edge_list, write_edge_list};
use unicwd::solve::{solve, Problem};
use unicwd::synth::synthesize;
use unicwd::{Graph, KExpr, OracleError, SynthError};

/// Result codes of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnicwdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotUnigraph = 4,
    SizeGuard = 5,
    InvalidArgument = 6,
    Internal = 7,
}

/// Problems accepted by `unicwd_solve`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnicwdProblem {
    Mis = 0,
    Vc = 1,
    Ds = 2,
}

/// Opaque graph handle.
pub struct UnicwdGraph(Graph);

/// Opaque k-expression handle.
pub struct UnicwdExpr(KExpr);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("no interior nul")));
}

fn fail(status: UnicwdStatus, msg: impl Into<String>) -> UnicwdStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning panics into `Internal`.
fn guarded(f: impl FnOnce() -> UnicwdStatus) -> UnicwdStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(UnicwdStatus::Internal, "internal error"),
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, UnicwdStatus> {
    if s.is_null() {
        return Err(fail(UnicwdStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(UnicwdStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

fn give_string(s: String, out: *mut *mut c_char) {
    let c = CString::new(s.replace('\0', " ")).expect("no interior nul");
    // SAFETY: callers checked `out` for null.
    unsafe { *out = c.into_raw() };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(UnicwdStatus::NullPointer, concat!("null pointer: ", stringify!($p)));
        })+
    };
}

fn oracle_status(e: OracleError) -> UnicwdStatus {
    match e {
        OracleError::Expr(e) => fail(UnicwdStatus::Parse, e.to_string()),
        other => fail(UnicwdStatus::SizeGuard, other.to_string()),
    }
}

/// Parses an edge list. On success `*out` owns a new graph.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn unicwd_graph_parse(text: *const c_char, out: *mut *mut UnicwdGraph) -> UnicwdStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_edge_list(text) {
            Ok(g) => {
                *out = Box::into_raw(Box::new(UnicwdGraph(g)));
                UnicwdStatus::Ok
            }
            Err(e) => fail(UnicwdStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn unicwd_graph_free(g: *mut UnicwdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_graph_counts(
    g: *const UnicwdGraph,
    vertices: *mut usize,
    edges: *mut usize,
) -> UnicwdStatus {
    guarded(|| {
        non_null!(g, vertices, edges);
        *vertices = (*g).0.vertex_count();
        *edges = (*g).0.edge_count();
        UnicwdStatus::Ok
    })
}

/// Writes the graph as an edge list with sorted vertices and edges.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_graph_to_string(g: *const UnicwdGraph, out: *mut *mut c_char) -> UnicwdStatus {
    guarded(|| {
        non_null!(g, out);
        give_string(write_edge_list(&(*g).0), out);
        UnicwdStatus::Ok
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_graph_is_unigraph(g: *const UnicwdGraph, out: *mut bool) -> UnicwdStatus {
    guarded(|| {
        non_null!(g, out);
        *out = is_unigraph(&(*g).0).is_some();
        UnicwdStatus::Ok
    })
}

/// Builds an expression with at most five labels for a unigraph.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_synthesize(g: *const UnicwdGraph, out: *mut *mut UnicwdExpr) -> UnicwdStatus {
    guarded(|| {
        non_null!(g, out);
        match synthesize(&(*g).0) {
            Ok((e, _)) => {
                *out = Box::into_raw(Box::new(UnicwdExpr(e)));
                UnicwdStatus::Ok
            }
            Err(e @ (SynthError::NotUnigraph { .. } | SynthError::EmptyGraph)) => {
                fail(UnicwdStatus::NotUnigraph, e.to_string())
            }
            Err(e) => fail(UnicwdStatus::Internal, e.to_string()),
        }
    })
}

/// Parses and validates an expression.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn unicwd_expr_parse(text: *const c_char, out: *mut *mut UnicwdExpr) -> UnicwdStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let e = match text.parse::<KExpr>() {
            Ok(e) => e,
            Err(e) => return fail(UnicwdStatus::Parse, e.to_string()),
        };
        if let Err(err) = e.validate() {
            return fail(UnicwdStatus::Parse, err.to_string());
        }
        *out = Box::into_raw(Box::new(UnicwdExpr(e)));
        UnicwdStatus::Ok
    })
}

/// # Safety
/// `e` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn unicwd_expr_free(e: *mut UnicwdExpr) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_expr_to_string(e: *const UnicwdExpr, out: *mut *mut c_char) -> UnicwdStatus {
    guarded(|| {
        non_null!(e, out);
        give_string((*e).0.to_string(), out);
        UnicwdStatus::Ok
    })
}

/// Number of distinct labels.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_expr_width(e: *const UnicwdExpr, out: *mut usize) -> UnicwdStatus {
    guarded(|| {
        non_null!(e, out);
        *out = (*e).0.width();
        UnicwdStatus::Ok
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn unicwd_expr_evaluate(e: *const UnicwdExpr, out: *mut *mut UnicwdGraph) -> UnicwdStatus {
    guarded(|| {
        non_null!(e, out);
        match (*e).0.evaluate() {
            Ok(lg) => {
                *out = Box::into_raw(Box::new(UnicwdGraph(lg.into_graph())));
                UnicwdStatus::Ok
            }
            Err(err) => fail(UnicwdStatus::Parse, err.to_string()),
        }
    })
}

/// Solves `problem` over the expression. `witness` may be null; otherwise
/// it receives the comma-separated sorted vertex names of a solution.
///
/// # Safety
/// `e` and `value` must be valid; `witness` valid or null.
#[no_mangle]
pub unsafe extern "C" fn unicwd_solve(
    e: *const UnicwdExpr,
    problem: u32,
    value: *mut usize,
    witness: *mut *mut c_char,
) -> UnicwdStatus {
    guarded(|| {
        non_null!(e, value);
        let problem = match problem {
            p if p == UnicwdProblem::Mis as u32 => Problem::Mis,
            p if p == UnicwdProblem::Vc as u32 => Problem::Vc,
            p if p == UnicwdProblem::Ds as u32 => Problem::Ds,
            other => return fail(UnicwdStatus::InvalidArgument, format!("unknown problem code {other}")),
        };
        match solve(problem, &(*e).0) {
            Ok(s) => {
                *value = s.value;
                if !witness.is_null() {
                    give_string(s.witness.join(","), witness);
                }
                UnicwdStatus::Ok
            }
            Err(err) => oracle_status(err),
        }
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn unicwd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn unicwd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
