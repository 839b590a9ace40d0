//! C ABI over `fibdim`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `_free` function. Every fallible call returns a
//! [`FibdimStatus`]; on failure [`fibdim_last_error`] describes the cause.
//! Strings returned by the library must be released with
//! [`fibdim_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use fibdim::approx::{fdim_approx_3_2, ldim};
use fibdim::bits::BitRows;
use fibdim::embedding_io::{EmbeddingFile, Target};
use fibdim::exact::fdim_exact_with;
use fibdim::graph::{distance_matrix, parse_edge_list, parse_graph6, Graph};
use fibdim::{idim, Error};

/// Result codes. The first five agree with the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FibdimStatus {
    Ok = 0,
    Parse = 1,
    NotPartialCube = 2,
    ResourceCap = 3,
    Verification = 4,
    InvalidArgument = 5,
    NullPointer = 6,
    Panic = 7,
}

/// An undirected simple graph.
pub struct FibdimGraph {
    graph: Graph,
}

/// A certified isometric embedding into a Fibonacci cube.
pub struct FibdimEmbedding {
    labels: BitRows,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> FibdimStatus {
    match e {
        Error::EdgeList { .. } | Error::Graph6 { .. } | Error::EmbeddingFormat(_) | Error::Io(_) => FibdimStatus::Parse,
        Error::NotPartialCube { .. } => FibdimStatus::NotPartialCube,
        Error::ResourceCap { .. } => FibdimStatus::ResourceCap,
        Error::Verification(_) => FibdimStatus::Verification,
        Error::InvalidArgument(_) | Error::InvalidPathSystem(_) => FibdimStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), FibdimStatus>) -> FibdimStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FibdimStatus::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            FibdimStatus::Panic
        }
    }
}

fn fail(e: Error) -> FibdimStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> FibdimStatus {
    set_error(format!("{what} is null"));
    FibdimStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const FibdimGraph) -> Result<&'a Graph, FibdimStatus> {
    unsafe { g.as_ref() }.map(|g| &g.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), FibdimStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the most recent failure on this thread, or null. Valid
/// until the next library call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn fibdim_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn fibdim_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses a NUL-terminated edge list (`u v` per line, `#` comments).
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibdim_graph_from_edge_list(text: *const c_char, out: *mut *mut FibdimGraph) -> FibdimStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| fail(Error::EdgeList { line: 0, message: format!("not UTF-8: {e}") }))?;
        let graph = parse_edge_list(text).map_err(fail)?;
        unsafe { write_out(out, Box::into_raw(Box::new(FibdimGraph { graph }))) }
    })
}

/// Parses one graph6 record of `len` bytes.
///
/// # Safety
/// `data` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibdim_graph_from_graph6(data: *const u8, len: usize, out: *mut *mut FibdimGraph) -> FibdimStatus {
    guard(|| {
        if data.is_null() {
            return Err(null("data"));
        }
        let bytes = unsafe { std::slice::from_raw_parts(data, len) };
        let graph = parse_graph6(bytes).map_err(fail)?;
        unsafe { write_out(out, Box::into_raw(Box::new(FibdimGraph { graph }))) }
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn fibdim_graph_free(g: *mut FibdimGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_graph_vertex_count(g: *const FibdimGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.graph.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_graph_edge_count(g: *const FibdimGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.graph.edge_count())
}

/// Isometric dimension (number of Θ-classes).
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibdim_idim(g: *const FibdimGraph, out: *mut usize) -> FibdimStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let k = idim(g).map_err(fail)?;
        unsafe { write_out(out, k) }
    })
}

/// Lattice dimension.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fibdim_ldim(g: *const FibdimGraph, out: *mut usize) -> FibdimStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let l = ldim(g).map_err(fail)?;
        unsafe { write_out(out, l) }
    })
}

unsafe fn finish(
    labels: BitRows,
    dimension: usize,
    out_dim: *mut usize,
    out_embedding: *mut *mut FibdimEmbedding,
) -> Result<(), FibdimStatus> {
    unsafe { write_out(out_dim, dimension) }?;
    if !out_embedding.is_null() {
        unsafe { out_embedding.write(Box::into_raw(Box::new(FibdimEmbedding { labels }))) };
    }
    Ok(())
}

/// Exact Fibonacci dimension. Fails with `RESOURCE_CAP` when the graph has
/// more than `max_k` Θ-classes. If `out_embedding` is non-null it receives
/// a certified embedding handle.
///
/// # Safety
/// `g` must be a live graph handle; `out_dim` must be writable;
/// `out_embedding` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn fibdim_fdim_exact(
    g: *const FibdimGraph,
    max_k: usize,
    out_dim: *mut usize,
    out_embedding: *mut *mut FibdimEmbedding,
) -> FibdimStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let sol = fdim_exact_with(g, &distance_matrix(g), max_k).map_err(fail)?;
        unsafe { finish(sol.embedding.labels().clone(), sol.dimension, out_dim, out_embedding) }
    })
}

/// Dimension `f'` of the matching-based embedding; `f' <= 3/2 fdim`.
///
/// # Safety
/// As for [`fibdim_fdim_exact`].
#[no_mangle]
pub unsafe extern "C" fn fibdim_fdim_approx(
    g: *const FibdimGraph,
    out_dim: *mut usize,
    out_embedding: *mut *mut FibdimEmbedding,
) -> FibdimStatus {
    guard(|| {
        let g = unsafe { graph_ref(g) }?;
        let sol = fdim_approx_3_2(g).map_err(fail)?;
        unsafe { finish(sol.embedding.labels().clone(), sol.dimension, out_dim, out_embedding) }
    })
}

/// # Safety
/// `e` must be null or a live embedding handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_embedding_dimension(e: *const FibdimEmbedding) -> usize {
    unsafe { e.as_ref() }.map_or(0, |e| e.labels.cols())
}

/// # Safety
/// `e` must be null or a live embedding handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_embedding_vertex_count(e: *const FibdimEmbedding) -> usize {
    unsafe { e.as_ref() }.map_or(0, |e| e.labels.rows())
}

/// Label of vertex `v` as a `'0'`/`'1'` string, leftmost character first
/// coordinate. Null on error; free with [`fibdim_string_free`].
///
/// # Safety
/// `e` must be a live embedding handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_embedding_label(e: *const FibdimEmbedding, v: usize) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let e = unsafe { e.as_ref() }.ok_or_else(|| null("embedding"))?;
        if v >= e.labels.rows() {
            return Err(fail(Error::InvalidArgument(format!(
                "vertex {v} out of range for {} vertices",
                e.labels.rows()
            ))));
        }
        result = into_c_string(e.labels.row_string(v));
        Ok(())
    });
    result
}

/// The embedding in the CLI's JSON format. Null on error; free with
/// [`fibdim_string_free`].
///
/// # Safety
/// `e` must be a live embedding handle.
#[no_mangle]
pub unsafe extern "C" fn fibdim_embedding_to_json(e: *const FibdimEmbedding) -> *mut c_char {
    let mut result = ptr::null_mut();
    guard(|| {
        let e = unsafe { e.as_ref() }.ok_or_else(|| null("embedding"))?;
        result = into_c_string(EmbeddingFile::from_rows(Target::Fibonacci, &e.labels).to_json());
        Ok(())
    });
    result
}

/// # Safety
/// `e` must come from this library and not be freed twice. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn fibdim_embedding_free(e: *mut FibdimEmbedding) {
    if !e.is_null() {
        drop(unsafe { Box::from_raw(e) });
    }
}

/// # Safety
/// `s` must be a string returned by this library, or null.
#[no_mangle]
pub unsafe extern "C" fn fibdim_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}
