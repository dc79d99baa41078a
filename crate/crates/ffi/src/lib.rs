//! C interface to the firebreak library.
//!
//! Graphs and orientations are opaque handles created by `fb_*_new` style
//! functions and released with the matching `fb_*_free`. Every fallible
//! function returns an [`FbStatus`]; on failure, [`fb_last_error`] gives a
//! message for the calling thread. Strings handed out by the library are
//! NUL-terminated JSON and must be released with [`fb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Duration;

use firebreak::bounds::{self, BoundHints};
use firebreak::game::{self, make_strategy, StrategyParams};
use firebreak::graph::generate::{self, FamilyParams};
use firebreak::graph::io;
use firebreak::orient::{self, RecipeParams};
use firebreak::solver::{self, SolveReport, SolverConfig};
use firebreak::verify::{self, VerifyOptions};
use firebreak::{Error, Graph, Orientation};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    InvalidGraph = 4,
    Parse = 5,
    Unknown = 6,
    Precondition = 7,
    StrategyFault = 8,
    SizeLimit = 9,
    Io = 10,
    Panic = 11,
}

/// An undirected graph.
pub struct FbGraph(Graph);

/// An orientation of a graph.
pub struct FbOrientation(Orientation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FbStatus {
    match e {
        Error::Parse { .. } => FbStatus::Parse,
        Error::InvalidGraph(_) => FbStatus::InvalidGraph,
        Error::InvalidParams(_) => FbStatus::InvalidArgument,
        Error::Unknown { .. } => FbStatus::Unknown,
        Error::Precondition { .. } => FbStatus::Precondition,
        Error::StrategyFault { .. } => FbStatus::StrategyFault,
        Error::SizeLimit { .. } => FbStatus::SizeLimit,
        Error::Io(_) => FbStatus::Io,
    }
}

struct Fail(FbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Outcome = Result<(), Fail>;

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Outcome) -> FbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FbStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            FbStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(FbStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(FbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Outcome {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome {
    let c = CString::new(s).map_err(|_| Fail(FbStatus::Panic, "output contains NUL".into()))?;
    put(out, c.into_raw(), "out_json")
}

fn optional(v: i64) -> Option<usize> {
    usize::try_from(v).ok()
}

/// Message describing the last failure on this thread. Valid until the
/// next failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn fb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn fb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or may be null when
/// `m == 0`); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_new(n: usize, edges: *const usize, m: usize, out: *mut *mut FbGraph) -> FbStatus {
    guard(|| {
        let flat: &[usize] = match (edges.is_null(), m) {
            (_, 0) => &[],
            (true, _) => return Err(null("edges")),
            (false, _) => std::slice::from_raw_parts(edges, 2 * m),
        };
        let list = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::new(n, list)?;
        put(out, Box::into_raw(Box::new(FbGraph(g))), "out")
    })
}

/// Generates a member of a named family. Negative size parameters mean
/// "not given".
///
/// # Safety
/// `family` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_generate(
    family: *const c_char,
    n: i64,
    p: i64,
    q: i64,
    k: i64,
    w: i64,
    h: i64,
    seed: u64,
    out: *mut *mut FbGraph,
) -> FbStatus {
    guard(|| {
        let family = text(family, "family")?;
        let params = FamilyParams {
            n: optional(n),
            p: optional(p),
            q: optional(q),
            k: optional(k),
            w: optional(w),
            h: optional(h),
            seed,
        };
        let g = generate::generate(family, &params)?;
        put(out, Box::into_raw(Box::new(FbGraph(g))), "out")
    })
}

/// Parses a graph in the text or JSON format.
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_parse(input: *const c_char, out: *mut *mut FbGraph) -> FbStatus {
    guard(|| {
        let g = match io::read_document(text(input, "input")?)? {
            io::Document::Graph(g) => g,
            io::Document::Orientation(o) => o.graph().clone(),
        };
        put(out, Box::into_raw(Box::new(FbGraph(g))), "out")
    })
}

/// # Safety
/// `g` must be null or a live handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_free(g: *mut FbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_n(g: *const FbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fb_graph_m(g: *const FbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// Orients `g` with a named recipe. `k` (negative for "infer") is used by
/// the k-tree recipe; `w` and `h` by the grid recipes.
///
/// # Safety
/// `g` must be a live handle, `recipe` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fb_orient(
    g: *const FbGraph,
    recipe: *const c_char,
    k: i64,
    w: i64,
    h: i64,
    out: *mut *mut FbOrientation,
) -> FbStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        let recipe = text(recipe, "recipe")?;
        let params = RecipeParams { k: optional(k), w: optional(w), h: optional(h), ..Default::default() };
        let o = orient::orient(recipe, &g.0, &params)?;
        put(out, Box::into_raw(Box::new(FbOrientation(o))), "out")
    })
}

/// Parses an orientation (text, JSON, or a solver result).
///
/// # Safety
/// `input` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_orientation_parse(input: *const c_char, out: *mut *mut FbOrientation) -> FbStatus {
    guard(|| {
        match io::read_document(text(input, "input")?)? {
            io::Document::Orientation(o) => put(out, Box::into_raw(Box::new(FbOrientation(o))), "out"),
            io::Document::Graph(_) => Err(Fail(FbStatus::InvalidArgument, "input is an undirected graph".into())),
        }
    })
}

/// # Safety
/// `o` must be null or a live handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn fb_orientation_free(o: *mut FbOrientation) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// Largest outdegree, or 0 for a null handle.
///
/// # Safety
/// `o` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fb_orientation_max_outdegree(o: *const FbOrientation) -> usize {
    o.as_ref().map_or(0, |o| o.0.max_out_degree())
}

/// The orientation as JSON.
///
/// # Safety
/// `o` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_orientation_to_json(o: *const FbOrientation, out_json: *mut *mut c_char) -> FbStatus {
    guard(|| {
        let o = handle(o, "orientation")?;
        let json = serde_json::to_string(&io::orientation_to_json(&o.0, None)).expect("serialisable");
        put_string(out_json, json)
    })
}

fn config(budget_ms: u64, threads: usize) -> SolverConfig {
    SolverConfig {
        budget: (budget_ms > 0).then(|| Duration::from_millis(budget_ms)),
        threads: (threads > 0).then_some(threads),
        ..Default::default()
    }
}

/// Optimal play on one orientation. `start < 0` takes the worst start;
/// `budget_ms == 0` means no limit. Writes the burned count and, if
/// `out_json` is not null, the full result.
///
/// # Safety
/// `o` must be a live handle; `out_beta` writable; `out_json` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fb_solve(
    o: *const FbOrientation,
    f: usize,
    start: i64,
    budget_ms: u64,
    out_beta: *mut usize,
    out_json: *mut *mut c_char,
) -> FbStatus {
    guard(|| {
        let o = handle(o, "orientation")?;
        let v = solver::solve_orientation(&o.0, f, optional(start), &config(budget_ms, 0))?;
        put(out_beta, v.beta, "out_beta")?;
        if !out_json.is_null() {
            put_string(out_json, SolveReport::new("ffi", f, "fixed", &v, None).to_json())?;
        }
        Ok(())
    })
}

/// Best orientation of a small graph. `threads == 0` uses all cores.
///
/// # Safety
/// `g` must be a live handle; `out_beta` writable; `out_json` null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn fb_solve_best(
    g: *const FbGraph,
    f: usize,
    budget_ms: u64,
    threads: usize,
    out_beta: *mut usize,
    out_exact: *mut bool,
    out_json: *mut *mut c_char,
) -> FbStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        let v = solver::solve_best_orientation(&g.0, f, &config(budget_ms, threads))?;
        put(out_beta, v.beta, "out_beta")?;
        if !out_exact.is_null() {
            out_exact.write(v.exact);
        }
        if !out_json.is_null() {
            put_string(out_json, SolveReport::new("ffi", f, "best", &v, None).to_json())?;
        }
        Ok(())
    })
}

/// Plays the game with a named defence strategy and writes the trace.
///
/// # Safety
/// `o` must be a live handle, `strategy` a NUL-terminated string;
/// `out_burned` writable; `out_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn fb_simulate(
    o: *const FbOrientation,
    start: usize,
    f: usize,
    strategy: *const c_char,
    out_burned: *mut usize,
    out_json: *mut *mut c_char,
) -> FbStatus {
    guard(|| {
        let o = handle(o, "orientation")?;
        let mut st = make_strategy(text(strategy, "strategy")?, &StrategyParams::default())?;
        let trace = game::simulate(&o.0, start, f, st.as_mut())?;
        put(out_burned, trace.burned, "out_burned")?;
        if !out_json.is_null() {
            put_string(out_json, trace.to_json())?;
        }
        Ok(())
    })
}

/// Graph bounds as a JSON array of entries.
///
/// # Safety
/// `g` must be a live handle; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_bounds(g: *const FbGraph, f: usize, out_json: *mut *mut c_char) -> FbStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        put_string(out_json, bounds::graph_bounds(&g.0, f, &BoundHints::default()).to_json())
    })
}

/// Whether a connected graph has at most one cycle, the exact condition
/// for one firefighter to hold every fire to its start.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_classify_b1(g: *const FbGraph, out: *mut bool) -> FbStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        put(out, bounds::classify_b1(&g.0)?, "out")
    })
}

/// Runs a verification suite by name.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out_passed` writable;
/// `out_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn fb_verify(
    suite: *const c_char,
    slow: bool,
    seed: u64,
    out_passed: *mut bool,
    out_json: *mut *mut c_char,
) -> FbStatus {
    guard(|| {
        let opts = VerifyOptions { slow, seed, ..Default::default() };
        let r = verify::run_suite(text(suite, "suite")?, &opts)?;
        put(out_passed, r.passed, "out_passed")?;
        if !out_json.is_null() {
            put_string(out_json, r.to_json())?;
        }
        Ok(())
    })
}

