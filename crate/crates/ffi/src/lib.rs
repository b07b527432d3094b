//! C ABI for `thompson-stab`.
//!
//! Every value crosses the boundary as an opaque handle (`FsPoint`, `FsWord`,
//! `FsMap`, `FsGens`) that the caller releases with the matching `*_free`
//! function. Fallible calls return an [`FsStatus`] and write their result
//! through an out-pointer; on failure a message is available from
//! [`fs_last_error_message`] on the same thread. Strings returned by the
//! library are owned by the caller and released with [`fs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_rational::BigRational;
use thompson_stab::cli::{SELFTEST_PERIODS, SELFTEST_TWINS};
use thompson_stab::relators::check_relators;
use thompson_stab::schreier::{check_grey_labels, default_radius, find_path, SchreierBall};
use thompson_stab::stabgen::{
    check_fp_relators, check_reduction, theorem_generators, twin_stabilizer_check, verify_stabilizer,
};
use thompson_stab::{BitString, Error, GenWord, PLMap, RationalPoint, StabilizerGens};

/// Result codes of the C API.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Domain = 4,
    InvalidMap = 5,
    Capacity = 6,
    NotFound = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

/// A canonical rational point of the Cantor set.
pub struct FsPoint(RationalPoint);
/// A word in `x0^{±1}`, `x1^{±1}`.
pub struct FsWord(GenWord);
/// An element of F as a PL map.
pub struct FsMap(PLMap);
/// A stabilizer generating set.
pub struct FsGens(StabilizerGens);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

impl From<&Error> for FsStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidArgument(_) => FsStatus::InvalidArgument,
            Error::Domain { .. } => FsStatus::Domain,
            Error::Parse { .. } => FsStatus::Parse,
            Error::InvalidMap(_) => FsStatus::InvalidMap,
            Error::Capacity { .. } => FsStatus::Capacity,
            Error::NotFound { .. } => FsStatus::NotFound,
        }
    }
}

fn fail(status: FsStatus, msg: &str) -> FsStatus {
    set_last_error(msg);
    status
}

fn from_error(e: Error) -> FsStatus {
    fail(FsStatus::from(&e), &e.to_string())
}

/// Runs `f`, turning panics into [`FsStatus::Panic`].
fn guard(f: impl FnOnce() -> FsStatus) -> FsStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(FsStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, FsStatus> {
    if s.is_null() {
        return Err(fail(FsStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(FsStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, FsStatus> {
    p.as_ref().ok_or_else(|| fail(FsStatus::NullPointer, "null handle"))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> FsStatus {
    if out.is_null() {
        return fail(FsStatus::NullPointer, "null out-pointer");
    }
    *out = Box::into_raw(Box::new(value));
    FsStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> FsStatus {
    if out.is_null() {
        return fail(FsStatus::NullPointer, "null out-pointer");
    }
    *out = CString::new(s).expect("library output has no NULs").into_raw();
    FsStatus::Ok
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message describing the last failed call on this thread, or NULL. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fs_status_name(status: FsStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        FsStatus::Ok => b"ok\0",
        FsStatus::NullPointer => b"null pointer\0",
        FsStatus::InvalidArgument => b"invalid argument\0",
        FsStatus::Parse => b"parse error\0",
        FsStatus::Domain => b"outside the unit interval\0",
        FsStatus::InvalidMap => b"invalid PL map\0",
        FsStatus::Capacity => b"vertex cap exceeded\0",
        FsStatus::NotFound => b"not found\0",
        FsStatus::InvalidUtf8 => b"invalid UTF-8\0",
        FsStatus::Panic => b"internal panic\0",
    };
    s.as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- points ----

/// Parses `v(w)` or `p/q` into a canonical point.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_point_parse(text: *const c_char, out: *mut *mut FsPoint) -> FsStatus {
    guard(|| {
        let s = try_ffi!(read_str(text));
        match s.parse::<RationalPoint>() {
            Ok(p) => put(out, FsPoint(p)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_point_free(p: *mut FsPoint) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical `v(w)` text of a point; NULL if `p` is NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_point_to_string(p: *const FsPoint) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| to_c_string(p.0.to_string()))
}

/// Exact value `p/q` of a point; NULL if `p` is NULL.
///
/// # Safety
/// `p` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_point_value(p: *const FsPoint) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| to_c_string(p.0.value().to_string()))
}

/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn fs_point_equal(a: *const FsPoint, b: *const FsPoint) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Image of `p` under `w`.
///
/// # Safety
/// `p`, `w` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_point_act(p: *const FsPoint, w: *const FsWord, out: *mut *mut FsPoint) -> FsStatus {
    guard(|| {
        let p = try_ffi!(deref(p));
        let w = try_ffi!(deref(w));
        put(out, FsPoint(p.0.act_word(&w.0)))
    })
}

// ---- words and maps ----

/// Parses a word over `a, A, b, B` (`e` or empty for the identity).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_word_parse(text: *const c_char, out: *mut *mut FsWord) -> FsStatus {
    guard(|| {
        let s = try_ffi!(read_str(text));
        match s.parse::<GenWord>() {
            Ok(w) => put(out, FsWord(w)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_word_free(w: *mut FsWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_word_to_string(w: *const FsWord) -> *mut c_char {
    w.as_ref().map_or(ptr::null_mut(), |w| to_c_string(w.0.to_string()))
}

/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_word_len(w: *const FsWord) -> usize {
    w.as_ref().map_or(0, |w| w.0.len())
}

/// The PL map of a word.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_word_to_map(w: *const FsWord, out: *mut *mut FsMap) -> FsStatus {
    guard(|| {
        let w = try_ffi!(deref(w));
        put(out, FsMap(w.0.to_plmap()))
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_map_free(m: *mut FsMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Breakpoints as `(t, f(t))` pairs of exact fractions.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_map_to_string(m: *const FsMap) -> *mut c_char {
    m.as_ref().map_or(ptr::null_mut(), |m| to_c_string(m.0.to_string()))
}

/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn fs_map_equal(a: *const FsMap, b: *const FsMap) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_map_is_identity(m: *const FsMap) -> bool {
    m.as_ref().is_some_and(|m| m.0.is_identity())
}

/// The product `a * b` (first `a`, then `b`).
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_map_compose(a: *const FsMap, b: *const FsMap, out: *mut *mut FsMap) -> FsStatus {
    guard(|| {
        let a = try_ffi!(deref(a));
        let b = try_ffi!(deref(b));
        put(out, FsMap(a.0.then(&b.0)))
    })
}

/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_map_inverse(m: *const FsMap, out: *mut *mut FsMap) -> FsStatus {
    guard(|| {
        let m = try_ffi!(deref(m));
        put(out, FsMap(m.0.inverse()))
    })
}

/// The flip `t -> 1 - f(1 - t)`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_map_phi(m: *const FsMap, out: *mut *mut FsMap) -> FsStatus {
    guard(|| {
        let m = try_ffi!(deref(m));
        put(out, FsMap(m.0.phi()))
    })
}

/// Evaluates `m` at a fraction `p/q` in `[0, 1]`, writing the exact result.
///
/// # Safety
/// `m` must be a live handle, `t` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fs_map_eval(m: *const FsMap, t: *const c_char, out: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let m = try_ffi!(deref(m));
        let s = try_ffi!(read_str(t));
        let t: BigRational = match s.trim().parse() {
            Ok(t) => t,
            Err(_) => return fail(FsStatus::Parse, &format!("cannot parse {s:?} as a fraction")),
        };
        match m.0.eval_rational(&t) {
            Ok(v) => put_string(out, v.to_string()),
            Err(e) => from_error(e),
        }
    })
}

// ---- graphs and paths ----

/// DOT text of the ball of `radius` around `p`, failing with
/// `FS_STATUS_CAPACITY` beyond `cap` vertices.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_dot(p: *const FsPoint, radius: usize, cap: usize, out: *mut *mut c_char) -> FsStatus {
    guard(|| {
        let p = try_ffi!(deref(p));
        match SchreierBall::build(&p.0, radius, cap) {
            Ok(b) => put_string(out, b.to_dot()),
            Err(e) => from_error(e),
        }
    })
}

/// JSON form of the same ball as [`fs_graph_dot`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_graph_json(
    p: *const FsPoint,
    radius: usize,
    cap: usize,
    out: *mut *mut c_char,
) -> FsStatus {
    guard(|| {
        let p = try_ffi!(deref(p));
        match SchreierBall::build(&p.0, radius, cap) {
            Ok(b) => put_string(out, b.to_json()),
            Err(e) => from_error(e),
        }
    })
}

/// Shortest word moving `from` to `to`. A `max_radius` of 0 selects the
/// default `|v| + 4|w| + 8` of `from`.
///
/// # Safety
/// `from`, `to` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_path_find(
    from: *const FsPoint,
    to: *const FsPoint,
    max_radius: usize,
    out: *mut *mut FsWord,
) -> FsStatus {
    guard(|| {
        let a = try_ffi!(deref(from));
        let b = try_ffi!(deref(to));
        let r = if max_radius == 0 { default_radius(&a.0) } else { max_radius };
        match find_path(&a.0, &b.0, r) {
            Ok(h) => put(out, FsWord(h)),
            Err(e) => from_error(e),
        }
    })
}

// ---- stabilizer generators ----

/// Generating set of the stabilizer of `p`. A `max_radius` of 0 selects the
/// default conjugator search radius.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_compute(p: *const FsPoint, max_radius: usize, out: *mut *mut FsGens) -> FsStatus {
    guard(|| {
        let p = try_ffi!(deref(p));
        let r = (max_radius != 0).then_some(max_radius);
        match theorem_generators(&p.0, r) {
            Ok(g) => put(out, FsGens(g)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_free(g: *mut FsGens) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of generators (5, or 2 for `0^∞` and `1^∞`); 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_count(g: *const FsGens) -> usize {
    g.as_ref().map_or(0, |g| g.0.generators.len())
}

/// Copy of generator `index`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_generator(g: *const FsGens, index: usize, out: *mut *mut FsWord) -> FsStatus {
    guard(|| {
        let g = try_ffi!(deref(g));
        match g.0.generators.get(index) {
            Some(w) => put(out, FsWord(w.clone())),
            None => fail(FsStatus::InvalidArgument, &format!("generator index {index} out of range")),
        }
    })
}

/// Copy of the conjugator `h`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_conjugator(g: *const FsGens, out: *mut *mut FsWord) -> FsStatus {
    guard(|| {
        let g = try_ffi!(deref(g));
        put(out, FsWord(g.0.conjugator.clone()))
    })
}

/// Text form: header `# point=.. h=.. w=..` and one generator per line.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_to_text(g: *const FsGens) -> *mut c_char {
    g.as_ref().map_or(ptr::null_mut(), |g| to_c_string(g.0.to_text()))
}

/// Runs the stabilizer verification and the stabilizer relator checks,
/// setting `*passed`.
///
/// # Safety
/// `g` must be a live handle; `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_gens_verify(
    g: *const FsGens,
    samples: usize,
    word_len: usize,
    seed: u64,
    passed: *mut bool,
) -> FsStatus {
    guard(|| {
        let g = try_ffi!(deref(g));
        if passed.is_null() {
            return fail(FsStatus::NullPointer, "null out-pointer");
        }
        let ok = verify_stabilizer(&g.0, samples, word_len, seed).all_passed() && check_fp_relators().all_passed();
        *passed = ok;
        FsStatus::Ok
    })
}

/// Runs the full self-test at relator depth `depth` (at least 2).
///
/// # Safety
/// `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fs_selftest(depth: u32, passed: *mut bool) -> FsStatus {
    guard(|| {
        if passed.is_null() {
            return fail(FsStatus::NullPointer, "null out-pointer");
        }
        if depth < 2 {
            return fail(FsStatus::InvalidArgument, "depth must be at least 2");
        }
        let mut ok = check_relators(depth).all_passed() && check_reduction(5, 4).all_passed();
        for w in SELFTEST_PERIODS {
            ok &= check_grey_labels(&w.parse::<BitString>().expect("literal"), 5).all_passed();
        }
        for v in SELFTEST_TWINS {
            ok &= twin_stabilizer_check(&v.parse::<BitString>().expect("literal")).all_passed();
        }
        ok &= check_fp_relators().all_passed();
        *passed = ok;
        FsStatus::Ok
    })
}
