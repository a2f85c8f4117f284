//! C ABI over `legendre_overlap`.
//!
//! Exact values cross the boundary as NUL-terminated decimal strings (`p` or
//! `p/q`). Every string handed out must be released with [`lo_string_free`];
//! every Gram handle with [`lo_gram_free`]. Functions report failure through
//! [`LoStatus`] and write results through out-pointers.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use legendre_overlap::{
    overlap_general, overlap_oracle, overlap_quadrature, verify_sweep, BoundaryMethod,
    BoundaryQuery, Error, GramMatrix, GramMethod, OverlapQuery, VanishingReason,
};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoStatus {
    Ok = 0,
    NullPointer = 1,
    OutOfRange = 2,
    InvalidUtf8 = 3,
    Quadrature = 4,
    MalformedInput = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoVanishingReason {
    None = 0,
    Parity = 1,
    DegreeConstraint = 2,
    DerivativeAnnihilation = 3,
}

impl From<VanishingReason> for LoVanishingReason {
    fn from(r: VanishingReason) -> Self {
        match r {
            VanishingReason::None => LoVanishingReason::None,
            VanishingReason::Parity => LoVanishingReason::Parity,
            VanishingReason::DegreeConstraint => LoVanishingReason::DegreeConstraint,
            VanishingReason::DerivativeAnnihilation => LoVanishingReason::DerivativeAnnihilation,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoBoundaryMethod {
    Factorial = 0,
    Recurrence = 1,
    Genfunc = 2,
}

impl From<LoBoundaryMethod> for BoundaryMethod {
    fn from(m: LoBoundaryMethod) -> Self {
        match m {
            LoBoundaryMethod::Factorial => BoundaryMethod::Factorial,
            LoBoundaryMethod::Recurrence => BoundaryMethod::Recurrence,
            LoBoundaryMethod::Genfunc => BoundaryMethod::Genfunc,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoGramMethod {
    ClosedForm = 0,
    Oracle = 1,
}

impl From<LoGramMethod> for GramMethod {
    fn from(m: LoGramMethod) -> Self {
        match m {
            LoGramMethod::ClosedForm => GramMethod::ClosedForm,
            LoGramMethod::Oracle => GramMethod::Oracle,
        }
    }
}

/// Opaque Gram matrix handle.
pub struct LoGram(GramMatrix);

fn guard(f: impl FnOnce() -> LoStatus) -> LoStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(LoStatus::Panic)
}

fn status_of(e: &Error) -> LoStatus {
    match e {
        Error::QuadratureOrder(_)
        | Error::QuadratureNonConvergence { .. }
        | Error::QuadratureUnderResolved { .. } => LoStatus::Quadrature,
        _ => LoStatus::MalformedInput,
    }
}

/// Writes `s` into `*out` as a fresh C string. `out` must be non-null.
unsafe fn emit(out: *mut *mut c_char, s: String) -> LoStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            LoStatus::Ok
        }
        Err(_) => LoStatus::MalformedInput,
    }
}

fn query(n: u32, m: u32, q: u32, k: u32) -> OverlapQuery {
    OverlapQuery::new(n as usize, m as usize, q as usize, k as usize)
}

/// Static description of a status code. Never free the result.
#[no_mangle]
pub extern "C" fn lo_status_message(status: LoStatus) -> *const c_char {
    let s: &'static CStr = match status {
        LoStatus::Ok => c"ok",
        LoStatus::NullPointer => c"null pointer argument",
        LoStatus::OutOfRange => c"index out of range",
        LoStatus::InvalidUtf8 => c"input is not valid UTF-8",
        LoStatus::Quadrature => c"quadrature precondition or convergence failure",
        LoStatus::MalformedInput => c"malformed input",
        LoStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Closed-form ∫ P_n^(q) P_m^(k) dx over [-1, 1].
///
/// `out_reason` may be null.
///
/// # Safety
/// `out_value` must be a valid pointer; `out_reason` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn lo_overlap(
    n: u32,
    m: u32,
    q: u32,
    k: u32,
    out_value: *mut *mut c_char,
    out_reason: *mut LoVanishingReason,
) -> LoStatus {
    if out_value.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| {
        let r = overlap_general(query(n, m, q, k));
        if !out_reason.is_null() {
            *out_reason = r.vanishing_reason.into();
        }
        emit(out_value, r.value.to_string())
    })
}

/// Same integral by exact polynomial integration.
///
/// # Safety
/// `out_value` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lo_overlap_oracle(
    n: u32,
    m: u32,
    q: u32,
    k: u32,
    out_value: *mut *mut c_char,
) -> LoStatus {
    if out_value.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| emit(out_value, overlap_oracle(query(n, m, q, k)).to_string()))
}

/// Gauss-Legendre estimate of the integral with `nodes` points.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lo_overlap_quadrature(
    n: u32,
    m: u32,
    q: u32,
    k: u32,
    nodes: u32,
    out: *mut f64,
) -> LoStatus {
    if out.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| match overlap_quadrature(query(n, m, q, k), nodes as usize) {
        Ok(v) => {
            *out = v;
            LoStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// P_n^(k)(1).
///
/// # Safety
/// `out_value` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lo_boundary(
    n: u32,
    k: u32,
    method: LoBoundaryMethod,
    out_value: *mut *mut c_char,
) -> LoStatus {
    if out_value.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| {
        let v = BoundaryMethod::from(method).evaluate(BoundaryQuery::new(n as usize, k as usize));
        emit(out_value, v.to_string())
    })
}

/// Compares closed form and oracle over 0..=n_max, 0..=q_max, 0..=k_max.
///
/// # Safety
/// Both out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lo_verify(
    n_max: u32,
    q_max: u32,
    k_max: u32,
    out_comparisons: *mut u64,
    out_mismatches: *mut u64,
) -> LoStatus {
    if out_comparisons.is_null() || out_mismatches.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| {
        let report = verify_sweep(n_max as usize, q_max as usize, k_max as usize);
        *out_comparisons = report.comparisons as u64;
        *out_mismatches = report.mismatches.len() as u64;
        LoStatus::Ok
    })
}

/// Builds the (n_max+1) x (m_max+1) matrix of ∫ P_n^(q) P_m^(k).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_new(
    q: u32,
    k: u32,
    n_max: u32,
    m_max: u32,
    method: LoGramMethod,
    out: *mut *mut LoGram,
) -> LoStatus {
    if out.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| {
        let g = GramMatrix::build(q as usize, k as usize, n_max as usize, m_max as usize, method.into());
        *out = Box::into_raw(Box::new(LoGram(g)));
        LoStatus::Ok
    })
}

/// Parses a Gram matrix from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_from_json(json: *const c_char, out: *mut *mut LoGram) -> LoStatus {
    if json.is_null() || out.is_null() {
        return LoStatus::NullPointer;
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return LoStatus::InvalidUtf8;
    };
    guard(|| match GramMatrix::read_json(text.as_bytes()) {
        Ok(g) => {
            *out = Box::into_raw(Box::new(LoGram(g)));
            LoStatus::Ok
        }
        Err(e) => status_of(&e),
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `gram` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_free(gram: *mut LoGram) {
    if !gram.is_null() {
        drop(Box::from_raw(gram));
    }
}

/// Row and column counts.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_dims(gram: *const LoGram, rows: *mut u32, cols: *mut u32) -> LoStatus {
    if gram.is_null() || rows.is_null() || cols.is_null() {
        return LoStatus::NullPointer;
    }
    let g = &(*gram).0;
    *rows = g.n_max as u32 + 1;
    *cols = g.m_max as u32 + 1;
    LoStatus::Ok
}

/// Entry at row `n`, column `m`.
///
/// # Safety
/// `gram` and `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_entry(
    gram: *const LoGram,
    n: u32,
    m: u32,
    out_value: *mut *mut c_char,
) -> LoStatus {
    if gram.is_null() || out_value.is_null() {
        return LoStatus::NullPointer;
    }
    let g = &(*gram).0;
    if n as usize > g.n_max || m as usize > g.m_max {
        return LoStatus::OutOfRange;
    }
    emit(out_value, g.entry(n as usize, m as usize).to_string())
}

/// JSON serialization, same format the CLI writes.
///
/// # Safety
/// `gram` and `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_to_json(gram: *const LoGram, out_json: *mut *mut c_char) -> LoStatus {
    if gram.is_null() || out_json.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| emit(out_json, (*gram).0.to_json_string()))
}

/// CSV serialization, same format the CLI writes.
///
/// # Safety
/// `gram` and `out_csv` must be valid.
#[no_mangle]
pub unsafe extern "C" fn lo_gram_to_csv(gram: *const LoGram, out_csv: *mut *mut c_char) -> LoStatus {
    if gram.is_null() || out_csv.is_null() {
        return LoStatus::NullPointer;
    }
    guard(|| {
        let mut buf = Vec::new();
        if let Err(e) = (*gram).0.write_csv(&mut buf) {
            return status_of(&e);
        }
        match String::from_utf8(buf) {
            Ok(s) => emit(out_csv, s),
            Err(_) => LoStatus::InvalidUtf8,
        }
    })
}
