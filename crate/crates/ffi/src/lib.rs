//! C interface to `bck-codes`.
//!
//! Algebras are passed around as opaque `BckAlgebra` handles created by the
//! `bck_algebra_from_*` functions and released with `bck_algebra_free`.
//! Every fallible function returns a `BckStatus`; on failure a message is
//! available from `bck_last_error_message` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bck_codes::format::{parse_algebra_file, parse_code_file, write_algebra_file};
use bck_codes::{
    census, classify, direct_algebra, dualize, embed_code, verify_axioms, AxiomSystem, CensusMode,
    Error, OpTable, TableKind,
};

/// Opaque algebra handle.
pub struct BckAlgebra {
    table: OpTable,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BckStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Format = 3,
    Usage = 4,
    Integrity = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// How a code is turned into an algebra.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BckMode {
    Embed = 0,
    Direct = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BckSystem {
    Bci = 0,
    Bck = 1,
    Hilbert = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BckKind {
    Star = 0,
    Dot = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BckClassification {
    pub n: usize,
    pub filter_count: usize,
    pub maximal_count: usize,
    pub radical_size: usize,
    pub is_semisimple: bool,
    pub is_local: bool,
    /// One-element algebra; both verdicts are false.
    pub degenerate: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BckCensusSummary {
    pub n: usize,
    pub total_matrices: u64,
    pub evaluated: usize,
    pub class_count: usize,
    pub bound: u64,
    pub bound_met: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    let c = CString::new(msg).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(BckStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Usage(_) => BckStatus::Usage,
            Error::Format { .. } => BckStatus::Format,
            Error::Integrity(_) => BckStatus::Integrity,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(BckStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BckStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            BckStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BckStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(BckStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn algebra<'a>(p: *const BckAlgebra) -> Result<&'a BckAlgebra, Failure> {
    p.as_ref().ok_or_else(|| null("algebra"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed(table: OpTable) -> *mut BckAlgebra {
    Box::into_raw(Box::new(BckAlgebra { table }))
}

/// Builds the algebra of a code file text.
///
/// # Safety
/// `code_text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_from_code(
    code_text: *const c_char,
    mode: BckMode,
    out: *mut *mut BckAlgebra,
) -> BckStatus {
    guard(|| {
        let code = parse_code_file(text(code_text, "code text")?)?;
        let e = match mode {
            BckMode::Embed => embed_code(&code)?,
            BckMode::Direct => direct_algebra(&code)?,
        };
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(boxed(e.algebra));
        Ok(())
    })
}

/// Parses an algebra file text.
///
/// # Safety
/// `table_text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_from_table(
    table_text: *const c_char,
    out: *mut *mut BckAlgebra,
) -> BckStatus {
    guard(|| {
        let table = parse_algebra_file(text(table_text, "table text")?)?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(boxed(table));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_free(alg: *mut BckAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_size(alg: *const BckAlgebra, out: *mut usize) -> BckStatus {
    guard(|| write(out, algebra(alg)?.table.n()))
}

/// `x ∘ y` for the table's own operation. Element 0 is θ.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_op(
    alg: *const BckAlgebra,
    x: usize,
    y: usize,
    out: *mut usize,
) -> BckStatus {
    guard(|| {
        let t = &algebra(alg)?.table;
        if x >= t.n() || y >= t.n() {
            return Err(Failure(
                BckStatus::OutOfRange,
                format!("element out of range for n = {}", t.n()),
            ));
        }
        write(out, t.op(x, y))
    })
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_kind(alg: *const BckAlgebra, out: *mut BckKind) -> BckStatus {
    guard(|| {
        let kind = match algebra(alg)?.table.kind() {
            TableKind::Star => BckKind::Star,
            TableKind::Dot => BckKind::Dot,
        };
        write(out, kind)
    })
}

/// New handle holding the transposed table.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_dualize(
    alg: *const BckAlgebra,
    out: *mut *mut BckAlgebra,
) -> BckStatus {
    guard(|| {
        let d = dualize(&algebra(alg)?.table);
        if out.is_null() {
            return Err(null("output pointer"));
        }
        out.write(boxed(d));
        Ok(())
    })
}

/// Checks an axiom system against the table; `passed` receives the verdict.
///
/// # Safety
/// `alg` must be a live handle and `passed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_verify(
    alg: *const BckAlgebra,
    system: BckSystem,
    passed: *mut bool,
) -> BckStatus {
    guard(|| {
        let system = match system {
            BckSystem::Bci => AxiomSystem::Bci,
            BckSystem::Bck => AxiomSystem::Bck,
            BckSystem::Hilbert => AxiomSystem::Hilbert,
        };
        let report = verify_axioms(&algebra(alg)?.table, system)?;
        write(passed, report.passed)
    })
}

/// Semisimple/local classification; star tables are dualized first.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_classify(
    alg: *const BckAlgebra,
    out: *mut BckClassification,
) -> BckStatus {
    guard(|| {
        let r = classify(&algebra(alg)?.table, true)?;
        write(
            out,
            BckClassification {
                n: r.n,
                filter_count: r.all_filter_count,
                maximal_count: r.maximal_filters.len(),
                radical_size: r.radical.len(),
                is_semisimple: r.is_semisimple,
                is_local: r.is_local,
                degenerate: r.degenerate,
            },
        )
    })
}

/// The table in algebra-file format. Free the string with
/// `bck_string_free`.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_algebra_to_text(
    alg: *const BckAlgebra,
    out: *mut *mut c_char,
) -> BckStatus {
    guard(|| {
        let s = write_algebra_file(&algebra(alg)?.table);
        let c =
            CString::new(s).map_err(|_| Failure(BckStatus::Integrity, "NUL in output".into()))?;
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must come from `bck_algebra_to_text` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bck_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exhaustive census for `n`; `jobs` = 0 uses the default worker count.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bck_census(
    n: usize,
    jobs: usize,
    out: *mut BckCensusSummary,
) -> BckStatus {
    guard(|| {
        let r = census(n, CensusMode::Exhaustive, (jobs > 0).then_some(jobs))?;
        write(
            out,
            BckCensusSummary {
                n: r.n,
                total_matrices: r.total_matrices,
                evaluated: r.evaluated,
                class_count: r.class_count,
                bound: r.bound,
                bound_met: r.bound_met,
            },
        )
    })
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn bck_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
