//! C ABI over `vkh`. Diagrams are opaque handles; every fallible call
//! returns a `VkhStatus` and writes its result through an out-pointer.
//! Strings handed out by the library must be released with
//! `vkh_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vkh::khovanov::{khovanov, BuilderKind};
use vkh::report::{invariants_report, ColoringChoice};
use vkh::{coloring, lee, oracle, transforms, Diagram, Error};

/// Opaque diagram handle.
pub struct VkhDiagram(Diagram);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VkhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Disconnected = 4,
    NotColorable = 5,
    NotAKnot = 6,
    TooLarge = 7,
    Internal = 8,
    Other = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> VkhStatus {
    match e {
        Error::MalformedToken { .. }
        | Error::LabelCountMismatch { .. }
        | Error::SignConflict { .. } => VkhStatus::Parse,
        Error::DisconnectedDiagram { .. } => VkhStatus::Disconnected,
        Error::NotColorable => VkhStatus::NotColorable,
        Error::NotAKnot { .. } => VkhStatus::NotAKnot,
        Error::TooLarge { .. } => VkhStatus::TooLarge,
        Error::Internal(_) => VkhStatus::Internal,
        _ => VkhStatus::Other,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), VkhStatus>) -> VkhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VkhStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside vkh".into());
            VkhStatus::Internal
        }
    }
}

fn lift<T>(r: vkh::Result<T>) -> Result<T, VkhStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn diagram<'a>(d: *const VkhDiagram) -> Result<&'a Diagram, VkhStatus> {
    if d.is_null() {
        set_error("null diagram handle".into());
        return Err(VkhStatus::NullPointer);
    }
    Ok(&(*d).0)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), VkhStatus> {
    if out.is_null() {
        set_error("null output pointer".into());
        return Err(VkhStatus::NullPointer);
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), VkhStatus> {
    let c = CString::new(s).map_err(|_| VkhStatus::Internal)?;
    write(out, c.into_raw())
}

/// Parses a signed Gauss code into a new handle stored in `*out`.
///
/// # Safety
/// `code` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_diagram_parse(
    code: *const c_char,
    out: *mut *mut VkhDiagram,
) -> VkhStatus {
    guard(|| {
        if code.is_null() {
            set_error("null code".into());
            return Err(VkhStatus::NullPointer);
        }
        let text = CStr::from_ptr(code).to_str().map_err(|_| {
            set_error("code is not UTF-8".into());
            VkhStatus::InvalidUtf8
        })?;
        let d = lift(vkh::parse_gauss_code(text))?;
        write(out, Box::into_raw(Box::new(VkhDiagram(d))))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `d` must come from `vkh_diagram_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vkh_diagram_free(d: *mut VkhDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Number of classical crossings, or 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vkh_diagram_crossings(d: *const VkhDiagram) -> usize {
    if d.is_null() {
        0
    } else {
        (*d).0.n()
    }
}

/// Normalized Gauss code.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_diagram_code(
    d: *const VkhDiagram,
    out: *mut *mut c_char,
) -> VkhStatus {
    guard(|| write_string(out, diagram(d)?.to_code()))
}

/// Genus of the supporting surface.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_genus(d: *const VkhDiagram, out: *mut usize) -> VkhStatus {
    guard(|| {
        let g = lift(transforms::supporting_genus(diagram(d)?))?;
        write(out, g)
    })
}

/// Signature pair under the normalized coloring.
///
/// # Safety
/// `d` must be a live handle; both out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn vkh_signatures(
    d: *const VkhDiagram,
    sigma_xi_star: *mut i64,
    sigma_xi: *mut i64,
) -> VkhStatus {
    guard(|| {
        let p = lift(coloring::signatures(diagram(d)?))?;
        write(sigma_xi_star, p.sigma_xi_star)?;
        write(sigma_xi, p.sigma_xi)
    })
}

/// Rasmussen invariant of a colorable knot diagram.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_rasmussen(d: *const VkhDiagram, out: *mut i64) -> VkhStatus {
    guard(|| {
        let r = lift(lee::rasmussen(diagram(d)?))?;
        write(out, r.s)
    })
}

/// Khovanov polynomial as text, e.g. "1/q^9t^3+1/q^5t^2+1/q^3+1/q".
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_khovanov(d: *const VkhDiagram, out: *mut *mut c_char) -> VkhStatus {
    guard(|| {
        let d = diagram(d)?;
        let kind = if coloring::coloring_of(d).is_ok() {
            BuilderKind::SourceSink
        } else {
            BuilderKind::General
        };
        let p = lift(khovanov(d, kind))?;
        write_string(out, p.to_string())
    })
}

/// Unnormalized Jones polynomial from the state sum.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_bracket(d: *const VkhDiagram, out: *mut *mut c_char) -> VkhStatus {
    guard(|| {
        let p = lift(oracle::bracket_oracle(diagram(d)?))?;
        write_string(out, p.to_string())
    })
}

/// The full invariants report as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn vkh_invariants_json(
    d: *const VkhDiagram,
    out: *mut *mut c_char,
) -> VkhStatus {
    guard(|| {
        let r = lift(invariants_report(diagram(d)?, ColoringChoice::Primal, None))?;
        let json = serde_json::to_string(&r).map_err(|e| {
            set_error(e.to_string());
            VkhStatus::Internal
        })?;
        write_string(out, json)
    })
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vkh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn vkh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn vkh_status_str(s: VkhStatus) -> *const c_char {
    let msg: &'static CStr = match s {
        VkhStatus::Ok => c"ok",
        VkhStatus::NullPointer => c"null pointer",
        VkhStatus::InvalidUtf8 => c"invalid UTF-8",
        VkhStatus::Parse => c"Gauss code parse error",
        VkhStatus::Disconnected => c"diagram is not connected",
        VkhStatus::NotColorable => c"diagram is not checkerboard colorable",
        VkhStatus::NotAKnot => c"diagram is not a knot",
        VkhStatus::TooLarge => c"diagram too large",
        VkhStatus::Internal => c"internal invariant violated",
        VkhStatus::Other => c"error",
    };
    msg.as_ptr()
}
