//! C ABI over `tlfactor`.
//!
//! Every function returns a [`TlfStatus`]; results come back through out-pointers.
//! Diagrams are opaque `TlfDiagram` handles released with [`tlf_diagram_free`],
//! strings are released with [`tlf_string_free`]. After a failure,
//! [`tlf_last_error_message`] describes it on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tlfactor::heaps::Heap;
use tlfactor::{catalan, factor, Diagram, Error, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TlfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidDiagram = 4,
    RankMismatch = 5,
    IndexOutOfRange = 6,
    BufferTooSmall = 7,
    BudgetExceeded = 8,
    Internal = 9,
}

/// Opaque handle to a diagram.
pub struct TlfDiagram {
    inner: Diagram,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = msg);
}

fn status_of(e: &Error) -> TlfStatus {
    match e {
        Error::Parse(_) => TlfStatus::Parse,
        Error::RankMismatch { .. } => TlfStatus::RankMismatch,
        Error::LetterOutOfRange { .. }
        | Error::IndexOutOfRange { .. }
        | Error::OutOfRange { .. } => TlfStatus::IndexOutOfRange,
        Error::EmptyBox
        | Error::NotPerfectMatching(_)
        | Error::CrossingChords { .. }
        | Error::InconsistentCrossingOrder(_)
        | Error::CyclicRegionGraph => TlfStatus::InvalidDiagram,
        Error::BudgetExceeded { .. }
        | Error::ClassTooLarge { .. }
        | Error::SearchBudgetExceeded { .. } => TlfStatus::BudgetExceeded,
        _ => TlfStatus::Internal,
    }
}

fn fail(e: Error) -> TlfStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> TlfStatus) -> TlfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            TlfStatus::Internal
        }
    }
}

fn null(what: &str) -> TlfStatus {
    set_error(format!("{what} is null"));
    TlfStatus::NullPointer
}

unsafe fn put_diagram(out: *mut *mut TlfDiagram, d: Diagram) {
    *out = Box::into_raw(Box::new(TlfDiagram { inner: d }));
}

unsafe fn word_from(letters: *const usize, len: usize, n: usize) -> Result<Word, TlfStatus> {
    let letters = if len == 0 {
        Vec::new()
    } else if letters.is_null() {
        return Err(null("letters"));
    } else {
        std::slice::from_raw_parts(letters, len).to_vec()
    };
    Word::new(n, letters).map_err(fail)
}

/// Message for the last failure on this thread; empty if none. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tlf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn tlf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `d` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_free(d: *mut TlfDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Parses `{"k": K, "chords": [["N",1,"S",2], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_from_json(
    json: *const c_char,
    out: *mut *mut TlfDiagram,
) -> TlfStatus {
    guard(|| {
        if json.is_null() {
            return null("json");
        }
        if out.is_null() {
            return null("out");
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            set_error("json is not UTF-8");
            return TlfStatus::InvalidUtf8;
        };
        match Diagram::from_json(text) {
            Ok(d) => {
                put_diagram(out, d);
                TlfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Writes a newly allocated JSON string to `out`; free it with [`tlf_string_free`].
///
/// # Safety
/// `d` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_to_json(
    d: *const TlfDiagram,
    out: *mut *mut c_char,
) -> TlfStatus {
    guard(|| {
        if d.is_null() {
            return null("diagram");
        }
        if out.is_null() {
            return null("out");
        }
        match CString::new((*d).inner.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                TlfStatus::Ok
            }
            Err(_) => {
                set_error("JSON contained NUL");
                TlfStatus::Internal
            }
        }
    })
}

/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_identity(k: usize, out: *mut *mut TlfDiagram) -> TlfStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        if k == 0 {
            return fail(Error::EmptyBox);
        }
        put_diagram(out, Diagram::identity(k));
        TlfStatus::Ok
    })
}

/// The diagram of `s_i` in rank `n` (`n + 1` nodes per face).
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_simple(
    i: usize,
    n: usize,
    out: *mut *mut TlfDiagram,
) -> TlfStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        match Diagram::simple(i, n) {
            Ok(d) => {
                put_diagram(out, d);
                TlfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Product of the simple diagrams of `letters[0..len]`; the removed loops go to
/// `loops`.
///
/// # Safety
/// `letters` must point to `len` readable values (or be null when `len` is 0);
/// `loops` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_from_word(
    letters: *const usize,
    len: usize,
    n: usize,
    loops: *mut usize,
    out: *mut *mut TlfDiagram,
) -> TlfStatus {
    guard(|| {
        if loops.is_null() || out.is_null() {
            return null("out");
        }
        let word = match word_from(letters, len, n) {
            Ok(w) => w,
            Err(s) => return s,
        };
        let (l, d) = Diagram::from_word(&word);
        *loops = l;
        put_diagram(out, d);
        TlfStatus::Ok
    })
}

/// Stacks `top` over `bottom`.
///
/// # Safety
/// `top` and `bottom` must be live handles; `loops` and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_multiply(
    top: *const TlfDiagram,
    bottom: *const TlfDiagram,
    loops: *mut usize,
    out: *mut *mut TlfDiagram,
) -> TlfStatus {
    guard(|| {
        if top.is_null() || bottom.is_null() {
            return null("diagram");
        }
        if loops.is_null() || out.is_null() {
            return null("out");
        }
        match (*top).inner.multiply(&(*bottom).inner) {
            Ok((l, d)) => {
                *loops = l;
                put_diagram(out, d);
                TlfStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Writes the normal-form word of `d` to `buf`. `len` always receives the word
/// length; if it exceeds `capacity` nothing is written and `BufferTooSmall` is
/// returned.
///
/// # Safety
/// `d` must be a live handle, `buf` must have room for `capacity` values (or be
/// null when `capacity` is 0) and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_factor(
    d: *const TlfDiagram,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> TlfStatus {
    guard(|| {
        if d.is_null() {
            return null("diagram");
        }
        if len.is_null() {
            return null("len");
        }
        let word = match factor(&(*d).inner) {
            Ok(w) => w,
            Err(e) => return fail(e),
        };
        *len = word.len();
        if word.len() > capacity {
            set_error(format!(
                "word has {} letters, buffer holds {capacity}",
                word.len()
            ));
            return TlfStatus::BufferTooSmall;
        }
        if !word.is_empty() {
            if buf.is_null() {
                return null("buf");
            }
            ptr::copy_nonoverlapping(word.letters().as_ptr(), buf, word.len());
        }
        TlfStatus::Ok
    })
}

/// Nodes per face.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_k(d: *const TlfDiagram, out: *mut usize) -> TlfStatus {
    if d.is_null() {
        return null("diagram");
    }
    if out.is_null() {
        return null("out");
    }
    *out = (*d).inner.k();
    TlfStatus::Ok
}

/// Rank `n = k - 1`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_diagram_rank(d: *const TlfDiagram, out: *mut usize) -> TlfStatus {
    if d.is_null() {
        return null("diagram");
    }
    if out.is_null() {
        return null("out");
    }
    *out = (*d).inner.rank();
    TlfStatus::Ok
}

/// Decimal string of the `m`-th Catalan number; free it with [`tlf_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_catalan(m: usize, out: *mut *mut c_char) -> TlfStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        *out = CString::new(catalan(m).to_string())
            .unwrap_or_default()
            .into_raw();
        TlfStatus::Ok
    })
}

/// Whether `letters[0..len]` is a reduced word of a fully commutative element.
///
/// # Safety
/// `letters` must point to `len` readable values (or be null when `len` is 0) and
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tlf_word_is_fc_reduced(
    letters: *const usize,
    len: usize,
    n: usize,
    out: *mut bool,
) -> TlfStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        match word_from(letters, len, n) {
            Ok(w) => {
                *out = Heap::from_word(&w).is_fc_reduced();
                TlfStatus::Ok
            }
            Err(s) => s,
        }
    })
}
