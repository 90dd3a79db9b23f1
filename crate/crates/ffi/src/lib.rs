//! C ABI for the `poisson3` engine.
//!
//! Every function returns a [`P3Status`]; results go through out-pointers.
//! Objects are opaque handles released with their `*_free` function, and
//! strings returned by the library are released with [`p3_string_free`].
//! After a non-`OK` status, [`p3_last_error`] describes the failure on the
//! calling thread.
//!
//! Expressions use `dx`, `dy`, `dz` for the coordinate vector fields, e.g.
//! `"z*dx^dy"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use poisson3::cohomology::algebra_table;
use poisson3::{
    format_multivector, output, parse_multivector, poisson_differential, verify, AlgebraKind,
    CohomologyTable, Error,
};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P3Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidParameter = 4,
    UnknownAlgebra = 5,
    UnknownId = 6,
    OutOfRange = 7,
    Engine = 8,
    Panic = 9,
}

/// An algebra from the registry, with its linear Poisson bivector.
pub struct P3Algebra {
    kind: AlgebraKind,
}

/// A computed cohomology table.
pub struct P3Table {
    table: CohomologyTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(P3Status, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Syntax { .. } | Error::MixedDegree { .. } | Error::ZeroDenominator { .. } => {
                P3Status::Parse
            }
            Error::InvalidParameter(_) => P3Status::InvalidParameter,
            Error::UnknownAlgebra(_) => P3Status::UnknownAlgebra,
            Error::UnknownId(_) => P3Status::UnknownId,
            _ => P3Status::Engine,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(P3Status::NullPointer, format!("`{what}` is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> P3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => P3Status::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            P3Status::Panic
        }
    }
}

/// # Safety
/// `p` is null or a valid nul-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(P3Status::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// # Safety
/// `p` is null or a handle obtained from this library and not yet freed.
unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn p3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn p3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Looks up an algebra by name (`"heisenberg"`, `"book"`, ...). `tau` is
/// `"p/q"` for `book` and `spiral` and null otherwise.
///
/// # Safety
/// `name` and `tau` are null or nul-terminated; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_algebra_new(
    name: *const c_char,
    tau: *const c_char,
    out: *mut *mut P3Algebra,
) -> P3Status {
    guard(|| {
        let name = text(name, "name")?;
        let tau = if tau.is_null() {
            None
        } else {
            Some(text(tau, "tau")?)
        };
        let kind = AlgebraKind::from_name(name, tau)?;
        put(out, Box::into_raw(Box::new(P3Algebra { kind })), "out")
    })
}

/// # Safety
/// `alg` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn p3_algebra_free(alg: *mut P3Algebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// The linear Poisson bivector, formatted.
///
/// # Safety
/// `alg` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_algebra_bivector(alg: *const P3Algebra, out: *mut *mut c_char) -> P3Status {
    guard(|| {
        let alg = handle(alg, "alg")?;
        put(
            out,
            owned(format_multivector(&alg.kind.poisson_bivector())),
            "out",
        )
    })
}

/// `d_π(expr)` for the bivector of `alg`.
///
/// # Safety
/// `alg` is a live handle, `expr` nul-terminated, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_poisson_differential(
    alg: *const P3Algebra,
    expr: *const c_char,
    out: *mut *mut c_char,
) -> P3Status {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let v = parse_multivector(text(expr, "expr")?)?;
        let dv = poisson_differential(&alg.kind.poisson_bivector(), &v);
        put(out, owned(format_multivector(&dv)), "out")
    })
}

/// Schouten bracket of two expressions.
///
/// # Safety
/// `a` and `b` are nul-terminated; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_schouten(a: *const c_char, b: *const c_char, out: *mut *mut c_char) -> P3Status {
    guard(|| {
        let a = parse_multivector(text(a, "a")?)?;
        let b = parse_multivector(text(b, "b")?)?;
        let c = poisson3::algebra::try_schouten(&a, &b)?;
        put(out, owned(format_multivector(&c)), "out")
    })
}

/// Cohomology table of `alg` in degrees `0..=dmax`.
///
/// # Safety
/// `alg` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_table_compute(
    alg: *const P3Algebra,
    dmax: u32,
    out: *mut *mut P3Table,
) -> P3Status {
    guard(|| {
        let alg = handle(alg, "alg")?;
        let table = algebra_table(&alg.kind, dmax)?;
        put(out, Box::into_raw(Box::new(P3Table { table })), "out")
    })
}

/// # Safety
/// `table` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn p3_table_free(table: *mut P3Table) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_table_dmax(table: *const P3Table, out: *mut u32) -> P3Status {
    guard(|| put(out, handle(table, "table")?.table.dmax, "out"))
}

/// `dim H^q_d`.
///
/// # Safety
/// `table` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_table_dim(table: *const P3Table, q: u32, d: u32, out: *mut usize) -> P3Status {
    guard(|| {
        let t = &handle(table, "table")?.table;
        if q > 3 || d > t.dmax {
            return Err(Failure(
                P3Status::OutOfRange,
                format!("cell ({q}, {d}) outside the table"),
            ));
        }
        put(out, t.cell(q as usize, d).dim_h, "out")
    })
}

/// Writes the four totals `H^0..H^3` to `out[0..4]`.
///
/// # Safety
/// `table` is a live handle; `out` points to 4 writable `size_t`.
#[no_mangle]
pub unsafe extern "C" fn p3_table_totals(table: *const P3Table, out: *mut usize) -> P3Status {
    guard(|| {
        let t = &handle(table, "table")?.table;
        if out.is_null() {
            return Err(null("out"));
        }
        for (i, v) in t.totals.iter().enumerate() {
            out.add(i).write(*v);
        }
        Ok(())
    })
}

/// The table as a JSON document.
///
/// # Safety
/// `table` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_table_json(table: *const P3Table, out: *mut *mut c_char) -> P3Status {
    guard(|| put(out, owned(output::to_json(&handle(table, "table")?.table)), "out"))
}

/// Checks the engine against the expected result `id` on degrees `0..=dmax`;
/// `dmax = 0` uses the stored range. `passed` receives 1 or 0, and
/// `report` (if not null) a text report.
///
/// # Safety
/// `id` is nul-terminated; `passed` is valid for writes; `report` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn p3_verify(
    id: *const c_char,
    dmax: u32,
    passed: *mut i32,
    report: *mut *mut c_char,
) -> P3Status {
    guard(|| {
        let id = text(id, "id")?;
        let dmax = if dmax == 0 {
            verify::expected_table(id)?.dmax
        } else {
            dmax
        };
        let r = verify::verify(id, dmax)?;
        put(passed, i32::from(r.pass), "passed")?;
        if !report.is_null() {
            report.write(owned(r.to_string()));
        }
        Ok(())
    })
}

/// Library version, static; do not free.
#[no_mangle]
pub extern "C" fn p3_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
