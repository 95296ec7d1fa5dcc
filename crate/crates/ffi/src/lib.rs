//! C ABI over `quadpow`.
//!
//! Every entry point returns a [`QpStatus`] and writes its result through an
//! out-pointer. Results are opaque [`QpValue`] handles owned by the caller and
//! released with [`qp_value_free`]. Strings handed out by the library are
//! released with [`qp_string_free`]. On failure, [`qp_last_error_message`]
//! describes the most recent error on the calling thread.
//!
//! A `modulus` argument of `0` selects exact big integers; any other value
//! selects the integers modulo `modulus`, which must then be at least 2.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use quadpow::fibapp::{fib_mod, fib_nm_identity, fib_with, lucas, lucas_mod};
use quadpow::quadratic::{p_m, p_m_symbolic, x_power};
use quadpow::ring::{BivariatePoly, IntegerRing, ModRing, ModValue, Ring};
use quadpow::{Engine, Error, Mat2, QuadParams};

pub const QP_ENGINE_ITERATIVE: u32 = 0;
pub const QP_ENGINE_BINOMIAL: u32 = 1;
pub const QP_ENGINE_DOUBLING: u32 = 2;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// An argument outside an operation's domain, e.g. modulus 1 or `m = 0`
    /// for the binomial engine.
    Domain = 4,
    InvalidEngine = 5,
    WrongKind = 6,
    IndexOutOfRange = 7,
    Overflow = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpKind {
    Scalar = 0,
    /// `(a, b)` with `x^m = a*x + b`.
    LinearForm = 1,
    /// Row-major 2x2 matrix.
    Matrix = 2,
    Polynomial = 3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Scalar {
    Int(BigInt),
    Mod(ModValue),
}

impl Scalar {
    fn render(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Mod(v) => v.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Scalar(Scalar),
    Linear([Scalar; 2]),
    Matrix([Scalar; 4]),
    Poly(BivariatePoly),
}

/// Opaque result handle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QpValue {
    repr: Repr,
}

impl QpValue {
    fn boxed(repr: Repr) -> *mut QpValue {
        Box::into_raw(Box::new(QpValue { repr }))
    }

    fn kind(&self) -> QpKind {
        match self.repr {
            Repr::Scalar(_) => QpKind::Scalar,
            Repr::Linear(_) => QpKind::LinearForm,
            Repr::Matrix(_) => QpKind::Matrix,
            Repr::Poly(_) => QpKind::Polynomial,
        }
    }

    fn entries(&self) -> &[Scalar] {
        match &self.repr {
            Repr::Scalar(s) => std::slice::from_ref(s),
            Repr::Linear(e) => e,
            Repr::Matrix(e) => e,
            Repr::Poly(_) => &[],
        }
    }

    fn render(&self) -> String {
        match &self.repr {
            Repr::Scalar(s) => s.render(),
            Repr::Linear([a, b]) => format!("{},{}", a.render(), b.render()),
            Repr::Matrix([a, b, c, d]) => {
                format!("{},{};{},{}", a.render(), b.render(), c.render(), d.render())
            }
            Repr::Poly(p) => p.to_string(),
        }
    }
}

struct Failure {
    status: QpStatus,
    message: String,
}

impl Failure {
    fn new(status: QpStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => QpStatus::Parse,
            _ => QpStatus::Domain,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: Option<String>) {
    let message = message.map(|m| CString::new(m.replace('\0', "?")).expect("nul bytes removed"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> QpStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|panic| {
        let text = panic
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| panic.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "unknown panic".to_string());
        Err(Failure::new(QpStatus::Panic, format!("internal panic: {text}")))
    });
    match outcome {
        Ok(()) => {
            set_last_error(None);
            QpStatus::Ok
        }
        Err(f) => {
            set_last_error(Some(f.message));
            f.status
        }
    }
}

fn engine(code: u32) -> Result<Engine, Failure> {
    match code {
        QP_ENGINE_ITERATIVE => Ok(Engine::Iterative),
        QP_ENGINE_BINOMIAL => Ok(Engine::Binomial),
        QP_ENGINE_DOUBLING => Ok(Engine::Doubling),
        other => Err(Failure::new(
            QpStatus::InvalidEngine,
            format!("unknown engine code {other}"),
        )),
    }
}

/// # Safety
/// `s` must be null or point to a NUL-terminated string.
unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::new(QpStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure::new(QpStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(QpStatus::NullPointer, "output pointer is null"));
    }
    // SAFETY: non-null, and the caller promises it points to writable storage.
    unsafe { out.write(value) };
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure::new(QpStatus::NullPointer, "output pointer is null"))
    } else {
        Ok(())
    }
}

/// Runs a ring-generic computation in the ring selected by `modulus`.
trait RingTask {
    fn run<R: Ring>(self, ring: &R, lift: fn(R::Elem) -> Scalar) -> Result<Repr, Failure>;
}

fn in_ring(modulus: u64, task: impl RingTask) -> Result<Repr, Failure> {
    if modulus == 0 {
        task.run(&IntegerRing, Scalar::Int)
    } else {
        task.run(&ModRing::new(modulus)?, Scalar::Mod)
    }
}

fn params<R: Ring>(ring: &R, t: &str, d: &str) -> Result<QuadParams<R::Elem>, Failure> {
    let parse = |s: &str, name: &str| {
        ring.parse(s)
            .map_err(|e| Failure::new(QpStatus::Parse, format!("{name}: {e}")))
    };
    Ok(QuadParams {
        t: parse(t, "t")?,
        d: parse(d, "d")?,
    })
}

/// `P_m(t, d)` where `t` and `d` are decimal strings (or `r mod n` when a
/// modulus is given).
///
/// # Safety
/// `t` and `d` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_pm(
    t: *const c_char,
    d: *const c_char,
    m: u64,
    engine_code: u32,
    modulus: u64,
    out: *mut *mut QpValue,
) -> QpStatus {
    struct Task<'a>(&'a str, &'a str, u64, Engine);
    impl RingTask for Task<'_> {
        fn run<R: Ring>(self, ring: &R, lift: fn(R::Elem) -> Scalar) -> Result<Repr, Failure> {
            let params = params(ring, self.0, self.1)?;
            Ok(Repr::Scalar(lift(p_m(ring, &params, self.2, self.3)?)))
        }
    }
    guard(|| {
        check_out(out)?;
        let task = Task(text(t, "t")?, text(d, "d")?, m, engine(engine_code)?);
        write_out(out, QpValue::boxed(in_ring(modulus, task)?))
    })
}

/// The reduced form `x^m = a*x + b` modulo `x^2 - t*x + d`, as a
/// [`QpKind::LinearForm`] value.
///
/// # Safety
/// As for [`qp_pm`].
#[no_mangle]
pub unsafe extern "C" fn qp_xpow(
    t: *const c_char,
    d: *const c_char,
    m: u64,
    engine_code: u32,
    modulus: u64,
    out: *mut *mut QpValue,
) -> QpStatus {
    struct Task<'a>(&'a str, &'a str, u64, Engine);
    impl RingTask for Task<'_> {
        fn run<R: Ring>(self, ring: &R, lift: fn(R::Elem) -> Scalar) -> Result<Repr, Failure> {
            let params = params(ring, self.0, self.1)?;
            let form = x_power(ring, &params, self.2, self.3)?;
            Ok(Repr::Linear([lift(form.a), lift(form.b)]))
        }
    }
    guard(|| {
        check_out(out)?;
        let task = Task(text(t, "t")?, text(d, "d")?, m, engine(engine_code)?);
        write_out(out, QpValue::boxed(in_ring(modulus, task)?))
    })
}

/// `M^m` for a matrix written `a,b;c,d`.
///
/// # Safety
/// `matrix` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_matpow(
    matrix: *const c_char,
    m: u64,
    engine_code: u32,
    modulus: u64,
    out: *mut *mut QpValue,
) -> QpStatus {
    struct Task<'a>(&'a str, u64, Engine);
    impl RingTask for Task<'_> {
        fn run<R: Ring>(self, ring: &R, lift: fn(R::Elem) -> Scalar) -> Result<Repr, Failure> {
            let power = Mat2::parse(ring, self.0)?.pow_ch(ring, self.1, self.2)?;
            Ok(Repr::Matrix([
                lift(power.e11),
                lift(power.e12),
                lift(power.e21),
                lift(power.e22),
            ]))
        }
    }
    guard(|| {
        check_out(out)?;
        let task = Task(text(matrix, "matrix")?, m, engine(engine_code)?);
        write_out(out, QpValue::boxed(in_ring(modulus, task)?))
    })
}

/// The Fibonacci number `F_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_fib(
    n: u64,
    engine_code: u32,
    modulus: u64,
    out: *mut *mut QpValue,
) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let engine = engine(engine_code)?;
        let value = if modulus == 0 {
            Scalar::Int(fib_with(n, engine)?)
        } else {
            Scalar::Mod(fib_mod(n, modulus, engine)?)
        };
        write_out(out, QpValue::boxed(Repr::Scalar(value)))
    })
}

/// The Lucas number `L_n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_lucas(n: u64, modulus: u64, out: *mut *mut QpValue) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let value = if modulus == 0 {
            Scalar::Int(lucas(n))
        } else {
            Scalar::Mod(lucas_mod(n, modulus)?)
        };
        write_out(out, QpValue::boxed(Repr::Scalar(value)))
    })
}

/// `F_(nm)` evaluated through its expansion in `F_n` and `L_n`. Needs `n, m >= 1`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_fib_nm(n: u64, m: u64, out: *mut *mut QpValue) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let value = fib_nm_identity(n, m)?;
        write_out(out, QpValue::boxed(Repr::Scalar(Scalar::Int(value))))
    })
}

/// The polynomial `P_m(T, D)` with integer coefficients.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_symbolic(m: u64, out: *mut *mut QpValue) -> QpStatus {
    guard(|| {
        check_out(out)?;
        write_out(out, QpValue::boxed(Repr::Poly(p_m_symbolic(m))))
    })
}

/// # Safety
/// `value` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qp_value_kind(value: *const QpValue, out: *mut QpKind) -> QpStatus {
    guard(|| {
        let value = value
            .as_ref()
            .ok_or_else(|| Failure::new(QpStatus::NullPointer, "value is null"))?;
        write_out(out, value.kind())
    })
}

/// Number of scalar entries: 1 for a scalar, 2 for a linear form, 4 for a
/// matrix, 0 for a polynomial.
///
/// # Safety
/// `value` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn qp_value_len(value: *const QpValue, out: *mut usize) -> QpStatus {
    guard(|| {
        let value = value
            .as_ref()
            .ok_or_else(|| Failure::new(QpStatus::NullPointer, "value is null"))?;
        write_out(out, value.entries().len())
    })
}

/// A new scalar handle holding entry `index` (row-major for matrices).
///
/// # Safety
/// `value` must be null or a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_value_entry(
    value: *const QpValue,
    index: usize,
    out: *mut *mut QpValue,
) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let value = value
            .as_ref()
            .ok_or_else(|| Failure::new(QpStatus::NullPointer, "value is null"))?;
        let entries = value.entries();
        let entry = entries.get(index).ok_or_else(|| {
            Failure::new(
                QpStatus::IndexOutOfRange,
                format!("index {index} out of range for {} entries", entries.len()),
            )
        })?;
        write_out(out, QpValue::boxed(Repr::Scalar(entry.clone())))
    })
}

/// Text form of a value: integers in decimal, residues as `r mod n`, linear
/// forms as `a,b`, matrices as `a,b;c,d`, polynomials as e.g. `T^2 - D`.
/// Release the string with [`qp_string_free`].
///
/// # Safety
/// `value` must be null or a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_value_to_string(
    value: *const QpValue,
    out: *mut *mut c_char,
) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let value = value
            .as_ref()
            .ok_or_else(|| Failure::new(QpStatus::NullPointer, "value is null"))?;
        let s = CString::new(value.render()).expect("renderings contain no NUL");
        write_out(out, s.into_raw())
    })
}

/// A scalar as `int64_t`. Residues give their representative in `[0, n)`.
///
/// # Safety
/// `value` must be null or a live handle from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qp_value_to_i64(value: *const QpValue, out: *mut i64) -> QpStatus {
    guard(|| {
        check_out(out)?;
        let value = value
            .as_ref()
            .ok_or_else(|| Failure::new(QpStatus::NullPointer, "value is null"))?;
        let Repr::Scalar(scalar) = &value.repr else {
            return Err(Failure::new(QpStatus::WrongKind, "value is not a scalar"));
        };
        let n = match scalar {
            Scalar::Int(n) => n.to_i64(),
            Scalar::Mod(v) => i64::try_from(v.residue()).ok(),
        };
        let n = n.ok_or_else(|| {
            Failure::new(QpStatus::Overflow, format!("{} does not fit in int64_t", scalar.render()))
        })?;
        write_out(out, n)
    })
}

/// # Safety
/// `value` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qp_value_free(value: *mut QpValue) {
    if !value.is_null() {
        drop(Box::from_raw(value));
    }
}

/// # Safety
/// `s` must be null or a string from [`qp_value_to_string`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null if the most
/// recent status-returning call succeeded. Valid until the next library call
/// on the same thread.
#[no_mangle]
pub extern "C" fn qp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, e.g. `0.1.0`. Static storage; do not free.
#[no_mangle]
pub extern "C" fn qp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
