//! C ABI for cyclosemi.
//!
//! Every function returns a [`CsStatus`]; results go through out-pointers.
//! Semigroups are opaque [`CsSemigroup`] handles released with
//! [`cs_semigroup_free`]. Strings returned by the library are released with
//! [`cs_string_free`]. No entry point unwinds across the boundary.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclosemi::{is_cyclotomic, Error, FamilyParams, IntPoly, NumericalSemigroup};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// Generators are empty, contain 0, or have gcd greater than 1.
    NotNumericalSemigroup = 3,
    /// The caller's buffer is too short; the required length was written.
    BufferTooSmall = 4,
    /// A value does not fit the C type.
    Overflow = 5,
    NoConvergence = 6,
    /// n is below the threshold the check needs.
    BelowThreshold = 7,
    Panic = 8,
}

impl From<Error> for CsStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::EmptyGenerators | Error::NonPositiveGenerator(_) | Error::GcdNotOne(_) => {
                CsStatus::NotNumericalSemigroup
            }
            Error::NoConvergence { .. } => CsStatus::NoConvergence,
            Error::BelowThreshold { .. } => CsStatus::BelowThreshold,
            _ => CsStatus::InvalidArgument,
        }
    }
}

/// Opaque semigroup handle.
pub struct CsSemigroup {
    inner: NumericalSemigroup,
}

/// Outcome of the root-modulus band check for the t = 0 family member.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CsBandReport {
    pub n: u64,
    pub half_width: f64,
    pub lower: f64,
    pub upper: f64,
    pub max_band_violation: f64,
    pub max_distance_from_circle: f64,
    pub off_circle_witness: bool,
    pub pass: bool,
}

fn guard(f: impl FnOnce() -> Result<(), CsStatus>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CsStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => CsStatus::Panic,
    }
}

unsafe fn handle<'a>(s: *const CsSemigroup) -> Result<&'a NumericalSemigroup, CsStatus> {
    s.as_ref().map(|h| &h.inner).ok_or(CsStatus::NullPointer)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), CsStatus> {
    if out.is_null() {
        return Err(CsStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a, T>(data: *const T, len: usize) -> Result<&'a [T], CsStatus> {
    if len == 0 {
        Ok(&[])
    } else if data.is_null() {
        Err(CsStatus::NullPointer)
    } else {
        Ok(std::slice::from_raw_parts(data, len))
    }
}

unsafe fn publish(s: NumericalSemigroup, out: *mut *mut CsSemigroup) -> Result<(), CsStatus> {
    write(out, Box::into_raw(Box::new(CsSemigroup { inner: s })))
}

/// Builds the semigroup generated by `gens[0..len]`.
///
/// # Safety
/// `gens` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_new(gens: *const u64, len: usize, out: *mut *mut CsSemigroup) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(CsStatus::NullPointer);
        }
        let s = NumericalSemigroup::from_generators(slice(gens, len)?)?;
        publish(s, out)
    })
}

/// Builds the family member S(n, t).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_family_new(n: u64, t: u64, out: *mut *mut CsSemigroup) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(CsStatus::NullPointer);
        }
        publish(FamilyParams::new(n, t)?.semigroup(), out)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_free(s: *mut CsSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Frobenius number; -1 for the semigroup of all naturals.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_frobenius(s: *const CsSemigroup, out: *mut i64) -> CsStatus {
    guard(|| write(out, handle(s)?.frobenius()))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_genus(s: *const CsSemigroup, out: *mut u64) -> CsStatus {
    guard(|| write(out, handle(s)?.genus() as u64))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_embedding_dimension(s: *const CsSemigroup, out: *mut u64) -> CsStatus {
    guard(|| write(out, handle(s)?.embedding_dimension() as u64))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_is_symmetric(s: *const CsSemigroup, out: *mut bool) -> CsStatus {
    guard(|| write(out, handle(s)?.is_symmetric()))
}

/// Whether the semigroup polynomial is a product of cyclotomic polynomials.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_is_cyclotomic(s: *const CsSemigroup, out: *mut bool) -> CsStatus {
    guard(|| {
        let p = handle(s)?.polynomial();
        write(out, is_cyclotomic(&p)?)
    })
}

/// Copies the semigroup polynomial's coefficients, constant term first, into
/// `buf`. `*len` always receives the coefficient count; if it exceeds `cap`
/// nothing is copied and `BufferTooSmall` is returned. `buf` may be null
/// when `cap` is 0.
///
/// # Safety
/// `buf` must have room for `cap` values; `s` must be live; `len` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_polynomial(
    s: *const CsSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        if len.is_null() {
            return Err(CsStatus::NullPointer);
        }
        let coeffs = s.polynomial().to_i64_vec().ok_or(CsStatus::Overflow)?;
        write(len, coeffs.len())?;
        if coeffs.len() > cap {
            return Err(CsStatus::BufferTooSmall);
        }
        if buf.is_null() {
            return Err(CsStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(coeffs.as_ptr(), buf, coeffs.len());
        Ok(())
    })
}

/// Writes the analysis record as a JSON string. Release it with
/// [`cs_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn cs_semigroup_analysis_json(s: *const CsSemigroup, out: *mut *mut c_char) -> CsStatus {
    guard(|| {
        let s = handle(s)?;
        if out.is_null() {
            return Err(CsStatus::NullPointer);
        }
        let json = serde_json::to_string(&s.analysis()).map_err(|_| CsStatus::InvalidArgument)?;
        let c = CString::new(json).map_err(|_| CsStatus::InvalidArgument)?;
        write(out, c.into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Whether `coeffs[0..len]` (constant term first) is a product of cyclotomic
/// polynomials. Trailing zeros are ignored; the zero polynomial is an
/// `InvalidArgument`.
///
/// # Safety
/// `coeffs` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_poly_is_cyclotomic(coeffs: *const i64, len: usize, out: *mut bool) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(CsStatus::NullPointer);
        }
        let p = IntPoly::from_i64(slice(coeffs, len)?);
        write(out, is_cyclotomic(&p)?)
    })
}

/// Root-modulus band check for S(n, 0), n >= 12.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cs_band_check(n: u64, out: *mut CsBandReport) -> CsStatus {
    guard(|| {
        if out.is_null() {
            return Err(CsStatus::NullPointer);
        }
        let r = cyclosemi::rootloc::modulus_band_check(n)?;
        write(
            out,
            CsBandReport {
                n: r.n,
                half_width: r.half_width,
                lower: r.lower,
                upper: r.upper,
                max_band_violation: r.max_band_violation,
                max_distance_from_circle: r.max_distance_from_circle,
                off_circle_witness: r.off_circle_witness,
                pass: r.pass,
            },
        )
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn cs_status_message(status: CsStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        CsStatus::Ok => b"ok\0",
        CsStatus::NullPointer => b"null pointer\0",
        CsStatus::InvalidArgument => b"invalid argument\0",
        CsStatus::NotNumericalSemigroup => b"generators do not define a numerical semigroup\0",
        CsStatus::BufferTooSmall => b"buffer too small\0",
        CsStatus::Overflow => b"value does not fit\0",
        CsStatus::NoConvergence => b"root finder did not converge\0",
        CsStatus::BelowThreshold => b"n below threshold\0",
        CsStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}
