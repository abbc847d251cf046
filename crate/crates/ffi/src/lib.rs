//! C ABI over the `mwpoly` library.
//!
//! # Conventions
//!
//! Polynomials and hit lists are opaque handles created by this library and
//! released with the matching `*_free` function. Every fallible call
//! returns an [`MwStatus`]; results come back through out-pointers, which
//! are written only on [`MwStatus::Ok`]. After a failure,
//! [`mw_last_error_message`] describes it for the calling thread.
//!
//! Strings passed in must be NUL-terminated UTF-8. Strings handed out are
//! owned by the caller and released with [`mw_string_free`].
//!
//! Bit sequences (seeds, streams) are arrays of `uint8_t`, one element per
//! bit, holding 0 or 1.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use mwpoly::classify::{is_irreducible, is_primitive, period};
use mwpoly::divisibility::{corollary1_sweep, trinomial_multiples, verify_table1, TrinomialHit};
use mwpoly::lfsr::{prop2_check, Bits, LfsrSequence};
use mwpoly::oa::{strength_direct, strength_dual, WindowCode};
use mwpoly::{Error, MaxWeightPoly, Poly};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MwStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Domain = 3,
    DivisionByZero = 4,
    Unverifiable = 5,
    NotPrimitive = 6,
    NotSquarefree = 7,
    InvalidArgument = 8,
    IndexOutOfRange = 9,
    Panic = 10,
}

/// Opaque polynomial over GF(2).
pub struct MwPoly(Poly);

/// Opaque list of verified trinomial hits `(g, f, h)` with `g = f * h`.
pub struct MwHitList(Vec<TrinomialHit>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> MwStatus {
    match e {
        Error::DivisionByZero => MwStatus::DivisionByZero,
        Error::Parse { .. } => MwStatus::Parse,
        Error::MaxWeightDomain { .. }
        | Error::DegreeTooSmall { .. }
        | Error::ZeroPolynomial { .. }
        | Error::ConstantTermZero { .. }
        | Error::GcdOfZeros
        | Error::MersenneRange { .. } => MwStatus::Domain,
        Error::FactorizationIncomplete { .. } | Error::Unverifiable { .. } => MwStatus::Unverifiable,
        Error::NotPrimitive { .. } => MwStatus::NotPrimitive,
        Error::NotSquarefree { .. } => MwStatus::NotSquarefree,
        _ => MwStatus::InvalidArgument,
    }
}

/// Runs `body`, translating errors and panics into status codes.
fn guard<F>(body: F) -> MwStatus
where
    F: FnOnce() -> Result<(), MwStatus>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MwStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            MwStatus::Panic
        }
    }
}

fn fail(e: Error) -> MwStatus {
    set_last_error(&e.to_string());
    status_of(&e)
}

unsafe fn poly_ref<'a>(p: *const MwPoly) -> Result<&'a Poly, MwStatus> {
    if p.is_null() {
        set_last_error("null polynomial handle");
        return Err(MwStatus::NullPointer);
    }
    Ok(&(*p).0)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), MwStatus> {
    if out.is_null() {
        set_last_error("null output pointer");
        return Err(MwStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn boxed(p: Poly) -> *mut MwPoly {
    Box::into_raw(Box::new(MwPoly(p)))
}

unsafe fn read_bits(bits: *const u8, len: usize) -> Result<Bits, MwStatus> {
    if bits.is_null() && len > 0 {
        set_last_error("null bit array");
        return Err(MwStatus::NullPointer);
    }
    let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(bits, len) };
    Ok(Bits::from_bools(&slice.iter().map(|&b| b != 0).collect::<Vec<_>>()))
}

/// Message for the last failed call on this thread. Valid until the next
/// call into this library from the same thread; never NULL.
#[no_mangle]
pub extern "C" fn mw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn mw_status_str(status: MwStatus) -> *const c_char {
    let s: &'static CStr = match status {
        MwStatus::Ok => c"ok",
        MwStatus::NullPointer => c"null pointer",
        MwStatus::Parse => c"parse error",
        MwStatus::Domain => c"argument outside the operation's domain",
        MwStatus::DivisionByZero => c"division by the zero polynomial",
        MwStatus::Unverifiable => c"result could not be verified",
        MwStatus::NotPrimitive => c"polynomial is not primitive",
        MwStatus::NotSquarefree => c"polynomial is not squarefree",
        MwStatus::InvalidArgument => c"invalid argument",
        MwStatus::IndexOutOfRange => c"index out of range",
        MwStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `x^5+x^4+1`, `0x31` or `mw:7,2`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_parse(text: *const c_char, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        if text.is_null() {
            set_last_error("null string");
            return Err(MwStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_string_lossy();
        let p = mwpoly::cli::parse_poly_arg(&s).map_err(fail)?.poly();
        write_out(out, boxed(p))
    })
}

/// Polynomial with coefficient bits `bits` (bit i = x^i).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_from_u64(bits: u64, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| write_out(out, boxed(Poly::from_u64(bits))))
}

/// Expansion of the maximum-weight polynomial `MW(m, l)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_maxweight(m: u32, l: u32, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let mw = MaxWeightPoly::new(m, l).map_err(fail)?;
        write_out(out, boxed(mw.expand()))
    })
}

/// # Safety
/// `p` must be a live handle from this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_free(p: *mut MwPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_clone(p: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let p = poly_ref(p)?;
        write_out(out, boxed(p.clone()))
    })
}

/// Text form such as `x^5+x^4+1`; free with [`mw_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_to_string(p: *const MwPoly, out: *mut *mut c_char) -> MwStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let s = CString::new(p.to_string()).expect("no interior NUL");
        write_out(out, s.into_raw())
    })
}

/// Hex form such as `0x31`; free with [`mw_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_to_hex(p: *const MwPoly, out: *mut *mut c_char) -> MwStatus {
    guard(|| {
        let p = poly_ref(p)?;
        let s = CString::new(p.to_hex()).expect("no interior NUL");
        write_out(out, s.into_raw())
    })
}

/// Degree, -1 for the zero polynomial (and for a NULL handle).
///
/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_degree(p: *const MwPoly) -> i64 {
    poly_ref(p).map_or(-1, |p| p.degree() as i64)
}

/// Number of nonzero coefficients (0 for a NULL handle).
///
/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_weight(p: *const MwPoly) -> usize {
    poly_ref(p).map_or(0, |p| p.weight())
}

/// Whether two polynomials are equal; false if either handle is NULL.
///
/// # Safety
/// `a` and `b` must be live handles or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_equal(a: *const MwPoly, b: *const MwPoly) -> bool {
    matches!((poly_ref(a), poly_ref(b)), (Ok(a), Ok(b)) if a == b)
}

/// # Safety
/// `a`, `b` live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_add(a: *const MwPoly, b: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let (a, b) = (poly_ref(a)?, poly_ref(b)?);
        write_out(out, boxed(a.add(b)))
    })
}

/// # Safety
/// `a`, `b` live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_mul(a: *const MwPoly, b: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let (a, b) = (poly_ref(a)?, poly_ref(b)?);
        write_out(out, boxed(a.mul(b)))
    })
}

/// Quotient and remainder of `a / d`.
///
/// # Safety
/// `a`, `d` live handles; `quot` and `rem` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_divrem(
    a: *const MwPoly,
    d: *const MwPoly,
    quot: *mut *mut MwPoly,
    rem: *mut *mut MwPoly,
) -> MwStatus {
    guard(|| {
        let (a, d) = (poly_ref(a)?, poly_ref(d)?);
        if quot.is_null() || rem.is_null() {
            set_last_error("null output pointer");
            return Err(MwStatus::NullPointer);
        }
        let (q, r) = a.div_rem(d).map_err(fail)?;
        write_out(quot, boxed(q))?;
        write_out(rem, boxed(r))
    })
}

/// # Safety
/// `a`, `b` live handles; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_gcd(a: *const MwPoly, b: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let (a, b) = (poly_ref(a)?, poly_ref(b)?);
        write_out(out, boxed(a.gcd(b).map_err(fail)?))
    })
}

/// `x^e mod f`.
///
/// # Safety
/// `f` live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_powmod_x(e: u64, f: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        write_out(out, boxed(Poly::powmod_x(e, f).map_err(fail)?))
    })
}

/// # Safety
/// `p` live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_poly_reciprocal(p: *const MwPoly, out: *mut *mut MwPoly) -> MwStatus {
    guard(|| {
        let p = poly_ref(p)?;
        write_out(out, boxed(p.reciprocal().map_err(fail)?))
    })
}

/// # Safety
/// `f` live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_is_irreducible(f: *const MwPoly, out: *mut bool) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        write_out(out, is_irreducible(f).map_err(fail)?)
    })
}

/// Returns [`MwStatus::Unverifiable`] when `2^m - 1` cannot be factored.
///
/// # Safety
/// `f` live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_is_primitive(f: *const MwPoly, out: *mut bool) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        write_out(out, is_primitive(f).map_err(fail)?)
    })
}

/// Period of `f`. `*found` is false when the brute-force search hit `cap`.
///
/// # Safety
/// `f` live handle; `out` and `found` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_period(f: *const MwPoly, cap: u64, out: *mut u64, found: *mut bool) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        if out.is_null() {
            set_last_error("null output pointer");
            return Err(MwStatus::NullPointer);
        }
        let e = period(f, cap).map_err(fail)?;
        write_out(found, e.is_some())?;
        write_out(out, e.unwrap_or(0))
    })
}

/// Canonical trinomial multiples `x^a + x^b + 1` of `f` with `a <= max_deg`.
///
/// # Safety
/// `f` live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_trinomial_multiples(
    f: *const MwPoly,
    max_deg: usize,
    out: *mut *mut MwHitList,
) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        let hits = trinomial_multiples(f, max_deg).map_err(fail)?;
        write_out(out, Box::into_raw(Box::new(MwHitList(hits))))
    })
}

/// The exception table recomputed by exhaustive search.
///
/// # Safety
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_verify_table1(out: *mut *mut MwHitList) -> MwStatus {
    guard(|| write_out(out, Box::into_raw(Box::new(MwHitList(verify_table1())))))
}

/// Number of hits; 0 for NULL.
///
/// # Safety
/// `list` live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_hit_list_len(list: *const MwHitList) -> usize {
    if list.is_null() {
        0
    } else {
        (&(*list).0).len()
    }
}

/// Copies hit `index` into three new handles; any of `g`, `f`, `h` may be
/// NULL to skip it.
///
/// # Safety
/// `list` live handle; non-NULL outputs writable.
#[no_mangle]
pub unsafe extern "C" fn mw_hit_list_get(
    list: *const MwHitList,
    index: usize,
    g: *mut *mut MwPoly,
    f: *mut *mut MwPoly,
    h: *mut *mut MwPoly,
) -> MwStatus {
    guard(|| {
        if list.is_null() {
            set_last_error("null hit list");
            return Err(MwStatus::NullPointer);
        }
        let hits = &(*list).0;
        let Some(hit) = hits.get(index) else {
            set_last_error("hit index out of range");
            return Err(MwStatus::IndexOutOfRange);
        };
        for (slot, p) in [(g, &hit.g), (f, &hit.f), (h, &hit.h)] {
            if !slot.is_null() {
                slot.write(boxed(p.clone()));
            }
        }
        Ok(())
    })
}

/// # Safety
/// `list` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn mw_hit_list_free(list: *mut MwHitList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Runs the sweep over odd `m` in `[m_min, m_max]`, `m_min > 7`.
///
/// # Safety
/// `pairs_checked` and `hits` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_corollary1_sweep(
    m_min: u32,
    m_max: u32,
    jobs: usize,
    pairs_checked: *mut usize,
    hits: *mut usize,
) -> MwStatus {
    guard(|| {
        if pairs_checked.is_null() || hits.is_null() {
            set_last_error("null output pointer");
            return Err(MwStatus::NullPointer);
        }
        let r = corollary1_sweep(m_min, m_max, jobs.max(1)).map_err(fail)?;
        write_out(pairs_checked, r.pairs_checked)?;
        write_out(hits, r.hits.len())
    })
}

/// Writes `len` sequence bits into `stream`.
///
/// # Safety
/// `f` live handle; `seed` readable for `seed_len` bytes; `stream` writable
/// for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn mw_lfsr_generate(
    f: *const MwPoly,
    seed: *const u8,
    seed_len: usize,
    len: usize,
    stream: *mut u8,
) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        let seed = read_bits(seed, seed_len)?;
        if stream.is_null() && len > 0 {
            set_last_error("null output pointer");
            return Err(MwStatus::NullPointer);
        }
        let seq = LfsrSequence::generate(f, &seed, len).map_err(fail)?;
        for (i, b) in seq.stream().iter().enumerate() {
            stream.add(i).write(b as u8);
        }
        Ok(())
    })
}

/// Checks the three-term identity for primitive `MW(m, l)` over
/// `n = 1..=horizon`. A NULL `seed` with `seed_len` 0 selects the impulse.
///
/// # Safety
/// `seed` readable for `seed_len` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_prop2_check(
    m: u32,
    l: u32,
    seed: *const u8,
    seed_len: usize,
    horizon: usize,
    out: *mut bool,
) -> MwStatus {
    guard(|| {
        let mw = MaxWeightPoly::new(m, l).map_err(fail)?;
        let seed = if seed.is_null() && seed_len == 0 {
            Bits::impulse(m as usize)
        } else {
            read_bits(seed, seed_len)?
        };
        write_out(out, prop2_check(&mw, &seed, horizon).map_err(fail)?)
    })
}

/// Dual-code strength of `C_n^f`: minimum weight of multiples of `f` below
/// degree `n`, minus one. `witness` (may be NULL) receives a lightest
/// multiple.
///
/// # Safety
/// `f` live handle; `strength` and `min_weight` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_strength_dual(
    f: *const MwPoly,
    n: usize,
    strength: *mut usize,
    min_weight: *mut usize,
    witness: *mut *mut MwPoly,
) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        if strength.is_null() || min_weight.is_null() {
            set_last_error("null output pointer");
            return Err(MwStatus::NullPointer);
        }
        let d = strength_dual(f, n).map_err(fail)?;
        write_out(strength, d.strength)?;
        write_out(min_weight, d.min_weight)?;
        if !witness.is_null() {
            witness.write(boxed(d.witness));
        }
        Ok(())
    })
}

/// Strength of `C_n^f` by direct counting, capped at `t_max`. A NULL
/// `seed` with `seed_len` 0 selects the impulse.
///
/// # Safety
/// `f` live handle; `seed` readable for `seed_len` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn mw_strength_direct(
    f: *const MwPoly,
    n: usize,
    seed: *const u8,
    seed_len: usize,
    t_max: usize,
    out: *mut usize,
) -> MwStatus {
    guard(|| {
        let f = poly_ref(f)?;
        let seed = if seed.is_null() && seed_len == 0 {
            Bits::impulse(f.deg().unwrap_or(0))
        } else {
            read_bits(seed, seed_len)?
        };
        let code = WindowCode::build(f, n, &seed).map_err(fail)?;
        write_out(out, strength_direct(&code, t_max))
    })
}
