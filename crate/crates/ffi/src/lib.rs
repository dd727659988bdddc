//! C ABI over `nclattice`.
//!
//! Configurations and lattices are opaque handles owned by the caller and
//! released with the matching `*_free`. Every entry point returns an
//! [`NcStatus`]; on failure a message is available from
//! [`nc_last_error`] until the next call on the same thread. Strings handed
//! out by the library must be released with [`nc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nclattice::enumeration::{s_table, t_table, u_table, v_table};
use nclattice::partition::count_noncrossing_capped;
use nclattice::poset::{is_self_dual, DEFAULT_MAX_ISO_ELEMENTS};
use nclattice::scd::scd_family;
use nclattice::{standard_config, Configuration, Error, Family, NcLattice};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    TooLarge = 4,
    NotGraded = 5,
    AssemblyFailure = 6,
    Internal = 7,
}

/// Opaque point configuration.
pub struct NcConfig(Configuration);

/// Opaque noncrossing partition lattice.
pub struct NcLatticeHandle(NcLattice);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> NcStatus {
    match err {
        Error::Parse(_) | Error::DuplicatePoint { .. } | Error::LabelMismatch { .. } | Error::EmptyConfiguration => {
            NcStatus::Parse
        }
        Error::TooLarge { .. } => NcStatus::TooLarge,
        Error::NotGraded => NcStatus::NotGraded,
        Error::AssemblyFailure(_) => NcStatus::AssemblyFailure,
        _ => NcStatus::InvalidArgument,
    }
}

struct Fail(NcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(NcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> NcStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NcStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_owned());
            NcStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(NcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(NcStatus::Internal, "output contains nul".to_owned()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn out_ptr<'a, T>(out: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    out.as_mut().ok_or_else(|| null(what))
}

/// Message for the most recent failure on this thread, or null. Owned by the
/// library; valid until the next call.
#[no_mangle]
pub extern "C" fn nc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a standard configuration. `family` is one of `P Q T U V S`; `n`
/// is ignored for the single-parameter families.
///
/// # Safety
/// `family` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_config_standard(
    family: *const c_char,
    m: usize,
    n: usize,
    out: *mut *mut NcConfig,
) -> NcStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let family: Family = read_str(family, "family")?.parse()?;
        let config = standard_config(family, m, n)?;
        *out = Box::into_raw(Box::new(NcConfig(config)));
        Ok(())
    })
}

/// Parses a configuration from its JSON form.
///
/// # Safety
/// `json` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_config_from_json(json: *const c_char, out: *mut *mut NcConfig) -> NcStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let config = Configuration::from_json(read_str(json, "json")?)?;
        *out = Box::into_raw(Box::new(NcConfig(config)));
        Ok(())
    })
}

/// Number of points in the configuration.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_config_len(config: *const NcConfig, out: *mut usize) -> NcStatus {
    guard(|| {
        let config = config.as_ref().ok_or_else(|| null("config"))?;
        *out_ptr(out, "out")? = config.0.len();
        Ok(())
    })
}

/// Serializes the configuration to JSON.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_config_to_json(config: *const NcConfig, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let config = config.as_ref().ok_or_else(|| null("config"))?;
        out_ptr(out, "out")?;
        write_string(out, config.0.to_json())
    })
}

/// Number of noncrossing partitions, as a decimal string.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_config_count(
    config: *const NcConfig,
    max_points: usize,
    out: *mut *mut c_char,
) -> NcStatus {
    guard(|| {
        let config = config.as_ref().ok_or_else(|| null("config"))?;
        out_ptr(out, "out")?;
        write_string(out, count_noncrossing_capped(&config.0, max_points)?.to_string())
    })
}

/// Releases a configuration. Null is ignored.
///
/// # Safety
/// `config` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nc_config_free(config: *mut NcConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

/// Builds the lattice of noncrossing partitions of `config`.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_build(
    config: *const NcConfig,
    max_points: usize,
    out: *mut *mut NcLatticeHandle,
) -> NcStatus {
    guard(|| {
        let config = config.as_ref().ok_or_else(|| null("config"))?;
        let out = out_ptr(out, "out")?;
        let lattice = NcLattice::build(&config.0, max_points)?;
        *out = Box::into_raw(Box::new(NcLatticeHandle(lattice)));
        Ok(())
    })
}

/// Number of elements.
///
/// # Safety
/// `lattice` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_len(lattice: *const NcLatticeHandle, out: *mut usize) -> NcStatus {
    guard(|| {
        let lattice = lattice.as_ref().ok_or_else(|| null("lattice"))?;
        *out_ptr(out, "out")? = lattice.0.len();
        Ok(())
    })
}

/// Writes the rank vector into `buf` (capacity `cap`) and its true length into
/// `len`. If `cap` is too small only `len` is written; call again with a
/// larger buffer. Fails with `NC_STATUS_NOT_GRADED` for ungraded lattices.
///
/// # Safety
/// `lattice` must be a live handle; `buf` must hold `cap` entries (or be null
/// when `cap` is 0); `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_rank_vector(
    lattice: *const NcLatticeHandle,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> NcStatus {
    guard(|| {
        let lattice = lattice.as_ref().ok_or_else(|| null("lattice"))?;
        let len = out_ptr(len, "len")?;
        let ranks = lattice.0.rank_vector()?;
        *len = ranks.len();
        if ranks.len() <= cap {
            if buf.is_null() && !ranks.is_empty() {
                return Err(null("buf"));
            }
            for (i, r) in ranks.iter().enumerate() {
                *buf.add(i) = *r as u64;
            }
        }
        Ok(())
    })
}

/// Whether the lattice is self-dual; `max_elements` caps the isomorphism
/// search.
///
/// # Safety
/// `lattice` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_is_self_dual(
    lattice: *const NcLatticeHandle,
    max_elements: usize,
    out: *mut bool,
) -> NcStatus {
    guard(|| {
        let lattice = lattice.as_ref().ok_or_else(|| null("lattice"))?;
        let out = out_ptr(out, "out")?;
        let cap = if max_elements == 0 { DEFAULT_MAX_ISO_ELEMENTS } else { max_elements };
        *out = is_self_dual(lattice.0.poset(), cap)?.is_some();
        Ok(())
    })
}

/// JSON export (elements, ranks, covers).
///
/// # Safety
/// `lattice` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_to_json(lattice: *const NcLatticeHandle, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let lattice = lattice.as_ref().ok_or_else(|| null("lattice"))?;
        out_ptr(out, "out")?;
        write_string(out, lattice.0.to_json().to_string())
    })
}

/// Graphviz export of the Hasse diagram.
///
/// # Safety
/// `lattice` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_to_dot(lattice: *const NcLatticeHandle, out: *mut *mut c_char) -> NcStatus {
    guard(|| {
        let lattice = lattice.as_ref().ok_or_else(|| null("lattice"))?;
        out_ptr(out, "out")?;
        write_string(out, lattice.0.to_dot())
    })
}

/// Releases a lattice. Null is ignored.
///
/// # Safety
/// `lattice` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn nc_lattice_free(lattice: *mut NcLatticeHandle) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// Count table for `T`, `U`, `V` or `S` as CSV, rows `0..=mm`, columns
/// `0..=nn`. `T` takes only `nn`.
///
/// # Safety
/// `family` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_table_csv(
    family: *const c_char,
    mm: usize,
    nn: usize,
    out: *mut *mut c_char,
) -> NcStatus {
    guard(|| {
        out_ptr(out, "out")?;
        let table = match read_str(family, "family")?.parse::<Family>()? {
            Family::T => t_table(nn),
            Family::U => u_table(mm, nn),
            Family::V => v_table(mm, nn),
            Family::S => s_table(mm, nn),
            other => {
                return Err(Fail(NcStatus::InvalidArgument, format!("no count table for family {other}")));
            }
        };
        write_string(out, table.to_csv())
    })
}

/// Builds and verifies a symmetric chain decomposition for a standard family
/// and reports its chain count and covered element count.
///
/// # Safety
/// `family` must be a valid C string; `chains` and `covered` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nc_scd_summary(
    family: *const c_char,
    m: usize,
    n: usize,
    max_points: usize,
    chains: *mut usize,
    covered: *mut usize,
) -> NcStatus {
    guard(|| {
        let family: Family = read_str(family, "family")?.parse()?;
        let chains = out_ptr(chains, "chains")?;
        let covered = out_ptr(covered, "covered")?;
        let built = scd_family(family, m, n, max_points)?;
        *chains = built.decomposition.len();
        *covered = built.decomposition.element_count();
        Ok(())
    })
}
