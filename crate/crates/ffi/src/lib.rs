//! C ABI for the verification harness. Reports are opaque handles; every
//! entry point is panic-safe and signals through [`OstrowskiStatus`].
//!
//! Ownership rules: a report returned through an out-pointer is owned by
//! the caller and released with [`ostrowski_report_free`]; every string
//! returned through an out-pointer or return value (except
//! [`ostrowski_version`]) is released with [`ostrowski_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ostrowski_core::harness::{emit_csv, emit_markdown, run, run_audit, AuditSuite, RunConfig, RunReport};

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OstrowskiStatus {
    /// The call succeeded and, for runs, every verdict passed.
    Ok = 0,
    /// The run completed but a bound, audit law, or expected-failure
    /// fixture did not come out as required. The report is still produced.
    VerdictFailure = 1,
    /// The configuration failed to parse, validate, or build an instance.
    ConfigError = 2,
    /// A null pointer, invalid UTF-8, or unknown name was passed in.
    InvalidArgument = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Opaque verification report. Allocate with [`ostrowski_verify`], free
/// with [`ostrowski_report_free`].
pub struct OstrowskiReport {
    inner: RunReport,
}

fn to_c_string(text: String) -> *mut c_char {
    // Interior NULs cannot occur in our reports; replace defensively.
    CString::new(text.replace('\0', " ")).expect("no interior NUL").into_raw()
}

unsafe fn write_error(out_error: *mut *mut c_char, message: String) {
    if !out_error.is_null() {
        *out_error = to_c_string(message);
    }
}

/// Parse a TOML run configuration, execute the run, and hand back a report.
///
/// `out_error` may be null; when non-null and the status is not `Ok` or
/// `VerdictFailure`, it receives a message owned by the caller.
///
/// # Safety
///
/// `config_toml` must be a valid NUL-terminated string; `out_report` must
/// be a valid pointer to writable memory; `out_error`, when non-null,
/// must also point to writable memory.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_verify(
    config_toml: *const c_char,
    out_report: *mut *mut OstrowskiReport,
    out_error: *mut *mut c_char,
) -> OstrowskiStatus {
    if config_toml.is_null() || out_report.is_null() {
        write_error(out_error, "null pointer argument".into());
        return OstrowskiStatus::InvalidArgument;
    }
    *out_report = std::ptr::null_mut();
    let Ok(text) = CStr::from_ptr(config_toml).to_str() else {
        write_error(out_error, "config is not valid UTF-8".into());
        return OstrowskiStatus::InvalidArgument;
    };
    let text = text.to_owned();
    let outcome = catch_unwind(AssertUnwindSafe(move || {
        let config = RunConfig::from_toml(&text).map_err(|e| e.to_string())?;
        run(&config).map_err(|e| e.to_string())
    }));
    match outcome {
        Ok(Ok(report)) => {
            let passed = report.passed();
            *out_report = Box::into_raw(Box::new(OstrowskiReport { inner: report }));
            if passed {
                OstrowskiStatus::Ok
            } else {
                OstrowskiStatus::VerdictFailure
            }
        }
        Ok(Err(message)) => {
            write_error(out_error, message);
            OstrowskiStatus::ConfigError
        }
        Err(_) => {
            write_error(out_error, "internal panic".into());
            OstrowskiStatus::Panic
        }
    }
}

/// Run a law-suite audit by name (`poset`, `monoid`, `distance`, `metric`,
/// `modulus`, `counterexamples`, or `all`) and report whether it passed.
///
/// # Safety
///
/// `suite` must be a valid NUL-terminated string; `out_passed` must point
/// to writable memory.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_audit(
    suite: *const c_char,
    seed: u64,
    out_passed: *mut bool,
) -> OstrowskiStatus {
    if suite.is_null() || out_passed.is_null() {
        return OstrowskiStatus::InvalidArgument;
    }
    let Ok(name) = CStr::from_ptr(suite).to_str() else {
        return OstrowskiStatus::InvalidArgument;
    };
    let suite = match name {
        "poset" => AuditSuite::Poset,
        "monoid" => AuditSuite::Monoid,
        "distance" => AuditSuite::Distance,
        "metric" => AuditSuite::Metric,
        "modulus" => AuditSuite::Modulus,
        "counterexamples" => AuditSuite::Counterexamples,
        "all" => AuditSuite::All,
        _ => return OstrowskiStatus::InvalidArgument,
    };
    match catch_unwind(move || run_audit(suite, seed).passed()) {
        Ok(passed) => {
            *out_passed = passed;
            if passed {
                OstrowskiStatus::Ok
            } else {
                OstrowskiStatus::VerdictFailure
            }
        }
        Err(_) => OstrowskiStatus::Panic,
    }
}

/// Whether every verdict in the report passed.
///
/// # Safety
///
/// `report` must be a pointer returned by [`ostrowski_verify`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_report_passed(report: *const OstrowskiReport) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).inner.passed()
}

/// Number of sweep rows in the report.
///
/// # Safety
///
/// `report` must be a pointer returned by [`ostrowski_verify`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_report_row_count(report: *const OstrowskiReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).inner.rows.len()
}

/// The report's sweep table as CSV. Returns null on a null report; free
/// the string with [`ostrowski_string_free`].
///
/// # Safety
///
/// `report` must be a pointer returned by [`ostrowski_verify`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_report_csv(report: *const OstrowskiReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    to_c_string(emit_csv(&(*report).inner))
}

/// The full report as Markdown. Returns null on a null report; free the
/// string with [`ostrowski_string_free`].
///
/// # Safety
///
/// `report` must be a pointer returned by [`ostrowski_verify`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_report_markdown(report: *const OstrowskiReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    to_c_string(emit_markdown(&(*report).inner))
}

/// Release a report. Null is ignored.
///
/// # Safety
///
/// `report` must be null or a pointer returned by [`ostrowski_verify`]
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_report_free(report: *mut OstrowskiReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Release a string produced by this interface. Null is ignored.
///
/// # Safety
///
/// `text` must be null or a string pointer produced by this interface
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn ostrowski_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Static library version string; do not free.
#[no_mangle]
pub extern "C" fn ostrowski_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn verify_str(config: &str) -> (OstrowskiStatus, *mut OstrowskiReport, *mut c_char) {
        let config = CString::new(config).unwrap();
        let mut report: *mut OstrowskiReport = ptr::null_mut();
        let mut error: *mut c_char = ptr::null_mut();
        let status = ostrowski_verify(config.as_ptr(), &mut report, &mut error);
        (status, report, error)
    }

    #[test]
    fn verify_produces_a_passing_report_with_the_known_csv() {
        unsafe {
            let (status, report, error) =
                verify_str("instance = \"scalar\"\ntrials = 3\n");
            assert_eq!(status, OstrowskiStatus::Ok);
            assert!(error.is_null());
            assert!(ostrowski_report_passed(report));
            assert_eq!(ostrowski_report_row_count(report), 5);

            let csv = ostrowski_report_csv(report);
            let text = CStr::from_ptr(csv).to_str().unwrap().to_owned();
            assert!(text.contains("0,0.5,0.5,0,pass"), "{text}");
            ostrowski_string_free(csv);

            let md = ostrowski_report_markdown(report);
            let text = CStr::from_ptr(md).to_str().unwrap().to_owned();
            assert!(text.starts_with("# Verification run"));
            ostrowski_string_free(md);

            ostrowski_report_free(report);
        }
    }

    #[test]
    fn config_errors_surface_with_a_message_and_no_report() {
        unsafe {
            let (status, report, error) = verify_str("instance = \"scalar\"\ntrials = 0\n");
            assert_eq!(status, OstrowskiStatus::ConfigError);
            assert!(report.is_null());
            assert!(!error.is_null());
            let message = CStr::from_ptr(error).to_str().unwrap().to_owned();
            assert!(message.contains("trial"), "{message}");
            ostrowski_string_free(error);
        }
    }

    #[test]
    fn null_and_invalid_arguments_are_rejected() {
        unsafe {
            let mut report: *mut OstrowskiReport = ptr::null_mut();
            let status = ostrowski_verify(ptr::null(), &mut report, ptr::null_mut());
            assert_eq!(status, OstrowskiStatus::InvalidArgument);

            let config = CString::new("instance = \"scalar\"").unwrap();
            let status = ostrowski_verify(config.as_ptr(), ptr::null_mut(), ptr::null_mut());
            assert_eq!(status, OstrowskiStatus::InvalidArgument);

            let mut passed = false;
            let bad = CString::new("tetrahedron").unwrap();
            assert_eq!(
                ostrowski_audit(bad.as_ptr(), 42, &mut passed),
                OstrowskiStatus::InvalidArgument
            );

            assert!(!ostrowski_report_passed(ptr::null()));
            assert_eq!(ostrowski_report_row_count(ptr::null()), 0);
            assert!(ostrowski_report_csv(ptr::null()).is_null());
            ostrowski_report_free(ptr::null_mut());
            ostrowski_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn audits_run_by_name() {
        unsafe {
            let mut passed = false;
            let suite = CString::new("modulus").unwrap();
            assert_eq!(ostrowski_audit(suite.as_ptr(), 42, &mut passed), OstrowskiStatus::Ok);
            assert!(passed);

            let suite = CString::new("counterexamples").unwrap();
            assert_eq!(ostrowski_audit(suite.as_ptr(), 7, &mut passed), OstrowskiStatus::Ok);
            assert!(passed);
        }
    }

    #[test]
    fn version_is_a_static_nul_terminated_string() {
        let version = ostrowski_version();
        let text = unsafe { CStr::from_ptr(version) }.to_str().unwrap();
        assert_eq!(text, env!("CARGO_PKG_VERSION"));
    }
}
