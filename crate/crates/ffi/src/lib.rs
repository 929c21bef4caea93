//! C ABI for the loop-algebra toolkit.
//!
//! The interface follows the usual opaque-handle pattern: create a
//! [`TetraSession`], pass expressions and option strings as NUL-terminated
//! UTF-8, receive results as freshly allocated C strings (release them with
//! [`tetra_string_free`]), and inspect failures through the status code plus
//! [`tetra_last_error`]. The session caches the fitted central-extension
//! lift table, so repeated extension-context calls are cheap.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use tetra_core::expr::{self, Context, Value};
use tetra_core::extension::{fit_lifts, verify_extension, LiftTable};
use tetra_core::loop_alg::{
    grade_split, ideal_member_g, omega_split, verify_phi_map, verify_tet_relations,
    verify_z_relations, GIdeal,
};
use tetra_core::nlrta;
use tetra_core::onsager::{census, ideal_member_o, verify_onsager};
use tetra_core::rat::rat;
use tetra_core::report::Report;
use tetra_core::ring::{ideal_normalize, to_k_basis};
use tetra_core::s4::{verify_s4_all, Perm4};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TetraStatus {
    /// Success.
    Ok = 0,
    /// A verification suite ran and found failing checks.
    VerifyFailed = 1,
    /// The input could not be parsed or evaluated.
    ParseError = 2,
    /// A bad argument (unknown context, suite, or option).
    InvalidArgument = 3,
    /// A required pointer was NULL.
    NullPointer = 4,
}

/// Evaluation context selector.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TetraContext {
    Loop = 0,
    Onsager = 1,
    Extension = 2,
}

/// Opaque session handle; owns cached state and the last error message.
pub struct TetraSession {
    table: Option<LiftTable>,
    last_error: CString,
}

impl TetraSession {
    fn set_error(&mut self, msg: impl Into<Vec<u8>>) {
        self.last_error = CString::new(msg).unwrap_or_default();
    }

    fn lift_table(&mut self) -> Result<&LiftTable, String> {
        if self.table.is_none() {
            match fit_lifts() {
                Ok(t) => self.table = Some(t),
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(self.table.as_ref().unwrap())
    }
}

/// Creates a session. Free it with [`tetra_session_free`].
#[no_mangle]
pub extern "C" fn tetra_session_new() -> *mut TetraSession {
    Box::into_raw(Box::new(TetraSession {
        table: None,
        last_error: CString::default(),
    }))
}

/// Releases a session created by [`tetra_session_new`].
///
/// # Safety
/// `session` must be a pointer returned by [`tetra_session_new`] that has not
/// been freed yet, or NULL.
#[no_mangle]
pub unsafe extern "C" fn tetra_session_free(session: *mut TetraSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// The message of the most recent failure on this session. The pointer stays
/// valid until the next call on the same session.
///
/// # Safety
/// `session` must be a live session pointer.
#[no_mangle]
pub unsafe extern "C" fn tetra_last_error(session: *const TetraSession) -> *const c_char {
    if session.is_null() {
        return ptr::null();
    }
    (*session).last_error.as_ptr()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be a pointer previously returned in an out-parameter of this
/// library and not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn tetra_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, &'static str> {
    if ptr.is_null() {
        return Err("NULL string argument");
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| "argument is not valid UTF-8")
}

fn write_out(out: *mut *mut c_char, text: String) -> TetraStatus {
    let c = match CString::new(text) {
        Ok(c) => c,
        Err(_) => CString::new("output contained an interior NUL").unwrap(),
    };
    unsafe {
        *out = c.into_raw();
    }
    TetraStatus::Ok
}

fn eval_with(
    session: &mut TetraSession,
    input: &str,
    context: TetraContext,
) -> Result<Value, (TetraStatus, String)> {
    let ast = expr::parse(input).map_err(|e| (TetraStatus::ParseError, e.to_string()))?;
    let value = match context {
        TetraContext::Loop => expr::eval(&ast, &Context::Loop),
        TetraContext::Onsager => expr::eval(&ast, &Context::Onsager),
        TetraContext::Extension => {
            let table = session
                .lift_table()
                .map_err(|e| (TetraStatus::InvalidArgument, e))?;
            expr::eval(&ast, &Context::Extension(table))
        }
    };
    value.map_err(|e| (TetraStatus::ParseError, e.to_string()))
}

/// Evaluates an expression to its canonical text form.
///
/// # Safety
/// `session` must be a live session pointer; `expr` must be a NUL-terminated
/// string; `out` must be a valid location to store a string pointer.
#[no_mangle]
pub unsafe extern "C" fn tetra_eval(
    session: *mut TetraSession,
    expr: *const c_char,
    context: TetraContext,
    out: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let input = match read_str(expr) {
        Ok(s) => s,
        Err(e) => {
            session.set_error(e);
            return TetraStatus::NullPointer;
        }
    };
    match eval_with(session, input, context) {
        Ok(v) => write_out(out, v.to_string()),
        Err((status, msg)) => {
            session.set_error(msg);
            status
        }
    }
}

/// Applies a permutation, given in cycle notation, to an element.
///
/// # Safety
/// As for [`tetra_eval`]; `perm` must also be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tetra_act(
    session: *mut TetraSession,
    perm: *const c_char,
    expr: *const c_char,
    context: TetraContext,
    out: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let (perm, input) = match (read_str(perm), read_str(expr)) {
        (Ok(p), Ok(e)) => (p, e),
        _ => {
            session.set_error("NULL or non-UTF-8 argument");
            return TetraStatus::NullPointer;
        }
    };
    let Some(p) = Perm4::parse_cycles(perm) else {
        session.set_error(format!("invalid permutation `{perm}`"));
        return TetraStatus::ParseError;
    };
    match context {
        TetraContext::Loop => match eval_with(session, input, context) {
            Ok(Value::Loop(e)) => write_out(out, tetra_core::s4::apply(&p, &e).to_string()),
            Ok(_) => unreachable!(),
            Err((status, msg)) => {
                session.set_error(msg);
                status
            }
        },
        TetraContext::Extension => {
            let value = eval_with(session, input, context);
            match value {
                Ok(Value::Ext(e)) => {
                    let table = session.lift_table().expect("cached by eval_with");
                    let moved = tetra_core::extension::s4_ext_apply(&p, &e, table);
                    write_out(out, moved.to_string())
                }
                Ok(_) => unreachable!(),
                Err((status, msg)) => {
                    session.set_error(msg);
                    status
                }
            }
        }
        TetraContext::Onsager => {
            session.set_error("permutations do not act in the Onsager context");
            TetraStatus::InvalidArgument
        }
    }
}

/// Splits an element by `"grading"`, `"omega"`, or a ring element by
/// `"kbasis"`, one `name\tvalue` record per line.
///
/// # Safety
/// As for [`tetra_eval`]; `by` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tetra_decompose(
    session: *mut TetraSession,
    expr: *const c_char,
    by: *const c_char,
    out: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let (input, by) = match (read_str(expr), read_str(by)) {
        (Ok(e), Ok(b)) => (e, b),
        _ => {
            session.set_error("NULL or non-UTF-8 argument");
            return TetraStatus::NullPointer;
        }
    };
    match by {
        "kbasis" => match expr::parse_ring(input) {
            Ok(ring) => {
                let c = to_k_basis(&ring);
                let mut text = format!("1\t{}\n", tetra_core::rat::format_rat(&c.c0));
                for (n, v) in &c.ct {
                    text.push_str(&format!("t^{n}\t{}\n", tetra_core::rat::format_rat(v)));
                }
                for (n, v) in &c.ctp {
                    text.push_str(&format!("t'^{n}\t{}\n", tetra_core::rat::format_rat(v)));
                }
                for (n, v) in &c.ctpp {
                    text.push_str(&format!("t''^{n}\t{}\n", tetra_core::rat::format_rat(v)));
                }
                write_out(out, text)
            }
            Err(e) => {
                session.set_error(e.to_string());
                TetraStatus::ParseError
            }
        },
        "grading" | "omega" => match eval_with(session, input, TetraContext::Loop) {
            Ok(Value::Loop(e)) => {
                let text = if by == "grading" {
                    let (g0, g1, g2) = grade_split(&e);
                    format!("g0\t{g0}\ng1\t{g1}\ng2\t{g2}\n")
                } else {
                    let (w, wp, wpp) = omega_split(&e);
                    format!("omega\t{w}\nomega'\t{wp}\nomega''\t{wpp}\n")
                };
                write_out(out, text)
            }
            Ok(_) => unreachable!(),
            Err((status, msg)) => {
                session.set_error(msg);
                status
            }
        },
        other => {
            session.set_error(format!("unknown decomposition `{other}`"));
            TetraStatus::InvalidArgument
        }
    }
}

/// Membership of a loop-algebra element in the ideal generated by a ring
/// element; writes 1 or 0 into `out_member`.
///
/// # Safety
/// As for [`tetra_eval`]; `generator` must be a NUL-terminated string and
/// `out_member` a valid bool location.
#[no_mangle]
pub unsafe extern "C" fn tetra_ideal_member(
    session: *mut TetraSession,
    expr: *const c_char,
    generator: *const c_char,
    out_member: *mut bool,
) -> TetraStatus {
    if session.is_null() || out_member.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let (input, gen) = match (read_str(expr), read_str(generator)) {
        (Ok(e), Ok(g)) => (e, g),
        _ => {
            session.set_error("NULL or non-UTF-8 argument");
            return TetraStatus::NullPointer;
        }
    };
    let elem = match eval_with(session, input, TetraContext::Loop) {
        Ok(Value::Loop(e)) => e,
        Ok(_) => unreachable!(),
        Err((status, msg)) => {
            session.set_error(msg);
            return status;
        }
    };
    match expr::parse_ring(gen) {
        Ok(g) => {
            let ideal = GIdeal { content: ideal_normalize(&g) };
            *out_member = ideal_member_g(&elem, &ideal);
            TetraStatus::Ok
        }
        Err(e) => {
            session.set_error(e.to_string());
            TetraStatus::ParseError
        }
    }
}

/// Membership of an Onsager element in the ideal described by a spec string
/// such as `"J=t^2+1; typeII eta=1"`.
///
/// # Safety
/// As for [`tetra_ideal_member`].
#[no_mangle]
pub unsafe extern "C" fn tetra_onsager_ideal_member(
    session: *mut TetraSession,
    expr: *const c_char,
    spec: *const c_char,
    out_member: *mut bool,
) -> TetraStatus {
    if session.is_null() || out_member.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let (input, spec) = match (read_str(expr), read_str(spec)) {
        (Ok(e), Ok(s)) => (e, s),
        _ => {
            session.set_error("NULL or non-UTF-8 argument");
            return TetraStatus::NullPointer;
        }
    };
    let elem = match eval_with(session, input, TetraContext::Onsager) {
        Ok(Value::Onsager(e)) => e,
        Ok(_) => unreachable!(),
        Err((status, msg)) => {
            session.set_error(msg);
            return status;
        }
    };
    match expr::parse_ideal_spec(spec) {
        Ok(s) => {
            *out_member = ideal_member_o(&elem, &s);
            TetraStatus::Ok
        }
        Err(e) => {
            session.set_error(e.to_string());
            TetraStatus::ParseError
        }
    }
}

/// Runs a verification suite (`"tet"`, `"z"`, `"phi"`, `"s4"`, `"onsager"`,
/// `"nlrta"`, `"extension"` or `"all"`) and returns its report text. The
/// status is `Ok` when every check passes and `VerifyFailed` otherwise.
///
/// # Safety
/// As for [`tetra_eval`]; `suite` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tetra_verify(
    session: *mut TetraSession,
    suite: *const c_char,
    out_report: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out_report.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(e) => {
            session.set_error(e);
            return TetraStatus::NullPointer;
        }
    };
    let mut report = Report::new("verification");
    match suite {
        "tet" => report.merge(verify_tet_relations()),
        "z" => report.merge(verify_z_relations()),
        "phi" => report.merge(verify_phi_map()),
        "s4" => report.merge(verify_s4_all()),
        "onsager" => report.merge(verify_onsager()),
        "nlrta" => report.merge(nlrta::verify_all()),
        "extension" => report.merge(verify_extension()),
        "all" => {
            report.merge(verify_tet_relations());
            report.merge(verify_z_relations());
            report.merge(verify_phi_map());
            report.merge(verify_s4_all());
            report.merge(verify_onsager());
            report.merge(nlrta::verify_all());
            report.merge(verify_extension());
        }
        other => {
            session.set_error(format!("unknown suite `{other}`"));
            return TetraStatus::InvalidArgument;
        }
    }
    let all_pass = report.all_pass();
    write_out(out_report, report.to_records());
    if all_pass {
        TetraStatus::Ok
    } else {
        TetraStatus::VerifyFailed
    }
}

/// The closed-ideal census over a content ideal generator, one row per ideal
/// plus a summary line.
///
/// # Safety
/// As for [`tetra_eval`]; `j` must be a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tetra_census_closed_ideals(
    session: *mut TetraSession,
    j: *const c_char,
    out: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    let j = match read_str(j) {
        Ok(s) => s,
        Err(e) => {
            session.set_error(e);
            return TetraStatus::NullPointer;
        }
    };
    let q = match expr::parse_ring(j) {
        Ok(ring) => match ring.as_poly() {
            Some(p) if !p.is_zero() => p.clone(),
            _ => {
                session.set_error("J must be a nonzero polynomial");
                return TetraStatus::InvalidArgument;
            }
        },
        Err(e) => {
            session.set_error(e.to_string());
            return TetraStatus::ParseError;
        }
    };
    let rows = census(&q, &[rat(1), rat(2), rat(-1)]);
    let mut text = String::new();
    let mut closed = 0;
    for row in &rows {
        text.push_str(&format!(
            "{}\tideal={}\tclosed={}",
            row.spec,
            if row.is_ideal { "yes" } else { "no" },
            if row.closed { "yes" } else { "no" }
        ));
        if let Some(w) = &row.witness {
            text.push_str(&format!("\twitness={w}"));
        }
        text.push('\n');
        if row.closed {
            closed += 1;
        }
    }
    text.push_str(&format!("closed ideals: {closed}\n"));
    write_out(out, text)
}

/// The fitted lift table: one line per lifted generator, one per charge.
///
/// # Safety
/// As for [`tetra_eval`].
#[no_mangle]
pub unsafe extern "C" fn tetra_lift_table(
    session: *mut TetraSession,
    out: *mut *mut c_char,
) -> TetraStatus {
    if session.is_null() || out.is_null() {
        return TetraStatus::NullPointer;
    }
    let session = &mut *session;
    match session.lift_table() {
        Ok(table) => {
            let text = table.render();
            write_out(out, text)
        }
        Err(e) => {
            session.set_error(e);
            TetraStatus::InvalidArgument
        }
    }
}
