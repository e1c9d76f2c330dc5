//! Script front end: parse a script, run it against a session, print the
//! results as text or JSON lines.

pub mod config;
pub mod script;
pub mod session;

use std::io::Write;

use serde_json::json;

pub use config::{Config, Format, Overrides, CONFIG_ENV};
pub use script::{parse_script, Statement, Stmt};
pub use session::{ExecError, Output, Session};

/// Run `src` and return the exit code: 0 when every statement succeeded,
/// otherwise the code of the first failure (2 parse, 3 computation,
/// 4 budget). A script that does not parse runs nothing.
pub fn run_script(src: &str, config: Config, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let statements = match parse_script(src) {
        Ok(s) => s,
        Err(e) => {
            if config.format == Format::Json {
                let j = json!({ "line": e.line, "error": { "kind": "parse", "message": e.msg } });
                let _ = writeln!(out, "{j}");
            } else {
                let _ = writeln!(err, "parse error at line {}: {}", e.line, e.msg);
            }
            return 2;
        }
    };
    let mut session = Session::new(config);
    let mut code = 0;
    for st in &statements {
        let result = session.execute(&st.stmt);
        let format = session.config().format;
        match (&result, format) {
            (Ok(o), Format::Text) => {
                let _ = writeln!(out, "{}", o.text);
            }
            (Err(e), Format::Text) => {
                let _ = writeln!(err, "line {}: {e}", st.line);
            }
            (_, Format::Json) => {
                let mut j = json!({
                    "line": st.line,
                    "statement": st.text,
                    "command": st.stmt.command(),
                    "config": session.config_json(),
                });
                match &result {
                    Ok(o) => {
                        j["result"] = json!(o.text);
                        j["detail"] = o.detail.clone().unwrap_or(serde_json::Value::Null);
                    }
                    Err(e) => {
                        j["error"] = json!({ "kind": e.kind(), "message": e.message() });
                    }
                }
                let _ = writeln!(out, "{j}");
            }
        }
        if let Err(e) = result {
            if code == 0 {
                code = e.exit_code();
            }
        }
    }
    code
}

/// Convenience for tests and embedding: run and capture both streams.
pub fn run_to_strings(src: &str, config: Config) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_script(src, config, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}
