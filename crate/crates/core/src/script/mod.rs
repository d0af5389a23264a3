//! The `.geo` construction-script language.
//!
//! ```text
//! program := stmt*
//! stmt    := "point" IDENT "=" "(" RAT "," RAT ")"
//!          | "let" IDENT ("," IDENT)* "=" IDENT "(" IDENT ("," IDENT)* ")"
//!          | "assert" REL IDENT+ ["@" INT]
//!          | "emit" ("json" | "svg") STRING
//! RAT     := ["-"] INT ["/" INT]
//! ```
//!
//! Comments run from `#` to the end of the line.

mod ast;
mod eval;
mod expr;
mod lexer;
mod parse;
mod svg;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::construct::ConstructError;
use crate::exact::{ArithError, Fuel};
use crate::kernel::KernelError;

pub use ast::{AssertRel, EmitFormat, ScriptProgram, Stmt};
pub use eval::{eval_script, AssertionResult, ConstructionRecord, EvalEnv};
pub use expr::{parse_expr, Expr};
pub use parse::parse_script;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ScriptError {
    #[error("{line}:{col}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        col: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("{line}:{col}: `{name}` is not bound")]
    UnboundName { name: String, line: usize, col: usize },
    #[error("{line}:{col}: `{name}` is already bound")]
    Rebind { name: String, line: usize, col: usize },
    #[error("{line}:{col}: {name} takes {expected} names, got {got}")]
    Arity {
        name: String,
        expected: usize,
        got: usize,
        line: usize,
        col: usize,
    },
    #[error("{line}:{col}: {source}")]
    Construction { line: usize, col: usize, source: ConstructError },
    #[error("{line}:{col}: {source}")]
    Kernel { line: usize, col: usize, source: KernelError },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl ScriptError {
    pub(crate) fn syntax(pos: Pos, expected: &[&str], found: &str) -> Self {
        ScriptError::Syntax {
            line: pos.line,
            col: pos.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.to_string(),
        }
    }
}

/// Script default fuel: `GEO_FUEL` sets the witness-index bound when it
/// holds a positive integer.
pub fn default_fuel() -> Fuel {
    let base = Fuel::default();
    match std::env::var("GEO_FUEL").ok().and_then(|v| v.trim().parse::<u64>().ok()) {
        Some(n) if n > 0 => Fuel { max_index: n, ..base },
        _ => base,
    }
}
