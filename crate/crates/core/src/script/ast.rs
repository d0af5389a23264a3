use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Pos;
use crate::construct::ConstructionKind;
use crate::exact::Rational;
use crate::kernel::RelationKind;

/// Relations accepted by `assert`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssertRel {
    Relation(RelationKind),
    /// `gt a b c d`: `ab > cd`
    Gt,
    /// `left a b c`: `Left(a, bc)`
    Left,
    AngleCong,
    AngleLt,
    AngleSum,
}

impl AssertRel {
    pub fn all() -> Vec<AssertRel> {
        let mut v: Vec<AssertRel> = RelationKind::ALL.into_iter().map(AssertRel::Relation).collect();
        v.extend([AssertRel::Gt, AssertRel::Left, AssertRel::AngleCong, AssertRel::AngleLt, AssertRel::AngleSum]);
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            AssertRel::Relation(k) => k.name(),
            AssertRel::Gt => "gt",
            AssertRel::Left => "left",
            AssertRel::AngleCong => "angle_cong",
            AssertRel::AngleLt => "angle_lt",
            AssertRel::AngleSum => "angle_sum",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            AssertRel::Relation(k) => k.arity(),
            AssertRel::Gt => 4,
            AssertRel::Left => 3,
            AssertRel::AngleCong | AssertRel::AngleLt => 6,
            AssertRel::AngleSum => 9,
        }
    }
}

impl fmt::Display for AssertRel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AssertRel {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        AssertRel::all().into_iter().find(|r| r.name() == s).ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmitFormat {
    Json,
    Svg,
}

impl EmitFormat {
    pub fn name(self) -> &'static str {
        match self {
            EmitFormat::Json => "json",
            EmitFormat::Svg => "svg",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Point { name: String, x: Rational, y: Rational },
    Let { names: Vec<String>, construction: ConstructionKind, args: Vec<String> },
    Assert { relation: AssertRel, args: Vec<String>, fuel: Option<u64> },
    Emit { format: EmitFormat, path: String },
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Point { name, x, y } => write!(f, "point {name} = ({x}, {y})"),
            Stmt::Let { names, construction, args } => {
                write!(f, "let {} = {construction}({})", names.join(", "), args.join(", "))
            }
            Stmt::Assert { relation, args, fuel } => {
                write!(f, "assert {relation} {}", args.join(" "))?;
                match fuel {
                    Some(n) => write!(f, " @{n}"),
                    None => Ok(()),
                }
            }
            Stmt::Emit { format, path } => {
                let escaped = path.replace('\\', "\\\\").replace('"', "\\\"");
                write!(f, "emit {} \"{escaped}\"", format.name())
            }
        }
    }
}

/// A parsed script. Equality compares statements only, not source positions.
#[derive(Clone, Debug, Default)]
pub struct ScriptProgram {
    pub statements: Vec<Stmt>,
    pub positions: Vec<Pos>,
}

impl PartialEq for ScriptProgram {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Eq for ScriptProgram {}

impl ScriptProgram {
    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

/// One statement per line, in a form that parses back to the same program.
impl fmt::Display for ScriptProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
