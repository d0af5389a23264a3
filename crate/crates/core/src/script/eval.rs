use std::collections::HashMap;
use std::path::Path;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::ast::{AssertRel, EmitFormat, ScriptProgram, Stmt};
use super::{svg, Pos, ScriptError};
use crate::construct::{Certificate, ConstructionKind};
use crate::exact::Fuel;
use crate::kernel::{angle_cong, angle_lt, angle_sum_check, gt, left_of, relation, AngleTriple, KernelError, Point};
use crate::verdict::Verdict;

/// Outcome of one `assert` statement.
#[derive(Clone, Debug)]
pub struct AssertionResult {
    pub line: usize,
    pub col: usize,
    pub relation: AssertRel,
    pub args: Vec<String>,
    pub verdict: Verdict,
}

impl Serialize for AssertionResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        m.serialize_entry("line", &self.line)?;
        m.serialize_entry("relation", self.relation.name())?;
        m.serialize_entry("args", &self.args)?;
        m.serialize_entry("verdict", self.verdict.label())?;
        if let Some(w) = self.verdict.witness() {
            m.serialize_entry("witness", w)?;
        }
        m.end()
    }
}

/// Points produced by one `let` statement.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionRecord {
    pub line: usize,
    pub name: ConstructionKind,
    pub args: Vec<String>,
    pub outputs: Vec<String>,
    pub points: Vec<Point>,
    pub certificates: Vec<Certificate>,
}

/// Bindings and outcomes of an evaluated script, in statement order.
#[derive(Clone, Debug, Default)]
pub struct EvalEnv {
    names: Vec<String>,
    points: Vec<Point>,
    index: HashMap<String, usize>,
    pub results: Vec<AssertionResult>,
    pub constructions: Vec<ConstructionRecord>,
    pub emits: Vec<(EmitFormat, String)>,
}

impl EvalEnv {
    pub fn get(&self, name: &str) -> Option<&Point> {
        self.index.get(name).map(|&i| &self.points[i])
    }

    /// Bindings in the order they were made.
    pub fn bindings(&self) -> impl Iterator<Item = (&str, &Point)> {
        self.names.iter().map(String::as_str).zip(&self.points)
    }

    fn bind(&mut self, name: &str, p: Point) {
        self.index.insert(name.to_string(), self.points.len());
        self.names.push(name.to_string());
        self.points.push(p);
    }

    fn lookup(&self, names: &[String]) -> Vec<Point> {
        names.iter().map(|n| self.get(n).expect("parser checks bindings").clone()).collect()
    }

    /// Every assertion holds.
    pub fn ok(&self) -> bool {
        self.results.iter().all(|r| r.verdict.holds())
    }

    pub fn report(&self) -> serde_json::Value {
        serde_json::json!({
            "assertions": self.results,
            "constructions": self.constructions,
        })
    }

    pub fn report_json(&self) -> String {
        serde_json::to_string_pretty(&self.report()).expect("report serializes")
    }

    pub fn to_svg(&self) -> String {
        svg::render(self)
    }

    /// Writes the files requested by `emit` statements, relative to `base`.
    pub fn write_emits(&self, base: &Path) -> Result<(), ScriptError> {
        for (format, path) in &self.emits {
            let target = base.join(path);
            let body = match format {
                EmitFormat::Json => self.report_json(),
                EmitFormat::Svg => self.to_svg(),
            };
            std::fs::write(&target, body).map_err(|e| ScriptError::Io {
                path: target.display().to_string(),
                message: e.to_string(),
            })?;
        }
        Ok(())
    }
}

fn check(relation_kind: AssertRel, p: &[Point], fuel: &Fuel) -> Result<Verdict, KernelError> {
    let tri = |i: usize| AngleTriple::new(p[i].clone(), p[i + 1].clone(), p[i + 2].clone());
    Ok(match relation_kind {
        AssertRel::Relation(k) => relation(k, p, fuel)?,
        AssertRel::Gt => gt(&p[0], &p[1], &p[2], &p[3], fuel),
        AssertRel::Left => left_of(&p[0], &p[1], &p[2], fuel),
        AssertRel::AngleCong => angle_cong(&tri(0), &tri(3), fuel)?,
        AssertRel::AngleLt => angle_lt(&tri(0), &tri(3), fuel)?,
        AssertRel::AngleSum => angle_sum_check(&tri(0), &tri(3), &tri(6), fuel)?,
    })
}

/// Runs the statements in order. `emit` statements are recorded in
/// [`EvalEnv::emits`] and written by [`EvalEnv::write_emits`].
pub fn eval_script(prog: &ScriptProgram, fuel: &Fuel) -> Result<EvalEnv, ScriptError> {
    let mut env = EvalEnv::default();
    for (stmt, &Pos { line, col }) in prog.statements.iter().zip(&prog.positions) {
        match stmt {
            Stmt::Point { name, x, y } => env.bind(name, Point::rational(x.clone(), y.clone())),
            Stmt::Let { names, construction, args } => {
                let result = construction
                    .apply(&env.lookup(args), fuel)
                    .map_err(|source| ScriptError::Construction { line, col, source })?;
                for (n, p) in names.iter().zip(&result.points) {
                    env.bind(n, p.clone());
                }
                env.constructions.push(ConstructionRecord {
                    line,
                    name: *construction,
                    args: args.clone(),
                    outputs: names.clone(),
                    points: result.points,
                    certificates: result.certificates,
                });
            }
            Stmt::Assert { relation, args, fuel: budget } => {
                let f = match budget {
                    Some(n) => Fuel { max_index: *n, ..*fuel },
                    None => *fuel,
                };
                let verdict =
                    check(*relation, &env.lookup(args), &f).map_err(|source| ScriptError::Kernel { line, col, source })?;
                env.results.push(AssertionResult {
                    line,
                    col,
                    relation: *relation,
                    args: args.clone(),
                    verdict,
                });
            }
            Stmt::Emit { format, path } => env.emits.push((*format, path.clone())),
        }
    }
    Ok(env)
}
