use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::ast::{AssertRel, EmitFormat, ScriptProgram, Stmt};
use super::lexer::{lex, Tok, Token};
use super::{Pos, ScriptError};
use crate::construct::ConstructionKind;
use crate::exact::Rational;

const KEYWORDS: [&str; 4] = ["point", "let", "assert", "emit"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
    bound: HashSet<String>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ScriptError> {
        let t = self.peek();
        Err(ScriptError::syntax(t.pos, expected, &t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ScriptError> {
        if self.peek().tok == tok {
            Ok(self.next().pos)
        } else {
            self.fail(&[&tok.describe()])
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ScriptError> {
        match &self.peek().tok {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                Ok((s, self.next().pos))
            }
            _ => self.fail(&[what]),
        }
    }

    fn use_name(&mut self) -> Result<String, ScriptError> {
        let (name, pos) = self.ident("point name")?;
        if !self.bound.contains(&name) {
            return Err(ScriptError::UnboundName { name, line: pos.line, col: pos.col });
        }
        Ok(name)
    }

    fn bind(&mut self, name: &str, pos: Pos) -> Result<(), ScriptError> {
        if !self.bound.insert(name.to_string()) {
            return Err(ScriptError::Rebind { name: name.to_string(), line: pos.line, col: pos.col });
        }
        Ok(())
    }

    fn int(&mut self) -> Result<BigInt, ScriptError> {
        match &self.peek().tok {
            Tok::Int(n) => {
                let n = n.clone();
                self.next();
                Ok(n)
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn rational(&mut self) -> Result<Rational, ScriptError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.next();
            true
        } else {
            false
        };
        let numer = self.int()?;
        let numer = if negative { -numer } else { numer };
        if self.peek().tok != Tok::Slash {
            return Ok(Rational::from_integer(numer));
        }
        self.next();
        let pos = self.peek().pos;
        let denom = self.int()?;
        if denom.is_zero() {
            return Err(ScriptError::syntax(pos, &["nonzero denominator"], "`0`"));
        }
        Ok(Rational::new(numer, denom).expect("nonzero denominator"))
    }

    fn at_statement_end(&self) -> bool {
        match &self.peek().tok {
            Tok::Eof | Tok::At => true,
            Tok::Ident(s) => KEYWORDS.contains(&s.as_str()),
            _ => false,
        }
    }

    fn statement(&mut self) -> Result<Stmt, ScriptError> {
        let kw = match &self.peek().tok {
            Tok::Ident(s) if KEYWORDS.contains(&s.as_str()) => s.clone(),
            _ => return self.fail(&["`point`", "`let`", "`assert`", "`emit`"]),
        };
        self.next();
        match kw.as_str() {
            "point" => {
                let (name, pos) = self.ident("point name")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LParen)?;
                let x = self.rational()?;
                self.expect(Tok::Comma)?;
                let y = self.rational()?;
                self.expect(Tok::RParen)?;
                self.bind(&name, pos)?;
                Ok(Stmt::Point { name, x, y })
            }
            "let" => {
                let mut names = vec![self.ident("name")?];
                while self.peek().tok == Tok::Comma {
                    self.next();
                    names.push(self.ident("name")?);
                }
                self.expect(Tok::Eq)?;
                let cpos = self.peek().pos;
                let construction = match &self.peek().tok {
                    Tok::Ident(s) => s.parse::<ConstructionKind>().ok(),
                    _ => None,
                };
                let Some(construction) = construction else {
                    let names: Vec<String> = ConstructionKind::ALL.iter().map(|k| format!("`{k}`")).collect();
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    return self.fail(&refs);
                };
                self.next();
                self.expect(Tok::LParen)?;
                let mut args = vec![self.use_name()?];
                while self.peek().tok == Tok::Comma {
                    self.next();
                    args.push(self.use_name()?);
                }
                self.expect(Tok::RParen)?;
                if args.len() != construction.arity() {
                    return Err(ScriptError::Arity {
                        name: construction.name().to_string(),
                        expected: construction.arity(),
                        got: args.len(),
                        line: cpos.line,
                        col: cpos.col,
                    });
                }
                if names.len() != construction.outputs() {
                    return Err(ScriptError::Arity {
                        name: format!("{construction} outputs"),
                        expected: construction.outputs(),
                        got: names.len(),
                        line: cpos.line,
                        col: cpos.col,
                    });
                }
                for (n, p) in &names {
                    self.bind(n, *p)?;
                }
                Ok(Stmt::Let {
                    names: names.into_iter().map(|(n, _)| n).collect(),
                    construction,
                    args,
                })
            }
            "assert" => {
                let rpos = self.peek().pos;
                let relation = match &self.peek().tok {
                    Tok::Ident(s) => s.parse::<AssertRel>().ok(),
                    _ => None,
                };
                let Some(relation) = relation else {
                    let names: Vec<String> = AssertRel::all().iter().map(|r| format!("`{r}`")).collect();
                    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                    return self.fail(&refs);
                };
                self.next();
                let mut args = vec![self.use_name()?];
                while !self.at_statement_end() {
                    args.push(self.use_name()?);
                }
                let fuel = if self.peek().tok == Tok::At {
                    self.next();
                    let pos = self.peek().pos;
                    let n = self.int()?;
                    match n.to_u64().filter(|n| *n > 0) {
                        Some(n) => Some(n),
                        None => return Err(ScriptError::syntax(pos, &["fuel between 1 and 2^64-1"], &n.to_string())),
                    }
                } else {
                    None
                };
                if args.len() != relation.arity() {
                    return Err(ScriptError::Arity {
                        name: relation.name().to_string(),
                        expected: relation.arity(),
                        got: args.len(),
                        line: rpos.line,
                        col: rpos.col,
                    });
                }
                Ok(Stmt::Assert { relation, args, fuel })
            }
            _ => {
                let format = match &self.peek().tok {
                    Tok::Ident(s) if s == "json" => EmitFormat::Json,
                    Tok::Ident(s) if s == "svg" => EmitFormat::Svg,
                    _ => return self.fail(&["`json`", "`svg`"]),
                };
                self.next();
                let path = match &self.peek().tok {
                    Tok::Str(s) => s.clone(),
                    _ => return self.fail(&["string"]),
                };
                self.next();
                Ok(Stmt::Emit { format, path })
            }
        }
    }
}

/// Parses a script and checks that every name is bound once, before use.
pub fn parse_script(text: &str) -> Result<ScriptProgram, ScriptError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        bound: HashSet::new(),
    };
    let mut prog = ScriptProgram::default();
    while p.peek().tok != Tok::Eof {
        let pos = p.peek().pos;
        let stmt = p.statement()?;
        prog.statements.push(stmt);
        prog.positions.push(pos);
    }
    Ok(prog)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::RelationKind;

    #[test]
    fn midpoint_script() {
        let prog = parse_script("point a = (0,0)\npoint b = (2,0)\nlet m = midpoint(a,b)\nassert cong a m m b").unwrap();
        assert_eq!(prog.len(), 4);
        assert_eq!(
            prog.statements[3],
            Stmt::Assert {
                relation: AssertRel::Relation(RelationKind::Cong),
                args: vec!["a".into(), "m".into(), "m".into(), "b".into()],
                fuel: None
            }
        );
        assert_eq!(prog.positions[2], Pos { line: 3, col: 1 });
    }

    #[test]
    fn rationals_are_exact() {
        let prog = parse_script("point a = (1/3, -2/7)").unwrap();
        assert_eq!(
            prog.statements[0],
            Stmt::Point {
                name: "a".into(),
                x: Rational::new(1, 3).unwrap(),
                y: Rational::new(-2, 7).unwrap()
            }
        );
    }

    #[test]
    fn binding_discipline() {
        let err = parse_script("assert between a m b").unwrap_err();
        assert_eq!(err, ScriptError::UnboundName { name: "a".into(), line: 1, col: 16 });
        let err = parse_script("point a = (0,0)\npoint a = (1,0)").unwrap_err();
        assert_eq!(err, ScriptError::Rebind { name: "a".into(), line: 2, col: 7 });
    }

    #[test]
    fn errors_carry_expected_sets() {
        match parse_script("point a = (0 0)").unwrap_err() {
            ScriptError::Syntax { line, col, expected, .. } => {
                assert_eq!((line, col), (1, 14));
                assert_eq!(expected, vec!["`,`".to_string()]);
            }
            e => panic!("{e:?}"),
        }
        match parse_script("point a = (0,0)\nlet b = frobnicate(a)").unwrap_err() {
            ScriptError::Syntax { line, expected, .. } => {
                assert_eq!(line, 2);
                assert!(expected.contains(&"`midpoint`".to_string()));
            }
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_script("point a = (1/0, 0)"), Err(ScriptError::Syntax { .. })));
    }

    #[test]
    fn arity_is_checked() {
        let err = parse_script("point a = (0,0)\nassert cong a a a").unwrap_err();
        assert!(matches!(err, ScriptError::Arity { expected: 4, got: 3, .. }), "{err:?}");
        let err = parse_script("point a = (0,0)\npoint b = (1,0)\nlet m, n = midpoint(a,b)").unwrap_err();
        assert!(matches!(err, ScriptError::Arity { expected: 1, got: 2, .. }), "{err:?}");
    }

    #[test]
    fn fuel_and_emit() {
        let prog = parse_script("point a = (0,0)\nassert equiv a a @12\nemit svg \"out/fig.svg\"").unwrap();
        assert_eq!(
            prog.statements[1],
            Stmt::Assert {
                relation: AssertRel::Relation(RelationKind::Equiv),
                args: vec!["a".into(), "a".into()],
                fuel: Some(12)
            }
        );
        assert_eq!(
            prog.statements[2],
            Stmt::Emit {
                format: EmitFormat::Svg,
                path: "out/fig.svg".into()
            }
        );
    }

    #[test]
    fn pretty_print_round_trips() {
        let text = "# tri\npoint a=(-3,0) point b=(0,4)\npoint c=(3,0)\nlet x=bisector_foot(c,a,b)\nlet t,m=parallelogram_fourth(a,b,c)\nassert angle_cong a c x x c b @100\nemit json \"r\\\"s.json\"";
        let prog = parse_script(text).unwrap();
        let printed = prog.to_string();
        assert_eq!(parse_script(&printed).unwrap(), prog);
        assert_eq!(parse_script(&printed).unwrap().to_string(), printed);
    }
}
