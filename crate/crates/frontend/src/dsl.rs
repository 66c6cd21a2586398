//! Line-oriented construction scripts (`.geo` files).
//!
//! ```text
//! # comment
//! let C1 = point(0, 0)
//! let P = parbelos(C1, C2, C3, left)
//! assert tangent(P.outer, P.diagonal)
//! ```
//!
//! Names bind once and must be bound before use. Every argument is a name
//! (optionally with dotted field access), a rational literal, or a side
//! keyword. Kinds are checked while parsing, so a parsed [`Program`] only
//! fails at evaluation for geometric reasons.

use std::collections::HashMap;
use std::fmt;

use parbelos_core::{Rational, Side};
use thiserror::Error;

use crate::value::{field_kind, Kind};

/// 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Param {
    Value(Kind),
    Side,
    /// Any kind, as long as all `Same` parameters agree.
    Same,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constructor {
    Point,
    Line,
    Circle3,
    Circle2,
    ParabolaLatus,
    TangentAt,
    Pedal,
    Perp,
    Intersect,
    SecondIntersect,
    Parbelos,
}

impl Constructor {
    const ALL: [Constructor; 11] = [
        Constructor::Point,
        Constructor::Line,
        Constructor::Circle3,
        Constructor::Circle2,
        Constructor::ParabolaLatus,
        Constructor::TangentAt,
        Constructor::Pedal,
        Constructor::Perp,
        Constructor::Intersect,
        Constructor::SecondIntersect,
        Constructor::Parbelos,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constructor::Point => "point",
            Constructor::Line => "line",
            Constructor::Circle3 => "circle3",
            Constructor::Circle2 => "circle2",
            Constructor::ParabolaLatus => "parabola_latus",
            Constructor::TangentAt => "tangent_at",
            Constructor::Pedal => "pedal",
            Constructor::Perp => "perp",
            Constructor::Intersect => "intersect",
            Constructor::SecondIntersect => "second_intersect",
            Constructor::Parbelos => "parbelos",
        }
    }

    pub fn from_name(name: &str) -> Option<Constructor> {
        Constructor::ALL.into_iter().find(|c| c.name() == name)
    }

    fn params(self) -> &'static [Param] {
        use Kind::*;
        match self {
            Constructor::Point => &[Param::Value(Rational), Param::Value(Rational)],
            Constructor::Line => &[Param::Value(Point), Param::Value(Point)],
            Constructor::Circle3 => &[Param::Value(Point), Param::Value(Point), Param::Value(Point)],
            Constructor::Circle2 => &[Param::Value(Point), Param::Value(Point), Param::Value(Rational)],
            Constructor::ParabolaLatus => &[Param::Value(Point), Param::Value(Point), Param::Side],
            Constructor::TangentAt => &[Param::Value(Parabola), Param::Value(Point)],
            Constructor::Pedal => &[Param::Value(Point), Param::Value(Line)],
            Constructor::Perp => &[Param::Value(Line), Param::Value(Point)],
            Constructor::Intersect => &[Param::Value(Line), Param::Value(Line)],
            Constructor::SecondIntersect => &[Param::Value(Line), Param::Value(Circle), Param::Value(Point)],
            Constructor::Parbelos => &[Param::Value(Point), Param::Value(Point), Param::Value(Point), Param::Side],
        }
    }

    pub fn output(self) -> Kind {
        match self {
            Constructor::Point | Constructor::Pedal | Constructor::Intersect | Constructor::SecondIntersect => {
                Kind::Point
            }
            Constructor::Line | Constructor::TangentAt | Constructor::Perp => Kind::Line,
            Constructor::Circle3 | Constructor::Circle2 => Kind::Circle,
            Constructor::ParabolaLatus => Kind::Parabola,
            Constructor::Parbelos => Kind::Figure,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Collinear,
    Concyclic,
    OnParabola,
    Tangent,
    Equidistant,
    Perpendicular,
    Eq,
}

impl Predicate {
    const ALL: [Predicate; 7] = [
        Predicate::Collinear,
        Predicate::Concyclic,
        Predicate::OnParabola,
        Predicate::Tangent,
        Predicate::Equidistant,
        Predicate::Perpendicular,
        Predicate::Eq,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Collinear => "collinear",
            Predicate::Concyclic => "concyclic",
            Predicate::OnParabola => "on_parabola",
            Predicate::Tangent => "tangent",
            Predicate::Equidistant => "equidistant",
            Predicate::Perpendicular => "perpendicular",
            Predicate::Eq => "eq",
        }
    }

    pub fn from_name(name: &str) -> Option<Predicate> {
        Predicate::ALL.into_iter().find(|p| p.name() == name)
    }

    fn params(self) -> &'static [Param] {
        use Kind::*;
        match self {
            Predicate::Collinear | Predicate::Equidistant => {
                &[Param::Value(Point), Param::Value(Point), Param::Value(Point)]
            }
            Predicate::Concyclic => &[Param::Value(Circle), Param::Value(Point)],
            Predicate::OnParabola => &[Param::Value(Parabola), Param::Value(Point)],
            Predicate::Tangent => &[Param::Value(Parabola), Param::Value(Line)],
            Predicate::Perpendicular => &[Param::Value(Line), Param::Value(Line)],
            Predicate::Eq => &[Param::Same, Param::Same],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArgExpr {
    /// `name` or `name.field.field`.
    Ref(Vec<String>),
    Number(Rational),
    Side(Side),
}

#[derive(Clone, Debug)]
pub struct Arg {
    pub expr: ArgExpr,
    pub pos: Pos,
}

// Positions are metadata; two programs are equal when they say the same thing.
impl PartialEq for Arg {
    fn eq(&self, other: &Self) -> bool {
        self.expr == other.expr
    }
}

impl Eq for Arg {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    Let { name: String, ctor: Constructor, args: Vec<Arg> },
    Assert { pred: Predicate, args: Vec<Arg> },
}

#[derive(Clone, Debug)]
pub struct Statement {
    pub kind: StatementKind,
    pub pos: Pos,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Statement {}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub statements: Vec<Statement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown constructor `{0}`")]
    UnknownConstructor(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("name `{0}` is already bound")]
    DuplicateName(String),
    #[error("unbound name `{0}`")]
    UnboundName(String),
    #[error("`{0}` is reserved and cannot be bound")]
    ReservedName(String),
    #[error("{kind} `{path}` has no field `{field}`")]
    UnknownField { path: String, kind: Kind, field: String },
    #[error("`{name}` takes {expected} argument(s), found {found}")]
    Arity { name: String, expected: usize, found: usize },
    #[error("expected {expected}, found {found}")]
    TypeMismatch { expected: String, found: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {}, column {}: {kind}", pos.line, pos.column)]
pub struct ParseError {
    pub pos: Pos,
    pub kind: ParseErrorKind,
}

const RESERVED: [&str; 4] = ["let", "assert", "left", "right"];

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    Sym(char),
}

fn lex(line_no: usize, text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let at = |i: usize| Pos { line: line_no, column: i + 1 };
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let signed_number = (c == '-' || c == '+') && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit());
        if c.is_ascii_digit() || signed_number {
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if chars.get(i) == Some(&'/') {
                i += 1;
                if !chars.get(i).is_some_and(|d| d.is_ascii_digit()) {
                    return Err(ParseError {
                        pos: at(i),
                        kind: ParseErrorKind::Syntax("expected digits after `/`".into()),
                    });
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let literal: String = chars[start..i].iter().collect();
            let value = literal
                .parse::<Rational>()
                .map_err(|e| ParseError { pos: at(start), kind: ParseErrorKind::Syntax(e.to_string()) })?;
            out.push((Tok::Number(value), at(start)));
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), at(start)));
        } else if "(),=.".contains(c) {
            out.push((Tok::Sym(c), at(start)));
            i += 1;
        } else {
            return Err(ParseError {
                pos: at(start),
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            });
        }
    }
    Ok(out)
}

struct LineParser {
    toks: Vec<(Tok, Pos)>,
    idx: usize,
    end: Pos,
}

impl LineParser {
    fn peek(&self) -> Option<&(Tok, Pos)> {
        self.toks.get(self.idx)
    }

    fn pos(&self) -> Pos {
        self.peek().map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), kind: ParseErrorKind::Syntax(msg.into()) })
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of line".into(),
            Some((Tok::Ident(s), _)) => format!("`{s}`"),
            Some((Tok::Number(r), _)) => format!("`{r}`"),
            Some((Tok::Sym(c), _)) => format!("`{c}`"),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.peek().cloned() {
            Some((Tok::Ident(s), p)) => {
                self.idx += 1;
                Ok((s, p))
            }
            _ => self.syntax(format!("expected {what}, found {}", self.describe())),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some((Tok::Sym(s), _)) if *s == c => {
                self.idx += 1;
                Ok(())
            }
            _ => self.syntax(format!("expected `{c}`, found {}", self.describe())),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some((Tok::Sym(s), _)) if *s == c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        match self.peek().cloned() {
            Some((Tok::Number(r), pos)) => {
                self.idx += 1;
                Ok(Arg { expr: ArgExpr::Number(r), pos })
            }
            Some((Tok::Ident(s), pos)) => {
                self.idx += 1;
                match s.as_str() {
                    "left" => return Ok(Arg { expr: ArgExpr::Side(Side::Left), pos }),
                    "right" => return Ok(Arg { expr: ArgExpr::Side(Side::Right), pos }),
                    _ => {}
                }
                let mut path = vec![s];
                while self.eat('.') {
                    path.push(self.ident("field name")?.0);
                }
                Ok(Arg { expr: ArgExpr::Ref(path), pos })
            }
            _ => self.syntax(format!("expected argument, found {}", self.describe())),
        }
    }

    /// `( arg, arg, ... )` up to the end of the line.
    fn call_args(&mut self) -> Result<Vec<Arg>, ParseError> {
        self.sym('(')?;
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                args.push(self.arg()?);
                if self.eat(')') {
                    break;
                }
                self.sym(',')?;
            }
        }
        if self.peek().is_some() {
            return self.syntax(format!("unexpected {} after statement", self.describe()));
        }
        Ok(args)
    }
}

/// Name → kind scope used for parse-time checks.
struct Scope(HashMap<String, Kind>);

impl Scope {
    fn resolve(&self, arg: &Arg) -> Result<Option<Kind>, ParseError> {
        match &arg.expr {
            ArgExpr::Number(_) => Ok(Some(Kind::Rational)),
            ArgExpr::Side(_) => Ok(None),
            ArgExpr::Ref(path) => {
                let mut kind = *self
                    .0
                    .get(&path[0])
                    .ok_or_else(|| ParseError { pos: arg.pos, kind: ParseErrorKind::UnboundName(path[0].clone()) })?;
                for (i, field) in path.iter().enumerate().skip(1) {
                    kind = field_kind(kind, field).ok_or_else(|| ParseError {
                        pos: arg.pos,
                        kind: ParseErrorKind::UnknownField { path: path[..i].join("."), kind, field: field.clone() },
                    })?;
                }
                Ok(Some(kind))
            }
        }
    }

    fn check_args(&self, name: &str, params: &[Param], args: &[Arg], pos: Pos) -> Result<(), ParseError> {
        if params.len() != args.len() {
            return Err(ParseError {
                pos,
                kind: ParseErrorKind::Arity { name: name.into(), expected: params.len(), found: args.len() },
            });
        }
        let mut same: Option<Kind> = None;
        for (param, arg) in params.iter().zip(args) {
            let found = self.resolve(arg)?;
            let mismatch = |expected: String| ParseError {
                pos: arg.pos,
                kind: ParseErrorKind::TypeMismatch {
                    expected,
                    found: found.map_or_else(|| "side keyword".to_string(), |k| k.to_string()),
                },
            };
            match param {
                Param::Side if found.is_some() => return Err(mismatch("left or right".into())),
                Param::Side => {}
                Param::Value(k) if found != Some(*k) => return Err(mismatch(k.to_string())),
                Param::Value(_) => {}
                Param::Same => match (found, same) {
                    (None, _) => return Err(mismatch("a value".into())),
                    (Some(k), None) => same = Some(k),
                    (Some(k), Some(s)) if k != s => return Err(mismatch(s.to_string())),
                    _ => {}
                },
            }
        }
        Ok(())
    }
}

pub fn parse_script(text: &str) -> Result<Program, ParseError> {
    let mut scope = Scope(HashMap::new());
    let mut statements = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks = lex(line_no, raw)?;
        if toks.is_empty() {
            continue;
        }
        let end = Pos { line: line_no, column: raw.chars().count() + 1 };
        let mut p = LineParser { toks, idx: 0, end };
        let (keyword, pos) = p.ident("`let` or `assert`")?;
        let kind = match keyword.as_str() {
            "let" => {
                let (name, name_pos) = p.ident("name")?;
                if RESERVED.contains(&name.as_str()) {
                    return Err(ParseError { pos: name_pos, kind: ParseErrorKind::ReservedName(name) });
                }
                p.sym('=')?;
                let (ctor_name, ctor_pos) = p.ident("constructor")?;
                let args = p.call_args()?;
                let ctor = Constructor::from_name(&ctor_name).ok_or_else(|| ParseError {
                    pos: ctor_pos,
                    kind: ParseErrorKind::UnknownConstructor(ctor_name.clone()),
                })?;
                scope.check_args(ctor.name(), ctor.params(), &args, ctor_pos)?;
                if scope.0.contains_key(&name) {
                    return Err(ParseError { pos: name_pos, kind: ParseErrorKind::DuplicateName(name) });
                }
                scope.0.insert(name.clone(), ctor.output());
                StatementKind::Let { name, ctor, args }
            }
            "assert" => {
                let (pred_name, pred_pos) = p.ident("predicate")?;
                let args = p.call_args()?;
                let pred = Predicate::from_name(&pred_name).ok_or_else(|| ParseError {
                    pos: pred_pos,
                    kind: ParseErrorKind::UnknownPredicate(pred_name.clone()),
                })?;
                scope.check_args(pred.name(), pred.params(), &args, pred_pos)?;
                StatementKind::Assert { pred, args }
            }
            other => {
                return Err(ParseError {
                    pos,
                    kind: ParseErrorKind::Syntax(format!("expected `let` or `assert`, found `{other}`")),
                })
            }
        };
        statements.push(Statement { kind, pos });
    }
    Ok(Program { statements })
}

impl fmt::Display for ArgExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArgExpr::Ref(path) => f.write_str(&path.join(".")),
            ArgExpr::Number(r) => write!(f, "{r}"),
            ArgExpr::Side(s) => f.write_str(s.as_str()),
        }
    }
}

fn write_call(f: &mut fmt::Formatter<'_>, name: &str, args: &[Arg]) -> fmt::Result {
    write!(f, "{name}(")?;
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{}", a.expr)?;
    }
    f.write_str(")")
}

impl StatementKind {
    /// The call part of the statement, e.g. `tangent(P.outer, P.diagonal)`.
    pub fn call_text(&self) -> String {
        struct Call<'a>(&'a StatementKind);
        impl fmt::Display for Call<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    StatementKind::Let { ctor, args, .. } => write_call(f, ctor.name(), args),
                    StatementKind::Assert { pred, args } => write_call(f, pred.name(), args),
                }
            }
        }
        Call(self).to_string()
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StatementKind::Let { name, .. } => write!(f, "let {name} = {}", self.call_text()),
            StatementKind::Assert { .. } => write!(f, "assert {}", self.call_text()),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{}", s.kind)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn err(src: &str) -> ParseError {
        parse_script(src).unwrap_err()
    }

    #[test]
    fn single_let() {
        let p = parse_script("let A = point(0,0)").unwrap();
        assert_eq!(p.statements.len(), 1);
        match &p.statements[0].kind {
            StatementKind::Let { name, ctor, args } => {
                assert_eq!(name, "A");
                assert_eq!(*ctor, Constructor::Point);
                assert_eq!(args.len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbound_name_reported_first() {
        let e = err("let G = parabola_latus(A, B, left)\nassert tangent(G, L)");
        assert_eq!(e.kind, ParseErrorKind::UnboundName("A".into()));
        assert_eq!(e.pos, Pos { line: 1, column: 24 });
    }

    #[test]
    fn parbelos_script_statement_count() {
        let src = "\
# instance with cusps 0, 1, 4
let C1 = point(0, 0)
let C2 = point(1, 0)
let C3 = point(4, 0)

let P = parbelos(C1, C2, C3, left)
assert tangent(P.outer, P.diagonal)   # the diagonal touches the outer arc
";
        let p = parse_script(src).unwrap();
        assert_eq!(p.statements.len(), 5);
        assert_eq!(p.statements[3].pos, Pos { line: 6, column: 1 });
        assert_eq!(p.statements[4].kind.call_text(), "tangent(P.outer, P.diagonal)");
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_script("let  A=point( 1/2 ,-3 )").unwrap();
        let b = parse_script("let A = point(1/2, -3)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(err("let A = pointy(0, 0)").kind, ParseErrorKind::UnknownConstructor(_)));
        assert!(matches!(err("assert parallel(A, B)").kind, ParseErrorKind::UnknownPredicate(_)));
        assert_eq!(
            err("let A = point(0, 0)\nlet A = point(1, 0)"),
            ParseError { pos: Pos { line: 2, column: 5 }, kind: ParseErrorKind::DuplicateName("A".into()) }
        );
        assert!(matches!(err("let left = point(0, 0)").kind, ParseErrorKind::ReservedName(_)));
        assert!(matches!(err("let A = point(0)").kind, ParseErrorKind::Arity { expected: 2, found: 1, .. }));
        assert!(matches!(err("let A = point(0, 0)\nassert eq(A.z, 1)").kind, ParseErrorKind::UnknownField { .. }));
        assert!(matches!(err("let A = point(0, 0)\nlet B = point(A, 0)").kind, ParseErrorKind::TypeMismatch { .. }));
        assert!(matches!(
            err("let A = point(0, 0)\nlet B = point(1, 0)\nlet G = parabola_latus(A, B, 3)").kind,
            ParseErrorKind::TypeMismatch { .. }
        ));
        assert!(matches!(err("let A = point(0, 0)\nassert eq(A, 1)").kind, ParseErrorKind::TypeMismatch { .. }));
    }

    #[test]
    fn syntax_error_positions() {
        let e = err("let A = point(0, 0)\nlet B = point(1, 0");
        assert_eq!(e.pos, Pos { line: 2, column: 19 });
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = err("let A = point(1/0, 0)");
        assert_eq!(e.pos, Pos { line: 1, column: 15 });
        let e = err("let A = point(0, 0) junk");
        assert_eq!(e.pos, Pos { line: 1, column: 21 });
        let e = err("draw A");
        assert_eq!(e.pos, Pos { line: 1, column: 1 });
        let e = err("let A = point(0; 0)");
        assert_eq!(e.pos, Pos { line: 1, column: 16 });
        let e = err("let A = point(1/, 0)");
        assert_eq!(e.pos, Pos { line: 1, column: 17 });
    }

    #[test]
    fn rational_literals_in_eq() {
        let p = parse_script("assert eq(1/2, 2/4)").unwrap();
        match &p.statements[0].kind {
            StatementKind::Assert { args, .. } => {
                assert_eq!(args[0].expr, ArgExpr::Number(Rational::new(1, 2)));
                assert_eq!(args[1].expr, ArgExpr::Number(Rational::new(1, 2)));
            }
            other => panic!("{other:?}"),
        }
    }

    fn arb_script() -> impl Strategy<Value = String> {
        let lit = (-50i64..50, 1i64..9).prop_map(|(n, d)| format!("{n}/{d}"));
        (proptest::collection::vec((lit.clone(), lit), 3..6), any::<bool>()).prop_map(|(coords, left)| {
            let mut s = String::from("# generated\n");
            for (i, (x, y)) in coords.iter().enumerate() {
                s.push_str(&format!("let P{i} =   point( {x},{y} )  # p{i}\n"));
            }
            let side = if left { "left" } else { "right" };
            s.push_str(&format!("let G = parabola_latus(P0, P1, {side})\n"));
            s.push_str("let L = line(P1, P2)\nassert collinear(P0, P1, G.vertex)\n");
            s.push_str("assert eq(G.focus.x, -1/3)\nassert tangent(G, L)\n");
            s
        })
    }

    proptest! {
        #[test]
        fn pretty_print_is_a_fixed_point(src in arb_script()) {
            let p = parse_script(&src).unwrap();
            let printed = p.to_string();
            let reparsed = parse_script(&printed).unwrap();
            prop_assert_eq!(&reparsed, &p);
            prop_assert_eq!(reparsed.to_string(), printed);
        }
    }
}
