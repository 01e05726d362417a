//! Text syntax for both languages.
//!
//! Weight programs:
//!
//! ```text
//! 0 <= {a, b} <= 1.
//! 1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4.
//! :- q.
//! ```
//!
//! Nested programs:
//!
//! ```text
//! a ; not a.
//! a :- not not a.
//! -a :- not a.
//! ```
//!
//! `-` is classical negation, `not` is negation as failure, `%` starts a
//! comment that runs to the end of the line. Numbers are integers,
//! decimals (`0.5`) or fractions (`3/4`), all read exactly.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::syntax::{
    write_rational, Atom, Bound, Formula, Literal, NProgram, NRule, Rational, RuleElement,
    WProgram, WRule, WeightConstraint, WeightPair, RESERVED_PREFIX,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Validation,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    Not,
    Bot,
    Top,
    Minus,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Le,
    If,
    Dot,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(r) => {
                f.write_char('`')?;
                write_rational(f, r)?;
                f.write_char('`')
            }
            Tok::Not => f.write_str("`not`"),
            Tok::Bot => f.write_str("`bot`"),
            Tok::Top => f.write_str("`top`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Le => f.write_str("`<=`"),
            Tok::If => f.write_str("`:-`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn syntax_error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
        kind: ParseErrorKind::Syntax,
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(1, &mut i, &mut col),
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            '{' | '}' | '(' | ')' | ',' | ';' | '=' | '.' => {
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    '=' => Tok::Eq,
                    _ => Tok::Dot,
                };
                tokens.push(Token { tok, line: tl, column: tc });
                advance(1, &mut i, &mut col);
            }
            '<' => {
                if chars.get(i + 1) == Some(&'=') {
                    tokens.push(Token { tok: Tok::Le, line: tl, column: tc });
                    advance(2, &mut i, &mut col);
                } else {
                    return Err(syntax_error(tl, tc, "expected `<=`; strict `<` is not allowed in weight constraints"));
                }
            }
            ':' => {
                if chars.get(i + 1) == Some(&'-') {
                    tokens.push(Token { tok: Tok::If, line: tl, column: tc });
                    advance(2, &mut i, &mut col);
                } else {
                    return Err(syntax_error(tl, tc, "expected `:-`"));
                }
            }
            '-' if chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) => {
                let (r, n) = lex_number(&chars[i + 1..]).map_err(|m| syntax_error(tl, tc, m))?;
                tokens.push(Token { tok: Tok::Number(-r), line: tl, column: tc });
                advance(n + 1, &mut i, &mut col);
            }
            '-' => {
                tokens.push(Token { tok: Tok::Minus, line: tl, column: tc });
                advance(1, &mut i, &mut col);
            }
            c if c.is_ascii_digit() => {
                let (r, n) = lex_number(&chars[i..]).map_err(|m| syntax_error(tl, tc, m))?;
                tokens.push(Token { tok: Tok::Number(r), line: tl, column: tc });
                advance(n, &mut i, &mut col);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += i - start;
                if !word.starts_with(|ch: char| ch.is_ascii_lowercase()) {
                    return Err(syntax_error(tl, tc, format!("atom names must start with a lower-case letter: `{word}`")));
                }
                let tok = match word.as_str() {
                    "not" => Tok::Not,
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    _ => Tok::Ident(word),
                };
                tokens.push(Token { tok, line: tl, column: tc });
            }
            other => return Err(syntax_error(tl, tc, format!("unexpected character {other:?}"))),
        }
    }
    tokens.push(Token { tok: Tok::Eof, line, column: col });
    Ok(tokens)
}

/// Reads `digits`, `digits.digits` or `digits/digits`; returns the value and
/// the number of characters consumed.
fn lex_number(chars: &[char]) -> Result<(Rational, usize), String> {
    let digits = |from: usize| chars[from..].iter().take_while(|c| c.is_ascii_digit()).count();
    let int_len = digits(0);
    let int_part: BigInt = chars[..int_len].iter().collect::<String>().parse().unwrap();
    match chars.get(int_len) {
        Some('.') if chars.get(int_len + 1).is_some_and(|c| c.is_ascii_digit()) => {
            let frac_len = digits(int_len + 1);
            let frac: String = chars[int_len + 1..int_len + 1 + frac_len].iter().collect();
            let scale = BigInt::from(10u32).pow(frac_len as u32);
            let numer = int_part * &scale + frac.parse::<BigInt>().unwrap();
            Ok((Rational::new(numer, scale), int_len + 1 + frac_len))
        }
        Some('/') if chars.get(int_len + 1).is_some_and(|c| c.is_ascii_digit()) => {
            let den_len = digits(int_len + 1);
            let den: BigInt = chars[int_len + 1..int_len + 1 + den_len]
                .iter()
                .collect::<String>()
                .parse()
                .unwrap();
            if den.is_zero() {
                return Err("zero denominator".into());
            }
            Ok((Rational::new(int_part, den), int_len + 1 + den_len))
        }
        _ => Ok((Rational::from_integer(int_part), int_len)),
    }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Self {
            tokens: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn here(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let t = self.here();
        syntax_error(t.line, t.column, format!("expected {expected}, found {}", t.tok))
    }

    fn expect(&mut self, tok: &Tok, expected: &str) -> Result<Token, ParseError> {
        if self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn literal(&mut self, validate_prefix: bool) -> Result<Literal, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let t = self.bump();
        match t.tok {
            Tok::Ident(name) => {
                if validate_prefix && name.starts_with(RESERVED_PREFIX) {
                    return Err(ParseError {
                        line: t.line,
                        column: t.column,
                        message: format!("atom `{name}` uses the reserved prefix `{RESERVED_PREFIX}`"),
                        kind: ParseErrorKind::Validation,
                    });
                }
                let atom = Atom::new(name);
                Ok(if neg { Literal::neg(atom) } else { Literal::pos(atom) })
            }
            other => Err(syntax_error(t.line, t.column, format!("expected an atom, found {other}"))),
        }
    }

    fn element(&mut self) -> Result<RuleElement, ParseError> {
        let naf = self.eat(&Tok::Not);
        let lit = self.literal(true)?;
        Ok(RuleElement { lit, naf })
    }

    fn number(&mut self) -> Result<(Rational, Token), ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Number(r) => Ok((r.clone(), t)),
            other => Err(syntax_error(t.line, t.column, format!("expected a number, found {other}"))),
        }
    }

    fn starts_constraint(&self) -> bool {
        matches!(
            self.peek(),
            Tok::Number(_) | Tok::LBrace | Tok::Not | Tok::Minus | Tok::Ident(_)
        )
    }

    fn constraint(&mut self) -> Result<WeightConstraint, ParseError> {
        let lower = match self.peek() {
            Tok::Number(_) => {
                let (r, _) = self.number()?;
                self.expect(&Tok::Le, "`<=` after lower bound")?;
                Some(Bound::Finite(r))
            }
            _ => None,
        };
        if lower.is_none() && *self.peek() != Tok::LBrace {
            return Ok(WeightConstraint::element(self.element()?));
        }
        self.expect(&Tok::LBrace, "`{`")?;
        let mut pairs = Vec::new();
        if *self.peek() != Tok::RBrace {
            loop {
                let element = self.element()?;
                let weight = if self.eat(&Tok::Eq) {
                    let (w, t) = self.number()?;
                    if w.is_negative() {
                        return Err(ParseError {
                            line: t.line,
                            column: t.column,
                            message: "negative weights are rejected".into(),
                            kind: ParseErrorKind::Validation,
                        });
                    }
                    w
                } else {
                    Rational::from_integer(1.into())
                };
                pairs.push(WeightPair::new(element, weight));
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(&Tok::RBrace, "`,` or `}`")?;
        let upper = if self.eat(&Tok::Le) {
            Bound::Finite(self.number()?.0)
        } else {
            Bound::PosInf
        };
        Ok(WeightConstraint::new(lower.unwrap_or(Bound::NegInf), pairs, upper)
            .expect("weights validated above"))
    }

    fn weight_rule(&mut self) -> Result<WRule, ParseError> {
        let head = if self.starts_constraint() {
            self.constraint()?
        } else {
            WeightConstraint::empty_head()
        };
        let mut body = Vec::new();
        if self.eat(&Tok::If) && self.starts_constraint() {
            loop {
                body.push(self.constraint()?);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
        self.expect(&Tok::Dot, "`.` at end of rule")?;
        Ok(WRule::new(head, body))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut disjuncts = vec![self.conjunction()?];
        while self.eat(&Tok::Semi) {
            disjuncts.push(self.conjunction()?);
        }
        Ok(if disjuncts.len() == 1 {
            disjuncts.pop().unwrap()
        } else {
            Formula::Or(disjuncts)
        })
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut conjuncts = vec![self.unary()?];
        while self.eat(&Tok::Comma) {
            conjuncts.push(self.unary()?);
        }
        Ok(if conjuncts.len() == 1 {
            conjuncts.pop().unwrap()
        } else {
            Formula::And(conjuncts)
        })
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Bot => {
                self.bump();
                Ok(Formula::Bot)
            }
            Tok::Top => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Minus | Tok::Ident(_) => Ok(Formula::Lit(self.literal(false)?)),
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn nested_rule(&mut self) -> Result<NRule, ParseError> {
        let head = self.formula()?;
        let body = if self.eat(&Tok::If) {
            self.formula()?
        } else {
            Formula::Top
        };
        self.expect(&Tok::Dot, "`.` at end of rule")?;
        Ok(NRule::new(head, body))
    }
}

pub fn parse_weight_program(text: &str) -> Result<WProgram, ParseError> {
    let mut p = Parser::new(text)?;
    let mut rules = Vec::new();
    while !p.at_eof() {
        rules.push(p.weight_rule()?);
    }
    Ok(WProgram::new(rules))
}

pub fn parse_nested_program(text: &str) -> Result<NProgram, ParseError> {
    let mut p = Parser::new(text)?;
    let mut rules = Vec::new();
    while !p.at_eof() {
        rules.push(p.nested_rule()?);
    }
    Ok(NProgram::new(rules))
}

/// Parse a single nested formula, e.g. `(a; not a), not (a, b)`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    if !p.at_eof() {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

fn write_constraint(out: &mut String, c: &WeightConstraint) {
    let one = Rational::from_integer(1.into());
    if *c.lower() == Bound::Finite(one.clone())
        && *c.upper() == Bound::PosInf
        && c.pairs().len() == 1
        && c.pairs()[0].weight == one
    {
        write!(out, "{}", c.pairs()[0].element).unwrap();
        return;
    }
    if let Bound::Finite(l) = c.lower() {
        write_rational(out, l).unwrap();
        out.push_str(" <= ");
    }
    out.push('{');
    for (i, p) in c.pairs().iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write!(out, "{}", p.element).unwrap();
        if p.weight != one {
            out.push('=');
            write_rational(out, &p.weight).unwrap();
        }
    }
    out.push('}');
    if let Bound::Finite(u) = c.upper() {
        out.push_str(" <= ");
        write_rational(out, u).unwrap();
    }
}

pub fn print_weight_rule(r: &WRule) -> String {
    let mut out = String::new();
    if !r.head.is_empty_head() {
        write_constraint(&mut out, &r.head);
    }
    if !r.body.is_empty() || r.head.is_empty_head() {
        if out.is_empty() {
            out.push_str(":-");
        } else {
            out.push_str(" :-");
        }
        for (i, c) in r.body.iter().enumerate() {
            out.push_str(if i == 0 { " " } else { ", " });
            write_constraint(&mut out, c);
        }
    }
    out.push('.');
    out
}

pub fn print_weight_program(p: &WProgram) -> String {
    let mut out = String::new();
    for r in &p.rules {
        out.push_str(&print_weight_rule(r));
        out.push('\n');
    }
    out
}

fn level(f: &Formula) -> u8 {
    match f {
        Formula::Or(fs) if fs.len() > 1 => 0,
        Formula::And(fs) if fs.len() > 1 => 1,
        Formula::Or(fs) | Formula::And(fs) if fs.len() == 1 => level(&fs[0]),
        _ => 2,
    }
}

fn write_formula(out: &mut String, f: &Formula, ctx: u8) {
    let parens = level(f) < ctx;
    if parens {
        out.push('(');
    }
    match f {
        Formula::Bot => out.push_str("bot"),
        Formula::Top => out.push_str("top"),
        Formula::Lit(l) => write!(out, "{l}").unwrap(),
        Formula::Not(g) => {
            out.push_str("not ");
            write_formula(out, g, 2);
        }
        Formula::And(fs) if fs.is_empty() => out.push_str("top"),
        Formula::Or(fs) if fs.is_empty() => out.push_str("bot"),
        Formula::And(fs) | Formula::Or(fs) if fs.len() == 1 => write_formula(out, &fs[0], ctx),
        Formula::And(fs) => {
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_formula(out, g, 2);
            }
        }
        Formula::Or(fs) => {
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    out.push_str("; ");
                }
                write_formula(out, g, 1);
            }
        }
    }
    if parens {
        out.push(')');
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, 0);
    out
}

pub fn print_nested_rule(r: &NRule) -> String {
    let mut out = print_formula(&r.head);
    if r.body != Formula::Top {
        out.push_str(" :- ");
        write_formula(&mut out, &r.body, 0);
    }
    out.push('.');
    out
}

pub fn print_nested_program(p: &NProgram) -> String {
    let mut out = String::new();
    for r in &p.rules {
        out.push_str(&print_nested_rule(r));
        out.push('\n');
    }
    out
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}

impl fmt::Display for NRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_nested_rule(self))
    }
}

impl fmt::Display for WRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_weight_rule(self))
    }
}

impl fmt::Display for WeightConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_constraint(&mut s, self);
        f.write_str(&s)
    }
}

impl fmt::Display for WProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_weight_program(self))
    }
}

impl fmt::Display for NProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_nested_program(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn pos(n: &str) -> RuleElement {
        RuleElement::positive(Literal::pos(Atom::new(n)))
    }

    fn neg(n: &str) -> RuleElement {
        RuleElement::negative(Literal::pos(Atom::new(n)))
    }

    #[test]
    fn parses_cardinality_rule() {
        let p = parse_weight_program("0 <= {a, b} <= 1.").unwrap();
        let expected = WeightConstraint::new(
            Bound::int(0),
            vec![WeightPair::unit(pos("a")), WeightPair::unit(pos("b"))],
            Bound::int(1),
        )
        .unwrap();
        assert_eq!(p.rules, vec![WRule::new(expected, vec![])]);
    }

    #[test]
    fn parses_weight_rule() {
        let p = parse_weight_program("1 <= {a=2} <= 2 :- 1 <= {not a=3, not b=2} <= 4.").unwrap();
        let head =
            WeightConstraint::new(Bound::int(1), vec![WeightPair::new(pos("a"), int(2))], Bound::int(2))
                .unwrap();
        let body = WeightConstraint::new(
            Bound::int(1),
            vec![WeightPair::new(neg("a"), int(3)), WeightPair::new(neg("b"), int(2))],
            Bound::int(4),
        )
        .unwrap();
        assert_eq!(p.rules, vec![WRule::new(head, vec![body])]);
    }

    #[test]
    fn rejects_negative_weight() {
        let e = parse_weight_program("1 <= {p=1} :- 0 <= {p=2, p=-1}.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Validation);
        assert_eq!((e.line, e.column), (1, 28));
        assert!(e.message.contains("negative weights"));
    }

    #[test]
    fn rejects_reserved_prefix() {
        let e = parse_weight_program("q_x :- a.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Validation);
    }

    #[test]
    fn element_shorthand() {
        let p = parse_weight_program("p.").unwrap();
        assert_eq!(p.rules, vec![WRule::new(WeightConstraint::element(pos("p")), vec![])]);
        assert_eq!(p, parse_weight_program("1 <= {p=1}.").unwrap());
    }

    #[test]
    fn headless_rules() {
        let p = parse_weight_program(":- q.\n:- .").unwrap();
        assert!(p.rules[0].head.is_empty_head());
        assert_eq!(p.rules[0].body, vec![WeightConstraint::element(pos("q"))]);
        assert!(p.rules[1].head.is_empty_head() && p.rules[1].body.is_empty());
        assert_eq!(print_weight_program(&p), ":- q.\n:-.\n");
    }

    #[test]
    fn exact_decimals_and_fractions() {
        let p = parse_weight_program("1/2 <= {a=0.5, b=3/4} <= 1.25.").unwrap();
        let c = &p.rules[0].head;
        assert_eq!(*c.lower(), Bound::Finite(Rational::new(1.into(), 2.into())));
        assert_eq!(c.pairs()[0].weight, Rational::new(1.into(), 2.into()));
        assert_eq!(c.pairs()[1].weight, Rational::new(3.into(), 4.into()));
        assert_eq!(*c.upper(), Bound::Finite(Rational::new(5.into(), 4.into())));
        assert_eq!(print_weight_program(&p), "1/2 <= {a=1/2, b=3/4} <= 5/4.\n");
    }

    #[test]
    fn negative_bounds_and_classical_negation() {
        let p = parse_weight_program("-1 <= {-a, not -b}.").unwrap();
        let c = &p.rules[0].head;
        assert_eq!(*c.lower(), Bound::int(-1));
        assert!(c.pairs()[0].element.lit.neg && !c.pairs()[0].element.naf);
        assert!(c.pairs()[1].element.lit.neg && c.pairs()[1].element.naf);
    }

    #[test]
    fn cardinality_shorthand_equals_explicit() {
        assert_eq!(
            parse_weight_program("0 <= {a, b} <= 1.").unwrap(),
            parse_weight_program("0 <= {a=1, b=1} <= 1.").unwrap()
        );
    }

    #[test]
    fn strict_less_is_rejected() {
        let e = parse_weight_program("1 < {a}.").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::Syntax);
    }

    #[test]
    fn comments_and_positions() {
        let e = parse_weight_program("% c\na :- b\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::Syntax));
        assert!(parse_weight_program("a. % trailing\n% only\nb.").is_ok());
    }

    #[test]
    fn nested_disjunction_rule() {
        let p = parse_nested_program("a ; not a.").unwrap();
        assert_eq!(
            p.rules,
            vec![NRule::fact(Formula::Or(vec![Formula::atom("a"), Formula::not(Formula::atom("a"))]))]
        );
    }

    #[test]
    fn nested_double_negation_rule() {
        let p = parse_nested_program("a :- not not a.").unwrap();
        assert_eq!(
            p.rules,
            vec![NRule::new(Formula::atom("a"), Formula::not(Formula::not(Formula::atom("a"))))]
        );
    }

    #[test]
    fn nested_precedence() {
        let f = parse_formula("(a; not a), (b; not b), not (a, b)").unwrap();
        let a = Formula::atom("a");
        let b = Formula::atom("b");
        assert_eq!(
            f,
            Formula::And(vec![
                Formula::Or(vec![a.clone(), Formula::not(a.clone())]),
                Formula::Or(vec![b.clone(), Formula::not(b.clone())]),
                Formula::not(Formula::And(vec![a.clone(), b.clone()])),
            ])
        );
        assert_eq!(
            parse_formula("a, b; c").unwrap(),
            Formula::Or(vec![Formula::And(vec![a, b]), Formula::atom("c")])
        );
    }

    #[test]
    fn print_small_cases() {
        let p = parse_weight_program("0 <= {a,b} <= 1.").unwrap();
        assert_eq!(print_weight_program(&p), "0 <= {a, b} <= 1.\n");
        assert_eq!(print_formula(&Formula::Or(vec![])), "bot");
        assert_eq!(print_formula(&Formula::And(vec![])), "top");
        let r = NRule::new(Formula::Bot, Formula::not(Formula::not(Formula::atom("a"))));
        assert_eq!(print_nested_rule(&r), "bot :- not not a.");
    }

    #[test]
    fn nested_groupings_survive_printing() {
        for t in ["(a, b), c.", "(a; b); c.", "not (a; b) :- (c, d), e.", "-a :- not -b."] {
            let p = parse_nested_program(t).unwrap();
            assert_eq!(parse_nested_program(&print_nested_program(&p)).unwrap(), p, "{t}");
        }
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::Bot),
            Just(Formula::Top),
            (0..3usize, any::<bool>()).prop_map(|(i, n)| {
                let atom = Atom::new(["a", "b", "c_1"][i]);
                Formula::Lit(if n { Literal::neg(atom) } else { Literal::pos(atom) })
            }),
        ];
        leaf.prop_recursive(4, 24, 4, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                prop::collection::vec(inner.clone(), 2..4).prop_map(Formula::And),
                prop::collection::vec(inner, 2..4).prop_map(Formula::Or),
            ]
        })
    }

    fn arb_constraint() -> impl Strategy<Value = WeightConstraint> {
        let pair = (0..3usize, any::<bool>(), any::<bool>(), 0..5i64, 1..3i64).prop_map(
            |(i, n, naf, w, d)| {
                let atom = Atom::new(["a", "b", "c"][i]);
                let lit = if n { Literal::neg(atom) } else { Literal::pos(atom) };
                WeightPair::new(RuleElement { lit, naf }, Rational::new(w.into(), d.into()))
            },
        );
        let bound = prop_oneof![Just(None), (-3..6i64).prop_map(Some)];
        (bound.clone(), prop::collection::vec(pair, 0..4), bound).prop_map(|(l, ps, u)| {
            WeightConstraint::new(
                l.map(Bound::int).unwrap_or(Bound::NegInf),
                ps,
                u.map(Bound::int).unwrap_or(Bound::PosInf),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn nested_round_trip(head in arb_formula(), body in arb_formula()) {
            let p = NProgram::new(vec![NRule::new(head, body)]);
            let printed = print_nested_program(&p);
            prop_assert_eq!(parse_nested_program(&printed).unwrap(), p);
        }

        #[test]
        fn weight_round_trip(head in arb_constraint(), body in prop::collection::vec(arb_constraint(), 0..3)) {
            let p = WProgram::new(vec![WRule::new(head, body)]);
            let printed = print_weight_program(&p);
            let reparsed = parse_weight_program(&printed).unwrap();
            // Element shorthand and `1 <= {c}` are the same structure, so compare
            // a second print as well.
            prop_assert_eq!(&reparsed, &p);
            prop_assert_eq!(print_weight_program(&reparsed), printed);
        }

        #[test]
        fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
            let text = String::from_utf8_lossy(&bytes);
            let _ = parse_weight_program(&text);
            let _ = parse_nested_program(&text);
        }

        #[test]
        fn parsers_never_panic_on_token_soup(parts in prop::collection::vec(
            prop::sample::select(vec!["a", "-", "not", "{", "}", "<=", "=", "1", "0.5", "3/4", ",", ";", ":-", ".", "(", ")", "bot", "top", "%", "\n"]),
            0..24
        )) {
            let text = parts.join(" ");
            let _ = parse_weight_program(&text);
            let _ = parse_nested_program(&text);
        }
    }
}
