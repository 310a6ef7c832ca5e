//! Concrete syntax for terms and substitutions.
//!
//! Grammar (whitespace between tokens is insignificant):
//!
//! ```text
//! term    := atom | '(' term term ')' | ident '[' term (';' term)* ']'
//! atom    := ident | '(' term ')'
//! ident   := letter alnum*
//! subst   := '{' [ binding (';' binding)* ] '}'
//! binding := var '->' term
//! ```
//!
//! An uppercase-initial identifier is a constant, a lowercase-initial one a
//! variable. The bracket form is sugar for left-nested application:
//! `F[a; b]` reads as `((F a) b)`. Printing prefers the sugar whenever the
//! head of a left spine is a constant, so `parse(print(t)) == t`.

use std::fmt;

use mgu_core::{ConstSym, Subst, Term, VarSym};

/// A syntax error, carrying a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { line: pos.line, col: pos.col, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Semi,
    Arrow,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::Semi => f.write_str("';'"),
            Tok::Arrow => f.write_str("'->'"),
        }
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn bump(&mut self) -> char {
        let c = self.chars.next().unwrap();
        if c == '\n' {
            self.pos.line += 1;
            self.pos.col = 1;
        } else {
            self.pos.col += 1;
        }
        c
    }
}

fn lex(src: &str) -> Result<(Vec<(Tok, Pos)>, Pos), ParseError> {
    let mut cur = Cursor { chars: src.chars().peekable(), pos: Pos { line: 1, col: 1 } };
    let mut toks = Vec::new();
    while let Some(&ch) = cur.chars.peek() {
        let start = cur.pos;
        match ch {
            c if c.is_whitespace() => {
                cur.bump();
            }
            '(' => {
                cur.bump();
                toks.push((Tok::LParen, start));
            }
            ')' => {
                cur.bump();
                toks.push((Tok::RParen, start));
            }
            '[' => {
                cur.bump();
                toks.push((Tok::LBracket, start));
            }
            ']' => {
                cur.bump();
                toks.push((Tok::RBracket, start));
            }
            '{' => {
                cur.bump();
                toks.push((Tok::LBrace, start));
            }
            '}' => {
                cur.bump();
                toks.push((Tok::RBrace, start));
            }
            ';' => {
                cur.bump();
                toks.push((Tok::Semi, start));
            }
            '-' => {
                cur.bump();
                if cur.chars.peek() == Some(&'>') {
                    cur.bump();
                    toks.push((Tok::Arrow, start));
                } else {
                    return Err(ParseError::new(start, "expected '>' after '-'"));
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = cur.chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        name.push(cur.bump());
                    } else {
                        break;
                    }
                }
                toks.push((Tok::Ident(name), start));
            }
            c => {
                return Err(ParseError::new(start, format!("unexpected character {c:?}")));
            }
        }
    }
    Ok((toks, cur.pos))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    end: Pos,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, ParseError> {
        let (toks, end) = lex(src)?;
        Ok(Parser { toks, end, at: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let item = self.toks.get(self.at).cloned();
        if item.is_some() {
            self.at += 1;
        }
        item
    }

    fn expect(&mut self, want: &Tok) -> Result<(), ParseError> {
        match self.next() {
            Some((tok, _)) if &tok == want => Ok(()),
            Some((tok, pos)) => Err(ParseError::new(pos, format!("expected {want}, found {tok}"))),
            None => Err(ParseError::new(self.end, format!("expected {want}, found end of input"))),
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(tok) => Err(ParseError::new(self.pos(), format!("unexpected {tok} after complete input"))),
        }
    }

    fn ident_term(&self, name: &str, pos: Pos) -> Result<Term, ParseError> {
        if name.starts_with(|c: char| c.is_ascii_uppercase()) {
            ConstSym::new(name)
                .map(Term::Const)
                .map_err(|e| ParseError::new(pos, e.to_string()))
        } else {
            VarSym::new(name)
                .map(Term::Var)
                .map_err(|e| ParseError::new(pos, e.to_string()))
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.next() {
            Some((Tok::Ident(name), pos)) => {
                let head = self.ident_term(&name, pos)?;
                if self.peek() == Some(&Tok::LBracket) {
                    self.next();
                    let mut acc = head;
                    loop {
                        let arg = self.term()?;
                        acc = Term::comb(acc, arg);
                        match self.next() {
                            Some((Tok::Semi, _)) => continue,
                            Some((Tok::RBracket, _)) => break,
                            Some((tok, pos)) => {
                                return Err(ParseError::new(pos, format!("expected ';' or ']', found {tok}")));
                            }
                            None => {
                                return Err(ParseError::new(self.end, "expected ';' or ']', found end of input"));
                            }
                        }
                    }
                    Ok(acc)
                } else {
                    Ok(head)
                }
            }
            Some((Tok::LParen, _)) => {
                let first = self.term()?;
                if self.peek() == Some(&Tok::RParen) {
                    self.next();
                    return Ok(first);
                }
                let second = self.term()?;
                self.expect(&Tok::RParen)?;
                Ok(Term::comb(first, second))
            }
            Some((tok, pos)) => Err(ParseError::new(pos, format!("expected a term, found {tok}"))),
            None => Err(ParseError::new(self.end, "expected a term, found end of input")),
        }
    }

    fn subst(&mut self) -> Result<Subst, ParseError> {
        self.expect(&Tok::LBrace)?;
        if self.peek() == Some(&Tok::RBrace) {
            self.next();
            return Ok(Subst::empty());
        }
        let mut pairs = Vec::new();
        loop {
            let (key, key_pos) = match self.next() {
                Some((Tok::Ident(name), pos)) => (name, pos),
                Some((tok, pos)) => {
                    return Err(ParseError::new(pos, format!("expected a binding, found {tok}")));
                }
                None => return Err(ParseError::new(self.end, "expected a binding, found end of input")),
            };
            let key = VarSym::new(&key)
                .map_err(|_| ParseError::new(key_pos, format!("binding key {key:?} must be a variable")))?;
            self.expect(&Tok::Arrow)?;
            let value = self.term()?;
            pairs.push((key, value));
            match self.next() {
                Some((Tok::Semi, _)) => continue,
                Some((Tok::RBrace, _)) => break,
                Some((tok, pos)) => {
                    return Err(ParseError::new(pos, format!("expected ';' or '}}', found {tok}")));
                }
                None => return Err(ParseError::new(self.end, "expected ';' or '}', found end of input")),
            }
        }
        Ok(Subst::from_pairs(pairs))
    }
}

/// Parse a term. Empty input is its own error, at 1:1.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(src)?;
    if p.peek().is_none() {
        return Err(ParseError::new(Pos { line: 1, col: 1 }, "empty input"));
    }
    let t = p.term()?;
    p.expect_end()?;
    Ok(t)
}

/// Parse a substitution in `{x -> T; y -> U}` form.
pub fn parse_subst(src: &str) -> Result<Subst, ParseError> {
    let mut p = Parser::new(src)?;
    if p.peek().is_none() {
        return Err(ParseError::new(Pos { line: 1, col: 1 }, "empty input"));
    }
    let s = p.subst()?;
    p.expect_end()?;
    Ok(s)
}

fn left_spine(t: &Term) -> (&Term, Vec<&Term>) {
    let mut args = Vec::new();
    let mut head = t;
    while let Term::Comb(left, right) = head {
        args.push(&**right);
        head = left;
    }
    args.reverse();
    (head, args)
}

/// Render a term canonically: bracket sugar whenever the head of a left
/// spine is a constant, parenthesized pairs otherwise.
pub fn print_term(t: &Term) -> String {
    match t {
        Term::Const(c) => c.name().to_string(),
        Term::Var(v) => v.name().to_string(),
        Term::Comb(left, right) => {
            let (head, args) = left_spine(t);
            if let Term::Const(c) = head {
                let rendered: Vec<String> = args.iter().map(|a| print_term(a)).collect();
                format!("{}[{}]", c.name(), rendered.join("; "))
            } else {
                format!("({} {})", print_term(left), print_term(right))
            }
        }
    }
}

/// Render a substitution canonically: keys sorted, trivial and shadowed
/// bindings dropped.
pub fn print_subst(s: &Subst) -> String {
    let canon = s.canonicalize();
    let rendered: Vec<String> = canon
        .bindings()
        .iter()
        .map(|b| format!("{} -> {}", b.key.name(), print_term(&b.value)))
        .collect();
    format!("{{{}}}", rendered.join("; "))
}
