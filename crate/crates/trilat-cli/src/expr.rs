//! A tiny boolean expression language over the six condition flags, used by
//! the scan filter.
//!
//! Grammar (loosest binding first):
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&' factor)*
//! factor := '!' factor | name | '(' expr ')'
//! ```
//!
//! Names are the short or long condition names: `f`/`f_lattice`,
//! `g`/`g_lattice`, `h`/`h_lattice`, `r`/`circumradius_integer`,
//! `area`/`area_integer`, `even`/`even_side_sums`. Doubled operators
//! (`&&`, `||`) are accepted as synonyms.

use trilat::{Condition, ConditionVector};

/// A parsed condition filter.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FlagExpr {
    /// A constant, used for the empty filter.
    Const(bool),
    /// One of the six condition flags.
    Flag(Condition),
    /// Negation.
    Not(Box<FlagExpr>),
    /// Conjunction.
    And(Box<FlagExpr>, Box<FlagExpr>),
    /// Disjunction.
    Or(Box<FlagExpr>, Box<FlagExpr>),
}

impl FlagExpr {
    /// The filter that matches every triangle.
    pub fn always_true() -> FlagExpr {
        FlagExpr::Const(true)
    }

    /// Evaluates the filter against a classified triangle.
    pub fn eval(&self, cv: &ConditionVector) -> bool {
        match self {
            FlagExpr::Const(b) => *b,
            FlagExpr::Flag(c) => cv.get(*c),
            FlagExpr::Not(e) => !e.eval(cv),
            FlagExpr::And(a, b) => a.eval(cv) && b.eval(cv),
            FlagExpr::Or(a, b) => a.eval(cv) || b.eval(cv),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    And,
    Or,
    Not,
    Open,
    Close,
    Name(Condition),
}

/// Parses a filter expression. Errors name the offending byte offset.
pub fn parse(src: &str) -> Result<FlagExpr, String> {
    let tokens = tokenize(src)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    match parser.peek() {
        None => Ok(expr),
        Some(_) => Err(format!(
            "unexpected trailing input near token {}",
            parser.pos + 1
        )),
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, String> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '&' => {
                tokens.push(Token::And);
                i += if bytes.get(i + 1) == Some(&b'&') { 2 } else { 1 };
            }
            '|' => {
                tokens.push(Token::Or);
                i += if bytes.get(i + 1) == Some(&b'|') { 2 } else { 1 };
            }
            '!' => {
                tokens.push(Token::Not);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                let word = &src[start..i];
                tokens.push(Token::Name(resolve(word).ok_or_else(|| {
                    format!("unknown condition name '{word}' at offset {start}")
                })?));
            }
            other => return Err(format!("unexpected character '{other}' at offset {i}")),
        }
    }
    Ok(tokens)
}

fn resolve(word: &str) -> Option<Condition> {
    Condition::ALL
        .into_iter()
        .find(|c| c.short_name() == word || c.long_name() == word)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<FlagExpr, String> {
        let mut lhs = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            let rhs = self.term()?;
            lhs = FlagExpr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<FlagExpr, String> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let rhs = self.factor()?;
            lhs = FlagExpr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<FlagExpr, String> {
        match self.bump() {
            Some(Token::Not) => Ok(FlagExpr::Not(Box::new(self.factor()?))),
            Some(Token::Name(c)) => Ok(FlagExpr::Flag(c)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err("missing ')'".to_string()),
                }
            }
            Some(t) => Err(format!("expected a condition name, '!' or '(', got {t:?}")),
            None => Err("unexpected end of expression".to_string()),
        }
    }
}
