//! Concrete syntax.
//!
//! ```text
//! union  := concat ('|' concat)*
//! concat := factor+
//! factor := atom ('*' | '+')?
//! atom   := symbol | '(' union ')'
//! ```
//!
//! Two symbol spellings: ascii mode treats every byte except `( ) | * +` as a
//! symbol (UTF-8 is handled bytewise, whitespace included), token mode writes
//! symbols as `<id>` with decimal ids and skips whitespace between tokens.
//! Parentheses only group; they never add tree nodes. Runs at the same level
//! flatten, so `a|b|c` is one union with three children while `(a|b)|c` nests.

use std::fmt;

use super::{Op, Regex, Symbol};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SyntaxMode {
    Ascii,
    Tokens,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos + 1, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Sym(Symbol),
    LParen,
    RParen,
    Pipe,
    Star,
    Plus,
}

fn lex(input: &str, mode: SyntaxMode) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b'|' => Some(Tok::Pipe),
            b'*' => Some(Tok::Star),
            b'+' => Some(Tok::Plus),
            _ => None,
        };
        if let Some(tok) = tok {
            out.push((i, tok));
            i += 1;
            continue;
        }
        match mode {
            SyntaxMode::Ascii => {
                out.push((i, Tok::Sym(Symbol(b as u32))));
                i += 1;
            }
            SyntaxMode::Tokens => {
                if b.is_ascii_whitespace() {
                    i += 1;
                } else if b == b'<' {
                    let start = i;
                    let close = bytes[i..]
                        .iter()
                        .position(|&c| c == b'>')
                        .map(|off| i + off)
                        .ok_or_else(|| ParseError {
                            pos: start,
                            msg: "unterminated '<'".into(),
                        })?;
                    let id: u32 = input[i + 1..close].parse().map_err(|_| ParseError {
                        pos: start,
                        msg: format!("bad symbol id {:?}", &input[i + 1..close]),
                    })?;
                    out.push((start, Tok::Sym(Symbol(id))));
                    i = close + 1;
                } else {
                    return Err(ParseError {
                        pos: i,
                        msg: format!("unexpected byte {:?} in token mode", b as char),
                    });
                }
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|&(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks
            .get(self.at)
            .map(|&(p, _)| p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.at += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn union(&mut self) -> Result<Regex, ParseError> {
        let mut arms = vec![self.concat()?];
        while self.peek() == Some(Tok::Pipe) {
            self.bump();
            arms.push(self.concat()?);
        }
        Ok(if arms.len() == 1 {
            arms.pop().unwrap()
        } else {
            Regex::Node(Op::Union, arms)
        })
    }

    fn concat(&mut self) -> Result<Regex, ParseError> {
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some(Tok::Sym(_)) | Some(Tok::LParen)) {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Regex::Node(Op::Concat, factors)
        })
    }

    fn factor(&mut self) -> Result<Regex, ParseError> {
        let atom = match self.peek() {
            Some(Tok::Sym(s)) => {
                self.bump();
                Regex::Leaf(s)
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.union()?;
                if self.bump() != Some(Tok::RParen) {
                    self.at -= 1;
                    return self.err("expected ')'");
                }
                inner
            }
            Some(t) => return self.err(format!("expected symbol or '(', found {t:?}")),
            None => return self.err("unexpected end of input"),
        };
        Ok(match self.peek() {
            Some(Tok::Star) => {
                self.bump();
                Regex::Node(Op::Star, vec![atom])
            }
            Some(Tok::Plus) => {
                self.bump();
                Regex::Node(Op::Plus, vec![atom])
            }
            _ => atom,
        })
    }
}

pub fn parse_regex(input: &str, mode: SyntaxMode) -> Result<Regex, ParseError> {
    let toks = lex(input, mode)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            msg: "empty pattern (the syntax has no epsilon)".into(),
        });
    }
    let mut p = Parser {
        toks,
        at: 0,
        input_len: input.len(),
    };
    let r = p.union()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(r)
}

/// Pretty-prints a tree back into the concrete syntax. Reparsing the output
/// of a parsed tree yields an isomorphic tree; degree-1 concat/union nodes
/// (constructible only programmatically) render as their child.
///
/// Ascii mode fails on symbols above 255 or colliding with a metacharacter.
pub fn render_regex(r: &Regex, mode: SyntaxMode) -> Result<String, RenderError> {
    let mut out = String::new();
    render_union(r, mode, &mut out)?;
    Ok(out)
}

fn render_sym(s: Symbol, mode: SyntaxMode, out: &mut String) -> Result<(), RenderError> {
    match mode {
        SyntaxMode::Tokens => {
            out.push('<');
            out.push_str(&s.0.to_string());
            out.push('>');
            Ok(())
        }
        SyntaxMode::Ascii => {
            if s.0 > 255 || matches!(s.0 as u8, b'(' | b')' | b'|' | b'*' | b'+') {
                Err(RenderError { symbol: s })
            } else {
                out.push(s.0 as u8 as char);
                Ok(())
            }
        }
    }
}

fn render_union(r: &Regex, mode: SyntaxMode, out: &mut String) -> Result<(), RenderError> {
    match r {
        Regex::Node(Op::Union, cs) => {
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push('|');
                }
                render_concat(c, mode, out)?;
            }
            Ok(())
        }
        _ => render_concat(r, mode, out),
    }
}

fn render_concat(r: &Regex, mode: SyntaxMode, out: &mut String) -> Result<(), RenderError> {
    match r {
        Regex::Node(Op::Concat, cs) => {
            for c in cs {
                render_factor(c, mode, out)?;
            }
            Ok(())
        }
        _ => render_factor(r, mode, out),
    }
}

fn render_factor(r: &Regex, mode: SyntaxMode, out: &mut String) -> Result<(), RenderError> {
    match r {
        Regex::Leaf(s) => render_sym(*s, mode, out),
        Regex::Node(op @ (Op::Star | Op::Plus), cs) => {
            match &cs[0] {
                Regex::Leaf(s) => render_sym(*s, mode, out)?,
                inner => {
                    out.push('(');
                    render_union(inner, mode, out)?;
                    out.push(')');
                }
            }
            out.push(if *op == Op::Star { '*' } else { '+' });
            Ok(())
        }
        // Union or concat in factor position needs grouping.
        inner => {
            out.push('(');
            render_union(inner, mode, out)?;
            out.push(')');
            Ok(())
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RenderError {
    pub symbol: Symbol,
}

impl fmt::Display for RenderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "symbol {} has no ascii spelling; use token mode",
            self.symbol
        )
    }
}

impl std::error::Error for RenderError {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::infer_type;

    fn ascii(s: &str) -> Regex {
        parse_regex(s, SyntaxMode::Ascii).unwrap()
    }

    #[test]
    fn flattening_vs_nesting() {
        let flat = ascii("a|b|c");
        assert_eq!(
            flat,
            Regex::union(vec![Regex::leaf(97), Regex::leaf(98), Regex::leaf(99)])
        );
        let nested = ascii("(a|b)|c");
        assert_eq!(
            nested,
            Regex::union(vec![
                Regex::union(vec![Regex::leaf(97), Regex::leaf(98)]),
                Regex::leaf(99)
            ])
        );
    }

    #[test]
    fn postfix_binds_to_atom() {
        let r = ascii("ab+");
        assert_eq!(
            r,
            Regex::concat(vec![Regex::leaf(97), Regex::plus(Regex::leaf(98))])
        );
        let r = ascii("(ab)+");
        assert_eq!(
            r,
            Regex::plus(Regex::concat(vec![Regex::leaf(97), Regex::leaf(98)]))
        );
    }

    #[test]
    fn parens_are_transparent() {
        assert_eq!(ascii("((a))"), Regex::leaf(97));
        assert_eq!(ascii("(ab)c").node_count(), ascii("a(bc)").node_count());
        // but they do fix the tree shape
        assert_ne!(ascii("(ab)c"), ascii("a(bc)"));
    }

    #[test]
    fn error_positions() {
        assert!(parse_regex("", SyntaxMode::Ascii).is_err());
        assert!(parse_regex("a(b", SyntaxMode::Ascii).is_err());
        assert!(parse_regex("a**", SyntaxMode::Ascii).is_err());
        assert!(parse_regex("|a", SyntaxMode::Ascii).is_err());
        assert!(parse_regex("a|", SyntaxMode::Ascii).is_err());
        assert!(parse_regex("()", SyntaxMode::Ascii).is_err());
        let e = parse_regex("ab)", SyntaxMode::Ascii).unwrap_err();
        assert_eq!(e.pos, 2);
    }

    #[test]
    fn token_mode() {
        let r = parse_regex("<1><300>*|<2>", SyntaxMode::Tokens).unwrap();
        assert_eq!(
            r,
            Regex::union(vec![
                Regex::concat(vec![Regex::leaf(1), Regex::star(Regex::leaf(300))]),
                Regex::leaf(2)
            ])
        );
        // whitespace is allowed between tokens
        let spaced = parse_regex(" <1> ( <2> | <3> ) + ", SyntaxMode::Tokens).unwrap();
        assert_eq!(infer_type(&spaced).unwrap().to_string(), "o+|");
        assert!(parse_regex("<1x>", SyntaxMode::Tokens).is_err());
        assert!(parse_regex("<1", SyntaxMode::Tokens).is_err());
        assert!(parse_regex("a", SyntaxMode::Tokens).is_err());
    }

    #[test]
    fn ascii_treats_other_bytes_as_symbols() {
        // '<' and space are ordinary symbols in ascii mode
        let r = ascii("<a >");
        assert_eq!(r.node_count(), 5);
    }

    #[test]
    fn render_round_trip_fixed() {
        for src in [
            "a", "ab", "a|b", "(ab|b)+", "((a|b)c)*d", "(a*)*", "(a|b)|c", "a(bc)", "(ab)c",
            "a*b+c", "(a+|bc)d|e",
        ] {
            let r = ascii(src);
            let printed = render_regex(&r, SyntaxMode::Ascii).unwrap();
            let back = parse_regex(&printed, SyntaxMode::Ascii).unwrap();
            assert_eq!(back, r, "{src} -> {printed}");
        }
    }

    #[test]
    fn render_ascii_rejects_wide_symbols() {
        let r = Regex::leaf(300);
        assert!(render_regex(&r, SyntaxMode::Ascii).is_err());
        assert_eq!(render_regex(&r, SyntaxMode::Tokens).unwrap(), "<300>");
    }
}
