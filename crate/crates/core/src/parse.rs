//! Text forms of the tree dialects.
//!
//! ```text
//! abstract  := SYMBOL | '{' abstract ' ' abstract '}'
//! planar    := SYMBOL | '[' (DLABEL ' ')? planar ' ' planar ']'
//! mg        := NAME ':' '"' FEATURES '"' | '[' ('<' | '>') ' ' mg ' ' mg ']'
//! workspace := abstract ('|' abstract)*   or `1` for the empty workspace
//! ```
//! Any run of whitespace is accepted where a single space is shown.

use crate::error::{Error, Result};
use crate::mg::{Arrow, FeatureString, MgLeaf, MgTree};
use crate::trees::{canonicalize, AbstractTree, Planar, PlanarTree, RawTree};
use crate::workspace::Workspace;

const DELIMS: &[char] = &['{', '}', '[', ']', '|', ':', '"'];

#[derive(Debug, Clone)]
enum Term {
    Sym(String, usize),
    Quoted { name: String, text: String, pos: usize },
    Brace(Vec<Term>, usize),
    Bracket(Vec<Term>, usize),
}

impl Term {
    fn pos(&self) -> usize {
        match self {
            Term::Sym(_, p) | Term::Brace(_, p) | Term::Bracket(_, p) => *p,
            Term::Quoted { pos, .. } => *pos,
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax {
        pos,
        msg: msg.into(),
    })
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn symbol(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| !c.is_whitespace() && !DELIMS.contains(&c))
        {
            self.bump();
        }
        self.src[start..self.pos].to_string()
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => err(start, "unexpected end of input"),
            Some(open @ ('{' | '[')) => {
                self.bump();
                let close = if open == '{' { '}' } else { ']' };
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(c) if c == close => {
                            self.bump();
                            break;
                        }
                        None => return err(self.pos, format!("missing `{close}`")),
                        _ => items.push(self.term()?),
                    }
                }
                Ok(if open == '{' {
                    Term::Brace(items, start)
                } else {
                    Term::Bracket(items, start)
                })
            }
            Some(c) if DELIMS.contains(&c) => err(start, format!("unexpected `{c}`")),
            Some(_) => {
                let name = self.symbol();
                if self.peek() != Some(':') {
                    return Ok(Term::Sym(name, start));
                }
                self.bump();
                if self.bump() != Some('"') {
                    return err(self.pos, "expected `\"` after `:`");
                }
                let body_start = self.pos;
                loop {
                    match self.bump() {
                        Some('"') => break,
                        Some(_) => {}
                        None => return err(body_start, "unterminated feature string"),
                    }
                }
                let text = self.src[body_start..self.pos - 1].to_string();
                Ok(Term::Quoted {
                    name,
                    text,
                    pos: start,
                })
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => err(self.pos, format!("trailing input starting with `{c}`")),
        }
    }
}

fn parse_whole(src: &str) -> Result<Term> {
    let mut lx = Lexer::new(src);
    let t = lx.term()?;
    lx.finish()?;
    Ok(t)
}

fn raw_abstract(t: &Term) -> Result<RawTree> {
    match t {
        Term::Sym(s, _) => Ok(RawTree::Leaf(s.clone())),
        Term::Brace(items, _) => Ok(RawTree::Node(
            items.iter().map(raw_abstract).collect::<Result<_>>()?,
        )),
        other => err(other.pos(), "expected a symbol or `{`"),
    }
}

/// Parse `{a {b c}}` into canonical form. Non-binary nodes are rejected.
pub fn parse_abstract(src: &str) -> Result<AbstractTree> {
    let t = parse_whole(src)?;
    let raw = raw_abstract(&t)?;
    canonicalize(&raw).map_err(|e| match e {
        Error::NonBinary(n) => Error::Syntax {
            pos: t.pos(),
            msg: format!("node with {n} children; trees are binary"),
        },
        other => other,
    })
}

fn planar_from(t: &Term) -> Result<PlanarTree> {
    match t {
        Term::Sym(s, _) => Ok(Planar::Leaf(s.clone())),
        Term::Bracket(items, pos) => match items.as_slice() {
            [a, b] => Ok(Planar::node(planar_from(a)?, planar_from(b)?, None)),
            [Term::Sym(d, _), a, b] => Ok(Planar::node(
                planar_from(a)?,
                planar_from(b)?,
                Some(d.clone()),
            )),
            _ => err(*pos, "expected `[a b]` or `[d a b]`"),
        },
        other => err(other.pos(), "expected a symbol or `[`"),
    }
}

/// Parse `[a b]` or `[d a b]` where `d` decorates the vertex.
pub fn parse_planar(src: &str) -> Result<PlanarTree> {
    planar_from(&parse_whole(src)?)
}

fn mg_from(t: &Term) -> Result<MgTree> {
    match t {
        Term::Quoted { name, text, pos } => {
            let features: FeatureString = text.parse().map_err(|e| match e {
                Error::Syntax { pos: p, msg } => Error::Syntax { pos: pos + p, msg },
                other => other,
            })?;
            Ok(Planar::Leaf(MgLeaf {
                name: name.clone(),
                features,
            }))
        }
        Term::Sym(s, pos) => err(*pos, format!("leaf `{s}` needs a feature string, e.g. {s}:\"\"")),
        Term::Bracket(items, pos) => match items.as_slice() {
            [Term::Sym(d, dpos), a, b] => {
                let arrow = match d.as_str() {
                    "<" => Arrow::Left,
                    ">" => Arrow::Right,
                    _ => return err(*dpos, format!("vertex label must be < or >, found `{d}`")),
                };
                Ok(Planar::node(mg_from(a)?, mg_from(b)?, arrow))
            }
            _ => err(*pos, "expected `[< l r]` or `[> l r]`"),
        },
        Term::Brace(_, pos) => err(*pos, "braces are not allowed in MG trees"),
    }
}

/// Parse `[< a:"sel(D) V" b:""]`.
pub fn parse_mg(src: &str) -> Result<MgTree> {
    mg_from(&parse_whole(src)?)
}

/// Parse components separated by `|`; `1` is the empty workspace.
pub fn parse_workspace(src: &str) -> Result<Workspace> {
    if src.trim() == "1" {
        return Ok(Workspace::empty());
    }
    let mut comps = Vec::new();
    let mut offset = 0;
    for part in src.split('|') {
        let t = parse_abstract(part).map_err(|e| match e {
            Error::Syntax { pos, msg } => Error::Syntax {
                pos: pos + offset,
                msg,
            },
            other => other,
        })?;
        comps.push(t);
        offset += part.len() + 1;
    }
    Ok(Workspace::new(comps))
}
