use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One step down from a vertex. For abstract trees `First` is the child that
/// sorts first in canonical order; for planar trees it is the left child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

/// Path from the root. Orders in preorder (a prefix sorts before its extensions).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexAddr(pub Vec<Side>);

impl VertexAddr {
    pub fn root() -> Self {
        VertexAddr(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn child(&self, side: Side) -> Self {
        let mut p = self.0.clone();
        p.push(side);
        VertexAddr(p)
    }

    pub fn parent(&self) -> Option<Self> {
        if self.0.is_empty() {
            None
        } else {
            Some(VertexAddr(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn sibling(&self) -> Option<Self> {
        let last = *self.0.last()?;
        let mut p = self.0.clone();
        *p.last_mut().unwrap() = last.other();
        Some(VertexAddr(p))
    }

    /// Reflexive: every address is a prefix of itself.
    pub fn is_prefix_of(&self, other: &VertexAddr) -> bool {
        other.0.len() >= self.0.len() && other.0[..self.0.len()] == self.0[..]
    }

    pub fn join(&self, tail: &VertexAddr) -> Self {
        let mut p = self.0.clone();
        p.extend_from_slice(&tail.0);
        VertexAddr(p)
    }

    /// The remainder of `self` below `prefix`, if `prefix` is a prefix.
    pub fn strip_prefix(&self, prefix: &VertexAddr) -> Option<Self> {
        prefix
            .is_prefix_of(self)
            .then(|| VertexAddr(self.0[prefix.0.len()..].to_vec()))
    }
}

impl fmt::Display for VertexAddr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, ".");
        }
        for s in &self.0 {
            write!(f, "{}", if *s == Side::First { '0' } else { '1' })?;
        }
        Ok(())
    }
}

impl serde::Serialize for VertexAddr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for VertexAddr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "." {
            return Ok(VertexAddr::root());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(Side::First),
                '1' => Ok(Side::Second),
                _ => Err(Error::Syntax {
                    pos: i,
                    msg: format!("address digit must be 0 or 1, found {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()
            .and_then(|v| {
                if v.is_empty() {
                    Err(Error::Syntax {
                        pos: 0,
                        msg: "empty address (use `.` for the root)".into(),
                    })
                } else {
                    Ok(VertexAddr(v))
                }
            })
    }
}
