use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FeatureKind {
    Base,
    Selector,
    Licensor,
    Licensee,
}

/// One feature: a base category `X`, or `sel(X)`, `lsr(X)`, `lse(X)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Feature {
    pub kind: FeatureKind,
    pub base: String,
}

impl Feature {
    pub fn new(kind: FeatureKind, base: impl Into<String>) -> Self {
        Feature {
            kind,
            base: base.into(),
        }
    }

    pub fn base(x: impl Into<String>) -> Self {
        Self::new(FeatureKind::Base, x)
    }

    pub fn sel(x: impl Into<String>) -> Self {
        Self::new(FeatureKind::Selector, x)
    }

    pub fn lsr(x: impl Into<String>) -> Self {
        Self::new(FeatureKind::Licensor, x)
    }

    pub fn lse(x: impl Into<String>) -> Self {
        Self::new(FeatureKind::Licensee, x)
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FeatureKind::Base => write!(f, "{}", self.base),
            FeatureKind::Selector => write!(f, "sel({})", self.base),
            FeatureKind::Licensor => write!(f, "lsr({})", self.base),
            FeatureKind::Licensee => write!(f, "lse({})", self.base),
        }
    }
}

fn valid_base(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| !c.is_whitespace() && !"(){}[]<>|:\"".contains(c))
}

impl FromStr for Feature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: String| Error::Syntax { pos: 0, msg };
        for (prefix, kind) in [
            ("sel(", FeatureKind::Selector),
            ("lsr(", FeatureKind::Licensor),
            ("lse(", FeatureKind::Licensee),
        ] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| bad(format!("missing `)` in `{s}`")))?;
                if !valid_base(inner) {
                    return Err(bad(format!("bad category in `{s}`")));
                }
                return Ok(Feature::new(kind, inner));
            }
        }
        if !valid_base(s) || matches!(s, "sel" | "lsr" | "lse") {
            return Err(bad(format!("bad feature `{s}`")));
        }
        Ok(Feature::base(s))
    }
}

/// Ordered features of a lexical item; the first one is the active one.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeatureString(pub Vec<Feature>);

impl FeatureString {
    pub fn first(&self) -> Option<&Feature> {
        self.0.first()
    }

    /// The string with its first feature removed (α̂).
    pub fn hat(&self) -> FeatureString {
        FeatureString(self.0.iter().skip(1).cloned().collect())
    }

    pub fn drop_first(&self, n: usize) -> FeatureString {
        FeatureString(self.0.iter().skip(n).cloned().collect())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn starts_with(&self, kind: FeatureKind) -> Option<&str> {
        self.first()
            .filter(|f| f.kind == kind)
            .map(|f| f.base.as_str())
    }
}

impl fmt::Display for FeatureString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for FeatureString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut out = Vec::new();
        let mut offset = 0;
        for tok in s.split(' ') {
            if !tok.is_empty() {
                let f: Feature = tok.parse().map_err(|e| match e {
                    Error::Syntax { msg, .. } => Error::Syntax { pos: offset, msg },
                    other => other,
                })?;
                out.push(f);
            }
            offset += tok.len() + 1;
        }
        Ok(FeatureString(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f: FeatureString = "sel(D) lsr(W) lse(K) C".parse().unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.to_string(), "sel(D) lsr(W) lse(K) C");
        assert_eq!(f.hat().to_string(), "lsr(W) lse(K) C");
        assert_eq!(f.starts_with(FeatureKind::Selector), Some("D"));
        assert!("".parse::<FeatureString>().unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed() {
        assert!("sel(D".parse::<Feature>().is_err());
        assert!("sel()".parse::<Feature>().is_err());
        assert!("lsr".parse::<Feature>().is_err());
        assert!("a:b".parse::<Feature>().is_err());
    }
}
