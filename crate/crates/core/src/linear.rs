//! Finite formal linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub type Coeff = BigRational;

/// Integer coefficient as an exact rational.
pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A finitely supported sum `Σ c_k · k` over an ordered basis.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of the represented vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Coeff::one())
    }

    pub fn term(k: K, c: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_basis(&mut self, k: K) {
        self.add_term(k, Coeff::one());
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Coeff {
        self.terms.get(k).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coeff> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coeff> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }

    /// Extend a basis map `k -> Σ` linearly.
    pub fn flat_map<J, F>(&self, mut f: F) -> LinComb<J>
    where
        J: Ord + Clone,
        F: FnMut(&K) -> LinComb<J>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Extend a bilinear basis map to a pair of sums.
    pub fn bilinear<J, M, F>(&self, other: &LinComb<J>, mut f: F) -> LinComb<M>
    where
        J: Ord + Clone,
        M: Ord + Clone,
        F: FnMut(&K, &J) -> LinComb<M>,
    {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    /// Keep only the terms whose basis element satisfies `keep`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<K> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut out = Self::zero();
        for k in iter {
            out.add_basis(k);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Coeff)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, K, Coeff>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> Self {
        self.scale(&int(-1))
    }
}

impl<K: Ord> LinComb<K> {
    /// Text form `2 a - b`, with keys rendered by `key`.
    pub fn render(&self, key: impl Fn(&K) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            out.push_str(match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            if !mag.is_one() {
                out.push_str(&format!("{mag} "));
            }
            out.push_str(&key(k));
        }
        out
    }
}

impl<A: Ord + fmt::Display, B: Ord + fmt::Display> LinComb<(A, B)> {
    pub fn tensor_string(&self) -> String {
        self.render(|(a, b)| format!("{a} ⊗ {b}"))
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| k.to_string()))
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| format!("{k:?}")))
    }
}

/// JSON form of an exact rational: integers when they fit, strings otherwise.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CoeffJson {
    pub num: serde_json::Value,
    pub den: serde_json::Value,
}

fn big_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

impl From<&Coeff> for CoeffJson {
    fn from(c: &Coeff) -> Self {
        CoeffJson {
            num: big_json(c.numer()),
            den: big_json(c.denom()),
        }
    }
}
