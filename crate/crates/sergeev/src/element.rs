//! Sparse linear combinations of basis monomials, tagged by algebra.
//!
//! `Element<Graded>` and `Element<Sergeev>` share their container but are
//! distinct types, so elements of the two algebras cannot be mixed by
//! accident. Zero coefficients are purged eagerly: structural equality is
//! mathematical equality.

use std::collections::BTreeMap;
use std::marker::PhantomData;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::perm::Perm;
use crate::scalar::{self, Scalar};

pub trait AlgebraTag:
    Clone + Copy + PartialEq + Eq + PartialOrd + Ord + std::hash::Hash + std::fmt::Debug + 'static
{
    const NAME: &'static str;
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Graded;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Sergeev;

impl AlgebraTag for Graded {
    const NAME: &'static str = "graded";
}

impl AlgebraTag for Sergeev {
    const NAME: &'static str = "sergeev";
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<A: AlgebraTag> {
    terms: BTreeMap<Monomial, Scalar>,
    _tag: PhantomData<A>,
}

pub type GrElement = Element<Graded>;
pub type SergeevElement = Element<Sergeev>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Superparity {
    Even,
    Odd,
    Mixed,
}

impl<A: AlgebraTag> Default for Element<A> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: AlgebraTag> Element<A> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new(), _tag: PhantomData }
    }

    pub fn one(d: usize) -> Self {
        Self::from_monomial(Monomial::identity(d), scalar::one())
    }

    pub fn from_monomial(m: Monomial, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in other.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c)).collect();
        Element { terms, _tag: PhantomData }
    }

    /// Maximum total x-degree over stored terms; `None` for the zero element.
    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.x_degree()).max()
    }

    /// Splits by total x-degree.
    pub fn x_degree_split(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in self.terms() {
            out.entry(m.x_degree()).or_default().add_term(m.clone(), c.clone());
        }
        out
    }

    /// The terms of exact total x-degree `k`.
    pub fn x_degree_component(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            if m.x_degree() == k {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn superparity(&self) -> Superparity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            if m.is_even() {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (true, true) => Superparity::Mixed,
            (false, true) => Superparity::Odd,
            _ => Superparity::Even,
        }
    }

    /// True when every stored monomial has `x_i^{l−1}` for all `i ∈ A`.
    pub fn is_maximal_degree(&self, a_set: &[usize], l: usize) -> bool {
        self.terms
            .keys()
            .all(|m| a_set.iter().all(|&i| m.exps[i - 1] as usize == l - 1))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(scalar::is_integer)
    }

    /// Reinterprets the terms under another algebra tag. Internal: the
    /// caller asserts this is meaningful (e.g. taking a graded image).
    pub(crate) fn retag<B: AlgebraTag>(&self) -> Element<B> {
        Element { terms: self.terms.clone(), _tag: PhantomData }
    }

    pub fn to_json(&self, d: usize, l: usize) -> ElementJson {
        ElementJson {
            algebra: A::NAME.to_string(),
            d,
            l,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    coeff: scalar::render(c),
                    e: m.exps.iter().map(|&x| x as usize).collect(),
                    perm: m.perm.one_line().to_vec(),
                    c: m.clifford_indices(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ElementJson) -> Result<(Self, usize, usize)> {
        if json.algebra != A::NAME {
            return Err(AlgebraError::CrossAlgebra(format!(
                "expected a {:?} element, found {:?}",
                A::NAME,
                json.algebra
            )));
        }
        let mut out = Self::zero();
        for t in &json.terms {
            if t.e.len() != json.d {
                return Err(AlgebraError::Serialization(format!(
                    "exponent tuple {:?} does not match d = {}",
                    t.e, json.d
                )));
            }
            let coeff = scalar::parse(&t.coeff).map_err(AlgebraError::Serialization)?;
            let perm = Perm::from_one_line(t.perm.clone())?;
            let mut cliff = 0u32;
            for &i in &t.c {
                if i == 0 || i > json.d {
                    return Err(AlgebraError::IndexOutOfRange { index: i, max: json.d });
                }
                cliff |= 1 << (i - 1);
            }
            let m = Monomial {
                exps: t.e.iter().map(|&x| x as u8).collect(),
                perm,
                cliff,
            };
            m.validate(json.d, json.l)?;
            out.add_term(m, coeff);
        }
        Ok((out, json.d, json.l))
    }
}

impl<A: AlgebraTag> std::fmt::Display for Element<A> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", scalar::render(c))?;
            for (i, &e) in m.exps.iter().enumerate() {
                if e > 0 {
                    write!(f, "·x{}^{}", i + 1, e)?;
                }
            }
            if !m.perm.is_identity() {
                write!(f, "·s{}", m.perm)?;
            }
            for i in m.clifford_indices() {
                write!(f, "·c{i}")?;
            }
        }
        Ok(())
    }
}

/// Wire format for elements: `{"algebra": ..., "d": ..., "l": ..., "terms": [...]}`
/// with coefficients as exact `p/q` strings and 1-based index data.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ElementJson {
    pub algebra: String,
    pub d: usize,
    pub l: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub coeff: String,
    pub e: Vec<usize>,
    pub perm: Vec<usize>,
    pub c: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::from_int;

    #[test]
    fn zero_purging() {
        let d = 2;
        let mut e = GrElement::one(d);
        e.add_term(Monomial::identity(d), from_int(-1));
        assert!(e.is_zero());
        assert_eq!(e, GrElement::zero());
    }

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let d = 3;
        let mut e = GrElement::one(d);
        let m = Monomial {
            exps: vec![1, 0, 2],
            perm: Perm::from_one_line(vec![2, 1, 3]).unwrap(),
            cliff: 0b101,
        };
        e.add_term(m, scalar::parse("-7/3").unwrap());
        let json = e.to_json(d, 3);
        let s1 = serde_json::to_string(&json).unwrap();
        let parsed: ElementJson = serde_json::from_str(&s1).unwrap();
        let (back, _, _) = GrElement::from_json(&parsed).unwrap();
        assert_eq!(back, e);
        assert_eq!(serde_json::to_string(&back.to_json(d, 3)).unwrap(), s1);
    }

    #[test]
    fn cross_algebra_deserialization_rejected() {
        let e = SergeevElement::one(2);
        let json = e.to_json(2, 3);
        assert!(GrElement::from_json(&json).is_err());
    }

    #[test]
    fn superparity_classification() {
        let d = 2;
        let even = Monomial { exps: vec![0, 0], perm: Perm::identity(d), cliff: 0b11 };
        let odd = Monomial { exps: vec![0, 0], perm: Perm::identity(d), cliff: 0b01 };
        assert_eq!(GrElement::from_monomial(even.clone(), from_int(1)).superparity(), Superparity::Even);
        assert_eq!(GrElement::from_monomial(odd.clone(), from_int(1)).superparity(), Superparity::Odd);
        let mut mixed = GrElement::from_monomial(even, from_int(1));
        mixed.add_term(odd, from_int(1));
        assert_eq!(mixed.superparity(), Superparity::Mixed);
        assert_eq!(GrElement::zero().superparity(), Superparity::Even);
    }
}
