//! The path algebra: words in `N`, `E` modulo
//!
//! ```text
//! (1+q) ENE = q EEN + NEE
//! (1+q) NEN = q ENN + NNE
//! ```
//!
//! with normal forms in the staircase basis and expansions in the
//! rectangular and zigzag bases.

pub mod linsolve;
pub mod rectangular;
pub mod staircase;
pub mod zigzag;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use rectangular::{expand_rectangular, expand_rectangular_oracle};
pub use staircase::{
    expand_word, expand_word_reverse, expand_word_with, signed_coeffs, top_chain, Policy,
};
pub use zigzag::expand_zigzag;

use crate::error::{Error, Result};
use crate::klyachko::KlyMonomial;
use crate::lattice::{
    rectangular_word, staircase_word, word_to_partition, zigzag_word, Letter, Word,
};
use crate::qalg::QRat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Staircase,
    Rectangular,
    Zigzag,
}

impl Basis {
    /// The `k`-th basis word of grade `(m, n)`.
    pub fn word(self, k: usize, m: usize, n: usize) -> Result<Word> {
        match self {
            Basis::Staircase => staircase_word(k, m, n),
            Basis::Rectangular => rectangular_word(k, m, n),
            Basis::Zigzag => zigzag_word(k, m, n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basis::Staircase => "staircase",
            Basis::Rectangular => "rectangular",
            Basis::Zigzag => "zigzag",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "staircase" => Ok(Basis::Staircase),
            "rectangular" => Ok(Basis::Rectangular),
            "zigzag" => Ok(Basis::Zigzag),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Coefficients of an element of grade `(m, n)` on one of the three bases,
/// indexed `0..=min(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub grade: (usize, usize),
    pub basis: Basis,
    pub coeffs: Vec<QRat>,
}

impl Expansion {
    /// The element `Σ_k coeffs[k] · (basis word k)`.
    pub fn to_elem(&self) -> PathElem {
        let (m, n) = self.grade;
        let mut x = PathElem::zero(self.grade);
        for (k, c) in self.coeffs.iter().enumerate() {
            x.add_term(&self.basis.word(k, m, n).expect("index within grade"), c);
        }
        x
    }

    /// Rewrites into the staircase basis.
    pub fn to_staircase(&self) -> Expansion {
        if self.basis == Basis::Staircase {
            return self.clone();
        }
        self.to_elem().expand_staircase()
    }
}

#[derive(Serialize, Deserialize)]
struct IndexedValue {
    index: usize,
    value: QRat,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    grade: [usize; 2],
    basis: Basis,
    coeffs: Vec<IndexedValue>,
}

impl Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionRepr {
            grade: [self.grade.0, self.grade.1],
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(index, v)| IndexedValue {
                    index,
                    value: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExpansionRepr::deserialize(d)?;
        let mut coeffs = vec![QRat::zero(); r.grade[0].min(r.grade[1]) + 1];
        for iv in r.coeffs {
            let slot = coeffs
                .get_mut(iv.index)
                .ok_or_else(|| serde::de::Error::custom("index out of range"))?;
            *slot = iv.value;
        }
        Ok(Expansion {
            grade: (r.grade[0], r.grade[1]),
            basis: r.basis,
            coeffs,
        })
    }
}

/// A homogeneous linear combination of words with coefficients in `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathElem {
    grade: (usize, usize),
    terms: BTreeMap<Word, QRat>,
}

impl PathElem {
    pub fn zero(grade: (usize, usize)) -> Self {
        Self {
            grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: &Word) -> Self {
        let mut x = Self::zero(w.grade());
        x.terms.insert(w.clone(), QRat::one());
        x
    }

    /// Fails when the words do not share a grade.
    pub fn from_terms(
        grade: (usize, usize),
        terms: impl IntoIterator<Item = (Word, QRat)>,
    ) -> Result<Self> {
        let mut x = Self::zero(grade);
        for (w, c) in terms {
            if w.grade() != grade {
                return Err(Error::Invalid(format!("{w} is not of grade {grade:?}")));
            }
            x.add_term(&w, &c);
        }
        Ok(x)
    }

    pub fn grade(&self) -> (usize, usize) {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Word, QRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · w`; panics if `w` has the wrong grade.
    pub fn add_term(&mut self, w: &Word, c: &QRat) {
        assert_eq!(w.grade(), self.grade, "{w} has the wrong grade");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(w);
        }
    }

    pub fn checked_add(&self, other: &PathElem) -> Result<PathElem> {
        self.combine(other, &QRat::one())
    }

    pub fn checked_sub(&self, other: &PathElem) -> Result<PathElem> {
        self.combine(other, &-QRat::one())
    }

    fn combine(&self, other: &PathElem, sign: &QRat) -> Result<PathElem> {
        if self.grade != other.grade && !other.is_zero() && !self.is_zero() {
            return Err(Error::Invalid(format!(
                "grades {:?} and {:?} differ",
                self.grade, other.grade
            )));
        }
        let mut out = if self.is_zero() {
            PathElem::zero(other.grade)
        } else {
            self.clone()
        };
        for (w, c) in &other.terms {
            out.add_term(w, &(c * sign));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QRat) -> PathElem {
        let mut out = PathElem::zero(self.grade);
        for (w, x) in &self.terms {
            out.add_term(w, &(x * c));
        }
        out
    }

    /// Bilinear concatenation.
    pub fn multiply(&self, other: &PathElem) -> PathElem {
        let grade = (self.grade.0 + other.grade.0, self.grade.1 + other.grade.1);
        let mut out = PathElem::zero(grade);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(&a.concat(b), &(x * y));
            }
        }
        out
    }

    /// η applied to every word; reverses products.
    pub fn apply_eta(&self) -> PathElem {
        let mut out = PathElem::zero((self.grade.1, self.grade.0));
        for (w, c) in &self.terms {
            out.add_term(&w.eta(), c);
        }
        out
    }

    /// Normal form in the staircase basis.
    pub fn expand_staircase(&self) -> Expansion {
        let (m, n) = self.grade;
        let mut coeffs = vec![QRat::zero(); m.min(n) + 1];
        for (w, c) in &self.terms {
            for (k, x) in expand_word(w).iter().enumerate() {
                if !x.is_zero() {
                    coeffs[k] = &coeffs[k] + &c.mul_poly(x);
                }
            }
        }
        Expansion {
            grade: self.grade,
            basis: Basis::Staircase,
            coeffs,
        }
    }

    /// Equality in the algebra, decided on staircase normal forms.
    pub fn equal(&self, other: &PathElem) -> bool {
        if self.grade != other.grade {
            return self.is_zero() && other.is_zero();
        }
        self.expand_staircase() == other.expand_staircase()
    }
}

impl From<&Word> for PathElem {
    fn from(w: &Word) -> Self {
        PathElem::from_word(w)
    }
}

impl fmt::Display for PathElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if *c == QRat::one() {
                    w.to_string()
                } else {
                    format!("[{c}]*{w}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Staircase normal form of an element.
pub fn expand_staircase(x: &PathElem) -> Expansion {
    x.expand_staircase()
}

/// Expands a single word in the requested basis.
pub fn expand(basis: Basis, w: &Word) -> Result<Expansion> {
    match basis {
        Basis::Staircase => Ok(PathElem::from_word(w).expand_staircase()),
        Basis::Rectangular => expand_rectangular(w),
        Basis::Zigzag => expand_zigzag(w),
    }
}

/// `u(λ(w))` for a word with `m >= n`, after appending `E^{m-n}`.
pub fn psi(w: &Word) -> Result<KlyMonomial> {
    let (m, n) = w.grade();
    if m < n {
        return Err(Error::TallBoxRequired { m, n });
    }
    let square = w.concat(&Word::power(Letter::E, m - n));
    KlyMonomial::from_partition(&word_to_partition(&square))
}
