//! Codewords, prefix codes and payload-carrying code trees.
//!
//! A [`CodeTree<P>`] is a prefix code `C` over a `d`-ary alphabet together with
//! a payload for every word of `C`. Code trees form a monad: [`CodeTree::unit`]
//! wraps a single value at the empty word, [`CodeTree::flatten`] splices inner
//! trees under the leaves of an outer tree by concatenating codewords, and
//! [`CodeTree::map_payloads`] is the functor action.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest supported alphabet size. Digits render as `0-9a-z`.
pub const MAX_ARITY: u8 = 36;

/// Alphabet size `d` of a code, validated to `2..=36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arity(u8);

impl Arity {
    pub const BINARY: Arity = Arity(2);

    pub fn new(d: u32) -> Result<Self> {
        if (2..=MAX_ARITY as u32).contains(&d) {
            Ok(Arity(d as u8))
        } else {
            Err(Error::InvalidArity(d))
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over the digits `0..d`. The empty word is the root of every tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Codeword(Vec<u8>);

impl Codeword {
    pub fn empty() -> Self {
        Codeword(Vec::new())
    }

    pub fn from_digits(digits: impl Into<Vec<u8>>) -> Self {
        Codeword(digits.into())
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Codeword) -> bool {
        other.0.starts_with(&self.0)
    }

    /// `self` followed by `suffix`.
    pub fn concat(&self, suffix: &Codeword) -> Codeword {
        let mut digits = Vec::with_capacity(self.len() + suffix.len());
        digits.extend_from_slice(&self.0);
        digits.extend_from_slice(&suffix.0);
        Codeword(digits)
    }

    pub fn push(&mut self, digit: u8) {
        self.0.push(digit);
    }

    /// Machine form: digits concatenated, the empty word renders as `""`.
    pub fn to_digit_string(&self) -> String {
        self.0
            .iter()
            .map(|&d| char::from_digit(d as u32, MAX_ARITY as u32).expect("digit below 36"))
            .collect()
    }

    fn max_digit(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }
}

/// Human form; the empty word renders as `(eps)`.
impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("(eps)")
        } else {
            f.write_str(&self.to_digit_string())
        }
    }
}

impl FromStr for Codeword {
    type Err = Error;

    /// Parses the machine form. `""` and `"(eps)"` both give the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s == "(eps)" {
            return Ok(Codeword::empty());
        }
        s.chars()
            .map(|c| {
                c.to_digit(MAX_ARITY as u32)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::Parse(format!("invalid codeword digit {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Codeword)
    }
}

/// True iff no word is a prefix of another and there are no duplicates.
pub fn is_prefix_free<'a>(words: impl IntoIterator<Item = &'a Codeword>) -> bool {
    let mut sorted: Vec<&Codeword> = words.into_iter().collect();
    sorted.sort();
    // in lexicographic order a prefix is always immediately followed by an extension of itself
    sorted.windows(2).all(|w| !w[0].is_prefix_of(w[1]))
}

/// A finite prefix code over a fixed alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixCode {
    arity: Arity,
    words: Vec<Codeword>,
}

impl PrefixCode {
    pub fn new(arity: Arity, words: impl IntoIterator<Item = Codeword>) -> Result<Self> {
        let mut words: Vec<Codeword> = words.into_iter().collect();
        words.sort();
        validate_words(arity, words.iter())?;
        Ok(PrefixCode { arity, words })
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    /// The words in lexicographic order.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `Σ d^{-|x|}` as an exact rational.
    pub fn kraft_sum(&self) -> BigRational {
        kraft_sum_of(self.arity, self.words.iter().map(Codeword::len))
    }

    /// Every infinite `d`-ary string has a prefix in the code; decided by Kraft sum = 1.
    pub fn is_exhaustive(&self) -> bool {
        self.kraft_sum().is_one()
    }
}

/// Exact Kraft sum of a multiset of codeword lengths.
pub fn kraft_sum_of(arity: Arity, lengths: impl IntoIterator<Item = usize>) -> BigRational {
    let d = BigInt::from(arity.get());
    lengths.into_iter().fold(BigRational::zero(), |acc, len| {
        acc + BigRational::new(BigInt::one(), num_traits::pow(d.clone(), len))
    })
}

fn validate_words<'a>(arity: Arity, words: impl Iterator<Item = &'a Codeword> + Clone) -> Result<()> {
    for w in words.clone() {
        if let Some(digit) = w.max_digit() {
            if digit as usize >= arity.get() {
                return Err(Error::DigitOutOfRange {
                    word: w.to_digit_string(),
                    arity: arity.get(),
                });
            }
        }
    }
    if !is_prefix_free(words) {
        return Err(Error::NotPrefixFree);
    }
    Ok(())
}

/// A prefix code with a payload attached to each word: the pair `(C, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTree<P> {
    arity: Arity,
    leaves: BTreeMap<Codeword, P>,
}

impl<P> CodeTree<P> {
    /// Builds a tree from `(word, payload)` pairs, rejecting duplicates,
    /// out-of-range digits and words that are prefixes of one another.
    pub fn new(arity: Arity, leaves: impl IntoIterator<Item = (Codeword, P)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (word, payload) in leaves {
            let key = word.to_digit_string();
            if map.insert(word, payload).is_some() {
                return Err(Error::DuplicateCodeword(key));
            }
        }
        validate_words(arity, map.keys())?;
        Ok(CodeTree { arity, leaves: map })
    }

    /// `η(a) = ({ε}, ε ↦ a)`.
    pub fn unit(payload: P, arity: Arity) -> Self {
        CodeTree {
            arity,
            leaves: BTreeMap::from([(Codeword::empty(), payload)]),
        }
    }

    /// The depth-one tree `({0, …, k-1}, i ↦ aᵢ)`.
    pub fn depth_one(arity: Arity, payloads: impl IntoIterator<Item = P>) -> Result<Self> {
        Self::new(
            arity,
            payloads
                .into_iter()
                .enumerate()
                .map(|(i, p)| (Codeword::from_digits(vec![i as u8]), p)),
        )
    }

    pub fn arity(&self) -> Arity {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn code(&self) -> PrefixCode {
        PrefixCode {
            arity: self.arity,
            words: self.leaves.keys().cloned().collect(),
        }
    }

    pub fn words(&self) -> impl Iterator<Item = &Codeword> {
        self.leaves.keys()
    }

    pub fn payloads(&self) -> impl Iterator<Item = &P> {
        self.leaves.values()
    }

    /// Leaves in lexicographic word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Codeword, &P)> {
        self.leaves.iter()
    }

    pub fn get(&self, word: &Codeword) -> Option<&P> {
        self.leaves.get(word)
    }

    /// Length of the longest word, `None` for the empty tree.
    pub fn depth(&self) -> Option<usize> {
        self.leaves.keys().map(Codeword::len).max()
    }

    /// The functor action `(C, r) ↦ (C, h ∘ r)`.
    pub fn map_payloads<Q>(&self, mut h: impl FnMut(&P) -> Q) -> CodeTree<Q> {
        CodeTree {
            arity: self.arity,
            leaves: self.leaves.iter().map(|(w, p)| (w.clone(), h(p))).collect(),
        }
    }

    pub fn into_leaves(self) -> impl Iterator<Item = (Codeword, P)> {
        self.leaves.into_iter()
    }
}

impl<P: Clone> CodeTree<CodeTree<P>> {
    /// Monad multiplication: `({xy : x ∈ C, y ∈ C_x}, xy ↦ r_x(y))`.
    ///
    /// Every inner tree must have the outer arity.
    pub fn flatten(&self) -> Result<CodeTree<P>> {
        let mut leaves = BTreeMap::new();
        for (outer, inner) in &self.leaves {
            if inner.arity != self.arity {
                return Err(Error::ArityMismatch {
                    outer: self.arity.get(),
                    inner: inner.arity.get(),
                });
            }
            for (suffix, payload) in &inner.leaves {
                leaves.insert(outer.concat(suffix), payload.clone());
            }
        }
        // concatenating prefix codes under a prefix code never collides
        debug_assert_eq!(leaves.len(), self.leaves.values().map(CodeTree::len).sum::<usize>());
        Ok(CodeTree {
            arity: self.arity,
            leaves,
        })
    }
}

impl<P: fmt::Display> fmt::Display for CodeTree<P> {
    /// One `word: payload` line per leaf.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (word, payload) in &self.leaves {
            writeln!(f, "{word}: {payload}")?;
        }
        Ok(())
    }
}

/// Shorthand used in tests and examples: `cw("110")`.
pub fn cw(s: &str) -> Codeword {
    s.parse().expect("valid codeword literal")
}
