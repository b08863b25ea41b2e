use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::LieError;
use crate::freealg::{AlgebraCtx, AssocPoly, Rational, Word};

/// `coeff * [X_head X_{i1}^{k1} ... X_{il}^{kl}]`, a left-nested long
/// commutator in which each `X_{is}` is repeated `ks` times.
///
/// The bracket is identified by its letter sequence (head followed by the
/// expanded tail), so adjacent tail entries with the same index merge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommTerm {
    coeff: Rational,
    letters: Word,
}

impl CommTerm {
    pub fn new(coeff: Rational, head: u8, tail: &[(u8, usize)]) -> Result<Self, LieError> {
        if head == 0 {
            return Err(LieError::InvalidIndex(0));
        }
        let mut letters = vec![head];
        for &(index, mult) in tail {
            if index == 0 {
                return Err(LieError::InvalidIndex(0));
            }
            if mult == 0 {
                return Err(LieError::ZeroMultiplicity(index));
            }
            letters.extend(std::iter::repeat_n(index, mult));
        }
        Ok(CommTerm {
            coeff,
            letters: Word::from_letters(letters),
        })
    }

    /// The left-normed bracket `[w1, w2, ..., wd]` of a nonempty word.
    pub fn from_word(coeff: Rational, word: Word) -> Result<Self, LieError> {
        if word.is_empty() {
            return Err(LieError::EmptyBracket);
        }
        if word.letters().contains(&0) {
            return Err(LieError::InvalidIndex(0));
        }
        Ok(CommTerm {
            coeff,
            letters: word,
        })
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn head(&self) -> u8 {
        self.letters.letters()[0]
    }

    /// Run-length encoded tail `[(i1, k1), ..., (il, kl)]`.
    pub fn tail(&self) -> Vec<(u8, usize)> {
        run_lengths(&self.letters.letters()[1..])
    }

    pub fn letters(&self) -> &Word {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.degree()
    }

    /// Associative expansion scaled by the coefficient.
    pub fn expand(&self, ctx: AlgebraCtx) -> Result<AssocPoly, LieError> {
        for &letter in self.letters.letters() {
            ctx.check_letter(letter as usize)?;
        }
        ctx.check_degree(self.degree())?;
        let terms = left_normed_expansion(self.letters.letters())
            .into_iter()
            .map(|(w, c)| (w, &self.coeff * Rational::from_integer(c.into())));
        Ok(AssocPoly::from_terms(ctx, terms)?)
    }
}

pub(crate) fn run_lengths(letters: &[u8]) -> Vec<(u8, usize)> {
    let mut out: Vec<(u8, usize)> = Vec::new();
    for &letter in letters {
        match out.last_mut() {
            Some((index, mult)) if *index == letter => *mult += 1,
            _ => out.push((letter, 1)),
        }
    }
    out
}

/// Integer expansion of `[[...[x1, x2], ...], xd]` in the free associative
/// algebra. Coefficients are bounded by `2^(d-1)` in absolute value.
pub fn left_normed_expansion(letters: &[u8]) -> Vec<(Word, i64)> {
    let Some((&first, rest)) = letters.split_first() else {
        return Vec::new();
    };
    let mut current: HashMap<Vec<u8>, i64> = HashMap::from([(vec![first], 1)]);
    for &y in rest {
        let mut next: HashMap<Vec<u8>, i64> = HashMap::with_capacity(current.len() * 2);
        for (w, c) in current {
            let mut right = Vec::with_capacity(w.len() + 1);
            right.extend_from_slice(&w);
            right.push(y);
            *next.entry(right).or_insert(0) += c;
            let mut left = Vec::with_capacity(w.len() + 1);
            left.push(y);
            left.extend_from_slice(&w);
            *next.entry(left).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        current = next;
    }
    current
        .into_iter()
        .map(|(w, c)| (Word::from_letters(w), c))
        .collect()
}

/// A linear combination of long commutators, possibly of mixed degree.
///
/// Terms are keyed by bracket so no two share the same `(head, tail)`;
/// zero coefficients are dropped. No reduction modulo antisymmetry or
/// Jacobi is attempted; compare Lie elements through [`LieExpr::expand`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieExpr {
    terms: BTreeMap<Word, Rational>,
}

impl LieExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = CommTerm>) -> Self {
        let mut e = Self::new();
        for t in terms {
            e.push(t);
        }
        e
    }

    pub fn push(&mut self, term: CommTerm) {
        if term.coeff.is_zero() {
            return;
        }
        match self.terms.entry(term.letters) {
            Entry::Vacant(slot) => {
                slot.insert(term.coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += term.coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order (degree, then bracket letters).
    pub fn terms(&self) -> impl Iterator<Item = CommTerm> + '_ {
        self.terms.iter().map(|(w, c)| CommTerm {
            coeff: c.clone(),
            letters: w.clone(),
        })
    }

    pub fn coeff_of(&self, bracket: &Word) -> Rational {
        self.terms
            .get(bracket)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Multiset union: coefficients of equal brackets add.
    pub fn merge(&self, other: &LieExpr) -> LieExpr {
        let mut out = self.clone();
        for t in other.terms() {
            out.push(t);
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> LieExpr {
        LieExpr::from_terms(self.terms().map(|t| CommTerm {
            coeff: t.coeff * factor,
            letters: t.letters,
        }))
    }

    pub fn max_letter(&self) -> u8 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    /// Sum of the expanded terms.
    pub fn expand(&self, ctx: AlgebraCtx) -> Result<AssocPoly, LieError> {
        let mut out = AssocPoly::zero(ctx);
        for t in self.terms() {
            out.add_scaled(&Rational::from_integer(1.into()), &t.expand(ctx)?)?;
        }
        Ok(out)
    }
}
