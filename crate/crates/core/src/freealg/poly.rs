use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, AlgebraCtx, AlgebraError, Rational, Word};

/// A sparse element of the truncated free associative algebra.
///
/// Terms are kept in a `BTreeMap`, so iteration is always in canonical
/// order (degree ascending, then lexicographic). Zero coefficients are never
/// stored and every word has degree at most `ctx.max_degree()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocPoly {
    ctx: AlgebraCtx,
    terms: BTreeMap<Word, Rational>,
}

impl AssocPoly {
    pub fn zero(ctx: AlgebraCtx) -> Self {
        AssocPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: AlgebraCtx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: AlgebraCtx, value: Rational) -> Self {
        let mut p = Self::zero(ctx);
        p.add_term(Word::empty(), value);
        p
    }

    /// The generator `X_index`, `index` in `1..=n`.
    pub fn generator(ctx: AlgebraCtx, index: usize) -> Result<Self, AlgebraError> {
        ctx.check_letter(index)?;
        let mut p = Self::zero(ctx);
        p.add_term(Word::letter(index as u8), Rational::one());
        Ok(p)
    }

    /// Sum of all generators `X_1 + ... + X_n`.
    pub fn generator_sum(ctx: AlgebraCtx) -> Self {
        let mut p = Self::zero(ctx);
        for i in 1..=ctx.n() {
            p.add_term(Word::letter(i as u8), Rational::one());
        }
        p
    }

    /// `coeff * word`. Words above the truncation degree give zero.
    pub fn monomial(ctx: AlgebraCtx, word: Word, coeff: Rational) -> Result<Self, AlgebraError> {
        for &letter in word.letters() {
            ctx.check_letter(letter as usize)?;
        }
        let mut p = Self::zero(ctx);
        if word.degree() <= ctx.max_degree() {
            p.add_term(word, coeff);
        }
        Ok(p)
    }

    /// Builds a polynomial from arbitrary `(word, coeff)` pairs; repeated
    /// words are summed. Words above the truncation degree are rejected.
    pub fn from_terms<I>(ctx: AlgebraCtx, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(ctx);
        for (word, coeff) in terms {
            for &letter in word.letters() {
                ctx.check_letter(letter as usize)?;
            }
            ctx.check_degree(word.degree())?;
            p.add_term(word, coeff);
        }
        Ok(p)
    }

    pub fn ctx(&self) -> AlgebraCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Word::empty())
    }

    /// Largest |coefficient|, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Degrees carrying at least one nonzero term, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for word in self.terms.keys() {
            if out.last() != Some(&word.degree()) {
                out.push(word.degree());
            }
        }
        out
    }

    /// True when every term has degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == d)
    }

    pub(crate) fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn from_accumulator(ctx: AlgebraCtx, acc: HashMap<Word, Rational>) -> Self {
        AssocPoly {
            ctx,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &AssocPoly) -> Result<AssocPoly, AlgebraError> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (word, coeff) in &other.terms {
            out.add_term(word.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AssocPoly) -> Result<AssocPoly, AlgebraError> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = self.clone();
        for (word, coeff) in &other.terms {
            out.add_term(word.clone(), -coeff.clone());
        }
        Ok(out)
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: &Rational, other: &AssocPoly) -> Result<(), AlgebraError> {
        self.ctx.check_same(&other.ctx)?;
        if factor.is_zero() {
            return Ok(());
        }
        for (word, coeff) in &other.terms {
            self.add_term(word.clone(), coeff * factor);
        }
        Ok(())
    }

    pub fn neg(&self) -> AssocPoly {
        AssocPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> AssocPoly {
        if factor.is_zero() {
            return Self::zero(self.ctx);
        }
        AssocPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Concatenation product, truncated at the context degree.
    pub fn mul(&self, other: &AssocPoly) -> Result<AssocPoly, AlgebraError> {
        self.ctx.check_same(&other.ctx)?;
        let max_degree = self.ctx.max_degree();
        let mut acc: HashMap<Word, Rational> = HashMap::new();
        for (left, lc) in &self.terms {
            let room = max_degree - left.degree();
            // `other` iterates in degree order, so the first oversized word ends the row.
            for (right, rc) in other.terms.iter() {
                if right.degree() > room {
                    break;
                }
                let product = lc * rc;
                match acc.entry(left.concat(right)) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(product);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += product;
                    }
                }
            }
        }
        Ok(Self::from_accumulator(self.ctx, acc))
    }

    /// `[self, other] = self * other - other * self`.
    pub fn bracket(&self, other: &AssocPoly) -> Result<AssocPoly, AlgebraError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// `ad_self^p (other)`; `p = 0` returns `other`.
    pub fn ad_pow(&self, p: usize, other: &AssocPoly) -> Result<AssocPoly, AlgebraError> {
        self.ctx.check_same(&other.ctx)?;
        let mut out = other.clone();
        for _ in 0..p {
            if out.is_zero() {
                break;
            }
            out = self.bracket(&out)?;
        }
        Ok(out)
    }

    /// `self^p`, truncated.
    pub fn pow(&self, p: usize) -> AssocPoly {
        let mut out = Self::one(self.ctx);
        for _ in 0..p {
            out = out.mul(self).expect("same context");
        }
        out
    }

    /// Truncated exponential `sum_{p <= K} a^p / p!`. Requires a zero
    /// constant term.
    pub fn exp_trunc(&self) -> Result<AssocPoly, AlgebraError> {
        let constant = self.constant_term();
        if !constant.is_zero() {
            return Err(AlgebraError::ConstantTerm {
                expected: "0".into(),
                found: format_rational(&constant),
            });
        }
        let mut sum = Self::one(self.ctx);
        let mut power = Self::one(self.ctx);
        for p in 1..=self.ctx.max_degree() {
            power = power
                .mul(self)?
                .scale(&Rational::new(BigInt::one(), BigInt::from(p)));
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum)
    }

    /// Truncated logarithm `sum_{p <= K} (-1)^{p+1} (a - 1)^p / p`. Requires
    /// constant term one.
    pub fn log_trunc(&self) -> Result<AssocPoly, AlgebraError> {
        let constant = self.constant_term();
        if !constant.is_one() {
            return Err(AlgebraError::ConstantTerm {
                expected: "1".into(),
                found: format_rational(&constant),
            });
        }
        let shifted = self.sub(&Self::one(self.ctx))?;
        let mut sum = Self::zero(self.ctx);
        let mut power = Self::one(self.ctx);
        for p in 1..=self.ctx.max_degree() {
            power = power.mul(&shifted)?;
            if power.is_zero() {
                break;
            }
            let sign = if p % 2 == 1 { 1 } else { -1 };
            sum.add_scaled(&Rational::new(BigInt::from(sign), BigInt::from(p)), &power)?;
        }
        Ok(sum)
    }

    /// Restriction to words of degree exactly `d`.
    pub fn degree_component(&self, d: usize) -> Result<AssocPoly, AlgebraError> {
        self.ctx.check_degree(d)?;
        Ok(AssocPoly {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    /// Re-expresses the polynomial in a context with a smaller (or equal)
    /// truncation degree and the same `n`, dropping higher-degree words.
    pub fn truncate_to(&self, ctx: AlgebraCtx) -> Result<AssocPoly, AlgebraError> {
        if ctx.n() != self.ctx.n() || ctx.max_degree() > self.ctx.max_degree() {
            return Err(AlgebraError::ContextMismatch {
                left: self.ctx,
                right: ctx,
            });
        }
        Ok(AssocPoly {
            ctx,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() <= ctx.max_degree())
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        })
    }

    /// Moves the polynomial into a context with the same `n` and a larger
    /// (or equal) truncation degree.
    pub fn embed_into(&self, ctx: AlgebraCtx) -> Result<AssocPoly, AlgebraError> {
        if ctx.n() != self.ctx.n() || ctx.max_degree() < self.ctx.max_degree() {
            return Err(AlgebraError::ContextMismatch {
                left: self.ctx,
                right: ctx,
            });
        }
        Ok(AssocPoly {
            ctx,
            terms: self.terms.clone(),
        })
    }
}

impl fmt::Display for AssocPoly {
    /// Plain-text form: `-1/2 X1 X2 + 1/2 X2 X1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (word, coeff)) in self.terms.iter().enumerate() {
            let magnitude = coeff.abs();
            match (pos, coeff.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if word.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{word}")?;
            } else {
                write!(f, "{magnitude} {word}")?;
            }
        }
        Ok(())
    }
}

impl AssocPoly {
    /// LaTeX form: `-\frac{1}{2} X_{1} X_{2} + \frac{1}{2} X_{2} X_{1}`.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (pos, (word, coeff)) in self.terms.iter().enumerate() {
            let magnitude = coeff.abs();
            out.push_str(match (pos, coeff.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let letters: Vec<String> = word
                .letters()
                .iter()
                .map(|l| format!("X_{{{l}}}"))
                .collect();
            if !magnitude.is_one() || word.is_empty() {
                if magnitude.denom().is_one() {
                    out.push_str(&magnitude.numer().to_string());
                } else {
                    out.push_str(&format!(
                        "\\frac{{{}}}{{{}}}",
                        magnitude.numer(),
                        magnitude.denom()
                    ));
                }
                if !word.is_empty() {
                    out.push(' ');
                }
            }
            out.push_str(&letters.join(" "));
        }
        out
    }
}
