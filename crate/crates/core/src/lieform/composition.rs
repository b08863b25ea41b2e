use std::fmt;

use super::LieError;

/// An ordered tuple of positive integers; its weight is the sum of parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, LieError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(LieError::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (pos, part) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// All `2^(k-1)` compositions of `k`, ordered by length and then
/// lexicographically.
pub fn compositions(k: usize) -> Result<Vec<Composition>, LieError> {
    if k == 0 {
        return Err(LieError::InvalidWeight(k));
    }
    let mut out = Vec::with_capacity(1 << (k - 1).min(30));
    let mut prefix = Vec::with_capacity(k);
    extend(k, &mut prefix, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

fn extend(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(prefix.clone()));
        return;
    }
    for first in 1..=remaining {
        prefix.push(first);
        extend(remaining - first, prefix, out);
        prefix.pop();
    }
}
