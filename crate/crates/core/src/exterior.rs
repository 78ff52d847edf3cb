//! Sparse exterior algebra over an ordered set of degree-1 generators.
//!
//! Forms are finite maps from strictly increasing multi-indices to exact
//! scalars; all signs are pushed into coefficients at construction time, so
//! equality is a key-by-key comparison. One coefficient ring per context;
//! mixing rings in a single form is prevented by the type parameter.

use crate::scalar::Ring;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormError {
    #[error("mismatched generator contexts: {0} vs {1} generators")]
    ContextMismatch(usize, usize),
    #[error("form is not homogeneous (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),
    #[error("index {0} out of range for {1} generators")]
    IndexOutOfRange(usize, usize),
    #[error("indices not strictly increasing: {0:?}")]
    NotIncreasing(Vec<usize>),
}

/// Strictly increasing sequence of 0-based generator indices keying one
/// basis term `e_{i1} ∧ … ∧ e_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    pub fn new(indices: Vec<usize>) -> Result<Self, FormError> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(FormError::NotIncreasing(indices));
        }
        Ok(MultiIndex(indices))
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn single(i: usize) -> Self {
        MultiIndex(vec![i])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Remove index `i`, returning the reduced index and the sign
    /// `(-1)^position`. `None` if `i` is absent.
    pub fn remove(&self, i: usize) -> Option<(MultiIndex, i8)> {
        let pos = self.0.binary_search(&i).ok()?;
        let mut v = self.0.clone();
        v.remove(pos);
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        Some((MultiIndex(v), sign))
    }

    /// Merge two disjoint increasing sequences, counting the transpositions
    /// needed to sort the concatenation. `None` if they share an index.
    pub fn merge(&self, other: &MultiIndex) -> Option<(MultiIndex, i8)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut swaps: usize = 0;
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] == b[j] {
                return None;
            }
            if a[i] < b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                // b[j] jumps over the remaining elements of a
                swaps += a.len() - i;
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((MultiIndex(out), sign))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{}", parts.join("∧"))
    }
}

/// A degree-graded exterior form with exact coefficients.
///
/// Zero coefficients are pruned eagerly, so `terms` is a canonical
/// representation and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedForm<R: Ring> {
    gens: usize,
    terms: BTreeMap<MultiIndex, R>,
}

impl<R: Ring> GradedForm<R> {
    pub fn zero(gens: usize) -> Self {
        GradedForm {
            gens,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-0 form with the given scalar value.
    pub fn scalar(gens: usize, value: R) -> Self {
        let mut form = Self::zero(gens);
        form.add_term(MultiIndex::empty(), value);
        form
    }

    pub fn one(gens: usize) -> Self {
        Self::scalar(gens, R::one())
    }

    /// The basis 1-form `e_i` (0-based).
    pub fn generator(gens: usize, i: usize) -> Result<Self, FormError> {
        if i >= gens {
            return Err(FormError::IndexOutOfRange(i, gens));
        }
        let mut form = Self::zero(gens);
        form.add_term(MultiIndex::single(i), R::one());
        Ok(form)
    }

    pub fn from_terms<I>(gens: usize, terms: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (MultiIndex, R)>,
    {
        let mut form = Self::zero(gens);
        for (idx, c) in terms {
            if let Some(&last) = idx.indices().last() {
                if last >= gens {
                    return Err(FormError::IndexOutOfRange(last, gens));
                }
            }
            form.add_term(idx, c);
        }
        Ok(form)
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, idx: MultiIndex, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            None => {
                self.terms.insert(idx, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(idx, sum);
                }
            }
        }
    }

    /// The set of term degrees present.
    pub fn degree_support(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.terms.keys().map(|k| k.degree()).collect();
        degs.sort_unstable();
        degs.dedup();
        degs
    }

    /// `Some(k)` if every stored term has degree `k` (zero counts as
    /// homogeneous of any degree and yields `Some(0)`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let degs = self.degree_support();
        match degs.len() {
            0 => Some(0),
            1 => Some(degs[0]),
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, k: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(idx, _)| idx.degree() == k)
            .map(|(idx, c)| (idx.clone(), c.clone()))
            .collect();
        GradedForm {
            gens: self.gens,
            terms,
        }
    }

    pub fn coefficient_of(&self, idx: &MultiIndex) -> R {
        self.terms.get(idx).cloned().unwrap_or_else(R::zero)
    }

    pub fn map_coefficients<S: Ring>(&self, f: impl Fn(&R) -> S) -> GradedForm<S> {
        let mut out = GradedForm::zero(self.gens);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coefficients(|x| x.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|x| -x.clone())
    }

    pub fn add(&self, other: &Self) -> Result<Self, FormError> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FormError> {
        self.add(&other.neg())
    }

    fn check_context(&self, other: &Self) -> Result<(), FormError> {
        if self.gens != other.gens {
            return Err(FormError::ContextMismatch(self.gens, other.gens));
        }
        Ok(())
    }

    /// Exterior product. Bilinear and associative; terms with repeated
    /// indices vanish; the sign comes from sorting the concatenated index
    /// sequence.
    pub fn wedge(&self, other: &Self) -> Result<Self, FormError> {
        self.check_context(other)?;
        let mut out = Self::zero(self.gens);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                if let Some((idx, sign)) = ia.merge(ib) {
                    let mut c = ca.clone() * cb.clone();
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(idx, c);
                }
            }
        }
        Ok(out)
    }

    /// Interior product with a constant-coefficient vector `v` (one scalar
    /// component per generator): the degree −1 antiderivation with
    /// `i_v(e_j) = v_j`.
    pub fn interior(&self, v: &[R]) -> Result<Self, FormError> {
        if v.len() != self.gens {
            return Err(FormError::ContextMismatch(v.len(), self.gens));
        }
        let mut out = Self::zero(self.gens);
        for (idx, c) in &self.terms {
            for (pos, &j) in idx.indices().iter().enumerate() {
                if v[j].is_zero() {
                    continue;
                }
                let (reduced, sign) = idx.remove(j).expect("index present");
                debug_assert_eq!(if pos % 2 == 0 { 1 } else { -1 }, sign);
                let mut term = c.clone() * v[j].clone();
                if sign < 0 {
                    term = -term;
                }
                out.add_term(reduced, term);
            }
        }
        Ok(out)
    }

    /// Interior product with the basis direction `∂_j`.
    pub fn interior_basis(&self, j: usize) -> Result<Self, FormError> {
        if j >= self.gens {
            return Err(FormError::IndexOutOfRange(j, self.gens));
        }
        let mut out = Self::zero(self.gens);
        for (idx, c) in &self.terms {
            if let Some((reduced, sign)) = idx.remove(j) {
                let term = if sign < 0 { -c.clone() } else { c.clone() };
                out.add_term(reduced, term);
            }
        }
        Ok(out)
    }

    /// Repeated wedge `self^k` divided by `k!`; the Liouville normalization
    /// used for powers of the symplectic form.
    pub fn power_over_factorial(&self, k: usize) -> Result<Self, FormError>
    where
        R: Ring,
    {
        use crate::scalar::factorial;
        let mut acc = Self::one(self.gens);
        for _ in 0..k {
            acc = acc.wedge(self)?;
        }
        let inv = crate::scalar::Rat::from(num_bigint::BigInt::from(1)) / factorial(k);
        Ok(acc.scale(&R::from_rat(&inv)))
    }
}

impl<R: Ring> fmt::Display for GradedForm<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                if idx.degree() == 0 {
                    format!("({})", c)
                } else {
                    format!("({})·{}", c, idx)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat_int, Rat};

    fn e(gens: usize, i: usize) -> GradedForm<Rat> {
        GradedForm::generator(gens, i).unwrap()
    }

    #[test]
    fn wedge_signs() {
        let e1 = e(4, 0);
        let e2 = e(4, 1);
        let e12 = e1.wedge(&e2).unwrap();
        let e21 = e2.wedge(&e1).unwrap();
        assert_eq!(e21, e12.neg());
        assert_eq!(
            e12.coefficient_of(&MultiIndex::new(vec![0, 1]).unwrap()),
            rat_int(1)
        );
        assert!(e1.wedge(&e1).unwrap().is_zero());
    }

    #[test]
    fn wedge_even_degree_square() {
        // (e1∧e2 + e3∧e4)^2 = 2 e1∧e2∧e3∧e4
        let omega = e(4, 0)
            .wedge(&e(4, 1))
            .unwrap()
            .add(&e(4, 2).wedge(&e(4, 3)).unwrap())
            .unwrap();
        let sq = omega.wedge(&omega).unwrap();
        assert_eq!(
            sq.coefficient_of(&MultiIndex::new(vec![0, 1, 2, 3]).unwrap()),
            rat_int(2)
        );
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn interior_basics() {
        let e12 = e(2, 0).wedge(&e(2, 1)).unwrap();
        assert_eq!(e12.interior_basis(0).unwrap(), e(2, 1));
        assert_eq!(e12.interior_basis(1).unwrap(), e(2, 0).neg());
        let f = GradedForm::scalar(2, rat_int(5));
        assert!(f.interior_basis(0).unwrap().is_zero());
    }

    #[test]
    fn context_mismatch_rejected() {
        let a = e(2, 0);
        let b = e(4, 0);
        assert!(matches!(a.wedge(&b), Err(FormError::ContextMismatch(2, 4))));
    }

    #[test]
    fn multi_index_validation() {
        assert!(MultiIndex::new(vec![0, 2, 5]).is_ok());
        assert!(MultiIndex::new(vec![0, 0]).is_err());
        assert!(MultiIndex::new(vec![2, 1]).is_err());
    }
}
