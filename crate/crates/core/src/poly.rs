//! Multivariate polynomials over the rationals, the coefficient ring of a
//! Darboux chart.
//!
//! Variables are indexed 0..2n and correspond to the chart coordinates
//! q₁..q_n, p₁..p_n in that order. Exponent vectors are padded/truncated
//! lazily so polynomials in different numbers of variables still compare by
//! canonical form.

use crate::scalar::{DifferentialRing, Rat, Ring};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros stripped, so the representation is
/// canonical regardless of ambient variable count.
fn canon(mut exps: Vec<u32>) -> Vec<u32> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyScalar {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl PolyScalar {
    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        PolyScalar { terms }
    }

    /// The coordinate variable with the given 0-based index.
    pub fn var(i: usize) -> Self {
        let mut exps = vec![0u32; i + 1];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Rat::one());
        PolyScalar { terms }
    }

    pub fn monomial(exps: Vec<u32>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(canon(exps), c);
        }
        PolyScalar { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Evaluate at the origin (all variables zero).
    pub fn at_origin(&self) -> Rat {
        self.constant_term()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let exps = canon(exps);
        match self.terms.remove(&exps) {
            None => {
                self.terms.insert(exps, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
        }
    }
}

impl Add for PolyScalar {
    type Output = PolyScalar;
    fn add(self, rhs: PolyScalar) -> PolyScalar {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for PolyScalar {
    type Output = PolyScalar;
    fn sub(self, rhs: PolyScalar) -> PolyScalar {
        self + (-rhs)
    }
}

impl Neg for PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        PolyScalar {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for PolyScalar {
    type Output = PolyScalar;
    fn mul(self, rhs: PolyScalar) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let mut e = vec![0u32; n];
                for (i, x) in ea.iter().enumerate() {
                    e[i] += x;
                }
                for (i, x) in eb.iter().enumerate() {
                    e[i] += x;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Zero for PolyScalar {
    fn zero() -> Self {
        PolyScalar {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PolyScalar {
    fn one() -> Self {
        PolyScalar::constant(Rat::one())
    }
}

impl Ring for PolyScalar {
    fn from_rat(r: &Rat) -> Self {
        PolyScalar::constant(r.clone())
    }
}

impl DifferentialRing for PolyScalar {
    fn partial(&self, var: usize) -> Self {
        let mut out = PolyScalar::zero();
        for (e, c) in &self.terms {
            let k = e.get(var).copied().unwrap_or(0);
            if k == 0 {
                continue;
            }
            let mut de = e.clone();
            de[var] = k - 1;
            out.add_term(de, c * Rat::from(num_bigint::BigInt::from(k)));
        }
        out
    }
}

impl fmt::Display for PolyScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{}", i + 1, k)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{}", c)
                } else {
                    format!("{}·{}", c, vars.join("·"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn arithmetic() {
        let q = PolyScalar::var(0);
        let p = PolyScalar::var(1);
        let qp = q.clone() * p.clone();
        assert_eq!(qp.clone() - qp.clone(), PolyScalar::zero());
        let sq = (q.clone() + p.clone()) * (q.clone() - p.clone());
        assert_eq!(sq, q.clone() * q.clone() - p.clone() * p.clone());
        assert_eq!(sq.total_degree(), 2);
    }

    #[test]
    fn partials() {
        // ∂q(q²p) = 2qp, ∂p(q²p) = q²
        let q = PolyScalar::var(0);
        let p = PolyScalar::var(1);
        let f = q.clone() * q.clone() * p.clone();
        assert_eq!(
            f.partial(0),
            PolyScalar::constant(rat_int(2)) * q.clone() * p.clone()
        );
        assert_eq!(f.partial(1), q.clone() * q.clone());
        assert!(f.partial(5).is_zero());
    }

    #[test]
    fn origin_evaluation() {
        let q = PolyScalar::var(0);
        let f = q.clone() * q + PolyScalar::constant(rat_int(7));
        assert_eq!(f.at_origin(), rat_int(7));
    }
}
