//! Trigonometric polynomials on a torus with exact rational coefficients.
//!
//! A function is a finite sum Σ_k c_k·cos(k·θ) + s_k·sin(k·θ) over integer
//! wave vectors k. Canonical form: each stored k is lexicographically
//! positive (first nonzero component > 0) — the negatives are folded in via
//! cos(−x) = cos x, sin(−x) = −sin x — the zero vector carries only a cosine
//! (constant) coefficient, and trailing zero components are stripped.
//! Products stay in the ring by the product-to-sum identities.

use crate::scalar::{DifferentialRing, Rat, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

type Wave = Vec<i64>;

fn strip(mut k: Wave) -> Wave {
    while k.last() == Some(&0) {
        k.pop();
    }
    k
}

/// Fold a wave vector to its lex-positive representative. Returns the key
/// and `true` if the sign was flipped (sin coefficient must negate).
fn fold(k: Wave) -> (Wave, bool) {
    let k = strip(k);
    match k.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => (k.into_iter().map(|v| -v).collect(), true),
        _ => (k, false),
    }
}

/// Exact trigonometric polynomial; coefficients of cos(k·θ) and sin(k·θ)
/// per canonical wave vector k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigFunction {
    terms: BTreeMap<Wave, (Rat, Rat)>,
}

impl TrigFunction {
    pub fn constant(c: Rat) -> Self {
        let mut f = Self::zero();
        f.add_term(Vec::new(), c, Rat::zero());
        f
    }

    pub fn cos_wave(k: Wave) -> Self {
        let mut f = Self::zero();
        f.add_term(k, Rat::one(), Rat::zero());
        f
    }

    pub fn sin_wave(k: Wave) -> Self {
        let mut f = Self::zero();
        f.add_term(k, Rat::zero(), Rat::one());
        f
    }

    /// cos θ_i.
    pub fn cos_coord(i: usize) -> Self {
        let mut k = vec![0i64; i + 1];
        k[i] = 1;
        Self::cos_wave(k)
    }

    /// sin θ_i.
    pub fn sin_coord(i: usize) -> Self {
        let mut k = vec![0i64; i + 1];
        k[i] = 1;
        Self::sin_wave(k)
    }

    fn add_term(&mut self, k: Wave, c: Rat, s: Rat) {
        let (key, flipped) = fold(k);
        let s = if flipped { -s } else { s };
        // sin(0) ≡ 0
        let s = if key.is_empty() { Rat::zero() } else { s };
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| (Rat::zero(), Rat::zero()));
        entry.0 += c;
        entry.1 += s;
        if entry.0.is_zero() && entry.1.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Wave, &(Rat, Rat))> {
        self.terms.iter()
    }

    /// The constant Fourier coefficient (mean value over the torus, up to
    /// the volume factor).
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Vec::new())
            .map(|(c, _)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Exact evaluation at θ = 0: every cos is 1, every sin is 0.
    pub fn at_origin(&self) -> Rat {
        self.terms
            .values()
            .fold(Rat::zero(), |acc, (c, _)| acc + c.clone())
    }

    /// Directional derivative Σ v_i ∂_i f along a constant vector.
    pub fn directional(&self, v: &[Rat]) -> Self {
        let mut out = Self::zero();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let mut d = self.partial(i);
            d = d * TrigFunction::constant(vi.clone());
            out = out + d;
        }
        out
    }

    /// Substitute θ_j = 0 or θ_j = τ/2 and drop the coordinate, yielding a
    /// trig polynomial in the remaining coordinates (reindexed by removing
    /// slot j). Uses cos(x + mπ) = (−1)^m cos x, sin likewise.
    pub fn substitute_coord(&self, j: usize, half_period: bool) -> Self {
        let mut out = Self::zero();
        for (k, (c, s)) in &self.terms {
            let kj = k.get(j).copied().unwrap_or(0);
            let sign_flip = half_period && kj.rem_euclid(2) == 1;
            let mut rest: Wave = k.clone();
            if j < rest.len() {
                rest.remove(j);
            }
            let (mut c, mut s) = (c.clone(), s.clone());
            if sign_flip {
                c = -c;
                s = -s;
            }
            out.add_term(rest, c, s);
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.is_empty())
    }
}

impl Add for TrigFunction {
    type Output = TrigFunction;
    fn add(self, rhs: TrigFunction) -> TrigFunction {
        let mut out = self;
        for (k, (c, s)) in rhs.terms {
            out.add_term(k, c, s);
        }
        out
    }
}

impl Sub for TrigFunction {
    type Output = TrigFunction;
    fn sub(self, rhs: TrigFunction) -> TrigFunction {
        self + (-rhs)
    }
}

impl Neg for TrigFunction {
    type Output = TrigFunction;
    fn neg(self) -> TrigFunction {
        TrigFunction {
            terms: self
                .terms
                .into_iter()
                .map(|(k, (c, s))| (k, (-c, -s)))
                .collect(),
        }
    }
}

impl Mul for TrigFunction {
    type Output = TrigFunction;
    fn mul(self, rhs: TrigFunction) -> TrigFunction {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let mut out = TrigFunction::zero();
        for (k, (c1, s1)) in &self.terms {
            for (l, (c2, s2)) in &rhs.terms {
                let n = k.len().max(l.len());
                let mut sum = vec![0i64; n];
                let mut diff = vec![0i64; n];
                for i in 0..n {
                    let a = k.get(i).copied().unwrap_or(0);
                    let b = l.get(i).copied().unwrap_or(0);
                    sum[i] = a + b;
                    diff[i] = a - b;
                }
                // cos·cos, sin·sin → cosines; cos·sin, sin·cos → sines
                out.add_term(
                    sum.clone(),
                    &half * (c1 * c2 - s1 * s2),
                    &half * (c1 * s2 + s1 * c2),
                );
                out.add_term(
                    diff,
                    &half * (c1 * c2 + s1 * s2),
                    &half * (s1 * c2 - c1 * s2),
                );
            }
        }
        out
    }
}

impl Zero for TrigFunction {
    fn zero() -> Self {
        TrigFunction {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TrigFunction {
    fn one() -> Self {
        TrigFunction::constant(Rat::one())
    }
}

impl Ring for TrigFunction {
    fn from_rat(r: &Rat) -> Self {
        TrigFunction::constant(r.clone())
    }
}

impl DifferentialRing for TrigFunction {
    fn partial(&self, var: usize) -> Self {
        let mut out = TrigFunction::zero();
        for (k, (c, s)) in &self.terms {
            let kv = k.get(var).copied().unwrap_or(0);
            if kv == 0 {
                continue;
            }
            let kv_rat = Rat::from(BigInt::from(kv));
            // ∂ cos(k·θ) = −k_v sin(k·θ); ∂ sin(k·θ) = k_v cos(k·θ)
            out.add_term(k.clone(), &kv_rat * s, -(&kv_rat * c));
        }
        out
    }
}

impl fmt::Display for TrigFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, (c, s)) in &self.terms {
            let arg: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| {
                    if v == 1 {
                        format!("θ{}", i + 1)
                    } else {
                        format!("{}θ{}", v, i + 1)
                    }
                })
                .collect();
            let arg = arg.join("+");
            if k.is_empty() {
                parts.push(format!("{}", c));
                continue;
            }
            if !c.is_zero() {
                parts.push(format!("{}·cos({})", c, arg));
            }
            if !s.is_zero() {
                parts.push(format!("{}·sin({})", s, arg));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn product_to_sum() {
        // cos²p has constant term 1/2
        let cp = TrigFunction::cos_coord(1);
        let sq = cp.clone() * cp;
        assert_eq!(sq.constant_term(), rat(1, 2));
        // sin q · cos q = ½ sin 2q: constant term 0
        let s = TrigFunction::sin_coord(0) * TrigFunction::cos_coord(0);
        assert_eq!(s, {
            let mut f = TrigFunction::zero();
            f.add_term(vec![2], Rat::zero(), rat(1, 2));
            f
        });
    }

    #[test]
    fn pythagoras() {
        let c = TrigFunction::cos_coord(0);
        let s = TrigFunction::sin_coord(0);
        let one = c.clone() * c + s.clone() * s;
        assert_eq!(one, TrigFunction::one());
    }

    #[test]
    fn derivative() {
        // ∂q sin q = cos q; ∂q cos q = −sin q
        assert_eq!(
            TrigFunction::sin_coord(0).partial(0),
            TrigFunction::cos_coord(0)
        );
        assert_eq!(
            TrigFunction::cos_coord(0).partial(0),
            -TrigFunction::sin_coord(0)
        );
        assert!(TrigFunction::cos_coord(0).partial(1).is_zero());
    }

    #[test]
    fn origin_and_substitution() {
        let f = TrigFunction::cos_coord(0) * TrigFunction::cos_coord(1);
        assert_eq!(f.at_origin(), rat_int(1));
        // substitute q = τ/2: cos q → −1, leaving −cos p
        let g = f.substitute_coord(0, true);
        assert_eq!(g, -TrigFunction::cos_coord(0));
        // substitute q = 0: leaves cos p (reindexed to slot 0)
        let h = f.substitute_coord(0, false);
        assert_eq!(h, TrigFunction::cos_coord(0));
    }

    #[test]
    fn lex_positive_canonical_form() {
        // cos(−q+p folded): building with wave (−1, 1) equals cos(q − p) with sin negated
        let mut f = TrigFunction::zero();
        f.add_term(vec![-1, 1], Rat::zero(), Rat::one());
        let mut g = TrigFunction::zero();
        g.add_term(vec![1, -1], Rat::zero(), -Rat::one());
        assert_eq!(f, g);
    }
}
