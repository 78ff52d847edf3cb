//! Seeded random inputs for the property suites: sparse polynomials,
//! trigonometric polynomials, and homogeneous forms, all reproducible from a
//! fixed seed.

use crate::exterior::{GradedForm, MultiIndex};
use crate::poly::PolyScalar;
use crate::scalar::{rat_int, Rat};
use crate::trig::TrigFunction;
use itertools::Itertools;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Default seed for every suite (overridable via CLI/environment).
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeff(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let c = rng.gen_range(-3..=3i64);
        if c != 0 {
            return rat_int(c);
        }
    }
}

/// Sparse polynomial: up to 3 monomials, total degree ≤ 3, integer
/// coefficients in {−3..3}.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize) -> PolyScalar {
    let mut f = PolyScalar::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let mut exps = vec![0u32; nvars];
        let deg = rng.gen_range(0..=3u32);
        for _ in 0..deg {
            let v = rng.gen_range(0..nvars);
            exps[v] += 1;
        }
        f = f + PolyScalar::monomial(exps, coeff(rng));
    }
    f
}

/// Homogeneous degree-k form with random sparse polynomial coefficients
/// (up to 3 basis terms).
pub fn random_poly_form(rng: &mut ChaCha8Rng, gens: usize, degree: usize) -> GradedForm<PolyScalar> {
    let keys: Vec<MultiIndex> = (0..gens)
        .combinations(degree)
        .map(|c| MultiIndex::new(c).expect("increasing"))
        .collect();
    let mut out = GradedForm::zero(gens);
    let terms = rng.gen_range(1..=3.min(keys.len()));
    for _ in 0..terms {
        let key = keys[rng.gen_range(0..keys.len())].clone();
        let term = GradedForm::from_terms(gens, [(key, random_poly(rng, gens))]).expect("valid");
        out = out.add(&term).expect("same context");
    }
    out
}

/// Sparse trigonometric polynomial: up to 3 waves with components in
/// {−2..2}, rational coefficients in {−3..3}.
pub fn random_trig(rng: &mut ChaCha8Rng, nvars: usize) -> TrigFunction {
    let mut f = TrigFunction::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let k: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-2..=2i64)).collect();
        let wave = if rng.gen_bool(0.5) {
            TrigFunction::cos_wave(k.clone())
        } else {
            TrigFunction::sin_wave(k)
        };
        f = f + wave * TrigFunction::constant(coeff(rng));
    }
    f
}

/// Random rational vector (components in {−3..3}) of the given length.
pub fn random_rat_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len).map(|_| rat_int(rng.gen_range(-3..=3i64))).collect()
}
