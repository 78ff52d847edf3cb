//! Randomized verification suites shared by the command line and the
//! acceptance tests: every identity is checked with exact arithmetic, so a
//! single nonzero defect is a failure regardless of magnitude.

use crate::ce;
use crate::darboux::{DarbouxChart, IdentityId};
use crate::randgen;
use crate::scalar::{rat_int, TauValue};
use crate::torus::Torus;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Brylinski,
    Bracket,
    Cocycle,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "brylinski" => Some(Suite::Brylinski),
            "bracket" => Some(Suite::Bracket),
            "cocycle" => Some(Suite::Cocycle),
            "all" => Some(Suite::All),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass  {:<44} {} cases", self.name, self.cases)
        } else {
            write!(
                f,
                "FAIL  {:<44} {}/{} cases failed; first: {}",
                self.name,
                self.failures,
                self.cases,
                self.first_failure.as_deref().unwrap_or("?")
            )
        }
    }
}

fn run_cases(
    name: String,
    cases: usize,
    rng: &mut ChaCha8Rng,
    mut case: impl FnMut(&mut ChaCha8Rng, usize) -> Option<String>,
) -> CheckResult {
    let mut failures = 0;
    let mut first_failure = None;
    for i in 0..cases {
        if let Some(witness) = case(rng, i) {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(format!("case {}: {}", i, witness));
            }
        }
    }
    CheckResult {
        name,
        cases,
        failures,
        first_failure,
    }
}

fn brylinski_checks(seed: u64, cases: usize, dims: &[usize]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let ids = [
        IdentityId::StarFormula,
        IdentityId::DeltaK1,
        IdentityId::DeltaK2,
        IdentityId::DeltaPi,
        IdentityId::Cyclic4Term,
        IdentityId::CommutatorExact,
        IdentityId::ClosedAlphaExactness,
    ];
    for &dim in dims {
        let chart = DarbouxChart::new(dim / 2);
        let mut rng = randgen::rng(seed);
        for id in ids {
            out.push(run_cases(
                format!("identity {} (2n={})", id.name(), dim),
                cases,
                &mut rng,
                |rng, _| {
                    let defect = chart.identity_defect(id, rng);
                    (!defect.is_zero()).then(|| format!("defect {}", defect))
                },
            ));
        }
        // *² = Id on random homogeneous forms of every degree
        out.push(run_cases(
            format!("star involution (2n={})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let ctx = chart.context();
                let k = rng.gen_range(0..=dim);
                let a = randgen::random_poly_form(rng, dim, k);
                let ss = ctx.star(&ctx.star(&a).unwrap()).unwrap();
                (ss != a).then(|| format!("*²(a) ≠ a for a = {}", a))
            },
        ));
        // δ² = 0
        out.push(run_cases(
            format!("delta squared (2n={})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let ctx = chart.context();
                let k = rng.gen_range(0..=dim);
                let a = randgen::random_poly_form(rng, dim, k);
                let dd = ctx.delta(&ctx.delta(&a).unwrap()).unwrap();
                (!dd.is_zero()).then(|| format!("δ²(a) = {}", dd))
            },
        ));
        // dΩ⁰ ⊆ δΩ² constructively
        out.push(run_cases(
            format!("exact 1-forms are delta-exact (2n={})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let f = randgen::random_poly(rng, dim);
                let defect = chart.exact_to_delta_defect(&f);
                (!defect.is_zero()).then(|| format!("defect {}", defect))
            },
        ));
    }
    // de Rham / canonical homology duality on every catalog model
    for model in ce::catalog() {
        let gens = model.gens();
        let mut failures = Vec::new();
        for k in 0..=gens {
            let b = model.betti(k);
            let cb = model.canonical_betti(gens - k);
            if b != cb {
                failures.push(format!("k={}: betti {} vs canonical {}", k, b, cb));
            }
        }
        out.push(CheckResult {
            name: format!("canonical betti duality ({})", model.name),
            cases: gens + 1,
            failures: failures.len(),
            first_failure: failures.into_iter().next(),
        });
    }
    out
}

fn bracket_checks(seed: u64, cases: usize, dims: &[usize]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &dim in dims {
        let chart = DarbouxChart::new(dim / 2);
        let mut rng = randgen::rng(seed);
        for id in [IdentityId::BracketAntisym, IdentityId::BracketJacobi] {
            out.push(run_cases(
                format!("identity {} (2n={})", id.name(), dim),
                cases,
                &mut rng,
                |rng, _| {
                    let defect = chart.identity_defect(id, rng);
                    (!defect.is_zero()).then(|| format!("defect {}", defect))
                },
            ));
        }
        out.push(run_cases(
            format!("delta of bracket is poisson (2n={})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let alpha = randgen::random_poly_form(rng, dim, 1);
                let beta = randgen::random_poly_form(rng, dim, 1);
                let lhs = chart.delta_scalar(&chart.ext_bracket(&alpha, &beta).unwrap());
                let rhs = chart.poisson(&chart.delta_scalar(&alpha), &chart.delta_scalar(&beta));
                (lhs != rhs).then(|| format!("δ[[α,β]] = {} vs {{δα,δβ}} = {}", lhs, rhs))
            },
        ));
    }
    out
}

fn cocycle_checks(seed: u64, cases: usize, dims: &[usize]) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &dim in dims {
        let n = dim / 2;
        let torus = Torus::new(n);
        let mut rng = randgen::rng(seed);
        // five random constant 1-forms
        let alphas: Vec<Vec<_>> = (0..5)
            .map(|_| randgen::random_rat_vector(&mut rng, dim))
            .collect();
        for (ai, alpha) in alphas.iter().enumerate() {
            out.push(run_cases(
                format!("roger cocycle condition α#{} (T{})", ai + 1, dim),
                cases,
                &mut rng,
                |rng, _| {
                    let f = randgen::random_trig(rng, dim);
                    let g = randgen::random_trig(rng, dim);
                    let h = randgen::random_trig(rng, dim);
                    let d = torus.cochain_differential(|a, b| torus.roger(alpha, a, b), &f, &g, &h);
                    (!d.is_zero()).then(|| format!("𝚍ψ = {}", d))
                },
            ));
        }
        out.push(run_cases(
            format!("ks cocycle condition (T{})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let f = randgen::random_trig(rng, dim);
                let g = randgen::random_trig(rng, dim);
                let h = randgen::random_trig(rng, dim);
                let d = torus.cochain_differential(
                    |a, b| TauValue::new(torus.ks(a, b), 0),
                    &f,
                    &g,
                    &h,
                );
                (!d.is_zero()).then(|| format!("𝚍ψ = {}", d))
            },
        ));
        for (j, angle_half) in [(0usize, false), (n, false), (0, true), (n, true)] {
            out.push(run_cases(
                format!(
                    "singular cocycle condition θ{}={} (T{})",
                    j + 1,
                    if angle_half { "τ/2" } else { "0" },
                    dim
                ),
                cases,
                &mut rng,
                |rng, _| {
                    let f = randgen::random_trig(rng, dim);
                    let g = randgen::random_trig(rng, dim);
                    let h = randgen::random_trig(rng, dim);
                    let d = torus.cochain_differential(
                        |a, b| torus.singular(j, angle_half, a, b).unwrap(),
                        &f,
                        &g,
                        &h,
                    );
                    (!d.is_zero()).then(|| format!("𝚍ψ = {}", d))
                },
            ));
        }
        out.push(run_cases(
            format!("ks triviality via explicit coboundary (T{})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let f = randgen::random_trig(rng, dim);
                let g = randgen::random_trig(rng, dim);
                let d = torus.ks_triviality_defect(&f, &g);
                (d != rat_int(0)).then(|| format!("defect {}", d))
            },
        ));
        out.push(run_cases(
            format!("exact-form cocycle collapse (T{})", dim),
            cases,
            &mut rng,
            |rng, _| {
                let h = randgen::random_trig(rng, dim);
                let f = randgen::random_trig(rng, dim);
                let g = randgen::random_trig(rng, dim);
                let d = torus.exact_form_cocycle_defect(&h, &f, &g);
                (!d.is_zero()).then(|| format!("defect {}", d))
            },
        ));
        for v_dir in 0..dim {
            out.push(run_cases(
                format!("action identity, direction ∂{} (T{})", v_dir + 1, dim),
                cases,
                &mut rng,
                |rng, _| {
                    let alpha = randgen::random_rat_vector(rng, dim);
                    let mut v = vec![rat_int(0); dim];
                    v[v_dir] = rat_int(1);
                    let f = randgen::random_trig(rng, dim);
                    let g = randgen::random_trig(rng, dim);
                    let d = torus.action_identity_defect(&alpha, &v, &f, &g);
                    (!d.is_zero()).then(|| format!("defect {}", d))
                },
            ));
        }
    }
    out
}

pub fn run_suite(suite: Suite, seed: u64, cases: usize, dims: &[usize]) -> Vec<CheckResult> {
    match suite {
        Suite::Brylinski => brylinski_checks(seed, cases, dims),
        Suite::Bracket => bracket_checks(seed, cases, dims),
        Suite::Cocycle => cocycle_checks(seed, cases, dims),
        Suite::All => {
            let mut out = brylinski_checks(seed, cases, dims);
            out.extend(bracket_checks(seed, cases, dims));
            out.extend(cocycle_checks(seed, cases, dims));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Brylinski, Suite::Bracket, Suite::Cocycle] {
            let results = run_suite(suite, randgen::DEFAULT_SEED, 5, &[2, 4]);
            for r in &results {
                assert!(r.passed(), "{}", r);
            }
        }
    }
}
