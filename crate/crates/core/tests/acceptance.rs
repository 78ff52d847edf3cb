//! End-to-end acceptance gate: eight criteria, each printing a single
//! pass/fail line (run with `--nocapture` to see them on success).

use num_traits::Zero;
use symcoh::classify::{self, Algebra, CohomologyData};
use symcoh::randgen::DEFAULT_SEED;
use symcoh::scalar::rat_int;
use symcoh::verify::{run_suite, CheckResult, Suite};
use symcoh::{ce, Rat};

fn gate(criterion: usize, desc: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("pass  criterion {}: {}", criterion, desc);
    } else {
        println!("FAIL  criterion {}: {} — {}", criterion, desc, failures.join("; "));
        panic!("criterion {} failed: {}", criterion, failures.join("; "));
    }
}

fn check(failures: &mut Vec<String>, ok: bool, witness: impl Fn() -> String) {
    if !ok {
        failures.push(witness());
    }
}

fn suite_failures(results: &[CheckResult]) -> Vec<String> {
    results
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.to_string())
        .collect()
}

#[test]
fn criterion_1_thurston_fixture() {
    let mut f = Vec::new();
    let model = ce::thurston();
    let betti = model.betti_vector();
    check(&mut f, betti == vec![1, 3, 4, 3, 1], || {
        format!("betti {:?}", betti)
    });
    let data = CohomologyData::from_ce_model(&model).expect("valid model");
    check(&mut f, data.labels == ["x*", "p*", "z*"], || {
        format!("H¹ labels {:?}", data.labels)
    });
    // pairings: (x*,p*) = (x*,z*) = 0, (z*,p*) = 1
    check(&mut f, data.p[0][1].is_zero(), || format!("(x*,p*) = {}", data.p[0][1]));
    check(&mut f, data.p[0][2].is_zero(), || format!("(x*,z*) = {}", data.p[0][2]));
    check(&mut f, data.p[2][1] == rat_int(1), || format!("(z*,p*) = {}", data.p[2][1]));
    let h2 = data.h2(Algebra::Sp);
    check(&mut f, h2.total_dim == 6, || format!("h2(sp) = {}", h2.total_dim));
    let dims: Vec<(String, usize)> = h2
        .components
        .iter()
        .map(|c| (c.label.clone(), c.dim))
        .collect();
    check(
        &mut f,
        dims == [("Λ²H¹*".to_string(), 3), ("Ker T".to_string(), 3)],
        || format!("components {:?}", dims),
    );
    gate(1, "Thurston betti/H¹/pairings/h2(sp)=3+3", f);
}

#[test]
fn criterion_2_punctured_thurston() {
    let mut f = Vec::new();
    let data = CohomologyData::from_ce_model(&ce::thurston())
        .expect("valid model")
        .puncture()
        .expect("compact");
    let ker_b = data.ker_b();
    check(
        &mut f,
        ker_b == vec![vec![rat_int(1), rat_int(0), rat_int(0)]],
        || format!("ker B = {:?} (labels {:?})", ker_b, data.labels),
    );
    for (alg, want) in [(Algebra::Sp, 6 - 1), (Algebra::Ham, 4), (Algebra::Poisson, 3)] {
        let got = data.h2(alg).total_dim;
        check(&mut f, got == want, || {
            format!("h2({}) = {}, want {}", alg.name(), got, want)
        });
    }
    check(&mut f, data.center_dim() == 4, || {
        format!("center dim {}", data.center_dim())
    });
    gate(2, "punctured Thurston ker B = {x*}, h2 = 5/4/3, center 4", f);
}

#[test]
fn criterion_3_torus_t4_transgression_cancels() {
    let mut f = Vec::new();
    let data = CohomologyData::from_ce_model(&ce::torus(2)).expect("valid model");
    let b1 = data.b1;
    check(&mut f, data.transgression_vanishes(), || "T ≠ 0".to_string());
    // both halves individually nonzero for a = e₁: genuine cancellation
    let a: Vec<Rat> = (0..b1)
        .map(|i| if i == 0 { rat_int(1) } else { rat_int(0) })
        .collect();
    let q_half_nonzero = (0..b1).any(|j| {
        (0..b1).any(|k| (0..b1).any(|l| !data.q[0][j][k][l].is_zero()))
    });
    check(&mut f, q_half_nonzero, || "Q(e₁,·,·,·) ≡ 0".to_string());
    let pa: Vec<Rat> = (0..b1)
        .map(|j| {
            (0..b1)
                .map(|i| &a[i] * &data.p[i][j])
                .fold(Rat::zero(), |s, x| s + x)
        })
        .collect();
    let cyc_half_nonzero = (0..b1).any(|j| {
        (0..b1).any(|k| {
            (0..b1).any(|l| {
                !(&pa[j] * &data.p[k][l] + &pa[k] * &data.p[l][j] + &pa[l] * &data.p[j][k])
                    .is_zero()
            })
        })
    });
    check(&mut f, cyc_half_nonzero, || "cyclic P·P term ≡ 0".to_string());
    let h2 = data.h2(Algebra::Sp).total_dim;
    check(&mut f, h2 == 10, || format!("h2(sp) = {}", h2));
    gate(3, "T⁴ transgression cancels term-by-term, h2(sp) = 10", f);
}

#[test]
fn criterion_4_surfaces() {
    let mut f = Vec::new();
    let sphere = classify::sphere().h2(Algebra::Sp).total_dim;
    check(&mut f, sphere == 0, || format!("sphere h2(sp) = {}", sphere));
    for (genus, want, want_ker_t) in [(1usize, 3usize, None), (2, 6, Some(0)), (3, 15, Some(0))] {
        let data = classify::surface(genus);
        let got = data.h2(Algebra::Sp).total_dim;
        check(&mut f, got == want, || {
            format!("surface({}) h2(sp) = {}, want {}", genus, got, want)
        });
        if let Some(k) = want_ker_t {
            let ker = data.ker_t().len();
            check(&mut f, ker == k, || {
                format!("surface({}) dim Ker T = {}", genus, ker)
            });
        }
    }
    gate(4, "sphere 0, surface(1..3) → 3/6/15 with Ker T = 0 for g ≥ 2", f);
}

#[test]
fn criterion_5_brylinski_suite() {
    let results = run_suite(Suite::Brylinski, DEFAULT_SEED, 200, &[2, 4]);
    gate(5, "Brylinski identities, 200 cases, 2n ∈ {2,4}", suite_failures(&results));
}

#[test]
fn criterion_6_bracket_suite() {
    let results = run_suite(Suite::Bracket, DEFAULT_SEED, 200, &[2, 4]);
    gate(6, "bracket identities, 200 cases, 2n ∈ {2,4}", suite_failures(&results));
}

#[test]
fn criterion_7_cocycle_suite() {
    let results = run_suite(Suite::Cocycle, DEFAULT_SEED, 100, &[2, 4]);
    gate(7, "cocycle identities on T² and T⁴, 100 pairs", suite_failures(&results));
}

#[test]
fn criterion_8_classification_consistency() {
    let mut f = Vec::new();
    let mut compact: Vec<CohomologyData> = ce::catalog()
        .iter()
        .map(|m| CohomologyData::from_ce_model(m).expect("valid model"))
        .collect();
    compact.push(classify::sphere());
    for genus in 1..=3 {
        compact.push(classify::surface(genus));
    }
    compact.push(classify::torus_direct(2));
    for data in &compact {
        let ham = data.h2(Algebra::Ham).total_dim;
        let poisson = data.h2(Algebra::Poisson).total_dim;
        check(&mut f, ham == poisson, || {
            format!("{}: h2(ham) {} ≠ h2(poisson) {}", data.name, ham, poisson)
        });
        if data.b1 < 4 {
            check(&mut f, data.transgression_vanishes(), || {
                format!("{}: b1 = {} < 4 but T ≠ 0", data.name, data.b1)
            });
        }
        let p = data.puncture().expect("compact");
        let ham_p = p.h2(Algebra::Ham).total_dim;
        let poisson_p = p.h2(Algebra::Poisson).total_dim;
        check(&mut f, ham_p == poisson_p + 1, || {
            format!("{}: h2(ham) {} ≠ h2(poisson)+1 = {}", p.name, ham_p, poisson_p + 1)
        });
    }
    gate(8, "ham/poisson relation and b1 < 4 ⇒ T ≡ 0 across all data", f);
}
