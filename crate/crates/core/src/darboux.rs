//! Polynomial calculus on a Darboux chart ℝ^{2n} with ω = Σ dqⁱ∧dpⁱ:
//! Poisson brackets, hamiltonian vector fields, the extension bracket on
//! 1-forms, and the registered identity suite checked as exact form-level
//! identities (no integration — polynomials are not compactly supported, and
//! the form-level statements are strictly stronger where both apply).

use crate::diff::{CoordinateDifferential, Differential};
use crate::exterior::{GradedForm, MultiIndex};
use crate::poly::PolyScalar;
use crate::scalar::{DifferentialRing, Rat, Ring};
use crate::symplectic::SymplecticContext;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub type PolyForm = GradedForm<PolyScalar>;
/// Vector field as 2n polynomial components in the (∂q, ∂p) basis.
pub type PolyVectorField = Vec<PolyScalar>;

#[derive(Debug, Error)]
pub enum DarbouxError {
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("expected a 1-form")]
    DegreeError,
}

/// The chart: variables q₁..q_n (indices 0..n) then p₁..p_n (indices n..2n);
/// generator i is the coordinate differential of variable i.
pub struct DarbouxChart {
    n: usize,
    diff: CoordinateDifferential,
    omega_rat: GradedForm<Rat>,
}

impl DarbouxChart {
    pub fn new(n: usize) -> Self {
        let gens = 2 * n;
        let mut omega_rat = GradedForm::zero(gens);
        for i in 0..n {
            let term = GradedForm::from_terms(
                gens,
                [(MultiIndex::new(vec![i, n + i]).unwrap(), Rat::one())],
            )
            .unwrap();
            omega_rat = omega_rat.add(&term).unwrap();
        }
        DarbouxChart {
            n,
            diff: CoordinateDifferential { gens },
            omega_rat,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> usize {
        2 * self.n
    }

    pub fn context(&self) -> SymplecticContext<'_, PolyScalar> {
        SymplecticContext::new(self.gens(), &self.omega_rat, &self.diff)
            .expect("standard form is nondegenerate")
    }

    /// ω as a polynomial-coefficient form.
    pub fn omega(&self) -> PolyForm {
        self.omega_rat.map_coefficients(PolyScalar::from_rat)
    }

    /// ω^k/k! (zero form if k exceeds n by nondegeneracy of the wedge).
    pub fn omega_power(&self, k: usize) -> PolyForm {
        self.omega().power_over_factorial(k).expect("same context")
    }

    pub fn d(&self, a: &PolyForm) -> PolyForm {
        self.diff.d(a)
    }

    pub fn d_scalar(&self, f: &PolyScalar) -> PolyForm {
        self.d(&PolyForm::scalar(self.gens(), f.clone()))
    }

    /// The hamiltonian vector field: df = −i_{X_f}ω gives
    /// X_f = Σ (∂f/∂qᵢ)∂pᵢ − (∂f/∂pᵢ)∂qᵢ.
    pub fn ham_vf(&self, f: &PolyScalar) -> PolyVectorField {
        let n = self.n;
        let mut v = vec![PolyScalar::zero(); 2 * n];
        for i in 0..n {
            v[i] = -f.partial(n + i);
            v[n + i] = f.partial(i);
        }
        v
    }

    /// {f,g} = ω(X_f, X_g) = Σ ∂qᵢf ∂pᵢg − ∂pᵢf ∂qᵢg.
    pub fn poisson(&self, f: &PolyScalar, g: &PolyScalar) -> PolyScalar {
        let n = self.n;
        let mut out = PolyScalar::zero();
        for i in 0..n {
            out = out + f.partial(i) * g.partial(n + i) - f.partial(n + i) * g.partial(i);
        }
        out
    }

    /// ω evaluated on two vector fields.
    pub fn omega_pair(&self, v: &PolyVectorField, w: &PolyVectorField) -> PolyScalar {
        let n = self.n;
        let mut out = PolyScalar::zero();
        for i in 0..n {
            out = out + v[i].clone() * w[n + i].clone() - v[n + i].clone() * w[i].clone();
        }
        out
    }

    /// Directional derivative v·f.
    pub fn vf_apply(&self, v: &PolyVectorField, f: &PolyScalar) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (j, vj) in v.iter().enumerate() {
            out = out + vj.clone() * f.partial(j);
        }
        out
    }

    /// Lie bracket of vector fields, componentwise.
    pub fn vf_commutator(&self, v: &PolyVectorField, w: &PolyVectorField) -> PolyVectorField {
        (0..self.gens())
            .map(|i| self.vf_apply(v, &w[i]) - self.vf_apply(w, &v[i]))
            .collect()
    }

    /// α(v) for a 1-form α.
    pub fn eval_one_form(&self, alpha: &PolyForm, v: &PolyVectorField) -> PolyScalar {
        let mut out = PolyScalar::zero();
        for (j, vj) in v.iter().enumerate() {
            out = out + alpha.coefficient_of(&MultiIndex::single(j)) * vj.clone();
        }
        out
    }

    /// δα for a 1-form, extracted as a scalar.
    pub fn delta_scalar(&self, alpha: &PolyForm) -> PolyScalar {
        self.context()
            .delta(alpha)
            .expect("homogeneous")
            .coefficient_of(&MultiIndex::empty())
    }

    /// The extension bracket representative δα·dδβ of [[α],[β]].
    pub fn ext_bracket(&self, alpha: &PolyForm, beta: &PolyForm) -> Result<PolyForm, DarbouxError> {
        let deg1 = |a: &PolyForm| a.is_zero() || a.homogeneous_degree() == Some(1);
        if !deg1(alpha) || !deg1(beta) {
            return Err(DarbouxError::DegreeError);
        }
        let da = self.delta_scalar(alpha);
        let ddb = self.d_scalar(&self.delta_scalar(beta));
        Ok(ddb.scale(&da))
    }
}

/// The registered identity suite; each case draws its own inputs from the
/// supplied generator and returns the exact symbolic defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityId {
    StarFormula,
    DeltaK1,
    DeltaK2,
    DeltaPi,
    BracketAntisym,
    BracketJacobi,
    Cyclic4Term,
    CommutatorExact,
    ClosedAlphaExactness,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::StarFormula,
        IdentityId::DeltaK1,
        IdentityId::DeltaK2,
        IdentityId::DeltaPi,
        IdentityId::BracketAntisym,
        IdentityId::BracketJacobi,
        IdentityId::Cyclic4Term,
        IdentityId::CommutatorExact,
        IdentityId::ClosedAlphaExactness,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::StarFormula => "star-formula",
            IdentityId::DeltaK1 => "delta-k1",
            IdentityId::DeltaK2 => "delta-k2",
            IdentityId::DeltaPi => "delta-pi",
            IdentityId::BracketAntisym => "bracket-antisym",
            IdentityId::BracketJacobi => "bracket-jacobi",
            IdentityId::Cyclic4Term => "cyclic-4term",
            IdentityId::CommutatorExact => "commutator-exact",
            IdentityId::ClosedAlphaExactness => "closed-alpha-exactness",
        }
    }

    pub fn parse(s: &str) -> Result<Self, DarbouxError> {
        let canon = s.trim().trim_matches(|c| c == '(' || c == ')');
        let found = match canon {
            "a" | "star-formula" => IdentityId::StarFormula,
            "b" | "delta-k1" => IdentityId::DeltaK1,
            "c" | "delta-k2" => IdentityId::DeltaK2,
            "d" | "delta-pi" => IdentityId::DeltaPi,
            "e" | "bracket-antisym" => IdentityId::BracketAntisym,
            "f" | "bracket-jacobi" => IdentityId::BracketJacobi,
            "g" | "cyclic-4term" => IdentityId::Cyclic4Term,
            "h" | "commutator-exact" => IdentityId::CommutatorExact,
            "i" | "closed-alpha-exactness" => IdentityId::ClosedAlphaExactness,
            other => return Err(DarbouxError::UnknownIdentity(other.to_string())),
        };
        Ok(found)
    }
}

impl DarbouxChart {
    fn random_poly(&self, rng: &mut ChaCha8Rng) -> PolyScalar {
        crate::randgen::random_poly(rng, self.gens())
    }

    fn random_one_form(&self, rng: &mut ChaCha8Rng) -> PolyForm {
        crate::randgen::random_poly_form(rng, self.gens(), 1)
    }

    fn random_vf(&self, rng: &mut ChaCha8Rng) -> PolyVectorField {
        (0..self.gens()).map(|_| self.random_poly(rng)).collect()
    }

    /// Run one random case of the named identity; the defect must be the
    /// zero form.
    pub fn identity_defect(&self, id: IdentityId, rng: &mut ChaCha8Rng) -> PolyForm {
        let ctx = self.context();
        let gens = self.gens();
        match id {
            IdentityId::StarFormula => {
                // *(f₀df₁∧…∧df_k) = (−1)^k f₀ i_{X_{f_k}}…i_{X_{f_1}} ωⁿ/n!
                let k = rng.gen_range(0..=2usize);
                let f0 = self.random_poly(rng);
                let fs: Vec<PolyScalar> = (0..k).map(|_| self.random_poly(rng)).collect();
                let mut lhs_arg = PolyForm::scalar(gens, f0.clone());
                for f in &fs {
                    lhs_arg = lhs_arg.wedge(&self.d_scalar(f)).unwrap();
                }
                let lhs = ctx.star(&lhs_arg).unwrap();
                let mut rhs = ctx.liouville().clone();
                for f in &fs {
                    rhs = rhs.interior(&self.ham_vf(f)).unwrap();
                }
                let mut rhs = rhs.scale(&f0);
                if k % 2 == 1 {
                    rhs = rhs.neg();
                }
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::DeltaK1 => {
                let f0 = self.random_poly(rng);
                let f1 = self.random_poly(rng);
                let lhs = ctx
                    .delta(&self.d_scalar(&f1).scale(&f0))
                    .unwrap();
                let rhs = PolyForm::scalar(gens, self.poisson(&f0, &f1));
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::DeltaK2 => {
                let f0 = self.random_poly(rng);
                let f1 = self.random_poly(rng);
                let f2 = self.random_poly(rng);
                let arg = self
                    .d_scalar(&f1)
                    .wedge(&self.d_scalar(&f2))
                    .unwrap()
                    .scale(&f0);
                let lhs = ctx.delta(&arg).unwrap();
                let rhs = self
                    .d_scalar(&f2)
                    .scale(&self.poisson(&f0, &f1))
                    .sub(&self.d_scalar(&f1).scale(&self.poisson(&f0, &f2)))
                    .unwrap()
                    .sub(&self.d_scalar(&self.poisson(&f1, &f2)).scale(&f0))
                    .unwrap();
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::DeltaPi => {
                let k = rng.gen_range(0..=gens);
                let a = crate::randgen::random_poly_form(rng, gens, k);
                let lhs = ctx.delta(&a).unwrap();
                let rhs = ctx.i_pi(&self.d(&a)).sub(&self.d(&ctx.i_pi(&a))).unwrap();
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::BracketAntisym => {
                let alpha = self.random_one_form(rng);
                let beta = self.random_one_form(rng);
                let sym = self
                    .ext_bracket(&alpha, &beta)
                    .unwrap()
                    .add(&self.ext_bracket(&beta, &alpha).unwrap())
                    .unwrap();
                let corr = self.d_scalar(
                    &(self.delta_scalar(&alpha) * self.delta_scalar(&beta)),
                );
                sym.sub(&corr).unwrap()
            }
            IdentityId::BracketJacobi => {
                let alphas: Vec<PolyForm> =
                    (0..3).map(|_| self.random_one_form(rng)).collect();
                let f: Vec<PolyScalar> =
                    alphas.iter().map(|a| self.delta_scalar(a)).collect();
                let mut cyc = PolyForm::zero(gens);
                for i in 0..3 {
                    let (b, c) = ((i + 1) % 3, (i + 2) % 3);
                    let inner = self.ext_bracket(&alphas[i], &alphas[b]).unwrap();
                    let term = self.ext_bracket(&inner, &alphas[c]).unwrap();
                    cyc = cyc.add(&term).unwrap();
                }
                // corrections: δ(f₁·df₂∧df₃) + d(f₁·{f₂,f₃})
                let arg = self
                    .d_scalar(&f[1])
                    .wedge(&self.d_scalar(&f[2]))
                    .unwrap()
                    .scale(&f[0]);
                let corr1 = ctx.delta(&arg).unwrap();
                let corr2 =
                    self.d_scalar(&(f[0].clone() * self.poisson(&f[1], &f[2])));
                cyc.sub(&corr1).unwrap().sub(&corr2).unwrap()
            }
            IdentityId::Cyclic4Term => {
                // α(v)ωⁿ/n! = α∧i_vω∧ω^{n−1}/(n−1)!
                let alpha = self.random_one_form(rng);
                let v = self.random_vf(rng);
                let liou = ctx.liouville().clone();
                let lhs = liou.scale(&self.eval_one_form(&alpha, &v));
                let rhs = alpha
                    .wedge(&self.omega().interior(&v).unwrap())
                    .unwrap()
                    .wedge(&self.omega_power(self.n - 1))
                    .unwrap();
                let d1 = lhs.sub(&rhs).unwrap();
                if !d1.is_zero() {
                    return d1;
                }
                // Σ_cycl α(v₁)ω(v₂,v₃)ωⁿ/n! = α∧i_{v₁}ω∧i_{v₂}ω∧i_{v₃}ω∧ω^{n−2}/(n−2)!
                let vs: Vec<PolyVectorField> = (0..3).map(|_| self.random_vf(rng)).collect();
                let mut lhs = PolyForm::zero(gens);
                for i in 0..3 {
                    let (a, b, c) = (i, (i + 1) % 3, (i + 2) % 3);
                    let coeff = self.eval_one_form(&alpha, &vs[a])
                        * self.omega_pair(&vs[b], &vs[c]);
                    lhs = lhs.add(&ctx.liouville().scale(&coeff)).unwrap();
                }
                let rhs = if self.n >= 2 {
                    let mut r = alpha.clone();
                    for v in &vs {
                        r = r.wedge(&self.omega().interior(v).unwrap()).unwrap();
                    }
                    r.wedge(&self.omega_power(self.n - 2)).unwrap()
                } else {
                    PolyForm::zero(gens)
                };
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::CommutatorExact => {
                let g = self.random_poly(rng);
                let h = self.random_poly(rng);
                let lhs = ctx.liouville().scale(&self.poisson(&g, &h));
                let rhs = self
                    .d_scalar(&g)
                    .wedge(&self.d_scalar(&h))
                    .unwrap()
                    .wedge(&self.omega_power(self.n - 1))
                    .unwrap();
                lhs.sub(&rhs).unwrap()
            }
            IdentityId::ClosedAlphaExactness => {
                // closed α (= dh on the chart): α∧*δF = d(α∧*F) for 2-forms F
                let h = self.random_poly(rng);
                let alpha = self.d_scalar(&h);
                let f = crate::randgen::random_poly_form(rng, gens, 2);
                let lhs = alpha.wedge(&ctx.star(&ctx.delta(&f).unwrap()).unwrap()).unwrap();
                let rhs = self.d(&alpha.wedge(&ctx.star(&f).unwrap()).unwrap());
                lhs.sub(&rhs).unwrap()
            }
        }
    }

    pub fn verify_identity(
        &self,
        name: &str,
        rng: &mut ChaCha8Rng,
    ) -> Result<PolyForm, DarbouxError> {
        Ok(self.identity_defect(IdentityId::parse(name)?, rng))
    }

    /// Constructive witness for dΩ⁰ ⊆ δΩ²: δ(−*(f·ω^{n−1}/(n−1)!)) = df.
    pub fn exact_to_delta_defect(&self, f: &PolyScalar) -> PolyForm {
        let ctx = self.context();
        let arg = ctx
            .star(&self.omega_power(self.n - 1).scale(f))
            .unwrap()
            .neg();
        ctx.delta(&arg).unwrap().sub(&self.d_scalar(f)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randgen;

    #[test]
    fn hamiltonian_fields() {
        let ch = DarbouxChart::new(1);
        let q = PolyScalar::var(0);
        let p = PolyScalar::var(1);
        // X_q = ∂p, X_p = −∂q, X_const = 0
        assert_eq!(ch.ham_vf(&q), vec![PolyScalar::zero(), PolyScalar::one()]);
        assert_eq!(ch.ham_vf(&p), vec![-PolyScalar::one(), PolyScalar::zero()]);
        assert!(ch
            .ham_vf(&PolyScalar::constant(crate::scalar::rat_int(5)))
            .iter()
            .all(|c| c.is_zero()));
        // df = −i_{X_f}ω identically on random f
        let mut rng = randgen::rng(randgen::DEFAULT_SEED);
        for _ in 0..50 {
            let f = ch.random_poly(&mut rng);
            let defect = ch
                .d_scalar(&f)
                .add(&ch.omega().interior(&ch.ham_vf(&f)).unwrap())
                .unwrap();
            assert!(defect.is_zero());
        }
    }

    #[test]
    fn poisson_basics() {
        let ch = DarbouxChart::new(1);
        let q = PolyScalar::var(0);
        let p = PolyScalar::var(1);
        assert_eq!(ch.poisson(&q, &p), PolyScalar::one());
        assert!(ch.poisson(&q, &q).is_zero());
        // {q², p} = 2q
        let two_q = PolyScalar::constant(crate::scalar::rat_int(2)) * q.clone();
        assert_eq!(ch.poisson(&(q.clone() * q.clone()), &p), two_q);
        // {f,g} = ω(X_f, X_g)
        let mut rng = randgen::rng(1);
        for _ in 0..30 {
            let f = ch.random_poly(&mut rng);
            let g = ch.random_poly(&mut rng);
            assert_eq!(
                ch.poisson(&f, &g),
                ch.omega_pair(&ch.ham_vf(&f), &ch.ham_vf(&g))
            );
        }
    }

    #[test]
    fn jacobi_identity() {
        let ch = DarbouxChart::new(2);
        let mut rng = randgen::rng(2);
        for _ in 0..30 {
            let f = ch.random_poly(&mut rng);
            let g = ch.random_poly(&mut rng);
            let h = ch.random_poly(&mut rng);
            let jac = ch.poisson(&f, &ch.poisson(&g, &h))
                + ch.poisson(&g, &ch.poisson(&h, &f))
                + ch.poisson(&h, &ch.poisson(&f, &g));
            assert!(jac.is_zero());
        }
    }

    #[test]
    fn ham_vf_is_bracket_homomorphism() {
        let ch = DarbouxChart::new(1);
        let mut rng = randgen::rng(3);
        for _ in 0..20 {
            let f = ch.random_poly(&mut rng);
            let g = ch.random_poly(&mut rng);
            let lhs = ch.ham_vf(&ch.poisson(&f, &g));
            let rhs = ch.vf_commutator(&ch.ham_vf(&f), &ch.ham_vf(&g));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn ext_bracket_examples() {
        let ch = DarbouxChart::new(1);
        let q = PolyScalar::var(0);
        let p = PolyScalar::var(1);
        let dq = PolyForm::generator(2, 0).unwrap();
        let dp = PolyForm::generator(2, 1).unwrap();
        // β = q·dp has δβ = 1, so any bracket against it vanishes
        let beta = dp.scale(&q);
        let alpha = ch.random_one_form(&mut randgen::rng(4));
        assert!(ch.ext_bracket(&alpha, &beta).unwrap().is_zero());
        // α = q²dp, β = p²dq → −4q·dp
        let a = dp.scale(&(q.clone() * q.clone()));
        let b = dq.scale(&(p.clone() * p.clone()));
        let expected = dp.scale(&(PolyScalar::constant(crate::scalar::rat_int(-4)) * q.clone()));
        assert_eq!(ch.ext_bracket(&a, &b).unwrap(), expected);
        // δ[[α,β]] = {δα, δβ}
        let mut rng = randgen::rng(5);
        for _ in 0..30 {
            let alpha = ch.random_one_form(&mut rng);
            let beta = ch.random_one_form(&mut rng);
            let lhs = ch.delta_scalar(&ch.ext_bracket(&alpha, &beta).unwrap());
            let rhs = ch.poisson(&ch.delta_scalar(&alpha), &ch.delta_scalar(&beta));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn identity_suite_small() {
        // smoke run; the full 200-case runs live in the acceptance tests
        for n in [1usize, 2] {
            let ch = DarbouxChart::new(n);
            let mut rng = randgen::rng(randgen::DEFAULT_SEED);
            for id in IdentityId::ALL {
                for case in 0..10 {
                    let defect = ch.identity_defect(id, &mut rng);
                    assert!(
                        defect.is_zero(),
                        "identity {} failed in 2n={} case {}: {}",
                        id.name(),
                        2 * n,
                        case,
                        defect
                    );
                }
            }
        }
    }

    #[test]
    fn exact_forms_are_delta_exact() {
        for n in [1usize, 2] {
            let ch = DarbouxChart::new(n);
            let mut rng = randgen::rng(6);
            for _ in 0..20 {
                let f = ch.random_poly(&mut rng);
                assert!(ch.exact_to_delta_defect(&f).is_zero());
            }
        }
    }

    #[test]
    fn unknown_identity_rejected() {
        let ch = DarbouxChart::new(1);
        let mut rng = randgen::rng(0);
        assert!(ch.verify_identity("nope", &mut rng).is_err());
        assert!(ch.verify_identity("(b)", &mut rng).is_ok());
    }
}
