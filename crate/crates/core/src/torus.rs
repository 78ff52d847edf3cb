//! Exact calculus on the standard torus T^{2n} = ℝ^{2n}/(τℤ)^{2n} with
//! ω = Σ dqⁱ∧dpⁱ: trigonometric Poisson algebra, integration with formal
//! period τ, and the 2-cocycles built from closed 1-forms, point evaluation,
//! and codimension-1 subtori, together with their coboundary relations.

use crate::diff::{CoordinateDifferential, Differential};
use crate::exterior::{GradedForm, MultiIndex};
use crate::scalar::{DifferentialRing, Rat, Ring, TauValue};
use crate::trig::TrigFunction;
use num_traits::{One, Zero};
use thiserror::Error;

pub type TrigForm = GradedForm<TrigFunction>;

#[derive(Debug, Error)]
pub enum TorusError {
    #[error("coordinate index {0} out of range for {1} coordinates")]
    BadCoordinate(usize, usize),
    #[error("unsupported angle: only 0 and τ/2 evaluate exactly")]
    UnsupportedAngle,
}

/// The torus T^{2n}; coordinates θ = (q₁..q_n, p₁..p_n), generator i of the
/// form algebra is dθ^i.
pub struct Torus {
    n: usize,
    diff: CoordinateDifferential,
}

impl Torus {
    pub fn new(n: usize) -> Self {
        Torus {
            n,
            diff: CoordinateDifferential { gens: 2 * n },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> usize {
        2 * self.n
    }

    pub fn d(&self, a: &TrigForm) -> TrigForm {
        self.diff.d(a)
    }

    pub fn d_scalar(&self, f: &TrigFunction) -> TrigForm {
        self.d(&TrigForm::scalar(self.gens(), f.clone()))
    }

    /// ω^k/k! with trig coefficients.
    pub fn omega_power(&self, k: usize) -> TrigForm {
        let gens = self.gens();
        let mut omega = TrigForm::zero(gens);
        for i in 0..self.n {
            let term = TrigForm::from_terms(
                gens,
                [(
                    MultiIndex::new(vec![i, self.n + i]).unwrap(),
                    TrigFunction::one(),
                )],
            )
            .unwrap();
            omega = omega.add(&term).unwrap();
        }
        omega.power_over_factorial(k).expect("same context")
    }

    /// Hamiltonian vector field components in the (∂q, ∂p) basis.
    pub fn ham_vf(&self, f: &TrigFunction) -> Vec<TrigFunction> {
        let n = self.n;
        let mut v = vec![TrigFunction::zero(); 2 * n];
        for i in 0..n {
            v[i] = -f.partial(n + i);
            v[n + i] = f.partial(i);
        }
        v
    }

    /// Poisson bracket {f,g} = Σ ∂qᵢf ∂pᵢg − ∂pᵢf ∂qᵢg.
    pub fn tbracket(&self, f: &TrigFunction, g: &TrigFunction) -> TrigFunction {
        let n = self.n;
        let mut out = TrigFunction::zero();
        for i in 0..n {
            out = out + f.partial(i) * g.partial(n + i) - f.partial(n + i) * g.partial(i);
        }
        out
    }

    /// ∫_X f ωⁿ/n! = (constant Fourier coefficient)·τ^{2n}.
    pub fn integrate(&self, f: &TrigFunction) -> TauValue {
        TauValue::new(f.constant_term(), 2 * self.n as i64)
    }

    /// The character λ(f) = ∫_X f ωⁿ/n!.
    pub fn character(&self, f: &TrigFunction) -> TauValue {
        self.integrate(f)
    }

    /// ⟨λ⟩(f) = (1/vol)∫f ωⁿ/n!: the τ powers cancel, leaving a rational.
    pub fn normalized_character(&self, f: &TrigFunction) -> Rat {
        f.constant_term()
    }

    /// ψ_α(X_f, X_g) = ∫ f α(X_g) ωⁿ/n! for a trig-coefficient 1-form α
    /// given by its 2n components.
    pub fn roger_form(&self, alpha: &[TrigFunction], f: &TrigFunction, g: &TrigFunction) -> TauValue {
        assert_eq!(alpha.len(), self.gens());
        let xg = self.ham_vf(g);
        let mut pairing = TrigFunction::zero();
        for (a, x) in alpha.iter().zip(&xg) {
            pairing = pairing + a.clone() * x.clone();
        }
        self.integrate(&(f.clone() * pairing))
    }

    /// ψ_α for a constant closed 1-form α = Σ a_μ dθ^μ.
    pub fn roger(&self, alpha: &[Rat], f: &TrigFunction, g: &TrigFunction) -> TauValue {
        let alpha: Vec<TrigFunction> = alpha.iter().map(|a| TrigFunction::from_rat(a)).collect();
        self.roger_form(&alpha, f, g)
    }

    /// Kostant–Souriau cocycle at basepoint θ = 0: {f,g}(0).
    pub fn ks(&self, f: &TrigFunction, g: &TrigFunction) -> Rat {
        self.tbracket(f, g).at_origin()
    }

    /// ψ_N(X_f, X_g) = ∫_N f dg ∧ ω^{n−1}/(n−1)! over the coordinate
    /// subtorus N = {θ_j = c}, c = 0 or τ/2 (`half_period`). The subtorus is
    /// oriented by the remaining coordinates in increasing order.
    pub fn singular(
        &self,
        j: usize,
        half_period: bool,
        f: &TrigFunction,
        g: &TrigFunction,
    ) -> Result<TauValue, TorusError> {
        let gens = self.gens();
        if j >= gens {
            return Err(TorusError::BadCoordinate(j, gens));
        }
        let form = self
            .d_scalar(g)
            .scale(f)
            .wedge(&self.omega_power(self.n - 1))
            .expect("same context");
        let rest: Vec<usize> = (0..gens).filter(|&i| i != j).collect();
        let top = form.coefficient_of(&MultiIndex::new(rest).unwrap());
        let restricted = top.substitute_coord(j, half_period);
        Ok(TauValue::new(
            restricted.constant_term(),
            2 * self.n as i64 - 1,
        ))
    }

    /// Chevalley–Eilenberg differential of a 2-cochain:
    /// 𝚍ψ(f,g,h) = ψ({f,g},h) − ψ({f,h},g) + ψ({g,h},f).
    pub fn cochain_differential<P>(
        &self,
        psi: P,
        f: &TrigFunction,
        g: &TrigFunction,
        h: &TrigFunction,
    ) -> TauValue
    where
        P: Fn(&TrigFunction, &TrigFunction) -> TauValue,
    {
        let fg = self.tbracket(f, g);
        let fh = self.tbracket(f, h);
        let gh = self.tbracket(g, h);
        psi(&fg, h) - psi(&fh, g) + psi(&gh, f)
    }

    /// Coboundary of a 1-cochain: 𝚍χ(f,g) = −χ({f,g}).
    pub fn coboundary1<C>(&self, chi: C, f: &TrigFunction, g: &TrigFunction) -> TauValue
    where
        C: Fn(&TrigFunction) -> TauValue,
    {
        -chi(&self.tbracket(f, g))
    }

    /// Splitting of ψ_KS on the compact torus: with
    /// χ(X_f) = f(0) − ⟨f⟩, the defect ψ_KS(f,g) + 𝚍χ(f,g) is zero.
    pub fn ks_triviality_defect(&self, f: &TrigFunction, g: &TrigFunction) -> Rat {
        let chi = |u: &TrigFunction| u.at_origin() - self.normalized_character(u);
        let bracket = self.tbracket(f, g);
        self.ks(f, g) - chi(&bracket)
    }

    /// [ψ_dh] = ⟨h⟩[ψ_KS] made exact: with χ_h(X_f) = f(0)∫h − ∫fh, the
    /// defect ψ_dh(f,g) − ∫h·ψ_KS(f,g) − 𝚍χ_h(f,g) is zero.
    pub fn exact_form_cocycle_defect(
        &self,
        h: &TrigFunction,
        f: &TrigFunction,
        g: &TrigFunction,
    ) -> TauValue {
        let gens = self.gens();
        let dh: Vec<TrigFunction> = (0..gens).map(|i| h.partial(i)).collect();
        let psi_dh = self.roger_form(&dh, f, g);
        let ks_term = self.integrate(h).scale(&self.ks(f, g));
        let chi_h = |u: &TrigFunction| {
            self.integrate(h).scale(&u.at_origin()) - self.integrate(&(u.clone() * h.clone()))
        };
        let cob = self.coboundary1(chi_h, f, g);
        psi_dh - ks_term - cob
    }

    /// Symplectic-action identity for a constant direction v:
    /// 𝚍(θ_α(v)) = ⟨α(v)⟩ψ_KS + L_vψ_α with
    /// θ_α(v)(X_f) = ∫ α(v)(f − f(0)) ωⁿ/n! and
    /// L_vψ_α(f,g) = −ψ_α(v·f, g) − ψ_α(f, v·g).
    pub fn action_identity_defect(
        &self,
        alpha: &[Rat],
        v: &[Rat],
        f: &TrigFunction,
        g: &TrigFunction,
    ) -> TauValue {
        let av: Rat = alpha.iter().zip(v).map(|(a, b)| a * b).sum();
        let theta = |u: &TrigFunction| {
            let centered = u.clone() - TrigFunction::constant(u.at_origin());
            self.integrate(&centered).scale(&av)
        };
        let lhs = self.coboundary1(theta, f, g);
        let ks_term = TauValue::new(&av * self.ks(f, g), 2 * self.n as i64);
        let lie = -self.roger(alpha, &f.directional(v), g) - self.roger(alpha, f, &g.directional(v));
        lhs - ks_term - lie
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randgen;
    use crate::scalar::{rat, rat_int};

    fn t2() -> Torus {
        Torus::new(1)
    }

    #[test]
    fn bracket_examples() {
        let t = t2();
        // {sin q, sin p} = cos q cos p
        let lhs = t.tbracket(&TrigFunction::sin_coord(0), &TrigFunction::sin_coord(1));
        let rhs = TrigFunction::cos_coord(0) * TrigFunction::cos_coord(1);
        assert_eq!(lhs, rhs);
        // {f, 1} = 0 and brackets have zero mean
        let mut rng = randgen::rng(10);
        for _ in 0..30 {
            let f = randgen::random_trig(&mut rng, 2);
            let g = randgen::random_trig(&mut rng, 2);
            assert!(t.tbracket(&f, &TrigFunction::one()).is_zero());
            assert_eq!(t.tbracket(&f, &g).constant_term(), rat_int(0));
        }
    }

    #[test]
    fn integration() {
        let t = t2();
        assert_eq!(t.integrate(&TrigFunction::one()), TauValue::new(rat_int(1), 2));
        assert!(t.integrate(&TrigFunction::cos_coord(0)).is_zero());
        let c2 = TrigFunction::cos_coord(1) * TrigFunction::cos_coord(1);
        assert_eq!(t.integrate(&c2), TauValue::new(rat(1, 2), 2));
    }

    #[test]
    fn roger_example() {
        let t = t2();
        // α = dq, f = cos p, g = sin p → −τ²/2
        let alpha = [rat_int(1), rat_int(0)];
        let f = TrigFunction::cos_coord(1);
        let g = TrigFunction::sin_coord(1);
        assert_eq!(t.roger(&alpha, &f, &g), TauValue::new(rat(-1, 2), 2));
        // zero form and constants give 0
        assert!(t.roger(&[rat_int(0), rat_int(0)], &f, &g).is_zero());
        assert!(t
            .roger(&alpha, &TrigFunction::one(), &TrigFunction::constant(rat_int(2)))
            .is_zero());
    }

    #[test]
    fn ks_examples() {
        let t = t2();
        let sq = TrigFunction::sin_coord(0);
        let sp = TrigFunction::sin_coord(1);
        let cq = TrigFunction::cos_coord(0);
        assert_eq!(t.ks(&sq, &sp), rat_int(1));
        assert_eq!(t.ks(&cq, &sp), rat_int(0));
        assert!(t.ks(&TrigFunction::constant(rat_int(3)), &sp).is_zero());
    }

    #[test]
    fn singular_examples() {
        let t = t2();
        let f = TrigFunction::cos_coord(1);
        let g = TrigFunction::sin_coord(1);
        // N = {q = 0}: ∫ cos²p dp = τ/2
        assert_eq!(
            t.singular(0, false, &f, &g).unwrap(),
            TauValue::new(rat(1, 2), 1)
        );
        // cos q·cos p reduces to the same at q = 0
        let f2 = TrigFunction::cos_coord(0) * TrigFunction::cos_coord(1);
        assert_eq!(
            t.singular(0, false, &f2, &g).unwrap(),
            TauValue::new(rat(1, 2), 1)
        );
        assert!(t
            .singular(0, false, &TrigFunction::one(), &TrigFunction::constant(rat_int(2)))
            .unwrap()
            .is_zero());
        assert!(t.singular(5, false, &f, &g).is_err());
    }

    #[test]
    fn cocycle_conditions() {
        let t = t2();
        let mut rng = randgen::rng(11);
        let alpha = [rat_int(2), rat_int(-1)];
        for _ in 0..25 {
            let f = randgen::random_trig(&mut rng, 2);
            let g = randgen::random_trig(&mut rng, 2);
            let h = randgen::random_trig(&mut rng, 2);
            let d_roger =
                t.cochain_differential(|a, b| t.roger(&alpha, a, b), &f, &g, &h);
            assert!(d_roger.is_zero(), "roger defect {}", d_roger);
            let d_ks = t.cochain_differential(
                |a, b| TauValue::new(t.ks(a, b), 0),
                &f,
                &g,
                &h,
            );
            assert!(d_ks.is_zero(), "ks defect {}", d_ks);
            for j in [0usize, 1] {
                let d_sing = t.cochain_differential(
                    |a, b| t.singular(j, false, a, b).unwrap(),
                    &f,
                    &g,
                    &h,
                );
                assert!(d_sing.is_zero(), "singular defect {}", d_sing);
            }
        }
    }

    #[test]
    fn ks_is_trivial_on_compact_torus() {
        let t = t2();
        let mut rng = randgen::rng(12);
        for _ in 0..30 {
            let f = randgen::random_trig(&mut rng, 2);
            let g = randgen::random_trig(&mut rng, 2);
            assert_eq!(t.ks_triviality_defect(&f, &g), rat_int(0));
        }
    }

    #[test]
    fn exact_form_cocycles_collapse() {
        let t = t2();
        let mut rng = randgen::rng(13);
        for _ in 0..20 {
            let h = randgen::random_trig(&mut rng, 2);
            let f = randgen::random_trig(&mut rng, 2);
            let g = randgen::random_trig(&mut rng, 2);
            let defect = t.exact_form_cocycle_defect(&h, &f, &g);
            assert!(defect.is_zero(), "defect {}", defect);
        }
    }

    #[test]
    fn action_identity() {
        let t = t2();
        let mut rng = randgen::rng(14);
        let alpha = [rat_int(1), rat_int(2)];
        for v in [[rat_int(1), rat_int(0)], [rat_int(0), rat_int(1)]] {
            for _ in 0..15 {
                let f = randgen::random_trig(&mut rng, 2);
                let g = randgen::random_trig(&mut rng, 2);
                let defect = t.action_identity_defect(&alpha, &v, &f, &g);
                assert!(defect.is_zero(), "defect {}", defect);
            }
        }
    }

    #[test]
    fn character_values() {
        let t = t2();
        assert_eq!(t.normalized_character(&TrigFunction::one()), rat_int(1));
        let f = TrigFunction::cos_coord(1) + TrigFunction::constant(rat_int(3));
        assert_eq!(t.normalized_character(&f), rat_int(3));
        let mut rng = randgen::rng(15);
        for _ in 0..20 {
            let a = randgen::random_trig(&mut rng, 2);
            let b = randgen::random_trig(&mut rng, 2);
            assert_eq!(t.normalized_character(&t.tbracket(&a, &b)), rat_int(0));
        }
    }
}
