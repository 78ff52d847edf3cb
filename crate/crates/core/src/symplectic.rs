//! Symplectic Hodge star and the canonical homology operator δ over any
//! context with a constant-coefficient symplectic form: finite models with
//! rational coefficients and coordinate charts with polynomial or
//! trigonometric coefficients.

use crate::diff::Differential;
use crate::exterior::{FormError, GradedForm};
use crate::linalg::RatMatrix;
use crate::scalar::{rat, Rat, Ring};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SymplecticError {
    #[error("symplectic form is degenerate")]
    Degenerate,
    #[error("operator requires a homogeneous form (degrees {0:?})")]
    NotHomogeneous(Vec<usize>),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// Constant symplectic structure on 2n generators: the coefficient matrix
/// ω_{μν}, its inverse ω^{μν} (the Poisson bivector), the Liouville top form
/// ωⁿ/n!, and the ambient differential.
pub struct SymplecticContext<'a, R: Ring> {
    gens: usize,
    omega_upper: RatMatrix,
    liouville: GradedForm<R>,
    diff: &'a dyn Differential<R>,
}

impl<'a, R: Ring> SymplecticContext<'a, R> {
    /// Build from the rational symplectic 2-form in the generator basis.
    pub fn new(
        gens: usize,
        omega: &GradedForm<Rat>,
        diff: &'a dyn Differential<R>,
    ) -> Result<Self, SymplecticError> {
        let mut lower = RatMatrix::zero(gens, gens);
        for (idx, c) in omega.terms() {
            let ij = idx.indices();
            assert_eq!(ij.len(), 2, "symplectic form must be a 2-form");
            lower.set(ij[0], ij[1], c.clone());
            lower.set(ij[1], ij[0], -c.clone());
        }
        let omega_upper = lower.inverse().ok_or(SymplecticError::Degenerate)?;
        let n = gens / 2;
        let liouville_rat = omega.power_over_factorial(n)?;
        if liouville_rat.is_zero() {
            return Err(SymplecticError::Degenerate);
        }
        let liouville = liouville_rat.map_coefficients(R::from_rat);
        Ok(SymplecticContext {
            gens,
            omega_upper,
            liouville,
            diff,
        })
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn n(&self) -> usize {
        self.gens / 2
    }

    /// ωⁿ/n!, the symplectic volume form.
    pub fn liouville(&self) -> &GradedForm<R> {
        &self.liouville
    }

    /// Entry ω^{μν} of the inverse matrix (the Poisson bivector).
    pub fn omega_upper(&self, mu: usize, nu: usize) -> &Rat {
        self.omega_upper.get(mu, nu)
    }

    /// Contract a form with Σ_ν ω^{μν} ∂_ν for a fixed μ.
    fn raise_contract(&self, mu: usize, form: &GradedForm<R>) -> GradedForm<R> {
        let mut out = GradedForm::zero(self.gens);
        for nu in 0..self.gens {
            let w = self.omega_upper.get(mu, nu);
            if w.is_zero() {
                continue;
            }
            let contracted = form.interior_basis(nu).expect("valid index");
            out = out
                .add(&contracted.scale(&R::from_rat(w)))
                .expect("same context");
        }
        out
    }

    /// Symplectic Hodge star on a homogeneous degree-k form: contraction of
    /// the index-raised coefficient tensor into the Liouville form,
    /// *a = a_{μ₁…μ_k} ω^{μ₁ν₁}⋯ω^{μ_kν_k} i_{∂_{ν_k}}⋯i_{∂_{ν_1}}(ωⁿ/n!)
    /// summed over sorted multi-indices (all k! orderings of a key
    /// contribute equally, absorbing the 1/k! of the symmetrized formula).
    pub fn star(&self, a: &GradedForm<R>) -> Result<GradedForm<R>, SymplecticError> {
        if a.homogeneous_degree().is_none() {
            return Err(SymplecticError::NotHomogeneous(a.degree_support()));
        }
        let mut out = GradedForm::zero(self.gens);
        for (idx, c) in a.terms() {
            // innermost contraction first: μ₁ (smallest index) acts on ωⁿ/n!
            let mut form = self.liouville.clone();
            for &mu in idx.indices() {
                form = self.raise_contract(mu, &form);
            }
            out = out.add(&form.scale(c)).expect("same context");
        }
        Ok(out)
    }

    /// Canonical homology operator δ = (−1)^{k+1} ∗d∗ on the degree-k
    /// component; applied componentwise to graded forms.
    pub fn delta(&self, a: &GradedForm<R>) -> Result<GradedForm<R>, SymplecticError> {
        let mut out = GradedForm::zero(self.gens);
        for k in a.degree_support() {
            if k == 0 {
                continue;
            }
            let part = a.homogeneous_part(k);
            let sds = self.star(&self.diff_apply(&self.star(&part)?))?;
            let signed = if k % 2 == 0 { sds.neg() } else { sds };
            out = out.add(&signed).expect("same context");
        }
        Ok(out)
    }

    fn diff_apply(&self, a: &GradedForm<R>) -> GradedForm<R> {
        self.diff.d(a)
    }

    /// The ambient differential of this context.
    pub fn d(&self, a: &GradedForm<R>) -> GradedForm<R> {
        self.diff.d(a)
    }

    /// Contraction with the Poisson bivector:
    /// i_π F = ½ Σ_{μν} ω^{μν} i_{∂_μ} i_{∂_ν} F.
    pub fn i_pi(&self, a: &GradedForm<R>) -> GradedForm<R> {
        let mut out = GradedForm::zero(self.gens);
        let half = rat(1, 2);
        for mu in 0..self.gens {
            for nu in 0..self.gens {
                let w = self.omega_upper.get(mu, nu);
                if w.is_zero() {
                    continue;
                }
                let contracted = a
                    .interior_basis(nu)
                    .and_then(|f| f.interior_basis(mu))
                    .expect("valid indices");
                let coeff = R::from_rat(&(&half * w));
                out = out.add(&contracted.scale(&coeff)).expect("same context");
            }
        }
        out
    }
}
