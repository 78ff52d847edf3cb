//! The ambient exterior derivative, abstracted over its two realizations:
//! the finite-model derivation determined by a generator table (see
//! [`crate::ce`]) and the coordinate de Rham differential acting through the
//! coefficient ring's partial derivatives.

use crate::exterior::{GradedForm, MultiIndex};
use crate::scalar::{DifferentialRing, Ring};

/// A degree +1 differential on forms over a fixed generator context.
pub trait Differential<R: Ring> {
    fn gens(&self) -> usize;
    fn d(&self, a: &GradedForm<R>) -> GradedForm<R>;
}

/// De Rham differential on a coordinate chart: generator i is the
/// differential of coordinate i, so d(c·e_I) = Σ_v (∂_v c)·e_v∧e_I.
#[derive(Clone, Debug)]
pub struct CoordinateDifferential {
    pub gens: usize,
}

impl<R: DifferentialRing> Differential<R> for CoordinateDifferential {
    fn gens(&self) -> usize {
        self.gens
    }

    fn d(&self, a: &GradedForm<R>) -> GradedForm<R> {
        let mut out = GradedForm::zero(self.gens);
        for (idx, c) in a.terms() {
            for v in 0..self.gens {
                let dc = c.partial(v);
                if dc.is_zero() {
                    continue;
                }
                let mut term = GradedForm::zero(self.gens);
                term = term
                    .add(
                        &GradedForm::from_terms(self.gens, [(MultiIndex::single(v), dc)])
                            .expect("valid index"),
                    )
                    .expect("same context");
                let tail = GradedForm::from_terms(self.gens, [(idx.clone(), R::one())])
                    .expect("valid index");
                out = out
                    .add(&term.wedge(&tail).expect("same context"))
                    .expect("same context");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyScalar;

    type PolyForm = GradedForm<PolyScalar>;

    fn dd() -> CoordinateDifferential {
        CoordinateDifferential { gens: 2 }
    }

    #[test]
    fn de_rham_basics() {
        let d = dd();
        // d(q) = dq
        let q = PolyForm::scalar(2, PolyScalar::var(0));
        let dq = PolyForm::generator(2, 0).unwrap();
        let dp = PolyForm::generator(2, 1).unwrap();
        assert_eq!(d.d(&q), dq.clone());
        // d(q·dp) = dq∧dp
        let qdp = dp.scale(&PolyScalar::var(0));
        assert_eq!(d.d(&qdp), dq.wedge(&dp).unwrap());
        // d(qp·dq) = −q·dq∧dp
        let qp = PolyScalar::var(0) * PolyScalar::var(1);
        let qpdq = dq.scale(&qp);
        assert_eq!(
            d.d(&qpdq),
            dq.wedge(&dp).unwrap().scale(&PolyScalar::var(0)).neg()
        );
        // d² = 0
        assert!(d.d(&d.d(&qdp)).is_zero());
        // d(dq∧dp) = 0
        assert!(d.d(&dq.wedge(&dp).unwrap()).is_zero());
    }
}
