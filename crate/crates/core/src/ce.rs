//! Finite models of compact symplectic manifolds: an exterior algebra on 2n
//! degree-1 generators with a derivation differential, a constant symplectic
//! 2-form, and exact cohomology by rational rank computation. Covers tori
//! and the Kodaira–Thurston nilmanifold.

use crate::diff::Differential;
use crate::exterior::{GradedForm, MultiIndex};
use crate::linalg::RatMatrix;
use crate::scalar::{rat_int, Rat};
use itertools::Itertools;
use num_traits::Zero;

pub type RatForm = GradedForm<Rat>;

/// A finite model: generator names, the differential's value on each
/// generator (a degree-2 form), the symplectic form, and the volume
/// normalization ∫μ = 1 where μ is the generator product in declaration
/// order.
#[derive(Clone, Debug)]
pub struct CEModel {
    pub name: String,
    pub gen_names: Vec<String>,
    /// d(generator i) as a degree-2 form; one entry per generator.
    pub d_table: Vec<RatForm>,
    pub omega: RatForm,
    /// Liouville coefficient: ωⁿ/n! = vol·μ. Positive for valid models.
    pub vol: Rat,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CEModel {
    /// Construct and compute the Liouville coefficient. The orientation is
    /// fixed by the generator order; a negative coefficient is a validation
    /// failure, not a silent reorientation.
    pub fn new(
        name: impl Into<String>,
        gen_names: Vec<String>,
        d_table: Vec<RatForm>,
        omega: RatForm,
    ) -> Self {
        let gens = gen_names.len();
        let n = gens / 2;
        let vol = omega
            .power_over_factorial(n)
            .map(|liou| liou.coefficient_of(&Self::mu_index(gens)))
            .unwrap_or_else(|_| Rat::zero());
        CEModel {
            name: name.into(),
            gen_names,
            d_table,
            omega,
            vol,
        }
    }

    pub fn gens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn n(&self) -> usize {
        self.gens() / 2
    }

    fn mu_index(gens: usize) -> MultiIndex {
        MultiIndex::new((0..gens).collect()).expect("increasing")
    }

    /// The orientation class: product of all generators in declaration order.
    pub fn mu(&self) -> MultiIndex {
        Self::mu_index(self.gens())
    }

    pub fn liouville(&self) -> RatForm {
        self.omega
            .power_over_factorial(self.n())
            .expect("context consistent")
    }

    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let gens = self.gens();
        if gens % 2 != 0 {
            failures.push(format!("odd generator count {}", gens));
        }
        if self.d_table.len() != gens {
            failures.push(format!(
                "differential table has {} entries for {} generators",
                self.d_table.len(),
                gens
            ));
        }
        for (i, dg) in self.d_table.iter().enumerate() {
            if dg.gens() != gens {
                failures.push(format!("d({}) over wrong context", self.gen_names[i]));
                continue;
            }
            if !dg.is_zero() && dg.homogeneous_degree() != Some(2) {
                failures.push(format!("d({}) is not a 2-form", self.gen_names[i]));
            }
            let dd = self.d(dg);
            if !dd.is_zero() {
                failures.push(format!(
                    "d² ≠ 0 on generator {}: d²  = {}",
                    self.gen_names[i], dd
                ));
            }
        }
        if !self.d(&self.omega).is_zero() {
            failures.push("dω ≠ 0".to_string());
        }
        if self.vol.is_zero() {
            failures.push("ω is degenerate: ωⁿ/n! = 0".to_string());
        } else if self.vol < Rat::zero() {
            failures.push(format!(
                "orientation mismatch: Liouville coefficient {} < 0",
                self.vol
            ));
        }
        ValidationReport { failures }
    }

    /// All degree-k multi-indices in lexicographic order — the canonical
    /// basis used for the cohomology matrices.
    pub fn basis(&self, k: usize) -> Vec<MultiIndex> {
        (0..self.gens())
            .combinations(k)
            .map(|c| MultiIndex::new(c).expect("increasing"))
            .collect()
    }

    /// Matrix of d: Λᵏ → Λᵏ⁺¹ in the canonical bases (rows = target basis).
    fn d_matrix(&self, k: usize) -> RatMatrix {
        let dom = self.basis(k);
        let codom = self.basis(k + 1);
        let pos: std::collections::BTreeMap<&MultiIndex, usize> =
            codom.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut m = RatMatrix::zero(codom.len(), dom.len());
        for (j, idx) in dom.iter().enumerate() {
            let form = GradedForm::from_terms(self.gens(), [(idx.clone(), rat_int(1))])
                .expect("valid basis index");
            for (ti, c) in self.d(&form).terms() {
                m.set(pos[ti], j, c.clone());
            }
        }
        m
    }

    pub fn betti(&self, k: usize) -> usize {
        let dim_k = self.basis(k).len();
        let rank_k = if k < self.gens() {
            self.d_matrix(k).rank()
        } else {
            0
        };
        let rank_km1 = if k > 0 { self.d_matrix(k - 1).rank() } else { 0 };
        dim_k - rank_k - rank_km1
    }

    pub fn betti_vector(&self) -> Vec<usize> {
        (0..=self.gens()).map(|k| self.betti(k)).collect()
    }

    /// Basis of closed 1-forms representing H¹ (exact 1-forms vanish in a
    /// model whose degree-0 part is the constants). Deterministic: kernel of
    /// the degree-1 differential in reduced echelon form, free generators in
    /// declaration order.
    pub fn h1_basis(&self) -> Vec<RatForm> {
        self.d_matrix(1)
            .kernel_basis()
            .into_iter()
            .map(|v| {
                GradedForm::from_terms(
                    self.gens(),
                    v.into_iter()
                        .enumerate()
                        .map(|(i, c)| (MultiIndex::single(i), c)),
                )
                .expect("valid indices")
            })
            .collect()
    }

    /// Betti numbers of the homology of δ (the degree −1 operator of the
    /// symplectic calculus) in degree k.
    pub fn canonical_betti(&self, k: usize) -> usize {
        use crate::symplectic::SymplecticContext;
        let ctx = SymplecticContext::new(self.gens(), &self.omega, self).expect("valid model");
        let dom = self.basis(k);
        let dim_k = dom.len();
        let delta_rank = |deg: usize| -> usize {
            if deg == 0 || deg > self.gens() {
                return 0;
            }
            let dom = self.basis(deg);
            let codom = self.basis(deg - 1);
            let pos: std::collections::BTreeMap<&MultiIndex, usize> =
                codom.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut m = RatMatrix::zero(codom.len(), dom.len());
            for (j, idx) in dom.iter().enumerate() {
                let form = GradedForm::from_terms(self.gens(), [(idx.clone(), rat_int(1))])
                    .expect("valid basis index");
                for (ti, c) in ctx.delta(&form).expect("homogeneous").terms() {
                    m.set(pos[ti], j, c.clone());
                }
            }
            m.rank()
        };
        dim_k - delta_rank(k) - delta_rank(k + 1)
    }
}

impl Differential<Rat> for CEModel {
    fn gens(&self) -> usize {
        self.gen_names.len()
    }

    /// The degree +1 derivation extending the generator table: for constant
    /// coefficients, d(c·e_I) = c·Σ_j (−1)^j d(e_{i_j}) ∧ e_{I∖i_j} (the
    /// degree-2 images commute past 1-forms without sign).
    fn d(&self, a: &RatForm) -> RatForm {
        let gens = self.gens();
        let mut out = RatForm::zero(gens);
        for (idx, c) in a.terms() {
            for &i in idx.indices() {
                let dg = &self.d_table[i];
                if dg.is_zero() {
                    continue;
                }
                let (rest, sign) = idx.remove(i).expect("present");
                let tail = GradedForm::from_terms(gens, [(rest, rat_int(1))]).expect("valid");
                let mut term = dg.wedge(&tail).expect("same context").scale(c);
                if sign < 0 {
                    term = term.neg();
                }
                out = out.add(&term).expect("same context");
            }
        }
        out
    }
}

/// The 2n-torus model: all differentials zero, ω pairs adjacent generators.
pub fn torus(n: usize) -> CEModel {
    let gens = 2 * n;
    let gen_names = (1..=gens).map(|i| format!("e{}", i)).collect();
    let d_table = vec![RatForm::zero(gens); gens];
    let mut omega = RatForm::zero(gens);
    for i in 0..n {
        let a = RatForm::generator(gens, 2 * i).unwrap();
        let b = RatForm::generator(gens, 2 * i + 1).unwrap();
        omega = omega.add(&a.wedge(&b).unwrap()).unwrap();
    }
    CEModel::new(format!("torus{}", gens), gen_names, d_table, omega)
}

/// The Kodaira–Thurston nilmanifold model: generators (x*, p*, z*, h*) with
/// dh* = −x*∧p* and ω = h*∧x* + z*∧p*. Declaration order chosen so the
/// Liouville coefficient is +1.
pub fn thurston() -> CEModel {
    let gens = 4;
    let names = ["x*", "p*", "z*", "h*"].map(String::from).to_vec();
    let x = RatForm::generator(gens, 0).unwrap();
    let p = RatForm::generator(gens, 1).unwrap();
    let z = RatForm::generator(gens, 2).unwrap();
    let h = RatForm::generator(gens, 3).unwrap();
    let d_table = vec![
        RatForm::zero(gens),
        RatForm::zero(gens),
        RatForm::zero(gens),
        x.wedge(&p).unwrap().neg(),
    ];
    let omega = h
        .wedge(&x)
        .unwrap()
        .add(&z.wedge(&p).unwrap())
        .unwrap();
    CEModel::new("thurston", names, d_table, omega)
}

/// All built-in finite models.
pub fn catalog() -> Vec<CEModel> {
    vec![torus(1), torus(2), torus(3), thurston()]
}
