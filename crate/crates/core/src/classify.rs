//! The classification maps: from cohomology data (pairing matrix, alternating
//! 4-tensor, volume, compactness) to the H¹/H² reports for the four Lie
//! algebras of a symplectic manifold, including the transgression kernels and
//! the puncturing construction.

use crate::ce::CEModel;
use crate::linalg::RatMatrix;
use crate::scalar::{Rat, rat_int};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("pairing matrix is not antisymmetric")]
    NonAntisymmetricP,
    #[error("4-tensor is not alternating")]
    NonAlternatingQ,
    #[error("volume must be positive")]
    NonPositiveVol,
    #[error("datum is already punctured")]
    AlreadyPunctured,
    #[error("transgression on punctured data is defined only on Ker B")]
    NotInKerB,
    #[error("model fails validation: {0:?}")]
    InvalidModel(Vec<String>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Compactness {
    Compact,
    PuncturedCompact,
}

/// Lie algebras whose H² the classification computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// compactly supported Poisson algebra C∞_c
    PoissonC,
    /// full Poisson algebra C∞
    Poisson,
    /// hamiltonian vector fields
    Ham,
    /// symplectic vector fields
    Sp,
}

impl Algebra {
    pub fn name(&self) -> &'static str {
        match self {
            Algebra::PoissonC => "poisson-c",
            Algebra::Poisson => "poisson",
            Algebra::Ham => "ham",
            Algebra::Sp => "sp",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H1Algebra {
    PoissonC0,
    PoissonC,
    Poisson,
    Ham,
}

impl H1Algebra {
    pub fn name(&self) -> &'static str {
        match self {
            H1Algebra::PoissonC0 => "poisson-c0",
            H1Algebra::PoissonC => "poisson-c",
            H1Algebra::Poisson => "poisson",
            H1Algebra::Ham => "ham",
        }
    }
}

/// Everything the classification theorems consume: b₁ = dim H¹, the volume,
/// the pairing P[i][j] = ∫aᵢ∧aⱼ∧ω^{n−1}/(n−1)!, the alternating 4-tensor
/// Q[i][j][k][l] = ∫aᵢ∧aⱼ∧a_k∧a_l∧ω^{n−2}/(n−2)! (zero when n < 2), the
/// compactness flag, and dim H^{2n−1}.
#[derive(Clone, Debug)]
pub struct CohomologyData {
    pub name: String,
    pub b1: usize,
    pub labels: Vec<String>,
    pub vol: Rat,
    pub p: Vec<Vec<Rat>>,
    pub q: Vec<Vec<Vec<Vec<Rat>>>>,
    pub compactness: Compactness,
    pub b_top_minus_1: usize,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub label: String,
    pub dim: usize,
    /// Kernel bases in aᵢ coordinates where applicable; empty otherwise.
    pub basis: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug)]
pub struct H2Report {
    pub algebra: Algebra,
    pub total_dim: usize,
    pub components: Vec<Component>,
}

#[derive(Clone, Debug)]
pub struct H1Report {
    pub algebra: H1Algebra,
    pub dim: usize,
}

fn zero_q(b1: usize) -> Vec<Vec<Vec<Vec<Rat>>>> {
    vec![vec![vec![vec![Rat::zero(); b1]; b1]; b1]; b1]
}

impl CohomologyData {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        vol: Rat,
        p: Vec<Vec<Rat>>,
        q: Vec<Vec<Vec<Vec<Rat>>>>,
        b_top_minus_1: usize,
    ) -> Result<Self, ClassifyError> {
        let data = CohomologyData {
            name: name.into(),
            b1: labels.len(),
            labels,
            vol,
            p,
            q,
            compactness: Compactness::Compact,
            b_top_minus_1,
        };
        data.validate()?;
        Ok(data)
    }

    pub fn validate(&self) -> Result<(), ClassifyError> {
        let b1 = self.b1;
        if self.vol <= Rat::zero() {
            return Err(ClassifyError::NonPositiveVol);
        }
        for i in 0..b1 {
            for j in 0..b1 {
                if self.p[i][j] != -self.p[j][i].clone() {
                    return Err(ClassifyError::NonAntisymmetricP);
                }
            }
        }
        // alternating under adjacent transpositions (generates all of S₄)
        for i in 0..b1 {
            for j in 0..b1 {
                for k in 0..b1 {
                    for l in 0..b1 {
                        let v = &self.q[i][j][k][l];
                        if *v != -self.q[j][i][k][l].clone()
                            || *v != -self.q[i][k][j][l].clone()
                            || *v != -self.q[i][j][l][k].clone()
                        {
                            return Err(ClassifyError::NonAlternatingQ);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_compact(&self) -> bool {
        self.compactness == Compactness::Compact
    }

    /// Extract the data from a validated finite model: pairings are read off
    /// as the μ-coefficient of the top-degree wedge (∫μ = 1).
    pub fn from_ce_model(model: &CEModel) -> Result<Self, ClassifyError> {
        let report = model.validate();
        if !report.passed() {
            return Err(ClassifyError::InvalidModel(report.failures));
        }
        let n = model.n();
        let gens = model.gens();
        let h1 = model.h1_basis();
        let b1 = h1.len();
        let mu = model.mu();
        let labels: Vec<String> = h1
            .iter()
            .map(|form| {
                // single-generator representatives get their generator name
                let mut terms = form.terms();
                match (terms.next(), terms.next()) {
                    (Some((idx, c)), None) if idx.degree() == 1 && *c == rat_int(1) => {
                        model.gen_names[idx.indices()[0]].clone()
                    }
                    _ => format!("{}", form),
                }
            })
            .collect();
        let om_nm1 = model.omega.power_over_factorial(n - 1).expect("context");
        let mut p = vec![vec![Rat::zero(); b1]; b1];
        for i in 0..b1 {
            for j in 0..b1 {
                p[i][j] = h1[i]
                    .wedge(&h1[j])
                    .expect("context")
                    .wedge(&om_nm1)
                    .expect("context")
                    .coefficient_of(&mu);
            }
        }
        let mut q = zero_q(b1);
        if n >= 2 {
            let om_nm2 = model.omega.power_over_factorial(n - 2).expect("context");
            for i in 0..b1 {
                for j in 0..b1 {
                    for k in 0..b1 {
                        for l in 0..b1 {
                            q[i][j][k][l] = h1[i]
                                .wedge(&h1[j])
                                .expect("context")
                                .wedge(&h1[k])
                                .expect("context")
                                .wedge(&h1[l])
                                .expect("context")
                                .wedge(&om_nm2)
                                .expect("context")
                                .coefficient_of(&mu);
                        }
                    }
                }
            }
        }
        Ok(CohomologyData {
            name: model.name.clone(),
            b1,
            labels,
            vol: model.vol.clone(),
            p,
            q,
            compactness: Compactness::Compact,
            b_top_minus_1: model.betti(gens - 1),
        })
    }

    /// Remove a point: H¹ data carries over verbatim (the pullback is an
    /// isomorphism identifying H¹_c with H¹); only the flag changes.
    pub fn puncture(&self) -> Result<Self, ClassifyError> {
        if self.compactness == Compactness::PuncturedCompact {
            return Err(ClassifyError::AlreadyPunctured);
        }
        let mut out = self.clone();
        out.name = format!("punctured-{}", self.name);
        out.compactness = Compactness::PuncturedCompact;
        Ok(out)
    }

    fn p_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.p.clone())
    }

    /// Q contracted with a vector in the first slot, as an alternating
    /// 3-tensor (dense b1³ array).
    fn q_contract(&self, a: &[Rat]) -> Vec<Vec<Vec<Rat>>> {
        let b1 = self.b1;
        let mut out = vec![vec![vec![Rat::zero(); b1]; b1]; b1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for j in 0..b1 {
                for k in 0..b1 {
                    for l in 0..b1 {
                        out[j][k][l] += ai * &self.q[i][j][k][l];
                    }
                }
            }
        }
        out
    }

    fn pair(&self, a: &[Rat], i: usize) -> Rat {
        a.iter()
            .enumerate()
            .map(|(k, ak)| ak * &self.p[k][i])
            .sum()
    }

    /// The transgression tensor T(a) on the H¹ basis. Compact:
    /// T(a)(b₁,b₂,b₃) = Q(a,b₁,b₂,b₃) − (1/vol)Σ_cycl(a,b₁)(b₂,b₃).
    /// Punctured: T(a) = Q(a,·,·,·), defined only for a ∈ Ker B.
    pub fn transgression(&self, a: &[Rat]) -> Result<Vec<Vec<Vec<Rat>>>, ClassifyError> {
        let b1 = self.b1;
        let mut t = self.q_contract(a);
        match self.compactness {
            Compactness::Compact => {
                let pa: Vec<Rat> = (0..b1).map(|i| self.pair(a, i)).collect();
                for j in 0..b1 {
                    for k in 0..b1 {
                        for l in 0..b1 {
                            // Σ_cycl (a,b₁)(b₂,b₃) over cyclic (j,k,l)
                            let cyc = &pa[j] * &self.p[k][l]
                                + &pa[k] * &self.p[l][j]
                                + &pa[l] * &self.p[j][k];
                            t[j][k][l] -= cyc / self.vol.clone();
                        }
                    }
                }
            }
            Compactness::PuncturedCompact => {
                let in_ker_b = (0..b1).all(|i| self.pair(a, i).is_zero());
                if !in_ker_b {
                    return Err(ClassifyError::NotInKerB);
                }
            }
        }
        Ok(t)
    }

    /// Kernel of the pairing B(a,·) in aᵢ coordinates.
    pub fn ker_b(&self) -> Vec<Vec<Rat>> {
        self.p_matrix().kernel_basis()
    }

    /// Matrix whose kernel is Ker T, rows indexed by basis triples j<k<l,
    /// columns by the chosen domain basis vectors.
    fn t_matrix(&self, domain: &[Vec<Rat>]) -> RatMatrix {
        let b1 = self.b1;
        let mut rows = Vec::new();
        let images: Vec<Vec<Vec<Vec<Rat>>>> = domain
            .iter()
            .map(|a| self.transgression(a).expect("domain inside Ker B"))
            .collect();
        for j in 0..b1 {
            for k in (j + 1)..b1 {
                for l in (k + 1)..b1 {
                    rows.push(images.iter().map(|t| t[j][k][l].clone()).collect());
                }
            }
        }
        if rows.is_empty() {
            rows.push(vec![Rat::zero(); domain.len()]);
        }
        RatMatrix::from_rows(rows)
    }

    /// Basis of Ker T in aᵢ coordinates. For punctured data the kernel is
    /// computed inside Ker B (where T is defined), so this returns a basis
    /// of Ker B ∩ Ker T.
    pub fn ker_t(&self) -> Vec<Vec<Rat>> {
        let domain: Vec<Vec<Rat>> = match self.compactness {
            Compactness::Compact => (0..self.b1)
                .map(|i| {
                    let mut v = vec![Rat::zero(); self.b1];
                    v[i] = rat_int(1);
                    v
                })
                .collect(),
            Compactness::PuncturedCompact => self.ker_b(),
        };
        if domain.is_empty() {
            return Vec::new();
        }
        self.t_matrix(&domain)
            .kernel_basis()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![Rat::zero(); self.b1];
                for (c, base) in coeffs.iter().zip(&domain) {
                    for (vi, bi) in v.iter_mut().zip(base) {
                        *vi += c * bi;
                    }
                }
                v
            })
            .collect()
    }

    /// True iff T(a) = 0 for every a (compact data).
    pub fn transgression_vanishes(&self) -> bool {
        self.ker_t().len() == self.b1
    }

    pub fn h2(&self, algebra: Algebra) -> H2Report {
        let b1 = self.b1;
        let full_basis: Vec<Vec<Rat>> = (0..b1)
            .map(|i| {
                let mut v = vec![Rat::zero(); b1];
                v[i] = rat_int(1);
                v
            })
            .collect();
        let compact = self.is_compact();
        let components = match (algebra, compact) {
            (Algebra::PoissonC, _) => vec![Component {
                label: "H¹_dR".into(),
                dim: b1,
                basis: full_basis,
            }],
            (Algebra::Poisson, true) => vec![Component {
                label: "H¹_dR".into(),
                dim: b1,
                basis: full_basis,
            }],
            (Algebra::Poisson, false) => vec![Component {
                label: "H¹_dR,c".into(),
                dim: b1,
                basis: full_basis,
            }],
            (Algebra::Ham, true) => vec![Component {
                label: "H¹_dR".into(),
                dim: b1,
                basis: full_basis,
            }],
            (Algebra::Ham, false) => vec![
                Component {
                    label: "H¹_dR,c".into(),
                    dim: b1,
                    basis: full_basis,
                },
                Component {
                    label: "KS".into(),
                    dim: 1,
                    basis: Vec::new(),
                },
            ],
            (Algebra::Sp, true) => {
                let ker = self.ker_t();
                vec![
                    Component {
                        label: "Λ²H¹*".into(),
                        dim: b1 * (b1.saturating_sub(1)) / 2,
                        basis: Vec::new(),
                    },
                    Component {
                        label: "Ker T".into(),
                        dim: ker.len(),
                        basis: ker,
                    },
                ]
            }
            (Algebra::Sp, false) => {
                let ker = self.ker_t();
                vec![
                    Component {
                        label: "Λ²H¹*".into(),
                        dim: b1 * (b1.saturating_sub(1)) / 2,
                        basis: Vec::new(),
                    },
                    Component {
                        label: "KS".into(),
                        dim: 1,
                        basis: Vec::new(),
                    },
                    Component {
                        label: "Ker B ∩ Ker T".into(),
                        dim: ker.len(),
                        basis: ker,
                    },
                ]
            }
        };
        let total_dim = components.iter().map(|c| c.dim).sum();
        H2Report {
            algebra,
            total_dim,
            components,
        }
    }

    pub fn h1(&self, algebra: H1Algebra) -> H1Report {
        let dim = match algebra {
            H1Algebra::PoissonC0 => 0,
            H1Algebra::PoissonC => 1,
            H1Algebra::Poisson => {
                if self.is_compact() {
                    1
                } else {
                    0
                }
            }
            H1Algebra::Ham => 0,
        };
        H1Report { algebra, dim }
    }

    /// Dimension of the centre of the universal central extension:
    /// dim H^{2n−1}_dR, plus one extra class for punctured data.
    pub fn center_dim(&self) -> usize {
        match self.compactness {
            Compactness::Compact => self.b_top_minus_1,
            Compactness::PuncturedCompact => self.b_top_minus_1 + 1,
        }
    }
}

/// S², which has no H¹ at all.
pub fn sphere() -> CohomologyData {
    CohomologyData::new("sphere", Vec::new(), rat_int(1), Vec::new(), zero_q(0), 0)
        .expect("trivially valid")
}

/// Closed oriented surface of genus g with the standard symplectic
/// intersection pairing on H¹ (basis a₁,b₁,…,a_g,b_g); n = 1, so Q ≡ 0.
pub fn surface(genus: usize) -> CohomologyData {
    let b1 = 2 * genus;
    let mut labels = Vec::new();
    for i in 1..=genus {
        labels.push(format!("a{}", i));
        labels.push(format!("b{}", i));
    }
    let mut p = vec![vec![Rat::zero(); b1]; b1];
    for i in 0..genus {
        p[2 * i][2 * i + 1] = rat_int(1);
        p[2 * i + 1][2 * i] = rat_int(-1);
    }
    CohomologyData::new(format!("surface{}", genus), labels, rat_int(1), p, zero_q(b1), b1)
        .expect("valid by construction")
}

/// T^{2n} entered directly (independently of the finite-model route): P has
/// ω-pair blocks, and Q(a,b,c,d) = ±1 exactly when {a,b,c,d} is a union of
/// two distinct ω-pairs, with the sign of the sorting permutation.
pub fn torus_direct(n: usize) -> CohomologyData {
    let b1 = 2 * n;
    let labels: Vec<String> = (1..=b1).map(|i| format!("e{}", i)).collect();
    let mut p = vec![vec![Rat::zero(); b1]; b1];
    for i in 0..n {
        p[2 * i][2 * i + 1] = rat_int(1);
        p[2 * i + 1][2 * i] = rat_int(-1);
    }
    let mut q = zero_q(b1);
    if n >= 2 {
        for i in 0..b1 {
            for j in 0..b1 {
                for k in 0..b1 {
                    for l in 0..b1 {
                        let mut idx = [i, j, k, l];
                        if idx.iter().collect::<std::collections::BTreeSet<_>>().len() != 4 {
                            continue;
                        }
                        // parity of the sort
                        let mut sign = 1i64;
                        for x in 0..4 {
                            for y in (x + 1)..4 {
                                if idx[x] > idx[y] {
                                    idx.swap(x, y);
                                    sign = -sign;
                                }
                            }
                        }
                        let pairs = idx[0] / 2 != idx[1] / 2
                            || idx[2] / 2 != idx[3] / 2
                            || idx[0] % 2 != 0
                            || idx[2] % 2 != 0;
                        if !pairs {
                            q[i][j][k][l] = rat_int(sign);
                        }
                    }
                }
            }
        }
    }
    CohomologyData::new(format!("torus{}-direct", b1), labels, rat_int(1), p, q, b1)
        .expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ce;

    #[test]
    fn thurston_pairings() {
        let data = CohomologyData::from_ce_model(&ce::thurston()).unwrap();
        assert_eq!(data.b1, 3);
        assert_eq!(data.labels, vec!["x*", "p*", "z*"]);
        // basis order (x*, p*, z*): (x,p) = (x,z) = 0, (z,p) = 1
        assert_eq!(data.p[0][1], rat_int(0));
        assert_eq!(data.p[0][2], rat_int(0));
        assert_eq!(data.p[2][1], rat_int(1));
        assert_eq!(data.p[1][2], rat_int(-1));
        // Q vanishes on a 3-dimensional H¹
        assert!(data
            .q
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .all(|v| v.is_zero()));
        assert_eq!(data.b_top_minus_1, 3);
    }

    #[test]
    fn thurston_reports() {
        let data = CohomologyData::from_ce_model(&ce::thurston()).unwrap();
        let sp = data.h2(Algebra::Sp);
        assert_eq!(sp.total_dim, 6);
        assert_eq!(sp.components[0].dim, 3);
        assert_eq!(sp.components[1].dim, 3);
        assert_eq!(data.ker_t().len(), 3);
        assert_eq!(data.center_dim(), 3);
        // punctured
        let pd = data.puncture().unwrap();
        assert_eq!(pd.h2(Algebra::Sp).total_dim, 5);
        assert_eq!(pd.h2(Algebra::Ham).total_dim, 4);
        assert_eq!(pd.h2(Algebra::Poisson).total_dim, 3);
        assert_eq!(pd.center_dim(), 4);
        // Ker B = span{x*}
        let kb = pd.ker_b();
        assert_eq!(kb.len(), 1);
        assert_eq!(kb[0], vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert!(pd.puncture().is_err());
    }

    #[test]
    fn torus4_transgression_cancels() {
        let data = CohomologyData::from_ce_model(&ce::torus(2)).unwrap();
        for i in 0..4 {
            let mut a = vec![rat_int(0); 4];
            a[i] = rat_int(1);
            // Q part and cyclic part are each nonzero but cancel exactly
            let q_part = data.q_contract(&a);
            assert!(q_part.iter().flatten().flatten().any(|v| !v.is_zero()));
            let t = data.transgression(&a).unwrap();
            assert!(t.iter().flatten().flatten().all(|v| v.is_zero()));
        }
        assert!(data.transgression_vanishes());
        assert_eq!(data.h2(Algebra::Sp).total_dim, 10);
    }

    #[test]
    fn direct_torus_matches_model() {
        let a = CohomologyData::from_ce_model(&ce::torus(2)).unwrap();
        let b = torus_direct(2);
        assert_eq!(a.p, b.p);
        assert_eq!(a.q, b.q);
        assert_eq!(a.vol, b.vol);
        assert_eq!(
            a.h2(Algebra::Sp).total_dim,
            b.h2(Algebra::Sp).total_dim
        );
    }

    #[test]
    fn surfaces() {
        assert_eq!(sphere().h2(Algebra::Sp).total_dim, 0);
        assert_eq!(surface(1).h2(Algebra::Sp).total_dim, 3);
        let s2 = surface(2);
        assert_eq!(s2.h2(Algebra::Sp).total_dim, 6);
        assert!(s2.ker_t().is_empty());
        let s3 = surface(3);
        assert_eq!(s3.h2(Algebra::Sp).total_dim, 15);
        assert!(s3.ker_t().is_empty());
        // surface(2): T(a₁)(b₁,a₂,b₂) = −1/vol (basis order a1,b1,a2,b2)
        let mut a = vec![rat_int(0); 4];
        a[0] = rat_int(1);
        let t = s2.transgression(&a).unwrap();
        assert_eq!(t[1][2][3], rat_int(-1));
    }

    #[test]
    fn h1_and_consistency() {
        let thurston = CohomologyData::from_ce_model(&ce::thurston()).unwrap();
        assert_eq!(thurston.h1(H1Algebra::Ham).dim, 0);
        assert_eq!(thurston.h1(H1Algebra::Poisson).dim, 1);
        assert_eq!(thurston.h1(H1Algebra::PoissonC0).dim, 0);
        let punctured = thurston.puncture().unwrap();
        assert_eq!(punctured.h1(H1Algebra::Poisson).dim, 0);
        // ham vs poisson dimension shift
        for data in [&thurston, &punctured] {
            let diff = data.h2(Algebra::Ham).total_dim as i64
                - data.h2(Algebra::Poisson).total_dim as i64;
            assert_eq!(diff, if data.is_compact() { 0 } else { 1 });
        }
    }

    #[test]
    fn invalid_data_rejected() {
        // non-antisymmetric P
        let p = vec![vec![rat_int(0), rat_int(1)], vec![rat_int(1), rat_int(0)]];
        let err = CohomologyData::new(
            "bad",
            vec!["a".into(), "b".into()],
            rat_int(1),
            p,
            zero_q(2),
            2,
        );
        assert_eq!(err.unwrap_err(), ClassifyError::NonAntisymmetricP);
    }

    #[test]
    fn punctured_transgression_domain() {
        let pd = CohomologyData::from_ce_model(&ce::thurston())
            .unwrap()
            .puncture()
            .unwrap();
        // p* is not in Ker B
        let a = vec![rat_int(0), rat_int(1), rat_int(0)];
        assert_eq!(pd.transgression(&a).unwrap_err(), ClassifyError::NotInKerB);
        // x* is, and its transgression vanishes
        let x = vec![rat_int(1), rat_int(0), rat_int(0)];
        let t = pd.transgression(&x).unwrap();
        assert!(t.iter().flatten().flatten().all(|v| v.is_zero()));
    }
}
