//! JSON serialization of finite models. Rationals travel as strings "p/q"
//! (or "p") so downstream consumers never coerce to floats; generator
//! indices are 1-based in the file format.

use crate::ce::CEModel;
use crate::exterior::{GradedForm, MultiIndex};
use crate::scalar::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("index {0} out of range (1..={1})")]
    BadIndex(usize, usize),
    #[error("repeated index in term {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("term must have exactly two indices, got {0:?}")]
    NotDegreeTwo(Vec<usize>),
    #[error("unknown generator {0:?} in differential table")]
    UnknownGenerator(String),
    #[error("declared vol {0} does not match computed Liouville coefficient {1}")]
    VolMismatch(String, String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub fn parse_rational(s: &str) -> Result<Rat, ModelFileError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| ModelFileError::BadRational(s.to_string()))?;
    let den = BigInt::from_str(den).map_err(|_| ModelFileError::BadRational(s.to_string()))?;
    if den.is_zero() {
        return Err(ModelFileError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(num, den))
}

pub fn format_rational(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One signed term of a 2-form: coefficient times e_i∧e_j (1-based indices,
/// any order; a reversed pair flips the sign).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FormTerm {
    pub coeff: String,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModelFile {
    pub name: String,
    pub generators: Vec<String>,
    pub d: BTreeMap<String, Vec<FormTerm>>,
    pub omega: Vec<FormTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vol: Option<String>,
}

fn terms_to_form(
    gens: usize,
    terms: &[FormTerm],
) -> Result<GradedForm<Rat>, ModelFileError> {
    let mut form = GradedForm::zero(gens);
    for term in terms {
        if term.indices.len() != 2 {
            return Err(ModelFileError::NotDegreeTwo(term.indices.clone()));
        }
        let (i, j) = (term.indices[0], term.indices[1]);
        for &x in &[i, j] {
            if x == 0 || x > gens {
                return Err(ModelFileError::BadIndex(x, gens));
            }
        }
        if i == j {
            return Err(ModelFileError::RepeatedIndex(term.indices.clone()));
        }
        let mut c = parse_rational(&term.coeff)?;
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        if i > j {
            c = -c;
        }
        let t = GradedForm::from_terms(
            gens,
            [(MultiIndex::new(vec![a - 1, b - 1]).expect("increasing"), c)],
        )
        .expect("validated indices");
        form = form.add(&t).expect("same context");
    }
    Ok(form)
}

fn form_to_terms(form: &GradedForm<Rat>) -> Vec<FormTerm> {
    form.terms()
        .map(|(idx, c)| FormTerm {
            coeff: format_rational(c),
            indices: idx.indices().iter().map(|&i| i + 1).collect(),
        })
        .collect()
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self, ModelFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_model(&self) -> Result<CEModel, ModelFileError> {
        let gens = self.generators.len();
        for name in self.d.keys() {
            if !self.generators.contains(name) {
                return Err(ModelFileError::UnknownGenerator(name.clone()));
            }
        }
        let mut d_table = Vec::with_capacity(gens);
        for g in &self.generators {
            let terms = self.d.get(g).map(Vec::as_slice).unwrap_or(&[]);
            d_table.push(terms_to_form(gens, terms)?);
        }
        let omega = terms_to_form(gens, &self.omega)?;
        let model = CEModel::new(self.name.clone(), self.generators.clone(), d_table, omega);
        if let Some(vol) = &self.vol {
            let declared = parse_rational(vol)?;
            if declared != model.vol {
                return Err(ModelFileError::VolMismatch(
                    format_rational(&declared),
                    format_rational(&model.vol),
                ));
            }
        }
        Ok(model)
    }

    pub fn from_model(model: &CEModel) -> Self {
        let mut d = BTreeMap::new();
        for (name, dg) in model.gen_names.iter().zip(&model.d_table) {
            if !dg.is_zero() {
                d.insert(name.clone(), form_to_terms(dg));
            }
        }
        ModelFile {
            name: model.name.clone(),
            generators: model.gen_names.clone(),
            d,
            omega: form_to_terms(&model.omega),
            vol: Some(format_rational(&model.vol)),
        }
    }
}
