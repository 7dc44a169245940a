//! Finite algebras given by operation tables.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::model::{Domain, EvalError, Model};
use super::term::{BinOp, Const, UnOp};
use crate::structure::ClassTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("carrier is empty or has duplicate labels")]
    Carrier,
    #[error("table `{0}` is not a total {1}x{1} table over the carrier")]
    Table(&'static str, usize),
    #[error("unknown carrier element `{0}`")]
    UnknownElement(String),
    #[error("derived domain table {derived:?} differs from the given one {given:?}")]
    DomainMismatch { derived: Vec<String>, given: Vec<String> },
    #[error("invalid algebra json: {0}")]
    Json(String),
}

/// Serialized layout; table entries and constants are carrier labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub name: String,
    pub carrier: Vec<String>,
    pub join: Vec<Vec<String>>,
    pub meet: Vec<Vec<String>>,
    pub seq: Vec<Vec<String>>,
    pub par: Vec<Vec<String>>,
    pub zero: String,
    pub one_sigma: String,
    pub one_pi: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub univ: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub co_one_pi: Option<String>,
    /// Domain column, checked against `(x·1π)‖1σ` when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<String>>,
}

/// A finite algebra over carrier indices `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    carrier: Vec<String>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    seq: Vec<Vec<usize>>,
    par: Vec<Vec<usize>>,
    zero: usize,
    one_sigma: usize,
    one_pi: usize,
    univ: Option<usize>,
    co_one_pi: Option<usize>,
    domain: Vec<usize>,
}

impl FiniteAlgebra {
    pub fn from_json(raw: &AlgebraJson) -> Result<Self, AlgebraError> {
        let k = raw.carrier.len();
        let mut seen = raw.carrier.clone();
        seen.sort();
        seen.dedup();
        if k == 0 || seen.len() != k {
            return Err(AlgebraError::Carrier);
        }
        let index = |label: &str| {
            raw.carrier
                .iter()
                .position(|c| c == label)
                .ok_or_else(|| AlgebraError::UnknownElement(label.to_string()))
        };
        let table = |name: &'static str, t: &[Vec<String>]| -> Result<Vec<Vec<usize>>, AlgebraError> {
            if t.len() != k || t.iter().any(|row| row.len() != k) {
                return Err(AlgebraError::Table(name, k));
            }
            t.iter().map(|row| row.iter().map(|e| index(e)).collect()).collect()
        };
        let mut alg = FiniteAlgebra {
            name: raw.name.clone(),
            carrier: raw.carrier.clone(),
            join: table("join", &raw.join)?,
            meet: table("meet", &raw.meet)?,
            seq: table("seq", &raw.seq)?,
            par: table("par", &raw.par)?,
            zero: index(&raw.zero)?,
            one_sigma: index(&raw.one_sigma)?,
            one_pi: index(&raw.one_pi)?,
            univ: raw.univ.as_deref().map(index).transpose()?,
            co_one_pi: raw.co_one_pi.as_deref().map(index).transpose()?,
            domain: Vec::new(),
        };
        alg.domain = alg.derived_domain();
        if let Some(given) = &raw.domain {
            let given_idx: Vec<usize> = given.iter().map(|e| index(e)).collect::<Result<_, _>>()?;
            if given_idx.len() != k || given_idx != alg.domain {
                return Err(AlgebraError::DomainMismatch {
                    derived: alg.domain.iter().map(|&i| alg.carrier[i].clone()).collect(),
                    given: given.clone(),
                });
            }
        }
        Ok(alg)
    }

    pub fn from_json_str(text: &str) -> Result<Self, AlgebraError> {
        let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))?;
        FiniteAlgebra::from_json(&raw)
    }

    pub fn to_json(&self) -> AlgebraJson {
        let labels = |t: &Vec<Vec<usize>>| -> Vec<Vec<String>> {
            t.iter().map(|row| row.iter().map(|&i| self.carrier[i].clone()).collect()).collect()
        };
        AlgebraJson {
            name: self.name.clone(),
            carrier: self.carrier.clone(),
            join: labels(&self.join),
            meet: labels(&self.meet),
            seq: labels(&self.seq),
            par: labels(&self.par),
            zero: self.carrier[self.zero].clone(),
            one_sigma: self.carrier[self.one_sigma].clone(),
            one_pi: self.carrier[self.one_pi].clone(),
            univ: self.univ.map(|i| self.carrier[i].clone()),
            co_one_pi: self.co_one_pi.map(|i| self.carrier[i].clone()),
            domain: Some(self.domain.iter().map(|&i| self.carrier[i].clone()).collect()),
        }
    }

    /// The four-element chain `0 < 1π < 1σ < a` with `+` as max and `⊓` as min.
    pub fn builtin() -> Self {
        let chain = ["0", "1p", "1s", "a"];
        let lattice = |pick: fn(usize, usize) -> usize| -> Vec<Vec<String>> {
            (0..4).map(|i| (0..4).map(|j| chain[pick(i, j)].to_string()).collect()).collect()
        };
        let rows = |t: [[&str; 4]; 4]| -> Vec<Vec<String>> {
            t.iter().map(|row| row.iter().map(|s| s.to_string()).collect()).collect()
        };
        let raw = AlgebraJson {
            name: "builtin".to_string(),
            carrier: chain.iter().map(|s| s.to_string()).collect(),
            join: lattice(usize::max),
            meet: lattice(usize::min),
            seq: rows([
                ["0", "0", "0", "0"],
                ["0", "1p", "1p", "1p"],
                ["0", "1p", "1s", "a"],
                ["1p", "1p", "a", "a"],
            ]),
            par: rows([
                ["0", "0", "0", "0"],
                ["0", "1p", "1s", "a"],
                ["0", "1s", "1s", "a"],
                ["0", "a", "a", "a"],
            ]),
            zero: "0".to_string(),
            one_sigma: "1s".to_string(),
            one_pi: "1p".to_string(),
            univ: None,
            co_one_pi: None,
            domain: Some(["0", "1s", "1s", "1s"].iter().map(|s| s.to_string()).collect()),
        };
        FiniteAlgebra::from_json(&raw).expect("builtin tables are consistent")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &[String] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.carrier
            .iter()
            .position(|c| c == label)
            .ok_or_else(|| AlgebraError::UnknownElement(label.to_string()))
    }

    pub fn seq(&self, x: usize, y: usize) -> usize {
        self.seq[x][y]
    }

    pub fn par(&self, x: usize, y: usize) -> usize {
        self.par[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    /// `d(x)`, derived as `(x·1π)‖1σ`.
    pub fn d(&self, x: usize) -> usize {
        self.domain[x]
    }

    /// The derived domain column.
    pub fn domain_table(&self) -> Vec<String> {
        self.domain.iter().map(|&i| self.carrier[i].clone()).collect()
    }

    fn derived_domain(&self) -> Vec<usize> {
        (0..self.len())
            .map(|x| self.par[self.seq[x][self.one_pi]][self.one_sigma])
            .collect()
    }

    fn members(&self, sort: ClassTag) -> Result<Vec<usize>, EvalError> {
        Ok((0..self.len())
            .filter(|&x| match sort {
                ClassTag::SeqSubid => self.domain[x] == x,
                ClassTag::Terminal => self.seq[x][self.one_pi] == x,
                _ => true,
            })
            .collect())
    }

    fn unsupported(&self, what: impl Into<String>) -> EvalError {
        EvalError::Unsupported { model: format!("algebra {}", self.name), what: what.into() }
    }
}

/// The elements of one sort of a finite algebra.
#[derive(Clone, Debug)]
pub struct CarrierDomain(Vec<usize>);

impl Domain for CarrierDomain {
    type Elem = usize;

    fn size(&self) -> u128 {
        self.0.len() as u128
    }

    fn nth(&self, index: u64) -> usize {
        self.0[index as usize]
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> usize {
        self.0[rng.random_range(0..self.0.len())]
    }
}

impl Model for FiniteAlgebra {
    type Elem = usize;
    type Dom = CarrierDomain;

    fn label(&self) -> String {
        format!("algebra {}", self.name)
    }

    fn domain(&self, sort: ClassTag) -> Result<CarrierDomain, EvalError> {
        match sort {
            ClassTag::SeqSubid | ClassTag::Terminal | ClassTag::General => Ok(CarrierDomain(self.members(sort)?)),
            _ => Err(self.unsupported(format!("sort {sort}"))),
        }
    }

    fn in_sort(&self, x: &usize, sort: ClassTag) -> Result<bool, EvalError> {
        Ok(*x < self.len() && Model::domain(self, sort)?.0.contains(x))
    }

    fn constant(&self, c: Const) -> Result<usize, EvalError> {
        match c {
            Const::Zero => Ok(self.zero),
            Const::OneSigma => Ok(self.one_sigma),
            Const::OnePi => Ok(self.one_pi),
            Const::Univ => self.univ.ok_or_else(|| self.unsupported("U")),
            Const::CoOnePi => self.co_one_pi.ok_or_else(|| self.unsupported("n1p")),
        }
    }

    fn unary(&self, op: UnOp, x: &usize) -> Result<usize, EvalError> {
        match op {
            UnOp::Domain => Ok(self.domain[*x]),
            other => Err(self.unsupported(other.function_name())),
        }
    }

    fn binary(&self, op: BinOp, x: &usize, y: &usize) -> Result<usize, EvalError> {
        match op {
            BinOp::Union => Ok(self.join[*x][*y]),
            BinOp::Meet => Ok(self.meet[*x][*y]),
            BinOp::Seq => Ok(self.seq[*x][*y]),
            BinOp::Par => Ok(self.par[*x][*y]),
            // ⟨x⟩p = d(x·p)
            BinOp::Diamond => Ok(self.domain[self.seq[*x][*y]]),
            other => Err(self.unsupported(format!("{other:?}"))),
        }
    }

    fn leq(&self, x: &usize, y: &usize) -> bool {
        self.join[*x][*y] == *y
    }

    fn to_json(&self, x: &usize) -> serde_json::Value {
        serde_json::Value::String(self.carrier[*x].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_domain_matches_printed_column() {
        let alg = FiniteAlgebra::builtin();
        assert_eq!(alg.domain_table(), vec!["0", "1s", "1s", "1s"]);
        let a = alg.index_of("a").unwrap();
        let p = alg.index_of("1p").unwrap();
        assert_eq!(alg.seq(alg.par(a, p), alg.d(0)), p);
    }

    #[test]
    fn json_round_trip() {
        let alg = FiniteAlgebra::builtin();
        let text = serde_json::to_string(&alg.to_json()).unwrap();
        assert_eq!(FiniteAlgebra::from_json_str(&text).unwrap(), alg);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut raw = FiniteAlgebra::builtin().to_json();
        raw.seq[0].pop();
        assert_eq!(FiniteAlgebra::from_json(&raw), Err(AlgebraError::Table("seq", 4)));
        let mut raw = FiniteAlgebra::builtin().to_json();
        raw.par[1][1] = "b".into();
        assert!(matches!(FiniteAlgebra::from_json(&raw), Err(AlgebraError::UnknownElement(_))));
        let mut raw = FiniteAlgebra::builtin().to_json();
        raw.domain = Some(vec!["0".into(), "1p".into(), "1s".into(), "1s".into()]);
        assert!(matches!(FiniteAlgebra::from_json(&raw), Err(AlgebraError::DomainMismatch { .. })));
        let mut raw = FiniteAlgebra::builtin().to_json();
        raw.carrier[1] = "0".into();
        assert_eq!(FiniteAlgebra::from_json(&raw), Err(AlgebraError::Carrier));
    }

    #[test]
    fn sorts() {
        let alg = FiniteAlgebra::builtin();
        assert_eq!(Model::domain(&alg, ClassTag::SeqSubid).unwrap().0, vec![0, 2]);
        assert_eq!(Model::domain(&alg, ClassTag::Terminal).unwrap().0, vec![0, 1]);
        assert!(Model::domain(&alg, ClassTag::Vector).is_err());
    }
}
