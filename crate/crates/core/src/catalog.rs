//! Built-in example algebras with known answers.
//!
//! Entries are JSON files embedded at compile time; setting
//! `LEFSCHETZ_CATALOG_DIR` replaces them with the `*.json` files of that directory.

use std::path::Path;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::document::{self, child, err, field, object, DocumentError};
use crate::liealg::{LieAlgebra, LieMorphism};
use crate::nilshadow::{build_shadow, SplitPresentation};
use crate::ratlin::{Matrix, Rational};

pub const CATALOG_DIR_ENV: &str = "LEFSCHETZ_CATALOG_DIR";

const BUILTIN: &[(&str, &str)] = &[
    ("abelian_1", include_str!("../catalog/abelian_1.json")),
    ("abelian_2", include_str!("../catalog/abelian_2.json")),
    ("abelian_3", include_str!("../catalog/abelian_3.json")),
    ("abelian_4", include_str!("../catalog/abelian_4.json")),
    ("filiform4", include_str!("../catalog/filiform4.json")),
    ("heisenberg3", include_str!("../catalog/heisenberg3.json")),
    ("heisenberg5", include_str!("../catalog/heisenberg5.json")),
    ("sol3", include_str!("../catalog/sol3.json")),
    ("sol4_twisted", include_str!("../catalog/sol4_twisted.json")),
    ("twist3", include_str!("../catalog/twist3.json")),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("UnknownEntry: no catalog entry named {0:?}")]
    UnknownEntry(String),
    #[error("NoGrading: catalog entry {0:?} has no grading")]
    NoGrading(String),
    #[error("catalog entry {name:?}: {source}")]
    Document { name: String, source: DocumentError },
    #[error("cannot read catalog directory: {0}")]
    Io(String),
    #[error("catalog entry {name:?} failed self-test: {reason}")]
    SelfTest { name: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    /// Positive weights `w_i` with `diag(t^w_i)` an automorphism for every rational `t`.
    pub grading: Option<Vec<u32>>,
    pub split: Option<SplitPresentation>,
    /// Named endomorphisms, sorted by name.
    pub morphisms: Vec<(String, LieMorphism)>,
    pub notes: String,
}

impl CatalogEntry {
    pub fn from_json(name_hint: &str, v: &Value) -> Result<Self, CatalogError> {
        let wrap = |source| CatalogError::Document {
            name: name_hint.to_string(),
            source,
        };
        let obj = object(v, "").map_err(wrap)?;
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(wrap(err("/name", "expected a string"))),
            None => name_hint.to_string(),
        };
        let algebra = document::parse_algebra(field(obj, "algebra", "").map_err(wrap)?, "/algebra").map_err(wrap)?;
        let grading = match obj.get("grading") {
            None | Some(Value::Null) => None,
            Some(g) => {
                let w = document::index_list(g, "/grading").map_err(wrap)?;
                if w.len() != algebra.dim() || w.contains(&0) {
                    return Err(wrap(err("/grading", "expected one positive weight per basis vector")));
                }
                Some(w.into_iter().map(|x| x as u32).collect())
            }
        };
        let split = match obj.get("split") {
            None | Some(Value::Null) => None,
            Some(s) => Some(document::parse_split(s, Some(&algebra), "/split").map_err(wrap)?),
        };
        let mut morphisms = Vec::new();
        if let Some(m) = obj.get("morphisms") {
            for (key, doc) in object(m, "/morphisms").map_err(wrap)? {
                let f = document::parse_endomorphism(doc, &algebra, &child("/morphisms", key)).map_err(wrap)?;
                morphisms.push((key.clone(), f));
            }
        }
        morphisms.sort_by(|a, b| a.0.cmp(&b.0));
        let notes = obj.get("notes").and_then(Value::as_str).unwrap_or_default().to_string();
        Ok(CatalogEntry {
            name,
            algebra,
            grading,
            split,
            morphisms,
            notes,
        })
    }

    /// The JSON document this entry was loaded from (canonical form).
    pub fn to_json(&self) -> Value {
        let morphisms: Map<String, Value> = self
            .morphisms
            .iter()
            .map(|(k, f)| (k.clone(), document::morphism_to_json(f)))
            .collect();
        let mut v = json!({
            "name": self.name,
            "algebra": document::algebra_to_json(&self.algebra),
            "morphisms": morphisms,
            "notes": self.notes,
        });
        if let Some(g) = &self.grading {
            v["grading"] = json!(g);
        }
        if let Some(s) = &self.split {
            v["split"] = json!({ "nil_ideal": s.nil_ideal, "complement": s.complement });
        }
        v
    }

    pub fn morphism(&self, name: &str) -> Option<&LieMorphism> {
        self.morphisms.iter().find(|(k, _)| k == name).map(|(_, f)| f)
    }

    /// `diag(t^w_i)` for the entry's grading.
    pub fn graded_scaling(&self, t: &Rational) -> Result<LieMorphism, CatalogError> {
        let weights = self
            .grading
            .as_ref()
            .ok_or_else(|| CatalogError::NoGrading(self.name.clone()))?;
        let diag: Vec<Rational> = weights.iter().map(|&w| num_traits::pow(t.clone(), w as usize)).collect();
        Ok(LieMorphism::endomorphism(self.algebra.clone(), Matrix::diagonal(&diag)).expect("square"))
    }

    /// Graded scaling by a seeded random `t = p/q`, `0 < |p| <= 5`, `1 <= q <= 5`.
    pub fn random_graded_endomorphism(&self, seed: u64) -> Result<LieMorphism, CatalogError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p: i64 = rng.gen_range(1..=5);
        if rng.gen_bool(0.5) {
            p = -p;
        }
        let q: i64 = rng.gen_range(1..=5);
        self.graded_scaling(&Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// Runs every validator that applies to this entry.
    pub fn self_test(&self) -> Result<(), CatalogError> {
        let fail = |reason: String| CatalogError::SelfTest {
            name: self.name.clone(),
            reason,
        };
        self.algebra.validate().map_err(|e| fail(e.to_string()))?;
        if self.grading.is_some() {
            let two = Rational::from_integer(2.into());
            self.graded_scaling(&two)?
                .check()
                .map_err(|e| fail(format!("grading: {e}")))?;
        }
        if let Some(s) = &self.split {
            build_shadow(s).map_err(|e| fail(format!("split: {e}")))?;
        }
        for (k, f) in &self.morphisms {
            f.check().map_err(|e| fail(format!("morphism {k}: {e}")))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Result<Self, CatalogError> {
        let entries = BUILTIN
            .iter()
            .map(|(name, text)| {
                let v: Value = serde_json::from_str(text).map_err(|e| CatalogError::Document {
                    name: name.to_string(),
                    source: err("", e),
                })?;
                CatalogEntry::from_json(name, &v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::sorted(entries))
    }

    pub fn from_dir(dir: &Path) -> Result<Self, CatalogError> {
        let io = |e: std::io::Error| CatalogError::Io(format!("{}: {e}", dir.display()));
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "json"))
            .collect();
        paths.sort();
        let entries = paths
            .iter()
            .map(|p| {
                let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
                let text = std::fs::read_to_string(p).map_err(io)?;
                let v: Value = serde_json::from_str(&text).map_err(|e| CatalogError::Document {
                    name: stem.clone(),
                    source: err("", e),
                })?;
                CatalogEntry::from_json(&stem, &v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::sorted(entries))
    }

    /// Embedded catalog, or the directory named by `LEFSCHETZ_CATALOG_DIR`.
    pub fn load() -> Result<Self, CatalogError> {
        match std::env::var_os(CATALOG_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Self::from_dir(Path::new(&dir)),
            _ => Self::builtin(),
        }
    }

    fn sorted(mut entries: Vec<CatalogEntry>) -> Self {
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Catalog { entries }
    }

    pub fn list(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.name.as_str()).collect()
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Result<&CatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| CatalogError::UnknownEntry(name.to_string()))
    }

    pub fn self_test(&self) -> Vec<(String, Result<(), CatalogError>)> {
        self.entries.iter().map(|e| (e.name.clone(), e.self_test())).collect()
    }
}
