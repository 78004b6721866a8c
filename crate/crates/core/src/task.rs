//! Task documents consumed by the command-line tool, and the commands'
//! JSON reports.
//!
//! ```json
//! { "algebra": "heisenberg3" | { ...algebra... },
//!   "map": { "matrix": [...] } | "catalog-morphism-name",
//!   "module": "trivial" | "adjoint" | { "dim": m, "actions": [...] },
//!   "intertwiner": { "matrix": [...] },
//!   "split": { "nil_ideal": [...], "complement": [...] },
//!   "linearization": "map" | "shadow" | { "matrix": [...] } }
//! ```

use serde_json::{json, Map, Value};

use crate::catalog::{Catalog, CatalogEntry};
use crate::cecomplex::{CeError, CochainComplex};
use crate::document::{self, err, object, DocumentError};
use crate::lefschetz::{twisted_lefschetz_with, LefschetzError, LefschetzReport};
use crate::liealg::{LieAlgebra, LieMorphism};
use crate::nilshadow::{build_shadow, induced_shadow_map, shadow_lefschetz, ShadowError, ShadowLefschetz, SplitPresentation};
use crate::ratlin::Matrix;
use crate::repn::{Intertwiner, Representation};
use crate::torus::{cross_check_with_ce, TorusCheck, TorusError, TorusMap};

/// Outcome classes, mapped one-to-one onto process exit codes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    /// Malformed or invalid input (exit code 2).
    #[error("{0}")]
    Invalid(DocumentError),
    /// A consistency check that valid input can never trip (exit code 3).
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Invalid(_) => 2,
            RunError::Internal(_) => 3,
        }
    }
}

impl From<DocumentError> for RunError {
    fn from(e: DocumentError) -> Self {
        RunError::Invalid(e)
    }
}

fn classify_lefschetz(path: &str, e: LefschetzError) -> RunError {
    if e.is_internal() {
        RunError::Internal(e.to_string())
    } else {
        RunError::Invalid(err(path, e))
    }
}

fn classify_shadow(path: &str, e: ShadowError) -> RunError {
    if e.is_internal() {
        RunError::Internal(e.to_string())
    } else {
        RunError::Invalid(err(path, e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Linearization {
    /// Pick `A` from the input: the map for nilpotent algebras, the shadow map
    /// when a split is present; otherwise the choice is ambiguous and refused.
    Auto,
    Map,
    Shadow,
    Explicit(Matrix),
}

#[derive(Debug, Clone)]
pub struct Task {
    pub algebra: LieAlgebra,
    pub catalog_entry: Option<CatalogEntry>,
    pub map: Option<LieMorphism>,
    pub module: Representation,
    pub intertwiner: Option<Intertwiner>,
    pub split: Option<SplitPresentation>,
    pub linearization: Linearization,
}

impl Task {
    pub fn parse(v: &Value, catalog: &Catalog) -> Result<Task, DocumentError> {
        let obj = object(v, "")?;
        let (algebra, catalog_entry) = match document::field(obj, "algebra", "")? {
            Value::String(name) => {
                let e = catalog.get(name).map_err(|e| err("/algebra", e))?;
                (e.algebra.clone(), Some(e.clone()))
            }
            a => (document::parse_algebra(a, "/algebra")?, None),
        };
        let map = match obj.get("map") {
            None | Some(Value::Null) => None,
            Some(Value::String(name)) => {
                let entry = catalog_entry
                    .as_ref()
                    .ok_or_else(|| err("/map", "named maps need a catalog algebra"))?;
                let f = entry
                    .morphism(name)
                    .ok_or_else(|| err("/map", format!("catalog entry {:?} has no morphism {name:?}", entry.name)))?;
                Some(f.clone())
            }
            Some(m) => Some(document::parse_endomorphism(m, &algebra, "/map")?),
        };
        let module = match obj.get("module") {
            None | Some(Value::Null) => Representation::trivial(algebra.clone()),
            Some(Value::String(s)) if s == "trivial" => Representation::trivial(algebra.clone()),
            Some(Value::String(s)) if s == "adjoint" => Representation::adjoint(algebra.clone()),
            Some(Value::String(s)) => return Err(err("/module", format!("unknown module {s:?}"))),
            Some(m) => document::parse_representation(m, &algebra, "/module")?,
        };
        let intertwiner = match (&map, obj.get("intertwiner")) {
            (None, None | Some(Value::Null)) => None,
            (None, Some(_)) => return Err(err("/intertwiner", "an intertwiner needs a map")),
            (Some(f), None | Some(Value::Null)) => {
                Some(Intertwiner::identity(f.clone(), module.clone()).map_err(|e| err("/intertwiner", e))?)
            }
            (Some(f), Some(x)) => Some(document::parse_intertwiner(x, f, &module, "/intertwiner")?),
        };
        let split = match obj.get("split") {
            None | Some(Value::Null) => catalog_entry.as_ref().and_then(|e| e.split.clone()),
            Some(s) => {
                let sp = document::parse_split(s, Some(&algebra), "/split")?;
                if sp.algebra != algebra {
                    return Err(err("/split/algebra", "split algebra differs from the task algebra"));
                }
                Some(sp)
            }
        };
        let linearization = match obj.get("linearization") {
            None | Some(Value::Null) => Linearization::Auto,
            Some(Value::String(s)) if s == "map" => Linearization::Map,
            Some(Value::String(s)) if s == "shadow" => Linearization::Shadow,
            Some(Value::String(s)) => return Err(err("/linearization", format!("unknown choice {s:?}"))),
            Some(l) => {
                let lo = object(l, "/linearization")?;
                let m = document::matrix(document::field(lo, "matrix", "/linearization")?, "/linearization/matrix")?;
                Linearization::Explicit(m)
            }
        };
        Ok(Task {
            algebra,
            catalog_entry,
            map,
            module,
            intertwiner,
            split,
            linearization,
        })
    }

    pub fn from_str(text: &str, catalog: &Catalog) -> Result<Task, DocumentError> {
        let v: Value = serde_json::from_str(text).map_err(|e| err("", format!("invalid JSON: {e}")))?;
        Self::parse(&v, catalog)
    }

    fn require_map(&self) -> Result<(&LieMorphism, &Intertwiner), DocumentError> {
        match (&self.map, &self.intertwiner) {
            (Some(f), Some(x)) => Ok((f, x)),
            _ => Err(err("/map", "missing field \"map\"")),
        }
    }

    /// Runs every validator that applies, reporting the first violation.
    pub fn check(&self) -> Result<(), RunError> {
        self.algebra.validate().map_err(|e| err("/algebra", e))?;
        self.module.validate().map_err(|e| err("/module", e))?;
        if let Some(f) = &self.map {
            f.check().map_err(|e| err("/map", e))?;
        }
        if let Some(x) = &self.intertwiner {
            x.validate().map_err(|e| err("/intertwiner", e))?;
        }
        if let Some(s) = &self.split {
            let shadow = build_shadow(s).map_err(|e| classify_shadow("/split", e))?;
            let uses_shadow = match self.linearization {
                Linearization::Shadow => true,
                Linearization::Auto => !self.algebra.is_nilpotent(),
                _ => false,
            };
            if let (Some(t), true) = (&self.map, uses_shadow) {
                induced_shadow_map(s, &shadow, t).map_err(|e| classify_shadow("/map", e))?;
            }
        }
        if let Linearization::Explicit(m) = &self.linearization {
            let n = self.algebra.dim();
            if m.rows() != n || m.cols() != n {
                return Err(err("/linearization/matrix", format!("expected a {n}x{n} matrix")).into());
            }
        }
        CochainComplex::build(&self.algebra, &self.module).map_err(|e| match e {
            CeError::InternalDSquareNonzero { .. } => RunError::Internal(e.to_string()),
            e => RunError::Invalid(err("/module", e)),
        })?;
        Ok(())
    }

    fn designated_matrix(&self, f: &LieMorphism) -> Result<Matrix, RunError> {
        let shadow_map = |s: &SplitPresentation| -> Result<Matrix, RunError> {
            let shadow = build_shadow(s).map_err(|e| classify_shadow("/split", e))?;
            let r = induced_shadow_map(s, &shadow, f).map_err(|e| classify_shadow("/map", e))?;
            Ok(r.s)
        };
        match &self.linearization {
            Linearization::Map => Ok(f.matrix.clone()),
            Linearization::Explicit(m) => Ok(m.clone()),
            Linearization::Shadow => match &self.split {
                Some(s) => shadow_map(s),
                None => Err(err("/split", "linearization \"shadow\" needs a split presentation").into()),
            },
            Linearization::Auto => {
                self.algebra.validate().map_err(|e| err("/algebra", e))?;
                if self.algebra.is_nilpotent() {
                    Ok(f.matrix.clone())
                } else if let Some(s) = &self.split {
                    shadow_map(s)
                } else {
                    Err(err(
                        "/linearization",
                        "algebra is not nilpotent and has no split: set \"linearization\" to \"map\" or a matrix",
                    )
                    .into())
                }
            }
        }
    }

    pub fn cohomology(&self, verbose: bool) -> Result<Value, RunError> {
        self.algebra.validate().map_err(|e| err("/algebra", e))?;
        self.module.validate().map_err(|e| err("/module", e))?;
        let complex = CochainComplex::build(&self.algebra, &self.module).map_err(|e| match e {
            CeError::InternalDSquareNonzero { .. } => RunError::Internal(e.to_string()),
            e => RunError::Invalid(err("/module", e)),
        })?;
        let coh = complex.cohomology();
        let mut out = json!({ "betti": coh.betti(), "dims": complex.dims() });
        if let Some((f, xi)) = self.map.as_ref().zip(self.intertwiner.as_ref()) {
            f.check().map_err(|e| err("/map", e))?;
            xi.validate().map_err(|e| err("/intertwiner", e))?;
            let chain = complex
                .induced_chain_map(f, xi)
                .map_err(|e| classify_lefschetz("/map", e.into()))?;
            let maps = complex
                .induced_cohomology_map(&coh, &chain)
                .map_err(|e| RunError::Internal(e.to_string()))?;
            out["maps"] = maps_json(&maps);
        }
        if verbose {
            let reps: Map<String, Value> = coh
                .degrees
                .iter()
                .enumerate()
                .map(|(p, d)| {
                    let cols = Matrix::from_columns(complex.dims()[p], &d.representatives);
                    (p.to_string(), document::matrix_to_json(&cols.transpose()))
                })
                .collect();
            out["representatives"] = Value::Object(reps);
            let basis: Map<String, Value> = (0..=complex.top_degree())
                .map(|p| {
                    let labels: Vec<String> = complex
                        .subsets(p)
                        .iter()
                        .flat_map(|s| {
                            let wedge = if s.is_empty() {
                                "1".to_string()
                            } else {
                                s.iter().map(|&i| self.algebra.labels()[i].as_str()).collect::<Vec<_>>().join("^")
                            };
                            (0..self.module.dim()).map(move |k| format!("{wedge}@v{k}"))
                        })
                        .collect();
                    (p.to_string(), json!(labels))
                })
                .collect();
            out["cochain_basis"] = Value::Object(basis);
        }
        Ok(out)
    }

    pub fn lefschetz(&self) -> Result<LefschetzReport, RunError> {
        let (f, xi) = self.require_map()?;
        let a = self.designated_matrix(f)?;
        twisted_lefschetz_with(&self.algebra, &self.module, f, xi, &a).map_err(|e| {
            let path = match &e {
                LefschetzError::Lie(crate::liealg::LieError::NotAMorphism { .. }) | LefschetzError::NotEndomorphism => {
                    "/map"
                }
                LefschetzError::Lie(_) => "/algebra",
                LefschetzError::Rep(crate::repn::RepError::NotEquivariant { .. }) => "/intertwiner",
                LefschetzError::Rep(_) => "/module",
                LefschetzError::DesignatedShape { .. } => "/linearization",
                _ => "",
            };
            classify_lefschetz(path, e)
        })
    }

    pub fn shadow(&self) -> Result<ShadowLefschetz, RunError> {
        let split = match &self.split {
            Some(s) => s.clone(),
            None => {
                self.algebra.validate().map_err(|e| err("/algebra", e))?;
                if self.algebra.is_nilpotent() {
                    SplitPresentation::nilpotent(self.algebra.clone())
                } else {
                    return Err(err("/split", "missing split presentation for a non-nilpotent algebra").into());
                }
            }
        };
        let f = self
            .map
            .clone()
            .unwrap_or_else(|| LieMorphism::identity(self.algebra.clone()));
        shadow_lefschetz(&split, &f).map_err(|e| {
            let path = match &e {
                ShadowError::SplitNotPreserved { .. } | ShadowError::NotEndomorphism => "/map",
                ShadowError::Lie(crate::liealg::LieError::NotAMorphism { .. }) => "/map",
                _ => "/split",
            };
            classify_shadow(path, e)
        })
    }
}

pub fn maps_json(maps: &[Matrix]) -> Value {
    Value::Object(
        maps.iter()
            .enumerate()
            .map(|(p, m)| (p.to_string(), document::matrix_to_json(m)))
            .collect(),
    )
}

fn rationals_json(xs: &[crate::ratlin::Rational]) -> Value {
    Value::Array(xs.iter().map(document::rational_to_json).collect())
}

pub fn lefschetz_json(r: &LefschetzReport) -> Value {
    json!({
        "agree": r.agree,
        "betti": r.betti,
        "cochain_traces": rationals_json(&r.cochain_traces),
        "det_i_minus_a": document::rational_to_json(&r.linearization),
        "dims": r.dims,
        "formula_guaranteed": r.formula_guaranteed,
        "hopf": document::rational_to_json(&r.hopf),
        "lefschetz": document::rational_to_json(&r.lefschetz),
        "maps": maps_json(&r.cohomology_maps),
        "traces": rationals_json(&r.traces),
    })
}

pub fn shadow_json(s: &ShadowLefschetz) -> Value {
    let parts: Map<String, Value> = s
        .shadow
        .semisimple_parts
        .iter()
        .map(|(g, m)| (g.to_string(), document::matrix_to_json(m)))
        .collect();
    json!({
        "shadow": document::algebra_to_json(&s.shadow.shadow),
        "semisimple_parts": parts,
        "s": document::matrix_to_json(&s.map.s),
        "shadow_morphism": s.map.is_shadow_morphism(),
        "shadow_morphism_violation": s.map.shadow_morphism_violation.as_ref().map(ToString::to_string),
        "det_i_minus_s": document::rational_to_json(&s.map.det_shadow),
        "det_i_minus_b": document::rational_to_json(&s.map.det_original),
        "shadow_lefschetz": s.shadow_report.as_ref().map(lefschetz_json),
        "agree": s.verdict(),
    })
}

pub fn torus_json(c: &TorusCheck) -> Value {
    let fp = &c.fixed_points;
    json!({
        "nondegenerate": fp.nondegenerate,
        "count": fp.count,
        "index_each": fp.index_each,
        "lefschetz": fp.lefschetz.to_string(),
        "points": fp.points.iter().map(|p| rationals_json(p)).collect::<Vec<_>>(),
        "ce_lefschetz": document::rational_to_json(&c.ce_lefschetz),
        "pass": c.pass,
    })
}

pub fn run_torus(literal: &str) -> Result<TorusCheck, RunError> {
    let t = TorusMap::parse(literal).map_err(|e| err("/matrix", e))?;
    cross_check_with_ce(&t).map_err(|e| match e {
        TorusError::InternalCountMismatch { .. } => RunError::Internal(e.to_string()),
        TorusError::Lefschetz(l) if l.is_internal() => RunError::Internal(l.to_string()),
        TorusError::DegenerateMap => RunError::Invalid(err(
            "/matrix",
            format!("{e}; the Lefschetz number is still available from the `lefschetz` command on abelian_{}", t.dim()),
        )),
        e => RunError::Invalid(err("/matrix", e)),
    })
}
