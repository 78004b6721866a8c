//! JSON documents for algebras, morphisms, modules, intertwiners and split
//! presentations. Parse errors carry a JSON-pointer path to the offending value.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::liealg::{default_labels, LieAlgebra, LieMorphism};
use crate::nilshadow::SplitPresentation;
use crate::ratlin::{format_rational, parse_rational, Matrix, Rational};
use crate::repn::{Intertwiner, Representation};

/// An invalid input document: where and what.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct DocumentError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path = if self.path.is_empty() { "/" } else { &self.path };
        write!(f, "{path}: {}", self.message)
    }
}

pub(crate) fn err(path: &str, message: impl fmt::Display) -> DocumentError {
    DocumentError {
        path: path.to_string(),
        message: message.to_string(),
    }
}

pub(crate) fn child(path: &str, key: impl fmt::Display) -> String {
    let key = key.to_string().replace('~', "~0").replace('/', "~1");
    format!("{path}/{key}")
}

pub(crate) fn object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, DocumentError> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

pub(crate) fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, DocumentError> {
    obj.get(key)
        .ok_or_else(|| err(path, format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, DocumentError> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

pub(crate) fn index(v: &Value, path: &str) -> Result<usize, DocumentError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

pub(crate) fn index_list(v: &Value, path: &str) -> Result<Vec<usize>, DocumentError> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| index(x, &child(path, i)))
        .collect()
}

/// Rationals are written as strings (`"-3/2"`); bare JSON integers are accepted too.
pub fn rational(v: &Value, path: &str) -> Result<Rational, DocumentError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| err(path, e)),
        Value::Number(n) if n.is_i64() => Ok(crate::ratlin::rat(n.as_i64().expect("checked"))),
        _ => Err(err(path, "expected a rational string such as \"-3/2\"")),
    }
}

pub fn matrix(v: &Value, path: &str) -> Result<Matrix, DocumentError> {
    let rows = array(v, path)?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let p = child(path, i);
            array(row, &p)?
                .iter()
                .enumerate()
                .map(|(j, x)| rational(x, &child(&p, j)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(|e| err(path, e))
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational_to_json).collect()))
            .collect(),
    )
}

pub fn parse_algebra(v: &Value, path: &str) -> Result<LieAlgebra, DocumentError> {
    let obj = object(v, path)?;
    let dim_path = child(path, "dim");
    let dim = index(field(obj, "dim", path)?, &dim_path)?;
    if dim == 0 {
        return Err(err(&dim_path, "Lie algebra must have positive dimension"));
    }
    let labels = match obj.get("basis") {
        None => default_labels(dim),
        Some(b) => {
            let p = child(path, "basis");
            let labels = array(b, &p)?
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| err(&child(&p, i), "expected a string label"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if labels.len() != dim {
                return Err(err(&p, format!("expected {dim} basis labels, found {}", labels.len())));
            }
            labels
        }
    };
    let mut brackets = Vec::new();
    if let Some(list) = obj.get("brackets") {
        let p = child(path, "brackets");
        for (n, entry) in array(list, &p)?.iter().enumerate() {
            let ep = child(&p, n);
            let eo = object(entry, &ep)?;
            let left = index(field(eo, "left", &ep)?, &child(&ep, "left"))?;
            let right = index(field(eo, "right", &ep)?, &child(&ep, "right"))?;
            if left >= right || right >= dim {
                return Err(err(&ep, format!("need left < right < {dim}, got left={left}, right={right}")));
            }
            let rp = child(&ep, "result");
            let mut terms = Vec::new();
            for (k, c) in object(field(eo, "result", &ep)?, &rp)? {
                let kp = child(&rp, k);
                let k: usize = k.parse().map_err(|_| err(&kp, "result keys must be basis indices"))?;
                if k >= dim {
                    return Err(err(&kp, format!("basis index {k} out of range")));
                }
                terms.push((k, rational(c, &kp)?));
            }
            brackets.push((left, right, terms));
        }
    }
    LieAlgebra::new(labels, brackets).map_err(|e| err(path, e))
}

pub fn algebra_to_json(a: &LieAlgebra) -> Value {
    let brackets: Vec<Value> = a
        .brackets()
        .iter()
        .map(|(&(i, j), v)| {
            let result: Map<String, Value> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(k, c)| (k.to_string(), rational_to_json(c)))
                .collect();
            json!({ "left": i, "right": j, "result": result })
        })
        .collect();
    json!({ "dim": a.dim(), "basis": a.labels(), "brackets": brackets })
}

/// Morphism document `{ "matrix": [...] }`, column `j` = image of `e_j`.
pub fn parse_endomorphism(v: &Value, algebra: &LieAlgebra, path: &str) -> Result<LieMorphism, DocumentError> {
    let obj = object(v, path)?;
    let mp = child(path, "matrix");
    let m = matrix(field(obj, "matrix", path)?, &mp)?;
    LieMorphism::endomorphism(algebra.clone(), m).map_err(|e| err(&mp, e))
}

pub fn morphism_to_json(f: &LieMorphism) -> Value {
    json!({ "matrix": matrix_to_json(&f.matrix) })
}

pub fn parse_representation(v: &Value, algebra: &LieAlgebra, path: &str) -> Result<Representation, DocumentError> {
    let obj = object(v, path)?;
    let dim = index(field(obj, "dim", path)?, &child(path, "dim"))?;
    let ap = child(path, "actions");
    let actions = array(field(obj, "actions", path)?, &ap)?
        .iter()
        .enumerate()
        .map(|(i, a)| matrix(a, &child(&ap, i)))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(algebra.clone(), dim, actions).map_err(|e| err(path, e))
}

pub fn representation_to_json(r: &Representation) -> Value {
    json!({
        "dim": r.dim(),
        "actions": r.actions().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn parse_intertwiner(
    v: &Value,
    f: &LieMorphism,
    module: &Representation,
    path: &str,
) -> Result<Intertwiner, DocumentError> {
    let obj = object(v, path)?;
    let mp = child(path, "matrix");
    let m = matrix(field(obj, "matrix", path)?, &mp)?;
    Intertwiner::new(f.clone(), module.clone(), m).map_err(|e| err(&mp, e))
}

/// `{ "nil_ideal": [...], "complement": [...] }`, optionally with its own
/// `"algebra"`; `algebra` is used when the document does not carry one.
pub fn parse_split(v: &Value, algebra: Option<&LieAlgebra>, path: &str) -> Result<SplitPresentation, DocumentError> {
    let obj = object(v, path)?;
    let algebra = match (obj.get("algebra"), algebra) {
        (Some(a), _) => parse_algebra(a, &child(path, "algebra"))?,
        (None, Some(a)) => a.clone(),
        (None, None) => return Err(err(path, "missing field \"algebra\"")),
    };
    let nil_ideal = index_list(field(obj, "nil_ideal", path)?, &child(path, "nil_ideal"))?;
    let complement = index_list(field(obj, "complement", path)?, &child(path, "complement"))?;
    SplitPresentation::new(algebra, nil_ideal, complement).map_err(|e| err(path, e))
}

pub fn split_to_json(s: &SplitPresentation) -> Value {
    json!({
        "algebra": algebra_to_json(&s.algebra),
        "nil_ideal": s.nil_ideal,
        "complement": s.complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::{rat, ratio};

    #[test]
    fn algebra_document() {
        let doc = json!({
            "dim": 3, "basis": ["x", "y", "z"],
            "brackets": [ { "left": 0, "right": 1, "result": { "2": "1/2" } } ]
        });
        let a = parse_algebra(&doc, "").unwrap();
        assert_eq!(a.basis_bracket(0, 1), vec![rat(0), rat(0), ratio(1, 2)]);
        assert_eq!(parse_algebra(&algebra_to_json(&a), "").unwrap(), a);
    }

    #[test]
    fn error_paths() {
        let bad_left = json!({ "dim": 3, "brackets": [ { "left": 2, "right": 1, "result": {} } ] });
        assert_eq!(parse_algebra(&bad_left, "/algebra").unwrap_err().path, "/algebra/brackets/0");
        let bad_q = json!({ "dim": 3, "brackets": [ { "left": 0, "right": 1, "result": { "2": "1/0" } } ] });
        assert_eq!(parse_algebra(&bad_q, "").unwrap_err().path, "/brackets/0/result/2");
        let zero = json!({ "dim": 0 });
        assert_eq!(parse_algebra(&zero, "").unwrap_err().path, "/dim");
        let labels = json!({ "dim": 2, "basis": ["a"] });
        assert_eq!(parse_algebra(&labels, "").unwrap_err().path, "/basis");
    }

    #[test]
    fn matrix_document() {
        let m = matrix(&json!([["1", "-3/2"], [0, "7"]]), "").unwrap();
        assert_eq!(m[(0, 1)], ratio(-3, 2));
        assert_eq!(matrix_to_json(&m), json!([["1", "-3/2"], ["0", "7"]]));
        assert_eq!(matrix(&json!([["1"], ["x"]]), "/map/matrix").unwrap_err().path, "/map/matrix/1/0");
        assert!(matrix(&json!([["1", "2"], ["3"]]), "").is_err());
    }

    #[test]
    fn representation_and_split_documents() {
        let a = LieAlgebra::abelian(2).unwrap();
        let r = parse_representation(&json!({ "dim": 1, "actions": [[["1"]], [["2"]]] }), &a, "").unwrap();
        assert_eq!(r.actions()[1], Matrix::diagonal(&[rat(2)]));
        assert_eq!(parse_representation(&representation_to_json(&r), &a, "").unwrap(), r);
        let sp = parse_split(&json!({ "nil_ideal": [1], "complement": [0] }), Some(&a), "").unwrap();
        assert_eq!(parse_split(&split_to_json(&sp), None, "").unwrap(), sp);
        assert!(parse_split(&json!({ "nil_ideal": [1], "complement": [] }), Some(&a), "").is_err());
    }
}
