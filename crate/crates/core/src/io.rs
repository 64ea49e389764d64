//! JSON descriptors for fields, codes, functions and encodings.
//!
//! Field elements serialize as coefficient arrays (constant term first);
//! prime-field elements serialize as bare integers.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::codes::{Code, CodeKind};
use crate::error::{Error, Result};
use crate::fcc::{Assignment, FccEncoding, FuncValue, FunctionSpec, StructuredAssignment};
use crate::field::{Field, FieldElement};
use crate::linalg::{Matrix, Vector};

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::Parse(format!("{what} must be a non-negative integer")))
}

pub fn element_to_json(field: &Field, e: FieldElement) -> Value {
    if field.m() == 1 {
        json!(e.index())
    } else {
        json!(field.coeffs(e))
    }
}

pub fn element_from_json(field: &Arc<Field>, v: &Value) -> Result<FieldElement> {
    match v {
        Value::Number(_) => {
            let x = as_u64(v, "element")?;
            if field.m() == 1 {
                field.from_coeffs(&[x])
            } else {
                // bare integers embed as constants
                let mut coeffs = vec![0u64; field.m()];
                coeffs[0] = x;
                field.from_coeffs(&coeffs)
            }
        }
        Value::Array(items) => {
            let coeffs: Result<Vec<u64>> =
                items.iter().map(|c| as_u64(c, "coefficient")).collect();
            field.from_coeffs(&coeffs?)
        }
        _ => Err(Error::Parse("element must be an integer or an array".into())),
    }
}

pub fn vector_to_json(field: &Field, v: &[FieldElement]) -> Value {
    Value::Array(v.iter().map(|&e| element_to_json(field, e)).collect())
}

pub fn vector_from_json(field: &Arc<Field>, v: &Value) -> Result<Vector> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse("vector must be an array".into()))?;
    items.iter().map(|e| element_from_json(field, e)).collect()
}

pub fn field_to_json(field: &Field) -> Value {
    let mut obj = Map::new();
    obj.insert("p".into(), json!(field.p()));
    obj.insert("m".into(), json!(field.m()));
    if field.m() > 1 {
        obj.insert("modulus".into(), json!(field.modulus()));
    }
    Value::Object(obj)
}

pub fn field_from_json(v: &Value) -> Result<Arc<Field>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("field descriptor must be an object".into()))?;
    let p = as_u64(
        obj.get("p").ok_or_else(|| Error::Parse("field needs p".into()))?,
        "p",
    )?;
    let m = obj.get("m").map(|m| as_u64(m, "m")).transpose()?.unwrap_or(1) as usize;
    let modulus = obj
        .get("modulus")
        .map(|mv| -> Result<Vec<u64>> {
            mv.as_array()
                .ok_or_else(|| Error::Parse("modulus must be an array".into()))?
                .iter()
                .map(|c| as_u64(c, "modulus coefficient"))
                .collect()
        })
        .transpose()?;
    let primitive = obj
        .get("primitive")
        .map(|pv| -> Result<Vec<u64>> {
            match pv {
                Value::Number(_) => Ok(vec![as_u64(pv, "primitive")?]),
                Value::Array(items) => items.iter().map(|c| as_u64(c, "primitive")).collect(),
                _ => Err(Error::Parse("primitive must be an integer or array".into())),
            }
        })
        .transpose()?;
    Field::with_primitive(p, m, modulus, primitive)
}

pub fn code_to_json(code: &Code) -> Value {
    let field = code.field();
    let mut obj = Map::new();
    obj.insert("field".into(), field_to_json(field));
    obj.insert("n".into(), json!(code.len()));
    match code.kind() {
        CodeKind::Linear { generator } => {
            obj.insert("kind".into(), json!("linear"));
            let rows: Vec<Value> = (0..generator.nrows())
                .map(|r| vector_to_json(field, generator.row(r)))
                .collect();
            obj.insert("generator".into(), Value::Array(rows));
        }
        CodeKind::Explicit { codewords } => {
            obj.insert("kind".into(), json!("explicit"));
            let words: Vec<Value> = codewords
                .iter()
                .map(|w| vector_to_json(field, w))
                .collect();
            obj.insert("codewords".into(), Value::Array(words));
        }
    }
    Value::Object(obj)
}

pub fn code_from_json(v: &Value) -> Result<Code> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("code descriptor must be an object".into()))?;
    let field = field_from_json(
        obj.get("field")
            .ok_or_else(|| Error::Parse("code needs a field".into()))?,
    )?;
    let kind = obj
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("code needs kind: linear or explicit".into()))?;
    let n = obj.get("n").map(|x| as_u64(x, "n")).transpose()?;
    let code = match kind {
        "linear" => {
            let rows = obj
                .get("generator")
                .and_then(|g| g.as_array())
                .ok_or_else(|| Error::Parse("linear code needs a generator array".into()))?;
            let rows: Result<Vec<Vector>> =
                rows.iter().map(|r| vector_from_json(&field, r)).collect();
            Code::from_generator(field, rows?)?
        }
        "explicit" => {
            let words = obj
                .get("codewords")
                .and_then(|w| w.as_array())
                .ok_or_else(|| Error::Parse("explicit code needs a codewords array".into()))?;
            let words: Result<Vec<Vector>> =
                words.iter().map(|w| vector_from_json(&field, w)).collect();
            Code::explicit(field, words?)?
        }
        other => return Err(Error::Parse(format!("unknown code kind {other}"))),
    };
    if let Some(n) = n {
        if n as usize != code.len() {
            return Err(Error::Parse(format!(
                "declared n = {n} does not match vectors of length {}",
                code.len()
            )));
        }
    }
    Ok(code)
}

fn func_value_to_json(v: &FuncValue) -> Value {
    serde_json::from_str(&v.0).unwrap_or(Value::String(v.0.clone()))
}

fn func_value_from_json(v: &Value) -> FuncValue {
    FuncValue(serde_json::to_string(v).expect("JSON value serializes"))
}

pub fn function_to_json(f: &FunctionSpec) -> Value {
    let field = f.field();
    let mut obj = Map::new();
    obj.insert("field".into(), field_to_json(field));
    obj.insert("k".into(), json!(f.message_len()));
    match f.repr() {
        crate::fcc::FunctionRepr::Table(pairs) => {
            obj.insert("kind".into(), json!("table"));
            let pairs: Vec<Value> = pairs
                .iter()
                .map(|(m, v)| json!([vector_to_json(field, m), func_value_to_json(v)]))
                .collect();
            obj.insert("pairs".into(), Value::Array(pairs));
        }
        crate::fcc::FunctionRepr::LinearMap(a) => {
            obj.insert("kind".into(), json!("linear_map"));
            let rows: Vec<Value> = (0..a.nrows())
                .map(|r| vector_to_json(field, a.row(r)))
                .collect();
            obj.insert("matrix".into(), Value::Array(rows));
        }
        crate::fcc::FunctionRepr::Projection(coords) => {
            obj.insert("kind".into(), json!("projection"));
            obj.insert("coords".into(), json!(coords));
        }
    }
    Value::Object(obj)
}

pub fn function_from_json(v: &Value) -> Result<FunctionSpec> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("function descriptor must be an object".into()))?;
    let field = field_from_json(
        obj.get("field")
            .ok_or_else(|| Error::Parse("function needs a field".into()))?,
    )?;
    let kind = obj
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("function needs a kind".into()))?;
    match kind {
        "table" => {
            let k = as_u64(
                obj.get("k")
                    .ok_or_else(|| Error::Parse("table function needs k".into()))?,
                "k",
            )? as usize;
            let pairs = obj
                .get("pairs")
                .and_then(|p| p.as_array())
                .ok_or_else(|| Error::Parse("table function needs pairs".into()))?;
            let parsed: Result<Vec<(Vector, FuncValue)>> = pairs
                .iter()
                .map(|entry| {
                    let pair = entry
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::Parse("table entry must be [message, value]".into()))?;
                    Ok((
                        vector_from_json(&field, &pair[0])?,
                        func_value_from_json(&pair[1]),
                    ))
                })
                .collect();
            FunctionSpec::table(field, k, parsed?)
        }
        "linear_map" => {
            let rows = obj
                .get("matrix")
                .and_then(|m| m.as_array())
                .ok_or_else(|| Error::Parse("linear_map needs a matrix".into()))?;
            let rows: Result<Vec<Vector>> =
                rows.iter().map(|r| vector_from_json(&field, r)).collect();
            let matrix = Matrix::from_rows(field, rows?)?;
            Ok(FunctionSpec::linear_map(matrix))
        }
        "projection" => {
            let k = as_u64(
                obj.get("k")
                    .ok_or_else(|| Error::Parse("projection needs k".into()))?,
                "k",
            )? as usize;
            let coords = obj
                .get("coords")
                .and_then(|c| c.as_array())
                .ok_or_else(|| Error::Parse("projection needs coords".into()))?;
            let coords: Result<Vec<usize>> = coords
                .iter()
                .map(|c| as_u64(c, "coord").map(|x| x as usize))
                .collect();
            FunctionSpec::projection(field, k, coords?)
        }
        other => Err(Error::Parse(format!("unknown function kind {other}"))),
    }
}

pub fn encoding_to_json(enc: &FccEncoding) -> Value {
    let field = enc.code.field();
    let mut obj = Map::new();
    obj.insert("code".into(), code_to_json(&enc.code));
    obj.insert("dd".into(), json!(enc.d_d));
    obj.insert("df".into(), json!(enc.d_f));
    match &enc.assignment {
        Assignment::Table { pairs, groups } => {
            obj.insert("kind".into(), json!("table"));
            let pairs: Vec<Value> = pairs
                .iter()
                .map(|(m, c)| json!([vector_to_json(field, m), vector_to_json(field, c)]))
                .collect();
            obj.insert("assignment".into(), Value::Array(pairs));
            let groups: Vec<Value> = groups
                .iter()
                .map(|(v, words)| {
                    let ws: Vec<Value> =
                        words.iter().map(|w| vector_to_json(field, w)).collect();
                    json!([func_value_to_json(v), Value::Array(ws)])
                })
                .collect();
            obj.insert("groups".into(), Value::Array(groups));
        }
        Assignment::Structured(sa) => {
            obj.insert("kind".into(), json!("structured"));
            obj.insert("subcode".into(), code_to_json(&sa.subcode));
            let rows: Vec<Value> = sa
                .complement_rows
                .iter()
                .map(|r| vector_to_json(field, r))
                .collect();
            obj.insert("complement_rows".into(), Value::Array(rows));
            let kb: Vec<Value> = sa
                .kernel_msg_basis
                .iter()
                .map(|r| vector_to_json(field, r))
                .collect();
            obj.insert("kernel_basis".into(), Value::Array(kb));
            let cb: Vec<Value> = sa
                .complement_msg_basis
                .iter()
                .map(|r| vector_to_json(field, r))
                .collect();
            obj.insert("complement_msg_basis".into(), Value::Array(cb));
            let vm: Vec<Value> = sa
                .value_map
                .iter()
                .map(|(b, v)| json!([vector_to_json(field, b), func_value_to_json(v)]))
                .collect();
            obj.insert("value_map".into(), Value::Array(vm));
        }
    }
    Value::Object(obj)
}

pub fn encoding_from_json(v: &Value) -> Result<FccEncoding> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("encoding descriptor must be an object".into()))?;
    let code = code_from_json(
        obj.get("code")
            .ok_or_else(|| Error::Parse("encoding needs a code".into()))?,
    )?;
    let field = code.field().clone();
    let d_d = as_u64(
        obj.get("dd").ok_or_else(|| Error::Parse("encoding needs dd".into()))?,
        "dd",
    )? as usize;
    let d_f = as_u64(
        obj.get("df").ok_or_else(|| Error::Parse("encoding needs df".into()))?,
        "df",
    )? as usize;
    let kind = obj
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("encoding needs a kind".into()))?;
    let assignment = match kind {
        "table" => {
            let pairs = obj
                .get("assignment")
                .and_then(|a| a.as_array())
                .ok_or_else(|| Error::Parse("table encoding needs an assignment".into()))?;
            let pairs: Result<Vec<(Vector, Vector)>> = pairs
                .iter()
                .map(|entry| {
                    let pair = entry
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| {
                            Error::Parse("assignment entry must be [message, codeword]".into())
                        })?;
                    Ok((
                        vector_from_json(&field, &pair[0])?,
                        vector_from_json(&field, &pair[1])?,
                    ))
                })
                .collect();
            let groups = obj
                .get("groups")
                .and_then(|g| g.as_array())
                .ok_or_else(|| Error::Parse("table encoding needs groups".into()))?;
            let groups: Result<Vec<(FuncValue, Vec<Vector>)>> = groups
                .iter()
                .map(|entry| {
                    let pair = entry
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::Parse("group entry must be [value, words]".into()))?;
                    let words = pair[1]
                        .as_array()
                        .ok_or_else(|| Error::Parse("group words must be an array".into()))?;
                    let words: Result<Vec<Vector>> =
                        words.iter().map(|w| vector_from_json(&field, w)).collect();
                    Ok((func_value_from_json(&pair[0]), words?))
                })
                .collect();
            Assignment::Table {
                pairs: pairs?,
                groups: groups?,
            }
        }
        "structured" => {
            let subcode = code_from_json(
                obj.get("subcode")
                    .ok_or_else(|| Error::Parse("structured encoding needs a subcode".into()))?,
            )?;
            let vecs = |key: &str| -> Result<Vec<Vector>> {
                obj.get(key)
                    .and_then(|r| r.as_array())
                    .ok_or_else(|| Error::Parse(format!("structured encoding needs {key}")))?
                    .iter()
                    .map(|r| vector_from_json(&field, r))
                    .collect()
            };
            let value_map = obj
                .get("value_map")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::Parse("structured encoding needs a value_map".into()))?
                .iter()
                .map(|entry| {
                    let pair = entry
                        .as_array()
                        .filter(|a| a.len() == 2)
                        .ok_or_else(|| Error::Parse("value_map entry must be [b, value]".into()))?;
                    Ok((
                        vector_from_json(&field, &pair[0])?,
                        func_value_from_json(&pair[1]),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            Assignment::Structured(StructuredAssignment {
                subcode,
                complement_rows: vecs("complement_rows")?,
                kernel_msg_basis: vecs("kernel_basis")?,
                complement_msg_basis: vecs("complement_msg_basis")?,
                value_map,
            })
        }
        other => return Err(Error::Parse(format!("unknown encoding kind {other}"))),
    };
    Ok(FccEncoding {
        code,
        d_d,
        d_f,
        assignment,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Budgets;

    #[test]
    fn field_round_trip() {
        let f = Field::new(5, 3, Some(vec![1, 0, 1, 1])).unwrap();
        let j = field_to_json(&f);
        assert_eq!(j["p"], json!(5));
        assert_eq!(j["modulus"], json!([1, 0, 1, 1]));
        let f2 = field_from_json(&j).unwrap();
        assert_eq!(f2.order(), 125);
        assert_eq!(f2.modulus(), f.modulus());
    }

    #[test]
    fn prime_field_elements_are_bare_integers() {
        let f = Field::prime(5).unwrap();
        let e = f.from_int(3);
        assert_eq!(element_to_json(&f, e), json!(3));
        let back = element_from_json(&f, &json!(3)).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn extension_elements_are_arrays() {
        let f = Field::new(5, 3, Some(vec![1, 0, 1, 1])).unwrap();
        let e = f.from_coeffs(&[2, 0, 1]).unwrap();
        assert_eq!(element_to_json(&f, e), json!([2, 0, 1]));
        assert_eq!(element_from_json(&f, &json!([2, 0, 1])).unwrap(), e);
    }

    #[test]
    fn code_round_trip() {
        let j = json!({
            "field": {"p": 2, "m": 1},
            "n": 6,
            "kind": "linear",
            "generator": [[1,1,0,0,0,0],[0,0,1,1,0,0],[0,0,0,1,1,1]]
        });
        let code = code_from_json(&j).unwrap();
        assert_eq!(code.dimension(), Some(3));
        let j2 = code_to_json(&code);
        let code2 = code_from_json(&j2).unwrap();
        assert_eq!(code2.len(), 6);
        assert_eq!(
            code2.codewords(16).unwrap(),
            code.codewords(16).unwrap()
        );
    }

    #[test]
    fn explicit_code_round_trip() {
        let j = json!({
            "field": {"p": 3, "m": 1},
            "n": 4,
            "kind": "explicit",
            "codewords": [[0,0,0,0],[1,1,0,0],[2,2,0,0]]
        });
        let code = code_from_json(&j).unwrap();
        assert!(!code.is_linear());
        assert_eq!(code_from_json(&code_to_json(&code)).unwrap().len(), 4);
    }

    #[test]
    fn declared_length_mismatch_rejected() {
        let j = json!({
            "field": {"p": 2, "m": 1},
            "n": 5,
            "kind": "linear",
            "generator": [[1,1,0,0,0,0]]
        });
        assert!(matches!(code_from_json(&j), Err(Error::Parse(_))));
    }

    #[test]
    fn function_round_trip_all_kinds() {
        let b = Budgets::default();
        let table = json!({
            "field": {"p": 2, "m": 1},
            "k": 2,
            "kind": "table",
            "pairs": [[[0,0],[0]],[[0,1],[1]],[[1,0],[1]],[[1,1],[0]]]
        });
        let f = function_from_json(&table).unwrap();
        assert_eq!(f.image_summary(&b).unwrap().len(), 2);
        let f2 = function_from_json(&function_to_json(&f)).unwrap();
        assert_eq!(
            f.eval(&vector_from_json(f.field(), &json!([1, 0])).unwrap())
                .unwrap(),
            f2.eval(&vector_from_json(f2.field(), &json!([1, 0])).unwrap())
                .unwrap()
        );

        let lin = json!({
            "field": {"p": 3, "m": 1},
            "kind": "linear_map",
            "matrix": [[1,0],[0,1],[1,1]]
        });
        let f = function_from_json(&lin).unwrap();
        assert_eq!(f.message_len(), 3);

        let proj = json!({
            "field": {"p": 3, "m": 1},
            "k": 4,
            "kind": "projection",
            "coords": [0, 2]
        });
        let f = function_from_json(&proj).unwrap();
        let u = vector_from_json(f.field(), &json!([1, 2, 0, 1])).unwrap();
        assert_eq!(f.eval(&u).unwrap().0, "[1,0]");
    }

    #[test]
    fn encoding_round_trip() {
        let f = Field::prime(2).unwrap();
        let code = Code::from_generator(
            f.clone(),
            vec![
                vec![f.one(), f.one(), f.zero(), f.zero()],
                vec![f.zero(), f.zero(), f.one(), f.one()],
            ],
        )
        .unwrap();
        let pairs = vec![
            (vec![f.zero(), f.zero()], vec![f.zero(); 4]),
            (
                vec![f.zero(), f.one()],
                vec![f.zero(), f.zero(), f.one(), f.one()],
            ),
            (
                vec![f.one(), f.zero()],
                vec![f.one(), f.one(), f.zero(), f.zero()],
            ),
            (
                vec![f.one(), f.one()],
                vec![f.one(), f.one(), f.one(), f.one()],
            ),
        ];
        let groups = vec![
            (
                FuncValue("[0]".into()),
                vec![pairs[0].1.clone(), pairs[1].1.clone()],
            ),
            (
                FuncValue("[1]".into()),
                vec![pairs[2].1.clone(), pairs[3].1.clone()],
            ),
        ];
        let enc = FccEncoding {
            code,
            d_d: 2,
            d_f: 2,
            assignment: Assignment::Table { pairs, groups },
        };
        let j = encoding_to_json(&enc);
        let enc2 = encoding_from_json(&j).unwrap();
        assert_eq!(enc2.d_d, 2);
        let Assignment::Table { pairs, .. } = &enc2.assignment else {
            panic!()
        };
        assert_eq!(pairs.len(), 4);
    }
}
