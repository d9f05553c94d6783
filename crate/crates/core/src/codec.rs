//! Canonical JSON encodings of every object type.
//!
//! Trees are nested objects `{"kind": ..., "children": [...]}`. Unary nodes
//! carry `"colour"`, marked-tree children carry `"mark"` and multi-edge
//! children carry `"weight"` on the child object (the edge above it). Paths
//! are `{"family": ..., "steps": [...]}`.

use std::sync::Arc;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::structures::{
    HexTree, LatticePath, Mark, MarkedTree, MultiEdgeTree, Object, OrderedTree, PathFamily, Step, UbTree,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{at}: expected an object")]
    NotAnObject { at: String },
    #[error("{at}: missing field `{field}`")]
    MissingField { at: String, field: &'static str },
    #[error("{at}: unknown kind `{kind}`")]
    UnknownKind { at: String, kind: String },
    #[error("{at}: unknown path family `{family}`")]
    UnknownFamily { at: String, family: String },
    #[error("{at}: unknown step `{step}`")]
    UnknownStep { at: String, step: String },
    #[error("{at}: expected {expected} children, found {found}")]
    Arity { at: String, expected: usize, found: usize },
    #[error("{at}: field `{field}` has the wrong type")]
    FieldType { at: String, field: &'static str },
    #[error("{at}: mixed tree kinds")]
    MixedKinds { at: String },
}

/// The tree or path type an encoding is expected to describe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObjectType {
    Ub,
    Hex,
    Marked,
    MultiEdge,
    Ordered,
    Path,
}

pub fn encode(object: &Object) -> Value {
    match object {
        Object::Ub(t) => encode_ub(t),
        Object::Hex(t) => encode_hex(t),
        Object::Marked(t) => encode_marked(t, None),
        Object::MultiEdge(t) => encode_multi(t, None),
        Object::Ordered(t) => encode_ordered(t),
        Object::Path(p) => encode_path(p),
    }
}

/// Compact single-line JSON text.
pub fn to_json_string(object: &Object) -> String {
    encode(object).to_string()
}

pub fn encode_ub(t: &UbTree) -> Value {
    match t {
        UbTree::Empty => json!({"kind": "empty"}),
        UbTree::Binary(l, r) => json!({"kind": "binary", "children": [encode_ub(l), encode_ub(r)]}),
        UbTree::Unary(c, child) => json!({"kind": "unary", "colour": c, "children": [encode_ub(child)]}),
    }
}

pub fn encode_hex(t: &HexTree) -> Value {
    let node = |kind: &str, children: Vec<Value>| json!({"kind": kind, "children": children});
    match t {
        HexTree::Box => json!({"kind": "box"}),
        HexTree::Node => node("node", vec![]),
        HexTree::Binary(l, r) => node("binary", vec![encode_hex(l), encode_hex(r)]),
        HexTree::UnaryLeft(c) => node("unary_left", vec![encode_hex(c)]),
        HexTree::UnaryMiddle(c) => node("unary_middle", vec![encode_hex(c)]),
        HexTree::UnaryRight(c) => node("unary_right", vec![encode_hex(c)]),
    }
}

fn encode_marked(t: &MarkedTree, mark: Option<Mark>) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), "marked".into());
    if let Some(mark) = mark {
        m.insert("mark".into(), if mark == Mark::Red { "red" } else { "plain" }.into());
    }
    let children = t.children.iter().map(|(mk, c)| encode_marked(c, Some(*mk))).collect();
    m.insert("children".into(), Value::Array(children));
    Value::Object(m)
}

fn encode_multi(t: &MultiEdgeTree, weight: Option<u64>) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), "multi_edge".into());
    if let Some(w) = weight {
        m.insert("weight".into(), w.into());
    }
    let children = t.children.iter().map(|(w, c)| encode_multi(c, Some(*w))).collect();
    m.insert("children".into(), Value::Array(children));
    Value::Object(m)
}

fn encode_ordered(t: &OrderedTree) -> Value {
    json!({"kind": "ordered", "children": t.children.iter().map(encode_ordered).collect::<Vec<_>>()})
}

fn encode_path(p: &LatticePath) -> Value {
    json!({"family": p.family.name(), "steps": p.steps.iter().map(|s| s.symbol()).collect::<Vec<_>>()})
}

/// Parse JSON text and decode it, inferring the object type.
pub fn from_json_str(text: &str) -> Result<Object, DecodeError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))?;
    decode(&value)
}

/// Decode, inferring the object type from the encoding itself.
pub fn decode(value: &Value) -> Result<Object, DecodeError> {
    decode_as(value, infer_type(value)?)
}

/// Decode as a specific object type.
pub fn decode_as(value: &Value, ty: ObjectType) -> Result<Object, DecodeError> {
    Ok(match ty {
        ObjectType::Ub => Object::Ub(decode_ub(value, "$")?),
        ObjectType::Hex => Object::Hex(decode_hex(value, "$")?),
        ObjectType::Marked => Object::Marked(decode_marked(value, "$")?),
        ObjectType::MultiEdge => Object::MultiEdge(decode_multi(value, "$")?),
        ObjectType::Ordered => Object::Ordered(decode_ordered(value, "$")?),
        ObjectType::Path => Object::Path(decode_path(value, "$")?),
    })
}

fn infer_type(value: &Value) -> Result<ObjectType, DecodeError> {
    let obj = value.as_object().ok_or(DecodeError::NotAnObject { at: "$".into() })?;
    if obj.contains_key("family") || obj.contains_key("steps") {
        return Ok(ObjectType::Path);
    }
    if !obj.contains_key("kind") {
        return Err(DecodeError::MissingField { at: "$".into(), field: "kind" });
    }
    let mut kinds = Vec::new();
    collect_kinds(value, &mut kinds);
    let has = |k: &str| kinds.iter().any(|x| x == k);
    let ty = if has("marked") {
        ObjectType::Marked
    } else if has("multi_edge") {
        ObjectType::MultiEdge
    } else if has("ordered") {
        ObjectType::Ordered
    } else if has("empty") || has("unary") {
        ObjectType::Ub
    } else if ["box", "node", "unary_left", "unary_middle", "unary_right"].iter().any(|k| has(k)) {
        ObjectType::Hex
    } else {
        let kind = kinds.first().cloned().unwrap_or_default();
        return Err(DecodeError::UnknownKind { at: "$".into(), kind });
    };
    Ok(ty)
}

fn collect_kinds(value: &Value, out: &mut Vec<String>) {
    if let Some(k) = value.get("kind").and_then(Value::as_str) {
        if !out.iter().any(|x| x == k) {
            out.push(k.to_string());
        }
    }
    if let Some(children) = value.get("children").and_then(Value::as_array) {
        for c in children {
            collect_kinds(c, out);
        }
    }
}

fn object<'a>(value: &'a Value, at: &str) -> Result<&'a Map<String, Value>, DecodeError> {
    value.as_object().ok_or_else(|| DecodeError::NotAnObject { at: at.into() })
}

fn kind<'a>(m: &'a Map<String, Value>, at: &str) -> Result<&'a str, DecodeError> {
    m.get("kind")
        .ok_or_else(|| DecodeError::MissingField { at: at.into(), field: "kind" })?
        .as_str()
        .ok_or_else(|| DecodeError::FieldType { at: at.into(), field: "kind" })
}

fn children<'a>(m: &'a Map<String, Value>, at: &str) -> Result<&'a [Value], DecodeError> {
    match m.get("children") {
        None => Ok(&[]),
        Some(v) => {
            v.as_array().map(Vec::as_slice).ok_or_else(|| DecodeError::FieldType { at: at.into(), field: "children" })
        }
    }
}

fn arity<'a>(m: &'a Map<String, Value>, at: &str, expected: usize) -> Result<&'a [Value], DecodeError> {
    let cs = children(m, at)?;
    if cs.len() != expected {
        return Err(DecodeError::Arity { at: at.into(), expected, found: cs.len() });
    }
    Ok(cs)
}

fn child_at(at: &str, i: usize) -> String {
    format!("{at}.children[{i}]")
}

fn uint_field(m: &Map<String, Value>, at: &str, field: &'static str) -> Result<u64, DecodeError> {
    m.get(field)
        .ok_or_else(|| DecodeError::MissingField { at: at.into(), field })?
        .as_u64()
        .ok_or_else(|| DecodeError::FieldType { at: at.into(), field })
}

fn decode_ub(value: &Value, at: &str) -> Result<UbTree, DecodeError> {
    let m = object(value, at)?;
    match kind(m, at)? {
        "empty" => {
            arity(m, at, 0)?;
            Ok(UbTree::Empty)
        }
        "binary" => {
            let cs = arity(m, at, 2)?;
            Ok(UbTree::binary(decode_ub(&cs[0], &child_at(at, 0))?, decode_ub(&cs[1], &child_at(at, 1))?))
        }
        "unary" => {
            let cs = arity(m, at, 1)?;
            let colour = uint_field(m, at, "colour")?;
            let colour =
                u32::try_from(colour).map_err(|_| DecodeError::FieldType { at: at.into(), field: "colour" })?;
            Ok(UbTree::unary(colour, decode_ub(&cs[0], &child_at(at, 0))?))
        }
        other => Err(DecodeError::UnknownKind { at: at.into(), kind: other.into() }),
    }
}

fn decode_hex(value: &Value, at: &str) -> Result<HexTree, DecodeError> {
    let m = object(value, at)?;
    let sub = |cs: &[Value], i: usize| decode_hex(&cs[i], &child_at(at, i)).map(Arc::new);
    match kind(m, at)? {
        "box" => {
            arity(m, at, 0)?;
            Ok(HexTree::Box)
        }
        "node" => {
            arity(m, at, 0)?;
            Ok(HexTree::Node)
        }
        "binary" => {
            let cs = arity(m, at, 2)?;
            Ok(HexTree::Binary(sub(cs, 0)?, sub(cs, 1)?))
        }
        "unary_left" => Ok(HexTree::UnaryLeft(sub(arity(m, at, 1)?, 0)?)),
        "unary_middle" => Ok(HexTree::UnaryMiddle(sub(arity(m, at, 1)?, 0)?)),
        "unary_right" => Ok(HexTree::UnaryRight(sub(arity(m, at, 1)?, 0)?)),
        other => Err(DecodeError::UnknownKind { at: at.into(), kind: other.into() }),
    }
}

fn expect_kind(m: &Map<String, Value>, at: &str, wanted: &str) -> Result<(), DecodeError> {
    let k = kind(m, at)?;
    if k == wanted {
        Ok(())
    } else {
        Err(DecodeError::MixedKinds { at: at.into() })
    }
}

fn decode_marked(value: &Value, at: &str) -> Result<MarkedTree, DecodeError> {
    let m = object(value, at)?;
    expect_kind(m, at, "marked")?;
    let mut out = Vec::new();
    for (i, c) in children(m, at)?.iter().enumerate() {
        let path = child_at(at, i);
        let cm = object(c, &path)?;
        let mark = match cm.get("mark").map(|v| v.as_str()) {
            None | Some(Some("plain")) => Mark::Plain,
            Some(Some("red")) => Mark::Red,
            _ => return Err(DecodeError::FieldType { at: path, field: "mark" }),
        };
        out.push((mark, decode_marked(c, &path)?));
    }
    Ok(MarkedTree::new(out))
}

fn decode_multi(value: &Value, at: &str) -> Result<MultiEdgeTree, DecodeError> {
    let m = object(value, at)?;
    expect_kind(m, at, "multi_edge")?;
    let mut out = Vec::new();
    for (i, c) in children(m, at)?.iter().enumerate() {
        let path = child_at(at, i);
        let w = uint_field(object(c, &path)?, &path, "weight")?;
        out.push((w, decode_multi(c, &path)?));
    }
    Ok(MultiEdgeTree::new(out))
}

fn decode_ordered(value: &Value, at: &str) -> Result<OrderedTree, DecodeError> {
    let m = object(value, at)?;
    expect_kind(m, at, "ordered")?;
    let cs = children(m, at)?;
    let children = cs.iter().enumerate().map(|(i, c)| decode_ordered(c, &child_at(at, i))).collect::<Result<_, _>>()?;
    Ok(OrderedTree::new(children))
}

fn decode_path(value: &Value, at: &str) -> Result<LatticePath, DecodeError> {
    let m = object(value, at)?;
    let fam = m
        .get("family")
        .ok_or_else(|| DecodeError::MissingField { at: at.into(), field: "family" })?
        .as_str()
        .ok_or_else(|| DecodeError::FieldType { at: at.into(), field: "family" })?;
    let family =
        PathFamily::from_name(fam).ok_or_else(|| DecodeError::UnknownFamily { at: at.into(), family: fam.into() })?;
    let steps = m
        .get("steps")
        .ok_or_else(|| DecodeError::MissingField { at: at.into(), field: "steps" })?
        .as_array()
        .ok_or_else(|| DecodeError::FieldType { at: at.into(), field: "steps" })?;
    let mut out = Vec::with_capacity(steps.len());
    for (i, s) in steps.iter().enumerate() {
        let step_at = format!("{at}.steps[{i}]");
        let sym = s.as_str().ok_or_else(|| DecodeError::FieldType { at: step_at.clone(), field: "steps" })?;
        out.push(Step::from_symbol(sym).ok_or_else(|| DecodeError::UnknownStep { at: step_at, step: sym.into() })?);
    }
    Ok(LatticePath::new(family, out))
}
