//! JSON file formats.
//!
//! All rationals and big integers are decimal strings (`"p"` or `"p/q"`).
//! Integer literals are also accepted on input where a rational is expected.
//!
//! Instance: `{"n": 3, "generators": [G, …]}` where `G` is either a triple
//! `{"a": ["2"], "b": ["7"], "c": "20"}` or an `n × n` row-major matrix.
//!
//! Verdict: `{"answer": "yes" | "no", "witness": [F, …]}` where `F` is a run
//! `[generator_index, "exponent"]` or a repeated block
//! `{"repeat": "times", "body": [F, …]}`. The witness is omitted on `no`.
//!
//! Diophantine system: `{"A": [["2", "3"], …], "forced": [0, 2]}`.
//!
//! PCP instance: `{"letters": ["a1", "a2"], "g": ["ab", "b"], "h": ["a", "bb"]}`.
//!
//! Matrix list: `{"matrices": [{"label": "B", "matrix": [["0", …], …]}, …]}`.
//!
//! Parse errors are [`Error::Malformed`] with a message that starts with the
//! path of the offending field, e.g. `generators[1].c: …`.

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::decider::{Answer, Factor, GeneratorSet, Product, Route, Verdict};
use crate::diophantine::DiophantineSystem;
use crate::encodings::pcp::{parse_binary_word, PcpInstance, Sl4GeneratorSet};
use crate::error::{Error, Result};
use crate::exactmath::{QMatrix, QVector, Rational};
use crate::heisenberg::HeisTriple;

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("{path}: {msg}"))
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| err("$", format!("invalid JSON ({e})")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(path, format!("missing field \"{key}\"")))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn as_rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s.parse().map_err(|e| err(path, e)),
        Value::Number(n) if n.is_i64() => Ok(Rational::from(n.as_i64().unwrap())),
        _ => Err(err(path, "expected a rational as a string \"p\" or \"p/q\"")),
    }
}

fn as_biguint(v: &Value, path: &str) -> Result<BigUint> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| err(path, format!("{s:?} is not a non-negative integer"))),
        Value::Number(n) if n.is_u64() => Ok(BigUint::from(n.as_u64().unwrap())),
        _ => Err(err(path, "expected a non-negative integer as a decimal string")),
    }
}

fn as_vector(v: &Value, path: &str) -> Result<QVector> {
    as_array(v, path)?.iter().enumerate().map(|(i, x)| as_rational(x, &format!("{path}[{i}]"))).collect()
}

fn as_matrix(v: &Value, path: &str) -> Result<QMatrix> {
    let rows = as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| as_vector(r, &format!("{path}[{i}]")).map(QVector::into_entries))
        .collect::<Result<Vec<_>>>()?;
    QMatrix::from_rows(rows).map_err(|e| err(path, e))
}

fn parse_generator(v: &Value, n: usize, path: &str) -> Result<HeisTriple> {
    let t = match v {
        Value::Object(obj) => {
            let a = as_vector(field(obj, "a", path)?, &format!("{path}.a"))?;
            let b = as_vector(field(obj, "b", path)?, &format!("{path}.b"))?;
            let c = as_rational(field(obj, "c", path)?, &format!("{path}.c"))?;
            if a.dim() + 2 != n {
                return Err(err(&format!("{path}.a"), format!("expected {} entries for n = {n}", n - 2)));
            }
            HeisTriple::new(a, b, c).map_err(|e| err(path, e))?
        }
        Value::Array(_) => {
            let m = as_matrix(v, path)?;
            if m.rows() != n || m.cols() != n {
                return Err(err(path, format!("expected a {n}x{n} matrix, found {}x{}", m.rows(), m.cols())));
            }
            HeisTriple::from_matrix(&m).map_err(|e| err(path, e))?
        }
        _ => return Err(err(path, "expected a triple object or a matrix")),
    };
    Ok(t)
}

pub fn parse_instance(text: &str) -> Result<GeneratorSet> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "$")?;
    let n = as_index(field(obj, "n", "$")?, "n")?;
    if n < 3 {
        return Err(err("n", format!("dimension must be at least 3, got {n}")));
    }
    let gens = as_array(field(obj, "generators", "$")?, "generators")?;
    if gens.is_empty() {
        return Err(err("generators", "at least one generator is required"));
    }
    let triples = gens
        .iter()
        .enumerate()
        .map(|(i, g)| parse_generator(g, n, &format!("generators[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(triples).map_err(|e| err("generators", e))
}

pub fn triple_to_json(t: &HeisTriple) -> Value {
    let strs = |v: &QVector| v.entries().iter().map(|x| Value::String(x.to_string())).collect::<Vec<_>>();
    json!({ "a": strs(t.a()), "b": strs(t.b()), "c": t.c().to_string() })
}

pub fn instance_to_json(gens: &GeneratorSet) -> Value {
    json!({
        "n": gens.n(),
        "generators": gens.generators().iter().map(triple_to_json).collect::<Vec<_>>(),
    })
}

fn factor_to_json(f: &Factor) -> Value {
    match f {
        Factor::Run { generator, exponent } => json!([generator, exponent.to_string()]),
        Factor::Repeat { body, times } => json!({
            "repeat": times.to_string(),
            "body": body.iter().map(factor_to_json).collect::<Vec<_>>(),
        }),
    }
}

pub fn product_to_json(p: &Product) -> Value {
    Value::Array(p.factors().iter().map(factor_to_json).collect())
}

fn parse_factor(v: &Value, path: &str) -> Result<Factor> {
    match v {
        Value::Array(pair) => {
            if pair.len() != 2 {
                return Err(err(path, "a run is [generator_index, \"exponent\"]"));
            }
            let g = as_index(&pair[0], &format!("{path}[0]"))?;
            let e = as_biguint(&pair[1], &format!("{path}[1]"))?;
            Ok(Factor::run(g, e))
        }
        Value::Object(obj) => {
            let times = as_biguint(field(obj, "repeat", path)?, &format!("{path}.repeat"))?;
            let body = parse_factors(field(obj, "body", path)?, &format!("{path}.body"))?;
            Ok(Factor::repeat(body, times))
        }
        _ => Err(err(path, "expected a run [index, \"exponent\"] or a {\"repeat\", \"body\"} block")),
    }
}

fn parse_factors(v: &Value, path: &str) -> Result<Vec<Factor>> {
    as_array(v, path)?.iter().enumerate().map(|(i, f)| parse_factor(f, &format!("{path}[{i}]"))).collect()
}

/// Accepts a verdict object with a `witness` field or a bare factor list.
pub fn parse_witness(text: &str) -> Result<Product> {
    let v = parse_json(text)?;
    let (list, path) = match &v {
        Value::Object(obj) => (field(obj, "witness", "$")?, "witness"),
        other => (other, "$"),
    };
    let factors = parse_factors(list, path)?;
    Product::new(factors).map_err(|e| err(path, e))
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    let mut obj = Map::new();
    let answer = match v.answer {
        Answer::Yes => "yes",
        Answer::No => "no",
    };
    obj.insert("answer".into(), answer.into());
    if let Some(w) = &v.witness {
        obj.insert("witness".into(), product_to_json(w.product()));
    }
    match &v.route {
        Some(Route::Commuting { clique }) => {
            obj.insert("route".into(), json!({ "commuting": clique }));
        }
        Some(Route::NonCommuting { i, j }) => {
            obj.insert("route".into(), json!({ "pair": [i, j] }));
        }
        None => {}
    }
    Value::Object(obj)
}

pub fn parse_system(text: &str) -> Result<DiophantineSystem> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "$")?;
    let a = as_matrix(field(obj, "A", "$")?, "A")?;
    let forced = match obj.get("forced") {
        None | Some(Value::Null) => Vec::new(),
        Some(f) => as_array(f, "forced")?
            .iter()
            .enumerate()
            .map(|(i, x)| as_index(x, &format!("forced[{i}]")))
            .collect::<Result<Vec<_>>>()?,
    };
    DiophantineSystem::new(a, forced).map_err(|e| err("A", e))
}

pub fn parse_pcp(text: &str) -> Result<PcpInstance> {
    let v = parse_json(text)?;
    let obj = as_object(&v, "$")?;
    let strings = |key: &str| -> Result<Vec<String>> {
        as_array(field(obj, key, "$")?, key)?
            .iter()
            .enumerate()
            .map(|(i, s)| s.as_str().map(str::to_owned).ok_or_else(|| err(&format!("{key}[{i}]"), "expected a string")))
            .collect()
    };
    let letters = strings("letters")?;
    let words = |key: &str| -> Result<Vec<_>> {
        strings(key)?
            .iter()
            .enumerate()
            .map(|(i, s)| parse_binary_word(s).map_err(|e| err(&format!("{key}[{i}]"), e)))
            .collect()
    };
    let g = words("g")?;
    let h = words("h")?;
    PcpInstance::new(letters, g, h).map_err(|e| err("$", e))
}

/// Resolves a solution given as letter names (`"a1 a2"`, `"a1,a2"`) or 0-based indices.
pub fn parse_pcp_solution(inst: &PcpInstance, text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|tok| {
            inst.letter_index(tok)
                .or_else(|| tok.parse::<usize>().ok().filter(|&i| i < inst.len()))
                .ok_or_else(|| err("solution", format!("unknown letter {tok:?}")))
        })
        .collect()
}

pub fn matrix_to_json(m: &QMatrix) -> Value {
    Value::Array(
        m.to_rows().iter().map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect())).collect(),
    )
}

pub fn matrix_list_to_json(set: &Sl4GeneratorSet) -> Value {
    json!({
        "matrices": set
            .generators
            .iter()
            .map(|g| json!({ "label": g.label.to_string(), "matrix": matrix_to_json(&g.matrix) }))
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::decide;

    const EXAMPLE: &str = r#"{"n": 3, "generators": [
        {"a": ["2"], "b": ["7"], "c": "20"},
        {"a": ["3"], "b": ["-2"], "c": "20"},
        {"a": ["-4"], "b": ["-6"], "c": "20"},
        {"a": ["-1"], "b": ["1"], "c": "20"}]}"#;

    fn message(e: Error) -> String {
        match e {
            Error::Malformed(m) => m,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn instance_round_trip() {
        let gens = parse_instance(EXAMPLE).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(gens.generators()[1], HeisTriple::h3(3, -2, 20));
        let again = parse_instance(&instance_to_json(&gens).to_string()).unwrap();
        assert_eq!(again, gens);
    }

    #[test]
    fn matrix_generators() {
        let text = r#"{"n": 3, "generators": [[["1","2","20"],["0","1","7"],["0","0","1"]]]}"#;
        let gens = parse_instance(text).unwrap();
        assert_eq!(gens.generators()[0], HeisTriple::h3(2, 7, 20));
        let bad = r#"{"n": 3, "generators": [[["1","2","20"],["0","2","7"],["0","0","1"]]]}"#;
        assert!(message(parse_instance(bad).unwrap_err()).starts_with("generators[0]"));
    }

    #[test]
    fn diagnostics_name_the_field() {
        let cases = [
            ("{", "$"),
            (r#"{"generators": []}"#, "$: missing field \"n\""),
            (r#"{"n": 3, "generators": [{"a": ["1"], "b": ["x"], "c": "0"}]}"#, "generators[0].b[0]"),
            (r#"{"n": 3, "generators": [{"a": ["1"], "b": ["1"]}]}"#, "generators[0]: missing field \"c\""),
            (r#"{"n": 4, "generators": [{"a": ["1"], "b": ["1"], "c": "0"}]}"#, "generators[0].a"),
            (r#"{"n": 3, "generators": [{"a": ["1"], "b": ["1"], "c": "1/0"}]}"#, "generators[0].c"),
        ];
        for (text, prefix) in cases {
            let m = message(parse_instance(text).unwrap_err());
            assert!(m.starts_with(prefix), "{m:?} should start with {prefix:?}");
        }
    }

    #[test]
    fn verdict_and_witness_round_trip() {
        let gens = parse_instance(EXAMPLE).unwrap();
        let v = decide(&gens).unwrap();
        let text = verdict_to_json(&v).to_string();
        let p = parse_witness(&text).unwrap();
        assert_eq!(&p, v.witness.as_ref().unwrap().product());
        assert!(p.evaluate(gens.generators()).unwrap().is_identity());
    }

    #[test]
    fn no_verdict_omits_witness() {
        let gens = parse_instance(r#"{"n":3,"generators":[{"a":["1"],"b":["0"],"c":"0"}]}"#).unwrap();
        let j = verdict_to_json(&decide(&gens).unwrap());
        assert_eq!(j, json!({"answer": "no"}));
    }

    #[test]
    fn bare_witness_list() {
        let p = parse_witness(r#"[[0, "3"], {"repeat": "2", "body": [[1, "1"], [0, "5"]]}]"#).unwrap();
        assert_eq!(p.expanded_len(), BigUint::from(15u32));
        assert!(message(parse_witness(r#"[[0, "-1"]]"#).unwrap_err()).starts_with("$[0][1]"));
    }

    #[test]
    fn system_and_pcp() {
        let sys = parse_system(r#"{"A": [["2","3","-4","-1"]], "forced": [0, 2]}"#).unwrap();
        assert_eq!(sys.num_vars(), 4);
        assert!(message(parse_system(r#"{"A": [["1"]], "forced": ["x"]}"#).unwrap_err()).starts_with("forced[0]"));

        let inst = parse_pcp(r#"{"letters": ["a1","a2"], "g": ["ab","b"], "h": ["a","bb"]}"#).unwrap();
        assert_eq!(parse_pcp_solution(&inst, "a1 a2").unwrap(), vec![0, 1]);
        assert_eq!(parse_pcp_solution(&inst, "0,1").unwrap(), vec![0, 1]);
        assert!(parse_pcp_solution(&inst, "a3").is_err());
        let bad = r#"{"letters": ["a1"], "g": ["ac"], "h": ["a"]}"#;
        assert!(message(parse_pcp(bad).unwrap_err()).starts_with("g[0]"));
    }
}
