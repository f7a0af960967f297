//! Text encoding of every value the command line reads or prints.
//!
//! The encodings are JSON with a canonical surface: sequence keys are plain
//! decimal indices in increasing order, default entries (value 1 for filter
//! generators, 0 for displacements) are never written, and permutations list
//! only moved points. Parsers reject anything off that surface so a rendered
//! value is the only accepted spelling.

use crate::error::{Error, Result};
use crate::monoid::{BPair, Element, SdpElem};
use crate::congruence::QuotElem;
use crate::perm::Perm;
use crate::seq::{Index, NSeq, ZSeq, VALUE_CAP};
use serde_json::Value;

pub fn render_nseq(a: &NSeq) -> String {
    let body: Vec<String> = a.entries().map(|(x, v)| format!("\"{x}\":{v}")).collect();
    format!("{{{}}}", body.join(","))
}

pub fn render_zseq(z: &ZSeq) -> String {
    let body: Vec<String> = z.entries().map(|(x, v)| format!("\"{x}\":{v}")).collect();
    format!("{{{}}}", body.join(","))
}

pub fn render_perm(g: &Perm) -> String {
    let body: Vec<String> = g.pairs().map(|(x, y)| format!("[{x},{y}]")).collect();
    format!("[{}]", body.join(","))
}

pub fn render_element(e: &Element) -> String {
    format!(
        "{{\"g\":{},\"d\":{},\"r\":{}}}",
        render_perm(&e.g),
        render_nseq(&e.d),
        render_nseq(&e.r)
    )
}

pub fn render_pair(p: &BPair) -> String {
    format!("[{},{}]", render_nseq(&p.p), render_nseq(&p.q))
}

pub fn render_sdp(s: &SdpElem) -> String {
    format!("{{\"g\":{},\"pair\":{}}}", render_perm(&s.g), render_pair(&s.pair))
}

pub fn render_quot(q: &QuotElem) -> String {
    format!("{{\"g\":{},\"z\":{}}}", render_perm(&q.g), render_zseq(&q.z))
}

fn err(at: &str, msg: impl Into<String>) -> Error {
    Error::Parse { at: at.to_string(), msg: msg.into() }
}

fn top_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| err("$", e.to_string()))
}

fn key_index(k: &str, at: &str) -> Result<Index> {
    let n: Index = k
        .parse()
        .map_err(|_| err(at, format!("key {k:?} is not a decimal index")))?;
    if n.to_string() != k {
        return Err(err(at, format!("key {k:?} is not in canonical decimal form")));
    }
    Ok(n)
}

fn int_value(v: &Value, at: &str) -> Result<i64> {
    v.as_i64().ok_or_else(|| err(at, "expected an integer"))
}

fn index_value(v: &Value, at: &str) -> Result<Index> {
    v.as_u64().ok_or_else(|| err(at, "expected a nonnegative integer index"))
}

fn value_nseq(v: &Value, at: &str) -> Result<NSeq> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(at, "expected an object of index keys"))?;
    let mut entries = Vec::with_capacity(obj.len());
    for (k, raw) in obj {
        let here = format!("{at}.{k}");
        let x = key_index(k, &here)?;
        let val = int_value(raw, &here)?;
        if val == 1 {
            return Err(err(&here, "value 1 is the default and is never written"));
        }
        if !(2..=VALUE_CAP).contains(&val) {
            return Err(err(&here, format!("value {val} is outside [2, {VALUE_CAP}]")));
        }
        entries.push((x, val));
    }
    NSeq::from_entries(entries).map_err(|e| err(at, e.to_string()))
}

fn value_zseq(v: &Value, at: &str) -> Result<ZSeq> {
    let obj = v
        .as_object()
        .ok_or_else(|| err(at, "expected an object of index keys"))?;
    let mut entries = Vec::with_capacity(obj.len());
    for (k, raw) in obj {
        let here = format!("{at}.{k}");
        let x = key_index(k, &here)?;
        let val = int_value(raw, &here)?;
        if val == 0 {
            return Err(err(&here, "value 0 is the default and is never written"));
        }
        if val.unsigned_abs() as i64 > VALUE_CAP {
            return Err(err(&here, format!("value {val} is outside [-{VALUE_CAP}, {VALUE_CAP}]")));
        }
        entries.push((x, val));
    }
    ZSeq::from_entries(entries).map_err(|e| err(at, e.to_string()))
}

fn value_perm(v: &Value, at: &str) -> Result<Perm> {
    let arr = v
        .as_array()
        .ok_or_else(|| err(at, "expected an array of [from, to] pairs"))?;
    let mut pairs = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        let here = format!("{at}[{i}]");
        let pair = item
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| err(&here, "expected a [from, to] pair"))?;
        let x = index_value(&pair[0], &here)?;
        let y = index_value(&pair[1], &here)?;
        if x == y {
            return Err(err(&here, format!("fixed point {x} is never written")));
        }
        pairs.push((x, y));
    }
    Perm::from_pairs(pairs).map_err(|e| err(at, e.to_string()))
}

fn object_fields<'v>(
    v: &'v Value,
    at: &str,
    fields: &[&str],
) -> Result<Vec<&'v Value>> {
    let obj = v.as_object().ok_or_else(|| err(at, "expected an object"))?;
    for k in obj.keys() {
        if !fields.contains(&k.as_str()) {
            return Err(err(at, format!("unknown key {k:?}")));
        }
    }
    fields
        .iter()
        .map(|f| obj.get(*f).ok_or_else(|| err(at, format!("missing key {f:?}"))))
        .collect()
}

pub fn parse_nseq(text: &str) -> Result<NSeq> {
    value_nseq(&top_value(text)?, "$")
}

pub fn parse_perm(text: &str) -> Result<Perm> {
    value_perm(&top_value(text)?, "$")
}

pub fn parse_element(text: &str) -> Result<Element> {
    let v = top_value(text)?;
    let f = object_fields(&v, "$", &["g", "d", "r"])?;
    Ok(Element::new(
        value_perm(f[0], "$.g")?,
        value_nseq(f[1], "$.d")?,
        value_nseq(f[2], "$.r")?,
    ))
}

pub fn parse_quot(text: &str) -> Result<QuotElem> {
    let v = top_value(text)?;
    let f = object_fields(&v, "$", &["g", "z"])?;
    Ok(QuotElem { g: value_perm(f[0], "$.g")?, z: value_zseq(f[1], "$.z")? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_are_canonical() {
        assert_eq!(render_nseq(&NSeq::one()), "{}");
        let a = NSeq::from_entries([(3, 7), (0, 2)]).unwrap();
        assert_eq!(render_nseq(&a), "{\"0\":2,\"3\":7}");
        let z = ZSeq::from_entries([(1, -4), (0, 2)]).unwrap();
        assert_eq!(render_zseq(&z), "{\"0\":2,\"1\":-4}");
        assert_eq!(render_perm(&Perm::identity()), "[]");
        assert_eq!(render_perm(&Perm::transposition(1, 0)), "[[0,1],[1,0]]");
        let e = Element::new(Perm::identity(), a.clone(), NSeq::one());
        assert_eq!(render_element(&e), "{\"g\":[],\"d\":{\"0\":2,\"3\":7},\"r\":{}}");
        let q = QuotElem { g: Perm::transposition(0, 1), z: z.clone() };
        assert_eq!(render_quot(&q), "{\"g\":[[0,1],[1,0]],\"z\":{\"0\":2,\"1\":-4}}");
        let s = e.psi();
        assert_eq!(
            render_sdp(&s),
            "{\"g\":[],\"pair\":[{\"0\":2,\"3\":7},{}]}"
        );
    }

    #[test]
    fn round_trips() {
        let texts = [
            "{\"g\":[],\"d\":{},\"r\":{}}",
            "{\"g\":[[0,1],[1,0]],\"d\":{\"0\":2},\"r\":{\"1\":3}}",
            "{\"g\":[[0,4],[2,0],[4,2]],\"d\":{\"2\":2,\"4\":9},\"r\":{\"0\":5}}",
        ];
        for t in texts {
            assert_eq!(render_element(&parse_element(t).unwrap()), t);
        }
        let quots = ["{\"g\":[],\"z\":{}}", "{\"g\":[[0,1],[1,0]],\"z\":{\"0\":-1,\"7\":2}}"];
        for t in quots {
            assert_eq!(render_quot(&parse_quot(t).unwrap()), t);
        }
        assert_eq!(render_nseq(&parse_nseq("{\"0\":4,\"1\":2}").unwrap()), "{\"0\":4,\"1\":2}");
    }

    #[test]
    fn rejects_off_surface_text() {
        let bad = |t: &str| parse_element(t).unwrap_err();
        match bad("nonsense") {
            Error::Parse { at, .. } => assert_eq!(at, "$"),
            e => panic!("unexpected {e:?}"),
        }
        match bad("{\"g\":[],\"d\":{}}") {
            Error::Parse { at, msg } => {
                assert_eq!(at, "$");
                assert!(msg.contains("\"r\""));
            }
            e => panic!("unexpected {e:?}"),
        }
        match bad("{\"g\":[],\"d\":{},\"r\":{},\"x\":1}") {
            Error::Parse { at, msg } => {
                assert_eq!(at, "$");
                assert!(msg.contains("\"x\""));
            }
            e => panic!("unexpected {e:?}"),
        }
        match bad("{\"g\":[],\"d\":{\"0\":1},\"r\":{}}") {
            Error::Parse { at, .. } => assert_eq!(at, "$.d.0"),
            e => panic!("unexpected {e:?}"),
        }
        for t in [
            "{\"g\":[],\"d\":{\"0\":0},\"r\":{}}",
            "{\"g\":[],\"d\":{\"0\":-3},\"r\":{}}",
            "{\"g\":[],\"d\":{\"00\":2},\"r\":{}}",
            "{\"g\":[],\"d\":{\"+1\":2},\"r\":{}}",
            "{\"g\":[],\"d\":{\"0\":2.5},\"r\":{}}",
            "{\"g\":[],\"d\":{\"0\":1099511627777},\"r\":{}}",
            "{\"g\":[[0,0]],\"d\":{},\"r\":{}}",
            "{\"g\":[[0,1]],\"d\":{},\"r\":{}}",
            "{\"g\":[[0,1],[0,2],[1,0],[2,0]],\"d\":{},\"r\":{}}",
            "{\"g\":[[0]],\"d\":{},\"r\":{}}",
            "{\"g\":[[0,1],[1,-1]],\"d\":{},\"r\":{}}",
            "{\"g\":7,\"d\":{},\"r\":{}}",
            "[1,2]",
        ] {
            assert!(matches!(bad(t), Error::Parse { .. }), "accepted {t}");
        }
        assert!(matches!(parse_quot("{\"g\":[],\"z\":{\"0\":0}}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quot("{\"g\":[],\"d\":{}}"), Err(Error::Parse { .. })));
        assert!(matches!(parse_nseq("{\"0\":1}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_errors_exit_as_usage_errors() {
        assert_eq!(parse_nseq("{").unwrap_err().exit_code(), 2);
    }
}
