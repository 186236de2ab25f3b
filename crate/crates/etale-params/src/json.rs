//! JSON encoding of class parameters.
//!
//! The wire format is
//!
//! ```json
//! {"epsilon": 1, "mode": "group",
//!  "factors": [{"ksharp": "...", "kind": "split"},
//!              {"ksharp": "...", "kind": {"inert": "2"}}],
//!  "a": [...], "c": [...]}
//! ```
//!
//! where a coefficient field is `"real"`, `"complex"`, or
//! `{"p": 5, "unramified": [3,0,1], "eisenstein": [["-5","0"]]}`
//! (the two-stage tower presentation), a coefficient-field element is a
//! `"num/den"` string in degree one, a `["re", "im"]` pair over the
//! complex field, and otherwise an array of flat `"num/den"` coordinates,
//! and an algebra element lists one `[first, second]` coordinate pair per
//! factor.  An optional `"place"` key (`"real"` or `{"padic": p}`) pins
//! the base field when the factor list is empty.

use crate::algebra::{EtaleAlg, EtaleElem, Factor, FactorKind};
use crate::class_param::{ClassParam, Mode};
use crate::field::{SharpElem, SharpField};
use base_field::rat::{format_rat, parse_rat, Rat};
use base_field::{BaseError, ExtField, Place, Result, Sign};
use serde_json::{json, Value};

fn rat_value(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

fn rat_from_value(v: &Value) -> Result<Rat> {
    let s = v
        .as_str()
        .ok_or_else(|| BaseError::invalid("expected a \"num/den\" string"))?;
    parse_rat(s)
}

fn sharp_field_to_json(f: &SharpField) -> Value {
    match f {
        SharpField::Real => json!("real"),
        SharpField::Complex => json!("complex"),
        SharpField::Padic(ext) => json!({
            "p": ext.p(),
            "unramified": ext.f_modulus(),
            "eisenstein": ext
                .e_coeffs()
                .iter()
                .map(|row| row.iter().map(rat_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        }),
    }
}

fn sharp_field_from_json(v: &Value) -> Result<SharpField> {
    if let Some(s) = v.as_str() {
        return match s {
            "real" => Ok(SharpField::Real),
            "complex" => Ok(SharpField::Complex),
            _ => Err(BaseError::invalid(format!("unknown coefficient field {s:?}"))),
        };
    }
    let obj = v
        .as_object()
        .ok_or_else(|| BaseError::invalid("coefficient field must be a string or object"))?;
    let p = obj
        .get("p")
        .and_then(Value::as_u64)
        .ok_or_else(|| BaseError::invalid("coefficient field needs an integer \"p\""))?;
    let f_modulus = obj
        .get("unramified")
        .and_then(Value::as_array)
        .ok_or_else(|| BaseError::invalid("coefficient field needs \"unramified\" coefficients"))?
        .iter()
        .map(|c| {
            c.as_u64()
                .ok_or_else(|| BaseError::invalid("unramified coefficients must be integers"))
        })
        .collect::<Result<Vec<u64>>>()?;
    let e_coeffs = obj
        .get("eisenstein")
        .and_then(Value::as_array)
        .ok_or_else(|| BaseError::invalid("coefficient field needs \"eisenstein\" coefficients"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| BaseError::invalid("eisenstein rows must be arrays"))?
                .iter()
                .map(rat_from_value)
                .collect::<Result<Vec<Rat>>>()
        })
        .collect::<Result<Vec<Vec<Rat>>>>()?;
    Ok(SharpField::Padic(ExtField::new(p, f_modulus, e_coeffs)?))
}

fn sharp_elem_to_json(f: &SharpField, x: &SharpElem) -> Result<Value> {
    Ok(match (f, x) {
        (SharpField::Real, SharpElem::Real(r)) => rat_value(r),
        (SharpField::Complex, SharpElem::Complex(re, im)) => {
            Value::Array(vec![rat_value(re), rat_value(im)])
        }
        (SharpField::Padic(ext), SharpElem::Padic(v)) => {
            let flat = ext.to_flat(v);
            if flat.len() == 1 {
                rat_value(&flat[0])
            } else {
                Value::Array(flat.iter().map(rat_value).collect())
            }
        }
        _ => return Err(BaseError::invalid("element outside its coefficient field")),
    })
}

fn sharp_elem_from_json(f: &SharpField, v: &Value) -> Result<SharpElem> {
    match f {
        SharpField::Real => Ok(SharpElem::Real(rat_from_value(v)?)),
        SharpField::Complex => {
            let arr = v
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| BaseError::invalid("complex element must be a [re, im] pair"))?;
            Ok(SharpElem::Complex(
                rat_from_value(&arr[0])?,
                rat_from_value(&arr[1])?,
            ))
        }
        SharpField::Padic(ext) => {
            let flat = if let Some(arr) = v.as_array() {
                arr.iter().map(rat_from_value).collect::<Result<Vec<Rat>>>()?
            } else {
                vec![rat_from_value(v)?]
            };
            Ok(SharpElem::Padic(ext.from_flat(&flat)?))
        }
    }
}

fn factor_to_json(f: &Factor) -> Result<Value> {
    let kind = match &f.kind {
        FactorKind::Split => json!("split"),
        FactorKind::Inert(d) => json!({ "inert": sharp_elem_to_json(&f.sharp, d)? }),
    };
    Ok(json!({ "ksharp": sharp_field_to_json(&f.sharp), "kind": kind }))
}

fn factor_from_json(v: &Value) -> Result<Factor> {
    let obj = v
        .as_object()
        .ok_or_else(|| BaseError::invalid("factor must be an object"))?;
    let sharp = sharp_field_from_json(
        obj.get("ksharp")
            .ok_or_else(|| BaseError::invalid("factor needs a \"ksharp\""))?,
    )?;
    let kind_v = obj
        .get("kind")
        .ok_or_else(|| BaseError::invalid("factor needs a \"kind\""))?;
    let kind = if kind_v.as_str() == Some("split") {
        FactorKind::Split
    } else if let Some(inner) = kind_v.as_object().and_then(|o| o.get("inert")) {
        FactorKind::Inert(sharp_elem_from_json(&sharp, inner)?)
    } else {
        return Err(BaseError::invalid(
            "factor kind must be \"split\" or {\"inert\": d}",
        ));
    };
    Ok(Factor { sharp, kind })
}

fn elem_to_json(alg: &EtaleAlg, x: &EtaleElem) -> Result<Value> {
    let mut out = Vec::with_capacity(alg.num_factors());
    for (f, (a, b)) in alg.factors().iter().zip(&x.components) {
        out.push(Value::Array(vec![
            sharp_elem_to_json(&f.sharp, a)?,
            sharp_elem_to_json(&f.sharp, b)?,
        ]));
    }
    Ok(Value::Array(out))
}

fn elem_from_json(alg: &EtaleAlg, v: &Value) -> Result<EtaleElem> {
    let arr = v
        .as_array()
        .ok_or_else(|| BaseError::invalid("element must be an array of coordinate pairs"))?;
    if arr.len() != alg.num_factors() {
        return Err(BaseError::Dim("element has the wrong number of factors".into()));
    }
    let mut components = Vec::with_capacity(arr.len());
    for (f, pair) in alg.factors().iter().zip(arr) {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| BaseError::invalid("each factor coordinate must be a pair"))?;
        components.push((
            sharp_elem_from_json(&f.sharp, &pair[0])?,
            sharp_elem_from_json(&f.sharp, &pair[1])?,
        ));
    }
    Ok(EtaleElem { components })
}

fn place_to_json(place: Place) -> Value {
    match place {
        Place::Real => json!("real"),
        Place::Padic(p) => json!({ "padic": p }),
    }
}

fn place_from_json(v: &Value) -> Result<Place> {
    if v.as_str() == Some("real") {
        return Ok(Place::Real);
    }
    if let Some(p) = v.as_object().and_then(|o| o.get("padic")).and_then(Value::as_u64) {
        return Ok(Place::Padic(p));
    }
    Err(BaseError::invalid("place must be \"real\" or {\"padic\": p}"))
}

/// Encode a class parameter as a JSON value.
pub fn class_param_to_json(param: &ClassParam) -> Result<Value> {
    let alg = param.algebra();
    let factors = alg
        .factors()
        .iter()
        .map(factor_to_json)
        .collect::<Result<Vec<_>>>()?;
    let mut obj = serde_json::Map::new();
    obj.insert("epsilon".into(), json!(param.epsilon().as_i64()));
    obj.insert(
        "mode".into(),
        json!(match param.mode() {
            Mode::Group => "group",
            Mode::Lie => "lie",
        }),
    );
    if alg.num_factors() == 0 {
        obj.insert("place".into(), place_to_json(alg.place()));
    }
    obj.insert("factors".into(), Value::Array(factors));
    obj.insert("a".into(), elem_to_json(alg, param.a())?);
    obj.insert("c".into(), elem_to_json(alg, param.c())?);
    Ok(Value::Object(obj))
}

/// Decode and validate a class parameter from a JSON value.
pub fn class_param_from_json(v: &Value) -> Result<ClassParam> {
    let obj = v
        .as_object()
        .ok_or_else(|| BaseError::invalid("class parameter must be an object"))?;
    let epsilon = Sign::from_i64(
        obj.get("epsilon")
            .and_then(Value::as_i64)
            .ok_or_else(|| BaseError::invalid("parameter needs an \"epsilon\" of ±1"))?,
    )?;
    let mode = match obj.get("mode").and_then(Value::as_str) {
        Some("group") => Mode::Group,
        Some("lie") => Mode::Lie,
        _ => return Err(BaseError::invalid("parameter \"mode\" must be \"group\" or \"lie\"")),
    };
    let factors = obj
        .get("factors")
        .and_then(Value::as_array)
        .ok_or_else(|| BaseError::invalid("parameter needs a \"factors\" array"))?
        .iter()
        .map(factor_from_json)
        .collect::<Result<Vec<Factor>>>()?;
    let place = match (factors.first(), obj.get("place")) {
        (_, Some(pv)) => place_from_json(pv)?,
        (Some(f), None) => f.sharp.place(),
        (None, None) => {
            return Err(BaseError::invalid(
                "a parameter with no factors needs an explicit \"place\"",
            ))
        }
    };
    let alg = EtaleAlg::new(place, factors)?;
    let a = elem_from_json(
        &alg,
        obj.get("a")
            .ok_or_else(|| BaseError::invalid("parameter needs an \"a\""))?,
    )?;
    let c = elem_from_json(
        &alg,
        obj.get("c")
            .ok_or_else(|| BaseError::invalid("parameter needs a \"c\""))?,
    )?;
    ClassParam::new(epsilon, mode, alg, a, c)
}
