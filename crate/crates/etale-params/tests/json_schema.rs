//! JSON encoding of class parameters: stable wire shape, lossless
//! round-trips, and rejection of malformed input.

mod common;

use base_field::Place;
use base_field::Sign;
use common::*;
use etale_params::{
    class_param_from_json, class_param_to_json, ClassParam, EtaleAlg, EtaleElem, Mode,
};
use rand::Rng;
use serde_json::json;

#[test]
fn encoding_matches_the_documented_wire_shape() {
    let sharp = qp(5);
    let alg = EtaleAlg::new(
        Place::Padic(5),
        vec![etale_params::Factor::inert(sharp.clone(), sharp.from_i64(2))],
    )
    .unwrap();
    let sqrt2 = EtaleElem {
        components: vec![(sharp.from_i64(0), sharp.from_i64(1))],
    };
    let param = ClassParam::new(
        Sign::Minus,
        Mode::Lie,
        alg,
        sqrt2.clone(),
        sqrt2.clone(),
    )
    .unwrap();
    let v = class_param_to_json(&param).unwrap();
    assert_eq!(
        v,
        json!({
            "epsilon": -1,
            "mode": "lie",
            "factors": [{
                "ksharp": {"p": 5, "unramified": [0, 1], "eisenstein": [["-5"]]},
                "kind": {"inert": "2"},
            }],
            "a": [["0", "1"]],
            "c": [["0", "1"]],
        })
    );
}

#[test]
fn seeded_parameters_round_trip_losslessly() {
    let mut r = rng(930);
    for place in [Place::Padic(3), Place::Padic(5), Place::Padic(7), Place::Real] {
        for trial in 0..10 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let eps = if trial % 2 == 0 { Sign::Plus } else { Sign::Minus };
            let param = if trial % 3 == 0 {
                random_lie_param(&mut r, &alg, eps)
            } else {
                random_group_param(&mut r, &alg, eps)
            };
            let v = class_param_to_json(&param).unwrap();
            assert_eq!(class_param_from_json(&v).unwrap(), param);
            // through an actual string as well
            let text = serde_json::to_string(&v).unwrap();
            let reparsed: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(class_param_from_json(&reparsed).unwrap(), param);
        }
    }
}

#[test]
fn dimension_zero_parameters_carry_an_explicit_place() {
    for place in [Place::Padic(5), Place::Real] {
        let alg = EtaleAlg::new(place, vec![]).unwrap();
        let e = EtaleElem { components: vec![] };
        let param =
            ClassParam::new(Sign::Plus, Mode::Group, alg, e.clone(), e.clone()).unwrap();
        let v = class_param_to_json(&param).unwrap();
        let expected_place = match place {
            Place::Real => json!("real"),
            Place::Padic(p) => json!({"padic": p}),
        };
        assert_eq!(v.get("place"), Some(&expected_place));
        assert_eq!(class_param_from_json(&v).unwrap(), param);

        // dropping the place makes the document ambiguous → rejected
        let mut stripped = v.clone();
        stripped.as_object_mut().unwrap().remove("place");
        assert!(class_param_from_json(&stripped).is_err());
    }
}

#[test]
fn malformed_documents_are_rejected() {
    let good = json!({
        "epsilon": -1,
        "mode": "lie",
        "factors": [{
            "ksharp": {"p": 5, "unramified": [0, 1], "eisenstein": [["-5"]]},
            "kind": {"inert": "2"},
        }],
        "a": [["0", "1"]],
        "c": [["0", "1"]],
    });
    assert!(class_param_from_json(&good).is_ok());

    let set = |path: &str, v: serde_json::Value| {
        let mut doc = good.clone();
        *doc.get_mut(path).unwrap() = v;
        doc
    };

    // epsilon outside ±1
    assert!(class_param_from_json(&set("epsilon", json!(2))).is_err());
    assert!(class_param_from_json(&set("epsilon", json!("minus"))).is_err());
    // unknown mode
    assert!(class_param_from_json(&set("mode", json!("adjoint"))).is_err());
    // inert d must be a non-square: 4 = 2² in ℚ₅
    assert!(class_param_from_json(&set(
        "factors",
        json!([{
            "ksharp": {"p": 5, "unramified": [0, 1], "eisenstein": [["-5"]]},
            "kind": {"inert": "4"},
        }])
    ))
    .is_err());
    // wrong number of factor coordinates
    assert!(class_param_from_json(&set("a", json!([["0", "1"], ["0", "1"]]))).is_err());
    // a coordinate that is not a pair
    assert!(class_param_from_json(&set("a", json!([["0"]]))).is_err());
    // unparsable rational
    assert!(class_param_from_json(&set("c", json!([["0", "one"]]))).is_err());
    // semantic validation still runs: τ(c) = ε·c fails for c = 1, ε = −1
    assert!(class_param_from_json(&set("c", json!([["1", "0"]]))).is_err());

    // missing keys
    for key in ["epsilon", "mode", "factors", "a", "c"] {
        let mut doc = good.clone();
        doc.as_object_mut().unwrap().remove(key);
        assert!(class_param_from_json(&doc).is_err(), "missing {key}");
    }

    // a factor kind that is neither "split" nor {"inert": d}
    assert!(class_param_from_json(&set(
        "factors",
        json!([{
            "ksharp": {"p": 5, "unramified": [0, 1], "eisenstein": [["-5"]]},
            "kind": "ramified",
        }])
    ))
    .is_err());
}
