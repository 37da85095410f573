use dickson_pte::blocks::{search, BlockProductInstance};
use dickson_pte::catalog;
use dickson_pte::families::{verify_family, Certificate, EquationFamily};
use dickson_pte::pell::SolutionSeq;
use dickson_pte::pte::{construct_pte3, PteSet};
use dickson_pte::rational::{frac, int};
use dickson_pte::stdpairs::{param_factorization, DicksonFactorization};
use dickson_pte::Poly;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

const DOC: &str = include_str!("../../../docs/json-schemas.md");

/// Code blocks fenced as ```json <tag>.
fn doc_examples(tag: &str) -> Vec<&'static str> {
    let fence = format!("```json {tag}\n");
    DOC.split(&fence).skip(1).map(|rest| rest.split("```").next().unwrap()).collect()
}

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
    let text = serde_json::to_string(v).unwrap();
    let back: T = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, v);
}

fn doc_round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(tag: &str) {
    let examples = doc_examples(tag);
    assert!(!examples.is_empty(), "no {tag} example");
    for ex in examples {
        let v: T = serde_json::from_str(ex).unwrap_or_else(|e| panic!("{tag}: {e}"));
        let reparsed: Value = serde_json::from_str(ex).unwrap();
        assert_eq!(serde_json::to_value(&v).unwrap(), reparsed, "{tag}");
    }
}

#[test]
fn documented_examples_parse_and_reserialize() {
    doc_round_trip::<Poly>("poly");
    doc_round_trip::<PteSet>("pteset");
    doc_round_trip::<DicksonFactorization>("dicksonfactorization");
    doc_round_trip::<SolutionSeq>("solutionseq");
    doc_round_trip::<Certificate>("certificate");
    doc_round_trip::<BlockProductInstance>("blockproductinstance");
}

#[test]
fn poly_json_is_ascending_strings() {
    let p = Poly::new(vec![frac(-1, 2), int(0), int(3)]);
    assert_eq!(serde_json::to_value(&p).unwrap(), serde_json::json!({"coeffs": ["-1/2", "0", "3"]}));
    assert_eq!(serde_json::to_value(Poly::zero()).unwrap(), serde_json::json!({"coeffs": []}));
    let trailing: Poly = serde_json::from_str(r#"{"coeffs": ["2/4", "0"]}"#).unwrap();
    assert_eq!(trailing, Poly::constant(frac(1, 2)));
    round_trip(&p);
}

#[test]
fn malformed_inputs_are_rejected() {
    assert!(serde_json::from_str::<Poly>(r#"{"coeffs": ["1/0"]}"#).is_err());
    assert!(serde_json::from_str::<Poly>(r#"{"coeffs": [1, 2]}"#).is_err());
    assert!(serde_json::from_str::<Poly>(r#"{"coeffs": ["1"], "x": 1}"#).is_err());
    // off-curve seed
    let seq = r#"{"eq": {"D": 2, "N": -1}, "seeds": [["1", "2"], ["7", "5"]], "t": 6}"#;
    assert!(serde_json::from_str::<SolutionSeq>(seq).is_err());
    // square D
    let seq = r#"{"eq": {"D": 9, "N": -1}, "seeds": [["1", "1"], ["7", "5"]], "t": 6}"#;
    assert!(serde_json::from_str::<SolutionSeq>(seq).is_err());
    // products differ
    let inst = r#"{"blockA": [14, 15], "blockB": [5, 7], "chosenA": [14, 15], "chosenB": [5, 6, 7],
        "product": "211", "divisibility_class": "k-div-2l", "sporadic": false}"#;
    assert!(serde_json::from_str::<BlockProductInstance>(inst).is_err());
    let df = r#"{"N": 3, "w": ["1"], "b": "1", "u": "0", "extra": true}"#;
    assert!(serde_json::from_str::<DicksonFactorization>(df).is_err());
}

#[test]
fn constructed_objects_round_trip() {
    round_trip(&construct_pte3(1729).unwrap());
    round_trip(&param_factorization(6, &int(211), &int(25), None).unwrap());
    for inst in search(4, 60, 2, 4).unwrap() {
        round_trip(&inst);
    }
    for id in catalog::EXAMPLE_IDS {
        for fam in catalog::families(id).unwrap() {
            round_trip::<EquationFamily>(&fam);
            round_trip(&verify_family(&fam, 10));
        }
    }
}

#[test]
fn swapped_seeds_are_reordered_on_input() {
    let seq: SolutionSeq =
        serde_json::from_str(r#"{"eq": {"D": 2, "N": -1}, "seeds": [["7", "5"], ["1", "1"]], "t": 6}"#).unwrap();
    assert_eq!(serde_json::to_value(&seq).unwrap()["seeds"], serde_json::json!([["1", "1"], ["7", "5"]]));
}
