use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dickson-pte")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn reps_lists_pairs() {
    let (code, v) = json(&["reps", "--form", "sq", "--m", "1105"]);
    assert_eq!(code, 0);
    let pairs: Vec<(u64, u64)> = v["result"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["x"].as_u64().unwrap(), r["y"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(33, 4), (32, 9), (31, 12), (24, 23)]);
    assert_eq!(v["result"][0]["form"], "sq");
}

#[test]
fn reps_rejects_bad_modulus() {
    let (code, v) = json(&["reps", "--form", "hex", "--m", "21"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "BadModulusClass");
    let (code, _) = json(&["reps", "--form", "hex", "--m", "21", "--unrestricted"]);
    assert_eq!(code, 0);
}

#[test]
fn pte_construct_and_decompose() {
    let (code, v) = json(&["pte", "construct", "--m", "6", "--M", "1729"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["offsets"],
        serde_json::json!(["-26625600", "-177422400", "-508953600", "-761760000"])
    );
    // (x^2 - 1)(x^2 - 4) = phi(x^2)
    let (code, v) = json(&["pte", "decompose", "--f", r#"{"coeffs":["4","0","-5","0","1"]}"#, "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["inner"], serde_json::json!({"coeffs": ["0", "0", "1"]}));
    assert_eq!(v["result"]["p_list"], serde_json::json!(["1", "4"]));
}

#[test]
fn pte_verify_flags_a_bad_set() {
    let good = r#"{"m":2,"blocks":[["1","4"],["2","3"],["0","5"]],"shared":{"coeffs":["0","-5","1"]},"offsets":["4","6","0"]}"#;
    let (code, v) = json(&["pte", "verify", "--set", good]);
    assert_eq!(code, 0, "{v}");
    let broken = r#"{"m":2,"blocks":[["1","4"],["2","5"]],"shared":{"coeffs":["0","-5","1"]},"offsets":["4","10"]}"#;
    let (code, _) = json(&["pte", "verify", "--set", broken]);
    assert_eq!(code, 2);
}

#[test]
fn stdpair_factorize() {
    let (code, v) = json(&["stdpair", "factorize", "--N", "3", "--w1", "14", "--w2", "77"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["b"], "2401");
    assert_eq!(v["result"]["u"], "-98098");
    assert_eq!(v["result"]["w"], serde_json::json!(["14", "77", "-91"]));
    let (code, v) = json(&["stdpair", "factorize", "--N", "3", "--w1", "1", "--w2", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "DegenerateRoots");
    let (code, _) = json(&["stdpair", "factorize", "--N", "2", "--w1", "-3/2", "--b", "5"]);
    assert_eq!(code, 0);
}

#[test]
fn classify_both_simple() {
    let (code, v) = json(&["classify", "--k", "2", "--l", "3", "--both-simple"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], serde_json::json!([{"m": 2, "n": 3, "s": 1}]));
    let (_, v) = json(&["classify", "--k", "3", "--l", "4", "--both-simple"]);
    assert_eq!(v["result"], serde_json::json!([]));
}

#[test]
fn pell_sequences() {
    let (code, v) = json(&["pell", "--D", "2", "--N", "-1", "--bound", "10", "--count", "4"]);
    assert_eq!(code, 0);
    let orbit = &v["result"]["orbits"][0];
    assert_eq!(orbit["sequence"]["t"], 6);
    assert_eq!(orbit["elements"], serde_json::json!([["-1", "1"], ["1", "1"], ["7", "5"], ["41", "29"]]));
    let (code, _) = json(&["pell", "--D", "4", "--N", "1"]);
    assert_eq!(code, 3);
    let (code, _) = json(&["pell", "--D", "2", "--N", "-1", "--bound", "1000000000"]);
    assert_eq!(code, 4);
}

#[test]
fn family_build_example_and_generic() {
    let (code, v) = json(&["family", "build", "--example", "1.3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verified"], true);
    assert_eq!(v["result"]["check"], "polynomial-identity");

    let (code, v) = json(&["--horizon", "12", "family", "build", "--example", "7.5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["horizon"], 12);

    let params = r#"{"nF":3,"nG":4,"b":"7","reps":[["14","77"],["23","71"]]}"#;
    let (code, v) = json(&["family", "build", "--kind", "third", "--params", params]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kind"], "third");

    let params = r#"{"phi":{"coeffs":["-1","0","1"]},"G":{"coeffs":["0","1"]},"extra":1}"#;
    let (code, v) = json(&["family", "build", "--kind", "first", "--params", params]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "Parse");
}

#[test]
fn blocks_search_and_class_filter() {
    let (code, v) = json(&["blocks", "search", "--N", "3", "--max-start", "20", "--kmax", "2", "--lmax", "3"]);
    assert_eq!(code, 0);
    let hit = v["result"]["instances"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["chosenA"] == serde_json::json!([14, 15]))
        .expect("210 instance");
    assert_eq!(hit["product"], "210");
    assert_eq!(hit["divisibility_class"], "k-div-2l");

    let (code, v) = json(&[
        "blocks", "search", "--N", "4", "--max-start", "100", "--kmax", "3", "--lmax", "4", "--class", "k-ndiv-2l",
    ]);
    assert_eq!(code, 0);
    let inst = v["result"]["instances"].as_array().unwrap();
    assert!(inst.iter().all(|i| i["divisibility_class"] == "k-ndiv-2l" && i["sporadic"] == true));
    assert_eq!(v["result"]["census"]["total"], inst.len());

    let (code, _) = json(&["blocks", "search", "--N", "13", "--max-start", "20", "--kmax", "2", "--lmax", "3"]);
    assert_eq!(code, 4);
}

#[test]
fn verify_paper_selection() {
    let (code, v) = json(&["verify-paper", "1.2", "4.2"]);
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["result"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["1.2", "4.2"]);
    let (code, v) = json(&["verify-paper", "3.9"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "UnknownExampleId");
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["--json", "verify-paper", "all"]).stdout;
    let b = run(&["--json", "verify-paper", "all"]).stdout;
    assert_eq!(a, b);
    let a = run(&["--json", "--seed", "7", "verify-paper", "param"]).stdout;
    let b = run(&["--json", "--seed", "7", "verify-paper", "param"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn usage_errors_are_input_errors() {
    assert_eq!(run(&["pell", "--D", "x"]).status.code(), Some(3));
    assert_eq!(run(&["nonsense"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
