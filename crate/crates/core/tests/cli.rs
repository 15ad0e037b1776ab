use std::process::Command;

use ghilb_kit::cli::{parse_action_spec, print_action_spec, run};
use serde_json::Value;

fn ghilb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ghilb")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = ghilb(args);
    assert!(!out.is_empty(), "no output; stderr: {err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn clusters_for_z3() {
    let (code, v) = json(&["clusters", "cyclic:3:1,2"]);
    assert_eq!(code, 0);
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 3);
    for c in list {
        assert_eq!(c["is_cluster"], true);
        assert_eq!(c["characters"], serde_json::json!([0, 1, 2]));
        assert_eq!(c["reason"], Value::Null);
        for key in ["generators", "staircase", "characters", "tau", "is_cluster", "reason"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn mckay_for_z2() {
    let (code, v) = json(&["mckay", "cyclic:2:1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["incidence"]["1"], serde_json::json!([0, 1]));
    assert_eq!(v["all_covered"], true);
    for c in v["clusters"].as_array().unwrap() {
        assert_eq!(c["tangent_dim"], 2);
        assert_eq!(c["relative_tangent_dim"], 1);
        assert_eq!(c["strat_characters"], serde_json::json!([1]));
        assert_eq!(c["eq8"]["injective"], true);
        assert_eq!(c["eq8"]["isomorphism"], true);
    }
    let (_, tsv, _) = ghilb(&["mckay", "cyclic:2:1,1", "--format", "tsv"]);
    assert!(tsv.starts_with("index\tgenerators\ttangent_dim"));
    assert!(tsv.contains("# character 1: clusters 0 1"));
}

#[test]
fn verify_rejects_maximal_ideal() {
    let (code, v) = json(&["verify", "cyclic:2:1,1", "--ideal", "x,y"]);
    assert_eq!(code, 1);
    assert_eq!(v["is_cluster"], false);
    assert_eq!(v["reason"], "dimension 1 ≠ 2");
}

#[test]
fn verify_accepts_subspace_ideals() {
    let (code, v) = json(&["verify", "cyclic:2:1,1", "--ideal", "2*x + 3*y"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["is_cluster"], true);
    let (code, _) = json(&["verify", "cyclic:3:1,2", "--subspace", "--ideal", "x"]);
    assert_eq!(code, 1);
}

#[test]
fn tau_and_orbit() {
    let (code, v) = json(&["tau", "cyclic:3:1,2", "--point", "1,0"]);
    assert_eq!(code, 0);
    // generators in canonical order: x1*x2, x2^3, x1^3
    assert_eq!(v["invariant_generators"], serde_json::json!(["x1*x2", "x2^3", "x1^3"]));
    assert_eq!(v["tau"], serde_json::json!(["cyclo(3): 0", "cyclo(3): 0", "cyclo(3): 1"]));

    let (code, v) = json(&["orbit", "cyclic:3:1,2", "--point", "0,0"]);
    assert_eq!(code, 1);
    assert_eq!(v["is_cluster"], false);
    assert_eq!(v["reason"], "dimension 1 ≠ 3");
    assert_eq!(v["free_by_orbit"], false);

    let (code, v) = json(&["orbit", "cyclic:4:1,3", "--point", "cyclo(4): z,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["orbit_size"], 4);
    assert_eq!(v["free_by_trace"], true);
}

#[test]
fn tangent_commands() {
    let (_, v) = json(&["tangent", "cyclic:2:1,1", "--ideal", "y,x^2"]);
    assert_eq!(v["tangent_dim"], 2);
    let (_, v) = json(&["fiber-tangent", "cyclic:3:1,2", "--ideal", "x^2,x*y,y^2"]);
    assert_eq!(v["relative_tangent_dim"], 2);
    let (_, v) = json(&["fiber-tangent", "cyclic:3:1,2", "--ideal", "y,x^3"]);
    assert_eq!(v["relative_tangent_dim"], 1);
    let (_, v) = json(&["stratify", "cyclic:3:1,2", "--ideal", "y,x^3"]);
    assert_eq!(v["characters"], serde_json::json!([2]));
    let (code, v) = json(&["eq8-check", "cyclic:5:1,4"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = ghilb(&["coinv", "cyclic:0:1"]);
    assert_eq!(code, 2);
    assert!(err.contains("position"), "{err}");
    let (code, _, _) = ghilb(&["frobnicate", "cyclic:3:1,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = ghilb(&["verify", "cyclic:3:1,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = ghilb(&["verify", "cyclic:3:1,2", "--ideal", "x^^2"]);
    assert_eq!(code, 2);
    let (code, _, _) = ghilb(&["clusters", "cyclic:3:1,2", "--cap", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = ghilb(&["coinv", "2x2 ; 1 | 0,1"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["mckay", "cyclic:6:1,5"],
        vec!["clusters", "2x4 ; 1,1 | 0,1", "--format", "tsv"],
        vec!["orbit", "cyclic:5:1,4", "--point", "cyclo(5): 1 + z^2,-2"],
    ] {
        let a = ghilb(&args);
        let b = ghilb(&args);
        assert_eq!(a, b);
        let mut buf = vec![];
        let argv: Vec<String> = std::iter::once("ghilb").chain(args.iter().copied()).map(String::from).collect();
        run(&argv, &mut buf, &mut vec![]);
        assert_eq!(String::from_utf8(buf).unwrap(), a.1);
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("ghilb-out-{}.json", std::process::id()));
    let (code, stdout, _) = ghilb(&["coinv", "cyclic:3:1,2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dimension"], 5);
    let _ = std::fs::remove_file(path);
}

#[test]
fn spec_round_trip_over_corpus() {
    let mut specs: Vec<String> = vec![];
    for r in 1..=12 {
        for a in 0..r {
            specs.push(format!("cyclic:{r}:1,{a}"));
        }
    }
    for d in ["2x2", "2x4", "2x6", "3x3", "2x2x2"] {
        let k = d.split('x').count();
        let w1 = vec!["1"; k].join(",");
        let w2 = (0..k).map(|i| if i == 0 { "0" } else { "1" }).collect::<Vec<_>>().join(",");
        specs.push(format!("{d} ; {w1} | {w2}"));
        specs.push(format!("{d};{w2}|{w1}|{w1}"));
    }
    for s in specs {
        let a = parse_action_spec(&s).unwrap();
        let canon = print_action_spec(&a);
        assert_eq!(parse_action_spec(&canon).unwrap(), a, "{s}");
        assert_eq!(print_action_spec(&parse_action_spec(&canon).unwrap()), canon);
    }
}
