//! End-to-end runs of the `wittenlab` binary.

use std::path::Path;
use std::process::{Command, Output};

fn wittenlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wittenlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const SPHERE: &str = r#"{"kind": "manifold", "dim": 2, "betti": [1, 0, 1]}"#;

fn suspension_document(perversity: &str) -> String {
    format!(
        r#"{{
  "space": {{"kind": "suspension", "u": "1/2", "link": {SPHERE}}},
  "points": [
    {{"m_plus": 0, "m_minus": 0, "factors": [{{"link": {SPHERE}, "u": "1/2", "side": "+"}}]}},
    {{"m_plus": 0, "m_minus": 0, "factors": [{{"link": {SPHERE}, "u": "1/2", "side": "-"}}]}}
  ],
  "perversities": [{perversity}]
}}"#
    )
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn growth_slope_is_near_one_half() {
    let o = wittenlab(&["spectra", "--kind", "P", "--sigma", "1", "--u", "1/2", "--xi", "1", "--s", "1,10,100,1000", "-K", "60"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&wittenlab(&[
        "spectra", "--kind", "P", "--u", "1/2", "--k", "0", "--format", "json",
    ])))
    .unwrap();
    let slope: f64 = v["reports"][0]["records"][0]["got"].as_str().unwrap().parse().unwrap();
    assert!((slope - 0.5).abs() < 0.15, "slope {slope}");
}

#[test]
fn complex1_zero_mode_at_k_zero() {
    let o = wittenlab(&["spectra", "--complex1", "--kappa", "0", "--sign", "+", "-s", "1"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("zero modes A1+ at k=0"), "{out}");
    assert!(out.contains("A1+/s=1/k=0  zero"));
    // The minus sign and negative κ are accepted as values.
    let o = wittenlab(&["spectra", "--complex1", "--kappa", "-1/2", "--sign", "-"]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn evodd_matches() {
    let o = wittenlab(&["spectra", "--evodd", "--kappa", "1", "--u", "1/2", "--mu", "1"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS even/odd matching"));
}

#[test]
fn region_commands_verify() {
    for args in [
        vec!["regions", "--w21", "--grid", "kappa=-2:2:1/40,u=1/10:9/10:1/10"],
        vec!["regions", "--exclusion", "--nmax", "8"],
        vec!["regions", "--association", "--kmax", "9"],
    ] {
        let o = wittenlab(&args);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("0 failed"));
    }
}

#[test]
fn morse_documents() {
    let dir = tempfile::tempdir().unwrap();
    let ok = write(dir.path(), "s2.json", &suspension_document("[0, 0]"));
    let o = wittenlab(&["morse", &ok]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("ν(points[1]) = [0, 0, 0, 1]"));

    let torus = r#"{"space": {"kind": "manifold", "dim": 2, "betti": [1, 2, 1]},
        "points": [{"m_plus": 2, "m_minus": 0, "factors": []}, {"m_plus": 1, "m_minus": 1, "factors": []},
                   {"m_plus": 1, "m_minus": 1, "factors": []}, {"m_plus": 0, "m_minus": 2, "factors": []}]}"#;
    let o = wittenlab(&["morse", &write(dir.path(), "t2.json", torus)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("max/euler"));

    let bad = write(dir.path(), "bad.json", &suspension_document("[1, 1]"));
    let o = wittenlab(&["morse", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("p₂"), "{}", stderr(&o));

    let broken = write(dir.path(), "broken.json", "{\"space\": ");
    let o = wittenlab(&["morse", &broken]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"), "{}", stderr(&o));
}

#[test]
fn failing_checks_exit_with_one() {
    // A zero band cannot contain a fitted slope.
    let o = wittenlab(&["spectra", "--kind", "P", "--k", "0", "--tol", "growth_band=0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_name_the_field() {
    for (args, field) in [
        (vec!["spectra", "--kind", "P", "-K", "4"], "--basis-size"),
        (vec!["spectra", "--kind", "P", "--s", "1,10,5,100"], "--s"),
        (vec!["spectra", "--kind", "P", "--s", "1,10,100"], "--s"),
        (vec!["spectra", "--complex1"], "--kappa"),
        (vec!["spectra", "--evodd", "--kappa", "0.5"], "--kappa"),
        (vec!["regions", "--w21", "--grid", "kappa=0:1:0.1,u=0:1:1"], "--grid"),
        (vec!["verify", "--only", "everything"], "--only"),
        (vec!["verify", "--tol", "nothing=1"], "--tol"),
    ] {
        let o = wittenlab(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(field), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn verify_subset_and_reports() {
    let o = wittenlab(&["verify", "--only", "regions,morse"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    for id in [7, 8, 9, 10, 11] {
        assert!(out.contains(&format!("PASS criterion {id}:")), "{out}");
    }
    assert!(!out.contains("criterion 1:") && !out.contains("criterion 12:"));

    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    for path in [&first, &second] {
        let o = wittenlab(&["verify", "--only", "oracle", "--format", "json", "--report", path.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(stdout(&o).contains("PASS criterion 12"));
    }
    let a = std::fs::read(&first).unwrap();
    assert_eq!(a, std::fs::read(&second).unwrap(), "reports are byte-identical");
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["total"], v["reports"][0]["records"].as_array().unwrap().len());

    let csv = dir.path().join("r.csv");
    let o = wittenlab(&["verify", "--only", "oracle", "--seed", "7", "--format", "csv", "--report", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("suite,id,pass,expected,got,inputs,citation\n"));
    assert!(text.contains("seed=7"));
}
