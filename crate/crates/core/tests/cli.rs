use std::fs;
use std::path::PathBuf;
use std::process::Command;

fn abalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_abalg")).args(args).output().expect("spawn abalg");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("abalg-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn pretty(args: &[&str]) -> String {
    let mut full = vec!["--pretty"];
    full.extend_from_slice(args);
    let (code, out, err) = abalg(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

const PRODUCT: &str = r#"{"factors":[
  {"lambda":{"re":1},"S":{"order":4,"ordering":"left","terms":[{"p":0,"q":0,"re":1}]}},
  {"lambda":{"re":2},"S":{"order":4,"ordering":"left","terms":[{"p":0,"q":0,"re":1}]}}]}"#;

#[test]
fn element_json_output() {
    let (code, out, _) = abalg(&["normalize", "--order", "2", "a + 2*b"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["ordering"], "left");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["terms"][1]["re"], "2/1");
}

#[test]
fn algebra_subcommands() {
    assert_eq!(pretty(&["mul", "a", "b"]), "a*b\n");
    assert_eq!(pretty(&["mul", "b", "a"]), "a*b - b^2\n");
    assert_eq!(pretty(&["anti-f", "a*b"]), "-1*a*b + b^2\n");
    assert_eq!(pretty(&["tau", "--x", "1", "a^2"]), pretty(&["normalize", "a^2 + 2*b*a + 2*b^2"]));
    assert_eq!(pretty(&["factor", "a*b"]), pretty(&["factor", "b*(a + b)"]));
}

#[test]
fn division_by_product_file() {
    let p = fixture("product.json", PRODUCT);
    let p = p.to_str().unwrap();
    assert_eq!(pretty(&["div", "--order", "4", "--product", p, "a^3"]), "Q = a + 3*b\nR = 12*a*b^2 - 24*b^3\n");
    let (code, out, _) = abalg(&["div", "--order", "4", "--product", p, "a^3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["quotient"].is_object() && v["remainder"].is_object());
    assert_eq!(pretty(&["fresco-act", "--order", "4", "--product", p, "a^2"]), "3*b*a\n");
}

#[test]
fn module_subcommands() {
    let m = fixture("jordan.json", r#"{"k":2,"entries":[[{"re":1},{"re":1}],[{"re":0},{"re":1}]]}"#);
    let m = m.to_str().unwrap();
    assert_eq!(pretty(&["bernstein", "--matrix", m]), "x^2 + 2*x + 1\n");
    assert_eq!(pretty(&["geometric", "--matrix", m]), "geometric: true\neigenvalues: 1 (x2)\n");
    let s = fixture("system.json", r#"{"k":1,"coeffs":[{"k":1,"entries":[[{"re":"1/2"}]]},{"k":1,"entries":[[{"re":1}]]}]}"#);
    let out = pretty(&["ode2ab", "--order", "3", "--system", s.to_str().unwrap()]);
    assert!(out.starts_with("b^0: [[1/2]]\n"), "{out}");
}

#[test]
fn representation_subcommands() {
    let f = fixture("one.json", r#"{"degree":6,"terms":[{"m":0,"re":1}]}"#);
    assert_eq!(pretty(&["act", "--input", f.to_str().unwrap(), "a*b"]), "z^2\n");
    let x = fixture("xi.json", r#"{"dim":1,"log_depth":1,"terms":[{"alpha":"1/2","m":0,"j":1,"c":[{"re":1}]}]}"#);
    let out = pretty(&["xi-act", "--op", "b", "--input", x.to_str().unwrap()]);
    assert!(out.contains("s^(3/2)*log(s) ⊗ [2/3]") && out.contains("s^(3/2) ⊗ [-4/9]"), "{out}");
}

#[test]
fn error_exit_codes() {
    let (code, _, err) = abalg(&["normalize", "a**b"]);
    assert_eq!(code, 2);
    assert!(err.contains("offset 2"), "{err}");
    assert_eq!(abalg(&["inv", "b"]).0, 3);
    assert_eq!(abalg(&["div-linear", "--lambda", "1/0", "a"]).0, 2);
    let bad = fixture("bad.json", "{not json");
    assert_eq!(abalg(&["bernstein", "--matrix", bad.to_str().unwrap()]).0, 2);
    let wrong = fixture("wrong.json", r#"{"k":2,"entries":[[{"re":1}]]}"#);
    assert_ne!(abalg(&["bernstein", "--matrix", wrong.to_str().unwrap()]).0, 0);
    let (code, out, _) = abalg(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("selftest"));
}
