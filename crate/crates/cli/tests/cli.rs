use std::process::{Command, Output};

fn qcheb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcheb")).args(args).output().expect("binary runs")
}

fn stdout_lines(args: &[&str]) -> Vec<String> {
    let out = qcheb(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect()
}

#[test]
fn table_first_terms() {
    assert_eq!(
        stdout_lines(&["table", "T", "3"]),
        ["1", "x", "(1+q)*x^2 + q*s", "(1+q+q^2+q^3)*x^3 + (q+q^2+q^3)*s*x"]
    );
    assert_eq!(stdout_lines(&["table", "U", "1"]), ["1", "(1+q)*x"]);
    assert_eq!(stdout_lines(&["table", "T", "0"]), ["1"]);
    assert_eq!(stdout_lines(&["table", "Fib", "3"]), ["0", "1", "x", "x^2 + q*s"]);
    assert_eq!(stdout_lines(&["table", "U", "2", "--at-q", "1"]), ["1", "2*x", "4*x^2 + s"]);
}

#[test]
fn table_json_and_bounds() {
    let out = qcheb(&["table", "U_r", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[1]["label"], "U^(r)_1");
    assert_eq!(qcheb(&["table", "T", "41"]).status.code(), Some(2));
    assert_eq!(qcheb(&["table", "X", "2"]).status.code(), Some(2));
    assert_eq!(qcheb(&["table", "T", "2", "--at-q", "-1"]).status.code(), Some(2));
}

#[test]
fn series_outputs() {
    let g = stdout_lines(&["series", "genocchi", "2"]);
    assert!(g.contains(&"G_2 = 1".to_string()));
    assert!(g.contains(&"G_4 = q*(1+q)/(1+q^3)".to_string()));
    assert!(g.iter().any(|l| l.trim() == "(-q^3;q)_1 G_4 = q+q^2"));
    assert_eq!(stdout_lines(&["series", "tangent", "2", "--at-q", "1"]), ["1", "2", "16"]);
    assert!(stdout_lines(&["series", "moments-L", "4"]).contains(&"L(x^2) = -q*s/(1+q)".to_string()));
    let tri = stdout_lines(&["series", "seidel-triangle", "1"]);
    let rows: Vec<Vec<String>> = serde_json::from_str(&tri[0]).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(qcheb(&["series", "tangent", "11"]).status.code(), Some(2));
}

#[test]
fn tilings_modes() {
    assert_eq!(stdout_lines(&["tilings", "2", "list"]), ["aa", "ab", "ba", "bb", "dd"]);
    assert_eq!(stdout_lines(&["tilings", "0", "list"]), [""]);
    assert_eq!(stdout_lines(&["tilings", "2", "weight"]), ["(1+q+q^2+q^3)*x^2 + q*s", "= U_2: OK"]);
    let b = stdout_lines(&["tilings", "3", "bijection"]);
    assert_eq!(b.len(), 12);
    assert!(b.iter().all(|l| l.ends_with(": OK")));
    assert!(b.contains(&"bdd -> T = ddb, A = ddc, B = b; k = 1, l = 1; w_r = q^3*r*s*x = q^1 w_r(A) w_r(B): OK".to_string()));
    assert_eq!(qcheb(&["tilings", "17", "list"]).status.code(), Some(2));
    assert_eq!(qcheb(&["tilings", "5", "list", "--oracle-cap", "21"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = qcheb(&["verify", "--suite", "chebyshev,moments", "--max-n", "6", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["suite"], "chebyshev,moments");
    assert!(v["identities"].as_array().unwrap().len() >= 40);

    let out = qcheb(&["verify", "--suite", "chebyshev", "--max-n", "8", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("(2.6) ") && l.ends_with("FAIL")));

    assert_eq!(qcheb(&["verify", "--at-q", "-1"]).status.code(), Some(2));
    assert_eq!(qcheb(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(qcheb(&["verify", "--oracle-cap", "21"]).status.code(), Some(2));
    assert_eq!(qcheb(&["verify", "--suite", "tilings", "--max-n", "17"]).status.code(), Some(2));
    assert_eq!(qcheb(&["verify", "--at-q", "abc"]).status.code(), Some(2));
    assert_eq!(qcheb(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_at_rational_q() {
    let out = qcheb(&["verify", "--suite", "tangent-genocchi", "--max-n", "3", "--at-q", "2/3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
