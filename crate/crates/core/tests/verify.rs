use qcheb::verify::{run, Output, QMode, Status, Suite, VerifyConfig};
use qcheb::Error;

fn in_scope_ids() -> Vec<String> {
    let mut ids = Vec::new();
    for i in (1..=4).chain(9..=12).chain(19..=32).chain(35..=35) {
        ids.push(format!("(1.{i})"));
    }
    ids.extend((1..=52).map(|i| format!("(2.{i})")));
    ids.extend((1..=35).map(|i| format!("(3.{i})")));
    ids
}

#[test]
fn default_report_lists_every_identity_once() {
    let report = run(&VerifyConfig::default()).unwrap();
    assert_eq!(report.exit_code(), 0);
    for id in in_scope_ids() {
        let n = report.identities.iter().filter(|r| r.id == id).count();
        assert_eq!(n, 1, "{id} appears {n} times");
    }
    assert!(report.identities.iter().all(|r| r.status != Status::Fail));

    let json: serde_json::Value = serde_json::from_str(&report.render(Output::Json)).unwrap();
    assert_eq!(json["suite"], "chebyshev,tilings,moments,tangent-genocchi,q1-classical");
    let records = json["identities"].as_array().unwrap();
    assert_eq!(records.len(), report.identities.len());
    for r in records {
        assert!(r["id"].is_string() && r["bound"].is_string() && r["status"].is_string());
    }
    let erratum = records.iter().find(|r| r["id"] == "(2.24)").unwrap();
    assert_eq!(erratum["status"], "erratum");
    assert!(erratum["counterexample"]["residual"].is_string());
}

#[test]
fn perturbed_t5_fails_the_recurrence() {
    let config = VerifyConfig {
        suites: vec![Suite::Chebyshev],
        inject_fault: true,
        ..VerifyConfig::default()
    };
    let report = run(&config).unwrap();
    assert_eq!(report.exit_code(), 1);
    let rec = report.record("(2.6)").unwrap();
    assert_eq!(rec.status, Status::Fail);
    let cx = rec.counterexample.as_ref().unwrap();
    assert_eq!(cx.n, Some(5));
    assert!(report.render(Output::Text).contains("counterexample at n = 5"));
}

#[test]
fn numeric_q_reports_match_symbolic_ones() {
    let config = VerifyConfig {
        suites: vec![Suite::Chebyshev, Suite::Moments],
        q_mode: "1/2".parse().unwrap(),
        ..VerifyConfig::default()
    }
    .with_max_n(8);
    let report = run(&config).unwrap();
    assert_eq!(report.exit_code(), 0);
    assert_eq!(report.record("(2.24)").unwrap().status, Status::Erratum);
}

#[test]
fn configuration_errors() {
    let with = |f: &dyn Fn(&mut VerifyConfig)| {
        let mut c = VerifyConfig::default();
        f(&mut c);
        run(&c).unwrap_err()
    };
    assert_eq!(with(&|c| c.q_mode = "-1".parse().unwrap()), Error::ExcludedQ);
    assert!(matches!(with(&|c| c.oracle_cap = 21), Error::Config(_)));
    assert!(matches!(with(&|c| c.suites.clear()), Error::Config(_)));
    assert!(matches!(
        with(&|c| {
            c.oracle_cap = 10;
        }),
        Error::OracleBound { n: 12, cap: 10 }
    ));
    assert!(matches!(with(&|c| { c.max_n.insert(Suite::TangentGenocchi, 11); }), Error::Config(_)));
    assert!("nonsense".parse::<QMode>().is_err());
    assert!("moments,foo".split(',').map(str::parse::<Suite>).any(|s| s.is_err()));
}
