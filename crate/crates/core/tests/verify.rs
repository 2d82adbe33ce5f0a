use csm_core::verify::{verify_suite, Suite, VerifyRange};
use csm_core::{CsmError, Limits};

fn run(s: Suite, range: VerifyRange) -> csm_core::verify::SuiteReport {
    verify_suite(s, &range, &Limits::default()).unwrap()
}

fn with_n(n: usize) -> VerifyRange {
    VerifyRange {
        n: Some(n),
        ..VerifyRange::default()
    }
}

#[test]
fn names_parse() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!(matches!("thm99".parse::<Suite>(), Err(CsmError::UnknownSuite(_))));
}

#[test]
fn ybe_all_pass() {
    let r = run(Suite::Ybe, VerifyRange::default());
    assert!(r.passed());
    assert_eq!(r.outcomes.len(), 36 + 4 + 4);
}

#[test]
fn thm75_small() {
    let r = run(
        Suite::Thm75,
        VerifyRange {
            k: Some(1),
            n: Some(3),
            ..VerifyRange::default()
        },
    );
    assert!(r.passed());
    assert_eq!(r.outcomes.len(), 7);
}

#[test]
fn finite_suites_n3() {
    for s in [Suite::Thm41, Suite::Cor43, Suite::Thm36, Suite::Duality] {
        let r = run(s, with_n(3));
        assert!(r.passed(), "{s}");
        assert!(!r.outcomes.is_empty());
    }
    assert_eq!(run(Suite::Thm36, with_n(3)).outcomes.len(), 36 * 4);
}

#[test]
fn thm62_default_set_n2() {
    let r = run(Suite::Thm62, with_n(2));
    assert!(r.passed());
    // λ = (1,0) and (2,0), four f each, two weights
    assert_eq!(r.outcomes.len(), 16);
}

#[test]
fn only_filter_and_json() {
    let range = VerifyRange {
        n: Some(3),
        only: Some("u=213,w=321".into()),
        ..VerifyRange::default()
    };
    let r = run(Suite::Duality, range.clone());
    assert_eq!(r.outcomes.len(), 1);
    assert_eq!(r.replay("u=213,w=321"), "csm verify duality --n 3 --only 'u=213,w=321'");
    let a = r.to_json().to_string();
    let b = run(Suite::Duality, range).to_json().to_string();
    assert_eq!(a, b);
    assert_eq!(r.to_json()["failures"], serde_json::json!([]));
    let missing = VerifyRange {
        only: Some("nope".into()),
        ..with_n(3)
    };
    assert!(verify_suite(Suite::Duality, &missing, &Limits::default()).is_err());
}
