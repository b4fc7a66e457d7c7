use irrcount::cli::{main_with, parse_args, Invocation};
use irrcount::counting::GroupSpec;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("irrcount").chain(args.iter().copied());
    let code = main_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn error_code(stderr: &str) -> String {
    let v: serde_json::Value = serde_json::from_str(stderr.trim()).expect("stderr is one JSON object");
    v["code"].as_str().unwrap().to_string()
}

#[test]
fn parses_count_invocations() {
    let argv = ["irrcount", "count", "--group", "U(2,1)", "--nu", "1,1,2", "--orbit", "[2,1]"];
    let (inv, _) = parse_args(argv).unwrap();
    assert!(matches!(inv, Invocation::Count { group: GroupSpec::U(2, 1), .. }));
    let argv = ["irrcount", "count", "--group", "GLC(2)", "--nu", "0,1;x,x-1", "--orbit", "[2]|[1,1]"];
    let (inv, _) = parse_args(argv).unwrap();
    assert!(matches!(inv, Invocation::Count { group: GroupSpec::Glc(2), .. }));
}

#[test]
fn count_json() {
    let (code, out, _) = run(&["count", "--group", "U(2,1)", "--nu", "1,1,2", "--orbit", "[2,1]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["group"], "U(2,1)");
    assert_eq!(v["nu"], serde_json::json!(["1", "1", "2"]));
    assert_eq!(v["orbit"], serde_json::json!([2, 1]));
}

#[test]
fn table_suppresses_zeros_unless_asked() {
    let args = ["table", "--group", "GLH(8)", "--nu", "1,1,1,2,2,2,3,3"];
    let (_, out, _) = run(&args);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["orbit"], serde_json::json!([4, 4]));
    let mut with = args.to_vec();
    with.push("--include-zeros");
    let (_, out, _) = run(&with);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 22);
}

#[test]
fn usage_errors_exit_one_with_codes() {
    let cases: [(&[&str], &str); 7] = [
        (&["count", "--group", "GLH(3)", "--nu", "1,2,3", "--orbit", "[3]"], "invalid_group"),
        (&["count", "--group", "SO(3)", "--nu", "1,2,3", "--orbit", "[3]"], "invalid_group"),
        (&["count", "--group", "GLR(3)", "--nu", "1,2", "--orbit", "[3]"], "arity_mismatch"),
        (&["count", "--group", "GLR(2)", "--nu", "1,2*", "--orbit", "[2]"], "malformed_coordinate"),
        (&["count", "--group", "GLR(2)", "--nu", "1,2", "--orbit", "[1,2]"], "invalid_partition"),
        (&["count", "--group", "GLR(2)", "--nu", "1,2", "--orbit", "[3]"], "size_mismatch"),
        (&["count", "--group", "GLR(2)"], "usage"),
    ];
    for (args, want) in cases {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(error_code(&err), want, "{args:?}");
    }
}

#[test]
fn verify_mismatch_exits_three() {
    let (code, _, err) = run(&["verify", "--group", "U(2,1)", "--nu", "0,1/2,3/2", "--u-swap", "verbatim"]);
    assert_eq!(code, 3);
    assert_eq!(error_code(&err), "mismatch");
    let (code, _, _) = run(&["verify", "--group", "U(2,1)", "--nu", "0,1/2,3/2"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["verify", "--group", "GLR(4)", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(!out.contains("MISMATCH"));
}

#[test]
fn output_is_byte_stable() {
    let args = ["table", "--group", "U(3,2)", "--nu", "0,1,1,1/2,3/2", "--include-zeros"];
    let first = run(&args);
    assert_eq!(first, run(&args));
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "3"]);
    assert_eq!(first.1, run(&threaded).1);
}

#[test]
fn enumerations_and_coh() {
    let (_, out, _) = run(&["paintings", "--shape", "[2,1]", "--type", "a", "--signature", "2,1", "--format", "text"]);
    assert_eq!(out, "sr/s\n••/s\n2 paintings\n");
    let (_, out, _) = run(&["paintings", "--shape", "[2,1]", "--type", "a", "--signature", "2,1", "--format", "text", "--ascii"]);
    assert!(out.contains("**/s"));
    let (_, out, _) = run(&["assignments", "--shape", "[5,5]", "--content", "[4,3,2,1]", "--format", "text"]);
    assert_eq!(out, "11112/22334\n11113/22234\n2 assignments\n");
    let (_, out, _) = run(&["coh", "--group", "U(2,1)"]);
    assert_eq!(out.trim(), r#"{"[3]":1,"[2,1]":2,"[1,1,1]":1}"#);
    let (_, strips, _) = run(&["coh", "--group", "GLR(5)"]);
    let (_, oracle, _) = run(&["coh", "--group", "GLR(5)", "--method", "oracle"]);
    assert_eq!(strips, oracle);
    let (_, out, _) = run(&["coh", "--group", "U(2,2)", "--half"]);
    assert_eq!(out.trim(), r#"{"[4]":1,"[2,2]":1}"#);
    let (code, _, err) = run(&["coh", "--group", "U(2,1)", "--half"]);
    assert_eq!((code, error_code(&err).as_str()), (1, "invalid_group"));
}

#[test]
fn genuine_cover_and_flags() {
    let (_, out, _) = run(&["count", "--group", "U~(2,1)", "--nu", "1/2,1/2,3/2", "--orbit", "[2,1]"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 2);
    let (_, out, _) = run(&["count", "--group", "U~(2,1)", "--nu", "1/2,1/2,3/2", "--orbit", "[2,1]", "--mu-offset", "1/4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 0);
    let (code, _, err) = run(&["count", "--group", "U(1,1)", "--nu", "0,1", "--orbit", "[2]", "--u-swap", "sideways"]);
    assert_eq!((code, error_code(&err).as_str()), (1, "usage"));
}
