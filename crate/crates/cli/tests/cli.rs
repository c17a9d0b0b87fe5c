use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_properdiv"))
        .args(args)
        .env_remove("PROPERDIV_GUARD_FACES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn line<'a>(out: &'a str, prefix: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(prefix))
        .unwrap_or_else(|| panic!("no {prefix:?} line in:\n{out}"))
}

#[test]
fn homology_of_a_product() {
    let o = run(&["homology", "prod", "bool 2", "bool 6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(line(&out, "betti: "), "15 30 40 30 13");
    assert_eq!(line(&out, "convention: "), "non-reduced");
}

#[test]
fn contractible_and_empty_cases() {
    let out = stdout(&run(&["homology", "pdiv", "3,3", "--reduced"]));
    assert_eq!(line(&out, "betti: "), "0 0");
    assert_eq!(line(&out, "convention: "), "reduced");
    let out = stdout(&run(&["homology", "pdiv", "1,1", "--reduced"]));
    assert!(out.lines().any(|l| l == "empty complex"), "{out}");
}

#[test]
fn homology_json_and_csv() {
    let out = stdout(&run(&["homology", "pdiv", "4,4", "--reduced", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["reduced"], true);
    assert_eq!(v["betti"], serde_json::json!([0, 4, 0]));
    assert_eq!(v["torsion"], serde_json::json!([[], [], []]));
    assert_eq!(v["empty"], false);
    let out = stdout(&run(&["homology", "pdiv", "2,2", "--csv"]));
    assert_eq!(out, "degree,betti,torsion,convention\n0,3,,non-reduced\n");
}

#[test]
fn torsion_line() {
    let out = stdout(&run(&["homology", "pdiv", "3,5", "--torsion"]));
    assert_eq!(line(&out, "torsion: "), "none");
}

#[test]
fn verify_ranges() {
    let o = run(&["verify", "--a-max", "6", "--b-max", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all checks pass"));
    assert!(run(&["verify", "--a-max", "2", "--b-max", "2"]).status.success());
}

#[test]
fn verify_catches_a_corrupted_formula() {
    let o = run(&["verify", "--a-max", "3", "--b-max", "4", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("(a, b, i) = (2, 2, 0)"), "{out}");
}

#[test]
fn rao_search_and_dual_lex() {
    let o = run(&["rao", "pdiv", "4,4", "--search"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "none\n");

    let out = stdout(&run(&["rao", "pdiv", "4,4", "--search", "--dual"]));
    let mut lines = out.lines();
    let cert: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(cert["element"], "(4,4)");
    assert_eq!(lines.next(), Some("verified: true"));

    let out = stdout(&run(&["rao", "--dual-lex", "3,3,3"]));
    let mut lines = out.lines();
    let cert: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(cert["ordering"][0], "(2,2,2)");
    assert_eq!(lines.next(), Some("verified: true"));
}

#[test]
fn falling_counts() {
    let out = stdout(&run(&["falling", "3", "3", "--count-only"]));
    assert!(!out.lines().any(|l| l.starts_with("length ")), "{out}");
    assert!(out.lines().any(|l| l == "none"));
    let out = stdout(&run(&["falling", "2", "9", "--count-only"]));
    assert!(out.lines().any(|l| l == "length 2: 2"));
    let out = stdout(&run(&["falling", "4", "4", "--count-only"]));
    assert!(out.lines().any(|l| l == "length 3: 4"));
    let out = stdout(&run(&["falling", "4", "4", "--count-only", "--json"]));
    assert_eq!(out.trim(), r#"{"3":4}"#);
}

#[test]
fn falling_listing() {
    let out = stdout(&run(&["falling", "2", "5"]));
    assert_eq!(out, "(2,5) > (1,0) > (0,0)\n(2,5) > (1,1) > (0,0)\n");
    let out = stdout(&run(&["falling", "2", "5", "--json"]));
    assert_eq!(out.trim(), "[[[2,5],[1,0],[0,0]],[[2,5],[1,1],[0,0]]]");
    assert_eq!(run(&["falling", "3", "2"]).status.code(), Some(2));
}

#[test]
fn reference_table() {
    let o = run(&["table", "--paper-table"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for (row, values) in [
        ("B2xB6", "15 30 40 30 13"),
        ("B2xB7", "17 42 70 70 42 15"),
        ("B3xB6", "1 1461 1275 705 172"),
        ("B3xB7", "1 3381 3822 2940 1218 232"),
    ] {
        let l = out.lines().find(|l| l.starts_with(row)).unwrap();
        assert!(l.contains(values) && l.ends_with("yes"), "{l}");
    }
    assert!(out.contains("non-reduced"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["homology", "pdiv", "3,x"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "torus"]).status.code(), Some(2));
    assert_eq!(run(&["homology"]).status.code(), Some(2));
    assert_eq!(run(&["rao"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "file", "/nonexistent/poset.txt"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_properdiv"))
        .args(["homology", "pdiv", "4,4"])
        .env("PROPERDIV_GUARD_FACES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
    // exhaustive search is refused on large posets
    assert_eq!(run(&["rao", "pdiv", "5,5", "--search"]).status.code(), Some(3));
}

#[test]
fn poset_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("properdiv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p44.txt");
    let text = stdout(&run(&["poset", "pdiv", "4,4"]));
    assert!(text.starts_with("elements: 17\n"));
    std::fs::write(&path, &text).unwrap();
    let p = path.to_str().unwrap();
    let out = stdout(&run(&["homology", "file", p, "--reduced"]));
    assert_eq!(line(&out, "betti: "), "0 4 0");
    assert_eq!(stdout(&run(&["rao", "file", p, "--search"])), "none\n");
    let complex = stdout(&run(&["complex", "pdiv", "3,3"]));
    assert!(complex.starts_with("vertices: 8\n"));
    assert_eq!(complex.lines().count(), 1 + 7);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [&["rao", "--dual-lex", "2,3,2"][..], &["falling", "5", "7"], &["homology", "prod", "bool 2", "pdiv 2,3", "--json"]] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}
