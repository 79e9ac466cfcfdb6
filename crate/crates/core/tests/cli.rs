use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn tlf(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tlf"))
        .args(args)
        .env_remove("TLF_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn tlf");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = tlf(args, "");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

const SEVEN_NODES: &str = r#"{"k": 7, "chords": [["N",1,"N",4], ["N",2,"N",3], ["N",5,"S",1], ["N",6,"N",7], ["S",2,"S",7], ["S",3,"S",6], ["S",4,"S",5]]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn build_examples() {
    assert_eq!(
        ok(&["build", "1 3 2 4 3", "--n", "4"]),
        "delta_power 0\n{\"k\": 5, \"chords\": [[\"N\",1,\"N\",2], [\"N\",3,\"N\",4], [\"N\",5,\"S\",1], [\"S\",2,\"S\",5], [\"S\",3,\"S\",4]]}\n"
    );
    assert!(ok(&["build", "", "--n", "3"]).ends_with(
        "[[\"N\",1,\"S\",1], [\"N\",2,\"S\",2], [\"N\",3,\"S\",3], [\"N\",4,\"S\",4]]}\n"
    ));
    assert_eq!(
        ok(&["build", "1 1", "--n", "1"]),
        "delta_power 1\n{\"k\": 2, \"chords\": [[\"N\",1,\"N\",2], [\"S\",1,\"S\",2]]}\n"
    );
    assert_eq!(
        ok(&["build", "2 6 1 3 2 4 3 5 4", "--n", "6"]),
        format!("delta_power 0\n{SEVEN_NODES}\n")
    );
}

#[test]
fn factor_examples() {
    let dir = TempDir::new().unwrap();
    let main = write(&dir, "main.json", SEVEN_NODES);
    assert_eq!(ok(&["factor", &main]), "2 6 1 3 2 4 3 5 4\n");

    let identity = write(
        &dir,
        "id.json",
        r#"{"k": 3, "chords": [["N",1,"S",1], ["N",2,"S",2], ["N",3,"S",3]]}"#,
    );
    assert_eq!(ok(&["factor", &identity]), "\n");

    let crossing = write(
        &dir,
        "x.json",
        r#"{"k": 2, "chords": [["N",1,"S",2], ["N",2,"S",1]]}"#,
    );
    let o = tlf(&["factor", &crossing], "");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cross"));
}

#[test]
fn factor_extras() {
    let o = tlf(&["factor", "-", "--heap", "--counts"], SEVEN_NODES);
    let text = stdout(&o);
    assert!(text.starts_with("2 6 1 3 2 4 3 5 4\n  [s2]    [s6]\n[s1][s3]\n"));
    assert!(text.ends_with("column edges occurrences\n1 2 1\n2 4 2\n3 4 2\n4 4 2\n5 2 1\n6 2 1\n"));
}

#[test]
fn build_pipes_into_factor() {
    for (word, n) in [
        ("1 3 2 4 3", "4"),
        ("4 7 3 5 8 2 6 1 7", "8"),
        ("2 1 3 2", "3"),
    ] {
        let built = ok(&["build", word, "--n", n]);
        let factored = stdout(&tlf(&["factor", "-"], &built));
        let a = ok(&["heap", word, "--n", n, "--dump"]);
        let b = ok(&["heap", factored.trim(), "--n", n, "--dump"]);
        assert_eq!(a, b, "{word}");
    }
}

#[test]
fn check_examples() {
    assert_eq!(
        ok(&["check", "2 1 3 4 2", "--n", "4"]),
        "reduced: yes\nfc: yes\nnormal_form: 2 1 3 2 4\n"
    );
    assert_eq!(
        ok(&["check", "1 2 3 4 5 2", "--n", "5"]),
        "reduced: yes\nfc: no\n"
    );
    assert_eq!(ok(&["check", "1 1", "--n", "1"]), "reduced: no\nfc: n/a\n");
    assert_eq!(
        ok(&["check", "1 2 1", "--n", "2"]),
        "reduced: yes\nfc: no\n"
    );
}

#[test]
fn budget_exhaustion_exits_4() {
    let o = tlf(&["check", "1 2 1 3 2 1", "--n", "3", "--budget", "2"], "");
    assert_eq!(o.status.code(), Some(4));
    let o = Command::new(env!("CARGO_BIN_EXE_tlf"))
        .args(["check", "1 2 1 3 2 1", "--n", "3"])
        .env("TLF_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn heap_and_render() {
    assert_eq!(
        ok(&["heap", "2 1 3 2", "--n", "3"]),
        "  [s2]\n[s1][s3]\n  [s2]\n"
    );
    assert_eq!(
        ok(&["render", "--word", "2 1 3 2", "--n", "3"]),
        "  [s2]\n[s1][s3]\n  [s2]\n"
    );
    let dir = TempDir::new().unwrap();
    let identity = write(
        &dir,
        "id.json",
        r#"{"k": 3, "chords": [["N",1,"S",1], ["N",2,"S",2], ["N",3,"S",3]]}"#,
    );
    assert_eq!(ok(&["render", &identity]), "o o o\n| | |\no o o\n");
    let d1 = write(
        &dir,
        "d1.json",
        r#"{"k": 2, "chords": [["N",1,"N",2], ["S",1,"S",2]]}"#,
    );
    let svg = ok(&["render", &d1, "--format", "svg"]);
    assert_eq!(svg.matches("<path").count(), 2);
    assert_eq!(svg.matches("<circle").count(), 4);
    assert_eq!(
        tlf(&["render", &d1, "--format", "png"], "").status.code(),
        Some(2)
    );
}

#[test]
fn enum_outputs() {
    assert_eq!(ok(&["enum", "--n", "4", "--count-only"]), "42\n");
    let lines = ok(&["enum", "--n", "3"]);
    assert_eq!(lines.lines().count(), 14);
    let mut sorted: Vec<&str> = lines.lines().collect();
    sorted.sort();
    assert_eq!(sorted, lines.lines().collect::<Vec<_>>());
    let with_words = ok(&["enum", "--n", "2", "--with-words"]);
    assert!(
        with_words.contains("[[\"N\",1,\"S\",3], [\"N\",2,\"N\",3], [\"S\",1,\"S\",2]]}\t2 1\n")
    );
    assert_eq!(tlf(&["enum", "--n", "14"], "").status.code(), Some(4));
}

#[test]
fn mul_reports_loops() {
    let dir = TempDir::new().unwrap();
    let d1 = write(
        &dir,
        "d1.json",
        r#"{"k": 2, "chords": [["N",1,"N",2], ["S",1,"S",2]]}"#,
    );
    assert_eq!(
        ok(&["mul", &d1, &d1]),
        "delta_power 1\n{\"k\": 2, \"chords\": [[\"N\",1,\"N\",2], [\"S\",1,\"S\",2]]}\n"
    );
    let big = write(&dir, "main.json", SEVEN_NODES);
    assert_eq!(tlf(&["mul", &d1, &big], "").status.code(), Some(3));
}

#[test]
fn exit_codes() {
    assert_eq!(
        tlf(&["build", "1 x", "--n", "2"], "").status.code(),
        Some(2)
    );
    assert_eq!(tlf(&["build", "5", "--n", "3"], "").status.code(), Some(2));
    assert_eq!(tlf(&["factor", "-"], "{not json").status.code(), Some(2));
    assert_eq!(
        tlf(&["factor", "/nonexistent/file.json"], "").status.code(),
        Some(2)
    );
    assert_eq!(tlf(&["bogus"], "").status.code(), Some(2));
    assert_eq!(tlf(&["--version"], "").status.code(), Some(0));
    let o = tlf(&["factor", "-"], r#"{"k": 2, "chords": [["N",1,"N",2]]}"#);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["enum", "--n", "5", "--with-words"];
    assert_eq!(ok(&args), ok(&args));
    let dir = TempDir::new().unwrap();
    let main = write(&dir, "main.json", SEVEN_NODES);
    assert_eq!(
        ok(&["render", &main, "--format", "svg"]),
        ok(&["render", &main, "--format", "svg"])
    );
}
