use std::path::PathBuf;
use std::process::{Command, Output};

fn bondage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bondage"))
        .args(args)
        .output()
        .expect("spawn bondage")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bondage-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn named() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/named.g6").to_string()
}

#[test]
fn table_floors() {
    let out = bondage(&["table", "--chi-min", "-21"]);
    assert_eq!(out.status.code(), Some(0));
    let floors: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(2).unwrap().to_string())
        .collect();
    assert_eq!(
        floors.join(","),
        "3,3,4,5,5,6,6,7,7,8,8,8,9,9,9,10,10,10,11,11,11,11"
    );
}

#[test]
fn bound_lines() {
    let out = bondage(&["bound", "--delta", "5", "--chi", "-3", "--girth", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("h1\t10\n"));
    assert!(text.contains("sachs\t12\n"));
    assert!(text.contains("girth\t"));

    let out = bondage(&["bound", "--delta", "5", "--h", "0"]);
    assert_eq!(stdout(&out), "gz\t7\ngz_improved\t7\n");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        bondage(&["bound", "--delta", "3", "--chi", "0", "--girth", "inf"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(bondage(&["bound", "--delta", "3"]).status.code(), Some(1));
    assert_eq!(bondage(&["table"]).status.code(), Some(1));
    assert_eq!(bondage(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        bondage(&["verify", "--input", "/nonexistent/x.g6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        bondage(&["verify", "--input", &named(), "--check", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(bondage(&["--help"]).status.code(), Some(0));
}

#[test]
fn curvature_output() {
    let graph = scratch("p5.g6", "DhC\n");
    let rot = scratch("p5.rot", "0: 1\n1: 0 2\n2: 1 3\n3: 2 4\n4: 3\n");
    let out = bondage(&[
        "curvature",
        "--graph",
        graph.to_str().unwrap(),
        "--rotation",
        rot.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("faces\t1\t8\n"));
    assert!(text.contains("sum\t0/1\n"));

    let bad = scratch("bad.rot", "0: 7\n");
    let out = bondage(&[
        "curvature",
        "--graph",
        graph.to_str().unwrap(),
        "--rotation",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_is_deterministic() {
    let input = named();
    let run = |workers: &str, format: &str| {
        let out = bondage(&[
            "verify",
            "--input",
            &input,
            "--seed",
            "7",
            "--workers",
            workers,
            "--format",
            format,
        ]);
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_eq!(run("1", "csv"), run("4", "csv"));
    assert_eq!(run("1", "json"), run("3", "json"));
    let json: String = String::from_utf8(run("2", "json")).unwrap();
    assert!(json.contains("\"summary\""));
}

#[test]
fn verify_writes_output_file() {
    let dest = std::env::temp_dir().join(format!("bondage-cli-out-{}.csv", std::process::id()));
    let out = bondage(&[
        "verify",
        "--input",
        &named(),
        "--check",
        "hr",
        "--chi",
        "0",
        "--output",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(&dest).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().nth(1).unwrap().contains(",0,supplied,1,"));
    let _ = std::fs::remove_file(dest);
}
