use std::io::Write;
use std::process::{Command, Output, Stdio};

fn monoidp(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_monoidp"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = monoidp(args, None, &[]);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn headline_examples() {
    assert_eq!(stdout(&["betti", "4,6,21"]), "12 42\n");
    assert_eq!(
        stdout(&["unique", "6,10,15"]),
        "no (witness: 30 has 3 factorizations)\n"
    );
    assert_eq!(
        stdout(&["enum", "--frobenius", "7", "--count", "--unique"]),
        "11 5\n"
    );
    assert_eq!(stdout(&["unique", "2 0;0 3;2 1;1 2"]), "yes\n");
    assert_eq!(stdout(&["betti", "2 0;0 3;2 1;1 2"]), "(2,4) (6,3)\n");
}

#[test]
fn factorizations_print_descending() {
    assert_eq!(
        stdout(&["factorizations", "6,10,15", "30"]),
        "(5,0,0)\n(0,3,0)\n(0,0,2)\n"
    );
    assert_eq!(
        stdout(&["rclasses", "4,6,21", "42"]),
        "(9,1,0) (6,3,0) (3,5,0) (0,7,0)\n(0,0,2)\n"
    );
}

#[test]
fn exit_codes() {
    let bad = [
        vec!["betti", "4,6"],
        vec!["betti", "4,x"],
        vec!["family", "ed3", "2", "3", "2", "3", "0"],
        vec!["enum", "--frobenius", "0"],
        vec!["betti", "1 0;1 1;1 2;1 3"],
        vec!["glue-check", "--gens", "2,3", "--part", "0"],
        vec!["no-such-command"],
    ];
    for args in &bad {
        let out = monoidp(args, None, &[]);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = monoidp(&["family", "telescopic", "70"], None, &[]);
    assert_eq!(out.status.code(), Some(1));
    let out = monoidp(
        &["enum", "--frobenius", "3"],
        None,
        &[("MONOIDP_THREADS", "zero")],
    );
    assert_eq!(out.status.code(), Some(2));
}

const CORPUS: &[&str] = &[
    "6,10,15",
    "4,6,21",
    "3,4,5",
    "5,7,9",
    "4,5,6,7",
    "8,9,10,12",
    "7,11,13,17",
    "2 0;0 3;2 1;1 2",
];

/// `F + 2·max_generator` for numerical input; a degree bound past every
/// Betti element for the affine one.
fn window(gens: &str) -> String {
    if gens.contains(';') {
        return "20".into();
    }
    let list: Vec<i64> = gens.split(',').map(|t| t.parse().unwrap()).collect();
    let s = monoidp_core::NumericalSemigroup::from_generators(&list).unwrap();
    (s.frobenius() + 2 * s.max_generator()).to_string()
}

#[test]
fn minpres_round_trips_through_verify() {
    for gens in CORPUS {
        for topology in ["star", "path"] {
            for json in [false, true] {
                let mut args = vec!["minpres", "--topology", topology, gens];
                if json {
                    args.insert(0, "--json");
                }
                let pres = stdout(&args);
                let bound = window(gens);
                let out = monoidp(&["verify", gens, "--bound", &bound], Some(&pres), &[]);
                assert!(
                    out.status.success(),
                    "{gens}: {}",
                    String::from_utf8_lossy(&out.stderr)
                );
                assert_eq!(
                    String::from_utf8_lossy(&out.stdout),
                    "true\n",
                    "{gens} {topology}"
                );
            }
        }
    }
}

#[test]
fn verify_reads_files_and_rejects_short_presentations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pres.txt");
    std::fs::write(&path, "30: (5,0,0) = (0,0,2)\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["verify", "6,10,15", "--bound", "60", "--presentation", p]),
        "false\n"
    );
    std::fs::write(&path, "30: (5,0,0) = (0,0,2)\n30: (0,3,0) = (0,0,2)\n").unwrap();
    assert_eq!(
        stdout(&["verify", "6,10,15", "--bound", "60", "--presentation", p]),
        "true\n"
    );
    let out = monoidp(
        &["verify", "6,10,15", "--bound", "20", "--presentation", p],
        None,
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_is_byte_identical() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["--json", "minpres", "4,6,21"],
        vec!["--json", "unique", "2 0;0 3;2 1;1 2"],
        vec!["--json", "glue-find", "6,10,15"],
        vec!["--json", "family", "telescopic", "4"],
        vec!["--json", "betti", "--bound", "9", "1 0;1 1;1 2;1 3"],
    ];
    for args in &cases {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    let listing = |threads: &str| {
        let out = monoidp(
            &["--json", "enum", "--frobenius", "11", "--list", "--unique"],
            None,
            &[("MONOIDP_THREADS", threads)],
        );
        assert!(out.status.success());
        out.stdout
    };
    let one = listing("1");
    assert_eq!(one, listing("4"));
    assert_eq!(one, listing("1"));
}

#[test]
fn envelope_keys() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "betti", "4,6,21"])).unwrap();
    assert_eq!(v["command"], "betti");
    assert_eq!(v["input"]["generators"], serde_json::json!([4, 6, 21]));
    assert_eq!(v["result"]["betti"], serde_json::json!([[12], [42]]));
    assert_eq!(v["truncated"], false);

    let v: serde_json::Value = serde_json::from_str(&stdout(&[
        "--json",
        "betti",
        "--bound",
        "8",
        "1 0;1 1;1 2;1 3",
    ]))
    .unwrap();
    assert_eq!(v["truncated"], true);
    assert_eq!(
        v["result"]["betti"],
        serde_json::json!([[2, 2], [2, 3], [2, 4]])
    );
}

#[test]
fn families_and_gluings() {
    assert_eq!(
        stdout(&["family", "interval", "5", "3"]),
        "semigroup 5,6,7,8\nuniquely presented yes\nbetti 12 13 14 15 16\n"
    );
    assert_eq!(
        stdout(&["glue-check", "--gens", "2 0;0 3;2 1;1 2", "--part", "1,2,3"]),
        "gluing at d = (2,4)\npart 1 {1,2,3} u = (0,1,1)\npart 2 {4} v = (2)\n"
    );
    assert_eq!(
        stdout(&["glue-check", "--gens", "1 0;0 1", "--part", "1"]),
        "not a gluing\n"
    );
    assert_eq!(
        stdout(&["glue-num", "2,3", "--lambda", "2", "--mu", "5"]),
        "semigroup 4,5,6\nd = 10\nbetti 10 12\nuniquely presented yes\n"
    );
    assert!(stdout(&["invariants", "4,6,21"]).contains("frobenius 23\n"));
}
