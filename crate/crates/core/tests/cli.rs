use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn unicwd() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_unicwd"));
    c.env_remove("UNICWD_MAX_ORACLE_N");
    c
}

fn run(args: &[&str]) -> Output {
    unicwd().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = unicwd()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn recognize_verdicts() {
    let o = run(&["recognize", &data("u3_1.el")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "component 0: family=U3 variant=identity params=(1)\nverdict: unigraph\n");
    for f in ["seq_32221.el", "seq_32221_hh.el"] {
        let o = run(&["recognize", &data(f)]);
        assert_eq!(code(&o), 1, "{f}");
        assert!(stdout(&o).ends_with("verdict: not-unigraph\n"));
    }
}

#[test]
fn decompose_output() {
    let o = run(&["decompose", &data("isolated.el")]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "split k=3 A={} B={z}\nsplit k=2 A={x} B={}\nsplit k=1 A={y} B={}\ntail none\n"
    );
    assert_eq!(stdout(&run(&["decompose", &data("c5.el")])), "tail {a,b,c,d,e}\n");
}

#[test]
fn eval_and_check_u3_expr() {
    let o = run(&["eval", &data("u3_1.kx")]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "6 7\na b\na f\nb f\nc e\nc f\nd e\nd f\n# width=3\n");
    let o = run(&["check", &data("u3_1.el"), &data("u3_1.kx")]);
    assert_eq!((code(&o), stdout(&o)), (0, "verdict: equal\n".to_string()));
    let o = run(&["check", &data("c5.el"), &data("u3_1.kx")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("verdict: different\n"));
}

#[test]
fn solve_reports() {
    let o = run(&["solve", "--problem", "mis", &data("u3_1.el")]);
    assert_eq!(stdout(&o), "problem=mis value=3 witness={a,c,d}\n");
    let o = run(&["solve", "--problem", "ds", &data("c5.el")]);
    assert!(stdout(&o).starts_with("problem=ds value=2 "));
    let o = run(&["solve", "--problem", "vc", &data("u3_1.el"), "--expr", &data("u3_1.kx")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("problem=vc value=3 "));
    let o = run(&["solve", "--problem", "vc", &data("c5.el"), "--expr", &data("u3_1.kx")]);
    assert_eq!(code(&o), 1);
    let o = run(&["solve", "--problem", "mis", &data("seq_32221.el")]);
    assert_eq!(code(&o), 1);
}

#[test]
fn synthesize_pipes_into_check() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 1..=6 {
        let g = data(&format!("gen_seed{seed}.el"));
        let o = run(&["synthesize", &g]);
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        let text = stdout(&o);
        assert!(text.lines().skip(1).all(|l| l.starts_with("# ")));
        let width: usize = text
            .lines()
            .find_map(|l| l.strip_prefix("# total_width="))
            .unwrap()
            .parse()
            .unwrap();
        assert!(width <= 5);
        let checked = run_stdin(&["check", &g, "-"], &text);
        assert_eq!(code(&checked), 0, "seed {seed}");

        let path: PathBuf = dir.path().join(format!("s{seed}.kx"));
        let o = run(&["synthesize", &g, "-o", path.to_str().unwrap()]);
        assert!(stdout(&o).starts_with("total_width="));
        assert_eq!(code(&run(&["check", &g, path.to_str().unwrap()])), 0);
    }
}

#[test]
fn gen_is_deterministic() {
    let a = stdout(&run(&["gen", "--seed", "1", "--budget", "40"]));
    let b = stdout(&run(&["gen", "--seed", "1", "--budget", "40"]));
    assert_eq!(a, b);
    assert_eq!(a, std::fs::read_to_string(data("gen_seed1.el")).unwrap());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.el");
    let o = run(&["gen", "--seed", "9", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["recognize", path.to_str().unwrap()])), 0);
}

#[test]
fn json_outputs_parse() {
    let cases: [&[&str]; 6] = [
        &["--json", "recognize", &data("u3_1.el")],
        &["--json", "decompose", &data("u3_1.el")],
        &["--json", "synthesize", &data("c5.el")],
        &["--json", "eval", &data("u3_1.kx")],
        &["--json", "solve", "--problem", "ds", &data("c5.el")],
        &["--json", "oracle", "cwd", "--max-k", "3", &data("p4.el")],
    ];
    let mut values = Vec::new();
    for args in cases {
        let o = run(args);
        assert_eq!(code(&o), 0, "{args:?}");
        values.push(serde_json::from_str::<Value>(&stdout(&o)).unwrap());
    }
    assert_eq!(values[0]["unigraph"], true);
    assert_eq!(values[0]["components"][0]["family"], "U3");
    assert_eq!(values[2]["total_width"], 3);
    assert_eq!(values[3]["width"], 3);
    assert_eq!(values[4]["value"], 2);
    assert_eq!((values[5]["lo"].clone(), values[5]["exact"].clone()), (Value::from(3), Value::Bool(true)));
}

#[test]
fn oracle_commands() {
    let o = run(&["oracle", "cwd", "--max-k", "4", &data("c5.el")]);
    assert_eq!(stdout(&o), "cwd(g) in [3, 3]\n");
    let o = run(&["oracle", "unigraph", &data("seq_32221.el")]);
    assert_eq!((code(&o), stdout(&o)), (1, "sequence=(3,2,2,2,1) unigraph=false\n".to_string()));
    assert_eq!(code(&run(&["oracle", "unigraph", &data("u3_1.el")])), 0);
    let o = run(&["oracle", "decomps", &data("u3_1.el")]);
    assert!(stdout(&o).starts_with("decompositions=1\n"));
}

#[test]
fn malformed_input_exits_2() {
    let o = run_stdin(&["recognize", "-"], "2 1\na\n");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).starts_with("error: <stdin>:"));
    let o = run_stdin(&["eval", "-"], "(j 2 2");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("<stdin>:"));
    assert_eq!(code(&run(&["recognize", "/nonexistent/graph.el"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["gen"])), 2);
    assert_eq!(code(&run_stdin(&["check", "-", "-"], "")), 2);
}

#[test]
fn size_guards_exit_3() {
    let big = stdout(&run(&["gen", "--seed", "3", "--budget", "60"]));
    let o = run_stdin(&["oracle", "cwd", "--max-k", "3", "-"], &big);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    let o = unicwd()
        .env("UNICWD_MAX_ORACLE_N", "4")
        .args(["oracle", "unigraph", &data("c5.el")])
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = unicwd()
        .env("UNICWD_MAX_ORACLE_N", "5")
        .args(["oracle", "unigraph", &data("c5.el")])
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}
