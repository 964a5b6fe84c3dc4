use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kostant")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

#[test]
fn qmult_latex() {
    assert_eq!(stdout(&["qmult", "--algebra", "g2", "--lambda", "0,1", "--mu", "0,0", "--format", "latex"]), "q^{5} + q\n");
}

#[test]
fn qpartition_json() {
    assert_eq!(stdout(&["qpartition", "--algebra", "g2", "3,2", "--format", "json"]), "{\"coeffs\":[0,1,2,2,1,1]}\n");
    assert_eq!(stdout(&["qpartition", "-2,5", "--format", "json"]), "{\"coeffs\":[]}\n");
}

#[test]
fn at_q_evaluates() {
    assert_eq!(stdout(&["qpartition", "3,2", "--at-q", "1"]), "7\n");
    assert_eq!(stdout(&["qmult", "--lambda", "0,1", "--mu", "0,0", "--at-q", "2"]), "34\n");
    assert_eq!(stdout(&["qmult", "--lambda", "0,1", "--mu", "0,0", "--at-q", "-1"]), "-2\n");
}

#[test]
fn partition_methods_agree() {
    for coords in ["3,2", "6,2", "10,4"] {
        let q = stdout(&["partition", coords]);
        assert_eq!(stdout(&["partition", coords, "--method", "tarski"]), q);
    }
    assert_eq!(stdout(&["partition", "--algebra", "c2", "3,2", "--method", "closed"]), "5\n");
    assert_eq!(stdout(&["partition", "--algebra", "c2", "3,2"]), "5\n");
}

#[test]
fn mult_methods_agree() {
    for method in ["closed", "qpoly", "tarski"] {
        assert_eq!(stdout(&["mult", "--lambda", "0,3", "--mu", "1,2", "--method", method]), "1\n");
    }
    assert_eq!(stdout(&["mult", "--algebra", "c2", "--lambda", "0,2", "--mu", "0,0"]), "2\n");
    assert_eq!(stdout(&["mult", "--algebra", "c2", "--lambda", "0,2", "--mu", "0,0", "--method", "qpoly"]), "2\n");
}

#[test]
fn basis_override() {
    // ϖ2 = 3α1 + 2α2 for g2.
    assert_eq!(
        stdout(&["qpartition", "0,1", "--basis", "fundamental"]),
        stdout(&["qpartition", "3,2"])
    );
    assert_eq!(
        stdout(&["qmult", "--basis", "root", "--lambda", "3,2", "--mu", "0,0"]),
        stdout(&["qmult", "--lambda", "0,1", "--mu", "0,0"])
    );
    assert_eq!(exit_code(&["qmult", "--basis", "root", "--lambda", "1,0", "--mu", "0,0"]), Some(1));
    assert_eq!(exit_code(&["qpartition", "--algebra", "c2", "1,0", "--basis", "fundamental"]), Some(1));
}

#[test]
fn case_output() {
    assert_eq!(stdout(&["case", "--lambda", "5,6", "--mu", "0,0"]), "a=28 b=17 c=22 d=10 e=4 f=1 case=PQRST\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["case", "--lambda", "2,0", "--mu", "1,0", "--format", "json"])).unwrap();
    assert_eq!(json["label"], "PR");
    assert_eq!(json["d"], 0);
}

#[test]
fn verify_reports_no_mismatches() {
    let report: serde_json::Value = serde_json::from_str(&stdout(&["verify", "--algebra", "g2", "--max", "4"])).unwrap();
    assert_eq!(report["algebra"], "g2");
    assert_eq!(report["grid_max"], 4);
    for check in report["checks"].as_array().unwrap() {
        assert_eq!(check["mismatches"], 0, "{check}");
        assert!(check["cases"].as_u64().unwrap() > 0);
    }
}

#[test]
fn table_to_stdout() {
    let text = stdout(&["table", "--max", "1"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,x,y,a,b,c,d,e,f,case,mq_coeffs,m_at_1"));
    assert_eq!(lines.next(), Some("0,0,0,0,0,0,-1,-1,-2,-4,P,1,1"));
    assert!(text.contains("\n0,1,0,0,3,2,2,0,-1,-4,PQR,0|1|0|0|0|1,2\n"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(exit_code(&["mult", "--lambda", "-1,0", "--mu", "0,0"]), Some(1));
    assert_eq!(exit_code(&["qpartition", "3;2"]), Some(1));
    assert_eq!(exit_code(&["qpartition", "3,2", "--frobnicate"]), Some(1));
    assert_eq!(exit_code(&["frobnicate"]), Some(1));
    assert_eq!(exit_code(&["partition", "--algebra", "c2", "1,1", "--method", "tarski"]), Some(1));
    assert_eq!(exit_code(&["table", "--algebra", "c2", "--max", "1"]), Some(1));
    assert_eq!(exit_code(&["table", "--max", "0", "--output", "/nonexistent-dir/t.csv"]), Some(1));
    assert_eq!(exit_code(&["--help"]), Some(0));
}

#[test]
fn overflow_exits_two() {
    assert_eq!(exit_code(&["qpartition", "100000000000,0"]), Some(2));
    assert_eq!(exit_code(&["qpartition", "3,2", "--at-q", "1000000000000"]), Some(2));
}
