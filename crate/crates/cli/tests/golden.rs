use lrcombi_cli::run;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lrcombi").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = call(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    assert!(o.stderr.is_empty());
    o.stdout
}

const BENCH_ARGS: [&str; 6] = [
    "--outer",
    "11,10,9,8,7,5,4,3,3,2,1",
    "--inner",
    "9,6,5,4,3,2,1",
    "--mu",
    "7,6,5,5,4,3,2,1",
];

#[test]
fn lrcoef_benchmark_instance() {
    let mut args = vec!["lrcoef"];
    args.extend(BENCH_ARGS);
    assert_eq!(ok(&args), "81672\n");
    assert_eq!(ok(&["lrcoef", "--outer", "5,4,3,2", "--inner", "3,3,1", "--mu", "4,2,1"]), "3\n");
}

#[test]
fn lr_tableaux_listing() {
    let out = ok(&["lr-tableaux", "--outer", "7,5,4,2", "--inner", "4,3,2,1", "--mu", "4,3,1"]);
    assert_eq!(out, "0,1,2,1,1,0,0,0\n1,0,2,1,1,0,0,0\n1,1,2,0,1,0,0,0\n2,1,1,0,1,0,0,0\n");
}

#[test]
fn lr_tableaux_rejects_unbalanced_sizes() {
    let o = call(&["lr-tableaux", "--outer", "7,5,4,2", "--inner", "4,3,1", "--mu", "4,3,1"]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("size mismatch"));
}

#[test]
fn character_value() {
    assert_eq!(ok(&["char", "--lambda", "5,2,1", "--mu", "3,3,1,1"]), "-2\n");
    assert_eq!(call(&["char", "--lambda", "5,2,1", "--mu", "3"]).code, 2);
}

#[test]
fn char_table_text_and_json() {
    assert_eq!(ok(&["char-table", "3"]), "mu: 3 2,1 1,1,1\n3: 1 1 1\n2,1: -1 0 2\n1,1,1: 1 -1 1\n");
    assert_eq!(
        ok(&["char-table", "2", "--json"]),
        "{\"2\":{\"2\":1,\"1,1\":1},\"1,1\":{\"2\":-1,\"1,1\":1}}\n"
    );
    assert_eq!(call(&["char-table", "13"]).code, 3);
}

#[test]
fn schur_mult_is_thread_independent() {
    let expected = "4,2 1\n4,1,1 1\n3,3 1\n3,2,1 2\n3,1,1,1 1\n2,2,2 1\n2,2,1,1 1\n";
    assert_eq!(ok(&["schur-mult", "2,1", "2,1"]), expected);
    for t in ["2", "4"] {
        assert_eq!(ok(&["schur-mult", "2,1", "2,1", "--threads", t]), expected);
    }
    assert_eq!(
        ok(&["schur-mult", "1", "1", "--json"]),
        "{\"2\":1,\"1,1\":1}\n"
    );
    assert_eq!(call(&["schur-mult", "1", "1", "--threads", "0"]).code, 2);
}

#[test]
fn pieri_rules() {
    assert_eq!(ok(&["pieri", "2,1", "2"]), "4,1 1\n3,2 1\n3,1,1 1\n2,2,1 1\n");
    assert_eq!(ok(&["pieri", "1", "1", "--col"]), "2 1\n1,1 1\n");
}

#[test]
fn rs_pair() {
    let out = ok(&["rs", "0,2,3,1,0,4,3,1,2"]);
    assert_eq!(out, "0,0,1,2\n1,3,3\n2,4\n\n0,1,2,5\n3,6,8\n4,7\n");
    let json = ok(&["rs", "--json", "0,2,3,1,0,4,3,1,2"]);
    assert_eq!(json, "{\"P\":[[0,0,1,2],[1,3,3],[2,4]],\"Q\":[[0,1,2,5],[3,6,8],[4,7]]}\n");
    assert_eq!(call(&["rs", "0,x"]).code, 2);
}

#[test]
fn plactic_commands() {
    assert_eq!(ok(&["plactic-nf", "0,2,3,1,0,4,3,1,2"]), "2,4,1,3,3,0,0,1,2\n");
    // bca ~ bac with a < b <= c
    assert_eq!(ok(&["plactic-eq", "1,2,0", "1,0,2"]), "true\n");
    assert_eq!(ok(&["plactic-eq", "0,1", "1,0"]), "false\n");
    assert_eq!(ok(&["plactic-eq", "0", "0,0"]), "false\n");
}

#[test]
fn counting_commands() {
    assert_eq!(ok(&["count-syt", "3,2,1"]), "16\n");
    assert_eq!(ok(&["count-syt", ""]), "1\n");
    assert_eq!(call(&["count-syt", "21"]).code, 3);
    assert_eq!(ok(&["kostka", "--lambda", "3,2,1,1", "--mu", "2,2,1,1,1"]), "6\n");
    assert_eq!(ok(&["yam", "2,1"]), "0,1,0\n1,0,0\n");
    assert_eq!(ok(&["yam", "2,1", "--json"]), "[[0,1,0],[1,0,0]]\n");
}

#[test]
fn bench_prints_timings() {
    let mut args = vec!["bench", "lrcoef"];
    args.extend(BENCH_ARGS);
    args.extend(["--repeat", "1"]);
    let out = ok(&args);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "value 81672");
    assert_eq!(lines[1], "runs 1");
    assert!(lines[2].starts_with("min_ms "));
    assert!(lines[3].starts_with("median_ms "));
    // a single run: min and median are the same observation
    assert_eq!(lines[2]["min_ms ".len()..], lines[3]["median_ms ".len()..]);

    let o = call(&["bench", "lrcoef", "--outer", "2", "--inner", "1", "--mu", "1", "--repeat", "0"]);
    assert_eq!(o.code, 2);
}

#[test]
fn usage_errors() {
    let o = call(&["lrcoef", "--outer", "1,2", "--inner", "1", "--mu", "1"]);
    assert_eq!(o.code, 2);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("--outer"));
    assert!(o.stderr.contains("not weakly decreasing"));

    let o = call(&["kostka", "--lambda", "2,0", "--mu", "2"]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("--lambda"));

    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["lrcoef", "--outer", "2", "--inner", "1", "--mu", "1", "--bogus"]).code, 2);
    assert_eq!(call(&[]).code, 2);

    let help = call(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("schur-mult"));
    assert_eq!(call(&["--version"]).code, 0);
}
