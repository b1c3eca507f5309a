use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn domsat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domsat"))
        .args(args)
        .output()
        .expect("spawn domsat")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sat_instance_exits_10_with_model() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.cnf", "p cnf 3 2\n1 -2 0\n2 3 0\n");
    let out = domsat(&["solve", &f, "--verify"]);
    assert_eq!(out.status.code(), Some(10));
    let text = stdout(&out);
    assert!(text.contains("s SATISFIABLE"));
    assert!(text.contains("c verify agree"));
    let lits: Vec<i64> = text
        .lines()
        .filter_map(|l| l.strip_prefix("v "))
        .flat_map(|l| l.split_whitespace().map(|t| t.parse::<i64>().unwrap()))
        .collect();
    assert_eq!(lits.last(), Some(&0));
    assert_eq!(lits.len(), 4);
    let val = |v: i64| lits.contains(&v);
    assert!(val(1) || val(-2));
    assert!(val(2) || val(3));
}

#[test]
fn unsat_instance_exits_20() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "u.cnf",
        "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n",
    );
    for strategy in ["none", "size", "lbd", "cvsids", "degcomp"] {
        let out = domsat(&["solve", &f, "--strategy", strategy]);
        assert_eq!(out.status.code(), Some(20), "{strategy}");
        assert!(stdout(&out).contains("s UNSATISFIABLE"));
    }
}

#[test]
fn conflict_budget_gives_unknown_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    // pigeonhole 5 into 4: needs far more than one conflict
    let mut text = String::new();
    let var = |p: usize, h: usize| (p * 4 + h + 1) as i64;
    let mut clauses = Vec::new();
    for p in 0..5 {
        clauses.push(
            (0..4)
                .map(|h| var(p, h).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    for h in 0..4 {
        for a in 0..5 {
            for b in a + 1..5 {
                clauses.push(format!("-{} -{}", var(a, h), var(b, h)));
            }
        }
    }
    text.push_str(&format!("p cnf 20 {}\n", clauses.len()));
    for c in clauses {
        text.push_str(&c);
        text.push_str(" 0\n");
    }
    let f = write(dir.path(), "php.cnf", &text);
    let out = domsat(&["solve", &f, "--conflicts", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("s UNKNOWN"));
}

#[test]
fn parse_error_exits_1_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.cnf", "p cnf 2 1\n1 3 0\n");
    let out = domsat(&["solve", &f]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert!(stdout(&out).is_empty());
}

#[test]
fn bad_strategy_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "s.cnf", "p cnf 1 1\n1 0\n");
    assert_eq!(
        domsat(&["solve", &f, "--strategy", "glue"]).status.code(),
        Some(1)
    );
    assert_eq!(
        domsat(&["solve", &f, "--measures", "size,size"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn bench_writes_csv_and_report_reads_it() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    let corpus_s = corpus.to_str().unwrap();
    let gen = domsat(&[
        "generate", "--vars", "20", "--count", "6", "--seed", "3", "--out", corpus_s,
    ]);
    assert!(gen.status.success());
    write(&corpus, "broken.cnf", "p cnf 1 1\noops\n");

    let mut csvs = Vec::new();
    for strategy in ["lbd", "degcomp"] {
        let csv = dir.path().join(format!("{strategy}.csv"));
        let out = domsat(&[
            "bench",
            corpus_s,
            "--strategy",
            strategy,
            "--jobs",
            "2",
            "--verify",
            "--reduce-base",
            "2",
            "--reduce-inc",
            "1",
            "--stats-csv",
            csv.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let rows = domsat::harness::read_csv_file(&csv).unwrap();
        assert_eq!(rows.len(), 7);
        let errors = rows
            .iter()
            .filter(|r| r.status == domsat::harness::InstanceStatus::Error)
            .count();
        assert_eq!(errors, 1);
        assert!(rows.iter().all(|r| r.verified != Some(false)));
        csvs.push(csv);
    }

    let cactus = dir.path().join("cactus.csv");
    let out = domsat(&[
        "report",
        csvs[0].to_str().unwrap(),
        csvs[1].to_str().unwrap(),
        "--cactus",
        cactus.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6 ("), "{text}");
    assert!(text.contains("degcomp") && text.contains("lbd"));
    let cactus = fs::read_to_string(cactus).unwrap();
    assert_eq!(cactus.lines().count(), 1 + 12);
}

#[test]
fn bench_to_stdout_and_empty_corpus() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
    let out = domsat(&["bench", dir.path().to_str().unwrap(), "--strategy", "none"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("instance,strategy,status"));
    assert!(
        text.contains("a.cnf,none,SAT") || text.contains("a,none,SAT"),
        "{text}"
    );

    let empty = tempfile::tempdir().unwrap();
    let out = domsat(&["bench", empty.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}
