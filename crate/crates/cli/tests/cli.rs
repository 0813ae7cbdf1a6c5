use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_in(cache: &Path, args: &[&str]) -> Run {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_palcensus"))
        .args(args)
        .env("PALCENSUS_CACHE", cache)
        .output()
        .expect("binary runs");
    Run {
        code: status.code().expect("exit code"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    let dir = TempDir::new().unwrap();
    run_in(dir.path(), args)
}

fn column(stdout: &str, i: usize) -> Vec<String> {
    stdout.lines().map(|l| l.split('\t').nth(i).unwrap().to_string()).collect()
}

#[test]
fn count_t2_by_brute_force() {
    let r = run(&["count", "--k", "2", "--n-min", "1", "--n-max", "12", "--family", "no-odd-pp", "--method", "brute"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(column(&r.stdout, 0), (1..=12).map(|n| n.to_string()).collect::<Vec<_>>());
    assert_eq!(column(&r.stdout, 1).join(" "), "2 4 4 8 12 24 40 80 148 296 568 1136");
}

#[test]
fn count_a3_by_recurrence() {
    let r = run(&[
        "count",
        "--k",
        "3",
        "--n-min",
        "1",
        "--n-max",
        "12",
        "--family",
        "no-pal-prefix",
        "--method",
        "recurrence",
    ]);
    assert_eq!(r.code, 0);
    assert_eq!(column(&r.stdout, 1).join(" "), "3 6 12 30 78 222 636 1878 5556 16590 49548 148422");
}

#[test]
fn count_c2_both_ways() {
    let dir = TempDir::new().unwrap();
    let r = run_in(
        dir.path(),
        &["count", "--k", "2", "--n-min", "1", "--n-max", "12", "--family", "min-square", "--method", "both"],
    );
    assert_eq!(r.code, 0);
    assert_eq!(column(&r.stdout, 1).join(" "), "2 2 4 6 10 20 36 72 142 280 560 1114");
    assert!(column(&r.stdout, 2).iter().all(|v| v == "MATCH"));
    let cache = fs::read_to_string(dir.path().join("min-square.tsv")).unwrap();
    assert!(cache.starts_with("2\t1\t2\n2\t2\t2\n"));
    assert_eq!(cache.lines().count(), 12);
}

#[test]
fn square_families_via_cache() {
    let r = run(&["count", "--k", "2", "--n-max", "12", "--family", "no-square-prefix", "--method", "both"]);
    assert_eq!(r.code, 0);
    assert_eq!(column(&r.stdout, 1).join(" "), "2 2 4 6 12 20 40 74 148 286 572 1124");
    let r = run(&["count", "--k", "2", "--n-max", "12", "--family", "has-square-prefix"]);
    assert_eq!(column(&r.stdout, 1).join(" "), "0 2 4 10 20 44 88 182 364 738 1476 2972");
}

#[test]
fn corrupted_cache_is_caught() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("min-square.tsv"), "2\t1\t2\n2\t2\t3\n").unwrap();
    let args = ["count", "--k", "2", "--n-max", "4", "--family", "min-square", "--method", "both"];
    let r = run_in(dir.path(), &args);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("MISMATCH"));
    let r = run_in(dir.path(), &["--verify-cache", "count", "--k", "2", "--n-max", "4", "--family", "min-square"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("cached c(2)"), "{}", r.stderr);

    fs::write(dir.path().join("min-square.tsv"), "2\t2\t2\n2\t1\t2\n").unwrap();
    let r = run_in(dir.path(), &["count", "--k", "2", "--n-max", "4", "--family", "min-square"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("malformed cache line 2"), "{}", r.stderr);
}

#[test]
fn bfile_and_jsonl_output() {
    let r = run(&["--format", "bfile", "count", "--k", "2", "--n-max", "5", "--family", "unbordered"]);
    assert_eq!(r.stdout, "1 2\n2 2\n3 4\n4 6\n5 12\n");
    let r =
        run(&["--format", "jsonl", "count", "--k", "2", "--n-max", "2", "--family", "unbordered", "--method", "both"]);
    let rows: Vec<serde_json::Value> = r.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[1]["brute"], "2");
    assert_eq!(rows[1]["status"], "MATCH");
    let r = run(&["--format", "bfile", "map", "--map", "f", "--k", "2", "--word", "01"]);
    assert_eq!(r.code, 2);
}

#[test]
fn map_examples() {
    assert_eq!(run(&["map", "--map", "f", "--k", "26", "--word", "cider"]).stdout, "cried\n");
    assert_eq!(run(&["map", "--map", "f-inv", "--k", "26", "--word", "cried"]).stdout, "cider\n");
    assert_eq!(run(&["map", "--map", "f", "--k", "26", "--word", "preserve"]).stdout, "perverse\n");
    assert_eq!(run(&["map", "--map", "g", "--k", "2", "--word", "010"]).stdout, "11\n");
    assert_eq!(run(&["map", "--map", "g-pre", "--k", "2", "--word", "11"]).stdout, "010\n101\n");
    assert_eq!(run(&["map", "--map", "g-pre", "--k", "3", "--word", "0"]).stdout.lines().count(), 3);
    assert_eq!(run(&["map", "--map", "f", "--k", "40", "--word", "0,39,7"]).stdout, "0,7,39\n");
}

#[test]
fn map_errors_are_usage_errors() {
    let r = run(&["map", "--map", "g", "--k", "2", "--word", ""]);
    assert_eq!(r.code, 2);
    let r = run(&["map", "--map", "f", "--k", "2", "--word", "012"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("out of range"));
}

#[test]
fn profile_examples() {
    let r = run(&["profile", "--k", "2", "--n", "8", "--kind", "borders", "--set", "1,3", "--list"]);
    assert_eq!(
        r.stdout.lines().collect::<Vec<_>>(),
        ["01000010", "01001010", "01010010", "01011010", "10100101", "10101101", "10110101", "10111101"]
    );
    let r = run(&["profile", "--k", "2", "--n", "8", "--kind", "even-pp", "--set", "1,3", "--list"]);
    assert_eq!(
        r.stdout.lines().collect::<Vec<_>>(),
        ["00110000", "00110001", "00110010", "00110011", "11001100", "11001101", "11001110", "11001111"]
    );
    assert_eq!(run(&["profile", "--k", "2", "--n", "8", "--kind", "even-pp", "--set", "1,3"]).stdout, "8\n");
    assert_eq!(run(&["profile", "--k", "2", "--n", "6", "--kind", "borders", "--set", ""]).stdout, "20\n");
    assert_eq!(run(&["profile", "--k", "2", "--n", "6", "--kind", "borders", "--set", "4"]).code, 2);
    assert_eq!(run(&["profile", "--k", "2", "--n", "6", "--kind", "borders", "--set", "x"]).code, 2);
}

#[test]
fn constants_examples() {
    let r = run(&["constants", "--k", "3", "--which", "rho", "--digits", "59"]);
    assert_eq!(r.code, 0);
    assert_eq!(column(&r.stdout, 0), ["0.27848991988211514682647065951267812841780582980188451703816"]);

    let r =
        run(&["constants", "--k", "3", "--which", "h", "--method", "closed-form", "--terms", "6", "--digits", "60"]);
    assert_eq!(r.code, 0);
    assert_eq!(column(&r.stdout, 0), ["0.430377520029471213293382335121830467895548542549528870740458"]);
    let r =
        run(&["constants", "--k", "3", "--which", "h", "--method", "closed-form", "--terms", "5", "--digits", "60"]);
    assert_eq!(r.code, 1);

    let r = run(&["constants", "--k", "2", "--which", "alpha", "--c-max", "20"]);
    assert_eq!(r.code, 0);
    let lower: f64 = column(&r.stdout, 0)[0].parse().unwrap();
    let upper: f64 = column(&r.stdout, 1)[0].parse().unwrap();
    assert!(0.2700426 < lower && upper < 0.2700437, "{}", r.stdout);

    let r = run(&["constants", "--k", "2", "--which", "gamma"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("0.2677868"));
    assert!(r.stdout.trim_end().ends_with("ESTIMATE"));
}

#[test]
fn uncertifiable_digits_fail() {
    let r = run(&["constants", "--k", "2", "--which", "rho", "--digits", "5"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("cannot certify"));
    assert_eq!(run(&["constants", "--k", "2", "--which", "beta", "--method", "closed-form"]).code, 2);
}

#[test]
fn shuffle_order_examples() {
    assert_eq!(run(&["shuffle-order", "--n", "7"]).stdout, "6\n");
    assert_eq!(run(&["shuffle-order", "--n", "2"]).stdout, "1\n");
    assert_eq!(run(&["shuffle-order", "--n", "1"]).stdout, "1\n");
    let r = run(&["shuffle-order", "--n-max", "50", "--check"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.lines().count(), 49);
    assert_eq!(run(&["shuffle-order", "--n", "0"]).code, 2);
    assert_eq!(run(&["shuffle-order", "--check"]).code, 2);
}

#[test]
fn shuffle_order_bfile_starts_at_zero() {
    let r = run(&["--format", "bfile", "shuffle-order", "--n-max", "12"]);
    let values: Vec<&str> = r.stdout.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert!(r.stdout.starts_with("0 1\n1 1\n2 2\n"));
    assert_eq!(values, ["1", "1", "2", "3", "3", "5", "6", "4", "4", "9", "6", "11"]);
}

#[test]
fn verify_examples() {
    let r = run(&["verify", "--suite", "bijection", "--k-max", "3", "--n-max", "12"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.ends_with("bijection\tPASS\n"));
    let r = run(&["verify", "--suite", "lemmas", "--k-max", "2", "--n-max", "14"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = run(&["verify", "--suite", "all", "--k-max", "2", "--n-max", "10"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let summaries: Vec<&str> = r.stdout.lines().filter(|l| l.split('\t').count() == 2).collect();
    assert_eq!(summaries.len(), 6);
    assert!(summaries.iter().all(|l| l.ends_with("\tPASS")));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let args = |jobs: &'static str| {
        ["--jobs", jobs, "count", "--k", "3", "--n-max", "9", "--family", "no-square-prefix", "--method", "both"]
    };
    let one = run(&args("1"));
    let four = run(&args("4"));
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["count", "--k", "2", "--n-max", "3", "--family", "bogus"]).code, 2);
    assert_eq!(run(&["count", "--k", "2", "--n-min", "4", "--n-max", "3", "--family", "unbordered"]).code, 2);
    assert_eq!(run(&["--budget", "0", "count", "--k", "2", "--n-max", "3", "--family", "unbordered"]).code, 2);
    assert_eq!(run(&["--nope", "count"]).code, 2);
    let r =
        run(&["--budget", "1000", "count", "--k", "3", "--n-max", "8", "--family", "unbordered", "--method", "brute"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("budget"));
}
