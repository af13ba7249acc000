use std::io::Write;
use std::process::{Command, Output, Stdio};

fn slped(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slped")).args(args).output().unwrap()
}

fn slped_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_slped"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const NINE_A: &str = "1 = 'A'\n2 = 'B'\n3 = 'C'\n4 = 1 2\n5 = 4 3\n6 = 5 5\n7 = 6 4\nstart 7\n";
const NINE_B: &str = "1 = 'B'\n2 = 'C'\n3 = 1 1\n4 = 3 2\n5 = 3 1\n6 = 2 1\n7 = 4 5\n8 = 7 6\nstart 8\n";

#[test]
fn compress_rle_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.slp");
    let o = slped_stdin(&["compress", "--encoder", "rle", "-o", out.to_str().unwrap()], b"aaaa");
    assert!(o.status.success(), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains('=')).count(), 3);
    assert!(stderr(&o).contains("n=3 N=4"));
}

#[test]
fn compress_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    std::fs::write(&input, b"the quick brown fox jumps over the lazy dog, the end").unwrap();
    for enc in ["naive", "lz78", "rle"] {
        let o = slped(&["compress", input.to_str().unwrap(), "--encoder", enc]);
        assert!(o.status.success());
        let slp = slp_edit::slp::parse_slp(&stdout(&o)).unwrap();
        assert_eq!(slp.expand().unwrap(), std::fs::read(&input).unwrap());
    }
}

#[test]
fn compress_empty_stdin() {
    let o = slped_stdin(&["compress"], b"");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty input"));
}

#[test]
fn nine_block_pair_block_equals_naive() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.slp");
    let b = dir.path().join("b.slp");
    std::fs::write(&a, NINE_A).unwrap();
    std::fs::write(&b, NINE_B).unwrap();
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    let block = slped(&["dist", a, b, "--levenshtein", "--algo", "block", "--x", "3", "--explain"]);
    let naive = slped(&["dist", a, b, "--levenshtein", "--algo", "naive"]);
    let fr = slped(&["dist", a, b, "--levenshtein", "--algo", "four-russians"]);
    assert!(block.status.success(), "{}", stderr(&block));
    let block_out = stdout(&block);
    let mut lines = block_out.lines();
    let d = lines.next().unwrap();
    assert_eq!(d, stdout(&naive).trim());
    assert_eq!(d, stdout(&fr).trim());
    assert_eq!(lines.next(), Some("string,piece_index,var,start,len"));
    assert_eq!(lines.count(), 6);
    let same = slped(&["dist", a, a, "--levenshtein"]);
    assert_eq!(stdout(&same).trim(), "0");
}

#[test]
fn raw_inputs_and_scoring_file() {
    let dir = tempfile::tempdir().unwrap();
    let scoring = dir.path().join("s.txt");
    std::fs::write(&scoring, "alphabet ab\ndefault_indel 2\ndefault_sub 3\nscale 2\n").unwrap();
    let o = slped(&["dist", "--rawA", "aab", "--rawB", "abb", "--scoring", scoring.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "3 (3/2 = 1.5)");
    assert!(stderr(&o).contains("tables_built="));
}

#[test]
fn zero_width_is_rejected() {
    let o = slped(&["dist", "--rawA", "ab", "--rawB", "ba", "--levenshtein", "--algo", "block", "--x", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("x out of range"));
}

#[test]
fn unknown_symbol_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let scoring = dir.path().join("s.txt");
    std::fs::write(&scoring, "alphabet ab\n").unwrap();
    let o = slped(&["dist", "--rawA", "abc", "--rawB", "ab", "--scoring", scoring.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_outputs() {
    let o = slped(&["gen", "fibonacci", "--order", "10"]);
    let slp = slp_edit::slp::parse_slp(&stdout(&o)).unwrap();
    assert_eq!((slp.len(), slp.size()), (55, 10));
    let o = slped(&["gen", "power", "--len", "1024"]);
    assert_eq!(slp_edit::slp::parse_slp(&stdout(&o)).unwrap().size(), 11);
    let r1 = slped(&["gen", "random", "--len", "64", "--seed", "5"]);
    let r2 = slped(&["gen", "random", "--len", "64", "--seed", "5"]);
    assert_eq!(r1.stdout.len(), 64);
    assert_eq!(r1.stdout, r2.stdout);
    let o = slped(&["gen", "fibonacci", "--order", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_and_catches_faults() {
    let args = ["verify", "--cases", "30", "--seed", "9", "--max-n", "60"];
    let a = slped(&args);
    let b = slped(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let bad = slped(&["verify", "--cases", "5", "--seed", "9", "--max-n", "30", "--inject-fault"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("counterexample: run seed 9 case 0"), "{text}");
    assert!(text.contains("alphabet"));
}

#[test]
fn bench_csv_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = slped(&[
        "bench",
        "--suite",
        "fib-scaling",
        "--from",
        "10",
        "--to",
        "12",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("algo,N_a,N_b,n_a,n_b,x,y,distance,tables_built,dp_cells,smawk_queries,wall_millis")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0][7], pair[1][7]);
    }
    let o = slped(&["bench", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}
