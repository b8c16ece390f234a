//! The `nary` binary: exit codes, JSON-lines output and error positions.

use std::path::PathBuf;
use std::process::{Command, Output};

fn catalog(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(name)
}

fn nary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nary")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nary-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout_lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is JSON"))
        .collect()
}

#[test]
fn check_passes_and_fails_with_the_violating_tuple() {
    let ok = nary(&["check", catalog("a4.alg").to_str().unwrap(), "--suite", "identity"]);
    assert_eq!(ok.status.code(), Some(0));
    let lines = stdout_lines(&ok);
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l["verdict"] == "pass"));
    assert_eq!(lines[3]["summary"]["exit"], 0);

    let bad = nary(&["check", catalog("a4_broken.alg").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let lines = stdout_lines(&bad);
    let fail = lines.iter().find(|l| l["verdict"] == "fail").expect("a failing check");
    assert!(fail["counterexample"].as_str().unwrap().contains("(1,2,3,4)"));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("FAIL"));
}

#[test]
fn su3_sign_flip_fails_the_identity_suite() {
    let flipped = nary(&["generate", "flip", catalog("su3.alg").to_str().unwrap(), "--entry", "1"]);
    assert_eq!(flipped.status.code(), Some(0));
    let p = scratch("su3_flip.alg", &String::from_utf8(flipped.stdout).unwrap());
    let out = nary(&["check", p.to_str().unwrap(), "--suite", "identity"]);
    assert_eq!(out.status.code(), Some(1));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["check"], "jacobi");
    assert!(lines[0]["counterexample"].as_str().unwrap().contains("fails at"));
}

#[test]
fn empty_algebra_passes_vacuously() {
    let p = scratch("empty.alg", "filippov 3 0 rational\n");
    let out = nary(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two_with_a_position() {
    let p = scratch("bad_index.alg", "lie 2 3 rational\n1 2 -> 7 : 1\n");
    let out = nary(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = &stdout_lines(&out)[0];
    assert_eq!((err["line"].as_u64(), err["column"].as_u64()), (Some(2), Some(8)));

    let p = scratch("unsorted.alg", "filippov 3 4 rational\n2 1 3 -> 4 : 1\n");
    let out = nary(&["check", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(2 1 3)"));

    let p = scratch("dup.alg", "lie 2 3 rational\n1 2 -> 3 : 1\n1 2 -> 3 : 1\n");
    assert_eq!(nary(&["check", p.to_str().unwrap()]).status.code(), Some(2));

    let out = nary(&["check", "/nonexistent/file.alg"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_round_trips_through_check() {
    for args in [
        vec!["simple-fa", "--n", "3", "--signs", "++++"],
        vec!["gla-from-su", "--n", "3", "--m", "3"],
        vec!["nhw", "--copies", "2"],
        vec!["clifford", "--n", "3"],
        vec!["su", "--n", "2"],
    ] {
        let mut full = vec!["generate"];
        full.extend(&args);
        let out = nary(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout).unwrap();
        let p = scratch(&format!("{}.alg", args.join("_").replace(['-', '+'], "")), &text);
        assert_eq!(nary(&["check", p.to_str().unwrap()]).status.code(), Some(0), "{args:?}");
    }
    let nhw2 = String::from_utf8(nary(&["generate", "nhw", "--copies", "2"]).stdout).unwrap();
    assert!(nhw2.starts_with("filippov 3 7 rational\n"));
    let a4 = String::from_utf8(nary(&["generate", "simple-fa", "--n", "3"]).stdout).unwrap();
    assert_eq!(a4, std::fs::read_to_string(catalog("a4.alg")).unwrap());
}

#[test]
fn generate_rejects_out_of_range_parameters() {
    assert_eq!(nary(&["generate", "su", "--n", "5"]).status.code(), Some(2));
    assert_eq!(nary(&["generate", "clifford", "--n", "7"]).status.code(), Some(2));
    assert_eq!(nary(&["generate", "gla-from-su", "--n", "2", "--m", "3"]).status.code(), Some(2));
    let raised = Command::new(env!("CARGO_BIN_EXE_nary"))
        .args(["generate", "su", "--n", "5"])
        .env("NARY_MAX_DIM", "24")
        .output()
        .unwrap();
    assert_eq!(raised.status.code(), Some(0));
}

fn cohomology(path: &str, extra: &[&str]) -> Vec<u64> {
    let mut args = vec!["cohomology", path];
    args.extend(extra);
    let out = nary(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    stdout_lines(&out).iter().map(|l| l["cohomology"].as_u64().unwrap()).collect()
}

#[test]
fn cohomology_examples() {
    let su2 = cohomology(catalog("su2.alg").to_str().unwrap(), &["--rep", "ad", "--pmax", "2"]);
    assert_eq!(&su2[1..], &[0, 0]);
    let a4 = cohomology(catalog("a4.alg").to_str().unwrap(), &["--complex", "trivial", "--pmax", "1"]);
    assert_eq!(a4[1], 0);
    let r2 = cohomology(catalog("r2_abelian.alg").to_str().unwrap(), &["--complex", "trivial", "--pmax", "2"]);
    assert_eq!(r2[2], 1);
    let def = cohomology(catalog("a4.alg").to_str().unwrap(), &["--complex", "deformation", "--pmax", "1"]);
    assert_eq!(def, vec![6, 0]);
}

#[test]
fn cohomology_with_a_representation_file() {
    // the defining representation of su(2) ≅ so(3) on R^3 is the adjoint one
    let mut text = String::from("representation 1 3 3 rational\n");
    for (a, i, j, v) in [(1, 3, 2, 1), (1, 2, 3, -1), (2, 3, 1, -1), (2, 1, 3, 1), (3, 2, 1, 1), (3, 1, 2, -1)] {
        text.push_str(&format!("{a} -> {i} {j} : {v}\n"));
    }
    let rep = scratch("so3_rep.alg", &text);
    let h = cohomology(catalog("su2.alg").to_str().unwrap(), &["--rep", rep.to_str().unwrap()]);
    assert_eq!(h, vec![0, 0, 0]);
    // doubling one matrix breaks closure
    let broken = text.replace("1 -> 3 2 : 1\n1 -> 2 3 : -1", "1 -> 3 2 : 2\n1 -> 2 3 : -2");
    let rep = scratch("so3_rep_broken.alg", &broken);
    let out = nary(&["cohomology", catalog("su2.alg").to_str().unwrap(), "--rep", rep.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("inconsistent"));
}

fn poisson(name: &str, check: &str) -> Output {
    nary(&["poisson", catalog(name).to_str().unwrap(), "--check", check])
}

#[test]
fn poisson_examples() {
    let canonical = poisson("nambu3.alg", "np");
    assert_eq!(canonical.status.code(), Some(0));
    let sum = poisson("nambu3_direct_sum.alg", "np");
    assert_eq!(sum.status.code(), Some(1));
    let lines = stdout_lines(&sum);
    assert_eq!((lines[0]["verdict"].as_str(), lines[1]["verdict"].as_str()), (Some("pass"), Some("fail")));
    assert!(lines[1]["counterexample"].as_str().unwrap().contains("(1 2 3 | 4 5 6)"));
    assert_eq!(poisson("su3_gps4.alg", "gps").status.code(), Some(0));
    assert_eq!(poisson("su2_lie_poisson.alg", "snb-self").status.code(), Some(0));
    assert_eq!(poisson("nambu3.alg", "gps").status.code(), Some(2));
    assert_eq!(poisson("a4.alg", "np").status.code(), Some(2));
}

#[test]
fn exit_codes_are_stable() {
    let runs: Vec<_> = (0..3).map(|_| poisson("nambu3_direct_sum.alg", "np")).collect();
    assert!(runs.iter().all(|r| r.status.code() == Some(1)));
    let strip = |o: &Output| -> Vec<String> {
        stdout_lines(o)
            .into_iter()
            .map(|mut v| {
                v.as_object_mut().map(|m| m.remove("millis"));
                v.to_string()
            })
            .collect()
    };
    assert_eq!(strip(&runs[0]), strip(&runs[1]));
}
