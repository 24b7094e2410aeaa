use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn glm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glm"))
        .args(args)
        .env_remove("GLM_SEED")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_grid_edge_list() {
    let out = glm(&["gen", "grid", "--l", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("# n 9\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 12);
}

#[test]
fn gen_crosses_has_nine_elements() {
    let out = glm(&["gen", "crosses", "--l", "3", "--certify"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 9);
    assert_eq!(v["certificate"]["order"], 3);
}

#[test]
fn gen_counterexample_round_trips() {
    let dir = TempDir::new().unwrap();
    let cg = path(&dir, "cg.json");
    let out = glm(&["gen", "counterexample", "--r", "3", "--d", "1", "--n", "4", "-o", s(&cg)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cg).unwrap()).unwrap();
    assert_eq!(v["classes"][0].as_array().unwrap().len(), 2);
    let solved = glm(&["transversal", s(&cg), "--method", "greedy"]);
    assert_eq!(code(&solved), 2);
}

#[test]
fn find_glm_round_trip() {
    let dir = TempDir::new().unwrap();
    let (b, g, out_file, dot) = (
        path(&dir, "b.json"),
        path(&dir, "g.txt"),
        path(&dir, "glm.json"),
        path(&dir, "glm.dot"),
    );
    assert_eq!(code(&glm(&["gen", "crosses", "--l", "3", "-o", s(&b)])), 0);
    assert_eq!(code(&glm(&["gen", "grid", "--l", "3", "-o", s(&g)])), 0);
    let out = glm(&[
        "find-glm", "--graph", s(&g), "--bramble", s(&b), "--l", "2", "--k", "1", "-o", s(&out_file),
        "--dot", s(&dot),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph glm {"));
    let check = glm(&["verify", "glm", s(&out_file)]);
    assert_eq!(code(&check), 0);
    assert!(stdout(&check).contains("\"valid\":true"));

    let model = path(&dir, "model.json");
    let out = glm(&["product-minor", "--glm", s(&out_file), "-o", s(&model)]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&glm(&["verify", "minor-model", s(&model)])), 0);
}

#[test]
fn find_glm_exit_codes() {
    let dir = TempDir::new().unwrap();
    let b = path(&dir, "b.json");
    glm(&["gen", "crosses", "--l", "3", "-o", s(&b)]);
    assert_eq!(code(&glm(&["find-glm", "--bramble", s(&b), "--l", "3", "--k", "2"])), 2);
    assert_eq!(code(&glm(&["find-glm", "--bramble", s(&path(&dir, "missing.json")), "--l", "3"])), 64);
    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&glm(&["find-glm", "--bramble", s(&bad), "--l", "3"])), 65);
    assert_eq!(code(&glm(&["find-glm", "--l", "3"])), 64);
}

#[test]
fn verify_reports_named_failures() {
    let dir = TempDir::new().unwrap();
    let glm_file = path(&dir, "glm.json");
    // Three paths through a common vertex: a triangle in the intersection graph.
    std::fs::write(
        &glm_file,
        r#"{"n":3,"edges":[[0,1],[1,2]],"paths":[[0,1],[1],[1,2]],"sideA":[0,2],"sideB":[1],
            "model":{"pattern_l":1,"branch_sets":[[0]]}}"#,
    )
    .unwrap();
    let out = glm(&["verify", "glm", s(&glm_file)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("not bipartite"));
    assert!(stdout(&out).contains("\"valid\":false"));

    let bramble = path(&dir, "b.json");
    std::fs::write(&bramble, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]],"elements":[[0],[3]]}"#).unwrap();
    let out = glm(&["verify", "bramble", s(&bramble)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("elements 0 and 1 do not touch"));

    let bad = path(&dir, "bad.json");
    std::fs::write(&bad, "[1, 2").unwrap();
    assert_eq!(code(&glm(&["verify", "glm", s(&bad)])), 65);
}

#[test]
fn product_minor_rejects_invalid_glm() {
    let dir = TempDir::new().unwrap();
    let f = path(&dir, "glm.json");
    std::fs::write(
        &f,
        r#"{"n":2,"edges":[[0,1]],"paths":[[0,1]],"sideA":[0],"sideB":[],
            "model":{"pattern_l":2,"branch_sets":[[0],[0]]}}"#,
    )
    .unwrap();
    assert_eq!(code(&glm(&["product-minor", "--glm", s(&f)])), 1);
    std::fs::write(
        &f,
        r#"{"n":2,"edges":[[0,1]],"paths":[[0,1]],"sideA":[0],"sideB":[],
            "model":{"pattern_l":1,"branch_sets":[[0]]}}"#,
    )
    .unwrap();
    let out = glm(&["product-minor", "--glm", s(&f)]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["branch_sets"].as_array().unwrap().len(), 1);
}

#[test]
fn transversal_write_then_verify() {
    let dir = TempDir::new().unwrap();
    let cg = path(&dir, "cg.json");
    std::fs::write(
        &cg,
        r#"{"n":12,"edges":[[0,6],[1,7],[2,8],[3,9],[4,10],[5,11]],
            "classes":[[0,1,2,3,4,5],[6,7,8,9,10,11]]}"#,
    )
    .unwrap();
    for method in ["lll", "greedy", "general"] {
        let t = path(&dir, &format!("{method}.json"));
        let out = glm(&["--seed", "5", "transversal", s(&cg), "--method", method, "-o", s(&t)]);
        assert_eq!(code(&out), 0, "{method}: {}", stderr(&out));
        assert_eq!(code(&glm(&["verify", "transversal", s(&cg), s(&t)])), 0, "{method}");
    }
    let t = path(&dir, "bad.json");
    std::fs::write(&t, r#"{"vertices":[0,6]}"#).unwrap();
    assert_eq!(code(&glm(&["verify", "transversal", s(&cg), s(&t)])), 1);
}

#[test]
fn sweep_csv() {
    let out = glm(&["transversal-sweep", "--r", "2", "--d", "1", "--nmin", "1", "--nmax", "8", "--trials", "20"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,d,n,seed,algorithm,rounds,found"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 8 * 20 * 2);
    for row in &rows {
        let n: usize = row[2].parse().unwrap();
        if n >= 6 && row[4] == "lll" {
            assert_eq!(row[6], "true", "{row:?}");
        }
    }

    let empty = glm(&["transversal-sweep", "--r", "2", "--d", "1", "--nmax", "4", "--trials", "0"]);
    assert_eq!(stdout(&empty), "r,d,n,seed,algorithm,rounds,found\n");

    let d0 = glm(&["transversal-sweep", "--r", "3", "--d", "0", "--nmax", "4", "--trials", "5"]);
    assert!(stdout(&d0).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn seeds_are_reproducible() {
    let a = glm(&["--seed", "9", "gen", "random", "--n", "12", "--p", "0.3"]);
    let b = Command::new(env!("CARGO_BIN_EXE_glm"))
        .args(["gen", "random", "--n", "12", "--p", "0.3"])
        .env("GLM_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let c = glm(&["--seed", "10", "gen", "random", "--n", "12", "--p", "0.3"]);
    assert_ne!(a.stdout, c.stdout);
    let sweep = ["transversal-sweep", "--r", "3", "--d", "1", "--nmax", "5", "--trials", "3"];
    assert_eq!(glm(&sweep).stdout, glm(&sweep).stdout);
}
