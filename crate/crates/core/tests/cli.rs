use std::path::Path;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_str().unwrap().to_string()
}

fn beflow(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_beflow"));
    cmd.args(args).env_remove("BEFLOW_RMAX");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    beflow(args, &[]).status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn check_exit_codes() {
    let pet = &data("petersen.cub");
    let theta = &data("theta.cub");
    assert_eq!(code(&["check", "--graph", pet, "--r", "5", "--alpha", "0"]), 0);
    assert_eq!(code(&["check", "--graph", pet, "--r", "10/3", "--alpha", "1/3"]), 1);
    assert_eq!(code(&["check", "--graph", theta, "--r", "2", "--alpha", "1"]), 0);
    assert_eq!(code(&["check", "--graph", pet, "--r", "0.5", "--alpha", "0"]), 2);
    assert_eq!(code(&["check", "--graph", "/nonexistent.cub", "--r", "5", "--alpha", "0"]), 2);
}

#[test]
fn check_writes_a_witness_that_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let pet = &data("petersen.cub");
    for (r, a, expect) in [("7/2", "1/2", 0), ("10/3", "1/3", 1)] {
        let args = ["check", "--graph", pet, "--r", r, "--alpha", a, "--out", out.to_str().unwrap()];
        assert_eq!(code(&args), expect);
        let v = beflow(&["verify", out.to_str().unwrap(), "--graph", pet], &[]);
        assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    }
}

#[test]
fn bed_frontiers() {
    let theta = json(&beflow(&["bed", "--graph", &data("theta.cub")], &[]));
    let corners = |v: &serde_json::Value| -> Vec<(String, String)> {
        v["region"]["frontier"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["r"].as_str().unwrap().to_string(), c["alpha"].as_str().unwrap().to_string()))
            .collect()
    };
    let pair = |a: &str, b: &str| (a.to_string(), b.to_string());
    assert_eq!(corners(&theta), vec![pair("2", "1"), pair("3", "0")]);
    let k4 = json(&beflow(&["bed", "--graph", &data("k4.g6")], &[]));
    assert_eq!(corners(&k4), vec![pair("2", "1"), pair("4", "0")]);
    let pet = json(&beflow(&["bed", "--graph", &data("petersen.cub")], &[]));
    assert_eq!(pet["region"]["alpha_min"], "0");
    assert_eq!(pet["region"]["r_min"], "5");
}

#[test]
fn bed_window_from_flag_env_and_config() {
    let theta = &data("theta.cub");
    let rmax = |o: &Output| json(o)["region"]["window"]["r"][1].as_str().unwrap().to_string();
    assert_eq!(rmax(&beflow(&["bed", "--graph", theta], &[])), "8");
    assert_eq!(rmax(&beflow(&["bed", "--graph", theta], &[("BEFLOW_RMAX", "6")])), "6");
    assert_eq!(rmax(&beflow(&["bed", "--graph", theta, "--rmax", "10"], &[("BEFLOW_RMAX", "6")])), "10");
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("beflow.conf");
    std::fs::write(&cfg, format!("# defaults\ngraph = {theta}\nrmax = 7\n")).unwrap();
    assert_eq!(rmax(&beflow(&["bed", "--config", cfg.to_str().unwrap()], &[])), "7");
    assert_eq!(rmax(&beflow(&["bed", "--config", cfg.to_str().unwrap()], &[("BEFLOW_RMAX", "9")])), "9");
    assert_eq!(beflow(&["bed", "--graph", theta], &[("BEFLOW_RMAX", "3.5")]).status.code(), Some(2));
}

#[test]
fn bed_svg_with_overlays() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p.svg");
    let args = [
        "bed", "--graph", &data("petersen.cub"), "--svg", svg.to_str().unwrap(),
        "--overlay", "M4", "--overlay", "M5", "--overlay", "urd(7/2,1/2)",
    ];
    assert_eq!(code(&args), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains(">M5<") && text.contains("urd(7/2, 1/2)"));
    let bad = ["bed", "--graph", &data("petersen.cub"), "--overlay", "Z9"];
    assert_eq!(code(&bad), 2);
}

#[test]
fn weak5_bisect_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let pet = &data("petersen.cub");
    let cert = dir.path().join("c.json");
    assert_eq!(code(&["weak5", "--graph", pet, "--out", cert.to_str().unwrap()]), 0);
    assert_eq!(code(&["verify", cert.to_str().unwrap()]), 0);
    // the same certificate claimed for another graph
    assert_eq!(code(&["verify", cert.to_str().unwrap(), "--graph6", "C~"]), 1);
    let text = std::fs::read_to_string(&cert).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let colors = v["certificate"]["bisection"].as_array_mut().unwrap();
    colors.reverse();
    std::fs::write(&cert, v.to_string()).unwrap();
    assert_eq!(code(&["verify", cert.to_str().unwrap()]), 1);
    std::fs::write(&cert, "{not json").unwrap();
    assert_eq!(code(&["verify", cert.to_str().unwrap()]), 2);

    let b = beflow(&["bisect", "--graph", pet, "--k", "4", "--orientable"], &[]);
    assert_eq!(b.status.code(), Some(1));
    assert!(json(&b)["bisection"].is_null());
    assert_eq!(code(&["bisect", "--graph", pet, "--k", "5", "--orientable"]), 0);
    assert_eq!(code(&["bisect", "--graph", pet]), 2);
}

#[test]
fn hunt_sweep_has_no_findings_and_is_deterministic() {
    let a = beflow(&["hunt", "--conjecture", "bl3", "--gen", "n<=10"], &[]);
    assert_eq!(a.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&a.stderr).contains("FINDING"));
    assert_eq!(stdout(&a).lines().count(), 1 + 2 + 6 + 20 + 91);
    let b = beflow(&["--threads", "3", "hunt", "--conjecture", "bl3", "--gen", "n<=10"], &[]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&["hunt", "--conjecture", "bl9", "--gen", "n<=4"]), 2);
}

#[test]
fn cache_reuses_and_cross_checks() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.jsonl");
    let c = cache.to_str().unwrap();
    let first = beflow(&["--cache", c, "bisect", "--gen", "n<=8", "--k", "4", "--orientable"], &[]);
    let lines = std::fs::read_to_string(&cache).unwrap().lines().count();
    assert_eq!(lines, 1 + 2 + 6 + 20);
    let again = beflow(&["--cache", c, "bisect", "--gen", "n<=8", "--k", "4", "--orientable"], &[]);
    assert_eq!(first.stdout, again.stdout);
    assert_eq!(first.status.code(), again.status.code());
    assert_eq!(std::fs::read_to_string(&cache).unwrap().lines().count(), lines);

    // a relabelled K4 hits the same key and is recomputed against the cached verdict
    let k4_relabelled = dir.path().join("k4.cub");
    std::fs::write(&k4_relabelled, "4 6\n3 2\n3 1\n3 0\n2 1\n2 0\n1 0\n").unwrap();
    let o = beflow(&["--cache", c, "bisect", "--graph", k4_relabelled.to_str().unwrap(), "--k", "4", "--orientable"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["graph"]["edges"][0], serde_json::json!([3, 2]));

    // an edited entry is refused
    let text = std::fs::read_to_string(&cache).unwrap().replacen("\"found\"", "\"none\"", 1);
    std::fs::write(&cache, text).unwrap();
    assert_eq!(code(&["--cache", c, "bisect", "--gen", "n<=8", "--k", "4", "--orientable"]), 2);
}

#[test]
fn lenient_corpus_and_gen() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c.cub");
    std::fs::write(&corpus, "2 3\n0 1\n0 1\n0 1\n3 2\n0 1\n1 2\n2 3\n0 1\n0 1\n0 1\n").unwrap();
    let path = corpus.to_str().unwrap();
    assert_eq!(code(&["weak5", "--graph", path]), 2);
    let o = beflow(&["--lenient", "weak5", "--graph", path], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let g6 = dir.path().join("s.g6");
    assert_eq!(code(&["gen", "n<=10", "--simple", "--format", "graph6", "--out", g6.to_str().unwrap()]), 0);
    assert_eq!(std::fs::read_to_string(&g6).unwrap().lines().count(), 1 + 2 + 5 + 19);
    let o = beflow(&["check", "--graph", g6.to_str().unwrap(), "--r", "4", "--alpha", "0"], &[]);
    assert_eq!(o.status.code(), Some(1));
    let verdicts: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["outcome"]["verdict"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(verdicts.len(), 27);
    // Petersen and the bridged graph on 10 vertices
    assert_eq!(verdicts.iter().filter(|v| *v == "infeasible").count(), 2);
}
