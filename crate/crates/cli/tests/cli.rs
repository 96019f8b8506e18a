use std::process::{Command, Output};

fn ring(name: &str) -> String {
    format!("{}/rings/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_multireg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (serde_json::Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

#[test]
fn hirzebruch_reg_s_from_file() {
    let (v, code) = json(&["regS", &ring("hirzebruch_t2.ring"), "--window=-5..5"]);
    assert_eq!(code, 0);
    assert_eq!(v["region"]["generators"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(v["region"]["exactness"], "exact");
    assert_eq!(v["status"], "ok");
}

#[test]
fn top_cohomology_of_the_plane() {
    let o = run(&["coh", &ring("p2.ring"), "--i", "3", "--d", "-4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("3"));
}

#[test]
fn oracle_agrees_on_the_plane() {
    let (v, code) = json(&["coh", "p2", "--i", "3", "--d", "-5", "--oracle", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["piece"]["dim"], "6");
    assert_eq!(v["oracle"], "6");
}

#[test]
fn classical_reg_j_is_a_translate() {
    let (v, code) = json(&["regJ", &ring("classical.ring"), "--J", "0:{0};1:{2}"]);
    assert_eq!(code, 0);
    assert_eq!(v["region"]["generators"], serde_json::json!([[1]]));
}

#[test]
fn weighted_coarse_regularity() {
    let (v, code) = json(&["coarse", &ring("weighted_235.ring"), "--v", "1", "--p", "50", "--p", "51"]);
    assert_eq!(code, 0);
    assert_eq!(v["vregnum"]["value"], 51);
    assert_eq!(v["vregnum"]["kind"], "exact");
    assert_eq!(v["membership"][0]["regular"], "no");
    assert_eq!(v["membership"][1]["regular"], "yes");
}

#[test]
fn truncated_window_exits_uncertified() {
    let o = run(&["regS", &ring("weighted_235.ring"), "--window=-5..5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("window:5"));
}

#[test]
fn bad_input_exits_one() {
    let o = run(&["regS", "no-such-ring"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("neither a ring file"));
    let o = run(&["coarse", "hirzebruch:2", "--v", "(1,0)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn resolve_round_trips_through_json() {
    let dir = std::env::temp_dir().join(format!("multireg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    let p = path.to_str().unwrap();
    let o = run(&["resolve", &ring("p1xp1.ring"), "--ideal", "x0*y0, x0*y1", "--write", p]);
    assert!(o.status.success());
    let (v, code) = json(&["resolve", &ring("p1xp1.ring"), "--complex", p]);
    assert_eq!(code, 0);
    assert_eq!(v["type_J"], "0:{(0,0)};1:{(1,1),(1,1)};2:{(1,2)}");
    assert_eq!(v["minimal"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn family_pipeline_passes() {
    let (v, code) = json(&["family", "p1xp1", "--ideal", "x0*y0, x0*y1", "--vres", "(1,1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["pipeline"]["degrees_in_boxes"], true);
    assert_eq!(v["pipeline"]["certified"], true);
}

#[test]
fn hirzebruch_family_refuses_vectors() {
    let o = run(&["family", "hirzebruch:2", "--m", "(1,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("v_I: refused"));
    let o = run(&["family", "hirzebruch:2", "--vres", "(1,1)"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn examples_match_committed_output() {
    let o = run(&["examples"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn selftest_suite_runs() {
    let o = run(&["selftest", "--suite", "semigroup", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["selftest", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(1));
}
