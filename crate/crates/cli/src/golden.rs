//! Worked example scenarios with committed expected output.

use anyhow::Result;

use crate::{commands, Command, ModuleArgs};

/// Committed output of [`render`].
pub const EXPECTED: &str = include_str!("../expected/examples.txt");

pub const SCENARIOS: usize = 4;

fn module_j(j: &str) -> ModuleArgs {
    ModuleArgs { j: Some(j.into()), ..ModuleArgs::default() }
}

fn module_ideal(i: &str) -> ModuleArgs {
    ModuleArgs { ideal: Some(i.into()), ..ModuleArgs::default() }
}

fn scenarios() -> Vec<(&'static str, Vec<Command>)> {
    vec![
        (
            "classical: standard grading on three variables",
            vec![
                Command::Coh {
                    ring: "p2".into(),
                    i: 3,
                    d: Some("-4".into()),
                    window: None,
                    shifts: vec![],
                    prime: None,
                    oracle: None,
                },
                Command::RegS { ring: "standard:3".into(), window: "-6..6".into() },
                Command::RegJ { ring: "standard:3".into(), j: "0:{0};1:{3}".into(), window: "-6..6".into(), level: None },
                Command::Coarse { ring: "standard:3".into(), v: "1".into(), ps: vec![0, 1], module: module_j("0:{0};1:{3}") },
            ],
        ),
        (
            "weighted: degrees 2, 3, 5",
            vec![
                Command::RegS { ring: "weighted:2,3,5".into(), window: "-40..60".into() },
                Command::Coarse { ring: "weighted:2,3,5".into(), v: "1".into(), ps: vec![49, 50, 51], module: ModuleArgs::default() },
            ],
        ),
        (
            "multiproj: P1 x P1 and S/(x0*y0, x0*y1)",
            vec![
                Command::RegS { ring: "multiproj:1,1".into(), window: "-4..4".into() },
                Command::Resolve { ring: "multiproj:1,1".into(), ideal: Some("x0*y0, x0*y1".into()), complex: None, write: None },
                Command::Family {
                    ring: "multiproj:1,1".into(),
                    ms: vec!["(0,0)".into(), "(1,1)".into(), "(-1,3)".into()],
                    window: None,
                    vectors: None,
                    vres: Some("(1,1)".into()),
                    b: None,
                    module: module_ideal("x0*y0, x0*y1"),
                },
            ],
        ),
        (
            "hirzebruch: t = 2",
            vec![
                Command::RegS { ring: "hirzebruch:2".into(), window: "-5..5".into() },
                Command::Dreg { ring: "hirzebruch:2".into(), d: "(0,0)".into(), p: 1, window: "-3..3".into(), regs_window: "-5..5".into() },
                Command::Family {
                    ring: "hirzebruch:2".into(),
                    ms: vec!["(0,0)".into(), "(1,1)".into()],
                    window: None,
                    vectors: None,
                    vres: None,
                    b: None,
                    module: ModuleArgs::default(),
                },
            ],
        ),
    ]
}

/// Text output of every scenario.
pub fn render() -> Result<String> {
    let mut out = String::new();
    for (title, commands) in scenarios() {
        out.push_str(&format!("== {title}\n"));
        for c in &commands {
            let r = commands::run(c)?;
            out.push_str(&format!("$ {}\n", describe(c)));
            out.push_str(&r.text);
            out.push_str(&format!("[{}]\n", r.status.label()));
        }
        out.push('\n');
    }
    Ok(out)
}

fn describe(c: &Command) -> String {
    match c {
        Command::Coh { ring, i, d, .. } => format!("coh {ring} --i {i} --d {}", d.as_deref().unwrap_or("")),
        Command::RegS { ring, window } => format!("regS {ring} --window={window}"),
        Command::RegJ { ring, j, .. } => format!("regJ {ring} --J \"{j}\""),
        Command::Dreg { ring, d, p, window, .. } => format!("dreg {ring} --D \"{d}\" --p {p} --window={window}"),
        Command::Resolve { ring, ideal, .. } => format!("resolve {ring} --ideal \"{}\"", ideal.as_deref().unwrap_or("")),
        Command::Coarse { ring, v, ps, .. } => {
            format!("coarse {ring} --v {v}{}", ps.iter().map(|p| format!(" --p {p}")).collect::<String>())
        }
        Command::Family { ring, ms, .. } => format!("family {ring}{}", ms.iter().map(|m| format!(" --m \"{m}\"")).collect::<String>()),
        Command::Examples { .. } => "examples".into(),
        Command::Selftest { seed, .. } => format!("selftest --seed {seed}"),
    }
}
